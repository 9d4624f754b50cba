use rk_core::{ButcherTableau, Scalar, ShuOsherForm};

use crate::poly::Poly;

/// `P(z)` together with `Q_1..Q_s` (index 0 holds `Q_1`).
#[derive(Debug, Clone, PartialEq)]
pub struct InternalStabilitySet<T> {
    pub p: Poly<T>,
    pub q: Vec<Poly<T>>,
}

impl<T: Scalar> InternalStabilitySet<T> {
    pub fn to_f64(&self) -> InternalStabilitySet<f64> {
        InternalStabilitySet {
            p: self.p.to_f64(),
            q: self.q.iter().map(Poly::to_f64).collect(),
        }
    }

    pub fn s(&self) -> usize {
        self.q.len()
    }
}

/// Solve the row system `X = c + X·M` with `M = α + zβ` strictly lower
/// triangular, walking columns from the last stage back to the first.
fn backward_substitute<T: Scalar>(
    s: usize,
    c: impl Fn(usize) -> Poly<T>,
    m: impl Fn(usize, usize) -> (T, T),
) -> Vec<Poly<T>> {
    let mut x: Vec<Poly<T>> = vec![Poly::zero(); s];
    for j in (0..s).rev() {
        let mut acc = c(j);
        for (i, xi) in x.iter().enumerate().skip(j + 1) {
            if xi.is_zero() {
                continue;
            }
            let (a, b) = m(i, j);
            if !a.is_zero() {
                acc = acc.add_scaled(xi, &a);
            }
            if !b.is_zero() {
                acc = acc.add_scaled(&xi.shift(), &b);
            }
        }
        x[j] = acc;
    }
    x
}

/// `Q(z) = (α_{s+1} + zβ_{s+1})(I - α - zβ)⁻¹`, `P(z) = v_{s+1} + Q(z)v₁:ₛ`.
pub fn derive_internal_stability<T: Scalar>(so: &ShuOsherForm<T>) -> InternalStabilitySet<T> {
    let s = so.s();
    let q = backward_substitute(
        s,
        |j| Poly::new(vec![so.alpha[(s, j)].clone(), so.beta[(s, j)].clone()]),
        |i, j| (so.alpha[(i, j)].clone(), so.beta[(i, j)].clone()),
    );
    let v = so.v();
    let mut p = Poly::constant(v[s].clone());
    for (qj, vj) in q.iter().zip(&v) {
        if !vj.is_zero() {
            p = p.add_scaled(qj, vj);
        }
    }
    InternalStabilitySet { p, q }
}

/// `Qᴮ(z) = z bᵀ(I - zA)⁻¹`, `P(z) = 1 + Qᴮ(z)·1`.
pub fn derive_internal_stability_butcher<T: Scalar>(
    bt: &ButcherTableau<T>,
) -> InternalStabilitySet<T> {
    let s = bt.s();
    let q = backward_substitute(
        s,
        |j| Poly::monomial(bt.b[j].clone(), 1),
        |i, j| (T::zero(), bt.a[(i, j)].clone()),
    );
    let p = q.iter().fold(Poly::constant(T::one()), |acc, qj| &acc + qj);
    InternalStabilitySet { p, q }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rk_core::{butcher_to_shu_osher, shu_osher_to_butcher, Mat, Rational};

    fn q(n: i64, d: i64) -> Rational {
        Rational::from_ratio(n, d)
    }

    fn ssp22_natural() -> ShuOsherForm<Rational> {
        let rows = |v: Vec<(i64, i64)>| v.into_iter().map(|(n, d)| q(n, d)).collect::<Vec<_>>();
        let alpha = Mat::from_rows(vec![
            rows(vec![(0, 1), (0, 1)]),
            rows(vec![(1, 1), (0, 1)]),
            rows(vec![(0, 1), (1, 2)]),
        ])
        .unwrap();
        let beta = alpha.clone();
        ShuOsherForm::new(alpha, beta, 2).unwrap()
    }

    #[test]
    fn ssp22_natural_polynomials() {
        let iss = derive_internal_stability(&ssp22_natural());
        assert_eq!(iss.p, Poly::from_ratio_coeffs(&[(1, 1), (1, 1), (1, 2)]));
        assert_eq!(iss.q[1], Poly::from_ratio_coeffs(&[(1, 2), (1, 2)]));
    }

    #[test]
    fn ssp22_butcher_polynomials() {
        let bt = shu_osher_to_butcher(&ssp22_natural());
        let iss = derive_internal_stability_butcher(&bt);
        assert_eq!(iss.p, Poly::from_ratio_coeffs(&[(1, 1), (1, 1), (1, 2)]));
        assert_eq!(iss.q[0], Poly::from_ratio_coeffs(&[(0, 1), (1, 2), (1, 2)]));
        assert_eq!(iss.q[1], Poly::from_ratio_coeffs(&[(0, 1), (1, 2)]));
        // The Butcher embedding gives the same answer through the general route.
        assert_eq!(derive_internal_stability(&butcher_to_shu_osher(&bt)), iss);
    }
}
