//! Conversions between the two forms and the matching residual map.

use crate::butcher::ButcherTableau;
use crate::matrix::{unit_lower_solve, Mat};
use crate::scalar::Scalar;
use crate::shu_osher::ShuOsherForm;

/// `A = (I - α₁:ₛ)⁻¹β₁:ₛ`, `b = β_{s+1} + α_{s+1}A`, by forward substitution.
pub fn shu_osher_to_butcher<T: Scalar>(so: &ShuOsherForm<T>) -> ButcherTableau<T> {
    let s = so.s();
    let mut a = Mat::zeros(s, s);
    for i in 0..s {
        for j in 0..s {
            a[(i, j)] = so.beta[(i, j)].clone();
        }
        for (k, al) in so.alpha.row_nonzeros(i) {
            if k >= i {
                continue;
            }
            for j in 0..k {
                let add = al.clone() * a[(k, j)].clone();
                a[(i, j)] = a[(i, j)].clone() + add;
            }
        }
    }
    let combine = |alpha: &[T], beta: &[T]| -> Vec<T> {
        let mut out = beta.to_vec();
        for (k, al) in alpha.iter().enumerate() {
            if al.is_zero() {
                continue;
            }
            for (j, o) in out.iter_mut().enumerate().take(k) {
                *o = o.clone() + al.clone() * a[(k, j)].clone();
            }
        }
        out
    };
    let b = combine(so.alpha.row(s), so.beta.row(s));
    let embedded = so
        .embedded
        .as_ref()
        .map(|e| (combine(&e.alpha, &e.beta), e.order));
    let c = a.row_sums();
    ButcherTableau {
        a,
        b,
        c,
        b_embedded: embedded.as_ref().map(|(b, _)| b.clone()),
        order: so.order,
        order_embedded: embedded.map(|(_, o)| o),
    }
}

/// The Butcher embedding `α = 0`, `β = [A; bᵀ]`.
pub fn butcher_to_shu_osher<T: Scalar>(bt: &ButcherTableau<T>) -> ShuOsherForm<T> {
    let s = bt.s();
    let mut beta = Mat::zeros(s + 1, s);
    for i in 0..s {
        for j in 0..s {
            beta[(i, j)] = bt.a[(i, j)].clone();
        }
    }
    for j in 0..s {
        beta[(s, j)] = bt.b[j].clone();
    }
    let mut so = ShuOsherForm {
        alpha: Mat::zeros(s + 1, s),
        beta,
        order: bt.order,
        embedded: None,
    };
    if let (Some(bh), Some(o)) = (&bt.b_embedded, bt.order_embedded) {
        so.embedded = Some(crate::shu_osher::EmbeddedRow {
            alpha: vec![T::zero(); s],
            beta: bh.clone(),
            order: o,
        });
    }
    so
}

/// Map Shu-Osher stage residuals (length `s+1`) to the equivalent Butcher ones.
pub fn residual_butcher_from_shu_osher<T: Scalar>(so: &ShuOsherForm<T>, r_so: &[T]) -> Vec<T> {
    let s = so.s();
    assert_eq!(r_so.len(), s + 1, "residual vector must have length s+1");
    let mut rb = unit_lower_solve(&so.alpha.top(s), &r_so[..s]);
    let last = so
        .alpha
        .row(s)
        .iter()
        .zip(&rb)
        .fold(r_so[s].clone(), |acc, (a, x)| acc + a.clone() * x.clone());
    rb.push(last);
    rb
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Rational;

    fn q(n: i64, d: i64) -> Rational {
        Rational::from_ratio(n, d)
    }

    fn ssp22() -> ShuOsherForm<Rational> {
        let alpha = Mat::from_rows(vec![
            vec![q(0, 1), q(0, 1)],
            vec![q(1, 1), q(0, 1)],
            vec![q(0, 1), q(1, 2)],
        ])
        .unwrap();
        let beta = Mat::from_rows(vec![
            vec![q(0, 1), q(0, 1)],
            vec![q(1, 1), q(0, 1)],
            vec![q(0, 1), q(1, 2)],
        ])
        .unwrap();
        ShuOsherForm::new(alpha, beta, 2).unwrap()
    }

    #[test]
    fn ssp22_natural_to_butcher() {
        let bt = shu_osher_to_butcher(&ssp22());
        assert_eq!(
            bt.a.to_rows(),
            vec![vec![q(0, 1), q(0, 1)], vec![q(1, 1), q(0, 1)]]
        );
        assert_eq!(bt.b, vec![q(1, 2), q(1, 2)]);
        assert_eq!(bt.c, vec![q(0, 1), q(1, 1)]);
    }

    #[test]
    fn ssp22_residual_map() {
        let rb = residual_butcher_from_shu_osher(&ssp22(), &[q(0, 1), q(1, 1), q(0, 1)]);
        assert_eq!(rb, vec![q(0, 1), q(1, 1), q(1, 2)]);
    }

    #[test]
    fn embedding_round_trip_is_exact() {
        let bt = shu_osher_to_butcher(&ssp22());
        let so = butcher_to_shu_osher(&bt);
        assert!(so.alpha.is_zero());
        assert_eq!(shu_osher_to_butcher(&so), bt);
    }

    #[test]
    fn zero_alpha_residual_is_identity() {
        let so = butcher_to_shu_osher(&shu_osher_to_butcher(&ssp22()));
        let r = vec![q(0, 1), q(3, 7), q(-2, 5)];
        assert_eq!(residual_butcher_from_shu_osher(&so, &r), r);
    }
}
