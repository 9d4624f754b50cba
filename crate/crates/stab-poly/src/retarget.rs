//! Choose a Shu-Osher implementation whose internal stability polynomials
//! match prescribed targets, keeping the underlying Butcher method fixed.
//!
//! With `γ = (I - α₁:ₛ)⁻¹` unit lower triangular, `Q^SO = Qᴮγ + α_{s+1}γ`.
//! Column `j` of `γ` reproduces the non-constant part of target `j` from
//! `Qᴮ_j, Qᴮ_{j+1}, ...`; the constants are then fixed by `α_{s+1}`.

use rk_core::{ButcherTableau, Mat, Scalar, ShuOsherForm};

use crate::error::StabError;
use crate::internal::derive_internal_stability_butcher;
use crate::poly::Poly;

/// Relative tolerance for float comparisons (exact for rationals).
const TOL: f64 = 1e-10;

fn is_negligible<T: Scalar>(x: &T, scale: f64) -> bool {
    if T::is_exact() {
        x.is_zero()
    } else {
        x.to_f64().abs() <= TOL * scale.max(1.0)
    }
}

/// Solve `M y = rhs` (rows = equations) leaving unconstrained unknowns at 0.
/// Pivots on the largest entry, ties to the lowest column. `None` when the
/// system is inconsistent.
fn solve_minimal<T: Scalar>(mut m: Vec<Vec<T>>, mut rhs: Vec<T>, n: usize) -> Option<Vec<T>> {
    let scale = m
        .iter()
        .flatten()
        .map(|x| x.to_f64().abs())
        .fold(0.0, f64::max);
    let rhs_scale = rhs.iter().map(|x| x.to_f64().abs()).fold(scale, f64::max);
    let mut pivots: Vec<(usize, usize)> = Vec::new();
    let mut used = vec![false; n];
    for r in 0..m.len() {
        let best = (0..n)
            .filter(|&c| !used[c] && !is_negligible(&m[r][c], scale))
            .fold(None, |best: Option<usize>, c| match best {
                Some(b) if m[r][b].to_f64().abs() >= m[r][c].to_f64().abs() => Some(b),
                _ => Some(c),
            });
        let Some(c) = best else {
            if !is_negligible(&rhs[r], rhs_scale) {
                return None;
            }
            continue;
        };
        used[c] = true;
        for r2 in 0..m.len() {
            if r2 == r || m[r2][c].is_zero() {
                continue;
            }
            let f = m[r2][c].clone() / m[r][c].clone();
            for k in 0..n {
                let sub = f.clone() * m[r][k].clone();
                m[r2][k] = m[r2][k].clone() - sub;
            }
            rhs[r2] = rhs[r2].clone() - f * rhs[r].clone();
        }
        pivots.push((r, c));
    }
    let mut y = vec![T::zero(); n];
    for (r, c) in pivots {
        y[c] = rhs[r].clone() / m[r][c].clone();
    }
    Some(y)
}

/// Find `α, β` realising `targets` as internal stability polynomials.
///
/// Each target must share degree and leading coefficient with the
/// corresponding Butcher-form polynomial. The returned form keeps any
/// embedded weights as an `α̂ = 0` row.
pub fn retarget_implementation<T: Scalar>(
    bt: &ButcherTableau<T>,
    targets: &[Poly<T>],
) -> Result<ShuOsherForm<T>, StabError> {
    let s = bt.s();
    if targets.len() != s {
        return Err(StabError::TargetCount {
            expected: s,
            got: targets.len(),
        });
    }
    let qb = derive_internal_stability_butcher(bt).q;
    for (j, (t, q)) in targets.iter().zip(&qb).enumerate() {
        let t_deg = t.degree().unwrap_or(0);
        let q_deg = q.degree().unwrap_or(0);
        let ok = if q.is_zero() {
            t.degree().unwrap_or(0) == 0
        } else {
            let lead = q.leading().expect("nonzero").clone();
            let t_lead = t.coeff(q_deg);
            t_deg == q_deg && is_negligible(&(t_lead - lead.clone()), lead.to_f64().abs())
        };
        if !ok {
            return Err(StabError::DegreeMismatch {
                stage: j + 1,
                detail: format!("target degree {t_deg}, Butcher-form degree {q_deg}"),
            });
        }
    }

    // gamma[(i, j)] for i >= j, unit diagonal.
    let mut gamma = Mat::<T>::zeros(s, s);
    for j in 0..s {
        gamma[(j, j)] = T::one();
        let later: Vec<usize> = (j + 1..s).filter(|&i| !qb[i].is_zero()).collect();
        // Every coefficient any contributor can reach must match, or
        // higher-degree later stages leak into the result.
        let deg = later
            .iter()
            .chain(std::iter::once(&j))
            .map(|&i| qb[i].degree().unwrap_or(0))
            .fold(targets[j].degree().unwrap_or(0), usize::max);
        let eqs: Vec<Vec<T>> = (1..=deg)
            .map(|k| later.iter().map(|&i| qb[i].coeff(k)).collect())
            .collect();
        let rhs: Vec<T> = (1..=deg)
            .map(|k| targets[j].coeff(k) - qb[j].coeff(k))
            .collect();
        let y =
            solve_minimal(eqs, rhs, later.len()).ok_or(StabError::SpanFailure { stage: j + 1 })?;
        for (&i, yi) in later.iter().zip(y) {
            gamma[(i, j)] = yi;
        }
    }

    // Constant terms: target_j(0) = Σ_{i>=j} a_i γ_ij.
    let mut a_upd = vec![T::zero(); s];
    for j in (0..s).rev() {
        let tail = (j + 1..s).fold(T::zero(), |acc, i| {
            acc + a_upd[i].clone() * gamma[(i, j)].clone()
        });
        a_upd[j] = targets[j].coeff(0) - tail;
    }

    // G = γ⁻¹ (unit lower), α₁:ₛ = I - G.
    let mut g = Mat::<T>::zeros(s, s);
    for j in 0..s {
        g[(j, j)] = T::one();
        for i in j + 1..s {
            let acc = (j..i).fold(T::zero(), |acc, k| {
                acc + gamma[(i, k)].clone() * g[(k, j)].clone()
            });
            g[(i, j)] = T::zero() - acc;
        }
    }
    let mut alpha = Mat::<T>::zeros(s + 1, s);
    let mut beta = Mat::<T>::zeros(s + 1, s);
    for i in 0..s {
        for j in 0..i {
            alpha[(i, j)] = T::zero() - g[(i, j)].clone();
        }
        // β_i = (G A)_i
        for j in 0..s {
            let v = (0..=i).fold(T::zero(), |acc, k| {
                acc + g[(i, k)].clone() * bt.a[(k, j)].clone()
            });
            beta[(i, j)] = v;
        }
    }
    for j in 0..s {
        alpha[(s, j)] = a_upd[j].clone();
        let v = (0..s).fold(T::zero(), |acc, k| {
            acc + a_upd[k].clone() * bt.a[(k, j)].clone()
        });
        beta[(s, j)] = bt.b[j].clone() - v;
    }
    let mut so = ShuOsherForm::new(alpha, beta, bt.order).expect("shapes are consistent");
    if let (Some(bh), Some(o)) = (&bt.b_embedded, bt.order_embedded) {
        so = so
            .with_embedded(vec![T::zero(); s], bh.clone(), o)
            .expect("length s");
    }
    Ok(so)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::internal::derive_internal_stability;
    use rk_core::{shu_osher_to_butcher, Rational};

    fn q(n: i64, d: i64) -> Rational {
        Rational::from_ratio(n, d)
    }

    fn ssp22_butcher() -> ButcherTableau<Rational> {
        let a = Mat::from_rows(vec![vec![q(0, 1), q(0, 1)], vec![q(1, 1), q(0, 1)]]).unwrap();
        ButcherTableau::new(a, vec![q(1, 2), q(1, 2)], 2).unwrap()
    }

    #[test]
    fn butcher_targets_give_the_butcher_embedding() {
        let bt = ssp22_butcher();
        let qb = derive_internal_stability_butcher(&bt).q;
        let so = retarget_implementation(&bt, &qb).unwrap();
        assert!(so.alpha.is_zero());
        assert_eq!(shu_osher_to_butcher(&so), bt);
    }

    #[test]
    fn ssp22_target_recovers_natural_form_polynomial() {
        let bt = ssp22_butcher();
        let qb = derive_internal_stability_butcher(&bt).q;
        let targets = vec![qb[0].clone(), Poly::from_ratio_coeffs(&[(1, 2), (1, 2)])];
        let so = retarget_implementation(&bt, &targets).unwrap();
        let iss = derive_internal_stability(&so);
        assert_eq!(iss.q[1], targets[1]);
        assert_eq!(shu_osher_to_butcher(&so).a, bt.a);
        assert_eq!(shu_osher_to_butcher(&so).b, bt.b);
    }

    #[test]
    fn wrong_leading_coefficient_is_rejected() {
        let bt = ssp22_butcher();
        let targets = vec![
            Poly::from_ratio_coeffs(&[(0, 1), (1, 2), (1, 2)]),
            Poly::from_ratio_coeffs(&[(0, 1), (1, 1)]),
        ];
        assert!(matches!(
            retarget_implementation(&bt, &targets),
            Err(StabError::DegreeMismatch { stage: 2, .. })
        ));
    }

    #[test]
    fn zero_butcher_polynomial_rejects_nonconstant_target() {
        let a = Mat::from_rows(vec![vec![q(0, 1), q(0, 1)], vec![q(1, 1), q(0, 1)]]).unwrap();
        let bt = ButcherTableau::new(a, vec![q(1, 1), q(0, 1)], 1).unwrap();
        let targets = vec![
            Poly::from_ratio_coeffs(&[(0, 1), (1, 1)]),
            Poly::from_ratio_coeffs(&[(0, 1), (1, 1)]),
        ];
        assert!(matches!(
            retarget_implementation(&bt, &targets),
            Err(StabError::DegreeMismatch { stage: 2, .. })
        ));
    }

    #[test]
    fn higher_degree_later_stages_do_not_leak() {
        // Chains 1→2 and 3→4→5: Qᴮ_1 has degree 2 while Qᴮ_3 has degree 3.
        let z = q(0, 1);
        let mut rows = vec![vec![z.clone(); 5]; 5];
        rows[1][0] = q(1, 1);
        rows[3][2] = q(1, 1);
        rows[4][3] = q(1, 1);
        let b = vec![q(1, 8), q(1, 8), q(1, 2), q(1, 8), q(1, 8)];
        let bt = ButcherTableau::new(Mat::from_rows(rows).unwrap(), b, 1).unwrap();
        let mut targets = derive_internal_stability_butcher(&bt).q;
        assert_eq!(
            (targets[0].degree(), targets[2].degree()),
            (Some(2), Some(3))
        );
        targets[0] = Poly::from_ratio_coeffs(&[(0, 1), (1, 4), (1, 8)]);
        let so = retarget_implementation(&bt, &targets).unwrap();
        assert_eq!(derive_internal_stability(&so).q, targets);
        assert_eq!(shu_osher_to_butcher(&so).a, bt.a);
    }

    #[test]
    fn inconsistent_system_has_no_solution() {
        // y0 + y1 = 1 and 2y0 + 2y1 = 3 cannot both hold.
        let m = vec![vec![q(1, 1), q(1, 1)], vec![q(2, 1), q(2, 1)]];
        assert!(solve_minimal(m, vec![q(1, 1), q(3, 1)], 2).is_none());
    }

    #[test]
    fn free_unknowns_stay_zero() {
        let m = vec![vec![q(0, 1), q(2, 1), q(1, 1)]];
        assert_eq!(
            solve_minimal(m, vec![q(4, 1)], 3).unwrap(),
            vec![q(0, 1), q(2, 1), q(0, 1)]
        );
    }
}
