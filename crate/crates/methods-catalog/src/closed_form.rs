//! Closed-form internal stability polynomials of the natural implementations.

use num::BigInt;
use rk_core::{Rational, Scalar};
use stab_poly::{InternalStabilitySet, Poly};

use crate::error::CatalogError;
use crate::extrapolation::{ee_layout, ee_weights, em_layout, em_weights};
use crate::spec::{Family, MethodSpec};
use crate::ssp::ssp3_indices;

fn r(n: i64, d: i64) -> Rational {
    Rational::from_ratio(n, d)
}

fn big(n: usize) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// `T_p(z) = Σ_{k=0}^{p} z^k/k!`.
pub fn taylor_polynomial(p: u32) -> Poly<Rational> {
    let mut c = Vec::with_capacity(p as usize + 1);
    let mut term = r(1, 1);
    for k in 0..=p as usize {
        if k > 0 {
            term /= big(k);
        }
        c.push(term.clone());
    }
    Poly::new(c)
}

/// `ν = 1 + z/h`.
fn euler(h: usize) -> Poly<Rational> {
    Poly::new(vec![r(1, 1), r(1, 1) / big(h)])
}

/// `q_{m,0..=jmax}` with `q_0 = 0`, `q_1 = 1`, `q_j = (z/m)q_{j-1} + q_{j-2}`.
pub fn em_auxiliary(m: u32, jmax: usize) -> Vec<Poly<Rational>> {
    let mut q = vec![Poly::zero(), Poly::constant(r(1, 1))];
    let zm = Poly::monomial(r(1, m as i64), 1);
    while q.len() <= jmax {
        let n = q.len();
        let next = &(&zm * &q[n - 1]) + &q[n - 2];
        q.push(next);
    }
    q.truncate(jmax + 1);
    q
}

/// Internal stability polynomials of a family in its natural form, from the
/// known closed forms rather than by elimination. `Q_1 = P - v_{s+1}`.
pub fn internal_stability_closed_form(
    spec: &MethodSpec,
) -> Result<InternalStabilitySet<Rational>, CatalogError> {
    spec.check()?;
    let param = spec.param as usize;
    let (p, q, v_last) = match spec.family {
        Family::Ssp2 => {
            let s = param;
            let nu = euler(s - 1);
            let a = r(s as i64 - 1, s as i64);
            let q: Vec<_> = (1..=s)
                .map(|j| nu.pow((s - j + 1) as u32).scale(&a))
                .collect();
            let v = r(1, s as i64);
            let p = &q[0] + &Poly::constant(v.clone());
            (p, q, v)
        }
        Family::Ssp3 => {
            let n = param;
            let s = n * n;
            let (k, m) = ssp3_indices(n);
            let nu = euler(s - n);
            let a = r(n as i64 - 1, 2 * n as i64 - 1);
            let b = r(n as i64, 2 * n as i64 - 1);
            let q: Vec<_> = (1..=s)
                .map(|j| {
                    if j >= k {
                        nu.pow((s - j + 1) as u32)
                    } else if j > m {
                        nu.pow((s - j + 1) as u32).scale(&a)
                    } else {
                        let lo = nu.pow(((n - 1) * (n - 1) + 1 - j) as u32).scale(&b);
                        &nu.pow((s - j + 1) as u32).scale(&a) + &lo
                    }
                })
                .collect();
            (q[0].clone(), q, r(0, 1))
        }
        Family::EeExtrap => {
            let w = ee_weights(spec.param);
            let layout = ee_layout(spec.param);
            let s = layout.last().map_or(1, |c| c[c.len() - 1] + 1);
            let mut q = vec![Poly::zero(); s];
            for (mi, chain) in layout.iter().enumerate() {
                let m = mi + 1;
                let nu = euler(m);
                for (j, &stage) in chain.iter().enumerate().skip(1) {
                    q[stage] = nu.pow((m - j) as u32).scale(&w[mi]);
                }
            }
            let p = taylor_polynomial(spec.param);
            q[0] = &p - &Poly::constant(w[0].clone());
            (p, q, w[0].clone())
        }
        Family::EmExtrap => {
            let w = em_weights(spec.param)?;
            let rr = spec.param / 2;
            let layout = em_layout(rr);
            let s = 1 + (rr * rr) as usize;
            let mut q = vec![Poly::zero(); s];
            for (mi, chain) in layout.iter().enumerate() {
                let m = mi + 1;
                let aux = em_auxiliary(m as u32, 2 * m);
                for (l, &stage) in chain.iter().enumerate().skip(1) {
                    q[stage] = aux[2 * m - l + 1].scale(&w[mi]);
                }
            }
            let p = taylor_polynomial(spec.param);
            q[0] = &p - &Poly::constant(w[0].clone());
            (p, q, w[0].clone())
        }
        Family::Classic(c) => {
            return Err(CatalogError::UnsupportedFamily(format!(
                "classic:{}",
                c.name()
            )))
        }
    };
    debug_assert_eq!(&q[0] + &Poly::constant(v_last), p);
    Ok(InternalStabilitySet { p, q })
}
