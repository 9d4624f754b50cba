//! Optimal explicit SSP methods of order two and three.

use rk_core::{Mat, Rational, Scalar, ShuOsherForm};

use crate::error::CatalogError;

fn q(n: i64, d: i64) -> Rational {
    Rational::from_ratio(n, d)
}

/// `s`-stage second-order method: a chain of Euler steps of size
/// `τ/(s-1)` and the update `U/s + (s-1)/s·(Y_s + τ/(s-1)F(Y_s))`.
pub fn build_ssp2(s: usize) -> Result<ShuOsherForm<Rational>, CatalogError> {
    if s < 2 {
        return Err(CatalogError::InvalidParameter(format!(
            "ssp2 needs s >= 2, got {s}"
        )));
    }
    let c = (s - 1) as i64;
    let mut alpha = Mat::zeros(s + 1, s);
    let mut beta = Mat::zeros(s + 1, s);
    for i in 1..s {
        alpha[(i, i - 1)] = q(1, 1);
        beta[(i, i - 1)] = q(1, c);
    }
    // The U_n term of the update goes through v.
    alpha[(s, s - 1)] = q(c, s as i64);
    beta[(s, s - 1)] = q(1, s as i64);
    Ok(ShuOsherForm::new(alpha, beta, 2).expect("shapes are consistent"))
}

/// `(k_n, m_n)` as 1-based stage numbers.
pub fn ssp3_indices(n: usize) -> (usize, usize) {
    (n * (n + 1) / 2 + 1, (n - 1) * (n - 2) / 2 + 1)
}

/// `n²`-stage third-order method with Euler steps of size `τ/(n²-n)` and a
/// single convex combination at stage `k_n` that reaches back to `Y_{m_n}`.
pub fn build_ssp3(n: usize) -> Result<ShuOsherForm<Rational>, CatalogError> {
    if n < 2 {
        return Err(CatalogError::InvalidParameter(format!(
            "ssp3 needs n >= 2, got {n}"
        )));
    }
    let s = n * n;
    let c = (s - n) as i64;
    let (k, m) = ssp3_indices(n);
    let ni = n as i64;
    let mut alpha = Mat::zeros(s + 1, s);
    let mut beta = Mat::zeros(s + 1, s);
    for j in 2..=s {
        let i = j - 1;
        if j == k {
            alpha[(i, i - 1)] = q(ni - 1, 2 * ni - 1);
            beta[(i, i - 1)] = q(1, ni * (2 * ni - 1));
            let prev = alpha[(i, m - 1)].clone();
            alpha[(i, m - 1)] = prev + q(ni, 2 * ni - 1);
        } else {
            alpha[(i, i - 1)] = q(1, 1);
            beta[(i, i - 1)] = q(1, c);
        }
    }
    alpha[(s, s - 1)] = q(1, 1);
    beta[(s, s - 1)] = q(1, c);
    Ok(ShuOsherForm::new(alpha, beta, 3).expect("shapes are consistent"))
}

/// Canonical SSP structure with coefficient `C`: nonnegative `α`, `β`, `v`,
/// and every entry either an Euler step (`α_ij = Cβ_ij`) or a plain copy
/// (`β_ij = 0`). Returns the first offending entry (1-based) if any.
pub fn is_canonical_ssp<T: Scalar>(so: &ShuOsherForm<T>, c: &T) -> Result<(), String> {
    let s = so.s();
    for (i, v) in so.v().iter().enumerate() {
        if v.to_f64() < -1e-14 {
            return Err(format!("v[{}] is negative", i + 1));
        }
    }
    for i in 0..=s {
        for j in 0..s {
            let a = &so.alpha[(i, j)];
            let b = &so.beta[(i, j)];
            if a.to_f64() < 0.0 || b.to_f64() < 0.0 {
                return Err(format!("entry ({}, {}) is negative", i + 1, j + 1));
            }
            if !b.is_zero() && !a.near(&(c.clone() * b.clone()), 1e-14) {
                return Err(format!(
                    "alpha[{}][{}] != C*beta[{}][{}]",
                    i + 1,
                    j + 1,
                    i + 1,
                    j + 1
                ));
            }
        }
    }
    Ok(())
}
