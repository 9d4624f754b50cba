//! Euler and midpoint extrapolation written as explicit Runge-Kutta methods.
//!
//! Stage 1 is `U_n` and is shared by all chains. The final base step of each
//! chain `T_{m,1}` is folded into the update row, so a chain contributes one
//! stage fewer than its number of base steps.

use num::{BigInt, One};
use rk_core::{Mat, Rational, ShuOsherForm};

use crate::error::CatalogError;

fn factorial(n: u32) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * BigInt::from(k))
}

fn signed(neg: bool, x: Rational) -> Rational {
    if neg {
        -x
    } else {
        x
    }
}

/// Aitken-Neville weights `(-1)^{m+p} m^{p-1} / ((p-m)!(m-1)!)`, `m = 1..p`.
pub fn ee_weights(p: u32) -> Vec<Rational> {
    (1..=p)
        .map(|m| {
            let num = BigInt::from(m).pow(p - 1);
            let den = factorial(p - m) * factorial(m - 1);
            signed((m + p) % 2 == 1, Rational::new(num, den))
        })
        .collect()
}

/// Weights `2(-1)^{m+r} m^{2r} / ((r-m)!(r+m)!)`, `m = 1..r`, `r = p/2`.
pub fn em_weights(p: u32) -> Result<Vec<Rational>, CatalogError> {
    if p % 2 == 1 || p == 0 {
        return Err(CatalogError::OddOrder(p));
    }
    let r = p / 2;
    Ok((1..=r)
        .map(|m| {
            let num = BigInt::from(2) * BigInt::from(m).pow(2 * r);
            let den = factorial(r - m) * factorial(r + m);
            signed((m + r) % 2 == 1, Rational::new(num, den))
        })
        .collect())
}

/// Flat stage layout of an Euler-extrapolation method: `index[m][j]` is the
/// 0-based stage of `Y_{m,j}` (`j = 0` is the shared stage).
pub(crate) fn ee_layout(p: u32) -> Vec<Vec<usize>> {
    let mut next = 1;
    (1..=p as usize)
        .map(|m| {
            let mut chain = vec![0];
            for _ in 1..m {
                chain.push(next);
                next += 1;
            }
            chain
        })
        .collect()
}

/// Layout for midpoint extrapolation: chain `m` holds `Y_{m,0..2m-1}`.
pub(crate) fn em_layout(r: u32) -> Vec<Vec<usize>> {
    let mut next = 1;
    (1..=r as usize)
        .map(|m| {
            let mut chain = vec![0];
            for _ in 1..2 * m {
                chain.push(next);
                next += 1;
            }
            chain
        })
        .collect()
}

fn ee_update(layout: &[Vec<usize>], w: &[Rational], s: usize) -> (Vec<Rational>, Vec<Rational>) {
    let mut a = vec![Rational::from_integer(0.into()); s];
    let mut b = a.clone();
    for (mi, wm) in w.iter().enumerate() {
        let m = (mi + 1) as i64;
        let last = *layout[mi].last().expect("chain is never empty");
        // T_{m,1} = Y_{m,m-1} + τ/m F(Y_{m,m-1}); for m = 1 that is U_n via v.
        if last != 0 {
            a[last] += wm.clone();
        }
        b[last] += wm.clone() / Rational::from_integer(m.into());
    }
    (a, b)
}

/// Euler extrapolation of order `p` with `1 + p(p-1)/2` stages. With
/// `embedded`, the order `p-1` diagonal entry `T_{p-1,p-1}` is added as an
/// extra update row.
pub fn build_ee_extrapolation(
    p: u32,
    embedded: bool,
) -> Result<ShuOsherForm<Rational>, CatalogError> {
    if p == 0 {
        return Err(CatalogError::InvalidParameter("ee needs p >= 1".into()));
    }
    let layout = ee_layout(p);
    let s = 1 + (p * (p - 1) / 2) as usize;
    let mut alpha = Mat::zeros(s + 1, s);
    let mut beta = Mat::zeros(s + 1, s);
    for (mi, chain) in layout.iter().enumerate() {
        let h = Rational::new(1.into(), BigInt::from(mi + 1));
        for pair in chain.windows(2) {
            alpha[(pair[1], pair[0])] = Rational::one();
            beta[(pair[1], pair[0])] = h.clone();
        }
    }
    let (a, b) = ee_update(&layout, &ee_weights(p), s);
    for j in 0..s {
        alpha[(s, j)] = a[j].clone();
        beta[(s, j)] = b[j].clone();
    }
    let mut so = ShuOsherForm::new(alpha, beta, p).expect("shapes are consistent");
    if embedded && p >= 2 {
        let (ah, bh) = ee_update(&layout[..(p - 1) as usize], &ee_weights(p - 1), s);
        so = so.with_embedded(ah, bh, p - 1).expect("length s");
    }
    Ok(so)
}

fn em_update(layout: &[Vec<usize>], w: &[Rational], s: usize) -> (Vec<Rational>, Vec<Rational>) {
    let mut a = vec![Rational::from_integer(0.into()); s];
    let mut b = a.clone();
    for (mi, wm) in w.iter().enumerate() {
        let m = mi + 1;
        // T_{m,1} = Y_{m,2m} = Y_{m,2m-2} + τ/m F(Y_{m,2m-1}).
        let back = layout[mi][2 * m - 2];
        if back != 0 {
            a[back] += wm.clone();
        }
        b[layout[mi][2 * m - 1]] += wm.clone() / Rational::from_integer(BigInt::from(m));
    }
    (a, b)
}

/// Midpoint extrapolation of even order `p` with `1 + (p/2)²` stages. With
/// `embedded` and `p >= 4`, `T_{r-1,r-1}` of order `p-2` is the extra row.
pub fn build_em_extrapolation(
    p: u32,
    embedded: bool,
) -> Result<ShuOsherForm<Rational>, CatalogError> {
    let w = em_weights(p)?;
    let r = p / 2;
    let layout = em_layout(r);
    let s = 1 + (r * r) as usize;
    let mut alpha = Mat::zeros(s + 1, s);
    let mut beta = Mat::zeros(s + 1, s);
    for (mi, chain) in layout.iter().enumerate() {
        let m = BigInt::from(mi + 1);
        // Y_{m,1} = U + τ/(2m) F(U)
        alpha[(chain[1], 0)] = Rational::one();
        beta[(chain[1], 0)] = Rational::new(1.into(), BigInt::from(2) * m.clone());
        // Y_{m,j} = Y_{m,j-2} + τ/m F(Y_{m,j-1})
        for j in 2..chain.len() {
            alpha[(chain[j], chain[j - 2])] = Rational::one();
            beta[(chain[j], chain[j - 1])] = Rational::new(1.into(), m.clone());
        }
    }
    let (a, b) = em_update(&layout, &w, s);
    for j in 0..s {
        alpha[(s, j)] = a[j].clone();
        beta[(s, j)] = b[j].clone();
    }
    let mut so = ShuOsherForm::new(alpha, beta, p).expect("shapes are consistent");
    if embedded && r >= 2 {
        let (ah, bh) = em_update(&layout[..(r - 1) as usize], &em_weights(p - 2)?, s);
        so = so.with_embedded(ah, bh, p - 2).expect("length s");
    }
    Ok(so)
}
