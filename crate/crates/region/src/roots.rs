//! Simultaneous polynomial root finding by Aberth-Ehrlich iteration.

use num::complex::Complex64;

/// `(f(w), f'(w))` for ascending coefficients.
pub(crate) fn horner(c: &[Complex64], w: Complex64) -> (Complex64, Complex64) {
    let mut f = Complex64::new(0.0, 0.0);
    let mut df = Complex64::new(0.0, 0.0);
    for a in c.iter().rev() {
        df = df * w + f;
        f = f * w + a;
    }
    (f, df)
}

/// Fujiwara bound: every root has modulus at most the returned value.
pub fn fujiwara_bound(c: &[Complex64]) -> f64 {
    let d = c.len() - 1;
    let lead = c[d].norm();
    (1..=d)
        .map(|k| {
            let a = c[d - k].norm() / lead;
            let a = if k == d { a / 2.0 } else { a };
            a.powf(1.0 / k as f64)
        })
        .fold(0.0, f64::max)
        * 2.0
}

/// Refine `roots` (length = degree) in place. Returns whether every
/// correction dropped below rounding level within `max_iter` sweeps.
pub fn aberth(c: &[Complex64], roots: &mut [Complex64], max_iter: usize) -> bool {
    let n = roots.len();
    debug_assert_eq!(n + 1, c.len());
    let mut done = vec![false; n];
    for _ in 0..max_iter {
        let mut all = true;
        for k in 0..n {
            if done[k] {
                continue;
            }
            let w = roots[k];
            let (f, df) = horner(c, w);
            if f == Complex64::new(0.0, 0.0) {
                done[k] = true;
                continue;
            }
            let ratio = f / df;
            let mut sum = Complex64::new(0.0, 0.0);
            for (j, r) in roots.iter().enumerate() {
                if j != k {
                    sum += (w - r).inv();
                }
            }
            let corr = ratio / (Complex64::new(1.0, 0.0) - ratio * sum);
            if !corr.re.is_finite() || !corr.im.is_finite() {
                all = false;
                continue;
            }
            roots[k] = w - corr;
            if corr.norm() <= 4.0 * f64::EPSILON * (1.0 + w.norm()) {
                done[k] = true;
            } else {
                all = false;
            }
        }
        if all {
            return true;
        }
    }
    false
}

/// All roots of `c` from a standard circular start.
pub(crate) fn all_roots(c: &[Complex64]) -> Vec<Complex64> {
    let d = c.len() - 1;
    let r = 0.5 * fujiwara_bound(c);
    let mut roots: Vec<Complex64> = (0..d)
        .map(|k| Complex64::from_polar(r, 0.4 + std::f64::consts::TAU * k as f64 / d as f64))
        .collect();
    aberth(c, &mut roots, 1000);
    roots
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64) -> Complex64 {
        Complex64::new(re, 0.0)
    }

    #[test]
    fn cubic_roots() {
        // (w-1)(w+2)(w-3) = w³ - 2w² - 5w + 6
        let mut r = all_roots(&[c(6.0), c(-5.0), c(-2.0), c(1.0)]);
        r.sort_by(|a, b| a.re.partial_cmp(&b.re).unwrap());
        for (got, want) in r.iter().zip([-2.0, 1.0, 3.0]) {
            assert!((got - c(want)).norm() < 1e-13);
        }
    }

    #[test]
    fn roots_of_unity() {
        let mut coeffs = vec![c(0.0); 8];
        coeffs[0] = c(-1.0);
        coeffs[7] = c(1.0);
        for r in all_roots(&coeffs) {
            assert!((r.powu(7) - c(1.0)).norm() < 1e-13);
        }
    }

    #[test]
    fn fujiwara_encloses_roots() {
        let coeffs = [c(6.0), c(-5.0), c(-2.0), c(1.0)];
        assert!(fujiwara_bound(&coeffs) >= 3.0);
    }
}
