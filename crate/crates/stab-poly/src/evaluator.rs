//! Pointwise complex evaluation of `P` and `Q_j`.
//!
//! Evaluating straight from the Shu-Osher recursion avoids the monomial
//! basis, whose rounding error grows like `Σ|q_k||z|^k` and is useless for
//! many-stage methods whose regions reach far from the origin.

use num::complex::Complex64;
use rk_core::ShuOsherForm;

use crate::internal::InternalStabilitySet;

pub trait PointEvaluator: Sync {
    /// Number of internal polynomials `s`.
    fn stages(&self) -> usize;
    /// Write `Q_1(z)..Q_s(z)` into `q` and return `P(z)`.
    fn eval_into(&self, z: Complex64, q: &mut [Complex64]) -> Complex64;

    fn eval(&self, z: Complex64) -> (Complex64, Vec<Complex64>) {
        let mut q = vec![Complex64::new(0.0, 0.0); self.stages()];
        let p = self.eval_into(z, &mut q);
        (p, q)
    }
}

/// Sparse backward substitution `X = c + X(α + zβ)`.
#[derive(Debug, Clone)]
pub struct FormEvaluator {
    /// For column `j`: `(i, α_ij, β_ij)` for stages `i > j` with a nonzero entry.
    columns: Vec<Vec<(usize, f64, f64)>>,
    last: Vec<(f64, f64)>,
    v: Vec<f64>,
}

impl FormEvaluator {
    pub fn new(so: &ShuOsherForm<f64>) -> Self {
        let s = so.s();
        let columns = (0..s)
            .map(|j| {
                (j + 1..s)
                    .filter(|&i| so.alpha[(i, j)] != 0.0 || so.beta[(i, j)] != 0.0)
                    .map(|i| (i, so.alpha[(i, j)], so.beta[(i, j)]))
                    .collect()
            })
            .collect();
        let last = (0..s)
            .map(|j| (so.alpha[(s, j)], so.beta[(s, j)]))
            .collect();
        FormEvaluator {
            columns,
            last,
            v: so.v(),
        }
    }
}

impl PointEvaluator for FormEvaluator {
    fn stages(&self) -> usize {
        self.columns.len()
    }

    fn eval_into(&self, z: Complex64, q: &mut [Complex64]) -> Complex64 {
        let s = self.columns.len();
        for j in (0..s).rev() {
            let (a, b) = self.last[j];
            let mut acc = Complex64::new(a, 0.0) + z * b;
            for &(i, a, b) in &self.columns[j] {
                acc += q[i] * (Complex64::new(a, 0.0) + z * b);
            }
            q[j] = acc;
        }
        let mut p = Complex64::new(self.v[s], 0.0);
        for (qj, vj) in q.iter().zip(&self.v) {
            if *vj != 0.0 {
                p += qj * vj;
            }
        }
        p
    }
}

impl PointEvaluator for InternalStabilitySet<f64> {
    fn stages(&self) -> usize {
        self.q.len()
    }

    fn eval_into(&self, z: Complex64, q: &mut [Complex64]) -> Complex64 {
        for (out, poly) in q.iter_mut().zip(&self.q) {
            *out = poly.eval_complex(z);
        }
        self.p.eval_complex(z)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::internal::derive_internal_stability;
    use rk_core::{Mat, Scalar};

    #[test]
    fn form_and_polynomials_agree() {
        let q = f64::from_ratio;
        let alpha = Mat::from_rows(vec![
            vec![0.0, 0.0, 0.0],
            vec![1.0, 0.0, 0.0],
            vec![q(3, 4), q(1, 4), 0.0],
            vec![q(1, 3), 0.0, q(2, 3)],
        ])
        .unwrap();
        let beta = Mat::from_rows(vec![
            vec![0.0, 0.0, 0.0],
            vec![1.0, 0.0, 0.0],
            vec![0.0, q(1, 4), 0.0],
            vec![0.0, 0.0, q(2, 3)],
        ])
        .unwrap();
        let so = ShuOsherForm::new(alpha, beta, 3).unwrap();
        let set = derive_internal_stability(&so);
        let fe = FormEvaluator::new(&so);
        for z in [Complex64::new(-1.3, 0.7), Complex64::new(0.2, -2.0)] {
            let (p1, q1) = fe.eval(z);
            let (p2, q2) = set.eval(z);
            assert!((p1 - p2).norm() < 1e-14);
            for (a, b) in q1.iter().zip(&q2) {
                assert!((a - b).norm() < 1e-14);
            }
        }
    }
}
