use rk_core::ShuOsherForm;

use crate::error::SimError;
use crate::perturb::ResidualSource;
use crate::problem::IvpProblem;

#[derive(Debug, Clone)]
struct Row {
    v: f64,
    /// `(j, α_ij, β_ij)` for nonzero entries.
    terms: Vec<(usize, f64, f64)>,
}

impl Row {
    fn new(v: f64, alpha: impl Iterator<Item = f64>, beta: impl Iterator<Item = f64>) -> Row {
        let terms = alpha
            .zip(beta)
            .enumerate()
            .filter(|(_, (a, b))| *a != 0.0 || *b != 0.0)
            .map(|(j, (a, b))| (j, a, b))
            .collect();
        Row { v, terms }
    }
}

/// A Shu-Osher form prepared for repeated stepping.
#[derive(Debug, Clone)]
pub struct Stepper {
    rows: Vec<Row>,
    embedded: Option<Row>,
    c: Vec<f64>,
    needs_f: Vec<bool>,
    order: u32,
    embedded_order: Option<u32>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct StepOutput {
    pub u: Vec<f64>,
    pub u_hat: Option<Vec<f64>>,
    /// Residual added to each row `0..=s`, then the embedded row if present.
    pub residuals: Vec<Vec<f64>>,
}

impl Stepper {
    pub fn new(so: &ShuOsherForm<f64>) -> Stepper {
        let s = so.s();
        let v = so.v();
        let rows: Vec<Row> = (0..=s)
            .map(|i| {
                Row::new(
                    v[i],
                    (0..s).map(|j| so.alpha[(i, j)]),
                    (0..s).map(|j| so.beta[(i, j)]),
                )
            })
            .collect();
        let embedded = so.embedded.as_ref().map(|e| {
            let ve = so.v_embedded().unwrap_or(0.0);
            Row::new(ve, e.alpha.iter().copied(), e.beta.iter().copied())
        });
        // c_i = Σ_j α_ij c_j + Σ_j β_ij.
        let mut c = vec![0.0; s];
        for i in 1..s {
            c[i] = rows[i].terms.iter().map(|&(j, a, b)| a * c[j] + b).sum();
        }
        let mut needs_f = vec![false; s];
        for row in rows.iter().chain(embedded.iter()) {
            for &(j, _, b) in &row.terms {
                needs_f[j] |= b != 0.0;
            }
        }
        Stepper {
            rows,
            embedded,
            c,
            needs_f,
            order: so.order,
            embedded_order: so.embedded.as_ref().map(|e| e.order),
        }
    }

    pub fn stages(&self) -> usize {
        self.c.len()
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn embedded_order(&self) -> Option<u32> {
        self.embedded_order
    }

    /// Stage abscissae `c_i`.
    pub fn abscissae(&self) -> &[f64] {
        &self.c
    }

    fn combine(&self, row: &Row, u: &[f64], ys: &[f64], fs: &[f64], tau: f64, out: &mut [f64]) {
        let m = u.len();
        for (o, x) in out.iter_mut().zip(u) {
            *o = row.v * x;
        }
        for &(j, a, b) in &row.terms {
            let (y, f) = (&ys[j * m..(j + 1) * m], &fs[j * m..(j + 1) * m]);
            let tb = tau * b;
            for k in 0..m {
                out[k] += a * y[k] + tb * f[k];
            }
        }
    }

    /// One perturbed step from `(t, u)`.
    pub fn step(
        &self,
        problem: &IvpProblem,
        t: f64,
        u: &[f64],
        tau: f64,
        source: &mut dyn ResidualSource,
    ) -> Result<StepOutput, SimError> {
        let (s, m) = (self.stages(), u.len());
        let mut ys = vec![0.0; s * m];
        let mut fs = vec![0.0; s * m];
        let mut residuals = vec![vec![0.0; m]; s + 1 + usize::from(self.embedded.is_some())];
        let mut y = vec![0.0; m];
        for i in 0..s {
            if i == 0 {
                y.copy_from_slice(u);
            } else {
                self.combine(&self.rows[i], u, &ys, &fs, tau, &mut y);
                source.inject(i, &mut y, &mut residuals[i]);
            }
            if y.iter().any(|v| !v.is_finite()) {
                return Err(SimError::NonfiniteState(t));
            }
            ys[i * m..(i + 1) * m].copy_from_slice(&y);
            if self.needs_f[i] {
                problem.rhs(t + self.c[i] * tau, &y, &mut fs[i * m..(i + 1) * m]);
            }
        }
        let mut next = vec![0.0; m];
        self.combine(&self.rows[s], u, &ys, &fs, tau, &mut next);
        source.inject(s, &mut next, &mut residuals[s]);
        let u_hat = self.embedded.as_ref().map(|row| {
            let mut hat = vec![0.0; m];
            self.combine(row, u, &ys, &fs, tau, &mut hat);
            source.inject(s + 1, &mut hat, &mut residuals[s + 1]);
            hat
        });
        if next
            .iter()
            .chain(u_hat.iter().flatten())
            .any(|v| !v.is_finite())
        {
            return Err(SimError::NonfiniteState(t));
        }
        Ok(StepOutput {
            u: next,
            u_hat,
            residuals,
        })
    }
}

/// One step of `so` from `(t, u)` with residuals drawn from `source`.
pub fn step_shu_osher(
    so: &ShuOsherForm<f64>,
    problem: &IvpProblem,
    t: f64,
    u: &[f64],
    tau: f64,
    source: &mut dyn ResidualSource,
) -> Result<StepOutput, SimError> {
    Stepper::new(so).step(problem, t, u, tau, source)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perturb::{FixedResiduals, PerturbationPolicy, Perturber};
    use methods_catalog::{build, Family, MethodSpec};
    use num::complex::Complex64;
    use stab_poly::{FormEvaluator, PointEvaluator};

    fn scalar(lambda: f64) -> IvpProblem {
        IvpProblem::new("decay", vec![1.0], 0.0, 1.0, move |_, u, out| {
            out[0] = lambda * u[0]
        })
    }

    #[test]
    fn unperturbed_step_is_p() {
        for spec in [
            MethodSpec::new(Family::Ssp3, 3),
            MethodSpec::new(Family::EeExtrap, 6),
        ] {
            let so = build(&spec).unwrap().shu_osher();
            let (lambda, tau) = (-1.3, 0.7);
            let out = step_shu_osher(
                &so,
                &scalar(lambda),
                0.0,
                &[1.0],
                tau,
                &mut Perturber::new(PerturbationPolicy::none()),
            )
            .unwrap();
            let (p, _) = FormEvaluator::new(&so).eval(Complex64::new(lambda * tau, 0.0));
            assert!((out.u[0] - p.re).abs() < 1e-13);
        }
    }

    #[test]
    fn single_stage_residual_is_scaled_by_q2() {
        // Natural SSP22: Q_2(z) = (1 + z)/2, so a residual at stage 2 moves U_{n+1} by Q_2(-0.1)·r.
        let so = build(&MethodSpec::new(Family::Ssp2, 2))
            .unwrap()
            .shu_osher();
        let p = scalar(-1.0);
        let base =
            step_shu_osher(&so, &p, 0.0, &[1.0], 0.1, &mut FixedResiduals::default()).unwrap();
        let mut r = FixedResiduals(vec![vec![0.0], vec![1e-8]]);
        let pert = step_shu_osher(&so, &p, 0.0, &[1.0], 0.1, &mut r).unwrap();
        assert!((pert.u[0] - base.u[0] - 0.45e-8).abs() < 1e-15);
    }

    #[test]
    fn abscissae_match_butcher_row_sums() {
        let m = build(&MethodSpec::new(Family::EmExtrap, 6)).unwrap();
        let st = Stepper::new(&m.shu_osher());
        let b = m.butcher();
        for (i, c) in st.abscissae().iter().enumerate() {
            let row: f64 = (0..b.s()).map(|j| b.a[(i, j)]).sum();
            assert!((c - row).abs() < 1e-13);
        }
    }
}
