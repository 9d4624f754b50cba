//! One-step error propagation checks for contractive and linear problems.

use methods_catalog::is_canonical_ssp;
use nalgebra::{DMatrix, DVector};
use num::complex::Complex64;
use rk_core::ShuOsherForm;
use stab_poly::{FormEvaluator, PointEvaluator};

use crate::error::SimError;
use crate::perturb::FixedResiduals;
use crate::problem::IvpProblem;
use crate::step::Stepper;

fn norm(x: &[f64]) -> f64 {
    x.iter().map(|v| v * v).sum::<f64>().sqrt()
}

fn diff(a: &[f64], b: &[f64]) -> Vec<f64> {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

/// `lhs = ‖ε_{n+1}‖` against `rhs = ‖ε_n‖ + Σ_j ‖r_j‖`, Euclidean norm.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ContractivityCheck {
    pub lhs: f64,
    pub rhs: f64,
}

impl ContractivityCheck {
    pub fn holds(&self) -> bool {
        self.lhs <= self.rhs * (1.0 + 1e-12) + 1e-15
    }
}

/// Steps `u` cleanly and `u_pert` with `residuals` (rows `1..=s`) and compares
/// the propagated difference with the contractive bound. `c` is the SSP
/// coefficient the canonical form is checked against.
#[allow(clippy::too_many_arguments)]
pub fn contractivity_experiment(
    so: &ShuOsherForm<f64>,
    c: f64,
    problem: &IvpProblem,
    t: f64,
    u: &[f64],
    u_pert: &[f64],
    tau: f64,
    residuals: &FixedResiduals,
) -> Result<ContractivityCheck, SimError> {
    is_canonical_ssp(so, &c).map_err(SimError::NotCanonical)?;
    let s = so.s();
    let stepper = Stepper::new(so);
    let clean = stepper.step(problem, t, u, tau, &mut FixedResiduals::default())?;
    let mut r = FixedResiduals(residuals.0.iter().take(s + 1).cloned().collect());
    let pert = stepper.step(problem, t, u_pert, tau, &mut r)?;
    let injected: f64 = pert.residuals.iter().take(s + 1).map(|v| norm(v)).sum();
    Ok(ContractivityCheck {
        lhs: norm(&diff(&pert.u, &clean.u)),
        rhs: norm(&diff(u_pert, u)) + injected,
    })
}

/// The linear-problem bound `‖ε_{n+1}‖ ≤ ‖ε_n‖ + s·max(M, 1)·max_j‖r_j‖ + T`.
///
/// `M` is the largest `|Q_j(τλ)|`, `j ≥ 2`, over the spectrum of `L`, which is
/// `max_j ‖Q_j(τL)‖` for normal `L`; the factor 1 covers the update row.
/// `T` is the clean step's distance to `exp(τL)U`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AmplificationCheck {
    pub lhs: f64,
    pub rhs: f64,
    pub m_spectrum: f64,
    pub truncation: f64,
}

impl AmplificationCheck {
    pub fn holds(&self) -> bool {
        self.lhs <= self.rhs * (1.0 + 1e-12) + 1e-15
    }
}

pub fn amplification_experiment(
    so: &ShuOsherForm<f64>,
    l: &[Vec<f64>],
    tau: f64,
    u: &[f64],
    u_pert: &[f64],
    residuals: &FixedResiduals,
) -> Result<AmplificationCheck, SimError> {
    let m = u.len();
    if l.len() != m || l.iter().any(|row| row.len() != m) || u_pert.len() != m {
        return Err(SimError::Dimension(format!("L must be {m}x{m}")));
    }
    let mat = DMatrix::from_fn(m, m, |i, j| l[i][j]);
    let comm = &mat * mat.transpose() - mat.transpose() * &mat;
    if comm.norm() > 1e-12 * mat.norm_squared().max(1.0) {
        return Err(SimError::NotNormal);
    }
    let eval = FormEvaluator::new(so);
    let mut m_spec = 0.0f64;
    for lambda in mat.complex_eigenvalues().iter() {
        let z = Complex64::new(lambda.re, lambda.im) * tau;
        let (p, q) = eval.eval(z);
        if p.norm() > 1.0 + 1e-12 {
            return Err(SimError::SpectrumOutsideRegion(z));
        }
        m_spec = q.iter().skip(1).map(|v| v.norm()).fold(m_spec, f64::max);
    }
    let exact = ((&mat * tau).exp() * DVector::from_column_slice(u))
        .as_slice()
        .to_vec();
    let problem = IvpProblem::linear(l.to_vec(), u.to_vec(), tau);
    let stepper = Stepper::new(so);
    let clean = stepper.step(&problem, 0.0, u, tau, &mut FixedResiduals::default())?;
    let s = so.s();
    let mut r = FixedResiduals(residuals.0.iter().take(s + 1).cloned().collect());
    let pert = stepper.step(&problem, 0.0, u_pert, tau, &mut r)?;
    let r_max = pert
        .residuals
        .iter()
        .take(s + 1)
        .map(|v| norm(v))
        .fold(0.0, f64::max);
    let truncation = norm(&diff(&clean.u, &exact));
    Ok(AmplificationCheck {
        lhs: norm(&diff(&pert.u, &exact)),
        rhs: norm(&diff(u_pert, u)) + s as f64 * m_spec.max(1.0) * r_max + truncation,
        m_spectrum: m_spec,
        truncation,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use methods_catalog::{build, Family, MethodSpec};

    #[test]
    fn contractivity_holds_for_ssp2_beyond_euler_limit() {
        let so = build(&MethodSpec::new(Family::Ssp2, 4))
            .unwrap()
            .shu_osher();
        let p = IvpProblem::new("decay", vec![1.0], 0.0, 1.0, |_, u, out| out[0] = -u[0]);
        let r = FixedResiduals(vec![
            vec![0.0],
            vec![1e-3],
            vec![-2e-3],
            vec![5e-4],
            vec![1e-3],
        ]);
        let c =
            contractivity_experiment(&so, 3.0, &p, 0.0, &[1.0], &[1.01], 3.0 * 1.9, &r).unwrap();
        assert!(c.holds(), "{c:?}");
        let z = contractivity_experiment(
            &so,
            3.0,
            &p,
            0.0,
            &[1.0],
            &[1.01],
            3.0 * 1.9,
            &FixedResiduals::default(),
        )
        .unwrap();
        assert!(z.lhs <= 0.01 * (1.0 + 1e-12));
    }

    #[test]
    fn non_canonical_form_is_refused() {
        let so = build(&MethodSpec::new(Family::EeExtrap, 3))
            .unwrap()
            .shu_osher();
        let p = IvpProblem::new("decay", vec![1.0], 0.0, 1.0, |_, u, out| out[0] = -u[0]);
        let e = contractivity_experiment(
            &so,
            1.0,
            &p,
            0.0,
            &[1.0],
            &[1.0],
            0.5,
            &FixedResiduals::default(),
        );
        assert!(matches!(e, Err(SimError::NotCanonical(_))));
    }

    #[test]
    fn linear_bound_for_diagonal_system() {
        let so = build(&MethodSpec::new(Family::Ssp2, 3))
            .unwrap()
            .shu_osher();
        let l = vec![vec![-1.0, 0.0], vec![0.0, -2.0]];
        let r = FixedResiduals(vec![
            vec![],
            vec![1e-6, -1e-6],
            vec![2e-6, 0.0],
            vec![0.0, 1e-6],
        ]);
        let c =
            amplification_experiment(&so, &l, 0.5, &[1.0, 1.0], &[1.0 + 1e-5, 1.0], &r).unwrap();
        assert!(c.holds() && c.lhs < c.rhs, "{c:?}");
        // Zero residuals: only |P| ≤ 1 propagation plus truncation remains.
        let z = amplification_experiment(
            &so,
            &l,
            0.5,
            &[1.0, 1.0],
            &[1.0 + 1e-5, 1.0],
            &FixedResiduals::default(),
        )
        .unwrap();
        assert!(z.lhs <= 1e-5 + z.truncation);
    }

    #[test]
    fn spectrum_outside_region_is_reported() {
        let so = build(&MethodSpec::new(Family::Ssp2, 2))
            .unwrap()
            .shu_osher();
        let l = vec![vec![-10.0]];
        let e = amplification_experiment(&so, &l, 1.0, &[1.0], &[1.0], &FixedResiduals::default());
        assert!(matches!(e, Err(SimError::SpectrumOutsideRegion(_))));
        let skew = vec![vec![1.0, 1.0], vec![0.0, 1.0]];
        let e = amplification_experiment(
            &so,
            &skew,
            0.1,
            &[1.0, 0.0],
            &[1.0, 0.0],
            &FixedResiduals::default(),
        );
        assert_eq!(e.unwrap_err(), SimError::NotNormal);
    }
}
