use std::thread;

use rk_core::ShuOsherForm;

use crate::error::SimError;
use crate::perturb::{PerturbationPolicy, Perturber};
use crate::problem::IvpProblem;
use crate::step::Stepper;

/// Elementary integral controller on the embedded error estimate.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct StepControllerConfig {
    pub abs_tol: f64,
    pub rel_tol: f64,
    pub safety: f64,
    pub min_scale: f64,
    pub max_scale: f64,
    /// Consecutive rejections after which the run is declared failed.
    pub max_rejections: usize,
    /// Hard cap on attempted steps.
    pub max_steps: usize,
    /// Starting step; chosen automatically when `None`.
    pub initial_step: Option<f64>,
    pub log_steps: bool,
}

impl StepControllerConfig {
    pub fn with_tol(tol: f64) -> Self {
        StepControllerConfig {
            abs_tol: tol,
            rel_tol: tol,
            safety: 0.9,
            min_scale: 0.2,
            max_scale: 5.0,
            max_rejections: 50,
            max_steps: 5_000_000,
            initial_step: None,
            log_steps: false,
        }
    }

    fn check(&self) -> Result<(), SimError> {
        let ok = self.abs_tol >= 0.0
            && self.rel_tol >= 0.0
            && self.abs_tol + self.rel_tol > 0.0
            && self.safety > 0.0
            && self.safety < 1.0
            && self.min_scale > 0.0
            && self.min_scale < 1.0
            && self.max_scale > 1.0
            && self.max_rejections > 0;
        if ok {
            Ok(())
        } else {
            Err(SimError::Config(format!("{self:?}")))
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct StepLog {
    pub t: f64,
    pub tau: f64,
    pub accepted: bool,
    pub err: f64,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Failure {
    /// Too many consecutive rejections at time `t`.
    Controller {
        t: f64,
    },
    StepUnderflow {
        t: f64,
    },
    StepLimit {
        t: f64,
    },
}

#[derive(Debug, Clone, PartialEq)]
pub struct RunRecord {
    pub log: Vec<StepLog>,
    pub t_final: f64,
    pub u_final: Vec<f64>,
    pub accepted: usize,
    pub rejected: usize,
    pub failure: Option<Failure>,
    /// Euclidean distance to the reference at `t_end`, for completed runs.
    pub global_error: Option<f64>,
}

impl RunRecord {
    pub fn failed(&self) -> bool {
        self.failure.is_some()
    }

    pub fn steps(&self) -> usize {
        self.accepted + self.rejected
    }
}

fn error_norm(u: &[f64], new: &[f64], hat: &[f64], cfg: &StepControllerConfig) -> f64 {
    let sum: f64 = (0..u.len())
        .map(|k| {
            let sc = cfg.abs_tol + cfg.rel_tol * u[k].abs().max(new[k].abs());
            ((new[k] - hat[k]) / sc).powi(2)
        })
        .sum();
    (sum / u.len() as f64).sqrt()
}

fn scaled_norm(x: &[f64], u: &[f64], cfg: &StepControllerConfig) -> f64 {
    let sum: f64 = x
        .iter()
        .zip(u)
        .map(|(v, w)| (v / (cfg.abs_tol + cfg.rel_tol * w.abs())).powi(2))
        .sum();
    (sum / x.len() as f64).sqrt()
}

/// Starting step from the size of `U0`, `F(U0)` and a finite-difference
/// estimate of the second derivative.
fn initial_step(problem: &IvpProblem, q: u32, cfg: &StepControllerConfig) -> f64 {
    let m = problem.dim();
    let (t0, u0) = (problem.t0, &problem.u0);
    let mut f0 = vec![0.0; m];
    problem.rhs(t0, u0, &mut f0);
    let (d0, d1) = (scaled_norm(u0, u0, cfg), scaled_norm(&f0, u0, cfg));
    let h0 = if d0 < 1e-5 || d1 < 1e-5 {
        1e-6
    } else {
        0.01 * d0 / d1
    };
    let u1: Vec<f64> = u0.iter().zip(&f0).map(|(u, f)| u + h0 * f).collect();
    let mut f1 = vec![0.0; m];
    problem.rhs(t0 + h0, &u1, &mut f1);
    let df: Vec<f64> = f1.iter().zip(&f0).map(|(a, b)| a - b).collect();
    let d2 = scaled_norm(&df, u0, cfg) / h0;
    let h1 = if d1.max(d2) <= 1e-15 {
        (h0 * 1e-3).max(1e-6)
    } else {
        (0.01 / d1.max(d2)).powf(1.0 / (q as f64 + 1.0))
    };
    (100.0 * h0).min(h1).min(problem.t_end - t0)
}

/// Integrate `problem` with the embedded pair in `so`.
///
/// Controller failures are recorded in the returned record; errors are
/// reserved for unusable input.
pub fn integrate_adaptive(
    so: &ShuOsherForm<f64>,
    problem: &IvpProblem,
    cfg: &StepControllerConfig,
    policy: PerturbationPolicy,
) -> Result<RunRecord, SimError> {
    cfg.check()?;
    let stepper = Stepper::new(so);
    let q = stepper
        .order()
        .min(stepper.embedded_order().ok_or(SimError::NoEmbedded)?);
    let expo = -1.0 / (q as f64 + 1.0);
    let mut source = Perturber::new(policy);
    let mut tau = cfg
        .initial_step
        .unwrap_or_else(|| initial_step(problem, q, cfg));
    let (mut t, mut u) = (problem.t0, problem.u0.clone());
    let mut rec = RunRecord {
        log: Vec::new(),
        t_final: t,
        u_final: Vec::new(),
        accepted: 0,
        rejected: 0,
        failure: None,
        global_error: None,
    };
    let mut streak = 0;
    while t < problem.t_end {
        if rec.steps() >= cfg.max_steps {
            rec.failure = Some(Failure::StepLimit { t });
            break;
        }
        let remaining = problem.t_end - t;
        let last = tau >= remaining * (1.0 - 1e-12);
        if last {
            tau = remaining;
        }
        if tau <= 16.0 * f64::EPSILON * t.abs().max(1.0) {
            rec.failure = Some(Failure::StepUnderflow { t });
            break;
        }
        let (err, next) = match stepper.step(problem, t, &u, tau, &mut source) {
            Ok(out) => {
                let hat = out.u_hat.expect("embedded row present");
                (error_norm(&u, &out.u, &hat, cfg), Some(out.u))
            }
            Err(SimError::NonfiniteState(_)) => (f64::INFINITY, None),
            Err(e) => return Err(e),
        };
        let accepted = err <= 1.0;
        if cfg.log_steps {
            rec.log.push(StepLog {
                t,
                tau,
                accepted,
                err,
            });
        }
        let mut scale = if err == 0.0 {
            cfg.max_scale
        } else {
            cfg.safety * err.powf(expo)
        };
        scale = scale.clamp(cfg.min_scale, cfg.max_scale);
        if accepted {
            t = if last { problem.t_end } else { t + tau };
            u = next.expect("finite step");
            rec.accepted += 1;
            streak = 0;
        } else {
            rec.rejected += 1;
            streak += 1;
            scale = scale.min(1.0);
            if streak >= cfg.max_rejections {
                rec.failure = Some(Failure::Controller { t });
                break;
            }
        }
        tau *= scale;
    }
    rec.t_final = t;
    if rec.failure.is_none() {
        rec.global_error = problem.reference(t).map(|r| {
            r.iter()
                .zip(&u)
                .map(|(a, b)| (a - b) * (a - b))
                .sum::<f64>()
                .sqrt()
        });
    }
    rec.u_final = u;
    Ok(rec)
}

/// One row of a tolerance sweep.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SweepRow {
    pub tol: f64,
    pub steps: usize,
    pub rejections: usize,
    pub global_error: Option<f64>,
    pub failed: bool,
}

/// Runs one integration per tolerance, concurrently. Run `i` uses seed
/// `policy.seed + i`, so results do not depend on scheduling.
pub fn sweep(
    so: &ShuOsherForm<f64>,
    problem: &IvpProblem,
    tols: &[f64],
    policy: PerturbationPolicy,
) -> Result<Vec<SweepRow>, SimError> {
    thread::scope(|scope| {
        let handles: Vec<_> = tols
            .iter()
            .enumerate()
            .map(|(i, &tol)| {
                let policy = PerturbationPolicy {
                    seed: policy.seed.wrapping_add(i as u64),
                    ..policy
                };
                scope.spawn(move || {
                    integrate_adaptive(so, problem, &StepControllerConfig::with_tol(tol), policy)
                        .map(|r| SweepRow {
                            tol,
                            steps: r.steps(),
                            rejections: r.rejected,
                            global_error: r.global_error,
                            failed: r.failed(),
                        })
                })
            })
            .collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("sweep worker panicked"))
            .collect()
    })
}
