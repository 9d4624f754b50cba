//! Perturbed Runge-Kutta integration.
//!
//! Stages follow the Shu-Osher recurrence
//! `Y_i = v_i U + Σ_j (α_ij Y_j + τ β_ij F(Y_j)) + r_i`, with residuals `r_i`
//! injected from a seeded source to model roundoff. An adaptive driver with
//! an embedded error estimate runs the Kepler orbit experiments.

mod control;
mod error;
mod experiments;
mod perturb;
mod problem;
mod step;

pub use control::{
    integrate_adaptive, sweep, Failure, RunRecord, StepControllerConfig, StepLog, SweepRow,
};
pub use error::SimError;
pub use experiments::{
    amplification_experiment, contractivity_experiment, AmplificationCheck, ContractivityCheck,
};
pub use perturb::{
    FixedResiduals, PerturbationMode, PerturbationPolicy, Perturber, ResidualSource, ROUNDOFF,
};
pub use problem::{kepler_d2, kepler_d2_exact, IvpProblem};
pub use step::{step_shu_osher, StepOutput, Stepper};
