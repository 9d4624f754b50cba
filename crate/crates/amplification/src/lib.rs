//! Maximum internal amplification factors
//! `M(Ω) = max_{j≥2} max_{z∈Ω} |Q_j(z)|` for `Ω = S`, `S ∩ {Re z ≤ 0}` and `{0}`.
//!
//! Reports also carry `M` over the component of `S` that contains the origin,
//! which is the part a step size controller can reach from small steps.
//!
//! The first stage is excluded: `Y_1 = U_n` is never computed, so it carries
//! no roundoff of its own.

mod bounds;
mod error;
mod factor;
mod ssp3;
mod zero;

pub use bounds::{verify_bounds, BoundCheck};
pub use error::AmpError;
pub use factor::{
    amplification_at_zero, amplification_factor, analyze, method_region, Amplification,
    AmplificationReport,
};
pub use ssp3::{mu_minus, ssp3_analytic, Ssp3Analysis};
pub use zero::{amplification_closed_form_ee_zero, amplification_closed_form_em_zero};
