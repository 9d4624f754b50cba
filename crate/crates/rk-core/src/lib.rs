//! Explicit Runge-Kutta methods in Butcher and Shu-Osher form.
//!
//! Both forms are generic over a [`Scalar`] so catalog methods can be built
//! and converted in exact rationals, then lowered to `f64` for numerics.

mod butcher;
mod convert;
mod error;
mod json;
mod matrix;
mod scalar;
mod shu_osher;
mod validate;

pub use butcher::ButcherTableau;
pub use convert::{butcher_to_shu_osher, residual_butcher_from_shu_osher, shu_osher_to_butcher};
pub use error::CoreError;
pub use json::{FromJson, ToJson};
pub use matrix::Mat;
pub use scalar::{Rational, Scalar};
pub use shu_osher::{EmbeddedRow, ShuOsherForm};
pub use validate::{validate_butcher, validate_shu_osher, Violation, VALIDATION_TOL};
