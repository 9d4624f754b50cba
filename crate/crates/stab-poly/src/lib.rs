//! Stability polynomial `P(z)`, internal stability polynomials `Q_j(z)`,
//! local defect vectors and the implementation retargeting solver.
//!
//! All derivations run in the polynomial ring by triangular substitution, so a
//! rational method gives exact rational polynomials.

mod defects;
mod error;
mod evaluator;
mod internal;
mod poly;
mod retarget;

pub use defects::{defect_coefficients, defect_expansion, DefectCoefficients};
pub use error::StabError;
pub use evaluator::{FormEvaluator, PointEvaluator};
pub use internal::{
    derive_internal_stability, derive_internal_stability_butcher, InternalStabilitySet,
};
pub use poly::Poly;
pub use retarget::retarget_implementation;
