//! Constructors for every method family analysed by this workspace.
//!
//! Family members are built in exact rationals in their natural Shu-Osher
//! form; the Butcher implementation is derived on request.

mod classic;
mod closed_form;
mod error;
mod extrapolation;
mod method;
mod spec;
mod ssp;

pub use classic::classic_tableau;
pub use closed_form::{em_auxiliary, internal_stability_closed_form, taylor_polynomial};
pub use error::CatalogError;
pub use extrapolation::{build_ee_extrapolation, build_em_extrapolation, ee_weights, em_weights};
pub use method::{build, Coefficients, Method};
pub use spec::{Classic, Family, FormPreference, MethodSpec};
pub use ssp::{build_ssp2, build_ssp3, is_canonical_ssp, ssp3_indices};
