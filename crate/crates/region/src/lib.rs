//! Absolute stability regions `S = {z : |P(z)| ≤ 1}`.
//!
//! The boundary is the root locus of `P(z) = e^{iθ}` for `θ ∈ [0, 2π)`. Each
//! root is followed in `θ` by continuation; at `θ = 2π` the roots are permuted,
//! and the cycles of that permutation are the closed boundary curves. Every
//! stored point is a polished root, so `|P| = 1` holds to rounding, and
//! disconnected regions come out as separate curves.
//!
//! A region may be traced in an affine variable `w` with `z = c + h·w`, which
//! keeps the monomial coefficients of many-stage SSP polynomials tame.

mod axis;
mod dd;
mod error;
mod roots;
mod search;
mod trace;

pub use axis::{AxisScan, AXIS_SAMPLES};
pub use error::RegionError;
pub use roots::{aberth, fujiwara_bound};
pub use search::Candidate;
pub use trace::{
    trace_region, trace_region_scaled, Polyline, StabilityRegion, DEFAULT_RESOLUTION, NOISE_LIMIT,
};
