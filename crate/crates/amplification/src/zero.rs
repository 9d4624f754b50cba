//! Closed forms of `M({0})` for the extrapolation families, in exact rationals.

use methods_catalog::{ee_weights, em_weights, CatalogError};
use num::Signed;
use rk_core::Rational;

fn max_abs(w: Vec<Rational>) -> Rational {
    w.into_iter()
        .map(|x| x.abs())
        .max()
        .expect("at least one weight")
}

/// `max_m m^p / ((p-m)! m!)`, the largest extrapolation weight in modulus.
pub fn amplification_closed_form_ee_zero(p: u32) -> Rational {
    max_abs(ee_weights(p))
}

/// `max_m 2m^{2r} / ((r-m)!(r+m)!)` with `r = p/2`.
pub fn amplification_closed_form_em_zero(p: u32) -> Result<Rational, CatalogError> {
    Ok(max_abs(em_weights(p)?))
}
