use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum SimError {
    #[error("non-finite stage value at t = {0}")]
    NonfiniteState(f64),
    #[error("form is not in canonical SSP form: {0}")]
    NotCanonical(String),
    #[error("tau * lambda = {0} lies outside the stability region")]
    SpectrumOutsideRegion(num::complex::Complex64),
    #[error("matrix is not normal")]
    NotNormal,
    #[error("form has no embedded weights")]
    NoEmbedded,
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    #[error("invalid controller setting: {0}")]
    Config(String),
}
