use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum CatalogError {
    #[error("midpoint extrapolation needs an even order, got {0}")]
    OddOrder(u32),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("closed-form internal stability is not available for {0}")]
    UnsupportedFamily(String),
    #[error("unknown method {0:?}")]
    UnknownMethod(String),
}
