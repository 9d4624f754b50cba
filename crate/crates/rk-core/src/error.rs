use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum CoreError {
    #[error("shape mismatch: {0}")]
    Shape(String),
    #[error("invalid JSON form: {0}")]
    Json(String),
    #[error("invalid number {0:?}")]
    Number(String),
}
