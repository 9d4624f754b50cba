use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum StabError {
    /// Later Butcher-form polynomials cannot reproduce the requested target.
    #[error("span failure at stage {stage}: target is not reachable from later stage polynomials")]
    SpanFailure { stage: usize },
    #[error("degree mismatch at stage {stage}: {detail}")]
    DegreeMismatch { stage: usize, detail: String },
    #[error("expected {expected} target polynomials, got {got}")]
    TargetCount { expected: usize, got: usize },
}
