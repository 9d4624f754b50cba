use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum RegionError {
    #[error("stability polynomial is constant")]
    DegenerateP,
    #[error("P(0) = {0}, expected 1")]
    Inconsistent(f64),
    #[error("resolution {0} is below the minimum of 64")]
    Resolution(usize),
    #[error("no boundary curve can be evaluated above rounding noise")]
    Unresolvable,
}
