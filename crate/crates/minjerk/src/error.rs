use thiserror::Error;

/// Rejections raised while validating motion specifications and sampling requests.
#[derive(Debug, Clone, Copy, PartialEq, Error)]
pub enum ValidationError {
    #[error("movement duration must be positive and finite, got {duration}")]
    NonPositiveDuration { duration: f64 },
    #[error("start and end coincide; the segment is degenerate")]
    DegenerateSegment,
    #[error("coordinates must be finite (no NaN or infinity)")]
    NonFiniteInput,
    #[error("via point coincides with the start or end point")]
    ViaCoincidesWithEndpoint,
    #[error("at least 2 samples are required, got {n}")]
    InvalidSampleCount { n: usize },
}

/// Failures of the via-passage-time solver.
#[derive(Debug, Clone, Copy, PartialEq, Error)]
pub enum SolveError {
    #[error("the polynomial is identically zero")]
    ZeroPolynomial,
    #[error("the via-passage polynomial degenerated to zero")]
    DegeneratePolynomial,
    #[error("no acceptable via-passage time in (0, 1)")]
    NoAcceptableRoot,
    #[error("via-passage time {tau1} is too close to a boundary; constants are ill-conditioned")]
    IllConditioned { tau1: f64 },
}
