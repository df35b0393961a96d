use thiserror::Error;

/// Errors raised by construction, measurement and the theorem checkers.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("vertex coordinates must be finite")]
    NonFinitePoint,

    #[error("degenerate triangle: |cross| = {cross:e} is at most {threshold:e}")]
    DegenerateTriangle { cross: f64, threshold: f64 },

    #[error("invalid endpoint angles ({angle_x}, {angle_y}): both must be positive with sum below pi")]
    InvalidAngles { angle_x: f64, angle_y: f64 },

    #[error("operation requires a convex bulging triangle (base triangle is obtuse)")]
    ConcaveUnsupported,

    #[error("operation requires a right-angled base triangle")]
    NotRightAngled,

    #[error("base triangle has no pair of equal angles")]
    NotIsosceles,

    #[error("bad legs ({a}, {b}): need finite 0 < a <= b")]
    BadLegs { a: f64, b: f64 },

    #[error("convexity sampling is inconclusive: minimum turn {min_turn:e} lies in the tolerance band")]
    Inconclusive { min_turn: f64 },

    #[error("gap paths disagree: parabola form {parabola} vs edge form {edges}")]
    InconsistentPaths { parabola: f64, edges: f64 },

    #[error("invalid sample configuration: {0}")]
    InvalidSampling(&'static str),
}

pub type Result<T> = std::result::Result<T, Error>;
