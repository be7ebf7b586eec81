use thiserror::Error;

/// Errors raised by the geometry kernel.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("zero denominator")]
    ZeroDenominator,
    #[error("square root of a negative value")]
    NegativeSqrt,
    #[error("value is not a perfect square")]
    NotPerfectSquare,
    #[error("non-finite input: {0}")]
    NonFinite(String),
    #[error("invalid tolerance profile: rel_eps and abs_eps must both be positive")]
    InvalidTolerance,
    #[error("cannot parse number {0:?}")]
    Parse(String),
    #[error("side {0} must be positive")]
    NonPositiveSide(char),
    /// Carries the violated (or tight) triangle inequality, e.g. `degenerate: a + b = c`.
    #[error("{0}")]
    TriangleInequality(String),
    #[error("vertices are collinear")]
    Collinear,
    #[error("barycentric coordinates must sum to 1 (got {0})")]
    BarycentricSum(String),
    #[error("distances {bx} + {cx} do not sum to side length a = {a}")]
    SideSplit { bx: String, cx: String, a: String },
    #[error("distance must be nonnegative")]
    NegativeDistance,
    #[error("circle radius must be positive")]
    NonPositiveRadius,
    #[error("radius product is irrational; exact tangency classification needs a rational r1*r2")]
    IrrationalRadiusProduct,
    #[error("embedding does not realize the side lengths: {0}")]
    EmbeddingMismatch(String),
    #[error("invalid fuzz profile: {0}")]
    InvalidProfile(String),
}

pub type Result<T> = std::result::Result<T, Error>;
