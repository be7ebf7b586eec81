//! Triangle geometry kernel over exact rationals and `f64`.
//!
//! The crate computes side-length metrics, barycentric and Cartesian
//! triangle centers, and the tangency of the nine-point circle with the
//! incircle and the three excircles. Over [`Rational`] every tangency
//! residual is an exact zero; over `f64` it is checked against a
//! [`ToleranceProfile`]. The [`harness`] module holds a seeded triangle
//! generator and an independent Cartesian construction used to cross-check
//! every identity.

pub mod centers;
pub mod error;
pub mod feuerbach;
pub mod harness;
pub mod numeric;
pub mod triangle;

pub use centers::{compute_centers, CenterSet};
pub use error::{Error, Result};
pub use feuerbach::{feuerbach_report, CircleKind, FeuerbachReport, TangencyKind, TangencyReport};
pub use numeric::{approx_eq, make_rational, Rational, Scalar, ToleranceProfile};
pub use triangle::{
    metrics, Barycentric, Point2, SideLengths, SquaredSides, Triangle, TriangleMetrics, Vertex,
    VertexPair,
};
