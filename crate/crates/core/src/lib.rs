//! Bulging triangles.
//!
//! A bulging triangle replaces each side `XY` of a base triangle by a circular
//! arc through `X` and `Y` whose center is where the perpendicular bisector of
//! `XY` meets one of the other two sides. The equilateral case is the Reuleaux
//! triangle.
//!
//! Modules:
//!
//! - [`geom`]: points, triangles, angles, classification.
//! - [`construct`]: edge centers, arc parameters, [`BulgingTriangle`].
//! - [`metrics`]: closed-form lengths, area, circumscribed disk, convexity check.
//! - [`theorems`]: triangle inequality, angle/length ordering, isosceles
//!   symmetry, the Pythagorean gap and its threshold angle.
//! - [`oracles`]: polyline lengths, membership, Monte Carlo area, boundary sampling.
//! - [`svg`]: SVG figures.
//! - [`cli`]: the `bulge` command-line tool.

pub mod cli;
pub mod construct;
pub mod error;
pub mod format;
pub mod geom;
pub mod metrics;
pub mod oracles;
pub mod sample;
pub mod svg;
pub mod theorems;

pub use construct::{build, ArcEdge, BulgingTriangle, Convexity, EdgeCenter, HostSide};
pub use error::{Error, Result};
pub use geom::{Edge, Point2, Triangle, TriangleClass, Vertex};
pub use metrics::{measure, MetricsReport};
