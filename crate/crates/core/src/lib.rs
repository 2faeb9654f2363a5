//! Exact-arithmetic toolkit for vertex-guard placement in polygonal art
//! galleries.
//!
//! Every predicate is decided over rationals, so a coverage verdict is a
//! fact about the polygon rather than about floating-point rounding.
//!
//! * [`exact`]: rationals, points, orientation, segment intersection.
//! * [`polygon`]: validation, ears, triangulation, weak dual, colorings.
//! * [`visibility`]: point visibility, window segments, exact coverage.
//! * [`strategies`]: every-third-vertex, Fisk, minimum vertex guards.
//! * [`harness`]: fixtures, random polygons, counterexample search, claim checks.
//! * [`io`]: polygon file format and SVG rendering.

pub mod exact;
pub mod harness;
pub mod io;
mod par;
pub mod polygon;
pub mod strategies;
pub mod visibility;

pub use exact::{Point, PointLocation, Rational, Segment};
pub use polygon::{SimplePolygon, Triangulation};
