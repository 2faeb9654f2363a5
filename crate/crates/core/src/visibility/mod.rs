//! Exact visibility and vertex-guard coverage.

mod coverage;
mod oracle;
mod subdivision;
mod visible;
mod windows;

pub use coverage::{coverage, guard_subdivision, is_covered, CoverageReport};
pub use oracle::{compare_with_report, grid_oracle, OracleComparison};
pub use subdivision::{build_subdivision, Cell, Subdivision};
pub use visible::visible;
pub use windows::{window_segments, WindowSegment};

use crate::exact::Point;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum VisibilityError {
    #[error("point {0} lies outside the polygon")]
    PointOutsidePolygon(Box<Point>),
    #[error("guard index {0} out of range")]
    InvalidGuardIndex(usize),
    #[error("guard set is empty")]
    EmptyGuardSet,
}
