//! Simple polygons: validation, ears, ear-clipping triangulation, the weak
//! dual tree, and vertex colorings.

mod coloring;
mod ears;
mod simple;
mod triangulation;

pub use coloring::{cyclic_coloring, fisk_coloring, Color, Coloring, ColoringKind};
pub use ears::{
    ear_triangle, ears, is_ear, non_overlapping, remove_ear, triangle_interiors_disjoint,
};
pub use simple::{point_in_polygon, polygon_area, validate, SimplePolygon, Winding};
pub use triangulation::{dual_leaves, triangulate, Tri, Triangulation};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum PolygonError {
    #[error("a polygon needs at least 3 vertices, got {0}")]
    TooFewVertices(usize),
    #[error("vertices {0} and {1} coincide")]
    DuplicateVertex(usize, usize),
    #[error("vertex {0} is collinear with its neighbours")]
    CollinearRun(usize),
    #[error("edges {0} and {1} intersect")]
    SelfIntersection(usize, usize),
    #[error("vertex index {0} out of range")]
    IndexOutOfRange(usize),
    #[error("vertex {0} is not an ear")]
    NotAnEar(usize),
    #[error("removing an ear from a triangle leaves a segment")]
    WouldDegenerate,
    #[error("cyclic 3-coloring needs 3 | n, got n = {0}")]
    NotDivisibleBy3(usize),
    #[error("invalid triangulation: {0}")]
    InvalidTriangulation(String),
}
