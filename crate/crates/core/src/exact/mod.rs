//! Exact rational arithmetic and the geometric predicates built on it.

mod geom;
mod rational;

pub use geom::{
    area, cross, in_closed_triangle, in_open_triangle, locate_point, on_segment, orientation,
    segment_intersection, signed_area2, triangle_area, Intersection, Orientation, Point,
    PointLocation, Segment,
};
pub use rational::{ParseRationalError, Rational};
