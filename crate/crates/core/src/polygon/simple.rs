use serde::{Deserialize, Serialize};

use crate::exact::{
    area, locate_point, orientation, segment_intersection, signed_area2, Intersection, Orientation,
    Point, PointLocation, Rational, Segment,
};

use super::PolygonError;

/// Orientation of a vertex cycle.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub enum Winding {
    Clockwise,
    CounterClockwise,
}

/// A validated simple polygon.
///
/// Vertex order is kept exactly as supplied, so index `i` always names the
/// i-th input vertex. The orientation is recorded rather than normalized.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct SimplePolygon {
    vertices: Vec<Point>,
    winding: Winding,
}

impl SimplePolygon {
    /// Checks the vertex list and wraps it. Errors name the offending indices.
    pub fn new(vertices: Vec<Point>) -> Result<Self, PolygonError> {
        let n = vertices.len();
        if n < 3 {
            return Err(PolygonError::TooFewVertices(n));
        }
        for i in 0..n {
            for j in i + 1..n {
                if vertices[i] == vertices[j] {
                    return Err(PolygonError::DuplicateVertex(i, j));
                }
            }
        }
        for i in 0..n {
            let prev = &vertices[(i + n - 1) % n];
            let next = &vertices[(i + 1) % n];
            if orientation(prev, &vertices[i], next) == Orientation::Collinear {
                return Err(PolygonError::CollinearRun(i));
            }
        }
        let edge = |i: usize| Segment::new(vertices[i].clone(), vertices[(i + 1) % n].clone());
        for i in 0..n {
            let ei = edge(i);
            for j in i + 1..n {
                let adjacent = j == i + 1 || (i == 0 && j == n - 1);
                if adjacent {
                    // no collinear runs, so adjacent edges can only share their vertex
                    continue;
                }
                if segment_intersection(&ei, &edge(j)) != Intersection::Empty {
                    return Err(PolygonError::SelfIntersection(i, j));
                }
            }
        }
        let winding = if signed_area2(&vertices).is_positive() {
            Winding::CounterClockwise
        } else {
            Winding::Clockwise
        };
        Ok(SimplePolygon { vertices, winding })
    }

    pub fn from_ints(coords: &[(i64, i64)]) -> Result<Self, PolygonError> {
        Self::new(
            coords
                .iter()
                .map(|&(x, y)| Point::from_ints(x, y))
                .collect(),
        )
    }

    pub fn vertices(&self) -> &[Point] {
        &self.vertices
    }

    pub fn into_vertices(self) -> Vec<Point> {
        self.vertices
    }

    pub fn vertex(&self, i: usize) -> &Point {
        &self.vertices[i]
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn winding(&self) -> Winding {
        self.winding
    }

    pub fn is_ccw(&self) -> bool {
        self.winding == Winding::CounterClockwise
    }

    /// Turn direction of a convex corner for this winding.
    pub fn convex_turn(&self) -> Orientation {
        match self.winding {
            Winding::CounterClockwise => Orientation::Left,
            Winding::Clockwise => Orientation::Right,
        }
    }

    pub fn prev(&self, i: usize) -> usize {
        (i + self.len() - 1) % self.len()
    }

    pub fn next(&self, i: usize) -> usize {
        (i + 1) % self.len()
    }

    /// Edge `i` runs from vertex `i` to vertex `i + 1`.
    pub fn edge(&self, i: usize) -> Segment {
        Segment::new(
            self.vertices[i].clone(),
            self.vertices[self.next(i)].clone(),
        )
    }

    pub fn edges(&self) -> impl Iterator<Item = (&Point, &Point)> + '_ {
        let n = self.len();
        (0..n).map(move |i| (&self.vertices[i], &self.vertices[(i + 1) % n]))
    }

    pub fn is_reflex(&self, i: usize) -> bool {
        let turn = orientation(
            &self.vertices[self.prev(i)],
            &self.vertices[i],
            &self.vertices[self.next(i)],
        );
        turn == self.convex_turn().reversed()
    }

    pub fn locate(&self, q: &Point) -> PointLocation {
        locate_point(q, &self.vertices)
    }

    pub fn area(&self) -> Rational {
        area(&self.vertices)
    }

    /// Cyclic distance between two vertex indices.
    pub fn cyclic_distance(&self, i: usize, j: usize) -> usize {
        let n = self.len();
        let d = (i + n - j % n) % n;
        d.min(n - d)
    }

    /// Bounding box as `(min, max)` corners.
    pub fn bounds(&self) -> (Point, Point) {
        let mut lo = self.vertices[0].clone();
        let mut hi = self.vertices[0].clone();
        for v in &self.vertices[1..] {
            if v.x < lo.x {
                lo.x = v.x.clone();
            }
            if v.y < lo.y {
                lo.y = v.y.clone();
            }
            if v.x > hi.x {
                hi.x = v.x.clone();
            }
            if v.y > hi.y {
                hi.y = v.y.clone();
            }
        }
        (lo, hi)
    }

    pub(crate) fn check_index(&self, i: usize) -> Result<(), PolygonError> {
        if i < self.len() {
            Ok(())
        } else {
            Err(PolygonError::IndexOutOfRange(i))
        }
    }
}

/// Classifies `q` against the closed polygon.
pub fn point_in_polygon(q: &Point, poly: &SimplePolygon) -> PointLocation {
    poly.locate(q)
}

/// Exact unsigned area.
pub fn polygon_area(poly: &SimplePolygon) -> Rational {
    poly.area()
}

/// Free-function form of [`SimplePolygon::new`].
pub fn validate(vertices: Vec<Point>) -> Result<SimplePolygon, PolygonError> {
    SimplePolygon::new(vertices)
}
