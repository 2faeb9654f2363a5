//! Arrangement of polygon edges and window segments, cut into triangles.
//!
//! All pairwise intersections are computed exactly and every segment is
//! split at them. The polygon is then sliced by vertical lines through each
//! arrangement vertex. Inside a slab no two pieces cross, so consecutive
//! pieces bound trapezoids; parity of polygon-edge pieces below decides
//! which trapezoids are interior. Each trapezoid is an open convex region
//! missed by every segment, so any visibility status is constant on it.

use std::collections::BTreeMap;

use crate::exact::{segment_intersection, triangle_area, Intersection, Point, Rational, Segment};
use crate::polygon::SimplePolygon;

use super::WindowSegment;

/// A triangular cell with an interior representative point.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cell {
    pub triangle: [Point; 3],
    pub representative: Point,
    /// Index of the trapezoid this triangle was cut from.
    pub region: usize,
}

/// Bottom and top pieces of a trapezoid, each as `(y at left, y at right)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) struct Trapezoid {
    pub slab: usize,
    pub lower: (Rational, Rational),
    pub upper: (Rational, Rational),
    pub cells: std::ops::Range<usize>,
}

#[derive(Clone, Debug)]
pub struct Subdivision {
    polygon: SimplePolygon,
    cells: Vec<Cell>,
    pub(crate) trapezoids: Vec<Trapezoid>,
    vertices: Vec<Point>,
    pieces: Vec<Segment>,
}

impl Subdivision {
    pub fn polygon(&self) -> &SimplePolygon {
        &self.polygon
    }

    pub fn cells(&self) -> &[Cell] {
        &self.cells
    }

    /// Arrangement vertices: segment endpoints and pairwise intersections.
    pub fn vertices(&self) -> &[Point] {
        &self.vertices
    }

    /// Arrangement edges: segments split at every arrangement vertex.
    pub fn pieces(&self) -> &[Segment] {
        &self.pieces
    }

    pub fn total_area(&self) -> Rational {
        self.cells.iter().fold(Rational::zero(), |acc, c| {
            let [a, b, t] = &c.triangle;
            acc + triangle_area(a, b, t)
        })
    }
}

struct Piece {
    lo: Point,
    hi: Point,
    is_edge: bool,
}

fn y_at(lo: &Point, hi: &Point, x: &Rational) -> Rational {
    if x == &lo.x {
        return lo.y.clone();
    }
    if x == &hi.x {
        return hi.y.clone();
    }
    let slope = (&hi.y - &lo.y) / (&hi.x - &lo.x);
    &lo.y + &(&slope * &(x - &lo.x))
}

pub fn build_subdivision(poly: &SimplePolygon, windows: &[WindowSegment]) -> Subdivision {
    // (segment, is polygon edge)
    let mut segs: Vec<(Segment, bool)> = (0..poly.len()).map(|i| (poly.edge(i), true)).collect();
    let mut seen_windows = std::collections::BTreeSet::new();
    for w in windows {
        let key = ordered(&w.segment.a, &w.segment.b);
        if seen_windows.insert(key) {
            segs.push((w.segment.clone(), false));
        }
    }

    let mut on_seg: Vec<Vec<Point>> = segs
        .iter()
        .map(|(s, _)| vec![s.a.clone(), s.b.clone()])
        .collect();
    for i in 0..segs.len() {
        for j in i + 1..segs.len() {
            match segment_intersection(&segs[i].0, &segs[j].0) {
                Intersection::Empty => {}
                Intersection::Point { at, .. } => {
                    on_seg[i].push(at.clone());
                    on_seg[j].push(at);
                }
                Intersection::Overlap(s) => {
                    for p in [s.a, s.b] {
                        on_seg[i].push(p.clone());
                        on_seg[j].push(p);
                    }
                }
            }
        }
    }

    let mut vertex_set = std::collections::BTreeSet::new();
    let mut piece_map: BTreeMap<(Point, Point), bool> = BTreeMap::new();
    for (pts, (_, is_edge)) in on_seg.iter_mut().zip(&segs) {
        // collinear points sort lexicographically along their line
        pts.sort();
        pts.dedup();
        for w in pts.windows(2) {
            let e = piece_map
                .entry((w[0].clone(), w[1].clone()))
                .or_insert(false);
            *e |= *is_edge;
        }
        vertex_set.extend(pts.iter().cloned());
    }
    let pieces: Vec<Piece> = piece_map
        .into_iter()
        .map(|((lo, hi), is_edge)| Piece { lo, hi, is_edge })
        .collect();

    let mut xs: Vec<Rational> = vertex_set.iter().map(|p| p.x.clone()).collect();
    xs.dedup();

    let mut cells = Vec::new();
    let mut trapezoids = Vec::new();
    for slab in 0..xs.len().saturating_sub(1) {
        let (xl, xr) = (&xs[slab], &xs[slab + 1]);
        let mut active: Vec<(Rational, Rational, bool)> = pieces
            .iter()
            .filter(|p| &p.lo.x <= xl && &p.hi.x >= xr && p.lo.x != p.hi.x)
            .map(|p| (y_at(&p.lo, &p.hi, xl), y_at(&p.lo, &p.hi, xr), p.is_edge))
            .collect();
        active.sort_by(|a, b| (&a.0, &a.1).cmp(&(&b.0, &b.1)));
        active.dedup_by(|next, prev| {
            if next.0 == prev.0 && next.1 == prev.1 {
                prev.2 |= next.2;
                true
            } else {
                false
            }
        });
        let mut inside = false;
        for k in 0..active.len().saturating_sub(1) {
            if active[k].2 {
                inside = !inside;
            }
            if !inside {
                continue;
            }
            let (lower, upper) = (&active[k], &active[k + 1]);
            let bl = Point::new(xl.clone(), lower.0.clone());
            let br = Point::new(xr.clone(), lower.1.clone());
            let tr = Point::new(xr.clone(), upper.1.clone());
            let tl = Point::new(xl.clone(), upper.0.clone());
            let region = trapezoids.len();
            let start = cells.len();
            let mut push = |a: &Point, b: &Point, c: &Point| {
                cells.push(Cell {
                    representative: Point::centroid(a, b, c),
                    triangle: [a.clone(), b.clone(), c.clone()],
                    region,
                });
            };
            if bl == tl {
                push(&bl, &br, &tr);
            } else if br == tr {
                push(&bl, &br, &tl);
            } else {
                push(&bl, &br, &tr);
                push(&bl, &tr, &tl);
            }
            trapezoids.push(Trapezoid {
                slab,
                lower: (lower.0.clone(), lower.1.clone()),
                upper: (upper.0.clone(), upper.1.clone()),
                cells: start..cells.len(),
            });
        }
    }

    Subdivision {
        polygon: poly.clone(),
        cells,
        trapezoids,
        vertices: vertex_set.into_iter().collect(),
        pieces: pieces
            .into_iter()
            .map(|p| Segment::new(p.lo, p.hi))
            .collect(),
    }
}

fn ordered(a: &Point, b: &Point) -> (Point, Point) {
    if a <= b {
        (a.clone(), b.clone())
    } else {
        (b.clone(), a.clone())
    }
}
