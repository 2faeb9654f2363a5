use serde::Serialize;

use crate::exact::{cross, Point, PointLocation, Rational, Segment};
use crate::polygon::SimplePolygon;

use super::visible::segment_in_polygon;

/// Part of a sight ray from `guard` that continues past `pivot` inside the
/// polygon, up to the first boundary point beyond the pivot.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct WindowSegment {
    pub guard: usize,
    pub pivot: usize,
    #[serde(serialize_with = "crate::io::ser_segment")]
    pub segment: Segment,
}

/// Windows of `guard`: for every vertex it sees, the ray through that vertex
/// is extended to the first boundary point strictly beyond it, and kept if
/// that extension runs through the interior. Only reflex pivots can produce
/// one, but every visible vertex is tried.
pub fn window_segments(poly: &SimplePolygon, guard: usize) -> Vec<WindowSegment> {
    let g = poly.vertex(guard);
    let mut out = Vec::new();
    for r in 0..poly.len() {
        if r == guard {
            continue;
        }
        let pr = poly.vertex(r);
        if !segment_in_polygon(poly, g, pr) {
            continue;
        }
        let Some(hit) = first_hit_beyond(poly, g, pr) else {
            continue;
        };
        let seg = Segment::new(pr.clone(), hit);
        if poly.locate(&seg.midpoint()) == PointLocation::Inside {
            out.push(WindowSegment {
                guard,
                pivot: r,
                segment: seg,
            });
        }
    }
    out
}

/// First boundary point on the ray `g + t (r - g)` with `t > 1`.
fn first_hit_beyond(poly: &SimplePolygon, g: &Point, r: &Point) -> Option<Point> {
    let dx = &r.x - &g.x;
    let dy = &r.y - &g.y;
    let one = Rational::one();
    let mut best: Option<Rational> = None;
    let mut offer = |t: Rational| {
        if t > one && best.as_ref().is_none_or(|b| &t < b) {
            best = Some(t);
        }
    };
    let param = |p: &Point| -> Rational {
        if !dx.is_zero() {
            (&p.x - &g.x) / &dx
        } else {
            (&p.y - &g.y) / &dy
        }
    };
    for (a, b) in poly.edges() {
        let ex = &b.x - &a.x;
        let ey = &b.y - &a.y;
        let denom = &(&dx * &ey) - &(&dy * &ex);
        if denom.is_zero() {
            if cross(g, r, a).is_zero() {
                // edge lies on the ray's line
                offer(param(a));
                offer(param(b));
            }
            continue;
        }
        let ax = &a.x - &g.x;
        let ay = &a.y - &g.y;
        let t = (&(&ax * &ey) - &(&ay * &ex)) / &denom;
        let s = (&(&ax * &dy) - &(&ay * &dx)) / &denom;
        if !s.is_negative() && s <= one {
            offer(t);
        }
    }
    best.map(|t| g.lerp(r, &t))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::harness::fixtures;

    #[test]
    fn convex_has_none() {
        let hex =
            SimplePolygon::from_ints(&[(0, 0), (2, 0), (3, 1), (2, 2), (0, 2), (-1, 1)]).unwrap();
        for g in 0..6 {
            assert!(window_segments(&hex, g).is_empty());
        }
    }

    #[test]
    fn l_shape_single_window() {
        let l =
            SimplePolygon::from_ints(&[(0, 0), (2, 0), (2, 1), (1, 1), (1, 2), (0, 2)]).unwrap();
        let w = window_segments(&l, 1);
        assert_eq!(w.len(), 1);
        assert_eq!(w[0].pivot, 3);
        // ray (2,0) -> (1,1) continues to (0,2), a vertex
        assert_eq!(
            w[0].segment,
            Segment::new(Point::from_ints(1, 1), Point::from_ints(0, 2))
        );
    }

    #[test]
    fn windows_are_inside_and_collinear() {
        let p = fixtures::paper_nonagon();
        for g in 0..p.len() {
            for w in window_segments(&p, g) {
                assert!(p.is_reflex(w.pivot));
                assert!(cross(p.vertex(g), &w.segment.a, &w.segment.b).is_zero());
                assert!(segment_in_polygon(&p, &w.segment.a, &w.segment.b));
                assert_ne!(p.locate(&w.segment.b), PointLocation::Inside);
            }
        }
    }

    #[test]
    fn nonagon_guard_zero_count() {
        // regression value from the first run checked against the invariants above
        assert_eq!(window_segments(&fixtures::paper_nonagon(), 0).len(), 2);
    }
}
