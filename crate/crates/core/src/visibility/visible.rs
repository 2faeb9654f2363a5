use crate::exact::{segment_intersection, Intersection, Point, PointLocation, Rational, Segment};
use crate::polygon::SimplePolygon;

use super::VisibilityError;

/// True iff the closed segment `pq` lies in the closed polygon.
///
/// The segment is cut at every point where it meets the boundary; it is
/// contained iff the midpoint of every resulting piece is inside or on the
/// boundary. Grazing an edge or passing through a vertex without leaving
/// the polygon counts as visible.
pub fn visible(poly: &SimplePolygon, p: &Point, q: &Point) -> Result<bool, VisibilityError> {
    for pt in [p, q] {
        if poly.locate(pt) == PointLocation::Outside {
            return Err(VisibilityError::PointOutsidePolygon(Box::new(pt.clone())));
        }
    }
    Ok(segment_in_polygon(poly, p, q))
}

/// [`visible`] without the endpoint checks; both endpoints must be in the
/// closed polygon.
pub(crate) fn segment_in_polygon(poly: &SimplePolygon, p: &Point, q: &Point) -> bool {
    if p == q {
        return true;
    }
    let sight = Segment::new(p.clone(), q.clone());
    let use_x = p.x != q.x;
    let param = |pt: &Point| -> Rational {
        if use_x {
            (&pt.x - &p.x) / (&q.x - &p.x)
        } else {
            (&pt.y - &p.y) / (&q.y - &p.y)
        }
    };
    let mut cuts: Vec<Rational> = Vec::new();
    for e in 0..poly.len() {
        match segment_intersection(&sight, &poly.edge(e)) {
            Intersection::Empty => {}
            Intersection::Point { at, .. } => {
                let t = param(&at);
                if t.is_positive() && t < Rational::one() {
                    cuts.push(t);
                }
            }
            Intersection::Overlap(s) => {
                for end in [&s.a, &s.b] {
                    let t = param(end);
                    if t.is_positive() && t < Rational::one() {
                        cuts.push(t);
                    }
                }
            }
        }
    }
    cuts.push(Rational::zero());
    cuts.push(Rational::one());
    cuts.sort();
    cuts.dedup();
    let half = Rational::new(1, 2);
    cuts.windows(2).all(|w| {
        let mid_t = (&w[0] + &w[1]) * &half;
        poly.locate(&p.lerp(q, &mid_t)) != PointLocation::Outside
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::harness::fixtures;

    fn poly(c: &[(i64, i64)]) -> SimplePolygon {
        SimplePolygon::from_ints(c).unwrap()
    }

    #[test]
    fn convex_all_pairs() {
        let hex = poly(&[(0, 0), (2, 0), (3, 1), (2, 2), (0, 2), (-1, 1)]);
        for a in hex.vertices() {
            for b in hex.vertices() {
                assert!(visible(&hex, a, b).unwrap());
            }
        }
    }

    #[test]
    fn l_shape_notch() {
        let l = poly(&[(0, 0), (2, 0), (2, 1), (1, 1), (1, 2), (0, 2)]);
        // cuts across the missing square
        assert!(!visible(&l, &Point::from_ints(2, 1), &Point::from_ints(1, 2)).unwrap());
        // touches the reflex corner (1,1) without entering the notch
        assert!(visible(&l, &Point::from_ints(2, 0), &Point::from_ints(0, 2)).unwrap());
        assert!(visible(&l, &Point::from_ints(2, 1), &Point::from_ints(0, 1)).unwrap());
        // grazing along an edge
        assert!(visible(&l, &Point::from_ints(2, 1), &Point::from_ints(1, 1)).unwrap());
        assert!(matches!(
            visible(&l, &Point::from_ints(2, 2), &Point::from_ints(0, 0)),
            Err(VisibilityError::PointOutsidePolygon(_))
        ));
    }

    #[test]
    fn nonagon_vertex_pairs() {
        let p = fixtures::paper_nonagon();
        // vertex 0 to vertex 4: frozen from the brute-force oracle in tests/visibility.rs
        assert!(visible(&p, p.vertex(0), p.vertex(4)).unwrap());
        for i in 0..9 {
            for j in 0..9 {
                assert_eq!(
                    visible(&p, p.vertex(i), p.vertex(j)).unwrap(),
                    visible(&p, p.vertex(j), p.vertex(i)).unwrap()
                );
            }
            assert!(visible(&p, p.vertex(i), p.vertex(p.next(i))).unwrap());
        }
    }
}
