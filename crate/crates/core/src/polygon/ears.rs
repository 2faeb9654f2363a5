use crate::exact::{in_closed_triangle, orientation, Orientation, Point};

use super::{PolygonError, SimplePolygon};

/// Ear test on a sub-ring of vertex indices. `turn` is the convex turn
/// direction of the ring. The tip must be a strictly convex corner and the
/// closed ear triangle must contain no other ring vertex; together these put
/// the open diagonal in the interior.
pub(crate) fn ring_is_ear(points: &[Point], ring: &[usize], k: usize, turn: Orientation) -> bool {
    let m = ring.len();
    if m < 4 {
        return m == 3;
    }
    let (a, b, c) = (ring[(k + m - 1) % m], ring[k], ring[(k + 1) % m]);
    let (pa, pb, pc) = (&points[a], &points[b], &points[c]);
    if orientation(pa, pb, pc) != turn {
        return false;
    }
    ring.iter()
        .filter(|&&v| v != a && v != b && v != c)
        .all(|&v| !in_closed_triangle(pa, pb, pc, &points[v]))
}

fn full_ring(n: usize) -> Vec<usize> {
    (0..n).collect()
}

/// True iff vertex `i` is an ear: the segment joining its two neighbours
/// lies in the polygon interior apart from its endpoints. A triangle has no
/// ears in this sense, since that segment is one of its edges.
pub fn is_ear(poly: &SimplePolygon, i: usize) -> Result<bool, PolygonError> {
    poly.check_index(i)?;
    if poly.len() == 3 {
        return Ok(false);
    }
    Ok(ring_is_ear(
        poly.vertices(),
        &full_ring(poly.len()),
        i,
        poly.convex_turn(),
    ))
}

/// Indices of all ears, ascending.
pub fn ears(poly: &SimplePolygon) -> Vec<usize> {
    (0..poly.len())
        .filter(|&i| is_ear(poly, i).unwrap_or(false))
        .collect()
}

/// Ear triangle `(p_{i-1}, p_i, p_{i+1})`.
pub fn ear_triangle(poly: &SimplePolygon, i: usize) -> [Point; 3] {
    [
        poly.vertex(poly.prev(i)).clone(),
        poly.vertex(i).clone(),
        poly.vertex(poly.next(i)).clone(),
    ]
}

/// Deletes ear `i`; the remaining vertices keep their relative order.
///
/// The result is revalidated, so clipping an ear that leaves three
/// consecutive collinear vertices reports that validation error.
pub fn remove_ear(poly: &SimplePolygon, i: usize) -> Result<SimplePolygon, PolygonError> {
    poly.check_index(i)?;
    if poly.len() <= 3 {
        return Err(PolygonError::WouldDegenerate);
    }
    if !is_ear(poly, i)? {
        return Err(PolygonError::NotAnEar(i));
    }
    let mut vs = poly.vertices().to_vec();
    vs.remove(i);
    SimplePolygon::new(vs)
}

/// Interiors of two non-degenerate triangles are disjoint. For convex
/// shapes this holds iff some edge line of one triangle separates them.
pub fn triangle_interiors_disjoint(t1: &[Point; 3], t2: &[Point; 3]) -> bool {
    fn separates(t: &[Point; 3], u: &[Point; 3]) -> bool {
        (0..3).any(|e| {
            let (p, q, r) = (&t[e], &t[(e + 1) % 3], &t[(e + 2) % 3]);
            let side = orientation(p, q, r);
            u.iter().all(|v| orientation(p, q, v) != side)
        })
    }
    separates(t1, t2) || separates(t2, t1)
}

/// True iff the open ear triangles at `i` and `j` do not intersect.
pub fn non_overlapping(poly: &SimplePolygon, i: usize, j: usize) -> Result<bool, PolygonError> {
    for k in [i, j] {
        if !is_ear(poly, k)? {
            return Err(PolygonError::NotAnEar(k));
        }
    }
    if i == j {
        return Ok(false);
    }
    Ok(triangle_interiors_disjoint(
        &ear_triangle(poly, i),
        &ear_triangle(poly, j),
    ))
}
