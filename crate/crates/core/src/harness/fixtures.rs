//! Frozen polygons used across tests, benches, and the claim checks.

use crate::polygon::{triangulate, SimplePolygon, Tri, Triangulation};

/// The nine-vertex gallery not covered by any every-third-vertex placement.
pub fn paper_nonagon() -> SimplePolygon {
    SimplePolygon::from_ints(&[
        (0, 0),
        (1, 5),
        (0, 8),
        (2, 4),
        (6, 11),
        (4, 7),
        (15, -1),
        (9, 3),
        (6, 4),
    ])
    .expect("nonagon fixture is simple")
}

/// Height of every comb prong.
pub const COMB_HEIGHT: i64 = 8;

/// Comb with `teeth` prongs and `3 * teeth` vertices, listed left to right.
///
/// Prong `i` rises from `(3i, 1)` to the tip `(3i + 1, H)` and drops to
/// `(3i + 2, 1)`; consecutive prongs are joined along `y = 1` and the two
/// outermost feet are lowered to `y = 0` to close a base strip. The tip of
/// a prong only sees into its own prong and the strip, so tips need
/// distinct guards.
pub fn comb(teeth: usize) -> SimplePolygon {
    assert!(teeth >= 1, "a comb has at least one tooth");
    let mut v = Vec::with_capacity(3 * teeth);
    for i in 0..teeth as i64 {
        let left_y = if i == 0 { 0 } else { 1 };
        let right_y = if i == teeth as i64 - 1 { 0 } else { 1 };
        v.push((3 * i, left_y));
        v.push((3 * i + 1, COMB_HEIGHT));
        v.push((3 * i + 2, right_y));
    }
    SimplePolygon::from_ints(&v).expect("comb is simple")
}

/// Non-convex octagon whose lowest-index ear clipping is not a fan and has
/// a path as its dual.
pub fn path_dual_octagon() -> SimplePolygon {
    SimplePolygon::from_ints(&PATH_DUAL_OCTAGON).expect("octagon fixture is simple")
}

const PATH_DUAL_OCTAGON: [(i64, i64); 8] = [
    (0, 0),
    (4, 0),
    (4, 4),
    (0, 4),
    (0, 3),
    (3, 3),
    (3, 1),
    (0, 1),
];

/// Octagon on which every strict every-third placement fails: the hit of
/// `search_counterexample(8, Strict, _, 0)`, found after 16 trials.
pub fn strict_octagon() -> SimplePolygon {
    SimplePolygon::from_ints(&STRICT_OCTAGON).expect("octagon fixture is simple")
}

const STRICT_OCTAGON: [(i64, i64); 8] = [
    (15, 53),
    (22, 53),
    (26, 45),
    (5, 21),
    (4, 38),
    (0, 3),
    (29, 41),
    (51, 58),
];

/// Polygon with exactly three ears `p`, `q`, `r` where `p` is disjoint from
/// both others and `q`, `r` overlap. Taken from `random_polygon(6, 25)`.
#[derive(Clone, Debug)]
pub struct ThreeEarFixture {
    pub polygon: SimplePolygon,
    pub p: usize,
    pub q: usize,
    pub r: usize,
}

pub fn three_ear_polygon() -> ThreeEarFixture {
    ThreeEarFixture {
        polygon: SimplePolygon::from_ints(&THREE_EAR).expect("three-ear fixture is simple"),
        p: 0,
        q: 2,
        r: 3,
    }
}

const THREE_EAR: [(i64, i64); 6] = [(2, 40), (11, 32), (56, 58), (63, 33), (35, 24), (26, 10)];

/// Triangulation of the nonagon that contains triangle (3, 5, 8).
///
/// The diagonals 3-5, 5-8, 8-3 split the nonagon into that triangle, the
/// triangle (3, 4, 5), the quadrilateral 5..8 and the pentagon 8, 0..3.
/// The two larger pieces are clipped on their own and mapped back.
pub fn nonagon_split_triangulation() -> Triangulation {
    let p = paper_nonagon();
    let mut tris: Vec<Tri> = vec![[3, 5, 8], [3, 4, 5]];
    for piece in [vec![5, 6, 7, 8], vec![8, 0, 1, 2, 3]] {
        let sub = SimplePolygon::new(piece.iter().map(|&i| p.vertex(i).clone()).collect())
            .expect("nonagon piece is simple");
        for t in triangulate(&sub).triangles() {
            let mut m = t.map(|k| piece[k]);
            m.sort_unstable();
            tris.push(m);
        }
    }
    Triangulation::from_triangles(&p, tris).expect("split triangulation is valid")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::Point;

    #[test]
    fn nonagon_vertices() {
        let p = paper_nonagon();
        assert_eq!(p.len(), 9);
        assert_eq!(p.vertex(0), &Point::from_ints(0, 0));
        assert_eq!(p.vertex(6), &Point::from_ints(15, -1));
    }

    #[test]
    fn comb_sizes() {
        for k in 1..=6 {
            let c = comb(k);
            assert_eq!(c.len(), 3 * k);
        }
        assert_eq!(
            comb(1).vertices(),
            SimplePolygon::from_ints(&[(0, 0), (1, 8), (2, 0)])
                .unwrap()
                .vertices()
        );
    }

    #[test]
    fn split_contains_358() {
        let t = nonagon_split_triangulation();
        assert!(t.contains_triangle([3, 5, 8]));
        assert_eq!(t.triangles().len(), 7);
    }
}
