use std::collections::{BTreeMap, VecDeque};

use crate::exact::{
    orientation, segment_intersection, triangle_area, Intersection, Orientation, PointLocation,
    Rational, Segment,
};

use super::ears::ring_is_ear;
use super::{PolygonError, SimplePolygon};

pub type Tri = [usize; 3];

/// A triangulation of a simple polygon by non-crossing diagonals, with its
/// weak dual tree.
///
/// Triangles are index triples sorted ascending; diagonals are `(lo, hi)`
/// pairs. `dual[t]` lists the triangles sharing a diagonal with `t`, ascending.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Triangulation {
    polygon: SimplePolygon,
    triangles: Vec<Tri>,
    diagonals: Vec<(usize, usize)>,
    dual: Vec<Vec<usize>>,
}

fn sorted(mut t: Tri) -> Tri {
    t.sort_unstable();
    t
}

fn pair(a: usize, b: usize) -> (usize, usize) {
    (a.min(b), a.max(b))
}

/// Ear clipping that always clips the lowest-index ear of the remaining ring.
pub fn triangulate(poly: &SimplePolygon) -> Triangulation {
    let pts = poly.vertices();
    let turn = poly.convex_turn();
    let mut ring: Vec<usize> = (0..poly.len()).collect();
    let mut triangles = Vec::with_capacity(poly.len() - 2);
    let mut diagonals = Vec::with_capacity(poly.len().saturating_sub(3));
    while ring.len() > 3 {
        // ring stays sorted, so the first ear found has the lowest index
        let k = (0..ring.len())
            .find(|&k| ring_is_ear(pts, &ring, k, turn))
            .expect("every simple polygon with four or more vertices has an ear");
        let m = ring.len();
        let (a, b, c) = (ring[(k + m - 1) % m], ring[k], ring[(k + 1) % m]);
        triangles.push(sorted([a, b, c]));
        diagonals.push(pair(a, c));
        ring.remove(k);
    }
    triangles.push(sorted([ring[0], ring[1], ring[2]]));
    let dual = build_dual(&triangles, &diagonals);
    Triangulation {
        polygon: poly.clone(),
        triangles,
        diagonals,
        dual,
    }
}

fn build_dual(triangles: &[Tri], diagonals: &[(usize, usize)]) -> Vec<Vec<usize>> {
    let mut by_edge: BTreeMap<(usize, usize), Vec<usize>> = BTreeMap::new();
    for (ti, t) in triangles.iter().enumerate() {
        for (a, b) in [(t[0], t[1]), (t[1], t[2]), (t[0], t[2])] {
            by_edge.entry((a, b)).or_default().push(ti);
        }
    }
    let mut dual = vec![Vec::new(); triangles.len()];
    for d in diagonals {
        if let Some(ts) = by_edge.get(d) {
            if let [x, y] = ts[..] {
                dual[x].push(y);
                dual[y].push(x);
            }
        }
    }
    for adj in &mut dual {
        adj.sort_unstable();
    }
    dual
}

impl Triangulation {
    /// Builds a triangulation from explicit triangles, checking every
    /// structural invariant.
    pub fn from_triangles(poly: &SimplePolygon, triangles: Vec<Tri>) -> Result<Self, PolygonError> {
        let n = poly.len();
        let bad = |msg: String| Err(PolygonError::InvalidTriangulation(msg));
        if triangles.len() != n - 2 {
            return bad(format!(
                "expected {} triangles, got {}",
                n - 2,
                triangles.len()
            ));
        }
        let triangles: Vec<Tri> = triangles.into_iter().map(sorted).collect();
        let mut edge_use: BTreeMap<(usize, usize), usize> = BTreeMap::new();
        let mut total = Rational::zero();
        for t in &triangles {
            if t.iter().any(|&v| v >= n) || t[0] == t[1] || t[1] == t[2] {
                return bad(format!("bad triangle {t:?}"));
            }
            let (a, b, c) = (poly.vertex(t[0]), poly.vertex(t[1]), poly.vertex(t[2]));
            if orientation(a, b, c) == Orientation::Collinear {
                return bad(format!("degenerate triangle {t:?}"));
            }
            total = total + triangle_area(a, b, c);
            for e in [(t[0], t[1]), (t[1], t[2]), (t[0], t[2])] {
                *edge_use.entry(e).or_default() += 1;
            }
        }
        if total != poly.area() {
            return bad(format!(
                "triangle areas sum to {total}, polygon area {}",
                poly.area()
            ));
        }
        let mut diagonals = Vec::new();
        for (&(a, b), &uses) in &edge_use {
            let boundary = poly.cyclic_distance(a, b) == 1;
            match (boundary, uses) {
                (true, 1) => {}
                (false, 2) => {
                    if !diagonal_is_interior(poly, a, b) {
                        return bad(format!("diagonal ({a}, {b}) leaves the interior"));
                    }
                    diagonals.push((a, b));
                }
                _ => return bad(format!("edge ({a}, {b}) used by {uses} triangles")),
            }
        }
        if diagonals.len() != n - 3 {
            return bad(format!(
                "expected {} diagonals, got {}",
                n - 3,
                diagonals.len()
            ));
        }
        let dual = build_dual(&triangles, &diagonals);
        let t = Triangulation {
            polygon: poly.clone(),
            triangles,
            diagonals,
            dual,
        };
        if !t.dual_is_tree() {
            return bad("weak dual is not a tree".into());
        }
        Ok(t)
    }

    pub fn polygon(&self) -> &SimplePolygon {
        &self.polygon
    }

    pub fn triangles(&self) -> &[Tri] {
        &self.triangles
    }

    pub fn diagonals(&self) -> &[(usize, usize)] {
        &self.diagonals
    }

    pub fn dual(&self) -> &[Vec<usize>] {
        &self.dual
    }

    pub fn contains_triangle(&self, t: Tri) -> bool {
        self.triangles.contains(&sorted(t))
    }

    /// Connected with `|triangles| - 1` edges.
    pub fn dual_is_tree(&self) -> bool {
        let m = self.triangles.len();
        let edges: usize = self.dual.iter().map(Vec::len).sum::<usize>() / 2;
        if edges + 1 != m {
            return false;
        }
        let mut seen = vec![false; m];
        let mut queue = VecDeque::from([0usize]);
        seen[0] = true;
        let mut count = 1;
        while let Some(t) = queue.pop_front() {
            for &u in &self.dual[t] {
                if !seen[u] {
                    seen[u] = true;
                    count += 1;
                    queue.push_back(u);
                }
            }
        }
        count == m
    }

    /// Number of triangulation-graph edges (boundary edges plus diagonals)
    /// at each vertex.
    pub fn vertex_degrees(&self) -> Vec<usize> {
        let mut deg = vec![2; self.polygon.len()];
        for &(a, b) in &self.diagonals {
            deg[a] += 1;
            deg[b] += 1;
        }
        deg
    }

    pub fn edge_count(&self) -> usize {
        self.polygon.len() + self.diagonals.len()
    }

    pub fn total_area(&self) -> Rational {
        self.triangles.iter().fold(Rational::zero(), |acc, t| {
            let p = &self.polygon;
            acc + triangle_area(p.vertex(t[0]), p.vertex(t[1]), p.vertex(t[2]))
        })
    }

    /// Dual-tree leaves as `(triangle index, ear tip)` pairs. The tip is the
    /// leaf triangle's vertex not on the diagonal it shares with its
    /// neighbour. Empty for a lone triangle.
    pub fn leaf_triangles(&self) -> Vec<(usize, usize)> {
        if self.triangles.len() < 2 {
            return Vec::new();
        }
        self.dual
            .iter()
            .enumerate()
            .filter(|(_, adj)| adj.len() == 1)
            .map(|(ti, adj)| {
                let t = self.triangles[ti];
                let u = self.triangles[adj[0]];
                let tip = *t
                    .iter()
                    .find(|v| !u.contains(v))
                    .expect("leaf shares one edge");
                (ti, tip)
            })
            .collect()
    }
}

/// Ear tips revealed by the dual tree's leaves.
pub fn dual_leaves(t: &Triangulation) -> Vec<usize> {
    t.leaf_triangles().into_iter().map(|(_, tip)| tip).collect()
}

/// Open segment between vertices `a` and `b` avoids the boundary and lies inside.
fn diagonal_is_interior(poly: &SimplePolygon, a: usize, b: usize) -> bool {
    let (pa, pb) = (poly.vertex(a), poly.vertex(b));
    let diag = Segment::new(pa.clone(), pb.clone());
    for e in 0..poly.len() {
        match segment_intersection(&diag, &poly.edge(e)) {
            Intersection::Empty => {}
            Intersection::Point { at, .. } if &at == pa || &at == pb => {}
            _ => return false,
        }
    }
    poly.locate(&diag.midpoint()) == PointLocation::Inside
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::harness::fixtures;
    use crate::polygon::{non_overlapping, remove_ear};

    fn poly(c: &[(i64, i64)]) -> SimplePolygon {
        SimplePolygon::from_ints(c).unwrap()
    }

    fn check_invariants(t: &Triangulation) {
        let n = t.polygon().len();
        assert_eq!(t.triangles().len(), n - 2);
        assert_eq!(t.diagonals().len(), n - 3);
        assert!(t.dual_is_tree());
        assert_eq!(t.total_area(), t.polygon().area());
        for &(a, b) in t.diagonals() {
            assert!(diagonal_is_interior(t.polygon(), a, b));
        }
        // also passes the independent structural check
        let rebuilt = Triangulation::from_triangles(t.polygon(), t.triangles().to_vec()).unwrap();
        assert_eq!(&rebuilt.triangles, &t.triangles);
    }

    #[test]
    fn counts() {
        let tri = triangulate(&poly(&[(0, 0), (1, 0), (0, 1)]));
        assert_eq!(tri.triangles(), &[[0, 1, 2]]);
        assert!(tri.diagonals().is_empty());
        assert!(dual_leaves(&tri).is_empty());

        let non = triangulate(&fixtures::paper_nonagon());
        assert_eq!(non.triangles().len(), 7);
        assert_eq!(non.diagonals().len(), 6);
        check_invariants(&non);

        let hept = poly(&[(0, 0), (6, 0), (7, 3), (4, 2), (3, 6), (1, 5), (-1, 2)]);
        let th = triangulate(&hept);
        assert_eq!((th.triangles().len(), th.diagonals().len()), (5, 4));
        assert_eq!(th.edge_count(), 11);
        assert_eq!(th.vertex_degrees().iter().sum::<usize>(), 22);
        check_invariants(&th);
    }

    #[test]
    fn leaves() {
        let quad = triangulate(&poly(&[(0, 0), (2, 0), (2, 2), (0, 2)]));
        assert_eq!(dual_leaves(&quad).len(), 2);
        // convex polygon: lowest-index clipping peels 0, 1, 2, ... giving a path dual
        let hex = triangulate(&poly(&[(0, 0), (2, 0), (3, 1), (2, 2), (0, 2), (-1, 1)]));
        assert_eq!(dual_leaves(&hex).len(), 2);
        assert!(hex.leaf_triangles().len() == 2);
    }

    #[test]
    fn fan_is_path() {
        let pts = [(0, 0), (4, 0), (6, 2), (5, 5), (2, 6), (-1, 3)];
        let p = poly(&pts);
        let fan: Vec<Tri> = (1..5).map(|i| [0, i, i + 1]).collect();
        let t = Triangulation::from_triangles(&p, fan).unwrap();
        let leaves = dual_leaves(&t);
        assert_eq!(leaves, vec![1, 5]);
        assert!(non_overlapping(&p, 1, 5).unwrap());
    }

    #[test]
    fn path_dual_octagon() {
        let f = fixtures::path_dual_octagon();
        let t = triangulate(&f);
        check_invariants(&t);
        let degrees: Vec<usize> = t.dual().iter().map(Vec::len).collect();
        assert!(degrees.iter().all(|&d| d <= 2));
        let leaves = dual_leaves(&t);
        assert_eq!(leaves.len(), 2);
        assert!(non_overlapping(&f, leaves[0], leaves[1]).unwrap());
    }

    #[test]
    fn rejects_bad_triangulations() {
        let sq = poly(&[(0, 0), (2, 0), (2, 2), (0, 2)]);
        assert!(Triangulation::from_triangles(&sq, vec![[0, 1, 2]]).is_err());
        assert!(Triangulation::from_triangles(&sq, vec![[0, 1, 2], [0, 1, 3]]).is_err());
        let l = poly(&[(0, 0), (2, 0), (2, 1), (1, 1), (1, 2), (0, 2)]);
        // diagonal (1, 5) passes outside the notch
        assert!(Triangulation::from_triangles(
            &l,
            vec![[0, 1, 5], [1, 2, 3], [1, 3, 5], [3, 4, 5]]
        )
        .is_err());
        assert!(Triangulation::from_triangles(
            &l,
            vec![[0, 1, 3], [1, 2, 3], [0, 3, 5], [3, 4, 5]]
        )
        .is_ok());
    }

    #[test]
    fn clipping_survives_collinear_subrings() {
        // clipping tips of this comb leaves collinear runs on the gap line
        let c = fixtures::comb(4);
        let t = triangulate(&c);
        check_invariants(&t);
        assert!(remove_ear(&c, 4).is_err());
    }
}
