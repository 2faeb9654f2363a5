use serde::Serialize;

use crate::exact::{in_closed_triangle, triangle_area, Point, Rational};
use crate::par;
use crate::polygon::SimplePolygon;

use super::subdivision::{build_subdivision, Subdivision};
use super::visible::segment_in_polygon;
use super::{window_segments, VisibilityError, WindowSegment};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CoverageReport {
    pub guards: Vec<usize>,
    pub covered: bool,
    /// Uncovered triangles of the subdivision, unmerged.
    #[serde(serialize_with = "crate::io::ser_triangles")]
    pub blindspot_cells: Vec<[Point; 3]>,
    #[serde(serialize_with = "crate::io::ser_rational")]
    pub blindspot_area: Rational,
    /// One uncovered point per blindspot component, plus any uncovered
    /// arrangement vertex or edge midpoint outside every blindspot cell.
    #[serde(serialize_with = "crate::io::ser_points")]
    pub witnesses: Vec<Point>,
    pub cell_count: usize,
}

fn check_guards(poly: &SimplePolygon, guards: &[usize]) -> Result<(), VisibilityError> {
    if guards.is_empty() {
        return Err(VisibilityError::EmptyGuardSet);
    }
    match guards.iter().find(|&&g| g >= poly.len()) {
        Some(&g) => Err(VisibilityError::InvalidGuardIndex(g)),
        None => Ok(()),
    }
}

fn all_windows(poly: &SimplePolygon, guards: &[usize]) -> Vec<WindowSegment> {
    par::map(guards, |&g| window_segments(poly, g))
        .into_iter()
        .flatten()
        .collect()
}

fn seen_by(poly: &SimplePolygon, guards: &[&Point], q: &Point) -> bool {
    guards.iter().any(|g| segment_in_polygon(poly, g, q))
}

struct UnionFind(Vec<usize>);

impl UnionFind {
    fn find(&mut self, x: usize) -> usize {
        let mut r = x;
        while self.0[r] != r {
            r = self.0[r];
        }
        let mut c = x;
        while self.0[c] != r {
            let next = self.0[c];
            self.0[c] = r;
            c = next;
        }
        r
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.0[ra.max(rb)] = ra.min(rb);
        }
    }
}

/// Groups uncovered trapezoids into components of the closed blindspot
/// region: same-slab neighbours sharing a piece, and neighbours across a
/// slab line whose vertical sides overlap in positive length.
fn components(sub: &Subdivision, uncovered: &[bool]) -> Vec<usize> {
    let traps = &sub.trapezoids;
    let mut uf = UnionFind((0..traps.len()).collect());
    for i in 0..traps.len() {
        if !uncovered[i] {
            continue;
        }
        for j in i + 1..traps.len() {
            if !uncovered[j] {
                continue;
            }
            let (a, b) = (&traps[i], &traps[j]);
            let touching = if a.slab == b.slab {
                a.upper == b.lower || b.upper == a.lower
            } else if b.slab == a.slab + 1 {
                let lo = (&a.lower.1).max(&b.lower.0);
                let hi = (&a.upper.1).min(&b.upper.0);
                lo < hi
            } else {
                false
            };
            if touching {
                uf.union(i, j);
            }
        }
    }
    (0..traps.len()).map(|i| uf.find(i)).collect()
}

/// Exact coverage of the closed polygon by vertex guards.
///
/// Builds the arrangement of all guards' windows, then tests one
/// representative per trapezoid, every arrangement vertex, and every
/// arrangement edge midpoint. Visibility is constant on each of these
/// open pieces, so the finite test decides the whole polygon.
pub fn coverage(poly: &SimplePolygon, guards: &[usize]) -> Result<CoverageReport, VisibilityError> {
    check_guards(poly, guards)?;
    let mut guards = guards.to_vec();
    guards.sort_unstable();
    guards.dedup();
    let gpts: Vec<&Point> = guards.iter().map(|&g| poly.vertex(g)).collect();
    let sub = build_subdivision(poly, &all_windows(poly, &guards));

    let uncovered: Vec<bool> = par::map(&sub.trapezoids, |t| {
        !seen_by(poly, &gpts, &sub.cells()[t.cells.start].representative)
    });
    let comp = components(&sub, &uncovered);

    let mut blindspot_cells = Vec::new();
    let mut blindspot_area = Rational::zero();
    let mut witnesses = Vec::new();
    let mut reported = std::collections::BTreeSet::new();
    for (i, t) in sub.trapezoids.iter().enumerate() {
        if !uncovered[i] {
            continue;
        }
        for cell in &sub.cells()[t.cells.clone()] {
            let [a, b, c] = &cell.triangle;
            blindspot_area = blindspot_area + triangle_area(a, b, c);
            blindspot_cells.push(cell.triangle.clone());
        }
        if reported.insert(comp[i]) {
            witnesses.push(sub.cells()[t.cells.start].representative.clone());
        }
    }

    let probes: Vec<Point> = sub
        .vertices()
        .iter()
        .cloned()
        .chain(sub.pieces().iter().map(|s| s.midpoint()))
        .collect();
    let missed: Vec<bool> = par::map(&probes, |q| !seen_by(poly, &gpts, q));
    for (q, m) in probes.into_iter().zip(missed) {
        let in_cell = blindspot_cells
            .iter()
            .any(|[a, b, c]| in_closed_triangle(a, b, c, &q));
        if m && !in_cell {
            witnesses.push(q);
        }
    }

    Ok(CoverageReport {
        guards,
        covered: blindspot_cells.is_empty() && witnesses.is_empty(),
        blindspot_cells,
        blindspot_area,
        witnesses,
        cell_count: sub.cells().len(),
    })
}

/// Boolean form of [`coverage`] that stops at the first uncovered point.
/// Polygon vertices and edge midpoints are tried before the arrangement is
/// built, since most failing guard sets already miss one of them.
pub fn is_covered(poly: &SimplePolygon, guards: &[usize]) -> Result<bool, VisibilityError> {
    check_guards(poly, guards)?;
    let gpts: Vec<&Point> = guards.iter().map(|&g| poly.vertex(g)).collect();
    let n = poly.len();
    let quick: Vec<Point> = (0..n)
        .map(|i| poly.vertex(i).clone())
        .chain((0..n).map(|i| poly.edge(i).midpoint()))
        .collect();
    if !quick.iter().all(|q| seen_by(poly, &gpts, q)) {
        return Ok(false);
    }
    let sub = build_subdivision(poly, &all_windows(poly, guards));
    if par::any(&sub.trapezoids, |t| {
        !seen_by(poly, &gpts, &sub.cells()[t.cells.start].representative)
    }) {
        return Ok(false);
    }
    let probes: Vec<Point> = sub
        .vertices()
        .iter()
        .cloned()
        .chain(sub.pieces().iter().map(|s| s.midpoint()))
        .collect();
    Ok(!par::any(&probes, |q| !seen_by(poly, &gpts, q)))
}

/// Subdivision for a guard set, for rendering and inspection.
pub fn guard_subdivision(
    poly: &SimplePolygon,
    guards: &[usize],
) -> Result<Subdivision, VisibilityError> {
    check_guards(poly, guards)?;
    Ok(build_subdivision(poly, &all_windows(poly, guards)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::harness::fixtures;

    #[test]
    fn nonagon_every_third_fails() {
        let p = fixtures::paper_nonagon();
        for g in [[0, 3, 6], [1, 4, 7], [2, 5, 8]] {
            let r = coverage(&p, &g).unwrap();
            assert!(!r.covered, "{g:?}");
            assert!(r.blindspot_area.is_positive());
            assert!(!r.witnesses.is_empty());
            assert!(!is_covered(&p, &g).unwrap());
            for w in &r.witnesses {
                assert!(g.iter().all(|&v| !segment_in_polygon(&p, p.vertex(v), w)));
            }
        }
    }

    #[test]
    fn convex_single_guard() {
        let hex =
            SimplePolygon::from_ints(&[(0, 0), (2, 0), (3, 1), (2, 2), (0, 2), (-1, 1)]).unwrap();
        for g in 0..6 {
            let r = coverage(&hex, &[g]).unwrap();
            assert!(r.covered);
            assert!(r.blindspot_area.is_zero());
            assert!(is_covered(&hex, &[g]).unwrap());
        }
    }

    #[test]
    fn guard_errors() {
        let p = fixtures::paper_nonagon();
        assert_eq!(coverage(&p, &[]), Err(VisibilityError::EmptyGuardSet));
        assert_eq!(
            coverage(&p, &[0, 9]),
            Err(VisibilityError::InvalidGuardIndex(9))
        );
    }

    #[test]
    fn all_guards_cover() {
        let p = fixtures::paper_nonagon();
        let all: Vec<usize> = (0..9).collect();
        assert!(coverage(&p, &all).unwrap().covered);
    }
}
