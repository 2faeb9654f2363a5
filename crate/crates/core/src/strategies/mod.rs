//! Guard-placement strategies: every third vertex (both readings for
//! `3 ∤ n`), Fisk coloring, exhaustive minimum vertex guards, and the
//! coloring checks behind the nonagon construction.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::par;
use crate::polygon::{
    fisk_coloring, triangulate, Color, Coloring, SimplePolygon, Tri, Triangulation,
};
use crate::visibility::{coverage, is_covered, CoverageReport};

/// How to read "every third vertex" when `3 ∤ n`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Interpretation {
    /// Stop after `⌊n/3⌋` guards.
    Strict,
    /// Keep stepping by three until the next step would pass the start,
    /// giving `⌈n/3⌉` guards.
    Generous,
}

impl fmt::Display for Interpretation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Interpretation::Strict => "strict",
            Interpretation::Generous => "generous",
        })
    }
}

/// Direction of travel in vertex-index order. For a clockwise vertex list
/// `Increasing` is clockwise.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Direction {
    Increasing,
    Decreasing,
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub struct Generator {
    pub start: usize,
    pub direction: Direction,
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Strategy {
    /// Every-third placement; `generators` lists every `(start, direction)`
    /// producing the same guard set, first one canonical.
    EveryThird {
        interpretation: Interpretation,
        generators: Vec<Generator>,
    },
    Fisk {
        color: Color,
    },
    Explicit,
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct GuardPlacement {
    /// Ascending, no duplicates.
    pub guards: Vec<usize>,
    pub strategy: Strategy,
}

impl GuardPlacement {
    pub fn explicit(mut guards: Vec<usize>) -> Self {
        guards.sort_unstable();
        guards.dedup();
        GuardPlacement {
            guards,
            strategy: Strategy::Explicit,
        }
    }
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct StrategyVerdict {
    pub placement: GuardPlacement,
    pub report: CoverageReport,
}

/// Guards visited from `start` stepping by three, `count` of them.
fn walk(n: usize, start: usize, direction: Direction, count: usize) -> Vec<usize> {
    (0..count)
        .map(|k| match direction {
            Direction::Increasing => (start + 3 * k) % n,
            Direction::Decreasing => (start + n * 3 - (3 * k) % (3 * n)) % n,
        })
        .collect()
}

pub fn guard_count(n: usize, interpretation: Interpretation) -> usize {
    match interpretation {
        Interpretation::Strict => n / 3,
        Interpretation::Generous => n.div_ceil(3),
    }
}

/// All distinct every-third guard sets over every start and both
/// directions, in order of first appearance (by start, then direction).
pub fn every_third_placements(n: usize, interpretation: Interpretation) -> Vec<GuardPlacement> {
    assert!(n >= 3, "polygons have at least three vertices");
    let count = guard_count(n, interpretation);
    let mut out: Vec<GuardPlacement> = Vec::new();
    for start in 0..n {
        for direction in [Direction::Increasing, Direction::Decreasing] {
            let mut guards = walk(n, start, direction, count);
            guards.sort_unstable();
            let generator = Generator { start, direction };
            match out.iter_mut().find(|p| p.guards == guards) {
                Some(GuardPlacement {
                    strategy: Strategy::EveryThird { generators, .. },
                    ..
                }) => generators.push(generator),
                _ => out.push(GuardPlacement {
                    guards,
                    strategy: Strategy::EveryThird {
                        interpretation,
                        generators: vec![generator],
                    },
                }),
            }
        }
    }
    out
}

/// Coverage verdict for every every-third placement on `poly`.
pub fn evaluate_strategy(
    poly: &SimplePolygon,
    interpretation: Interpretation,
) -> Vec<StrategyVerdict> {
    let placements = every_third_placements(poly.len(), interpretation);
    par::map(&placements, |p| StrategyVerdict {
        placement: p.clone(),
        report: coverage(poly, &p.guards).expect("every-third guards are valid indices"),
    })
}

/// First covering every-third placement, or `None` if none covers.
pub fn exists_good_start(
    poly: &SimplePolygon,
    interpretation: Interpretation,
) -> Option<GuardPlacement> {
    every_third_placements(poly.len(), interpretation)
        .into_iter()
        .find(|p| is_covered(poly, &p.guards).expect("every-third guards are valid indices"))
}

/// Least-used color class of the Fisk coloring of the lowest-index-first
/// ear-clipping triangulation.
pub fn fisk_placement(poly: &SimplePolygon) -> GuardPlacement {
    let t = triangulate(poly);
    let coloring = fisk_coloring(&t);
    let color = coloring.least_used();
    GuardPlacement {
        guards: coloring.class(color),
        strategy: Strategy::Fisk { color },
    }
}

/// Smallest `k <= max_k` for which some `k`-subset of vertices covers,
/// found by lexicographic enumeration; the witness is the first such subset.
pub fn min_vertex_guards(poly: &SimplePolygon, max_k: usize) -> Option<(usize, GuardPlacement)> {
    let n = poly.len();
    (1..=max_k.min(n)).find_map(|k| {
        let mut subset: Vec<usize> = (0..k).collect();
        loop {
            if is_covered(poly, &subset).expect("subset indices are in range") {
                return Some((k, GuardPlacement::explicit(subset)));
            }
            if !next_combination(&mut subset, n) {
                return None;
            }
        }
    })
}

/// Advances to the next `k`-subset of `0..n` in lexicographic order.
fn next_combination(c: &mut [usize], n: usize) -> bool {
    let k = c.len();
    let Some(i) = (0..k).rev().find(|&i| c[i] < n - k + i) else {
        return false;
    };
    c[i] += 1;
    for j in i + 1..k {
        c[j] = c[j - 1] + 1;
    }
    true
}

/// First triangle (in triangulation order) with no vertex of color `missing`.
pub fn triangle_missing_color(t: &Triangulation, c: &Coloring, missing: Color) -> Option<Tri> {
    t.triangles()
        .iter()
        .copied()
        .find(|tri| tri.iter().all(|&v| c.color(v) != missing))
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
pub enum TriangleBoundary {
    /// No two corners are adjacent on the polygon: all sides are diagonals.
    AllBoundaryInterior,
    HasBoundaryEdge,
}

pub fn color_sequence_check(poly: &SimplePolygon, t: Tri) -> TriangleBoundary {
    let adjacent = [(t[0], t[1]), (t[1], t[2]), (t[0], t[2])]
        .iter()
        .any(|&(a, b)| poly.cyclic_distance(a, b) == 1);
    if adjacent {
        TriangleBoundary::HasBoundaryEdge
    } else {
        TriangleBoundary::AllBoundaryInterior
    }
}
