use std::collections::VecDeque;
use std::fmt;

use serde::{Deserialize, Serialize};

use super::{PolygonError, SimplePolygon, Triangulation, Winding};

#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Serialize, Deserialize)]
pub enum Color {
    R,
    G,
    B,
}

impl Color {
    pub const ALL: [Color; 3] = [Color::R, Color::G, Color::B];

    pub fn name(self) -> &'static str {
        match self {
            Color::R => "red",
            Color::G => "green",
            Color::B => "blue",
        }
    }
}

impl fmt::Display for Color {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Color::R => "R",
            Color::G => "G",
            Color::B => "B",
        })
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub enum ColoringKind {
    Fisk,
    Cyclic,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Coloring {
    colors: Vec<Color>,
    kind: ColoringKind,
}

impl Coloring {
    pub fn color(&self, v: usize) -> Color {
        self.colors[v]
    }

    pub fn colors(&self) -> &[Color] {
        &self.colors
    }

    pub fn kind(&self) -> ColoringKind {
        self.kind
    }

    /// Vertices of color `c`, ascending.
    pub fn class(&self, c: Color) -> Vec<usize> {
        (0..self.colors.len())
            .filter(|&v| self.colors[v] == c)
            .collect()
    }

    /// Smallest class; ties go to R, then G, then B.
    pub fn least_used(&self) -> Color {
        let mut best = Color::R;
        for c in [Color::G, Color::B] {
            if self.class(c).len() < self.class(best).len() {
                best = c;
            }
        }
        best
    }

    /// Every triangle sees three distinct colors.
    pub fn is_proper_for(&self, t: &Triangulation) -> bool {
        t.triangles().iter().all(|tri| {
            let [a, b, c] = tri.map(|v| self.colors[v]);
            a != b && b != c && a != c
        })
    }
}

/// Proper 3-coloring of a triangulation graph obtained by walking the dual
/// tree breadth-first from the lowest triangle containing vertex 0. The root
/// gets R, G, B in index order; every later triangle has one uncolored
/// vertex, whose color is forced.
pub fn fisk_coloring(t: &Triangulation) -> Coloring {
    let n = t.polygon().len();
    let tris = t.triangles();
    let root = (0..tris.len())
        .filter(|&i| tris[i][0] == 0)
        .min_by_key(|&i| tris[i])
        .expect("vertex 0 belongs to some triangle");
    let mut colors: Vec<Option<Color>> = vec![None; n];
    for (v, c) in tris[root].iter().zip(Color::ALL) {
        colors[*v] = Some(c);
    }
    let mut seen = vec![false; tris.len()];
    seen[root] = true;
    let mut queue = VecDeque::from([root]);
    while let Some(ti) = queue.pop_front() {
        for &u in &t.dual()[ti] {
            if seen[u] {
                continue;
            }
            seen[u] = true;
            let tri = tris[u];
            let used: Vec<Color> = tri.iter().filter_map(|&v| colors[v]).collect();
            let missing = Color::ALL
                .into_iter()
                .find(|c| !used.contains(c))
                .expect("neighbour triangle shares exactly two colored vertices");
            for &v in &tri {
                if colors[v].is_none() {
                    colors[v] = Some(missing);
                }
            }
            queue.push_back(u);
        }
    }
    Coloring {
        colors: colors
            .into_iter()
            .map(|c| c.expect("dual tree reaches every vertex"))
            .collect(),
        kind: ColoringKind::Fisk,
    }
}

/// Colors vertex 0 red and then red, blue, green repeating in clockwise
/// order around the polygon. Requires `3 | n`; the three classes are the
/// three every-third-vertex guard sets.
pub fn cyclic_coloring(poly: &SimplePolygon) -> Result<Coloring, PolygonError> {
    let n = poly.len();
    if !n.is_multiple_of(3) {
        return Err(PolygonError::NotDivisibleBy3(n));
    }
    let cycle = match poly.winding() {
        // index order is clockwise
        Winding::Clockwise => [Color::R, Color::B, Color::G],
        // clockwise walks indices downward: 0 -> R, n-1 -> B, n-2 -> G
        Winding::CounterClockwise => [Color::R, Color::G, Color::B],
    };
    Ok(Coloring {
        colors: (0..n).map(|i| cycle[i % 3]).collect(),
        kind: ColoringKind::Cyclic,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::harness::fixtures;
    use crate::polygon::triangulate;

    fn poly(c: &[(i64, i64)]) -> SimplePolygon {
        SimplePolygon::from_ints(c).unwrap()
    }

    #[test]
    fn triangle_colors() {
        let t = triangulate(&poly(&[(0, 0), (1, 0), (0, 1)]));
        assert_eq!(fisk_coloring(&t).colors(), &[Color::R, Color::G, Color::B]);
    }

    #[test]
    fn quad_fan() {
        let p = poly(&[(0, 0), (2, 0), (3, 2), (0, 2)]);
        let t = Triangulation::from_triangles(&p, vec![[0, 1, 2], [0, 2, 3]]).unwrap();
        let c = fisk_coloring(&t);
        // root (0,1,2) -> R,G,B; vertex 3 forced to the color of 1
        assert_eq!(c.colors(), &[Color::R, Color::G, Color::B, Color::G]);
        let mut sizes: Vec<usize> = Color::ALL.iter().map(|&k| c.class(k).len()).collect();
        sizes.sort();
        assert_eq!(sizes, vec![1, 1, 2]);
        assert_eq!(c.least_used(), Color::R);
    }

    #[test]
    fn fisk_proper_on_fixtures() {
        for p in [
            fixtures::paper_nonagon(),
            fixtures::comb(4),
            fixtures::path_dual_octagon(),
        ] {
            let t = triangulate(&p);
            let c = fisk_coloring(&t);
            assert!(c.is_proper_for(&t));
            assert!(c.class(c.least_used()).len() <= p.len() / 3);
            for &(a, b) in t.diagonals() {
                assert_ne!(c.color(a), c.color(b));
            }
            for i in 0..p.len() {
                assert_ne!(c.color(i), c.color(p.next(i)));
            }
        }
    }

    #[test]
    fn cyclic_classes() {
        let c = cyclic_coloring(&fixtures::paper_nonagon()).unwrap();
        let mut classes: Vec<Vec<usize>> = Color::ALL.iter().map(|&k| c.class(k)).collect();
        classes.sort();
        assert_eq!(classes, vec![vec![0, 3, 6], vec![1, 4, 7], vec![2, 5, 8]]);
        // listed clockwise, so index order is red, blue, green
        assert_eq!(&c.colors()[..3], &[Color::R, Color::B, Color::G]);

        let tri = cyclic_coloring(&poly(&[(0, 0), (1, 0), (0, 1)])).unwrap();
        assert!(Color::ALL.iter().all(|&k| tri.class(k).len() == 1));
        let hex =
            cyclic_coloring(&poly(&[(0, 0), (2, 0), (3, 1), (2, 2), (0, 2), (-1, 1)])).unwrap();
        assert!(Color::ALL.iter().all(|&k| hex.class(k).len() == 2));
        assert_eq!(
            cyclic_coloring(&poly(&[(0, 0), (1, 0), (1, 1), (0, 1)])),
            Err(PolygonError::NotDivisibleBy3(4))
        );
    }
}
