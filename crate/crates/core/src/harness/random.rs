use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::exact::{orientation, segment_intersection, Intersection, Orientation, Point, Segment};
use crate::polygon::SimplePolygon;

use super::HarnessError;

/// Side length of the integer sampling box.
pub const BOX: i64 = 64;
const MAX_ATTEMPTS: usize = 64;

/// Random simple `n`-gon with integer vertices in `[0, 64)²`, fully
/// determined by `(n, seed)`.
///
/// Points are drawn in general position (no three collinear), put in a
/// random order, and untangled by 2-opt moves until the cycle is simple.
/// Each move replaces two crossing edges by two shorter ones, so total edge
/// length strictly drops and the loop terminates.
pub fn random_polygon(n: usize, seed: u64) -> Result<SimplePolygon, HarnessError> {
    assert!(n >= 3, "polygons have at least three vertices");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..MAX_ATTEMPTS {
        let Some(mut pts) = sample_points(n, &mut rng) else {
            continue;
        };
        pts.shuffle(&mut rng);
        untangle(&mut pts);
        if let Ok(p) = SimplePolygon::new(pts) {
            return Ok(p);
        }
    }
    Err(HarnessError::GenerationFailed { n, seed })
}

fn sample_points(n: usize, rng: &mut ChaCha8Rng) -> Option<Vec<Point>> {
    let mut pts: Vec<Point> = Vec::with_capacity(n);
    let mut rejections = 0;
    while pts.len() < n {
        let c = Point::from_ints(rng.gen_range(0..BOX), rng.gen_range(0..BOX));
        let clash = pts.contains(&c)
            || (0..pts.len()).any(|i| {
                (i + 1..pts.len())
                    .any(|j| orientation(&pts[i], &pts[j], &c) == Orientation::Collinear)
            });
        if clash {
            rejections += 1;
            if rejections > 10_000 {
                return None;
            }
            continue;
        }
        pts.push(c);
    }
    Some(pts)
}

/// Repeated 2-opt: while two non-adjacent edges cross, reverse the chain
/// between them.
fn untangle(pts: &mut [Point]) {
    let n = pts.len();
    let edge = |pts: &[Point], i: usize| Segment::new(pts[i].clone(), pts[(i + 1) % n].clone());
    'outer: loop {
        for i in 0..n {
            for j in i + 2..n {
                if i == 0 && j == n - 1 {
                    continue;
                }
                if segment_intersection(&edge(pts, i), &edge(pts, j)) != Intersection::Empty {
                    pts[i + 1..=j].reverse();
                    continue 'outer;
                }
            }
        }
        return;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polygon::triangulate;

    #[test]
    fn deterministic() {
        for seed in 0..20 {
            assert_eq!(
                random_polygon(9, seed).unwrap(),
                random_polygon(9, seed).unwrap()
            );
        }
        assert_ne!(random_polygon(9, 1).unwrap(), random_polygon(9, 2).unwrap());
    }

    #[test]
    fn triangles_and_heptagons() {
        for seed in 0..50 {
            let t = random_polygon(3, seed).unwrap();
            assert!(t.area().is_positive());
            let h = random_polygon(7, seed).unwrap();
            assert_eq!(triangulate(&h).triangles().len(), 5);
        }
    }

    #[test]
    fn coordinates_in_box() {
        let p = random_polygon(12, 7).unwrap();
        let lo = crate::exact::Rational::zero();
        let hi = crate::exact::Rational::from_integer(BOX);
        for v in p.vertices() {
            assert!(v.x >= lo && v.x < hi && v.y >= lo && v.y < hi);
            assert!(v.x.is_integer() && v.y.is_integer());
        }
    }

    #[test]
    fn produces_nonconvex_shapes() {
        let reflex = (0..50)
            .filter(|&s| {
                let p = random_polygon(8, s).unwrap();
                (0..8).any(|i| p.is_reflex(i))
            })
            .count();
        assert!(reflex > 25);
    }
}
