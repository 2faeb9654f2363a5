use crate::exact::{in_closed_triangle, in_open_triangle, Point, PointLocation, Rational};
use crate::par;
use crate::polygon::SimplePolygon;

use super::visible::segment_in_polygon;
use super::CoverageReport;

/// Brute-force coverage sampling, independent of the arrangement.
///
/// Samples the cell centres of a `resolution x resolution` grid over the
/// bounding box and, for each sample strictly inside the polygon, records
/// whether some guard sees it.
pub fn grid_oracle(poly: &SimplePolygon, guards: &[usize], resolution: u32) -> Vec<(Point, bool)> {
    assert!(resolution >= 2, "grid resolution must be at least 2");
    let (lo, hi) = poly.bounds();
    let steps = 2 * resolution as i64;
    let coord = |lo: &Rational, hi: &Rational, i: i64| {
        lo + &(&(hi - lo) * &Rational::new(2 * i + 1, steps))
    };
    let xs: Vec<Rational> = (0..resolution as i64)
        .map(|i| coord(&lo.x, &hi.x, i))
        .collect();
    let ys: Vec<Rational> = (0..resolution as i64)
        .map(|j| coord(&lo.y, &hi.y, j))
        .collect();
    let gpts: Vec<&Point> = guards.iter().map(|&g| poly.vertex(g)).collect();
    let rows = par::map(&ys, |y| {
        xs.iter()
            .map(|x| Point::new(x.clone(), y.clone()))
            .filter(|q| poly.locate(q) == PointLocation::Inside)
            .map(|q| {
                let seen = gpts.iter().any(|g| segment_in_polygon(poly, g, &q));
                (q, seen)
            })
            .collect::<Vec<_>>()
    });
    rows.into_iter().flatten().collect()
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct OracleComparison {
    pub samples: usize,
    pub exempt: usize,
    pub disagreements: Vec<Point>,
}

impl OracleComparison {
    pub fn agrees(&self) -> bool {
        self.disagreements.is_empty()
    }
}

/// Checks each sample's covered flag against membership in the report's
/// blindspot cells. Samples on a blindspot cell's boundary are exempt.
pub fn compare_with_report(samples: &[(Point, bool)], report: &CoverageReport) -> OracleComparison {
    let cells: Vec<(&[Point; 3], Point, Point)> = report
        .blindspot_cells
        .iter()
        .map(|t| {
            let lo = Point::new(
                t[0].x.clone().min(t[1].x.clone()).min(t[2].x.clone()),
                t[0].y.clone().min(t[1].y.clone()).min(t[2].y.clone()),
            );
            let hi = Point::new(
                t[0].x.clone().max(t[1].x.clone()).max(t[2].x.clone()),
                t[0].y.clone().max(t[1].y.clone()).max(t[2].y.clone()),
            );
            (t, lo, hi)
        })
        .collect();
    let mut out = OracleComparison {
        samples: samples.len(),
        ..Default::default()
    };
    for (q, covered) in samples {
        let mut inside = false;
        let mut on_edge = false;
        for (t, lo, hi) in &cells {
            if q.x < lo.x || q.x > hi.x || q.y < lo.y || q.y > hi.y {
                continue;
            }
            if in_open_triangle(&t[0], &t[1], &t[2], q) {
                inside = true;
            } else if in_closed_triangle(&t[0], &t[1], &t[2], q) {
                on_edge = true;
            }
        }
        if on_edge && !inside {
            out.exempt += 1;
            continue;
        }
        if *covered == inside {
            out.disagreements.push(q.clone());
        }
    }
    out
}
