//! Invariants over the random-polygon corpus.

use gallery_core::exact::{triangle_area, PointLocation, Rational};
use gallery_core::harness::{fixtures, random_polygon};
use gallery_core::io::{emit_polygon, parse_polygon};
use gallery_core::polygon::{
    cyclic_coloring, dual_leaves, fisk_coloring, non_overlapping, triangulate, Color,
};
use gallery_core::strategies::{
    every_third_placements, exists_good_start, fisk_placement, min_vertex_guards, Interpretation,
};
use gallery_core::visibility::{coverage, guard_subdivision, is_covered, visible};
use proptest::prelude::*;

fn config(cases: u32) -> ProptestConfig {
    ProptestConfig {
        cases,
        ..ProptestConfig::default()
    }
}

proptest! {
    #![proptest_config(config(200))]

    #[test]
    fn triangulation_tiles_polygon(n in 3usize..14, seed in any::<u64>()) {
        let p = random_polygon(n, seed).unwrap();
        let t = triangulate(&p);
        prop_assert_eq!(t.triangles().len(), n - 2);
        prop_assert_eq!(t.diagonals().len(), n - 3);
        prop_assert_eq!(t.total_area(), p.area());
        prop_assert!(t.dual_is_tree());
    }

    #[test]
    fn fisk_coloring_is_proper(n in 3usize..14, seed in any::<u64>()) {
        let t = triangulate(&random_polygon(n, seed).unwrap());
        let c = fisk_coloring(&t);
        prop_assert!(c.is_proper_for(&t));
        prop_assert!(c.class(c.least_used()).len() <= n / 3);
    }

    #[test]
    fn two_leaves_are_disjoint_ears(n in 4usize..13, seed in any::<u64>()) {
        let p = random_polygon(n, seed).unwrap();
        let leaves = dual_leaves(&triangulate(&p));
        prop_assert!(leaves.len() >= 2);
        if let [a, b] = leaves[..] {
            prop_assert!(non_overlapping(&p, a, b).unwrap());
        }
    }

    #[test]
    fn file_round_trip(n in 3usize..16, seed in any::<u64>()) {
        let p = random_polygon(n, seed).unwrap();
        prop_assert_eq!(parse_polygon(&emit_polygon(&p)).unwrap(), p);
    }
}

proptest! {
    #![proptest_config(config(40))]

    #[test]
    fn coverage_report_is_consistent(n in 4usize..10, seed in any::<u64>(), g in 0usize..10) {
        let p = random_polygon(n, seed).unwrap();
        let guards = [g % n];
        let r = coverage(&p, &guards).unwrap();
        prop_assert_eq!(r.covered, is_covered(&p, &guards).unwrap());
        prop_assert_eq!(r.covered, r.blindspot_area.is_zero());
        prop_assert_eq!(r.covered, r.witnesses.is_empty());
        let area = r
            .blindspot_cells
            .iter()
            .fold(Rational::zero(), |acc, [a, b, c]| acc + triangle_area(a, b, c));
        prop_assert_eq!(&area, &r.blindspot_area);
        prop_assert!(area <= p.area());
        for w in &r.witnesses {
            prop_assert_ne!(p.locate(w), PointLocation::Outside);
            prop_assert!(!visible(&p, p.vertex(guards[0]), w).unwrap());
        }
    }

    #[test]
    fn subdivision_tiles_polygon(n in 4usize..10, seed in any::<u64>()) {
        let p = random_polygon(n, seed).unwrap();
        let guards: Vec<usize> = (0..n).step_by(2).collect();
        let s = guard_subdivision(&p, &guards).unwrap();
        prop_assert_eq!(s.total_area(), p.area());
        for c in s.cells() {
            prop_assert_eq!(p.locate(&c.representative), PointLocation::Inside);
        }
    }

    #[test]
    fn fisk_guards_cover(n in 4usize..12, seed in any::<u64>()) {
        let p = random_polygon(n, seed).unwrap();
        let placement = fisk_placement(&p);
        prop_assert!(placement.guards.len() <= n / 3);
        prop_assert!(is_covered(&p, &placement.guards).unwrap());
    }

    #[test]
    fn generous_octagons_have_a_good_start(seed in any::<u64>()) {
        let p = random_polygon(8, seed).unwrap();
        prop_assert!(exists_good_start(&p, Interpretation::Generous).is_some());
    }
}

#[test]
fn comb_five_needs_five() {
    let c = fixtures::comb(5);
    let (k, witness) = min_vertex_guards(&c, 5).unwrap();
    assert_eq!(k, 5);
    assert!(is_covered(&c, &witness.guards).unwrap());
}

#[test]
fn comb_four_fisk_covers() {
    let c = fixtures::comb(4);
    let placement = fisk_placement(&c);
    assert!(placement.guards.len() <= 4);
    assert!(coverage(&c, &placement.guards).unwrap().covered);
}

#[test]
fn nonagon_cyclic_classes_are_the_placements() {
    let p = fixtures::paper_nonagon();
    let c = cyclic_coloring(&p).unwrap();
    let mut classes: Vec<Vec<usize>> = Color::ALL.iter().map(|&k| c.class(k)).collect();
    classes.sort();
    let mut sets: Vec<Vec<usize>> = every_third_placements(9, Interpretation::Strict)
        .into_iter()
        .map(|g| g.guards)
        .collect();
    sets.sort();
    assert_eq!(classes, sets);
}

#[test]
fn strict_octagon_fixture_survives_generous() {
    // the third guard of the generous walk closes the gap
    let p = fixtures::strict_octagon();
    assert!(exists_good_start(&p, Interpretation::Strict).is_none());
    assert!(exists_good_start(&p, Interpretation::Generous).is_some());
}
