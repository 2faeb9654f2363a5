use crate::par;
use crate::polygon::SimplePolygon;
use crate::strategies::{exists_good_start, Interpretation};

use super::random_polygon;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchResult {
    pub found: Option<SimplePolygon>,
    /// Trials up to and including the hit, or the whole budget.
    pub trials_run: u64,
    pub interpretation: Interpretation,
    pub n: usize,
    pub seed: u64,
}

/// True when no every-third placement of `interpretation` covers `poly`.
pub fn is_counterexample(poly: &SimplePolygon, interpretation: Interpretation) -> bool {
    exists_good_start(poly, interpretation).is_none()
}

/// Tries `random_polygon(n, seed ^ trial)` for each trial and returns the
/// lowest-index counterexample. The result does not depend on thread count.
pub fn search_counterexample(
    n: usize,
    interpretation: Interpretation,
    trials: u64,
    seed: u64,
) -> SearchResult {
    assert!(trials >= 1, "search needs at least one trial");
    let hit = par::find_map_first(0..trials, |i| {
        let poly = random_polygon(n, seed ^ i).ok()?;
        is_counterexample(&poly, interpretation).then_some((i, poly))
    });
    let (trials_run, found) = match hit {
        Some((i, p)) => (i + 1, Some(p)),
        None => (trials, None),
    };
    SearchResult {
        found,
        trials_run,
        interpretation,
        n,
        seed,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::harness::fixtures;

    #[test]
    fn nonagon_is_counterexample() {
        let p = fixtures::paper_nonagon();
        assert!(is_counterexample(&p, Interpretation::Generous));
        assert!(is_counterexample(&p, Interpretation::Strict));
    }

    #[test]
    fn heptagons_have_no_strict_counterexample() {
        let r = search_counterexample(7, Interpretation::Strict, 60, 11);
        assert!(r.found.is_none());
        assert_eq!(r.trials_run, 60);
    }

    #[test]
    fn strict_octagon_fixture_is_counterexample() {
        assert!(is_counterexample(
            &fixtures::strict_octagon(),
            Interpretation::Strict
        ));
    }
}
