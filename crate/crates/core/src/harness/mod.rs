//! Test-corpus generation, frozen fixtures, counterexample search, and the
//! claim checklist.

pub mod fixtures;
mod random;
mod search;
mod verify;

pub use random::{random_polygon, BOX};
pub use search::{is_counterexample, search_counterexample, SearchResult};
pub use verify::{
    claim_comb_lower_bound, claim_fisk_nonagon, claim_heptagon_degree, claim_heptagon_strict,
    claim_nonagon, claim_oracle_equivalence, claim_single_guard, claim_small_generous,
    claim_strict_octagon, claim_two_ears, verify_paper, ClaimOutcome, PaperReport, VerifyConfig,
};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum HarnessError {
    #[error("no simple {n}-gon generated for seed {seed}")]
    GenerationFailed { n: usize, seed: u64 },
}
