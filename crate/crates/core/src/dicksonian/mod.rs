//! Leader sets `L±(M)`, leading-Dicksonian sequences and machine checks of
//! the per-algebra leader-set lemmas.

mod hypotheses;
mod lemmas;
mod lset;
mod sequence;

use crate::lie::BasisElement;
use crate::poly::DTuple;

pub use hypotheses::{
    check_cofinite_window, check_cofinite_window_with, check_dagger, cofinite_constant,
};
pub use lemmas::{verify_claimed_subset, LemmaTag};
pub use lset::{
    l_condition_holds, l_member, l_member_with_limit, tuple_space, tuple_space_with_limit,
    DEFAULT_MAX_GAP,
};
pub use sequence::{
    check_leading_dicksonian, dickson_check, search_leading_dicksonian, LatticePoint,
};

/// Outcome of a decision procedure: a verdict plus whatever evidence the
/// procedure produced.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct MembershipReport {
    pub verdict: bool,
    pub witness: Option<DTuple>,
    /// 1-based `(i, j)` of the first offending pair of positions.
    pub failing_pair: Option<(usize, usize)>,
    /// Elements singled out by the check (cofiniteness exceptions).
    pub exceptions: Vec<BasisElement>,
    pub notes: String,
}

impl MembershipReport {
    pub fn pass(notes: impl Into<String>) -> Self {
        MembershipReport {
            verdict: true,
            notes: notes.into(),
            ..Default::default()
        }
    }

    pub fn fail(notes: impl Into<String>) -> Self {
        MembershipReport {
            verdict: false,
            notes: notes.into(),
            ..Default::default()
        }
    }

    pub(crate) fn fail_at(i: usize, j: usize, notes: impl Into<String>) -> Self {
        MembershipReport {
            failing_pair: Some((i, j)),
            ..Self::fail(notes)
        }
    }
}

/// A pair sequence `((M_i, N_i))` with `M_i ≤ N_i`.
pub type PairSequence = Vec<(BasisElement, BasisElement)>;
