//! Entanglement swapping on four-qubit products of Bell pairs.
//!
//! A product of two Bell pairs on qubits (0,1) and (2,3) can be re-expressed
//! in the Bell bases of the outer pair (0,3) and inner pair (1,2). Measuring
//! the inner pair in the Bell basis and postselecting one outcome leaves the
//! outer pair — which never interacted — in the matching Bell state.
//!
//! [`expansion`] computes the 4×4 coefficient tables and verifies the four
//! decomposition identities in both phase conventions; [`postselect`] runs
//! the Bell-state measurement with postselection; [`timeline`] executes
//! whole event sequences (including delayed-choice orders, where the local
//! measurements happen before the inner Bell measurement) and gathers the
//! conditional statistics.

mod expansion;
mod postselect;
mod timeline;

pub use expansion::{
    expand_in_pair_bases, verify_swap_identities, DecompositionCheck, DecompositionReport,
    PairBasisExpansion,
};
pub use postselect::{bell_measure_and_postselect, PostselectionOutcome};
pub use timeline::{
    run_timeline, PairCorrelation, RunRecord, Timeline, TimelineAction, TimelineEvent,
    TimelineOutcome, TimelineStats,
};
