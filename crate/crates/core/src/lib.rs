//! Exact search for m-bipartite Ramsey numbers `BR_m(K_{2,2}, K_{t,t})`.
//!
//! `BR_m(K_{2,2}, K_{t,t})` is the least `n` such that every subgraph `G` of
//! `K_{m,n}` contains `K_{2,2}` or has `K_{t,t}` in its bipartite complement.
//! The crate provides
//!
//! * [`BipartiteGraph`] with exact biclique and coverage primitives,
//! * the extremal good colorings and a verifier producing
//!   [`WitnessCertificate`]s, with a text file format,
//! * [`arrows`] and [`find_br_m`], a pruned canonical search,
//! * a DIMACS export of the same question for external SAT solvers.

mod bits;
pub mod cnf;
pub mod dpll;
mod error;
mod format;
mod graph;
pub mod known;
#[cfg(any(test, feature = "oracle"))]
pub mod oracle;
pub mod search;
mod witness;

pub use bits::{Bits, ColSet, MAX_COLUMNS};
pub use cnf::{decode_model, encode_cnf, parse_model, CnfInstance};
pub use error::{Error, Result};
pub use format::{parse_witness, serialize_witness, WITNESS_MAGIC};
pub use graph::{Biclique, BicliqueSpec, BipartiteGraph, CoverageReport, PairBudget};
pub use known::{BrValue, KnownValueRecord, Provenance, TheoremTable};
pub use search::{
    arrows, canonical_extension_ok, degree_cap, find_br_m, nonexistence_criterion,
    ArrowingInstance, PruneRule, PruneToggles, SearchConfig, SearchOutcome, SearchStats, Verdict,
};
pub use witness::{
    star_witness, verify_good_coloring, witness_6x39, witness_8x29, VerificationReport, Violation,
    WitnessCertificate,
};
