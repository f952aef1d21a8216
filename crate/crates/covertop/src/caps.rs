//! Size guards for the exhaustive parts of the toolkit.
//!
//! Everything here is meant for desk-scale bases. Each guard names the
//! operation it protects; the `COVERTOP_MAX_BASE` environment variable can
//! lower (never raise) every guard at once.

use crate::error::{Error, Result};

/// Atomic bases accepted by [`crate::Base::atomic`].
pub const ATOMIC_BASE: usize = 20;
/// Atom count accepted by [`crate::Base::powerset`].
pub const POWERSET_ATOMS: usize = 16;
/// Total element count for product, list and powerset bases.
pub const COMPOUND_BASE: usize = 65_536;
/// Base size for full fixed-point lattice enumeration.
pub const LATTICE_BASE: usize = 16;
/// Base size for element-quantified law sweeps.
pub const ELEMENT_LAWS: usize = 12;
/// Base size for subset-exhaustive law sweeps.
pub const SUBSET_LAWS: usize = 5;
/// Base size for the implication adjunction sweep (all subset triples).
pub const ADJUNCTION_BASE: usize = 4;
/// Base size for the six-way meet-comparison predicate sweep.
pub const MEET_CHAIN_BASE: usize = 4;

/// Product of all factor sizes admitted to tensor lattice work
/// (coherence composites, exhaustive product-cover sweeps).
pub const TENSOR_LATTICE: usize = 16;
/// Base size for the semantic closure oracle (full table over all subsets).
pub const SEMANTIC_ORACLE_BASE: usize = 5;
/// Source base size for the finite-subset (Dot) construction.
pub const DOT_SOURCE: usize = 8;
/// Target base size for exhaustive cover-map validation.
pub const EXHAUSTIVE_MAP_TARGET: usize = 12;
/// Base size for the batched formality sweeps (all subset pairs as masks).
pub const FORMALITY_SWEEP: usize = 8;
/// Entries kept in each cover's saturation memo.
pub const MEMO_ENTRIES: usize = 4096;

fn env_limit() -> Option<usize> {
    std::env::var("COVERTOP_MAX_BASE")
        .ok()
        .and_then(|v| v.trim().parse().ok())
}

/// The effective value of a guard: the compiled default, possibly lowered
/// by `COVERTOP_MAX_BASE`.
pub fn effective(default: usize) -> usize {
    match env_limit() {
        Some(limit) => default.min(limit),
        None => default,
    }
}

/// Checks `actual` against a guard, reporting the operation by name.
pub fn ensure(what: &'static str, default: usize, actual: usize) -> Result<()> {
    let limit = effective(default);
    if actual > limit {
        Err(Error::SizeCap {
            what,
            limit,
            actual,
        })
    } else {
        Ok(())
    }
}
