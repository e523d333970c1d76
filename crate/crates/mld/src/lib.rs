//! Exact-arithmetic engine for log discrepancies of divisorial valuations
//! presented as weighted-blow-up plans over a smooth 3-fold (or surface)
//! germ, and for computing the minimal log discrepancy of a pair by a
//! bounded search over plans of length at most two.
//!
//! All arithmetic is over the rationals and exact; every reported value is
//! reproducible bit for bit.

pub mod algebra;
pub mod blowup;
pub mod error;
pub mod io;
pub mod jets;
pub mod search;
pub mod wps;

pub use error::EngineError;

/// Switches candidate evaluation between the rayon-backed data-parallel
/// path and the plain sequential one. With the `parallel` feature disabled
/// both variants run sequentially.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum EvalMode {
    #[default]
    Parallel,
    Sequential,
}

pub(crate) fn map_collect<C, T, F>(mode: EvalMode, items: &[C], f: F) -> Vec<T>
where
    C: Sync,
    T: Send,
    F: Fn(&C) -> T + Sync + Send,
{
    match mode {
        EvalMode::Sequential => items.iter().map(f).collect(),
        #[cfg(feature = "parallel")]
        EvalMode::Parallel => {
            use rayon::prelude::*;
            items.par_iter().map(f).collect()
        }
        #[cfg(not(feature = "parallel"))]
        EvalMode::Parallel => items.iter().map(f).collect(),
    }
}
