//! Reproducible Monte-Carlo and exact-enumeration experiments.
//!
//! Every sample gets its own seed, derived from the master seed, the order
//! `n` and the sample index, so reports are byte-identical across runs and
//! thread counts.

mod arctic;
mod ldp;
mod report;
mod shapes;

pub use arctic::{arctic_radius, radius_estimate, tableau_arctic, RadiusEstimate};
pub use ldp::{ldp_row_check, ldp_trend, LdpRow, LdpTable};
pub use report::{Check, ExperimentReport, Summary, Threshold};
pub use shapes::{asm_shape_convergence, asm_sup_norms, tiling_shape_convergence, tiling_sup_norm};

use crate::rng::derive_stream_seed;

/// Seed of sample `index` at order `n`.
pub fn sample_seed(master: u64, n: usize, index: usize) -> u64 {
    derive_stream_seed(master, n as u64, index as u64)
}

/// `true` when every element is strictly below its predecessor.
pub(crate) fn strictly_decreasing(v: &[f64]) -> bool {
    v.windows(2).all(|w| w[1] < w[0])
}
