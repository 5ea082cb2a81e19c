//! Exact combinatorics and limit shapes for alternating sign matrices,
//! domino tilings of the Aztec diamond and square Young tableaux.
//!
//! The crate is organised by subject:
//!
//! * [`asm`]: alternating sign matrices, height matrices, monotone triangles,
//!   the domino measure and its row law, 2-enumeration and the counting
//!   function of monotone triangles with a prescribed bottom row.
//! * [`aztec`]: Aztec diamond geometry, domino tilings, height functions,
//!   domino shuffling, compatible ASM pairs and polar (frozen) regions.
//! * [`shape`]: the rate functional, the closed-form limit shapes and the
//!   numerical machinery (quadrature, principal values, airfoil inversion)
//!   used to certify the minimiser.
//! * [`tableaux`]: square Young tableaux, hook-walk sampling and the jump
//!   process picture of their arctic circle.
//! * [`experiments`]: reproducible Monte-Carlo and exact-enumeration
//!   drivers producing CSV/JSON reports.
//! * [`render`]: deterministic SVG output.

pub mod asm;
pub mod aztec;
pub mod error;
pub mod experiments;
pub mod quad;
pub mod render;
pub mod rng;
pub mod shape;
pub mod stats;
pub mod tableaux;

pub use error::{Error, Result};
