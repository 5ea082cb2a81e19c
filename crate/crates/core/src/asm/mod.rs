//! Alternating sign matrices and their combinatorics.
//!
//! All weights and probabilities here are exact (`BigInt` / `BigRational`).

mod counting;
mod matrix;
mod operator;
mod triangle;

pub use counting::{
    alpha_bruteforce, alpha_bruteforce_with_limit, asm_count, domino_row_distribution,
    row_law_probability, two_enumeration_bruteforce, two_enumeration_bruteforce_with_limit,
    two_enumeration_closed, uniform_row_law, vandermonde, DEFAULT_MAX_ALPHA_ORDER,
    DEFAULT_MAX_TRIANGLE_ORDER,
};
pub use matrix::{
    asm_from_height, domino_weight, height_matrix, n_plus, row_ascents, sym_height, validate_asm,
    Asm, HeightMatrix, SymHeightMatrix,
};
pub use operator::{alpha_operator_formula, alpha_polynomial, Polynomial, MAX_OPERATOR_ORDER};
pub use triangle::{
    dual_triangle, enumerate_asms, enumerate_asms_with_limit, for_each_triangle,
    from_monotone_triangle, n_plus_triangle, to_monotone_triangle, MonotoneTriangle,
    DEFAULT_MAX_ASM_ORDER,
};

/// `binom(m, 2)` as used in exponents of two.
pub(crate) fn pairs(m: usize) -> usize {
    m * m.saturating_sub(1) / 2
}
