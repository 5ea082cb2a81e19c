//! Limit shapes and the rate functional of the domino-measure row law.

mod closed;
mod profile;
mod variational;

pub use closed::{
    beta, f_star, g_field, g_star, g_star_prime, l_boundary, liquid_interval, phi_pm, r_field,
    r_field_clamped, theta, z,
};
pub use profile::{
    embed_sequence, functional_j, inner_product, log_cell_integral, rate_i, rate_i_quadrature,
    Profile,
};
pub use variational::{
    airfoil_bounded_c, airfoil_h_closed, airfoil_invert, airfoil_rhs, dw_dy_closed, dw_dy_numeric,
    hilbert_forward, hilbert_residual, hilbert_residual_with, w, y_hat,
};

use crate::error::Result;
use crate::quad::QuadratureSpec;

/// `I(f*_y)` by nested quadrature on the closed-form derivative.
pub fn rate_of_minimiser(y: f64, spec: &QuadratureSpec) -> Result<f64> {
    let (lo, hi) = liquid_interval(y);
    let fprime = move |s: f64| (closed::g_star_prime_unchecked(s, y) + 1.0) / 2.0;
    let breaks = if y == 0.5 { vec![] } else { vec![lo, hi] };
    rate_i_quadrature(&fprime, &breaks, spec)
}

/// `I(f*_y)` from the exact formula applied to the interpolant of `f*_y` on a
/// grid refined towards the edges of the liquid interval.
pub fn rate_of_minimiser_interpolated(y: f64, cells: usize) -> Result<f64> {
    let (lo, hi) = liquid_interval(y);
    let mut xs = vec![0.0, 1.0];
    if y != 0.5 && lo > 0.0 {
        xs.extend([lo, hi]);
        // Cosine spacing clusters points at both ends of the liquid interval.
        for k in 1..cells {
            let t = 0.5 * (1.0 - (std::f64::consts::PI * k as f64 / cells as f64).cos());
            xs.push(lo + (hi - lo) * t);
        }
    } else {
        xs.extend((1..cells).map(|k| k as f64 / cells as f64));
    }
    xs.sort_by(f64::total_cmp);
    xs.dedup();
    let vs = xs.iter().map(|&x| f_star(x, y)).collect::<Result<Vec<_>>>()?;
    rate_i(&Profile::new(xs, vs)?)
}
