//! Optimality certificates for the minimiser `g*_y`: the multiplier function
//! `W(s, y)`, its `y`-derivative, the finite Hilbert transform relation on the
//! liquid interval and the airfoil-equation inversion that produces `g*'`.

use std::f64::consts::PI;

use super::closed::{beta, g_star_prime_unchecked, liquid_interval};
use crate::error::{Error, Result};
use crate::quad::{integrate_with_breaks, principal_value, Estimate, QuadratureSpec};

fn w_spec() -> QuadratureSpec {
    QuadratureSpec { abs_tol: 1e-12, rel_tol: 1e-14, max_subdivisions: 4000 }
}

fn check_wy(s: f64, y: f64) -> Result<()> {
    if !(s > 0.0 && s < 1.0) {
        return Err(Error::Domain { what: "W", detail: format!("s = {s} not in (0, 1)") });
    }
    if !(y > 0.0 && y <= 0.5) {
        return Err(Error::Domain { what: "W", detail: format!("y = {y} not in (0, 1/2]") });
    }
    Ok(())
}

/// `W(s, y) = \int_0^1 g*'(t) (log|t - 1/2| - log|s - t|) dt`, i.e. the
/// multiplier function with the Lagrange multiplier fixed so that `W(1/2) = 0`.
pub fn w(s: f64, y: f64) -> Result<Estimate> {
    check_wy(s, y)?;
    let (lo, hi) = liquid_interval(y);
    let mut pts = vec![0.0, lo, 0.5, s, hi, 1.0];
    pts.retain(|&p| (0.0..=1.0).contains(&p));
    pts.sort_by(f64::total_cmp);
    integrate_with_breaks(
        |t| {
            let a = if t == 0.5 { 0.0 } else { (t - 0.5).abs().ln() };
            let b = if t == s { 0.0 } else { (s - t).abs().ln() };
            g_star_prime_unchecked(t, y) * (a - b)
        },
        &pts,
        &w_spec(),
    )
}

/// `y` at which `s` sits on the edge of the liquid interval: `beta(y) = |2s - 1|`.
pub fn y_hat(s: f64) -> f64 {
    let b = (2.0 * s - 1.0).abs();
    (1.0 - (1.0 - b * b).max(0.0).sqrt()) / 2.0
}

/// Closed form of `dW/dy` for `s` outside the liquid interval:
/// `-2 log((d + sqrt(d^2 - (beta/2)^2)) / (beta/2))` with `d = |s - 1/2|`.
pub fn dw_dy_closed(s: f64, y: f64) -> Result<f64> {
    check_wy(s, y)?;
    let half = beta(y) / 2.0;
    let d = (s - 0.5).abs();
    if d < half - 1e-12 {
        return Err(Error::Domain {
            what: "dW/dy",
            detail: format!("s = {s} lies inside the liquid interval for y = {y}"),
        });
    }
    let root = (d * d - half * half).max(0.0).sqrt();
    Ok(-2.0 * ((d + root) / half).ln())
}

/// Centred difference of `W` in `y`.
pub fn dw_dy_numeric(s: f64, y: f64, h: f64) -> Result<f64> {
    Ok((w(s, y + h)?.value - w(s, y - h)?.value) / (2.0 * h))
}

/// Right-hand side of the finite Hilbert transform relation on the liquid interval.
fn hilbert_rhs(s: f64, y: f64) -> f64 {
    let (lo, hi) = liquid_interval(y);
    -s.ln() + (1.0 - s).ln() + (s - lo).ln() - (hi - s).ln()
}

/// `-PV \int_{lo}^{hi} g'(t) / (s - t) dt` minus the logarithmic right-hand side,
/// for `s` inside the liquid interval of `y < 1/2`. Vanishes for `g = g*`.
pub fn hilbert_residual(s: f64, y: f64) -> Result<Estimate> {
    hilbert_residual_with(&|t| g_star_prime_unchecked(t, y), s, y)
}

pub fn hilbert_residual_with(gprime: &dyn Fn(f64) -> f64, s: f64, y: f64) -> Result<Estimate> {
    let (lo, hi) = liquid_interval(y);
    if !(y > 0.0 && y < 0.5) || !(lo < s && s < hi) {
        return Err(Error::Domain {
            what: "Hilbert residual",
            detail: format!("need 0 < y < 1/2 and s inside ({lo}, {hi}), got s = {s}, y = {y}"),
        });
    }
    let spec = QuadratureSpec { abs_tol: 1e-10, rel_tol: 1e-12, max_subdivisions: 4000 };
    let lhs = principal_value(gprime, lo, hi, s, &[0.5], &spec)?;
    Ok(Estimate { value: lhs.value - hilbert_rhs(s, y), error: lhs.error })
}

/// Right-hand side `p(v)` of the airfoil equation
/// `(1/pi) PV \int_{-1}^1 h(u) / (u - v) du = p(v)` satisfied by `h(v) = g*'((1 + beta v)/2)`.
pub fn airfoil_rhs(beta: f64, v: f64) -> f64 {
    (((1.0 - beta * v) / (1.0 + beta * v)).ln() + ((1.0 + v) / (1.0 - v)).ln()) / PI
}

/// Bounded solution `h(v) = -(2/pi) arctan sqrt((1 - beta^2) / (beta^2 (1 - v^2)))`.
pub fn airfoil_h_closed(beta: f64, v: f64) -> f64 {
    let denom = beta * beta * (1.0 - v * v);
    if denom <= 0.0 {
        return -1.0;
    }
    -2.0 / PI * ((1.0 - beta * beta) / denom).sqrt().atan()
}

/// Constant `c` selecting the bounded solution of the inversion formula for
/// [`airfoil_rhs`].
pub fn airfoil_bounded_c(beta: f64) -> f64 {
    -2.0 / PI * (beta - 1.0 + (1.0 - beta * beta).sqrt()) / beta
}

/// General inversion of the airfoil equation:
/// `h(v) = (1/pi) (1-v^2)^{-1/2} PV \int_{-1}^1 sqrt(1-u^2) p(u) / (v - u) du + c (1-v^2)^{-1/2}`.
pub fn airfoil_invert(
    p: &dyn Fn(f64) -> f64,
    grid: &[f64],
    c: f64,
    spec: &QuadratureSpec,
) -> Result<Vec<Estimate>> {
    grid.iter()
        .map(|&v| {
            if !(v > -1.0 && v < 1.0) {
                return Err(Error::Domain { what: "airfoil inversion", detail: format!("v = {v}") });
            }
            let pv = principal_value(|u| (1.0 - u * u).max(0.0).sqrt() * p(u), -1.0, 1.0, v, &[], spec)?;
            let scale = 1.0 / (1.0 - v * v).sqrt();
            // PV of f/(v-u) is minus PV of f/(u-v).
            Ok(Estimate { value: scale * (-pv.value / PI + c), error: scale * pv.error / PI })
        })
        .collect()
}

/// Forward finite Hilbert transform `(1/pi) PV \int_{-1}^1 h(u) / (u - v) du`.
pub fn hilbert_forward(h: &dyn Fn(f64) -> f64, v: f64, spec: &QuadratureSpec) -> Result<Estimate> {
    let pv = principal_value(h, -1.0, 1.0, v, &[], spec)?;
    Ok(Estimate { value: pv.value / PI, error: pv.error / PI })
}
