//! Closed-form limit shapes.
//!
//! `F(x, y)` is the limiting scaled height matrix `h_{i,j} / n` of a
//! domino-random ASM at `(i/n, j/n) -> (x, y)`; for fixed `y` the profile
//! `x -> F(x, y)` is the minimiser `f*_y` of the rate functional.

use std::f64::consts::{LN_2, PI};

use crate::error::{Error, Result};

/// Radicands below this are treated as zero (points on the circle).
const RADICAND_EPS: f64 = 1e-14;

/// `beta(y) = 2 sqrt(y (1 - y))`.
pub fn beta(y: f64) -> f64 {
    2.0 * (y * (1.0 - y)).max(0.0).sqrt()
}

/// Interval `((1-beta)/2, (1+beta)/2)` where the minimiser is not frozen.
pub fn liquid_interval(y: f64) -> (f64, f64) {
    let b = beta(y);
    ((1.0 - b) / 2.0, (1.0 + b) / 2.0)
}

fn xlogx2(y: f64) -> f64 {
    if y <= 0.0 {
        0.0
    } else {
        0.5 * y * y * y.ln()
    }
}

/// Normalising constant of the row large-deviation rate:
/// `y^2 log(y) / 2 + (1-y)^2 log(1-y) / 2 + (log 2 + 3/2) y (1-y)`.
pub fn theta(y: f64) -> f64 {
    xlogx2(y) + xlogx2(1.0 - y) + (LN_2 + 1.5) * y * (1.0 - y)
}

fn check_unit(what: &'static str, v: f64, name: &str) -> Result<()> {
    if !(0.0..=1.0).contains(&v) {
        return Err(Error::Domain { what, detail: format!("{name} = {v} not in [0, 1]") });
    }
    Ok(())
}

fn radicand(x: f64, y: f64) -> f64 {
    0.25 - (x - 0.5).powi(2) - (y - 0.5).powi(2)
}

/// The three-arctangent function `Z(x, y)` on the closed disc of radius 1/2
/// about `(1/2, 1/2)`, `y != 1/2`.
pub fn z(x: f64, y: f64) -> Result<f64> {
    let r = radicand(x, y);
    if r < -RADICAND_EPS {
        return Err(Error::Domain { what: "Z", detail: format!("({x}, {y}) lies outside the disc") });
    }
    if y == 0.5 {
        return Err(Error::Domain { what: "Z", detail: "y = 1/2 is excluded".into() });
    }
    let sr = if r < RADICAND_EPS { 0.0 } else { r.sqrt() };
    let (dx, dy) = (x - 0.5, 0.5 - y);
    let t1 = dx * (sr / dy).atan();
    let t2 = 0.5 * (2.0 * dx * dy).atan2(sr);
    let t3 = -dy * dx.atan2(sr);
    Ok(2.0 / PI * (t1 + t2 + t3))
}

/// `F(x, y) = f*_y(x)`.
pub fn f_star(x: f64, y: f64) -> Result<f64> {
    check_unit("F", x, "x")?;
    check_unit("F", y, "y")?;
    Ok(f_star_unchecked(x, y))
}

fn f_star_unchecked(x: f64, y: f64) -> f64 {
    if y == 0.5 {
        return x / 2.0;
    }
    if y > 0.5 {
        return x - f_star_unchecked(x, 1.0 - y);
    }
    if y == 0.0 {
        return 0.0;
    }
    let (lo, hi) = liquid_interval(y);
    if x <= lo {
        0.0
    } else if x >= hi {
        y
    } else {
        y / 2.0 + 0.5 * z(x, y).expect("inside the disc")
    }
}

/// `g*_y(x) = 2 f*_y(x) - x`.
pub fn g_star(x: f64, y: f64) -> Result<f64> {
    Ok(2.0 * f_star(x, y)? - x)
}

/// Derivative of `g*_y` in `x`; at the two frozen/liquid junctions the
/// one-sided values agree (both equal -1 for `y < 1/2`).
pub fn g_star_prime(s: f64, y: f64) -> Result<f64> {
    check_unit("g*'", s, "s")?;
    check_unit("g*'", y, "y")?;
    Ok(g_star_prime_unchecked(s, y))
}

pub(crate) fn g_star_prime_unchecked(s: f64, y: f64) -> f64 {
    if y == 0.5 {
        return 0.0;
    }
    if y > 0.5 {
        return -g_star_prime_unchecked(s, 1.0 - y);
    }
    let (lo, hi) = liquid_interval(y);
    if s <= lo || s >= hi {
        return -1.0;
    }
    let r = radicand(s, y).max(0.0);
    2.0 / PI * (r.sqrt() / (0.5 - y)).atan() - 1.0
}

/// `G(x, y) = x + y - 2 F(x, y)`, the limit of `h*_{i,j} / n`.
pub fn g_field(x: f64, y: f64) -> Result<f64> {
    Ok(x + y - 2.0 * f_star(x, y)?)
}

/// Limiting height function of the Aztec diamond:
/// `R(u, v) = 2 G((u - v + 1)/2, (u + v + 1)/2)` on `|u| + |v| <= 1`.
pub fn r_field(u: f64, v: f64) -> Result<f64> {
    if u.abs() + v.abs() > 1.0 + 1e-12 {
        return Err(Error::Domain { what: "R", detail: format!("|u| + |v| > 1 at ({u}, {v})") });
    }
    Ok(r_field_clamped(u, v))
}

/// `R` with the underlying `G` arguments clamped into the unit square, for
/// lattice points just outside the limiting diamond.
pub fn r_field_clamped(u: f64, v: f64) -> f64 {
    let x = ((u - v + 1.0) / 2.0).clamp(0.0, 1.0);
    let y = ((u + v + 1.0) / 2.0).clamp(0.0, 1.0);
    2.0 * (x + y - 2.0 * f_star_unchecked(x, y))
}

/// Arctic curves of square Young tableaux: `1/2 -+ sqrt(x (1 - x))`.
pub fn phi_pm(x: f64) -> Result<(f64, f64)> {
    check_unit("phi", x, "x")?;
    let r = (x * (1.0 - x)).sqrt();
    Ok((0.5 - r, 0.5 + r))
}

/// Boundary values of the square-tableau limit surface: returns
/// `(L(0, t), L(1, t))`, which also equal `L(t, 0)` and `L(t, 1)`.
pub fn l_boundary(t: f64) -> Result<(f64, f64)> {
    check_unit("L", t, "t")?;
    Ok(((1.0 - (1.0 - t * t).sqrt()) / 2.0, (1.0 + (t * (2.0 - t)).sqrt()) / 2.0))
}
