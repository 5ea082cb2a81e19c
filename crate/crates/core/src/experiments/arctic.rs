use std::f64::consts::FRAC_1_SQRT_2;

use rayon::prelude::*;
use serde::Serialize;

use super::report::{ExperimentReport, Summary};
use super::{sample_seed, strictly_decreasing};
use crate::aztec::{frozen_mask, sample_tiling, DominoTiling};
use crate::error::{Error, Result};
use crate::tableaux::{arctic_deviation, sample_tableau};

/// Radius statistics of the polar regions of one tiling, in coordinates
/// scaled by `1/n`. Radii are measured at cell centres.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct RadiusEstimate {
    /// Largest radius of a cell covered by a temperate domino.
    pub temperate_max: f64,
    /// Smallest radius of a cell covered by a polar domino.
    pub polar_min: f64,
    /// `temperate_max - eps`: every cell beyond `r_in + eps` is polar.
    pub r_in: f64,
    /// `polar_min + eps`: every polar cell lies beyond `r_out - eps`.
    pub r_out: f64,
    /// Midpoint of `temperate_max` and `polar_min`.
    pub radius: f64,
    /// Whether the two-sided inclusion with squared-radius margin `eps` holds
    /// around the circle `x^2 + y^2 = 1/2`.
    pub inclusion_holds: bool,
}

pub fn radius_estimate(t: &DominoTiling, eps: f64) -> RadiusEstimate {
    let n = t.order() as f64;
    let mask = frozen_mask(t);
    let mut temperate_max: f64 = 0.0;
    let mut polar_min: f64 = 1.0;
    for (k, d) in t.dominoes().iter().enumerate() {
        for (i, j) in d.cells() {
            let r = ((i as f64 + 0.5).hypot(j as f64 + 0.5) / n).min(1.0);
            if mask.is_polar(k) {
                polar_min = polar_min.min(r);
            } else {
                temperate_max = temperate_max.max(r);
            }
        }
    }
    let inclusion_holds =
        temperate_max * temperate_max <= 0.5 + eps && polar_min * polar_min >= 0.5 - eps;
    RadiusEstimate {
        temperate_max,
        polar_min,
        r_in: (temperate_max - eps).clamp(0.0, 1.0),
        r_out: (polar_min + eps).clamp(0.0, 1.0),
        radius: 0.5 * (temperate_max + polar_min),
        inclusion_holds,
    }
}

/// Default lattice-scale margin `2 / sqrt(n)`.
pub fn default_eps(n: usize) -> f64 {
    2.0 / (n as f64).sqrt()
}

pub const ARCTIC_RADIUS_TOL: f64 = 0.05;

/// Radius of the boundary of the polar regions of uniform tilings. The check
/// compares the median estimate at the largest order with `1/sqrt 2`.
pub fn arctic_radius(ns: &[usize], samples: usize, seed: u64, eps: Option<f64>) -> Result<ExperimentReport> {
    if ns.is_empty() || samples == 0 {
        return Err(Error::InvalidArgument("need at least one order and one sample".into()));
    }
    let mut report = ExperimentReport::new(
        "arctic-radius",
        seed,
        &["n", "sample", "radius", "temperate_max", "polar_min", "r_in", "r_out", "inclusion"],
    );
    report.param("n", format!("{ns:?}")).param("samples", samples);
    match eps {
        Some(e) => report.param("eps", e),
        None => report.param("eps", "2/sqrt(n)"),
    };
    report.threshold("radius_tol", ARCTIC_RADIUS_TOL, "|median radius - 1/sqrt 2| at the largest n");
    let mut spreads = Vec::new();
    for &n in ns {
        let e = eps.unwrap_or_else(|| default_eps(n));
        let est: Vec<RadiusEstimate> = (0..samples)
            .into_par_iter()
            .map(|s| radius_estimate(&sample_tiling(n, sample_seed(seed, n, s)), e))
            .collect();
        let radii: Vec<f64> = est.iter().map(|r| r.radius).collect();
        let summary = Summary::of(n, "radius", &radii);
        spreads.push(summary.q90 - summary.q10);
        report.summaries.push(summary);
        let held: Vec<f64> = est.iter().map(|r| f64::from(u8::from(r.inclusion_holds))).collect();
        report.summaries.push(Summary::of(n, "inclusion", &held));
        for (s, r) in est.iter().enumerate() {
            report.rows.push(vec![
                n as f64,
                s as f64,
                r.radius,
                r.temperate_max,
                r.polar_min,
                r.r_in,
                r.r_out,
                f64::from(u8::from(r.inclusion_holds)),
            ]);
        }
    }
    let last = *report.medians("radius").last().expect("at least one order");
    let dev = (last - FRAC_1_SQRT_2).abs();
    report.check(
        "radius",
        dev < ARCTIC_RADIUS_TOL,
        format!("median {last} at n={}, deviation {dev}", ns[ns.len() - 1]),
    );
    report.param("spread_q90_q10", format!("{spreads:?}"));
    Ok(report)
}

/// Distance of the frozen time periods of random square tableaux from the
/// arctic curves, per order.
pub fn tableau_arctic(ns: &[usize], samples: usize, seed: u64) -> Result<ExperimentReport> {
    if ns.iter().any(|&n| n < 2) || samples == 0 {
        return Err(Error::InvalidArgument("need orders >= 2 and at least one sample".into()));
    }
    let mut report = ExperimentReport::new("tableau-arctic", seed, &["n", "sample", "dev_minus", "dev_plus", "dev"]);
    report.param("n", format!("{ns:?}")).param("samples", samples);
    report.threshold("trend", 0.0, "median max(dev_minus, dev_plus) strictly decreases in n");
    for &n in ns {
        let devs: Vec<(f64, f64)> = (0..samples)
            .into_par_iter()
            .map(|s| arctic_deviation(&sample_tableau(n, sample_seed(seed, n, s))))
            .collect();
        let combined: Vec<f64> = devs.iter().map(|d| d.0.max(d.1)).collect();
        report.summaries.push(Summary::of(n, "dev", &combined));
        for (s, (m, p)) in devs.into_iter().enumerate() {
            report.rows.push(vec![n as f64, s as f64, m, p, m.max(p)]);
        }
    }
    let medians = report.medians("dev");
    report.check("decreasing", strictly_decreasing(&medians), format!("medians {medians:?}"));
    Ok(report)
}
