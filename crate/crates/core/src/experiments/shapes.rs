use rayon::prelude::*;

use super::report::{ExperimentReport, Summary};
use super::{sample_seed, strictly_decreasing};
use crate::asm::{height_matrix, sym_height};
use crate::aztec::{height_function, sample_tiling, tiling_to_pair, DominoTiling};
use crate::error::Result;
use crate::shape::{f_star, g_field, r_field_clamped};

/// `(max |h_{i,j}/n - F(i/n, j/n)|, max |h*_{i,j}/n - G(i/n, j/n)|)` for the
/// ASM `A` of the tiling's compatible pair.
pub fn asm_sup_norms(t: &DominoTiling) -> Result<(f64, f64)> {
    let (a, _) = tiling_to_pair(t)?;
    let n = a.order();
    let h = height_matrix(&a);
    let hs = sym_height(&h);
    let nf = n as f64;
    let mut sup_h: f64 = 0.0;
    let mut sup_s: f64 = 0.0;
    for i in 0..=n {
        for j in 0..=n {
            let (x, y) = (i as f64 / nf, j as f64 / nf);
            sup_h = sup_h.max((h.at(i, j) as f64 / nf - f_star(x, y)?).abs());
            sup_s = sup_s.max((hs.at(i, j) as f64 / nf - g_field(x, y)?).abs());
        }
    }
    Ok((sup_h, sup_s))
}

/// `max_v |eta(v)/n - R(v/n)|` over the vertices of the diamond.
pub fn tiling_sup_norm(t: &DominoTiling) -> Result<f64> {
    let eta = height_function(t)?;
    let nf = t.order() as f64;
    Ok(eta
        .values()
        .into_iter()
        .map(|((i, j), e)| (e as f64 / nf - r_field_clamped(i as f64 / nf, j as f64 / nf)).abs())
        .fold(0.0, f64::max))
}

fn convergence<F>(id: &str, ns: &[usize], samples: usize, seed: u64, metrics: &[&str], f: F) -> Result<ExperimentReport>
where
    F: Fn(&DominoTiling) -> Result<Vec<f64>> + Sync,
{
    let mut cols = vec!["n", "sample"];
    cols.extend_from_slice(metrics);
    let mut report = ExperimentReport::new(id, seed, &cols);
    report.param("n", format!("{ns:?}")).param("samples", samples);
    report.threshold("trend", 0.0, &format!("median {} strictly decreases in n", metrics[0]));
    for &n in ns {
        let values: Vec<Vec<f64>> = (0..samples)
            .into_par_iter()
            .map(|s| f(&sample_tiling(n, sample_seed(seed, n, s))))
            .collect::<Result<_>>()?;
        for (m, name) in metrics.iter().enumerate() {
            let col: Vec<f64> = values.iter().map(|v| v[m]).collect();
            report.summaries.push(Summary::of(n, name, &col));
        }
        for (s, v) in values.into_iter().enumerate() {
            let mut row = vec![n as f64, s as f64];
            row.extend(v);
            report.rows.push(row);
        }
    }
    let medians = report.medians(metrics[0]);
    report.check("decreasing", strictly_decreasing(&medians), format!("medians {medians:?}"));
    Ok(report)
}

/// Sup-norm distance between the scaled height matrix of a domino-measure ASM
/// and its limit shape, with the symmetrized variant alongside.
pub fn asm_shape_convergence(ns: &[usize], samples: usize, seed: u64) -> Result<ExperimentReport> {
    let mut report = convergence("asm-shape", ns, samples, seed, &["sup_h", "sup_hstar"], |t| {
        let (a, b) = asm_sup_norms(t)?;
        Ok(vec![a, b])
    })?;
    // h* - nG = -2 (h - nF) pointwise, so the two statistics must agree.
    let worst = report
        .rows
        .iter()
        .map(|r| (r[3] - 2.0 * r[2]).abs())
        .fold(0.0, f64::max);
    report.threshold("symmetric_consistency", 1e-9, "|sup_hstar - 2 sup_h|");
    report.check("symmetric_consistency", worst < 1e-9, format!("max deviation {worst:e}"));
    Ok(report)
}

/// Sup-norm distance between the scaled height function of a uniform tiling
/// and its limit shape.
pub fn tiling_shape_convergence(ns: &[usize], samples: usize, seed: u64) -> Result<ExperimentReport> {
    convergence("tiling-shape", ns, samples, seed, &["sup_eta"], |t| Ok(vec![tiling_sup_norm(t)?]))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_run_is_reproducible() {
        let a = tiling_shape_convergence(&[6, 10], 4, 1).unwrap();
        let b = tiling_shape_convergence(&[6, 10], 4, 1).unwrap();
        assert_eq!(a.to_csv(), b.to_csv());
        assert!(a.rows.iter().all(|r| r[2] >= 0.0));
        let c = asm_shape_convergence(&[6], 3, 1).unwrap();
        assert!(c.checks.iter().any(|ch| ch.name == "symmetric_consistency" && ch.passed));
    }
}
