use num::{BigRational, ToPrimitive};
use serde::Serialize;

use super::report::{ExperimentReport, Summary};
use crate::asm::domino_row_distribution;
use crate::error::{Error, Result};
use crate::shape::{embed_sequence, rate_i, theta};

/// Largest order whose ASMs are enumerated for the exact row law.
pub const MAX_LDP_ORDER: usize = 6;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct LdpRow {
    /// Row `k` of the height matrix, `u_0 = 0, ..., u_n = k`.
    pub u: Vec<i64>,
    #[serde(serialize_with = "ser_rational")]
    pub exact: BigRational,
    pub exact_f64: f64,
    /// `exp(-n^2 (I(f_u) + theta(k/n)))`.
    pub approx: f64,
    /// `|n^-2 log P + I(f_u) + theta(k/n)|`.
    pub normalized_error: f64,
}

fn ser_rational<S: serde::Serializer>(r: &BigRational, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&r.to_string())
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct LdpTable {
    pub n: usize,
    pub k: usize,
    pub rows: Vec<LdpRow>,
    pub max_error: f64,
}

fn ascents_to_row(n: usize, xs: &[i64]) -> Vec<i64> {
    let mut u = vec![0; n + 1];
    for j in 1..=n {
        u[j] = u[j - 1] + i64::from(xs.contains(&(j as i64)));
    }
    u
}

/// Exact probabilities of every possible row `k` under the domino measure on
/// `A_n`, next to the large-deviation approximation.
pub fn ldp_row_check(n: usize, k: usize) -> Result<LdpTable> {
    if n > MAX_LDP_ORDER {
        return Err(Error::TooLarge { what: "LDP row check", requested: n, max: MAX_LDP_ORDER });
    }
    let law = domino_row_distribution(n, k)?;
    let n2 = (n * n) as f64;
    let th = theta(k as f64 / n as f64);
    let mut rows = Vec::with_capacity(law.len());
    for (xs, p) in law {
        let u = ascents_to_row(n, &xs);
        let rate = rate_i(&embed_sequence(&u)?)? + th;
        let exact_f64 = p.to_f64().expect("probability fits in f64");
        rows.push(LdpRow {
            normalized_error: (exact_f64.ln() / n2 + rate).abs(),
            approx: (-n2 * rate).exp(),
            exact: p,
            exact_f64,
            u,
        });
    }
    let max_error = rows.iter().map(|r| r.normalized_error).fold(0.0, f64::max);
    Ok(LdpTable { n, k, rows, max_error })
}

/// Maximum normalized error per order and row. The trend check compares
/// orders at equal row fractions `y = k/n` with `0 < y < 1`: the error at the
/// larger order must be strictly smaller. A maximum over all `k` mixes
/// different fractions and is reported only as a summary.
pub fn ldp_trend(ns: &[usize]) -> Result<ExperimentReport> {
    let mut report = ExperimentReport::new("ldp-rows", 0, &["n", "k", "sequences", "max_error"]);
    report.param("n", format!("{ns:?}"));
    report.threshold(
        "trend",
        0.0,
        "max over u of |n^-2 log P + I + theta| strictly decreases in n at fixed k/n",
    );
    let mut errors: Vec<(usize, usize, f64)> = Vec::new();
    for &n in ns {
        let mut per_k = Vec::new();
        for k in 1..=n {
            let t = ldp_row_check(n, k)?;
            report.rows.push(vec![n as f64, k as f64, t.rows.len() as f64, t.max_error]);
            per_k.push(t.max_error);
            errors.push((n, k, t.max_error));
        }
        report.summaries.push(Summary::of(n, "max_error", &per_k));
    }
    let mut compared = 0;
    let mut violations = Vec::new();
    for &(n, k, e) in &errors {
        for &(m, l, f) in &errors {
            // same fraction k/n = l/m, strictly inside (0, 1), with n < m
            if n < m && k * m == l * n && k < n {
                compared += 1;
                if f >= e {
                    violations.push(format!("{k}/{n}: {e} -> {l}/{m}: {f}"));
                }
            }
        }
    }
    let ok = compared > 0 && violations.is_empty();
    let detail = if compared == 0 {
        "no two orders share a row fraction k/n in (0, 1)".to_string()
    } else if violations.is_empty() {
        format!("{compared} matched pairs")
    } else {
        violations.join("; ")
    };
    report.check("decreasing_at_fixed_fraction", ok, detail);
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num::{BigInt, One};

    #[test]
    fn order_two_anchor() {
        let t = ldp_row_check(2, 1).unwrap();
        let row = t.rows.iter().find(|r| r.u == [0, 0, 1]).unwrap();
        assert_eq!(row.exact, BigRational::new(BigInt::one(), BigInt::from(2)));
        assert!((row.approx - 0.5).abs() < 1e-10);
        assert!(row.normalized_error < 1e-10);
        let full = ldp_row_check(2, 2).unwrap();
        assert_eq!(full.rows.len(), 1);
        assert_eq!(full.rows[0].u, [0, 1, 2]);
        assert_eq!(full.rows[0].exact, BigRational::one());
    }

    #[test]
    fn trend_from_three_to_six() {
        let r = ldp_trend(&[3, 6]).unwrap();
        assert!(r.passed(), "{:?}", r.checks);
    }

    #[test]
    fn probabilities_sum_to_one() {
        for k in 1..=4 {
            let t = ldp_row_check(4, k).unwrap();
            let total: BigRational = t.rows.iter().map(|r| r.exact.clone()).sum();
            assert_eq!(total, BigRational::one());
        }
    }
}
