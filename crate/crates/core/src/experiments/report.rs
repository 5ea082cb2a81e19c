use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use serde::Serialize;

use crate::error::Result;
use crate::stats::quantile;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Threshold {
    pub name: String,
    pub value: f64,
    pub meaning: String,
}

/// Distribution summary of one metric at one order.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Summary {
    pub n: usize,
    pub metric: String,
    pub samples: usize,
    pub min: f64,
    pub q10: f64,
    pub median: f64,
    pub q90: f64,
    pub max: f64,
}

impl Summary {
    pub fn of(n: usize, metric: &str, data: &[f64]) -> Self {
        Summary {
            n,
            metric: metric.to_string(),
            samples: data.len(),
            min: quantile(data, 0.0),
            q10: quantile(data, 0.1),
            median: quantile(data, 0.5),
            q90: quantile(data, 0.9),
            max: quantile(data, 1.0),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ExperimentReport {
    pub id: String,
    pub seed: u64,
    pub parameters: BTreeMap<String, String>,
    pub thresholds: Vec<Threshold>,
    pub columns: Vec<String>,
    /// One row per sample; kept out of the JSON summary.
    #[serde(skip)]
    pub rows: Vec<Vec<f64>>,
    pub summaries: Vec<Summary>,
    pub checks: Vec<Check>,
}

impl ExperimentReport {
    pub fn new(id: &str, seed: u64, columns: &[&str]) -> Self {
        ExperimentReport {
            id: id.to_string(),
            seed,
            parameters: BTreeMap::new(),
            thresholds: Vec::new(),
            columns: columns.iter().map(|c| c.to_string()).collect(),
            rows: Vec::new(),
            summaries: Vec::new(),
            checks: Vec::new(),
        }
    }

    pub fn param(&mut self, key: &str, value: impl ToString) -> &mut Self {
        self.parameters.insert(key.to_string(), value.to_string());
        self
    }

    pub fn threshold(&mut self, name: &str, value: f64, meaning: &str) -> &mut Self {
        self.thresholds.push(Threshold {
            name: name.to_string(),
            value,
            meaning: meaning.to_string(),
        });
        self
    }

    pub fn check(&mut self, name: &str, passed: bool, detail: String) -> &mut Self {
        self.checks.push(Check { name: name.to_string(), passed, detail });
        self
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    /// Medians of `metric`, ordered as the summaries were added.
    pub fn medians(&self, metric: &str) -> Vec<f64> {
        self.summaries.iter().filter(|s| s.metric == metric).map(|s| s.median).collect()
    }

    /// CSV with `#` header lines (parameters, thresholds), one row per sample
    /// and a `#` footer of summaries and checks.
    pub fn to_csv(&self) -> String {
        let mut out = String::new();
        writeln!(out, "# experiment={}", self.id).unwrap();
        writeln!(out, "# seed={}", self.seed).unwrap();
        for (k, v) in &self.parameters {
            writeln!(out, "# param {k}={v}").unwrap();
        }
        for t in &self.thresholds {
            writeln!(out, "# threshold {}={} ({})", t.name, t.value, t.meaning).unwrap();
        }
        writeln!(out, "{}", self.columns.join(",")).unwrap();
        for row in &self.rows {
            let cells: Vec<String> = row.iter().map(|v| v.to_string()).collect();
            writeln!(out, "{}", cells.join(",")).unwrap();
        }
        for s in &self.summaries {
            writeln!(
                out,
                "# summary n={} metric={} samples={} min={} q10={} median={} q90={} max={}",
                s.n, s.metric, s.samples, s.min, s.q10, s.median, s.q90, s.max
            )
            .unwrap();
        }
        for c in &self.checks {
            let verdict = if c.passed { "pass" } else { "FAIL" };
            writeln!(out, "# check {}: {verdict} ({})", c.name, c.detail).unwrap();
        }
        out
    }

    pub fn to_json(&self) -> Result<String> {
        Ok(serde_json::to_string_pretty(self)?)
    }

    /// Writes `<id>.csv` and `<id>.json` into `dir`, returning both paths.
    pub fn write_to(&self, dir: &Path) -> Result<(PathBuf, PathBuf)> {
        std::fs::create_dir_all(dir)?;
        let csv = dir.join(format!("{}.csv", self.id));
        let json = dir.join(format!("{}.json", self.id));
        std::fs::write(&csv, self.to_csv())?;
        std::fs::write(&json, self.to_json()? + "\n")?;
        Ok((csv, json))
    }
}
