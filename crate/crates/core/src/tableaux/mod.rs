//! Square Young tableaux and their particle-jump encoding.
//!
//! Rows are numbered from the bottom ("French" convention): `rows[0]` is row 1.
//! Entry `t[i][j]` (1-based row `i`, column `j`) is the time a brick is laid
//! at that position. In the jump picture there are `n` particles on
//! `1..=2n`, particle `k` starting at position `k`; the entries of row `i` are
//! the times at which particle `n + 1 - i` jumps one step right.

use num::{BigUint, One};
use rand::Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rng::{derive_seed, rng_from_seed};
use crate::shape::phi_pm;
use crate::stats::median;

pub const DEFAULT_MAX_TABLEAU_ORDER: usize = 4;

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawTableau", into = "RawTableau")]
pub struct SquareTableau {
    n: usize,
    rows: Vec<Vec<usize>>,
}

#[derive(Serialize, Deserialize)]
struct RawTableau {
    n: usize,
    rows: Vec<Vec<usize>>,
}

impl TryFrom<RawTableau> for SquareTableau {
    type Error = Error;
    fn try_from(raw: RawTableau) -> Result<Self> {
        let t = SquareTableau::new(raw.rows)?;
        if t.n != raw.n {
            return Err(Error::Tableau(format!("declared order {} but {} rows", raw.n, t.n)));
        }
        Ok(t)
    }
}

impl From<SquareTableau> for RawTableau {
    fn from(t: SquareTableau) -> Self {
        RawTableau { n: t.n, rows: t.rows }
    }
}

impl SquareTableau {
    pub fn new(rows: Vec<Vec<usize>>) -> Result<Self> {
        let n = rows.len();
        if n == 0 {
            return Err(Error::Tableau("a tableau needs at least one row".into()));
        }
        let mut seen = vec![false; n * n + 1];
        for (i, row) in rows.iter().enumerate() {
            if row.len() != n {
                return Err(Error::Tableau(format!("row {} has {} entries, expected {n}", i + 1, row.len())));
            }
            for (j, &v) in row.iter().enumerate() {
                if v == 0 || v > n * n || seen[v] {
                    return Err(Error::Tableau(format!(
                        "entry {v} at ({}, {}) is out of range or repeated",
                        i + 1,
                        j + 1
                    )));
                }
                seen[v] = true;
                if j > 0 && row[j - 1] >= v {
                    return Err(Error::Tableau(format!("row {} is not increasing", i + 1)));
                }
                if i > 0 && rows[i - 1][j] >= v {
                    return Err(Error::Tableau(format!("column {} is not increasing", j + 1)));
                }
            }
        }
        Ok(SquareTableau { n, rows })
    }

    pub fn order(&self) -> usize {
        self.n
    }

    /// `t_{i,j}`, 1-based, row 1 at the bottom.
    pub fn at(&self, i: usize, j: usize) -> usize {
        self.rows[i - 1][j - 1]
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }
}

/// `(n^2)! / prod_{i,j} (i + j - 1)`.
pub fn count_tableaux(n: usize) -> BigUint {
    let mut num = BigUint::one();
    for k in 2..=n * n {
        num *= k;
    }
    let mut den = BigUint::one();
    for i in 1..=n {
        for j in 1..=n {
            den *= i + j - 1;
        }
    }
    num / den
}

/// All square tableaux of order `n` by placing `1, 2, ...` on supported cells.
pub fn enumerate_tableaux(n: usize) -> Result<Vec<SquareTableau>> {
    if n == 0 {
        return Err(Error::InvalidArgument("tableau order must be positive".into()));
    }
    if n > DEFAULT_MAX_TABLEAU_ORDER {
        return Err(Error::TooLarge {
            what: "tableau enumeration",
            requested: n,
            max: DEFAULT_MAX_TABLEAU_ORDER,
        });
    }
    fn rec(n: usize, next: usize, len: &mut Vec<usize>, grid: &mut Vec<Vec<usize>>, out: &mut Vec<SquareTableau>) {
        if next > n * n {
            out.push(SquareTableau { n, rows: grid.clone() });
            return;
        }
        for i in 0..n {
            let j = len[i];
            if j < n && (i == 0 || len[i - 1] > j) {
                grid[i][j] = next;
                len[i] += 1;
                rec(n, next + 1, len, grid, out);
                len[i] -= 1;
            }
        }
    }
    let mut out = Vec::new();
    rec(n, 1, &mut vec![0; n], &mut vec![vec![0; n]; n], &mut out);
    Ok(out)
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawJumps", into = "RawJumps")]
pub struct JumpSequence {
    n: usize,
    moves: Vec<usize>,
}

#[derive(Serialize, Deserialize)]
struct RawJumps {
    n: usize,
    moves: Vec<usize>,
}

impl TryFrom<RawJumps> for JumpSequence {
    type Error = Error;
    fn try_from(raw: RawJumps) -> Result<Self> {
        JumpSequence::new(raw.n, raw.moves)
    }
}

impl From<JumpSequence> for RawJumps {
    fn from(j: JumpSequence) -> Self {
        RawJumps { n: j.n, moves: j.moves }
    }
}

/// One jump: at `time`, `particle` moves from `from` to `from + 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Jump {
    pub time: usize,
    pub particle: usize,
    pub from: usize,
}

impl JumpSequence {
    pub fn new(n: usize, moves: Vec<usize>) -> Result<Self> {
        let j = JumpSequence { n, moves };
        j.replay()?;
        Ok(j)
    }

    pub fn order(&self) -> usize {
        self.n
    }

    /// `moves[m - 1]` is the particle jumping at time `m`.
    pub fn moves(&self) -> &[usize] {
        &self.moves
    }

    /// Replays the moves, enforcing exclusion, the box `[1, 2n]` and the final state.
    pub fn replay(&self) -> Result<Vec<Jump>> {
        let n = self.n;
        if n == 0 {
            return Err(Error::Jumps("order must be positive".into()));
        }
        if self.moves.len() != n * n {
            return Err(Error::Jumps(format!("{} moves, expected {}", self.moves.len(), n * n)));
        }
        let mut pos: Vec<usize> = (0..=n).collect();
        let mut occupied = vec![false; 2 * n + 2];
        for p in 1..=n {
            occupied[p] = true;
        }
        let mut jumps = Vec::with_capacity(n * n);
        for (m, &p) in self.moves.iter().enumerate() {
            if p == 0 || p > n {
                return Err(Error::Jumps(format!("time {}: no particle {p}", m + 1)));
            }
            let from = pos[p];
            if from + 1 > 2 * n || occupied[from + 1] {
                return Err(Error::Jumps(format!("time {}: particle {p} is blocked at {from}", m + 1)));
            }
            occupied[from] = false;
            occupied[from + 1] = true;
            pos[p] = from + 1;
            jumps.push(Jump { time: m + 1, particle: p, from });
        }
        if (1..=n).any(|p| pos[p] != n + p) {
            return Err(Error::Jumps("particles do not end at n+1..2n".into()));
        }
        Ok(jumps)
    }
}

pub fn tableau_to_jumps(t: &SquareTableau) -> JumpSequence {
    let n = t.n;
    let mut moves = vec![0; n * n];
    for (i, row) in t.rows.iter().enumerate() {
        for &time in row {
            moves[time - 1] = n - i;
        }
    }
    let j = JumpSequence { n, moves };
    debug_assert!(j.replay().is_ok());
    j
}

pub fn jumps_to_tableau(j: &JumpSequence) -> Result<SquareTableau> {
    j.replay()?;
    let n = j.n;
    let mut rows = vec![Vec::with_capacity(n); n];
    for (m, &p) in j.moves.iter().enumerate() {
        rows[n - p].push(m + 1);
    }
    SquareTableau::new(rows)
}

/// `(tau-(k), tau+(k))` for `k = 1..=2n`: the first and last times of a jump
/// leaving or entering position `k`.
pub fn tau_pm_all(j: &JumpSequence) -> Vec<(usize, usize)> {
    let jumps = j.replay().expect("validated jump sequence");
    let mut first = vec![usize::MAX; 2 * j.n + 2];
    let mut last = vec![0; 2 * j.n + 2];
    for jump in jumps {
        for k in [jump.from, jump.from + 1] {
            first[k] = first[k].min(jump.time);
            last[k] = last[k].max(jump.time);
        }
    }
    (1..=2 * j.n).map(|k| (first[k], last[k])).collect()
}

pub fn tau_pm(j: &JumpSequence, k: usize) -> Result<(usize, usize)> {
    if k == 0 || k > 2 * j.n {
        return Err(Error::InvalidArgument(format!("position {k} not in 1..={}", 2 * j.n)));
    }
    Ok(tau_pm_all(j)[k - 1])
}

/// Rows `(time, position, particle)`: initial positions at time 0, then the
/// landing position of each jump.
pub fn space_time_rows(j: &JumpSequence) -> Vec<(usize, usize, usize)> {
    let mut out: Vec<(usize, usize, usize)> = (1..=j.n).map(|p| (0, p, p)).collect();
    for jump in j.replay().expect("validated jump sequence") {
        out.push((jump.time, jump.from + 1, jump.particle));
    }
    out
}

/// Uniform square tableau by the hook walk, deterministic in `seed`.
pub fn sample_tableau(n: usize, seed: u64) -> SquareTableau {
    sample_tableau_with(n, &mut rng_from_seed(seed))
}

pub fn sample_tableau_with<R: Rng + ?Sized>(n: usize, rng: &mut R) -> SquareTableau {
    assert!(n > 0, "tableau order must be positive");
    let mut len = vec![n; n];
    let mut remaining = n * n;
    let mut rows = vec![vec![0; n]; n];
    while remaining > 0 {
        let mut pick = rng.random_range(0..remaining);
        let mut i = 0;
        while pick >= len[i] {
            pick -= len[i];
            i += 1;
        }
        let mut j = pick;
        loop {
            let arm = len[i] - j - 1;
            let leg = (i + 1..n).take_while(|&r| len[r] > j).count();
            if arm + leg == 0 {
                break;
            }
            let step = rng.random_range(0..arm + leg);
            if step < arm {
                j += step + 1;
            } else {
                i += step - arm + 1;
            }
        }
        rows[i][j] = remaining;
        len[i] -= 1;
        remaining -= 1;
    }
    SquareTableau { n, rows }
}

/// Per-sample maxima of `|tau-(k)/n^2 - phi-(k/2n)|` and of the `tau+` analogue.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ArcticStats {
    pub n: usize,
    pub seed: u64,
    pub minus: Vec<f64>,
    pub plus: Vec<f64>,
}

impl ArcticStats {
    /// Larger of the two deviations, per sample.
    pub fn combined(&self) -> Vec<f64> {
        self.minus.iter().zip(&self.plus).map(|(a, b)| a.max(*b)).collect()
    }

    pub fn median_combined(&self) -> f64 {
        median(&self.combined())
    }
}

pub fn arctic_deviation(t: &SquareTableau) -> (f64, f64) {
    let n = t.n;
    let scale = (n * n) as f64;
    let taus = tau_pm_all(&tableau_to_jumps(t));
    let mut dm: f64 = 0.0;
    let mut dp: f64 = 0.0;
    for (k, &(lo, hi)) in taus.iter().enumerate() {
        let (pm, pp) = phi_pm((k + 1) as f64 / (2 * n) as f64).expect("k/2n lies in [0, 1]");
        dm = dm.max((lo as f64 / scale - pm).abs());
        dp = dp.max((hi as f64 / scale - pp).abs());
    }
    (dm, dp)
}

pub fn arctic_check(n: usize, samples: usize, seed: u64) -> Result<ArcticStats> {
    if n < 2 || samples == 0 {
        return Err(Error::InvalidArgument("need n >= 2 and at least one sample".into()));
    }
    let devs: Vec<(f64, f64)> = (0..samples)
        .into_par_iter()
        .map(|s| arctic_deviation(&sample_tableau(n, derive_seed(seed, s as u64))))
        .collect();
    Ok(ArcticStats {
        n,
        seed,
        minus: devs.iter().map(|d| d.0).collect(),
        plus: devs.iter().map(|d| d.1).collect(),
    })
}
