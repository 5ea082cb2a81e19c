use num::{BigInt, BigRational, One};
use serde::{Deserialize, Serialize};

use super::pairs;
use crate::error::{Error, Line, Result};

/// An alternating sign matrix of order `n`, stored row-major.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "RawMatrix", into = "RawMatrix")]
pub struct Asm {
    n: usize,
    entries: Vec<i8>,
}

#[derive(Serialize, Deserialize)]
struct RawMatrix {
    n: usize,
    rows: Vec<Vec<i64>>,
}

impl TryFrom<RawMatrix> for Asm {
    type Error = Error;

    fn try_from(raw: RawMatrix) -> Result<Self> {
        let asm = validate_asm(&raw.rows)?;
        if asm.n != raw.n {
            return Err(Error::InvalidArgument(format!(
                "declared order {} but {} rows given",
                raw.n, asm.n
            )));
        }
        Ok(asm)
    }
}

impl From<Asm> for RawMatrix {
    fn from(a: Asm) -> Self {
        RawMatrix { n: a.n, rows: a.rows() }
    }
}

/// Checks the alternating sign conditions on a square array.
///
/// Rows are checked before columns; the first violation is reported with a
/// 1-based index.
pub fn validate_asm(rows: &[Vec<i64>]) -> Result<Asm> {
    let n = rows.len();
    if n == 0 {
        return Err(Error::InvalidArgument("an ASM has order at least 1".into()));
    }
    let mut entries = Vec::with_capacity(n * n);
    for (r, row) in rows.iter().enumerate() {
        if row.len() != n {
            return Err(Error::NotSquare { row: r + 1, len: row.len(), n });
        }
        for (c, &v) in row.iter().enumerate() {
            if !(-1..=1).contains(&v) {
                return Err(Error::BadEntry { row: r + 1, col: c + 1, value: v });
            }
            entries.push(v as i8);
        }
    }
    for r in 0..n {
        check_line(Line::Row, r, (0..n).map(|c| entries[r * n + c]))?;
    }
    for c in 0..n {
        check_line(Line::Column, c, (0..n).map(|r| entries[r * n + c]))?;
    }
    Ok(Asm { n, entries })
}

fn check_line(line: Line, index: usize, values: impl Iterator<Item = i8> + Clone) -> Result<()> {
    let sum: i64 = values.clone().map(i64::from).sum();
    if sum != 1 {
        return Err(Error::LineSum { line, index: index + 1, sum });
    }
    // Partial sums of an alternating line stay in {0, 1}.
    let mut partial = 0i64;
    for v in values {
        partial += i64::from(v);
        if !(0..=1).contains(&partial) {
            return Err(Error::Alternation { line, index: index + 1 });
        }
    }
    Ok(())
}

impl Asm {
    pub fn identity(n: usize) -> Self {
        let mut entries = vec![0i8; n * n];
        for i in 0..n {
            entries[i * n + i] = 1;
        }
        Asm { n, entries }
    }

    /// Permutation matrix with a one at `(i, perm[i])`.
    pub fn from_permutation(perm: &[usize]) -> Result<Self> {
        let n = perm.len();
        let rows: Vec<Vec<i64>> = perm
            .iter()
            .map(|&p| (0..n).map(|c| i64::from(c == p)).collect())
            .collect();
        validate_asm(&rows)
    }

    pub(crate) fn from_entries_unchecked(n: usize, entries: Vec<i8>) -> Self {
        debug_assert_eq!(entries.len(), n * n);
        Asm { n, entries }
    }

    pub fn order(&self) -> usize {
        self.n
    }

    /// Entry in row `i`, column `j` (both 1-based).
    pub fn get(&self, i: usize, j: usize) -> i8 {
        self.entries[(i - 1) * self.n + (j - 1)]
    }

    pub fn rows(&self) -> Vec<Vec<i64>> {
        self.entries
            .chunks(self.n)
            .map(|r| r.iter().map(|&v| i64::from(v)).collect())
            .collect()
    }

    pub fn minus_count(&self) -> usize {
        self.entries.iter().filter(|&&v| v == -1).count()
    }

    /// The matrix with its rows in reverse order.
    pub fn reflect_vertical(&self) -> Self {
        let n = self.n;
        let mut entries = Vec::with_capacity(n * n);
        for r in (0..n).rev() {
            entries.extend_from_slice(&self.entries[r * n..(r + 1) * n]);
        }
        Asm { n, entries }
    }

    pub fn transpose(&self) -> Self {
        let n = self.n;
        let mut entries = vec![0; n * n];
        for r in 0..n {
            for c in 0..n {
                entries[c * n + r] = self.entries[r * n + c];
            }
        }
        Asm { n, entries }
    }
}

/// Number of `+1` entries.
pub fn n_plus(m: &Asm) -> usize {
    m.entries.iter().filter(|&&v| v == 1).count()
}

/// Domino measure of `m`: `2^(N+(m) - binom(n+1, 2))`.
pub fn domino_weight(m: &Asm) -> BigRational {
    let exp = n_plus(m) as i64 - pairs(m.n + 1) as i64;
    pow2_rational(exp)
}

pub(crate) fn pow2_rational(exp: i64) -> BigRational {
    let p = BigInt::one() << exp.unsigned_abs();
    if exp >= 0 {
        BigRational::from_integer(p)
    } else {
        BigRational::new(BigInt::one(), p)
    }
}

/// Corner-sum matrix `h[i][j] = sum_{p<=i, q<=j} m[p][q]`, indices `0..=n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawMatrix", into = "RawMatrix")]
pub struct HeightMatrix {
    n: usize,
    h: Vec<i64>,
}

impl TryFrom<RawMatrix> for HeightMatrix {
    type Error = Error;

    fn try_from(raw: RawMatrix) -> Result<Self> {
        let h = HeightMatrix::from_rows(&raw.rows)?;
        if h.n != raw.n {
            return Err(Error::HeightMatrix(format!(
                "declared order {} but the array has order {}",
                raw.n, h.n
            )));
        }
        Ok(h)
    }
}

impl From<HeightMatrix> for RawMatrix {
    fn from(h: HeightMatrix) -> Self {
        RawMatrix { n: h.n, rows: h.rows() }
    }
}

impl HeightMatrix {
    /// Validates conditions (H1)-(H3) on an `(n+1) x (n+1)` array.
    pub fn from_rows(rows: &[Vec<i64>]) -> Result<Self> {
        let size = rows.len();
        if size < 2 {
            return Err(Error::HeightMatrix("need at least a 2x2 array".into()));
        }
        let n = size - 1;
        let mut h = Vec::with_capacity(size * size);
        for (i, row) in rows.iter().enumerate() {
            if row.len() != size {
                return Err(Error::HeightMatrix(format!(
                    "row {i} has {} entries, expected {size}",
                    row.len()
                )));
            }
            h.extend_from_slice(row);
        }
        let hm = HeightMatrix { n, h };
        hm.check()?;
        Ok(hm)
    }

    fn check(&self) -> Result<()> {
        let n = self.n;
        for k in 0..=n {
            if self.at(0, k) != 0 || self.at(k, 0) != 0 {
                return Err(Error::HeightMatrix(format!("(H1) fails at index {k}")));
            }
            if self.at(n, k) != k as i64 || self.at(k, n) != k as i64 {
                return Err(Error::HeightMatrix(format!("(H2) fails at index {k}")));
            }
        }
        for i in 0..n {
            for j in 0..=n {
                let down = self.at(i + 1, j) - self.at(i, j);
                let right = self.at(j, i + 1) - self.at(j, i);
                if !(0..=1).contains(&down) || !(0..=1).contains(&right) {
                    return Err(Error::HeightMatrix(format!("(H3) fails near ({i}, {j})")));
                }
            }
        }
        Ok(())
    }

    pub fn order(&self) -> usize {
        self.n
    }

    /// Entry `h[i][j]`, `0 <= i, j <= n`.
    pub fn at(&self, i: usize, j: usize) -> i64 {
        self.h[i * (self.n + 1) + j]
    }

    pub fn row(&self, i: usize) -> &[i64] {
        let w = self.n + 1;
        &self.h[i * w..(i + 1) * w]
    }

    pub fn rows(&self) -> Vec<Vec<i64>> {
        self.h.chunks(self.n + 1).map(<[i64]>::to_vec).collect()
    }
}

pub fn height_matrix(m: &Asm) -> HeightMatrix {
    let n = m.n;
    let w = n + 1;
    let mut h = vec![0i64; w * w];
    for i in 1..=n {
        for j in 1..=n {
            h[i * w + j] = i64::from(m.get(i, j)) + h[(i - 1) * w + j] + h[i * w + j - 1]
                - h[(i - 1) * w + j - 1];
        }
    }
    HeightMatrix { n, h }
}

/// Inverse of [`height_matrix`] via second differences.
pub fn asm_from_height(h: &HeightMatrix) -> Asm {
    let n = h.n;
    let mut entries = Vec::with_capacity(n * n);
    for i in 1..=n {
        for j in 1..=n {
            let v = h.at(i, j) - h.at(i - 1, j) - h.at(i, j - 1) + h.at(i - 1, j - 1);
            entries.push(v as i8);
        }
    }
    Asm::from_entries_unchecked(n, entries)
}

/// Columns `j` in `1..=n` where row `k` of `h` steps up.
pub fn row_ascents(h: &HeightMatrix, k: usize) -> Vec<i64> {
    let row = h.row(k);
    (1..=h.n)
        .filter(|&j| row[j] - row[j - 1] == 1)
        .map(|j| j as i64)
        .collect()
}

/// Symmetrised height matrix `h*[i][j] = i + j - 2 h[i][j]`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawMatrix", into = "RawMatrix")]
pub struct SymHeightMatrix {
    n: usize,
    hs: Vec<i64>,
}

impl TryFrom<RawMatrix> for SymHeightMatrix {
    type Error = Error;

    fn try_from(raw: RawMatrix) -> Result<Self> {
        let s = SymHeightMatrix::from_rows(&raw.rows)?;
        if s.n != raw.n {
            return Err(Error::HeightMatrix(format!(
                "declared order {} but the array has order {}",
                raw.n, s.n
            )));
        }
        Ok(s)
    }
}

impl From<SymHeightMatrix> for RawMatrix {
    fn from(s: SymHeightMatrix) -> Self {
        RawMatrix { n: s.n, rows: s.rows() }
    }
}

pub fn sym_height(h: &HeightMatrix) -> SymHeightMatrix {
    let w = h.n + 1;
    let hs = (0..w * w)
        .map(|idx| {
            let (i, j) = (idx / w, idx % w);
            (i + j) as i64 - 2 * h.h[idx]
        })
        .collect();
    SymHeightMatrix { n: h.n, hs }
}

impl SymHeightMatrix {
    /// Accepts any array that is the image of a valid height matrix.
    pub fn from_rows(rows: &[Vec<i64>]) -> Result<Self> {
        let size = rows.len();
        if size < 2 || rows.iter().any(|r| r.len() != size) {
            return Err(Error::HeightMatrix("symmetrised height matrix must be square, order >= 1".into()));
        }
        let hs: Vec<i64> = rows.iter().flatten().copied().collect();
        let s = SymHeightMatrix { n: size - 1, hs };
        s.to_height()?;
        Ok(s)
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn at(&self, i: usize, j: usize) -> i64 {
        self.hs[i * (self.n + 1) + j]
    }

    pub fn rows(&self) -> Vec<Vec<i64>> {
        self.hs.chunks(self.n + 1).map(<[i64]>::to_vec).collect()
    }

    /// Inverts the transform, rejecting arrays that do not come from a height matrix.
    pub fn to_height(&self) -> Result<HeightMatrix> {
        let w = self.n + 1;
        let mut h = Vec::with_capacity(w * w);
        for (idx, &v) in self.hs.iter().enumerate() {
            let (i, j) = (idx / w, idx % w);
            let twice = (i + j) as i64 - v;
            if twice % 2 != 0 {
                return Err(Error::HeightMatrix(format!(
                    "entry ({i}, {j}) = {v} has the wrong parity"
                )));
            }
            h.push(twice / 2);
        }
        let hm = HeightMatrix { n: self.n, h };
        hm.check()?;
        Ok(hm)
    }
}
