use serde::{Deserialize, Serialize};

use super::matrix::{height_matrix, row_ascents, Asm};
use crate::error::{Error, Result};

pub const DEFAULT_MAX_ASM_ORDER: usize = 6;

/// A monotone triangle; `rows[0]` is the single top entry and the last row
/// is the bottom row. Entries may be arbitrary integers.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "RawTriangle", into = "RawTriangle")]
pub struct MonotoneTriangle {
    rows: Vec<Vec<i64>>,
}

#[derive(Serialize, Deserialize)]
struct RawTriangle {
    rows: Vec<Vec<i64>>,
}

impl TryFrom<RawTriangle> for MonotoneTriangle {
    type Error = Error;
    fn try_from(raw: RawTriangle) -> Result<Self> {
        MonotoneTriangle::new(raw.rows)
    }
}

impl From<MonotoneTriangle> for RawTriangle {
    fn from(t: MonotoneTriangle) -> Self {
        RawTriangle { rows: t.rows }
    }
}

impl MonotoneTriangle {
    pub fn new(rows: Vec<Vec<i64>>) -> Result<Self> {
        if rows.is_empty() {
            return Err(Error::Triangle("a monotone triangle has at least one row".into()));
        }
        for (i, row) in rows.iter().enumerate() {
            if row.len() != i + 1 {
                return Err(Error::Triangle(format!(
                    "row {} has {} entries, expected {}",
                    i + 1,
                    row.len(),
                    i + 1
                )));
            }
            if row.windows(2).any(|w| w[0] >= w[1]) {
                return Err(Error::Triangle(format!("row {} is not strictly increasing", i + 1)));
            }
            if i > 0 && !interlaces(&rows[i - 1], row) {
                return Err(Error::Triangle(format!(
                    "row {} does not interlace with row {}",
                    i,
                    i + 1
                )));
            }
        }
        Ok(MonotoneTriangle { rows })
    }

    pub fn order(&self) -> usize {
        self.rows.len()
    }

    /// Row `k`, 1-based from the top.
    pub fn row(&self, k: usize) -> &[i64] {
        &self.rows[k - 1]
    }

    pub fn rows(&self) -> &[Vec<i64>] {
        &self.rows
    }

    pub fn bottom(&self) -> &[i64] {
        self.rows.last().expect("non-empty")
    }

    /// Bottom row equal to `(1, 2, ..., k)`.
    pub fn is_complete(&self) -> bool {
        self.bottom().iter().enumerate().all(|(j, &v)| v == j as i64 + 1)
    }

    /// The first `k` rows, itself a monotone triangle.
    pub fn top(&self, k: usize) -> MonotoneTriangle {
        MonotoneTriangle { rows: self.rows[..k].to_vec() }
    }
}

/// `upper` (length m-1) weakly interlaces `lower` (length m).
fn interlaces(upper: &[i64], lower: &[i64]) -> bool {
    upper.len() + 1 == lower.len()
        && upper
            .iter()
            .enumerate()
            .all(|(j, &u)| lower[j] <= u && u <= lower[j + 1])
}

pub fn to_monotone_triangle(m: &Asm) -> MonotoneTriangle {
    let h = height_matrix(m);
    let rows = (1..=m.order()).map(|k| row_ascents(&h, k)).collect();
    MonotoneTriangle { rows }
}

pub fn from_monotone_triangle(t: &MonotoneTriangle) -> Result<Asm> {
    if !t.is_complete() {
        return Err(Error::Triangle("bottom row is not (1, 2, ..., n)".into()));
    }
    let n = t.order();
    let mut prev = vec![0i8; n];
    let mut entries = Vec::with_capacity(n * n);
    for row in &t.rows {
        let mut cur = vec![0i8; n];
        for &c in row {
            cur[(c - 1) as usize] = 1;
        }
        entries.extend(cur.iter().zip(&prev).map(|(a, b)| a - b));
        prev = cur;
    }
    Ok(Asm::from_entries_unchecked(n, entries))
}

/// Triangle of the vertically reflected ASM: row `n-k` is the complement of row `k`.
pub fn dual_triangle(t: &MonotoneTriangle) -> Result<MonotoneTriangle> {
    if !t.is_complete() {
        return Err(Error::Triangle("dual is defined for complete triangles".into()));
    }
    let n = t.order();
    let mut rows = Vec::with_capacity(n);
    for k in (1..n).rev() {
        let row = t.row(k);
        rows.push((1..=n as i64).filter(|v| !row.contains(v)).collect());
    }
    rows.push((1..=n as i64).collect());
    Ok(MonotoneTriangle { rows })
}

/// Entries that do not appear in the row above; the top entry counts.
pub fn n_plus_triangle(t: &MonotoneTriangle) -> usize {
    let mut count = 1;
    for w in t.rows.windows(2) {
        count += w[1].iter().filter(|v| !w[0].contains(v)).count();
    }
    count
}

/// Calls `visit` on every monotone triangle with the given bottom row, rows
/// listed top first. Visiting order is unspecified.
pub fn for_each_triangle(bottom: &[i64], mut visit: impl FnMut(&[Vec<i64>])) {
    if bottom.is_empty() {
        return;
    }
    let mut stack: Vec<Vec<i64>> = vec![bottom.to_vec()];
    fn rec(stack: &mut Vec<Vec<i64>>, visit: &mut dyn FnMut(&[Vec<i64>])) {
        let lower = stack.last().expect("non-empty").clone();
        if lower.len() == 1 {
            let rows: Vec<Vec<i64>> = stack.iter().rev().cloned().collect();
            visit(&rows);
            return;
        }
        for_each_parent(&lower, &mut |upper| {
            stack.push(upper.to_vec());
            rec(stack, visit);
            stack.pop();
        });
    }
    rec(&mut stack, &mut visit);
}

/// Every strictly increasing row interlacing `lower` from above.
pub(crate) fn for_each_parent(lower: &[i64], visit: &mut dyn FnMut(&[i64])) {
    let m = lower.len() - 1;
    let mut row = Vec::with_capacity(m);
    fn rec(lower: &[i64], row: &mut Vec<i64>, visit: &mut dyn FnMut(&[i64])) {
        let j = row.len();
        if j + 1 == lower.len() {
            visit(row);
            return;
        }
        let lo = match row.last() {
            Some(&prev) => lower[j].max(prev + 1),
            None => lower[j],
        };
        for v in lo..=lower[j + 1] {
            row.push(v);
            rec(lower, row, visit);
            row.pop();
        }
    }
    rec(lower, &mut row, visit);
}

/// All ASMs of order `n`, ordered lexicographically by monotone-triangle rows.
pub fn enumerate_asms(n: usize) -> Result<impl Iterator<Item = Asm>> {
    enumerate_asms_with_limit(n, DEFAULT_MAX_ASM_ORDER)
}

pub fn enumerate_asms_with_limit(n: usize, max: usize) -> Result<impl Iterator<Item = Asm>> {
    if n > max {
        return Err(Error::TooLarge { what: "ASM enumeration", requested: n, max });
    }
    if n == 0 {
        return Err(Error::InvalidArgument("ASM order must be positive".into()));
    }
    let bottom: Vec<i64> = (1..=n as i64).collect();
    let mut triangles = Vec::new();
    for_each_triangle(&bottom, |rows| triangles.push(rows.to_vec()));
    triangles.sort();
    Ok(triangles.into_iter().map(|rows| {
        from_monotone_triangle(&MonotoneTriangle { rows }).expect("complete by construction")
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::asm::matrix::{n_plus, validate_asm};

    fn order6_triangle() -> Vec<Vec<i64>> {
        vec![
            vec![3],
            vec![2, 5],
            vec![1, 4, 5],
            vec![1, 2, 4, 6],
            vec![1, 2, 3, 4, 6],
            vec![1, 2, 3, 4, 5, 6],
        ]
    }

    fn order6_dual() -> Vec<Vec<i64>> {
        // rows listed top first
        vec![
            vec![5],
            vec![3, 5],
            vec![2, 3, 6],
            vec![1, 3, 4, 6],
            vec![1, 2, 4, 5, 6],
            vec![1, 2, 3, 4, 5, 6],
        ]
    }

    fn order6_asm() -> Asm {
        validate_asm(&[
            vec![0, 0, 1, 0, 0, 0],
            vec![0, 1, -1, 0, 1, 0],
            vec![1, -1, 0, 1, 0, 0],
            vec![0, 1, 0, 0, -1, 1],
            vec![0, 0, 1, 0, 0, 0],
            vec![0, 0, 0, 0, 1, 0],
        ])
        .unwrap()
    }

    #[test]
    fn order6_triangle_and_dual() {
        let t = to_monotone_triangle(&order6_asm());
        assert_eq!(t.rows(), order6_triangle().as_slice());
        assert_eq!(from_monotone_triangle(&t).unwrap(), order6_asm());
        let d = dual_triangle(&t).unwrap();
        assert_eq!(d.rows(), order6_dual().as_slice());
        assert_eq!(to_monotone_triangle(&order6_asm().reflect_vertical()), d);
        assert_eq!(n_plus_triangle(&t), 9);
    }

    #[test]
    fn identity_triangle() {
        let t = to_monotone_triangle(&Asm::identity(5));
        for k in 1..=5 {
            assert_eq!(t.row(k), (1..=k as i64).collect::<Vec<_>>().as_slice());
        }
        assert_eq!(from_monotone_triangle(&t).unwrap(), Asm::identity(5));
    }

    #[test]
    fn asm_counts() {
        let counts: Vec<usize> = (1..=6).map(|n| enumerate_asms(n).unwrap().count()).collect();
        assert_eq!(counts, vec![1, 2, 7, 42, 429, 7436]);
        assert!(matches!(enumerate_asms(7), Err(Error::TooLarge { .. })));
    }

    #[test]
    fn enumeration_is_lexicographic_and_distinct() {
        let triangles: Vec<MonotoneTriangle> =
            enumerate_asms(4).unwrap().map(|m| to_monotone_triangle(&m)).collect();
        assert!(triangles.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn n_plus_small_triangles() {
        assert_eq!(n_plus_triangle(&MonotoneTriangle::new(vec![vec![17]]).unwrap()), 1);
        let t = MonotoneTriangle::new(vec![vec![2], vec![1, 3]]).unwrap();
        assert_eq!(n_plus_triangle(&t), 3);
    }

    #[test]
    fn bijections_on_small_orders() {
        for n in 1..=4 {
            for m in enumerate_asms(n).unwrap() {
                let t = to_monotone_triangle(&m);
                assert!(t.is_complete());
                assert_eq!(from_monotone_triangle(&t).unwrap(), m);
                assert_eq!(n_plus_triangle(&t), n_plus(&m));
                let d = dual_triangle(&t).unwrap();
                assert_eq!(dual_triangle(&d).unwrap(), t);
                assert_eq!(d, to_monotone_triangle(&m.reflect_vertical()));
                // Set-complement oracle, independent of the dual construction.
                for k in 1..n {
                    let comp: Vec<i64> =
                        (1..=n as i64).filter(|v| !t.row(k).contains(v)).collect();
                    assert_eq!(d.row(n - k), comp.as_slice());
                }
            }
        }
    }

    #[test]
    fn n_plus_splits_over_top_and_bottom() {
        for n in 1..=4 {
            for m in enumerate_asms(n).unwrap() {
                let t = to_monotone_triangle(&m);
                let d = dual_triangle(&t).unwrap();
                for k in 1..n {
                    let total = n_plus_triangle(&t);
                    let split = n_plus_triangle(&t.top(k)) + n_plus_triangle(&d.top(n - k));
                    assert_eq!(total, split, "n={n} k={k}");
                }
            }
        }
    }

    #[test]
    fn rejects_malformed_triangles() {
        assert!(MonotoneTriangle::new(vec![vec![1], vec![2, 2]]).is_err());
        assert!(MonotoneTriangle::new(vec![vec![4], vec![1, 3]]).is_err());
        assert!(MonotoneTriangle::new(vec![vec![1, 2]]).is_err());
        let incomplete = MonotoneTriangle::new(vec![vec![2], vec![1, 3]]).unwrap();
        assert!(from_monotone_triangle(&incomplete).is_err());
        assert!(dual_triangle(&incomplete).is_err());
        assert!(serde_json::from_str::<MonotoneTriangle>(r#"{"rows":[[3],[1,2]]}"#).is_err());
        let ok: MonotoneTriangle = serde_json::from_str(r#"{"rows":[[2],[1,3]]}"#).unwrap();
        assert_eq!(ok, incomplete);
    }
}
