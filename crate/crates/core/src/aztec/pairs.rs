//! Tilings of `AD_n` as compatible pairs `(A, B)` of ASMs of orders `n` and `n+1`.
//!
//! The symmetrised height matrices are read off the height function along the
//! two sublattices of the vertex set:
//! `h*_A[i][j] = (eta(-n+i+j, j-i) - 1) / 2` for `0 <= i, j <= n` and
//! `h*_B[i][j] = eta(-n-1+i+j, j-i) / 2` for `0 <= i, j <= n+1`.

use super::geometry::Vertex;
use super::height::{height_function, tiling_from_height, HeightFunction};
use super::tiling::DominoTiling;
use crate::asm::{asm_from_height, height_matrix, sym_height, Asm, SymHeightMatrix};
use crate::error::{Error, Result};

fn a_vertex(n: usize, i: usize, j: usize) -> Vertex {
    (-(n as i64) + (i + j) as i64, j as i64 - i as i64)
}

fn b_vertex(n: usize, i: usize, j: usize) -> Vertex {
    (-(n as i64) - 1 + (i + j) as i64, j as i64 - i as i64)
}

pub fn compatible_pair(h: &HeightFunction) -> Result<(Asm, Asm)> {
    let n = h.order();
    let read = |size: usize, f: &dyn Fn(usize, usize) -> Result<i64>| -> Result<Vec<Vec<i64>>> {
        (0..size).map(|i| (0..size).map(|j| f(i, j)).collect()).collect()
    };
    let half = |v: i64, what: &str| -> Result<i64> {
        if v % 2 != 0 {
            return Err(Error::HeightFunction(format!("odd value {v} on the {what} sublattice")));
        }
        Ok(v / 2)
    };
    let a = read(n + 1, &|i, j| half(h.at(a_vertex(n, i, j)) - 1, "A"))?;
    let b = read(n + 2, &|i, j| half(h.at(b_vertex(n, i, j)), "B"))?;
    let to_asm = |rows: &[Vec<i64>]| -> Result<Asm> {
        let s = SymHeightMatrix::from_rows(rows)?;
        Ok(asm_from_height(&s.to_height()?))
    };
    Ok((to_asm(&a)?, to_asm(&b)?))
}

/// The pair of ASMs attached to a tiling.
pub fn tiling_to_pair(t: &DominoTiling) -> Result<(Asm, Asm)> {
    compatible_pair(&height_function(t)?)
}

/// The four height-matrix inequalities defining compatible pairs.
pub fn is_compatible(a: &Asm, b: &Asm) -> bool {
    let n = a.order();
    if b.order() != n + 1 {
        return false;
    }
    let ha = height_matrix(a);
    let hb = height_matrix(b);
    for i in 0..=n {
        for j in 0..=n {
            let x = ha.at(i, j);
            if hb.at(i, j) > x
                || hb.at(i + 1, j + 1) - 1 > x
                || x > hb.at(i + 1, j)
                || x > hb.at(i, j + 1)
            {
                return false;
            }
        }
    }
    true
}

pub fn tiling_from_pair(a: &Asm, b: &Asm) -> Result<DominoTiling> {
    let n = a.order();
    if !is_compatible(a, b) {
        return Err(Error::Incompatible { n, m: b.order() });
    }
    let sa = sym_height(&height_matrix(a));
    let sb = sym_height(&height_matrix(b));
    let mut values = Vec::new();
    for i in 0..=n {
        for j in 0..=n {
            values.push((a_vertex(n, i, j), 2 * sa.at(i, j) + 1));
        }
    }
    for i in 0..=n + 1 {
        for j in 0..=n + 1 {
            values.push((b_vertex(n, i, j), 2 * sb.at(i, j)));
        }
    }
    let h = HeightFunction::from_values(n, &values)?;
    tiling_from_height(&h)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::asm::{domino_weight, enumerate_asms, n_plus};
    use crate::aztec::tiling::enumerate_tilings;
    use num::{BigRational, Zero};
    use std::collections::{BTreeMap, HashSet};

    #[test]
    fn order_one_pairs() {
        let one = Asm::identity(1);
        let mut bs = Vec::new();
        for t in enumerate_tilings(1).unwrap() {
            let (a, b) = tiling_to_pair(&t).unwrap();
            assert_eq!(a, one);
            assert_eq!(tiling_from_pair(&a, &b).unwrap(), t);
            bs.push(b);
        }
        let all: HashSet<Asm> = enumerate_asms(2).unwrap().collect();
        assert_eq!(bs.iter().cloned().collect::<HashSet<_>>(), all);
        for b in &all {
            assert!(is_compatible(&one, b));
        }
    }

    #[test]
    fn pairs_are_compatible_and_injective() {
        for n in 1..=3 {
            let tilings = enumerate_tilings(n).unwrap();
            let mut seen = HashSet::new();
            for t in &tilings {
                let (a, b) = tiling_to_pair(t).unwrap();
                assert!(is_compatible(&a, &b));
                assert_eq!(&tiling_from_pair(&a, &b).unwrap(), t);
                assert!(seen.insert((a, b)));
            }
        }
    }

    #[test]
    fn compatible_count_is_two_to_n_plus() {
        for n in 1..=3 {
            let bs: Vec<Asm> = enumerate_asms(n + 1).unwrap().collect();
            let mut total = 0usize;
            for a in enumerate_asms(n).unwrap() {
                let count = bs.iter().filter(|b| is_compatible(&a, b)).count();
                assert_eq!(count, 1 << n_plus(&a));
                total += count;
            }
            assert_eq!(total, enumerate_tilings(n).unwrap().len());
        }
    }

    #[test]
    fn a_marginal_is_the_domino_measure() {
        for n in 1..=3 {
            let tilings = enumerate_tilings(n).unwrap();
            let share = BigRational::new(1.into(), tilings.len().into());
            let mut law: BTreeMap<Vec<Vec<i64>>, BigRational> = BTreeMap::new();
            for t in &tilings {
                let (a, _) = tiling_to_pair(t).unwrap();
                *law.entry(a.rows()).or_insert_with(BigRational::zero) += &share;
            }
            for a in enumerate_asms(n).unwrap() {
                assert_eq!(law[&a.rows()], domino_weight(&a));
            }
        }
    }

    #[test]
    fn incompatible_pairs_are_rejected() {
        let a = Asm::identity(2);
        let anti = Asm::from_permutation(&[2, 1, 0]).unwrap();
        assert!(!is_compatible(&a, &anti));
        assert!(matches!(tiling_from_pair(&a, &anti), Err(Error::Incompatible { .. })));
        assert!(!is_compatible(&a, &Asm::identity(2)));
    }
}
