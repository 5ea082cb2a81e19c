use std::collections::{BTreeMap, HashMap};

use num::{BigInt, BigRational, One, Zero};

use super::matrix::{domino_weight, height_matrix, pow2_rational, row_ascents};
use super::pairs;
use super::triangle::{enumerate_asms, for_each_parent, DEFAULT_MAX_ASM_ORDER};
use crate::error::{Error, Result};

pub const DEFAULT_MAX_TRIANGLE_ORDER: usize = 7;
pub const DEFAULT_MAX_ALPHA_ORDER: usize = 5;

/// `prod_{i<j} (x_j - x_i)`; 1 for fewer than two points.
pub fn vandermonde(xs: &[i64]) -> BigInt {
    let mut p = BigInt::one();
    for j in 0..xs.len() {
        for i in 0..j {
            p *= BigInt::from(xs[j] - xs[i]);
        }
    }
    p
}

fn superfactorial_vandermonde(k: usize) -> BigInt {
    let base: Vec<i64> = (1..=k as i64).collect();
    vandermonde(&base)
}

fn check_increasing(xs: &[i64]) -> Result<()> {
    if xs.is_empty() {
        return Err(Error::InvalidArgument("bottom row must be non-empty".into()));
    }
    if xs.windows(2).any(|w| w[0] >= w[1]) {
        return Err(Error::InvalidArgument(format!(
            "bottom row {xs:?} is not strictly increasing"
        )));
    }
    Ok(())
}

/// Sum over monotone triangles with bottom row `xs` of `weight^(entries new to their row)`,
/// memoised on rows.
fn weighted_triangle_sum(xs: &[i64], weighted: bool) -> BigInt {
    fn rec(row: &[i64], weighted: bool, memo: &mut HashMap<Vec<i64>, BigInt>) -> BigInt {
        if row.len() == 1 {
            return if weighted { BigInt::from(2) } else { BigInt::one() };
        }
        if let Some(v) = memo.get(row) {
            return v.clone();
        }
        let mut parents = Vec::new();
        for_each_parent(row, &mut |p| parents.push(p.to_vec()));
        let mut total = BigInt::zero();
        for p in parents {
            let sub = rec(&p, weighted, memo);
            if weighted {
                let fresh = row.iter().filter(|v| !p.contains(v)).count();
                total += sub << fresh;
            } else {
                total += sub;
            }
        }
        memo.insert(row.to_vec(), total.clone());
        total
    }
    rec(xs, weighted, &mut HashMap::new())
}

/// `sum 2^{N+(T)}` over monotone triangles with bottom row `xs`, by recursion over
/// interlacing rows.
pub fn two_enumeration_bruteforce(xs: &[i64]) -> Result<BigInt> {
    two_enumeration_bruteforce_with_limit(xs, DEFAULT_MAX_TRIANGLE_ORDER)
}

pub fn two_enumeration_bruteforce_with_limit(xs: &[i64], max: usize) -> Result<BigInt> {
    check_increasing(xs)?;
    if xs.len() > max {
        return Err(Error::TooLarge { what: "triangle 2-enumeration", requested: xs.len(), max });
    }
    Ok(weighted_triangle_sum(xs, true))
}

/// `2^{binom(k+1,2)} prod_{i<j} (x_j - x_i)/(j - i)`.
pub fn two_enumeration_closed(xs: &[i64]) -> Result<BigInt> {
    check_increasing(xs)?;
    let k = xs.len();
    let num = vandermonde(xs) << pairs(k + 1);
    let den = superfactorial_vandermonde(k);
    debug_assert!((&num % &den).is_zero());
    Ok(num / den)
}

/// Number of monotone triangles with bottom row `xs`.
pub fn alpha_bruteforce(xs: &[i64]) -> Result<BigInt> {
    alpha_bruteforce_with_limit(xs, DEFAULT_MAX_ALPHA_ORDER)
}

pub fn alpha_bruteforce_with_limit(xs: &[i64], max: usize) -> Result<BigInt> {
    check_increasing(xs)?;
    if xs.len() > max {
        return Err(Error::TooLarge { what: "monotone triangle count", requested: xs.len(), max });
    }
    Ok(weighted_triangle_sum(xs, false))
}

/// `|A_n|`, counted as complete monotone triangles.
pub fn asm_count(n: usize) -> Result<BigInt> {
    if n == 0 {
        return Err(Error::InvalidArgument("ASM order must be positive".into()));
    }
    if n > DEFAULT_MAX_TRIANGLE_ORDER {
        return Err(Error::TooLarge {
            what: "ASM count",
            requested: n,
            max: DEFAULT_MAX_TRIANGLE_ORDER,
        });
    }
    let bottom: Vec<i64> = (1..=n as i64).collect();
    Ok(weighted_triangle_sum(&bottom, false))
}

fn check_row(n: usize, k: usize, xs: &[i64]) -> Result<Vec<i64>> {
    if n == 0 || k > n {
        return Err(Error::InvalidArgument(format!("need 0 <= k <= n and n >= 1, got n={n}, k={k}")));
    }
    if xs.len() != k {
        return Err(Error::InvalidArgument(format!("expected {k} positions, got {}", xs.len())));
    }
    if xs.windows(2).any(|w| w[0] >= w[1]) || xs.iter().any(|&x| x < 1 || x > n as i64) {
        return Err(Error::InvalidArgument(format!(
            "positions {xs:?} must be strictly increasing in 1..={n}"
        )));
    }
    Ok((1..=n as i64).filter(|v| !xs.contains(v)).collect())
}

/// Domino-measure probability that row `k` of the height matrix ascends exactly at `xs`.
/// `k = 0` is accepted with `xs` empty and has probability 1.
pub fn row_law_probability(n: usize, k: usize, xs: &[i64]) -> Result<BigRational> {
    let ys = check_row(n, k, xs)?;
    let exp = pairs(k + 1) as i64 + pairs(n - k + 1) as i64 - pairs(n + 1) as i64;
    let num = vandermonde(xs) * vandermonde(&ys);
    let den = superfactorial_vandermonde(k) * superfactorial_vandermonde(n - k);
    Ok(pow2_rational(exp) * BigRational::new(num, den))
}

/// Exact law of the ascent set of row `k` under the domino measure, by enumerating `A_n`.
pub fn domino_row_distribution(n: usize, k: usize) -> Result<BTreeMap<Vec<i64>, BigRational>> {
    if k == 0 || k > n {
        return Err(Error::InvalidArgument(format!("need 1 <= k <= n, got n={n}, k={k}")));
    }
    let mut law = BTreeMap::new();
    for m in enumerate_asms(n)? {
        let xs = row_ascents(&height_matrix(&m), k);
        *law.entry(xs).or_insert_with(BigRational::zero) += domino_weight(&m);
    }
    Ok(law)
}

/// Probability of the ascent set `xs` in row `k` under the uniform measure on `A_n`.
pub fn uniform_row_law(n: usize, k: usize, xs: &[i64]) -> Result<BigRational> {
    const MAX: usize = DEFAULT_MAX_ASM_ORDER - 1;
    if n > MAX {
        return Err(Error::TooLarge { what: "uniform row law", requested: n, max: MAX });
    }
    let ys = check_row(n, k, xs)?;
    let alpha = |v: &[i64]| -> Result<BigInt> {
        if v.is_empty() {
            Ok(BigInt::one())
        } else {
            alpha_bruteforce(v)
        }
    };
    let total = asm_count(n)?;
    Ok(BigRational::new(alpha(xs)? * alpha(&ys)?, total))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::asm::matrix::n_plus;
    use crate::asm::triangle::{for_each_triangle, n_plus_triangle, MonotoneTriangle};

    fn subsets(universe: &[i64], k: usize) -> Vec<Vec<i64>> {
        if k == 0 {
            return vec![vec![]];
        }
        if universe.len() < k {
            return vec![];
        }
        let mut out = Vec::new();
        for mut s in subsets(&universe[1..], k - 1) {
            s.insert(0, universe[0]);
            out.push(s);
        }
        out.extend(subsets(&universe[1..], k));
        out
    }

    fn r(a: i64, b: i64) -> BigRational {
        BigRational::new(a.into(), b.into())
    }

    #[test]
    fn two_enumeration_examples() {
        assert_eq!(two_enumeration_bruteforce(&[1, 3]).unwrap(), 16.into());
        assert_eq!(two_enumeration_bruteforce(&[1, 2, 3]).unwrap(), 64.into());
        assert_eq!(two_enumeration_bruteforce(&[-5]).unwrap(), 2.into());
        assert_eq!(two_enumeration_closed(&[1, 3]).unwrap(), 16.into());
        assert_eq!(two_enumeration_closed(&[1, 2, 3]).unwrap(), 64.into());
        assert!(two_enumeration_bruteforce(&[1, 2, 3, 4, 5, 6, 7, 8]).is_err());
        assert!(two_enumeration_bruteforce(&[2, 2]).is_err());
    }

    #[test]
    fn two_enumeration_closed_matches_recursion() {
        let universe: Vec<i64> = (1..=6).collect();
        for k in 1..=4 {
            for xs in subsets(&universe, k) {
                assert_eq!(
                    two_enumeration_bruteforce(&xs).unwrap(),
                    two_enumeration_closed(&xs).unwrap(),
                    "{xs:?}"
                );
            }
        }
        // Entries need not be positive.
        assert_eq!(
            two_enumeration_bruteforce(&[-3, 0, 4]).unwrap(),
            two_enumeration_closed(&[-3, 0, 4]).unwrap()
        );
    }

    #[test]
    fn recursion_matches_explicit_triangle_listing() {
        let xs = [1, 3, 4, 7];
        let mut count = BigInt::zero();
        let mut weighted = BigInt::zero();
        for_each_triangle(&xs, |rows| {
            let t = MonotoneTriangle::new(rows.to_vec()).unwrap();
            count += 1;
            weighted += BigInt::one() << n_plus_triangle(&t);
        });
        assert_eq!(alpha_bruteforce(&xs).unwrap(), count);
        assert_eq!(two_enumeration_bruteforce(&xs).unwrap(), weighted);
    }

    #[test]
    fn alpha_examples() {
        assert_eq!(alpha_bruteforce(&[9]).unwrap(), 1.into());
        assert_eq!(alpha_bruteforce(&[1, 3]).unwrap(), 3.into());
        assert_eq!(alpha_bruteforce(&[1, 2, 3]).unwrap(), 7.into());
        assert!(alpha_bruteforce(&[1, 2, 3, 4, 5, 6]).is_err());
        let counts: Vec<BigInt> = (1..=6).map(|n| asm_count(n).unwrap()).collect();
        let expected: Vec<BigInt> = [1, 2, 7, 42, 429, 7436].into_iter().map(BigInt::from).collect();
        assert_eq!(counts, expected);
    }

    #[test]
    fn domino_weights_sum_to_one() {
        for n in 1..=5 {
            let total: BigRational = enumerate_asms(n).unwrap().map(|m| domino_weight(&m)).sum();
            assert_eq!(total, BigRational::one(), "n={n}");
        }
        let s: BigInt = enumerate_asms(3).unwrap().map(|m| BigInt::one() << n_plus(&m)).sum();
        assert_eq!(s, 64.into());
    }

    #[test]
    fn row_law_examples() {
        assert_eq!(row_law_probability(2, 1, &[2]).unwrap(), r(1, 2));
        assert_eq!(row_law_probability(2, 1, &[1]).unwrap(), r(1, 2));
        for n in 1..=5 {
            let full: Vec<i64> = (1..=n as i64).collect();
            assert_eq!(row_law_probability(n, n, &full).unwrap(), BigRational::one());
        }
        assert_eq!(row_law_probability(3, 0, &[]).unwrap(), BigRational::one());
        assert!(row_law_probability(3, 2, &[2, 1]).is_err());
        assert!(row_law_probability(3, 2, &[1, 4]).is_err());
        assert!(row_law_probability(3, 4, &[1, 2, 3, 4]).is_err());
    }

    #[test]
    fn row_law_matches_enumeration() {
        for n in 1..=4 {
            let universe: Vec<i64> = (1..=n as i64).collect();
            for k in 1..=n {
                let law = domino_row_distribution(n, k).unwrap();
                for xs in subsets(&universe, k) {
                    let exact = law.get(&xs).cloned().unwrap_or_else(BigRational::zero);
                    assert_eq!(row_law_probability(n, k, &xs).unwrap(), exact, "n={n} k={k} {xs:?}");
                }
            }
        }
    }

    #[test]
    fn uniform_row_law_is_a_distribution() {
        assert_eq!(uniform_row_law(2, 1, &[1]).unwrap(), r(1, 2));
        assert_eq!(uniform_row_law(3, 3, &[1, 2, 3]).unwrap(), BigRational::one());
        for n in 1..=4 {
            let universe: Vec<i64> = (1..=n as i64).collect();
            for k in 1..=n {
                let mut counts: BTreeMap<Vec<i64>, usize> = BTreeMap::new();
                let mut total = 0usize;
                for m in enumerate_asms(n).unwrap() {
                    *counts.entry(row_ascents(&height_matrix(&m), k)).or_default() += 1;
                    total += 1;
                }
                let mut sum = BigRational::zero();
                for xs in subsets(&universe, k) {
                    let p = uniform_row_law(n, k, &xs).unwrap();
                    let c = counts.get(&xs).copied().unwrap_or(0);
                    assert_eq!(p, r(c as i64, total as i64));
                    sum += p;
                }
                assert_eq!(sum, BigRational::one());
            }
        }
        assert!(uniform_row_law(6, 1, &[1]).is_err());
    }
}
