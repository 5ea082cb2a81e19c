//! Monotone-triangle counts from the shift-operator formula
//! `alpha_k = prod_{i<j} (Id + E_i D_j) Delta(x) / Delta(1..k)`.

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;

use num::{BigInt, BigRational, One, Signed, Zero};

use super::counting::vandermonde;
use crate::error::{Error, Result};

pub const MAX_OPERATOR_ORDER: usize = 4;

/// Sparse multivariate polynomial with exact rational coefficients, keyed by
/// exponent vectors.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Polynomial {
    vars: usize,
    terms: BTreeMap<Vec<u32>, BigRational>,
}

impl Polynomial {
    pub fn zero(vars: usize) -> Self {
        Polynomial { vars, terms: BTreeMap::new() }
    }

    pub fn constant(vars: usize, c: BigRational) -> Self {
        let mut p = Polynomial::zero(vars);
        p.add_term(vec![0; vars], c);
        p
    }

    /// The variable `x_i` (0-based).
    pub fn var(vars: usize, i: usize) -> Self {
        let mut e = vec![0; vars];
        e[i] = 1;
        let mut p = Polynomial::zero(vars);
        p.add_term(e, BigRational::one());
        p
    }

    pub fn vars(&self) -> usize {
        self.vars
    }

    pub fn terms(&self) -> &BTreeMap<Vec<u32>, BigRational> {
        &self.terms
    }

    pub fn degree(&self) -> u32 {
        self.terms.keys().map(|e| e.iter().sum()).max().unwrap_or(0)
    }

    fn add_term(&mut self, e: Vec<u32>, c: BigRational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(e) {
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
            Entry::Vacant(v) => {
                v.insert(c);
            }
        }
    }

    pub fn add(&self, other: &Polynomial) -> Polynomial {
        let mut p = self.clone();
        for (e, c) in &other.terms {
            p.add_term(e.clone(), c.clone());
        }
        p
    }

    pub fn sub(&self, other: &Polynomial) -> Polynomial {
        let mut p = self.clone();
        for (e, c) in &other.terms {
            p.add_term(e.clone(), -c.clone());
        }
        p
    }

    pub fn mul(&self, other: &Polynomial) -> Polynomial {
        let mut p = Polynomial::zero(self.vars);
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                let e = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                p.add_term(e, c1 * c2);
            }
        }
        p
    }

    pub fn scale(&self, c: &BigRational) -> Polynomial {
        let mut p = Polynomial::zero(self.vars);
        for (e, v) in &self.terms {
            p.add_term(e.clone(), v * c);
        }
        p
    }

    /// `E_i`: substitute `x_i + 1` for `x_i`.
    pub fn shift(&self, i: usize) -> Polynomial {
        let mut p = Polynomial::zero(self.vars);
        for (e, c) in &self.terms {
            let d = e[i];
            let mut binom = BigInt::one();
            for m in (0..=d).rev() {
                // binom runs over C(d, d - m) = C(d, m)
                let mut e2 = e.clone();
                e2[i] = m;
                p.add_term(e2, c * BigRational::from_integer(binom.clone()));
                let k = d - m;
                binom = binom * BigInt::from(d - k) / BigInt::from(k + 1);
            }
        }
        p
    }

    /// `D_i = E_i - Id`.
    pub fn difference(&self, i: usize) -> Polynomial {
        self.shift(i).sub(self)
    }

    pub fn eval(&self, xs: &[i64]) -> BigRational {
        assert_eq!(xs.len(), self.vars, "wrong number of arguments");
        let mut total = BigRational::zero();
        for (e, c) in &self.terms {
            let mut t = c.clone();
            for (&x, &d) in xs.iter().zip(e) {
                t *= BigRational::from_integer(num::pow(BigInt::from(x), d as usize));
            }
            total += t;
        }
        total
    }
}

/// The polynomial `prod_{i<j} (Id + E_i D_j) [Delta(x) / Delta(1..k)]` in `k` variables.
pub fn alpha_polynomial(k: usize) -> Result<Polynomial> {
    if k == 0 {
        return Err(Error::InvalidArgument("number of variables must be positive".into()));
    }
    if k > MAX_OPERATOR_ORDER {
        return Err(Error::TooLarge { what: "operator formula", requested: k, max: MAX_OPERATOR_ORDER });
    }
    let base: Vec<i64> = (1..=k as i64).collect();
    let mut p = Polynomial::constant(k, BigRational::new(BigInt::one(), vandermonde(&base)));
    for j in 0..k {
        for i in 0..j {
            p = p.mul(&Polynomial::var(k, j).sub(&Polynomial::var(k, i)));
        }
    }
    // The factors commute, so they can be applied one at a time.
    for j in 0..k {
        for i in 0..j {
            p = p.add(&p.difference(j).shift(i));
        }
    }
    Ok(p)
}

/// `alpha_k(xs)` evaluated from the operator formula.
pub fn alpha_operator_formula(xs: &[i64]) -> Result<BigInt> {
    if xs.windows(2).any(|w| w[0] >= w[1]) {
        return Err(Error::InvalidArgument(format!("{xs:?} is not strictly increasing")));
    }
    let p = alpha_polynomial(xs.len())?;
    let v = p.eval(xs);
    if !v.is_integer() || v.is_negative() {
        return Err(Error::InvalidArgument(format!("operator formula produced {v}")));
    }
    Ok(v.to_integer())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::asm::counting::alpha_bruteforce;

    fn q(a: i64) -> BigRational {
        BigRational::from_integer(a.into())
    }

    #[test]
    fn shift_expands_binomially() {
        let x = Polynomial::var(2, 0);
        let cube = x.mul(&x).mul(&x);
        let shifted = cube.shift(0);
        for t in -3..4 {
            assert_eq!(shifted.eval(&[t, 5]), q((t + 1).pow(3)));
        }
        assert_eq!(cube.difference(1), Polynomial::zero(2));
    }

    #[test]
    fn small_cases() {
        let p1 = alpha_polynomial(1).unwrap();
        assert_eq!(p1, Polynomial::constant(1, q(1)));
        assert_eq!(alpha_operator_formula(&[1, 3]).unwrap(), 3.into());
        assert_eq!(alpha_operator_formula(&[1, 2, 3]).unwrap(), 7.into());
        assert!(alpha_polynomial(5).is_err());
    }

    #[test]
    fn matches_bruteforce_for_three_rows() {
        for a in 1..=6 {
            for b in a + 1..=6 {
                for c in b + 1..=6 {
                    let xs = [a, b, c];
                    assert_eq!(alpha_operator_formula(&xs).unwrap(), alpha_bruteforce(&xs).unwrap());
                }
            }
        }
    }
}
