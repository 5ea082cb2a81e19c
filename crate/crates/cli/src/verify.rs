//! Exhaustive and numeric verification suites behind `arctic verify`.

use std::collections::{BTreeMap, HashSet};

use arctic_core::asm::{
    alpha_bruteforce, alpha_operator_formula, asm_from_height, domino_row_distribution, dual_triangle,
    enumerate_asms, from_monotone_triangle, height_matrix, n_plus, row_law_probability,
    to_monotone_triangle, two_enumeration_bruteforce, two_enumeration_closed, Asm,
};
use arctic_core::aztec::{
    enumerate_tilings, height_function, is_compatible, tiling_from_height, tiling_from_pair,
    tiling_to_pair,
};
use arctic_core::quad::QuadratureSpec;
use arctic_core::shape::{airfoil_h_closed, airfoil_rhs, hilbert_forward, rate_of_minimiser, theta};
use arctic_core::tableaux::{enumerate_tableaux, jumps_to_tableau, tableau_to_jumps};
use num::{BigInt, One};
use serde::Serialize;
use serde_json::{json, Value};

#[derive(Debug, Serialize)]
pub struct Verdict {
    pub suite: String,
    pub passed: bool,
    pub cases: usize,
    /// First failing case, if any.
    pub failure: Option<Value>,
    pub metrics: BTreeMap<String, Value>,
}

impl Verdict {
    fn new(suite: &str) -> Self {
        Verdict {
            suite: suite.to_string(),
            passed: true,
            cases: 0,
            failure: None,
            metrics: BTreeMap::new(),
        }
    }

    /// Records one case; only the first failure is kept.
    fn case(&mut self, ok: bool, detail: impl FnOnce() -> Value) {
        self.cases += 1;
        if !ok && self.failure.is_none() {
            self.passed = false;
            self.failure = Some(detail());
        }
    }

    fn metric(&mut self, key: &str, v: impl Into<Value>) {
        self.metrics.insert(key.to_string(), v.into());
    }
}

/// Strictly increasing sequences of length `k` drawn from `1..=max`.
pub fn increasing_rows(k: usize, max: i64) -> Vec<Vec<i64>> {
    fn rec(k: usize, start: i64, max: i64, cur: &mut Vec<i64>, out: &mut Vec<Vec<i64>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for v in start..=max {
            cur.push(v);
            rec(k, v + 1, max, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(k, 1, max, &mut Vec::new(), &mut out);
    out
}

/// Weighted ASM count against `2^{n(n+1)/2}`, and the bottom-row formula
/// against brute force.
pub fn two_enum(n: usize, k: usize, max: i64) -> anyhow::Result<Verdict> {
    let mut v = Verdict::new("two-enum");
    for order in 1..=n {
        let total: BigInt = enumerate_asms(order)?.map(|m| BigInt::one() << n_plus(&m)).sum();
        let expected = BigInt::one() << (order * (order + 1) / 2);
        v.case(total == expected, || {
            json!({"n": order, "weighted_sum": total.to_string(), "expected": expected.to_string()})
        });
    }
    for len in 1..=k {
        for xs in increasing_rows(len, max) {
            let brute = two_enumeration_bruteforce(&xs)?;
            let closed = two_enumeration_closed(&xs)?;
            v.case(brute == closed, || {
                json!({"bottom": xs, "bruteforce": brute.to_string(), "closed": closed.to_string()})
            });
        }
    }
    Ok(v)
}

/// Closed-form row law against the law obtained by enumerating `A_n`.
pub fn row_law(n: usize) -> anyhow::Result<Verdict> {
    let mut v = Verdict::new("row-law");
    for order in 1..=n {
        for k in 1..=order {
            let law = domino_row_distribution(order, k)?;
            for xs in increasing_rows(k, order as i64) {
                let closed = row_law_probability(order, k, &xs)?;
                let enumerated = law.get(&xs).cloned().unwrap_or_default();
                v.case(closed == enumerated, || {
                    json!({"n": order, "k": k, "ascents": xs,
                           "closed": closed.to_string(), "enumerated": enumerated.to_string()})
                });
            }
        }
    }
    Ok(v)
}

/// Tilings against compatible pairs, and the number of partners of each ASM.
pub fn compatible(n: usize) -> anyhow::Result<Verdict> {
    let mut v = Verdict::new("compatible");
    for order in 1..=n {
        let tilings = enumerate_tilings(order)?;
        let mut pairs = HashSet::new();
        for t in &tilings {
            let (a, b) = tiling_to_pair(t)?;
            let ok = is_compatible(&a, &b) && tiling_from_pair(&a, &b)? == *t;
            v.case(ok, || json!({"n": order, "tiling": t}));
            pairs.insert((a, b));
        }
        v.case(pairs.len() == tilings.len(), || {
            json!({"n": order, "tilings": tilings.len(), "distinct_pairs": pairs.len()})
        });
        let bigger: Vec<Asm> = enumerate_asms(order + 1)?.collect();
        let mut total = 0usize;
        for a in enumerate_asms(order)? {
            let count = bigger.iter().filter(|b| is_compatible(&a, b)).count();
            total += count;
            v.case(count == 1 << n_plus(&a), || {
                json!({"n": order, "asm": a.rows(), "partners": count, "expected": 1usize << n_plus(&a)})
            });
        }
        v.case(total == tilings.len(), || json!({"n": order, "pairs": total, "tilings": tilings.len()}));
    }
    Ok(v)
}

/// Round trips of every bijection on its exhaustive small domain.
pub fn bijections(n: usize) -> anyhow::Result<Verdict> {
    let mut v = Verdict::new("bijections");
    for order in 1..=n.min(6) {
        for m in enumerate_asms(order)? {
            let h = height_matrix(&m);
            v.case(asm_from_height(&h) == m, || json!({"map": "asm-height", "asm": m.rows()}));
            let t = to_monotone_triangle(&m);
            v.case(from_monotone_triangle(&t)? == m, || json!({"map": "asm-triangle", "asm": m.rows()}));
            let d = dual_triangle(&t)?;
            let ok = dual_triangle(&d)? == t && d == to_monotone_triangle(&m.reflect_vertical());
            v.case(ok, || json!({"map": "dual", "asm": m.rows()}));
        }
    }
    for order in 1..=n.min(3) {
        for t in enumerate_tableaux(order)? {
            let ok = jumps_to_tableau(&tableau_to_jumps(&t))? == t;
            v.case(ok, || json!({"map": "tableau-jumps", "tableau": t}));
        }
    }
    for order in 1..=n.min(4) {
        for t in enumerate_tilings(order)? {
            v.case(tiling_from_height(&height_function(&t)?)? == t, || {
                json!({"map": "tiling-height", "tiling": t})
            });
            if order <= 3 {
                let (a, b) = tiling_to_pair(&t)?;
                v.case(tiling_from_pair(&a, &b)? == t, || json!({"map": "tiling-pair", "tiling": t}));
            }
        }
    }
    Ok(v)
}

/// Forward Hilbert transform of the closed-form airfoil solution against the
/// right-hand side, sup-norm over `grid` points in `(-0.95, 0.95)`.
pub fn airfoil(betas: &[f64], grid: usize, tol: f64) -> anyhow::Result<Verdict> {
    let mut v = Verdict::new("airfoil");
    let spec = QuadratureSpec::with_abs_tol(1e-9);
    let mut worst: f64 = 0.0;
    for &beta in betas {
        let h = move |u: f64| airfoil_h_closed(beta, u);
        for i in 0..grid {
            let x = -0.95 + 1.9 * (i as f64 + 0.5) / grid as f64;
            let lhs = hilbert_forward(&h, x, &spec)?.value;
            let err = (lhs - airfoil_rhs(beta, x)).abs();
            worst = worst.max(err);
            v.case(err < tol, || json!({"beta": beta, "v": x, "residual": err}));
        }
    }
    v.metric("sup_residual", worst);
    v.metric("tol", tol);
    Ok(v)
}

/// `|I(f*_y) + theta(y)|` for each `y`.
pub fn rate(ys: &[f64], tol: f64) -> anyhow::Result<Verdict> {
    let mut v = Verdict::new("rate");
    let spec = QuadratureSpec::with_abs_tol(1e-9);
    let mut worst: f64 = 0.0;
    let mut values = Vec::new();
    for &y in ys {
        let gap = (rate_of_minimiser(y, &spec)? + theta(y)).abs();
        worst = worst.max(gap);
        values.push(json!({"y": y, "gap": gap}));
        v.case(gap < tol, || json!({"y": y, "gap": gap, "tol": tol}));
    }
    v.metric("max_gap", worst);
    v.metric("values", values);
    v.metric("tol", tol);
    Ok(v)
}

/// Operator formula for the number of monotone triangles against brute force.
pub fn operator_formula(k: usize, max: i64) -> anyhow::Result<Verdict> {
    let mut v = Verdict::new("operator-formula");
    for len in 1..=k {
        for xs in increasing_rows(len, max) {
            let formula = alpha_operator_formula(&xs)?;
            let brute = alpha_bruteforce(&xs)?;
            v.case(formula == brute, || {
                json!({"bottom": xs, "formula": formula.to_string(), "bruteforce": brute.to_string()})
            });
        }
    }
    Ok(v)
}
