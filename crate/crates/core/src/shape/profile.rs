//! Piecewise-linear profiles and the log-kernel functionals
//! `I(f) = -\iint log|s-t| f'(s) (f'(t) - 1)` and `J(g) = -\iint log|s-t| g'(s) g'(t)`.

use crate::error::{Error, Result};
use crate::quad::{integrate_with_breaks, QuadratureSpec};

const ADMISSIBLE_TOL: f64 = 1e-12;

/// Continuous piecewise-linear function on `[0, 1]`.
#[derive(Debug, Clone, PartialEq)]
pub struct Profile {
    xs: Vec<f64>,
    vs: Vec<f64>,
}

impl Profile {
    pub fn new(xs: Vec<f64>, vs: Vec<f64>) -> Result<Self> {
        if xs.len() < 2 || xs.len() != vs.len() {
            return Err(Error::Profile("need at least two breakpoints with one value each".into()));
        }
        if xs[0] != 0.0 || *xs.last().expect("non-empty") != 1.0 {
            return Err(Error::Profile("breakpoints must run from 0 to 1".into()));
        }
        if xs.windows(2).any(|w| !(w[0] < w[1])) || vs.iter().any(|v| !v.is_finite()) {
            return Err(Error::Profile("breakpoints must be strictly increasing, values finite".into()));
        }
        Ok(Profile { xs, vs })
    }

    /// Samples `f` on a uniform grid with `cells` pieces.
    pub fn from_fn(cells: usize, f: impl Fn(f64) -> f64) -> Result<Self> {
        let xs: Vec<f64> = (0..=cells).map(|k| k as f64 / cells as f64).collect();
        let vs = xs.iter().map(|&x| f(x)).collect();
        Profile::new(xs, vs)
    }

    pub fn identity() -> Self {
        Profile { xs: vec![0.0, 1.0], vs: vec![0.0, 1.0] }
    }

    pub fn breakpoints(&self) -> &[f64] {
        &self.xs
    }

    pub fn values(&self) -> &[f64] {
        &self.vs
    }

    pub fn end_value(&self) -> f64 {
        *self.vs.last().expect("non-empty")
    }

    pub fn slopes(&self) -> Vec<f64> {
        self.xs
            .windows(2)
            .zip(self.vs.windows(2))
            .map(|(x, v)| (v[1] - v[0]) / (x[1] - x[0]))
            .collect()
    }

    pub fn eval(&self, x: f64) -> f64 {
        let k = match self.xs.partition_point(|&b| b <= x) {
            0 => 0,
            p if p >= self.xs.len() => self.xs.len() - 2,
            p => p - 1,
        };
        let t = (x - self.xs[k]) / (self.xs[k + 1] - self.xs[k]);
        self.vs[k] + t * (self.vs[k + 1] - self.vs[k])
    }

    /// `f(0) = 0`, nondecreasing and 1-Lipschitz.
    pub fn is_admissible(&self) -> bool {
        self.vs[0].abs() <= ADMISSIBLE_TOL
            && self.slopes().iter().all(|&c| (-ADMISSIBLE_TOL..=1.0 + ADMISSIBLE_TOL).contains(&c))
    }

    /// `g = 2 f - x`.
    pub fn to_g(&self) -> Profile {
        let vs = self.xs.iter().zip(&self.vs).map(|(x, v)| 2.0 * v - x).collect();
        Profile { xs: self.xs.clone(), vs }
    }

    /// `f = (g + x) / 2`.
    pub fn from_g(g: &Profile) -> Profile {
        let vs = g.xs.iter().zip(&g.vs).map(|(x, v)| (v + x) / 2.0).collect();
        Profile { xs: g.xs.clone(), vs }
    }

    /// Same function over the union of both breakpoint sets.
    fn refined(&self, extra: &[f64]) -> Profile {
        let mut xs: Vec<f64> = self.xs.iter().chain(extra).copied().collect();
        xs.sort_by(f64::total_cmp);
        xs.dedup();
        let vs = xs.iter().map(|&x| self.eval(x)).collect();
        Profile { xs, vs }
    }
}

/// Linear interpolation of an `(n, k)`-admissible sequence scaled by `1/n`.
pub fn embed_sequence(u: &[i64]) -> Result<Profile> {
    if u.len() < 2 {
        return Err(Error::Profile("sequence needs at least two terms".into()));
    }
    if u[0] != 0 || u.windows(2).any(|w| !(0..=1).contains(&(w[1] - w[0]))) {
        return Err(Error::Profile(format!(
            "{u:?} must start at 0 and have increments in {{0, 1}}"
        )));
    }
    let n = (u.len() - 1) as f64;
    let xs = (0..u.len()).map(|j| j as f64 / n).collect();
    let vs = u.iter().map(|&v| v as f64 / n).collect();
    Profile::new(xs, vs)
}

/// Antiderivative pair with `Phi'' = log|w|`.
fn phi(w: f64) -> f64 {
    if w == 0.0 {
        0.0
    } else {
        0.5 * w * w * w.abs().ln() - 0.75 * w * w
    }
}

/// `\int_a^b \int_c^d log|s - t| dt ds`.
pub fn log_cell_integral(a: f64, b: f64, c: f64, d: f64) -> f64 {
    phi(b - c) - phi(a - c) - phi(b - d) + phi(a - d)
}

/// `-\iint log|s-t| g'(s) h'(t) ds dt` for piecewise-linear `g`, `h`, summed
/// exactly over pairs of linear pieces.
pub fn inner_product(g: &Profile, h: &Profile) -> f64 {
    let g = g.refined(&h.xs);
    let h = h.refined(&g.xs);
    let (cg, ch) = (g.slopes(), h.slopes());
    let xs = &g.xs;
    let mut total = 0.0;
    for p in 0..cg.len() {
        if cg[p] == 0.0 {
            continue;
        }
        for q in 0..ch.len() {
            if ch[q] == 0.0 {
                continue;
            }
            total += cg[p] * ch[q] * log_cell_integral(xs[p], xs[p + 1], xs[q], xs[q + 1]);
        }
    }
    -total
}

pub fn functional_j(g: &Profile) -> f64 {
    inner_product(g, g)
}

/// `I(f)` for an admissible piecewise-linear profile, exact up to rounding.
pub fn rate_i(f: &Profile) -> Result<f64> {
    if !f.is_admissible() {
        return Err(Error::Profile("profile is not admissible".into()));
    }
    let c = f.slopes();
    let xs = &f.xs;
    let mut total = 0.0;
    for p in 0..c.len() {
        if c[p] == 0.0 {
            continue;
        }
        for q in 0..c.len() {
            let w = c[q] - 1.0;
            if w == 0.0 {
                continue;
            }
            total += c[p] * w * log_cell_integral(xs[p], xs[p + 1], xs[q], xs[q + 1]);
        }
    }
    Ok(-total)
}

/// `I(f)` for a profile given through its derivative, by nested adaptive
/// quadrature; `breaks` lists the points where `f'` is not smooth.
pub fn rate_i_quadrature(
    fprime: &dyn Fn(f64) -> f64,
    breaks: &[f64],
    spec: &QuadratureSpec,
) -> Result<f64> {
    let mut pts: Vec<f64> = [0.0, 1.0]
        .into_iter()
        .chain(breaks.iter().copied().filter(|&b| b > 0.0 && b < 1.0))
        .collect();
    pts.sort_by(f64::total_cmp);
    pts.dedup();
    let inner_spec = QuadratureSpec { abs_tol: spec.abs_tol * 1e-2, ..*spec };
    let mut failure = None;
    let outer = integrate_with_breaks(
        |s| {
            let fs = fprime(s);
            if fs == 0.0 {
                return 0.0;
            }
            let mut ipts = pts.clone();
            if !ipts.contains(&s) {
                ipts.push(s);
                ipts.sort_by(f64::total_cmp);
            }
            match integrate_with_breaks(|t| (s - t).abs().ln() * (fprime(t) - 1.0), &ipts, &inner_spec) {
                Ok(e) => fs * e.value,
                Err(e) => {
                    failure.get_or_insert(e);
                    0.0
                }
            }
        },
        &pts,
        spec,
    )?;
    if let Some(e) = failure {
        return Err(e);
    }
    Ok(-outer.value)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::shape::closed::theta;
    use std::f64::consts::LN_2;

    #[test]
    fn cell_integral_of_unit_square() {
        assert!((log_cell_integral(0.0, 1.0, 0.0, 1.0) + 1.5).abs() < 1e-15);
    }

    #[test]
    fn rate_examples() {
        assert_eq!(rate_i(&Profile::identity()).unwrap(), 0.0);
        let half = Profile::new(vec![0.0, 1.0], vec![0.0, 0.5]).unwrap();
        assert!((rate_i(&half).unwrap() + 0.375).abs() < 1e-15);
        let fu = embed_sequence(&[0, 0, 1]).unwrap();
        assert_eq!(fu.breakpoints(), &[0.0, 0.5, 1.0]);
        assert_eq!(fu.values(), &[0.0, 0.0, 0.5]);
        assert!((rate_i(&fu).unwrap() - (LN_2 / 4.0 - 0.375)).abs() < 1e-15);
        let steep = Profile::new(vec![0.0, 1.0], vec![0.0, 2.0]).unwrap();
        assert!(rate_i(&steep).is_err());
    }

    #[test]
    fn embedding() {
        let f = embed_sequence(&[0, 0, 1, 2, 2, 2, 3]).unwrap();
        assert_eq!(f.end_value(), 0.5);
        assert_eq!(f.eval(0.5), 2.0 / 6.0);
        let id = embed_sequence(&[0, 1, 2, 3]).unwrap();
        for k in 0..=3 {
            assert!((id.eval(k as f64 / 3.0) - k as f64 / 3.0).abs() < 1e-15);
        }
        assert!(embed_sequence(&[0, 2]).is_err());
        assert!(embed_sequence(&[1, 1]).is_err());
    }

    #[test]
    fn j_examples() {
        let zero = Profile::new(vec![0.0, 1.0], vec![0.0, 0.0]).unwrap();
        assert_eq!(functional_j(&zero), 0.0);
        assert!((functional_j(&Profile::identity()) - 1.5).abs() < 1e-15);
    }

    #[test]
    fn rate_and_j_agree() {
        let f = embed_sequence(&[0, 1, 1, 2, 2, 2, 3, 4, 4]).unwrap();
        let direct = rate_i(&f).unwrap();
        assert!((direct - (functional_j(&f.to_g()) / 4.0 - 0.375)).abs() < 1e-13);
        // The rate is never below -theta(y).
        assert!(direct + theta(f.end_value()) >= -1e-12);
    }

    #[test]
    fn inner_product_is_symmetric_and_bilinear() {
        let g = Profile::new(vec![0.0, 0.3, 1.0], vec![0.0, 0.3, -0.2]).unwrap();
        let h = Profile::new(vec![0.0, 0.55, 0.8, 1.0], vec![0.0, -0.2, 0.05, 0.1]).unwrap();
        assert!((inner_product(&g, &h) - inner_product(&h, &g)).abs() < 1e-14);
        let sum = Profile::new(
            vec![0.0, 0.3, 0.55, 0.8, 1.0],
            [0.0, 0.3, 0.55, 0.8, 1.0].iter().map(|&x| g.eval(x) + h.eval(x)).collect(),
        )
        .unwrap();
        let lhs = functional_j(&sum);
        let rhs = functional_j(&g) + 2.0 * inner_product(&g, &h) + functional_j(&h);
        assert!((lhs - rhs).abs() < 1e-13);
    }

    #[test]
    fn quadrature_route_matches_exact_route() {
        let f = embed_sequence(&[0, 0, 1, 2, 2, 2, 3]).unwrap();
        let exact = rate_i(&f).unwrap();
        let slopes = f.slopes();
        let fp = move |s: f64| slopes[((s * 6.0) as usize).min(5)];
        let breaks: Vec<f64> = (1..6).map(|k| k as f64 / 6.0).collect();
        let q = rate_i_quadrature(&fp, &breaks, &QuadratureSpec::with_abs_tol(1e-10)).unwrap();
        assert!((q - exact).abs() < 1e-8, "{q} vs {exact}");
    }
}
