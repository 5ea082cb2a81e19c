//! Height functions on the vertices of the Aztec diamond graph.
//!
//! Along a directed edge `u -> v` the height drops by 1, or rises by 3 when
//! the edge cuts through a domino. Heights are normalised to vanish at the
//! west tip `(-(n+1), 0)`.

use std::collections::VecDeque;

use serde::{Deserialize, Serialize};

use super::geometry::{edge_cells, AztecDiamond, Vertex};
use super::tiling::{Domino, DominoTiling};
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawHeight", into = "RawHeight")]
pub struct HeightFunction {
    n: usize,
    values: Vec<i64>,
}

#[derive(Serialize, Deserialize)]
struct RawHeight {
    n: usize,
    values: Vec<[i64; 3]>,
}

impl TryFrom<RawHeight> for HeightFunction {
    type Error = Error;
    fn try_from(raw: RawHeight) -> Result<Self> {
        let triples: Vec<(Vertex, i64)> =
            raw.values.iter().map(|&[i, j, h]| ((i, j), h)).collect();
        HeightFunction::from_values(raw.n, &triples)
    }
}

impl From<HeightFunction> for RawHeight {
    fn from(h: HeightFunction) -> Self {
        RawHeight { n: h.n, values: h.values().into_iter().map(|((i, j), v)| [i, j, v]).collect() }
    }
}

pub fn west_tip(n: usize) -> Vertex {
    (-(n as i64) - 1, 0)
}

/// Height step `eta(u) - eta(v)` along the edge `u -> v` (in its graph direction).
fn expected_drop(crossed: bool) -> i64 {
    if crossed {
        -3
    } else {
        1
    }
}

impl HeightFunction {
    /// Builds and validates a height function from `(vertex, value)` pairs
    /// covering every vertex exactly once.
    pub fn from_values(n: usize, values: &[(Vertex, i64)]) -> Result<Self> {
        let d = AztecDiamond::new(n)?;
        let mut grid = vec![None; d.vertex_box_len()];
        for &(v, h) in values {
            if !d.contains_vertex(v) {
                return Err(Error::HeightFunction(format!("vertex {v:?} lies outside the diamond")));
            }
            let slot = &mut grid[d.vertex_index(v)];
            if slot.is_some() {
                return Err(Error::HeightFunction(format!("vertex {v:?} given twice")));
            }
            *slot = Some(h);
        }
        for v in d.vertices() {
            if grid[d.vertex_index(v)].is_none() {
                return Err(Error::HeightFunction(format!("no value at vertex {v:?}")));
            }
        }
        let hf = HeightFunction {
            n,
            values: grid.into_iter().map(|x| x.unwrap_or(0)).collect(),
        };
        hf.check(&d)?;
        Ok(hf)
    }

    fn check(&self, d: &AztecDiamond) -> Result<()> {
        if self.get(west_tip(self.n)) != Some(0) {
            return Err(Error::HeightFunction("not normalised: west tip is not 0".into()));
        }
        for (u, v) in directed_edges(d) {
            let drop = self.value(d, u) - self.value(d, v);
            let interior = d.is_interior_edge(u, v);
            if !(drop == 1 || (drop == -3 && interior)) {
                return Err(Error::HeightFunction(format!(
                    "edge {u:?} -> {v:?} has height difference {drop}"
                )));
            }
        }
        Ok(())
    }

    fn value(&self, d: &AztecDiamond, v: Vertex) -> i64 {
        self.values[d.vertex_index(v)]
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn diamond(&self) -> AztecDiamond {
        AztecDiamond::new(self.n).expect("validated order")
    }

    pub fn get(&self, v: Vertex) -> Option<i64> {
        let d = self.diamond();
        d.contains_vertex(v).then(|| self.value(&d, v))
    }

    /// Value at `v`; panics outside the diamond.
    pub fn at(&self, v: Vertex) -> i64 {
        self.get(v).unwrap_or_else(|| panic!("vertex {v:?} outside the diamond"))
    }

    /// All `(vertex, value)` pairs ordered by vertex.
    pub fn values(&self) -> Vec<(Vertex, i64)> {
        let d = self.diamond();
        d.vertices().into_iter().map(|v| (v, self.value(&d, v))).collect()
    }
}

/// Every edge of the graph once, oriented along its direction.
fn directed_edges(d: &AztecDiamond) -> Vec<(Vertex, Vertex)> {
    let mut out = Vec::new();
    for u in d.vertices() {
        for v in [(u.0 + 1, u.1), (u.0, u.1 + 1)] {
            if d.contains_vertex(v) {
                out.push(if d.directed(u, v) { (u, v) } else { (v, u) });
            }
        }
    }
    out
}

fn neighbours(v: Vertex) -> [Vertex; 4] {
    [(v.0 + 1, v.1), (v.0 - 1, v.1), (v.0, v.1 + 1), (v.0, v.1 - 1)]
}

/// The normalised height function of a tiling, found by breadth-first search from
/// the west tip and then checked on every edge.
pub fn height_function(t: &DominoTiling) -> Result<HeightFunction> {
    let d = AztecDiamond::new(t.order())?;
    let cover = t.cover();
    let crossed = |u: Vertex, v: Vertex| -> bool {
        match edge_cells(u, v) {
            Some((a, b)) => match (cover.at(a), cover.at(b)) {
                (Some(x), Some(y)) => x == y,
                _ => false,
            },
            None => false,
        }
    };
    let mut values: Vec<Option<i64>> = vec![None; d.vertex_box_len()];
    let start = west_tip(t.order());
    values[d.vertex_index(start)] = Some(0);
    let mut queue = VecDeque::from([start]);
    while let Some(u) = queue.pop_front() {
        let hu = values[d.vertex_index(u)].expect("visited");
        for v in neighbours(u) {
            if !d.contains_vertex(v) || values[d.vertex_index(v)].is_some() {
                continue;
            }
            let drop = expected_drop(crossed(u, v));
            let hv = if d.directed(u, v) { hu - drop } else { hu + drop };
            values[d.vertex_index(v)] = Some(hv);
            queue.push_back(v);
        }
    }
    let hf = HeightFunction { n: t.order(), values: values.into_iter().map(|x| x.unwrap_or(0)).collect() };
    for (u, v) in directed_edges(&d) {
        if hf.value(&d, u) - hf.value(&d, v) != expected_drop(crossed(u, v)) {
            return Err(Error::HeightFunction(format!(
                "inconsistent heights around edge {u:?} -> {v:?}"
            )));
        }
    }
    Ok(hf)
}

/// The tiling whose dominoes are cut by exactly the edges where the height rises by 3.
pub fn tiling_from_height(h: &HeightFunction) -> Result<DominoTiling> {
    let d = h.diamond();
    let mut dominoes = Vec::with_capacity(h.n * (h.n + 1));
    for (u, v) in directed_edges(&d) {
        if h.value(&d, u) - h.value(&d, v) == -3 {
            let (a, b) = edge_cells(u, v).expect("unit edge");
            dominoes.push(if a.0 == b.0 {
                Domino::vertical(a.0, a.1)
            } else {
                Domino::horizontal(a.0, a.1)
            });
        }
    }
    DominoTiling::new(h.n, dominoes)
        .map_err(|e| Error::HeightFunction(format!("cut edges do not form a tiling: {e}")))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::aztec::tiling::enumerate_tilings;

    #[test]
    fn order_one_heights_differ_only_at_the_centre() {
        let tilings = enumerate_tilings(1).unwrap();
        let hs: Vec<HeightFunction> = tilings.iter().map(|t| height_function(t).unwrap()).collect();
        let (a, b) = (&hs[0], &hs[1]);
        for (v, x) in a.values() {
            let y = b.at(v);
            if v == (0, 0) {
                assert_eq!((x - y).abs(), 4);
            } else {
                assert_eq!(x, y, "vertex {v:?}");
            }
        }
        assert_eq!(a.at((-1, 0)), 1);
    }

    #[test]
    fn boundary_values_are_forced() {
        let tilings = enumerate_tilings(3).unwrap();
        let first = height_function(&tilings[0]).unwrap();
        for t in &tilings {
            let h = height_function(t).unwrap();
            for (v, x) in h.values() {
                if v.0.abs() + v.1.abs() >= 3 {
                    assert_eq!(x, first.at(v));
                }
            }
        }
    }

    #[test]
    fn round_trip_through_heights() {
        for n in 1..=3 {
            for t in enumerate_tilings(n).unwrap() {
                let h = height_function(&t).unwrap();
                assert_eq!(tiling_from_height(&h).unwrap(), t);
                let json = serde_json::to_string(&h).unwrap();
                let back: HeightFunction = serde_json::from_str(&json).unwrap();
                assert_eq!(back, h);
            }
        }
    }

    #[test]
    fn missing_or_bad_values_are_rejected() {
        let t = &enumerate_tilings(1).unwrap()[0];
        let h = height_function(t).unwrap();
        let mut vals = h.values();
        vals.retain(|(v, _)| *v != (0, 0));
        assert!(HeightFunction::from_values(1, &vals).is_err());
        let mut vals = h.values();
        for (v, x) in vals.iter_mut() {
            if *v == (0, 0) {
                *x += 2;
            }
        }
        assert!(HeightFunction::from_values(1, &vals).is_err());
        let shifted: Vec<_> = h.values().into_iter().map(|(v, x)| (v, x + 4)).collect();
        assert!(HeightFunction::from_values(1, &shifted).is_err());
    }
}
