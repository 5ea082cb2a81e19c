//! Cells and the directed vertex graph of the Aztec diamond.
//!
//! Cells are unit squares named by their lower-left corner `(i, j)`; the
//! diamond of order `n` holds the cells with `|2i+1| + |2j+1| <= 2n`.
//! Vertices are lattice points `(i, j)` with `|i| + |j| <= n + 1`. A cell is
//! black when `i + j + n` is even.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub type Cell = (i64, i64);
pub type Vertex = (i64, i64);

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct AztecDiamond {
    n: usize,
}

impl AztecDiamond {
    pub fn new(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidArgument("Aztec diamond order must be positive".into()));
        }
        Ok(AztecDiamond { n })
    }

    /// Order 0 is the empty region; only the shuffling sampler starts from it.
    pub(crate) fn empty() -> Self {
        AztecDiamond { n: 0 }
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn contains_cell(&self, (i, j): Cell) -> bool {
        (2 * i + 1).abs() + (2 * j + 1).abs() <= 2 * self.n as i64
    }

    pub fn contains_vertex(&self, (i, j): Vertex) -> bool {
        i.abs() + j.abs() <= self.n as i64 + 1
    }

    pub fn is_black(&self, (i, j): Cell) -> bool {
        (i + j + self.n as i64).rem_euclid(2) == 0
    }

    /// Cells ordered by row (bottom first), then column.
    pub fn cells(&self) -> Vec<Cell> {
        let n = self.n as i64;
        let mut out = Vec::with_capacity(self.cell_count());
        for j in -n..n {
            for i in -n..n {
                if self.contains_cell((i, j)) {
                    out.push((i, j));
                }
            }
        }
        out
    }

    pub fn cell_count(&self) -> usize {
        2 * self.n * (self.n + 1)
    }

    /// Vertices ordered by `(i, j)`.
    pub fn vertices(&self) -> Vec<Vertex> {
        let m = self.n as i64 + 1;
        let mut out = Vec::new();
        for i in -m..=m {
            let r = m - i.abs();
            for j in -r..=r {
                out.push((i, j));
            }
        }
        out
    }

    /// Dense index of a cell inside the `2n x 2n` bounding box.
    pub(crate) fn cell_index(&self, (i, j): Cell) -> usize {
        let n = self.n as i64;
        ((j + n) * 2 * n + (i + n)) as usize
    }

    pub(crate) fn cell_box_len(&self) -> usize {
        4 * self.n * self.n
    }

    /// Dense index of a vertex inside the `(2n+3) x (2n+3)` bounding box.
    pub(crate) fn vertex_index(&self, (i, j): Vertex) -> usize {
        let m = self.n as i64 + 1;
        let w = 2 * m + 1;
        ((j + m) * w + (i + m)) as usize
    }

    pub(crate) fn vertex_box_len(&self) -> usize {
        let w = 2 * self.n + 3;
        w * w
    }

    /// Whether the edge between two adjacent vertices separates two cells of the diamond.
    pub fn is_interior_edge(&self, u: Vertex, v: Vertex) -> bool {
        match edge_cells(u, v) {
            Some((a, b)) => self.contains_cell(a) && self.contains_cell(b),
            None => false,
        }
    }

    /// True when the edge between adjacent `u` and `v` is directed `u -> v`:
    /// the black cell lies on the traveller's left.
    pub fn directed(&self, u: Vertex, v: Vertex) -> bool {
        let (dx, dy) = (v.0 - u.0, v.1 - u.1);
        let left = match (dx, dy) {
            (1, 0) => (u.0, u.1),
            (-1, 0) => (v.0, v.1 - 1),
            (0, 1) => (u.0 - 1, u.1),
            (0, -1) => (v.0, v.1),
            _ => panic!("vertices {u:?} and {v:?} are not adjacent"),
        };
        self.is_black(left)
    }
}

/// The two cells on either side of the unit edge `u`-`v`, lower/left one first.
pub(crate) fn edge_cells(u: Vertex, v: Vertex) -> Option<(Cell, Cell)> {
    let (a, b) = if u <= v { (u, v) } else { (v, u) };
    match (b.0 - a.0, b.1 - a.1) {
        (1, 0) => Some(((a.0, a.1 - 1), (a.0, a.1))),
        (0, 1) => Some(((a.0 - 1, a.1), (a.0, a.1))),
        _ => None,
    }
}

/// Directed graph on the diamond's vertices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AztecGraph {
    pub n: usize,
    pub vertices: Vec<Vertex>,
    /// Directed edges `(from, to)`, each unordered pair listed once.
    pub edges: Vec<(Vertex, Vertex)>,
}

impl AztecGraph {
    pub fn out_degree(&self, v: Vertex) -> usize {
        self.edges.iter().filter(|e| e.0 == v).count()
    }

    pub fn in_degree(&self, v: Vertex) -> usize {
        self.edges.iter().filter(|e| e.1 == v).count()
    }
}

pub fn build_graph(n: usize) -> Result<AztecGraph> {
    let d = AztecDiamond::new(n)?;
    let vertices = d.vertices();
    let mut edges = Vec::new();
    for &u in &vertices {
        for v in [(u.0 + 1, u.1), (u.0, u.1 + 1)] {
            if d.contains_vertex(v) {
                edges.push(if d.directed(u, v) { (u, v) } else { (v, u) });
            }
        }
    }
    Ok(AztecGraph { n, vertices, edges })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cell_counts() {
        for n in 1..=6 {
            let d = AztecDiamond::new(n).unwrap();
            assert_eq!(d.cells().len(), 2 * n * (n + 1));
            // Row j holds the cells listed by the defining union.
            let n = n as i64;
            for i in -n..n {
                let lo = (-n - i - 1).max(-n + i);
                let hi = (n + i).min(n - i - 1);
                for j in -n - 2..n + 2 {
                    assert_eq!(d.contains_cell((i, j)), lo <= j && j <= hi, "cell ({i},{j})");
                }
            }
        }
    }

    #[test]
    fn vertex_counts() {
        for n in 1..=5 {
            let g = build_graph(n).unwrap();
            let m = n as i64 + 1;
            let direct = (-m..=m)
                .flat_map(|i| (-m..=m).map(move |j| (i, j)))
                .filter(|&(i, j)| i.abs() + j.abs() <= m)
                .count();
            assert_eq!(g.vertices.len(), direct);
            assert_eq!(direct, 2 * (n + 1) * (n + 2) + 1);
        }
    }

    #[test]
    fn every_cell_is_circulated_by_its_colour() {
        // Around a black cell the four edges run counterclockwise, around a white cell clockwise.
        let d = AztecDiamond::new(3).unwrap();
        for c in d.cells() {
            let (i, j) = c;
            let ccw = d.directed((i, j), (i + 1, j))
                && d.directed((i + 1, j), (i + 1, j + 1))
                && d.directed((i + 1, j + 1), (i, j + 1))
                && d.directed((i, j + 1), (i, j));
            let cw = !d.directed((i, j), (i + 1, j))
                && !d.directed((i + 1, j), (i + 1, j + 1))
                && !d.directed((i + 1, j + 1), (i, j + 1))
                && !d.directed((i, j + 1), (i, j));
            assert!(if d.is_black(c) { ccw } else { cw }, "cell {c:?}");
        }
    }

    #[test]
    fn interior_vertices_are_balanced() {
        for n in 1..=4 {
            let g = build_graph(n).unwrap();
            for &v in &g.vertices {
                if v.0.abs() + v.1.abs() <= n as i64 {
                    assert_eq!(g.in_degree(v), g.out_degree(v), "n={n} v={v:?}");
                }
            }
            assert_eq!(g.edges.len(), {
                let d = AztecDiamond::new(n).unwrap();
                let vs = d.vertices();
                vs.iter()
                    .map(|&(i, j)| {
                        usize::from(d.contains_vertex((i + 1, j)))
                            + usize::from(d.contains_vertex((i, j + 1)))
                    })
                    .sum::<usize>()
            });
        }
    }
}
