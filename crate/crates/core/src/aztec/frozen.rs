//! Polar regions: the brickwork areas grown from the corners of the diamond.
//!
//! Each of the eight corner cells (two at each tip) seeds a region: the domino
//! covering it together with every domino of the same type reachable through
//! dominoes of that type sharing an edge. A domino is polar when it belongs to
//! one of these regions, temperate otherwise.

use std::collections::VecDeque;

use super::geometry::{AztecDiamond, Cell};
use super::tiling::{DominoTiling, DominoType};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FrozenMask {
    n: usize,
    /// Polar region of each domino, indexed like `DominoTiling::dominoes`.
    regions: Vec<Option<DominoType>>,
}

impl FrozenMask {
    pub fn order(&self) -> usize {
        self.n
    }

    pub fn region(&self, k: usize) -> Option<DominoType> {
        self.regions[k]
    }

    pub fn is_polar(&self, k: usize) -> bool {
        self.regions[k].is_some()
    }

    pub fn regions(&self) -> &[Option<DominoType>] {
        &self.regions
    }

    pub fn polar_count(&self) -> usize {
        self.regions.iter().filter(|r| r.is_some()).count()
    }
}

pub fn corner_cells(n: usize) -> [Cell; 8] {
    let n = n as i64;
    [
        (-1, n - 1),
        (0, n - 1),
        (-1, -n),
        (0, -n),
        (-n, -1),
        (-n, 0),
        (n - 1, -1),
        (n - 1, 0),
    ]
}

pub fn frozen_mask(t: &DominoTiling) -> FrozenMask {
    let d: AztecDiamond = t.diamond();
    let doms = t.dominoes();
    let cover = t.cover();
    let types: Vec<DominoType> = doms.iter().map(|x| DominoType::of(x, &d)).collect();
    let mut regions = vec![None; doms.len()];
    let mut queue = VecDeque::new();
    for c in corner_cells(t.order()) {
        let k = cover.at(c).expect("corner cell lies in the diamond");
        if regions[k].is_none() {
            regions[k] = Some(types[k]);
            queue.push_back(k);
        }
    }
    while let Some(k) = queue.pop_front() {
        let [a, b] = doms[k].cells();
        for (i, j) in [a, b] {
            for nb in [(i + 1, j), (i - 1, j), (i, j + 1), (i, j - 1)] {
                if let Some(m) = cover.at(nb) {
                    if m != k && regions[m].is_none() && types[m] == types[k] {
                        regions[m] = Some(types[k]);
                        queue.push_back(m);
                    }
                }
            }
        }
    }
    FrozenMask { n: t.order(), regions }
}
