//! Domino shuffling: a uniform tiling of `AD_n` becomes a uniform tiling of
//! `AD_{n+1}` by deleting colliding pairs, sliding every domino one step in the
//! direction of its type and filling the holes with random 2x2 blocks.

use rand::Rng;

use super::geometry::AztecDiamond;
use super::tiling::{Domino, DominoTiling, DominoType};
use crate::rng::rng_from_seed;

pub fn shuffle_step<R: Rng + ?Sized>(t: &DominoTiling, rng: &mut R) -> DominoTiling {
    let n = t.order();
    let old = t.diamond();
    let new = AztecDiamond::new(n + 1).expect("positive order");
    let doms = t.dominoes();
    let types: Vec<DominoType> = doms.iter().map(|d| DominoType::of(d, &old)).collect();

    let mut removed = vec![false; doms.len()];
    if n > 0 {
        let cover = t.cover();
        for (k, d) in doms.iter().enumerate() {
            let partner = match types[k] {
                DominoType::North => cover.at((d.x, d.y + 1)),
                DominoType::East => cover.at((d.x + 1, d.y)),
                _ => None,
            };
            if let Some(p) = partner {
                let facing = match types[k] {
                    DominoType::North => DominoType::South,
                    _ => DominoType::West,
                };
                let q = &doms[p];
                let aligned = match types[k] {
                    DominoType::North => q.x == d.x && q.y == d.y + 1,
                    _ => q.x == d.x + 1 && q.y == d.y,
                };
                if types[p] == facing && aligned {
                    removed[k] = true;
                    removed[p] = true;
                }
            }
        }
    }

    let mut occupied = vec![false; new.cell_box_len()];
    let mut out = Vec::with_capacity((n + 1) * (n + 2));
    let mut place = |d: Domino, occupied: &mut Vec<bool>| {
        for c in d.cells() {
            assert!(new.contains_cell(c), "shuffled domino leaves the diamond at {c:?}");
            let idx = new.cell_index(c);
            assert!(!occupied[idx], "shuffled dominoes collide at {c:?}");
            occupied[idx] = true;
        }
        out.push(d);
    };
    for (k, d) in doms.iter().enumerate() {
        if removed[k] {
            continue;
        }
        let (dx, dy) = types[k].step();
        place(Domino { x: d.x + dx, y: d.y + dy, orientation: d.orientation }, &mut occupied);
    }
    for (i, j) in new.cells() {
        if occupied[new.cell_index((i, j))] {
            continue;
        }
        let pair = if rng.random_bool(0.5) {
            [Domino::horizontal(i, j), Domino::horizontal(i, j + 1)]
        } else {
            [Domino::vertical(i, j), Domino::vertical(i + 1, j)]
        };
        for d in pair {
            place(d, &mut occupied);
        }
    }
    let tiling = DominoTiling::from_parts(n + 1, out);
    debug_assert!(DominoTiling::new(n + 1, tiling.dominoes().to_vec()).is_ok());
    tiling
}

/// A uniformly random tiling of `AD_n`, deterministic in `seed`.
pub fn sample_tiling(n: usize, seed: u64) -> DominoTiling {
    let mut rng = rng_from_seed(seed);
    sample_tiling_with(n, &mut rng)
}

pub fn sample_tiling_with<R: Rng + ?Sized>(n: usize, rng: &mut R) -> DominoTiling {
    let mut t = DominoTiling::empty();
    for _ in 0..n {
        t = shuffle_step(&t, rng);
    }
    t
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::aztec::tiling::enumerate_tilings;
    use crate::rng::rng_from_seed;
    use std::collections::HashMap;

    #[test]
    fn first_step_is_a_coin_flip() {
        let mut rng = rng_from_seed(1);
        let mut counts: HashMap<DominoTiling, usize> = HashMap::new();
        for _ in 0..2000 {
            *counts.entry(shuffle_step(&DominoTiling::empty(), &mut rng)).or_default() += 1;
        }
        assert_eq!(counts.len(), 2);
        for &c in counts.values() {
            assert!((800..1200).contains(&c));
        }
    }

    #[test]
    fn samples_are_valid_and_reproducible() {
        for n in 1..=20 {
            let t = sample_tiling(n, 99);
            DominoTiling::new(n, t.dominoes().to_vec()).unwrap();
        }
        assert_eq!(sample_tiling(50, 7), sample_tiling(50, 7));
        assert_ne!(sample_tiling(50, 7), sample_tiling(50, 8));
    }

    #[test]
    fn order_two_hits_every_tiling() {
        let all = enumerate_tilings(2).unwrap();
        let mut rng = rng_from_seed(3);
        let mut counts: HashMap<DominoTiling, usize> = HashMap::new();
        for _ in 0..4000 {
            *counts.entry(sample_tiling_with(2, &mut rng)).or_default() += 1;
        }
        assert_eq!(counts.len(), all.len());
        for t in &all {
            assert!(counts[t] > 350, "count {}", counts[t]);
        }
    }
}
