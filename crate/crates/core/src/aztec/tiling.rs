use serde::{Deserialize, Serialize};

use super::geometry::{AztecDiamond, Cell};
use crate::error::{Error, Result};

pub const DEFAULT_MAX_TILING_ORDER: usize = 5;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Orientation {
    #[serde(rename = "h")]
    Horizontal,
    #[serde(rename = "v")]
    Vertical,
}

/// A domino anchored at its lower-left cell `(x, y)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Domino {
    pub x: i64,
    pub y: i64,
    #[serde(rename = "o")]
    pub orientation: Orientation,
}

impl Domino {
    pub fn horizontal(x: i64, y: i64) -> Self {
        Domino { x, y, orientation: Orientation::Horizontal }
    }

    pub fn vertical(x: i64, y: i64) -> Self {
        Domino { x, y, orientation: Orientation::Vertical }
    }

    pub fn cells(&self) -> [Cell; 2] {
        match self.orientation {
            Orientation::Horizontal => [(self.x, self.y), (self.x + 1, self.y)],
            Orientation::Vertical => [(self.x, self.y), (self.x, self.y + 1)],
        }
    }

    /// Centre of the domino.
    pub fn center(&self) -> (f64, f64) {
        match self.orientation {
            Orientation::Horizontal => (self.x as f64 + 1.0, self.y as f64 + 0.5),
            Orientation::Vertical => (self.x as f64 + 0.5, self.y as f64 + 1.0),
        }
    }

    fn sort_key(&self) -> (i64, i64, Orientation) {
        (self.y, self.x, self.orientation)
    }
}

/// The four classes of dominoes by orientation and the colour of the anchor cell.
/// Each class names the direction the domino moves under shuffling.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum DominoType {
    North,
    South,
    East,
    West,
}

impl DominoType {
    pub fn of(d: &Domino, diamond: &AztecDiamond) -> Self {
        let black = diamond.is_black((d.x, d.y));
        match (d.orientation, black) {
            (Orientation::Horizontal, true) => DominoType::North,
            (Orientation::Horizontal, false) => DominoType::South,
            (Orientation::Vertical, true) => DominoType::East,
            (Orientation::Vertical, false) => DominoType::West,
        }
    }

    pub fn step(self) -> (i64, i64) {
        match self {
            DominoType::North => (0, 1),
            DominoType::South => (0, -1),
            DominoType::East => (1, 0),
            DominoType::West => (-1, 0),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            DominoType::North => "north",
            DominoType::South => "south",
            DominoType::East => "east",
            DominoType::West => "west",
        }
    }
}

/// A domino tiling of the Aztec diamond. Dominoes are kept sorted by anchor
/// row, then column.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawTiling", into = "RawTiling")]
pub struct DominoTiling {
    n: usize,
    dominoes: Vec<Domino>,
}

#[derive(Serialize, Deserialize)]
struct RawTiling {
    n: usize,
    dominoes: Vec<Domino>,
}

impl TryFrom<RawTiling> for DominoTiling {
    type Error = Error;
    fn try_from(raw: RawTiling) -> Result<Self> {
        DominoTiling::new(raw.n, raw.dominoes)
    }
}

impl From<DominoTiling> for RawTiling {
    fn from(t: DominoTiling) -> Self {
        RawTiling { n: t.n, dominoes: t.dominoes }
    }
}

impl DominoTiling {
    pub fn new(n: usize, dominoes: Vec<Domino>) -> Result<Self> {
        let d = AztecDiamond::new(n)?;
        let t = DominoTiling::from_parts(n, dominoes);
        t.check(&d)?;
        Ok(t)
    }

    pub(crate) fn from_parts(n: usize, mut dominoes: Vec<Domino>) -> Self {
        dominoes.sort_by_key(Domino::sort_key);
        DominoTiling { n, dominoes }
    }

    fn check(&self, d: &AztecDiamond) -> Result<()> {
        let mut covered = vec![false; d.cell_box_len()];
        for dom in &self.dominoes {
            for c in dom.cells() {
                if !d.contains_cell(c) {
                    return Err(Error::Tiling(format!(
                        "domino at ({}, {}) covers cell {c:?} outside the diamond",
                        dom.x, dom.y
                    )));
                }
                let idx = d.cell_index(c);
                if covered[idx] {
                    return Err(Error::Tiling(format!("cell {c:?} is covered twice")));
                }
                covered[idx] = true;
            }
        }
        let expected = self.n * (self.n + 1);
        if self.dominoes.len() != expected {
            return Err(Error::Tiling(format!(
                "{} dominoes, expected {expected}",
                self.dominoes.len()
            )));
        }
        Ok(())
    }

    pub fn order(&self) -> usize {
        self.n
    }

    /// The empty tiling of the order-0 diamond, the starting point of shuffling.
    pub fn empty() -> Self {
        DominoTiling { n: 0, dominoes: Vec::new() }
    }

    pub fn diamond(&self) -> AztecDiamond {
        if self.n == 0 {
            AztecDiamond::empty()
        } else {
            AztecDiamond::new(self.n).expect("validated order")
        }
    }

    pub fn dominoes(&self) -> &[Domino] {
        &self.dominoes
    }

    pub fn domino_type(&self, d: &Domino) -> DominoType {
        DominoType::of(d, &self.diamond())
    }

    /// Cell-to-domino lookup over the diamond's bounding box.
    pub fn cover(&self) -> CellCover {
        let d = self.diamond();
        let mut owner = vec![usize::MAX; d.cell_box_len()];
        for (k, dom) in self.dominoes.iter().enumerate() {
            for c in dom.cells() {
                owner[d.cell_index(c)] = k;
            }
        }
        CellCover { diamond: d, owner }
    }
}

pub struct CellCover {
    diamond: AztecDiamond,
    owner: Vec<usize>,
}

impl CellCover {
    /// Index of the domino covering `c`, if `c` lies in the diamond.
    pub fn at(&self, c: Cell) -> Option<usize> {
        if self.diamond.contains_cell(c) {
            Some(self.owner[self.diamond.cell_index(c)])
        } else {
            None
        }
    }
}

/// Every tiling of `AD_n`, by backtracking over cells in row order and trying
/// a horizontal domino before a vertical one.
pub fn enumerate_tilings(n: usize) -> Result<Vec<DominoTiling>> {
    enumerate_tilings_with_limit(n, DEFAULT_MAX_TILING_ORDER)
}

pub fn enumerate_tilings_with_limit(n: usize, max: usize) -> Result<Vec<DominoTiling>> {
    if n > max {
        return Err(Error::TooLarge { what: "tiling enumeration", requested: n, max });
    }
    let d = AztecDiamond::new(n)?;
    let cells = d.cells();
    let mut covered = vec![false; d.cell_box_len()];
    let mut current = Vec::with_capacity(n * (n + 1));
    let mut out = Vec::new();

    fn rec(
        d: &AztecDiamond,
        cells: &[Cell],
        pos: usize,
        covered: &mut Vec<bool>,
        current: &mut Vec<Domino>,
        out: &mut Vec<DominoTiling>,
    ) {
        let mut pos = pos;
        while pos < cells.len() && covered[d.cell_index(cells[pos])] {
            pos += 1;
        }
        if pos == cells.len() {
            out.push(DominoTiling { n: d.order(), dominoes: current.clone() });
            return;
        }
        let (i, j) = cells[pos];
        for dom in [Domino::horizontal(i, j), Domino::vertical(i, j)] {
            let [_, other] = dom.cells();
            if !d.contains_cell(other) || covered[d.cell_index(other)] {
                continue;
            }
            covered[d.cell_index((i, j))] = true;
            covered[d.cell_index(other)] = true;
            current.push(dom);
            rec(d, cells, pos + 1, covered, current, out);
            current.pop();
            covered[d.cell_index((i, j))] = false;
            covered[d.cell_index(other)] = false;
        }
    }

    rec(&d, &cells, 0, &mut covered, &mut current, &mut out);
    for t in &mut out {
        t.dominoes.sort_by_key(Domino::sort_key);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tiling_counts() {
        let counts: Vec<usize> = (1..=4).map(|n| enumerate_tilings(n).unwrap().len()).collect();
        assert_eq!(counts, vec![2, 8, 64, 1024]);
        assert!(enumerate_tilings(6).is_err());
    }

    #[test]
    fn enumerated_tilings_are_valid_and_distinct() {
        let all = enumerate_tilings(3).unwrap();
        for t in &all {
            DominoTiling::new(3, t.dominoes().to_vec()).unwrap();
        }
        let set: std::collections::HashSet<_> = all.iter().collect();
        assert_eq!(set.len(), all.len());
    }

    #[test]
    fn order_one_types() {
        let d = AztecDiamond::new(1).unwrap();
        let flat = DominoTiling::new(1, vec![Domino::horizontal(-1, -1), Domino::horizontal(-1, 0)])
            .unwrap();
        let types: Vec<_> = flat.dominoes().iter().map(|x| DominoType::of(x, &d)).collect();
        assert_eq!(types, vec![DominoType::South, DominoType::North]);
        let upright = DominoTiling::new(1, vec![Domino::vertical(-1, -1), Domino::vertical(0, -1)])
            .unwrap();
        let types: Vec<_> = upright.dominoes().iter().map(|x| DominoType::of(x, &d)).collect();
        assert_eq!(types, vec![DominoType::West, DominoType::East]);
    }

    #[test]
    fn invalid_tilings_are_rejected() {
        assert!(DominoTiling::new(1, vec![Domino::horizontal(-1, -1)]).is_err());
        assert!(DominoTiling::new(
            1,
            vec![Domino::horizontal(-1, -1), Domino::horizontal(-1, -1)]
        )
        .is_err());
        assert!(DominoTiling::new(1, vec![Domino::horizontal(-1, -1), Domino::horizontal(0, 0)])
            .is_err());
    }

    #[test]
    fn json_format() {
        let t = DominoTiling::new(1, vec![Domino::vertical(0, -1), Domino::vertical(-1, -1)])
            .unwrap();
        let s = serde_json::to_string(&t).unwrap();
        assert_eq!(
            s,
            r#"{"n":1,"dominoes":[{"x":-1,"y":-1,"o":"v"},{"x":0,"y":-1,"o":"v"}]}"#
        );
        let back: DominoTiling = serde_json::from_str(&s).unwrap();
        assert_eq!(back, t);
        assert!(serde_json::from_str::<DominoTiling>(r#"{"n":1,"dominoes":[]}"#).is_err());
    }
}
