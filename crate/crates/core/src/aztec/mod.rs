//! Domino tilings of the Aztec diamond.

mod frozen;
mod geometry;
mod height;
mod pairs;
mod shuffle;
mod tiling;

pub use frozen::{corner_cells, frozen_mask, FrozenMask};
pub use geometry::{build_graph, AztecDiamond, AztecGraph, Cell, Vertex};
pub use height::{height_function, tiling_from_height, west_tip, HeightFunction};
pub use pairs::{compatible_pair, is_compatible, tiling_from_pair, tiling_to_pair};
pub use shuffle::{sample_tiling, sample_tiling_with, shuffle_step};
pub use tiling::{
    enumerate_tilings, enumerate_tilings_with_limit, CellCover, Domino, DominoTiling,
    DominoType, Orientation, DEFAULT_MAX_TILING_ORDER,
};
