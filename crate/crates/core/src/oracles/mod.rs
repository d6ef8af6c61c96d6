//! Exhaustive ground-truth solvers for small instances.

mod cover;
mod hd;
mod hhl;
mod hl;
mod mds;

pub use cover::{min_hitting_set, min_vertex_cover};
pub use hd::{highway_dimension_bruteforce, HighwayDimension};
pub use hhl::optimal_hhl_bruteforce;
pub use hl::{optimal_hl_bnb, HlBounds};
pub use mds::exact_mds;

use thiserror::Error;

use crate::center::EmptyCenterGraph;
use crate::highway::HighwayError;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("instance size {size} exceeds oracle limit {limit}")]
    TooLarge { size: usize, limit: usize },
    #[error("oracle requires an undirected graph")]
    DirectedInput,
    #[error(transparent)]
    Empty(#[from] EmptyCenterGraph),
    #[error(transparent)]
    Highway(#[from] HighwayError),
}

pub const DEFAULT_HHL_LIMIT: usize = 9;
pub const DEFAULT_MDS_LIMIT: usize = 20;
pub const DEFAULT_HD_LIMIT: usize = 24;
