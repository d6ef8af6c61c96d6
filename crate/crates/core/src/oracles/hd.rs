use num_rational::Ratio;
use serde::{Deserialize, Serialize};

use super::{min_hitting_set, OracleError};
use crate::dist::DistMatrix;
use crate::graph::{Graph, Vertex};
use crate::highway::{PathCatalog, DEFAULT_PATH_CAP};

/// Largest minimum hitting set of any `S_r(v)`, with the neighborhood that
/// attains it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HighwayDimension {
    pub h: usize,
    pub vertex: Option<Vertex>,
    pub r: Option<Ratio<u64>>,
    pub hitting_set: Vec<Vertex>,
}

const MAX_SETS: usize = 200_000;

/// Highway dimension by solving every hitting-set instance `S_r(v)` over all
/// vertices and every radius at which some neighborhood changes.
pub fn highway_dimension_bruteforce(g: &Graph, limit_n: usize) -> Result<HighwayDimension, OracleError> {
    if g.is_directed() {
        return Err(OracleError::DirectedInput);
    }
    if g.n() > limit_n {
        return Err(OracleError::TooLarge { size: g.n(), limit: limit_n });
    }
    let d = DistMatrix::compute(g);
    let cat = PathCatalog::build(g, &d, DEFAULT_PATH_CAP)?;
    let mut best = HighwayDimension { h: 0, vertex: None, r: None, hitting_set: Vec::new() };
    for r in cat.candidate_radii() {
        for v in 0..g.n() {
            let sets: Vec<Vec<Vertex>> = cat.neighborhood(v, r).into_iter().map(|i| cat.path(i).vertices.clone()).collect();
            if sets.len() <= best.h {
                continue;
            }
            let hs = min_hitting_set(&sets, MAX_SETS)?;
            if hs.len() > best.h {
                best = HighwayDimension { h: hs.len(), vertex: Some(v), r: Some(r), hitting_set: hs };
            }
        }
    }
    Ok(best)
}
