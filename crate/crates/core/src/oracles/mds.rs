use num_rational::Ratio;

use super::OracleError;
use crate::approx::{DenseSubgraph, NodeGraph};
use crate::center::{CenterGraph, EmptyCenterGraph};

/// Maximum density subgraph by enumerating every subset of non-isolated
/// nodes. Ties go to the lexicographically smallest node list.
pub fn exact_mds(cg: &CenterGraph, limit: usize) -> Result<DenseSubgraph, OracleError> {
    let n = cg.edges.iter().map(|p| p.first.max(p.second) + 1).max().unwrap_or(0);
    let g = NodeGraph::from_center(cg, n);
    let k = g.nodes.len();
    if k > limit || k >= 32 {
        return Err(OracleError::TooLarge { size: k, limit });
    }
    if k == 0 {
        return Err(EmptyCenterGraph.into());
    }
    let local = |x: usize| g.nodes.binary_search(&x).unwrap();
    // adj[i]: nodes j >= i adjacent to i (loops included)
    let mut adj = vec![0u32; k];
    for &(a, b) in &g.edges {
        let (i, j) = (local(a), local(b));
        let (lo, hi) = (i.min(j), i.max(j));
        adj[lo] |= 1 << hi;
    }
    let mut best: Option<(Ratio<u64>, Vec<usize>, usize)> = None;
    for mask in 1u32..(1u32 << k) {
        let mut edges = 0;
        let mut bits = mask;
        while bits != 0 {
            let i = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            edges += (adj[i] & mask).count_ones() as usize;
        }
        let density = Ratio::new(edges as u64, mask.count_ones() as u64);
        let better = match &best {
            None => true,
            Some((bd, bset, _)) => {
                density > *bd || (density == *bd && {
                    let set: Vec<usize> = (0..k).filter(|i| mask >> i & 1 == 1).map(|i| g.nodes[i]).collect();
                    set < *bset
                })
            }
        };
        if better {
            let set = (0..k).filter(|i| mask >> i & 1 == 1).map(|i| g.nodes[i]).collect();
            best = Some((density, set, edges));
        }
    }
    let (_, set, edges) = best.unwrap();
    Ok(g.subgraph(&set, edges))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dist::VertexPair;

    fn undirected(edges: &[(usize, usize)]) -> CenterGraph {
        CenterGraph { center: 0, directed: false, edges: edges.iter().map(|&(a, b)| VertexPair::new(a, b, false)).collect() }
    }

    #[test]
    fn small_cases() {
        let k4 = undirected(&[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]);
        assert_eq!(exact_mds(&k4, 20).unwrap().density, Ratio::new(6, 4));
        let tri = exact_mds(&undirected(&[(0, 1), (1, 2), (0, 2), (2, 3)]), 20).unwrap();
        // triangle and whole graph tie at 1; the triangle's node list is smaller
        assert_eq!(tri.density, Ratio::new(1, 1));
        assert_eq!(tri.sources, vec![0, 1, 2]);
        assert_eq!(exact_mds(&undirected(&[(0, 1)]), 20).unwrap().density, Ratio::new(1, 2));
    }

    #[test]
    fn limit_enforced() {
        let star = undirected(&[(0, 1), (0, 2), (0, 3)]);
        assert_eq!(exact_mds(&star, 3), Err(OracleError::TooLarge { size: 4, limit: 3 }));
    }
}
