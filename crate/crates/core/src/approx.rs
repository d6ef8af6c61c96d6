//! Set-cover approximation for general hub labeling.
//!
//! Each iteration takes, for every vertex `v`, a dense subgraph of its center
//! graph restricted to the target pairs still uncovered, keeps the densest
//! one, and adds `v` to the forward labels of its sources and the backward
//! labels of its targets.

use std::cmp::Reverse;
use std::collections::BinaryHeap;

use num_rational::Ratio;
use serde::{Deserialize, Serialize};

use crate::center::{build_center_graph, CenterGraph, EmptyCenterGraph, UncoveredSet};
use crate::dist::{DistMatrix, VertexPair};
use crate::graph::Vertex;
use crate::greedy::{Algorithm, Iteration, RunTrace, Score};
use crate::labeling::{Labeling, Side};
use crate::oracles::exact_mds;

/// A subgraph of a center graph given by its vertex sides. For undirected
/// graphs `sources == targets`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DenseSubgraph {
    pub sources: Vec<Vertex>,
    pub targets: Vec<Vertex>,
    pub edges: usize,
    pub density: Ratio<u64>,
}

/// A center graph flattened to plain nodes. Directed graphs get node `u` for
/// source `u` and node `n + w` for target `w`; undirected graphs use vertex
/// ids directly and may contain loops.
#[derive(Debug, Clone)]
pub(crate) struct NodeGraph {
    pub n: usize,
    pub directed: bool,
    /// Ascending node ids with at least one incident edge.
    pub nodes: Vec<usize>,
    pub edges: Vec<(usize, usize)>,
}

impl NodeGraph {
    pub fn from_center(cg: &CenterGraph, n: usize) -> Self {
        let edges: Vec<(usize, usize)> = cg
            .edges
            .iter()
            .map(|p| if cg.directed { (p.first, n + p.second) } else { (p.first, p.second) })
            .collect();
        let mut nodes: Vec<usize> = edges.iter().flat_map(|&(a, b)| [a, b]).collect();
        nodes.sort_unstable();
        nodes.dedup();
        NodeGraph { n, directed: cg.directed, nodes, edges }
    }

    pub fn subgraph(&self, keep: &[usize], edges: usize) -> DenseSubgraph {
        let mut sources = Vec::new();
        let mut targets = Vec::new();
        for &x in keep {
            if self.directed && x >= self.n {
                targets.push(x - self.n);
            } else {
                sources.push(x);
            }
        }
        if !self.directed {
            targets = sources.clone();
        }
        DenseSubgraph { sources, targets, edges, density: Ratio::new(edges as u64, keep.len() as u64) }
    }
}

/// Greedy peeling: repeatedly drop a minimum-degree node (lowest id on ties)
/// and keep the densest prefix seen, preferring the larger one on equal
/// density. The result is at least half the maximum density.
pub fn mds_peel(cg: &CenterGraph) -> Result<DenseSubgraph, EmptyCenterGraph> {
    if cg.edges.is_empty() {
        return Err(EmptyCenterGraph);
    }
    let n = cg.edges.iter().map(|p| p.first.max(p.second) + 1).max().unwrap();
    let g = NodeGraph::from_center(cg, n);
    let slots = if g.directed { 2 * n } else { n };
    let mut incident: Vec<Vec<usize>> = vec![Vec::new(); slots];
    let mut degree = vec![0usize; slots];
    for (i, &(a, b)) in g.edges.iter().enumerate() {
        incident[a].push(i);
        degree[a] += 1;
        if b != a {
            incident[b].push(i);
            degree[b] += 1;
        }
    }
    let mut alive_edge = vec![true; g.edges.len()];
    let mut alive = vec![false; slots];
    let mut heap = BinaryHeap::new();
    for &x in &g.nodes {
        alive[x] = true;
        heap.push(Reverse((degree[x], x)));
    }
    let (mut edges, mut nodes) = (g.edges.len(), g.nodes.len());
    let mut best = (Ratio::new(edges as u64, nodes as u64), 0usize);
    let mut removed = Vec::with_capacity(nodes);
    while nodes > 1 {
        let Reverse((deg, x)) = heap.pop().unwrap();
        if !alive[x] || deg != degree[x] {
            continue;
        }
        alive[x] = false;
        removed.push(x);
        nodes -= 1;
        for &e in &incident[x] {
            if alive_edge[e] {
                alive_edge[e] = false;
                edges -= 1;
                let (a, b) = g.edges[e];
                let other = if a == x { b } else { a };
                if other != x {
                    degree[other] -= 1;
                    heap.push(Reverse((degree[other], other)));
                }
            }
        }
        let density = Ratio::new(edges as u64, nodes as u64);
        if density > best.0 {
            best = (density, removed.len());
        }
    }
    let dropped = &removed[..best.1];
    let keep: Vec<usize> = g.nodes.iter().copied().filter(|x| !dropped.contains(x)).collect();
    let kept_edges = g.edges.iter().filter(|(a, b)| keep.binary_search(a).is_ok() && keep.binary_search(b).is_ok()).count();
    Ok(g.subgraph(&keep, kept_edges))
}

/// Which densest-subgraph routine drives the selection.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MdsMode {
    Peel,
    /// Subset enumeration; only for center graphs with at most this many
    /// non-isolated nodes.
    Exact { limit: usize },
}

/// Greedy set-cover labeling of the target pairs in `targets`.
///
/// The result covers exactly the target pairs (it is generally not
/// hierarchical).
pub fn run_cohen_hl(d: &DistMatrix, targets: UncoveredSet, mode: MdsMode) -> (Labeling, RunTrace) {
    let mut uncovered = targets;
    let mut labeling = Labeling::empty(d.n(), d.is_directed());
    let mut iterations = Vec::new();
    while !uncovered.is_empty() {
        let mut best: Option<(Vertex, DenseSubgraph)> = None;
        for v in 0..d.n() {
            let cg = build_center_graph(d, &uncovered, v);
            if cg.edges.is_empty() {
                continue;
            }
            let sub = match mode {
                MdsMode::Peel => mds_peel(&cg).unwrap(),
                MdsMode::Exact { limit } => exact_mds(&cg, limit).expect("center graph within exact MDS limit"),
            };
            if best.as_ref().is_none_or(|(_, b)| sub.density > b.density) {
                best = Some((v, sub));
            }
        }
        let (v, sub) = best.expect("uncovered pairs always lie in their endpoints' center graphs");
        let before = uncovered.count();
        let mut added = 0;
        for &u in &sub.sources {
            added += labeling.insert(Side::Forward, u, v, d.get(u, v).unwrap()) as usize;
        }
        if d.is_directed() {
            for &w in &sub.targets {
                added += labeling.insert(Side::Backward, w, v, d.get(v, w).unwrap()) as usize;
            }
        }
        let newly: Vec<VertexPair> = uncovered
            .iter()
            .filter(|p| {
                d.on_shortest_path(p.first, p.second, v)
                    && labeling.contains(Side::Forward, p.first, v)
                    && labeling.contains(Side::Backward, p.second, v)
            })
            .collect();
        assert!(!newly.is_empty(), "selected subgraph covers no pair");
        for p in newly {
            uncovered.remove(p);
        }
        iterations.push(Iteration {
            vertex: v,
            score: Score::Density(sub.density),
            level: None,
            labels_added: added,
            uncovered_before: before,
            uncovered_after: uncovered.count(),
        });
    }
    (labeling, RunTrace { algorithm: Algorithm::Cohen, iterations, order: Vec::new() })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn undirected(edges: &[(usize, usize)]) -> CenterGraph {
        CenterGraph {
            center: 0,
            directed: false,
            edges: edges.iter().map(|&(a, b)| VertexPair::new(a, b, false)).collect(),
        }
    }

    #[test]
    fn clique_is_kept_whole() {
        let cg = undirected(&[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]);
        let s = mds_peel(&cg).unwrap();
        assert_eq!(s.density, Ratio::new(6, 4));
        assert_eq!(s.sources, vec![0, 1, 2, 3]);
    }

    #[test]
    fn star_is_kept_whole() {
        let s = mds_peel(&undirected(&[(0, 1), (0, 2), (0, 3)])).unwrap();
        assert_eq!(s.density, Ratio::new(3, 4));
        assert_eq!(s.sources.len(), 4);
    }

    #[test]
    fn single_edge_and_empty() {
        assert_eq!(mds_peel(&undirected(&[(2, 5)])).unwrap().density, Ratio::new(1, 2));
        assert_eq!(mds_peel(&undirected(&[])), Err(EmptyCenterGraph));
    }

    #[test]
    fn pendant_is_peeled() {
        let s = mds_peel(&undirected(&[(0, 1), (1, 2), (0, 2), (2, 3)])).unwrap();
        assert_eq!(s.density, Ratio::new(1, 1));
        // equal density 1 for the whole graph and the triangle; the larger wins
        assert_eq!(s.sources, vec![0, 1, 2, 3]);
    }

    #[test]
    fn directed_sides_split() {
        let cg = CenterGraph {
            center: 0,
            directed: true,
            edges: vec![VertexPair { first: 0, second: 1 }, VertexPair { first: 0, second: 2 }],
        };
        let s = mds_peel(&cg).unwrap();
        assert_eq!(s.sources, vec![0]);
        assert_eq!(s.targets, vec![1, 2]);
        assert_eq!(s.density, Ratio::new(2, 3));
    }
}
