//! Exact all-pairs distances and shortest-path membership.

use std::cmp::Reverse;
use std::collections::BinaryHeap;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{Graph, Length, Vertex};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
#[error("no path from {0} to {1}")]
pub struct UnreachablePair(pub Vertex, pub Vertex);

/// An element of the pair universe. Undirected pairs are kept with
/// `first <= second`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct VertexPair {
    pub first: Vertex,
    pub second: Vertex,
}

impl VertexPair {
    pub fn new(first: Vertex, second: Vertex, directed: bool) -> Self {
        if directed || first <= second {
            VertexPair { first, second }
        } else {
            VertexPair { first: second, second: first }
        }
    }
}

/// All-pairs distance table. `None` means unreachable.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistMatrix {
    n: usize,
    directed: bool,
    dist: Vec<Option<Length>>,
    diameter: Length,
}

impl DistMatrix {
    /// One Dijkstra run per source.
    pub fn compute(g: &Graph) -> DistMatrix {
        let n = g.n();
        let adj = g.out_adjacency();
        let mut dist = vec![None; n * n];
        let mut heap = BinaryHeap::new();
        for s in 0..n {
            let row = &mut dist[s * n..(s + 1) * n];
            row[s] = Some(0);
            heap.push(Reverse((0, s)));
            while let Some(Reverse((d, v))) = heap.pop() {
                if row[v].is_some_and(|best| best < d) {
                    continue;
                }
                for &(w, len) in &adj[v] {
                    let nd = d + len;
                    if row[w].is_none_or(|cur| nd < cur) {
                        row[w] = Some(nd);
                        heap.push(Reverse((nd, w)));
                    }
                }
            }
        }
        let diameter = dist.iter().flatten().copied().max().unwrap_or(0);
        DistMatrix { n, directed: g.is_directed(), dist, diameter }
    }

    /// Builds a matrix from a raw table, e.g. an oracle's output.
    pub fn from_table(directed: bool, n: usize, dist: Vec<Option<Length>>) -> DistMatrix {
        assert_eq!(dist.len(), n * n);
        let diameter = dist.iter().flatten().copied().max().unwrap_or(0);
        DistMatrix { n, directed, dist, diameter }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn is_directed(&self) -> bool {
        self.directed
    }

    /// Largest finite distance.
    pub fn diameter(&self) -> Length {
        self.diameter
    }

    #[inline]
    pub fn get(&self, u: Vertex, w: Vertex) -> Option<Length> {
        self.dist[u * self.n + w]
    }

    pub fn reachable(&self, u: Vertex, w: Vertex) -> bool {
        self.get(u, w).is_some()
    }

    /// True iff `v` lies on some shortest `u`-`w` path.
    #[inline]
    pub fn on_shortest_path(&self, u: Vertex, w: Vertex, v: Vertex) -> bool {
        match (self.get(u, v), self.get(v, w), self.get(u, w)) {
            (Some(a), Some(b), Some(c)) => a + b == c,
            _ => false,
        }
    }

    /// The vertex set of all shortest `u`-`w` paths, ascending.
    pub fn shortest_path_vertices(&self, u: Vertex, w: Vertex) -> Result<Vec<Vertex>, UnreachablePair> {
        if !self.reachable(u, w) {
            return Err(UnreachablePair(u, w));
        }
        Ok((0..self.n).filter(|&v| self.on_shortest_path(u, w, v)).collect())
    }

    /// Every pair with a finite distance, in canonical form and ascending
    /// order. Undirected matrices yield each unordered pair once.
    pub fn reachable_pairs(&self) -> impl Iterator<Item = VertexPair> + '_ {
        let n = self.n;
        let directed = self.directed;
        (0..n).flat_map(move |u| {
            let start = if directed { 0 } else { u };
            (start..n).filter(move |&w| self.reachable(u, w)).map(move |w| VertexPair { first: u, second: w })
        })
    }
}

/// `floor(log2(d))` for `d > 0`; `None` stands for the level of zero distance.
#[inline]
pub fn level_of(d: Length) -> Option<u32> {
    if d == 0 {
        None
    } else {
        Some(63 - d.leading_zeros())
    }
}
