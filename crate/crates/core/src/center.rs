//! Center graphs over the set of still-uncovered vertex pairs.
//!
//! The center graph of `v` has one edge per uncovered pair `[u,w]` such that
//! some shortest `u`-`w` path passes through `v`. Directed center graphs are
//! bipartite (sources on one side, targets on the other); undirected ones may
//! carry a self-loop for `[v,v]`.

use std::cmp::Ordering;

use num_rational::Ratio;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::dist::{level_of, DistMatrix, VertexPair};
use crate::graph::Vertex;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
#[error("center graph has no edges")]
pub struct EmptyCenterGraph;

/// Membership set over vertex pairs with finite distance.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UncoveredSet {
    n: usize,
    directed: bool,
    bits: Vec<bool>,
    count: usize,
}

impl UncoveredSet {
    /// All reachable pairs (ordered when directed, unordered including
    /// `[v,v]` otherwise).
    pub fn initial(d: &DistMatrix) -> Self {
        Self::from_pairs(d, d.reachable_pairs())
    }

    pub fn empty(d: &DistMatrix) -> Self {
        UncoveredSet { n: d.n(), directed: d.is_directed(), bits: vec![false; d.n() * d.n()], count: 0 }
    }

    /// A target set for generalized labelings. Unreachable pairs are dropped.
    pub fn from_pairs(d: &DistMatrix, pairs: impl IntoIterator<Item = VertexPair>) -> Self {
        let mut set = Self::empty(d);
        for p in pairs {
            let p = VertexPair::new(p.first, p.second, set.directed);
            if d.reachable(p.first, p.second) {
                set.insert(p);
            }
        }
        set
    }

    fn index(&self, p: VertexPair) -> usize {
        let p = VertexPair::new(p.first, p.second, self.directed);
        p.first * self.n + p.second
    }

    fn insert(&mut self, p: VertexPair) {
        let i = self.index(p);
        if !self.bits[i] {
            self.bits[i] = true;
            self.count += 1;
        }
    }

    pub fn contains(&self, p: VertexPair) -> bool {
        self.bits[self.index(p)]
    }

    /// Returns true if the pair was present.
    pub fn remove(&mut self, p: VertexPair) -> bool {
        let i = self.index(p);
        let was = std::mem::replace(&mut self.bits[i], false);
        if was {
            self.count -= 1;
        }
        was
    }

    pub fn count(&self) -> usize {
        self.count
    }

    pub fn is_empty(&self) -> bool {
        self.count == 0
    }

    pub fn is_directed(&self) -> bool {
        self.directed
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn iter(&self) -> impl Iterator<Item = VertexPair> + '_ {
        let n = self.n;
        self.bits
            .iter()
            .enumerate()
            .filter(|(_, &b)| b)
            .map(move |(i, _)| VertexPair { first: i / n, second: i % n })
    }
}

/// Number of center-graph edges per pair level. `zero` counts pairs at
/// distance 0, `counts[i]` pairs with `floor(log2 dist) = i`.
#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct LevelProfile {
    pub zero: usize,
    pub counts: Vec<usize>,
}

impl LevelProfile {
    pub fn add(&mut self, level: Option<u32>) {
        match level {
            None => self.zero += 1,
            Some(i) => {
                let i = i as usize;
                if self.counts.len() <= i {
                    self.counts.resize(i + 1, 0);
                }
                self.counts[i] += 1;
            }
        }
    }

    pub fn total(&self) -> usize {
        self.zero + self.counts.iter().sum::<usize>()
    }

    /// Highest level with a nonzero count; `None` if only distance-0 pairs
    /// (or nothing) remain.
    pub fn top_level(&self) -> Option<u32> {
        self.counts.iter().rposition(|&c| c > 0).map(|i| i as u32)
    }

    pub fn count(&self, level: Option<u32>) -> usize {
        match level {
            None => self.zero,
            Some(i) => self.counts.get(i as usize).copied().unwrap_or(0),
        }
    }

    /// Compares the pair weights `sum n^(2*level)` without materializing
    /// them. Distance-0 pairs weigh nothing. A single pair at level `i+1`
    /// outweighs every pair at levels `<= i` because a center graph holds
    /// fewer than `n^2` pairs per level, so the comparison is lexicographic
    /// from the top level down.
    pub fn cmp_weight(&self, other: &LevelProfile) -> Ordering {
        let top = self.counts.len().max(other.counts.len());
        for i in (0..top).rev() {
            let a = self.counts.get(i).copied().unwrap_or(0);
            let b = other.counts.get(i).copied().unwrap_or(0);
            match a.cmp(&b) {
                Ordering::Equal => continue,
                o => return o,
            }
        }
        Ordering::Equal
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CenterGraph {
    pub center: Vertex,
    pub directed: bool,
    /// Sorted, one per uncovered pair through `center`.
    pub edges: Vec<VertexPair>,
}

impl CenterGraph {
    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Vertices of each side with at least one incident edge. Undirected
    /// graphs report the single vertex set twice.
    pub fn nonisolated_sides(&self) -> (Vec<Vertex>, Vec<Vertex>) {
        let mut x: Vec<Vertex> = self.edges.iter().map(|p| p.first).collect();
        let mut y: Vec<Vertex> = self.edges.iter().map(|p| p.second).collect();
        if !self.directed {
            x.append(&mut y);
            x.sort_unstable();
            x.dedup();
            return (x.clone(), x);
        }
        x.sort_unstable();
        x.dedup();
        y.sort_unstable();
        y.dedup();
        (x, y)
    }

    /// Directed graphs count a vertex once per side it appears on.
    pub fn nonisolated_count(&self) -> usize {
        let (x, y) = self.nonisolated_sides();
        if self.directed {
            x.len() + y.len()
        } else {
            x.len()
        }
    }

    pub fn density(&self) -> Result<Ratio<u64>, EmptyCenterGraph> {
        if self.edges.is_empty() {
            return Err(EmptyCenterGraph);
        }
        Ok(Ratio::new(self.edge_count() as u64, self.nonisolated_count() as u64))
    }

    pub fn level_profile(&self, d: &DistMatrix) -> LevelProfile {
        let mut p = LevelProfile::default();
        for e in &self.edges {
            p.add(level_of(d.get(e.first, e.second).expect("uncovered pairs are reachable")));
        }
        p
    }
}

/// Builds `G_v` from scratch.
pub fn build_center_graph(d: &DistMatrix, uncovered: &UncoveredSet, v: Vertex) -> CenterGraph {
    let edges = uncovered.iter().filter(|p| d.on_shortest_path(p.first, p.second, v)).collect();
    CenterGraph { center: v, directed: d.is_directed(), edges }
}

/// Edge counts, level profiles and non-isolated vertex counts of every
/// center graph, kept in sync with an [`UncoveredSet`] as pairs get covered.
#[derive(Debug, Clone)]
pub struct CenterGraphSet<'a> {
    d: &'a DistMatrix,
    uncovered: UncoveredSet,
    levels: usize,
    edge_count: Vec<usize>,
    // per center, [zero, level 0, level 1, ...]
    level_counts: Vec<usize>,
    // per center and vertex: incident edges on the source / target side
    x_deg: Vec<u32>,
    y_deg: Vec<u32>,
    x_nonisolated: Vec<usize>,
    y_nonisolated: Vec<usize>,
    // uncovered pairs per level, same layout as one row of level_counts
    global_levels: Vec<usize>,
}

impl<'a> CenterGraphSet<'a> {
    pub fn new(d: &'a DistMatrix, uncovered: UncoveredSet) -> Self {
        let n = d.n();
        let levels = level_of(d.diameter()).map_or(0, |l| l as usize + 1) + 1;
        let mut set = CenterGraphSet {
            d,
            levels,
            edge_count: vec![0; n],
            level_counts: vec![0; n * levels],
            x_deg: vec![0; n * n],
            y_deg: if d.is_directed() { vec![0; n * n] } else { Vec::new() },
            x_nonisolated: vec![0; n],
            y_nonisolated: vec![0; n],
            global_levels: vec![0; levels],
            uncovered: UncoveredSet::empty(d),
        };
        for p in uncovered.iter() {
            let slot = set.level_slot(p);
            set.global_levels[slot] += 1;
            for v in 0..n {
                if d.on_shortest_path(p.first, p.second, v) {
                    set.apply(v, p, true);
                }
            }
        }
        set.uncovered = uncovered;
        set
    }

    fn level_slot(&self, p: VertexPair) -> usize {
        level_of(self.d.get(p.first, p.second).unwrap()).map_or(0, |l| l as usize + 1)
    }

    fn apply(&mut self, v: Vertex, p: VertexPair, add: bool) {
        let n = self.d.n();
        let slot = self.level_slot(p);
        let bump = |x: &mut usize| if add { *x += 1 } else { *x -= 1 };
        bump(&mut self.edge_count[v]);
        bump(&mut self.level_counts[v * self.levels + slot]);
        let touch = |deg: &mut Vec<u32>, nonisolated: &mut Vec<usize>, u: Vertex| {
            let cell = &mut deg[v * n + u];
            if add {
                *cell += 1;
                if *cell == 1 {
                    nonisolated[v] += 1;
                }
            } else {
                *cell -= 1;
                if *cell == 0 {
                    nonisolated[v] -= 1;
                }
            }
        };
        if self.d.is_directed() {
            touch(&mut self.x_deg, &mut self.x_nonisolated, p.first);
            touch(&mut self.y_deg, &mut self.y_nonisolated, p.second);
        } else {
            touch(&mut self.x_deg, &mut self.x_nonisolated, p.first);
            if p.second != p.first {
                touch(&mut self.x_deg, &mut self.x_nonisolated, p.second);
            }
        }
    }

    pub fn dist(&self) -> &'a DistMatrix {
        self.d
    }

    pub fn uncovered(&self) -> &UncoveredSet {
        &self.uncovered
    }

    /// Removes `p` from the uncovered set and from every center graph it
    /// belongs to. Returns false if `p` was already covered.
    pub fn cover_pair(&mut self, p: VertexPair) -> bool {
        if !self.uncovered.remove(p) {
            return false;
        }
        let p = VertexPair::new(p.first, p.second, self.d.is_directed());
        let slot = self.level_slot(p);
        self.global_levels[slot] -= 1;
        for v in 0..self.d.n() {
            if self.d.on_shortest_path(p.first, p.second, v) {
                self.apply(v, p, false);
            }
        }
        true
    }

    /// The uncovered pairs through `v`, i.e. the edges of `G_v`.
    pub fn pairs_through(&self, v: Vertex) -> Vec<VertexPair> {
        self.uncovered.iter().filter(|p| self.d.on_shortest_path(p.first, p.second, v)).collect()
    }

    pub fn center_graph(&self, v: Vertex) -> CenterGraph {
        CenterGraph { center: v, directed: self.d.is_directed(), edges: self.pairs_through(v) }
    }

    pub fn edge_count(&self, v: Vertex) -> usize {
        self.edge_count[v]
    }

    pub fn nonisolated_count(&self, v: Vertex) -> usize {
        if self.d.is_directed() {
            self.x_nonisolated[v] + self.y_nonisolated[v]
        } else {
            self.x_nonisolated[v]
        }
    }

    pub fn density(&self, v: Vertex) -> Result<Ratio<u64>, EmptyCenterGraph> {
        if self.edge_count[v] == 0 {
            return Err(EmptyCenterGraph);
        }
        Ok(Ratio::new(self.edge_count[v] as u64, self.nonisolated_count(v) as u64))
    }

    fn profile_from(row: &[usize]) -> LevelProfile {
        let mut counts = row[1..].to_vec();
        while counts.last() == Some(&0) {
            counts.pop();
        }
        LevelProfile { zero: row[0], counts }
    }

    pub fn level_profile(&self, v: Vertex) -> LevelProfile {
        Self::profile_from(&self.level_counts[v * self.levels..(v + 1) * self.levels])
    }

    /// Profile of the whole uncovered set.
    pub fn uncovered_profile(&self) -> LevelProfile {
        Self::profile_from(&self.global_levels)
    }

    /// Highest level of an uncovered pair; `None` when only distance-0
    /// pairs remain.
    pub fn max_uncovered_level(&self) -> Option<u32> {
        self.uncovered_profile().top_level()
    }
}
