//! Greedy hierarchical hub labeling: g-HHL, w-HHL and d-HHL.
//!
//! Each iteration picks one unchosen center, adds it to the forward label of
//! every source and the backward label of every target of its center graph,
//! and marks all pairs through it covered. The three variants differ only in
//! how they score center graphs: edge count, density, or the distance-level
//! weight sum. Ties go to the lowest vertex id.

use std::cmp::Ordering;
use std::collections::BTreeMap;

use num_rational::Ratio;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::center::{CenterGraphSet, LevelProfile, UncoveredSet};
use crate::dist::DistMatrix;
use crate::graph::Vertex;
use crate::labeling::{Labeling, Order, Side};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Algorithm {
    GHhl,
    WHhl,
    DHhl,
    Cohen,
}

impl Algorithm {
    pub fn name(self) -> &'static str {
        match self {
            Algorithm::GHhl => "g-hhl",
            Algorithm::WHhl => "w-hhl",
            Algorithm::DHhl => "d-hhl",
            Algorithm::Cohen => "cohen",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Score {
    Edges(usize),
    Density(Ratio<u64>),
    Levels(LevelProfile),
}

impl Score {
    fn better_than(&self, other: &Score) -> bool {
        match (self, other) {
            (Score::Edges(a), Score::Edges(b)) => a > b,
            (Score::Density(a), Score::Density(b)) => a > b,
            (Score::Levels(a), Score::Levels(b)) => a.cmp_weight(b) == Ordering::Greater,
            _ => panic!("mixed score kinds"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Iteration {
    pub vertex: Vertex,
    pub score: Score,
    /// Highest level among uncovered pairs when the vertex was chosen;
    /// `None` stands for the distance-0 level.
    pub level: Option<u32>,
    pub labels_added: usize,
    pub uncovered_before: usize,
    pub uncovered_after: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RunTrace {
    pub algorithm: Algorithm,
    pub iterations: Vec<Iteration>,
    /// Final importance order (greedy runs only; empty for Cohen).
    pub order: Vec<Vertex>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
#[error("trace was produced by {0:?}, not d-HHL")]
pub struct TraceNotFromDHhl(pub Algorithm);

/// An in-progress greedy run.
pub struct GreedyRun<'a> {
    algorithm: Algorithm,
    centers: CenterGraphSet<'a>,
    labeling: Labeling,
    chosen: Vec<bool>,
    order: Vec<Vertex>,
    iterations: Vec<Iteration>,
}

impl<'a> GreedyRun<'a> {
    pub fn new(d: &'a DistMatrix, algorithm: Algorithm) -> Self {
        assert!(algorithm != Algorithm::Cohen, "Cohen's algorithm is not a greedy HHL");
        GreedyRun {
            algorithm,
            centers: CenterGraphSet::new(d, UncoveredSet::initial(d)),
            labeling: Labeling::empty(d.n(), d.is_directed()),
            chosen: vec![false; d.n()],
            order: Vec::with_capacity(d.n()),
            iterations: Vec::new(),
        }
    }

    pub fn centers(&self) -> &CenterGraphSet<'a> {
        &self.centers
    }

    pub fn labeling(&self) -> &Labeling {
        &self.labeling
    }

    pub fn is_chosen(&self, v: Vertex) -> bool {
        self.chosen[v]
    }

    pub fn score(&self, v: Vertex) -> Score {
        match self.algorithm {
            Algorithm::GHhl => Score::Edges(self.centers.edge_count(v)),
            Algorithm::WHhl => Score::Density(self.centers.density(v).unwrap_or_default()),
            Algorithm::DHhl => Score::Levels(self.centers.level_profile(v)),
            Algorithm::Cohen => unreachable!(),
        }
    }

    /// The vertex the next step would choose.
    pub fn select(&self) -> Option<(Vertex, Score)> {
        let mut best: Option<(Vertex, Score)> = None;
        for v in 0..self.chosen.len() {
            if self.chosen[v] || self.centers.edge_count(v) == 0 {
                continue;
            }
            let s = self.score(v);
            if best.as_ref().is_none_or(|(_, b)| s.better_than(b)) {
                best = Some((v, s));
            }
        }
        best
    }

    /// Runs one iteration; `None` once every pair is covered.
    pub fn step(&mut self) -> Option<&Iteration> {
        let (v, score) = self.select()?;
        let d = self.centers.dist();
        let level = self.centers.max_uncovered_level();
        let before = self.centers.uncovered().count();
        let mut added = 0;
        for p in self.centers.pairs_through(v) {
            added += self.labeling.insert(Side::Forward, p.first, v, d.get(p.first, v).unwrap()) as usize;
            added += self.labeling.insert(Side::Backward, p.second, v, d.get(v, p.second).unwrap()) as usize;
            self.centers.cover_pair(p);
        }
        self.chosen[v] = true;
        self.order.push(v);
        let after = self.centers.uncovered().count();
        debug_assert!(after < before);
        self.iterations.push(Iteration { vertex: v, score, level, labels_added: added, uncovered_before: before, uncovered_after: after });
        self.iterations.last()
    }

    pub fn finish(mut self) -> (Order, Labeling, RunTrace) {
        while self.step().is_some() {}
        // Every unchosen vertex still has [v,v] uncovered, so this only
        // matters for degenerate inputs.
        for v in 0..self.chosen.len() {
            if !self.chosen[v] {
                self.order.push(v);
            }
        }
        let order = Order::from_sequence(self.order.clone()).expect("each vertex chosen once");
        let trace = RunTrace { algorithm: self.algorithm, iterations: self.iterations, order: self.order };
        (order, self.labeling, trace)
    }
}

pub fn run_greedy(d: &DistMatrix, algorithm: Algorithm) -> (Order, Labeling, RunTrace) {
    GreedyRun::new(d, algorithm).finish()
}

/// Picks the center graph with the most edges.
pub fn run_g_hhl(d: &DistMatrix) -> (Order, Labeling, RunTrace) {
    run_greedy(d, Algorithm::GHhl)
}

/// Picks the center graph with the highest density.
pub fn run_w_hhl(d: &DistMatrix) -> (Order, Labeling, RunTrace) {
    run_greedy(d, Algorithm::WHhl)
}

/// Picks the center graph with the largest sum of `n^(2*level)` pair weights.
pub fn run_d_hhl(d: &DistMatrix) -> (Order, Labeling, RunTrace) {
    run_greedy(d, Algorithm::DHhl)
}

/// Level of each chosen vertex in a d-HHL run (`None` = distance-0 level).
pub fn vertex_levels(trace: &RunTrace) -> Result<BTreeMap<Vertex, Option<u32>>, TraceNotFromDHhl> {
    if trace.algorithm != Algorithm::DHhl {
        return Err(TraceNotFromDHhl(trace.algorithm));
    }
    Ok(trace.iterations.iter().map(|it| (it.vertex, it.level)).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Graph;
    use crate::labeling::{canonical_hhl, verify_cover};

    #[test]
    fn single_vertex() {
        let d = DistMatrix::compute(&Graph::new(false, 1, []).unwrap());
        for algo in [Algorithm::GHhl, Algorithm::WHhl, Algorithm::DHhl] {
            let (order, l, trace) = run_greedy(&d, algo);
            assert_eq!(order.sequence(), &[0]);
            assert_eq!(l.size(), 1);
            assert_eq!(trace.iterations.len(), 1);
        }
        let (_, _, trace) = run_d_hhl(&d);
        assert_eq!(vertex_levels(&trace).unwrap()[&0], None);
    }

    #[test]
    fn edge_first_pick_covers_three_pairs() {
        let d = DistMatrix::compute(&Graph::new(false, 2, [(0, 1, 1)]).unwrap());
        let (order, l, trace) = run_g_hhl(&d);
        assert_eq!(trace.iterations[0].uncovered_before - trace.iterations[0].uncovered_after, 2);
        // [0,0] and [0,1] go first, then [1,1]
        assert_eq!(trace.iterations[0].uncovered_before, 3);
        assert_eq!(l.size(), 3);
        assert_eq!(l, canonical_hhl(&d, &order));
        assert!(verify_cover(&l, &d).is_valid());
    }

    #[test]
    fn unit_graph_d_equals_g() {
        let g = Graph::new(false, 4, [(0, 1, 1), (1, 2, 1), (0, 2, 1), (2, 3, 1)]).unwrap();
        let d = DistMatrix::compute(&g);
        // all distances <= 2 here; restrict to a clique so every pair has level 0
        let k4 = Graph::new(false, 4, [(0, 1, 1), (0, 2, 1), (0, 3, 1), (1, 2, 1), (1, 3, 1), (2, 3, 1)]).unwrap();
        let dk = DistMatrix::compute(&k4);
        assert_eq!(run_g_hhl(&dk).0, run_d_hhl(&dk).0);
        assert!(verify_cover(&run_d_hhl(&d).1, &d).is_valid());
    }

    #[test]
    fn levels_need_d_hhl_trace() {
        let d = DistMatrix::compute(&Graph::new(false, 1, []).unwrap());
        let (_, _, trace) = run_g_hhl(&d);
        assert_eq!(vertex_levels(&trace), Err(TraceNotFromDHhl(Algorithm::GHhl)));
    }
}
