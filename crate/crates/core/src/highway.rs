//! Highway-dimension machinery on undirected graphs.
//!
//! A shortest path `P = (v1..vk)` is r-significant when it, or its
//! extension by one vertex at either or both ends, is a shortest path longer
//! than `r`. `S_r(v)` holds the r-significant paths with such a witness
//! within distance `2r` of `v`. Radii are exact rationals.

use std::collections::BTreeMap;

use num_rational::Ratio;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::dist::DistMatrix;
use crate::graph::{Graph, Length, Vertex};
use crate::greedy::{vertex_levels, RunTrace, TraceNotFromDHhl};
use crate::labeling::{verify_cover, Labeling, Order, Side};

pub const DEFAULT_PATH_CAP: usize = 1_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HighwayError {
    #[error("more than {cap} shortest paths")]
    CapExceeded { cap: usize },
    #[error("highway dimension is defined for undirected graphs")]
    DirectedInput,
    #[error("graph is not connected")]
    Disconnected,
    #[error("edge lengths must be at least 1")]
    ShortEdge,
    #[error("radius must be positive")]
    NonPositiveRadius,
    #[error("invalid multiscale SPHS: {0}")]
    InvalidSphs(String),
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct SignificantPath {
    pub vertices: Vec<Vertex>,
    pub length: Length,
}

/// One extension of a path by at most one vertex per end that is itself a
/// shortest path.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    pub before: Option<Vertex>,
    pub after: Option<Vertex>,
    pub length: Length,
}

#[derive(Debug, Clone)]
struct Entry {
    path: SignificantPath,
    witnesses: Vec<Witness>,
}

/// Every shortest path of a graph (each undirected path once, listed from
/// its smaller endpoint) together with its witness extensions.
#[derive(Debug, Clone)]
pub struct PathCatalog<'a> {
    d: &'a DistMatrix,
    entries: Vec<Entry>,
}

fn check_input(g: &Graph) -> Result<(), HighwayError> {
    if g.is_directed() {
        return Err(HighwayError::DirectedInput);
    }
    if !g.is_connected() {
        return Err(HighwayError::Disconnected);
    }
    Ok(())
}

fn positive(r: Ratio<u64>) -> Result<(), HighwayError> {
    if r == Ratio::from_integer(0) {
        Err(HighwayError::NonPositiveRadius)
    } else {
        Ok(())
    }
}

impl<'a> PathCatalog<'a> {
    pub fn build(g: &Graph, d: &'a DistMatrix, cap: usize) -> Result<Self, HighwayError> {
        check_input(g)?;
        let adj = g.out_adjacency();
        let n = g.n();
        let mut paths: Vec<Vec<Vertex>> = Vec::new();
        for s in 0..n {
            paths.push(vec![s]);
            for t in s + 1..n {
                let mut stack = vec![s];
                let mut on_path = vec![false; n];
                on_path[s] = true;
                walk(d, &adj, t, &mut stack, &mut on_path, &mut paths, cap)?;
            }
            if paths.len() > cap {
                return Err(HighwayError::CapExceeded { cap });
            }
        }
        let entries = paths
            .into_iter()
            .map(|vertices| {
                let (first, last) = (vertices[0], *vertices.last().unwrap());
                let length = d.get(first, last).unwrap();
                let mut witnesses = vec![Witness { before: None, after: None, length }];
                let before: Vec<(Vertex, Length)> = adj[first]
                    .iter()
                    .filter(|&&(x, len)| !vertices.contains(&x) && d.get(x, last) == Some(len + length))
                    .copied()
                    .collect();
                let after: Vec<(Vertex, Length)> = adj[last]
                    .iter()
                    .filter(|&&(y, len)| !vertices.contains(&y) && d.get(first, y) == Some(length + len))
                    .copied()
                    .collect();
                witnesses.extend(before.iter().map(|&(x, len)| Witness { before: Some(x), after: None, length: length + len }));
                witnesses.extend(after.iter().map(|&(y, len)| Witness { before: None, after: Some(y), length: length + len }));
                for &(x, lx) in &before {
                    for &(y, ly) in &after {
                        let total = lx + length + ly;
                        if x != y && d.get(x, y) == Some(total) {
                            witnesses.push(Witness { before: Some(x), after: Some(y), length: total });
                        }
                    }
                }
                Entry { path: SignificantPath { vertices, length }, witnesses }
            })
            .collect();
        Ok(PathCatalog { d, entries })
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn paths(&self) -> impl Iterator<Item = &SignificantPath> {
        self.entries.iter().map(|e| &e.path)
    }

    pub fn witnesses(&self, index: usize) -> &[Witness] {
        &self.entries[index].witnesses
    }

    fn witness_distance(&self, v: Vertex, path: &SignificantPath, w: &Witness) -> Length {
        path.vertices
            .iter()
            .chain(w.before.iter())
            .chain(w.after.iter())
            .map(|&x| self.d.get(v, x).unwrap())
            .min()
            .unwrap()
    }

    /// Whether path `index` has an r-witness within `radius` of `v`.
    pub fn is_close(&self, index: usize, r: Ratio<u64>, v: Vertex, radius: Ratio<u64>) -> bool {
        let e = &self.entries[index];
        e.witnesses
            .iter()
            .any(|w| Ratio::from_integer(w.length) > r && Ratio::from_integer(self.witness_distance(v, &e.path, w)) <= radius)
    }

    pub fn is_significant(&self, index: usize, r: Ratio<u64>) -> bool {
        self.entries[index].witnesses.iter().any(|w| Ratio::from_integer(w.length) > r)
    }

    /// Indices of the r-significant paths.
    pub fn significant(&self, r: Ratio<u64>) -> Vec<usize> {
        (0..self.entries.len()).filter(|&i| self.is_significant(i, r)).collect()
    }

    /// Indices of the paths in `S_r(v)`.
    pub fn neighborhood(&self, v: Vertex, r: Ratio<u64>) -> Vec<usize> {
        let radius = r * 2;
        (0..self.entries.len()).filter(|&i| self.is_close(i, r, v, radius)).collect()
    }

    pub fn path(&self, index: usize) -> &SignificantPath {
        &self.entries[index].path
    }

    /// Radii at which some `S_r(v)` can change, plus one below all of them.
    /// Neighborhoods are constant between consecutive values.
    pub fn candidate_radii(&self) -> Vec<Ratio<u64>> {
        let mut out: Vec<Ratio<u64>> = Vec::new();
        let n = self.d.n();
        for u in 0..n {
            for w in 0..n {
                if let Some(x) = self.d.get(u, w).filter(|&x| x > 0) {
                    out.push(Ratio::from_integer(x));
                    out.push(Ratio::new(x, 2));
                }
            }
        }
        out.sort_unstable();
        out.dedup();
        if let Some(&smallest) = out.first() {
            out.insert(0, smallest / 2);
        }
        out
    }
}

fn walk(
    d: &DistMatrix,
    adj: &[Vec<(Vertex, Length)>],
    t: Vertex,
    stack: &mut Vec<Vertex>,
    on_path: &mut [bool],
    out: &mut Vec<Vec<Vertex>>,
    cap: usize,
) -> Result<(), HighwayError> {
    let s = stack[0];
    let cur = *stack.last().unwrap();
    if cur == t {
        out.push(stack.clone());
        return if out.len() > cap { Err(HighwayError::CapExceeded { cap }) } else { Ok(()) };
    }
    let at = d.get(s, cur).unwrap();
    for &(x, len) in &adj[cur] {
        if !on_path[x] && d.get(s, x) == Some(at + len) && d.on_shortest_path(s, t, x) {
            on_path[x] = true;
            stack.push(x);
            walk(d, adj, t, stack, on_path, out, cap)?;
            stack.pop();
            on_path[x] = false;
        }
    }
    Ok(())
}

/// All r-significant shortest paths.
pub fn enumerate_significant_paths(g: &Graph, d: &DistMatrix, r: Ratio<u64>, cap: usize) -> Result<Vec<SignificantPath>, HighwayError> {
    positive(r)?;
    let cat = PathCatalog::build(g, d, cap)?;
    Ok(cat.significant(r).into_iter().map(|i| cat.path(i).clone()).collect())
}

/// `S_r(v)`: r-significant paths with a witness within `2r` of `v`.
pub fn neighborhood_s(g: &Graph, d: &DistMatrix, v: Vertex, r: Ratio<u64>, cap: usize) -> Result<Vec<SignificantPath>, HighwayError> {
    positive(r)?;
    let cat = PathCatalog::build(g, d, cap)?;
    Ok(cat.neighborhood(v, r).into_iter().map(|i| cat.path(i).clone()).collect())
}

/// Vertices within distance `r` of `v`.
pub fn ball(d: &DistMatrix, v: Vertex, r: Ratio<u64>) -> Vec<Vertex> {
    (0..d.n()).filter(|&w| d.get(v, w).is_some_and(|x| Ratio::from_integer(x) <= r)).collect()
}

fn ball_cap(d: &DistMatrix, set: &[Vertex], radius: Ratio<u64>) -> usize {
    (0..d.n()).map(|v| set.iter().filter(|&&c| d.get(v, c).is_some_and(|x| Ratio::from_integer(x) <= radius)).count()).max().unwrap_or(0)
}

/// Whether `c` hits every r-significant path and meets every ball of
/// radius `2r` in at most `h` vertices.
pub fn is_sphs(g: &Graph, d: &DistMatrix, c: &[Vertex], h: usize, r: Ratio<u64>, cap: usize) -> Result<bool, HighwayError> {
    positive(r)?;
    let cat = PathCatalog::build(g, d, cap)?;
    Ok(sphs_holds(&cat, d, c, h, r))
}

fn sphs_holds(cat: &PathCatalog, d: &DistMatrix, c: &[Vertex], h: usize, r: Ratio<u64>) -> bool {
    let hits = |i: usize| cat.path(i).vertices.iter().any(|v| c.contains(v));
    cat.significant(r).into_iter().all(hits) && ball_cap(d, c, r * 2) <= h
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SphsLevel {
    /// The level's radius `2^(i-1)`.
    pub r: Ratio<u64>,
    pub set: Vec<Vertex>,
    /// `max_v |C_i ∩ B_{2r}(v)|`.
    pub cap: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MultiscaleSphs {
    pub n: usize,
    pub levels: Vec<SphsLevel>,
}

impl MultiscaleSphs {
    /// `Q_i`: members of `C_i` absent from every higher level.
    pub fn q(&self, i: usize) -> Vec<Vertex> {
        self.levels[i].set.iter().copied().filter(|v| !self.levels[i + 1..].iter().any(|l| l.set.contains(v))).collect()
    }

    /// Highest level containing `v`.
    pub fn top_level(&self, v: Vertex) -> usize {
        (0..self.levels.len()).rev().find(|&i| self.levels[i].set.contains(&v)).unwrap_or(0)
    }

    pub fn cap_sum(&self) -> usize {
        self.levels.iter().map(|l| l.cap).sum()
    }
}

fn level_radius(i: usize) -> Ratio<u64> {
    if i == 0 {
        Ratio::new(1, 2)
    } else {
        Ratio::from_integer(1 << (i - 1))
    }
}

fn ceil_log2(x: Length) -> usize {
    if x <= 1 {
        0
    } else {
        (64 - (x - 1).leading_zeros()) as usize
    }
}

/// Multiscale SPHS with `C_0 = V` and each higher `C_i` a greedy hitting set
/// for the `2^(i-1)`-significant paths (most paths hit first, lowest id on
/// ties).
pub fn greedy_multiscale_sphs(g: &Graph, d: &DistMatrix, cap: usize) -> Result<MultiscaleSphs, HighwayError> {
    check_input(g)?;
    if g.min_length().is_some_and(|l| l < 1) {
        return Err(HighwayError::ShortEdge);
    }
    let cat = PathCatalog::build(g, d, cap)?;
    let n = g.n();
    let top = ceil_log2(d.diameter());
    let mut levels = Vec::with_capacity(top + 1);
    for i in 0..=top {
        let r = level_radius(i);
        let set: Vec<Vertex> = if i == 0 {
            (0..n).collect()
        } else {
            let mut open: Vec<&[Vertex]> = cat.significant(r).into_iter().map(|p| cat.path(p).vertices.as_slice()).collect();
            let mut chosen = Vec::new();
            while !open.is_empty() {
                let mut hits = vec![0usize; n];
                for p in &open {
                    for &v in p.iter() {
                        hits[v] += 1;
                    }
                }
                let best = (0..n).max_by_key(|&v| (hits[v], std::cmp::Reverse(v))).unwrap();
                chosen.push(best);
                open.retain(|p| !p.contains(&best));
            }
            chosen.sort_unstable();
            chosen
        };
        let cap = ball_cap(d, &set, r * 2);
        levels.push(SphsLevel { r, set, cap });
    }
    Ok(MultiscaleSphs { n, levels })
}

/// Hierarchical labeling from a multiscale SPHS: vertices of higher `Q_i`
/// are more important (ties by id), and `L(v)` holds `v` and every more
/// important `w ∈ C_j` within distance `2^j` of `v`.
pub fn sphs_to_hhl(g: &Graph, d: &DistMatrix, ms: &MultiscaleSphs, cap: usize) -> Result<(Order, Labeling), HighwayError> {
    check_input(g)?;
    let n = g.n();
    if ms.n != n || ms.levels.is_empty() {
        return Err(HighwayError::InvalidSphs("level sets do not match the graph".into()));
    }
    if ms.levels[0].set != (0..n).collect::<Vec<_>>() {
        return Err(HighwayError::InvalidSphs("C_0 must be the whole vertex set".into()));
    }
    let top = ceil_log2(d.diameter());
    if ms.levels.len() != top + 1 {
        return Err(HighwayError::InvalidSphs(format!("expected {} levels, found {}", top + 1, ms.levels.len())));
    }
    let cat = PathCatalog::build(g, d, cap)?;
    for (i, level) in ms.levels.iter().enumerate().skip(1) {
        if !sphs_holds(&cat, d, &level.set, level.cap, level_radius(i)) {
            return Err(HighwayError::InvalidSphs(format!("level {i} misses a significant path or exceeds its cap")));
        }
    }
    let mut sequence: Vec<Vertex> = (0..n).collect();
    sequence.sort_by_key(|&v| (std::cmp::Reverse(ms.top_level(v)), v));
    let order = Order::from_sequence(sequence).expect("sorted vertex ids form a permutation");
    let mut l = Labeling::empty(n, false);
    for v in 0..n {
        l.insert(Side::Forward, v, v, 0);
        for (j, level) in ms.levels.iter().enumerate() {
            let radius = Ratio::from_integer(1u64 << j);
            for &w in &level.set {
                let dist = d.get(v, w).unwrap();
                if order.rank(w) < order.rank(v) && Ratio::from_integer(dist) <= radius {
                    l.insert(Side::Forward, v, w, dist);
                }
            }
        }
    }
    debug_assert!(verify_cover(&l, d).is_valid());
    Ok((order, l))
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct LevelAudit {
    /// Per vertex, hub counts keyed by the level at which each hub was
    /// selected (`None` = distance-0 level).
    pub counts: Vec<BTreeMap<Option<u32>, usize>>,
    pub max_count: usize,
    pub max_at: Option<(Vertex, Option<u32>)>,
    pub label_sizes: Vec<usize>,
    /// `max_count / (h * log2(n + 1))`.
    pub ratio: f64,
}

/// Counts, for each vertex and level, the hubs of the vertex that d-HHL
/// selected at that level.
pub fn audit_dhhl_levels(trace: &RunTrace, labeling: &Labeling, h: usize) -> Result<LevelAudit, TraceNotFromDHhl> {
    let levels = vertex_levels(trace)?;
    let n = labeling.n();
    let mut counts = vec![BTreeMap::new(); n];
    let mut best: (usize, Option<(Vertex, Option<u32>)>) = (0, None);
    for (_, v, hub) in labeling.entries() {
        let level = levels.get(&hub.hub).copied().flatten();
        let c = counts[v].entry(level).or_insert(0);
        *c += 1;
        if *c > best.0 {
            best = (*c, Some((v, level)));
        }
    }
    let label_sizes = (0..n).map(|v| labeling.label_size(v)).collect();
    let denom = h as f64 * ((n + 1) as f64).log2();
    let ratio = if denom > 0.0 { best.0 as f64 / denom } else { f64::INFINITY };
    Ok(LevelAudit { counts, max_count: best.0, max_at: best.1, label_sizes, ratio })
}
