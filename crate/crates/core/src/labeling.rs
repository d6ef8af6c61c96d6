//! Hub labelings, orders, queries and cover verification.

use std::cmp::Ordering;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::dist::{DistMatrix, VertexPair};
use crate::graph::{Length, Vertex};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Hub {
    pub hub: Vertex,
    pub dist: Length,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Side {
    Forward,
    Backward,
}

/// Per-vertex hub lists sorted by hub id.
///
/// Undirected labelings keep a single list per vertex which serves as both
/// the forward and the backward label.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Labeling {
    directed: bool,
    forward: Vec<Vec<Hub>>,
    backward: Vec<Vec<Hub>>,
}

impl Labeling {
    pub fn empty(n: usize, directed: bool) -> Self {
        Labeling {
            directed,
            forward: vec![Vec::new(); n],
            backward: if directed { vec![Vec::new(); n] } else { Vec::new() },
        }
    }

    pub fn n(&self) -> usize {
        self.forward.len()
    }

    pub fn is_directed(&self) -> bool {
        self.directed
    }

    pub fn forward(&self, v: Vertex) -> &[Hub] {
        &self.forward[v]
    }

    pub fn backward(&self, v: Vertex) -> &[Hub] {
        if self.directed {
            &self.backward[v]
        } else {
            &self.forward[v]
        }
    }

    pub fn label(&self, side: Side, v: Vertex) -> &[Hub] {
        match side {
            Side::Forward => self.forward(v),
            Side::Backward => self.backward(v),
        }
    }

    fn list_mut(&mut self, side: Side, v: Vertex) -> &mut Vec<Hub> {
        match side {
            Side::Backward if self.directed => &mut self.backward[v],
            _ => &mut self.forward[v],
        }
    }

    /// Inserts `hub` into a label; returns false if it was already there.
    /// The side is ignored for undirected labelings.
    pub fn insert(&mut self, side: Side, v: Vertex, hub: Vertex, dist: Length) -> bool {
        let list = self.list_mut(side, v);
        match list.binary_search_by(|h| h.hub.cmp(&hub)) {
            Ok(_) => false,
            Err(pos) => {
                list.insert(pos, Hub { hub, dist });
                true
            }
        }
    }

    pub fn remove(&mut self, side: Side, v: Vertex, hub: Vertex) -> bool {
        let list = self.list_mut(side, v);
        match list.binary_search_by(|h| h.hub.cmp(&hub)) {
            Ok(pos) => {
                list.remove(pos);
                true
            }
            Err(_) => false,
        }
    }

    pub fn contains(&self, side: Side, v: Vertex, hub: Vertex) -> bool {
        self.label(side, v).binary_search_by(|h| h.hub.cmp(&hub)).is_ok()
    }

    /// Sides that carry independent lists.
    pub fn sides(&self) -> &'static [Side] {
        if self.directed {
            &[Side::Forward, Side::Backward]
        } else {
            &[Side::Forward]
        }
    }

    /// Every stored entry as `(side, vertex, hub)`.
    pub fn entries(&self) -> impl Iterator<Item = (Side, Vertex, Hub)> + '_ {
        self.sides()
            .iter()
            .flat_map(move |&side| (0..self.n()).flat_map(move |v| self.label(side, v).iter().map(move |&h| (side, v, h))))
    }

    /// Total number of hub entries. Undirected hubs count once.
    pub fn size(&self) -> usize {
        self.forward.iter().chain(self.backward.iter()).map(Vec::len).sum()
    }

    /// `|L(v)|`: forward plus backward for directed labelings.
    pub fn label_size(&self, v: Vertex) -> usize {
        if self.directed {
            self.forward[v].len() + self.backward[v].len()
        } else {
            self.forward[v].len()
        }
    }

    pub fn max_label_size(&self) -> usize {
        (0..self.n()).map(|v| self.label_size(v)).max().unwrap_or(0)
    }

    /// Distance certificate from the labels alone; `None` if `s` and `t`
    /// share no hub.
    pub fn query(&self, s: Vertex, t: Vertex) -> Option<Length> {
        best_common_hub(self.forward(s), self.backward(t)).map(|(_, d)| d)
    }

    pub fn to_text(&self) -> String {
        let mut s = String::new();
        for &side in self.sides() {
            let tag = match (self.directed, side) {
                (false, _) => 'l',
                (true, Side::Forward) => 'f',
                (true, Side::Backward) => 'b',
            };
            for v in 0..self.n() {
                write!(s, "{} {}", tag, v).unwrap();
                for h in self.label(side, v) {
                    write!(s, " {}:{}", h.hub, h.dist).unwrap();
                }
                s.push('\n');
            }
        }
        s
    }

    /// Parses the label file format. Every vertex `0..n` must have one line
    /// per side; `#` lines are comments.
    pub fn parse(text: &str) -> Result<Labeling, LabelFileError> {
        let mut rows: Vec<(usize, char, Vertex, Vec<Hub>)> = Vec::new();
        for (idx, raw) in text.lines().enumerate() {
            let line_no = idx + 1;
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let bad = |msg: &str| LabelFileError { line: line_no, message: msg.to_string() };
            let mut toks = line.split_whitespace();
            let tag = match toks.next() {
                Some("l") => 'l',
                Some("f") => 'f',
                Some("b") => 'b',
                _ => return Err(bad("expected l, f or b")),
            };
            let v: Vertex = toks.next().and_then(|t| t.parse().ok()).ok_or_else(|| bad("bad vertex id"))?;
            let mut hubs = Vec::new();
            for tok in toks {
                let (h, d) = tok.split_once(':').ok_or_else(|| bad("expected hub:dist"))?;
                let hub = h.parse().map_err(|_| bad("bad hub id"))?;
                let dist = d.parse().map_err(|_| bad("bad distance"))?;
                hubs.push(Hub { hub, dist });
            }
            rows.push((line_no, tag, v, hubs));
        }
        let directed = rows.iter().any(|r| r.1 != 'l');
        if directed && rows.iter().any(|r| r.1 == 'l') {
            return Err(LabelFileError { line: rows.iter().find(|r| r.1 == 'l').unwrap().0, message: "mixed l and f/b lines".into() });
        }
        let n = rows.iter().map(|r| r.2 + 1).max().unwrap_or(0);
        let mut labeling = Labeling::empty(n, directed);
        let mut seen = vec![[false; 2]; n];
        for (line, tag, v, hubs) in rows {
            let (side, slot) = if tag == 'b' { (Side::Backward, 1) } else { (Side::Forward, 0) };
            if std::mem::replace(&mut seen[v][slot], true) {
                return Err(LabelFileError { line, message: format!("duplicate label for vertex {}", v) });
            }
            for h in hubs {
                if h.hub >= n {
                    return Err(LabelFileError { line, message: format!("hub {} out of range", h.hub) });
                }
                if !labeling.insert(side, v, h.hub, h.dist) {
                    return Err(LabelFileError { line, message: format!("duplicate hub {}", h.hub) });
                }
            }
        }
        let slots = if directed { 2 } else { 1 };
        if let Some(v) = (0..n).find(|&v| seen[v][..slots].iter().any(|s| !s)) {
            return Err(LabelFileError { line: 0, message: format!("missing label line for vertex {}", v) });
        }
        Ok(labeling)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("label file line {line}: {message}")]
pub struct LabelFileError {
    pub line: usize,
    pub message: String,
}

/// Linear merge over two hub lists sorted by id.
fn best_common_hub(a: &[Hub], b: &[Hub]) -> Option<(Vertex, Length)> {
    let (mut i, mut j) = (0, 0);
    let mut best: Option<(Vertex, Length)> = None;
    while i < a.len() && j < b.len() {
        match a[i].hub.cmp(&b[j].hub) {
            Ordering::Less => i += 1,
            Ordering::Greater => j += 1,
            Ordering::Equal => {
                let d = a[i].dist + b[j].dist;
                if best.is_none_or(|(_, bd)| d < bd) {
                    best = Some((a[i].hub, d));
                }
                i += 1;
                j += 1;
            }
        }
    }
    best
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OrderError {
    #[error("order is not a permutation of 0..{0}")]
    NotAPermutation(usize),
}

/// A total importance order. Position 0 is the most important vertex.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Order {
    sequence: Vec<Vertex>,
    rank: Vec<usize>,
}

impl Order {
    pub fn from_sequence(sequence: Vec<Vertex>) -> Result<Order, OrderError> {
        let n = sequence.len();
        let mut rank = vec![usize::MAX; n];
        for (pos, &v) in sequence.iter().enumerate() {
            if v >= n || rank[v] != usize::MAX {
                return Err(OrderError::NotAPermutation(n));
            }
            rank[v] = pos;
        }
        Ok(Order { sequence, rank })
    }

    pub fn identity(n: usize) -> Order {
        Order::from_sequence((0..n).collect()).unwrap()
    }

    pub fn sequence(&self) -> &[Vertex] {
        &self.sequence
    }

    /// Zero-based position; smaller is more important.
    pub fn rank(&self, v: Vertex) -> usize {
        self.rank[v]
    }

    pub fn len(&self) -> usize {
        self.sequence.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sequence.is_empty()
    }

    /// Order file: one vertex id per line, most important first.
    pub fn parse(text: &str) -> Result<Order, LabelFileError> {
        let mut seq = Vec::new();
        for (idx, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            seq.push(line.parse().map_err(|_| LabelFileError { line: idx + 1, message: "bad vertex id".into() })?);
        }
        Order::from_sequence(seq).map_err(|e| LabelFileError { line: 0, message: e.to_string() })
    }

    pub fn to_text(&self) -> String {
        self.sequence.iter().map(|v| format!("{}\n", v)).collect()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum Violation {
    /// A reachable pair without a common hub on one of its shortest paths.
    Uncovered(VertexPair),
    /// A stored hub distance that disagrees with the distance table.
    WrongDistance { side: Side, vertex: Vertex, hub: Vertex, stored: Length, actual: Option<Length> },
}

#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct CoverReport {
    pub violations: Vec<Violation>,
}

impl CoverReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn uncovered(&self) -> impl Iterator<Item = VertexPair> + '_ {
        self.violations.iter().filter_map(|v| match v {
            Violation::Uncovered(p) => Some(*p),
            _ => None,
        })
    }
}

fn check_distances(l: &Labeling, d: &DistMatrix, report: &mut CoverReport) {
    for (side, v, h) in l.entries() {
        let actual = match side {
            Side::Forward => d.get(v, h.hub),
            Side::Backward => d.get(h.hub, v),
        };
        if actual != Some(h.dist) {
            report.violations.push(Violation::WrongDistance { side, vertex: v, hub: h.hub, stored: h.dist, actual });
        }
    }
}

fn pair_covered(l: &Labeling, d: &DistMatrix, p: VertexPair) -> bool {
    match d.get(p.first, p.second) {
        None => true,
        Some(dist) => best_common_hub(l.forward(p.first), l.backward(p.second)).is_some_and(|(_, q)| q == dist),
    }
}

/// Checks the cover property on every reachable pair and every stored
/// distance.
///
/// # Panics
/// If the labeling and the matrix disagree on vertex count or direction.
pub fn verify_cover(l: &Labeling, d: &DistMatrix) -> CoverReport {
    verify_cover_pairs(l, d, d.reachable_pairs())
}

/// Like [`verify_cover`], but only the given pairs must be covered.
pub fn verify_cover_pairs(l: &Labeling, d: &DistMatrix, pairs: impl IntoIterator<Item = VertexPair>) -> CoverReport {
    assert_eq!(l.n(), d.n(), "labeling and distance table sizes differ");
    assert_eq!(l.is_directed(), d.is_directed(), "labeling and distance table direction differ");
    let mut report = CoverReport::default();
    check_distances(l, d, &mut report);
    // With correct stored distances a common hub summing to dist(s,t) lies on
    // a shortest path; with wrong ones the pair may be reported twice.
    for p in pairs {
        if !pair_covered(l, d, p) {
            report.violations.push(Violation::Uncovered(p));
        }
    }
    report
}

/// The minimum hierarchical labeling respecting `order`: `u` is a forward
/// hub of `v` iff `u` is the most important vertex on the shortest `v`-`u`
/// paths, and symmetrically for backward hubs.
pub fn canonical_hhl(d: &DistMatrix, order: &Order) -> Labeling {
    let n = d.n();
    assert_eq!(order.len(), n);
    let most_important = |x: Vertex, y: Vertex, cand: Vertex| {
        let r = order.rank(cand);
        (0..n).all(|z| order.rank(z) >= r || !d.on_shortest_path(x, y, z))
    };
    let mut l = Labeling::empty(n, d.is_directed());
    for v in 0..n {
        for u in 0..n {
            if let Some(dist) = d.get(v, u) {
                if most_important(v, u, u) {
                    l.forward[v].push(Hub { hub: u, dist });
                }
            }
            if d.is_directed() {
                if let Some(dist) = d.get(u, v) {
                    if most_important(u, v, u) {
                        l.backward[v].push(Hub { hub: u, dist });
                    }
                }
            }
        }
    }
    l
}

/// True iff every hub of every vertex is at least as important as the vertex.
pub fn respects_order(l: &Labeling, order: &Order) -> bool {
    l.entries().all(|(_, v, h)| order.rank(h.hub) <= order.rank(v))
}

/// True iff every entry of `a` appears in `b` on the same side.
pub fn is_sublabeling(a: &Labeling, b: &Labeling) -> bool {
    a.n() == b.n() && a.is_directed() == b.is_directed() && a.entries().all(|(side, v, h)| b.label(side, v).binary_search(&h).is_ok())
}
