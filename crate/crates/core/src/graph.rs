//! Weighted graphs with integer lengths and the line-based graph file format.
//!
//! ```text
//! # comment
//! p undirected 3 2
//! a 0 1 4
//! a 1 2 1
//! ```

use std::collections::BTreeMap;
use std::fmt::Write as _;

use thiserror::Error;

pub type Vertex = usize;
pub type Length = u64;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Arc {
    pub tail: Vertex,
    pub head: Vertex,
    pub len: Length,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GraphErrorKind {
    MissingHeader,
    Malformed(String),
    NegativeLength,
    SelfLoop,
    VertexOutOfRange(Vertex),
    ArcCountMismatch { declared: usize, found: usize },
    ZeroLengthCycle,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}: {kind:?}")]
pub struct GraphError {
    /// 1-based line number, 0 when the error is not tied to a line.
    pub line: usize,
    pub kind: GraphErrorKind,
}

impl GraphError {
    fn at(line: usize, kind: GraphErrorKind) -> Self {
        GraphError { line, kind }
    }
}

/// A directed or undirected graph on vertices `0..n`.
///
/// Undirected edges are stored once with `tail < head`. Parallel arcs are
/// collapsed to their minimum length, and arcs are kept sorted.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    directed: bool,
    n: usize,
    arcs: Vec<Arc>,
}

impl Graph {
    /// Builds and validates a graph. Errors carry line 0.
    pub fn new(directed: bool, n: usize, arcs: impl IntoIterator<Item = (Vertex, Vertex, Length)>) -> Result<Self, GraphError> {
        let mut best: BTreeMap<(Vertex, Vertex), Length> = BTreeMap::new();
        for (tail, head, len) in arcs {
            Self::insert_arc(&mut best, directed, n, tail, head, len).map_err(|k| GraphError::at(0, k))?;
        }
        let g = Self::from_map(directed, n, best);
        g.check_zero_cycles().map_err(|k| GraphError::at(0, k))?;
        Ok(g)
    }

    fn insert_arc(
        best: &mut BTreeMap<(Vertex, Vertex), Length>,
        directed: bool,
        n: usize,
        tail: Vertex,
        head: Vertex,
        len: Length,
    ) -> Result<(), GraphErrorKind> {
        for v in [tail, head] {
            if v >= n {
                return Err(GraphErrorKind::VertexOutOfRange(v));
            }
        }
        if tail == head {
            return Err(GraphErrorKind::SelfLoop);
        }
        let key = if directed { (tail, head) } else { (tail.min(head), tail.max(head)) };
        best.entry(key).and_modify(|l| *l = (*l).min(len)).or_insert(len);
        Ok(())
    }

    fn from_map(directed: bool, n: usize, best: BTreeMap<(Vertex, Vertex), Length>) -> Self {
        let arcs = best.into_iter().map(|((tail, head), len)| Arc { tail, head, len }).collect();
        Graph { directed, n, arcs }
    }

    fn check_zero_cycles(&self) -> Result<(), GraphErrorKind> {
        let zero: Vec<&Arc> = self.arcs.iter().filter(|a| a.len == 0).collect();
        if zero.is_empty() {
            return Ok(());
        }
        if self.directed {
            let mut out = vec![Vec::new(); self.n];
            for a in &zero {
                out[a.tail].push(a.head);
            }
            // 0 = unvisited, 1 = on stack, 2 = done
            let mut state = vec![0u8; self.n];
            for root in 0..self.n {
                if state[root] != 0 {
                    continue;
                }
                let mut stack = vec![(root, 0usize)];
                state[root] = 1;
                while let Some(&mut (v, ref mut i)) = stack.last_mut() {
                    if *i < out[v].len() {
                        let w = out[v][*i];
                        *i += 1;
                        match state[w] {
                            0 => {
                                state[w] = 1;
                                stack.push((w, 0));
                            }
                            1 => return Err(GraphErrorKind::ZeroLengthCycle),
                            _ => {}
                        }
                    } else {
                        state[v] = 2;
                        stack.pop();
                    }
                }
            }
        } else {
            let mut parent: Vec<usize> = (0..self.n).collect();
            fn find(p: &mut [usize], mut x: usize) -> usize {
                while p[x] != x {
                    p[x] = p[p[x]];
                    x = p[x];
                }
                x
            }
            for a in &zero {
                let (x, y) = (find(&mut parent, a.tail), find(&mut parent, a.head));
                if x == y {
                    return Err(GraphErrorKind::ZeroLengthCycle);
                }
                parent[x] = y;
            }
        }
        Ok(())
    }

    pub fn is_directed(&self) -> bool {
        self.directed
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of stored arcs (undirected edges count once).
    pub fn m(&self) -> usize {
        self.arcs.len()
    }

    pub fn arcs(&self) -> &[Arc] {
        &self.arcs
    }

    /// Outgoing adjacency. Undirected edges appear in both directions.
    pub fn out_adjacency(&self) -> Vec<Vec<(Vertex, Length)>> {
        let mut adj = vec![Vec::new(); self.n];
        for a in &self.arcs {
            adj[a.tail].push((a.head, a.len));
            if !self.directed {
                adj[a.head].push((a.tail, a.len));
            }
        }
        adj
    }

    /// Incoming adjacency. Equal to [`Graph::out_adjacency`] for undirected graphs.
    pub fn in_adjacency(&self) -> Vec<Vec<(Vertex, Length)>> {
        if !self.directed {
            return self.out_adjacency();
        }
        let mut adj = vec![Vec::new(); self.n];
        for a in &self.arcs {
            adj[a.head].push((a.tail, a.len));
        }
        adj
    }

    /// Length of the arc `tail -> head` (either orientation when undirected).
    pub fn arc_len(&self, tail: Vertex, head: Vertex) -> Option<Length> {
        let key = if self.directed { (tail, head) } else { (tail.min(head), tail.max(head)) };
        self.arcs
            .binary_search_by(|a| (a.tail, a.head).cmp(&key))
            .ok()
            .map(|i| self.arcs[i].len)
    }

    /// Forgets arc orientation; antiparallel arcs merge into one edge.
    pub fn to_undirected(&self) -> Graph {
        let mut best = BTreeMap::new();
        for a in &self.arcs {
            Self::insert_arc(&mut best, false, self.n, a.tail, a.head, a.len).expect("arcs already validated");
        }
        Self::from_map(false, self.n, best)
    }

    /// Replaces every undirected edge by two opposite arcs.
    pub fn to_symmetric_directed(&self) -> Graph {
        if self.directed {
            return self.clone();
        }
        let mut best = BTreeMap::new();
        for a in &self.arcs {
            best.insert((a.tail, a.head), a.len);
            best.insert((a.head, a.tail), a.len);
        }
        Self::from_map(true, self.n, best)
    }

    pub fn is_connected(&self) -> bool {
        if self.n == 0 {
            return true;
        }
        let adj = self.to_undirected().out_adjacency();
        let mut seen = vec![false; self.n];
        let mut stack = vec![0];
        seen[0] = true;
        while let Some(v) = stack.pop() {
            for &(w, _) in &adj[v] {
                if !seen[w] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
        seen.into_iter().all(|s| s)
    }

    pub fn min_length(&self) -> Option<Length> {
        self.arcs.iter().map(|a| a.len).min()
    }

    /// Parses the graph file format. `#` lines and blank lines are skipped.
    pub fn parse(text: &str) -> Result<Graph, GraphError> {
        let mut header: Option<(bool, usize, usize, usize)> = None;
        let mut best = BTreeMap::new();
        let mut found = 0usize;
        let mut last_line = 0;
        for (idx, raw) in text.lines().enumerate() {
            let line_no = idx + 1;
            last_line = line_no;
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let toks: Vec<&str> = line.split_whitespace().collect();
            let malformed = || GraphError::at(line_no, GraphErrorKind::Malformed(line.to_string()));
            match (toks[0], &header) {
                ("p", None) => {
                    if toks.len() != 4 {
                        return Err(malformed());
                    }
                    let directed = match toks[1] {
                        "directed" => true,
                        "undirected" => false,
                        _ => return Err(malformed()),
                    };
                    let n = toks[2].parse().map_err(|_| malformed())?;
                    let m = toks[3].parse().map_err(|_| malformed())?;
                    header = Some((directed, n, m, line_no));
                }
                ("a", Some((directed, n, _, _))) => {
                    if toks.len() != 4 {
                        return Err(malformed());
                    }
                    let tail: Vertex = toks[1].parse().map_err(|_| malformed())?;
                    let head: Vertex = toks[2].parse().map_err(|_| malformed())?;
                    if toks[3].starts_with('-') && toks[3][1..].parse::<u64>().is_ok() {
                        return Err(GraphError::at(line_no, GraphErrorKind::NegativeLength));
                    }
                    let len: Length = toks[3].parse().map_err(|_| malformed())?;
                    Self::insert_arc(&mut best, *directed, *n, tail, head, len).map_err(|k| GraphError::at(line_no, k))?;
                    found += 1;
                }
                ("a", None) => return Err(GraphError::at(line_no, GraphErrorKind::MissingHeader)),
                _ => return Err(malformed()),
            }
        }
        let (directed, n, m, _) = header.ok_or(GraphError::at(last_line, GraphErrorKind::MissingHeader))?;
        if found != m {
            return Err(GraphError::at(last_line, GraphErrorKind::ArcCountMismatch { declared: m, found }));
        }
        let g = Self::from_map(directed, n, best);
        g.check_zero_cycles().map_err(|k| GraphError::at(0, k))?;
        Ok(g)
    }

    pub fn to_text(&self) -> String {
        let mut s = String::new();
        let kind = if self.directed { "directed" } else { "undirected" };
        writeln!(s, "p {} {} {}", kind, self.n, self.arcs.len()).unwrap();
        for a in &self.arcs {
            writeln!(s, "a {} {} {}", a.tail, a.head, a.len).unwrap();
        }
        s
    }
}
