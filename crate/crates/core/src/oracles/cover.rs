use super::OracleError;
use crate::graph::{Graph, Vertex};

/// Minimum vertex cover of an undirected graph, by branching on the two
/// endpoints of an uncovered edge.
pub fn min_vertex_cover(g: &Graph) -> Result<Vec<Vertex>, OracleError> {
    if g.is_directed() {
        return Err(OracleError::DirectedInput);
    }
    let edges: Vec<(Vertex, Vertex)> = g.arcs().iter().map(|a| (a.tail, a.head)).collect();
    let mut best: Vec<Vertex> = (0..g.n()).filter(|&v| edges.iter().any(|&(a, b)| a == v || b == v)).collect();
    let mut chosen = vec![false; g.n()];
    let mut current = Vec::new();
    vc_branch(&edges, &mut chosen, &mut current, &mut best);
    best.sort_unstable();
    Ok(best)
}

fn vc_branch(edges: &[(Vertex, Vertex)], chosen: &mut [bool], current: &mut Vec<Vertex>, best: &mut Vec<Vertex>) {
    if current.len() >= best.len() {
        return;
    }
    let Some(&(a, b)) = edges.iter().find(|&&(a, b)| !chosen[a] && !chosen[b]) else {
        *best = current.clone();
        return;
    };
    for v in [a, b] {
        chosen[v] = true;
        current.push(v);
        vc_branch(edges, chosen, current, best);
        current.pop();
        chosen[v] = false;
    }
}

/// Minimum set of elements meeting every set in `sets`. Every set must be
/// non-empty. Fails when there are more than `limit` sets or more than 64
/// distinct elements.
pub fn min_hitting_set(sets: &[Vec<Vertex>], limit: usize) -> Result<Vec<Vertex>, OracleError> {
    if sets.len() > limit {
        return Err(OracleError::TooLarge { size: sets.len(), limit });
    }
    let mut universe: Vec<Vertex> = sets.iter().flatten().copied().collect();
    universe.sort_unstable();
    universe.dedup();
    if universe.len() > 64 {
        return Err(OracleError::TooLarge { size: universe.len(), limit: 64 });
    }
    let index = |v: Vertex| universe.binary_search(&v).unwrap();
    let mut masks: Vec<u64> = sets
        .iter()
        .map(|s| {
            assert!(!s.is_empty(), "empty set cannot be hit");
            s.iter().fold(0u64, |m, &v| m | 1 << index(v))
        })
        .collect();
    masks.sort_unstable_by_key(|m| (m.count_ones(), *m));
    masks.dedup();
    // a set containing another set is hit whenever the smaller one is
    let minimal: Vec<u64> = masks
        .iter()
        .enumerate()
        .filter(|&(i, &m)| !masks[..i].iter().any(|&s| s & !m == 0))
        .map(|(_, &m)| m)
        .collect();
    let mut best = minimal.iter().fold(0u64, |acc, &m| acc | (1 << m.trailing_zeros()));
    hs_branch(&minimal, 0, &mut best);
    Ok((0..universe.len()).filter(|i| best >> i & 1 == 1).map(|i| universe[i]).collect())
}

fn hs_branch(sets: &[u64], chosen: u64, best: &mut u64) {
    let size = chosen.count_ones();
    if size >= best.count_ones() {
        return;
    }
    // pairwise disjoint unhit sets each need their own element
    let mut used = 0u64;
    let mut bound = 0;
    let mut pick: Option<u64> = None;
    for &s in sets {
        if s & chosen != 0 {
            continue;
        }
        if pick.is_none_or(|p| s.count_ones() < p.count_ones()) {
            pick = Some(s);
        }
        if s & used == 0 {
            used |= s;
            bound += 1;
        }
    }
    let Some(pick) = pick else {
        *best = chosen;
        return;
    };
    if size + bound >= best.count_ones() {
        return;
    }
    let mut rest = pick;
    while rest != 0 {
        let bit = rest & rest.wrapping_neg();
        rest &= rest - 1;
        hs_branch(sets, chosen | bit, best);
    }
}
