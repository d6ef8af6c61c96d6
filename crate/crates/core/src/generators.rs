//! Instance families and explicit labelings.
//!
//! Vertex numbering is fixed per family so that lowest-id tie-breaking in the
//! greedy algorithms follows the intended orders:
//!
//! * bad-g: `a_0..a_{k-1}`, then `b_0..b_k`, then `c_{i,j}` row-major.
//! * bad-w: `a`, `b`, `c_0..c_{k-1}`, then `d_{i,j}` row-major.
//! * separator: star centers, then each star's leaves, then `s`.
//! * undirected VC reduction: `v_1, v_2, v_3` for each base vertex, then
//!   `s`, then the leaves of the star.
//! * directed VC reduction: `w`, then `v_1, v_2` per base vertex, then one
//!   vertex per base edge.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::dist::DistMatrix;
use crate::graph::{Graph, Length, Vertex};
use crate::labeling::{Labeling, Order, Side};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GeneratorError {
    #[error("k must be at least 2, got {0}")]
    KTooSmall(usize),
    #[error("base graph must be undirected")]
    DirectedBase,
    #[error("{0:?} is not a vertex cover: edge {1}-{2} is uncovered")]
    NotAVertexCover(Vec<Vertex>, Vertex, Vertex),
    #[error("distance table does not belong to the reduction of this base graph")]
    WrongInstance,
    #[error("infeasible parameters: {0}")]
    InfeasibleParams(String),
}

fn check_k(k: usize) -> Result<(), GeneratorError> {
    if k < 2 {
        Err(GeneratorError::KTooSmall(k))
    } else {
        Ok(())
    }
}

fn build(directed: bool, n: usize, arcs: Vec<(Vertex, Vertex, Length)>) -> Graph {
    Graph::new(directed, n, arcs).expect("generated graphs are well formed")
}

/// Vertex ids of the bad-g family.
#[derive(Debug, Clone, Copy)]
pub struct BadG {
    pub k: usize,
}

impl BadG {
    pub fn a(&self, i: usize) -> Vertex {
        i
    }
    pub fn b(&self, i: usize) -> Vertex {
        self.k + i
    }
    pub fn c(&self, i: usize, j: usize) -> Vertex {
        2 * self.k + 1 + i * self.k + j
    }
    pub fn n(&self) -> usize {
        self.k + (self.k + 1) + self.k * (self.k + 1)
    }
    /// Every `b`, then every `a`, then every `c`.
    pub fn b_first_order(&self) -> Order {
        let k = self.k;
        let seq = (0..=k).map(|i| self.b(i)).chain((0..k).map(|i| self.a(i))).chain(2 * k + 1..self.n()).collect();
        Order::from_sequence(seq).unwrap()
    }
}

/// Directed graph with arcs `a_i -> b_j` for all `i, j` and `b_i -> c_{i,j}`,
/// all of length 1.
pub fn gen_bad_g(k: usize) -> Result<Graph, GeneratorError> {
    check_k(k)?;
    let f = BadG { k };
    let mut arcs = Vec::new();
    for i in 0..k {
        for j in 0..=k {
            arcs.push((f.a(i), f.b(j), 1));
        }
    }
    for i in 0..=k {
        for j in 0..k {
            arcs.push((f.b(i), f.c(i, j), 1));
        }
    }
    Ok(build(true, f.n(), arcs))
}

/// Vertex ids of the bad-w family, with `l = 2k^2`.
#[derive(Debug, Clone, Copy)]
pub struct BadW {
    pub k: usize,
}

impl BadW {
    pub fn l(&self) -> usize {
        2 * self.k * self.k
    }
    pub fn a(&self) -> Vertex {
        0
    }
    pub fn b(&self) -> Vertex {
        1
    }
    pub fn c(&self, i: usize) -> Vertex {
        2 + i
    }
    pub fn d(&self, i: usize, j: usize) -> Vertex {
        2 + self.k + i * self.l() + j
    }
    pub fn n(&self) -> usize {
        2 + self.k + self.k * self.l()
    }
    /// `a`, `b`, every `c`, every `d`.
    pub fn abcd_order(&self) -> Order {
        Order::identity(self.n())
    }
}

/// Undirected graph with edges `a-d_{i,j}` (length 3), `b-c_i` and
/// `c_i-d_{i,j}` (length 2).
pub fn gen_bad_w(k: usize) -> Result<Graph, GeneratorError> {
    check_k(k)?;
    let f = BadW { k };
    let mut arcs = Vec::new();
    for i in 0..k {
        arcs.push((f.b(), f.c(i), 2));
        for j in 0..f.l() {
            arcs.push((f.a(), f.d(i, j), 3));
            arcs.push((f.c(i), f.d(i, j), 2));
        }
    }
    Ok(build(false, f.n(), arcs))
}

/// Vertex ids of the separator family: `k` stars with `k - 1` leaves each.
#[derive(Debug, Clone, Copy)]
pub struct Separator {
    pub k: usize,
}

impl Separator {
    pub fn center(&self, i: usize) -> Vertex {
        i
    }
    pub fn leaf(&self, i: usize, j: usize) -> Vertex {
        self.k + i * (self.k - 1) + j
    }
    pub fn s(&self) -> Vertex {
        self.k * self.k
    }
    pub fn n(&self) -> usize {
        self.k * self.k + 1
    }
    /// Star index of a center or leaf; `None` for `s`.
    pub fn star_of(&self, v: Vertex) -> Option<usize> {
        if v < self.k {
            Some(v)
        } else if v < self.s() {
            Some((v - self.k) / (self.k - 1))
        } else {
            None
        }
    }
    pub fn is_center(&self, v: Vertex) -> bool {
        v < self.k
    }
    pub fn is_leaf(&self, v: Vertex) -> bool {
        v >= self.k && v < self.s()
    }
    /// Centers in the given order, then `s`, then the leaves by id.
    pub fn center_order(&self, centers: &[usize]) -> Order {
        let seq = centers.iter().map(|&i| self.center(i)).chain([self.s()]).chain(self.k..self.s()).collect();
        Order::from_sequence(seq).expect("centers must be a permutation of 0..k")
    }
    /// Entries linking a leaf with the center of another star.
    pub fn crossings(&self, l: &Labeling) -> usize {
        l.entries()
            .filter(|&(_, v, h)| {
                let (x, y) = (v, h.hub);
                (self.is_leaf(x) && self.is_center(y) || self.is_center(x) && self.is_leaf(y)) && self.star_of(x) != self.star_of(y)
            })
            .count()
    }
}

/// Stars whose centers form a clique, plus `s` adjacent to every leaf; unit
/// lengths.
pub fn gen_separator(k: usize) -> Result<Graph, GeneratorError> {
    check_k(k)?;
    let f = Separator { k };
    let mut arcs = Vec::new();
    for i in 0..k {
        for j in i + 1..k {
            arcs.push((f.center(i), f.center(j), 1));
        }
        for j in 0..k - 1 {
            arcs.push((f.center(i), f.leaf(i, j), 1));
            arcs.push((f.s(), f.leaf(i, j), 1));
        }
    }
    Ok(build(false, f.n(), arcs))
}

/// Labeling of size `3k(k-1) + k(k+1) + 1`: `s` everywhere, each center in
/// its own star, and every center in every other center's label.
pub fn construct_separator_hl(k: usize) -> Result<Labeling, GeneratorError> {
    let g = gen_separator(k)?;
    let d = DistMatrix::compute(&g);
    let f = Separator { k };
    let mut l = Labeling::empty(f.n(), false);
    let mut add = |v: Vertex, h: Vertex| {
        l.insert(Side::Forward, v, h, d.get(v, h).unwrap());
    };
    add(f.s(), f.s());
    for i in 0..k {
        let c = f.center(i);
        add(c, c);
        add(c, f.s());
        for other in (0..k).filter(|&o| o != i) {
            add(c, f.center(other));
        }
        for j in 0..k - 1 {
            let leaf = f.leaf(i, j);
            add(leaf, leaf);
            add(leaf, f.s());
            add(leaf, c);
        }
    }
    Ok(l)
}

/// The 4-cycle with unit lengths; the directed version has both arcs of
/// every edge.
pub fn gen_cycle4(directed: bool) -> Graph {
    let edges = (0..4).map(|i| (i, (i + 1) % 4, 1));
    let g = build(false, 4, edges.collect());
    if directed {
        g.to_symmetric_directed()
    } else {
        g
    }
}

/// An asymmetric labeling of the directed 4-cycle of size 16: `v_{i+1}`
/// joins the backward label of `v_i` on even `i` and the forward label on
/// odd `i`, and the pattern repeats under a half turn.
pub fn construct_c4prime_hl() -> Labeling {
    let d = DistMatrix::compute(&gen_cycle4(true));
    let forward: [[Vertex; 2]; 4] = [[0, 3], [1, 2], [2, 1], [3, 0]];
    let backward: [[Vertex; 2]; 4] = [[0, 1], [1, 0], [2, 3], [3, 2]];
    let mut l = Labeling::empty(4, true);
    for v in 0..4 {
        for h in forward[v] {
            l.insert(Side::Forward, v, h, d.get(v, h).unwrap());
        }
        for h in backward[v] {
            l.insert(Side::Backward, v, h, d.get(h, v).unwrap());
        }
    }
    l
}

fn base_edges(g: &Graph) -> Result<Vec<(Vertex, Vertex)>, GeneratorError> {
    if g.is_directed() {
        return Err(GeneratorError::DirectedBase);
    }
    Ok(g.arcs().iter().map(|a| (a.tail, a.head)).collect())
}

fn check_cover(g: &Graph, vc: &[Vertex]) -> Result<(), GeneratorError> {
    for (u, v) in base_edges(g)? {
        if !vc.contains(&u) && !vc.contains(&v) {
            let mut sorted = vc.to_vec();
            sorted.sort_unstable();
            return Err(GeneratorError::NotAVertexCover(sorted, u, v));
        }
    }
    Ok(())
}

/// Vertex ids of the undirected VC reduction of a base graph with `base_n`
/// vertices.
#[derive(Debug, Clone, Copy)]
pub struct VcUndirected {
    pub base_n: usize,
}

impl VcUndirected {
    /// `v_i` for `i` in `1..=3`.
    pub fn v(&self, x: Vertex, i: usize) -> Vertex {
        3 * x + i - 1
    }
    pub fn s(&self) -> Vertex {
        3 * self.base_n
    }
    pub fn leaf(&self, j: usize) -> Vertex {
        3 * self.base_n + 1 + j
    }
    pub fn n(&self) -> usize {
        6 * self.base_n + 1
    }
    /// Hub entries linking the gadgets of `u` and `v`.
    pub fn crossings(&self, l: &Labeling, u: Vertex, v: Vertex) -> usize {
        let gadget = |x: Vertex| (1..=3).map(move |i| self.v(x, i));
        let mut count = 0;
        for (a, b) in [(u, v), (v, u)] {
            for x in gadget(a) {
                count += l.forward(x).iter().filter(|h| gadget(b).any(|y| y == h.hub)).count();
            }
        }
        count
    }
}

/// Gadget path `v_1 v_2 v_3` per base vertex, `u_1 v_1` per base edge, and
/// a star with `3|V|` leaves whose root `s` is adjacent to every `v_1`.
/// Unit lengths; `scaled` multiplies them by 10 and makes `s-v_1` length 9
/// so that shortest paths are unique.
pub fn reduce_vc_undirected(g: &Graph, scaled: bool) -> Result<Graph, GeneratorError> {
    let edges = base_edges(g)?;
    let f = VcUndirected { base_n: g.n() };
    let (unit, short) = if scaled { (10, 9) } else { (1, 1) };
    let mut arcs = Vec::new();
    for x in 0..g.n() {
        arcs.push((f.v(x, 1), f.v(x, 2), unit));
        arcs.push((f.v(x, 2), f.v(x, 3), unit));
        arcs.push((f.s(), f.v(x, 1), short));
    }
    for (u, v) in edges {
        arcs.push((f.v(u, 1), f.v(v, 1), unit));
    }
    for j in 0..3 * g.n() {
        arcs.push((f.s(), f.leaf(j), unit));
    }
    Ok(build(false, f.n(), arcs))
}

/// Labeling of the undirected reduction from a vertex cover: `s` and the
/// vertex itself in every label, cover vertices as type 2 gadgets
/// (`v_1` in `L(v_2)`, `L(v_3)` and `v_2` in `L(v_3)`), the rest as type 1
/// (`v_2` in `L(v_1)`, `L(v_3)`), and for each edge the cover endpoint's
/// `v_1` in all three labels of the other endpoint's gadget.
pub fn construct_reduction_labeling_undirected(base: &Graph, d: &DistMatrix, vc: &[Vertex]) -> Result<Labeling, GeneratorError> {
    check_cover(base, vc)?;
    let f = VcUndirected { base_n: base.n() };
    if d.n() != f.n() || d.is_directed() {
        return Err(GeneratorError::WrongInstance);
    }
    let mut l = Labeling::empty(f.n(), false);
    let mut add = |v: Vertex, h: Vertex| {
        l.insert(Side::Forward, v, h, d.get(v, h).unwrap());
    };
    for v in 0..f.n() {
        add(v, v);
        add(v, f.s());
    }
    for x in 0..base.n() {
        let [x1, x2, x3] = [1, 2, 3].map(|i| f.v(x, i));
        if vc.contains(&x) {
            add(x2, x1);
            add(x3, x1);
            add(x3, x2);
        } else {
            add(x1, x2);
            add(x3, x2);
        }
    }
    for (u, v) in base_edges(base)? {
        let (hub, other) = if vc.contains(&u) { (u, v) } else { (v, u) };
        for i in 1..=3 {
            add(f.v(other, i), f.v(hub, 1));
        }
    }
    Ok(l)
}

/// Vertex ids of the directed VC reduction.
#[derive(Debug, Clone, Copy)]
pub struct VcDirected {
    pub base_n: usize,
    pub base_m: usize,
}

impl VcDirected {
    pub fn w(&self) -> Vertex {
        0
    }
    pub fn v1(&self, x: Vertex) -> Vertex {
        1 + 2 * x
    }
    pub fn v2(&self, x: Vertex) -> Vertex {
        2 + 2 * x
    }
    /// Vertex of the base edge with index `idx` in the base graph's arc list.
    pub fn e(&self, idx: usize) -> Vertex {
        1 + 2 * self.base_n + idx
    }
    pub fn n(&self) -> usize {
        1 + 2 * self.base_n + self.base_m
    }
}

fn directed_arcs(g: &Graph) -> Result<(VcDirected, Vec<(Vertex, Vertex)>), GeneratorError> {
    let edges = base_edges(g)?;
    let f = VcDirected { base_n: g.n(), base_m: edges.len() };
    let mut arcs = Vec::new();
    for x in 0..g.n() {
        arcs.push((f.w(), f.v1(x)));
        arcs.push((f.v1(x), f.v2(x)));
    }
    for (idx, &(u, v)) in edges.iter().enumerate() {
        arcs.push((f.v1(u), f.v2(v)));
        arcs.push((f.v1(v), f.v2(u)));
        arcs.push((f.v2(u), f.e(idx)));
        arcs.push((f.v2(v), f.e(idx)));
    }
    Ok((f, arcs))
}

/// Arcs `w -> v_1 -> v_2` per base vertex and, per base edge `e = {u, v}`,
/// `u_1 -> v_2`, `v_1 -> u_2`, `u_2 -> e`, `v_2 -> e`; unit lengths.
pub fn reduce_vc_directed(g: &Graph) -> Result<Graph, GeneratorError> {
    let (f, arcs) = directed_arcs(g)?;
    Ok(build(true, f.n(), arcs.into_iter().map(|(a, b)| (a, b, 1)).collect()))
}

/// Number of hubs every labeling of the directed reduction must contain:
/// two self entries per vertex and one entry per arc.
pub fn mandatory_hubs(reduced: &Graph) -> usize {
    2 * reduced.n() + reduced.m()
}

/// Labeling of the directed reduction of size `M + |vc|`: every vertex in its
/// own labels, one entry per arc (`v_1` in `L_f(w)`, `v_1` in `L_b(v_2)`, the
/// cross arc's head in the tail's forward label, and `x_2` in `L_b(e)`), plus
/// `v_2` in `L_f(w)` for each cover vertex.
pub fn construct_reduction_labeling_directed(base: &Graph, d: &DistMatrix, vc: &[Vertex]) -> Result<Labeling, GeneratorError> {
    check_cover(base, vc)?;
    let (f, arcs) = directed_arcs(base)?;
    if d.n() != f.n() || !d.is_directed() {
        return Err(GeneratorError::WrongInstance);
    }
    let mut l = Labeling::empty(f.n(), true);
    let fwd = |v: Vertex, h: Vertex, l: &mut Labeling| {
        l.insert(Side::Forward, v, h, d.get(v, h).unwrap());
    };
    let bwd = |v: Vertex, h: Vertex, l: &mut Labeling| {
        l.insert(Side::Backward, v, h, d.get(h, v).unwrap());
    };
    for v in 0..f.n() {
        fwd(v, v, &mut l);
        bwd(v, v, &mut l);
    }
    let is_v1 = |x: Vertex| x >= 1 && x <= 2 * f.base_n && x % 2 == 1;
    for (tail, head) in arcs {
        if tail == f.w() {
            fwd(tail, head, &mut l);
        } else if is_v1(tail) && head == tail + 1 {
            bwd(head, tail, &mut l);
        } else if is_v1(tail) {
            fwd(tail, head, &mut l);
        } else {
            bwd(head, tail, &mut l);
        }
    }
    for &x in vc {
        fwd(f.w(), f.v2(x), &mut l);
    }
    Ok(l)
}

/// Connected undirected graph: a random spanning tree plus random extra
/// edges, lengths uniform in `1..=maxlen`.
pub fn gen_random(n: usize, m: usize, maxlen: Length, seed: u64) -> Result<Graph, GeneratorError> {
    let max_m = n * n.saturating_sub(1) / 2;
    if n == 0 || m + 1 < n || m > max_m || maxlen == 0 {
        return Err(GeneratorError::InfeasibleParams(format!("n={n} m={m} maxlen={maxlen}")));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut perm: Vec<Vertex> = (0..n).collect();
    perm.shuffle(&mut rng);
    let mut present = vec![false; n * n];
    let mut arcs = Vec::with_capacity(m);
    let mut push = |a: Vertex, b: Vertex, rng: &mut ChaCha8Rng, arcs: &mut Vec<_>| {
        let (a, b) = (a.min(b), a.max(b));
        if a == b || present[a * n + b] {
            return false;
        }
        present[a * n + b] = true;
        arcs.push((a, b, rng.gen_range(1..=maxlen)));
        true
    };
    for i in 1..n {
        let parent = perm[rng.gen_range(0..i)];
        push(perm[i], parent, &mut rng, &mut arcs);
    }
    while arcs.len() < m {
        let (a, b) = (rng.gen_range(0..n), rng.gen_range(0..n));
        push(a, b, &mut rng, &mut arcs);
    }
    Ok(build(false, n, arcs))
}

/// Directed graph with `m` distinct random arcs; not necessarily strongly
/// connected.
pub fn gen_random_directed(n: usize, m: usize, maxlen: Length, seed: u64) -> Result<Graph, GeneratorError> {
    if n == 0 || m > n * (n - 1) || maxlen == 0 {
        return Err(GeneratorError::InfeasibleParams(format!("n={n} m={m} maxlen={maxlen}")));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut present = vec![false; n * n];
    let mut arcs = Vec::with_capacity(m);
    while arcs.len() < m {
        let (a, b) = (rng.gen_range(0..n), rng.gen_range(0..n));
        if a != b && !present[a * n + b] {
            present[a * n + b] = true;
            arcs.push((a, b, rng.gen_range(1..=maxlen)));
        }
    }
    Ok(build(true, n, arcs))
}

/// Same graph with unique shortest paths: arc `i` gets length
/// `len * 2^m + 2^i`, so distinct arc sets have distinct totals while every
/// strict inequality between original path lengths survives.
pub fn perturb_unique(g: &Graph) -> Result<Graph, GeneratorError> {
    let m = g.m();
    if m > 40 {
        return Err(GeneratorError::InfeasibleParams(format!("perturbation supports at most 40 arcs, got {m}")));
    }
    let scale: Length = 1 << m;
    let arcs = g
        .arcs()
        .iter()
        .enumerate()
        .map(|(i, a)| {
            a.len
                .checked_mul(scale)
                .and_then(|x| x.checked_add(1 << i))
                .map(|len| (a.tail, a.head, len))
                .ok_or_else(|| GeneratorError::InfeasibleParams("perturbed length overflows".into()))
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(build(g.is_directed(), g.n(), arcs))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::labeling::verify_cover;

    #[test]
    fn family_sizes() {
        assert_eq!(gen_bad_g(2).unwrap().n(), 11);
        let g3 = gen_bad_g(3).unwrap();
        assert_eq!((g3.n(), g3.m()), (19, 24));
        assert_eq!(gen_bad_w(2).unwrap().n(), 20);
        let w4 = gen_bad_w(4).unwrap();
        assert_eq!((w4.n(), w4.m()), (134, 32 * 4 * 2 + 4));
        let s3 = gen_separator(3).unwrap();
        assert_eq!(s3.n(), 10);
        assert_eq!(s3.out_adjacency()[9].len(), 6);
        assert_eq!(gen_cycle4(true).m(), 8);
        assert!(matches!(gen_bad_g(1), Err(GeneratorError::KTooSmall(1))));
    }

    #[test]
    fn bad_family_distances() {
        let f = BadG { k: 3 };
        let d = DistMatrix::compute(&gen_bad_g(3).unwrap());
        assert_eq!(d.get(f.a(0), f.c(0, 0)), Some(2));
        assert!(d.on_shortest_path(f.a(0), f.c(0, 0), f.b(0)));
        assert!(!d.on_shortest_path(f.a(0), f.c(0, 0), f.a(1)));
        assert_eq!(d.get(f.c(0, 0), f.a(0)), None);
        let w = BadW { k: 2 };
        let dw = DistMatrix::compute(&gen_bad_w(2).unwrap());
        assert_eq!(dw.get(w.a(), w.c(0)), Some(5));
    }

    #[test]
    fn reduction_sizes() {
        let k2 = Graph::new(false, 2, [(0, 1, 1)]).unwrap();
        let r = reduce_vc_undirected(&k2, false).unwrap();
        assert_eq!((r.n(), r.m()), (13, 13));
        let tri = Graph::new(false, 3, [(0, 1, 1), (1, 2, 1), (0, 2, 1)]).unwrap();
        assert_eq!(reduce_vc_undirected(&tri, false).unwrap().n(), 19);
        let rd = reduce_vc_directed(&k2).unwrap();
        assert_eq!((rd.n(), rd.m()), (6, 8));
        assert_eq!(mandatory_hubs(&rd), 20);
        assert_eq!(reduce_vc_directed(&tri).unwrap().n(), 10);
    }

    #[test]
    fn constructed_labelings_cover() {
        let k2 = Graph::new(false, 2, [(0, 1, 1)]).unwrap();
        for scaled in [false, true] {
            let r = reduce_vc_undirected(&k2, scaled).unwrap();
            let d = DistMatrix::compute(&r);
            let l = construct_reduction_labeling_undirected(&k2, &d, &[0]).unwrap();
            assert!(verify_cover(&l, &d).is_valid());
            assert_eq!(VcUndirected { base_n: 2 }.crossings(&l, 0, 1), 3);
        }
        let rd = reduce_vc_directed(&k2).unwrap();
        let dd = DistMatrix::compute(&rd);
        let ld = construct_reduction_labeling_directed(&k2, &dd, &[0]).unwrap();
        assert!(verify_cover(&ld, &dd).is_valid());
        assert_eq!(ld.size(), 21);
        assert!(matches!(construct_reduction_labeling_directed(&k2, &dd, &[]), Err(GeneratorError::NotAVertexCover(..))));

        let c4 = construct_c4prime_hl();
        assert_eq!(c4.size(), 16);
        assert!(verify_cover(&c4, &DistMatrix::compute(&gen_cycle4(true))).is_valid());
        assert_ne!(c4.forward(0), c4.backward(0));

        let sep = construct_separator_hl(3).unwrap();
        assert_eq!(sep.size(), 31);
        assert!(verify_cover(&sep, &DistMatrix::compute(&gen_separator(3).unwrap())).is_valid());
    }

    #[test]
    fn random_graphs() {
        let g = gen_random(6, 8, 5, 7).unwrap();
        assert_eq!((g.n(), g.m()), (6, 8));
        assert!(g.is_connected());
        assert_eq!(g.to_text(), gen_random(6, 8, 5, 7).unwrap().to_text());
        assert_eq!(gen_random(1, 0, 1, 0).unwrap().n(), 1);
        assert!(gen_random(4, 2, 1, 0).is_err());
        assert_eq!(gen_random_directed(5, 7, 3, 1).unwrap().m(), 7);
    }

    #[test]
    fn perturbation_keeps_strict_order() {
        let c4 = gen_cycle4(false);
        let p = perturb_unique(&c4).unwrap();
        let (d, dp) = (DistMatrix::compute(&c4), DistMatrix::compute(&p));
        // the two 0-2 routes now differ in length
        assert_eq!(dp.shortest_path_vertices(0, 2).unwrap().len(), 3);
        assert_eq!(d.shortest_path_vertices(0, 2).unwrap().len(), 4);
    }
}
