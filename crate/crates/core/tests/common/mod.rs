#![allow(dead_code)]

use hublab::labeling::Side;
use hublab::{DistMatrix, Graph, Labeling, Length, Order, Vertex};
use rand::seq::SliceRandom;
use rand::Rng;

/// Distances and on-path vertex masks from enumerating every simple path.
pub struct BruteForce {
    pub n: usize,
    pub dist: Vec<Option<Length>>,
    pub on_path: Vec<u64>,
}

pub fn brute_force_paths(g: &Graph) -> BruteForce {
    let n = g.n();
    let adj = g.out_adjacency();
    let mut dist = vec![None; n * n];
    let mut on_path = vec![0u64; n * n];
    fn walk(
        adj: &[Vec<(Vertex, Length)>],
        src: usize,
        x: usize,
        len: Length,
        mask: u64,
        dist: &mut [Option<Length>],
        on_path: &mut [u64],
    ) {
        let n = adj.len();
        let slot = src * n + x;
        match dist[slot] {
            Some(best) if best < len => {}
            Some(best) if best == len => on_path[slot] |= mask,
            _ => {
                dist[slot] = Some(len);
                on_path[slot] = mask;
            }
        }
        for &(y, l) in &adj[x] {
            if mask >> y & 1 == 0 {
                walk(adj, src, y, len + l, mask | 1 << y, dist, on_path);
            }
        }
    }
    for s in 0..n {
        walk(&adj, s, s, 0, 1 << s, &mut dist, &mut on_path);
    }
    BruteForce { n, dist, on_path }
}

pub fn shuffled_order(n: usize, rng: &mut impl Rng) -> Order {
    let mut seq: Vec<Vertex> = (0..n).collect();
    seq.shuffle(rng);
    Order::from_sequence(seq).unwrap()
}

/// `base` plus random extra hubs that keep the labeling hierarchical for
/// `order`.
pub fn add_rank_respecting_hubs(base: &Labeling, d: &DistMatrix, order: &Order, extra: usize, rng: &mut impl Rng) -> Labeling {
    let n = d.n();
    let mut l = base.clone();
    if n == 0 {
        return l;
    }
    for _ in 0..extra {
        let v = rng.gen_range(0..n);
        let h = rng.gen_range(0..n);
        if order.rank(h) > order.rank(v) {
            continue;
        }
        let side = *l.sides().choose(rng).unwrap();
        let dist = match side {
            Side::Forward => d.get(v, h),
            Side::Backward => d.get(h, v),
        };
        if let Some(dist) = dist {
            l.insert(side, v, h, dist);
        }
    }
    l
}

/// A hierarchical labeling built independently of the canonical one: each
/// pair gets a random hub among the vertices of its shortest paths that are
/// at least as important as both endpoints.
pub fn random_hierarchical_labeling(d: &DistMatrix, order: &Order, rng: &mut impl Rng) -> Labeling {
    let n = d.n();
    let mut l = Labeling::empty(n, d.is_directed());
    for s in 0..n {
        for t in 0..n {
            let Some(st) = d.get(s, t) else { continue };
            if !d.is_directed() && s > t {
                continue;
            }
            let bound = order.rank(s).min(order.rank(t));
            let options: Vec<Vertex> = (0..n).filter(|&h| d.on_shortest_path(s, t, h) && order.rank(h) <= bound).collect();
            let h = *options.choose(rng).expect("the most important path vertex qualifies");
            let sh = d.get(s, h).unwrap();
            l.insert(Side::Forward, s, h, sh);
            l.insert(Side::Backward, t, h, st - sh);
        }
    }
    l
}

/// Every pair's query answer matches the distance table, including `None`
/// on unreachable pairs.
pub fn queries_exact(l: &Labeling, d: &DistMatrix) -> bool {
    (0..d.n()).all(|s| (0..d.n()).all(|t| l.query(s, t) == d.get(s, t)))
}
