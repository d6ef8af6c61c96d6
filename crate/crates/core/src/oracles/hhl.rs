use super::OracleError;
use crate::dist::DistMatrix;
use crate::labeling::Order;

/// Minimum hierarchical labeling size over all vertex orders, with a
/// witnessing order.
///
/// The canonical labeling charges a vertex `c` one entry per vertex `v`
/// whose shortest `v`-`c` paths avoid every more important vertex. That
/// charge only depends on the set of vertices placed before `c`, so the
/// minimum over all `n!` orders is a dynamic program over subsets.
pub fn optimal_hhl_bruteforce(d: &DistMatrix, limit_n: usize) -> Result<(usize, Order), OracleError> {
    let n = d.n();
    if n > limit_n || n > 24 {
        return Err(OracleError::TooLarge { size: n, limit: limit_n });
    }
    if n == 0 {
        return Ok((0, Order::identity(0)));
    }
    // path[x * n + y]: vertex mask of all shortest x-y paths, 0 if unreachable
    let mut path = vec![0u32; n * n];
    for x in 0..n {
        for y in 0..n {
            if d.reachable(x, y) {
                path[x * n + y] = (0..n).filter(|&z| d.on_shortest_path(x, y, z)).fold(0, |m, z| m | 1 << z);
            }
        }
    }
    let cost = |c: usize, placed: u32| -> usize {
        let mut total = 0;
        for v in 0..n {
            let f = path[v * n + c];
            if f != 0 && f & placed == 0 {
                total += 1;
            }
            if d.is_directed() {
                let b = path[c * n + v];
                if b != 0 && b & placed == 0 {
                    total += 1;
                }
            }
        }
        total
    };
    let full = (1usize << n) - 1;
    let mut best = vec![usize::MAX; full + 1];
    let mut last = vec![0u8; full + 1];
    best[0] = 0;
    for set in 1..=full {
        let mut bits = set;
        while bits != 0 {
            let c = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            let prev = set & !(1 << c);
            let value = best[prev] + cost(c, prev as u32);
            if value < best[set] {
                best[set] = value;
                last[set] = c as u8;
            }
        }
    }
    let mut seq = Vec::with_capacity(n);
    let mut set = full;
    while set != 0 {
        let c = last[set] as usize;
        seq.push(c);
        set &= !(1 << c);
    }
    seq.reverse();
    Ok((best[full], Order::from_sequence(seq).unwrap()))
}
