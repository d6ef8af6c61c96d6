use serde::{Deserialize, Serialize};

use super::OracleError;
use crate::center::UncoveredSet;
use crate::dist::DistMatrix;
use crate::labeling::{Labeling, Side};

/// Outcome of the branch-and-bound search. When `complete`, `lower ==
/// upper` and `labeling` is optimal.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HlBounds {
    pub lower: usize,
    pub upper: usize,
    pub labeling: Labeling,
    pub complete: bool,
    pub nodes: u64,
}

struct Search<'a> {
    d: &'a DistMatrix,
    directed: bool,
    // (source, target, vertex mask of the pair's shortest paths)
    pairs: Vec<(usize, usize, u64)>,
    fwd: Vec<u64>,
    bwd: Vec<u64>,
    size: usize,
    best: usize,
    best_labels: Option<(Vec<u64>, Vec<u64>)>,
    nodes: u64,
    budget: u64,
    aborted: bool,
}

impl Search<'_> {
    fn back(&self, t: usize) -> u64 {
        if self.directed {
            self.bwd[t]
        } else {
            self.fwd[t]
        }
    }

    fn covered(&self, &(s, t, p): &(usize, usize, u64)) -> bool {
        self.fwd[s] & self.back(t) & p != 0
    }

    /// Every uncovered pair needs a new entry in its source's forward label
    /// or its target's backward label, so pairs sharing no such label need
    /// distinct entries.
    fn matching_bound(&self) -> usize {
        let (mut used_s, mut used_t) = (0u64, 0u64);
        let mut count = 0;
        for pair @ &(s, t, _) in &self.pairs {
            if self.covered(pair) {
                continue;
            }
            let (sb, tb) = (1u64 << s, 1u64 << t);
            if self.directed {
                if used_s & sb == 0 && used_t & tb == 0 {
                    used_s |= sb;
                    used_t |= tb;
                    count += 1;
                }
            } else if used_s & (sb | tb) == 0 {
                used_s |= sb | tb;
                count += 1;
            }
        }
        count
    }

    fn add(&mut self, s: usize, t: usize, h: usize) -> (bool, bool) {
        let bit = 1u64 << h;
        let a = self.fwd[s] & bit == 0;
        self.fwd[s] |= bit;
        let b = if self.directed {
            let b = self.bwd[t] & bit == 0;
            self.bwd[t] |= bit;
            b
        } else {
            let b = self.fwd[t] & bit == 0;
            self.fwd[t] |= bit;
            b
        };
        self.size += a as usize + b as usize;
        (a, b)
    }

    fn undo(&mut self, s: usize, t: usize, h: usize, (a, b): (bool, bool)) {
        let bit = 1u64 << h;
        if a {
            self.fwd[s] &= !bit;
        }
        if b {
            if self.directed {
                self.bwd[t] &= !bit;
            } else {
                self.fwd[t] &= !bit;
            }
        }
        self.size -= a as usize + b as usize;
    }

    fn dfs(&mut self) {
        if self.nodes >= self.budget {
            self.aborted = true;
            return;
        }
        self.nodes += 1;
        let mut pick: Option<(usize, u32)> = None;
        for (i, pair) in self.pairs.iter().enumerate() {
            if !self.covered(pair) {
                let options = pair.2.count_ones();
                if pick.is_none_or(|(_, o)| options < o) {
                    pick = Some((i, options));
                }
            }
        }
        let Some((i, _)) = pick else {
            if self.size < self.best {
                self.best = self.size;
                self.best_labels = Some((self.fwd.clone(), self.bwd.clone()));
            }
            return;
        };
        if self.size + self.matching_bound() >= self.best {
            return;
        }
        let (s, t, p) = self.pairs[i];
        let mut options: Vec<(usize, usize)> = (0..64)
            .filter(|h| p >> h & 1 == 1)
            .map(|h| {
                let bit = 1u64 << h;
                let cost = (self.fwd[s] & bit == 0) as usize + (self.back(t) & bit == 0) as usize;
                (cost, h)
            })
            .collect();
        options.sort_unstable();
        for (_, h) in options {
            let added = self.add(s, t, h);
            self.dfs();
            self.undo(s, t, h, added);
            if self.aborted {
                return;
            }
        }
    }

    fn to_labeling(&self, (fwd, bwd): &(Vec<u64>, Vec<u64>)) -> Labeling {
        let n = self.d.n();
        let mut l = Labeling::empty(n, self.directed);
        for v in 0..n {
            for h in 0..n {
                if fwd[v] >> h & 1 == 1 {
                    l.insert(Side::Forward, v, h, self.d.get(v, h).unwrap());
                }
                if self.directed && bwd[v] >> h & 1 == 1 {
                    l.insert(Side::Backward, v, h, self.d.get(h, v).unwrap());
                }
            }
        }
        l
    }
}

/// Minimum-size hub labeling covering `targets`, by branching on the hub
/// that covers each pair. `budget` caps the number of search nodes.
pub fn optimal_hl_bnb(d: &DistMatrix, targets: &UncoveredSet, budget: Option<u64>) -> Result<HlBounds, OracleError> {
    let n = d.n();
    if n > 64 {
        return Err(OracleError::TooLarge { size: n, limit: 64 });
    }
    let pairs = targets
        .iter()
        .map(|p| {
            let mask = (0..n).filter(|&z| d.on_shortest_path(p.first, p.second, z)).fold(0u64, |m, z| m | 1 << z);
            (p.first, p.second, mask)
        })
        .collect();
    let mut search = Search {
        d,
        directed: d.is_directed(),
        pairs,
        fwd: vec![0; n],
        bwd: vec![0; n],
        size: 0,
        best: usize::MAX,
        best_labels: None,
        nodes: 0,
        budget: budget.unwrap_or(u64::MAX),
        aborted: false,
    };
    let root_bound = search.matching_bound();
    search.dfs();
    let Some(labels) = search.best_labels.clone() else {
        // budget ran out before the first complete labeling
        let mut fallback = Labeling::empty(n, d.is_directed());
        for p in targets.iter() {
            fallback.insert(Side::Forward, p.first, p.first, 0);
            fallback.insert(Side::Backward, p.second, p.first, d.get(p.first, p.second).unwrap());
        }
        let upper = fallback.size();
        return Ok(HlBounds { lower: root_bound, upper, labeling: fallback, complete: false, nodes: search.nodes });
    };
    let labeling = search.to_labeling(&labels);
    let complete = !search.aborted;
    let lower = if complete { search.best } else { root_bound };
    Ok(HlBounds { lower, upper: search.best, labeling, complete, nodes: search.nodes })
}
