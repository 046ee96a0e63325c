//! Exact longest path / longest cycle computation and exhaustive
//! enumeration of the full optimum set.
//!
//! Best lengths come from subset dynamic programming over (vertex set,
//! endpoint) states up to [`DP_THRESHOLD`] vertices, and from depth-first
//! branch-and-bound with reachability pruning above it. Enumeration is a
//! second pass that prunes strictly below the optimum so ties survive.

use crate::connectivity::is_k_connected;
use crate::error::Error;
use crate::graph::{canonicalize_cycle, BitIter, Graph};

/// Crossover between subset DP and branch-and-bound (2^n * n state table).
pub const DP_THRESHOLD: usize = 18;

/// Bits strictly above position `v`.
fn mask_above(v: usize) -> u64 {
    if v >= 63 {
        0
    } else {
        u64::MAX << (v + 1)
    }
}

/// Default cap on enumerated optimum witnesses.
pub const DEFAULT_ENUM_CAP: usize = 1_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Kind {
    Path,
    Cycle,
}

/// Outcome of an exact solve: the optimum length and (up to `cap`) every
/// optimum witness in canonical form, ascending lexicographic order.
#[derive(Debug, Clone)]
pub struct SolveResult {
    pub kind: Kind,
    /// number of edges for paths; number of vertices (= edges) for cycles
    pub best_length: usize,
    pub witnesses: Vec<Vec<usize>>,
    pub truncated: bool,
    pub explored_nodes: u64,
}

impl SolveResult {
    /// Vertex bitmasks of the distinct witness vertex sets.
    pub fn witness_masks(&self) -> Vec<u64> {
        let mut masks: Vec<u64> = self
            .witnesses
            .iter()
            .map(|w| w.iter().fold(0u64, |m, &v| m | 1 << v))
            .collect();
        masks.sort_unstable();
        masks.dedup();
        masks
    }
}

/// Longest-path length by subset DP: reach[mask] per endpoint bit.
fn best_path_length_dp(g: &Graph) -> usize {
    let n = g.n();
    if n == 0 {
        return 0;
    }
    assert!(n <= DP_THRESHOLD);
    let full = 1usize << n;
    // ends[mask] = bitmask of endpoints v such that some path covers mask
    // exactly and ends at v
    let mut ends = vec![0u32; full];
    for v in 0..n {
        ends[1 << v] = 1 << v;
    }
    let mut best = 0usize;
    for mask in 1..full {
        let e = ends[mask];
        if e == 0 {
            continue;
        }
        best = best.max(mask.count_ones() as usize - 1);
        for v in BitIter(e as u64) {
            let nexts = g.neighbors_mask(v) & !(mask as u64);
            for w in BitIter(nexts) {
                ends[mask | 1 << w] |= 1 << w;
            }
        }
    }
    best
}

/// Longest-cycle length by subset DP anchored at each mask's minimum vertex.
fn best_cycle_length_dp(g: &Graph) -> usize {
    let n = g.n();
    if n < 3 {
        return 0;
    }
    assert!(n <= DP_THRESHOLD);
    let full = 1usize << n;
    let mut ends = vec![0u32; full];
    for v in 0..n {
        ends[1 << v] = 1 << v;
    }
    let mut best = 0usize;
    for mask in 1..full {
        let e = ends[mask];
        if e == 0 {
            continue;
        }
        let anchor = mask.trailing_zeros() as usize;
        let count = mask.count_ones() as usize;
        for v in BitIter(e as u64) {
            if count >= 3 && v != anchor && g.has_edge(v, anchor) {
                best = best.max(count);
            }
            // extend only with vertices above the anchor
            let nexts = g.neighbors_mask(v) & !(mask as u64) & mask_above(anchor);
            for w in BitIter(nexts) {
                ends[mask | 1 << w] |= 1 << w;
            }
        }
    }
    best
}

struct Search<'a> {
    g: &'a Graph,
    /// best length seen so far (incumbent)
    best: usize,
    /// when enumerating: collect everything matching `best`
    collect: Option<Vec<Vec<usize>>>,
    cap: usize,
    truncated: bool,
    explored: u64,
}

impl Search<'_> {
    fn record(&mut self, witness: Vec<usize>) {
        if let Some(acc) = &mut self.collect {
            if acc.len() >= self.cap {
                self.truncated = true;
            } else {
                acc.push(witness);
            }
        }
    }

    /// Pruning bound for path extension: current edges + vertices still
    /// reachable from the endpoint through unused vertices.
    fn path_bound(&self, endpoint: usize, used: u64, len: usize) -> usize {
        let free = self.g.full_mask() & !used;
        let reach = self.g.reachable_within(endpoint, free) & free;
        len + reach.count_ones() as usize
    }

    fn extend_path(&mut self, seq: &mut Vec<usize>, used: u64) {
        self.explored += 1;
        let len = seq.len() - 1;
        if len == self.best {
            let fwd = seq.clone();
            let canonical = if seq[0] <= *seq.last().unwrap() {
                fwd
            } else {
                let mut r = fwd;
                r.reverse();
                r
            };
            // each path is reached twice (once per direction); keep one
            if canonical[0] == seq[0] {
                self.record(canonical);
            }
            return; // no longer path exists past the optimum
        }
        let endpoint = *seq.last().unwrap();
        if self.path_bound(endpoint, used, len) < self.best {
            return; // ties must survive, so prune strictly below only
        }
        for w in BitIter(self.g.neighbors_mask(endpoint) & !used) {
            seq.push(w);
            self.extend_path(seq, used | 1 << w);
            seq.pop();
        }
    }

    /// Branch-and-bound for the best path length only.
    fn best_path_bb(&mut self) -> usize {
        self.best = 0;
        for s in 0..self.g.n() {
            let mut seq = vec![s];
            self.bb_path(&mut seq, 1 << s);
        }
        self.best
    }

    fn bb_path(&mut self, seq: &mut Vec<usize>, used: u64) {
        self.explored += 1;
        let len = seq.len() - 1;
        if len > self.best {
            self.best = len;
        }
        let endpoint = *seq.last().unwrap();
        if self.path_bound(endpoint, used, len) <= self.best {
            return;
        }
        for w in BitIter(self.g.neighbors_mask(endpoint) & !used) {
            seq.push(w);
            self.bb_path(seq, used | 1 << w);
            seq.pop();
        }
    }

    /// Cycle search anchored at `anchor` = minimum vertex of the cycle;
    /// `strict` pruning keeps ties (enumeration) or not (bounding).
    fn cycle_search(&mut self, anchor: usize, seq: &mut Vec<usize>, used: u64, enumerate: bool) {
        self.explored += 1;
        let endpoint = *seq.last().unwrap();
        let count = seq.len();
        if count >= 3 && self.g.has_edge(endpoint, anchor) {
            if enumerate {
                if count == self.best {
                    // avoid the mirror image: canonical form demands the
                    // second vertex be smaller than the last
                    if seq[1] < seq[count - 1] {
                        self.record(canonicalize_cycle(seq));
                    }
                }
            } else if count > self.best {
                self.best = count;
            }
        }
        // grow only with unused vertices above the anchor
        let free = self.g.full_mask() & !used & mask_above(anchor);
        let reach = self.g.reachable_within(endpoint, free) & free;
        let bound = count + reach.count_ones() as usize;
        let limit_hit = if enumerate { bound < self.best } else { bound <= self.best };
        if limit_hit {
            return;
        }
        // the cycle must close: some current-or-future endpoint must see the anchor
        if (reach | 1 << endpoint) & self.g.neighbors_mask(anchor) == 0 {
            return;
        }
        for w in BitIter(self.g.neighbors_mask(endpoint) & free) {
            seq.push(w);
            self.cycle_search(anchor, seq, used | 1 << w, enumerate);
            seq.pop();
        }
    }
}

/// Best path length, exact, choosing the backend by size.
pub fn best_path_length(g: &Graph) -> usize {
    if g.n() <= DP_THRESHOLD {
        best_path_length_dp(g)
    } else {
        best_path_length_branch_bound(g)
    }
}

/// Best cycle length (circumference), exact; 0 when acyclic.
pub fn best_cycle_length(g: &Graph) -> usize {
    if g.n() <= DP_THRESHOLD {
        best_cycle_length_dp(g)
    } else {
        best_cycle_length_branch_bound(g)
    }
}

/// Branch-and-bound backend, exposed for cross-validation against the DP.
pub fn best_path_length_branch_bound(g: &Graph) -> usize {
    let mut s = Search {
        g,
        best: 0,
        collect: None,
        cap: 0,
        truncated: false,
        explored: 0,
    };
    s.best_path_bb()
}

/// Branch-and-bound circumference, exposed for cross-validation.
pub fn best_cycle_length_branch_bound(g: &Graph) -> usize {
    let mut s = Search {
        g,
        best: 0,
        collect: None,
        cap: 0,
        truncated: false,
        explored: 0,
    };
    for anchor in 0..g.n() {
        let mut seq = vec![anchor];
        s.cycle_search(anchor, &mut seq, 1 << anchor, false);
    }
    s.best
}

/// DP backends, exposed for cross-validation.
pub fn best_path_length_subset_dp(g: &Graph) -> usize {
    best_path_length_dp(g)
}

pub fn best_cycle_length_subset_dp(g: &Graph) -> usize {
    best_cycle_length_dp(g)
}

/// All longest paths (canonical: smaller endpoint first) or all longest
/// cycles (rotation/reflection canonical), up to `cap` witnesses.
pub fn enumerate_longest(g: &Graph, kind: Kind, cap: usize) -> Result<SolveResult, Error> {
    if cap < 2 {
        return Err(Error::InvalidArgument(format!("enumeration cap must be >= 2, got {cap}")));
    }
    let best = match kind {
        Kind::Path => best_path_length(g),
        Kind::Cycle => best_cycle_length(g),
    };
    let mut s = Search {
        g,
        best,
        collect: Some(Vec::new()),
        cap,
        truncated: false,
        explored: 0,
    };
    match kind {
        Kind::Path => {
            for start in 0..g.n() {
                let mut seq = vec![start];
                s.extend_path(&mut seq, 1 << start);
            }
        }
        Kind::Cycle => {
            if best >= 3 {
                for anchor in 0..g.n() {
                    let mut seq = vec![anchor];
                    s.cycle_search(anchor, &mut seq, 1 << anchor, true);
                }
            }
        }
    }
    let mut witnesses = s.collect.take().unwrap();
    witnesses.sort();
    witnesses.dedup();
    Ok(SolveResult {
        kind,
        best_length: best,
        witnesses,
        truncated: s.truncated,
        explored_nodes: s.explored,
    })
}

/// All longest paths with the default cap.
pub fn longest_path(g: &Graph) -> SolveResult {
    enumerate_longest(g, Kind::Path, DEFAULT_ENUM_CAP).expect("default cap is valid")
}

/// All longest cycles with the default cap.
pub fn longest_cycle(g: &Graph) -> SolveResult {
    enumerate_longest(g, Kind::Cycle, DEFAULT_ENUM_CAP).expect("default cap is valid")
}

#[derive(Debug, Clone, PartialEq, Eq, serde::Serialize)]
#[serde(rename_all = "kebab-case", tag = "verdict")]
pub enum DiracVerdict {
    Holds { circumference: usize, required: usize },
    Violated { circumference: usize, required: usize, graph6: String },
    NotApplicable,
}

/// Checks the classical circumference lower bound min{2*delta, n} for
/// 2-connected graphs.
pub fn dirac_check(g: &Graph) -> DiracVerdict {
    if !is_k_connected(g, 2) {
        return DiracVerdict::NotApplicable;
    }
    let circumference = best_cycle_length(g);
    let required = (2 * g.min_degree()).min(g.n());
    if circumference >= required {
        DiracVerdict::Holds {
            circumference,
            required,
        }
    } else {
        DiracVerdict::Violated {
            circumference,
            required,
            graph6: crate::graph6::emit_graph6(g),
        }
    }
}
