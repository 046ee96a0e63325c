//! Graph generators: named families, seeded random k-connected graphs, and
//! an exhaustive census of connected graphs up to isomorphism for the
//! verification sweeps.

use crate::connectivity::is_k_connected;
use crate::error::Error;
use crate::graph::{BitIter, Graph};
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use std::collections::HashSet;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    Complete,
    Cycle,
    Path,
    CompleteBipartite,
    Petersen,
    Hypercube,
}

impl std::str::FromStr for Family {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self, Error> {
        match s {
            "complete" => Ok(Family::Complete),
            "cycle" => Ok(Family::Cycle),
            "path" => Ok(Family::Path),
            "complete_bipartite" => Ok(Family::CompleteBipartite),
            "petersen" => Ok(Family::Petersen),
            "hypercube" => Ok(Family::Hypercube),
            other => Err(Error::UnknownFamily(other.to_string())),
        }
    }
}

fn bad_params(family: &str, reason: &str) -> Error {
    Error::InvalidFamilyParams {
        family: family.to_string(),
        reason: reason.to_string(),
    }
}

/// Standard labeled graph of the given family.
pub fn named(family: Family, params: &[usize]) -> Result<Graph, Error> {
    match family {
        Family::Complete => {
            let &[n] = params else {
                return Err(bad_params("complete", "expected one parameter n"));
            };
            if n == 0 {
                return Err(bad_params("complete", "n must be positive"));
            }
            let mut g = Graph::new(n)?;
            for u in 0..n {
                for v in u + 1..n {
                    g.add_edge(u, v)?;
                }
            }
            Ok(g)
        }
        Family::Cycle => {
            let &[n] = params else {
                return Err(bad_params("cycle", "expected one parameter n"));
            };
            if n < 3 {
                return Err(bad_params("cycle", "n must be at least 3"));
            }
            let mut g = Graph::new(n)?;
            for v in 0..n {
                g.add_edge(v, (v + 1) % n)?;
            }
            Ok(g)
        }
        Family::Path => {
            let &[n] = params else {
                return Err(bad_params("path", "expected one parameter n"));
            };
            if n == 0 {
                return Err(bad_params("path", "n must be positive"));
            }
            let mut g = Graph::new(n)?;
            for v in 1..n {
                g.add_edge(v - 1, v)?;
            }
            Ok(g)
        }
        Family::CompleteBipartite => {
            let &[a, b] = params else {
                return Err(bad_params("complete_bipartite", "expected parameters a b"));
            };
            if a == 0 || b == 0 {
                return Err(bad_params("complete_bipartite", "parts must be nonempty"));
            }
            let mut g = Graph::new(a + b)?;
            for u in 0..a {
                for v in a..a + b {
                    g.add_edge(u, v)?;
                }
            }
            Ok(g)
        }
        Family::Petersen => {
            if !params.is_empty() {
                return Err(bad_params("petersen", "takes no parameters"));
            }
            // outer 5-cycle 0..4, inner pentagram 5..9, spokes i -- i+5
            let mut g = Graph::new(10)?;
            for v in 0..5 {
                g.add_edge(v, (v + 1) % 5)?;
                g.add_edge(5 + v, 5 + (v + 2) % 5)?;
                g.add_edge(v, 5 + v)?;
            }
            Ok(g)
        }
        Family::Hypercube => {
            let &[d] = params else {
                return Err(bad_params("hypercube", "expected one parameter d"));
            };
            if d == 0 || d > 6 {
                return Err(bad_params("hypercube", "dimension must be in 1..=6"));
            }
            let n = 1usize << d;
            let mut g = Graph::new(n)?;
            for v in 0..n {
                for bit in 0..d {
                    let u = v ^ (1 << bit);
                    if u > v {
                        g.add_edge(v, u)?;
                    }
                }
            }
            Ok(g)
        }
    }
}

/// Seeded random graph with vertex connectivity at least `k`: random edges
/// are added until the minimum degree reaches `k`, then until the
/// connectivity test passes. Terminates because K_n is (n-1)-connected.
pub fn random_k_connected(n: usize, k: usize, seed: u64) -> Result<Graph, Error> {
    if n == 0 || k == 0 || k > n - 1 {
        return Err(Error::InvalidArgument(format!(
            "need 1 <= k <= n-1, got n={n} k={k}"
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut non_edges: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect();
    non_edges.shuffle(&mut rng);
    let mut g = Graph::new(n)?;
    while g.min_degree() < k {
        let (u, v) = non_edges.pop().expect("ran out of edges before reaching min degree");
        g.add_edge(u, v)?;
    }
    while !is_k_connected(&g, k) {
        let (u, v) = non_edges.pop().expect("ran out of edges before reaching connectivity");
        g.add_edge(u, v)?;
    }
    Ok(g)
}

/// Canonical certificate of a labeled graph: the lexicographically maximal
/// upper-triangle bit string over all vertex relabelings. Only used to
/// deduplicate the small-graph census (n <= 10 or so); the search prunes on
/// degree classes and on partial row comparisons.
pub fn canonical_code(g: &Graph) -> u64 {
    let n = g.n();
    let total_bits = n * (n - 1) / 2;
    assert!(total_bits <= 64, "census certificate limited to small n");
    let mut state = CanonSearch {
        g,
        total_bits: total_bits as u32,
        best: 0,
        have_best: false,
        perm: Vec::with_capacity(n),
    };
    state.descend(0, 0, 0);
    state.best
}

struct CanonSearch<'a> {
    g: &'a Graph,
    total_bits: u32,
    best: u64,
    have_best: bool,
    perm: Vec<usize>,
}

impl CanonSearch<'_> {
    /// Backtracks over vertex orderings; the code of a complete ordering is
    /// the big-endian concatenation of each new vertex's adjacency column
    /// against the vertices placed before it. Prunes orderings whose partial
    /// code falls below the same-length prefix of the best complete code,
    /// and collapses twin vertices (identical closed/open neighborhoods)
    /// which are interchangeable by an automorphism.
    fn descend(&mut self, used: u64, partial: u64, bits: u32) {
        let n = self.g.n();
        let depth = self.perm.len();
        if depth == n {
            if !self.have_best || partial > self.best {
                self.best = partial;
                self.have_best = true;
            }
            return;
        }
        let mut cands: Vec<(u64, usize)> = Vec::with_capacity(n - depth);
        'next: for v in 0..n {
            if used >> v & 1 == 1 {
                continue;
            }
            for &(pcol, p) in &cands {
                let _ = pcol;
                // twins: same neighborhood apart from each other
                let mv = self.g.neighbors_mask(v) & !(1 << p);
                let mp = self.g.neighbors_mask(p) & !(1 << v);
                if mv == mp {
                    continue 'next;
                }
            }
            let mut col = 0u64;
            for &p in &self.perm {
                col = col << 1 | self.g.has_edge(v, p) as u64;
            }
            cands.push((col, v));
        }
        cands.sort_unstable_by(|a, b| b.cmp(a));
        for &(col, v) in &cands {
            let new_partial = partial << depth | col;
            let new_bits = bits + depth as u32;
            if self.have_best && new_bits > 0 {
                let best_prefix = self.best >> (self.total_bits - new_bits);
                if new_partial < best_prefix {
                    continue;
                }
            }
            self.perm.push(v);
            self.descend(used | 1 << v, new_partial, new_bits);
            self.perm.pop();
        }
    }
}

/// All connected graphs on exactly `n` vertices up to isomorphism, built by
/// vertex augmentation from the (n-1)-vertex census with certificate
/// deduplication. Intended for n <= 9.
pub fn census_connected(n: usize) -> Result<Vec<Graph>, Error> {
    Ok(census_all(n)?.into_iter().filter(|g| g.is_connected()).collect())
}

/// All graphs on `n` vertices up to isomorphism.
pub fn census_all(n: usize) -> Result<Vec<Graph>, Error> {
    if n == 0 || n * (n - 1) / 2 > 64 {
        return Err(Error::InvalidArgument(format!(
            "census supports 1 <= n <= 11, got {n}"
        )));
    }
    if n == 1 {
        return Ok(vec![Graph::new(1)?]);
    }
    let prev = census_all(n - 1)?;
    let mut seen: HashSet<u64> = HashSet::new();
    let mut out = Vec::new();
    for base in &prev {
        for nbhd in 0u64..1u64 << (n - 1) {
            let mut g = Graph::new(n)?;
            for (u, v) in base.edges() {
                g.add_edge(u, v)?;
            }
            for u in BitIter(nbhd) {
                g.add_edge(u, n - 1)?;
            }
            let code = canonical_code(&g);
            if seen.insert(code) {
                out.push(g);
            }
        }
    }
    Ok(out)
}
