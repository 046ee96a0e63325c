//! Simple undirected graphs on up to 64 vertices, with validated paths and
//! cycles. Adjacency rows are single machine words, which keeps set
//! operations (intersection, reachability) branch-free at the scale the
//! solvers run at.

use crate::error::Error;

/// Hard cap on vertex count: one `u64` adjacency row per vertex.
pub const MAX_VERTICES: usize = 64;

/// A simple undirected graph with vertices labeled `0..n`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<u64>,
}

impl Graph {
    pub fn new(n: usize) -> Result<Self, Error> {
        if n > MAX_VERTICES {
            return Err(Error::TooManyVertices { n, cap: MAX_VERTICES });
        }
        Ok(Graph { n, adj: vec![0; n] })
    }

    /// Builds a graph from an explicit edge list.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self, Error> {
        let mut g = Graph::new(n)?;
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<(), Error> {
        if u >= self.n || v >= self.n {
            return Err(Error::VertexOutOfRange {
                vertex: u.max(v),
                n: self.n,
            });
        }
        if u == v {
            return Err(Error::SelfLoop { vertex: u });
        }
        self.adj[u] |= 1 << v;
        self.adj[v] |= 1 << u;
        Ok(())
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.adj[u] >> v & 1 == 1
    }

    /// Neighbors of `v` as a bitmask.
    pub fn neighbors_mask(&self, v: usize) -> u64 {
        self.adj[v]
    }

    /// Neighbors of `v` in ascending order.
    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        BitIter(self.adj[v])
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn min_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).min().unwrap_or(0)
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|row| row.count_ones() as usize).sum::<usize>() / 2
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n {
            for v in BitIter(self.adj[u]) {
                if v > u {
                    out.push((u, v));
                }
            }
        }
        out
    }

    /// All-vertices bitmask.
    pub fn full_mask(&self) -> u64 {
        if self.n == 64 {
            u64::MAX
        } else {
            (1u64 << self.n) - 1
        }
    }

    pub fn is_complete(&self) -> bool {
        self.edge_count() == self.n * (self.n - 1) / 2
    }

    /// Vertices reachable from `start` while staying inside `allowed`
    /// (which must contain `start`), as a bitmask.
    pub fn reachable_within(&self, start: usize, allowed: u64) -> u64 {
        let mut seen = 1u64 << start;
        let mut frontier = seen;
        while frontier != 0 {
            let mut next = 0u64;
            for v in BitIter(frontier) {
                next |= self.adj[v] & allowed;
            }
            frontier = next & !seen;
            seen |= next;
        }
        seen & (allowed | 1 << start)
    }

    /// Connected components as sorted vertex lists, ordered by smallest member.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut out = Vec::new();
        let mut unseen = self.full_mask();
        while unseen != 0 {
            let v = unseen.trailing_zeros() as usize;
            let comp = self.reachable_within(v, unseen);
            out.push(BitIter(comp).collect());
            unseen &= !comp;
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.n <= 1 || self.reachable_within(0, self.full_mask()) == self.full_mask()
    }

    /// Induced subgraph on `V \ remove`, relabeled to `0..`, plus the
    /// old-id -> new-id map (`None` for removed vertices).
    pub fn remove_vertices(&self, remove: &[usize]) -> Result<(Graph, Vec<Option<usize>>), Error> {
        let mut remove_mask = 0u64;
        for &v in remove {
            if v >= self.n {
                return Err(Error::VertexOutOfRange { vertex: v, n: self.n });
            }
            remove_mask |= 1 << v;
        }
        self.remove_mask(remove_mask)
    }

    pub fn remove_mask(&self, remove_mask: u64) -> Result<(Graph, Vec<Option<usize>>), Error> {
        let keep = self.full_mask() & !remove_mask;
        let mut map = vec![None; self.n];
        let mut next = 0usize;
        for v in BitIter(keep) {
            map[v] = Some(next);
            next += 1;
        }
        let mut g = Graph::new(next)?;
        for u in BitIter(keep) {
            for v in BitIter(self.adj[u] & keep) {
                if v > u {
                    g.add_edge(map[u].unwrap(), map[v].unwrap())?;
                }
            }
        }
        Ok((g, map))
    }
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges())
    }
}

/// Iterator over set bits of a mask, ascending.
#[derive(Clone, Copy)]
pub struct BitIter(pub u64);

impl Iterator for BitIter {
    type Item = usize;
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            let v = self.0.trailing_zeros() as usize;
            self.0 &= self.0 - 1;
            Some(v)
        }
    }
}

pub fn mask_of(vertices: &[usize]) -> u64 {
    vertices.iter().fold(0u64, |m, &v| m | 1 << v)
}

/// A simple path, validated against its host graph at construction.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Path {
    verts: Vec<usize>,
}

impl Path {
    pub fn new(g: &Graph, verts: &[usize]) -> Result<Self, Error> {
        if verts.is_empty() {
            return Err(Error::InvalidPath("empty vertex sequence".into()));
        }
        let mut seen = 0u64;
        for &v in verts {
            if v >= g.n() {
                return Err(Error::VertexOutOfRange { vertex: v, n: g.n() });
            }
            if seen >> v & 1 == 1 {
                return Err(Error::InvalidPath(format!("repeated vertex {v}")));
            }
            seen |= 1 << v;
        }
        for w in verts.windows(2) {
            if !g.has_edge(w[0], w[1]) {
                return Err(Error::InvalidPath(format!("missing edge {}-{}", w[0], w[1])));
            }
        }
        Ok(Path { verts: verts.to_vec() })
    }

    /// Number of edges.
    pub fn len(&self) -> usize {
        self.verts.len() - 1
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn vertices(&self) -> &[usize] {
        &self.verts
    }

    pub fn first(&self) -> usize {
        self.verts[0]
    }

    pub fn last(&self) -> usize {
        *self.verts.last().unwrap()
    }

    pub fn mask(&self) -> u64 {
        mask_of(&self.verts)
    }

    pub fn contains(&self, v: usize) -> bool {
        self.mask() >> v & 1 == 1
    }

    /// Edge set as (min,max) pairs.
    pub fn edge_set(&self) -> Vec<(usize, usize)> {
        self.verts
            .windows(2)
            .map(|w| (w[0].min(w[1]), w[0].max(w[1])))
            .collect()
    }

    /// Endpoint-ordering canonical form: smaller endpoint first.
    pub fn canonical(mut self) -> Path {
        if self.verts[0] > *self.verts.last().unwrap() {
            self.verts.reverse();
        }
        self
    }

    /// Subpath between two contained vertices, in the path's own direction
    /// from `x` to `y` (reversed if `y` precedes `x`).
    pub fn subpath(&self, x: usize, y: usize) -> Option<Vec<usize>> {
        let ix = self.verts.iter().position(|&v| v == x)?;
        let iy = self.verts.iter().position(|&v| v == y)?;
        if ix <= iy {
            Some(self.verts[ix..=iy].to_vec())
        } else {
            let mut s = self.verts[iy..=ix].to_vec();
            s.reverse();
            Some(s)
        }
    }
}

impl std::fmt::Debug for Path {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Path{:?}", self.verts)
    }
}

/// A simple cycle in canonical form: rotated so the smallest vertex comes
/// first, then reflected so the second entry is the smaller of the first
/// vertex's two cycle neighbors.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Cycle {
    verts: Vec<usize>,
}

impl Cycle {
    pub fn new(g: &Graph, verts: &[usize]) -> Result<Self, Error> {
        if verts.len() < 3 {
            return Err(Error::InvalidCycle(format!(
                "cycle needs at least 3 vertices, got {}",
                verts.len()
            )));
        }
        let mut seen = 0u64;
        for &v in verts {
            if v >= g.n() {
                return Err(Error::VertexOutOfRange { vertex: v, n: g.n() });
            }
            if seen >> v & 1 == 1 {
                return Err(Error::InvalidCycle(format!("repeated vertex {v}")));
            }
            seen |= 1 << v;
        }
        for i in 0..verts.len() {
            let u = verts[i];
            let v = verts[(i + 1) % verts.len()];
            if !g.has_edge(u, v) {
                return Err(Error::InvalidCycle(format!("missing edge {u}-{v}")));
            }
        }
        Ok(Cycle {
            verts: canonicalize_cycle(verts),
        })
    }

    /// Number of vertices = number of edges.
    pub fn len(&self) -> usize {
        self.verts.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn vertices(&self) -> &[usize] {
        &self.verts
    }

    pub fn mask(&self) -> u64 {
        mask_of(&self.verts)
    }

    pub fn contains(&self, v: usize) -> bool {
        self.mask() >> v & 1 == 1
    }

    pub fn edge_set(&self) -> Vec<(usize, usize)> {
        (0..self.verts.len())
            .map(|i| {
                let u = self.verts[i];
                let v = self.verts[(i + 1) % self.verts.len()];
                (u.min(v), u.max(v))
            })
            .collect()
    }

    pub fn has_cycle_edge(&self, u: usize, v: usize) -> bool {
        let (a, b) = (u.min(v), u.max(v));
        self.edge_set().contains(&(a, b))
    }
}

impl std::fmt::Debug for Cycle {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Cycle{:?}", self.verts)
    }
}

/// Rotate so the minimum vertex leads, then reflect so the entry after it
/// is the smaller of its two neighbors. Unique per vertex-cyclic-sequence.
pub fn canonicalize_cycle(verts: &[usize]) -> Vec<usize> {
    let len = verts.len();
    let min_pos = verts
        .iter()
        .enumerate()
        .min_by_key(|&(_, &v)| v)
        .map(|(i, _)| i)
        .unwrap();
    let mut rotated: Vec<usize> = (0..len).map(|i| verts[(min_pos + i) % len]).collect();
    if rotated[1] > rotated[len - 1] {
        rotated[1..].reverse();
    }
    rotated
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate::{named, Family};

    #[test]
    fn degree_sum_is_twice_edge_count() {
        let g = named(Family::Petersen, &[]).unwrap();
        let deg_sum: usize = (0..g.n()).map(|v| g.degree(v)).sum();
        assert_eq!(deg_sum, 2 * g.edge_count());
    }

    #[test]
    fn components_partition() {
        let mut g = Graph::new(7).unwrap();
        g.add_edge(0, 1).unwrap();
        g.add_edge(1, 2).unwrap();
        g.add_edge(3, 4).unwrap();
        let comps = g.components();
        assert_eq!(comps, vec![vec![0, 1, 2], vec![3, 4], vec![5], vec![6]]);
        let mut all: Vec<usize> = comps.concat();
        all.sort_unstable();
        assert_eq!(all, (0..7).collect::<Vec<_>>());
    }

    #[test]
    fn components_of_cycle_and_edgeless() {
        let c6 = named(Family::Cycle, &[6]).unwrap();
        assert_eq!(c6.components().len(), 1);
        let empty = Graph::new(3).unwrap();
        assert_eq!(empty.components().len(), 3);
    }

    #[test]
    fn remove_vertex_from_complete() {
        let k5 = named(Family::Complete, &[5]).unwrap();
        let (g, map) = k5.remove_vertices(&[0]).unwrap();
        assert_eq!(g.n(), 4);
        assert_eq!(g.edge_count(), 6);
        assert!(g.is_complete());
        assert_eq!(map[0], None);
        assert_eq!(map[1], Some(0));
    }

    #[test]
    fn remove_vertex_from_cycle_gives_path() {
        let c6 = named(Family::Cycle, &[6]).unwrap();
        let (g, _) = c6.remove_vertices(&[0]).unwrap();
        assert_eq!(g.n(), 5);
        assert_eq!(g.edge_count(), 4);
        // two endpoints of degree 1, rest degree 2
        let mut degs: Vec<usize> = (0..5).map(|v| g.degree(v)).collect();
        degs.sort_unstable();
        assert_eq!(degs, vec![1, 1, 2, 2, 2]);
    }

    #[test]
    fn petersen_minus_outer_is_pentagram() {
        let p = named(Family::Petersen, &[]).unwrap();
        let (inner, _) = p.remove_vertices(&[0, 1, 2, 3, 4]).unwrap();
        assert_eq!(inner.n(), 5);
        assert_eq!(inner.edge_count(), 5);
        assert_eq!(inner.components().len(), 1);
        assert!((0..5).all(|v| inner.degree(v) == 2));
    }

    #[test]
    fn path_rejects_bad_sequences() {
        let c6 = named(Family::Cycle, &[6]).unwrap();
        assert!(Path::new(&c6, &[0, 1, 2]).is_ok());
        assert!(Path::new(&c6, &[0, 2]).is_err());
        assert!(Path::new(&c6, &[0, 1, 0]).is_err());
        assert!(Path::new(&c6, &[]).is_err());
        assert!(Path::new(&c6, &[0, 1, 2, 7]).is_err());
    }

    #[test]
    fn cycle_canonical_form_is_idempotent() {
        let c6 = named(Family::Cycle, &[6]).unwrap();
        let a = Cycle::new(&c6, &[3, 4, 5, 0, 1, 2]).unwrap();
        let b = Cycle::new(&c6, &[0, 5, 4, 3, 2, 1]).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.vertices(), &[0, 1, 2, 3, 4, 5]);
        let again = canonicalize_cycle(a.vertices());
        assert_eq!(again, a.vertices());
    }

    #[test]
    fn cycle_rejects_short_or_broken() {
        let k4 = named(Family::Complete, &[4]).unwrap();
        assert!(Cycle::new(&k4, &[0, 1]).is_err());
        assert!(Cycle::new(&k4, &[0, 1, 2]).is_ok());
        let c6 = named(Family::Cycle, &[6]).unwrap();
        assert!(Cycle::new(&c6, &[0, 1, 3]).is_err());
    }
}
