//! Vertex connectivity, internally disjoint path witnesses, fans, and
//! separator tests, all backed by unit-capacity max-flow on the vertex-split
//! digraph. Edges are inserted in ascending vertex order and augmentation
//! scans them in insertion order, so witnesses are reproducible.

use crate::error::Error;
use crate::graph::{mask_of, BitIter, Graph, Path};

/// A fan: paths from one source vertex into a target set, pairwise meeting
/// only at the source, each hitting the target set exactly at its far end.
#[derive(Debug, Clone)]
pub struct PathSystem {
    pub source: usize,
    pub targets: u64,
    pub paths: Vec<Path>,
}

impl PathSystem {
    /// Checks every structural invariant; returns the first violation.
    pub fn validate(&self, g: &Graph) -> Result<(), Error> {
        let mut interiors = 0u64;
        let mut ends = 0u64;
        for p in &self.paths {
            Path::new(g, p.vertices())?; // adjacency + distinctness
            if p.first() != self.source {
                return Err(Error::Internal(format!(
                    "fan path starts at {} not source {}",
                    p.first(),
                    self.source
                )));
            }
            let end = p.last();
            if self.targets >> end & 1 == 0 {
                return Err(Error::Internal(format!("fan path ends at {end} outside targets")));
            }
            if ends >> end & 1 == 1 {
                return Err(Error::Internal(format!("two fan paths end at {end}")));
            }
            ends |= 1 << end;
            let interior = p.mask() & !(1 << self.source) & !(1 << end);
            if interior & self.targets != 0 {
                return Err(Error::Internal("fan path passes through a target vertex".into()));
            }
            if interior & interiors != 0 {
                return Err(Error::Internal("fan paths share an internal vertex".into()));
            }
            interiors |= interior;
        }
        if interiors & ends != 0 {
            return Err(Error::Internal("fan endpoint appears inside another path".into()));
        }
        Ok(())
    }
}

struct FlowEdge {
    to: usize,
    cap: u32,
}

/// Plain adjacency-list max-flow with paired residual edges. Unit (or tiny)
/// capacities everywhere, so repeated DFS augmentation is O(flow * E).
struct FlowNet {
    edges: Vec<FlowEdge>,
    adj: Vec<Vec<usize>>,
}

impl FlowNet {
    fn new(nodes: usize) -> Self {
        FlowNet {
            edges: Vec::new(),
            adj: vec![Vec::new(); nodes],
        }
    }

    fn add_edge(&mut self, from: usize, to: usize, cap: u32) -> usize {
        let id = self.edges.len();
        self.edges.push(FlowEdge { to, cap });
        self.edges.push(FlowEdge { to: from, cap: 0 });
        self.adj[from].push(id);
        self.adj[to].push(id + 1);
        id
    }

    /// Pushes one unit along a DFS-found residual path; false if none exists.
    fn augment(&mut self, s: usize, t: usize) -> bool {
        let mut visited = vec![false; self.adj.len()];
        let mut trail: Vec<usize> = Vec::new();
        if !self.dfs(s, t, &mut visited, &mut trail) {
            return false;
        }
        for &eid in &trail {
            self.edges[eid].cap -= 1;
            self.edges[eid ^ 1].cap += 1;
        }
        true
    }

    fn dfs(&self, v: usize, t: usize, visited: &mut [bool], trail: &mut Vec<usize>) -> bool {
        if v == t {
            return true;
        }
        visited[v] = true;
        for &eid in &self.adj[v] {
            let e = &self.edges[eid];
            if e.cap > 0 && !visited[e.to] {
                trail.push(eid);
                if self.dfs(e.to, t, visited, trail) {
                    return true;
                }
                trail.pop();
            }
        }
        false
    }

    fn max_flow(&mut self, s: usize, t: usize, limit: usize) -> usize {
        let mut value = 0;
        while value < limit && self.augment(s, t) {
            value += 1;
        }
        value
    }

    /// Nodes reachable from `s` in the residual network.
    fn residual_reachable(&self, s: usize) -> Vec<bool> {
        let mut seen = vec![false; self.adj.len()];
        let mut stack = vec![s];
        seen[s] = true;
        while let Some(v) = stack.pop() {
            for &eid in &self.adj[v] {
                let e = &self.edges[eid];
                if e.cap > 0 && !seen[e.to] {
                    seen[e.to] = true;
                    stack.push(e.to);
                }
            }
        }
        seen
    }
}

/// Vertex-split network for internally disjoint paths from `source` into
/// `targets`. Node 2v is the in-half, 2v+1 the out-half, 2n the sink.
/// Interior vertices carry a capacity-1 in->out arc; terminals carry none,
/// so no path passes through the source or through a target.
struct SplitNet {
    net: FlowNet,
    n: usize,
    source: usize,
    targets: u64,
    /// edge ids of the graph arcs u_out -> v_in
    graph_arcs: Vec<(usize, usize, usize)>,
    /// edge ids of interior in->out arcs
    split_arcs: Vec<(usize, usize)>,
}

impl SplitNet {
    fn build(g: &Graph, source: usize, targets: u64, per_target_cap: u32) -> SplitNet {
        let n = g.n();
        let mut net = FlowNet::new(2 * n + 1);
        let sink = 2 * n;
        let mut split_arcs = Vec::new();
        for v in 0..n {
            if v != source && targets >> v & 1 == 0 {
                let id = net.add_edge(2 * v, 2 * v + 1, 1);
                split_arcs.push((v, id));
            }
        }
        for t in BitIter(targets) {
            net.add_edge(2 * t, sink, per_target_cap);
        }
        // graph arcs are effectively unbounded so that a minimum cut can
        // only saturate split arcs; per-arc flow still never exceeds one
        // because every arc head funnels through a unit split or sink arc
        let big = n as u32 + 1;
        // except direct source->target arcs, which stay unit so one edge
        // never carries two paths
        let cap_of = |u: usize, v: usize| {
            if u == source && targets >> v & 1 == 1 {
                1
            } else {
                big
            }
        };
        let mut graph_arcs = Vec::new();
        for (u, v) in g.edges() {
            let id = net.add_edge(2 * u + 1, 2 * v, cap_of(u, v));
            graph_arcs.push((u, v, id));
            let id = net.add_edge(2 * v + 1, 2 * u, cap_of(v, u));
            graph_arcs.push((v, u, id));
        }
        SplitNet {
            net,
            n,
            source,
            targets,
            graph_arcs,
            split_arcs,
        }
    }

    fn source_node(&self) -> usize {
        2 * self.source + 1
    }

    fn sink_node(&self) -> usize {
        2 * self.n
    }

    fn run(&mut self, limit: usize) -> usize {
        self.net.max_flow(self.source_node(), self.sink_node(), limit)
    }

    /// Splits the flow into vertex-disjoint source->target paths, sorted.
    fn decompose(&self) -> Vec<Vec<usize>> {
        // flow on the u->v graph arc sits on its reverse edge's capacity
        let mut flow_out: Vec<u64> = vec![0; self.n];
        for &(u, v, id) in &self.graph_arcs {
            if self.net.edges[id + 1].cap > 0 {
                flow_out[u] |= 1 << v;
            }
        }
        // two antiparallel saturated arcs cancel
        for u in 0..self.n {
            for v in BitIter(flow_out[u]) {
                if v > u && flow_out[v] >> u & 1 == 1 {
                    flow_out[u] &= !(1 << v);
                    flow_out[v] &= !(1 << u);
                }
            }
        }
        let mut out = Vec::new();
        loop {
            let Some(first) = BitIter(flow_out[self.source]).next() else {
                break;
            };
            flow_out[self.source] &= !(1 << first);
            let mut path = vec![self.source, first];
            let mut cur = first;
            while self.targets >> cur & 1 == 0 {
                let next = BitIter(flow_out[cur]).next().expect("flow conservation");
                flow_out[cur] &= !(1 << next);
                path.push(next);
                cur = next;
            }
            out.push(path);
        }
        out.sort();
        out
    }

    /// Minimum vertex cut after a maximal flow: interior vertices whose
    /// in-half is residual-reachable from the source but whose out-half
    /// is not.
    fn min_cut(&self) -> Vec<usize> {
        let seen = self.net.residual_reachable(self.source_node());
        self.split_arcs
            .iter()
            .filter(|&&(v, _)| seen[2 * v] && !seen[2 * v + 1])
            .map(|&(v, _)| v)
            .collect()
    }
}

/// Maximum number of internally disjoint u-v paths, capped at `limit`.
fn disjoint_path_flow(g: &Graph, u: usize, v: usize, limit: usize) -> (usize, SplitNet) {
    let mut net = SplitNet::build(g, u, 1u64 << v, limit as u32);
    let value = net.run(limit);
    (value, net)
}

/// Vertex connectivity. Complete graphs give n-1; disconnected graphs 0.
pub fn vertex_connectivity(g: &Graph) -> usize {
    let n = g.n();
    if n <= 1 {
        return 0;
    }
    if g.is_complete() {
        return n - 1;
    }
    if !g.is_connected() {
        return 0;
    }
    // fix a minimum-degree vertex; flows to all its non-neighbors, plus
    // flows between non-adjacent pairs of its neighbors, cover every
    // minimum separator
    let v = (0..n).min_by_key(|&v| g.degree(v)).unwrap();
    let mut best = g.degree(v);
    for u in 0..n {
        if u != v && !g.has_edge(u, v) {
            let (flow, _) = disjoint_path_flow(g, v, u, best);
            best = best.min(flow);
        }
    }
    let nbrs: Vec<usize> = g.neighbors(v).collect();
    for (i, &a) in nbrs.iter().enumerate() {
        for &b in &nbrs[i + 1..] {
            if !g.has_edge(a, b) {
                let (flow, _) = disjoint_path_flow(g, a, b, best);
                best = best.min(flow);
            }
        }
    }
    best
}

pub fn is_k_connected(g: &Graph, k: usize) -> bool {
    if k == 0 {
        return g.n() >= 1;
    }
    if g.n() < k + 1 || g.min_degree() < k {
        return false;
    }
    vertex_connectivity(g) >= k
}

/// Either `k` internally disjoint u-v paths, or (for non-adjacent u,v) a
/// separating set of size < k as the refusal certificate.
#[derive(Debug, Clone)]
pub enum MengerOutcome {
    Paths(Vec<Path>),
    Separator(Vec<usize>),
}

pub fn menger_paths(g: &Graph, u: usize, v: usize, k: usize) -> Result<MengerOutcome, Error> {
    if u == v {
        return Err(Error::InvalidArgument("menger endpoints must differ".into()));
    }
    if u >= g.n() || v >= g.n() {
        return Err(Error::VertexOutOfRange { vertex: u.max(v), n: g.n() });
    }
    let (value, net) = disjoint_path_flow(g, u, v, k);
    if value >= k {
        let paths = net
            .decompose()
            .into_iter()
            .take(k)
            .map(|seq| Path::new(g, &seq))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(MengerOutcome::Paths(paths))
    } else if g.has_edge(u, v) {
        // adjacent endpoints admit no separating set, so refusal has no
        // certificate to offer
        Err(Error::Precondition(format!(
            "only {value} internally disjoint paths between adjacent {u} and {v}; no vertex cut exists"
        )))
    } else {
        Ok(MengerOutcome::Separator(net.min_cut()))
    }
}

/// Fan lemma witness: `k` v-S internally disjoint paths with distinct ends
/// in S, no internal vertex in S, pairwise meeting only at v.
pub fn fan(g: &Graph, v: usize, targets: &[usize], k: usize) -> Result<PathSystem, Error> {
    let s_mask = mask_of(targets);
    if s_mask >> v & 1 == 1 {
        return Err(Error::Precondition(format!("fan source {v} lies in target set")));
    }
    if targets.len() < k {
        return Err(Error::Precondition(format!(
            "fan needs |S| >= k, got |S|={} k={k}",
            targets.len()
        )));
    }
    if !is_k_connected(g, k) {
        return Err(Error::Precondition(format!("graph is not {k}-connected")));
    }
    let mut net = SplitNet::build(g, v, s_mask, 1);
    let value = net.run(k);
    if value < k {
        return Err(Error::Internal(format!(
            "fan flow found only {value} < {k} paths in a {k}-connected graph"
        )));
    }
    let paths = net
        .decompose()
        .into_iter()
        .map(|seq| Path::new(g, &seq))
        .collect::<Result<Vec<_>, _>>()?;
    let system = PathSystem {
        source: v,
        targets: s_mask,
        paths,
    };
    system.validate(g)?;
    Ok(system)
}

/// True iff removing S leaves at least two components. Removing everything
/// (empty remainder) does not separate; S = V(G) is rejected.
pub fn is_separator(g: &Graph, s: &[usize]) -> Result<bool, Error> {
    let s_mask = mask_of(s);
    for &v in s {
        if v >= g.n() {
            return Err(Error::VertexOutOfRange { vertex: v, n: g.n() });
        }
    }
    if s_mask == g.full_mask() {
        return Err(Error::InvalidArgument("separator candidate equals V(G)".into()));
    }
    let (rest, _) = g.remove_mask(s_mask)?;
    Ok(rest.components().len() >= 2)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Graph;
    use crate::generate::{named, random_k_connected, Family};

    /// Brute-force connectivity oracle: size of the smallest vertex subset
    /// whose removal disconnects the graph; n-1 when none exists.
    pub fn connectivity_oracle(g: &Graph) -> usize {
        let n = g.n();
        if n <= 1 {
            return 0;
        }
        for size in 0..n - 1 {
            let mut found = false;
            fn rec(g: &Graph, choose: &mut Vec<usize>, left: usize, start: usize, found: &mut bool) {
                if *found {
                    return;
                }
                if left == 0 {
                    if is_separator(g, choose).unwrap_or(false) {
                        *found = true;
                    }
                    return;
                }
                for v in start..g.n() {
                    choose.push(v);
                    rec(g, choose, left - 1, v + 1, found);
                    choose.pop();
                }
            }
            rec(g, &mut Vec::new(), size, 0, &mut found);
            if found {
                return size;
            }
        }
        n - 1
    }

    #[test]
    fn connectivity_of_named_graphs() {
        assert_eq!(vertex_connectivity(&named(Family::Complete, &[5]).unwrap()), 4);
        assert_eq!(vertex_connectivity(&named(Family::Cycle, &[6]).unwrap()), 2);
        assert_eq!(vertex_connectivity(&named(Family::Petersen, &[]).unwrap()), 3);
        assert_eq!(vertex_connectivity(&named(Family::Path, &[5]).unwrap()), 1);
        assert_eq!(vertex_connectivity(&named(Family::Hypercube, &[3]).unwrap()), 3);
        let mut disc = Graph::new(4).unwrap();
        disc.add_edge(0, 1).unwrap();
        assert_eq!(vertex_connectivity(&disc), 0);
    }

    #[test]
    fn is_k_connected_basics() {
        let c6 = named(Family::Cycle, &[6]).unwrap();
        assert!(is_k_connected(&c6, 2));
        assert!(!is_k_connected(&c6, 3));
        assert!(is_k_connected(&c6, 0));
        let p = named(Family::Petersen, &[]).unwrap();
        assert!(is_k_connected(&p, 3));
        assert!(!is_k_connected(&p, 4));
    }

    #[test]
    fn flow_connectivity_matches_brute_force_small() {
        for seed in 0..30u64 {
            let n = 5 + (seed % 4) as usize;
            let g = random_k_connected(n, 1 + (seed % 3) as usize, seed).unwrap();
            assert_eq!(
                vertex_connectivity(&g),
                connectivity_oracle(&g),
                "mismatch on seed {seed}: {g:?}"
            );
        }
    }

    #[test]
    fn menger_on_k4() {
        let k4 = named(Family::Complete, &[4]).unwrap();
        match menger_paths(&k4, 0, 1, 3).unwrap() {
            MengerOutcome::Paths(paths) => {
                assert_eq!(paths.len(), 3);
                let mut interiors = 0u64;
                for p in &paths {
                    assert_eq!(p.first(), 0);
                    assert_eq!(p.last(), 1);
                    let interior = p.mask() & !0b11;
                    assert_eq!(interior & interiors, 0);
                    interiors |= interior;
                }
            }
            other => panic!("expected paths, got {other:?}"),
        }
    }

    #[test]
    fn menger_antipodal_on_c6() {
        let c6 = named(Family::Cycle, &[6]).unwrap();
        match menger_paths(&c6, 0, 3, 2).unwrap() {
            MengerOutcome::Paths(paths) => {
                assert_eq!(paths.len(), 2);
                let masks: Vec<u64> = paths.iter().map(|p| p.mask()).collect();
                assert_eq!(masks[0] & masks[1], 0b1001); // only the endpoints
            }
            other => panic!("expected paths, got {other:?}"),
        }
    }

    #[test]
    fn menger_refusal_is_a_separator() {
        let c6 = named(Family::Cycle, &[6]).unwrap();
        match menger_paths(&c6, 0, 3, 3).unwrap() {
            MengerOutcome::Separator(cut) => {
                assert!(cut.len() < 3);
                assert!(is_separator(&c6, &cut).unwrap());
            }
            other => panic!("expected separator, got {other:?}"),
        }
        assert!(menger_paths(&c6, 2, 2, 1).is_err());
    }

    #[test]
    fn menger_petersen_nonadjacent() {
        let p = named(Family::Petersen, &[]).unwrap();
        match menger_paths(&p, 0, 2, 3).unwrap() {
            MengerOutcome::Paths(paths) => assert_eq!(paths.len(), 3),
            other => panic!("expected paths, got {other:?}"),
        }
    }

    #[test]
    fn fan_on_k4_and_c6() {
        let k4 = named(Family::Complete, &[4]).unwrap();
        let f = fan(&k4, 0, &[1, 2, 3], 3).unwrap();
        assert_eq!(f.paths.len(), 3);
        assert!(f.paths.iter().all(|p| p.len() == 1));

        let c6 = named(Family::Cycle, &[6]).unwrap();
        let f = fan(&c6, 0, &[2, 3, 4], 2).unwrap();
        assert_eq!(f.paths.len(), 2);
        f.validate(&c6).unwrap();
        let mut ends: Vec<usize> = f.paths.iter().map(|p| p.last()).collect();
        ends.sort_unstable();
        assert_eq!(ends, vec![2, 4]); // first touch of S in each direction
    }

    #[test]
    fn fan_on_petersen_nine_cycle() {
        let p = named(Family::Petersen, &[]).unwrap();
        // vertex 9's complement of any 9-cycle; use targets = everything else
        let targets: Vec<usize> = (0..9).collect();
        let f = fan(&p, 9, &targets, 3).unwrap();
        assert_eq!(f.paths.len(), 3);
        f.validate(&p).unwrap();
    }

    #[test]
    fn fan_precondition_failures_name_the_condition() {
        let c6 = named(Family::Cycle, &[6]).unwrap();
        assert!(matches!(fan(&c6, 2, &[2, 3, 4], 2), Err(Error::Precondition(_))));
        assert!(matches!(fan(&c6, 0, &[2], 2), Err(Error::Precondition(_))));
        assert!(matches!(fan(&c6, 0, &[2, 3, 4], 3), Err(Error::Precondition(_))));
    }

    #[test]
    fn separator_checks() {
        let c6 = named(Family::Cycle, &[6]).unwrap();
        assert!(is_separator(&c6, &[0, 3]).unwrap());
        assert!(!is_separator(&c6, &[0]).unwrap());
        let k5 = named(Family::Complete, &[5]).unwrap();
        assert!(!is_separator(&k5, &[0, 1, 2]).unwrap());
        assert!(is_separator(&k5, &[0, 1, 2, 3, 4]).is_err());
        let p = named(Family::Petersen, &[]).unwrap();
        // the three neighbors of vertex 0 separate it from the rest
        let nbrs: Vec<usize> = p.neighbors(0).collect();
        assert!(is_separator(&p, &nbrs).unwrap());
    }

    #[test]
    fn connectivity_never_exceeds_min_degree() {
        for seed in 0..20u64 {
            let g = random_k_connected(9, 2, seed).unwrap();
            assert!(vertex_connectivity(&g) <= g.min_degree());
        }
    }
}
