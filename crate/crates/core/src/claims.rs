//! Materializes the structural machinery behind the 8k-n-16 intersection
//! bound on concrete instances: the short off-cycle anchor path, the two
//! fans into the host cycle, the weighted auxiliary cycle on the fan
//! endpoints with its two-sided coloring, and the rewiring arguments. Each
//! structural claim is re-evaluated from raw quantities and reported as
//! holds / violated / not-applicable.

use crate::connectivity::{fan, PathSystem};
use crate::error::Error;
use crate::graph::{mask_of, BitIter, Cycle, Graph, Path};
use crate::solve::best_cycle_length;
use serde::Serialize;

/// Which side of the instance hosts the anchor path.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Side {
    /// the anchor lives in a component of G minus the first cycle
    OffFirst,
    /// the anchor lives in a component of G minus the second cycle
    OffSecond,
}

/// The anchor: a longest path of length at most two in a component off one
/// of the two cycles, chosen to maximize edge overlap with the other cycle.
#[derive(Debug, Clone)]
pub struct AnchorSelection {
    pub path: Path,
    pub side: Side,
    /// ends of the path (equal for a single vertex)
    pub ends: (usize, usize),
    /// |E(anchor) ∩ E(other cycle)|
    pub overlap_score: usize,
}

impl AnchorSelection {
    /// anchor length in edges (0 for a single vertex)
    pub fn len(&self) -> usize {
        self.path.len()
    }
}

/// All paths of length <= 2 inside one component, as vertex sequences.
fn short_paths_in_component(g: &Graph, comp: &[usize]) -> Vec<Vec<usize>> {
    let comp_mask = mask_of(comp);
    let mut out: Vec<Vec<usize>> = comp.iter().map(|&v| vec![v]).collect();
    for &u in comp {
        for v in BitIter(g.neighbors_mask(u) & comp_mask) {
            if v > u {
                out.push(vec![u, v]);
            }
            for w in BitIter(g.neighbors_mask(v) & comp_mask) {
                if w > u && w != v && !(g.has_edge(u, w) && w < v) {
                    // mid-vertex v, ends u < w; no dedup subtleties needed,
                    // distinct middle vertices give distinct paths
                    out.push(vec![u, v, w]);
                }
            }
        }
    }
    // drop accidental duplicates and invalid triples (u-v-w needs u != w)
    out.retain(|p| p.len() != 3 || p[0] != p[2]);
    out.sort();
    out.dedup();
    out
}

/// Chooses the anchor path for a pair of longest cycles. Not applicable when
/// both cycles cover all of V(G).
pub fn choose_anchor(g: &Graph, c: &Cycle, d: &Cycle) -> Result<Option<AnchorSelection>, Error> {
    let mut candidates: Vec<(usize, usize, Vec<usize>, Side)> = Vec::new();
    for (side, host, other) in [(Side::OffFirst, c, d), (Side::OffSecond, d, c)] {
        let off = g.full_mask() & !host.mask();
        if off == 0 {
            continue;
        }
        let other_edges = other.edge_set();
        let mut unseen = off;
        while unseen != 0 {
            let v = unseen.trailing_zeros() as usize;
            let comp_mask = g.reachable_within(v, unseen);
            unseen &= !comp_mask;
            let comp: Vec<usize> = BitIter(comp_mask).collect();
            for p in short_paths_in_component(g, &comp) {
                let score = p
                    .windows(2)
                    .filter(|w| other_edges.contains(&(w[0].min(w[1]), w[0].max(w[1]))))
                    .count();
                candidates.push((p.len() - 1, score, p, side));
            }
        }
    }
    if candidates.is_empty() {
        return Ok(None);
    }
    // longest first (capped at 2 by construction), then best overlap,
    // then lexicographically smallest sequence, preferring the first side
    candidates.sort_by(|a, b| {
        b.0.cmp(&a.0)
            .then(b.1.cmp(&a.1))
            .then(a.2.cmp(&b.2))
            .then((a.3 == Side::OffSecond).cmp(&(b.3 == Side::OffSecond)))
    });
    let (_, score, seq, side) = candidates.into_iter().next().unwrap();
    let path = Path::new(g, &seq)?;
    let ends = (path.first(), path.last());
    Ok(Some(AnchorSelection {
        path,
        side,
        ends,
        overlap_score: score,
    }))
}

/// The two fans from the anchor's ends into the host cycle, filtered so no
/// fan path touches the anchor's interior-or-far-end vertices.
#[derive(Debug, Clone)]
pub struct FanPair {
    pub from_first_end: PathSystem,
    pub from_second_end: PathSystem,
    /// endpoint set of both fans on the host cycle
    pub endpoint_set: u64,
    pub discarded_first: usize,
    pub discarded_second: usize,
}

/// Builds the filtered fans for an anchor off the host cycle.
pub fn build_fans(g: &Graph, host: &Cycle, sel: &AnchorSelection, k: usize) -> Result<FanPair, Error> {
    let cycle_verts: Vec<usize> = BitIter(host.mask()).collect();
    let anchor_mask = sel.path.mask();
    let (p, r) = sel.ends;
    let mut fans = Vec::with_capacity(2);
    let mut discards = [0usize; 2];
    for (i, src) in [p, r].into_iter().enumerate() {
        let full = fan(g, src, &cycle_verts, k)?;
        let forbidden = anchor_mask & !(1 << src);
        let kept: Vec<Path> = full
            .paths
            .into_iter()
            .filter(|path| path.mask() & forbidden == 0)
            .collect();
        discards[i] = k - kept.len();
        if kept.len() + sel.len() < k {
            return Err(Error::Internal(format!(
                "fan filtering discarded {} > |anchor| = {} paths",
                k - kept.len(),
                sel.len()
            )));
        }
        fans.push(PathSystem {
            source: src,
            targets: full.targets,
            paths: kept,
        });
    }
    let from_second_end = fans.pop().unwrap();
    let from_first_end = fans.pop().unwrap();
    let endpoint_set = from_first_end
        .paths
        .iter()
        .chain(from_second_end.paths.iter())
        .fold(0u64, |m, path| m | 1 << path.last());
    for f in [&from_first_end, &from_second_end] {
        f.validate(g)?;
    }
    Ok(FanPair {
        from_first_end,
        from_second_end,
        endpoint_set,
        discarded_first: discards[0],
        discarded_second: discards[1],
    })
}

/// One arc of the auxiliary cycle: the stretch of the host cycle between two
/// consecutive fan endpoints, measured in host-cycle edges.
#[derive(Debug, Clone, Copy, Serialize)]
pub struct AuxArc {
    pub from: usize,
    pub to: usize,
    pub weight: usize,
    pub bicolored: bool,
}

/// The weighted auxiliary cycle on the fan endpoints, with the two-sided
/// coloring and coverage flags.
#[derive(Debug, Clone)]
pub struct AuxCycle {
    /// fan endpoints in host-cycle order
    pub nodes: Vec<usize>,
    pub arcs: Vec<AuxArc>,
    /// nodes reached by the first fan
    pub colored_first: u64,
    /// nodes reached by the second fan
    pub colored_second: u64,
}

impl AuxCycle {
    pub fn bicolored_nodes(&self) -> u64 {
        self.colored_first & self.colored_second
    }

    pub fn total_weight(&self) -> usize {
        self.arcs.iter().map(|a| a.weight).sum()
    }

    pub fn bicolored_arc_count(&self) -> usize {
        self.arcs.iter().filter(|a| a.bicolored).count()
    }
}

/// Builds the auxiliary cycle for a host cycle and its fan pair. Degenerate
/// with fewer than two endpoints.
pub fn build_aux(host: &Cycle, fp: &FanPair) -> Result<Option<AuxCycle>, Error> {
    let f = fp.endpoint_set;
    if f.count_ones() < 2 {
        return Ok(None);
    }
    if f & !host.mask() != 0 {
        return Err(Error::Internal("fan endpoint off the host cycle".into()));
    }
    let order = host.vertices();
    let positions: Vec<usize> = (0..order.len()).filter(|&i| f >> order[i] & 1 == 1).collect();
    let colored_first = fp
        .from_first_end
        .paths
        .iter()
        .fold(0u64, |m, p| m | 1 << p.last());
    let colored_second = fp
        .from_second_end
        .paths
        .iter()
        .fold(0u64, |m, p| m | 1 << p.last());
    let bicolored = colored_first & colored_second;
    let nodes: Vec<usize> = positions.iter().map(|&i| order[i]).collect();
    let mut arcs = Vec::with_capacity(positions.len());
    for idx in 0..positions.len() {
        let i = positions[idx];
        let j = positions[(idx + 1) % positions.len()];
        let from = order[i];
        let to = order[j];
        let weight = if j > i { j - i } else { order.len() - i + j };
        arcs.push(AuxArc {
            from,
            to,
            weight,
            bicolored: bicolored >> from & 1 == 1 || bicolored >> to & 1 == 1,
        });
    }
    Ok(Some(AuxCycle {
        nodes,
        arcs,
        colored_first,
        colored_second,
    }))
}

/// Splices replacement paths in place of one arc of a cycle. The
/// replacement paths must chain from the arc's first node to its second;
/// the result must be a simple cycle of the graph.
pub fn rewire(
    g: &Graph,
    host: &Cycle,
    arc: (usize, usize),
    replacement: &[Vec<usize>],
) -> Result<Cycle, Error> {
    let (u, v) = arc;
    let order = host.vertices();
    let len = order.len();
    let iu = order
        .iter()
        .position(|&x| x == u)
        .ok_or_else(|| Error::Precondition(format!("arc end {u} not on cycle")))?;
    let iv = order
        .iter()
        .position(|&x| x == v)
        .ok_or_else(|| Error::Precondition(format!("arc end {v} not on cycle")))?;
    // chain the replacement into a u -> v walk
    let mut chain: Vec<usize> = vec![u];
    for seg in replacement {
        if seg.is_empty() {
            return Err(Error::Precondition("empty replacement segment".into()));
        }
        let cur = *chain.last().unwrap();
        let seg: Vec<usize> = if seg[0] == cur {
            seg.clone()
        } else if *seg.last().unwrap() == cur {
            let mut s = seg.clone();
            s.reverse();
            s
        } else {
            return Err(Error::Precondition(format!(
                "replacement segment {seg:?} does not attach at {cur}"
            )));
        };
        chain.extend_from_slice(&seg[1..]);
    }
    if *chain.last().unwrap() != v {
        return Err(Error::Precondition(format!(
            "replacement chain ends at {} not {v}",
            chain.last().unwrap()
        )));
    }
    // host cycle minus the arc interior: walk v .. u the long way
    let mut result = chain;
    let mut i = (iv + 1) % len;
    loop {
        if i == iu {
            break;
        }
        result.push(order[i]);
        i = (i + 1) % len;
    }
    // validate: distinct vertices, then adjacency via Cycle::new
    let mut seen = 0u64;
    for &x in &result {
        if seen >> x & 1 == 1 {
            return Err(Error::Precondition(format!(
                "rewired walk revisits vertex {x}"
            )));
        }
        seen |= 1 << x;
    }
    Cycle::new(g, &result)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case", tag = "verdict")]
pub enum ClaimVerdict {
    Holds,
    Violated { witness: String },
    NotApplicable { reason: String },
}

impl ClaimVerdict {
    fn check(ok: bool, witness: impl FnOnce() -> String) -> ClaimVerdict {
        if ok {
            ClaimVerdict::Holds
        } else {
            ClaimVerdict::Violated { witness: witness() }
        }
    }

    pub fn is_violated(&self) -> bool {
        matches!(self, ClaimVerdict::Violated { .. })
    }
}

/// Per-instance report over the structural claims for one ordered pair of
/// longest cycles.
#[derive(Debug, Clone, Serialize)]
pub struct ClaimReport {
    /// case label: anchor length and coloring situation
    pub branch: String,
    pub anchor_len: Option<usize>,
    pub intersection_size: usize,
    pub cycle_length: usize,
    /// |C'| >= |F'|: at least as many bicolored arcs as bicolored nodes
    pub arcs_vs_nodes: ClaimVerdict,
    /// every monocolored arc weighs >= 2; every bicolored arc >= 2+|anchor|
    pub arc_weight_bounds: ClaimVerdict,
    /// |E(aux)| = |fan A| + |fan B| - |bicolored nodes| (endpoint counting)
    pub arc_count_identity: ClaimVerdict,
    /// L >= 4(k-|anchor|) + |anchor|*|C'| - 2|F'|
    pub length_lower_bound: ClaimVerdict,
    /// L <= 3|X| when every off-component of the second cycle has <= 2 vertices
    pub coverage_inequality: ClaimVerdict,
    /// bicolored nodes lie in the intersection; their arcs weigh >= 3
    pub bicolored_covered: ClaimVerdict,
    /// |C'| = |F'| (with |F'| > 0, unit anchor) forces |X| >= k
    pub equal_case_bound: ClaimVerdict,
    /// |X| >= 2L - n by inclusion-exclusion
    pub inclusion_exclusion: ClaimVerdict,
    /// every mechanically rewired cycle validated with length <= L
    pub rewired_cycles_checked: usize,
    pub rewired_cycles_ok: ClaimVerdict,
}

impl ClaimReport {
    pub fn any_violation(&self) -> bool {
        [
            &self.arcs_vs_nodes,
            &self.arc_weight_bounds,
            &self.arc_count_identity,
            &self.length_lower_bound,
            &self.coverage_inequality,
            &self.bicolored_covered,
            &self.equal_case_bound,
            &self.inclusion_exclusion,
            &self.rewired_cycles_ok,
        ]
        .iter()
        .any(|v| v.is_violated())
    }

    fn not_applicable(reason: &str, intersection: usize, cycle_length: usize) -> ClaimReport {
        let na = || ClaimVerdict::NotApplicable {
            reason: reason.to_string(),
        };
        ClaimReport {
            branch: format!("not-applicable: {reason}"),
            anchor_len: None,
            intersection_size: intersection,
            cycle_length,
            arcs_vs_nodes: na(),
            arc_weight_bounds: na(),
            arc_count_identity: na(),
            length_lower_bound: na(),
            coverage_inequality: na(),
            bicolored_covered: na(),
            equal_case_bound: na(),
            inclusion_exclusion: ClaimVerdict::Holds, // checked below regardless
            rewired_cycles_checked: 0,
            rewired_cycles_ok: na(),
        }
    }
}

/// Runs the whole pipeline (anchor, fans, auxiliary cycle, claims) on one
/// pair of longest cycles of a k-connected graph.
pub fn verify_claims(g: &Graph, c: &Cycle, d: &Cycle, k: usize) -> Result<ClaimReport, Error> {
    let circumference = best_cycle_length(g);
    for cyc in [c, d] {
        Cycle::new(g, cyc.vertices())?;
        if cyc.len() != circumference {
            return Err(Error::Precondition(format!(
                "cycle of length {} is not longest (circumference {circumference})",
                cyc.len()
            )));
        }
    }
    let intersection = (c.mask() & d.mask()).count_ones() as usize;
    let cycle_length = circumference;
    let incl_excl_ok = 2 * cycle_length <= g.n() + intersection;

    if c == d {
        let mut r = ClaimReport::not_applicable("identical cycles", intersection, cycle_length);
        r.inclusion_exclusion = ClaimVerdict::check(incl_excl_ok, || {
            format!("|X|={intersection} < 2L-n = {}", 2 * cycle_length as i64 - g.n() as i64)
        });
        return Ok(r);
    }

    let Some(sel) = choose_anchor(g, c, d)? else {
        let mut r = ClaimReport::not_applicable(
            "both cycles span all vertices",
            intersection,
            cycle_length,
        );
        r.inclusion_exclusion = ClaimVerdict::check(incl_excl_ok, || {
            format!("|X|={intersection} < 2L-n = {}", 2 * cycle_length as i64 - g.n() as i64)
        });
        return Ok(r);
    };

    // orient the machinery so the anchor is off the "host" cycle and the
    // "other" cycle plays the covering role
    let (host, other) = match sel.side {
        Side::OffFirst => (c, d),
        Side::OffSecond => (d, c),
    };
    let anchor_len = sel.len();
    let fp = build_fans(g, host, &sel, k)?;
    let aux = build_aux(host, &fp)?;

    let Some(aux) = aux else {
        let mut r = ClaimReport::not_applicable(
            "degenerate auxiliary cycle (fewer than two fan endpoints)",
            intersection,
            cycle_length,
        );
        r.anchor_len = Some(anchor_len);
        r.inclusion_exclusion = ClaimVerdict::check(incl_excl_ok, || {
            format!("|X|={intersection} < 2L-n = {}", 2 * cycle_length as i64 - g.n() as i64)
        });
        return Ok(r);
    };

    let bicolored_nodes = aux.bicolored_nodes().count_ones() as usize;
    let bicolored_arcs = aux.bicolored_arc_count();
    let fan_a = fp.from_first_end.paths.len();
    let fan_b = fp.from_second_end.paths.len();
    let x_mask = c.mask() & d.mask();

    let branch = format!(
        "anchor_len={anchor_len}, bicolored_nodes={bicolored_nodes}, side={:?}",
        sel.side
    );

    // |C'| >= |F'|
    let arcs_vs_nodes = ClaimVerdict::check(bicolored_arcs >= bicolored_nodes, || {
        format!("bicolored arcs {bicolored_arcs} < bicolored nodes {bicolored_nodes}")
    });

    // total weight sanity is an internal invariant, not a claim
    if aux.total_weight() != cycle_length {
        return Err(Error::Internal(format!(
            "aux cycle weight {} != cycle length {cycle_length}",
            aux.total_weight()
        )));
    }

    // arc weight bounds, with mechanical rewiring wherever the replacement
    // construction is well defined
    let mut weight_ok = true;
    let mut weight_witness = String::new();
    for arc in &aux.arcs {
        let required = if arc.bicolored { 2 + anchor_len } else { 2 };
        if arc.weight < required {
            weight_ok = false;
            weight_witness = format!(
                "arc {}-{} weight {} < {required} (bicolored={})",
                arc.from, arc.to, arc.weight, arc.bicolored
            );
            break;
        }
    }
    let arc_weight_bounds = ClaimVerdict::check(weight_ok, || weight_witness.clone());

    let mut rewired_checked = 0usize;
    let mut rewire_ok = true;
    let mut rewire_witness = String::new();
    for arc in &aux.arcs {
        match rewire_for_arc(g, host, &sel, &fp, arc) {
            Ok(Some(cycle)) => {
                rewired_checked += 1;
                if cycle.len() > cycle_length {
                    rewire_ok = false;
                    rewire_witness = format!(
                        "rewired cycle at arc {}-{} has length {} > {cycle_length}",
                        arc.from,
                        arc.to,
                        cycle.len()
                    );
                    break;
                }
            }
            Ok(None) => {}
            Err(e) => {
                rewire_ok = false;
                rewire_witness = format!("rewire failed at arc {}-{}: {e}", arc.from, arc.to);
                break;
            }
        }
    }
    let rewired_cycles_ok = if rewired_checked == 0 && rewire_ok {
        ClaimVerdict::NotApplicable {
            reason: "no well-defined rewiring on this instance".into(),
        }
    } else {
        ClaimVerdict::check(rewire_ok, || rewire_witness.clone())
    };

    // |E(aux)| = |A| + |B| - |F'| via endpoint counting
    let arc_count_identity = ClaimVerdict::check(
        aux.arcs.len() == fan_a + fan_b - bicolored_nodes
            && aux.arcs.len() == aux.nodes.len(),
        || {
            format!(
                "arcs {} != |A| {fan_a} + |B| {fan_b} - |F'| {bicolored_nodes}",
                aux.arcs.len()
            )
        },
    );

    // L >= 4(k-|anchor|) + |anchor|*|C'| - 2|F'|
    let lhs = cycle_length as i64;
    let rhs = 4 * (k as i64 - anchor_len as i64) + (anchor_len * bicolored_arcs) as i64
        - 2 * bicolored_nodes as i64;
    let length_lower_bound =
        ClaimVerdict::check(lhs >= rhs, || format!("L={lhs} < bound {rhs}"));

    // L <= 3|X| needs every component off the host cycle, inside the other
    // cycle, to have at most 2 vertices; that follows from anchor_len <= 1
    let coverage_inequality = if anchor_len <= 1 {
        ClaimVerdict::check(cycle_length <= 3 * intersection, || {
            format!("L={cycle_length} > 3|X|={}", 3 * intersection)
        })
    } else {
        ClaimVerdict::NotApplicable {
            reason: "anchor has length 2".into(),
        }
    };

    // bicolored nodes are covered and their arcs weigh >= 3; the argument
    // needs the anchor to be an edge of the other cycle off the host cycle
    let anchor_is_other_edge = anchor_len == 1 && {
        let (a, b) = sel.ends;
        other.has_cycle_edge(a, b) && other.mask() & sel.path.mask() == sel.path.mask()
    };
    let bicolored_covered = if anchor_is_other_edge {
        let mut ok = true;
        let mut witness = String::new();
        for node in BitIter(aux.bicolored_nodes()) {
            if x_mask >> node & 1 == 0 {
                ok = false;
                witness = format!("bicolored node {node} not in the intersection");
                break;
            }
            for arc in &aux.arcs {
                if (arc.from == node || arc.to == node) && arc.weight < 3 {
                    ok = false;
                    witness = format!(
                        "arc {}-{} at bicolored node {node} has weight {}",
                        arc.from, arc.to, arc.weight
                    );
                    break;
                }
            }
            if !ok {
                break;
            }
        }
        if aux.bicolored_nodes() == 0 {
            ClaimVerdict::NotApplicable {
                reason: "no bicolored nodes".into(),
            }
        } else {
            ClaimVerdict::check(ok, || witness.clone())
        }
    } else {
        ClaimVerdict::NotApplicable {
            reason: "anchor is not an off-cycle edge of the other cycle".into(),
        }
    };

    // |C'| = |F'| (nonzero, unit anchor) forces |X| >= k
    let equal_case_bound = if anchor_is_other_edge && bicolored_nodes > 0 {
        if bicolored_arcs == bicolored_nodes {
            ClaimVerdict::check(intersection >= k, || {
                format!("|C'|=|F'|={bicolored_nodes} but |X|={intersection} < k={k}")
            })
        } else {
            ClaimVerdict::NotApplicable {
                reason: "|C'| != |F'|".into(),
            }
        }
    } else {
        ClaimVerdict::NotApplicable {
            reason: "preconditions (unit anchor on other cycle, |F'|>0) unmet".into(),
        }
    };

    let inclusion_exclusion = ClaimVerdict::check(incl_excl_ok, || {
        format!(
            "|X|={intersection} < 2L-n = {}",
            2 * cycle_length as i64 - g.n() as i64
        )
    });

    Ok(ClaimReport {
        branch,
        anchor_len: Some(anchor_len),
        intersection_size: intersection,
        cycle_length,
        arcs_vs_nodes,
        arc_weight_bounds,
        arc_count_identity,
        length_lower_bound,
        coverage_inequality,
        bicolored_covered,
        equal_case_bound,
        inclusion_exclusion,
        rewired_cycles_checked: rewired_checked,
        rewired_cycles_ok,
    })
}

/// Finds the fan path of a system ending at a given cycle node.
fn fan_path_to<'a>(sys: &'a PathSystem, end: usize) -> Option<&'a Path> {
    sys.paths.iter().find(|p| p.last() == end)
}

/// Builds the replacement chain for one arc following the case analysis of
/// the weight-bound argument, and splices it in. Returns Ok(None) when the
/// case analysis offers no construction for this arc's coloring.
fn rewire_for_arc(
    g: &Graph,
    host: &Cycle,
    sel: &AnchorSelection,
    fp: &FanPair,
    arc: &AuxArc,
) -> Result<Option<Cycle>, Error> {
    let (u, v) = (arc.from, arc.to);
    let a_u = fan_path_to(&fp.from_first_end, u);
    let a_v = fan_path_to(&fp.from_first_end, v);
    let b_u = fan_path_to(&fp.from_second_end, u);
    let b_v = fan_path_to(&fp.from_second_end, v);
    let anchor = &sel.path;

    // same-side pair: splice u -> source -> v through one fan
    let same_side = |pu: &Path, pv: &Path| -> Option<Vec<Vec<usize>>> {
        // fan paths meet only at the source, so the chain is simple
        Some(vec![pu.vertices().to_vec(), pv.vertices().to_vec()])
    };
    // cross pair through the anchor: u -> p .. anchor .. r -> v
    let cross = |pu: &Path, qv: &Path| -> Option<Vec<Vec<usize>>> {
        if pu.mask() & qv.mask() != 0 {
            return None; // shared interior: handled by the subpath variant
        }
        Some(vec![
            pu.vertices().to_vec(),
            anchor.vertices().to_vec(),
            qv.vertices().to_vec(),
        ])
    };
    // cross pair with shared vertices: shortcut through the first shared
    // vertex x seen from qv's far end
    let cross_shared = |pu: &Path, qv: &Path| -> Option<Vec<Vec<usize>>> {
        let shared = pu.mask() & qv.mask();
        if shared == 0 {
            return None;
        }
        // walk qv from v backwards; first vertex in pu
        let mut qv_rev = qv.vertices().to_vec();
        qv_rev.reverse(); // v .. r
        let x = *qv_rev.iter().find(|&&x| pu.mask() >> x & 1 == 1)?;
        let pu_part = pu.subpath(u, x)?; // u .. x
        let pos = qv_rev.iter().position(|&y| y == x).unwrap();
        let qv_part: Vec<usize> = qv_rev[..=pos].iter().rev().cloned().collect(); // x .. v
        Some(vec![pu_part, qv_part])
    };

    let chain: Option<Vec<Vec<usize>>> = match (a_u, b_u, a_v, b_v) {
        // u and v both reached by the first fan
        (Some(pu), _, Some(pv), _) if sel.len() == 0 || (b_u.is_none() && b_v.is_none()) => {
            same_side(pu, pv)
        }
        // both reached by the second fan only
        (None, Some(qu), None, Some(qv)) => same_side(qu, qv),
        // u first-fan only, v second-fan (possibly bicolored)
        (Some(pu), None, _, Some(qv)) => cross(pu, qv).or_else(|| cross_shared(pu, qv)),
        // u second-fan only, v first-fan
        (None, Some(qu), Some(pv), None) => cross(pv, qu).or_else(|| cross_shared(pv, qu)),
        (None, Some(qu), Some(pv), Some(_)) => cross(pv, qu).or_else(|| cross_shared(pv, qu)),
        _ => None,
    };
    let Some(chain) = chain else { return Ok(None) };
    // reject chains that collide with the rest of the host cycle; those
    // correspond to cases the argument resolves differently, so skip them
    let arc_interior = arc_interior_mask(host, u, v);
    let rest_of_cycle = host.mask() & !arc_interior & !(1 << u) & !(1 << v);
    let chain_mask = chain
        .iter()
        .flat_map(|seg| seg.iter())
        .fold(0u64, |m, &x| m | 1 << x);
    if chain_mask & rest_of_cycle != 0 {
        return Ok(None);
    }
    match rewire(g, host, (u, v), &chain) {
        Ok(cycle) => Ok(Some(cycle)),
        Err(Error::Precondition(_)) => Ok(None),
        Err(e) => Err(e),
    }
}

/// Vertices strictly inside the host-cycle arc from u forward to v.
fn arc_interior_mask(host: &Cycle, u: usize, v: usize) -> u64 {
    let order = host.vertices();
    let len = order.len();
    let iu = order.iter().position(|&x| x == u).unwrap();
    let mut mask = 0u64;
    let mut i = (iu + 1) % len;
    while order[i] != v {
        mask |= 1 << order[i];
        i = (i + 1) % len;
    }
    mask
}
