//! Pairwise intersection minima over the full optimum sets, the intersection
//! lower-bound functions, and the conjecture predicates built on them.

use crate::connectivity::is_separator;
use crate::error::Error;
use crate::graph::{Cycle, Graph};
use crate::solve::{best_cycle_length, enumerate_longest, Kind, SolveResult};
use serde::Serialize;

/// Lower bound on pairwise longest-cycle intersection: max(0, min(k, 8k-n-16)).
pub fn bound_cycles(n: usize, k: usize) -> Result<usize, Error> {
    if k < 2 || k + 1 > n {
        return Err(Error::InvalidArgument(format!(
            "cycle bound needs 2 <= k <= n-1, got n={n} k={k}"
        )));
    }
    Ok(raw_bound_cycles(n, k).max(0) as usize)
}

/// Unclamped value, for reporting.
pub fn raw_bound_cycles(n: usize, k: usize) -> i64 {
    (k as i64).min(8 * k as i64 - n as i64 - 16)
}

/// Lower bound on pairwise longest-path intersection: max(0, min(k, 8k-n-9)).
pub fn bound_paths(n: usize, k: usize) -> Result<usize, Error> {
    if k < 1 || k + 1 > n {
        return Err(Error::InvalidArgument(format!(
            "path bound needs 1 <= k <= n-1, got n={n} k={k}"
        )));
    }
    Ok(raw_bound_paths(n, k).max(0) as usize)
}

pub fn raw_bound_paths(n: usize, k: usize) -> i64 {
    (k as i64).min(8 * k as i64 - n as i64 - 9)
}

/// The coefficient in the general cycle-intersection lower bound
/// c * k^(3/5), with c = (256^(1/3) + 3)^(-3/5), approximately 0.2615.
pub fn chen_coefficient() -> f64 {
    (256f64.cbrt() + 3.0).powf(-3.0 / 5.0)
}

pub fn chen_bound(k: usize) -> f64 {
    chen_coefficient() * (k as f64).powf(3.0 / 5.0)
}

/// Minimum pairwise vertex intersection over the optimum set of one kind.
#[derive(Debug, Clone, Serialize)]
pub struct PairStats {
    pub kind: Kind,
    pub optimum_length: usize,
    pub optimum_count: usize,
    /// minimum |V(A) ∩ V(B)| over unordered pairs, identical pairs included
    pub min_intersection: usize,
    /// the same minimum over distinct pairs only; absent for a unique optimum
    pub min_intersection_distinct: Option<usize>,
    pub includes_identical_pairs: bool,
    /// a pair of canonical witnesses attaining the minimum
    pub witness_pair: (Vec<usize>, Vec<usize>),
    /// truncated enumeration: the minima are upper bounds, not exact
    pub truncated: bool,
}

/// Computes pair statistics from an already-enumerated optimum set.
pub fn pair_stats_from(result: &SolveResult) -> Result<PairStats, Error> {
    if result.witnesses.is_empty() {
        return Err(Error::Precondition(format!(
            "no optimum of kind {:?} exists",
            result.kind
        )));
    }
    let masks = result.witness_masks();
    // identical pair of any witness
    let mut min_incl = masks[0].count_ones() as usize;
    let mut pair_incl = (0usize, 0usize);
    let mut min_distinct: Option<(usize, (usize, usize))> = None;
    // distinct witnesses can share a vertex set (e.g. two Hamiltonian
    // cycles of K5); such a pair intersects in the full optimum size
    if result.witnesses.len() > masks.len() {
        min_distinct = Some((min_incl, (0, 0)));
    }
    for i in 0..masks.len() {
        for j in i + 1..masks.len() {
            let inter = (masks[i] & masks[j]).count_ones() as usize;
            if min_distinct.map_or(true, |(m, _)| inter < m) {
                min_distinct = Some((inter, (i, j)));
            }
        }
    }
    if let Some((m, pair)) = min_distinct {
        if m < min_incl {
            min_incl = m;
            pair_incl = pair;
        }
    }
    // map mask indices back to first witnesses with those vertex sets
    let witness_for = |mask: u64| {
        result
            .witnesses
            .iter()
            .find(|w| w.iter().fold(0u64, |m, &v| m | 1 << v) == mask)
            .cloned()
            .expect("mask came from witnesses")
    };
    let witness_pair = if min_incl == masks[0].count_ones() as usize && pair_incl == (0, 0) {
        let w = witness_for(masks[0]);
        (w.clone(), w)
    } else {
        (witness_for(masks[pair_incl.0]), witness_for(masks[pair_incl.1]))
    };
    Ok(PairStats {
        kind: result.kind,
        optimum_length: result.best_length,
        optimum_count: result.witnesses.len(),
        min_intersection: min_incl,
        min_intersection_distinct: min_distinct.map(|(m, _)| m),
        includes_identical_pairs: true,
        witness_pair,
        truncated: result.truncated,
    })
}

pub fn pair_stats(g: &Graph, kind: Kind, cap: usize) -> Result<PairStats, Error> {
    let result = enumerate_longest(g, kind, cap)?;
    pair_stats_from(&result)
}

#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
#[serde(rename_all = "kebab-case", tag = "verdict")]
pub enum ConjectureVerdict {
    Holds {
        min_intersection: usize,
        required: usize,
    },
    Violated {
        min_intersection: usize,
        required: usize,
        witness_pair: (Vec<usize>, Vec<usize>),
    },
    /// enumeration truncated with observed minimum still above the target
    Inconclusive {
        observed_min: usize,
        required: usize,
    },
}

/// Does every pair of longest paths/cycles of `g` intersect in >= r vertices?
pub fn check_conjecture(g: &Graph, kind: Kind, r: usize, cap: usize) -> Result<ConjectureVerdict, Error> {
    let stats = pair_stats(g, kind, cap)?;
    Ok(if stats.min_intersection < r {
        // a sub-threshold pair is a counterexample even under truncation
        ConjectureVerdict::Violated {
            min_intersection: stats.min_intersection,
            required: r,
            witness_pair: stats.witness_pair,
        }
    } else if stats.truncated {
        ConjectureVerdict::Inconclusive {
            observed_min: stats.min_intersection,
            required: r,
        }
    } else {
        ConjectureVerdict::Holds {
            min_intersection: stats.min_intersection,
            required: r,
        }
    })
}

#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
#[serde(rename_all = "kebab-case", tag = "verdict")]
pub enum SeparatorVerdict {
    Holds,
    Violated,
    NotApplicable { reason: String },
}

/// Does V(C) ∩ V(D) separate g, for two validated longest cycles?
pub fn check_separator_property(g: &Graph, c: &Cycle, d: &Cycle) -> Result<SeparatorVerdict, Error> {
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
    if c == d {
        return Ok(SeparatorVerdict::NotApplicable {
            reason: "identical cycles".into(),
        });
    }
    if c.mask() == d.mask() {
        // distinct traversals of one vertex set leave nothing private to
        // separate
        return Ok(SeparatorVerdict::NotApplicable {
            reason: "identical vertex sets".into(),
        });
    }
    // the separation results are proved per intersection size s: s in 3..=5
    // needs a 2-connected graph on more than s vertices; s in {6,7} needs
    // circumference above s; other sizes carry no claim
    let s = (c.mask() & d.mask()).count_ones() as usize;
    let applicable = match s {
        3..=5 => crate::connectivity::is_k_connected(g, 2) && g.n() >= s + 1,
        6 | 7 => circumference >= s + 1,
        _ => false,
    };
    if !applicable {
        return Ok(SeparatorVerdict::NotApplicable {
            reason: format!("intersection size {s} outside the proved ranges"),
        });
    }
    let shared: Vec<usize> = crate::graph::BitIter(c.mask() & d.mask()).collect();
    Ok(if is_separator(g, &shared)? {
        SeparatorVerdict::Holds
    } else {
        SeparatorVerdict::Violated
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate::{named, Family};
    use crate::solve::DEFAULT_ENUM_CAP;

    #[test]
    fn bound_arithmetic_from_the_theorem_statements() {
        assert_eq!(bound_cycles(12, 4).unwrap(), 4);
        assert_eq!(bound_cycles(40, 8).unwrap(), 8);
        assert_eq!(bound_cycles(30, 3).unwrap(), 0);
        assert_eq!(raw_bound_cycles(30, 3), -22);
        assert_eq!(bound_paths(19, 4).unwrap(), 4);
        assert_eq!(bound_paths(20, 4).unwrap(), 3);
        assert_eq!(bound_paths(100, 2).unwrap(), 0);
        assert!(bound_cycles(5, 1).is_err());
        assert!(bound_paths(5, 5).is_err());
    }

    #[test]
    fn bounds_saturate_exactly_at_the_thresholds() {
        for n in 3..=200usize {
            for k in 2..n {
                let full = bound_cycles(n, k).unwrap() == k;
                assert_eq!(full, 7 * k >= n + 16, "cycle threshold at n={n} k={k}");
            }
            for k in 1..n {
                let full = bound_paths(n, k).unwrap() == k;
                assert_eq!(full, 7 * k >= n + 9, "path threshold at n={n} k={k}");
            }
        }
    }

    #[test]
    fn chen_constant_value() {
        let c = chen_coefficient();
        assert!((0.2614..=0.2616).contains(&c), "c = {c}");
        assert!((chen_bound(1) - c).abs() < 1e-12);
        // 32^(3/5) = 8 exactly
        assert!((chen_bound(32) - 8.0 * c).abs() < 1e-9);
        assert!((chen_bound(32) - 2.092).abs() < 0.001);
    }

    #[test]
    fn pair_stats_on_unique_and_complete() {
        let c6 = named(Family::Cycle, &[6]).unwrap();
        let s = pair_stats(&c6, Kind::Cycle, DEFAULT_ENUM_CAP).unwrap();
        assert_eq!(s.min_intersection, 6); // unique optimum, identical pair
        assert_eq!(s.min_intersection_distinct, None);
        assert!(s.includes_identical_pairs);

        let k5 = named(Family::Complete, &[5]).unwrap();
        let s = pair_stats(&k5, Kind::Cycle, DEFAULT_ENUM_CAP).unwrap();
        assert_eq!(s.min_intersection, 5); // all Hamiltonian
        assert_eq!(s.min_intersection_distinct, Some(5));
    }

    #[test]
    fn pair_stats_petersen_cycles() {
        let p = named(Family::Petersen, &[]).unwrap();
        let s = pair_stats(&p, Kind::Cycle, DEFAULT_ENUM_CAP).unwrap();
        assert!(!s.truncated);
        assert_eq!(s.optimum_length, 9);
        // brute-force oracle over the enumerated optimum set
        let result = enumerate_longest(&p, Kind::Cycle, DEFAULT_ENUM_CAP).unwrap();
        let masks = result.witness_masks();
        let mut oracle = usize::MAX;
        for i in 0..masks.len() {
            for j in i..masks.len() {
                oracle = oracle.min((masks[i] & masks[j]).count_ones() as usize);
            }
        }
        assert_eq!(s.min_intersection, oracle);
        assert!(s.min_intersection >= 3); // 3-connected case of the k<=7 theorem
    }

    #[test]
    fn pair_stats_errors_without_optima() {
        let tree = named(Family::Path, &[4]).unwrap();
        assert!(pair_stats(&tree, Kind::Cycle, 100).is_err());
        let k5 = named(Family::Complete, &[5]).unwrap();
        assert!(pair_stats(&k5, Kind::Path, 1).is_err());
    }

    #[test]
    fn conjecture_verdicts() {
        let k5 = named(Family::Complete, &[5]).unwrap();
        assert!(matches!(
            check_conjecture(&k5, Kind::Cycle, 4, DEFAULT_ENUM_CAP).unwrap(),
            ConjectureVerdict::Holds { .. }
        ));
        let p = named(Family::Petersen, &[]).unwrap();
        assert!(matches!(
            check_conjecture(&p, Kind::Cycle, 3, DEFAULT_ENUM_CAP).unwrap(),
            ConjectureVerdict::Holds { .. }
        ));
        let c6 = named(Family::Cycle, &[6]).unwrap();
        match check_conjecture(&c6, Kind::Cycle, 7, DEFAULT_ENUM_CAP).unwrap() {
            ConjectureVerdict::Violated { min_intersection: 6, required: 7, .. } => {}
            other => panic!("expected violated, got {other:?}"),
        }
    }

    #[test]
    fn separator_property_cases() {
        let c6 = named(Family::Cycle, &[6]).unwrap();
        let cyc = Cycle::new(&c6, &[0, 1, 2, 3, 4, 5]).unwrap();
        assert_eq!(
            check_separator_property(&c6, &cyc, &cyc).unwrap(),
            SeparatorVerdict::NotApplicable { reason: "identical cycles".into() }
        );

        let k6 = named(Family::Complete, &[6]).unwrap();
        let a = Cycle::new(&k6, &[0, 1, 2, 3, 4, 5]).unwrap();
        let b = Cycle::new(&k6, &[0, 2, 1, 3, 4, 5]).unwrap();
        assert!(matches!(
            check_separator_property(&k6, &a, &b).unwrap(),
            SeparatorVerdict::NotApplicable { .. }
        ));

        // Petersen: distinct longest 9-cycles share >= 8 vertices, outside
        // every proved range, so the check never applies there
        let p = named(Family::Petersen, &[]).unwrap();
        let cycles = enumerate_longest(&p, Kind::Cycle, DEFAULT_ENUM_CAP).unwrap();
        let cycs: Vec<Cycle> = cycles
            .witnesses
            .iter()
            .map(|w| Cycle::new(&p, w).unwrap())
            .collect();
        for i in 0..cycs.len().min(10) {
            for j in i + 1..cycs.len().min(10) {
                assert!(matches!(
                    check_separator_property(&p, &cycs[i], &cycs[j]).unwrap(),
                    SeparatorVerdict::NotApplicable { .. }
                ));
            }
        }

        // two 6-cycles sharing a 4-vertex path in a theta-like graph: the
        // shared set must separate the private arcs
        let g = Graph::from_edges(
            8,
            &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0), (3, 6), (6, 7), (7, 0)],
        )
        .unwrap();
        let c = Cycle::new(&g, &[0, 1, 2, 3, 4, 5]).unwrap();
        let d = Cycle::new(&g, &[0, 1, 2, 3, 6, 7]).unwrap();
        assert_eq!(check_separator_property(&g, &c, &d).unwrap(), SeparatorVerdict::Holds);
    }

    #[test]
    fn min_intersection_is_relabeling_invariant() {
        use rand::seq::SliceRandom;
        use rand::SeedableRng;
        let p = named(Family::Petersen, &[]).unwrap();
        let base = pair_stats(&p, Kind::Cycle, DEFAULT_ENUM_CAP).unwrap().min_intersection;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(5);
        for _ in 0..5 {
            let mut perm: Vec<usize> = (0..10).collect();
            perm.shuffle(&mut rng);
            let mut relabeled = Graph::new(10).unwrap();
            for (u, v) in p.edges() {
                relabeled.add_edge(perm[u], perm[v]).unwrap();
            }
            let got = pair_stats(&relabeled, Kind::Cycle, DEFAULT_ENUM_CAP)
                .unwrap()
                .min_intersection;
            assert_eq!(got, base);
        }
    }
}
