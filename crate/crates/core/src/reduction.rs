//! The universal-vertex (cone) reduction: adding an apex adjacent to every
//! vertex raises connectivity by exactly one and turns longest paths into
//! longest cycles through the apex, shifting pairwise intersections by one.

use crate::connectivity::vertex_connectivity;
use crate::error::Error;
use crate::graph::{Cycle, Graph, Path};
use crate::intersect::pair_stats_from;
use crate::solve::{enumerate_longest, Kind};
use serde::Serialize;

#[derive(Debug, Clone)]
pub struct ConeResult {
    pub original: Graph,
    pub coned: Graph,
    /// the new universal vertex; always the largest id
    pub apex: usize,
}

/// Adds a universal vertex with id n.
pub fn cone(g: &Graph) -> Result<ConeResult, Error> {
    let n = g.n();
    let mut coned = Graph::new(n + 1)?;
    for (u, v) in g.edges() {
        coned.add_edge(u, v)?;
    }
    for v in 0..n {
        coned.add_edge(v, n)?;
    }
    Ok(ConeResult {
        original: g.clone(),
        coned,
        apex: n,
    })
}

/// Closes a path of the original graph into a cycle of the cone via the apex.
pub fn lift_path(p: &Path, cr: &ConeResult) -> Result<Cycle, Error> {
    Path::new(&cr.original, p.vertices())?;
    if p.vertices().len() < 2 {
        return Err(Error::Precondition(
            "single-vertex path would lift to a 2-cycle".into(),
        ));
    }
    let mut verts = p.vertices().to_vec();
    verts.push(cr.apex);
    Cycle::new(&cr.coned, &verts)
}

/// Deletes the apex from a cone cycle, leaving a path of the original graph.
pub fn project_cycle(c: &Cycle, cr: &ConeResult) -> Result<Path, Error> {
    Cycle::new(&cr.coned, c.vertices())?;
    if !c.contains(cr.apex) {
        return Err(Error::Precondition("cycle does not contain the apex".into()));
    }
    let vs = c.vertices();
    let pos = vs.iter().position(|&v| v == cr.apex).unwrap();
    let mut path: Vec<usize> = Vec::with_capacity(vs.len() - 1);
    for i in 1..vs.len() {
        path.push(vs[(pos + i) % vs.len()]);
    }
    Path::new(&cr.original, &path)
}

#[derive(Debug, Clone, Serialize)]
pub struct ReductionReport {
    pub n: usize,
    pub kappa_original: usize,
    pub kappa_cone: usize,
    /// kappa(cone) = kappa(g) + 1, which holds for complete and
    /// non-complete g alike
    pub kappa_offset_ok: bool,
    pub longest_path_length: usize,
    pub cone_cycle_length: usize,
    pub every_cone_cycle_through_apex: bool,
    pub path_count: usize,
    pub cone_cycle_count: usize,
    pub count_bijection_ok: bool,
    pub path_min_intersection: usize,
    pub cone_cycle_min_intersection: usize,
    pub intersection_offset_ok: bool,
    /// enumeration hit the cap somewhere: offsets are inconclusive
    pub inconclusive: bool,
}

/// Verifies the full reduction contract on one graph.
pub fn verify_reduction(g: &Graph, cap: usize) -> Result<ReductionReport, Error> {
    if g.n() < 2 || !g.is_connected() {
        return Err(Error::Precondition(
            "reduction verification needs a connected graph on >= 2 vertices".into(),
        ));
    }
    let cr = cone(g)?;
    let kappa_original = vertex_connectivity(g);
    let kappa_cone = vertex_connectivity(&cr.coned);

    let paths = enumerate_longest(g, Kind::Path, cap)?;
    let cone_cycles = enumerate_longest(&cr.coned, Kind::Cycle, cap)?;
    let inconclusive = paths.truncated || cone_cycles.truncated;

    let every_through_apex = cone_cycles
        .witnesses
        .iter()
        .all(|w| w.contains(&cr.apex));

    // lift every longest path and check it lands in the longest-cycle set
    let mut bijection_ok = !inconclusive && paths.witnesses.len() == cone_cycles.witnesses.len();
    if bijection_ok {
        for w in &paths.witnesses {
            let p = Path::new(g, w)?;
            let lifted = lift_path(&p, &cr)?;
            if lifted.len() != cone_cycles.best_length
                || !cone_cycles
                    .witnesses
                    .iter()
                    .any(|c| c.as_slice() == lifted.vertices())
            {
                bijection_ok = false;
                break;
            }
            // and back
            let back = project_cycle(&lifted, &cr)?.canonical();
            if back.vertices() != w.as_slice() {
                bijection_ok = false;
                break;
            }
        }
    }

    let path_stats = pair_stats_from(&paths)?;
    let cycle_stats = pair_stats_from(&cone_cycles)?;

    Ok(ReductionReport {
        n: g.n(),
        kappa_original,
        kappa_cone,
        kappa_offset_ok: kappa_cone == kappa_original + 1,
        longest_path_length: paths.best_length,
        cone_cycle_length: cone_cycles.best_length,
        every_cone_cycle_through_apex: every_through_apex,
        path_count: paths.witnesses.len(),
        cone_cycle_count: cone_cycles.witnesses.len(),
        count_bijection_ok: bijection_ok,
        path_min_intersection: path_stats.min_intersection,
        cone_cycle_min_intersection: cycle_stats.min_intersection,
        intersection_offset_ok: !inconclusive
            && cycle_stats.min_intersection == path_stats.min_intersection + 1,
        inconclusive,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate::{named, Family};
    use crate::solve::DEFAULT_ENUM_CAP;

    #[test]
    fn cone_of_k4_is_k5() {
        let k4 = named(Family::Complete, &[4]).unwrap();
        let cr = cone(&k4).unwrap();
        assert_eq!(cr.apex, 4);
        assert!(cr.coned.is_complete());
        assert_eq!(cr.coned.n(), 5);
    }

    #[test]
    fn cone_of_single_edge_is_triangle() {
        let p2 = named(Family::Path, &[2]).unwrap();
        let cr = cone(&p2).unwrap();
        assert_eq!(cr.coned.n(), 3);
        assert_eq!(cr.coned.edge_count(), 3);
    }

    #[test]
    fn cone_of_c5_is_wheel() {
        let c5 = named(Family::Cycle, &[5]).unwrap();
        let cr = cone(&c5).unwrap();
        assert_eq!(vertex_connectivity(&cr.coned), 3);
        assert_eq!(vertex_connectivity(&c5) + 1, 3);
    }

    #[test]
    fn lift_and_project_inverse() {
        let p5 = named(Family::Path, &[5]).unwrap();
        let cr = cone(&p5).unwrap();
        let p = Path::new(&p5, &[0, 1, 2, 3, 4]).unwrap();
        let lifted = lift_path(&p, &cr).unwrap();
        assert_eq!(lifted.len(), 6);
        let back = project_cycle(&lifted, &cr).unwrap().canonical();
        assert_eq!(back.vertices(), p.vertices());

        let p2 = named(Family::Path, &[2]).unwrap();
        let cr2 = cone(&p2).unwrap();
        let edge = Path::new(&p2, &[0, 1]).unwrap();
        let tri = lift_path(&edge, &cr2).unwrap();
        assert_eq!(tri.len(), 3);
        let back = project_cycle(&tri, &cr2).unwrap().canonical();
        assert_eq!(back.vertices(), &[0, 1]);
    }

    #[test]
    fn lift_rejects_single_vertex() {
        let p5 = named(Family::Path, &[5]).unwrap();
        let cr = cone(&p5).unwrap();
        let single = Path::new(&p5, &[2]).unwrap();
        assert!(lift_path(&single, &cr).is_err());
    }

    #[test]
    fn project_requires_apex() {
        let c5 = named(Family::Cycle, &[5]).unwrap();
        let cr = cone(&c5).unwrap();
        let no_apex = Cycle::new(&cr.coned, &[0, 1, 2, 3, 4]).unwrap();
        assert!(project_cycle(&no_apex, &cr).is_err());
    }

    #[test]
    fn verify_reduction_on_p5() {
        let p5 = named(Family::Path, &[5]).unwrap();
        let r = verify_reduction(&p5, DEFAULT_ENUM_CAP).unwrap();
        assert_eq!(r.kappa_original, 1);
        assert_eq!(r.kappa_cone, 2);
        assert!(r.kappa_offset_ok);
        assert_eq!(r.cone_cycle_length, 6);
        assert!(r.every_cone_cycle_through_apex);
        assert!(r.count_bijection_ok);
        assert!(r.intersection_offset_ok);
    }

    #[test]
    fn verify_reduction_on_k4_and_petersen() {
        let k4 = named(Family::Complete, &[4]).unwrap();
        let r = verify_reduction(&k4, DEFAULT_ENUM_CAP).unwrap();
        assert_eq!((r.kappa_original, r.kappa_cone), (3, 4));
        assert_eq!(r.path_min_intersection, 4);
        assert_eq!(r.cone_cycle_min_intersection, 5);
        assert!(r.intersection_offset_ok);

        let p = named(Family::Petersen, &[]).unwrap();
        let r = verify_reduction(&p, DEFAULT_ENUM_CAP).unwrap();
        assert!(r.kappa_offset_ok);
        assert!(r.every_cone_cycle_through_apex);
        assert!(r.count_bijection_ok);
        assert!(r.intersection_offset_ok);
    }
}
