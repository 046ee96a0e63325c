//! C ABI over the toolkit: opaque graph handles, integer error codes, and
//! out-parameters for results. Strings returned by this library must be
//! released with `cm_string_free`.

use cyclemeet::connectivity::vertex_connectivity;
use cyclemeet::graph6::{emit_graph6, parse_graph6};
use cyclemeet::intersect::{bound_cycles, bound_paths, chen_bound, pair_stats};
use cyclemeet::solve::{best_cycle_length, best_path_length, Kind, DEFAULT_ENUM_CAP};
use cyclemeet::{Error, Graph};
use std::ffi::{c_char, CStr, CString};

/// Status codes returned by every fallible function.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CmStatus {
    CmOk = 0,
    CmNullArgument = 1,
    CmInvalidUtf8 = 2,
    CmParseError = 3,
    CmInvalidArgument = 4,
    CmPrecondition = 5,
    CmTruncated = 6,
    CmInternal = 7,
}

fn status_of(e: &Error) -> CmStatus {
    match e {
        Error::Graph6Parse { .. } => CmStatus::CmParseError,
        Error::InvalidArgument(_)
        | Error::TooManyVertices { .. }
        | Error::VertexOutOfRange { .. }
        | Error::SelfLoop { .. }
        | Error::UnknownFamily(_)
        | Error::InvalidFamilyParams { .. } => CmStatus::CmInvalidArgument,
        Error::Precondition(_) | Error::InvalidPath(_) | Error::InvalidCycle(_) => {
            CmStatus::CmPrecondition
        }
        _ => CmStatus::CmInternal,
    }
}

/// Opaque graph handle.
pub struct CmGraph {
    inner: Graph,
}

/// Parses a graph6 string into a new handle. On success writes the handle to
/// `out` and returns CM_OK; the handle must be released with `cm_graph_free`.
#[no_mangle]
pub unsafe extern "C" fn cm_graph_parse_g6(
    text: *const c_char,
    out: *mut *mut CmGraph,
) -> CmStatus {
    if text.is_null() || out.is_null() {
        return CmStatus::CmNullArgument;
    }
    let Ok(s) = CStr::from_ptr(text).to_str() else {
        return CmStatus::CmInvalidUtf8;
    };
    match parse_graph6(s) {
        Ok(g) => {
            *out = Box::into_raw(Box::new(CmGraph { inner: g }));
            CmStatus::CmOk
        }
        Err(e) => status_of(&e),
    }
}

/// Releases a graph handle. Null is a no-op.
#[no_mangle]
pub unsafe extern "C" fn cm_graph_free(g: *mut CmGraph) {
    if !g.is_null() {
        drop(Box::from_raw(g));
    }
}

/// Serializes a handle back to graph6. The string must be released with
/// `cm_string_free`.
#[no_mangle]
pub unsafe extern "C" fn cm_graph_emit_g6(
    g: *const CmGraph,
    out: *mut *mut c_char,
) -> CmStatus {
    if g.is_null() || out.is_null() {
        return CmStatus::CmNullArgument;
    }
    let text = emit_graph6(&(*g).inner);
    match CString::new(text) {
        Ok(c) => {
            *out = c.into_raw();
            CmStatus::CmOk
        }
        Err(_) => CmStatus::CmInternal,
    }
}

/// Releases a string returned by this library. Null is a no-op.
#[no_mangle]
pub unsafe extern "C" fn cm_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

#[no_mangle]
pub unsafe extern "C" fn cm_graph_order(g: *const CmGraph) -> i32 {
    if g.is_null() {
        return -1;
    }
    (*g).inner.n() as i32
}

#[no_mangle]
pub unsafe extern "C" fn cm_graph_edge_count(g: *const CmGraph) -> i32 {
    if g.is_null() {
        return -1;
    }
    (*g).inner.edge_count() as i32
}

/// Vertex connectivity; -1 for a null handle.
#[no_mangle]
pub unsafe extern "C" fn cm_vertex_connectivity(g: *const CmGraph) -> i32 {
    if g.is_null() {
        return -1;
    }
    vertex_connectivity(&(*g).inner) as i32
}

/// Longest-path length in edges; -1 for a null handle.
#[no_mangle]
pub unsafe extern "C" fn cm_longest_path_length(g: *const CmGraph) -> i32 {
    if g.is_null() {
        return -1;
    }
    best_path_length(&(*g).inner) as i32
}

/// Circumference in edges (0 if acyclic); -1 for a null handle.
#[no_mangle]
pub unsafe extern "C" fn cm_longest_cycle_length(g: *const CmGraph) -> i32 {
    if g.is_null() {
        return -1;
    }
    best_cycle_length(&(*g).inner) as i32
}

/// Minimum pairwise vertex intersection over all longest paths (kind 0) or
/// cycles (kind 1). Writes the minimum to `out`; returns CM_TRUNCATED when
/// enumeration hit the cap (the value is then only an upper bound).
#[no_mangle]
pub unsafe extern "C" fn cm_min_pair_intersection(
    g: *const CmGraph,
    kind: i32,
    cap: u64,
    out: *mut u32,
) -> CmStatus {
    if g.is_null() || out.is_null() {
        return CmStatus::CmNullArgument;
    }
    let kind = match kind {
        0 => Kind::Path,
        1 => Kind::Cycle,
        _ => return CmStatus::CmInvalidArgument,
    };
    let cap = if cap == 0 { DEFAULT_ENUM_CAP } else { cap as usize };
    match pair_stats(&(*g).inner, kind, cap) {
        Ok(stats) => {
            *out = stats.min_intersection as u32;
            if stats.truncated {
                CmStatus::CmTruncated
            } else {
                CmStatus::CmOk
            }
        }
        Err(e) => status_of(&e),
    }
}

/// The guaranteed longest-cycle intersection lower bound max(0, min(k, 8k-n-16)).
#[no_mangle]
pub extern "C" fn cm_bound_cycles(n: u32, k: u32, out: *mut u32) -> CmStatus {
    if out.is_null() {
        return CmStatus::CmNullArgument;
    }
    match bound_cycles(n as usize, k as usize) {
        Ok(b) => {
            unsafe { *out = b as u32 };
            CmStatus::CmOk
        }
        Err(e) => status_of(&e),
    }
}

/// The guaranteed longest-path intersection lower bound max(0, min(k, 8k-n-9)).
#[no_mangle]
pub extern "C" fn cm_bound_paths(n: u32, k: u32, out: *mut u32) -> CmStatus {
    if out.is_null() {
        return CmStatus::CmNullArgument;
    }
    match bound_paths(n as usize, k as usize) {
        Ok(b) => {
            unsafe { *out = b as u32 };
            CmStatus::CmOk
        }
        Err(e) => status_of(&e),
    }
}

/// The general cycle-intersection lower bound c * k^(3/5).
#[no_mangle]
pub extern "C" fn cm_chen_bound(k: u32) -> f64 {
    chen_bound(k as usize)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::ffi::CString;
    use std::ptr;

    #[test]
    fn round_trip_and_invariants_via_the_c_surface() {
        let petersen_g6 = {
            use cyclemeet::generate::{named, Family};
            emit_graph6(&named(Family::Petersen, &[]).unwrap())
        };
        let c = CString::new(petersen_g6.clone()).unwrap();
        let mut handle: *mut CmGraph = ptr::null_mut();
        unsafe {
            assert_eq!(cm_graph_parse_g6(c.as_ptr(), &mut handle), CmStatus::CmOk);
            assert_eq!(cm_graph_order(handle), 10);
            assert_eq!(cm_graph_edge_count(handle), 15);
            assert_eq!(cm_vertex_connectivity(handle), 3);
            assert_eq!(cm_longest_path_length(handle), 9);
            assert_eq!(cm_longest_cycle_length(handle), 9);
            let mut min = 0u32;
            assert_eq!(
                cm_min_pair_intersection(handle, 1, 0, &mut min),
                CmStatus::CmOk
            );
            assert!(min >= 3);
            let mut emitted: *mut c_char = ptr::null_mut();
            assert_eq!(cm_graph_emit_g6(handle, &mut emitted), CmStatus::CmOk);
            let back = CStr::from_ptr(emitted).to_str().unwrap().to_owned();
            assert_eq!(back, petersen_g6);
            cm_string_free(emitted);
            cm_graph_free(handle);
        }
    }

    #[test]
    fn error_paths() {
        let bad = CString::new("not graph6 \x01").unwrap();
        let mut handle: *mut CmGraph = ptr::null_mut();
        unsafe {
            assert_ne!(cm_graph_parse_g6(bad.as_ptr(), &mut handle), CmStatus::CmOk);
            assert_eq!(cm_graph_parse_g6(ptr::null(), &mut handle), CmStatus::CmNullArgument);
            assert_eq!(cm_vertex_connectivity(ptr::null()), -1);
        }
        let mut out = 0u32;
        assert_eq!(cm_bound_cycles(5, 1, &mut out), CmStatus::CmInvalidArgument);
        assert_eq!(cm_bound_cycles(12, 4, &mut out), CmStatus::CmOk);
        assert_eq!(out, 4);
        assert_eq!(cm_bound_paths(19, 4, &mut out), CmStatus::CmOk);
        assert_eq!(out, 4);
        assert!((cm_chen_bound(32) - 2.09).abs() < 0.01);
    }
}
