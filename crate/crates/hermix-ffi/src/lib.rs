//! C ABI for the hermix library.
//!
//! Conventions: mixed graphs travel as opaque `HxMixed*` handles created by
//! `hx_mixed_parse_json` / `hx_phi0` and released by `hx_mixed_free`;
//! strings returned through out-parameters are heap-allocated and released
//! by `hx_string_free`; every fallible call returns an `HxStatus` and leaves
//! a message for `hx_last_error_message` on failure. Handles are immutable,
//! so sharing one across threads for reads is safe; the error message is
//! thread-local.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};

use serde::Serialize;

use hermix::census::{run_census, CensusMode, Strategy};
use hermix::error::Error;
use hermix::graph::named_or_graph6;
use hermix::hypercube::{phi0, reduce_to_phi0, verify_phi0, HypercubeOrientation};
use hermix::mixed::{emit_mixed_json, parse_mixed_json, MixedGraph};
use hermix::spectra::{energy_bound_gap, hermitian_energy, DEFAULT_SOLVER_TOL};
use hermix::switching::{iso_switching_equivalent, switching_equivalent};

/// Status codes returned by every fallible call.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum HxStatus {
    Ok = 0,
    /// A required pointer argument was null.
    NullArgument = 1,
    /// A string argument was not valid UTF-8.
    InvalidUtf8 = 2,
    /// Input could not be parsed (JSON, graph6, ...).
    ParseError = 3,
    /// The request itself was invalid (unknown name, size limit, ...).
    UsageError = 4,
    /// A verification or domain check failed.
    VerificationFailed = 5,
    /// The two graphs are not switching equivalent.
    NotEquivalent = 6,
    /// Unexpected internal failure (panic caught at the boundary).
    InternalError = 7,
}

/// Opaque mixed-graph handle.
pub struct HxMixed(MixedGraph);

/// Census mode selector.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum HxMode {
    Mixed = 0,
    Oriented = 1,
}

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(msg: &str) {
    let cstring = CString::new(msg.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = cstring);
}

fn status_for(e: &Error) -> HxStatus {
    match e {
        Error::Io(_)
        | Error::Json(_)
        | Error::MixedJson(_)
        | Error::UnknownState(_)
        | Error::Graph6Empty
        | Error::Graph6InvalidByte { .. }
        | Error::Graph6Truncated { .. }
        | Error::Graph6LongForm
        | Error::Graph6TooLarge(_)
        | Error::UnorderedEdge { .. }
        | Error::DuplicateEdge(_, _)
        | Error::SelfLoop(_)
        | Error::VertexOutOfRange { .. } => HxStatus::ParseError,
        Error::UnsupportedOrder(_, _)
        | Error::Usage(_)
        | Error::UnknownFixture(_)
        | Error::SpaceTooLarge { .. }
        | Error::ZeroDimension
        | Error::DimensionTooLarge(_, _) => HxStatus::UsageError,
        _ => HxStatus::VerificationFailed,
    }
}

fn fail(e: &Error) -> HxStatus {
    set_error(&e.to_string());
    status_for(e)
}

/// Runs a closure with panics converted to `InternalError`.
fn guarded<F: FnOnce() -> HxStatus>(f: F) -> HxStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(status) => status,
        Err(_) => {
            set_error("internal panic");
            HxStatus::InternalError
        }
    }
}

unsafe fn utf8_arg<'a>(ptr: *const c_char) -> Result<&'a str, HxStatus> {
    if ptr.is_null() {
        set_error("null string argument");
        return Err(HxStatus::NullArgument);
    }
    CStr::from_ptr(ptr).to_str().map_err(|_| {
        set_error("string argument is not valid UTF-8");
        HxStatus::InvalidUtf8
    })
}

fn export_string(s: String) -> *mut c_char {
    CString::new(s.replace('\0', " ")).unwrap_or_default().into_raw()
}

unsafe fn mixed_arg<'a>(m: *const HxMixed) -> Result<&'a MixedGraph, HxStatus> {
    if m.is_null() {
        set_error("null mixed-graph handle");
        return Err(HxStatus::NullArgument);
    }
    Ok(&(*m).0)
}

/// Last error message for this thread; valid until the next failing call.
#[no_mangle]
pub extern "C" fn hx_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

/// Parses mixed-graph JSON into a new handle.
///
/// # Safety
/// `json` must be a NUL-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn hx_mixed_parse_json(
    json: *const c_char,
    out: *mut *mut HxMixed,
) -> HxStatus {
    guarded(|| {
        if out.is_null() {
            set_error("null out pointer");
            return HxStatus::NullArgument;
        }
        let text = match utf8_arg(json) {
            Ok(t) => t,
            Err(s) => return s,
        };
        match parse_mixed_json(text) {
            Ok(m) => {
                *out = Box::into_raw(Box::new(HxMixed(m)));
                HxStatus::Ok
            }
            Err(e) => fail(&e),
        }
    })
}

/// Canonical JSON of the mixed graph; release with `hx_string_free`.
///
/// # Safety
/// `m` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn hx_mixed_to_json(m: *const HxMixed, out: *mut *mut c_char) -> HxStatus {
    guarded(|| {
        if out.is_null() {
            set_error("null out pointer");
            return HxStatus::NullArgument;
        }
        match mixed_arg(m) {
            Ok(mixed) => {
                *out = export_string(emit_mixed_json(mixed));
                HxStatus::Ok
            }
            Err(s) => s,
        }
    })
}

/// Vertex, arc and undirected-edge counts.
///
/// # Safety
/// `m` must be a live handle; out pointers may be null to skip a field.
#[no_mangle]
pub unsafe extern "C" fn hx_mixed_counts(
    m: *const HxMixed,
    out_vertices: *mut u64,
    out_arcs: *mut u64,
    out_undirected: *mut u64,
) -> HxStatus {
    guarded(|| match mixed_arg(m) {
        Ok(mixed) => {
            if !out_vertices.is_null() {
                *out_vertices = mixed.graph().vertex_count() as u64;
            }
            if !out_arcs.is_null() {
                *out_arcs = mixed.arc_count() as u64;
            }
            if !out_undirected.is_null() {
                *out_undirected = mixed.undirected_count() as u64;
            }
            HxStatus::Ok
        }
        Err(s) => s,
    })
}

/// Releases a mixed-graph handle. Null is ignored.
///
/// # Safety
/// `m` must be null or a handle not yet freed.
#[no_mangle]
pub unsafe extern "C" fn hx_mixed_free(m: *mut HxMixed) {
    if !m.is_null() {
        drop(Box::from_raw(m));
    }
}

/// Releases a string returned by this library. Null is ignored.
///
/// # Safety
/// `s` must be null or a string returned by this library, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn hx_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Exact optimality verdict H^2 = D*I: writes 1 or 0.
///
/// # Safety
/// `m` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn hx_is_optimum(m: *const HxMixed, out: *mut i32) -> HxStatus {
    guarded(|| {
        if out.is_null() {
            set_error("null out pointer");
            return HxStatus::NullArgument;
        }
        match mixed_arg(m) {
            Ok(mixed) => {
                *out = hermix::hermitian::is_optimum(mixed) as i32;
                HxStatus::Ok
            }
            Err(s) => s,
        }
    })
}

/// Hermitian energy (sum of absolute eigenvalues).
///
/// # Safety
/// `m` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn hx_hermitian_energy(m: *const HxMixed, out: *mut f64) -> HxStatus {
    guarded(|| {
        if out.is_null() {
            set_error("null out pointer");
            return HxStatus::NullArgument;
        }
        match mixed_arg(m) {
            Ok(mixed) => match hermitian_energy(mixed, DEFAULT_SOLVER_TOL) {
                Ok(e) => {
                    *out = e;
                    HxStatus::Ok
                }
                Err(e) => fail(&e),
            },
            Err(s) => s,
        }
    })
}

/// The gap n*sqrt(D) - E_H; zero (within tolerance) exactly on optimum
/// graphs.
///
/// # Safety
/// `m` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn hx_energy_bound_gap(m: *const HxMixed, out: *mut f64) -> HxStatus {
    guarded(|| {
        if out.is_null() {
            set_error("null out pointer");
            return HxStatus::NullArgument;
        }
        match mixed_arg(m) {
            Ok(mixed) => match energy_bound_gap(mixed, DEFAULT_SOLVER_TOL) {
                Ok(g) => {
                    *out = g;
                    HxStatus::Ok
                }
                Err(e) => fail(&e),
            },
            Err(s) => s,
        }
    })
}

#[derive(Serialize)]
struct WitnessDoc {
    #[serde(skip_serializing_if = "Option::is_none")]
    perm: Option<Vec<usize>>,
    theta: Vec<i8>,
}

/// Switching-equivalence witness as JSON `{"perm"?: [...], "theta": [...]}`.
/// `iso` != 0 also tries underlying-graph automorphisms (order <= 10).
/// Returns `NotEquivalent` when no witness exists.
///
/// # Safety
/// `a` and `b` must be live handles and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn hx_switching_witness_json(
    a: *const HxMixed,
    b: *const HxMixed,
    iso: i32,
    out: *mut *mut c_char,
) -> HxStatus {
    guarded(|| {
        if out.is_null() {
            set_error("null out pointer");
            return HxStatus::NullArgument;
        }
        let (ma, mb) = match (mixed_arg(a), mixed_arg(b)) {
            (Ok(x), Ok(y)) => (x, y),
            (Err(s), _) | (_, Err(s)) => return s,
        };
        let witness = if iso != 0 {
            hermix::graph::automorphisms(ma.graph())
                .and_then(|aut| iso_switching_equivalent(ma, mb, &aut))
        } else {
            switching_equivalent(ma, mb)
        };
        match witness {
            Ok(Some(w)) => {
                let doc = WitnessDoc { perm: w.perm, theta: w.theta.signs().to_vec() };
                *out = export_string(serde_json::to_string(&doc).expect("witness serializes"));
                HxStatus::Ok
            }
            Ok(None) => {
                set_error("not switching equivalent");
                HxStatus::NotEquivalent
            }
            Err(e) => fail(&e),
        }
    })
}

/// Builds the optimum orientation of Q_k as a new handle.
///
/// # Safety
/// `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn hx_phi0(k: u32, out: *mut *mut HxMixed) -> HxStatus {
    guarded(|| {
        if out.is_null() {
            set_error("null out pointer");
            return HxStatus::NullArgument;
        }
        match phi0(k) {
            Ok(o) => {
                *out = Box::into_raw(Box::new(HxMixed(o.into_mixed())));
                HxStatus::Ok
            }
            Err(e) => fail(&e),
        }
    })
}

/// Runs the exact phi0 verification for Q_k (H^2 = k*I, cycle types, and
/// the numeric energy for k <= 8).
#[no_mangle]
pub extern "C" fn hx_verify_phi0(k: u32) -> HxStatus {
    guarded(|| match verify_phi0(k) {
        Ok(_) => HxStatus::Ok,
        Err(e) => fail(&e),
    })
}

/// Reduces an optimum hypercube orientation onto phi0; writes the switching
/// signs as a JSON array.
///
/// # Safety
/// `m` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn hx_reduce_to_phi0(
    m: *const HxMixed,
    out: *mut *mut c_char,
) -> HxStatus {
    guarded(|| {
        if out.is_null() {
            set_error("null out pointer");
            return HxStatus::NullArgument;
        }
        let mixed = match mixed_arg(m) {
            Ok(x) => x,
            Err(s) => return s,
        };
        let run = || -> Result<String, Error> {
            let o = HypercubeOrientation::from_mixed(mixed.clone())?;
            let theta = reduce_to_phi0(&o)?;
            Ok(serde_json::to_string(theta.signs()).expect("signs serialize"))
        };
        match run() {
            Ok(json) => {
                *out = export_string(json);
                HxStatus::Ok
            }
            Err(e) => fail(&e),
        }
    })
}

/// Runs a census over a graph6 string or a named graph (K<n>, C<n>, Q<k>,
/// K33, prism) and writes the JSON report. `pruned` selects the
/// backtracking strategy, `no_meta` != 0 strips the wall-time field.
///
/// # Safety
/// `graph` must be a NUL-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn hx_census_json(
    graph: *const c_char,
    mode: HxMode,
    pruned: i32,
    jobs: u32,
    no_meta: i32,
    out: *mut *mut c_char,
) -> HxStatus {
    guarded(|| {
        if out.is_null() {
            set_error("null out pointer");
            return HxStatus::NullArgument;
        }
        let name = match utf8_arg(graph) {
            Ok(t) => t,
            Err(s) => return s,
        };
        let run = || -> Result<String, Error> {
            let g = named_or_graph6(name)?;
            let mode = match mode {
                HxMode::Mixed => CensusMode::Mixed,
                HxMode::Oriented => CensusMode::Oriented,
            };
            let strategy = if pruned != 0 { Strategy::Pruned } else { Strategy::Full };
            let mut report = run_census(&g, mode, strategy, jobs.max(1) as usize)?;
            if no_meta != 0 {
                report = report.strip_meta();
            }
            Ok(serde_json::to_string(&report)?)
        };
        match run() {
            Ok(json) => {
                *out = export_string(json);
                HxStatus::Ok
            }
            Err(e) => fail(&e),
        }
    })
}
