//! C ABI for the reconlab library: opaque structure handles, integer status
//! codes, and reports delivered as JSON strings.
//!
//! Conventions:
//! - Every fallible function returns an [`RlStatus`]; results come back
//!   through out-parameters.
//! - Strings returned through `char **` are NUL-terminated, UTF-8, owned by
//!   the library, and must be released with [`rl_string_free`].
//! - Handles from `rl_structure_*` constructors must be released with
//!   [`rl_structure_free`].
//! - No function panics across the boundary; internal invariant failures
//!   surface as [`RlStatus::Internal`].

use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, UnwindSafe};

use reconlab::jsonio::AnyStructure;
use reconlab::verify::{self, DiagonalMode, SweepKind};
use reconlab::{Error, SimpleGraph};

/// Status code of every fallible C-ABI call.
#[repr(C)]
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum RlStatus {
    Ok = 0,
    /// A required pointer argument was NULL.
    NullArgument = 1,
    /// A string argument was not valid UTF-8.
    InvalidUtf8 = 2,
    /// Text could not be parsed as graph6 or structure JSON.
    ParseError = 3,
    /// The two structures have different kinds or shape parameters.
    KindMismatch = 4,
    /// The two structures have different base sizes.
    SizeMismatch = 5,
    /// A size cap was exceeded (canonical form, enumeration, sweep).
    CapExceeded = 6,
    /// Some other argument was invalid (bad probability, bad colors, …).
    InvalidInput = 7,
    /// An internal invariant failed; this is a bug, not a usage error.
    Internal = 8,
}

/// Structure family selector for [`rl_verify_ulam`].
#[repr(C)]
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum RlSweepKind {
    Simple = 0,
    /// `param` is the edge color count.
    Colored = 1,
    /// `param` is the layer count.
    Multigraph = 2,
    /// `param` is the hyperedge arity.
    Hypergraph = 3,
}

/// Opaque handle to a structure of any kind.
pub struct RlStructure {
    inner: AnyStructure,
}

fn status_of(e: &Error) -> RlStatus {
    match e {
        Error::KindMismatch { .. } => RlStatus::KindMismatch,
        Error::SizeMismatch { .. } => RlStatus::SizeMismatch,
        Error::CapExceeded { .. } => RlStatus::CapExceeded,
        Error::Graph6(_) | Error::Json(_) => RlStatus::ParseError,
        _ => RlStatus::InvalidInput,
    }
}

fn guarded<F: FnOnce() -> RlStatus + UnwindSafe>(f: F) -> RlStatus {
    catch_unwind(f).unwrap_or(RlStatus::Internal)
}

/// # Safety
/// `ptr` must be valid for reads of a NUL-terminated string.
unsafe fn read_str<'a>(ptr: *const c_char) -> Result<&'a str, RlStatus> {
    if ptr.is_null() {
        return Err(RlStatus::NullArgument);
    }
    unsafe { CStr::from_ptr(ptr) }
        .to_str()
        .map_err(|_| RlStatus::InvalidUtf8)
}

fn give_string(s: String, out: *mut *mut c_char) -> RlStatus {
    match CString::new(s) {
        Ok(c) => {
            unsafe { *out = c.into_raw() };
            RlStatus::Ok
        }
        Err(_) => RlStatus::Internal,
    }
}

/// Parses one structure from text: graph6 for simple graphs, the JSON
/// object format otherwise. On success stores a fresh handle in `out`.
///
/// # Safety
/// `text` must point to a NUL-terminated string; `out` must be a valid
/// pointer.
#[no_mangle]
pub unsafe extern "C" fn rl_structure_parse(
    text: *const c_char,
    out: *mut *mut RlStructure,
) -> RlStatus {
    if out.is_null() {
        return RlStatus::NullArgument;
    }
    let text = match unsafe { read_str(text) } {
        Ok(t) => t.to_owned(),
        Err(s) => return s,
    };
    guarded(move || match AnyStructure::parse_text(&text) {
        Ok(inner) => {
            unsafe { *out = Box::into_raw(Box::new(RlStructure { inner })) };
            RlStatus::Ok
        }
        Err(e) => status_of(&e),
    })
}

/// Builds a simple graph from a flat edge list `[u0, v0, u1, v1, …]`.
///
/// # Safety
/// `edges` must be valid for reads of `2 * edge_count` u32 values (or NULL
/// when `edge_count` is 0); `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn rl_structure_from_edges(
    n: u32,
    edges: *const u32,
    edge_count: usize,
    out: *mut *mut RlStructure,
) -> RlStatus {
    if out.is_null() || (edges.is_null() && edge_count > 0) {
        return RlStatus::NullArgument;
    }
    let pairs: Vec<(usize, usize)> = if edge_count == 0 {
        Vec::new()
    } else {
        unsafe { std::slice::from_raw_parts(edges, 2 * edge_count) }
            .chunks_exact(2)
            .map(|c| (c[0] as usize, c[1] as usize))
            .collect()
    };
    guarded(move || match SimpleGraph::from_edges(n as usize, &pairs) {
        Ok(g) => {
            unsafe {
                *out = Box::into_raw(Box::new(RlStructure {
                    inner: AnyStructure::Simple(g),
                }))
            };
            RlStatus::Ok
        }
        Err(e) => status_of(&e),
    })
}

/// Releases a structure handle. NULL is accepted and ignored.
///
/// # Safety
/// `s` must have been returned by an `rl_structure_*` constructor and not
/// yet freed.
#[no_mangle]
pub unsafe extern "C" fn rl_structure_free(s: *mut RlStructure) {
    if !s.is_null() {
        drop(unsafe { Box::from_raw(s) });
    }
}

/// Number of vertices; 0 for NULL.
///
/// # Safety
/// `s` must be a live handle or NULL.
#[no_mangle]
pub unsafe extern "C" fn rl_structure_vertex_count(s: *const RlStructure) -> u32 {
    if s.is_null() {
        return 0;
    }
    unsafe { &*s }.inner.n() as u32
}

/// Writes the structure's text form (graph6 or JSON).
///
/// # Safety
/// `s` must be a live handle; `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn rl_structure_to_text(
    s: *const RlStructure,
    out: *mut *mut c_char,
) -> RlStatus {
    if s.is_null() || out.is_null() {
        return RlStatus::NullArgument;
    }
    let inner = unsafe { &*s }.inner.clone();
    guarded(move || match inner.to_text() {
        Ok(text) => give_string(text, out),
        Err(e) => status_of(&e),
    })
}

/// Writes the 128-bit canonical-certificate digest as 32 hex characters.
/// Equal digests for equal-kind structures mean isomorphic (the library
/// confirms full certificate bytes internally).
///
/// # Safety
/// `s` must be a live handle; `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn rl_structure_certificate_hex(
    s: *const RlStructure,
    out: *mut *mut c_char,
) -> RlStatus {
    if s.is_null() || out.is_null() {
        return RlStatus::NullArgument;
    }
    let inner = unsafe { &*s }.inner.clone();
    guarded(move || match inner.certificate() {
        Ok(cert) => give_string(cert.hash_hex(), out),
        Err(e) => status_of(&e),
    })
}

/// Writes the order-independent deck digest as 32 hex characters.
///
/// # Safety
/// `s` must be a live handle; `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn rl_structure_deck_hash_hex(
    s: *const RlStructure,
    out: *mut *mut c_char,
) -> RlStatus {
    if s.is_null() || out.is_null() {
        return RlStatus::NullArgument;
    }
    let inner = unsafe { &*s }.inner.clone();
    guarded(move || match inner.deck() {
        Ok(d) => give_string(format!("{:032x}", reconlab::deck_hash(&d)), out),
        Err(e) => status_of(&e),
    })
}

/// Sets `*out` to 1 when the decks agree as multisets, else 0.
///
/// # Safety
/// `a` and `b` must be live handles; `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn rl_structures_hypomorphic(
    a: *const RlStructure,
    b: *const RlStructure,
    out: *mut i32,
) -> RlStatus {
    if a.is_null() || b.is_null() || out.is_null() {
        return RlStatus::NullArgument;
    }
    let (a, b) = (unsafe { &*a }.inner.clone(), unsafe { &*b }.inner.clone());
    guarded(move || match a.hypomorphic_to(&b) {
        Ok(answer) => {
            unsafe { *out = answer as i32 };
            RlStatus::Ok
        }
        Err(e) => status_of(&e),
    })
}

/// Sets `*out` to 1 when the structures are isomorphic, else 0.
///
/// # Safety
/// `a` and `b` must be live handles; `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn rl_structures_isomorphic(
    a: *const RlStructure,
    b: *const RlStructure,
    out: *mut i32,
) -> RlStatus {
    if a.is_null() || b.is_null() || out.is_null() {
        return RlStatus::NullArgument;
    }
    let (a, b) = (unsafe { &*a }.inner.clone(), unsafe { &*b }.inner.clone());
    guarded(move || match a.isomorphic_to(&b) {
        Ok(witness) => {
            unsafe { *out = witness.is_some() as i32 };
            RlStatus::Ok
        }
        Err(e) => status_of(&e),
    })
}

fn run_report(
    out: *mut *mut c_char,
    run: impl FnOnce() -> Result<verify::Report, Error> + UnwindSafe,
) -> RlStatus {
    if out.is_null() {
        return RlStatus::NullArgument;
    }
    guarded(move || match run() {
        Ok(report) => give_string(report.to_json(), out),
        Err(e) => status_of(&e),
    })
}

/// Runs the subset-permutation lifting sweep; writes the report JSON.
///
/// # Safety
/// `report_json` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn rl_verify_theorem1(n: u32, report_json: *mut *mut c_char) -> RlStatus {
    run_report(report_json, move || verify::verify_theorem1(n as usize))
}

/// Runs a hypomorphy sweep over one family; `param` is the color count,
/// layer count, or arity (ignored for `Simple`). Writes the report JSON.
///
/// # Safety
/// `report_json` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn rl_verify_ulam(
    n: u32,
    kind: RlSweepKind,
    param: u32,
    report_json: *mut *mut c_char,
) -> RlStatus {
    let kind = match kind {
        RlSweepKind::Simple => SweepKind::Simple,
        RlSweepKind::Colored => SweepKind::Colored { k: param as usize },
        RlSweepKind::Multigraph => SweepKind::Multigraph {
            layers: param as usize,
        },
        RlSweepKind::Hypergraph => SweepKind::Hypergraph { m: param as usize },
    };
    run_report(report_json, move || verify::verify_ulam(n as usize, kind))
}

/// Runs the measure-vector sweep; writes the report JSON.
///
/// # Safety
/// `report_json` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn rl_verify_measure(n: u32, report_json: *mut *mut c_char) -> RlStatus {
    run_report(report_json, move || {
        verify::verify_measure_theorem(n as usize)
    })
}

/// Runs the symmetric-matrix sweep; `free_diagonal` nonzero lets diagonal
/// entries range over the alphabet. Writes the report JSON.
///
/// # Safety
/// `report_json` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn rl_verify_matrix(
    n: u32,
    alphabet: u32,
    free_diagonal: i32,
    report_json: *mut *mut c_char,
) -> RlStatus {
    let mode = if free_diagonal != 0 {
        DiagonalMode::Free
    } else {
        DiagonalMode::Constant
    };
    run_report(report_json, move || {
        verify::verify_matrix_corollary(n as usize, alphabet as usize, mode)
    })
}

/// Runs the measure-preserving subset-permutation sweep; writes the report
/// JSON.
///
/// # Safety
/// `report_json` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn rl_verify_lemma_l2(n: u32, report_json: *mut *mut c_char) -> RlStatus {
    run_report(report_json, move || verify::verify_lemma_l2(n as usize))
}

/// Releases a string returned by this library. NULL is accepted.
///
/// # Safety
/// `s` must have been returned by a function of this library and not yet
/// freed.
#[no_mangle]
pub unsafe extern "C" fn rl_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(unsafe { CString::from_raw(s) });
    }
}

/// Static description of a status code.
#[no_mangle]
pub extern "C" fn rl_status_message(status: RlStatus) -> *const c_char {
    let msg: &'static [u8] = match status {
        RlStatus::Ok => b"ok\0",
        RlStatus::NullArgument => b"required pointer argument was NULL\0",
        RlStatus::InvalidUtf8 => b"string argument was not valid UTF-8\0",
        RlStatus::ParseError => b"could not parse structure text\0",
        RlStatus::KindMismatch => b"structure kinds or parameters differ\0",
        RlStatus::SizeMismatch => b"structure base sizes differ\0",
        RlStatus::CapExceeded => b"size cap exceeded\0",
        RlStatus::InvalidInput => b"invalid argument\0",
        RlStatus::Internal => b"internal invariant failure\0",
    };
    msg.as_ptr() as *const c_char
}
