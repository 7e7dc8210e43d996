//! C interface to `ke-core`.
//!
//! Collections and graphs live behind opaque handles that the caller frees
//! with the matching `*_free` function. Every fallible call returns a
//! [`KeStatus`] and writes its result through an out-pointer; on failure
//! [`ke_last_error_message`] describes what went wrong. Strings handed out
//! by the library must be released with [`ke_string_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};

use ke_core::explorer::{stress_bounded, TheoremId, TrialConfig};
use ke_core::graph::{
    alpha_graph_bounded, is_ke_graph_bounded, ke_certificate_search_bounded, mu_bounded,
    omega_bounded, realizable_in_some_omega_bounded,
};
use ke_core::io::{parse_collection, parse_edge_list, parse_graph, Format};
use ke_core::sets::HkeMethod;
use ke_core::{compute_m, e_value, is_ke, Error, FiniteSet, Graph, Limits, SetCollection};

/// Result code of every fallible call.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum KeStatus {
    Ok = 0,
    /// A required pointer argument was null.
    NullPointer = 1,
    /// Malformed text, bad UTF-8, or an invalid set, collection or graph.
    InvalidInput = 2,
    /// A guardrail was exceeded.
    TooLarge = 3,
    /// Members of the collection differ in size.
    NotRelevant = 4,
    /// The operation's hypothesis does not hold for this input.
    HypothesisFails = 5,
    UnknownTheorem = 6,
    /// An internal consistency check failed.
    Violation = 7,
    /// A Rust panic was caught at the boundary.
    Panic = 8,
}

/// hke decision procedure.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum KeHkeMethod {
    Brute = 0,
    Duality = 1,
    Existential = 2,
}

/// Opaque set collection.
pub struct KeCollection(SetCollection);

/// Opaque graph.
pub struct KeGraph(Graph);

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_last_error(msg: &str) {
    let c = CString::new(msg.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = c);
}

fn status_of(e: &Error) -> KeStatus {
    match e {
        Error::TooLarge { .. } => KeStatus::TooLarge,
        Error::NotRelevant { .. } => KeStatus::NotRelevant,
        Error::HypothesisFails { .. }
        | Error::PreconditionFails(_)
        | Error::CollectionTooSmall { .. } => KeStatus::HypothesisFails,
        Error::UnknownTheorem(_) => KeStatus::UnknownTheorem,
        Error::Violation(_) => KeStatus::Violation,
        _ => KeStatus::InvalidInput,
    }
}

impl From<Error> for KeStatus {
    fn from(e: Error) -> Self {
        set_last_error(&format!("{}: {e}", e.code()));
        status_of(&e)
    }
}

fn null(what: &str) -> KeStatus {
    set_last_error(&format!("{what} is null"));
    KeStatus::NullPointer
}

/// Runs `f`, converting panics into [`KeStatus::Panic`].
fn guard(f: impl FnOnce() -> Result<(), KeStatus>) -> KeStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => {
            set_last_error("");
            KeStatus::Ok
        }
        Ok(Err(s)) => s,
        Err(_) => {
            set_last_error("panic inside ke-ffi");
            KeStatus::Panic
        }
    }
}

unsafe fn str_arg<'a>(p: *const c_char, what: &str) -> Result<&'a str, KeStatus> {
    if p.is_null() {
        return Err(null(what));
    }
    CStr::from_ptr(p).to_str().map_err(|_| {
        set_last_error(&format!("{what} is not valid UTF-8"));
        KeStatus::InvalidInput
    })
}

unsafe fn handle<'a, T>(p: *const T, what: &str) -> Result<&'a T, KeStatus> {
    p.as_ref().ok_or_else(|| null(what))
}

unsafe fn write<T>(out: *mut T, value: T) -> Result<(), KeStatus> {
    if out.is_null() {
        return Err(null("output pointer"));
    }
    out.write(value);
    Ok(())
}

fn to_c_string(s: String) -> *mut c_char {
    CString::new(s)
        .expect("JSON has no interior NUL")
        .into_raw()
}

fn limits() -> Limits {
    Limits::from_env()
}

/// Message for the most recent failed call on this thread. Empty after a
/// successful call. The pointer stays valid until the next call into the
/// library on the same thread.
#[no_mangle]
pub extern "C" fn ke_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

/// Frees a string returned by this library. Null is ignored.
///
/// # Safety
/// `s` must come from this library and not have been freed already.
#[no_mangle]
pub unsafe extern "C" fn ke_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

// ---- collections ----

/// Parses `{"sets": [[1,2],[2,3]]}`.
///
/// # Safety
/// `json` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ke_collection_from_json(
    json: *const c_char,
    out: *mut *mut KeCollection,
) -> KeStatus {
    guard(|| {
        let text = str_arg(json, "json")?;
        let c = parse_collection(text)?;
        write(out, Box::into_raw(Box::new(KeCollection(c))))
    })
}

/// Builds a collection from `set_count` sets laid out back to back in
/// `elements`; set `i` has `set_lengths[i]` elements.
///
/// # Safety
/// `elements` must hold the sum of `set_lengths` values and `set_lengths`
/// must hold `set_count` values.
#[no_mangle]
pub unsafe extern "C" fn ke_collection_from_sets(
    elements: *const u32,
    set_lengths: *const usize,
    set_count: usize,
    out: *mut *mut KeCollection,
) -> KeStatus {
    guard(|| {
        if set_lengths.is_null() {
            return Err(null("set_lengths"));
        }
        if set_count == 0 {
            return Err(Error::EmptyCollection.into());
        }
        let lengths = std::slice::from_raw_parts(set_lengths, set_count);
        let total: usize = lengths.iter().sum();
        if elements.is_null() && total > 0 {
            return Err(null("elements"));
        }
        let flat = if total == 0 {
            &[][..]
        } else {
            std::slice::from_raw_parts(elements, total)
        };
        let mut sets = Vec::with_capacity(set_count);
        let mut start = 0;
        for &len in lengths {
            sets.push(FiniteSet::new(flat[start..start + len].iter().copied())?);
            start += len;
        }
        let c = SetCollection::new(sets)?;
        write(out, Box::into_raw(Box::new(KeCollection(c))))
    })
}

/// # Safety
/// `c` must be null or a handle from this library not yet freed.
#[no_mangle]
pub unsafe extern "C" fn ke_collection_free(c: *mut KeCollection) {
    if !c.is_null() {
        drop(Box::from_raw(c));
    }
}

/// Number of member sets.
///
/// # Safety
/// `c` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ke_collection_len(c: *const KeCollection, out: *mut usize) -> KeStatus {
    guard(|| write(out, handle(c, "collection")?.0.len()))
}

/// Common member size; `KE_STATUS_NOT_RELEVANT` if sizes differ.
///
/// # Safety
/// `c` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ke_collection_alpha(c: *const KeCollection, out: *mut usize) -> KeStatus {
    guard(|| write(out, ke_core::alpha(&handle(c, "collection")?.0)?))
}

/// `|union| + |intersection|`.
///
/// # Safety
/// `c` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ke_collection_e_value(
    c: *const KeCollection,
    out: *mut usize,
) -> KeStatus {
    guard(|| write(out, e_value(&handle(c, "collection")?.0)?))
}

/// # Safety
/// `c` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ke_collection_is_ke(c: *const KeCollection, out: *mut bool) -> KeStatus {
    guard(|| write(out, is_ke(&handle(c, "collection")?.0)?))
}

/// # Safety
/// `c` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ke_collection_is_hke(
    c: *const KeCollection,
    method: KeHkeMethod,
    out: *mut bool,
) -> KeStatus {
    guard(|| {
        let m = match method {
            KeHkeMethod::Brute => HkeMethod::Brute,
            KeHkeMethod::Duality => HkeMethod::Duality,
            KeHkeMethod::Existential => HkeMethod::Existential,
        };
        write(out, m.is_hke(&handle(c, "collection")?.0, &limits())?)
    })
}

/// The m-invariant; `KE_STATUS_HYPOTHESIS_FAILS` when the single-removal
/// values differ or there are fewer than two sets.
///
/// # Safety
/// `c` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ke_collection_compute_m(
    c: *const KeCollection,
    out: *mut i64,
) -> KeStatus {
    guard(|| write(out, compute_m(&handle(c, "collection")?.0)?.m))
}

/// Whether the collection lies inside the maximum independent sets of
/// some graph.
///
/// # Safety
/// `c` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ke_collection_is_realizable(
    c: *const KeCollection,
    out: *mut bool,
) -> KeStatus {
    guard(|| {
        let r = realizable_in_some_omega_bounded(&handle(c, "collection")?.0, &limits())?;
        write(out, r.realizable)
    })
}

// ---- graphs ----

/// Graph on vertices `1..=n`; `edges` holds `2 * edge_count` endpoints.
///
/// # Safety
/// `edges` must hold `2 * edge_count` values (it may be null when
/// `edge_count` is zero); `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ke_graph_new(
    n: usize,
    edges: *const u32,
    edge_count: usize,
    out: *mut *mut KeGraph,
) -> KeStatus {
    guard(|| {
        let flat = match (edges.is_null(), edge_count) {
            (_, 0) => &[][..],
            (true, _) => return Err(null("edges")),
            (false, k) => std::slice::from_raw_parts(edges, 2 * k),
        };
        let g = Graph::new(n, flat.chunks_exact(2).map(|p| (p[0], p[1])))?;
        write(out, Box::into_raw(Box::new(KeGraph(g))))
    })
}

/// Parses `{"n": 3, "edges": [[1,2],[2,3]]}`.
///
/// # Safety
/// `json` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ke_graph_from_json(
    json: *const c_char,
    out: *mut *mut KeGraph,
) -> KeStatus {
    guard(|| {
        let g = parse_graph(str_arg(json, "json")?, Format::Json)?;
        write(out, Box::into_raw(Box::new(KeGraph(g))))
    })
}

/// Parses the text format: a header `n <count>`, then one `u v` per line.
///
/// # Safety
/// `text` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ke_graph_from_edge_list(
    text: *const c_char,
    out: *mut *mut KeGraph,
) -> KeStatus {
    guard(|| {
        let g = parse_edge_list(str_arg(text, "text")?)?;
        write(out, Box::into_raw(Box::new(KeGraph(g))))
    })
}

/// # Safety
/// `g` must be null or a handle from this library not yet freed.
#[no_mangle]
pub unsafe extern "C" fn ke_graph_free(g: *mut KeGraph) {
    if !g.is_null() {
        drop(Box::from_raw(g));
    }
}

/// Independence number.
///
/// # Safety
/// `g` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ke_graph_alpha(g: *const KeGraph, out: *mut usize) -> KeStatus {
    guard(|| write(out, alpha_graph_bounded(&handle(g, "graph")?.0, &limits())?))
}

/// Matching number.
///
/// # Safety
/// `g` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ke_graph_mu(g: *const KeGraph, out: *mut usize) -> KeStatus {
    guard(|| write(out, mu_bounded(&handle(g, "graph")?.0, &limits())?.size))
}

/// Whether alpha + mu equals the vertex count.
///
/// # Safety
/// `g` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ke_graph_is_ke(g: *const KeGraph, out: *mut bool) -> KeStatus {
    guard(|| write(out, is_ke_graph_bounded(&handle(g, "graph")?.0, &limits())?))
}

/// All maximum independent sets as collection JSON.
///
/// # Safety
/// `g` must be a live handle; `out` must be writable. Free the result with
/// `ke_string_free`.
#[no_mangle]
pub unsafe extern "C" fn ke_graph_omega_json(g: *const KeGraph, out: *mut *mut c_char) -> KeStatus {
    guard(|| {
        let omega = omega_bounded(&handle(g, "graph")?.0, &limits())?;
        let text = serde_json::to_string(&omega).expect("collections serialise");
        write(out, to_c_string(text))
    })
}

/// A KE certificate as JSON `{"collection": ..., "matching": ...}`, or the
/// text `null` when the graph has none.
///
/// # Safety
/// `g` must be a live handle; `out` must be writable. Free the result with
/// `ke_string_free`.
#[no_mangle]
pub unsafe extern "C" fn ke_graph_certificate_json(
    g: *const KeGraph,
    out: *mut *mut c_char,
) -> KeStatus {
    guard(|| {
        let cert = ke_certificate_search_bounded(&handle(g, "graph")?.0, &limits())?;
        let text = serde_json::to_string(&cert).expect("certificates serialise");
        write(out, to_c_string(text))
    })
}

// ---- stress ----

/// Runs a stress suite. `config_json` may be null for the defaults, or a
/// JSON object overriding any of the configuration fields. `passed` gets
/// the verdict; if `report_out` is non-null it receives the JSON-lines
/// report, to be freed with `ke_string_free`.
///
/// # Safety
/// String arguments must be NUL-terminated; `passed` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ke_stress(
    theorem: *const c_char,
    config_json: *const c_char,
    passed: *mut bool,
    report_out: *mut *mut c_char,
) -> KeStatus {
    guard(|| {
        let id: TheoremId = str_arg(theorem, "theorem")?.parse()?;
        let config = if config_json.is_null() {
            TrialConfig::default()
        } else {
            serde_json::from_str(str_arg(config_json, "config_json")?)
                .map_err(|e| Error::Parse(e.to_string()))?
        };
        let report = stress_bounded(id, &config, &limits())?;
        write(passed, report.passed())?;
        if !report_out.is_null() {
            report_out.write(to_c_string(report.to_jsonl()));
        }
        Ok(())
    })
}
