//! C ABI over the `hyperacyclic` library.
//!
//! Hypergraphs and result graphs cross the boundary as opaque handles that
//! the caller releases with the matching `*_free` function. Every entry point
//! returns an [`HaStatus`]; on failure a human-readable message is available
//! from [`ha_last_error_message`] on the same thread.

use hyperacyclic::hgfile::parse_hg;
use hyperacyclic::recognition::classify;
use hyperacyclic::sperner::sperner_acyclic;
use hyperacyclic::subset::{subset_graph_baseline, subset_graph_beta, subset_graph_gamma, subset_graph_interval};
use hyperacyclic::unionjoin::{union_join_gamma, union_join_interval, union_join_via_subset};
use hyperacyclic::{Error, Hypergraph};
use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

/// Result code of every call.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum HaStatus {
    Ok = 0,
    /// A required pointer argument was null.
    NullPointer = 1,
    /// Malformed hypergraph: empty, out-of-range or repeated vertex, vertex
    /// in no hyperedge, unparsable text, or invalid UTF-8.
    InvalidInput = 2,
    NotAcyclic = 3,
    NotBeta = 4,
    NotGamma = 5,
    NotInterval = 6,
    /// The output buffer is too small; the required length was written.
    BufferTooSmall = 7,
    /// A Rust panic was caught at the boundary.
    Internal = 8,
}

/// Subset-graph algorithm selector.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum HaSubsetAlgo {
    Baseline = 0,
    Beta = 1,
    Gamma = 2,
    Interval = 3,
}

/// Union-join-graph algorithm selector.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum HaUnionJoinAlgo {
    /// Join-tree separators driven by the bitset subset graph.
    Generic = 0,
    Gamma = 1,
    Interval = 2,
}

/// Position of a hypergraph in the acyclicity hierarchy.
#[repr(C)]
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct HaClass {
    pub is_alpha: bool,
    pub is_hypertree: bool,
    pub is_beta: bool,
    pub is_gamma: bool,
    pub is_interval: bool,
}

/// Opaque hypergraph handle.
pub struct HaHypergraph(Hypergraph);

/// Opaque graph handle on hyperedge ids `0..m`. Undirected graphs store
/// each edge once with the smaller endpoint first.
pub struct HaGraph {
    directed: bool,
    edges: Vec<(usize, usize)>,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: String) {
    let msg = CString::new(msg.replace('\0', " ")).expect("interior NULs removed");
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(msg));
}

fn status_of(e: &Error) -> HaStatus {
    match e {
        Error::NotAcyclic => HaStatus::NotAcyclic,
        Error::NotBeta => HaStatus::NotBeta,
        Error::NotGamma => HaStatus::NotGamma,
        Error::NotInterval => HaStatus::NotInterval,
        _ => HaStatus::InvalidInput,
    }
}

/// Runs `f`, converting errors and panics into status codes.
fn guard(f: impl FnOnce() -> Result<(), HaStatus>) -> HaStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => HaStatus::Ok,
        Ok(Err(s)) => s,
        Err(payload) => {
            let msg = payload
                .downcast_ref::<&str>()
                .map(|s| s.to_string())
                .or_else(|| payload.downcast_ref::<String>().cloned())
                .unwrap_or_else(|| "panic".into());
            set_error(format!("internal error: {msg}"));
            HaStatus::Internal
        }
    }
}

fn fail(e: Error) -> HaStatus {
    set_error(e.to_string());
    status_of(&e)
}

fn null(what: &str) -> HaStatus {
    set_error(format!("{what} is null"));
    HaStatus::NullPointer
}

/// # Safety
/// `p` is null or points to a live value of `T`.
unsafe fn deref<'a, T>(p: *const T, what: &str) -> Result<&'a T, HaStatus> {
    // SAFETY: the caller guarantees `p` is null or valid.
    unsafe { p.as_ref() }.ok_or_else(|| null(what))
}

/// # Safety
/// `out` is null or valid for a write of `T`.
unsafe fn write_out<T>(out: *mut T, value: T) -> Result<(), HaStatus> {
    if out.is_null() {
        return Err(null("output pointer"));
    }
    // SAFETY: non-null and valid per the caller's contract.
    unsafe { out.write(value) };
    Ok(())
}

/// Message describing the last failed call on this thread, or null if none
/// failed yet. Valid until the next failing call on this thread.
#[no_mangle]
pub extern "C" fn ha_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |s| s.as_ptr()))
}

/// Static description of a status code.
#[no_mangle]
pub extern "C" fn ha_status_name(status: HaStatus) -> *const c_char {
    let s: &'static CStr = match status {
        HaStatus::Ok => c"ok",
        HaStatus::NullPointer => c"null pointer",
        HaStatus::InvalidInput => c"invalid input",
        HaStatus::NotAcyclic => c"not alpha-acyclic",
        HaStatus::NotBeta => c"not beta-acyclic",
        HaStatus::NotGamma => c"not gamma-acyclic",
        HaStatus::NotInterval => c"not an interval hypergraph",
        HaStatus::BufferTooSmall => c"buffer too small",
        HaStatus::Internal => c"internal error",
    };
    s.as_ptr()
}

/// Builds a hypergraph on vertices `0..n` from `m` hyperedges in compressed
/// form: hyperedge `j` is `vertices[offsets[j] .. offsets[j+1]]`, so
/// `offsets` holds `m + 1` non-decreasing entries starting at 0.
///
/// # Safety
/// `offsets` points to `m + 1` readable values and `vertices` to
/// `offsets[m]` readable values (it may be null when that is 0). `out` is
/// valid for a write.
#[no_mangle]
pub unsafe extern "C" fn ha_hypergraph_new(
    n: usize,
    m: usize,
    offsets: *const usize,
    vertices: *const usize,
    out: *mut *mut HaHypergraph,
) -> HaStatus {
    guard(|| {
        if offsets.is_null() {
            return Err(null("offsets"));
        }
        // SAFETY: `offsets` holds `m + 1` values per the contract.
        let offsets = unsafe { std::slice::from_raw_parts(offsets, m + 1) };
        let total = offsets[m];
        if offsets[0] != 0 || offsets.windows(2).any(|w| w[0] > w[1]) {
            set_error("offsets must start at 0 and be non-decreasing".into());
            return Err(HaStatus::InvalidInput);
        }
        let vertices: &[usize] = if total == 0 {
            &[]
        } else if vertices.is_null() {
            return Err(null("vertices"));
        } else {
            // SAFETY: `vertices` holds `offsets[m]` values per the contract.
            unsafe { std::slice::from_raw_parts(vertices, total) }
        };
        let edges = offsets.windows(2).map(|w| vertices[w[0]..w[1]].to_vec()).collect();
        let h = Hypergraph::new(n, edges).map_err(fail)?;
        // SAFETY: `out` is valid for a write per the contract.
        unsafe { write_out(out, Box::into_raw(Box::new(HaHypergraph(h)))) }
    })
}

/// Parses the line-oriented text format: one hyperedge per line, vertex
/// names separated by whitespace, `#` starting a comment.
///
/// # Safety
/// `text` is a NUL-terminated string and `out` is valid for a write.
#[no_mangle]
pub unsafe extern "C" fn ha_hypergraph_parse(text: *const c_char, out: *mut *mut HaHypergraph) -> HaStatus {
    guard(|| {
        if text.is_null() {
            return Err(null("text"));
        }
        // SAFETY: NUL-terminated per the contract.
        let text = unsafe { CStr::from_ptr(text) }.to_str().map_err(|e| {
            set_error(format!("text is not UTF-8: {e}"));
            HaStatus::InvalidInput
        })?;
        let h = parse_hg(text).map_err(fail)?;
        // SAFETY: `out` is valid for a write per the contract.
        unsafe { write_out(out, Box::into_raw(Box::new(HaHypergraph(h)))) }
    })
}

/// Releases a hypergraph. Null is ignored.
///
/// # Safety
/// `h` is null or a handle from this library not yet freed.
#[no_mangle]
pub unsafe extern "C" fn ha_hypergraph_free(h: *mut HaHypergraph) {
    if !h.is_null() {
        // SAFETY: created by `Box::into_raw` and not yet freed.
        drop(unsafe { Box::from_raw(h) });
    }
}

/// Writes the vertex count, hyperedge count and total size; any output
/// pointer may be null.
///
/// # Safety
/// `h` is a live handle; non-null outputs are valid for a write.
#[no_mangle]
pub unsafe extern "C" fn ha_hypergraph_counts(
    h: *const HaHypergraph,
    n: *mut usize,
    m: *mut usize,
    size: *mut usize,
) -> HaStatus {
    guard(|| {
        // SAFETY: live handle per the contract.
        let h = &unsafe { deref(h, "hypergraph") }?.0;
        for (p, v) in [(n, h.n()), (m, h.m()), (size, h.size())] {
            if !p.is_null() {
                // SAFETY: non-null outputs are valid per the contract.
                unsafe { p.write(v) };
            }
        }
        Ok(())
    })
}

/// Classifies `h` within the acyclicity hierarchy.
///
/// # Safety
/// `h` is a live handle and `out` is valid for a write.
#[no_mangle]
pub unsafe extern "C" fn ha_classify(h: *const HaHypergraph, out: *mut HaClass) -> HaStatus {
    guard(|| {
        // SAFETY: live handle per the contract.
        let c = classify(&unsafe { deref(h, "hypergraph") }?.0);
        let class = HaClass {
            is_alpha: c.is_alpha,
            is_hypertree: c.is_hypertree,
            is_beta: c.is_beta,
            is_gamma: c.is_gamma,
            is_interval: c.is_interval,
        };
        // SAFETY: `out` is valid per the contract.
        unsafe { write_out(out, class) }
    })
}

/// Whether some hyperedge of the α-acyclic hypergraph `h` is contained in
/// another.
///
/// # Safety
/// `h` is a live handle and `out` is valid for a write.
#[no_mangle]
pub unsafe extern "C" fn ha_sperner(h: *const HaHypergraph, out: *mut bool) -> HaStatus {
    guard(|| {
        // SAFETY: live handle per the contract.
        let found = sperner_acyclic(&unsafe { deref(h, "hypergraph") }?.0).map_err(fail)?;
        // SAFETY: `out` is valid per the contract.
        unsafe { write_out(out, found) }
    })
}

/// Subset graph of `h`: edge `(i, j)` iff hyperedge `i` is contained in
/// hyperedge `j` (ties between equal hyperedges give both directions).
///
/// # Safety
/// `h` is a live handle and `out` is valid for a write.
#[no_mangle]
pub unsafe extern "C" fn ha_subset_graph(
    h: *const HaHypergraph,
    algo: HaSubsetAlgo,
    out: *mut *mut HaGraph,
) -> HaStatus {
    guard(|| {
        // SAFETY: live handle per the contract.
        let h = &unsafe { deref(h, "hypergraph") }?.0;
        let g = match algo {
            HaSubsetAlgo::Baseline => subset_graph_baseline(h),
            HaSubsetAlgo::Beta => subset_graph_beta(h).map_err(fail)?,
            HaSubsetAlgo::Gamma => subset_graph_gamma(h).map_err(fail)?,
            HaSubsetAlgo::Interval => subset_graph_interval(h).map_err(fail)?,
        };
        let graph = HaGraph { directed: true, edges: g.edges().to_vec() };
        // SAFETY: `out` is valid per the contract.
        unsafe { write_out(out, Box::into_raw(Box::new(graph))) }
    })
}

/// Union join graph of the α-acyclic hypergraph `h`.
///
/// # Safety
/// `h` is a live handle and `out` is valid for a write.
#[no_mangle]
pub unsafe extern "C" fn ha_union_join(
    h: *const HaHypergraph,
    algo: HaUnionJoinAlgo,
    out: *mut *mut HaGraph,
) -> HaStatus {
    guard(|| {
        // SAFETY: live handle per the contract.
        let h = &unsafe { deref(h, "hypergraph") }?.0;
        let g = match algo {
            HaUnionJoinAlgo::Generic => union_join_via_subset(h, |s| Ok(subset_graph_baseline(s))),
            HaUnionJoinAlgo::Gamma => union_join_gamma(h),
            HaUnionJoinAlgo::Interval => union_join_interval(h),
        }
        .map_err(fail)?;
        let graph = HaGraph { directed: false, edges: g.edges().to_vec() };
        // SAFETY: `out` is valid per the contract.
        unsafe { write_out(out, Box::into_raw(Box::new(graph))) }
    })
}

/// Releases a graph. Null is ignored.
///
/// # Safety
/// `g` is null or a handle from this library not yet freed.
#[no_mangle]
pub unsafe extern "C" fn ha_graph_free(g: *mut HaGraph) {
    if !g.is_null() {
        // SAFETY: created by `Box::into_raw` and not yet freed.
        drop(unsafe { Box::from_raw(g) });
    }
}

/// Number of edges of `g`.
///
/// # Safety
/// `g` is a live handle and `out` is valid for a write.
#[no_mangle]
pub unsafe extern "C" fn ha_graph_edge_count(g: *const HaGraph, out: *mut usize) -> HaStatus {
    guard(|| {
        // SAFETY: live handle per the contract.
        let count = unsafe { deref(g, "graph") }?.edges.len();
        // SAFETY: `out` is valid per the contract.
        unsafe { write_out(out, count) }
    })
}

/// Whether `g` is directed (a subset graph) or undirected (a union join
/// graph).
///
/// # Safety
/// `g` is a live handle and `out` is valid for a write.
#[no_mangle]
pub unsafe extern "C" fn ha_graph_is_directed(g: *const HaGraph, out: *mut bool) -> HaStatus {
    guard(|| {
        // SAFETY: live handle per the contract.
        let directed = unsafe { deref(g, "graph") }?.directed;
        // SAFETY: `out` is valid per the contract.
        unsafe { write_out(out, directed) }
    })
}

/// Copies the edges of `g`, sorted, into `pairs` as `(source, target)`
/// pairs of 0-based hyperedge ids: `2 * count` values. `capacity` is the
/// length of `pairs` in values; when it is too small nothing is copied,
/// `*required` receives the needed length and `BufferTooSmall` is returned.
///
/// # Safety
/// `g` is a live handle, `pairs` is valid for `capacity` writes (or null
/// with capacity 0), and `required` is null or valid for a write.
#[no_mangle]
pub unsafe extern "C" fn ha_graph_edges(
    g: *const HaGraph,
    pairs: *mut usize,
    capacity: usize,
    required: *mut usize,
) -> HaStatus {
    guard(|| {
        // SAFETY: live handle per the contract.
        let edges = &unsafe { deref(g, "graph") }?.edges;
        let need = 2 * edges.len();
        if !required.is_null() {
            // SAFETY: non-null `required` is valid per the contract.
            unsafe { required.write(need) };
        }
        if need == 0 {
            return Ok(());
        }
        if capacity < need {
            set_error(format!("edge buffer holds {capacity} values, {need} needed"));
            return Err(HaStatus::BufferTooSmall);
        }
        if pairs.is_null() {
            return Err(null("pairs"));
        }
        // SAFETY: `pairs` is valid for `capacity >= need` writes.
        let dst = unsafe { std::slice::from_raw_parts_mut(pairs, need) };
        for (chunk, &(a, b)) in dst.chunks_exact_mut(2).zip(edges) {
            chunk[0] = a;
            chunk[1] = b;
        }
        Ok(())
    })
}
