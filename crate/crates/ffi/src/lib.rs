// SPDX-License-Identifier: Apache-2.0

//! C ABI over `prodgraph`.
//!
//! Graphs are opaque `PgGraph` handles created by the `pg_graph_*`
//! constructors and released with `pg_graph_free`. Every fallible call
//! returns a `PgStatus`; on failure `pg_last_error_message` describes the
//! error for the calling thread. Panics are caught at the boundary and
//! reported as `PG_STATUS_PANIC`.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;
use std::slice;

use prodgraph::characterize::{decide, DegreeKind, IsoCertificate, Rule};
use prodgraph::io::{read_graph, to_graph6};
use prodgraph::iso::{
    distance_regularity_check, f_n_map, verify_isomorphism, CountFamily, DistanceRegularity, IsoSearch,
    SearchOutcome, VertexBijection, DEFAULT_NODE_BUDGET,
};
use prodgraph::spectra::{adjacency_spectrum, distance_spectrum};
use prodgraph::{product, Error, Graph, ProductKind};

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PgStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidArgument = 2,
    NotConnected = 3,
    ParseError = 4,
    BufferTooSmall = 5,
    BudgetExceeded = 6,
    Hypothesis = 7,
    Panic = 8,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PgProductKind {
    Cartesian = 0,
    Kronecker = 1,
    Strong = 2,
    Lexicographic = 3,
}

impl From<PgProductKind> for ProductKind {
    fn from(k: PgProductKind) -> Self {
        match k {
            PgProductKind::Cartesian => ProductKind::Cartesian,
            PgProductKind::Kronecker => ProductKind::Kronecker,
            PgProductKind::Strong => ProductKind::Strong,
            PgProductKind::Lexicographic => ProductKind::Lexicographic,
        }
    }
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PgMatrix {
    Adjacency = 0,
    Distance = 1,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PgCountFamily {
    None = 0,
    B = 1,
    C = 2,
}

/// Outcome of `pg_drg_check`. When `regular` is true only `diameter` is
/// meaningful; otherwise the remaining fields describe the witness.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PgDrgResult {
    pub regular: bool,
    pub diameter: usize,
    pub distance: usize,
    pub family: PgCountFamily,
    pub first_x: usize,
    pub first_y: usize,
    pub second_x: usize,
    pub second_y: usize,
    pub first_count: usize,
    pub second_count: usize,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PgRule {
    EqualOddCycles = 0,
    SingleVertexFactors = 1,
    CartKronNotCycles = 2,
    CartKronEvenCycles = 3,
    CartKronEvenOddCycles = 4,
    CartKronUnequalOddCycles = 5,
    CartStrongMaxDegree = 6,
    CartLexMaxDegree = 7,
    KronStrongMaxDegree = 8,
    KronLexMaxDegree = 9,
    StrongLexCompleteFactor = 10,
    StrongLexMinDegree = 11,
}

impl From<Rule> for PgRule {
    fn from(r: Rule) -> Self {
        match r {
            Rule::EqualOddCycles => PgRule::EqualOddCycles,
            Rule::SingleVertexFactors => PgRule::SingleVertexFactors,
            Rule::CartKronNotCycles => PgRule::CartKronNotCycles,
            Rule::CartKronEvenCycles => PgRule::CartKronEvenCycles,
            Rule::CartKronEvenOddCycles => PgRule::CartKronEvenOddCycles,
            Rule::CartKronUnequalOddCycles => PgRule::CartKronUnequalOddCycles,
            Rule::CartStrongMaxDegree => PgRule::CartStrongMaxDegree,
            Rule::CartLexMaxDegree => PgRule::CartLexMaxDegree,
            Rule::KronStrongMaxDegree => PgRule::KronStrongMaxDegree,
            Rule::KronLexMaxDegree => PgRule::KronLexMaxDegree,
            Rule::StrongLexCompleteFactor => PgRule::StrongLexCompleteFactor,
            Rule::StrongLexMinDegree => PgRule::StrongLexMinDegree,
        }
    }
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PgCertificate {
    ExplicitMap = 0,
    MinDegree = 1,
    MaxDegree = 2,
    Connectivity = 3,
    Eigenvalue = 4,
}

/// Outcome of `pg_decide`. `first` and `second` are the two compared
/// invariants (degrees, component counts or smallest eigenvalues) in the
/// order the kinds were passed; both are 0 for an explicit map.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PgDecision {
    pub isomorphic: bool,
    pub rule: PgRule,
    pub certificate: PgCertificate,
    pub first: f64,
    pub second: f64,
}

/// Opaque graph handle.
pub struct PgGraph {
    inner: Graph,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

struct Failure(PgStatus, String);

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let status = match e {
            Error::NotConnected { .. } => PgStatus::NotConnected,
            Error::Parse { .. } => PgStatus::ParseError,
            Error::RequiresOddCycle { .. }
            | Error::NoClosedForm(_)
            | Error::NotTransmissionRegular { .. }
            | Error::SameKind
            | Error::Hypothesis(_) => PgStatus::Hypothesis,
            _ => PgStatus::InvalidArgument,
        };
        Failure(status, e.to_string())
    }
}

fn fail(status: PgStatus, msg: impl Into<String>) -> Failure {
    Failure(status, msg.into())
}

fn set_error(msg: Option<String>) {
    let c = msg.map(|m| CString::new(m.replace('\0', " ")).expect("interior nul removed"));
    LAST_ERROR.with(|e| *e.borrow_mut() = c);
}

fn guard(f: impl FnOnce() -> Result<(), Failure>) -> PgStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => {
            set_error(None);
            PgStatus::Ok
        }
        Ok(Err(Failure(status, msg))) => {
            set_error(Some(msg));
            status
        }
        Err(payload) => {
            let msg = payload
                .downcast_ref::<&str>()
                .map(|s| s.to_string())
                .or_else(|| payload.downcast_ref::<String>().cloned())
                .unwrap_or_else(|| "panic".to_string());
            set_error(Some(format!("panic: {msg}")));
            PgStatus::Panic
        }
    }
}

unsafe fn graph<'a>(g: *const PgGraph) -> Result<&'a Graph, Failure> {
    g.as_ref().map(|g| &g.inner).ok_or_else(|| fail(PgStatus::NullPointer, "null graph handle"))
}

unsafe fn out_ref<'a, T>(p: *mut T) -> Result<&'a mut T, Failure> {
    p.as_mut().ok_or_else(|| fail(PgStatus::NullPointer, "null output pointer"))
}

unsafe fn store_graph(out: *mut *mut PgGraph, g: Graph) -> Result<(), Failure> {
    *out_ref(out)? = Box::into_raw(Box::new(PgGraph { inner: g }));
    Ok(())
}

unsafe fn buffer<'a, T>(p: *mut T, len: usize, need: usize) -> Result<&'a mut [T], Failure> {
    if len < need {
        return Err(fail(PgStatus::BufferTooSmall, format!("buffer holds {len}, need {need}")));
    }
    if need == 0 {
        return Ok(&mut []);
    }
    if p.is_null() {
        return Err(fail(PgStatus::NullPointer, "null buffer"));
    }
    Ok(slice::from_raw_parts_mut(p, need))
}

/// Library version, a static nul-terminated string.
#[no_mangle]
pub extern "C" fn pg_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}

/// Message for the last failed call on this thread, or null. Valid until
/// the next call into the library on the same thread.
#[no_mangle]
pub extern "C" fn pg_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// Builds a graph on `n` vertices from `edge_count` pairs stored flat in
/// `edges` (`2 * edge_count` entries).
///
/// # Safety
/// `edges` must point to `2 * edge_count` readable values (or be null when
/// `edge_count` is 0) and `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn pg_graph_from_edges(
    n: usize,
    edges: *const usize,
    edge_count: usize,
    out: *mut *mut PgGraph,
) -> PgStatus {
    guard(|| {
        let flat: &[usize] = if edge_count == 0 {
            &[]
        } else if edges.is_null() {
            return Err(fail(PgStatus::NullPointer, "null edge array"));
        } else {
            slice::from_raw_parts(edges, 2 * edge_count)
        };
        let pairs: Vec<(usize, usize)> = flat.chunks_exact(2).map(|p| (p[0], p[1])).collect();
        store_graph(out, Graph::from_edge_list(n, &pairs)?)
    })
}

/// Parses graph6 or the `n m` edge-list text format.
///
/// # Safety
/// `text` must be a valid nul-terminated string and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn pg_graph_parse(text: *const c_char, out: *mut *mut PgGraph) -> PgStatus {
    guard(|| {
        if text.is_null() {
            return Err(fail(PgStatus::NullPointer, "null text"));
        }
        let s = CStr::from_ptr(text).to_str().map_err(|e| fail(PgStatus::ParseError, e.to_string()))?;
        store_graph(out, read_graph(s)?)
    })
}

/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn pg_graph_cycle(n: usize, out: *mut *mut PgGraph) -> PgStatus {
    guard(|| store_graph(out, Graph::cycle(n)?))
}

/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn pg_graph_path(n: usize, out: *mut *mut PgGraph) -> PgStatus {
    guard(|| store_graph(out, Graph::path(n)?))
}

/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn pg_graph_complete(n: usize, out: *mut *mut PgGraph) -> PgStatus {
    guard(|| store_graph(out, Graph::complete(n)?))
}

/// Releases a handle; null is ignored.
///
/// # Safety
/// `g` must come from this library and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn pg_graph_free(g: *mut PgGraph) {
    if !g.is_null() {
        drop(Box::from_raw(g));
    }
}

/// Vertex count; 0 for null.
///
/// # Safety
/// `g` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn pg_graph_order(g: *const PgGraph) -> usize {
    g.as_ref().map_or(0, |g| g.inner.order())
}

/// Edge count; 0 for null.
///
/// # Safety
/// `g` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn pg_graph_edge_count(g: *const PgGraph) -> usize {
    g.as_ref().map_or(0, |g| g.inner.edge_count())
}

/// False for null handles and out-of-range vertices.
///
/// # Safety
/// `g` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn pg_graph_has_edge(g: *const PgGraph, u: usize, v: usize) -> bool {
    g.as_ref()
        .is_some_and(|g| u < g.inner.order() && v < g.inner.order() && g.inner.has_edge(u, v))
}

/// graph6 encoding; release the string with `pg_string_free`.
///
/// # Safety
/// `g` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn pg_graph_to_graph6(g: *const PgGraph, out: *mut *mut c_char) -> PgStatus {
    guard(|| {
        let s = CString::new(to_graph6(graph(g)?)).expect("graph6 is printable ASCII");
        *out_ref(out)? = s.into_raw();
        Ok(())
    })
}

/// # Safety
/// `s` must come from this library and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn pg_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Product with row-major labels: vertex `(i, j)` is `i * order(h) + j`.
///
/// # Safety
/// `g` and `h` must be live handles and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn pg_product(
    kind: PgProductKind,
    g: *const PgGraph,
    h: *const PgGraph,
    out: *mut *mut PgGraph,
) -> PgStatus {
    guard(|| {
        let p = product(kind.into(), graph(g)?, graph(h)?).into_graph();
        store_graph(out, p)
    })
}

/// # Safety
/// `g` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn pg_graph_diameter(g: *const PgGraph, out: *mut usize) -> PgStatus {
    guard(|| {
        *out_ref(out)? = graph(g)?.diameter()?;
        Ok(())
    })
}

/// Writes all `order(g)` eigenvalues, nonincreasing, into `buf`. `written`
/// always receives the required length, so a too-small buffer can be
/// retried.
///
/// # Safety
/// `buf` must hold `len` writable values, `written` must be writable.
#[no_mangle]
pub unsafe extern "C" fn pg_spectrum(
    g: *const PgGraph,
    matrix: PgMatrix,
    buf: *mut f64,
    len: usize,
    written: *mut usize,
) -> PgStatus {
    guard(|| {
        let g = graph(g)?;
        let written = out_ref(written)?;
        *written = g.order();
        let dst = buffer(buf, len, g.order())?;
        let s = match matrix {
            PgMatrix::Adjacency => adjacency_spectrum(g),
            PgMatrix::Distance => distance_spectrum(g)?,
        };
        dst.copy_from_slice(s.values());
        Ok(())
    })
}

/// The explicit `C_n □ C_n -> C_n ⊗ C_n` map for odd `n`, `n * n` entries.
///
/// # Safety
/// `buf` must hold `len` writable values.
#[no_mangle]
pub unsafe extern "C" fn pg_fn_map(n: usize, buf: *mut usize, len: usize) -> PgStatus {
    guard(|| {
        let map = f_n_map(n)?;
        buffer(buf, len, map.order())?.copy_from_slice(map.as_slice());
        Ok(())
    })
}

/// Checks that `map` (length `order(g1)`) is an isomorphism `g1 -> g2`.
///
/// # Safety
/// Handles must be live, `map` must hold `len` values, `out` writable.
#[no_mangle]
pub unsafe extern "C" fn pg_verify_isomorphism(
    g1: *const PgGraph,
    g2: *const PgGraph,
    map: *const usize,
    len: usize,
    out: *mut bool,
) -> PgStatus {
    guard(|| {
        let (g1, g2) = (graph(g1)?, graph(g2)?);
        if map.is_null() && len > 0 {
            return Err(fail(PgStatus::NullPointer, "null map"));
        }
        let forward = if len == 0 { Vec::new() } else { slice::from_raw_parts(map, len).to_vec() };
        let phi = VertexBijection::new(forward)?;
        *out_ref(out)? = verify_isomorphism(g1, g2, &phi)?.is_valid();
        Ok(())
    })
}

/// Backtracking search with at most `budget` nodes (0 selects the
/// default). On success `isomorphic` is set and, when true, the map is
/// written to `map_out`. Returns `PG_STATUS_BUDGET_EXCEEDED` when the
/// search gave up.
///
/// # Safety
/// Handles must be live, `map_out` must hold `len` writable values,
/// `isomorphic` must be writable.
#[no_mangle]
pub unsafe extern "C" fn pg_find_isomorphism(
    g1: *const PgGraph,
    g2: *const PgGraph,
    budget: u64,
    map_out: *mut usize,
    len: usize,
    isomorphic: *mut bool,
) -> PgStatus {
    guard(|| {
        let (g1, g2) = (graph(g1)?, graph(g2)?);
        let isomorphic = out_ref(isomorphic)?;
        let budget = if budget == 0 { DEFAULT_NODE_BUDGET } else { budget };
        match IsoSearch::with_budget(budget).run(g1, g2) {
            SearchOutcome::Isomorphic { map, .. } => {
                buffer(map_out, len, map.order())?.copy_from_slice(map.as_slice());
                *isomorphic = true;
                Ok(())
            }
            SearchOutcome::NonIsomorphic { .. } => {
                *isomorphic = false;
                Ok(())
            }
            SearchOutcome::BudgetExceeded { nodes } => {
                Err(fail(PgStatus::BudgetExceeded, format!("gave up after {nodes} nodes")))
            }
        }
    })
}

/// # Safety
/// `g` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn pg_drg_check(g: *const PgGraph, out: *mut PgDrgResult) -> PgStatus {
    guard(|| {
        let mut r = PgDrgResult {
            regular: false,
            diameter: 0,
            distance: 0,
            family: PgCountFamily::None,
            first_x: 0,
            first_y: 0,
            second_x: 0,
            second_y: 0,
            first_count: 0,
            second_count: 0,
        };
        match distance_regularity_check(graph(g)?)? {
            DistanceRegularity::Regular { intersection_array } => {
                r.regular = true;
                r.diameter = intersection_array.diameter();
            }
            DistanceRegularity::NotRegular { witness: w } => {
                r.distance = w.distance;
                r.family = match w.family {
                    CountFamily::B => PgCountFamily::B,
                    CountFamily::C => PgCountFamily::C,
                };
                (r.first_x, r.first_y) = w.first;
                (r.second_x, r.second_y) = w.second;
                r.first_count = w.first_count;
                r.second_count = w.second_count;
            }
        }
        *out_ref(out)? = r;
        Ok(())
    })
}

/// Decides whether `G kind_a H` and `G kind_b H` are isomorphic.
///
/// # Safety
/// Handles must be live and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn pg_decide(
    kind_a: PgProductKind,
    kind_b: PgProductKind,
    g: *const PgGraph,
    h: *const PgGraph,
    out: *mut PgDecision,
) -> PgStatus {
    guard(|| {
        let d = decide(kind_a.into(), kind_b.into(), graph(g)?, graph(h)?)?;
        let (certificate, first, second) = match d.certificate {
            IsoCertificate::ExplicitMap { .. } => (PgCertificate::ExplicitMap, 0.0, 0.0),
            IsoCertificate::DegreeObstruction { which, first, second } => {
                let c = match which {
                    DegreeKind::Min => PgCertificate::MinDegree,
                    DegreeKind::Max => PgCertificate::MaxDegree,
                };
                (c, first as f64, second as f64)
            }
            IsoCertificate::ConnectivityObstruction { first, second } => {
                (PgCertificate::Connectivity, first as f64, second as f64)
            }
            IsoCertificate::EigenvalueObstruction { first, second, .. } => (PgCertificate::Eigenvalue, first, second),
        };
        *out_ref(out)? = PgDecision {
            isomorphic: d.isomorphic,
            rule: d.rule.into(),
            certificate,
            first,
            second,
        };
        Ok(())
    })
}
