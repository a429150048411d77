//! C ABI for `genus-core`.
//!
//! Every entry point returns a [`GenusStatus`] and writes results through
//! out-pointers. Tables and distributions are opaque heap handles; release
//! them with the matching `*_free`. Strings returned through out-pointers
//! are owned by the caller and go back through [`genus_string_free`]. After
//! a non-OK status, [`genus_last_error`] describes the failure on the
//! calling thread.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};

use genus_core::cli::OutputRecord;
use genus_core::embed_oracle::{self, Multigraph, OracleError};
use genus_core::families::{self, FamilyError, FamilyId, FamilyTable, Method};
use genus_core::graphfam::{self, GraphFamError, GraphFamily, NamedFamily};
use genus_core::seqcore::{is_log_concave, is_unimodal, mode_interval, GenusDistribution};

/// Result codes shared by every function.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GenusStatus {
    Ok = 0,
    NullArgument = 1,
    InvalidArgument = 2,
    OutOfRange = 3,
    MethodUnavailable = 4,
    VerificationFailed = 5,
    BudgetExceeded = 6,
    Unsupported = 7,
    Panic = 8,
}

/// Values accepted by the `method` argument of [`genus_family_distribution`].
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GenusMethod {
    Closed = 0,
    Recurrence = 1,
    Auto = 2,
}

/// Values accepted by the `family` argument of the graph entry points.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GenusGraph {
    L = 0,
    Cl = 1,
    Ml = 2,
    Rl = 3,
    R = 4,
}

/// Genus distributions of all eleven surface families up to some `n`.
pub struct GenusTable {
    inner: FamilyTable,
}

/// One genus distribution.
pub struct GenusDist {
    inner: GenusDistribution,
    subject: String,
    n: Option<u32>,
    method: &'static str,
}

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(msg: impl Into<String>) {
    let msg = CString::new(msg.into().replace('\0', " ")).expect("nul bytes removed");
    LAST_ERROR.with(|e| *e.borrow_mut() = msg);
}

type FfiResult<T> = Result<T, (GenusStatus, String)>;

fn fail<T>(status: GenusStatus, msg: impl Into<String>) -> FfiResult<T> {
    Err((status, msg.into()))
}

/// Runs `body`, stores its value in `*out` and maps errors and panics to a
/// status.
fn guard<T>(out: *mut T, body: impl FnOnce() -> FfiResult<T>) -> GenusStatus {
    if out.is_null() {
        set_error("output pointer is null");
        return GenusStatus::NullArgument;
    }
    match catch_unwind(AssertUnwindSafe(body)) {
        Ok(Ok(v)) => {
            // SAFETY: `out` is non-null and the caller promises it is writable.
            unsafe { out.write(v) };
            set_error("");
            GenusStatus::Ok
        }
        Ok(Err((status, msg))) => {
            set_error(msg);
            status
        }
        Err(_) => {
            set_error("internal panic");
            GenusStatus::Panic
        }
    }
}

fn family_status(e: &FamilyError) -> GenusStatus {
    match e {
        FamilyError::InvalidFamily(_) => GenusStatus::InvalidArgument,
        FamilyError::NOutOfRange { .. } => GenusStatus::OutOfRange,
        FamilyError::MethodUnavailable { .. } => GenusStatus::MethodUnavailable,
        _ => GenusStatus::VerificationFailed,
    }
}

fn oracle_status(e: &OracleError) -> GenusStatus {
    match e {
        OracleError::BudgetExceeded { .. } => GenusStatus::BudgetExceeded,
        OracleError::Unsupported(_) => GenusStatus::Unsupported,
        OracleError::OutOfRange { .. } => GenusStatus::OutOfRange,
        OracleError::NonIntegerGenus { .. } => GenusStatus::VerificationFailed,
        _ => GenusStatus::InvalidArgument,
    }
}

fn graph_family(code: u32) -> FfiResult<GraphFamily> {
    Ok(match code {
        0 => GraphFamily::L,
        1 => GraphFamily::CL,
        2 => GraphFamily::ML,
        3 => GraphFamily::RL,
        4 => GraphFamily::R,
        _ => {
            return fail(
                GenusStatus::InvalidArgument,
                format!("unknown graph family code {code}"),
            )
        }
    })
}

fn named(code: u32, n: u32) -> FfiResult<NamedFamily> {
    NamedFamily::new(graph_family(code)?, n).map_err(|e| (GenusStatus::OutOfRange, e.to_string()))
}

fn boxed_dist(
    inner: GenusDistribution,
    subject: String,
    n: Option<u32>,
    method: &'static str,
) -> *mut GenusDist {
    Box::into_raw(Box::new(GenusDist {
        inner,
        subject,
        n,
        method,
    }))
}

/// # Safety
/// `p` is null or a live handle produced by this library.
unsafe fn deref<'a, T>(p: *const T) -> FfiResult<&'a T> {
    // SAFETY: forwarded to the caller.
    unsafe { p.as_ref() }.ok_or((GenusStatus::NullArgument, "handle is null".to_string()))
}

fn c_string(s: String) -> *mut c_char {
    CString::new(s).expect("no interior nul").into_raw()
}

/// Message for the most recent failure on this thread, or an empty string.
/// The pointer stays valid until the next call into this library on the
/// same thread.
#[no_mangle]
pub extern "C" fn genus_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

/// Builds the table of all surface families for `0 <= n <= max_n`.
///
/// # Safety
/// `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn genus_table_build(max_n: u32, out: *mut *mut GenusTable) -> GenusStatus {
    guard(out, || {
        let inner = families::build_table(max_n);
        Ok(Box::into_raw(Box::new(GenusTable { inner })))
    })
}

/// # Safety
/// `table` is a live handle; `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn genus_table_max_n(table: *const GenusTable, out: *mut u32) -> GenusStatus {
    // SAFETY: forwarded to the caller.
    guard(out, || Ok(unsafe { deref(table) }?.inner.max_n()))
}

/// Copies row `S_j^n` out of the table into a new distribution handle.
///
/// # Safety
/// `table` is a live handle; `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn genus_table_get(
    table: *const GenusTable,
    j: u32,
    n: u32,
    out: *mut *mut GenusDist,
) -> GenusStatus {
    guard(out, || {
        // SAFETY: forwarded to the caller.
        let table = unsafe { deref(table) }?;
        let fam = FamilyId::new(j).map_err(|e| (GenusStatus::InvalidArgument, e.to_string()))?;
        let row = table.inner.get(fam, n).ok_or((
            GenusStatus::OutOfRange,
            format!("table holds n <= {}", table.inner.max_n()),
        ))?;
        Ok(boxed_dist(
            row.clone(),
            fam.to_string(),
            Some(n),
            "recurrence",
        ))
    })
}

/// # Safety
/// `table` is null or a live handle that is not used afterwards.
#[no_mangle]
pub unsafe extern "C" fn genus_table_free(table: *mut GenusTable) {
    if !table.is_null() {
        // SAFETY: produced by Box::into_raw in genus_table_build.
        drop(unsafe { Box::from_raw(table) });
    }
}

/// `S_j^n` by the method given as a [`GenusMethod`] value. `Auto` computes
/// both routes where a closed form exists and reports
/// `VERIFICATION_FAILED` if they differ.
///
/// # Safety
/// `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn genus_family_distribution(
    j: u32,
    n: u32,
    method: u32,
    out: *mut *mut GenusDist,
) -> GenusStatus {
    guard(out, || {
        let m = match method {
            0 => Method::Closed,
            1 => Method::Recurrence,
            2 => Method::Auto,
            _ => {
                return fail(
                    GenusStatus::InvalidArgument,
                    format!("unknown method code {method}"),
                )
            }
        };
        let fam = FamilyId::new(j).map_err(|e| (GenusStatus::InvalidArgument, e.to_string()))?;
        let d = families::family_distribution(fam, n, m)
            .map_err(|e| (family_status(&e), e.to_string()))?;
        let label = match m {
            Method::Closed => "closed",
            Method::Recurrence => "recurrence",
            Method::Auto => "auto",
        };
        Ok(boxed_dist(d, fam.to_string(), Some(n), label))
    })
}

/// Genus polynomial of a named graph family ([`GenusGraph`] value).
///
/// # Safety
/// `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn genus_graph_polynomial(
    family: u32,
    n: u32,
    out: *mut *mut GenusDist,
) -> GenusStatus {
    guard(out, || {
        let fam = named(family, n)?;
        let d = graphfam::genus_poly(fam).map_err(|e| {
            let status = match e {
                GraphFamError::InvalidAdjustment { .. } => GenusStatus::VerificationFailed,
                _ => GenusStatus::InvalidArgument,
            };
            (status, e.to_string())
        })?;
        Ok(boxed_dist(d, fam.family.to_string(), Some(n), "recurrence"))
    })
}

/// Enumerates every rotation system of a named graph. `R` has no
/// construction and yields `UNSUPPORTED`.
///
/// # Safety
/// `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn genus_oracle_named(
    family: u32,
    n: u32,
    budget: u64,
    out: *mut *mut GenusDist,
) -> GenusStatus {
    guard(out, || {
        let fam = named(family, n)?;
        let d = embed_oracle::build_named_graph(fam)
            .and_then(|g| embed_oracle::enumerate_distribution(&g, budget))
            .map_err(|e| (oracle_status(&e), e.to_string()))?;
        Ok(boxed_dist(d, fam.family.to_string(), Some(n), "oracle"))
    })
}

/// Enumerates every rotation system of a connected multigraph given as
/// `edge_count` pairs `(edges[2k], edges[2k + 1])`.
///
/// # Safety
/// `edges` points to `2 * edge_count` readable values (it may be null when
/// `edge_count` is zero); `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn genus_oracle_edges(
    vertex_count: u32,
    edges: *const u32,
    edge_count: usize,
    budget: u64,
    out: *mut *mut GenusDist,
) -> GenusStatus {
    guard(out, || {
        let flat: &[u32] = if edge_count == 0 {
            &[]
        } else if edges.is_null() {
            return fail(GenusStatus::NullArgument, "edge array is null");
        } else {
            // SAFETY: the caller guarantees 2 * edge_count readable values.
            unsafe { std::slice::from_raw_parts(edges, 2 * edge_count) }
        };
        let pairs = flat
            .chunks_exact(2)
            .map(|p| (p[0] as usize, p[1] as usize))
            .collect();
        let d = Multigraph::new(vertex_count as usize, pairs)
            .and_then(|g| embed_oracle::enumerate_distribution(&g, budget))
            .map_err(|e| (oracle_status(&e), e.to_string()))?;
        Ok(boxed_dist(d, "custom".into(), None, "oracle"))
    })
}

/// # Safety
/// `dist` is a live handle; `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn genus_dist_offset(dist: *const GenusDist, out: *mut usize) -> GenusStatus {
    // SAFETY: forwarded to the caller.
    guard(out, || Ok(unsafe { deref(dist) }?.inner.offset()))
}

/// Number of stored entries, from the minimum to the maximum genus.
///
/// # Safety
/// `dist` is a live handle; `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn genus_dist_len(dist: *const GenusDist, out: *mut usize) -> GenusStatus {
    // SAFETY: forwarded to the caller.
    guard(out, || Ok(unsafe { deref(dist) }?.inner.len()))
}

/// Count of embeddings of genus `genus`, as a decimal string. Genera
/// outside the support give "0".
///
/// # Safety
/// `dist` is a live handle; `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn genus_dist_coeff(
    dist: *const GenusDist,
    genus: usize,
    out: *mut *mut c_char,
) -> GenusStatus {
    // SAFETY: forwarded to the caller.
    guard(out, || {
        Ok(c_string(
            unsafe { deref(dist) }?.inner.get(genus).to_string(),
        ))
    })
}

/// # Safety
/// `dist` is a live handle; `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn genus_dist_is_unimodal(
    dist: *const GenusDist,
    out: *mut bool,
) -> GenusStatus {
    // SAFETY: forwarded to the caller.
    guard(out, || Ok(is_unimodal(&unsafe { deref(dist) }?.inner)))
}

/// # Safety
/// `dist` is a live handle; `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn genus_dist_is_log_concave(
    dist: *const GenusDist,
    out: *mut bool,
) -> GenusStatus {
    // SAFETY: forwarded to the caller.
    guard(out, || Ok(is_log_concave(&unsafe { deref(dist) }?.inner)))
}

/// Mode interval `[lo, hi]` in absolute genus. For a non-unimodal
/// distribution this is the leftmost maximal run.
///
/// # Safety
/// `dist` is a live handle; `lo` and `hi` are writable.
#[no_mangle]
pub unsafe extern "C" fn genus_dist_modes(
    dist: *const GenusDist,
    lo: *mut usize,
    hi: *mut usize,
) -> GenusStatus {
    if hi.is_null() {
        set_error("output pointer is null");
        return GenusStatus::NullArgument;
    }
    guard(lo, || {
        // SAFETY: forwarded to the caller.
        let m = mode_interval(&unsafe { deref(dist) }?.inner).interval;
        // SAFETY: checked non-null above; the caller promises it is writable.
        unsafe { hi.write(m.hi) };
        Ok(m.lo)
    })
}

/// The same JSON object the command-line tool prints.
///
/// # Safety
/// `dist` is a live handle; `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn genus_dist_to_json(
    dist: *const GenusDist,
    out: *mut *mut c_char,
) -> GenusStatus {
    guard(out, || {
        // SAFETY: forwarded to the caller.
        let d = unsafe { deref(dist) }?;
        Ok(c_string(
            OutputRecord::new(d.subject.clone(), d.n, d.method, &d.inner).to_json(),
        ))
    })
}

/// # Safety
/// `dist` is null or a live handle that is not used afterwards.
#[no_mangle]
pub unsafe extern "C" fn genus_dist_free(dist: *mut GenusDist) {
    if !dist.is_null() {
        // SAFETY: produced by Box::into_raw in boxed_dist.
        drop(unsafe { Box::from_raw(dist) });
    }
}

/// # Safety
/// `s` is null or a string returned by this library that is not used
/// afterwards.
#[no_mangle]
pub unsafe extern "C" fn genus_string_free(s: *mut c_char) {
    if !s.is_null() {
        // SAFETY: produced by CString::into_raw in c_string.
        drop(unsafe { CString::from_raw(s) });
    }
}

/// Reads a NUL-terminated edge list in the `u v` per line format and
/// enumerates it.
///
/// # Safety
/// `text` is a NUL-terminated string; `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn genus_oracle_edge_list(
    text: *const c_char,
    budget: u64,
    out: *mut *mut GenusDist,
) -> GenusStatus {
    guard(out, || {
        if text.is_null() {
            return fail(GenusStatus::NullArgument, "text is null");
        }
        // SAFETY: the caller guarantees a NUL-terminated string.
        let text = unsafe { CStr::from_ptr(text) }
            .to_str()
            .map_err(|e| (GenusStatus::InvalidArgument, e.to_string()))?;
        let d = embed_oracle::parse_edge_list(text)
            .and_then(|g| embed_oracle::enumerate_distribution(&g, budget))
            .map_err(|e| (oracle_status(&e), e.to_string()))?;
        Ok(boxed_dist(d, "custom".into(), None, "oracle"))
    })
}
