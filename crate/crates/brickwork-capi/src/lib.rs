//! C ABI over the brickwork library. Every entry point follows one
//! contract: pointers are checked before use, panics never cross the
//! boundary, the return value is a `BwStatus`, and the most recent
//! failure message is retrievable per thread through
//! `bw_last_error_message`. Handles are opaque and freed exactly once
//! by their matching `_free` function.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::sync::Arc;

use brickwork::classfn::{character_table, kronecker, CharacterTable};
use brickwork::cycleindex::expected_k_cycles;
use brickwork::error::Error;
use brickwork::homology::verify_alternating_identity;
use brickwork::partition::Partition;
use brickwork::permutation::Permutation;
use brickwork::tiling::{crackless_count, ordered_count, unordered_count};
use brickwork::verify::{run_suite, tally};

/// Status code returned by every fallible entry point.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BwStatus {
    /// The call succeeded and every output parameter is set.
    Ok = 0,
    /// A precondition on the inputs does not hold.
    InvalidInput = 1,
    /// Text input could not be parsed.
    Parse = 2,
    /// A series did not reach a constant tail within its truncation.
    NotStabilized = 3,
    /// The request exceeds the configured desk-scale resource caps.
    ResourceLimit = 4,
    /// An internal consistency check failed; report this as a bug.
    Internal = 5,
    /// A required pointer argument was null.
    NullPointer = 6,
    /// A string argument was not valid UTF-8.
    Utf8 = 7,
    /// The caller's buffer is too small; the required length is in the
    /// length output parameter.
    BufferTooSmall = 8,
    /// A panic was caught at the boundary; state may be stale but the
    /// process is intact.
    Panic = 9,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: &str) {
    let cleaned = msg.replace('\0', " ");
    LAST_ERROR.with(|slot| {
        *slot.borrow_mut() = Some(CString::new(cleaned).expect("nul bytes removed"));
    });
}

fn status_of(e: &Error) -> BwStatus {
    match e {
        Error::InvalidInput(_) => BwStatus::InvalidInput,
        Error::Parse(_) => BwStatus::Parse,
        Error::NotStabilized { .. } => BwStatus::NotStabilized,
        Error::ResourceLimit(_) => BwStatus::ResourceLimit,
        Error::Internal(_) => BwStatus::Internal,
    }
}

fn fail(e: &Error) -> BwStatus {
    set_error(&e.to_string());
    status_of(e)
}

/// Runs a body with panics caught: a panic sets the thread error
/// message and maps to `BwStatus::Panic` instead of unwinding into the
/// caller.
fn guarded(f: impl FnOnce() -> BwStatus) -> BwStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(status) => status,
        Err(payload) => {
            let msg = payload
                .downcast_ref::<&str>()
                .map(|s| s.to_string())
                .or_else(|| payload.downcast_ref::<String>().cloned())
                .unwrap_or_else(|| "panic with non-string payload".to_string());
            set_error(&format!("caught panic: {msg}"));
            BwStatus::Panic
        }
    }
}

fn null_fail(what: &str) -> BwStatus {
    set_error(&format!("{what} must not be null"));
    BwStatus::NullPointer
}

/// # Safety
/// `s` must be a valid nul-terminated C string.
unsafe fn read_str<'a>(s: *const c_char, what: &str) -> Result<&'a str, BwStatus> {
    if s.is_null() {
        return Err(null_fail(what));
    }
    CStr::from_ptr(s).to_str().map_err(|_| {
        set_error(&format!("{what} is not valid UTF-8"));
        BwStatus::Utf8
    })
}

/// # Safety
/// `parts` must point to `len` readable u32 values, or be null only
/// when `len` is 0.
unsafe fn read_partition(
    parts: *const u32,
    len: usize,
    what: &str,
) -> Result<Partition, BwStatus> {
    if parts.is_null() && len != 0 {
        return Err(null_fail(what));
    }
    let slice = if len == 0 { &[] } else { std::slice::from_raw_parts(parts, len) };
    Partition::new(slice.to_vec()).map_err(|e| fail(&e))
}

/// The library version as a static string; never freed by the caller.
#[no_mangle]
pub extern "C" fn bw_version() -> *const c_char {
    static VERSION: &str = concat!(env!("CARGO_PKG_VERSION"), "\0");
    VERSION.as_ptr().cast()
}

/// The most recent error message on this thread, or null if the last
/// call succeeded. The pointer stays valid until the next failing call
/// on the same thread; the caller must not free it.
#[no_mangle]
pub extern "C" fn bw_last_error_message() -> *const c_char {
    LAST_ERROR.with(|slot| match &*slot.borrow() {
        Some(msg) => msg.as_ptr(),
        None => std::ptr::null(),
    })
}

/// Ordered, unordered, and crackless tiling counts of one shape.
///
/// `perm` is cycle notation like "(3,1)(4)(5,2)" or a one-line word;
/// `shape` points to `shape_len` row lengths, weakly decreasing. A
/// shape weight exceeding n is not an error: all three counts are 0.
///
/// # Safety
/// `perm` must be a valid C string; `shape` must point to `shape_len`
/// readable values; the three output pointers must be writable.
#[no_mangle]
pub unsafe extern "C" fn bw_tiling_counts(
    perm: *const c_char,
    shape: *const u32,
    shape_len: usize,
    out_zeta: *mut u64,
    out_xi: *mut u64,
    out_eta: *mut u64,
) -> BwStatus {
    guarded(|| {
        if out_zeta.is_null() || out_xi.is_null() || out_eta.is_null() {
            return null_fail("count outputs");
        }
        let perm = match read_str(perm, "perm") {
            Ok(s) => s,
            Err(status) => return status,
        };
        let w: Permutation = match perm.parse() {
            Ok(w) => w,
            Err(e) => return fail(&e),
        };
        let shape = match read_partition(shape, shape_len, "shape") {
            Ok(p) => p,
            Err(status) => return status,
        };
        *out_zeta = ordered_count(shape.parts(), &w);
        *out_xi = unordered_count(shape.parts(), &w);
        *out_eta = crackless_count(shape.parts(), &w);
        BwStatus::Ok
    })
}

/// Opaque handle to a memoized character table of one symmetric group.
pub struct BwCharacterTable {
    inner: Arc<CharacterTable>,
}

/// Builds the character table of S_n and returns an owned handle.
///
/// # Safety
/// `out` must be writable. The handle must be released with
/// `bw_character_table_free`.
#[no_mangle]
pub unsafe extern "C" fn bw_character_table_new(
    n: u32,
    out: *mut *mut BwCharacterTable,
) -> BwStatus {
    guarded(|| {
        if out.is_null() {
            return null_fail("out");
        }
        match character_table(n) {
            Ok(inner) => {
                *out = Box::into_raw(Box::new(BwCharacterTable { inner }));
                BwStatus::Ok
            }
            Err(e) => fail(&e),
        }
    })
}

/// Releases a character table handle. Null is accepted and ignored.
///
/// # Safety
/// `table` must be a handle from `bw_character_table_new` that has not
/// been freed already.
#[no_mangle]
pub unsafe extern "C" fn bw_character_table_free(table: *mut BwCharacterTable) {
    if !table.is_null() {
        drop(Box::from_raw(table));
    }
}

/// Number of conjugacy classes (and irreducibles) in the table, or 0
/// for a null handle.
///
/// # Safety
/// `table` must be a live handle or null.
#[no_mangle]
pub unsafe extern "C" fn bw_character_table_class_count(table: *const BwCharacterTable) -> usize {
    if table.is_null() {
        return 0;
    }
    (*table).inner.classes().len()
}

/// One character value: the irreducible indexed by `lambda` evaluated
/// on the class of cycle type `cls`. Both partitions are weakly
/// decreasing part lists of the table's n.
///
/// # Safety
/// `table` must be a live handle; the part arrays must match their
/// lengths; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn bw_character_table_value(
    table: *const BwCharacterTable,
    lambda: *const u32,
    lambda_len: usize,
    cls: *const u32,
    cls_len: usize,
    out: *mut i64,
) -> BwStatus {
    guarded(|| {
        if table.is_null() {
            return null_fail("table");
        }
        if out.is_null() {
            return null_fail("out");
        }
        let lambda = match read_partition(lambda, lambda_len, "lambda") {
            Ok(p) => p,
            Err(status) => return status,
        };
        let cls = match read_partition(cls, cls_len, "class") {
            Ok(p) => p,
            Err(status) => return status,
        };
        match (*table).inner.value(&lambda, &cls) {
            Ok(v) => {
                *out = v;
                BwStatus::Ok
            }
            Err(e) => fail(&e),
        }
    })
}

/// Scalar summary of the alternating tiling identity for one instance.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BwAlternatingReport {
    pub n: u32,
    pub j: u32,
    /// Signed sum of ordered tiling counts over compositions of j.
    pub lhs: i64,
    /// Signed sum of crackless counts over partitions of j.
    pub rhs: i64,
    /// Euler characteristic of the chain complex, sign-normalized.
    pub euler: i64,
    /// Alternating sum of homology dimensions, sign-normalized.
    pub homology_sum: i64,
    /// 1 when all four quantities agree, else 0.
    pub all_equal: u8,
}

/// Builds the tiling complex of `perm` at weight `j`, computes its
/// GF(2) homology, and reports the four quantities of the alternating
/// identity.
///
/// # Safety
/// `perm` must be a valid C string and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn bw_alternating_report(
    perm: *const c_char,
    j: u32,
    out: *mut BwAlternatingReport,
) -> BwStatus {
    guarded(|| {
        if out.is_null() {
            return null_fail("out");
        }
        let perm = match read_str(perm, "perm") {
            Ok(s) => s,
            Err(status) => return status,
        };
        let w: Permutation = match perm.parse() {
            Ok(w) => w,
            Err(e) => return fail(&e),
        };
        match verify_alternating_identity(&w, j) {
            Ok(rep) => {
                *out = BwAlternatingReport {
                    n: rep.n,
                    j: rep.j,
                    lhs: rep.lhs,
                    rhs: rep.rhs,
                    euler: rep.euler,
                    homology_sum: rep.homology_sum,
                    all_equal: u8::from(rep.all_equal),
                };
                BwStatus::Ok
            }
            Err(e) => fail(&e),
        }
    })
}

/// Homology dimensions of the same complex, written into a caller
/// buffer. `out_len` always receives the required length; when the
/// buffer is too small nothing else is written and the call returns
/// the buffer-too-small status.
///
/// # Safety
/// `perm` must be a valid C string, `out_len` writable, and `buf`
/// writable for `buf_len` values (null allowed when `buf_len` is 0).
#[no_mangle]
pub unsafe extern "C" fn bw_homology_dims(
    perm: *const c_char,
    j: u32,
    buf: *mut u64,
    buf_len: usize,
    out_len: *mut usize,
) -> BwStatus {
    guarded(|| {
        if out_len.is_null() {
            return null_fail("out_len");
        }
        if buf.is_null() && buf_len != 0 {
            return null_fail("buf");
        }
        let perm = match read_str(perm, "perm") {
            Ok(s) => s,
            Err(status) => return status,
        };
        let w: Permutation = match perm.parse() {
            Ok(w) => w,
            Err(e) => return fail(&e),
        };
        match verify_alternating_identity(&w, j) {
            Ok(rep) => {
                *out_len = rep.homology.len();
                if rep.homology.len() > buf_len {
                    set_error(&format!(
                        "buffer holds {buf_len} values, {} required",
                        rep.homology.len()
                    ));
                    return BwStatus::BufferTooSmall;
                }
                for (i, &d) in rep.homology.iter().enumerate() {
                    *buf.add(i) = d as u64;
                }
                BwStatus::Ok
            }
            Err(e) => fail(&e),
        }
    })
}

/// One Kronecker coefficient. The three partitions must share one
/// weight.
///
/// # Safety
/// Part arrays must match their lengths; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn bw_kronecker(
    lambda: *const u32,
    lambda_len: usize,
    mu: *const u32,
    mu_len: usize,
    nu: *const u32,
    nu_len: usize,
    out: *mut u64,
) -> BwStatus {
    guarded(|| {
        if out.is_null() {
            return null_fail("out");
        }
        let lambda = match read_partition(lambda, lambda_len, "lambda") {
            Ok(p) => p,
            Err(status) => return status,
        };
        let mu = match read_partition(mu, mu_len, "mu") {
            Ok(p) => p,
            Err(status) => return status,
        };
        let nu = match read_partition(nu, nu_len, "nu") {
            Ok(p) => p,
            Err(status) => return status,
        };
        match kronecker(&lambda, &mu, &nu) {
            Ok(g) => {
                *out = g;
                BwStatus::Ok
            }
            Err(e) => fail(&e),
        }
    })
}

/// Class-weighted mean count of k-cycles over S_n as an exact
/// fraction. For k <= n this is always 1/k.
///
/// # Safety
/// Both output pointers must be writable.
#[no_mangle]
pub unsafe extern "C" fn bw_expected_k_cycles(
    n: u32,
    k: u32,
    out_numer: *mut i64,
    out_denom: *mut u64,
) -> BwStatus {
    guarded(|| {
        if out_numer.is_null() || out_denom.is_null() {
            return null_fail("outputs");
        }
        match expected_k_cycles(n, k) {
            Ok(v) => {
                let numer = match i64::try_from(v.numer()) {
                    Ok(x) => x,
                    Err(_) => {
                        set_error("numerator exceeds i64");
                        return BwStatus::Internal;
                    }
                };
                let denom = match u64::try_from(v.denom()) {
                    Ok(x) => x,
                    Err(_) => {
                        set_error("denominator exceeds u64");
                        return BwStatus::Internal;
                    }
                };
                *out_numer = numer;
                *out_denom = denom;
                BwStatus::Ok
            }
            Err(e) => fail(&e),
        }
    })
}

/// Runs a verification suite by name ("alternating", "doubilet",
/// "young", "charpoly", "rosas", "permutohedron", or "all"). Negative
/// bounds select each suite's default. `out_failed` receives the
/// number of failing instances; the status only reports whether the
/// suite could run.
///
/// # Safety
/// `suite` must be a valid C string and `out_failed` writable.
#[no_mangle]
pub unsafe extern "C" fn bw_verify_suite(
    suite: *const c_char,
    max_n: i32,
    max_k: i32,
    out_failed: *mut usize,
) -> BwStatus {
    guarded(|| {
        if out_failed.is_null() {
            return null_fail("out_failed");
        }
        let suite = match read_str(suite, "suite") {
            Ok(s) => s,
            Err(status) => return status,
        };
        let max_n = (max_n >= 0).then_some(max_n as u32);
        let max_k = (max_k >= 0).then_some(max_k as usize);
        match run_suite(suite, max_n, max_k) {
            Ok(reports) => {
                let (_, failed) = tally(&reports);
                *out_failed = failed;
                BwStatus::Ok
            }
            Err(e) => fail(&e),
        }
    })
}
