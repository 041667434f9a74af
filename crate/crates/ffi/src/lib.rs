//! C ABI over `sedn_lab`.
//!
//! Every fallible call returns a status code (`SEDN_OK` on success) and
//! writes results through out-pointers. On failure the message is kept per
//! thread and read with [`sedn_last_error_message`]. Strings returned by the
//! library are freed with [`sedn_string_free`], labelings with
//! [`sedn_labeling_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use sedn_lab::constructor::construct;
use sedn_lab::graph::{verify, LabelingDocument};
use sedn_lab::oracle::{gamma, xu_bound};
use sedn_lab::solver::{solve_exact, SolveConfig};
use sedn_lab::{EdgeLabeling, SednError, TripartiteParams};

/// Status codes 0 to 5 match the CLI exit codes.
pub const SEDN_OK: i32 = 0;
pub const SEDN_INVALID_LABELING: i32 = 1;
pub const SEDN_CONFLICT: i32 = 2;
pub const SEDN_UNCOVERED_OR_REFUSED: i32 = 3;
pub const SEDN_INTERNAL_MISMATCH: i32 = 4;
pub const SEDN_IO_PARSE: i32 = 5;
/// A required pointer was null or a string was not UTF-8.
pub const SEDN_INVALID_ARGUMENT: i32 = 6;
pub const SEDN_PANIC: i32 = 7;

/// Opaque labeling handle.
pub struct SednLabeling {
    inner: EdgeLabeling,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_last_error(message: String) {
    let c = CString::new(message.replace('\0', " ")).expect("nul bytes removed");
    LAST_ERROR.with(|slot| *slot.borrow_mut() = Some(c));
}

enum Failure {
    Sedn(SednError),
    Argument(&'static str),
}

impl From<SednError> for Failure {
    fn from(e: SednError) -> Self {
        Failure::Sedn(e)
    }
}

fn guard(body: impl FnOnce() -> Result<(), Failure>) -> i32 {
    LAST_ERROR.with(|slot| *slot.borrow_mut() = None);
    match catch_unwind(AssertUnwindSafe(body)) {
        Ok(Ok(())) => SEDN_OK,
        Ok(Err(Failure::Sedn(e))) => {
            set_last_error(e.to_string());
            e.exit_code()
        }
        Ok(Err(Failure::Argument(what))) => {
            set_last_error(what.to_string());
            SEDN_INVALID_ARGUMENT
        }
        Err(_) => {
            set_last_error("internal panic".to_string());
            SEDN_PANIC
        }
    }
}

fn params(m: u32, n: u32, p: u32) -> Result<TripartiteParams, Failure> {
    Ok(TripartiteParams::new(m, n, p)?)
}

unsafe fn out<'a, T>(ptr: *mut T, name: &'static str) -> Result<&'a mut T, Failure> {
    ptr.as_mut().ok_or(Failure::Argument(name))
}

unsafe fn handle<'a>(ptr: *const SednLabeling) -> Result<&'a SednLabeling, Failure> {
    ptr.as_ref().ok_or(Failure::Argument("labeling is null"))
}

fn boxed(inner: EdgeLabeling) -> *mut SednLabeling {
    Box::into_raw(Box::new(SednLabeling { inner }))
}

fn c_string(s: String) -> Result<*mut c_char, Failure> {
    CString::new(s)
        .map(CString::into_raw)
        .map_err(|_| Failure::Argument("string contains a nul byte"))
}

/// Agreed closed-form value. Returns `SEDN_CONFLICT` when the applicable
/// formulas disagree, leaving `out_value` untouched.
///
/// # Safety
/// `out_value` must be valid for writes; null is rejected.
#[no_mangle]
pub unsafe extern "C" fn sedn_gamma(m: u32, n: u32, p: u32, out_value: *mut i64) -> i32 {
    guard(|| {
        let slot = out(out_value, "out_value is null")?;
        *slot = gamma(params(m, n, p)?)?.into_value()?;
        Ok(())
    })
}

/// Closed-form result as JSON, conflicts included. Free with `sedn_string_free`.
///
/// # Safety
/// `out_json` must be valid for writes; null is rejected.
#[no_mangle]
pub unsafe extern "C" fn sedn_gamma_json(m: u32, n: u32, p: u32, out_json: *mut *mut c_char) -> i32 {
    guard(|| {
        let slot = out(out_json, "out_json is null")?;
        let result = gamma(params(m, n, p)?)?;
        let text = serde_json::to_string(&result).map_err(SednError::from)?;
        *slot = c_string(text)?;
        Ok(())
    })
}

/// Formula value against m+n+p-1.
///
/// # Safety
/// All out-pointers must be valid for writes; null is rejected.
#[no_mangle]
pub unsafe extern "C" fn sedn_xu_bound(
    m: u32,
    n: u32,
    p: u32,
    out_gamma: *mut i64,
    out_bound: *mut i64,
    out_tight: *mut bool,
) -> i32 {
    guard(|| {
        let g = out(out_gamma, "out_gamma is null")?;
        let b = out(out_bound, "out_bound is null")?;
        let t = out(out_tight, "out_tight is null")?;
        let x = xu_bound(params(m, n, p)?)?;
        (*g, *b, *t) = (x.gamma, x.bound, x.tight);
        Ok(())
    })
}

/// Verified minimum-weight labeling from the constructor.
///
/// # Safety
/// `out_labeling` must be valid for writes; null is rejected.
#[no_mangle]
pub unsafe extern "C" fn sedn_construct(
    m: u32,
    n: u32,
    p: u32,
    out_labeling: *mut *mut SednLabeling,
) -> i32 {
    guard(|| {
        let slot = out(out_labeling, "out_labeling is null")?;
        *slot = boxed(construct(params(m, n, p)?)?.labeling);
        Ok(())
    })
}

/// Exact optimum. `max_edges` of 0 uses the default cap. The certificate
/// is written only when `out_certificate` is not null.
///
/// # Safety
/// `out_optimum` must be valid for writes; `out_certificate` may be null.
#[no_mangle]
pub unsafe extern "C" fn sedn_solve(
    m: u32,
    n: u32,
    p: u32,
    max_edges: u32,
    out_optimum: *mut i64,
    out_certificate: *mut *mut SednLabeling,
) -> i32 {
    guard(|| {
        let slot = out(out_optimum, "out_optimum is null")?;
        let mut config = SolveConfig::default();
        if max_edges > 0 {
            config.max_edges = max_edges;
        }
        let report = solve_exact(params(m, n, p)?, &config)?;
        *slot = report.optimum;
        if let Some(cert) = out_certificate.as_mut() {
            *cert = boxed(report.certificate);
        }
        Ok(())
    })
}

/// # Safety
/// `json` must be a nul-terminated string; `out_labeling` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn sedn_labeling_from_json(
    json: *const c_char,
    out_labeling: *mut *mut SednLabeling,
) -> i32 {
    guard(|| {
        let slot = out(out_labeling, "out_labeling is null")?;
        if json.is_null() {
            return Err(Failure::Argument("json is null"));
        }
        let text = CStr::from_ptr(json)
            .to_str()
            .map_err(|_| Failure::Argument("json is not UTF-8"))?;
        *slot = boxed(LabelingDocument::from_json(text)?.to_labeling()?);
        Ok(())
    })
}

/// Free the result with `sedn_string_free`.
///
/// # Safety
/// `labeling` must come from this library; `out_json` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn sedn_labeling_to_json(
    labeling: *const SednLabeling,
    out_json: *mut *mut c_char,
) -> i32 {
    guard(|| {
        let lab = handle(labeling)?;
        let slot = out(out_json, "out_json is null")?;
        *slot = c_string(LabelingDocument::from_labeling(&lab.inner).to_json())?;
        Ok(())
    })
}

/// # Safety
/// `labeling` must come from this library; out-pointers must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn sedn_labeling_verify(
    labeling: *const SednLabeling,
    out_is_sedf: *mut bool,
    out_violations: *mut u64,
) -> i32 {
    guard(|| {
        let lab = handle(labeling)?;
        let ok = out(out_is_sedf, "out_is_sedf is null")?;
        let count = out(out_violations, "out_violations is null")?;
        let report = verify(&lab.inner);
        *ok = report.is_sedf;
        *count = report.violations.len() as u64;
        Ok(())
    })
}

/// # Safety
/// `labeling` must come from this library; `out_weight` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn sedn_labeling_weight(
    labeling: *const SednLabeling,
    out_weight: *mut i64,
) -> i32 {
    guard(|| {
        let lab = handle(labeling)?;
        *out(out_weight, "out_weight is null")? = lab.inner.weight();
        Ok(())
    })
}

/// Part sizes of the labeled graph.
///
/// # Safety
/// `labeling` must come from this library; out-pointers must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn sedn_labeling_params(
    labeling: *const SednLabeling,
    out_m: *mut u32,
    out_n: *mut u32,
    out_p: *mut u32,
) -> i32 {
    guard(|| {
        let lab = handle(labeling)?;
        let [m, n, p] = lab.inner.params().sizes();
        *out(out_m, "out_m is null")? = m;
        *out(out_n, "out_n is null")? = n;
        *out(out_p, "out_p is null")? = p;
        Ok(())
    })
}

/// # Safety
/// `labeling` must be null or come from this library, and not be freed twice.
#[no_mangle]
pub unsafe extern "C" fn sedn_labeling_free(labeling: *mut SednLabeling) {
    if !labeling.is_null() {
        drop(Box::from_raw(labeling));
    }
}

/// # Safety
/// `s` must be null or a string returned by this library, and not be freed twice.
#[no_mangle]
pub unsafe extern "C" fn sedn_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Message of the last failed call on this thread, or null. Valid until the
/// next call into the library from the same thread.
#[no_mangle]
pub extern "C" fn sedn_last_error_message() -> *const c_char {
    LAST_ERROR.with(|slot| slot.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}
