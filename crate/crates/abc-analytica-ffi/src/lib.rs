//! C bindings for abc-analytica.
//!
//! The surface is a thin JSON pipe: parse a problem file into an opaque
//! handle, run a check, and receive the report as a JSON string. Status
//! codes mirror the CLI exit-code contract (0 holds/equality, 2 input
//! error, 3 hypothesis violation, 4 internal inconsistency), plus
//! FFI-specific codes for null pointers and bad UTF-8.
//!
//! # Safety
//!
//! Every `extern "C"` function validates its pointer arguments and
//! returns an error status instead of dereferencing null. String inputs
//! must be NUL-terminated; strings returned through out-parameters are
//! owned by the caller and must be released with [`abc_string_free`].
//! [`abc_last_error`] returns a thread-local buffer that stays valid
//! until the next failing call on the same thread.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::ptr;

use abc_analytica::io::{
    self, load_problem, resolve_spec, run_demo, run_mason_problem, run_verify_problem, DemoId,
    DemoOutput, ProblemFile, TheoremId,
};
use abc_analytica::verify::Status;
use abc_analytica::Error;

/// Status codes returned by every entry point.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AbcStatus {
    /// Success; inequality checks additionally report holds/equality.
    Ok = 0,
    /// Malformed JSON, schema violation, or bad parameter.
    InvalidInput = 2,
    /// A mathematical hypothesis of the requested check is violated.
    HypothesisViolated = 3,
    /// Internal inconsistency; indicates a bug, not bad input.
    InternalError = 4,
    /// A required pointer argument was null.
    NullPointer = 5,
    /// A string argument was not valid UTF-8.
    InvalidUtf8 = 6,
}

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_last_error(msg: &str) {
    let sanitized: String = msg.chars().filter(|&c| c != '\0').collect();
    LAST_ERROR.with(|slot| {
        *slot.borrow_mut() = CString::new(sanitized).unwrap_or_default();
    });
}

fn status_of(err: &Error) -> AbcStatus {
    match err.exit_code() {
        2 => AbcStatus::InvalidInput,
        3 => AbcStatus::HypothesisViolated,
        _ => AbcStatus::InternalError,
    }
}

fn fail(err: &Error) -> AbcStatus {
    set_last_error(&err.to_string());
    status_of(err)
}

/// Opaque handle for a parsed problem file.
pub struct AbcProblem {
    problem: ProblemFile,
}

unsafe fn read_str<'a>(s: *const c_char) -> Result<&'a str, AbcStatus> {
    if s.is_null() {
        set_last_error("null string argument");
        return Err(AbcStatus::NullPointer);
    }
    CStr::from_ptr(s).to_str().map_err(|_| {
        set_last_error("string argument is not valid UTF-8");
        AbcStatus::InvalidUtf8
    })
}

fn write_json(out_json: *mut *mut c_char, value: &serde_json::Value) -> AbcStatus {
    let text = io::to_json_string(value);
    match CString::new(text) {
        Ok(cstring) => {
            unsafe { *out_json = cstring.into_raw() };
            AbcStatus::Ok
        }
        Err(_) => {
            set_last_error("report contained an interior NUL byte");
            AbcStatus::InternalError
        }
    }
}

/// Parse a JSON problem file into a new handle. On success `*out` owns the
/// problem and must be released with [`abc_problem_free`].
///
/// # Safety
/// `json` must be a valid NUL-terminated string and `out` a valid,
/// writable pointer.
#[no_mangle]
pub unsafe extern "C" fn abc_problem_parse(
    json: *const c_char,
    out: *mut *mut AbcProblem,
) -> AbcStatus {
    if out.is_null() {
        set_last_error("null out-pointer");
        return AbcStatus::NullPointer;
    }
    *out = ptr::null_mut();
    let text = match read_str(json) {
        Ok(t) => t,
        Err(status) => return status,
    };
    match load_problem(text) {
        Ok(problem) => {
            *out = Box::into_raw(Box::new(AbcProblem { problem }));
            AbcStatus::Ok
        }
        Err(e) => fail(&e),
    }
}

/// Release a handle returned by [`abc_problem_parse`]. Null is a no-op.
///
/// # Safety
/// `p` must be null or a pointer previously returned by
/// [`abc_problem_parse`] that has not been freed.
#[no_mangle]
pub unsafe extern "C" fn abc_problem_free(p: *mut AbcProblem) {
    if !p.is_null() {
        drop(Box::from_raw(p));
    }
}

/// Run the exact polynomial check (two-term or n-term, depending on the
/// problem payload) and return the JSON report. Returns `InternalError`
/// if the inequality fails to hold — it is a theorem, so that flags a bug.
///
/// # Safety
/// `p` must be a live handle and `out_json` a valid, writable pointer.
#[no_mangle]
pub unsafe extern "C" fn abc_mason_run(
    p: *const AbcProblem,
    out_json: *mut *mut c_char,
) -> AbcStatus {
    if p.is_null() || out_json.is_null() {
        set_last_error("null argument");
        return AbcStatus::NullPointer;
    }
    match run_mason_problem(&(*p).problem) {
        Ok(outcome) => {
            let status = write_json(out_json, &outcome.report);
            if status != AbcStatus::Ok {
                return status;
            }
            if outcome.holds {
                AbcStatus::Ok
            } else {
                set_last_error("exact inequality reported holds = false");
                AbcStatus::InternalError
            }
        }
        Err(e) => fail(&e),
    }
}

/// Build the analytic system from the problem file and verify the named
/// bound. `theorem` is one of "1", "2", "prop3a", "prop3b", "4"; the
/// D_alpha exponent for "4" comes from the problem file's `alpha` field.
///
/// # Safety
/// `p` must be a live handle, `theorem` a valid NUL-terminated string,
/// and `out_json` a valid, writable pointer.
#[no_mangle]
pub unsafe extern "C" fn abc_verify_run(
    p: *const AbcProblem,
    theorem: *const c_char,
    out_json: *mut *mut c_char,
) -> AbcStatus {
    if p.is_null() || out_json.is_null() {
        set_last_error("null argument");
        return AbcStatus::NullPointer;
    }
    let theorem = match read_str(theorem) {
        Ok(t) => t,
        Err(status) => return status,
    };
    let theorem: TheoremId = match theorem.parse() {
        Ok(t) => t,
        Err(e) => return fail(&e),
    };
    let problem = &(*p).problem;
    let spec = match resolve_spec(problem.quadrature.as_ref(), None, None) {
        Ok(s) => s,
        Err(e) => return fail(&e),
    };
    match run_verify_problem(problem, theorem, None, &spec) {
        Ok(outcome) => {
            let status = write_json(out_json, &outcome.report);
            if status != AbcStatus::Ok {
                return status;
            }
            match outcome.status {
                Status::Holds | Status::Equality => AbcStatus::Ok,
                Status::HypothesisViolated => {
                    set_last_error("hypotheses violated");
                    AbcStatus::HypothesisViolated
                }
                Status::Fails => {
                    set_last_error("verification reported status = fails");
                    AbcStatus::InternalError
                }
            }
        }
        Err(e) => fail(&e),
    }
}

/// Run a built-in demonstration ("example1", "example2", "limit",
/// "lemmas") with default quadrature settings and return the JSON bundle.
///
/// # Safety
/// `which` must be a valid NUL-terminated string and `out_json` a valid,
/// writable pointer.
#[no_mangle]
pub unsafe extern "C" fn abc_demo_run(
    which: *const c_char,
    out_json: *mut *mut c_char,
) -> AbcStatus {
    if out_json.is_null() {
        set_last_error("null out-pointer");
        return AbcStatus::NullPointer;
    }
    let which = match read_str(which) {
        Ok(w) => w,
        Err(status) => return status,
    };
    let which: DemoId = match which.parse() {
        Ok(w) => w,
        Err(e) => return fail(&e),
    };
    let spec = match resolve_spec(None, None, None) {
        Ok(s) => s,
        Err(e) => return fail(&e),
    };
    match run_demo(which, None, &spec) {
        Ok(DemoOutput::Reports(value)) => write_json(out_json, &value),
        Ok(DemoOutput::Table(table)) => match serde_json::to_value(&table) {
            Ok(value) => write_json(out_json, &value),
            Err(e) => fail(&Error::Json(e)),
        },
        Err(e) => fail(&e),
    }
}

/// Release a string returned through an out-parameter. Null is a no-op.
///
/// # Safety
/// `s` must be null or a pointer previously handed out by this library
/// that has not been freed.
#[no_mangle]
pub unsafe extern "C" fn abc_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Message for the most recent failure on this thread. The pointer stays
/// valid until the next failing call on the same thread; do not free it.
#[no_mangle]
pub extern "C" fn abc_last_error() -> *const c_char {
    LAST_ERROR.with(|slot| slot.borrow().as_ptr())
}

/// Library version as a static NUL-terminated string; do not free it.
#[no_mangle]
pub extern "C" fn abc_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr() as *const c_char
}
