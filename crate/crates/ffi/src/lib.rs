//! C interface to the law checker.
//!
//! Structures are opaque `HomalgStructure` handles. Every function returns a
//! `HomalgStatus`; on failure `homalg_last_error_message` describes the cause.
//! Strings returned through out-parameters are owned by the caller and must be
//! released with `homalg_string_free`.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};

use homalg::catalog;
use homalg::coalgebra::{dualize, dualize_coalgebra};
use homalg::bialgebra::dual_bialgebra;
use homalg::error::Error;
use homalg::homdef::{parse_definition, print_definition, Definition};
use homalg::report::Report;
use homalg::runner::{check_report, laurent_report, virasoro_report, RunOptions};

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum HomalgStatus {
    Ok = 0,
    /// The call succeeded and at least one checked law fails.
    LawFailed = 1,
    InvalidInput = 2,
    NullPointer = 3,
    Internal = 4,
}

/// A parsed algebra, coalgebra, bialgebra or map.
pub struct HomalgStructure {
    def: Definition,
    text: String,
}

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(msg: impl Into<String>) {
    let msg = msg.into().replace('\0', " ");
    LAST_ERROR.with(|e| *e.borrow_mut() = CString::new(msg).expect("interior nul removed"));
}

fn status_of(e: &Error) -> HomalgStatus {
    match e {
        Error::Internal(_) => HomalgStatus::Internal,
        _ => HomalgStatus::InvalidInput,
    }
}

/// Runs `f`, mapping errors and panics to status codes.
fn guard(f: impl FnOnce() -> Result<HomalgStatus, (HomalgStatus, String)>) -> HomalgStatus {
    set_error("");
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(s)) => s,
        Ok(Err((s, msg))) => {
            set_error(msg);
            s
        }
        Err(_) => {
            set_error("internal panic");
            HomalgStatus::Internal
        }
    }
}

fn fail(e: Error) -> (HomalgStatus, String) {
    (status_of(&e), e.to_string())
}

unsafe fn read_str<'a>(p: *const c_char, what: &str) -> Result<&'a str, (HomalgStatus, String)> {
    if p.is_null() {
        return Err((HomalgStatus::NullPointer, format!("{what} is null")));
    }
    CStr::from_ptr(p).to_str().map_err(|_| (HomalgStatus::InvalidInput, format!("{what} is not UTF-8")))
}

fn check_out<T>(out: *mut T, what: &str) -> Result<(), (HomalgStatus, String)> {
    if out.is_null() {
        Err((HomalgStatus::NullPointer, format!("{what} is null")))
    } else {
        Ok(())
    }
}

unsafe fn write_string(out: *mut *mut c_char, s: String) {
    *out = CString::new(s.replace('\0', " ")).expect("interior nul removed").into_raw();
}

unsafe fn emit_report(rep: Report, out_json: *mut *mut c_char) -> HomalgStatus {
    let ok = rep.verdict();
    write_string(out_json, rep.to_json());
    if ok {
        HomalgStatus::Ok
    } else {
        HomalgStatus::LawFailed
    }
}

fn boxed(def: Definition) -> *mut HomalgStructure {
    let text = print_definition(&def);
    Box::into_raw(Box::new(HomalgStructure { def, text }))
}

/// Parses definition text into a new handle.
///
/// # Safety
/// `text` must be a nul-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn homalg_parse(text: *const c_char, out: *mut *mut HomalgStructure) -> HomalgStatus {
    guard(|| {
        check_out(out, "out")?;
        let text = read_str(text, "text")?;
        let def = parse_definition(text).map_err(fail)?;
        *out = boxed(def);
        Ok(HomalgStatus::Ok)
    })
}

/// Loads a shipped catalog entry by name.
///
/// # Safety
/// `name` must be a nul-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn homalg_catalog(name: *const c_char, out: *mut *mut HomalgStructure) -> HomalgStatus {
    guard(|| {
        check_out(out, "out")?;
        let name = read_str(name, "name")?;
        let def = catalog::load(name).map_err(fail)?;
        *out = boxed(def);
        Ok(HomalgStatus::Ok)
    })
}

/// Releases a handle; null is ignored.
///
/// # Safety
/// `h` must come from this library and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn homalg_free(h: *mut HomalgStructure) {
    if !h.is_null() {
        drop(Box::from_raw(h));
    }
}

/// Checks a comma-separated list of law ids and writes the JSON report.
/// Returns `LawFailed` when the report's verdict is negative.
///
/// # Safety
/// `h` must be a live handle, `laws` a nul-terminated string, `out_json` writable.
#[no_mangle]
pub unsafe extern "C" fn homalg_check(h: *const HomalgStructure, laws: *const c_char, exact: bool, out_json: *mut *mut c_char) -> HomalgStatus {
    guard(|| {
        check_out(out_json, "out_json")?;
        let h = h.as_ref().ok_or((HomalgStatus::NullPointer, "structure is null".to_string()))?;
        let laws = read_str(laws, "laws")?;
        let ids: Vec<&str> = laws.split(',').map(str::trim).filter(|s| !s.is_empty()).collect();
        if ids.is_empty() {
            return Err((HomalgStatus::InvalidInput, "no law ids given".into()));
        }
        let rep = check_report(&h.def, h.text.as_bytes(), &ids, &RunOptions { exact, ..RunOptions::default() }).map_err(fail)?;
        Ok(emit_report(rep, out_json))
    })
}

/// Dual structure: algebras and coalgebras swap, bialgebras stay bialgebras.
///
/// # Safety
/// `h` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn homalg_dual(h: *const HomalgStructure, out: *mut *mut HomalgStructure) -> HomalgStatus {
    guard(|| {
        check_out(out, "out")?;
        let h = h.as_ref().ok_or((HomalgStatus::NullPointer, "structure is null".to_string()))?;
        let def = match &h.def {
            Definition::Algebra(a) => Definition::Coalgebra(dualize(a)),
            Definition::Coalgebra(c) => Definition::Algebra(dualize_coalgebra(c)),
            Definition::Bialgebra(b) => Definition::Bialgebra(dual_bialgebra(b)),
            Definition::Map(_) => return Err((HomalgStatus::InvalidInput, "maps have no dual structure here".into())),
        };
        *out = boxed(def);
        Ok(HomalgStatus::Ok)
    })
}

/// Canonical definition text of a handle.
///
/// # Safety
/// `h` must be a live handle; `out_text` must be writable.
#[no_mangle]
pub unsafe extern "C" fn homalg_print(h: *const HomalgStructure, out_text: *mut *mut c_char) -> HomalgStatus {
    guard(|| {
        check_out(out_text, "out_text")?;
        let h = h.as_ref().ok_or((HomalgStatus::NullPointer, "structure is null".to_string()))?;
        write_string(out_text, h.text.clone());
        Ok(HomalgStatus::Ok)
    })
}

/// Dimension of the underlying space.
///
/// # Safety
/// `h` must be a live handle; `out_dim` must be writable.
#[no_mangle]
pub unsafe extern "C" fn homalg_dim(h: *const HomalgStructure, out_dim: *mut usize) -> HomalgStatus {
    guard(|| {
        check_out(out_dim, "out_dim")?;
        let h = h.as_ref().ok_or((HomalgStatus::NullPointer, "structure is null".to_string()))?;
        *out_dim = match &h.def {
            Definition::Algebra(a) => a.dim(),
            Definition::Coalgebra(c) => c.dim(),
            Definition::Bialgebra(b) => b.dim(),
            Definition::Map(m) => m.domain.dim(),
        };
        Ok(HomalgStatus::Ok)
    })
}

/// Laurent σ-derivation checks; `check` is `jacobi`, `witt` or `delta`, `eta` may be null for 1.
///
/// # Safety
/// String arguments must be nul-terminated; `out_json` must be writable.
#[no_mangle]
pub unsafe extern "C" fn homalg_sigma_laurent(
    q: *const c_char,
    s: i64,
    k: i64,
    eta: *const c_char,
    window: i64,
    check: *const c_char,
    out_json: *mut *mut c_char,
) -> HomalgStatus {
    guard(|| {
        check_out(out_json, "out_json")?;
        let q = read_str(q, "q")?;
        let eta = if eta.is_null() { "1" } else { read_str(eta, "eta")? };
        let check = read_str(check, "check")?.parse().map_err(fail)?;
        let rep = laurent_report(q, s, k, eta, window, check).map_err(fail)?;
        Ok(emit_report(rep, out_json))
    })
}

/// q-Virasoro window check.
///
/// # Safety
/// `out_json` must be writable.
#[no_mangle]
pub unsafe extern "C" fn homalg_virasoro(window: i64, out_json: *mut *mut c_char) -> HomalgStatus {
    guard(|| {
        check_out(out_json, "out_json")?;
        let rep = virasoro_report(window).map_err(fail)?;
        Ok(emit_report(rep, out_json))
    })
}

/// Message for the last failing call on this thread; empty after success.
/// Valid until the next call into this library on the same thread.
#[no_mangle]
pub extern "C" fn homalg_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

/// Releases a string returned by this library; null is ignored.
///
/// # Safety
/// `s` must come from this library and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn homalg_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Library version, statically allocated.
#[no_mangle]
pub extern "C" fn homalg_version() -> *const c_char {
    static V: &str = concat!(env!("CARGO_PKG_VERSION"), "\0");
    V.as_ptr().cast()
}
