//! C ABI for the macjack library: opaque handles, integer error codes, and
//! a thread-local detail message. All strings cross the boundary as
//! NUL-terminated UTF-8 owned by this library.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::str::FromStr;

use macjack::cli::render_expansion_text;
use macjack::jack::{jack_p, limit_bridge, rodrigues_jack};
use macjack::macdonald::{macdonald_p, rodrigues};
use macjack::partitions::Partition;
use macjack::symmetric::SymFunc;

/// Success.
pub const MJ_OK: i32 = 0;
/// A pointer argument was NULL.
pub const MJ_ERR_NULL: i32 = 1;
/// An argument failed validation (bad partition syntax, bad bounds, ...).
pub const MJ_ERR_INVALID: i32 = 2;
/// An exact-arithmetic operation failed; see mj_last_error.
pub const MJ_ERR_MATH: i32 = 3;
/// A string argument was not valid UTF-8.
pub const MJ_ERR_UTF8: i32 = 4;

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(msg: &str) {
    let cleaned: String = msg.chars().filter(|&c| c != '\0').collect();
    LAST_ERROR.with(|e| *e.borrow_mut() = CString::new(cleaned).unwrap());
}

/// Opaque handle to a symmetric function expansion.
pub struct MjSymFunc {
    inner: SymFunc,
}

unsafe fn parse_args(
    partition: *const c_char,
    out: *mut *mut MjSymFunc,
) -> Result<Partition, i32> {
    if partition.is_null() || out.is_null() {
        set_error("null pointer argument");
        return Err(MJ_ERR_NULL);
    }
    let s = match CStr::from_ptr(partition).to_str() {
        Ok(s) => s,
        Err(_) => {
            set_error("partition string is not valid UTF-8");
            return Err(MJ_ERR_UTF8);
        }
    };
    Partition::from_str(s).map_err(|e| {
        set_error(&e.to_string());
        MJ_ERR_INVALID
    })
}

fn finish(
    result: macjack::Result<SymFunc>,
    out: *mut *mut MjSymFunc,
) -> i32 {
    match result {
        Ok(f) => {
            let boxed = Box::new(MjSymFunc { inner: f });
            unsafe { *out = Box::into_raw(boxed) };
            MJ_OK
        }
        Err(e) => {
            set_error(&e.to_string());
            MJ_ERR_MATH
        }
    }
}

/// Construct the integral Macdonald polynomial J_lambda(q,t).
///
/// # Safety
/// `partition` must be a NUL-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn mj_macdonald_j(
    partition: *const c_char,
    n_vars: usize,
    out: *mut *mut MjSymFunc,
) -> i32 {
    match parse_args(partition, out) {
        Ok(lam) => finish(rodrigues(&lam, n_vars), out),
        Err(code) => code,
    }
}

/// Construct the monic Macdonald polynomial P_lambda(q,t).
///
/// # Safety
/// `partition` must be a NUL-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn mj_macdonald_p(
    partition: *const c_char,
    n_vars: usize,
    out: *mut *mut MjSymFunc,
) -> i32 {
    match parse_args(partition, out) {
        Ok(lam) => finish(macdonald_p(&lam, n_vars), out),
        Err(code) => code,
    }
}

/// Construct the integral Jack polynomial J_lambda(alpha).
///
/// # Safety
/// `partition` must be a NUL-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn mj_jack_j(
    partition: *const c_char,
    n_vars: usize,
    out: *mut *mut MjSymFunc,
) -> i32 {
    match parse_args(partition, out) {
        Ok(lam) => finish(rodrigues_jack(&lam, n_vars), out),
        Err(code) => code,
    }
}

/// Construct the monic Jack polynomial P_lambda(alpha).
///
/// # Safety
/// `partition` must be a NUL-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn mj_jack_p(
    partition: *const c_char,
    n_vars: usize,
    out: *mut *mut MjSymFunc,
) -> i32 {
    match parse_args(partition, out) {
        Ok(lam) => finish(jack_p(&lam, n_vars), out),
        Err(code) => code,
    }
}

/// Number of monomial-basis terms in the expansion.
///
/// # Safety
/// `handle` must be a live handle from this library; `out` must be valid.
#[no_mangle]
pub unsafe extern "C" fn mj_symfunc_num_terms(
    handle: *const MjSymFunc,
    out: *mut usize,
) -> i32 {
    if handle.is_null() || out.is_null() {
        set_error("null pointer argument");
        return MJ_ERR_NULL;
    }
    *out = (*handle).inner.terms().count();
    MJ_OK
}

/// Render the expansion as text, e.g. "(1-t)*m[1]". The returned string
/// must be released with mj_string_free.
///
/// # Safety
/// `handle` must be a live handle from this library; `out` must be valid.
#[no_mangle]
pub unsafe extern "C" fn mj_symfunc_render(
    handle: *const MjSymFunc,
    out: *mut *mut c_char,
) -> i32 {
    if handle.is_null() || out.is_null() {
        set_error("null pointer argument");
        return MJ_ERR_NULL;
    }
    let text = render_expansion_text(&(*handle).inner);
    match CString::new(text) {
        Ok(c) => {
            *out = c.into_raw();
            MJ_OK
        }
        Err(_) => {
            set_error("rendered text contained an interior NUL");
            MJ_ERR_MATH
        }
    }
}

/// Exact limit check at integer alpha: writes 1 to `out_equal` when the
/// q = t^a limit of the (q,t) polynomial matches the alpha-side build.
///
/// # Safety
/// `partition` must be a NUL-terminated string and `out_equal` valid.
#[no_mangle]
pub unsafe extern "C" fn mj_limit_bridge(
    partition: *const c_char,
    n_vars: usize,
    alpha: u32,
    out_equal: *mut i32,
) -> i32 {
    if partition.is_null() || out_equal.is_null() {
        set_error("null pointer argument");
        return MJ_ERR_NULL;
    }
    let s = match CStr::from_ptr(partition).to_str() {
        Ok(s) => s,
        Err(_) => {
            set_error("partition string is not valid UTF-8");
            return MJ_ERR_UTF8;
        }
    };
    let lam = match Partition::from_str(s) {
        Ok(l) => l,
        Err(e) => {
            set_error(&e.to_string());
            return MJ_ERR_INVALID;
        }
    };
    match limit_bridge(&lam, n_vars, alpha) {
        Ok(equal) => {
            *out_equal = i32::from(equal);
            MJ_OK
        }
        Err(e) => {
            set_error(&e.to_string());
            MJ_ERR_MATH
        }
    }
}

/// Release a handle. NULL is a no-op.
///
/// # Safety
/// `handle` must come from this library and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn mj_symfunc_free(handle: *mut MjSymFunc) {
    if !handle.is_null() {
        drop(Box::from_raw(handle));
    }
}

/// Release a string returned by this library. NULL is a no-op.
///
/// # Safety
/// `s` must come from this library and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn mj_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Message describing the most recent error on this thread. The pointer is
/// owned by the library and valid until the next failing call.
#[no_mangle]
pub extern "C" fn mj_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}
