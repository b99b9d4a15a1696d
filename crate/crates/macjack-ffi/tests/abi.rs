//! Exercises the C ABI through the exported symbols exactly as a C caller
//! would: raw pointers, error codes, and explicit frees.

use std::ffi::{CStr, CString};
use std::ptr;

use macjack_ffi::*;

fn c(s: &str) -> CString {
    CString::new(s).unwrap()
}

#[test]
fn macdonald_round_trip() {
    let part = c("(1)");
    let mut handle: *mut MjSymFunc = ptr::null_mut();
    let code = unsafe { mj_macdonald_j(part.as_ptr(), 2, &mut handle) };
    assert_eq!(code, MJ_OK);
    assert!(!handle.is_null());

    let mut n = 0usize;
    assert_eq!(unsafe { mj_symfunc_num_terms(handle, &mut n) }, MJ_OK);
    assert_eq!(n, 1);

    let mut text: *mut std::ffi::c_char = ptr::null_mut();
    assert_eq!(unsafe { mj_symfunc_render(handle, &mut text) }, MJ_OK);
    let rendered = unsafe { CStr::from_ptr(text) }.to_str().unwrap().to_string();
    assert_eq!(rendered, "(1-t)*m[1]");

    unsafe {
        mj_string_free(text);
        mj_symfunc_free(handle);
    }
}

#[test]
fn jack_and_monic_variants() {
    for f in [
        mj_macdonald_p as unsafe extern "C" fn(_, _, _) -> i32,
        mj_jack_j,
        mj_jack_p,
    ] {
        let part = c("(2,1)");
        let mut handle: *mut MjSymFunc = ptr::null_mut();
        assert_eq!(unsafe { f(part.as_ptr(), 3, &mut handle) }, MJ_OK);
        let mut n = 0usize;
        assert_eq!(unsafe { mj_symfunc_num_terms(handle, &mut n) }, MJ_OK);
        assert!(n >= 2);
        unsafe { mj_symfunc_free(handle) };
    }
}

#[test]
fn error_paths() {
    let mut handle: *mut MjSymFunc = ptr::null_mut();
    assert_eq!(
        unsafe { mj_macdonald_j(ptr::null(), 2, &mut handle) },
        MJ_ERR_NULL
    );

    let bad = c("(1,2)"); // increasing parts are invalid
    assert_eq!(
        unsafe { mj_macdonald_j(bad.as_ptr(), 2, &mut handle) },
        MJ_ERR_INVALID
    );
    let msg = unsafe { CStr::from_ptr(mj_last_error()) }.to_str().unwrap();
    assert!(!msg.is_empty());

    // more parts than variables is a math-layer failure
    let long = c("(1,1,1)");
    assert_eq!(
        unsafe { mj_macdonald_j(long.as_ptr(), 2, &mut handle) },
        MJ_ERR_MATH
    );

    // frees accept NULL
    unsafe {
        mj_symfunc_free(ptr::null_mut());
        mj_string_free(ptr::null_mut());
    }
}

#[test]
fn limit_bridge_through_abi() {
    let part = c("(2)");
    let mut equal = -1;
    assert_eq!(
        unsafe { mj_limit_bridge(part.as_ptr(), 2, 1, &mut equal) },
        MJ_OK
    );
    assert_eq!(equal, 1);
}
