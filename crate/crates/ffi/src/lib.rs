//! C ABI over the chowgen library.
//!
//! Handles are opaque pointers owned by Rust; strings returned to the caller
//! are NUL-terminated, heap-allocated, and must be released with
//! [`chowgen_string_free`]. All functions are safe to call from any thread.

use std::ffi::{c_char, CString};

use chowgen::cli;
use chowgen::presentation::{closed_form_ideal, gf_form_ideal, PresentationIdeal};

/// Status codes returned by fallible entry points.
#[repr(C)]
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum ChowgenStatus {
    Ok = 0,
    /// An argument was out of range (for example `r = 0`).
    InvalidArgument = 1,
    /// A verification sweep found a failing check.
    VerifyFailed = 2,
}

/// Which presentation shape to build.
#[repr(C)]
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum ChowgenForm {
    Closed = 0,
    GeneratingFunction = 1,
}

/// Opaque handle to a computed presentation.
pub struct ChowgenPresentation {
    inner: PresentationIdeal,
}

fn into_c_string(s: String) -> *mut c_char {
    CString::new(s).map_or(std::ptr::null_mut(), CString::into_raw)
}

/// Computes the presentation of the relation ideal for `r >= 1` and stores a
/// handle in `out`. On failure `out` is left untouched.
///
/// # Safety
/// `out` must be a valid pointer to writable memory for one pointer.
#[no_mangle]
pub unsafe extern "C" fn chowgen_presentation_new(
    r: u32,
    form: ChowgenForm,
    out: *mut *mut ChowgenPresentation,
) -> ChowgenStatus {
    if out.is_null() {
        return ChowgenStatus::InvalidArgument;
    }
    let built = match form {
        ChowgenForm::Closed => closed_form_ideal(r),
        ChowgenForm::GeneratingFunction => gf_form_ideal(r),
    };
    match built {
        Ok(inner) => {
            let handle = Box::new(ChowgenPresentation { inner });
            unsafe { out.write(Box::into_raw(handle)) };
            ChowgenStatus::Ok
        }
        Err(_) => ChowgenStatus::InvalidArgument,
    }
}

/// Frees a presentation handle. A null pointer is a no-op.
///
/// # Safety
/// `p` must have been returned by [`chowgen_presentation_new`] and not freed.
#[no_mangle]
pub unsafe extern "C" fn chowgen_presentation_free(p: *mut ChowgenPresentation) {
    if !p.is_null() {
        drop(unsafe { Box::from_raw(p) });
    }
}

/// Number of generators in the presentation (8 closed, 7 gf); 0 for null.
///
/// # Safety
/// `p` must be a live handle or null.
#[no_mangle]
pub unsafe extern "C" fn chowgen_presentation_generator_count(
    p: *const ChowgenPresentation,
) -> usize {
    match unsafe { p.as_ref() } {
        Some(p) => p.inner.generators.len(),
        None => 0,
    }
}

/// JSON document for the presentation; null for a null handle. Free the
/// result with [`chowgen_string_free`].
///
/// # Safety
/// `p` must be a live handle or null.
#[no_mangle]
pub unsafe extern "C" fn chowgen_presentation_json(p: *const ChowgenPresentation) -> *mut c_char {
    match unsafe { p.as_ref() } {
        Some(p) => into_c_string(cli::presentation_json(&p.inner)),
        None => std::ptr::null_mut(),
    }
}

/// Plain-text rendering of the presentation; null for a null handle. Free
/// the result with [`chowgen_string_free`].
///
/// # Safety
/// `p` must be a live handle or null.
#[no_mangle]
pub unsafe extern "C" fn chowgen_presentation_text(p: *const ChowgenPresentation) -> *mut c_char {
    match unsafe { p.as_ref() } {
        Some(p) => into_c_string(cli::presentation_text(&p.inner)),
        None => std::ptr::null_mut(),
    }
}

/// Runs the full certificate sweep for `1..=r_max`.
#[no_mangle]
pub extern "C" fn chowgen_verify(r_max: u32) -> ChowgenStatus {
    if r_max < 1 {
        return ChowgenStatus::InvalidArgument;
    }
    if cli::verify_all(r_max) {
        ChowgenStatus::Ok
    } else {
        ChowgenStatus::VerifyFailed
    }
}

/// Canonical text of the degree-`degree` component of generating function
/// `which` (1 or 2), in mod-2c3 normal form. Null for a bad index. Free the
/// result with [`chowgen_string_free`].
#[no_mangle]
pub extern "C" fn chowgen_series_component(which: u8, degree: usize) -> *mut c_char {
    if which != 1 && which != 2 {
        return std::ptr::null_mut();
    }
    into_c_string(cli::normalized_series_component(which, degree).to_string())
}

/// JSON document for the full r = 1, 2, 3 reference table. Free the result
/// with [`chowgen_string_free`].
#[no_mangle]
pub extern "C" fn chowgen_table_json() -> *mut c_char {
    into_c_string(cli::table_json())
}

/// Checks the computed table against the built-in reference corpus.
#[no_mangle]
pub extern "C" fn chowgen_table_check() -> ChowgenStatus {
    if cli::table_matches() {
        ChowgenStatus::Ok
    } else {
        ChowgenStatus::VerifyFailed
    }
}

/// Frees a string returned by this library. A null pointer is a no-op.
///
/// # Safety
/// `s` must have been returned by one of this library's functions and not
/// freed already.
#[no_mangle]
pub unsafe extern "C" fn chowgen_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(unsafe { CString::from_raw(s) });
    }
}
