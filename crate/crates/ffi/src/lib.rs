//! C ABI for the `zigzag` crate.
//!
//! Paintboxes are opaque handles created by [`zz_paintbox_parse`] and released
//! by [`zz_paintbox_free`]. Every fallible function returns a [`ZzStatus`];
//! on failure [`zz_last_error`] describes the problem. Strings returned
//! through out-parameters belong to the caller and must be released with
//! [`zz_string_free`]. Exact rationals are returned as `"p/q"` strings
//! (or `"p"` for integers).

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;
use std::slice;

use zigzag::characters::evaluate;
use zigzag::graph::dimension;
use zigzag::rational;
use zigzag::sampler::sample_arrangement;
use zigzag::{Composition, OrientedPaintbox, Permutation};

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ZzStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidArgument = 2,
    ParseError = 3,
    Utf8 = 4,
    Panic = 5,
}

/// Opaque oriented paintbox.
pub struct ZzPaintbox {
    inner: OrientedPaintbox,
}

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(message: impl Into<Vec<u8>>) {
    let msg = CString::new(message).unwrap_or_else(|_| CString::new("error message contained NUL").unwrap());
    LAST_ERROR.with(|e| *e.borrow_mut() = msg);
}

fn fail(status: ZzStatus, message: impl Into<Vec<u8>>) -> ZzStatus {
    set_error(message);
    status
}

fn guard(f: impl FnOnce() -> ZzStatus) -> ZzStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(status) => {
            if status == ZzStatus::Ok {
                set_error("");
            }
            status
        }
        Err(_) => fail(ZzStatus::Panic, "internal panic"),
    }
}

fn give_string(s: String, out: *mut *mut c_char) -> ZzStatus {
    match CString::new(s) {
        Ok(c) => {
            unsafe { *out = c.into_raw() };
            ZzStatus::Ok
        }
        Err(_) => fail(ZzStatus::InvalidArgument, "output contained NUL"),
    }
}

unsafe fn composition_from(parts: *const u32, len: usize) -> Result<Composition, ZzStatus> {
    let values = if len == 0 {
        Vec::new()
    } else if parts.is_null() {
        return Err(fail(ZzStatus::NullPointer, "parts is null"));
    } else {
        slice::from_raw_parts(parts, len).to_vec()
    };
    Composition::new(values).map_err(|e| fail(ZzStatus::InvalidArgument, e.to_string()))
}

/// Message for the most recent failure on this thread; empty after a success.
/// The pointer stays valid until the next call into this library on the same thread.
#[no_mangle]
pub extern "C" fn zz_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

/// Releases a string returned by this library. Null is ignored.
///
/// # Safety
/// `s` must come from this library and not have been freed.
#[no_mangle]
pub unsafe extern "C" fn zz_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Parses the paintbox text format (`left right up|down` per line).
///
/// # Safety
/// `text` must be a NUL-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn zz_paintbox_parse(text: *const c_char, out: *mut *mut ZzPaintbox) -> ZzStatus {
    guard(|| {
        if text.is_null() || out.is_null() {
            return fail(ZzStatus::NullPointer, "text or out is null");
        }
        let Ok(s) = CStr::from_ptr(text).to_str() else {
            return fail(ZzStatus::Utf8, "text is not UTF-8");
        };
        match OrientedPaintbox::parse(s) {
            Ok(inner) => {
                *out = Box::into_raw(Box::new(ZzPaintbox { inner }));
                ZzStatus::Ok
            }
            Err(e) => fail(ZzStatus::ParseError, e.to_string()),
        }
    })
}

/// The empty paintbox, whose arrangements are uniform random permutations.
///
/// # Safety
/// `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn zz_paintbox_uniform(out: *mut *mut ZzPaintbox) -> ZzStatus {
    guard(|| {
        if out.is_null() {
            return fail(ZzStatus::NullPointer, "out is null");
        }
        *out = Box::into_raw(Box::new(ZzPaintbox { inner: OrientedPaintbox::empty() }));
        ZzStatus::Ok
    })
}

/// # Safety
/// `pb` must come from this library and not have been freed. Null is ignored.
#[no_mangle]
pub unsafe extern "C" fn zz_paintbox_free(pb: *mut ZzPaintbox) {
    if !pb.is_null() {
        drop(Box::from_raw(pb));
    }
}

/// Number of intervals in the paintbox.
///
/// # Safety
/// `pb` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn zz_paintbox_interval_count(pb: *const ZzPaintbox, out: *mut usize) -> ZzStatus {
    guard(|| {
        if pb.is_null() || out.is_null() {
            return fail(ZzStatus::NullPointer, "pb or out is null");
        }
        *out = (*pb).inner.intervals().len();
        ZzStatus::Ok
    })
}

/// `p(λ)` for the paintbox: exact value as a string and its nearest double.
/// Either output may be null if not wanted.
///
/// # Safety
/// `pb` must be a live handle, `parts` must hold `len` values.
#[no_mangle]
pub unsafe extern "C" fn zz_evaluate(
    pb: *const ZzPaintbox,
    parts: *const u32,
    len: usize,
    out_exact: *mut *mut c_char,
    out_value: *mut f64,
) -> ZzStatus {
    guard(|| {
        if pb.is_null() {
            return fail(ZzStatus::NullPointer, "pb is null");
        }
        let lambda = match composition_from(parts, len) {
            Ok(l) => l,
            Err(status) => return status,
        };
        let p = evaluate(&(*pb).inner, &lambda);
        if !out_value.is_null() {
            *out_value = rational::to_f64(&p);
        }
        if out_exact.is_null() {
            ZzStatus::Ok
        } else {
            give_string(rational::format(&p), out_exact)
        }
    })
}

/// Number of permutations with zigzag shape `λ`, as a decimal string.
///
/// # Safety
/// `parts` must hold `len` values and `out` be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn zz_dimension(parts: *const u32, len: usize, out: *mut *mut c_char) -> ZzStatus {
    guard(|| {
        if out.is_null() {
            return fail(ZzStatus::NullPointer, "out is null");
        }
        match composition_from(parts, len) {
            Ok(lambda) => give_string(dimension(&lambda).to_string(), out),
            Err(status) => status,
        }
    })
}

/// Zigzag shape of a permutation of `[n]`. `out_parts` needs room for `n`
/// values; the number written goes to `out_len`.
///
/// # Safety
/// `values` must hold `n` values, `out_parts` room for `n`.
#[no_mangle]
pub unsafe extern "C" fn zz_zigzag_shape(values: *const u32, n: usize, out_parts: *mut u32, out_len: *mut usize) -> ZzStatus {
    guard(|| {
        if out_len.is_null() || (n > 0 && (values.is_null() || out_parts.is_null())) {
            return fail(ZzStatus::NullPointer, "null buffer");
        }
        let v = if n == 0 { Vec::new() } else { slice::from_raw_parts(values, n).to_vec() };
        let pi = match Permutation::new(v) {
            Ok(p) => p,
            Err(e) => return fail(ZzStatus::InvalidArgument, e.to_string()),
        };
        let shape = pi.zigzag_shape();
        if !shape.is_empty() {
            ptr::copy_nonoverlapping(shape.parts().as_ptr(), out_parts, shape.len());
        }
        *out_len = shape.len();
        ZzStatus::Ok
    })
}

/// Initial ranks `r_1..r_n` of one sampled arrangement, written to `out_ranks`.
///
/// # Safety
/// `pb` must be a live handle and `out_ranks` have room for `n` values.
#[no_mangle]
pub unsafe extern "C" fn zz_sample_ranks(pb: *const ZzPaintbox, n: usize, seed: u64, out_ranks: *mut usize) -> ZzStatus {
    guard(|| {
        if pb.is_null() || (n > 0 && out_ranks.is_null()) {
            return fail(ZzStatus::NullPointer, "pb or out_ranks is null");
        }
        let a = sample_arrangement(&(*pb).inner, n, seed);
        if n > 0 {
            ptr::copy_nonoverlapping(a.initial_ranks().as_ptr(), out_ranks, n);
        }
        ZzStatus::Ok
    })
}
