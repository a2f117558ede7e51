//! C ABI for the exact-arithmetic toolkit.
//!
//! Conventions, mirrored by `include/qhilb.h`:
//!
//! * every function returns a `QhilbStatus`; results travel through out
//!   pointers, which are written only on `QHILB_OK`;
//! * collections are returned as opaque handles with explicit `_free`
//!   functions; handles are never shared across threads while being
//!   freed;
//! * strings are UTF-8, NUL terminated, owned by the library and released
//!   with `qhilb_string_free`.
//!
//! The header is committed rather than generated at build time; the
//! `header_matches_exports` test keeps the two in sync.

// The exported functions null-check every pointer before dereferencing;
// the remaining validity obligations (alignment, length, liveness) are
// the C caller's, as documented in the header.
#![allow(clippy::not_unsafe_ptr_arg_deref)]

use qhilb_core::castelnuovo::{self, BoundaryCase, CastelnuovoPoly};
use qhilb_core::ktheory;
use qhilb_core::moduli;
use qhilb_core::series::{expand_over_ha, LaurentPoly};
use qhilb_core::{appendix, betti};
use std::os::raw::c_char;

/// Status codes shared with the header.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum QhilbStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidArgument = 2,
    OutOfRange = 3,
    BudgetExceeded = 4,
    CheckFailed = 5,
    BufferTooSmall = 6,
}

/// Opaque list of Castelnuovo polynomials.
pub struct QhilbEnumeration {
    polys: Vec<CastelnuovoPoly>,
}

macro_rules! out_write {
    ($ptr:expr, $value:expr) => {{
        if $ptr.is_null() {
            return QhilbStatus::NullPointer;
        }
        unsafe { *$ptr = $value };
    }};
}

/// Number of Castelnuovo polynomials of even weight `ne` and odd weight
/// `no`; zero exactly outside the invariant range.
#[no_mangle]
pub extern "C" fn qhilb_castelnuovo_count(ne: u64, no: u64, out_count: *mut u64) -> QhilbStatus {
    out_write!(out_count, castelnuovo::count(ne, no));
    QhilbStatus::Ok
}

/// Enumerate the polynomials of the given weights; the handle must be
/// released with `qhilb_enumeration_free`.
#[no_mangle]
pub extern "C" fn qhilb_castelnuovo_enumerate(
    ne: u64,
    no: u64,
    out_handle: *mut *mut QhilbEnumeration,
) -> QhilbStatus {
    if out_handle.is_null() {
        return QhilbStatus::NullPointer;
    }
    let boxed = Box::new(QhilbEnumeration {
        polys: castelnuovo::enumerate(ne, no),
    });
    unsafe { *out_handle = Box::into_raw(boxed) };
    QhilbStatus::Ok
}

#[no_mangle]
pub extern "C" fn qhilb_enumeration_len(
    handle: *const QhilbEnumeration,
    out_len: *mut usize,
) -> QhilbStatus {
    if handle.is_null() {
        return QhilbStatus::NullPointer;
    }
    let e = unsafe { &*handle };
    out_write!(out_len, e.polys.len());
    QhilbStatus::Ok
}

/// Degree count (number of coefficients) of entry `index`.
#[no_mangle]
pub extern "C" fn qhilb_enumeration_coeff_count(
    handle: *const QhilbEnumeration,
    index: usize,
    out_len: *mut usize,
) -> QhilbStatus {
    if handle.is_null() {
        return QhilbStatus::NullPointer;
    }
    let e = unsafe { &*handle };
    let Some(p) = e.polys.get(index) else {
        return QhilbStatus::OutOfRange;
    };
    out_write!(out_len, p.coeffs().len());
    QhilbStatus::Ok
}

/// Copy the coefficients of entry `index` into `buf`.
#[no_mangle]
pub extern "C" fn qhilb_enumeration_coeffs(
    handle: *const QhilbEnumeration,
    index: usize,
    buf: *mut u64,
    buf_len: usize,
) -> QhilbStatus {
    if handle.is_null() || buf.is_null() {
        return QhilbStatus::NullPointer;
    }
    let e = unsafe { &*handle };
    let Some(p) = e.polys.get(index) else {
        return QhilbStatus::OutOfRange;
    };
    if buf_len < p.coeffs().len() {
        return QhilbStatus::BufferTooSmall;
    }
    let out = unsafe { std::slice::from_raw_parts_mut(buf, p.coeffs().len()) };
    out.copy_from_slice(p.coeffs());
    QhilbStatus::Ok
}

#[no_mangle]
pub extern "C" fn qhilb_enumeration_free(handle: *mut QhilbEnumeration) {
    if !handle.is_null() {
        drop(unsafe { Box::from_raw(handle) });
    }
}

/// Validate the staircase-then-nonincreasing shape; on success writes the
/// staircase length and the two weights.
#[no_mangle]
pub extern "C" fn qhilb_castelnuovo_validate(
    coeffs: *const u64,
    len: usize,
    out_sigma: *mut usize,
    out_ne: *mut u64,
    out_no: *mut u64,
) -> QhilbStatus {
    if coeffs.is_null() && len > 0 {
        return QhilbStatus::NullPointer;
    }
    let slice = if len == 0 {
        &[]
    } else {
        unsafe { std::slice::from_raw_parts(coeffs, len) }
    };
    match CastelnuovoPoly::validate(slice) {
        Ok(p) => {
            let w = p.weights();
            out_write!(out_sigma, p.sigma());
            out_write!(out_ne, w.n_e);
            out_write!(out_no, w.n_o);
            QhilbStatus::Ok
        }
        Err(_) => QhilbStatus::InvalidArgument,
    }
}

/// Hilbert coefficients of the normalized module with the given
/// Castelnuovo polynomial, for degrees `0..=order`. `buf` needs
/// `order + 1` slots.
#[no_mangle]
pub extern "C" fn qhilb_castelnuovo_hilbert(
    coeffs: *const u64,
    len: usize,
    order: i64,
    buf: *mut i64,
    buf_len: usize,
) -> QhilbStatus {
    if (coeffs.is_null() && len > 0) || buf.is_null() {
        return QhilbStatus::NullPointer;
    }
    if order < 0 || buf_len < (order as usize + 1) {
        return QhilbStatus::BufferTooSmall;
    }
    let slice = if len == 0 {
        &[]
    } else {
        unsafe { std::slice::from_raw_parts(coeffs, len) }
    };
    let Ok(p) = CastelnuovoPoly::validate(slice) else {
        return QhilbStatus::InvalidArgument;
    };
    let h = p.to_hilbert(order);
    let out = unsafe { std::slice::from_raw_parts_mut(buf, order as usize + 1) };
    for n in 0..=order {
        let Some(c) = h.coeff(n) else {
            return QhilbStatus::OutOfRange;
        };
        let Ok(v) = i64::try_from(&c) else {
            return QhilbStatus::OutOfRange;
        };
        out[n as usize] = v;
    }
    QhilbStatus::Ok
}

/// Unique decomposition of a point of the invariant range: the offset `l`
/// to the boundary, the boundary parameter `k`, and the case tag (1 or 2).
#[no_mangle]
pub extern "C" fn qhilb_n_membership(
    ne: u64,
    no: u64,
    out_k: *mut u64,
    out_l: *mut u64,
    out_case: *mut u32,
) -> QhilbStatus {
    match castelnuovo::n_membership(ne, no) {
        None => QhilbStatus::OutOfRange,
        Some(m) => {
            out_write!(out_k, m.k);
            out_write!(out_l, m.l);
            out_write!(
                out_case,
                match m.case {
                    BoundaryCase::Case1 => 1,
                    BoundaryCase::Case2 => 2,
                }
            );
            QhilbStatus::Ok
        }
    }
}

/// Euler form of two classes given as `(r, a, b, c)` coordinate arrays.
#[no_mangle]
pub extern "C" fn qhilb_k0_chi(x: *const i64, y: *const i64, out_chi: *mut i64) -> QhilbStatus {
    if x.is_null() || y.is_null() {
        return QhilbStatus::NullPointer;
    }
    let xs = unsafe { std::slice::from_raw_parts(x, 4) };
    let ys = unsafe { std::slice::from_raw_parts(y, 4) };
    let xc = ktheory::K0Class::new(xs[0], xs[1], xs[2], xs[3]);
    let yc = ktheory::K0Class::new(ys[0], ys[1], ys[2], ys[3]);
    out_write!(out_chi, ktheory::euler_chi(&xc, &yc));
    QhilbStatus::Ok
}

/// Normalize a rank-one class and report the shift and invariants.
#[no_mangle]
pub extern "C" fn qhilb_k0_invariants(
    r: i64,
    a: i64,
    b: i64,
    c: i64,
    out_shift: *mut i64,
    out_ne: *mut i64,
    out_no: *mut i64,
) -> QhilbStatus {
    let cls = ktheory::K0Class::new(r, a, b, c);
    let Ok((d, normalized)) = ktheory::normalize(&cls) else {
        return QhilbStatus::InvalidArgument;
    };
    let Ok((ne, no)) = ktheory::invariants(&normalized) else {
        return QhilbStatus::InvalidArgument;
    };
    out_write!(out_shift, d);
    out_write!(out_ne, ne);
    out_write!(out_no, no);
    QhilbStatus::Ok
}

/// Number of admissible Betti tables for a characteristic polynomial given
/// by parallel arrays of degrees and coefficients.
#[no_mangle]
pub extern "C" fn qhilb_betti_table_count(
    degrees: *const i64,
    coeffs: *const i64,
    len: usize,
    out_count: *mut usize,
) -> QhilbStatus {
    if (degrees.is_null() || coeffs.is_null()) && len > 0 {
        return QhilbStatus::NullPointer;
    }
    let d = if len == 0 {
        &[]
    } else {
        unsafe { std::slice::from_raw_parts(degrees, len) }
    };
    let c = if len == 0 {
        &[]
    } else {
        unsafe { std::slice::from_raw_parts(coeffs, len) }
    };
    let q = LaurentPoly::from_terms(d.iter().copied().zip(c.iter().copied()));
    out_write!(out_count, betti::enumerate_for(&q, None).len());
    QhilbStatus::Ok
}

/// Exact member count of the matrix variety over `F_p` by enumeration.
#[no_mangle]
pub extern "C" fn qhilb_moduli_count(
    ne: usize,
    no: usize,
    p: u64,
    out_count: *mut u64,
) -> QhilbStatus {
    match moduli::count_exhaustive(ne, no, p) {
        Ok(n) => {
            out_write!(out_count, n);
            QhilbStatus::Ok
        }
        Err(moduli::ModuliError::CountBudget(_)) => QhilbStatus::BudgetExceeded,
        Err(_) => QhilbStatus::InvalidArgument,
    }
}

/// Hilbert expansion of `q(t)/((1-t)^2(1-t^2))` for degrees `0..=order`.
#[no_mangle]
pub extern "C" fn qhilb_hilbert_expand(
    degrees: *const i64,
    coeffs: *const i64,
    len: usize,
    order: i64,
    buf: *mut i64,
    buf_len: usize,
) -> QhilbStatus {
    if ((degrees.is_null() || coeffs.is_null()) && len > 0) || buf.is_null() {
        return QhilbStatus::NullPointer;
    }
    if order < 0 || buf_len < (order as usize + 1) {
        return QhilbStatus::BufferTooSmall;
    }
    let d = if len == 0 {
        &[]
    } else {
        unsafe { std::slice::from_raw_parts(degrees, len) }
    };
    let c = if len == 0 {
        &[]
    } else {
        unsafe { std::slice::from_raw_parts(coeffs, len) }
    };
    let q = LaurentPoly::from_terms(d.iter().copied().zip(c.iter().copied()));
    let Ok(series) = expand_over_ha(&q, order) else {
        return QhilbStatus::InvalidArgument;
    };
    let out = unsafe { std::slice::from_raw_parts_mut(buf, order as usize + 1) };
    for n in 0..=order {
        let Some(v) = series.coeff(n) else {
            return QhilbStatus::OutOfRange;
        };
        let Ok(v) = i64::try_from(&v) else {
            return QhilbStatus::OutOfRange;
        };
        out[n as usize] = v;
    }
    QhilbStatus::Ok
}

/// Regenerate the reference table and compare with the checked-in data.
#[no_mangle]
pub extern "C" fn qhilb_appendix_check() -> QhilbStatus {
    match appendix::check_against_golden() {
        Ok(()) => QhilbStatus::Ok,
        Err(_) => QhilbStatus::CheckFailed,
    }
}

/// The regenerated reference table as a JSON string; release with
/// `qhilb_string_free`.
#[no_mangle]
pub extern "C" fn qhilb_appendix_json(out_json: *mut *mut c_char) -> QhilbStatus {
    if out_json.is_null() {
        return QhilbStatus::NullPointer;
    }
    let json = appendix::canonical_json(&appendix::regenerate());
    let Ok(cstr) = std::ffi::CString::new(json) else {
        return QhilbStatus::InvalidArgument;
    };
    unsafe { *out_json = cstr.into_raw() };
    QhilbStatus::Ok
}

#[no_mangle]
pub extern "C" fn qhilb_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(unsafe { std::ffi::CString::from_raw(s) });
    }
}
