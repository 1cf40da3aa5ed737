//! C interface. Cases are opaque handles created with [`ap_case_new`] and
//! released with [`ap_case_free`]. Every fallible call returns an
//! [`ApStatus`] whose values equal the CLI exit codes; the message for the
//! most recent failure on the calling thread is available from
//! [`ap_last_error`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;
use std::str::FromStr;

use abelian_parabolic::orbits::{orbit_table, OrbitDatum};
use abelian_parabolic::report::case_report;
use abelian_parabolic::rootsys::Kind;
use abelian_parabolic::{weyl, AbelianCase, Error};

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ApStatus {
    Ok = 0,
    InvalidInput = 2,
    NonAbelian = 3,
    Consistency = 4,
}

/// Opaque case handle.
pub struct ApCase {
    case: AbelianCase,
    orbits: Vec<OrbitDatum>,
}

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(msg: &str) {
    let c = CString::new(msg.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = c);
}

fn status_of(e: &Error) -> ApStatus {
    set_error(&e.to_string());
    match e.code() {
        2 => ApStatus::InvalidInput,
        3 => ApStatus::NonAbelian,
        _ => ApStatus::Consistency,
    }
}

fn guard(f: impl FnOnce() -> Result<(), ApStatus>) -> ApStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => ApStatus::Ok,
        Ok(Err(s)) => s,
        Err(_) => {
            set_error("internal panic");
            ApStatus::Consistency
        }
    }
}

fn null_arg(name: &str) -> ApStatus {
    set_error(&format!("null pointer passed as {name}"));
    ApStatus::InvalidInput
}

unsafe fn get<'a>(handle: *const ApCase) -> Result<&'a ApCase, ApStatus> {
    handle.as_ref().ok_or_else(|| null_arg("handle"))
}

unsafe fn write<T>(out: *mut T, value: T) -> Result<(), ApStatus> {
    if out.is_null() {
        return Err(null_arg("out"));
    }
    out.write(value);
    Ok(())
}

/// Message describing the last failure on this thread. The pointer stays
/// valid until the next failing call on the same thread.
#[no_mangle]
pub extern "C" fn ap_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

/// Builds the case for `kind` ("A".."E"), `rank` and 1-based `node`.
///
/// # Safety
/// `kind` must be a NUL-terminated string and `out` a writable pointer.
#[no_mangle]
pub unsafe extern "C" fn ap_case_new(kind: *const c_char, rank: usize, node: usize, out: *mut *mut ApCase) -> ApStatus {
    guard(|| {
        if out.is_null() {
            return Err(null_arg("out"));
        }
        out.write(ptr::null_mut());
        if kind.is_null() {
            return Err(null_arg("kind"));
        }
        let kind = CStr::from_ptr(kind).to_str().map_err(|_| {
            set_error("type is not valid UTF-8");
            ApStatus::InvalidInput
        })?;
        let kind = Kind::from_str(kind).map_err(|e| status_of(&e))?;
        let case = AbelianCase::new(kind, rank, node).map_err(|e| status_of(&e))?;
        let orbits = orbit_table(&case).map_err(|e| status_of(&e))?;
        out.write(Box::into_raw(Box::new(ApCase { case, orbits })));
        Ok(())
    })
}

/// # Safety
/// `handle` must come from [`ap_case_new`] and not have been freed. Null is
/// accepted.
#[no_mangle]
pub unsafe extern "C" fn ap_case_free(handle: *mut ApCase) {
    if !handle.is_null() {
        drop(Box::from_raw(handle));
    }
}

/// Number of M-orbits on V, that is r + 1.
///
/// # Safety
/// `handle` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn ap_case_orbit_count(handle: *const ApCase, out: *mut usize) -> ApStatus {
    guard(|| write(out, get(handle)?.orbits.len()))
}

/// # Safety
/// `handle` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn ap_case_dim_v(handle: *const ApCase, out: *mut usize) -> ApStatus {
    guard(|| write(out, get(handle)?.case.datum.dim_v()))
}

/// Dimension of orbit `index`.
///
/// # Safety
/// `handle` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn ap_case_orbit_dim(handle: *const ApCase, index: usize, out: *mut usize) -> ApStatus {
    guard(|| {
        let h = get(handle)?;
        let o = h.orbits.get(index).ok_or_else(|| {
            set_error(&format!("orbit index {index} out of range"));
            ApStatus::InvalidInput
        })?;
        write(out, o.dim)
    })
}

/// Whether w₀λ = −λ, which decides the unitarity verdict.
///
/// # Safety
/// `handle` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn ap_case_w0_negates_lambda(handle: *const ApCase, out: *mut bool) -> ApStatus {
    guard(|| {
        let c = &get(handle)?.case;
        write(out, weyl::w0_negates(c.root_system(), c.datum.lambda()))
    })
}

/// Full report as JSON. The string must be released with
/// [`ap_string_free`].
///
/// # Safety
/// `handle` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn ap_case_report_json(handle: *const ApCase, out: *mut *mut c_char) -> ApStatus {
    guard(|| {
        if out.is_null() {
            return Err(null_arg("out"));
        }
        out.write(ptr::null_mut());
        let report = case_report(&get(handle)?.case).map_err(|e| status_of(&e))?;
        let json = CString::new(report.to_json()).map_err(|_| {
            set_error("report contains a NUL byte");
            ApStatus::Consistency
        })?;
        out.write(json.into_raw());
        Ok(())
    })
}

/// # Safety
/// `s` must come from this library and not have been freed. Null is
/// accepted.
#[no_mangle]
pub unsafe extern "C" fn ap_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}
