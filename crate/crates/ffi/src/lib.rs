//! C ABI over `casimir-core`.
//!
//! Every function returns a `CasimirStatus` (`CASIMIR_OK` on success) and
//! writes results through out-pointers. Handles are opaque and must be
//! released with the matching `*_free`. On failure, a description is
//! available from `casimir_last_error_message` on the same thread.

use std::cell::RefCell;
use std::ffi::{c_char, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use casimir_core::energy::{
    energy_closed_form, energy_numeric, energy_plate_limit, plate_limit, EnergyResult, KMax, Method,
};
use casimir_core::regsum::QuadratureConfig;
use casimir_core::specfun::{bessel_j, bessel_y, BesselOrder};
use casimir_core::spectrum::{degeneracy, find_roots, Geometry};
use casimir_core::Error;

pub type CasimirStatus = i32;

pub const CASIMIR_OK: CasimirStatus = 0;
pub const CASIMIR_ERR_NULL_POINTER: CasimirStatus = 1;
pub const CASIMIR_ERR_INVALID_INPUT: CasimirStatus = 2;
pub const CASIMIR_ERR_DOMAIN: CasimirStatus = 3;
pub const CASIMIR_ERR_UNSUPPORTED_DIMENSION: CasimirStatus = 4;
pub const CASIMIR_ERR_OUT_OF_REGIME: CasimirStatus = 5;
pub const CASIMIR_ERR_ROOT_LOSS: CasimirStatus = 6;
pub const CASIMIR_ERR_CONVERGENCE: CasimirStatus = 7;
pub const CASIMIR_ERR_NON_CONVERGENT_TAIL: CasimirStatus = 8;
pub const CASIMIR_ERR_BUFFER_TOO_SMALL: CasimirStatus = 9;
pub const CASIMIR_ERR_PANIC: CasimirStatus = 10;

pub const CASIMIR_METHOD_CLOSED_FORM: i32 = 0;
pub const CASIMIR_METHOD_NUMERIC: i32 = 1;
pub const CASIMIR_METHOD_PLATE_LIMIT: i32 = 2;

/// Two concentric spheres.
pub struct CasimirGeometry {
    inner: Geometry,
}

/// An energy evaluated by one route.
pub struct CasimirEnergyResult {
    inner: EnergyResult,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: String) {
    let c = CString::new(msg.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

fn status_of(err: &Error) -> CasimirStatus {
    match err {
        Error::Domain(_) => CASIMIR_ERR_DOMAIN,
        Error::InvalidInput(_) => CASIMIR_ERR_INVALID_INPUT,
        Error::UnsupportedDimension(_) => CASIMIR_ERR_UNSUPPORTED_DIMENSION,
        Error::OutOfRegime(_) => CASIMIR_ERR_OUT_OF_REGIME,
        Error::RootLoss(_) => CASIMIR_ERR_ROOT_LOSS,
        Error::Convergence { .. } => CASIMIR_ERR_CONVERGENCE,
        Error::NonConvergentTail(_) => CASIMIR_ERR_NON_CONVERGENT_TAIL,
    }
}

enum Fail {
    Core(Error),
    Null(&'static str),
    Buffer(usize),
}

impl From<Error> for Fail {
    fn from(e: Error) -> Self {
        Fail::Core(e)
    }
}

/// Run `f`, translating errors and panics into status codes.
fn guard<F: FnOnce() -> Result<(), Fail>>(f: F) -> CasimirStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => CASIMIR_OK,
        Ok(Err(Fail::Core(e))) => {
            set_error(e.to_string());
            status_of(&e)
        }
        Ok(Err(Fail::Null(what))) => {
            set_error(format!("null pointer: {what}"));
            CASIMIR_ERR_NULL_POINTER
        }
        Ok(Err(Fail::Buffer(needed))) => {
            set_error(format!("buffer too small, need {needed} elements"));
            CASIMIR_ERR_BUFFER_TOO_SMALL
        }
        Err(_) => {
            set_error("internal panic".into());
            CASIMIR_ERR_PANIC
        }
    }
}

unsafe fn write<T>(out: *mut T, value: T, what: &'static str) -> Result<(), Fail> {
    if out.is_null() {
        return Err(Fail::Null(what));
    }
    out.write(value);
    Ok(())
}

unsafe fn geometry<'a>(g: *const CasimirGeometry) -> Result<&'a Geometry, Fail> {
    g.as_ref().map(|g| &g.inner).ok_or(Fail::Null("geometry"))
}

unsafe fn result<'a>(r: *const CasimirEnergyResult) -> Result<&'a EnergyResult, Fail> {
    r.as_ref().map(|r| &r.inner).ok_or(Fail::Null("result"))
}

unsafe fn emit_result(value: EnergyResult, out: *mut *mut CasimirEnergyResult) -> Result<(), Fail> {
    let boxed = Box::into_raw(Box::new(CasimirEnergyResult { inner: value }));
    if out.is_null() {
        drop(Box::from_raw(boxed));
        return Err(Fail::Null("out"));
    }
    out.write(boxed);
    Ok(())
}

/// Message for the last failed call on this thread, or NULL. The pointer is
/// valid until the next failing call on the same thread.
#[no_mangle]
pub extern "C" fn casimir_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// Static name of a status code.
#[no_mangle]
pub extern "C" fn casimir_status_name(status: CasimirStatus) -> *const c_char {
    let s: &'static [u8] = match status {
        CASIMIR_OK => b"ok\0",
        CASIMIR_ERR_NULL_POINTER => b"null pointer\0",
        CASIMIR_ERR_INVALID_INPUT => b"invalid input\0",
        CASIMIR_ERR_DOMAIN => b"domain error\0",
        CASIMIR_ERR_UNSUPPORTED_DIMENSION => b"unsupported dimension\0",
        CASIMIR_ERR_OUT_OF_REGIME => b"out of regime\0",
        CASIMIR_ERR_ROOT_LOSS => b"root loss\0",
        CASIMIR_ERR_CONVERGENCE => b"convergence failure\0",
        CASIMIR_ERR_NON_CONVERGENT_TAIL => b"non-convergent tail\0",
        CASIMIR_ERR_BUFFER_TOO_SMALL => b"buffer too small\0",
        CASIMIR_ERR_PANIC => b"internal panic\0",
        _ => b"unknown status\0",
    };
    s.as_ptr().cast()
}

/// Create a geometry with radii `inner < outer` in `dim >= 3` dimensions.
///
/// # Safety
/// `out` must be valid for a pointer write.
#[no_mangle]
pub unsafe extern "C" fn casimir_geometry_new(
    dim: u32,
    inner: f64,
    outer: f64,
    out: *mut *mut CasimirGeometry,
) -> CasimirStatus {
    guard(|| {
        let g = Geometry::new(dim, inner, outer)?;
        write(
            out,
            Box::into_raw(Box::new(CasimirGeometry { inner: g })),
            "out",
        )
    })
}

/// Create the geometry with `sqrt(ab) = 1` and `b - a = eta`.
///
/// # Safety
/// `out` must be valid for a pointer write.
#[no_mangle]
pub unsafe extern "C" fn casimir_geometry_from_eta(
    dim: u32,
    eta: f64,
    out: *mut *mut CasimirGeometry,
) -> CasimirStatus {
    guard(|| {
        let g = Geometry::from_eta(dim, eta)?;
        write(
            out,
            Box::into_raw(Box::new(CasimirGeometry { inner: g })),
            "out",
        )
    })
}

/// Release a geometry. NULL is ignored.
///
/// # Safety
/// `g` must come from a `casimir_geometry_*` constructor and not be used again.
#[no_mangle]
pub unsafe extern "C" fn casimir_geometry_free(g: *mut CasimirGeometry) {
    if !g.is_null() {
        drop(Box::from_raw(g));
    }
}

/// `eta = (b - a) / sqrt(ab)`.
///
/// # Safety
/// `g` must be a live geometry handle and `out` valid for writes.
#[no_mangle]
pub unsafe extern "C" fn casimir_geometry_eta(
    g: *const CasimirGeometry,
    out: *mut f64,
) -> CasimirStatus {
    guard(|| write(out, geometry(g)?.eta(), "out"))
}

/// Closed-form energy (`4 <= D <= 11`, `eta < 1`).
///
/// # Safety
/// `g` must be a live geometry handle and `out` valid for a pointer write.
#[no_mangle]
pub unsafe extern "C" fn casimir_energy_closed_form(
    g: *const CasimirGeometry,
    out: *mut *mut CasimirEnergyResult,
) -> CasimirStatus {
    guard(|| emit_result(energy_closed_form(geometry(g)?)?, out))
}

/// Numeric regularized mode sum. `k_max = 0` selects the automatic stop.
///
/// # Safety
/// `g` must be a live geometry handle and `out` valid for a pointer write.
#[no_mangle]
pub unsafe extern "C" fn casimir_energy_numeric(
    g: *const CasimirGeometry,
    rel_tol: f64,
    abs_tol: f64,
    truncation: f64,
    k_max: u32,
    out: *mut *mut CasimirEnergyResult,
) -> CasimirStatus {
    guard(|| {
        let q = QuadratureConfig::new(rel_tol, abs_tol, truncation)?;
        let k = if k_max == 0 {
            KMax::Auto
        } else {
            KMax::Fixed(k_max)
        };
        emit_result(energy_numeric(geometry(g)?, &q, k)?, out)
    })
}

/// Parallel-plate energy at the shell's gap, over the inner sphere.
///
/// # Safety
/// `g` must be a live geometry handle and `out` valid for a pointer write.
#[no_mangle]
pub unsafe extern "C" fn casimir_energy_plate_limit(
    g: *const CasimirGeometry,
    out: *mut *mut CasimirEnergyResult,
) -> CasimirStatus {
    guard(|| emit_result(energy_plate_limit(geometry(g)?)?, out))
}

/// Release a result. NULL is ignored.
///
/// # Safety
/// `r` must come from a `casimir_energy_*` call and not be used again.
#[no_mangle]
pub unsafe extern "C" fn casimir_result_free(r: *mut CasimirEnergyResult) {
    if !r.is_null() {
        drop(Box::from_raw(r));
    }
}

/// # Safety
/// `r` must be a live result handle and `out` valid for writes.
#[no_mangle]
pub unsafe extern "C" fn casimir_result_total(
    r: *const CasimirEnergyResult,
    out: *mut f64,
) -> CasimirStatus {
    guard(|| write(out, result(r)?.total_energy, "out"))
}

/// Energy per unit inner-sphere area.
///
/// # Safety
/// `r` must be a live result handle and `out` valid for writes.
#[no_mangle]
pub unsafe extern "C" fn casimir_result_per_area(
    r: *const CasimirEnergyResult,
    out: *mut f64,
) -> CasimirStatus {
    guard(|| write(out, result(r)?.per_inner_area, "out"))
}

/// One of the `CASIMIR_METHOD_*` constants.
///
/// # Safety
/// `r` must be a live result handle and `out` valid for writes.
#[no_mangle]
pub unsafe extern "C" fn casimir_result_method(
    r: *const CasimirEnergyResult,
    out: *mut i32,
) -> CasimirStatus {
    guard(|| {
        let m = match result(r)?.method {
            Method::ClosedForm => CASIMIR_METHOD_CLOSED_FORM,
            Method::Numeric => CASIMIR_METHOD_NUMERIC,
            Method::PlateLimit => CASIMIR_METHOD_PLATE_LIMIT,
        };
        write(out, m, "out")
    })
}

/// Angular modes summed; 0 for routes without a mode sum.
///
/// # Safety
/// `r` must be a live result handle and `out` valid for writes.
#[no_mangle]
pub unsafe extern "C" fn casimir_result_k_max(
    r: *const CasimirEnergyResult,
    out: *mut u32,
) -> CasimirStatus {
    guard(|| write(out, result(r)?.diagnostics.k_max.unwrap_or(0), "out"))
}

/// Bound on the omitted k-sum tail; 0 for routes without a mode sum.
///
/// # Safety
/// `r` must be a live result handle and `out` valid for writes.
#[no_mangle]
pub unsafe extern "C" fn casimir_result_truncation_estimate(
    r: *const CasimirEnergyResult,
    out: *mut f64,
) -> CasimirStatus {
    guard(|| {
        write(
            out,
            result(r)?.diagnostics.truncation_estimate.unwrap_or(0.0),
            "out",
        )
    })
}

/// First `n_max` eigenfrequencies of angular mode `k`, written to `buf`.
///
/// # Safety
/// `g` must be a live geometry handle; `buf` must be valid for `buf_len`
/// writes.
#[no_mangle]
pub unsafe extern "C" fn casimir_find_roots(
    g: *const CasimirGeometry,
    k: u32,
    n_max: u32,
    buf: *mut f64,
    buf_len: usize,
) -> CasimirStatus {
    guard(|| {
        let geom = geometry(g)?;
        if buf.is_null() {
            return Err(Fail::Null("buf"));
        }
        if buf_len < n_max as usize {
            return Err(Fail::Buffer(n_max as usize));
        }
        let nu = BesselOrder::for_mode(k, geom.dim())?;
        let roots = find_roots(geom, nu, n_max)?;
        ptr::copy_nonoverlapping(roots.as_ptr(), buf, roots.len());
        Ok(())
    })
}

/// Number of modes sharing angular index `k` in `dim` dimensions.
///
/// # Safety
/// `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn casimir_degeneracy(dim: u32, k: u32, out: *mut u64) -> CasimirStatus {
    guard(|| {
        let nu = BesselOrder::for_mode(k, dim)?;
        write(out, degeneracy(dim, nu)?, "out")
    })
}

/// Plate energy per unit area at separation `d`.
///
/// # Safety
/// `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn casimir_plate_limit(dim: u32, d: f64, out: *mut f64) -> CasimirStatus {
    guard(|| write(out, plate_limit(dim, d)?, "out"))
}

/// `J_nu(x)` for `nu` in `{0, 1/2, 1, 3/2, ...}`.
///
/// # Safety
/// `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn casimir_bessel_j(nu: f64, x: f64, out: *mut f64) -> CasimirStatus {
    guard(|| write(out, bessel_j(BesselOrder::new(nu)?, x)?, "out"))
}

/// `Y_nu(x)` for `nu` in `{0, 1/2, 1, 3/2, ...}`, `x > 0`.
///
/// # Safety
/// `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn casimir_bessel_y(nu: f64, x: f64, out: *mut f64) -> CasimirStatus {
    guard(|| write(out, bessel_y(BesselOrder::new(nu)?, x)?, "out"))
}
