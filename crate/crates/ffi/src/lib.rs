//! C ABI over `bcwitt`. Objects are opaque heap handles released with their
//! `_free` function; strings returned to the caller are released with
//! [`bc_string_free`]. Every call returns a [`BcStatus`]; on failure the
//! message is available from [`bc_last_error`] on the same thread.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use bcwitt::dr::{dr_fiber_product, dr_quotient, dr_structural, DRMonoid};
use bcwitt::endo::{ggc_check_q, zeta_coefficients};
use bcwitt::field::NumberField;
use bcwitt::verify::{parse_ideal, run_criterion, QUOTIENT_CEILING};
use bcwitt::Error;

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BcStatus {
    Ok = 0,
    /// Mathematical input error.
    Input = 1,
    /// Internal verification failure.
    Verification = 2,
    /// Malformed arguments.
    Usage = 3,
    NullPointer = 4,
    Panic = 5,
}

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BcConstruction {
    Quotient = 0,
    Structural = 1,
    FiberProduct = 2,
}

/// A number field.
pub struct BcField {
    inner: NumberField,
}

/// A Deligne-Ribet monoid together with its field.
pub struct BcDrMonoid {
    field: NumberField,
    inner: DRMonoid,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: &str) {
    let c = CString::new(msg.replace('\0', " ")).expect("no interior nul");
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

fn status_of(e: &Error) -> BcStatus {
    match e.exit_code() {
        2 => BcStatus::Verification,
        3 => BcStatus::Usage,
        _ => BcStatus::Input,
    }
}

fn guard(f: impl FnOnce() -> Result<(), (BcStatus, String)>) -> BcStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => BcStatus::Ok,
        Ok(Err((s, msg))) => {
            set_error(&msg);
            s
        }
        Err(_) => {
            set_error("panic inside bcwitt");
            BcStatus::Panic
        }
    }
}

fn lib(e: Error) -> (BcStatus, String) {
    (status_of(&e), e.to_string())
}

fn null() -> (BcStatus, String) {
    (BcStatus::NullPointer, "null pointer argument".into())
}

unsafe fn read_str<'a>(p: *const c_char) -> Result<&'a str, (BcStatus, String)> {
    if p.is_null() {
        return Err(null());
    }
    CStr::from_ptr(p).to_str().map_err(|_| (BcStatus::Usage, "string is not UTF-8".into()))
}

unsafe fn write<T>(out: *mut T, v: T) -> Result<(), (BcStatus, String)> {
    if out.is_null() {
        return Err(null());
    }
    *out = v;
    Ok(())
}

fn to_c(s: String) -> *mut c_char {
    CString::new(s.replace('\0', " ")).expect("no interior nul").into_raw()
}

/// Message of the last failed call on this thread, or null. Owned by the
/// library and valid until the next failing call.
#[no_mangle]
pub extern "C" fn bc_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// Releases a string returned by this library.
///
/// # Safety
/// `s` must be null or a string obtained from this library, freed once.
#[no_mangle]
pub unsafe extern "C" fn bc_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Builds the field defined by a polynomial in `x`.
///
/// # Safety
/// `poly` must be a nul-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn bc_field_new(poly: *const c_char, out: *mut *mut BcField) -> BcStatus {
    guard(|| {
        let k = NumberField::from_str_poly(read_str(poly)?).map_err(lib)?;
        write(out, Box::into_raw(Box::new(BcField { inner: k })))
    })
}

/// # Safety
/// `field` must be null or a handle from [`bc_field_new`], freed once.
#[no_mangle]
pub unsafe extern "C" fn bc_field_free(field: *mut BcField) {
    if !field.is_null() {
        drop(Box::from_raw(field));
    }
}

/// # Safety
/// `field` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn bc_field_degree(field: *const BcField, out: *mut usize) -> BcStatus {
    guard(|| {
        let k = field.as_ref().ok_or_else(null)?;
        write(out, k.inner.degree())
    })
}

/// Field discriminant as a decimal string.
///
/// # Safety
/// `field` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn bc_field_discriminant(field: *const BcField, out: *mut *mut c_char) -> BcStatus {
    guard(|| {
        let k = field.as_ref().ok_or_else(null)?;
        write(out, to_c(k.inner.discriminant().to_string()))
    })
}

/// Builds `DR_f` for the modulus given by comma-separated generators in `t`.
///
/// # Safety
/// `field` must be a live handle, `modulus` a nul-terminated string and
/// `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn bc_dr_new(field: *const BcField, modulus: *const c_char, construction: BcConstruction, out: *mut *mut BcDrMonoid) -> BcStatus {
    guard(|| {
        let k = &field.as_ref().ok_or_else(null)?.inner;
        let gens: Vec<&str> = read_str(modulus)?.split(',').map(str::trim).collect();
        let f = parse_ideal(k, &gens).map_err(lib)?;
        let m = match construction {
            BcConstruction::Quotient => dr_quotient(k, &f, QUOTIENT_CEILING),
            BcConstruction::Structural => dr_structural(k, &f),
            BcConstruction::FiberProduct => dr_fiber_product(k, &f),
        }
        .map_err(lib)?;
        m.check_laws().map_err(lib)?;
        write(out, Box::into_raw(Box::new(BcDrMonoid { field: k.clone(), inner: m })))
    })
}

/// # Safety
/// `monoid` must be null or a handle from [`bc_dr_new`], freed once.
#[no_mangle]
pub unsafe extern "C" fn bc_dr_free(monoid: *mut BcDrMonoid) {
    if !monoid.is_null() {
        drop(Box::from_raw(monoid));
    }
}

/// # Safety
/// `monoid` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn bc_dr_size(monoid: *const BcDrMonoid, out: *mut usize) -> BcStatus {
    guard(|| write(out, monoid.as_ref().ok_or_else(null)?.inner.len()))
}

/// # Safety
/// `monoid` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn bc_dr_identity(monoid: *const BcDrMonoid, out: *mut usize) -> BcStatus {
    guard(|| write(out, monoid.as_ref().ok_or_else(null)?.inner.identity()))
}

/// Product of elements `i` and `j`.
///
/// # Safety
/// `monoid` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn bc_dr_mul(monoid: *const BcDrMonoid, i: usize, j: usize, out: *mut usize) -> BcStatus {
    guard(|| {
        let m = &monoid.as_ref().ok_or_else(null)?.inner;
        if i >= m.len() || j >= m.len() {
            return Err((BcStatus::Usage, format!("index out of range for a monoid of size {}", m.len())));
        }
        write(out, m.mul(i, j))
    })
}

/// Element containing the integral ideal with the given generators.
///
/// # Safety
/// `monoid` must be a live handle, `ideal` a nul-terminated string and
/// `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn bc_dr_classify(monoid: *const BcDrMonoid, ideal: *const c_char, out: *mut usize) -> BcStatus {
    guard(|| {
        let m = monoid.as_ref().ok_or_else(null)?;
        let gens: Vec<&str> = read_str(ideal)?.split(',').map(str::trim).collect();
        let a = parse_ideal(&m.field, &gens).map_err(lib)?;
        write(out, m.inner.classify(&m.field, &a).map_err(lib)?)
    })
}

/// Writes `a(1), ..., a(bound)` for the Dedekind zeta function into `out`,
/// which must hold `bound` entries.
///
/// # Safety
/// `field` must be a live handle and `out` valid for `bound` writes.
#[no_mangle]
pub unsafe extern "C" fn bc_zeta_coefficients(field: *const BcField, bound: u64, out: *mut u64) -> BcStatus {
    guard(|| {
        let k = &field.as_ref().ok_or_else(null)?.inner;
        if out.is_null() {
            return Err(null());
        }
        let z = zeta_coefficients(k, bound, false).map_err(lib)?;
        ptr::copy_nonoverlapping(z.counts.as_ptr(), out, z.counts.len());
        Ok(())
    })
}

/// Whether the hom-set of `prod_{d | n} Q(zeta_d)` is equivariantly
/// isomorphic to `DR_(n)`.
///
/// # Safety
/// `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn bc_ggc_check(n: u64, out: *mut bool) -> BcStatus {
    guard(|| write(out, ggc_check_q(n).map_err(lib)?.is_some()))
}

/// Runs one acceptance criterion (1 to 10).
///
/// # Safety
/// `passed` must be a valid pointer; `detail` may be null.
#[no_mangle]
pub unsafe extern "C" fn bc_verify_criterion(id: u8, seed: u64, passed: *mut bool, detail: *mut *mut c_char) -> BcStatus {
    guard(|| {
        if !(1..=10).contains(&id) {
            return Err((BcStatus::Usage, format!("no criterion {id}")));
        }
        let r = run_criterion(id, seed);
        write(passed, r.passed)?;
        if !detail.is_null() {
            *detail = to_c(r.detail);
        }
        Ok(())
    })
}

/// Runs the command line with `argc` arguments (excluding the program name)
/// and returns its exit code; the payload and diagnostics are returned as
/// strings.
///
/// # Safety
/// `argv` must hold `argc` nul-terminated strings; `out` and `err` must be
/// valid pointers.
#[no_mangle]
pub unsafe extern "C" fn bc_cli_run(argv: *const *const c_char, argc: usize, out: *mut *mut c_char, err: *mut *mut c_char) -> i32 {
    let mut code = 3;
    let status = guard(|| {
        if (argv.is_null() && argc > 0) || out.is_null() || err.is_null() {
            return Err(null());
        }
        let mut args = vec!["bcwitt".to_string()];
        for i in 0..argc {
            args.push(read_str(*argv.add(i))?.to_string());
        }
        let (mut o, mut e) = (Vec::new(), Vec::new());
        code = bcwitt::cli::run(args, &mut o, &mut e);
        *out = to_c(String::from_utf8_lossy(&o).into_owned());
        *err = to_c(String::from_utf8_lossy(&e).into_owned());
        Ok(())
    });
    if status == BcStatus::Ok {
        code
    } else {
        -(status as i32)
    }
}
