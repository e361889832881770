use std::ffi::{CStr, CString};
use std::ptr;

use bcwitt_ffi::*;

fn c(s: &str) -> CString {
    CString::new(s).unwrap()
}

#[test]
fn field_and_monoid() {
    unsafe {
        let mut k = ptr::null_mut();
        assert_eq!(bc_field_new(c("x^2+1").as_ptr(), &mut k), BcStatus::Ok);
        let mut deg = 0;
        assert_eq!(bc_field_degree(k, &mut deg), BcStatus::Ok);
        assert_eq!(deg, 2);
        let mut disc = ptr::null_mut();
        assert_eq!(bc_field_discriminant(k, &mut disc), BcStatus::Ok);
        assert_eq!(CStr::from_ptr(disc).to_str().unwrap(), "-4");
        bc_string_free(disc);

        let mut m = ptr::null_mut();
        assert_eq!(bc_dr_new(k, c("2").as_ptr(), BcConstruction::FiberProduct, &mut m), BcStatus::Ok);
        let (mut n, mut e) = (0, 0);
        assert_eq!(bc_dr_size(m, &mut n), BcStatus::Ok);
        assert_eq!(bc_dr_identity(m, &mut e), BcStatus::Ok);
        assert_eq!(n, 3);
        let mut x = 0;
        assert_eq!(bc_dr_classify(m, c("1+t").as_ptr(), &mut x), BcStatus::Ok);
        let mut xx = 0;
        assert_eq!(bc_dr_mul(m, x, x, &mut xx), BcStatus::Ok);
        let mut two = 0;
        assert_eq!(bc_dr_classify(m, c("2").as_ptr(), &mut two), BcStatus::Ok);
        assert_eq!(xx, two);
        assert_eq!(bc_dr_mul(m, 7, 0, &mut xx), BcStatus::Usage);
        bc_dr_free(m);

        let mut a = [0u64; 8];
        assert_eq!(bc_zeta_coefficients(k, 8, a.as_mut_ptr()), BcStatus::Ok);
        assert_eq!(a, [1, 1, 0, 1, 2, 0, 0, 1]);
        bc_field_free(k);
    }
}

#[test]
fn errors_are_reported() {
    unsafe {
        let mut k = ptr::null_mut();
        assert_eq!(bc_field_new(c("x^2-x").as_ptr(), &mut k), BcStatus::Input);
        assert!(k.is_null());
        let msg = CStr::from_ptr(bc_last_error()).to_str().unwrap();
        assert!(msg.contains("reducible"));
        assert_eq!(bc_field_new(ptr::null(), &mut k), BcStatus::NullPointer);
        let mut d = 0;
        assert_eq!(bc_field_degree(ptr::null(), &mut d), BcStatus::NullPointer);
    }
}

#[test]
fn checks() {
    unsafe {
        let mut ok = false;
        assert_eq!(bc_ggc_check(6, &mut ok), BcStatus::Ok);
        assert!(ok);
        assert_eq!(bc_ggc_check(64, &mut ok), BcStatus::Input);
        let mut detail = ptr::null_mut();
        assert_eq!(bc_verify_criterion(4, 7, &mut ok, &mut detail), BcStatus::Ok);
        assert!(ok);
        bc_string_free(detail);
        assert_eq!(bc_verify_criterion(0, 7, &mut ok, ptr::null_mut()), BcStatus::Usage);
    }
}

#[test]
fn cli_passthrough() {
    let args = [c("dr"), c("table"), c("--field"), c("x"), c("--modulus"), c("4")];
    let ptrs: Vec<_> = args.iter().map(|a| a.as_ptr()).collect();
    unsafe {
        let (mut out, mut err) = (ptr::null_mut(), ptr::null_mut());
        assert_eq!(bc_cli_run(ptrs.as_ptr(), ptrs.len(), &mut out, &mut err), 0);
        assert!(CStr::from_ptr(out).to_str().unwrap().contains("\"size\":\"4\""));
        bc_string_free(out);
        bc_string_free(err);
    }
}

#[test]
fn header_is_generated() {
    let h = std::fs::read_to_string(concat!(env!("CARGO_MANIFEST_DIR"), "/include/bcwitt.h")).unwrap();
    for name in ["bc_field_new", "bc_dr_mul", "bc_last_error", "bc_string_free", "BC_STATUS_OK", "typedef struct BcField BcField"] {
        assert!(h.contains(name), "{name} missing from header");
    }
}
