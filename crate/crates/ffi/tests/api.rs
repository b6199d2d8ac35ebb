use std::ffi::{c_char, c_int, CStr, CString};
use std::ptr;

use gdslab_ffi::*;

fn c(s: &str) -> CString {
    CString::new(s).unwrap()
}

unsafe fn take(s: *mut c_char) -> String {
    let out = CStr::from_ptr(s).to_str().unwrap().to_string();
    gds_string_free(s);
    out
}

unsafe fn divisors(s: &str) -> *mut GdsDivisors {
    let mut d = ptr::null_mut();
    assert_eq!(gds_divisors_parse(c(s).as_ptr(), 0, &mut d), GdsStatus::Ok);
    d
}

unsafe fn factors(g: *const GdsGroup) -> Vec<String> {
    (0..gds_group_len(g))
        .map(|i| {
            let mut s = ptr::null_mut();
            assert_eq!(gds_group_factor(g, i, &mut s), GdsStatus::Ok);
            take(s)
        })
        .collect()
}

#[test]
fn functor_rows() {
    unsafe {
        let d = divisors("9,3");
        let mut g = ptr::null_mut();
        assert_eq!(gds_functor(d, c("L1SP3").as_ptr(), &mut g), GdsStatus::Ok);
        assert_eq!(factors(g), ["3", "3"]);
        let mut json = ptr::null_mut();
        assert_eq!(gds_group_json(g, &mut json), GdsStatus::Ok);
        assert_eq!(take(json), "[3,3]");
        let mut s = ptr::null_mut();
        assert_eq!(gds_group_factor(g, 5, &mut s), GdsStatus::IndexOutOfRange);
        gds_group_free(g);
        assert_eq!(gds_functor(d, c("nope").as_ptr(), &mut g), GdsStatus::Unknown);
        gds_divisors_free(d);
    }
}

#[test]
fn quotients_and_containment() {
    unsafe {
        let d = divisors("9,3");
        let mut g = ptr::null_mut();
        let s = gds_dimsub_quotient(d, c("f*r*f").as_ptr(), 4, c("RRF.g4").as_ptr(), &mut g);
        assert_eq!(s, GdsStatus::Ok);
        assert_eq!(factors(g), ["3", "3"]);
        gds_group_free(g);
        let s = gds_dimsub_quotient(d, c("r*r*f").as_ptr(), 4, c("RF.g4").as_ptr(), &mut g);
        assert_eq!(s, GdsStatus::DenominatorNotContained);
        let msg = CStr::from_ptr(gds_last_error()).to_str().unwrap();
        assert!(msg.contains("witness"), "{msg}");
        let s = gds_dimsub_quotient(d, c("r*f").as_ptr(), 3, c("RRF.g4").as_ptr(), &mut g);
        assert_eq!(s, GdsStatus::DimensionMismatch);
        gds_divisors_free(d);
    }
}

#[test]
fn membership() {
    unsafe {
        let d = divisors("9,3");
        let mut out: c_int = -1;
        let s = gds_member(d, c("[x2,x1]^9").as_ptr(), c("r*f").as_ptr(), 3, &mut out);
        assert_eq!((s, out), (GdsStatus::Ok, 1));
        let s = gds_member(d, c("[x2,x1]^3").as_ptr(), c("r*f").as_ptr(), 3, &mut out);
        assert_eq!((s, out), (GdsStatus::Ok, 0));
        let s = gds_member(d, c("[x2,").as_ptr(), c("r*f").as_ptr(), 3, &mut out);
        assert_eq!(s, GdsStatus::Parse);
        gds_divisors_free(d);
    }
}

#[test]
fn verifier_round_trip() {
    unsafe {
        let mut v = ptr::null_mut();
        assert_eq!(gds_verifier_new(2, &mut v), GdsStatus::Ok);
        let d = divisors("4,2");
        let mut verdict = GdsVerdict::Fail;
        let mut json = ptr::null_mut();
        assert_eq!(gds_verify(v, c("gupta").as_ptr(), d, &mut verdict, &mut json), GdsStatus::Ok);
        assert_eq!(verdict, GdsVerdict::Pass);
        assert!(take(json).contains("\"theorem\": \"gupta\""));
        let s = gds_verify(v, c("main1").as_ptr(), d, &mut verdict, ptr::null_mut());
        assert_eq!((s, verdict), (GdsStatus::Ok, GdsVerdict::Skipped));
        let s = gds_verify(v, c("bogus").as_ptr(), d, &mut verdict, ptr::null_mut());
        assert_eq!(s, GdsStatus::Unknown);
        let e = divisors("9,3,3");
        let s = gds_verify(v, c("gupta").as_ptr(), e, &mut verdict, ptr::null_mut());
        assert_eq!(s, GdsStatus::DimensionMismatch);
        gds_divisors_free(e);
        gds_divisors_free(d);
        gds_verifier_free(v);
        assert_eq!(gds_verifier_new(0, &mut v), GdsStatus::RankOutOfRange);
    }
}

#[test]
fn version_string() {
    let v = unsafe { CStr::from_ptr(gds_version()) }.to_str().unwrap();
    assert_eq!(v, env!("CARGO_PKG_VERSION"));
}
