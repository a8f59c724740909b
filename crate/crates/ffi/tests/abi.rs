use std::ffi::{c_char, CStr, CString};
use std::ptr;

use homalg_ffi::*;

fn take(s: *mut c_char) -> String {
    assert!(!s.is_null());
    let out = unsafe { CStr::from_ptr(s) }.to_str().unwrap().to_string();
    unsafe { homalg_string_free(s) };
    out
}

fn last_error() -> String {
    unsafe { CStr::from_ptr(homalg_last_error_message()) }.to_str().unwrap().to_string()
}

fn catalog(name: &str) -> *mut HomalgStructure {
    let name = CString::new(name).unwrap();
    let mut h = ptr::null_mut();
    assert_eq!(unsafe { homalg_catalog(name.as_ptr(), &mut h) }, HomalgStatus::Ok);
    h
}

fn check(h: *const HomalgStructure, laws: &str) -> (HomalgStatus, String) {
    let laws = CString::new(laws).unwrap();
    let mut out = ptr::null_mut();
    let st = unsafe { homalg_check(h, laws.as_ptr(), false, &mut out) };
    (st, if out.is_null() { String::new() } else { take(out) })
}

#[test]
fn check_reports_and_status() {
    let h = catalog("hom_assoc_3d");
    let (st, json) = check(h, "hom-assoc");
    assert_eq!(st, HomalgStatus::Ok);
    let v: serde_json::Value = serde_json::from_str(&json).unwrap();
    assert_eq!(v["results"][0]["holds"], true);
    unsafe { homalg_free(h) };

    let u = catalog("hom_assoc_3d_untwisted");
    let (st, json) = check(u, "hom-assoc, hom-lie");
    assert_eq!(st, HomalgStatus::LawFailed);
    let v: serde_json::Value = serde_json::from_str(&json).unwrap();
    assert_eq!(v["results"][0]["witnesses"][0]["labels"], serde_json::json!(["x1", "x1", "x3"]));
    assert_eq!(v["results"].as_array().unwrap().len(), 2);
    unsafe { homalg_free(u) };
}

#[test]
fn parse_print_dual_round_trip() {
    let h = catalog("hom_lie_3d");
    let mut text = ptr::null_mut();
    assert_eq!(unsafe { homalg_print(h, &mut text) }, HomalgStatus::Ok);
    let text = CString::new(take(text)).unwrap();
    let mut again = ptr::null_mut();
    assert_eq!(unsafe { homalg_parse(text.as_ptr(), &mut again) }, HomalgStatus::Ok);
    let mut dim = 0usize;
    assert_eq!(unsafe { homalg_dim(again, &mut dim) }, HomalgStatus::Ok);
    assert_eq!(dim, 3);

    let mut d = ptr::null_mut();
    assert_eq!(unsafe { homalg_dual(again, &mut d) }, HomalgStatus::Ok);
    let (st, _) = check(d, "cog5");
    assert_eq!(st, HomalgStatus::Ok);
    let (st, _) = check(d, "hom-assoc");
    assert_eq!(st, HomalgStatus::InvalidInput);
    assert!(last_error().contains("algebras"));
    unsafe {
        homalg_free(d);
        homalg_free(again);
        homalg_free(h);
    }
}

#[test]
fn errors_map_to_codes() {
    let mut h = ptr::null_mut();
    let bad = CString::new("algebra a\nbasis x\nmu\n  x y : x = 1\nend\n").unwrap();
    assert_eq!(unsafe { homalg_parse(bad.as_ptr(), &mut h) }, HomalgStatus::InvalidInput);
    assert!(h.is_null());
    assert!(last_error().contains("line"), "{}", last_error());

    assert_eq!(unsafe { homalg_parse(ptr::null(), &mut h) }, HomalgStatus::NullPointer);
    let (st, _) = check(ptr::null(), "hom-assoc");
    assert_eq!(st, HomalgStatus::NullPointer);

    let g = catalog("group_z3");
    let (st, _) = check(g, "no-such-law");
    assert_eq!(st, HomalgStatus::InvalidInput);
    let (st, _) = check(g, "bialgebra");
    assert_eq!(st, HomalgStatus::Ok);
    assert_eq!(last_error(), "");
    unsafe { homalg_free(g) };
    unsafe { homalg_free(ptr::null_mut()) };
    unsafe { homalg_string_free(ptr::null_mut()) };
}

#[test]
fn sigma_and_virasoro() {
    let q = CString::new("q").unwrap();
    let check = CString::new("jacobi").unwrap();
    let mut out = ptr::null_mut();
    let st = unsafe { homalg_sigma_laurent(q.as_ptr(), 1, 0, ptr::null(), 2, check.as_ptr(), &mut out) };
    assert_eq!(st, HomalgStatus::Ok);
    assert!(take(out).contains("six-term-jacobi"));

    let bogus = CString::new("bogus").unwrap();
    let st = unsafe { homalg_sigma_laurent(q.as_ptr(), 1, 0, ptr::null(), 2, bogus.as_ptr(), &mut out) };
    assert_eq!(st, HomalgStatus::InvalidInput);

    let st = unsafe { homalg_virasoro(2, &mut out) };
    assert_eq!(st, HomalgStatus::Ok);
    let v: serde_json::Value = serde_json::from_str(&take(out)).unwrap();
    assert!(v["results"].as_array().unwrap().iter().any(|r| r["law"] == "classical-central-term" && r["holds"] == true));
}

#[test]
fn version_matches_crate() {
    let v = unsafe { CStr::from_ptr(homalg_version()) }.to_str().unwrap();
    assert_eq!(v, env!("CARGO_PKG_VERSION"));
}

#[test]
fn header_declares_every_export() {
    let header = std::fs::read_to_string(concat!(env!("CARGO_MANIFEST_DIR"), "/include/homalg.h")).unwrap();
    let src = std::fs::read_to_string(concat!(env!("CARGO_MANIFEST_DIR"), "/src/lib.rs")).unwrap();
    let exports: Vec<&str> = src
        .lines()
        .filter_map(|l| l.split("extern \"C\" fn ").nth(1))
        .map(|rest| rest.split('(').next().unwrap())
        .collect();
    assert!(exports.len() >= 11);
    for f in exports {
        assert!(header.contains(&format!("{f}(")), "{f} missing from header");
    }
    for code in ["HOMALG_STATUS_OK = 0", "HOMALG_STATUS_LAW_FAILED = 1", "HOMALG_STATUS_INVALID_INPUT = 2", "HOMALG_STATUS_NULL_POINTER = 3", "HOMALG_STATUS_INTERNAL = 4"] {
        assert!(header.contains(code), "{code}");
    }
}
