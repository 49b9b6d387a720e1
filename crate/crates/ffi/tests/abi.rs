use std::ffi::{CStr, CString};
use std::ptr;

use simperm_ffi::*;

fn parse(text: &str) -> *mut SpPermutation {
    let c = CString::new(text).unwrap();
    let mut p = ptr::null_mut();
    assert_eq!(unsafe { sp_permutation_parse(c.as_ptr(), &mut p) }, SpStatus::Ok);
    p
}

fn values(p: *const SpPermutation) -> Vec<usize> {
    let n = unsafe { sp_permutation_len(p) };
    let mut buf = vec![0; n];
    assert_eq!(unsafe { sp_permutation_values(p, buf.as_mut_ptr(), n) }, SpStatus::Ok);
    buf
}

fn last_error() -> String {
    unsafe { CStr::from_ptr(sp_last_error()) }.to_str().unwrap().to_owned()
}

#[test]
fn construct_and_read_back() {
    let vals = [2usize, 4, 1, 3];
    let mut p = ptr::null_mut();
    assert_eq!(unsafe { sp_permutation_new(vals.as_ptr(), 4, &mut p) }, SpStatus::Ok);
    assert_eq!(values(p), vals);
    let mut s = ptr::null_mut();
    assert_eq!(unsafe { sp_permutation_to_string(p, &mut s) }, SpStatus::Ok);
    assert_eq!(unsafe { CStr::from_ptr(s) }.to_str().unwrap(), "2 4 1 3");
    unsafe {
        sp_string_free(s);
        sp_permutation_free(p);
    }
}

#[test]
fn errors_set_status_and_message() {
    let mut p = ptr::null_mut();
    let bad = CString::new("1 1 2").unwrap();
    assert_eq!(
        unsafe { sp_permutation_parse(bad.as_ptr(), &mut p) },
        SpStatus::NotAPermutation
    );
    assert!(p.is_null());
    assert!(last_error().contains("not a permutation"), "{}", last_error());
    let junk = CString::new("1 x").unwrap();
    assert_eq!(unsafe { sp_permutation_parse(junk.as_ptr(), &mut p) }, SpStatus::Parse);
    assert_eq!(
        unsafe { sp_permutation_parse(ptr::null(), &mut p) },
        SpStatus::NullPointer
    );
    assert_eq!(
        unsafe { sp_permutation_parse(bad.as_ptr(), ptr::null_mut()) },
        SpStatus::NullPointer
    );

    let q = parse("2413");
    let mut small = [0usize; 2];
    assert_eq!(
        unsafe { sp_permutation_values(q, small.as_mut_ptr(), 2) },
        SpStatus::BufferTooSmall
    );
    let mut r = ptr::null_mut();
    assert_eq!(unsafe { sp_permutation_delete(q, 9, &mut r) }, SpStatus::OutOfRange);
    assert_eq!(unsafe { sp_permutation_delete(q, 2, &mut r) }, SpStatus::Ok);
    assert!(last_error().is_empty());
    let mut k = 0;
    assert_eq!(unsafe { sp_inessential_count(r, &mut k) }, SpStatus::NotSimple);
    let mut count = 0;
    assert_eq!(unsafe { sp_simple_count(40, &mut count) }, SpStatus::TooLarge);
    unsafe {
        sp_permutation_free(q);
        sp_permutation_free(r);
        sp_permutation_free(ptr::null_mut());
        sp_string_free(ptr::null_mut());
    }
}

#[test]
fn queries() {
    let p = parse("2 5 3 1 4");
    let (mut simple, mut pa, mut count, mut intervals) = (false, true, 0, 9);
    unsafe {
        assert_eq!(sp_is_simple(p, &mut simple), SpStatus::Ok);
        assert_eq!(sp_is_parallel_alternation(p, &mut pa), SpStatus::Ok);
        assert_eq!(sp_inessential_count(p, &mut count), SpStatus::Ok);
        assert_eq!(sp_interval_count(p, &mut intervals), SpStatus::Ok);
    }
    assert!(simple && !pa);
    assert_eq!((count, intervals), (1, 0));

    let q = parse("1 3 2 4");
    unsafe {
        sp_is_parallel_alternation(q, &mut pa);
        sp_interval_count(q, &mut intervals);
    }
    assert!(pa);
    // 13, 32, 24 are not intervals; 132 and 324 are
    assert_eq!(intervals, 3);
    unsafe {
        sp_permutation_free(p);
        sp_permutation_free(q);
    }
}

#[test]
fn edits_and_symmetries() {
    let p = parse("2413");
    let mut q = ptr::null_mut();
    assert_eq!(unsafe { sp_permutation_insert(p, 3, 5, &mut q) }, SpStatus::Ok);
    assert_eq!(values(q), [2, 4, 5, 1, 3]);
    let cases = [
        (SpSymmetry::Identity, [2, 4, 1, 3]),
        (SpSymmetry::Reverse, [3, 1, 4, 2]),
        (SpSymmetry::Complement, [3, 1, 4, 2]),
        (SpSymmetry::Inverse, [3, 1, 4, 2]),
        (SpSymmetry::ReverseComplement, [2, 4, 1, 3]),
    ];
    for (s, want) in cases {
        let mut r = ptr::null_mut();
        assert_eq!(unsafe { sp_permutation_apply_symmetry(p, s, &mut r) }, SpStatus::Ok);
        assert_eq!(values(r), want, "{s:?}");
        unsafe { sp_permutation_free(r) };
    }
    unsafe {
        sp_permutation_free(p);
        sp_permutation_free(q);
    }
}

#[test]
fn enumeration_and_reports() {
    let mut count = 0;
    for (n, want) in [(1, 1), (3, 0), (4, 2), (6, 46)] {
        assert_eq!(unsafe { sp_simple_count(n, &mut count) }, SpStatus::Ok);
        assert_eq!(count, want);
    }
    let mut holds = false;
    assert_eq!(unsafe { sp_verify_theorem(7, &mut holds) }, SpStatus::Ok);
    assert!(holds);

    let p = parse("2413");
    let mut s = ptr::null_mut();
    assert_eq!(unsafe { sp_extension_report_json(p, &mut s) }, SpStatus::Ok);
    let v: serde_json::Value = serde_json::from_str(unsafe { CStr::from_ptr(s) }.to_str().unwrap()).unwrap();
    assert_eq!(v["counts"]["simple"], 5);
    assert_eq!(v["counts"]["corner"], 4);
    unsafe {
        sp_string_free(s);
        sp_permutation_free(p);
    }
}

#[test]
fn errors_are_per_thread() {
    let mut p = ptr::null_mut();
    let bad = CString::new("3 3").unwrap();
    unsafe { sp_permutation_parse(bad.as_ptr(), &mut p) };
    assert!(!last_error().is_empty());
    std::thread::spawn(|| assert!(last_error().is_empty())).join().unwrap();
}

#[test]
fn version_string() {
    let v = unsafe { CStr::from_ptr(sp_version()) }.to_str().unwrap();
    assert_eq!(v, env!("CARGO_PKG_VERSION"));
}
