//! Drives the C entry points from Rust exactly as a C caller would:
//! raw pointers, status codes, and the per-thread error message.

use std::ffi::{c_char, CStr, CString};
use std::ptr;

use brickwork_capi::*;

fn cstr(s: &str) -> CString {
    CString::new(s).unwrap()
}

fn last_error() -> String {
    let p = bw_last_error_message();
    assert!(!p.is_null(), "expected an error message");
    unsafe { CStr::from_ptr(p) }.to_str().unwrap().to_string()
}

#[test]
fn version_is_a_static_semver_string() {
    let p = bw_version();
    assert!(!p.is_null());
    let v = unsafe { CStr::from_ptr(p) }.to_str().unwrap();
    assert_eq!(v, env!("CARGO_PKG_VERSION"));
    assert_eq!(v.split('.').count(), 3);
}

#[test]
fn tiling_counts_match_the_known_instance() {
    let perm = cstr("(3,1)(4)(5,2)");
    let shape = [2u32, 2, 1];
    let (mut zeta, mut xi, mut eta) = (0u64, 0u64, 0u64);
    let status = unsafe {
        bw_tiling_counts(perm.as_ptr(), shape.as_ptr(), shape.len(), &mut zeta, &mut xi, &mut eta)
    };
    assert_eq!(status, BwStatus::Ok);
    assert_eq!((zeta, xi, eta), (2, 1, 1));
}

#[test]
fn overweight_shape_counts_zero_without_error() {
    let perm = cstr("(2,1)");
    let shape = [3u32];
    let (mut zeta, mut xi, mut eta) = (9u64, 9, 9);
    let status = unsafe {
        bw_tiling_counts(perm.as_ptr(), shape.as_ptr(), shape.len(), &mut zeta, &mut xi, &mut eta)
    };
    assert_eq!(status, BwStatus::Ok);
    assert_eq!((zeta, xi, eta), (0, 0, 0));
}

#[test]
fn null_and_malformed_inputs_set_statuses_and_messages() {
    let shape = [2u32, 1];
    let (mut zeta, mut xi, mut eta) = (0u64, 0, 0);
    let status = unsafe {
        bw_tiling_counts(ptr::null(), shape.as_ptr(), shape.len(), &mut zeta, &mut xi, &mut eta)
    };
    assert_eq!(status, BwStatus::NullPointer);
    assert!(last_error().contains("perm"));

    let perm = cstr("(3,1");
    let status = unsafe {
        bw_tiling_counts(perm.as_ptr(), shape.as_ptr(), shape.len(), &mut zeta, &mut xi, &mut eta)
    };
    assert_eq!(status, BwStatus::Parse);

    let bad_utf8: [c_char; 3] = [-1i8 as c_char, -1i8 as c_char, 0];
    let status = unsafe {
        bw_tiling_counts(bad_utf8.as_ptr(), shape.as_ptr(), shape.len(), &mut zeta, &mut xi, &mut eta)
    };
    assert_eq!(status, BwStatus::Utf8);

    let perm = cstr("(2,1)");
    let unsorted = [1u32, 2];
    let status = unsafe {
        bw_tiling_counts(perm.as_ptr(), unsorted.as_ptr(), unsorted.len(), &mut zeta, &mut xi, &mut eta)
    };
    assert_eq!(status, BwStatus::InvalidInput);

    let status = unsafe {
        bw_tiling_counts(perm.as_ptr(), shape.as_ptr(), shape.len(), ptr::null_mut(), &mut xi, &mut eta)
    };
    assert_eq!(status, BwStatus::NullPointer);
}

#[test]
fn character_table_handle_round_trips() {
    let mut table: *mut BwCharacterTable = ptr::null_mut();
    let status = unsafe { bw_character_table_new(4, &mut table) };
    assert_eq!(status, BwStatus::Ok);
    assert!(!table.is_null());
    assert_eq!(unsafe { bw_character_table_class_count(table) }, 5);

    let lambda = [2u32, 1, 1];
    let cls = [2u32, 2];
    let mut value = 0i64;
    let status = unsafe {
        bw_character_table_value(table, lambda.as_ptr(), lambda.len(), cls.as_ptr(), cls.len(), &mut value)
    };
    assert_eq!(status, BwStatus::Ok);
    assert_eq!(value, -1);

    // A partition of the wrong weight is rejected, not misread.
    let wrong = [3u32];
    let status = unsafe {
        bw_character_table_value(table, wrong.as_ptr(), wrong.len(), cls.as_ptr(), cls.len(), &mut value)
    };
    assert_eq!(status, BwStatus::InvalidInput);

    unsafe { bw_character_table_free(table) };
    unsafe { bw_character_table_free(ptr::null_mut()) };
    assert_eq!(unsafe { bw_character_table_class_count(ptr::null()) }, 0);
}

#[test]
fn character_table_resource_cap_is_enforced() {
    let mut table: *mut BwCharacterTable = ptr::null_mut();
    let status = unsafe { bw_character_table_new(19, &mut table) };
    assert_eq!(status, BwStatus::ResourceLimit);
    assert!(table.is_null());
    assert!(last_error().contains("18"));
}

#[test]
fn alternating_report_carries_the_identity() {
    let perm = cstr("(3,1)(4)(5,2)");
    let mut rep = BwAlternatingReport {
        n: 0,
        j: 0,
        lhs: 0,
        rhs: 0,
        euler: 0,
        homology_sum: 0,
        all_equal: 0,
    };
    let status = unsafe { bw_alternating_report(perm.as_ptr(), 5, &mut rep) };
    assert_eq!(status, BwStatus::Ok);
    assert_eq!((rep.n, rep.j), (5, 5));
    assert_eq!((rep.lhs, rep.rhs, rep.euler, rep.homology_sum), (-1, -1, -1, -1));
    assert_eq!(rep.all_equal, 1);
}

#[test]
fn homology_dims_use_the_two_call_buffer_protocol() {
    let perm = cstr("(3,1)(4)(5,2)");
    let mut needed = 0usize;
    let status = unsafe { bw_homology_dims(perm.as_ptr(), 5, ptr::null_mut(), 0, &mut needed) };
    assert_eq!(status, BwStatus::BufferTooSmall);
    assert_eq!(needed, 5);
    assert!(last_error().contains("5"));

    let mut buf = vec![u64::MAX; needed];
    let status =
        unsafe { bw_homology_dims(perm.as_ptr(), 5, buf.as_mut_ptr(), buf.len(), &mut needed) };
    assert_eq!(status, BwStatus::Ok);
    assert_eq!(needed, 5);
    assert_eq!(buf, vec![0, 0, 1, 0, 0]);

    // An oversized buffer is fine; only the first `needed` slots are written.
    let mut wide = vec![7u64; needed + 3];
    let status =
        unsafe { bw_homology_dims(perm.as_ptr(), 5, wide.as_mut_ptr(), wide.len(), &mut needed) };
    assert_eq!(status, BwStatus::Ok);
    assert_eq!(&wide[..needed], &[0, 0, 1, 0, 0]);
    assert_eq!(&wide[needed..], &[7, 7, 7]);
}

#[test]
fn kronecker_and_expected_cycles_return_exact_values() {
    let lam = [2u32, 1];
    let mut g = 0u64;
    let status = unsafe {
        bw_kronecker(lam.as_ptr(), lam.len(), lam.as_ptr(), lam.len(), lam.as_ptr(), lam.len(), &mut g)
    };
    assert_eq!(status, BwStatus::Ok);
    assert_eq!(g, 1);

    let mismatched = [2u32];
    let status = unsafe {
        bw_kronecker(
            lam.as_ptr(),
            lam.len(),
            mismatched.as_ptr(),
            mismatched.len(),
            lam.as_ptr(),
            lam.len(),
            &mut g,
        )
    };
    assert_eq!(status, BwStatus::InvalidInput);

    let (mut numer, mut denom) = (0i64, 0u64);
    for (n, k) in [(5u32, 3u32), (10, 7), (6, 1)] {
        let status = unsafe { bw_expected_k_cycles(n, k, &mut numer, &mut denom) };
        assert_eq!(status, BwStatus::Ok);
        assert_eq!((numer, denom), (1, u64::from(k)), "n={n} k={k}");
    }
    // k beyond n is an empty sum, not an error.
    let status = unsafe { bw_expected_k_cycles(3, 4, &mut numer, &mut denom) };
    assert_eq!(status, BwStatus::Ok);
    assert_eq!((numer, denom), (0, 1));

    let status = unsafe { bw_expected_k_cycles(3, 0, &mut numer, &mut denom) };
    assert_eq!(status, BwStatus::InvalidInput);
}

#[test]
fn verify_suite_runs_reduced_and_rejects_unknown_names() {
    let mut failed = usize::MAX;
    let suite = cstr("permutohedron");
    let status = unsafe { bw_verify_suite(suite.as_ptr(), 6, -1, &mut failed) };
    assert_eq!(status, BwStatus::Ok);
    assert_eq!(failed, 0);

    let suite = cstr("young");
    let status = unsafe { bw_verify_suite(suite.as_ptr(), 5, -1, &mut failed) };
    assert_eq!(status, BwStatus::Ok);
    assert_eq!(failed, 0);

    let suite = cstr("everything");
    let status = unsafe { bw_verify_suite(suite.as_ptr(), -1, -1, &mut failed) };
    assert_eq!(status, BwStatus::InvalidInput);
    assert!(last_error().contains("everything"));

    let suite = cstr("alternating");
    let status = unsafe { bw_verify_suite(suite.as_ptr(), 13, -1, &mut failed) };
    assert_eq!(status, BwStatus::ResourceLimit);
}

#[test]
fn committed_header_declares_the_full_surface() {
    let header = include_str!("../include/brickwork.h");
    for symbol in [
        "bw_version",
        "bw_last_error_message",
        "bw_tiling_counts",
        "bw_character_table_new",
        "bw_character_table_free",
        "bw_character_table_class_count",
        "bw_character_table_value",
        "bw_alternating_report",
        "bw_homology_dims",
        "bw_kronecker",
        "bw_expected_k_cycles",
        "bw_verify_suite",
    ] {
        assert!(header.contains(symbol), "header is missing {symbol}");
    }
    assert!(header.contains("BW_STATUS_OK = 0"));
    assert!(header.contains("BW_STATUS_BUFFER_TOO_SMALL = 8"));
    assert!(header.contains("typedef struct BwCharacterTable BwCharacterTable;"));
    assert!(header.contains("uint8_t all_equal;"));
    assert!(header.contains("#ifdef __cplusplus"));
}
