//! Drives the exported functions exactly as a C caller would.

use std::ffi::{c_char, CStr, CString};
use std::path::{Path, PathBuf};
use std::process::Command;
use std::ptr;

use z3hilb_ffi::*;

fn last_error() -> String {
    unsafe { CStr::from_ptr(z3_last_error_message()) }.to_str().unwrap().to_owned()
}

fn parse(text: &str) -> *mut Z3Partition {
    let c = CString::new(text).unwrap();
    let mut out = ptr::null_mut();
    assert_eq!(unsafe { z3_partition_parse(c.as_ptr(), &mut out) }, Z3Status::Z3_OK, "{}", last_error());
    out
}

fn take_string(s: *mut c_char) -> String {
    let owned = unsafe { CStr::from_ptr(s) }.to_str().unwrap().to_owned();
    unsafe { z3_string_free(s) };
    owned
}

fn to_text(p: *const Z3Partition) -> String {
    let mut s = ptr::null_mut();
    assert_eq!(unsafe { z3_partition_to_string(p, &mut s) }, Z3Status::Z3_OK);
    take_string(s)
}

#[test]
fn weights_and_boundary() {
    let lam = parse("6,4");
    let mut w = 0;
    unsafe {
        assert_eq!(z3_partition_weight(lam, Z3WeightKind::Z3_WT_TILDE, &mut w), Z3Status::Z3_OK);
        assert_eq!(w, 4);
        assert_eq!(z3_partition_size(lam, &mut w), Z3Status::Z3_OK);
        assert_eq!(w, 10);

        let mut len = 0;
        assert_eq!(z3_partition_boundary(lam, ptr::null_mut(), 0, &mut len), Z3Status::Z3_BUFFER_TOO_SMALL);
        assert_eq!(len, 8);
        let mut buf = vec![0u32; len];
        assert_eq!(z3_partition_boundary(lam, buf.as_mut_ptr(), buf.len(), &mut len), Z3Status::Z3_OK);
        assert_eq!(buf, [3, 4, 5, 6, 5, 6, 7, 6]);

        let (mut arm, mut leg) = (0, 0);
        assert_eq!(z3_partition_arm_leg(lam, 1, 1, &mut arm, &mut leg), Z3Status::Z3_OK);
        assert_eq!((arm, leg), (1, 5));
        assert_eq!(z3_partition_arm_leg(lam, 5, 2, &mut arm, &mut leg), Z3Status::Z3_CELL_OUT_OF_DIAGRAM);
        assert_eq!((arm, leg), (1, 5));
        z3_partition_free(lam);
    }
}

#[test]
fn rows_round_trip() {
    let rows = [5u32, 3, 3, 1];
    let mut p = ptr::null_mut();
    unsafe {
        assert_eq!(z3_partition_from_rows(rows.as_ptr(), rows.len(), &mut p), Z3Status::Z3_OK);
        assert_eq!(to_text(p), "5,3,3,1");
        let mut out = [0u32; 4];
        let mut len = 0;
        assert_eq!(z3_partition_rows(p, out.as_mut_ptr(), 4, &mut len), Z3Status::Z3_OK);
        assert_eq!(out, rows);
        z3_partition_free(p);

        let mut empty = ptr::null_mut();
        assert_eq!(z3_partition_from_rows(ptr::null(), 0, &mut empty), Z3Status::Z3_OK);
        assert_eq!(to_text(empty), "-");
        z3_partition_free(empty);

        let bad = [1u32, 3];
        let mut never = ptr::null_mut();
        assert_eq!(z3_partition_from_rows(bad.as_ptr(), 2, &mut never), Z3Status::Z3_PARSE_ERROR);
        assert!(never.is_null());
        assert!(!last_error().is_empty());
    }
}

#[test]
fn null_arguments_are_reported() {
    let mut out = ptr::null_mut();
    unsafe {
        assert_eq!(z3_partition_parse(ptr::null(), &mut out), Z3Status::Z3_NULL_POINTER);
        assert_eq!(z3_partition_size(ptr::null(), &mut 0), Z3Status::Z3_NULL_POINTER);
        let lam = parse("2,1");
        assert_eq!(z3_partition_size(lam, ptr::null_mut()), Z3Status::Z3_NULL_POINTER);
        assert!(last_error().contains("null"));
        z3_partition_free(lam);
        z3_partition_free(ptr::null_mut());
        z3_series_free(ptr::null_mut());
        z3_string_free(ptr::null_mut());
    }
}

#[test]
fn dyson_maps_and_decomposition() {
    let lam = parse("1,1");
    let mut out = ptr::null_mut();
    unsafe {
        assert_eq!(z3_partition_apply(lam, Z3Map::Z3_PSI2, &mut out), Z3Status::Z3_OK);
        assert_eq!(to_text(out), "4");
        let mut back = ptr::null_mut();
        assert_eq!(z3_partition_apply(out, Z3Map::Z3_PSI2_INV, &mut back), Z3Status::Z3_OK);
        assert_eq!(to_text(back), "1,1");
        let mut none = ptr::null_mut();
        assert_eq!(z3_partition_apply(out, Z3Map::Z3_RHO1_INV, &mut none), Z3Status::Z3_UNDEFINED_MAP);
        assert!(none.is_null());

        let mut len = 0;
        let mut parts = [0u8; 8];
        assert_eq!(z3_partition_decompose(out, parts.as_mut_ptr(), parts.len(), &mut len), Z3Status::Z3_OK);
        assert_eq!(parts[..len].iter().map(|&b| u32::from(b)).sum::<u32>(), 4);
        let mut rebuilt = ptr::null_mut();
        assert_eq!(z3_build(parts.as_ptr(), len, &mut rebuilt, ptr::null_mut()), Z3Status::Z3_OK);
        let mut same = false;
        assert_eq!(z3_partition_equal(out, rebuilt, &mut same), Z3Status::Z3_OK);
        assert!(same);

        for p in [lam, out, back, rebuilt] {
            z3_partition_free(p);
        }
    }
}

#[test]
fn build_reports_failing_step() {
    let mut out = ptr::null_mut();
    let mut step = 0usize;
    unsafe {
        assert_eq!(z3_build([2u8, 2, 1, 2].as_ptr(), 4, &mut out, &mut step), Z3Status::Z3_INADMISSIBLE);
        assert!(out.is_null());
        assert_eq!(last_error(), format!("inadmissible composition (fails at step {step})"));
        assert_eq!(z3_build([3u8].as_ptr(), 1, &mut out, &mut step), Z3Status::Z3_PARSE_ERROR);
        assert_eq!(z3_build(ptr::null(), 0, &mut out, ptr::null_mut()), Z3Status::Z3_OK);
        assert_eq!(to_text(out), "-");
        z3_partition_free(out);
    }
}

#[test]
fn stair_and_split() {
    let lam = parse("4,4,4,2,1");
    unsafe {
        let (mut stair, mut landing) = (false, 0);
        // Column heights 5,4,3,3.
        assert_eq!(z3_partition_stair(lam, &mut stair, &mut landing), Z3Status::Z3_OK);
        assert!(stair);
        assert_eq!(landing, 1);
        let tall = parse("4,1,1");
        assert_eq!(z3_partition_stair(tall, &mut stair, &mut landing), Z3Status::Z3_OK);
        assert!(!stair);
        z3_partition_free(tall);

        let (mut lp, mut ldp) = (ptr::null_mut(), ptr::null_mut());
        assert_eq!(z3_partition_split(lam, &mut lp, &mut ldp), Z3Status::Z3_OK);
        assert_eq!(to_text(lp), "2,1");
        assert_eq!(to_text(ldp), "4,4,4");
        let mut merged = ptr::null_mut();
        assert_eq!(z3_partition_merge(lp, ldp, &mut merged), Z3Status::Z3_OK);
        assert_eq!(to_text(merged), "4,4,4,2,1");
        assert_eq!(z3_partition_merge(ldp, lp, &mut merged), Z3Status::Z3_DOMAIN_VIOLATION);
        for p in [lam, lp, ldp, merged] {
            z3_partition_free(p);
        }
    }
}

#[test]
fn series_exports() {
    let mut lhs = ptr::null_mut();
    let mut rhs = ptr::null_mut();
    unsafe {
        assert_eq!(z3_series_weight_sum(Z3WeightKind::Z3_WT_TILDE, 12, 4, &mut lhs), Z3Status::Z3_OK);
        assert_eq!(z3_series_product(Z3Product::Z3_CONJ3_RHS, 12, &mut rhs), Z3Status::Z3_OK);
        let mut eq = false;
        assert_eq!(z3_series_equal(lhs, rhs, &mut eq), Z3Status::Z3_OK);
        assert!(eq);

        let mut s = ptr::null_mut();
        assert_eq!(z3_series_coefficient(lhs, 1, 4, &mut s), Z3Status::Z3_OK);
        assert_eq!(take_string(s), "3");
        assert_eq!(z3_series_coefficient(lhs, 0, 13, &mut s), Z3Status::Z3_INVALID_ARGUMENT);

        assert_eq!(z3_series_to_csv(lhs, &mut s), Z3Status::Z3_OK);
        assert!(take_string(s).starts_with("n,k,coefficient\n0,0,1\n"));
        assert_eq!(z3_series_to_json(lhs, &mut s), Z3Status::Z3_OK);
        assert!(take_string(s).contains("\"4\": [[0,\"1\"],[1,\"3\"],[2,\"1\"]]"));

        z3_series_free(lhs);
        z3_series_free(rhs);
    }
}

#[test]
fn verify_returns_report() {
    let check = CString::new("conj2").unwrap();
    let mut passed = false;
    let mut json = ptr::null_mut();
    unsafe {
        assert_eq!(z3_verify(check.as_ptr(), 12, 2, &mut passed, &mut json), Z3Status::Z3_OK);
        assert!(passed);
        let report = take_string(json);
        assert!(report.contains("\"status\": \"pass\""), "{report}");

        let top = CString::new("top-coefficients").unwrap();
        assert_eq!(z3_verify(top.as_ptr(), 3, 1, &mut passed, ptr::null_mut()), Z3Status::Z3_DOMAIN_VIOLATION);
        let unknown = CString::new("nope").unwrap();
        assert_eq!(z3_verify(unknown.as_ptr(), -1, 1, &mut passed, ptr::null_mut()), Z3Status::Z3_INVALID_ARGUMENT);
    }
}

#[test]
fn version_is_static() {
    let v = unsafe { CStr::from_ptr(z3_version()) };
    assert_eq!(v.to_str().unwrap(), env!("CARGO_PKG_VERSION"));
}

fn target_dir() -> PathBuf {
    // tests/<name>-<hash> lives in target/<profile>/deps.
    let exe = std::env::current_exe().unwrap();
    exe.parent().and_then(Path::parent).unwrap().to_path_buf()
}

#[test]
fn c_smoke_program() {
    let manifest = Path::new(env!("CARGO_MANIFEST_DIR"));
    let include = manifest.join("include");
    let source = manifest.join("tests/c/smoke.c");
    let Ok(cc) = which_cc() else {
        eprintln!("no C compiler found; skipping");
        return;
    };
    let lib = target_dir().join("libz3hilb_ffi.a");
    if !lib.exists() {
        // Without the static archive, at least make sure the header compiles.
        let status = Command::new(&cc)
            .args(["-std=c11", "-Wall", "-Werror", "-fsyntax-only", "-I"])
            .arg(&include)
            .arg(&source)
            .status()
            .unwrap();
        assert!(status.success());
        return;
    }
    let dir = tempfile::tempdir().unwrap();
    let exe = dir.path().join("smoke");
    let status = Command::new(&cc)
        .args(["-std=c11", "-Wall", "-Werror", "-I"])
        .arg(&include)
        .arg(&source)
        .arg(&lib)
        .args(["-lpthread", "-ldl", "-lm", "-o"])
        .arg(&exe)
        .status()
        .unwrap();
    assert!(status.success(), "C compile failed");
    let out = Command::new(&exe).output().unwrap();
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    assert_eq!(String::from_utf8_lossy(&out.stdout), "ok\n");
}

fn which_cc() -> Result<String, ()> {
    for cc in ["cc", "gcc", "clang"] {
        if Command::new(cc).arg("--version").output().is_ok_and(|o| o.status.success()) {
            return Ok(cc.to_owned());
        }
    }
    Err(())
}
