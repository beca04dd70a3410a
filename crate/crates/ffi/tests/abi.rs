// SPDX-License-Identifier: Apache-2.0

use std::ffi::CStr;
use std::path::Path;
use std::process::Command;
use std::ptr;

use dqs_ffi::*;

fn last_error() -> String {
    let p = dqs_last_error_message();
    assert!(!p.is_null());
    unsafe { CStr::from_ptr(p) }.to_string_lossy().into_owned()
}

#[test]
fn spectrum_round_trip() {
    unsafe {
        let mut s = ptr::null_mut();
        assert_eq!(dqs_spectrum_new(12, &mut s), DqsStatus::Ok);
        let mut len = 0;
        assert_eq!(dqs_spectrum_len(s, &mut len), DqsStatus::Ok);
        assert_eq!(len, 12);

        let (mut lambda, mut deg) = (0i64, 0u64);
        assert_eq!(dqs_spectrum_entry(s, 0, &mut lambda, &mut deg), DqsStatus::Ok);
        assert_eq!((lambda, deg), (-11, 2));
        assert_eq!(dqs_spectrum_entry(s, 12, &mut lambda, &mut deg), DqsStatus::OutOfRange);

        assert_eq!(dqs_spectrum_degeneracy(s, -7, &mut deg), DqsStatus::Ok);
        assert_eq!(deg, 110);
        assert_eq!(dqs_spectrum_degeneracy(s, -4, &mut deg), DqsStatus::NotEigenvalue);
        assert!(last_error().contains("not an eigenvalue"));
        dqs_spectrum_free(s);
    }
}

#[test]
fn spectrum_rejects_bad_sizes() {
    unsafe {
        let mut s = ptr::null_mut();
        assert_eq!(dqs_spectrum_new(1, &mut s), DqsStatus::Size);
        assert!(s.is_null());
        assert_eq!(dqs_spectrum_new(8, ptr::null_mut()), DqsStatus::NullPointer);
        dqs_spectrum_free(ptr::null_mut());
    }
}

#[test]
fn damped_curve_checkpoint() {
    unsafe {
        let mut c = ptr::null_mut();
        let status = dqs_curve_new(4096, 22, DqsModel::Damped, DqsAngle::Doubled, f64::NAN, 200, &mut c);
        assert_eq!(status, DqsStatus::Ok);

        let mut len = 0;
        assert_eq!(dqs_curve_len(c, &mut len), DqsStatus::Ok);
        assert_eq!(len, 200);

        let mut j = 0;
        assert_eq!(dqs_curve_queries_to_reach(c, 0.995, &mut j), DqsStatus::Ok);
        assert_eq!(j, 32);

        let mut p = 0.0;
        assert_eq!(dqs_curve_get(c, 0, &mut p), DqsStatus::Ok);
        assert_eq!(p, 0.0);
        assert_eq!(dqs_curve_get(c, 32, &mut p), DqsStatus::Ok);
        assert!((p - 0.99554).abs() < 1e-4);
        assert_eq!(dqs_curve_get(c, 201, &mut p), DqsStatus::OutOfRange);

        let mut data = ptr::null();
        assert_eq!(dqs_curve_data(c, &mut data), DqsStatus::Ok);
        assert_eq!(*data.add(31), p);

        assert_eq!(dqs_curve_queries_to_reach(c, 1.5, &mut j), DqsStatus::Domain);
        dqs_curve_free(c);
    }
}

#[test]
fn expected_minimum_matches_classical_ratio() {
    unsafe {
        let mut c = ptr::null_mut();
        let status = dqs_curve_new(256, 14, DqsModel::ClassicalReplace, DqsAngle::Doubled, f64::NAN, 0, &mut c);
        assert_eq!(status, DqsStatus::Ok);
        let (mut j, mut e, mut sat) = (0usize, 0.0f64, true);
        assert_eq!(dqs_curve_minimize_expected(c, &mut j, &mut e, &mut sat), DqsStatus::Ok);
        assert_eq!((j, sat), (1, false));
        assert_eq!(e, 256.0 / 14.0);
        dqs_curve_free(c);
    }
}

#[test]
fn curve_argument_errors() {
    unsafe {
        let mut c = ptr::null_mut();
        let s = dqs_curve_new(256, 0, DqsModel::Grover, DqsAngle::Doubled, f64::NAN, 10, &mut c);
        assert_eq!(s, DqsStatus::InvalidArgument);
        let s = dqs_curve_new(256, 2, DqsModel::Damped, DqsAngle::Doubled, 1.5, 10, &mut c);
        assert_eq!(s, DqsStatus::Domain);
        assert!(c.is_null());

        let mut j = 0;
        assert_eq!(dqs_curve_queries_to_reach(ptr::null(), 0.5, &mut j), DqsStatus::NullPointer);
    }
}

#[test]
fn scalar_helpers() {
    unsafe {
        let mut p = 0.0;
        assert_eq!(dqs_grover_success_probability(4096, 22, 10, &mut p), DqsStatus::Ok);
        assert!((0.9985..=0.9995).contains(&p));

        let mut cp = 0.0;
        assert_eq!(dqs_critical_damping(4096, 22, DqsAngle::Amplitude, &mut cp), DqsStatus::Ok);
        let s = (22.0f64 / 4096.0).sqrt();
        assert!((cp - (1.0 - s) / (1.0 + s)).abs() < 1e-15);
        assert_eq!(dqs_critical_damping(4096, 4096, DqsAngle::Doubled, &mut cp), DqsStatus::Ok);
        assert_eq!(cp, 0.0);
    }
}

#[test]
fn status_messages_are_static() {
    for s in [DqsStatus::Ok, DqsStatus::NotEigenvalue, DqsStatus::Panic] {
        let msg = unsafe { CStr::from_ptr(dqs_status_message(s)) };
        assert!(!msg.to_bytes().is_empty());
    }
}

const HEADER: &str = concat!(env!("CARGO_MANIFEST_DIR"), "/include/dqs.h");

#[test]
fn header_declares_every_export() {
    let header = std::fs::read_to_string(HEADER).unwrap();
    let source = std::fs::read_to_string(concat!(env!("CARGO_MANIFEST_DIR"), "/src/lib.rs")).unwrap();
    let exports: Vec<&str> = source
        .lines()
        .filter_map(|l| l.split("extern \"C\" fn ").nth(1))
        .map(|rest| rest.split('(').next().unwrap())
        .collect();
    assert_eq!(exports.len(), 16);
    for name in exports {
        assert!(header.contains(&format!("{name}(")), "{name} missing from header");
    }
    assert!(header.contains("typedef struct DqsCurve DqsCurve;"));
    assert!(header.contains("DQS_STATUS_NOT_EIGENVALUE = 4"));
}

#[test]
fn header_compiles_as_c() {
    let Ok(cc) = which_cc() else {
        eprintln!("no C compiler found; skipping");
        return;
    };
    let dir = tempfile::tempdir().unwrap();
    let src = dir.path().join("probe.c");
    std::fs::write(
        &src,
        "#include \"dqs.h\"\nint main(void) {\n  DqsCurve *c = 0;\n  \
         DqsStatus s = dqs_curve_new(256, 2, DQS_MODEL_DAMPED, DQS_ANGLE_DOUBLED, 0.5, 0, &c);\n  \
         return s == DQS_STATUS_OK ? 0 : 1;\n}\n",
    )
    .unwrap();
    let include = Path::new(HEADER).parent().unwrap();
    let status = Command::new(cc)
        .args(["-std=c99", "-Wall", "-Werror", "-fsyntax-only", "-I"])
        .arg(include)
        .arg(&src)
        .status()
        .unwrap();
    assert!(status.success());
}

fn which_cc() -> Result<&'static str, ()> {
    ["cc", "gcc", "clang"]
        .into_iter()
        .find(|c| Command::new(c).arg("--version").output().is_ok_and(|o| o.status.success()))
        .ok_or(())
}
