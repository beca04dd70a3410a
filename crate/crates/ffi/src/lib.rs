// SPDX-License-Identifier: Apache-2.0

//! C ABI over `dqs-core`.
//!
//! Every function returns a [`DqsStatus`] and writes results through out
//! pointers. Handles are opaque and must be released with the matching
//! `*_free` function. After a failing call, [`dqs_last_error_message`]
//! returns a description of the error on the calling thread.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};

use dqs_core::{
    build_diagonal, critical_damping, minimize_expected, queries_to_reach, spectrum,
    success_probability_grover, CurveOptions, DampingConfig, EnergySpectrum, Error, IsingChain,
    ModelKind, ProbabilityCurve, RecurrenceAngle, SearchInstance,
};

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DqsStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidArgument = 2,
    Size = 3,
    NotEigenvalue = 4,
    DegenerateInstance = 5,
    Domain = 6,
    NoSuccess = 7,
    ThresholdUnreached = 8,
    OutOfRange = 9,
    Panic = 10,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DqsModel {
    Grover = 0,
    Damped = 1,
    ClassicalReplace = 2,
    ClassicalNoreplace = 3,
    ClassicalFullyDamped = 4,
}

/// Angle convention for the damped recurrence.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DqsAngle {
    Doubled = 0,
    Amplitude = 1,
}

/// Spectrum of an open Ising chain, sorted by eigenvalue.
pub struct DqsSpectrum(EnergySpectrum);

/// Success-probability curve `P(1..=j_max)`.
pub struct DqsCurve(ProbabilityCurve);

impl From<DqsModel> for ModelKind {
    fn from(m: DqsModel) -> Self {
        match m {
            DqsModel::Grover => ModelKind::Grover,
            DqsModel::Damped => ModelKind::Damped,
            DqsModel::ClassicalReplace => ModelKind::ClassicalReplace,
            DqsModel::ClassicalNoreplace => ModelKind::ClassicalNoreplace,
            DqsModel::ClassicalFullyDamped => ModelKind::ClassicalFullyDamped,
        }
    }
}

impl From<DqsAngle> for RecurrenceAngle {
    fn from(a: DqsAngle) -> Self {
        match a {
            DqsAngle::Doubled => RecurrenceAngle::Doubled,
            DqsAngle::Amplitude => RecurrenceAngle::Amplitude,
        }
    }
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_last_error(msg: String) {
    let msg = CString::new(msg.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(msg));
}

fn status_of(err: &Error) -> DqsStatus {
    match err {
        Error::Size { .. } => DqsStatus::Size,
        Error::NotEigenvalue { .. } => DqsStatus::NotEigenvalue,
        Error::DegenerateInstance(_) => DqsStatus::DegenerateInstance,
        Error::InvalidArgument(_) => DqsStatus::InvalidArgument,
        Error::Domain { .. } => DqsStatus::Domain,
        Error::NoSuccess => DqsStatus::NoSuccess,
        Error::ThresholdUnreached { .. } => DqsStatus::ThresholdUnreached,
    }
}

enum Failure {
    Core(Error),
    Status(DqsStatus, &'static str),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Core(e)
    }
}

fn guard(f: impl FnOnce() -> Result<(), Failure>) -> DqsStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => DqsStatus::Ok,
        Ok(Err(Failure::Core(e))) => {
            set_last_error(e.to_string());
            status_of(&e)
        }
        Ok(Err(Failure::Status(s, msg))) => {
            set_last_error(msg.to_string());
            s
        }
        Err(_) => {
            set_last_error("internal panic".to_string());
            DqsStatus::Panic
        }
    }
}

fn out<'a, T>(p: *mut T) -> Result<&'a mut T, Failure> {
    // SAFETY: the caller guarantees a non-null `p` points to writable storage.
    unsafe { p.as_mut() }.ok_or(Failure::Status(DqsStatus::NullPointer, "null output pointer"))
}

fn handle<'a, T>(p: *const T) -> Result<&'a T, Failure> {
    // SAFETY: non-null handles come from the matching constructor.
    unsafe { p.as_ref() }.ok_or(Failure::Status(DqsStatus::NullPointer, "null handle"))
}

/// Static description of a status code. Never null.
#[no_mangle]
pub extern "C" fn dqs_status_message(status: DqsStatus) -> *const c_char {
    let s: &'static CStr = match status {
        DqsStatus::Ok => c"ok",
        DqsStatus::NullPointer => c"null pointer",
        DqsStatus::InvalidArgument => c"invalid argument",
        DqsStatus::Size => c"spin count out of range",
        DqsStatus::NotEigenvalue => c"not an eigenvalue",
        DqsStatus::DegenerateInstance => c"degenerate search instance",
        DqsStatus::Domain => c"value outside domain",
        DqsStatus::NoSuccess => c"success probability is zero everywhere",
        DqsStatus::ThresholdUnreached => c"threshold not reached",
        DqsStatus::OutOfRange => c"index out of range",
        DqsStatus::Panic => c"internal panic",
    };
    s.as_ptr()
}

/// Message for the last failing call on this thread, or null if none.
/// Valid until the next failing call on the same thread.
#[no_mangle]
pub extern "C" fn dqs_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(std::ptr::null(), |s| s.as_ptr()))
}

/// Builds the spectrum of an `spins`-site open chain.
///
/// # Safety
/// `out_spectrum` must be null or valid for writes.
#[no_mangle]
pub unsafe extern "C" fn dqs_spectrum_new(spins: u32, out_spectrum: *mut *mut DqsSpectrum) -> DqsStatus {
    guard(|| {
        let slot = out(out_spectrum)?;
        let chain = IsingChain::new(spins)?;
        *slot = Box::into_raw(Box::new(DqsSpectrum(spectrum(&build_diagonal(&chain)))));
        Ok(())
    })
}

/// Number of distinct eigenvalues.
///
/// # Safety
/// `spectrum` must come from [`dqs_spectrum_new`]; `out_len` must be null or writable.
#[no_mangle]
pub unsafe extern "C" fn dqs_spectrum_len(spectrum: *const DqsSpectrum, out_len: *mut usize) -> DqsStatus {
    guard(|| {
        *out(out_len)? = handle(spectrum)?.0.entries().len();
        Ok(())
    })
}

/// Eigenvalue (units of epsilon) and degeneracy of entry `index`.
///
/// # Safety
/// `spectrum` must come from [`dqs_spectrum_new`]; out pointers must be null or writable.
#[no_mangle]
pub unsafe extern "C" fn dqs_spectrum_entry(
    spectrum: *const DqsSpectrum,
    index: usize,
    out_lambda: *mut i64,
    out_degeneracy: *mut u64,
) -> DqsStatus {
    guard(|| {
        let entry = handle(spectrum)?
            .0
            .entries()
            .get(index)
            .ok_or(Failure::Status(DqsStatus::OutOfRange, "spectrum index out of range"))?;
        *out(out_lambda)? = entry.lambda;
        *out(out_degeneracy)? = entry.degeneracy as u64;
        Ok(())
    })
}

/// Degeneracy of `lambda`; fails with `NOT_EIGENVALUE` when it is absent.
///
/// # Safety
/// `spectrum` must come from [`dqs_spectrum_new`]; `out_degeneracy` must be null or writable.
#[no_mangle]
pub unsafe extern "C" fn dqs_spectrum_degeneracy(
    spectrum: *const DqsSpectrum,
    lambda: i64,
    out_degeneracy: *mut u64,
) -> DqsStatus {
    guard(|| {
        let s = &handle(spectrum)?.0;
        let entry = s.get(lambda).ok_or(Error::NotEigenvalue {
            n: s.chain().spins(),
            lambda,
        })?;
        *out(out_degeneracy)? = entry.degeneracy as u64;
        Ok(())
    })
}

/// # Safety
/// `spectrum` must be null or come from [`dqs_spectrum_new`] and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn dqs_spectrum_free(spectrum: *mut DqsSpectrum) {
    if !spectrum.is_null() {
        drop(Box::from_raw(spectrum));
    }
}

/// Generates `P(1..=j_max)` for `targets` marked items out of `items`.
///
/// `cos_phi` applies to the damped model only; pass NaN for critical
/// damping. `j_max = 0` selects the default scan length.
///
/// # Safety
/// `out_curve` must be null or valid for writes.
#[no_mangle]
pub unsafe extern "C" fn dqs_curve_new(
    items: u64,
    targets: u64,
    model: DqsModel,
    angle: DqsAngle,
    cos_phi: f64,
    j_max: usize,
    out_curve: *mut *mut DqsCurve,
) -> DqsStatus {
    guard(|| {
        let slot = out(out_curve)?;
        let instance = SearchInstance::new(items, targets)?;
        let damping = if cos_phi.is_nan() {
            DampingConfig::Critical
        } else {
            DampingConfig::explicit(cos_phi)?
        };
        let options = CurveOptions {
            damping,
            angle: angle.into(),
        };
        let j_max = if j_max == 0 {
            dqs_core::default_j_max(&instance)
        } else {
            j_max
        };
        let curve = ProbabilityCurve::generate(&instance, model.into(), &options, j_max)?;
        *slot = Box::into_raw(Box::new(DqsCurve(curve)));
        Ok(())
    })
}

/// # Safety
/// `curve` must come from [`dqs_curve_new`]; `out_j_max` must be null or writable.
#[no_mangle]
pub unsafe extern "C" fn dqs_curve_len(curve: *const DqsCurve, out_j_max: *mut usize) -> DqsStatus {
    guard(|| {
        *out(out_j_max)? = handle(curve)?.0.j_max();
        Ok(())
    })
}

/// `P(j)` for `0 ≤ j ≤ j_max`.
///
/// # Safety
/// `curve` must come from [`dqs_curve_new`]; `out_p` must be null or writable.
#[no_mangle]
pub unsafe extern "C" fn dqs_curve_get(curve: *const DqsCurve, j: usize, out_p: *mut f64) -> DqsStatus {
    guard(|| {
        let p = handle(curve)?
            .0
            .at(j)
            .ok_or(Failure::Status(DqsStatus::OutOfRange, "iteration beyond j_max"))?;
        *out(out_p)? = p;
        Ok(())
    })
}

/// Pointer to the `j_max` values `P(1..=j_max)`, owned by the curve.
///
/// # Safety
/// `curve` must come from [`dqs_curve_new`]; `out_data` must be null or writable.
#[no_mangle]
pub unsafe extern "C" fn dqs_curve_data(curve: *const DqsCurve, out_data: *mut *const f64) -> DqsStatus {
    guard(|| {
        *out(out_data)? = handle(curve)?.0.p().as_ptr();
        Ok(())
    })
}

/// Minimizes `E(j) = j / P(j)` over the curve. `out_saturated` is set when
/// the minimum sits at `j_max`.
///
/// # Safety
/// `curve` must come from [`dqs_curve_new`]; out pointers must be null or writable.
#[no_mangle]
pub unsafe extern "C" fn dqs_curve_minimize_expected(
    curve: *const DqsCurve,
    out_j_star: *mut usize,
    out_e_min: *mut f64,
    out_saturated: *mut bool,
) -> DqsStatus {
    guard(|| {
        let r = minimize_expected(&handle(curve)?.0)?;
        *out(out_j_star)? = r.j_star;
        *out(out_e_min)? = r.e_min;
        *out(out_saturated)? = r.saturated;
        Ok(())
    })
}

/// Smallest `j` with `P(j) ≥ p_target`, for `p_target` in (0, 1).
///
/// # Safety
/// `curve` must come from [`dqs_curve_new`]; `out_j` must be null or writable.
#[no_mangle]
pub unsafe extern "C" fn dqs_curve_queries_to_reach(
    curve: *const DqsCurve,
    p_target: f64,
    out_j: *mut usize,
) -> DqsStatus {
    guard(|| {
        *out(out_j)? = queries_to_reach(&handle(curve)?.0, p_target)?;
        Ok(())
    })
}

/// # Safety
/// `curve` must be null or come from [`dqs_curve_new`] and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn dqs_curve_free(curve: *mut DqsCurve) {
    if !curve.is_null() {
        drop(Box::from_raw(curve));
    }
}

/// Ideal Grover success probability after `j` iterations.
///
/// # Safety
/// `out_p` must be null or valid for writes.
#[no_mangle]
pub unsafe extern "C" fn dqs_grover_success_probability(
    items: u64,
    targets: u64,
    j: u64,
    out_p: *mut f64,
) -> DqsStatus {
    guard(|| {
        let slot = out(out_p)?;
        *slot = success_probability_grover(&SearchInstance::new(items, targets)?, j as usize);
        Ok(())
    })
}

/// Critical damping parameter `cos φ` for the instance.
///
/// # Safety
/// `out_cos_phi` must be null or valid for writes.
#[no_mangle]
pub unsafe extern "C" fn dqs_critical_damping(
    items: u64,
    targets: u64,
    angle: DqsAngle,
    out_cos_phi: *mut f64,
) -> DqsStatus {
    guard(|| {
        let slot = out(out_cos_phi)?;
        *slot = critical_damping(&SearchInstance::new(items, targets)?, angle.into());
        Ok(())
    })
}
