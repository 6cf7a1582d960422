//! C ABI over `z3hilb`.
//!
//! Every fallible call returns a [`Z3Status`] and writes results through out
//! pointers. On a non-`Z3_OK` status the out pointers are left untouched and
//! [`z3_last_error_message`] describes the failure. Handles are opaque and must
//! be released with the matching `*_free` function. Strings returned by the
//! library are released with [`z3_string_free`].
//!
//! Slice outputs use the `(buf, cap, len_out)` convention: `*len_out` always
//! receives the required length, and `Z3_BUFFER_TOO_SMALL` is returned when
//! `cap` is short. A null `buf` with `cap == 0` is a valid length query.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use z3hilb::dyson::{self, stair_report};
use z3hilb::insertion::{insert_f, split_f_inv};
use z3hilb::series::{lhs_sum_jobs, product_formula};
use z3hilb::verify::run_check;
use z3hilb::{BiSeries, Cell, Check, Composition12, Error, Partition, ProductFormula, WeightKind};

/// Result code of every fallible call.
#[repr(C)]
#[allow(non_camel_case_types)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Z3Status {
    Z3_OK = 0,
    Z3_NULL_POINTER = 1,
    Z3_INVALID_ARGUMENT = 2,
    Z3_PARSE_ERROR = 3,
    Z3_UNDEFINED_MAP = 4,
    Z3_INADMISSIBLE = 5,
    Z3_CELL_OUT_OF_DIAGRAM = 6,
    Z3_DOMAIN_VIOLATION = 7,
    Z3_BUFFER_TOO_SMALL = 8,
    Z3_PANIC = 9,
}

#[repr(C)]
#[allow(non_camel_case_types)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Z3WeightKind {
    /// Cells with `(arm + 1) ≡ leg (mod 3)` and positive leg.
    Z3_WT = 0,
    /// Cells with `(arm + 1) ≡ leg (mod 3)`.
    Z3_WT_TILDE = 1,
}

#[repr(C)]
#[allow(non_camel_case_types)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Z3Map {
    Z3_RHO1 = 0,
    Z3_PSI2 = 1,
    Z3_RHO1_INV = 2,
    Z3_PSI2_INV = 3,
}

#[repr(C)]
#[allow(non_camel_case_types)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Z3Product {
    Z3_CONJ2_RHS = 0,
    Z3_CONJ3_RHS = 1,
    Z3_CORRECTION = 2,
    Z3_DBL_PRIME_WT_TILDE = 3,
    Z3_DBL_PRIME_WT = 4,
}

/// Opaque partition handle.
pub struct Z3Partition(Partition);

/// Opaque truncated `q,t`-series handle.
pub struct Z3Series(BiSeries);

impl From<Z3WeightKind> for WeightKind {
    fn from(k: Z3WeightKind) -> Self {
        match k {
            Z3WeightKind::Z3_WT => WeightKind::Wt,
            Z3WeightKind::Z3_WT_TILDE => WeightKind::WtTilde,
        }
    }
}

impl From<Z3Product> for ProductFormula {
    fn from(p: Z3Product) -> Self {
        match p {
            Z3Product::Z3_CONJ2_RHS => ProductFormula::Conj2Rhs,
            Z3Product::Z3_CONJ3_RHS => ProductFormula::Conj3Rhs,
            Z3Product::Z3_CORRECTION => ProductFormula::Correction,
            Z3Product::Z3_DBL_PRIME_WT_TILDE => ProductFormula::LambdaDblPrimeWtTilde,
            Z3Product::Z3_DBL_PRIME_WT => ProductFormula::LambdaDblPrimeWt,
        }
    }
}

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

struct Failure(Z3Status, String);

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let status = match e {
            Error::CellOutOfDiagram { .. } => Z3Status::Z3_CELL_OUT_OF_DIAGRAM,
            Error::UndefinedMap { .. } => Z3Status::Z3_UNDEFINED_MAP,
            Error::Inadmissible { .. } => Z3Status::Z3_INADMISSIBLE,
            Error::DomainViolation(_) => Z3Status::Z3_DOMAIN_VIOLATION,
            Error::InvalidPartition(_) | Error::InvalidComposition(_) => Z3Status::Z3_PARSE_ERROR,
            Error::BoundMismatch { .. } | Error::NonInvertible => Z3Status::Z3_INVALID_ARGUMENT,
        };
        Failure(status, e.to_string())
    }
}

fn fail(status: Z3Status, msg: impl Into<String>) -> Failure {
    Failure(status, msg.into())
}

fn set_last_error(msg: &str) {
    let c = CString::new(msg.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = c);
}

fn guard(f: impl FnOnce() -> Result<(), Failure>) -> Z3Status {
    let outcome = catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|payload| {
        let msg = payload
            .downcast_ref::<&str>()
            .map(|s| s.to_string())
            .or_else(|| payload.downcast_ref::<String>().cloned())
            .unwrap_or_else(|| "panic".to_owned());
        Err(fail(Z3Status::Z3_PANIC, msg))
    });
    match outcome {
        Ok(()) => {
            set_last_error("");
            Z3Status::Z3_OK
        }
        Err(Failure(status, msg)) => {
            set_last_error(&msg);
            status
        }
    }
}

unsafe fn deref<'a, T>(p: *const T, what: &str) -> Result<&'a T, Failure> {
    p.as_ref().ok_or_else(|| fail(Z3Status::Z3_NULL_POINTER, format!("{what} is null")))
}

unsafe fn out_ref<'a, T>(p: *mut T, what: &str) -> Result<&'a mut T, Failure> {
    p.as_mut().ok_or_else(|| fail(Z3Status::Z3_NULL_POINTER, format!("{what} is null")))
}

unsafe fn read_str<'a>(s: *const c_char, what: &str) -> Result<&'a str, Failure> {
    if s.is_null() {
        return Err(fail(Z3Status::Z3_NULL_POINTER, format!("{what} is null")));
    }
    CStr::from_ptr(s).to_str().map_err(|_| fail(Z3Status::Z3_INVALID_ARGUMENT, format!("{what} is not UTF-8")))
}

unsafe fn read_slice<'a, T>(data: *const T, len: usize, what: &str) -> Result<&'a [T], Failure> {
    if len == 0 {
        return Ok(&[]);
    }
    if data.is_null() {
        return Err(fail(Z3Status::Z3_NULL_POINTER, format!("{what} is null")));
    }
    Ok(std::slice::from_raw_parts(data, len))
}

unsafe fn write_slice<T: Copy>(src: &[T], buf: *mut T, cap: usize, len_out: *mut usize) -> Result<(), Failure> {
    *out_ref(len_out, "len_out")? = src.len();
    if cap < src.len() {
        return Err(fail(Z3Status::Z3_BUFFER_TOO_SMALL, format!("need {} elements, buffer holds {cap}", src.len())));
    }
    if !src.is_empty() {
        if buf.is_null() {
            return Err(fail(Z3Status::Z3_NULL_POINTER, "buf is null"));
        }
        ptr::copy_nonoverlapping(src.as_ptr(), buf, src.len());
    }
    Ok(())
}

unsafe fn write_string(s: String, out: *mut *mut c_char) -> Result<(), Failure> {
    let out = out_ref(out, "out")?;
    let c = CString::new(s).map_err(|_| fail(Z3Status::Z3_PANIC, "interior NUL in output"))?;
    *out = c.into_raw();
    Ok(())
}

unsafe fn write_partition(p: Partition, out: *mut *mut Z3Partition) -> Result<(), Failure> {
    *out_ref(out, "out")? = Box::into_raw(Box::new(Z3Partition(p)));
    Ok(())
}

unsafe fn write_series(s: BiSeries, out: *mut *mut Z3Series) -> Result<(), Failure> {
    *out_ref(out, "out")? = Box::into_raw(Box::new(Z3Series(s)));
    Ok(())
}

/// Message for the most recent failing call on this thread; empty after a
/// successful call. Valid until the next call on the same thread.
#[no_mangle]
pub extern "C" fn z3_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

/// # Safety
/// `s` must be null or a string returned by this library and not yet freed.
#[no_mangle]
pub unsafe extern "C" fn z3_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Parses `"6,4"` style text; `"-"` is the empty partition.
///
/// # Safety
/// `text` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn z3_partition_parse(text: *const c_char, out: *mut *mut Z3Partition) -> Z3Status {
    guard(|| {
        let lam: Partition = read_str(text, "text")?.parse()?;
        write_partition(lam, out)
    })
}

/// Builds a partition from weakly decreasing positive row lengths, bottom row first.
///
/// # Safety
/// `rows` must point to `len` readable values (or be null when `len == 0`).
#[no_mangle]
pub unsafe extern "C" fn z3_partition_from_rows(rows: *const u32, len: usize, out: *mut *mut Z3Partition) -> Z3Status {
    guard(|| {
        let lam = Partition::new(read_slice(rows, len, "rows")?.to_vec())?;
        write_partition(lam, out)
    })
}

/// # Safety
/// `p` must be null or a handle from this library that has not been freed.
#[no_mangle]
pub unsafe extern "C" fn z3_partition_free(p: *mut Z3Partition) {
    if !p.is_null() {
        drop(Box::from_raw(p));
    }
}

/// # Safety
/// `p` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn z3_partition_size(p: *const Z3Partition, out: *mut u32) -> Z3Status {
    guard(|| {
        *out_ref(out, "out")? = deref(p, "p")?.0.size();
        Ok(())
    })
}

/// # Safety
/// `p` must be a live handle; `*len_out` receives the required length.
#[no_mangle]
pub unsafe extern "C" fn z3_partition_rows(
    p: *const Z3Partition,
    buf: *mut u32,
    cap: usize,
    len_out: *mut usize,
) -> Z3Status {
    guard(|| write_slice(deref(p, "p")?.0.rows(), buf, cap, len_out))
}

/// # Safety
/// `p` must be a live handle; `out` receives a string for [`z3_string_free`].
#[no_mangle]
pub unsafe extern "C" fn z3_partition_to_string(p: *const Z3Partition, out: *mut *mut c_char) -> Z3Status {
    guard(|| write_string(deref(p, "p")?.0.to_string(), out))
}

/// # Safety
/// `a`, `b` must be live handles; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn z3_partition_equal(a: *const Z3Partition, b: *const Z3Partition, out: *mut bool) -> Z3Status {
    guard(|| {
        *out_ref(out, "out")? = deref(a, "a")?.0 == deref(b, "b")?.0;
        Ok(())
    })
}

/// # Safety
/// `p` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn z3_partition_weight(p: *const Z3Partition, kind: Z3WeightKind, out: *mut u32) -> Z3Status {
    guard(|| {
        *out_ref(out, "out")? = deref(p, "p")?.0.weight(kind.into());
        Ok(())
    })
}

/// Arm and leg of the cell in column `col`, row `row` (both 1-based, row 1 at the bottom).
///
/// # Safety
/// `p` must be a live handle; `arm` and `leg` must be writable.
#[no_mangle]
pub unsafe extern "C" fn z3_partition_arm_leg(
    p: *const Z3Partition,
    col: u32,
    row: u32,
    arm: *mut u32,
    leg: *mut u32,
) -> Z3Status {
    guard(|| {
        let stat = deref(p, "p")?.0.cell_stats(Cell::new(col, row))?;
        let (arm, leg) = (out_ref(arm, "arm")?, out_ref(leg, "leg")?);
        *arm = stat.arm;
        *leg = stat.leg;
        Ok(())
    })
}

/// Boundary labels walking from the top-left corner to the bottom-right corner.
///
/// # Safety
/// `p` must be a live handle; `*len_out` receives the required length.
#[no_mangle]
pub unsafe extern "C" fn z3_partition_boundary(
    p: *const Z3Partition,
    buf: *mut u32,
    cap: usize,
    len_out: *mut usize,
) -> Z3Status {
    guard(|| write_slice(&deref(p, "p")?.0.boundary_sequence(), buf, cap, len_out))
}

/// Applies one Dyson map. Fails with `Z3_UNDEFINED_MAP` outside its domain.
///
/// # Safety
/// `p` must be a live handle; `out` receives a new handle.
#[no_mangle]
pub unsafe extern "C" fn z3_partition_apply(p: *const Z3Partition, map: Z3Map, out: *mut *mut Z3Partition) -> Z3Status {
    guard(|| {
        let lam = &deref(p, "p")?.0;
        let image = match map {
            Z3Map::Z3_RHO1 => dyson::rho1(lam),
            Z3Map::Z3_PSI2 => dyson::psi2(lam),
            Z3Map::Z3_RHO1_INV => dyson::rho1_inv(lam),
            Z3Map::Z3_PSI2_INV => dyson::psi2_inv(lam),
        }?;
        write_partition(image, out)
    })
}

/// The `{1,2}`-composition of `p`, outermost map first, as bytes 1 and 2.
///
/// # Safety
/// `p` must be a live handle; `*len_out` receives the required length.
#[no_mangle]
pub unsafe extern "C" fn z3_partition_decompose(
    p: *const Z3Partition,
    buf: *mut u8,
    cap: usize,
    len_out: *mut usize,
) -> Z3Status {
    guard(|| {
        let parts: Vec<u8> = dyson::phi(&deref(p, "p")?.0).values().iter().map(|&v| v as u8).collect();
        write_slice(&parts, buf, cap, len_out)
    })
}

/// Builds the partition of a `{1,2}`-composition. On `Z3_INADMISSIBLE`,
/// `*failed_step` (if non-null) receives the 1-based index of the failing entry.
///
/// # Safety
/// `parts` must point to `len` readable bytes (or be null when `len == 0`);
/// `out` must be writable; `failed_step` may be null.
#[no_mangle]
pub unsafe extern "C" fn z3_build(
    parts: *const u8,
    len: usize,
    out: *mut *mut Z3Partition,
    failed_step: *mut usize,
) -> Z3Status {
    guard(|| {
        let values: Vec<u32> = read_slice(parts, len, "parts")?.iter().map(|&b| u32::from(b)).collect();
        let c = Composition12::from_values(&values)?;
        match dyson::build(&c) {
            Ok(lam) => write_partition(lam, out),
            Err(e) => {
                if let (Error::Inadmissible { step }, Some(slot)) = (&e, failed_step.as_mut()) {
                    *slot = *step;
                }
                Err(e.into())
            }
        }
    })
}

/// # Safety
/// `p` must be a live handle; `is_stair` and `landing` must be writable.
#[no_mangle]
pub unsafe extern "C" fn z3_partition_stair(p: *const Z3Partition, is_stair: *mut bool, landing: *mut u32) -> Z3Status {
    guard(|| {
        let r = stair_report(&deref(p, "p")?.0);
        let (is_stair, landing) = (out_ref(is_stair, "is_stair")?, out_ref(landing, "landing")?);
        *is_stair = r.is_stair;
        *landing = r.landing;
        Ok(())
    })
}

/// Splits `p` into a factor with row multiplicities at most 2 and a factor
/// whose column heights are multiples of 3.
///
/// # Safety
/// `p` must be a live handle; `lp` and `ldp` each receive a new handle.
#[no_mangle]
pub unsafe extern "C" fn z3_partition_split(
    p: *const Z3Partition,
    lp: *mut *mut Z3Partition,
    ldp: *mut *mut Z3Partition,
) -> Z3Status {
    guard(|| {
        let lam = &deref(p, "p")?.0;
        let (lp_out, ldp_out) = (out_ref(lp, "lp")?, out_ref(ldp, "ldp")?);
        let (a, b) = split_f_inv(lam);
        *lp_out = Box::into_raw(Box::new(Z3Partition(a)));
        *ldp_out = Box::into_raw(Box::new(Z3Partition(b)));
        Ok(())
    })
}

/// Inverse of [`z3_partition_split`]. Fails with `Z3_DOMAIN_VIOLATION` when
/// the factors are outside their classes.
///
/// # Safety
/// `lp`, `ldp` must be live handles; `out` receives a new handle.
#[no_mangle]
pub unsafe extern "C" fn z3_partition_merge(
    lp: *const Z3Partition,
    ldp: *const Z3Partition,
    out: *mut *mut Z3Partition,
) -> Z3Status {
    guard(|| {
        let lam = insert_f(&deref(lp, "lp")?.0, &deref(ldp, "ldp")?.0)?;
        write_partition(lam, out)
    })
}

/// `Σ_λ t^{weight(λ)} q^{|λ|}` over partitions of size at most `max_n`.
/// `jobs` is the worker count (0 is treated as 1); it never changes the result.
///
/// # Safety
/// `out` receives a new handle.
#[no_mangle]
pub unsafe extern "C" fn z3_series_weight_sum(
    kind: Z3WeightKind,
    max_n: u32,
    jobs: u32,
    out: *mut *mut Z3Series,
) -> Z3Status {
    guard(|| write_series(lhs_sum_jobs(kind.into(), max_n, jobs.max(1) as usize), out))
}

/// Truncated expansion of one of the product formulas through `q^max_n`.
///
/// # Safety
/// `out` receives a new handle.
#[no_mangle]
pub unsafe extern "C" fn z3_series_product(which: Z3Product, max_n: u32, out: *mut *mut Z3Series) -> Z3Status {
    guard(|| write_series(product_formula(which.into(), max_n), out))
}

/// # Safety
/// `s` must be null or a handle from this library that has not been freed.
#[no_mangle]
pub unsafe extern "C" fn z3_series_free(s: *mut Z3Series) {
    if !s.is_null() {
        drop(Box::from_raw(s));
    }
}

/// # Safety
/// `a`, `b` must be live handles; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn z3_series_equal(a: *const Z3Series, b: *const Z3Series, out: *mut bool) -> Z3Status {
    guard(|| {
        *out_ref(out, "out")? = deref(a, "a")?.0 == deref(b, "b")?.0;
        Ok(())
    })
}

/// Coefficient of `t^k q^n` as a decimal string.
///
/// # Safety
/// `s` must be a live handle; `out` receives a string for [`z3_string_free`].
#[no_mangle]
pub unsafe extern "C" fn z3_series_coefficient(s: *const Z3Series, k: u32, n: u32, out: *mut *mut c_char) -> Z3Status {
    guard(|| {
        let s = &deref(s, "s")?.0;
        if n > s.qbound() {
            return Err(fail(Z3Status::Z3_INVALID_ARGUMENT, format!("n={n} exceeds the series bound {}", s.qbound())));
        }
        write_string(s.coefficient(k, n).to_string(), out)
    })
}

/// CSV export with header `n,k,coefficient`.
///
/// # Safety
/// `s` must be a live handle; `out` receives a string for [`z3_string_free`].
#[no_mangle]
pub unsafe extern "C" fn z3_series_to_csv(s: *const Z3Series, out: *mut *mut c_char) -> Z3Status {
    guard(|| write_string(deref(s, "s")?.0.to_csv(), out))
}

/// JSON export: an object keyed by `n` holding `[k, "coefficient"]` pairs.
///
/// # Safety
/// `s` must be a live handle; `out` receives a string for [`z3_string_free`].
#[no_mangle]
pub unsafe extern "C" fn z3_series_to_json(s: *const Z3Series, out: *mut *mut c_char) -> Z3Status {
    guard(|| write_string(deref(s, "s")?.0.to_json_string(), out))
}

/// Runs a named check (`conj2`, `conj3`, `prop-leg`, `transport`,
/// `top-coefficients`, `structure`) up to `max_n`; a negative `max_n` selects
/// the check's default. `*passed` receives the verdict and `*report_json` the
/// full report. A failed check is still `Z3_OK`.
///
/// # Safety
/// `check` must be a NUL-terminated string; `passed` must be writable;
/// `report_json` may be null, otherwise it receives a string for [`z3_string_free`].
#[no_mangle]
pub unsafe extern "C" fn z3_verify(
    check: *const c_char,
    max_n: i64,
    jobs: u32,
    passed: *mut bool,
    report_json: *mut *mut c_char,
) -> Z3Status {
    guard(|| {
        let check: Check =
            read_str(check, "check")?.parse().map_err(|e: String| fail(Z3Status::Z3_INVALID_ARGUMENT, e))?;
        let max_n = if max_n < 0 {
            check.default_max_n()
        } else {
            u32::try_from(max_n).map_err(|_| fail(Z3Status::Z3_INVALID_ARGUMENT, "max_n out of range"))?
        };
        let passed = out_ref(passed, "passed")?;
        let report = run_check(check, max_n, jobs.max(1) as usize)?;
        *passed = report.passed();
        if !report_json.is_null() {
            write_string(report.to_json(), report_json)?;
        }
        Ok(())
    })
}

/// Library version string; static, do not free.
#[no_mangle]
pub extern "C" fn z3_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}
