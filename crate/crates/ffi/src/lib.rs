//! C ABI over `padic_gibbs`.
//!
//! Values cross the boundary as opaque [`PgPadic`] handles. Every fallible
//! call returns a [`PgStatus`]; on failure the message is available from
//! [`pg_last_error_message`] on the same thread. Strings returned by the
//! library are owned by the caller and released with [`pg_string_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use num_bigint::BigInt;
use padic_gibbs::model::ModelParams;
use padic_gibbs::solvers::{classify_with, table1, SolverError, MAX_GROWTH_DEPTH};
use padic_gibbs::{Padic, PadicError};

/// Opaque p-adic value.
pub struct PgPadic(Padic);

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PgStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidArgument = 2,
    InvalidPrime = 3,
    ZeroDenominator = 4,
    PrimeMismatch = 5,
    DivisionByZero = 6,
    InsufficientPrecision = 7,
    NotASquare = 8,
    DomainError = 9,
    ZeroToPrecision = 10,
    /// Any other named error from the model or solvers.
    ComputationError = 11,
    InternalInconsistency = 12,
    Panic = 13,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_last_error(msg: String) {
    let msg = CString::new(msg.replace('\0', " ")).expect("interior NULs removed");
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(msg));
}

struct Failure(PgStatus, String);

impl From<PadicError> for Failure {
    fn from(e: PadicError) -> Self {
        let status = match e {
            PadicError::ZeroDenominator => PgStatus::ZeroDenominator,
            PadicError::PrimeMismatch { .. } => PgStatus::PrimeMismatch,
            PadicError::DivisionByZeroToPrecision => PgStatus::DivisionByZero,
            PadicError::InsufficientPrecision(_) => PgStatus::InsufficientPrecision,
            PadicError::NotASquare(_) => PgStatus::NotASquare,
            PadicError::DomainError(_) => PgStatus::DomainError,
            PadicError::ZeroToPrecision => PgStatus::ZeroToPrecision,
            PadicError::InvalidPrime(_) => PgStatus::InvalidPrime,
            PadicError::InvalidRecord(_) => PgStatus::InvalidArgument,
        };
        Failure(status, format!("{}: {e}", e.name()))
    }
}

impl From<SolverError> for Failure {
    fn from(e: SolverError) -> Self {
        let status = match e.name() {
            "InternalInconsistency" => PgStatus::InternalInconsistency,
            "InvalidPrime" => PgStatus::InvalidPrime,
            "ZeroCoupling" | "UnequalCouplings" | "InvalidParams" => PgStatus::InvalidArgument,
            _ => PgStatus::ComputationError,
        };
        Failure(status, format!("{}: {e}", e.name()))
    }
}

impl From<padic_gibbs::model::ModelError> for Failure {
    fn from(e: padic_gibbs::model::ModelError) -> Self {
        SolverError::Model(e).into()
    }
}

fn invalid(msg: impl Into<String>) -> Failure {
    Failure(PgStatus::InvalidArgument, msg.into())
}

/// Runs `f`, recording any failure or panic for [`pg_last_error_message`].
fn guarded(f: impl FnOnce() -> Result<(), Failure>) -> PgStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => PgStatus::Ok,
        Ok(Err(Failure(status, msg))) => {
            set_last_error(msg);
            status
        }
        Err(_) => {
            set_last_error("panic inside padic_gibbs".into());
            PgStatus::Panic
        }
    }
}

unsafe fn handle<'a>(p: *const PgPadic) -> Result<&'a Padic, Failure> {
    p.as_ref()
        .map(|h| &h.0)
        .ok_or_else(|| Failure(PgStatus::NullPointer, "null handle".into()))
}

unsafe fn store<T>(out: *mut *mut T, value: T) -> Result<(), Failure> {
    if out.is_null() {
        return Err(Failure(PgStatus::NullPointer, "null output pointer".into()));
    }
    *out = Box::into_raw(Box::new(value));
    Ok(())
}

unsafe fn store_string(out: *mut *mut c_char, s: String) -> Result<(), Failure> {
    if out.is_null() {
        return Err(Failure(PgStatus::NullPointer, "null output pointer".into()));
    }
    *out = CString::new(s).map_err(|_| invalid("string contains NUL"))?.into_raw();
    Ok(())
}

unsafe fn read_str<'a>(s: *const c_char) -> Result<&'a str, Failure> {
    if s.is_null() {
        return Err(Failure(PgStatus::NullPointer, "null string".into()));
    }
    CStr::from_ptr(s).to_str().map_err(|_| invalid("string is not UTF-8"))
}

/// `num / den` in `Q_prime` to absolute precision `precision`.
///
/// # Safety
/// `out` must be valid for a pointer write.
#[no_mangle]
pub unsafe extern "C" fn pg_padic_from_rational(
    num: i64,
    den: i64,
    prime: u64,
    precision: i64,
    out: *mut *mut PgPadic,
) -> PgStatus {
    guarded(|| store(out, PgPadic(Padic::from_rational(num, den, prime, precision)?)))
}

/// Like [`pg_padic_from_rational`] with decimal integer strings, for
/// numerators and denominators beyond 64 bits.
///
/// # Safety
/// `num` and `den` must be NUL-terminated strings; `out` must be valid for a pointer write.
#[no_mangle]
pub unsafe extern "C" fn pg_padic_from_decimal(
    num: *const c_char,
    den: *const c_char,
    prime: u64,
    precision: i64,
    out: *mut *mut PgPadic,
) -> PgStatus {
    guarded(|| {
        let parse = |s: &str| {
            s.trim()
                .parse::<BigInt>()
                .map_err(|_| invalid(format!("not an integer: {s:?}")))
        };
        let n = parse(read_str(num)?)?;
        let d = parse(read_str(den)?)?;
        store(out, PgPadic(Padic::from_rational(n, d, prime, precision)?))
    })
}

unsafe fn binary(
    a: *const PgPadic,
    b: *const PgPadic,
    out: *mut *mut PgPadic,
    op: fn(&Padic, &Padic) -> padic_gibbs::padic::Result<Padic>,
) -> PgStatus {
    guarded(|| store(out, PgPadic(op(handle(a)?, handle(b)?)?)))
}

/// # Safety
/// `a` and `b` must be live handles; `out` must be valid for a pointer write.
#[no_mangle]
pub unsafe extern "C" fn pg_padic_add(a: *const PgPadic, b: *const PgPadic, out: *mut *mut PgPadic) -> PgStatus {
    binary(a, b, out, Padic::add)
}

/// # Safety
/// `a` and `b` must be live handles; `out` must be valid for a pointer write.
#[no_mangle]
pub unsafe extern "C" fn pg_padic_sub(a: *const PgPadic, b: *const PgPadic, out: *mut *mut PgPadic) -> PgStatus {
    binary(a, b, out, Padic::sub)
}

/// # Safety
/// `a` and `b` must be live handles; `out` must be valid for a pointer write.
#[no_mangle]
pub unsafe extern "C" fn pg_padic_mul(a: *const PgPadic, b: *const PgPadic, out: *mut *mut PgPadic) -> PgStatus {
    binary(a, b, out, Padic::mul)
}

/// Fails with `DIVISION_BY_ZERO` when `b` is zero to precision.
///
/// # Safety
/// `a` and `b` must be live handles; `out` must be valid for a pointer write.
#[no_mangle]
pub unsafe extern "C" fn pg_padic_div(a: *const PgPadic, b: *const PgPadic, out: *mut *mut PgPadic) -> PgStatus {
    binary(a, b, out, Padic::div)
}

/// # Safety
/// `a` must be a live handle; `out` must be valid for a pointer write.
#[no_mangle]
pub unsafe extern "C" fn pg_padic_inv(a: *const PgPadic, out: *mut *mut PgPadic) -> PgStatus {
    guarded(|| store(out, PgPadic(handle(a)?.inv()?)))
}

/// Square root on the canonical branch, or `NOT_A_SQUARE`.
///
/// # Safety
/// `a` must be a live handle; `out` must be valid for a pointer write.
#[no_mangle]
pub unsafe extern "C" fn pg_padic_sqrt(a: *const PgPadic, out: *mut *mut PgPadic) -> PgStatus {
    guarded(|| store(out, PgPadic(handle(a)?.sqrt()?)))
}

/// Valuation of `a`; `ZERO_TO_PRECISION` when every known digit vanishes.
///
/// # Safety
/// `a` must be a live handle; `out` must be valid for a write.
#[no_mangle]
pub unsafe extern "C" fn pg_padic_valuation(a: *const PgPadic, out: *mut i64) -> PgStatus {
    guarded(|| {
        let v = handle(a)?.valuation().ok_or(PadicError::ZeroToPrecision)?;
        if out.is_null() {
            return Err(Failure(PgStatus::NullPointer, "null output pointer".into()));
        }
        *out = v;
        Ok(())
    })
}

/// Absolute precision, or -1 for a null handle.
///
/// # Safety
/// `a` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn pg_padic_precision(a: *const PgPadic) -> i64 {
    a.as_ref().map_or(-1, |h| h.0.precision())
}

/// # Safety
/// `a` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn pg_padic_is_zero(a: *const PgPadic) -> bool {
    a.as_ref().is_some_and(|h| h.0.is_zero())
}

/// Copies up to `cap` little-endian unit digits into `buf` and stores the
/// full digit count in `len`. Pass `buf = NULL, cap = 0` to query the length.
///
/// # Safety
/// `a` must be a live handle; `buf` must be valid for `cap` writes; `len` for one.
#[no_mangle]
pub unsafe extern "C" fn pg_padic_digits(a: *const PgPadic, buf: *mut u64, cap: usize, len: *mut usize) -> PgStatus {
    guarded(|| {
        let digits = handle(a)?.digits();
        if len.is_null() || (buf.is_null() && cap > 0) {
            return Err(Failure(PgStatus::NullPointer, "null output pointer".into()));
        }
        *len = digits.len();
        let n = digits.len().min(cap);
        if n > 0 {
            ptr::copy_nonoverlapping(digits.as_ptr(), buf, n);
        }
        Ok(())
    })
}

/// JSON record `{prime, valuation, digits, abs_precision, zero_flag}` for `a`.
///
/// # Safety
/// `a` must be a live handle; `out` must be valid for a pointer write.
#[no_mangle]
pub unsafe extern "C" fn pg_padic_to_json(a: *const PgPadic, out: *mut *mut c_char) -> PgStatus {
    guarded(|| {
        let json = serde_json::to_string(handle(a)?).map_err(|e| invalid(e.to_string()))?;
        store_string(out, json)
    })
}

/// # Safety
/// `a` must be null or a handle not yet freed.
#[no_mangle]
pub unsafe extern "C" fn pg_padic_free(a: *mut PgPadic) {
    if !a.is_null() {
        drop(Box::from_raw(a));
    }
}

/// Classification report for `(p, J)` as JSON.
///
/// # Safety
/// `out` must be valid for a pointer write.
#[no_mangle]
pub unsafe extern "C" fn pg_classify_json(p: u64, j: i64, precision: i64, out: *mut *mut c_char) -> PgStatus {
    guarded(|| {
        let params = ModelParams::symmetric(p, j, precision)?;
        let report = classify_with(&params, MAX_GROWTH_DEPTH)?;
        store_string(out, serde_json::to_string(&report).map_err(|e| invalid(e.to_string()))?)
    })
}

/// Existence of `√D(θ)` at coupling `j < 0` for `len` primes, as a JSON array.
///
/// # Safety
/// `primes` must be valid for `len` reads; `out` must be valid for a pointer write.
#[no_mangle]
pub unsafe extern "C" fn pg_table1_json(primes: *const u64, len: usize, j: i64, out: *mut *mut c_char) -> PgStatus {
    guarded(|| {
        if primes.is_null() && len > 0 {
            return Err(Failure(PgStatus::NullPointer, "null prime list".into()));
        }
        let list = if len == 0 {
            &[][..]
        } else {
            std::slice::from_raw_parts(primes, len)
        };
        let rows = table1(list, j)?;
        store_string(out, serde_json::to_string(&rows).map_err(|e| invalid(e.to_string()))?)
    })
}

/// # Safety
/// `s` must be null or a string returned by this library and not yet freed.
#[no_mangle]
pub unsafe extern "C" fn pg_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Message of the last failure on this thread, or null. Valid until the
/// next failing call on the same thread; do not free.
#[no_mangle]
pub extern "C" fn pg_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |s| s.as_ptr()))
}
