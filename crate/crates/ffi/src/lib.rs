//! C interface to `gdslab`.
//!
//! Every fallible function returns a [`GdsStatus`]; on anything other than
//! `GDS_OK` a message is available from [`gds_last_error`] on the same thread.
//! Objects are opaque handles released with their matching `*_free` function.
//! Strings handed out by the library are released with [`gds_string_free`].

use std::cell::RefCell;
use std::ffi::{c_char, c_int, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};

use gdslab::cli::report;
use gdslab::dimsub::{lattice_quotient, DimensionSolver, Status, TheoremId, Verifier};
use gdslab::exactlinalg::AbGroup;
use gdslab::freering::{membership, DivisorTuple, GroupWord, IdealExpr};
use gdslab::functors::functor_value;
use gdslab::nilpotent::{FreeNilpotent, SubgroupSpec, SubgroupTag};
use gdslab::Error;

/// Result codes. Values are stable.
#[repr(C)]
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum GdsStatus {
    Ok = 0,
    NullArgument = 1,
    InvalidUtf8 = 2,
    Parse = 3,
    DivisorChain = 4,
    Unknown = 5,
    UnsupportedLevel = 6,
    RankOutOfRange = 7,
    InvalidGenerator = 8,
    DimensionMismatch = 9,
    NotInGamma2 = 10,
    DenominatorNotContained = 11,
    Internal = 12,
    Panic = 13,
    IndexOutOfRange = 14,
}

/// Outcome of a theorem check.
#[repr(C)]
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum GdsVerdict {
    Pass = 0,
    Fail = 1,
    Skipped = 2,
}

/// A validated divisor chain `e1, ..., em`.
pub struct GdsDivisors(DivisorTuple);

/// A finitely generated abelian group stored by invariant factors.
pub struct GdsGroup(AbGroup);

/// Theorem checker for one rank; reusable across divisor chains of that rank.
pub struct GdsVerifier(Verifier);

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(msg: &str) {
    let c = CString::new(msg.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = c);
}

fn status_of(e: &Error) -> GdsStatus {
    match e {
        Error::Parse { .. } => GdsStatus::Parse,
        Error::DivisorChain(_) => GdsStatus::DivisorChain,
        Error::Unknown { .. } => GdsStatus::Unknown,
        Error::UnsupportedLevel(_) | Error::UnsupportedDegree(_) => GdsStatus::UnsupportedLevel,
        Error::RankOutOfRange(_) => GdsStatus::RankOutOfRange,
        Error::InvalidGenerator { .. } => GdsStatus::InvalidGenerator,
        Error::DimensionMismatch { .. } | Error::ContextMismatch => GdsStatus::DimensionMismatch,
        Error::NotInGamma2 | Error::NotInAugmentation => GdsStatus::NotInGamma2,
        Error::DenominatorNotContained { .. } | Error::NotSublattice { .. } => {
            GdsStatus::DenominatorNotContained
        }
        Error::Internal(_) => GdsStatus::Internal,
    }
}

enum Failure {
    Status(GdsStatus, String),
    Lib(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Lib(e)
    }
}

fn guard(f: impl FnOnce() -> Result<(), Failure>) -> GdsStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => GdsStatus::Ok,
        Ok(Err(Failure::Lib(e))) => {
            set_error(&e.to_string());
            status_of(&e)
        }
        Ok(Err(Failure::Status(s, msg))) => {
            set_error(&msg);
            s
        }
        Err(_) => {
            set_error("panic inside gdslab");
            GdsStatus::Panic
        }
    }
}

unsafe fn text<'a>(p: *const c_char, what: &str) -> Result<&'a str, Failure> {
    if p.is_null() {
        return Err(Failure::Status(GdsStatus::NullArgument, format!("{what} is null")));
    }
    CStr::from_ptr(p)
        .to_str()
        .map_err(|_| Failure::Status(GdsStatus::InvalidUtf8, format!("{what} is not UTF-8")))
}

unsafe fn deref<'a, T>(p: *const T, what: &str) -> Result<&'a T, Failure> {
    p.as_ref()
        .ok_or_else(|| Failure::Status(GdsStatus::NullArgument, format!("{what} is null")))
}

unsafe fn put<T>(out: *mut T, v: T, what: &str) -> Result<(), Failure> {
    if out.is_null() {
        return Err(Failure::Status(GdsStatus::NullArgument, format!("{what} is null")));
    }
    out.write(v);
    Ok(())
}

fn owned_string(s: String) -> *mut c_char {
    CString::new(s.replace('\0', " ")).unwrap_or_default().into_raw()
}

/// Message of the last failed call on this thread. Owned by the library and
/// valid until the next failing call on the same thread.
#[no_mangle]
pub extern "C" fn gds_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

/// Library version as a static NUL-terminated string.
#[no_mangle]
pub extern "C" fn gds_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}

/// Releases a string returned by this library. Null is ignored.
///
/// # Safety
/// `s` must come from this library and not have been freed already.
#[no_mangle]
pub unsafe extern "C" fn gds_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Parses `"e1,e2,..."`. With `canonicalize` nonzero the entries are sorted
/// into chain order first.
///
/// # Safety
/// `text_in` must be a NUL-terminated string and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn gds_divisors_parse(
    text_in: *const c_char,
    canonicalize: c_int,
    out: *mut *mut GdsDivisors,
) -> GdsStatus {
    guard(|| {
        let s = text(text_in, "divisors")?;
        let entries = DivisorTuple::parse_entries(s)?;
        let t = if canonicalize != 0 {
            DivisorTuple::canonicalize(entries)?
        } else {
            DivisorTuple::new(entries)?
        };
        put(out, Box::into_raw(Box::new(GdsDivisors(t))), "out")
    })
}

/// # Safety
/// `d` must be null or a handle from [`gds_divisors_parse`].
#[no_mangle]
pub unsafe extern "C" fn gds_divisors_free(d: *mut GdsDivisors) {
    if !d.is_null() {
        drop(Box::from_raw(d));
    }
}

/// Number of entries, or 0 for a null handle.
///
/// # Safety
/// `d` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn gds_divisors_rank(d: *const GdsDivisors) -> usize {
    d.as_ref().map_or(0, |d| d.0.rank())
}

/// # Safety
/// `g` must be null or a handle returned by this library.
#[no_mangle]
pub unsafe extern "C" fn gds_group_free(g: *mut GdsGroup) {
    if !g.is_null() {
        drop(Box::from_raw(g));
    }
}

/// Number of invariant factors (0 for the trivial group).
///
/// # Safety
/// `g` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn gds_group_len(g: *const GdsGroup) -> usize {
    g.as_ref().map_or(0, |g| g.0.invariant_factors().len())
}

/// The `index`-th invariant factor in decimal (0 for a copy of Z).
///
/// # Safety
/// `g` must be a live handle and `out` writable; free the result with
/// [`gds_string_free`].
#[no_mangle]
pub unsafe extern "C" fn gds_group_factor(
    g: *const GdsGroup,
    index: usize,
    out: *mut *mut c_char,
) -> GdsStatus {
    guard(|| {
        let g = deref(g, "group")?;
        let f = g.0.invariant_factors().get(index).ok_or_else(|| {
            Failure::Status(GdsStatus::IndexOutOfRange, format!("no invariant factor {index}"))
        })?;
        put(out, owned_string(f.to_string()), "out")
    })
}

/// Invariant factors as a JSON integer array, e.g. `[3,9]`.
///
/// # Safety
/// `g` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn gds_group_json(g: *const GdsGroup, out: *mut *mut c_char) -> GdsStatus {
    guard(|| {
        let g = deref(g, "group")?;
        let s = report::to_canonical_json(&report::group(&g.0));
        put(out, owned_string(s.trim_end().to_string()), "out")
    })
}

fn boxed_group(g: AbGroup) -> *mut GdsGroup {
    Box::into_raw(Box::new(GdsGroup(g)))
}

/// A row of the functor table (`"L1SP3"`, `"Tor(A,Z/2)"`, ...) for
/// `A = Z/e1 + ... + Z/em`. Rows that are only bounded for `A` fail with
/// `GDS_INTERNAL`.
///
/// # Safety
/// Pointers must be valid; `out` receives a group handle.
#[no_mangle]
pub unsafe extern "C" fn gds_functor(
    d: *const GdsDivisors,
    name: *const c_char,
    out: *mut *mut GdsGroup,
) -> GdsStatus {
    guard(|| {
        let d = deref(d, "divisors")?;
        let name = text(name, "name")?;
        let g = functor_value(&d.0.abelianization(), name)?;
        put(out, boxed_group(g), "out")
    })
}

/// Invariant factors of `D(level, ideal) / denominator`, where `denominator`
/// is a subgroup tag such as `"RRF.g4"`.
///
/// # Safety
/// Pointers must be valid; `out` receives a group handle.
#[no_mangle]
pub unsafe extern "C" fn gds_dimsub_quotient(
    d: *const GdsDivisors,
    ideal: *const c_char,
    level: usize,
    denominator: *const c_char,
    out: *mut *mut GdsGroup,
) -> GdsStatus {
    guard(|| {
        let d = deref(d, "divisors")?;
        let expr = IdealExpr::parse(text(ideal, "ideal")?)?;
        let tag: SubgroupTag = text(denominator, "denominator")?.parse()?;
        if tag.level() != level {
            return Err(Error::DimensionMismatch {
                expected: level,
                found: tag.level(),
            }
            .into());
        }
        let nil = FreeNilpotent::new(d.0.rank())?;
        let mut s = DimensionSolver::new(&nil, &d.0)?;
        let num = s.lattice(&expr, level)?;
        let den = s.subgroup(&SubgroupSpec::new(tag))?;
        put(out, boxed_group(lattice_quotient(&num, &den)?), "out")
    })
}

/// Writes 1 to `out` when `word ∈ 1 + ideal + f^level`, else 0.
///
/// # Safety
/// Pointers must be valid.
#[no_mangle]
pub unsafe extern "C" fn gds_member(
    d: *const GdsDivisors,
    word: *const c_char,
    ideal: *const c_char,
    level: usize,
    out: *mut c_int,
) -> GdsStatus {
    guard(|| {
        let d = deref(d, "divisors")?;
        let w = GroupWord::parse(text(word, "word")?)?;
        let expr = IdealExpr::parse(text(ideal, "ideal")?)?;
        let holds = membership(&d.0, &w, &expr, level)?;
        put(out, c_int::from(holds), "out")
    })
}

/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn gds_verifier_new(rank: usize, out: *mut *mut GdsVerifier) -> GdsStatus {
    guard(|| {
        let v = Verifier::new(rank)?;
        put(out, Box::into_raw(Box::new(GdsVerifier(v))), "out")
    })
}

/// # Safety
/// `v` must be null or a handle from [`gds_verifier_new`].
#[no_mangle]
pub unsafe extern "C" fn gds_verifier_free(v: *mut GdsVerifier) {
    if !v.is_null() {
        drop(Box::from_raw(v));
    }
}

/// Runs one checker. `verdict` receives the outcome; `report_json`, when not
/// null, receives the full report as canonical JSON.
///
/// # Safety
/// Pointers must be valid; free `*report_json` with [`gds_string_free`].
#[no_mangle]
pub unsafe extern "C" fn gds_verify(
    v: *const GdsVerifier,
    theorem: *const c_char,
    d: *const GdsDivisors,
    verdict: *mut GdsVerdict,
    report_json: *mut *mut c_char,
) -> GdsStatus {
    guard(|| {
        let v = deref(v, "verifier")?;
        let d = deref(d, "divisors")?;
        let id: TheoremId = text(theorem, "theorem")?.parse()?;
        let r = v.0.verify(id, &d.0)?;
        let out = match r.status {
            Status::Pass => GdsVerdict::Pass,
            Status::Fail => GdsVerdict::Fail,
            Status::Skipped { .. } => GdsVerdict::Skipped,
        };
        put(verdict, out, "verdict")?;
        if !report_json.is_null() {
            report_json.write(owned_string(report::to_canonical_json(&report::verify_report(&r))));
        }
        Ok(())
    })
}
