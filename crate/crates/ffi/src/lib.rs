//! C ABI over `simperm`.
//!
//! Permutations cross the boundary as opaque `SpPermutation` handles owned
//! by the caller and released with `sp_permutation_free`. Every fallible
//! call returns an `SpStatus`; on failure `sp_last_error` describes the most
//! recent error on the calling thread. Strings returned through `char **`
//! out-parameters are released with `sp_string_free`.
//!
//! Positions and values are 1-based, as in one-line notation.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};

use simperm::classify::is_parallel_alternation;
use simperm::enumerate::simple_via_extension;
use simperm::essential::{extension_analysis, inessential_entries, verify_theorem};
use simperm::intervals::{interval_census, is_simple};
use simperm::{Error, Permutation, Slot, Symmetry};

/// Opaque permutation handle.
pub struct SpPermutation(Permutation);

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SpStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    Parse = 3,
    NotAPermutation = 4,
    OutOfRange = 5,
    NotSimple = 6,
    NotAParallelAlternation = 7,
    TooSmall = 8,
    TooLarge = 9,
    BadArguments = 10,
    BufferTooSmall = 11,
    Panic = 12,
    Internal = 13,
}

/// The eight symmetries of the square.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SpSymmetry {
    Identity = 0,
    Reverse = 1,
    Complement = 2,
    ReverseComplement = 3,
    Inverse = 4,
    InverseReverse = 5,
    InverseComplement = 6,
    InverseReverseComplement = 7,
}

impl From<SpSymmetry> for Symmetry {
    fn from(s: SpSymmetry) -> Self {
        Symmetry::ALL[s as usize]
    }
}

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_last_error(message: &str) {
    let c = CString::new(message.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = c);
}

struct Failure(SpStatus, String);

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let status = match e {
            Error::NotAPermutation(_) | Error::NotDistinct => SpStatus::NotAPermutation,
            Error::Parse { .. } => SpStatus::Parse,
            Error::OutOfRange { .. } | Error::Underflow | Error::EmptySet => SpStatus::OutOfRange,
            Error::NotSimple(_) => SpStatus::NotSimple,
            Error::NotAParallelAlternation(_) => SpStatus::NotAParallelAlternation,
            Error::TooSmall { .. } => SpStatus::TooSmall,
            Error::TooLarge { .. } => SpStatus::TooLarge,
            Error::BadArguments(_) => SpStatus::BadArguments,
        };
        Failure(status, e.to_string())
    }
}

fn fail(status: SpStatus, message: impl Into<String>) -> Failure {
    Failure(status, message.into())
}

/// Runs `f`, recording any error or panic for `sp_last_error`.
fn call(f: impl FnOnce() -> Result<(), Failure>) -> SpStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => {
            set_last_error("");
            SpStatus::Ok
        }
        Ok(Err(Failure(status, message))) => {
            set_last_error(&message);
            status
        }
        Err(_) => {
            set_last_error("internal panic");
            SpStatus::Panic
        }
    }
}

unsafe fn handle<'a>(p: *const SpPermutation) -> Result<&'a Permutation, Failure> {
    p.as_ref()
        .map(|h| &h.0)
        .ok_or_else(|| fail(SpStatus::NullPointer, "null permutation handle"))
}

unsafe fn out_ref<'a, T>(out: *mut T) -> Result<&'a mut T, Failure> {
    out.as_mut()
        .ok_or_else(|| fail(SpStatus::NullPointer, "null output pointer"))
}

fn boxed(p: Permutation) -> *mut SpPermutation {
    Box::into_raw(Box::new(SpPermutation(p)))
}

fn c_string(s: String) -> Result<*mut c_char, Failure> {
    CString::new(s)
        .map(CString::into_raw)
        .map_err(|_| fail(SpStatus::Internal, "string contains a NUL byte"))
}

/// Message for the last failed call on this thread; empty after a success.
/// The pointer stays valid until the next call on the same thread.
#[no_mangle]
pub extern "C" fn sp_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

/// Library version as a static NUL-terminated string.
#[no_mangle]
pub extern "C" fn sp_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}

/// Builds a permutation from `len` values, each in `1..=len`.
///
/// # Safety
/// `values` must point to `len` readable elements (or be null when `len`
/// is 0); `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn sp_permutation_new(
    values: *const usize,
    len: usize,
    out: *mut *mut SpPermutation,
) -> SpStatus {
    call(|| {
        let out = out_ref(out)?;
        let slice = if len == 0 {
            &[][..]
        } else if values.is_null() {
            return Err(fail(SpStatus::NullPointer, "null values"));
        } else {
            std::slice::from_raw_parts(values, len)
        };
        *out = boxed(Permutation::from_sequence(slice)?);
        Ok(())
    })
}

/// Parses whitespace-separated, comma-separated or compact-digit text.
///
/// # Safety
/// `text` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn sp_permutation_parse(text: *const c_char, out: *mut *mut SpPermutation) -> SpStatus {
    call(|| {
        let out = out_ref(out)?;
        if text.is_null() {
            return Err(fail(SpStatus::NullPointer, "null text"));
        }
        let s = CStr::from_ptr(text)
            .to_str()
            .map_err(|e| fail(SpStatus::InvalidUtf8, e.to_string()))?;
        *out = boxed(s.parse()?);
        Ok(())
    })
}

/// Releases a handle. Null is ignored.
///
/// # Safety
/// `p` must be null or a handle from this library not yet freed.
#[no_mangle]
pub unsafe extern "C" fn sp_permutation_free(p: *mut SpPermutation) {
    if !p.is_null() {
        drop(Box::from_raw(p));
    }
}

/// Length of the permutation, or 0 for a null handle.
///
/// # Safety
/// `p` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn sp_permutation_len(p: *const SpPermutation) -> usize {
    p.as_ref().map_or(0, |h| h.0.len())
}

/// Copies the values into `buf`, which must hold at least `len` elements.
///
/// # Safety
/// `p` must be a live handle and `buf` must point to `cap` writable elements.
#[no_mangle]
pub unsafe extern "C" fn sp_permutation_values(p: *const SpPermutation, buf: *mut usize, cap: usize) -> SpStatus {
    call(|| {
        let p = handle(p)?;
        if cap < p.len() {
            return Err(fail(
                SpStatus::BufferTooSmall,
                format!("buffer holds {cap}, need {}", p.len()),
            ));
        }
        if p.is_empty() {
            return Ok(());
        }
        if buf.is_null() {
            return Err(fail(SpStatus::NullPointer, "null buffer"));
        }
        let dst = std::slice::from_raw_parts_mut(buf, p.len());
        for (d, &v) in dst.iter_mut().zip(p.values()) {
            *d = v as usize;
        }
        Ok(())
    })
}

/// Space-separated one-line notation; free with `sp_string_free`.
///
/// # Safety
/// `p` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn sp_permutation_to_string(p: *const SpPermutation, out: *mut *mut c_char) -> SpStatus {
    call(|| {
        let out = out_ref(out)?;
        *out = c_string(handle(p)?.to_string())?;
        Ok(())
    })
}

/// # Safety
/// `s` must be null or a string returned by this library not yet freed.
#[no_mangle]
pub unsafe extern "C" fn sp_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// # Safety
/// `p` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn sp_is_simple(p: *const SpPermutation, out: *mut bool) -> SpStatus {
    call(|| {
        *out_ref(out)? = is_simple(handle(p)?).simple;
        Ok(())
    })
}

/// Number of nontrivial intervals (windows of size 2..n-1).
///
/// # Safety
/// `p` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn sp_interval_count(p: *const SpPermutation, out: *mut usize) -> SpStatus {
    call(|| {
        *out_ref(out)? = interval_census(handle(p)?).0;
        Ok(())
    })
}

/// Deletes the entry at `position` into a new handle.
///
/// # Safety
/// `p` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn sp_permutation_delete(
    p: *const SpPermutation,
    position: usize,
    out: *mut *mut SpPermutation,
) -> SpStatus {
    call(|| {
        let out = out_ref(out)?;
        *out = boxed(handle(p)?.delete(position)?);
        Ok(())
    })
}

/// Inserts a new entry at (`position`, `value`), both in `1..=len+1`.
///
/// # Safety
/// `p` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn sp_permutation_insert(
    p: *const SpPermutation,
    position: usize,
    value: usize,
    out: *mut *mut SpPermutation,
) -> SpStatus {
    call(|| {
        let out = out_ref(out)?;
        *out = boxed(handle(p)?.insert(Slot::new(position, value))?);
        Ok(())
    })
}

/// # Safety
/// `p` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn sp_permutation_apply_symmetry(
    p: *const SpPermutation,
    symmetry: SpSymmetry,
    out: *mut *mut SpPermutation,
) -> SpStatus {
    call(|| {
        let out = out_ref(out)?;
        *out = boxed(handle(p)?.apply(symmetry.into()));
        Ok(())
    })
}

/// # Safety
/// `p` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn sp_is_parallel_alternation(p: *const SpPermutation, out: *mut bool) -> SpStatus {
    call(|| {
        *out_ref(out)? = is_parallel_alternation(handle(p)?).is_some();
        Ok(())
    })
}

/// Number of entries whose removal leaves a simple permutation. The input
/// must be simple and of length at least 2.
///
/// # Safety
/// `p` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn sp_inessential_count(p: *const SpPermutation, out: *mut usize) -> SpStatus {
    call(|| {
        *out_ref(out)? = inessential_entries(handle(p)?)?.inessential_count;
        Ok(())
    })
}

/// Number of simple permutations of length `n`.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn sp_simple_count(n: usize, out: *mut usize) -> SpStatus {
    call(|| {
        *out_ref(out)? = simple_via_extension(n)?.len();
        Ok(())
    })
}

/// Checks exhaustively that every simple permutation of length `n` is a
/// parallel alternation or has an inessential entry.
///
/// # Safety
/// `holds` must be writable.
#[no_mangle]
pub unsafe extern "C" fn sp_verify_theorem(n: usize, holds: *mut bool) -> SpStatus {
    call(|| {
        *out_ref(holds)? = verify_theorem(n)?.holds;
        Ok(())
    })
}

/// One-point extension census of a simple permutation as JSON; free with
/// `sp_string_free`.
///
/// # Safety
/// `p` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn sp_extension_report_json(p: *const SpPermutation, out: *mut *mut c_char) -> SpStatus {
    call(|| {
        let out = out_ref(out)?;
        let report = extension_analysis(handle(p)?)?;
        let text = serde_json::to_string(&report).map_err(|e| fail(SpStatus::Internal, e.to_string()))?;
        *out = c_string(text)?;
        Ok(())
    })
}
