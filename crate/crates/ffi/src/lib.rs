//! C ABI over `subdeg`.
//!
//! Groups are opaque handles created by the `*_parse` functions and released
//! with the matching `*_free`. Every fallible call returns an [`SdStatus`];
//! on failure the message is available from [`sd_last_error_message`] on the
//! same thread. Points are 1-based, as in the text formats.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::path::PathBuf;

use subdeg::analysis::subdegrees;
use subdeg::format::{parse_mat_group_text, parse_perm_group_text};
use subdeg::gf::MatGroup;
use subdeg::perm::{OrbitOptions, Perm, PermGroup};
use subdeg::verify::{report_lines, run_case, VerifyOptions};
use subdeg::Error;

/// Result codes.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SdStatus {
    SdOk = 0,
    SdErrNull = 1,
    SdErrUtf8 = 2,
    SdErrParse = 3,
    SdErrInvalidArgument = 4,
    SdErrMissingData = 5,
    SdErrCapExceeded = 6,
    SdErrInconclusive = 7,
    SdErrOverflow = 8,
    SdErrBufferTooSmall = 9,
    SdErrPanic = 10,
    SdErrOther = 11,
}

/// Opaque permutation group.
pub struct SdPermGroup {
    inner: PermGroup,
}

/// Opaque matrix group over a finite field.
pub struct SdMatGroup {
    inner: MatGroup,
}

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(message: impl Into<String>) {
    let text = message.into().replace('\0', " ");
    LAST_ERROR.with(|e| *e.borrow_mut() = CString::new(text).expect("no interior nul"));
}

fn status_of(e: &Error) -> SdStatus {
    match e {
        Error::Parse { .. } | Error::OrderMismatch { .. } | Error::Singular => SdStatus::SdErrParse,
        Error::PointOutOfRange { .. }
        | Error::RepeatedPoint(_)
        | Error::DegreeMismatch { .. }
        | Error::NotInGroup(_)
        | Error::InvalidArgument(_)
        | Error::Intransitive => SdStatus::SdErrInvalidArgument,
        Error::CapExceeded { .. } => SdStatus::SdErrCapExceeded,
        Error::Inconclusive(_) => SdStatus::SdErrInconclusive,
        Error::MissingData(_) => SdStatus::SdErrMissingData,
        Error::Io(_) => SdStatus::SdErrOther,
    }
}

struct Failure(SdStatus, String);

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure(status_of(&e), e.to_string())
    }
}

fn guard(f: impl FnOnce() -> Result<(), Failure>) -> SdStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => SdStatus::SdOk,
        Ok(Err(Failure(status, message))) => {
            set_error(message);
            status
        }
        Err(_) => {
            set_error("internal panic");
            SdStatus::SdErrPanic
        }
    }
}

fn null() -> Failure {
    Failure(SdStatus::SdErrNull, "null pointer argument".into())
}

unsafe fn text<'a>(p: *const c_char) -> Result<&'a str, Failure> {
    if p.is_null() {
        return Err(null());
    }
    CStr::from_ptr(p).to_str().map_err(|_| Failure(SdStatus::SdErrUtf8, "argument is not UTF-8".into()))
}

unsafe fn out<'a, T>(p: *mut T) -> Result<&'a mut T, Failure> {
    p.as_mut().ok_or_else(null)
}

unsafe fn handle<'a, T>(p: *const T) -> Result<&'a T, Failure> {
    p.as_ref().ok_or_else(null)
}

fn to_u64(x: u128) -> Result<u64, Failure> {
    u64::try_from(x).map_err(|_| Failure(SdStatus::SdErrOverflow, format!("{x} does not fit in 64 bits")))
}

fn point(group: &PermGroup, p: u32) -> Result<u32, Failure> {
    if p == 0 || p as usize > group.degree() {
        return Err(Error::PointOutOfRange { point: p as usize, degree: group.degree() }.into());
    }
    Ok(p - 1)
}

/// Copies the last error message of this thread into `buf` (nul-terminated,
/// truncated to `len`). Returns the full message length without the nul.
///
/// # Safety
/// `buf` must be null or valid for `len` bytes.
#[no_mangle]
pub unsafe extern "C" fn sd_last_error_message(buf: *mut c_char, len: usize) -> usize {
    LAST_ERROR.with(|e| {
        let bytes = e.borrow();
        let bytes = bytes.as_bytes();
        if !buf.is_null() && len > 0 {
            let n = bytes.len().min(len - 1);
            std::ptr::copy_nonoverlapping(bytes.as_ptr(), buf as *mut u8, n);
            *buf.add(n) = 0;
        }
        bytes.len()
    })
}

/// Parses a permutation group from the `degree`/`gen` text format.
///
/// # Safety
/// `spec` must be a nul-terminated string; output pointers must be writable.
#[no_mangle]
pub unsafe extern "C" fn sd_perm_group_parse(spec: *const c_char, out_group: *mut *mut SdPermGroup) -> SdStatus {
    guard(|| {
        let slot = out(out_group)?;
        let inner = parse_perm_group_text(text(spec)?)?;
        *slot = Box::into_raw(Box::new(SdPermGroup { inner }));
        Ok(())
    })
}

/// Releases a handle from [`sd_perm_group_parse`]. Null is ignored.
///
/// # Safety
/// `group` must come from [`sd_perm_group_parse`] and not be used again.
#[no_mangle]
pub unsafe extern "C" fn sd_perm_group_free(group: *mut SdPermGroup) {
    if !group.is_null() {
        drop(Box::from_raw(group));
    }
}

/// # Safety
/// `group` must be a live handle; output pointers must be writable.
#[no_mangle]
pub unsafe extern "C" fn sd_perm_group_degree(group: *const SdPermGroup, out_degree: *mut usize) -> SdStatus {
    guard(|| {
        *out(out_degree)? = handle(group)?.inner.degree();
        Ok(())
    })
}

/// Group order; `SD_ERR_OVERFLOW` when it exceeds 64 bits.
///
/// # Safety
/// `group` must be a live handle; output pointers must be writable.
#[no_mangle]
pub unsafe extern "C" fn sd_perm_group_order(group: *const SdPermGroup, out_order: *mut u64) -> SdStatus {
    guard(|| {
        *out(out_order)? = to_u64(handle(group)?.inner.order())?;
        Ok(())
    })
}

/// # Safety
/// `group` must be a live handle; output pointers must be writable.
#[no_mangle]
pub unsafe extern "C" fn sd_perm_group_orbit_length(
    group: *const SdPermGroup,
    pt: u32,
    out_length: *mut usize,
) -> SdStatus {
    guard(|| {
        let g = &handle(group)?.inner;
        *out(out_length)? = g.orbit(point(g, pt)?).len();
        Ok(())
    })
}

/// Membership of the permutation with 1-based `images` of length `len`.
///
/// # Safety
/// `images` must be valid for `len` reads; output pointers must be writable.
#[no_mangle]
pub unsafe extern "C" fn sd_perm_group_contains(
    group: *const SdPermGroup,
    images: *const u32,
    len: usize,
    out_member: *mut bool,
) -> SdStatus {
    guard(|| {
        let g = &handle(group)?.inner;
        if images.is_null() {
            return Err(null());
        }
        let raw = std::slice::from_raw_parts(images, len);
        if raw.contains(&0) {
            return Err(Error::PointOutOfRange { point: 0, degree: g.degree() }.into());
        }
        let p = Perm::from_images(raw.iter().map(|&x| x - 1).collect())?;
        *out(out_member)? = g.contains(&p)?;
        Ok(())
    })
}

/// Sorted subdegrees at the 1-based `base`. Writes up to `cap` values to
/// `buf` and the full count to `out_len`; `SD_ERR_BUFFER_TOO_SMALL` when
/// `cap` is short.
///
/// # Safety
/// `buf` must be valid for `cap` writes (or null with `cap == 0`).
#[no_mangle]
pub unsafe extern "C" fn sd_perm_group_subdegrees(
    group: *const SdPermGroup,
    base: u32,
    buf: *mut u64,
    cap: usize,
    out_len: *mut usize,
) -> SdStatus {
    guard(|| {
        let g = &handle(group)?.inner;
        let len_slot = out(out_len)?;
        let r = subdegrees(g, point(g, base)?, false)?;
        *len_slot = r.subdegrees.len();
        if r.subdegrees.len() > cap || buf.is_null() && !r.subdegrees.is_empty() {
            return Err(Failure(SdStatus::SdErrBufferTooSmall, format!("need room for {} values", r.subdegrees.len())));
        }
        std::ptr::copy_nonoverlapping(r.subdegrees.as_ptr(), buf, r.subdegrees.len());
        Ok(())
    })
}

/// Parses a matrix group from the `field`/`dim`/`gen` text format.
///
/// # Safety
/// `spec` must be a nul-terminated string; output pointers must be writable.
#[no_mangle]
pub unsafe extern "C" fn sd_mat_group_parse(spec: *const c_char, out_group: *mut *mut SdMatGroup) -> SdStatus {
    guard(|| {
        let slot = out(out_group)?;
        let inner = parse_mat_group_text(text(spec)?)?;
        *slot = Box::into_raw(Box::new(SdMatGroup { inner }));
        Ok(())
    })
}

/// Releases a handle from [`sd_mat_group_parse`]. Null is ignored.
///
/// # Safety
/// `group` must come from [`sd_mat_group_parse`] and not be used again.
#[no_mangle]
pub unsafe extern "C" fn sd_mat_group_free(group: *mut SdMatGroup) {
    if !group.is_null() {
        drop(Box::from_raw(group));
    }
}

/// # Safety
/// `group` must be a live handle; output pointers must be writable.
#[no_mangle]
pub unsafe extern "C" fn sd_mat_group_order(group: *const SdMatGroup, out_order: *mut u64) -> SdStatus {
    guard(|| {
        *out(out_order)? = to_u64(handle(group)?.inner.order())?;
        Ok(())
    })
}

/// Orbit length of a row vector given as `len` field-element codes.
///
/// # Safety
/// `vector` must be valid for `len` reads; output pointers must be writable.
#[no_mangle]
pub unsafe extern "C" fn sd_mat_group_vec_orbit_length(
    group: *const SdMatGroup,
    vector: *const u32,
    len: usize,
    out_length: *mut usize,
) -> SdStatus {
    guard(|| {
        let g = &handle(group)?.inner;
        if vector.is_null() {
            return Err(null());
        }
        let v = std::slice::from_raw_parts(vector, len);
        let q = g.field().order();
        if v.len() != g.dim() || v.iter().any(|&x| x >= q) {
            return Err(Error::InvalidArgument(format!("need {} field elements below {q}", g.dim())).into());
        }
        *out(out_length)? = g.vec_orbit(v, OrbitOptions::length_only())?.length;
        Ok(())
    })
}

/// Runs a registered verification case. On success `out_report` receives
/// the JSON-lines report (free it with [`sd_string_free`]) and
/// `out_exit` the exit code (0 pass, 1 fail, 3 skipped).
///
/// # Safety
/// `case_id` must be a nul-terminated string; `data_dir` may be null.
#[no_mangle]
pub unsafe extern "C" fn sd_verify_case(
    case_id: *const c_char,
    seed: u64,
    data_dir: *const c_char,
    out_report: *mut *mut c_char,
    out_exit: *mut i32,
) -> SdStatus {
    guard(|| {
        let id = text(case_id)?;
        let dir = if data_dir.is_null() { None } else { Some(PathBuf::from(text(data_dir)?)) };
        let report_slot = out(out_report)?;
        let exit_slot = out(out_exit)?;
        let report = run_case(id, &VerifyOptions::new(seed, dir))?;
        *exit_slot = report.status.exit_code();
        let lines: Vec<String> = report_lines(&[report], seed).iter().map(|v| v.to_string()).collect();
        let joined = CString::new(lines.join("\n") + "\n").map_err(|e| Failure(SdStatus::SdErrOther, e.to_string()))?;
        *report_slot = joined.into_raw();
        Ok(())
    })
}

/// Frees a string returned by this library. Null is ignored.
///
/// # Safety
/// `s` must come from this library and not be used again.
#[no_mangle]
pub unsafe extern "C" fn sd_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}
