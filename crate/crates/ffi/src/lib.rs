//! C ABI over `ppalg`. Quivers are opaque handles; every call returns a
//! [`PpalgStatus`] and records a message retrievable with
//! [`ppalg_last_error_message`] on failure. Strings returned through out
//! parameters are owned by the caller and released with [`ppalg_string_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use ppalg::grassmann::{count_polynomial, DEFAULT_CAP};
use ppalg::palg::hilbert;
use ppalg::quiver::Quiver;
use ppalg::weyl::Weyl;

/// Result of every call.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PpalgStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    /// Malformed or inconsistent input.
    InvalidInput = 3,
    /// A cap, truncation or search bound was hit.
    LimitExceeded = 4,
    /// An internal consistency check failed.
    Internal = 5,
    /// The caller's buffer is shorter than the result.
    BufferTooSmall = 6,
    Panic = 7,
}

/// Opaque quiver handle.
pub struct PpalgQuiver {
    inner: Quiver,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: String) {
    let c = CString::new(msg.replace('\0', " ")).expect("nul bytes removed");
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

struct Failure(PpalgStatus, String);

impl From<ppalg::Error> for Failure {
    fn from(e: ppalg::Error) -> Self {
        let status = match e.exit_code() {
            3 => PpalgStatus::LimitExceeded,
            4 => PpalgStatus::Internal,
            _ => PpalgStatus::InvalidInput,
        };
        Failure(status, e.to_string())
    }
}

fn guard(f: impl FnOnce() -> Result<(), Failure>) -> PpalgStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => {
            LAST_ERROR.with(|e| *e.borrow_mut() = None);
            PpalgStatus::Ok
        }
        Ok(Err(Failure(status, msg))) => {
            set_error(msg);
            status
        }
        Err(_) => {
            set_error("panic inside ppalg".into());
            PpalgStatus::Panic
        }
    }
}

fn null(what: &str) -> Failure {
    Failure(PpalgStatus::NullPointer, format!("{what} is null"))
}

unsafe fn str_arg<'a>(p: *const c_char, what: &str) -> Result<&'a str, Failure> {
    if p.is_null() {
        return Err(null(what));
    }
    CStr::from_ptr(p).to_str().map_err(|_| Failure(PpalgStatus::InvalidUtf8, format!("{what} is not UTF-8")))
}

unsafe fn quiver_arg<'a>(q: *const PpalgQuiver) -> Result<&'a Quiver, Failure> {
    q.as_ref().map(|h| &h.inner).ok_or_else(|| null("quiver"))
}

/// Dimension vector of length `num_vertices` read from `p`.
unsafe fn dims_arg(q: &Quiver, p: *const usize, what: &str) -> Result<Vec<usize>, Failure> {
    let n = q.num_vertices();
    if n == 0 {
        return Ok(Vec::new());
    }
    if p.is_null() {
        return Err(null(what));
    }
    Ok(std::slice::from_raw_parts(p, n).to_vec())
}

unsafe fn write_string(out: *mut *mut c_char, s: String) -> Result<(), Failure> {
    let c = CString::new(s).map_err(|_| Failure(PpalgStatus::Internal, "output contains a nul byte".into()))?;
    *out = c.into_raw();
    Ok(())
}

/// Message of the last failed call on this thread, or null. Valid until the
/// next call into this library on the same thread.
#[no_mangle]
pub extern "C" fn ppalg_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// Parse a quiver from its JSON form.
///
/// # Safety
/// `json` must be a valid nul-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn ppalg_quiver_from_json(json: *const c_char, out: *mut *mut PpalgQuiver) -> PpalgStatus {
    guard(|| {
        if out.is_null() {
            return Err(null("out"));
        }
        let q = Quiver::from_json(str_arg(json, "json")?)?;
        *out = Box::into_raw(Box::new(PpalgQuiver { inner: q }));
        Ok(())
    })
}

/// Release a quiver handle; null is ignored.
///
/// # Safety
/// `q` must come from [`ppalg_quiver_from_json`] and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn ppalg_quiver_free(q: *mut PpalgQuiver) {
    if !q.is_null() {
        drop(Box::from_raw(q));
    }
}

/// Number of vertices; dimension vectors passed to this library have this length.
///
/// # Safety
/// `q` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn ppalg_quiver_num_vertices(q: *const PpalgQuiver, out: *mut usize) -> PpalgStatus {
    guard(|| {
        let q = quiver_arg(q)?;
        *out.as_mut().ok_or_else(|| null("out"))? = q.num_vertices();
        Ok(())
    })
}

/// `{"kind": ..., "label": ...}` as a newly allocated string.
///
/// # Safety
/// `q` must be a live handle and `out_json` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn ppalg_classify(q: *const PpalgQuiver, out_json: *mut *mut c_char) -> PpalgStatus {
    guard(|| {
        let q = quiver_arg(q)?;
        if out_json.is_null() {
            return Err(null("out_json"));
        }
        let s = serde_json::to_string(&q.classify()).map_err(|e| Failure(PpalgStatus::Internal, e.to_string()))?;
        write_string(out_json, s)
    })
}

/// Dimensions of the preprojective algebra in degrees `0..=max_degree`,
/// written to `buf` (capacity `cap`). `written` receives the number of
/// entries needed, also when the buffer is too small.
///
/// # Safety
/// `q` must be a live handle, `buf` valid for `cap` writes, `written` valid.
#[no_mangle]
pub unsafe extern "C" fn ppalg_hilbert(
    q: *const PpalgQuiver,
    max_degree: usize,
    buf: *mut usize,
    cap: usize,
    written: *mut usize,
) -> PpalgStatus {
    guard(|| {
        let q = quiver_arg(q)?;
        let written = written.as_mut().ok_or_else(|| null("written"))?;
        let h = hilbert(q, max_degree);
        *written = h.len();
        if cap < h.len() {
            return Err(Failure(PpalgStatus::BufferTooSmall, format!("need {} entries, have {cap}", h.len())));
        }
        if buf.is_null() {
            return Err(null("buf"));
        }
        std::slice::from_raw_parts_mut(buf, h.len()).copy_from_slice(&h);
        Ok(())
    })
}

/// Multiplicity of the weight `omega_w - alpha_v` (finite type only).
///
/// # Safety
/// `q` must be a live handle; `w` and `v` must each hold `num_vertices` entries.
#[no_mangle]
pub unsafe extern "C" fn ppalg_weight_multiplicity(
    q: *const PpalgQuiver,
    w: *const usize,
    v: *const usize,
    out: *mut u64,
) -> PpalgStatus {
    guard(|| {
        let q = quiver_arg(q)?;
        let out = out.as_mut().ok_or_else(|| null("out"))?;
        let to_i64 = |x: Vec<usize>| x.into_iter().map(|c| c as i64).collect::<Vec<_>>();
        let w = to_i64(dims_arg(q, w, "w")?);
        let v = to_i64(dims_arg(q, v, "v")?);
        *out = Weyl::new(q).weight_multiplicity(&w, &v)?;
        Ok(())
    })
}

/// Point counts of `Gr(v, q^w)` at the given primes with their interpolating
/// polynomial, as JSON. `trunc = 0` means the default truncation.
///
/// # Safety
/// `q` must be a live handle; `w`, `v` hold `num_vertices` entries; `primes`
/// holds `num_primes` entries; `out_json` is a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn ppalg_count_json(
    q: *const PpalgQuiver,
    w: *const usize,
    v: *const usize,
    primes: *const u64,
    num_primes: usize,
    trunc: usize,
    out_json: *mut *mut c_char,
) -> PpalgStatus {
    guard(|| {
        let q = quiver_arg(q)?;
        if out_json.is_null() {
            return Err(null("out_json"));
        }
        let w = dims_arg(q, w, "w")?;
        let v = dims_arg(q, v, "v")?;
        let primes = if num_primes == 0 {
            Vec::new()
        } else if primes.is_null() {
            return Err(null("primes"));
        } else {
            std::slice::from_raw_parts(primes, num_primes).to_vec()
        };
        let trunc = (trunc > 0).then_some(trunc);
        let poly = count_polynomial(q, &w, &v, &primes, trunc, DEFAULT_CAP)?;
        write_string(out_json, poly.to_json().to_string())
    })
}

/// Release a string returned by this library; null is ignored.
///
/// # Safety
/// `s` must come from this library and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn ppalg_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}
