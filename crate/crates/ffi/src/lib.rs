//! C ABI over the pybx workbench.
//!
//! Specs live behind an opaque [`PybxSpec`] handle. Every entry point returns
//! a [`PybxStatus`]; on anything other than `PYBX_STATUS_OK` or
//! `PYBX_STATUS_FAIL` a message is available from [`pybx_last_error`] on the
//! same thread. Strings handed out by this library must be released with
//! [`pybx_string_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use pybx::error::Error;
use pybx::linear::parse_scalar;
use pybx::workbench::{
    emit_report, load_spec, run_command, serialize_spec, Command, Direction, Format, RunOptions,
    WorkbenchSpec,
};

/// Result codes shared by every function.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PybxStatus {
    /// The call succeeded and, for `pybx_run`, the verdict is pass.
    Ok = 0,
    /// `pybx_run` produced a report whose verdict is fail.
    Fail = 1,
    /// The spec text could not be parsed.
    Parse = 2,
    /// A required argument was null, not UTF-8, or not recognised.
    InvalidArgument = 3,
    /// The library rejected the input (not an algebra, singular, ...).
    Rejected = 4,
    /// A required field is missing from the spec.
    MissingInput = 5,
    /// An internal panic was caught.
    Internal = 6,
}

/// Opaque parsed spec.
pub struct PybxSpec {
    spec: WorkbenchSpec,
    warnings: usize,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: impl Into<String>) {
    let c = CString::new(msg.into().replace('\0', " ")).expect("nul bytes removed");
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

fn status_of(e: &Error) -> PybxStatus {
    match e {
        Error::Parse { .. } | Error::IndexOutOfRange { .. } => PybxStatus::Parse,
        Error::MissingInput(_) => PybxStatus::MissingInput,
        Error::Io(_) => PybxStatus::InvalidArgument,
        _ => PybxStatus::Rejected,
    }
}

fn fail(e: Error) -> PybxStatus {
    set_error(e.to_string());
    status_of(&e)
}

fn guard(f: impl FnOnce() -> PybxStatus) -> PybxStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(s) => s,
        Err(_) => {
            set_error("internal panic");
            PybxStatus::Internal
        }
    }
}

/// Borrows a required C string.
///
/// # Safety
/// `p` must be null or a valid NUL-terminated string.
unsafe fn required<'a>(p: *const c_char, what: &str) -> Result<&'a str, PybxStatus> {
    if p.is_null() {
        set_error(format!("{what} is null"));
        return Err(PybxStatus::InvalidArgument);
    }
    CStr::from_ptr(p).to_str().map_err(|_| {
        set_error(format!("{what} is not UTF-8"));
        PybxStatus::InvalidArgument
    })
}

/// # Safety
/// `p` must be null or a valid NUL-terminated string.
unsafe fn optional<'a>(p: *const c_char, what: &str) -> Result<Option<&'a str>, PybxStatus> {
    if p.is_null() {
        Ok(None)
    } else {
        required(p, what).map(Some)
    }
}

fn hand_out(s: String, out: *mut *mut c_char) {
    let c = CString::new(s.replace('\0', " ")).expect("nul bytes removed");
    // SAFETY: callers check `out` for null first.
    unsafe { *out = c.into_raw() };
}

/// Parses spec text into a new handle stored in `*out`.
///
/// # Safety
/// `text` must be a NUL-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn pybx_spec_parse(
    text: *const c_char,
    out: *mut *mut PybxSpec,
) -> PybxStatus {
    guard(|| {
        if out.is_null() {
            set_error("out is null");
            return PybxStatus::InvalidArgument;
        }
        *out = ptr::null_mut();
        let text = match required(text, "text") {
            Ok(t) => t,
            Err(s) => return s,
        };
        match load_spec(text) {
            Ok(l) => {
                let h = Box::new(PybxSpec {
                    spec: l.spec,
                    warnings: l.warnings.len(),
                });
                *out = Box::into_raw(h);
                PybxStatus::Ok
            }
            Err(e) => fail(e),
        }
    })
}

/// Releases a handle. Null is accepted.
///
/// # Safety
/// `spec` must be null or a handle from [`pybx_spec_parse`] not yet freed.
#[no_mangle]
pub unsafe extern "C" fn pybx_spec_free(spec: *mut PybxSpec) {
    if !spec.is_null() {
        drop(Box::from_raw(spec));
    }
}

/// Dimension of the spec, or 0 for a null handle.
///
/// # Safety
/// `spec` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn pybx_spec_dim(spec: *const PybxSpec) -> usize {
    spec.as_ref().map_or(0, |s| s.spec.dim)
}

/// Number of parser warnings (duplicate entries), or 0 for a null handle.
///
/// # Safety
/// `spec` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn pybx_spec_warning_count(spec: *const PybxSpec) -> usize {
    spec.as_ref().map_or(0, |s| s.warnings)
}

/// Writes the canonical serialization to `*out`.
///
/// # Safety
/// `spec` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn pybx_spec_serialize(
    spec: *const PybxSpec,
    out: *mut *mut c_char,
) -> PybxStatus {
    guard(|| {
        let Some(s) = spec.as_ref() else {
            set_error("spec is null");
            return PybxStatus::InvalidArgument;
        };
        if out.is_null() {
            set_error("out is null");
            return PybxStatus::InvalidArgument;
        }
        hand_out(serialize_spec(&s.spec), out);
        PybxStatus::Ok
    })
}

fn parse_command(s: &str) -> Option<Command> {
    Some(match s {
        "check" => Command::Check,
        "classify" => Command::Classify,
        "double" => Command::Double,
        "convert" => Command::Convert,
        "induce" => Command::Induce,
        "report" => Command::Report,
        _ => return None,
    })
}

fn parse_direction(s: &str) -> Option<Direction> {
    Some(match s {
        "rb2fact" => Direction::Rb2Fact,
        "fact2rb" => Direction::Fact2Rb,
        "tilde" => Direction::Tilde,
        "tau" => Direction::Tau,
        _ => return None,
    })
}

/// Runs a workbench command and writes the rendered report to `*report`.
///
/// `direction` and `weight` may be null. `machine` selects JSON output.
/// Returns `PYBX_STATUS_OK` or `PYBX_STATUS_FAIL` according to the verdict
/// when a report was produced; `*report` is null otherwise.
///
/// # Safety
/// String arguments must be null or NUL-terminated, `spec` a live handle,
/// `report` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn pybx_run(
    spec: *const PybxSpec,
    command: *const c_char,
    direction: *const c_char,
    weight: *const c_char,
    machine: bool,
    report: *mut *mut c_char,
) -> PybxStatus {
    guard(|| {
        if report.is_null() {
            set_error("report is null");
            return PybxStatus::InvalidArgument;
        }
        *report = ptr::null_mut();
        let Some(s) = spec.as_ref() else {
            set_error("spec is null");
            return PybxStatus::InvalidArgument;
        };
        let args = (|| {
            let cmd = required(command, "command")?;
            let cmd = parse_command(cmd).ok_or_else(|| {
                set_error(format!("unknown command `{cmd}`"));
                PybxStatus::InvalidArgument
            })?;
            let dir = match optional(direction, "direction")? {
                None => None,
                Some(d) => Some(parse_direction(d).ok_or_else(|| {
                    set_error(format!("unknown direction `{d}`"));
                    PybxStatus::InvalidArgument
                })?),
            };
            let w = match optional(weight, "weight")? {
                None => None,
                Some(w) => Some(parse_scalar(w).ok_or_else(|| {
                    set_error(format!("not a rational: `{w}`"));
                    PybxStatus::InvalidArgument
                })?),
            };
            Ok((
                cmd,
                RunOptions {
                    direction: dir,
                    weight: w,
                },
            ))
        })();
        let (cmd, opts) = match args {
            Ok(a) => a,
            Err(st) => return st,
        };
        match run_command(cmd, &s.spec, &opts) {
            Ok(doc) => {
                let fmt = if machine {
                    Format::Machine
                } else {
                    Format::Human
                };
                hand_out(emit_report(&doc, fmt), report);
                if doc.verdict {
                    PybxStatus::Ok
                } else {
                    PybxStatus::Fail
                }
            }
            Err(e) => fail(e),
        }
    })
}

/// Releases a string returned by this library. Null is accepted.
///
/// # Safety
/// `s` must be null or a string from this library not yet freed.
#[no_mangle]
pub unsafe extern "C" fn pybx_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Message for the most recent error on this thread, or null.
///
/// The pointer stays valid until the next failing call on the same thread.
#[no_mangle]
pub extern "C" fn pybx_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}
