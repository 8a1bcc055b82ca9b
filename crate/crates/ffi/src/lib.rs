//! C interface to the harmonic-space library.
//!
//! Every fallible function returns a [`SteenrodStatus`] and writes its
//! result through an out-pointer. On failure a message is available from
//! [`steenrod_last_error`] on the same thread. Handles are opaque and must be
//! released with their matching `_free` function; strings returned by the
//! library are released with [`steenrod_string_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use steenrod_harmonics::experiments::{run, Command, ExperimentConfig, FamilySpec, Format, ParamSpec, Report};
use steenrod_harmonics::kernel::{default_mode, solve_kernel, GradedKernel, Mode};
use steenrod_harmonics::operator::OperatorFamily;
use steenrod_harmonics::regseq::subset_sum_regularity;
use steenrod_harmonics::scalar::{QScalar, Rational};
use steenrod_harmonics::Error;

/// Result codes.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SteenrodStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    Parse = 3,
    InvalidArgument = 4,
    OutOfRange = 5,
    Computation = 6,
    Panic = 7,
}

/// An operator family over the rationals or over rational functions in q.
pub struct SteenrodFamily {
    inner: AnyFamily,
}

/// The solved harmonic space of a family, degree by degree.
pub struct SteenrodKernel {
    hilbert: Vec<usize>,
    basis: Vec<Vec<CString>>,
}

/// The result of one experiment.
pub struct SteenrodReport {
    report: Report,
}

enum AnyFamily {
    Rational(OperatorFamily<Rational>),
    Symbolic(OperatorFamily<QScalar>),
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: impl Into<String>) {
    let msg = CString::new(msg.into().replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(msg));
}

fn fail(status: SteenrodStatus, msg: impl Into<String>) -> SteenrodStatus {
    set_error(msg);
    status
}

fn from_lib(e: Error) -> SteenrodStatus {
    let status = match e {
        Error::Parse(_) => SteenrodStatus::Parse,
        Error::InvalidParameters(_) | Error::CapOverflow { .. } | Error::EmptyFamily => SteenrodStatus::InvalidArgument,
        _ => SteenrodStatus::Computation,
    };
    fail(status, e.to_string())
}

/// Run `f`, turning a panic into a status code.
fn guard(f: impl FnOnce() -> SteenrodStatus) -> SteenrodStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(s) => s,
        Err(p) => {
            let msg = p
                .downcast_ref::<&str>()
                .map(|s| s.to_string())
                .or_else(|| p.downcast_ref::<String>().cloned())
                .unwrap_or_else(|| "panic".into());
            fail(SteenrodStatus::Panic, msg)
        }
    }
}

/// Borrow a C string, `None` for a null pointer.
unsafe fn opt_str<'a>(s: *const c_char) -> Result<Option<&'a str>, SteenrodStatus> {
    if s.is_null() {
        return Ok(None);
    }
    CStr::from_ptr(s)
        .to_str()
        .map(Some)
        .map_err(|_| fail(SteenrodStatus::InvalidUtf8, "string is not valid UTF-8"))
}

unsafe fn req_str<'a>(s: *const c_char, what: &str) -> Result<&'a str, SteenrodStatus> {
    opt_str(s)?.ok_or_else(|| fail(SteenrodStatus::NullPointer, format!("{what} is null")))
}

fn rationals(s: &str) -> Result<Vec<Rational>, SteenrodStatus> {
    s.split(',')
        .map(|t| t.trim().parse::<Rational>())
        .collect::<Result<_, _>>()
        .map_err(from_lib)
}

macro_rules! try_status {
    ($e:expr) => {
        match $e {
            Ok(v) => v,
            Err(s) => return s,
        }
    };
}

fn to_c_string(s: String) -> *mut c_char {
    CString::new(s.replace('\0', " ")).map_or(ptr::null_mut(), CString::into_raw)
}

/// Message describing the last failure on this thread, or null. The pointer
/// stays valid until the next failing call on the same thread.
#[no_mangle]
pub extern "C" fn steenrod_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |m| m.as_ptr()))
}

/// Library version as a static string.
#[no_mangle]
pub extern "C" fn steenrod_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr() as *const c_char
}

/// Release a string returned by this library. Null is ignored.
///
/// # Safety
/// `s` must come from this library and not have been freed.
#[no_mangle]
pub unsafe extern "C" fn steenrod_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Build a family on `n` variables. `kind` is one of `classical`,
/// `q-steenrod`, `tilde` or `hat`; `q` is a rational such as `"3/2"` or
/// `"symbolic"` and is only read for `q-steenrod` (null means symbolic).
///
/// # Safety
/// String arguments must be null or NUL-terminated; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn steenrod_family_new(
    kind: *const c_char,
    n: usize,
    q: *const c_char,
    out: *mut *mut SteenrodFamily,
) -> SteenrodStatus {
    guard(|| {
        if out.is_null() {
            return fail(SteenrodStatus::NullPointer, "out is null");
        }
        if n == 0 {
            return fail(SteenrodStatus::InvalidArgument, "need at least one variable");
        }
        let kind = try_status!(req_str(kind, "kind"));
        let spec = try_status!(kind.parse::<FamilySpec>().map_err(from_lib));
        let inner = match spec {
            FamilySpec::Classical => AnyFamily::Rational(OperatorFamily::classical(n)),
            FamilySpec::Tilde => AnyFamily::Rational(OperatorFamily::tilde(n)),
            FamilySpec::Hat => AnyFamily::Rational(OperatorFamily::hat(n)),
            FamilySpec::QSteenrod => {
                let q = try_status!(opt_str(q)).unwrap_or("symbolic");
                match try_status!(q.parse::<ParamSpec>().map_err(from_lib)) {
                    ParamSpec::Symbolic => AnyFamily::Symbolic(OperatorFamily::q_steenrod(n, QScalar::q())),
                    ParamSpec::Values(v) if v.len() == 1 => {
                        AnyFamily::Rational(OperatorFamily::q_steenrod(n, v[0].clone()))
                    }
                    ParamSpec::Values(_) => return fail(SteenrodStatus::InvalidArgument, "q must be a single value"),
                }
            }
            FamilySpec::General => {
                return fail(SteenrodStatus::InvalidArgument, "use steenrod_family_general for general families")
            }
        };
        *out = Box::into_raw(Box::new(SteenrodFamily { inner }));
        SteenrodStatus::Ok
    })
}

/// Build `D_k = sum_i a_i x_i d_i^{k+1} + b_i d_i^k` from comma-separated
/// rationals of equal length.
///
/// # Safety
/// String arguments must be NUL-terminated; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn steenrod_family_general(
    a: *const c_char,
    b: *const c_char,
    out: *mut *mut SteenrodFamily,
) -> SteenrodStatus {
    guard(|| {
        if out.is_null() {
            return fail(SteenrodStatus::NullPointer, "out is null");
        }
        let a = try_status!(rationals(try_status!(req_str(a, "a"))));
        let b = try_status!(rationals(try_status!(req_str(b, "b"))));
        let fam = try_status!(OperatorFamily::general(a, b).map_err(from_lib));
        *out = Box::into_raw(Box::new(SteenrodFamily { inner: AnyFamily::Rational(fam) }));
        SteenrodStatus::Ok
    })
}

/// Number of variables of a family, or 0 for null.
///
/// # Safety
/// `family` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn steenrod_family_n_vars(family: *const SteenrodFamily) -> usize {
    match family.as_ref().map(|f| &f.inner) {
        Some(AnyFamily::Rational(f)) => f.n_vars(),
        Some(AnyFamily::Symbolic(f)) => f.n_vars(),
        None => 0,
    }
}

/// Release a family. Null is ignored.
///
/// # Safety
/// `family` must be null or a live handle not used afterwards.
#[no_mangle]
pub unsafe extern "C" fn steenrod_family_free(family: *mut SteenrodFamily) {
    if !family.is_null() {
        drop(Box::from_raw(family));
    }
}

fn collect<F: steenrod_harmonics::scalar::Field>(k: GradedKernel<F>) -> SteenrodKernel {
    SteenrodKernel {
        hilbert: k.hilbert().coefficients().to_vec(),
        basis: k
            .bases()
            .iter()
            .map(|b| b.iter().map(|p| CString::new(p.render()).unwrap_or_default()).collect())
            .collect(),
    }
}

/// Solve the harmonic space in degrees `0..=degree_cap`. When
/// `two_generators` is nonzero only `D_1` and `D_2` are imposed, which is
/// exact for q-Steenrod (q nonzero) and tilde families.
///
/// # Safety
/// `family` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn steenrod_kernel_solve(
    family: *const SteenrodFamily,
    degree_cap: usize,
    two_generators: bool,
    out: *mut *mut SteenrodKernel,
) -> SteenrodStatus {
    guard(|| {
        let Some(family) = family.as_ref() else {
            return fail(SteenrodStatus::NullPointer, "family is null");
        };
        if out.is_null() {
            return fail(SteenrodStatus::NullPointer, "out is null");
        }
        let kernel = match &family.inner {
            AnyFamily::Rational(f) => {
                let mode = if two_generators { default_mode(f) } else { Mode::All };
                collect(try_status!(solve_kernel(f, degree_cap, mode).map_err(from_lib)))
            }
            AnyFamily::Symbolic(f) => {
                let mode = if two_generators { default_mode(f) } else { Mode::All };
                collect(try_status!(solve_kernel(f, degree_cap, mode).map_err(from_lib)))
            }
        };
        *out = Box::into_raw(Box::new(kernel));
        SteenrodStatus::Ok
    })
}

/// Number of Hilbert coefficients (the degree cap plus one), or 0 for null.
///
/// # Safety
/// `kernel` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn steenrod_kernel_len(kernel: *const SteenrodKernel) -> usize {
    kernel.as_ref().map_or(0, |k| k.hilbert.len())
}

/// Copy up to `len` Hilbert coefficients into `buf`; the number available is
/// written to `written` when it is not null.
///
/// # Safety
/// `kernel` must be a live handle and `buf` must hold `len` entries.
#[no_mangle]
pub unsafe extern "C" fn steenrod_kernel_hilbert(
    kernel: *const SteenrodKernel,
    buf: *mut usize,
    len: usize,
    written: *mut usize,
) -> SteenrodStatus {
    let Some(kernel) = kernel.as_ref() else {
        return fail(SteenrodStatus::NullPointer, "kernel is null");
    };
    if buf.is_null() && len > 0 {
        return fail(SteenrodStatus::NullPointer, "buf is null");
    }
    let m = len.min(kernel.hilbert.len());
    if m > 0 {
        std::slice::from_raw_parts_mut(buf, m).copy_from_slice(&kernel.hilbert[..m]);
    }
    if !written.is_null() {
        *written = kernel.hilbert.len();
    }
    SteenrodStatus::Ok
}

/// Render basis element `index` of degree `degree` as a new string.
///
/// # Safety
/// `kernel` must be a live handle; `out` must be writable. The string must be
/// released with [`steenrod_string_free`].
#[no_mangle]
pub unsafe extern "C" fn steenrod_kernel_basis_element(
    kernel: *const SteenrodKernel,
    degree: usize,
    index: usize,
    out: *mut *mut c_char,
) -> SteenrodStatus {
    let Some(kernel) = kernel.as_ref() else {
        return fail(SteenrodStatus::NullPointer, "kernel is null");
    };
    if out.is_null() {
        return fail(SteenrodStatus::NullPointer, "out is null");
    }
    match kernel.basis.get(degree).and_then(|b| b.get(index)) {
        Some(s) => {
            *out = s.clone().into_raw();
            SteenrodStatus::Ok
        }
        None => fail(SteenrodStatus::OutOfRange, format!("no basis element {index} in degree {degree}")),
    }
}

/// Release a kernel. Null is ignored.
///
/// # Safety
/// `kernel` must be null or a live handle not used afterwards.
#[no_mangle]
pub unsafe extern "C" fn steenrod_kernel_free(kernel: *mut SteenrodKernel) {
    if !kernel.is_null() {
        drop(Box::from_raw(kernel));
    }
}

/// Whether the weighted power sums with coefficients `a` (comma-separated
/// rationals) form a regular sequence, i.e. no nonempty subset of `a` sums
/// to zero.
///
/// # Safety
/// `a` must be NUL-terminated; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn steenrod_is_regular(a: *const c_char, out: *mut bool) -> SteenrodStatus {
    guard(|| {
        if out.is_null() {
            return fail(SteenrodStatus::NullPointer, "out is null");
        }
        let a = try_status!(rationals(try_status!(req_str(a, "a"))));
        *out = subset_sum_regularity(&a).0;
        SteenrodStatus::Ok
    })
}

/// Run a named experiment (`hilbert`, `frobenius`, `tilde-decomp`,
/// `q-layers`, `coeff-equality`, `psi-basis`, `garnir-bound`, `regseq`,
/// `diagonal`, `wood-basis`). Null strings take the command-line defaults;
/// a negative `cap` means the default cap.
///
/// # Safety
/// String arguments must be null or NUL-terminated; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn steenrod_experiment_run(
    command: *const c_char,
    n: usize,
    family: *const c_char,
    q: *const c_char,
    a: *const c_char,
    b: *const c_char,
    k: usize,
    cap: i64,
    seed: u64,
    out: *mut *mut SteenrodReport,
) -> SteenrodStatus {
    guard(|| {
        if out.is_null() {
            return fail(SteenrodStatus::NullPointer, "out is null");
        }
        let command = try_status!(try_status!(req_str(command, "command")).parse::<Command>().map_err(from_lib));
        let mut config = ExperimentConfig::new(command, n);
        if let Some(f) = try_status!(opt_str(family)) {
            config.family = try_status!(f.parse().map_err(from_lib));
        }
        if let Some(q) = try_status!(opt_str(q)) {
            config.q = try_status!(q.parse().map_err(from_lib));
        }
        if let Some(a) = try_status!(opt_str(a)) {
            config.a = Some(try_status!(a.parse().map_err(from_lib)));
        }
        if let Some(b) = try_status!(opt_str(b)) {
            config.b = Some(try_status!(rationals(b)));
        }
        config.k = k.max(1);
        config.cap = usize::try_from(cap).ok();
        config.seed = seed;
        let report = try_status!(run(&config).map_err(from_lib));
        *out = Box::into_raw(Box::new(SteenrodReport { report }));
        SteenrodStatus::Ok
    })
}

/// Whether every check in the report passed; false for null.
///
/// # Safety
/// `report` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn steenrod_report_passed(report: *const SteenrodReport) -> bool {
    report.as_ref().is_some_and(|r| r.report.passed())
}

/// Render a report as `text`, `json` or `csv` into a new string.
///
/// # Safety
/// `report` must be a live handle; `format` null or NUL-terminated; `out`
/// writable. The string must be released with [`steenrod_string_free`].
#[no_mangle]
pub unsafe extern "C" fn steenrod_report_render(
    report: *const SteenrodReport,
    format: *const c_char,
    out: *mut *mut c_char,
) -> SteenrodStatus {
    guard(|| {
        let Some(report) = report.as_ref() else {
            return fail(SteenrodStatus::NullPointer, "report is null");
        };
        if out.is_null() {
            return fail(SteenrodStatus::NullPointer, "out is null");
        }
        let format = match try_status!(opt_str(format)) {
            Some(f) => try_status!(f.parse::<Format>().map_err(from_lib)),
            None => Format::Text,
        };
        *out = to_c_string(report.report.render(format));
        SteenrodStatus::Ok
    })
}

/// Release a report. Null is ignored.
///
/// # Safety
/// `report` must be null or a live handle not used afterwards.
#[no_mangle]
pub unsafe extern "C" fn steenrod_report_free(report: *mut SteenrodReport) {
    if !report.is_null() {
        drop(Box::from_raw(report));
    }
}
