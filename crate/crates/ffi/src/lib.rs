//! C ABI over the `bihom` workbench.
//!
//! Algebras and representations cross the boundary as opaque handles. Every
//! fallible call returns a [`BihomStatus`]; on failure a message is available
//! from [`bihom_last_error`] on the calling thread. Strings returned by the
//! library must be released with [`bihom_string_free`].

use std::cell::RefCell;
use std::ffi::{CStr, CString};
use std::panic::{self, AssertUnwindSafe};
use std::ptr;

use bihom::io::{self, AnyAlgebra};
use bihom::{BihomLieAlgebra, Error, Representation};
use libc::{c_char, c_int, size_t};

/// Status codes returned by every fallible function.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BihomStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    Parse = 3,
    InvalidInput = 4,
    InvalidParams = 5,
    DimensionMismatch = 6,
    NotRegular = 7,
    InvalidRepresentation = 8,
    InvalidCocycleCompatibility = 9,
    NotCohomologous = 10,
    DegreeOutOfRange = 11,
    SingularMatrix = 12,
    InternalInvariantViolation = 13,
    Panic = 14,
}

/// Opaque Bihom-Lie algebra.
pub struct BihomAlgebra(BihomLieAlgebra);

/// Opaque representation of a Bihom-Lie algebra.
pub struct BihomRepresentation(Representation);

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(message: String) {
    let c = CString::new(message.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|slot| *slot.borrow_mut() = Some(c));
}

fn status_of(e: &Error) -> BihomStatus {
    match e {
        Error::SingularMatrix => BihomStatus::SingularMatrix,
        Error::DimensionMismatch { .. } => BihomStatus::DimensionMismatch,
        Error::NotRegular(_) => BihomStatus::NotRegular,
        Error::InvalidInput(_) => BihomStatus::InvalidInput,
        Error::InvalidRepresentation(_) => BihomStatus::InvalidRepresentation,
        Error::InvalidCocycleCompatibility(_) => BihomStatus::InvalidCocycleCompatibility,
        Error::NotCohomologous => BihomStatus::NotCohomologous,
        Error::DegreeOutOfRange { .. } => BihomStatus::DegreeOutOfRange,
        Error::InvalidParams(_) => BihomStatus::InvalidParams,
        Error::Parse { .. } => BihomStatus::Parse,
        Error::InternalInvariantViolation(_) => BihomStatus::InternalInvariantViolation,
    }
}

struct Failure(BihomStatus, String);

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure(status_of(&e), e.to_string())
    }
}

fn null(what: &str) -> Failure {
    Failure(BihomStatus::NullPointer, format!("{what} is null"))
}

fn guard(f: impl FnOnce() -> Result<(), Failure>) -> BihomStatus {
    match panic::catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => BihomStatus::Ok,
        Ok(Err(Failure(status, message))) => {
            set_error(message);
            status
        }
        Err(_) => {
            set_error("panic inside bihom".into());
            BihomStatus::Panic
        }
    }
}

unsafe fn read_str<'a>(p: *const c_char, what: &str) -> Result<&'a str, Failure> {
    if p.is_null() {
        return Err(null(what));
    }
    CStr::from_ptr(p)
        .to_str()
        .map_err(|_| Failure(BihomStatus::InvalidUtf8, format!("{what} is not valid UTF-8")))
}

unsafe fn handle<'a, T>(p: *const T, what: &str) -> Result<&'a T, Failure> {
    p.as_ref().ok_or_else(|| null(what))
}

unsafe fn write<T>(out: *mut T, value: T, what: &str) -> Result<(), Failure> {
    if out.is_null() {
        return Err(null(what));
    }
    out.write(value);
    Ok(())
}

fn into_c_string(s: String) -> *mut c_char {
    CString::new(s).map_or(ptr::null_mut(), CString::into_raw)
}

fn boxed<T>(value: T) -> *mut T {
    Box::into_raw(Box::new(value))
}

/// Message of the last failed call on this thread, or NULL. Valid until the
/// next failing call on the same thread.
#[no_mangle]
pub extern "C" fn bihom_last_error() -> *const c_char {
    LAST_ERROR.with(|slot| slot.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// # Safety
/// `s` must be NULL or a string returned by this library that was not yet freed.
#[no_mangle]
pub unsafe extern "C" fn bihom_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Parses a Bihom-Lie algebra from JSON. A Bihom-associative file is turned
/// into its commutator algebra.
///
/// # Safety
/// `json` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn bihom_algebra_from_json(json: *const c_char, out: *mut *mut BihomAlgebra) -> BihomStatus {
    guard(|| {
        let text = read_str(json, "json")?;
        let lie = match io::parse_algebra(text)? {
            AnyAlgebra::Lie(l) => l,
            AnyAlgebra::Associative(a) => bihom::commutator_bihom_lie(&a)?,
        };
        write(out, boxed(BihomAlgebra(lie)), "out")
    })
}

/// # Safety
/// `alg` must be a live handle; `out` must be writable. Free the result with
/// [`bihom_string_free`].
#[no_mangle]
pub unsafe extern "C" fn bihom_algebra_to_json(alg: *const BihomAlgebra, out: *mut *mut c_char) -> BihomStatus {
    guard(|| {
        let alg = handle(alg, "alg")?;
        write(out, into_c_string(io::emit_lie(&alg.0)), "out")
    })
}

/// # Safety
/// `alg` must be NULL or a handle not yet freed.
#[no_mangle]
pub unsafe extern "C" fn bihom_algebra_free(alg: *mut BihomAlgebra) {
    if !alg.is_null() {
        drop(Box::from_raw(alg));
    }
}

/// # Safety
/// `alg` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn bihom_algebra_dim(alg: *const BihomAlgebra, out: *mut size_t) -> BihomStatus {
    guard(|| write(out, handle(alg, "alg")?.0.dim(), "out"))
}

/// Runs the Bihom-Lie axiom checks. `passed` receives 1 when every axiom
/// holds; `report` (optional) receives the printed report.
///
/// # Safety
/// `alg` must be a live handle; `passed` must be writable; `report` may be NULL.
#[no_mangle]
pub unsafe extern "C" fn bihom_algebra_check(
    alg: *const BihomAlgebra,
    passed: *mut c_int,
    report: *mut *mut c_char,
) -> BihomStatus {
    guard(|| {
        let r = bihom::check_bihom_lie(&handle(alg, "alg")?.0);
        write(passed, c_int::from(r.all_passed()), "passed")?;
        if !report.is_null() {
            report.write(into_c_string(r.to_string()));
        }
        Ok(())
    })
}

/// JSON for a named example; `params` is a comma-separated list such as
/// `"k=1,l=2"` and may be NULL or empty.
///
/// # Safety
/// `name` must be a NUL-terminated string, `params` NULL or NUL-terminated,
/// `out` writable.
#[no_mangle]
pub unsafe extern "C" fn bihom_example_json(
    name: *const c_char,
    params: *const c_char,
    out: *mut *mut c_char,
) -> BihomStatus {
    guard(|| {
        let name = read_str(name, "name")?;
        let params = if params.is_null() { "" } else { read_str(params, "params")? };
        let pairs: Vec<&str> = params.split(',').map(str::trim).filter(|s| !s.is_empty()).collect();
        let alg = bihom::examples::generate_example(name, &io::parse_params(&pairs)?)?;
        write(out, into_c_string(io::emit_algebra(&alg)), "out")
    })
}

/// Yau twist `{a, b} = [α a, β b]` of the bracket of `alg` by its own twists.
///
/// # Safety
/// `alg` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn bihom_yau_twist(alg: *const BihomAlgebra, out: *mut *mut BihomAlgebra) -> BihomStatus {
    guard(|| {
        let l = &handle(alg, "alg")?.0;
        let twisted = bihom::yau_twist(l.bracket_tensor(), l.alpha(), l.beta())?;
        write(out, boxed(BihomAlgebra(twisted)), "out")
    })
}

/// # Safety
/// Both handles must be live; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn bihom_direct_sum(
    a: *const BihomAlgebra,
    b: *const BihomAlgebra,
    out: *mut *mut BihomAlgebra,
) -> BihomStatus {
    guard(|| {
        let sum = bihom::direct_sum(&handle(a, "a")?.0, &handle(b, "b")?.0)?;
        write(out, boxed(BihomAlgebra(sum)), "out")
    })
}

/// Dimensions of the twisted derivation space and its inner part.
///
/// # Safety
/// `alg` must be a live handle; `der` and `inner` must be writable.
#[no_mangle]
pub unsafe extern "C" fn bihom_derivation_dims(
    alg: *const BihomAlgebra,
    k: i64,
    l: i64,
    der: *mut size_t,
    inner: *mut size_t,
) -> BihomStatus {
    guard(|| {
        let alg = &handle(alg, "alg")?.0;
        let d = bihom::derivation_space(alg, k, l)?.dim();
        let i = bihom::inner_derivation_space(alg, k, l)?.dim();
        write(der, d, "der")?;
        write(inner, i, "inner")
    })
}

/// # Safety
/// `alg` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn bihom_representation_trivial(
    alg: *const BihomAlgebra,
    out: *mut *mut BihomRepresentation,
) -> BihomStatus {
    guard(|| {
        let rep = bihom::trivial_representation(&handle(alg, "alg")?.0);
        write(out, boxed(BihomRepresentation(rep)), "out")
    })
}

/// Adjoint representation twisted by `α^s β^t`.
///
/// # Safety
/// `alg` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn bihom_representation_adjoint(
    alg: *const BihomAlgebra,
    s: i64,
    t: i64,
    out: *mut *mut BihomRepresentation,
) -> BihomStatus {
    guard(|| {
        let rep = bihom::adjoint_representation(&handle(alg, "alg")?.0, s, t)?;
        write(out, boxed(BihomRepresentation(rep)), "out")
    })
}

/// # Safety
/// `json` must be NUL-terminated; `alg` a live handle; `out` writable. Any
/// algebra reference inside the file is ignored in favour of `alg`.
#[no_mangle]
pub unsafe extern "C" fn bihom_representation_from_json(
    json: *const c_char,
    alg: *const BihomAlgebra,
    out: *mut *mut BihomRepresentation,
) -> BihomStatus {
    guard(|| {
        let rep = io::parse_representation(read_str(json, "json")?, &handle(alg, "alg")?.0)?;
        write(out, boxed(BihomRepresentation(rep)), "out")
    })
}

/// # Safety
/// `rep` must be NULL or a handle not yet freed.
#[no_mangle]
pub unsafe extern "C" fn bihom_representation_free(rep: *mut BihomRepresentation) {
    if !rep.is_null() {
        drop(Box::from_raw(rep));
    }
}

/// Semidirect product of the represented algebra with its module.
///
/// # Safety
/// `rep` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn bihom_semidirect_product(
    rep: *const BihomRepresentation,
    out: *mut *mut BihomAlgebra,
) -> BihomStatus {
    guard(|| {
        let l = bihom::semidirect_product(&handle(rep, "rep")?.0)?;
        write(out, boxed(BihomAlgebra(l)), "out")
    })
}

/// Dimensions of cocycles, coboundaries and cohomology in one degree.
///
/// # Safety
/// `rep` must be a live handle; the three outputs must be writable.
#[no_mangle]
pub unsafe extern "C" fn bihom_cohomology_dims(
    rep: *const BihomRepresentation,
    degree: size_t,
    dim_z: *mut size_t,
    dim_b: *mut size_t,
    dim_h: *mut size_t,
) -> BihomStatus {
    guard(|| {
        let r = bihom::cohomology(&handle(rep, "rep")?.0, degree)?;
        write(dim_z, r.dim_z, "dim_z")?;
        write(dim_b, r.dim_b, "dim_b")?;
        write(dim_h, r.dim_h, "dim_h")
    })
}
