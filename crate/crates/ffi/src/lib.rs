//! C ABI over the `qdiv` library.
//!
//! States cross the boundary as opaque handles (`QdivDensity`, `QdivPure`)
//! created by the constructor functions and released with the matching
//! `*_free`. Every fallible function returns a [`QdivStatus`]; on failure a
//! message is available from [`qdiv_last_error_message`] on the same thread
//! until the next failing call. Scalar results are written through out
//! pointers. Complex data is passed as interleaved `(re, im)` doubles.
//!
//! The header `include/qdiv.h` is regenerated by `build.rs`.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};

use qdiv::measures::{self, EntropicIndex};
use qdiv::spectral::ComplexMatrix;
use qdiv::states::{self, BellState, DensityMatrix, PureState, WernerParameter};
use qdiv::Complex64;

/// Opaque validated density matrix.
pub struct QdivDensity(DensityMatrix);

/// Opaque normalized state vector.
pub struct QdivPure(PureState);

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum QdivStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidArgument = 2,
    NotHermitian = 3,
    NotPositive = 4,
    TraceNotOne = 5,
    NotNormalized = 6,
    OutOfRange = 7,
    DimensionMismatch = 8,
    NoConvergence = 9,
    DomainError = 10,
    ZeroPoint = 11,
    BufferTooSmall = 12,
    Panic = 13,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum QdivBellKind {
    PsiMinus = 0,
    PsiPlus = 1,
    PhiPlus = 2,
    PhiMinus = 3,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

struct Failure(QdivStatus, String);

impl From<qdiv::Error> for Failure {
    fn from(e: qdiv::Error) -> Self {
        use qdiv::Error::*;
        let status = match e {
            NotHermitian(_) => QdivStatus::NotHermitian,
            NoConvergence { .. } => QdivStatus::NoConvergence,
            DomainError(_) => QdivStatus::DomainError,
            NotPositive(_) => QdivStatus::NotPositive,
            TraceNotOne(_) => QdivStatus::TraceNotOne,
            NotNormalized(_) => QdivStatus::NotNormalized,
            OutOfRange { .. } => QdivStatus::OutOfRange,
            DimensionMismatch(..) => QdivStatus::DimensionMismatch,
            ZeroPoint => QdivStatus::ZeroPoint,
            Shape(_) | NonFinite => QdivStatus::InvalidArgument,
        };
        Failure(status, e.to_string())
    }
}

type FfiResult<T> = Result<T, Failure>;

fn run(body: impl FnOnce() -> FfiResult<()>) -> QdivStatus {
    let outcome = catch_unwind(AssertUnwindSafe(body))
        .unwrap_or_else(|_| Err(Failure(QdivStatus::Panic, "internal panic".into())));
    match outcome {
        Ok(()) => QdivStatus::Ok,
        Err(Failure(status, message)) => {
            let message = CString::new(message.replace('\0', " ")).expect("NULs removed");
            LAST_ERROR.with(|slot| *slot.borrow_mut() = Some(message));
            status
        }
    }
}

fn null(name: &str) -> Failure {
    Failure(QdivStatus::NullPointer, format!("{name} is null"))
}

unsafe fn handle<'a, T>(ptr: *const T, name: &str) -> FfiResult<&'a T> {
    unsafe { ptr.as_ref() }.ok_or_else(|| null(name))
}

unsafe fn write_out<T>(out: *mut T, value: T) -> FfiResult<()> {
    if out.is_null() {
        return Err(null("out"));
    }
    unsafe { out.write(value) };
    Ok(())
}

unsafe fn read_complex(ptr: *const f64, count: usize) -> FfiResult<Vec<Complex64>> {
    if ptr.is_null() {
        return Err(null("entries"));
    }
    let raw = unsafe { std::slice::from_raw_parts(ptr, 2 * count) };
    Ok(raw.chunks_exact(2).map(|c| Complex64::new(c[0], c[1])).collect())
}

unsafe fn write_buffer(out: *mut f64, len: usize, values: impl ExactSizeIterator<Item = f64>) -> FfiResult<()> {
    if out.is_null() {
        return Err(null("out"));
    }
    if len < values.len() {
        return Err(Failure(
            QdivStatus::BufferTooSmall,
            format!("buffer holds {len} doubles, need {}", values.len()),
        ));
    }
    for (i, v) in values.enumerate() {
        unsafe { out.add(i).write(v) };
    }
    Ok(())
}

fn index(q: f64) -> FfiResult<EntropicIndex> {
    Ok(EntropicIndex::new(q)?)
}

fn boxed_density(rho: DensityMatrix) -> *mut QdivDensity {
    Box::into_raw(Box::new(QdivDensity(rho)))
}

fn boxed_pure(psi: PureState) -> *mut QdivPure {
    Box::into_raw(Box::new(QdivPure(psi)))
}

/// Message of the last failed call on this thread, or NULL.
/// The pointer stays valid until the next failing call on the same thread.
#[no_mangle]
pub extern "C" fn qdiv_last_error_message() -> *const c_char {
    LAST_ERROR.with(|slot| slot.borrow().as_ref().map_or(std::ptr::null(), |m| m.as_ptr()))
}

/// Library version as a static NUL-terminated string.
#[no_mangle]
pub extern "C" fn qdiv_version() -> *const c_char {
    static VERSION: &CStr = match CStr::from_bytes_with_nul(concat!(env!("CARGO_PKG_VERSION"), "\0").as_bytes()) {
        Ok(v) => v,
        Err(_) => panic!("version contains NUL"),
    };
    VERSION.as_ptr()
}

// ---- density matrices ----

/// Validates a `dim x dim` row-major matrix given as `2 * dim * dim` interleaved doubles.
///
/// # Safety
/// `entries` must point to `2 * dim * dim` readable doubles; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn qdiv_density_from_entries(
    dim: usize,
    entries: *const f64,
    out: *mut *mut QdivDensity,
) -> QdivStatus {
    run(|| {
        let data = unsafe { read_complex(entries, dim.saturating_mul(dim))? };
        let rho = states::density_from_matrix(ComplexMatrix::new(dim, data)?)?;
        unsafe { write_out(out, boxed_density(rho)) }
    })
}

/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn qdiv_density_maximally_mixed(dim: usize, out: *mut *mut QdivDensity) -> QdivStatus {
    run(|| unsafe { write_out(out, boxed_density(states::maximally_mixed(dim)?)) })
}

/// Werner state with singlet weight `f` in `[1/4, 1]`.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn qdiv_density_werner(f: f64, out: *mut *mut QdivDensity) -> QdivStatus {
    run(|| {
        let rho = states::werner_state(WernerParameter::new(f)?);
        unsafe { write_out(out, boxed_density(rho)) }
    })
}

/// Seeded Hilbert-Schmidt random state.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn qdiv_density_random(dim: usize, seed: u64, out: *mut *mut QdivDensity) -> QdivStatus {
    run(|| unsafe { write_out(out, boxed_density(states::random_density(dim, seed)?)) })
}

/// Projector `|psi><psi|`.
///
/// # Safety
/// `psi` must be a live handle or NULL; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn qdiv_density_from_pure(psi: *const QdivPure, out: *mut *mut QdivDensity) -> QdivStatus {
    run(|| {
        let psi = unsafe { handle(psi, "psi")? };
        unsafe { write_out(out, boxed_density(states::projector(&psi.0))) }
    })
}

/// `a ⊗ b`.
///
/// # Safety
/// `a`, `b` must be live handles or NULL; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn qdiv_density_tensor(
    a: *const QdivDensity,
    b: *const QdivDensity,
    out: *mut *mut QdivDensity,
) -> QdivStatus {
    run(|| {
        let (a, b) = unsafe { (handle(a, "a")?, handle(b, "b")?) };
        unsafe { write_out(out, boxed_density(a.0.tensor(&b.0)?)) }
    })
}

/// Dimension of the state, or 0 for NULL.
///
/// # Safety
/// `rho` must be a live handle or NULL.
#[no_mangle]
pub unsafe extern "C" fn qdiv_density_dim(rho: *const QdivDensity) -> usize {
    unsafe { rho.as_ref() }.map_or(0, |r| r.0.dim())
}

/// Writes the `dim` ascending eigenvalues into `out` (capacity `len`).
///
/// # Safety
/// `rho` must be a live handle or NULL; `out` must have room for `len` doubles.
#[no_mangle]
pub unsafe extern "C" fn qdiv_density_eigenvalues(rho: *const QdivDensity, out: *mut f64, len: usize) -> QdivStatus {
    run(|| {
        let rho = unsafe { handle(rho, "rho")? };
        unsafe { write_buffer(out, len, rho.0.eigenvalues().iter().copied()) }
    })
}

/// Writes the row-major matrix as `2 * dim * dim` interleaved doubles into `out` (capacity `len`).
///
/// # Safety
/// `rho` must be a live handle or NULL; `out` must have room for `len` doubles.
#[no_mangle]
pub unsafe extern "C" fn qdiv_density_entries(rho: *const QdivDensity, out: *mut f64, len: usize) -> QdivStatus {
    run(|| {
        let rho = unsafe { handle(rho, "rho")? };
        let flat: Vec<f64> = rho.0.matrix().entries().iter().flat_map(|z| [z.re, z.im]).collect();
        unsafe { write_buffer(out, len, flat.into_iter()) }
    })
}

/// # Safety
/// `rho` must be NULL or a handle not yet freed.
#[no_mangle]
pub unsafe extern "C" fn qdiv_density_free(rho: *mut QdivDensity) {
    if !rho.is_null() {
        drop(unsafe { Box::from_raw(rho) });
    }
}

// ---- pure states ----

/// Normalized vector from `2 * dim` interleaved doubles; rejects norms off by more than 1e-10.
///
/// # Safety
/// `amplitudes` must point to `2 * dim` readable doubles; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn qdiv_pure_from_amplitudes(
    dim: usize,
    amplitudes: *const f64,
    out: *mut *mut QdivPure,
) -> QdivStatus {
    run(|| {
        let data = unsafe { read_complex(amplitudes, dim)? };
        unsafe { write_out(out, boxed_pure(PureState::new(data)?)) }
    })
}

/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn qdiv_pure_bell(kind: QdivBellKind, out: *mut *mut QdivPure) -> QdivStatus {
    let kind = match kind {
        QdivBellKind::PsiMinus => BellState::PsiMinus,
        QdivBellKind::PsiPlus => BellState::PsiPlus,
        QdivBellKind::PhiPlus => BellState::PhiPlus,
        QdivBellKind::PhiMinus => BellState::PhiMinus,
    };
    run(|| unsafe { write_out(out, boxed_pure(states::bell_state(kind))) })
}

/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn qdiv_pure_random(dim: usize, seed: u64, out: *mut *mut QdivPure) -> QdivStatus {
    run(|| unsafe { write_out(out, boxed_pure(states::random_pure(dim, seed)?)) })
}

/// # Safety
/// `psi` must be a live handle or NULL.
#[no_mangle]
pub unsafe extern "C" fn qdiv_pure_dim(psi: *const QdivPure) -> usize {
    unsafe { psi.as_ref() }.map_or(0, |p| p.0.dim())
}

/// # Safety
/// `psi` must be NULL or a handle not yet freed.
#[no_mangle]
pub unsafe extern "C" fn qdiv_pure_free(psi: *mut QdivPure) {
    if !psi.is_null() {
        drop(unsafe { Box::from_raw(psi) });
    }
}

// ---- measures ----

/// Fidelity `F[sigma, rho]`.
///
/// # Safety
/// `sigma`, `rho` must be live handles or NULL; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn qdiv_fidelity(sigma: *const QdivDensity, rho: *const QdivDensity, out: *mut f64) -> QdivStatus {
    run(|| {
        let (sigma, rho) = unsafe { (handle(sigma, "sigma")?, handle(rho, "rho")?) };
        unsafe { write_out(out, measures::fidelity(&sigma.0, &rho.0)?) }
    })
}

/// Squared Bures distance `2 - 2 sqrt(F)`.
///
/// # Safety
/// `sigma`, `rho` must be live handles or NULL; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn qdiv_bures_metric_sq(sigma: *const QdivDensity, rho: *const QdivDensity, out: *mut f64) -> QdivStatus {
    run(|| {
        let (sigma, rho) = unsafe { (handle(sigma, "sigma")?, handle(rho, "rho")?) };
        unsafe { write_out(out, measures::bures_metric_sq(&sigma.0, &rho.0)?) }
    })
}

/// Quantum KL divergence in nats; `INFINITY` when the support of `rho` exceeds that of `sigma`.
///
/// # Safety
/// `rho`, `sigma` must be live handles or NULL; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn qdiv_kl_divergence(rho: *const QdivDensity, sigma: *const QdivDensity, out: *mut f64) -> QdivStatus {
    run(|| {
        let (rho, sigma) = unsafe { (handle(rho, "rho")?, handle(sigma, "sigma")?) };
        unsafe { write_out(out, measures::kl_divergence(&rho.0, &sigma.0)?.to_f64()) }
    })
}

/// q-divergence from matrix powers.
///
/// # Safety
/// `rho`, `sigma` must be live handles or NULL; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn qdiv_q_divergence(
    rho: *const QdivDensity,
    sigma: *const QdivDensity,
    q: f64,
    out: *mut f64,
) -> QdivStatus {
    run(|| {
        let (rho, sigma) = unsafe { (handle(rho, "rho")?, handle(sigma, "sigma")?) };
        let value = measures::q_divergence(&rho.0, &sigma.0, index(q)?)?;
        unsafe { write_out(out, value) }
    })
}

/// q-divergence from the eigenbasis double sum.
///
/// # Safety
/// `rho`, `sigma` must be live handles or NULL; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn qdiv_q_divergence_eigensum(
    rho: *const QdivDensity,
    sigma: *const QdivDensity,
    q: f64,
    out: *mut f64,
) -> QdivStatus {
    run(|| {
        let (rho, sigma) = unsafe { (handle(rho, "rho")?, handle(sigma, "sigma")?) };
        let value = measures::q_divergence_eigensum(&rho.0, &sigma.0, index(q)?)?;
        unsafe { write_out(out, value) }
    })
}

/// q-divergence from the Jackson derivative.
///
/// # Safety
/// `rho`, `sigma` must be live handles or NULL; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn qdiv_q_divergence_jackson(
    rho: *const QdivDensity,
    sigma: *const QdivDensity,
    q: f64,
    out: *mut f64,
) -> QdivStatus {
    run(|| {
        let (rho, sigma) = unsafe { (handle(rho, "rho")?, handle(sigma, "sigma")?) };
        let value = measures::q_divergence_jackson(&rho.0, &sigma.0, index(q)?)?;
        unsafe { write_out(out, value) }
    })
}

/// `(1 - <psi|rho^q|psi>) / (1 - q)`.
///
/// # Safety
/// `rho`, `psi` must be live handles or NULL; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn qdiv_q_divergence_pure_ref(
    rho: *const QdivDensity,
    psi: *const QdivPure,
    q: f64,
    out: *mut f64,
) -> QdivStatus {
    run(|| {
        let (rho, psi) = unsafe { (handle(rho, "rho")?, handle(psi, "psi")?) };
        let value = measures::q_divergence_pure_ref(&rho.0, &psi.0, index(q)?)?;
        unsafe { write_out(out, value) }
    })
}

/// `1 - |<phi|psi>|^2`.
///
/// # Safety
/// `phi`, `psi` must be live handles or NULL; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn qdiv_fubini_study_sq(phi: *const QdivPure, psi: *const QdivPure, out: *mut f64) -> QdivStatus {
    run(|| {
        let (phi, psi) = unsafe { (handle(phi, "phi")?, handle(psi, "psi")?) };
        unsafe { write_out(out, measures::fubini_study_sq(&phi.0, &psi.0)?) }
    })
}

/// # Safety
/// `rho` must be a live handle or NULL; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn qdiv_von_neumann_entropy(rho: *const QdivDensity, out: *mut f64) -> QdivStatus {
    run(|| {
        let rho = unsafe { handle(rho, "rho")? };
        unsafe { write_out(out, measures::von_neumann_entropy(&rho.0)) }
    })
}

/// # Safety
/// `rho` must be a live handle or NULL; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn qdiv_tsallis_entropy(rho: *const QdivDensity, q: f64, out: *mut f64) -> QdivStatus {
    run(|| {
        let rho = unsafe { handle(rho, "rho")? };
        unsafe { write_out(out, measures::tsallis_entropy(&rho.0, index(q)?)) }
    })
}

/// `(1 - F^q) / (1 - q)` for the Werner family against the singlet.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn qdiv_werner_q_divergence_closed(f: f64, q: f64, out: *mut f64) -> QdivStatus {
    run(|| {
        let value = measures::werner_q_divergence_closed(WernerParameter::new(f)?, index(q)?);
        unsafe { write_out(out, value) }
    })
}

/// q-logarithm `(x^(1-q) - 1) / (1 - q)`, `x >= 0`.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn qdiv_q_log(x: f64, q: f64, out: *mut f64) -> QdivStatus {
    run(|| {
        if x.is_nan() || x < 0.0 {
            return Err(Failure(QdivStatus::InvalidArgument, format!("q_log needs x >= 0, got {x}")));
        }
        unsafe { write_out(out, measures::q_log(x, index(q)?)) }
    })
}
