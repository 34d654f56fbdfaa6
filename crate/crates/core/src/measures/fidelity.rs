use crate::error::{Error, Result};
use crate::spectral;
use crate::states::{DensityMatrix, PureState, EIGENVALUE_FLOOR};

/// Fidelity `(Tr sqrt(sqrt(sigma) rho sqrt(sigma)))^2`, in `[0, 1]`.
///
/// Eigenvalues of the sandwiched operator at or below the state eigenvalue
/// floor are dropped before the square root.
pub fn fidelity(sigma: &DensityMatrix, rho: &DensityMatrix) -> Result<f64> {
    check_dims(sigma.dim(), rho.dim())?;
    let root = sigma.spectrum().map(f64::sqrt)?;
    let sandwich = root.matmul(rho.matrix())?.matmul(&root)?.hermitian_part();
    let spectrum = spectral::eigh(&sandwich)?;
    let sum: f64 = spectrum
        .eigenvalues()
        .iter()
        .filter(|&&mu| mu > EIGENVALUE_FLOOR)
        .map(|mu| mu.sqrt())
        .sum();
    Ok((sum * sum).clamp(0.0, 1.0))
}

/// Squared Bures distance `2 - 2 sqrt(F)`.
pub fn bures_metric_sq(sigma: &DensityMatrix, rho: &DensityMatrix) -> Result<f64> {
    let f = fidelity(sigma, rho)?;
    Ok((2.0 - 2.0 * f.sqrt()).max(0.0))
}

/// Squared Fubini-Study distance `1 - |<phi|psi>|^2`.
pub fn fubini_study_sq(phi: &PureState, psi: &PureState) -> Result<f64> {
    let overlap = phi.inner(psi)?.norm_sqr();
    Ok((1.0 - overlap).clamp(0.0, 1.0))
}

fn check_dims(a: usize, b: usize) -> Result<()> {
    if a != b {
        return Err(Error::DimensionMismatch(a, b));
    }
    Ok(())
}
