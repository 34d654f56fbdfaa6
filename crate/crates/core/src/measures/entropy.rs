use super::divergence::TERM_FLOOR;
use super::qcalc::EntropicIndex;
use crate::states::DensityMatrix;

/// `-Tr(rho ln rho)` in nats, with `0 ln 0 = 0`.
pub fn von_neumann_entropy(rho: &DensityMatrix) -> f64 {
    let s: f64 = rho
        .eigenvalues()
        .iter()
        .filter(|&&r| r > TERM_FLOOR)
        .map(|&r| -r * r.ln())
        .sum();
    s.max(0.0)
}

/// Tsallis entropy `(Tr rho^q - 1) / (1 - q)`.
pub fn tsallis_entropy(rho: &DensityMatrix, q: EntropicIndex) -> f64 {
    let tr: f64 = rho.eigenvalues().iter().map(|&r| r.powf(q.value())).sum();
    ((tr - 1.0) / q.nonadditivity()).max(0.0)
}
