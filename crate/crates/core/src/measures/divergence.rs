//! Quantum KL divergence and the quantum q-divergence.
//!
//! The q-divergence has three public routes that never share code past the
//! cached state spectra, so each can serve as an oracle for the others:
//!
//! * [`q_divergence`]: `Tr[rho^q (rho^(1-q) - sigma^(1-q))] / (1 - q)` from matrix powers;
//! * [`q_divergence_eigensum`]: the double sum over both eigenbases;
//! * [`q_divergence_jackson`]: the Jackson derivative of `x -> Tr(rho^x sigma^(1-x))` at `x = 1`.

use std::fmt;

use super::qcalc::{jackson_derivative, EntropicIndex};
use crate::error::{Error, Result};
use crate::spectral::{self, SpectralDecomposition};
use crate::states::{DensityMatrix, PureState, WernerParameter};

/// Eigenvalues at or below this are outside the support.
pub const SUPPORT_CUTOFF: f64 = 1e-12;
/// Squared overlap with the kernel of `sigma` above which KL is infinite.
pub const KERNEL_OVERLAP_CUTOFF: f64 = 1e-10;
/// Eigenvalue terms at or below this are skipped in spectral sums.
pub const TERM_FLOOR: f64 = 1e-14;
/// Results in `[-NEGATIVE_READOUT_TOL, 0)` are reported as zero.
pub const NEGATIVE_READOUT_TOL: f64 = 1e-12;

/// Divergence that may be infinite.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum DivergenceValue {
    Finite(f64),
    Infinite,
}

impl DivergenceValue {
    pub fn is_infinite(self) -> bool {
        matches!(self, DivergenceValue::Infinite)
    }

    pub fn finite(self) -> Option<f64> {
        match self {
            DivergenceValue::Finite(x) => Some(x),
            DivergenceValue::Infinite => None,
        }
    }

    /// `f64::INFINITY` for the infinite case.
    pub fn to_f64(self) -> f64 {
        self.finite().unwrap_or(f64::INFINITY)
    }
}

impl fmt::Display for DivergenceValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DivergenceValue::Finite(x) => write!(f, "{x}"),
            DivergenceValue::Infinite => f.write_str("inf"),
        }
    }
}

fn readout(x: f64) -> f64 {
    if (-NEGATIVE_READOUT_TOL..0.0).contains(&x) {
        0.0
    } else {
        x
    }
}

fn check_dims(a: usize, b: usize) -> Result<()> {
    if a != b {
        return Err(Error::DimensionMismatch(a, b));
    }
    Ok(())
}

/// `|<a|b>|^2` for every eigenvector pair; rows follow `left`, columns `right`.
fn overlaps(left: &SpectralDecomposition, right: &SpectralDecomposition) -> Vec<Vec<f64>> {
    left.eigenvectors()
        .iter()
        .map(|a| {
            right
                .eigenvectors()
                .iter()
                .map(|b| spectral::inner(a, b).norm_sqr())
                .collect()
        })
        .collect()
}

/// `Tr[rho (ln rho - ln sigma)]` in nats, or `Infinite` when the support of
/// `rho` is not contained in the support of `sigma`.
pub fn kl_divergence(rho: &DensityMatrix, sigma: &DensityMatrix) -> Result<DivergenceValue> {
    check_dims(rho.dim(), sigma.dim())?;
    let r = rho.eigenvalues();
    let s = sigma.eigenvalues();
    let ov = overlaps(rho.spectrum(), sigma.spectrum());

    for (a, &ra) in r.iter().enumerate() {
        if ra <= SUPPORT_CUTOFF {
            continue;
        }
        let in_kernel: f64 = s
            .iter()
            .enumerate()
            .filter(|(_, &sb)| sb <= SUPPORT_CUTOFF)
            .map(|(b, _)| ov[a][b])
            .sum();
        if in_kernel > KERNEL_OVERLAP_CUTOFF {
            return Ok(DivergenceValue::Infinite);
        }
    }

    let mut total = 0.0;
    for (a, &ra) in r.iter().enumerate() {
        if ra <= TERM_FLOOR {
            continue;
        }
        for (b, &sb) in s.iter().enumerate() {
            if sb <= SUPPORT_CUTOFF {
                continue;
            }
            total += ov[a][b] * ra * (ra.ln() - sb.ln());
        }
    }
    Ok(DivergenceValue::Finite(readout(total)))
}

/// Quantum q-divergence from matrix powers:
/// `Tr[rho^q (rho^(1-q) - sigma^(1-q))] / (1 - q)`. Finite for every state pair.
pub fn q_divergence(rho: &DensityMatrix, sigma: &DensityMatrix, q: EntropicIndex) -> Result<f64> {
    check_dims(rho.dim(), sigma.dim())?;
    let p = q.nonadditivity();
    let rho_q = rho.power(q.value());
    let diff = rho.power(p).sub(&sigma.power(p))?;
    let tr = rho_q.trace_product(&diff)?.re;
    Ok(readout(tr / p))
}

/// Quantum q-divergence as a double sum over the eigenbases of `rho` and `sigma`:
/// `sum_{a,b} |<a|b>|^2 r_a [1 - (s_b / r_a)^(1-q)] / (1 - q)`.
pub fn q_divergence_eigensum(
    rho: &DensityMatrix,
    sigma: &DensityMatrix,
    q: EntropicIndex,
) -> Result<f64> {
    check_dims(rho.dim(), sigma.dim())?;
    let p = q.nonadditivity();
    let ov = overlaps(rho.spectrum(), sigma.spectrum());
    let mut total = 0.0;
    for (a, &ra) in rho.eigenvalues().iter().enumerate() {
        if ra <= TERM_FLOOR {
            continue;
        }
        for (b, &sb) in sigma.eigenvalues().iter().enumerate() {
            let bracket = if sb <= TERM_FLOOR {
                1.0
            } else {
                1.0 - (sb / ra).powf(p)
            };
            total += ov[a][b] * ra * bracket;
        }
    }
    Ok(readout(total / p))
}

/// Quantum q-divergence as the Jackson q-derivative of `g(x) = Tr(rho^x sigma^(1-x))`
/// at `x = 1`, where `sigma^0` is the identity so that `g(1) = 1`.
pub fn q_divergence_jackson(
    rho: &DensityMatrix,
    sigma: &DensityMatrix,
    q: EntropicIndex,
) -> Result<f64> {
    check_dims(rho.dim(), sigma.dim())?;
    let g = |x: f64| {
        rho.power(x)
            .trace_product(&sigma.power(1.0 - x))
            .expect("dimensions checked")
            .re
    };
    Ok(readout(jackson_derivative(g, 1.0, q)?))
}

/// q-divergence against a pure reference: `(1 - <psi| rho^q |psi>) / (1 - q)`.
pub fn q_divergence_pure_ref(rho: &DensityMatrix, psi: &PureState, q: EntropicIndex) -> Result<f64> {
    check_dims(rho.dim(), psi.dim())?;
    let expectation = rho.power(q.value()).expectation(psi.amplitudes())?.re;
    Ok(readout((1.0 - expectation) / q.nonadditivity()))
}

/// Closed form for a Werner state against the singlet: `(1 - F^q) / (1 - q)`.
pub fn werner_q_divergence_closed(f: WernerParameter, q: EntropicIndex) -> f64 {
    (1.0 - f.value().powf(q.value())) / q.nonadditivity()
}

/// `K(r1⊗r2 || s1⊗s2) - K(r1||s1) - K(r2||s2) - (q - 1) K(r1||s1) K(r2||s2)`.
pub fn nonadditivity_defect(
    rho1: &DensityMatrix,
    sigma1: &DensityMatrix,
    rho2: &DensityMatrix,
    sigma2: &DensityMatrix,
    q: EntropicIndex,
) -> Result<f64> {
    check_dims(rho1.dim(), sigma1.dim())?;
    check_dims(rho2.dim(), sigma2.dim())?;
    let k1 = q_divergence(rho1, sigma1, q)?;
    let k2 = q_divergence(rho2, sigma2, q)?;
    let joint = q_divergence(&rho1.tensor(rho2)?, &sigma1.tensor(sigma2)?, q)?;
    Ok(joint - k1 - k2 - (q.value() - 1.0) * k1 * k2)
}
