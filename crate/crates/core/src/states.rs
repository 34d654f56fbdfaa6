//! Validated quantum states and the generators used throughout the crate.
//!
//! Two-qubit states use the computational order `|↑↑>, |↑↓>, |↓↑>, |↓↓>`
//! with `↑` as index 0.
//!
//! Random ensembles are drawn from ChaCha20 (`rand_chacha::ChaCha20Rng`)
//! seeded with `seed_from_u64(seed)`; complex normal amplitudes use
//! `rand_distr::StandardNormal` for the real and imaginary parts in that
//! order, row-major. Changing any of this changes every golden output.

use std::fmt;
use std::str::FromStr;

use num_complex::Complex64;
use rand::SeedableRng;
use rand_chacha::ChaCha20Rng;
use rand_distr::{Distribution, StandardNormal};

use crate::error::{Error, Result};
use crate::spectral::{self, ComplexMatrix, SpectralDecomposition, HERMITIAN_TOL, ZERO_CLAMP};

/// Tolerance on `|Tr(rho) - 1|`.
pub const TRACE_TOL: f64 = 1e-10;
/// Tolerance on `| ||psi|| - 1 |`.
pub const NORM_TOL: f64 = 1e-10;
/// State eigenvalues at or below this are stored as exact zeros.
pub const EIGENVALUE_FLOOR: f64 = 1e-14;

/// Hermitian, positive semidefinite, unit-trace matrix with its cached spectrum.
///
/// The cached eigenvalues are clamped to `[0, 1]`, and anything at or below
/// [`EIGENVALUE_FLOOR`] is stored as an exact zero so that fractional powers
/// do not amplify round-off sitting in the kernel.
#[derive(Debug, Clone, PartialEq)]
pub struct DensityMatrix {
    matrix: ComplexMatrix,
    spectrum: SpectralDecomposition,
}

impl DensityMatrix {
    pub fn matrix(&self) -> &ComplexMatrix {
        &self.matrix
    }

    pub fn spectrum(&self) -> &SpectralDecomposition {
        &self.spectrum
    }

    pub fn dim(&self) -> usize {
        self.matrix.dim()
    }

    pub fn eigenvalues(&self) -> &[f64] {
        self.spectrum.eigenvalues()
    }

    /// `rho^p` through the cached spectrum, with `0^p = 0` for `p > 0` and `rho^0` the identity.
    pub fn power(&self, p: f64) -> ComplexMatrix {
        self.spectrum
            .map(|x| x.powf(p))
            .expect("powers of eigenvalues in [0, 1] are finite")
    }

    /// `Tr(rho^2)`.
    pub fn purity(&self) -> f64 {
        self.eigenvalues().iter().map(|x| x * x).sum()
    }

    /// `<psi| rho |psi>`.
    pub fn expectation(&self, psi: &PureState) -> Result<f64> {
        Ok(self.matrix.expectation(psi.amplitudes())?.re)
    }

    /// `self ⊗ other`, revalidated.
    pub fn tensor(&self, other: &DensityMatrix) -> Result<DensityMatrix> {
        density_from_matrix(spectral::tensor_product(&self.matrix, &other.matrix))
    }

    /// Eigenvector of the largest eigenvalue when the state has purity 1 within tolerance.
    pub fn as_pure(&self) -> Option<PureState> {
        if (self.purity() - 1.0).abs() > TRACE_TOL {
            return None;
        }
        let top = self.spectrum.eigenvectors().last()?.clone();
        PureState::normalized(top).ok()
    }
}

/// Validates `raw` as a density matrix and caches its spectrum.
pub fn density_from_matrix(raw: ComplexMatrix) -> Result<DensityMatrix> {
    let defect = raw.hermiticity_defect();
    if defect > HERMITIAN_TOL {
        return Err(Error::NotHermitian(defect));
    }
    let tr = spectral::trace(&raw).re;
    if (tr - 1.0).abs() > TRACE_TOL {
        return Err(Error::TraceNotOne(tr));
    }
    let matrix = raw.hermitian_part();
    let spectrum = spectral::eigh(&matrix)?;
    let min = spectrum.eigenvalues().first().copied().unwrap_or(0.0);
    if min < -ZERO_CLAMP {
        return Err(Error::NotPositive(min));
    }
    let spectrum = spectrum.with_eigenvalues(|x| {
        if x <= EIGENVALUE_FLOOR {
            0.0
        } else {
            x.min(1.0)
        }
    });
    Ok(DensityMatrix { matrix, spectrum })
}

/// `I/d`.
pub fn maximally_mixed(dim: usize) -> Result<DensityMatrix> {
    if dim == 0 {
        return Err(Error::Shape("dimension must be positive".into()));
    }
    density_from_matrix(ComplexMatrix::identity(dim).scale(Complex64::new(1.0 / dim as f64, 0.0)))
}

/// Normalized state vector.
#[derive(Debug, Clone, PartialEq)]
pub struct PureState {
    amplitudes: Vec<Complex64>,
}

impl PureState {
    /// Accepts `amplitudes` only if their Euclidean norm is within [`NORM_TOL`] of one.
    pub fn new(amplitudes: Vec<Complex64>) -> Result<Self> {
        check_amplitudes(&amplitudes)?;
        let norm = euclidean_norm(&amplitudes);
        if (norm - 1.0).abs() > NORM_TOL {
            return Err(Error::NotNormalized(norm));
        }
        Ok(Self { amplitudes })
    }

    /// Rescales `amplitudes` to unit norm. Fails on the zero vector.
    pub fn normalized(amplitudes: Vec<Complex64>) -> Result<Self> {
        check_amplitudes(&amplitudes)?;
        let norm = euclidean_norm(&amplitudes);
        if norm == 0.0 {
            return Err(Error::NotNormalized(0.0));
        }
        Ok(Self {
            amplitudes: amplitudes.into_iter().map(|z| z / norm).collect(),
        })
    }

    pub fn amplitudes(&self) -> &[Complex64] {
        &self.amplitudes
    }

    pub fn dim(&self) -> usize {
        self.amplitudes.len()
    }

    /// `<self|other>`.
    pub fn inner(&self, other: &PureState) -> Result<Complex64> {
        if self.dim() != other.dim() {
            return Err(Error::DimensionMismatch(self.dim(), other.dim()));
        }
        Ok(spectral::inner(&self.amplitudes, &other.amplitudes))
    }
}

fn check_amplitudes(amplitudes: &[Complex64]) -> Result<()> {
    if amplitudes.is_empty() {
        return Err(Error::Shape("state vector must be nonempty".into()));
    }
    if amplitudes.iter().any(|z| !z.re.is_finite() || !z.im.is_finite()) {
        return Err(Error::NonFinite);
    }
    Ok(())
}

fn euclidean_norm(v: &[Complex64]) -> f64 {
    v.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
}

/// `|psi><psi|`.
pub fn projector(psi: &PureState) -> DensityMatrix {
    let raw = ComplexMatrix::outer(psi.amplitudes(), psi.amplitudes())
        .expect("outer product of a finite vector with itself");
    density_from_matrix(raw).expect("projector of a normalized vector is a valid state")
}

/// The four Bell states.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BellState {
    PsiMinus,
    PsiPlus,
    PhiPlus,
    PhiMinus,
}

impl BellState {
    pub const ALL: [BellState; 4] = [
        BellState::PsiMinus,
        BellState::PsiPlus,
        BellState::PhiPlus,
        BellState::PhiMinus,
    ];
}

impl fmt::Display for BellState {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            BellState::PsiMinus => "psi-",
            BellState::PsiPlus => "psi+",
            BellState::PhiPlus => "phi+",
            BellState::PhiMinus => "phi-",
        })
    }
}

impl FromStr for BellState {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s {
            "psi-" => Ok(BellState::PsiMinus),
            "psi+" => Ok(BellState::PsiPlus),
            "phi+" => Ok(BellState::PhiPlus),
            "phi-" => Ok(BellState::PhiMinus),
            other => Err(format!("unknown Bell state '{other}' (expected psi-, psi+, phi+, phi-)")),
        }
    }
}

pub fn bell_state(kind: BellState) -> PureState {
    let h = std::f64::consts::FRAC_1_SQRT_2;
    let amps: [f64; 4] = match kind {
        BellState::PsiMinus => [0.0, h, -h, 0.0],
        BellState::PsiPlus => [0.0, h, h, 0.0],
        BellState::PhiPlus => [h, 0.0, 0.0, h],
        BellState::PhiMinus => [h, 0.0, 0.0, -h],
    };
    PureState {
        amplitudes: amps.iter().map(|&x| Complex64::new(x, 0.0)).collect(),
    }
}

/// Singlet weight `F` of a Werner state, restricted to `[1/4, 1]`.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd)]
pub struct WernerParameter(f64);

impl WernerParameter {
    pub fn new(f: f64) -> Result<Self> {
        if !(0.25..=1.0).contains(&f) {
            return Err(Error::OutOfRange {
                value: f,
                range: "[1/4, 1]",
            });
        }
        Ok(Self(f))
    }

    pub fn value(self) -> f64 {
        self.0
    }

    /// Werner states are separable exactly when `F <= 1/2`.
    pub fn is_separable(self) -> bool {
        self.0 <= 0.5
    }
}

/// `F |Ψ-><Ψ-| + (1 - F)/3 (|Ψ+><Ψ+| + |Φ+><Φ+| + |Φ-><Φ-|)`.
pub fn werner_state(p: WernerParameter) -> DensityMatrix {
    let f = p.value();
    let rest = (1.0 - f) / 3.0;
    let mut raw = ComplexMatrix::zeros(4);
    for kind in BellState::ALL {
        let weight = if kind == BellState::PsiMinus { f } else { rest };
        let amps = bell_state(kind);
        let proj = ComplexMatrix::outer(amps.amplitudes(), amps.amplitudes()).expect("dim 4");
        raw = raw.add(&proj.scale(Complex64::new(weight, 0.0))).expect("dim 4");
    }
    density_from_matrix(raw).expect("Werner states with F in [1/4, 1] are valid")
}

fn complex_normals(n: usize, seed: u64) -> Vec<Complex64> {
    let mut rng = ChaCha20Rng::seed_from_u64(seed);
    (0..n)
        .map(|_| {
            let re: f64 = StandardNormal.sample(&mut rng);
            let im: f64 = StandardNormal.sample(&mut rng);
            Complex64::new(re, im)
        })
        .collect()
}

/// Hilbert-Schmidt random state `G G^dagger / Tr(G G^dagger)` from a seeded Ginibre matrix `G`.
pub fn random_density(dim: usize, seed: u64) -> Result<DensityMatrix> {
    if dim == 0 {
        return Err(Error::Shape("dimension must be positive".into()));
    }
    let g = ComplexMatrix::new(dim, complex_normals(dim * dim, seed))?;
    let ggd = g.matmul(&g.adjoint())?;
    let tr = spectral::trace(&ggd).re;
    density_from_matrix(ggd.scale(Complex64::new(1.0 / tr, 0.0)))
}

/// Haar-random pure state from a seeded complex normal vector.
pub fn random_pure(dim: usize, seed: u64) -> Result<PureState> {
    if dim == 0 {
        return Err(Error::Shape("dimension must be positive".into()));
    }
    PureState::normalized(complex_normals(dim, seed))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64) -> Complex64 {
        Complex64::new(re, 0.0)
    }

    #[test]
    fn maximally_mixed_qubit() {
        let rho = density_from_matrix(ComplexMatrix::from_real_rows(&[&[0.5, 0.0], &[0.0, 0.5]])).unwrap();
        assert_eq!(rho.eigenvalues(), &[0.5, 0.5]);
    }

    #[test]
    fn pure_projector_is_valid() {
        let rho = density_from_matrix(ComplexMatrix::from_real_rows(&[&[1.0, 0.0], &[0.0, 0.0]])).unwrap();
        assert!((rho.purity() - 1.0).abs() < 1e-15);
    }

    #[test]
    fn trace_error() {
        let err = density_from_matrix(ComplexMatrix::from_real_rows(&[&[0.6, 0.0], &[0.0, 0.6]]));
        assert!(matches!(err, Err(Error::TraceNotOne(t)) if (t - 1.2).abs() < 1e-12));
    }

    #[test]
    fn negative_eigenvalue_error() {
        let err = density_from_matrix(ComplexMatrix::from_real_rows(&[&[1.5, 0.0], &[0.0, -0.5]]));
        assert!(matches!(err, Err(Error::NotPositive(_))));
    }

    #[test]
    fn non_hermitian_error() {
        let err = density_from_matrix(ComplexMatrix::from_real_rows(&[&[0.5, 0.2], &[0.0, 0.5]]));
        assert!(matches!(err, Err(Error::NotHermitian(_))));
    }

    #[test]
    fn projector_examples() {
        let up = PureState::new(vec![c(1.0), c(0.0)]).unwrap();
        assert_eq!(projector(&up).matrix(), &ComplexMatrix::from_diagonal(&[1.0, 0.0]));
        let h = std::f64::consts::FRAC_1_SQRT_2;
        let plus = PureState::new(vec![c(h), c(h)]).unwrap();
        let p = projector(&plus);
        for z in p.matrix().entries() {
            assert!((z - c(0.5)).norm() < 1e-15);
        }
    }

    #[test]
    fn pure_state_rejects_unnormalized() {
        assert!(matches!(PureState::new(vec![c(1.0), c(1.0)]), Err(Error::NotNormalized(_))));
        assert!(PureState::normalized(vec![c(0.0)]).is_err());
    }

    #[test]
    fn bell_amplitudes() {
        let h = std::f64::consts::FRAC_1_SQRT_2;
        assert_eq!(bell_state(BellState::PsiMinus).amplitudes(), &[c(0.0), c(h), c(-h), c(0.0)]);
        assert_eq!(bell_state(BellState::PhiPlus).amplitudes(), &[c(h), c(0.0), c(0.0), c(h)]);
        for s in ["psi-", "psi+", "phi+", "phi-"] {
            assert_eq!(s.parse::<BellState>().unwrap().to_string(), s);
        }
        assert!("psi".parse::<BellState>().is_err());
    }

    #[test]
    fn werner_range() {
        assert!(WernerParameter::new(0.2).is_err());
        assert!(WernerParameter::new(1.01).is_err());
        assert!(WernerParameter::new(0.5).unwrap().is_separable());
        assert!(!WernerParameter::new(0.51).unwrap().is_separable());
    }

    #[test]
    fn werner_examples() {
        let psi = bell_state(BellState::PsiMinus);
        let w1 = werner_state(WernerParameter::new(1.0).unwrap());
        assert!(w1.matrix().max_abs_diff(projector(&psi).matrix()).unwrap() < 1e-15);
        let w7 = werner_state(WernerParameter::new(0.7).unwrap());
        assert!((w7.expectation(&psi).unwrap() - 0.7).abs() < 1e-15);
    }

    #[test]
    fn random_generators_are_deterministic() {
        assert_eq!(random_density(4, 9).unwrap(), random_density(4, 9).unwrap());
        assert_ne!(random_density(4, 9).unwrap(), random_density(4, 10).unwrap());
        assert_eq!(random_pure(4, 3).unwrap(), random_pure(4, 3).unwrap());
        let one = random_density(1, 77).unwrap();
        assert!((one.matrix()[(0, 0)] - c(1.0)).norm() < 1e-15);
        assert!((random_pure(1, 5).unwrap().amplitudes()[0].norm() - 1.0).abs() < 1e-15);
        let v = random_pure(8, 11).unwrap();
        assert!((euclidean_norm(v.amplitudes()) - 1.0).abs() < 1e-12);
    }

    #[test]
    fn as_pure_recovers_vector() {
        let psi = random_pure(3, 4).unwrap();
        let back = projector(&psi).as_pure().unwrap();
        assert!((psi.inner(&back).unwrap().norm() - 1.0).abs() < 1e-12);
        assert!(maximally_mixed(2).unwrap().as_pure().is_none());
    }
}
