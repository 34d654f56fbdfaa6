use proptest::prelude::*;
use qdiv::cli::{parse_state_file, write_state_document, ResolvedState};
use qdiv::measures::{
    fidelity, fubini_study_sq, q_divergence, tsallis_entropy, von_neumann_entropy, EntropicIndex,
};
use qdiv::spectral::{eigh, inner, matrix_function, tensor_product, ComplexMatrix};
use qdiv::states::{
    bell_state, density_from_matrix, projector, random_density, random_pure, werner_state,
    BellState, WernerParameter,
};
use qdiv::Complex64;

fn hermitian(max_dim: usize) -> impl Strategy<Value = ComplexMatrix> {
    (1..=max_dim).prop_flat_map(|n| {
        prop::collection::vec((-2.0f64..2.0, -2.0f64..2.0), n * n).prop_map(move |raw| {
            let m = ComplexMatrix::new(n, raw.into_iter().map(|(re, im)| Complex64::new(re, im)).collect())
                .unwrap();
            m.hermitian_part()
        })
    })
}

fn sorted(mut v: Vec<f64>) -> Vec<f64> {
    v.sort_by(f64::total_cmp);
    v
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn eigh_reconstructs_with_orthonormal_vectors(m in hermitian(8)) {
        let d = eigh(&m).unwrap();
        prop_assert!(d.reconstruct().max_abs_diff(&m).unwrap() <= 1e-9);
        let vs = d.eigenvectors();
        for i in 0..vs.len() {
            for j in 0..vs.len() {
                let expected = if i == j { 1.0 } else { 0.0 };
                prop_assert!((inner(&vs[i], &vs[j]) - Complex64::new(expected, 0.0)).norm() <= 1e-10);
            }
        }
        prop_assert!(d.eigenvalues().windows(2).all(|w| w[0] <= w[1]));
    }

    #[test]
    fn matrix_function_identities(m in hermitian(6)) {
        let id = matrix_function(&m, |x| x).unwrap();
        prop_assert!(id.max_abs_diff(&m).unwrap() <= 1e-10);
        let one = matrix_function(&m, |_| 1.0).unwrap();
        prop_assert!(one.max_abs_diff(&ComplexMatrix::identity(m.dim())).unwrap() <= 1e-10);
        prop_assert!(matrix_function(&m, f64::sin).unwrap().hermiticity_defect() <= 1e-10);
    }

    #[test]
    fn matrix_function_composes(m in hermitian(6)) {
        let direct = matrix_function(&m, f64::abs).unwrap();
        let squared = matrix_function(&m, |x| x * x).unwrap();
        let nested = matrix_function(&squared, f64::sqrt).unwrap();
        prop_assert!(direct.max_abs_diff(&nested).unwrap() <= 1e-9);

        let expm = matrix_function(&m, f64::exp).unwrap();
        let back = matrix_function(&expm, f64::ln).unwrap();
        prop_assert!(back.max_abs_diff(&m).unwrap() <= 1e-9);
    }

    #[test]
    fn tensor_spectrum_is_pairwise_products(a in hermitian(4), b in hermitian(4)) {
        let la = eigh(&a).unwrap();
        let lb = eigh(&b).unwrap();
        let expected = sorted(
            la.eigenvalues().iter().flat_map(|x| lb.eigenvalues().iter().map(move |y| x * y)).collect(),
        );
        let got = eigh(&tensor_product(&a, &b)).unwrap();
        for (x, y) in got.eigenvalues().iter().zip(&expected) {
            prop_assert!((x - y).abs() <= 1e-9);
        }
    }

    #[test]
    fn state_file_round_trip(dim in 1usize..6, seed in any::<u64>(), pure in any::<bool>()) {
        let state = if pure {
            ResolvedState::Pure(random_pure(dim, seed).unwrap())
        } else {
            ResolvedState::Density(random_density(dim, seed).unwrap())
        };
        let back = parse_state_file(write_state_document(&state).as_bytes()).unwrap();
        let diff = back.to_density().matrix().max_abs_diff(state.to_density().matrix()).unwrap();
        prop_assert!(diff <= 1e-12);
    }

    #[test]
    fn fidelity_bounded_and_symmetric(dim in 2usize..6, s1 in any::<u64>(), s2 in any::<u64>()) {
        let rho = random_density(dim, s1).unwrap();
        let sigma = random_density(dim, s2).unwrap();
        let f = fidelity(&sigma, &rho).unwrap();
        prop_assert!((0.0..=1.0 + 1e-10).contains(&f));
        prop_assert!((f - fidelity(&rho, &sigma).unwrap()).abs() <= 1e-9);
        prop_assert!((fidelity(&rho, &rho).unwrap() - 1.0).abs() <= 1e-10);
    }

    #[test]
    fn pure_pair_reduces_to_fubini_study(dim in 2usize..9, s1 in any::<u64>(), s2 in any::<u64>(), qv in 0.05f64..0.95) {
        let phi = random_pure(dim, s1).unwrap();
        let psi = random_pure(dim, s2).unwrap();
        let q = EntropicIndex::new(qv).unwrap();
        let k = q_divergence(&projector(&phi), &projector(&psi), q).unwrap();
        prop_assert!(((1.0 - qv) * k - fubini_study_sq(&phi, &psi).unwrap()).abs() <= 1e-10);
    }
}

#[test]
fn random_density_spectra_are_probability_vectors() {
    for dim in 2..=8 {
        for seed in 0..150u64 {
            let rho = random_density(dim, seed).unwrap();
            let r = rho.eigenvalues();
            assert!(r.iter().all(|x| (0.0..=1.0).contains(x)));
            assert!((r.iter().sum::<f64>() - 1.0).abs() <= 1e-10);
        }
    }
}

#[test]
fn werner_spectra() {
    for f in [0.25, 0.5, 0.7, 1.0] {
        let w = werner_state(WernerParameter::new(f).unwrap());
        let rest = (1.0 - f) / 3.0;
        let expected = sorted(vec![f, rest, rest, rest]);
        for (x, y) in w.eigenvalues().iter().zip(&expected) {
            assert!((x - y).abs() <= 1e-10, "F={f}: {:?}", w.eigenvalues());
        }
    }
}

#[test]
fn bell_projectors_resolve_identity() {
    let mut sum = ComplexMatrix::zeros(4);
    for kind in BellState::ALL {
        sum = sum.add(projector(&bell_state(kind)).matrix()).unwrap();
    }
    assert!(sum.max_abs_diff(&ComplexMatrix::identity(4)).unwrap() <= 1e-12);
}

#[test]
fn projectors_are_idempotent_and_pure() {
    for seed in 0..100u64 {
        let p = projector(&random_pure(2 + seed as usize % 7, seed).unwrap());
        let p2 = p.matrix().matmul(p.matrix()).unwrap();
        assert!(p2.max_abs_diff(p.matrix()).unwrap() <= 1e-10);
        assert!((p.purity() - 1.0).abs() <= 1e-10);
    }
}

#[test]
fn small_divergence_implies_close_states() {
    let q = EntropicIndex::new(0.5).unwrap();
    for seed in 0..100u64 {
        let rho = random_density(3, 2 * seed).unwrap();
        let sigma = random_density(3, 2 * seed + 1).unwrap();
        assert!(q_divergence(&rho, &rho, q).unwrap() <= 1e-12);
        for t in [1e-3, 1e-5, 1e-7] {
            let mixed = rho
                .matrix()
                .scale(Complex64::new(1.0 - t, 0.0))
                .add(&sigma.matrix().scale(Complex64::new(t, 0.0)))
                .unwrap();
            let near = density_from_matrix(mixed).unwrap();
            let k = q_divergence(&near, &rho, q).unwrap();
            if k <= 1e-10 {
                assert!(near.matrix().max_abs_diff(rho.matrix()).unwrap() <= 1e-5);
            }
        }
    }
}

#[test]
fn tsallis_entropy_limit() {
    let q = EntropicIndex::new(0.999).unwrap();
    for dim in 2..=6 {
        for seed in 0..20u64 {
            let rho = random_density(dim, seed).unwrap();
            assert!((tsallis_entropy(&rho, q) - von_neumann_entropy(&rho)).abs() <= 2e-3);
        }
    }
}
