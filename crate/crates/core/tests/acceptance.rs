//! Acceptance criteria, one line each. Runs as a plain binary so the
//! PASS/FAIL table is always printed; exits nonzero if any criterion fails.

use std::path::PathBuf;
use std::process::{Command, ExitCode};

use qdiv::measures::{
    fidelity, bures_metric_sq, fubini_study_sq, kl_divergence, leibniz_defect,
    nonadditivity_defect, q_divergence, q_divergence_eigensum, q_divergence_jackson,
    werner_q_divergence_closed, EntropicIndex,
};
use qdiv::states::{
    bell_state, projector, random_density, random_pure, werner_state, BellState, DensityMatrix,
    WernerParameter,
};

const Q_SET: [f64; 5] = [0.1, 0.3, 0.5, 0.7, 0.9];

struct Outcome {
    pass: bool,
    detail: String,
}

fn q(v: f64) -> EntropicIndex {
    EntropicIndex::new(v).unwrap()
}

fn grid(start: f64, step: f64, count: usize) -> Vec<f64> {
    (0..count).map(|k| start + k as f64 * step).collect()
}

fn singlet_projector() -> DensityMatrix {
    projector(&bell_state(BellState::PsiMinus))
}

/// Seeded (rho, sigma) pairs: 250 per dimension in {2, 3, 4, 8}.
fn random_pairs() -> Vec<(DensityMatrix, DensityMatrix)> {
    let mut pairs = Vec::new();
    for dim in [2usize, 3, 4, 8] {
        for i in 0..250u64 {
            let base = 1_000_000 * dim as u64 + 2 * i;
            pairs.push((random_density(dim, base).unwrap(), random_density(dim, base + 1).unwrap()));
        }
    }
    pairs
}

fn werner_closed_form() -> Outcome {
    let sigma = singlet_projector();
    let fs = grid(0.25, 0.05, 16);
    let qs = grid(0.05, 0.05, 19);
    let (mut worst, mut worst_f1) = (0.0f64, 0.0f64);
    for &f in &fs {
        let f = f.min(1.0);
        let p = WernerParameter::new(f).unwrap();
        let rho = werner_state(p);
        for &qv in &qs {
            let k = q_divergence(&rho, &sigma, q(qv)).unwrap();
            let closed = (1.0 - f.powf(qv)) / (1.0 - qv);
            worst = worst.max((k - closed).abs());
            worst = worst.max((werner_q_divergence_closed(p, q(qv)) - closed).abs());
            if f == 1.0 {
                worst_f1 = worst_f1.max(k.abs());
            }
        }
    }
    Outcome {
        pass: worst <= 1e-10 && worst_f1 <= 1e-12,
        detail: format!("{} points, max |err| {worst:.2e} (tol 1e-10), max |K| at F=1 {worst_f1:.2e} (tol 1e-12)", fs.len() * qs.len()),
    }
}

fn route_equivalence(pairs: &[(DensityMatrix, DensityMatrix)]) -> Outcome {
    let mut worst = 0.0f64;
    for (rho, sigma) in pairs {
        for &qv in &Q_SET {
            let a = q_divergence(rho, sigma, q(qv)).unwrap();
            let b = q_divergence_eigensum(rho, sigma, q(qv)).unwrap();
            let c = q_divergence_jackson(rho, sigma, q(qv)).unwrap();
            worst = worst.max((a - b).abs()).max((a - c).abs()).max((b - c).abs());
        }
    }
    Outcome {
        pass: worst <= 1e-10,
        detail: format!("{} pairs x {} q, max pairwise gap {worst:.2e} (tol 1e-10)", pairs.len(), Q_SET.len()),
    }
}

fn nonnegativity(pairs: &[(DensityMatrix, DensityMatrix)]) -> Outcome {
    let (mut min, mut self_max) = (f64::INFINITY, 0.0f64);
    for (rho, sigma) in pairs {
        for &qv in &Q_SET {
            min = min.min(q_divergence(rho, sigma, q(qv)).unwrap());
            self_max = self_max.max(q_divergence(rho, rho, q(qv)).unwrap().abs());
        }
    }
    Outcome {
        pass: min >= -1e-12 && self_max <= 1e-12,
        detail: format!("min K_q {min:.3e} (>= -1e-12), max |K_q(rho||rho)| {self_max:.2e} (tol 1e-12)"),
    }
}

fn nonadditivity() -> Outcome {
    let mut worst = 0.0f64;
    for i in 0..200u64 {
        let s = 4 * i + 7_000_000;
        let (r1, s1) = (random_density(2, s).unwrap(), random_density(2, s + 1).unwrap());
        let (r2, s2) = (random_density(2, s + 2).unwrap(), random_density(2, s + 3).unwrap());
        let qv = Q_SET[i as usize % Q_SET.len()];
        worst = worst.max(nonadditivity_defect(&r1, &s1, &r2, &s2, q(qv)).unwrap().abs());
    }
    Outcome {
        pass: worst <= 1e-9,
        detail: format!("200 quadruples, max |defect| {worst:.2e} (tol 1e-9)"),
    }
}

fn additive_limit() -> Outcome {
    let (mut lo, mut hi) = (f64::INFINITY, 0.0f64);
    for i in 0..50u64 {
        let rho = random_density(4, 8_000_000 + 2 * i).unwrap();
        let sigma = random_density(4, 8_000_001 + 2 * i).unwrap();
        let kl = kl_divergence(&rho, &sigma).unwrap().finite().expect("full-rank sigma");
        let gap = |eps: f64| (q_divergence(&rho, &sigma, q(1.0 - eps)).unwrap() - kl).abs();
        let ratio = gap(1e-2) / gap(1e-3);
        lo = lo.min(ratio);
        hi = hi.max(ratio);
    }
    Outcome {
        pass: (7.0..=13.0).contains(&lo) && (7.0..=13.0).contains(&hi),
        detail: format!("50 pairs, gap(1e-2)/gap(1e-3) in [{lo:.3}, {hi:.3}] (required [7, 13])"),
    }
}

fn singular_limit() -> Outcome {
    let mut cases: Vec<(DensityMatrix, qdiv::states::PureState)> = [0.25, 0.5, 0.7, 0.9]
        .iter()
        .map(|&f| (werner_state(WernerParameter::new(f).unwrap()), bell_state(BellState::PsiMinus)))
        .collect();
    for i in 0..20u64 {
        let rho = random_density(3, 9_000_000 + i).unwrap();
        let psi = random_pure(3, 9_500_000 + i).unwrap();
        if rho.expectation(&psi).unwrap() <= 0.9 {
            cases.push((rho, psi));
        }
    }
    let mut ok = true;
    let mut min_margin = f64::INFINITY;
    for (rho, psi) in &cases {
        let sigma = projector(psi);
        let f = rho.expectation(psi).unwrap();
        ok &= kl_divergence(rho, &sigma).unwrap().is_infinite();
        let k = q_divergence(rho, &sigma, q(0.999)).unwrap();
        ok &= k.is_finite();
        min_margin = min_margin.min(k / (100.0 * (1.0 - f)));
    }
    ok &= min_margin > 1.0;
    Outcome {
        pass: ok,
        detail: format!("{} states: KL = inf, min K_0.999 / (100 (1 - F)) = {min_margin:.3}", cases.len()),
    }
}

fn pure_geometry() -> Outcome {
    let mut worst = 0.0f64;
    for i in 0..500u64 {
        let dim = 2 + (i as usize % 7);
        let phi = random_pure(dim, 10_000_000 + 2 * i).unwrap();
        let psi = random_pure(dim, 10_000_001 + 2 * i).unwrap();
        let qv = Q_SET[i as usize % Q_SET.len()];
        let k = q_divergence(&projector(&phi), &projector(&psi), q(qv)).unwrap();
        let overlap = 1.0 - phi.inner(&psi).unwrap().norm_sqr();
        worst = worst.max(((1.0 - qv) * k - overlap).abs());
        worst = worst.max((fubini_study_sq(&phi, &psi).unwrap() - overlap).abs());
    }
    Outcome {
        pass: worst <= 1e-10,
        detail: format!("500 pairs, dims 2-8, max |(1-q) K_q - d_FS^2| {worst:.2e} (tol 1e-10)"),
    }
}

fn fidelity_identities() -> Outcome {
    let mut worst = 0.0f64;
    for i in 0..50u64 {
        let dim = 2 + (i as usize % 4);
        let rho = random_density(dim, 11_000_000 + i).unwrap();
        let psi = random_pure(dim, 11_500_000 + i).unwrap();
        let f = fidelity(&projector(&psi), &rho).unwrap();
        worst = worst.max((f - rho.expectation(&psi).unwrap()).abs());
        let b = bures_metric_sq(&projector(&psi), &rho).unwrap();
        worst = worst.max((b - (2.0 - 2.0 * f.sqrt())).abs());
    }
    let sigma = singlet_projector();
    for fv in [0.25, 0.5, 0.7, 1.0] {
        let w = werner_state(WernerParameter::new(fv).unwrap());
        worst = worst.max((fidelity(&sigma, &w).unwrap() - fv).abs());
        worst = worst.max((bures_metric_sq(&sigma, &w).unwrap() - (2.0 - 2.0 * f64::sqrt(fv))).abs());
    }
    Outcome {
        pass: worst <= 1e-10,
        detail: format!("pure-reference, Werner and Bures identities, max |err| {worst:.2e} (tol 1e-10)"),
    }
}

fn leibniz_rule() -> Outcome {
    let points: Vec<(f64, f64)> = [0.4, 0.8, 1.3, 2.0]
        .iter()
        .flat_map(|&x| Q_SET.iter().map(move |&qv| (x, qv)))
        .collect();
    let mut worst = 0.0f64;
    for &(x, qv) in &points {
        worst = worst.max(leibniz_defect(|t| t, |t| t, x, q(qv)).unwrap().abs());
        worst = worst.max(leibniz_defect(|t| t * t, |t| t.powi(3), x, q(qv)).unwrap().abs());
        worst = worst.max(leibniz_defect(f64::exp, f64::cos, x, q(qv)).unwrap().abs());
    }
    Outcome {
        pass: worst <= 1e-10,
        detail: format!("3 pairs x {} (x, q) points, max |defect| {worst:.2e} (tol 1e-10)", points.len()),
    }
}

fn scalar_inequality() -> Outcome {
    let xs = grid(0.0, 0.05, 201);
    let ps = grid(0.05, 0.05, 19);
    let (mut min, mut at_one) = (f64::INFINITY, 0.0f64);
    for &p in &ps {
        for &x in &xs {
            min = min.min((1.0 - x.powf(p)) / p - (1.0 - x));
        }
        at_one = at_one.max(((1.0 - 1f64.powf(p)) / p).abs());
    }
    Outcome {
        pass: min >= -1e-12 && at_one <= 1e-12,
        detail: format!("{} points, min slack {min:.3e} (>= -1e-12), max slack at x=1 {at_one:.1e}", xs.len() * ps.len()),
    }
}

fn golden_path(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/golden").join(name)
}

fn cli_golden() -> Outcome {
    let cases: [(&str, &[&str]); 3] = [
        (
            "measure_werner_q_divergence.json",
            &["measure", "--state", "werner:F=0.7", "--reference", "bell:psi-", "--measure", "q-divergence", "--q", "0.5"],
        ),
        ("sweep_default.csv", &["sweep"]),
        (
            "report_werner.json",
            &["report", "--state", "werner:F=0.7", "--reference", "bell:psi-", "--q", "0.3,0.5,0.7"],
        ),
    ];
    let mut failures = Vec::new();
    for (file, args) in cases {
        let out = Command::new(env!("CARGO_BIN_EXE_qdiv")).args(args).output().expect("run qdiv");
        let expected = std::fs::read(golden_path(file)).unwrap_or_default();
        if !out.status.success() || out.stdout != expected {
            failures.push(file);
        }
    }
    Outcome {
        pass: failures.is_empty(),
        detail: if failures.is_empty() {
            "measure, sweep, report byte-identical to committed goldens".into()
        } else {
            format!("mismatched: {}", failures.join(", "))
        },
    }
}

type Criterion<'a> = (&'static str, Box<dyn Fn() -> Outcome + 'a>);

fn main() -> ExitCode {
    let pairs = random_pairs();
    let criteria: Vec<Criterion<'_>> = vec![
        ("AC1  Werner closed form", Box::new(werner_closed_form)),
        ("AC2  route equivalence", Box::new(|| route_equivalence(&pairs))),
        ("AC3  nonnegativity", Box::new(|| nonnegativity(&pairs))),
        ("AC4  nonadditivity identity", Box::new(nonadditivity)),
        ("AC5  additive limit (full-rank sigma)", Box::new(additive_limit)),
        ("AC6  singular limit (pure sigma)", Box::new(singular_limit)),
        ("AC7  pure-state geometry", Box::new(pure_geometry)),
        ("AC8  fidelity identities", Box::new(fidelity_identities)),
        ("AC9  q-Leibniz rule", Box::new(leibniz_rule)),
        ("AC10 scalar inequality", Box::new(scalar_inequality)),
        ("AC11 CLI golden files", Box::new(cli_golden)),
    ];
    let mut failed = 0;
    println!();
    for (name, run) in &criteria {
        let outcome = run();
        let tag = if outcome.pass { "PASS" } else { "FAIL" };
        println!("[{tag}] {name:<40} {}", outcome.detail);
        if !outcome.pass {
            failed += 1;
        }
    }
    println!("{} of {} acceptance criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
