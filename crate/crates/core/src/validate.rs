//! Seeded self-check: every closed form against the eigensolver and the
//! algebraic identities they imply.

use std::fmt::Write as _;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::eigenstates::{amplitudes, eigenstate_vector, entanglement_deviation, r_epsilon};
use crate::linalg::{eig_sym, gram_error, multiset_distance};
use crate::model::{jc_doublet_energies, jc_ground_energy, DampingParams, SystemParams};
use crate::sector::{build_collective_hamiltonian, build_hamiltonian, enumerate_sector};
use crate::spectrum::{djc_energies, linspace, BranchLabel, DjcSpectrum, Sign};
use crate::susceptibility::{absorption_imag, susceptibility_curve, transition_probabilities};

/// Closed-form one-excitation spectrum under test.
pub type SpectrumFn = fn(&SystemParams<f64>) -> DjcSpectrum<f64>;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SuiteResult {
    pub name: &'static str,
    pub max_residual: f64,
    pub tolerance: f64,
    pub passed: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ValidationReport {
    pub seed: u64,
    pub trials: usize,
    pub suites: Vec<SuiteResult>,
}

impl ValidationReport {
    pub fn passed(&self) -> bool {
        self.suites.iter().all(|s| s.passed)
    }

    pub fn suite(&self, name: &str) -> Option<&SuiteResult> {
        self.suites.iter().find(|s| s.name == name)
    }

    /// `suite,max_residual,tolerance,passed` with `passed` as `0/1`.
    pub fn to_csv(&self) -> String {
        let mut s = String::from("suite,max_residual,tolerance,passed\n");
        for r in &self.suites {
            let _ = writeln!(s, "{},{},{},{}", r.name, r.max_residual, r.tolerance, u8::from(r.passed));
        }
        s
    }

    pub fn summary(&self) -> String {
        let mut s = format!("validate seed={} trials={}\n", self.seed, self.trials);
        for r in &self.suites {
            let _ = writeln!(
                s,
                "{:<28} max_residual={:.3e} tolerance={:.1e} {}",
                r.name,
                r.max_residual,
                r.tolerance,
                if r.passed { "PASS" } else { "FAIL" }
            );
        }
        let _ = writeln!(s, "{}", if self.passed() { "ALL PASS" } else { "FAILED" });
        s
    }
}

/// `|delta|, |kappa| <= 10 g`, `g in [0.1, 10]`, `omega_c in [-10, 10]`.
pub fn random_params(rng: &mut ChaCha8Rng) -> SystemParams<f64> {
    let g = rng.gen_range(0.1..=10.0);
    let delta = g * rng.gen_range(-10.0..=10.0);
    let kappa = g * rng.gen_range(-10.0..=10.0);
    let omega_c = rng.gen_range(-10.0..=10.0);
    SystemParams::from_detuning(omega_c, delta, g, kappa)
}

fn random_symmetric_damping(rng: &mut ChaCha8Rng) -> DampingParams<f64> {
    DampingParams::symmetric(rng.gen_range(0.0..1.0), rng.gen_range(0.0..1.0), rng.gen_range(0.01..1.0))
}

struct Tracker {
    name: &'static str,
    tolerance: f64,
    worst: f64,
}

impl Tracker {
    fn new(name: &'static str, tolerance: f64) -> Self {
        Self { name, tolerance, worst: 0.0 }
    }

    fn record(&mut self, residual: f64) {
        // NaN counts as a failure
        if residual.is_nan() {
            self.worst = f64::INFINITY;
        } else {
            self.worst = self.worst.max(residual);
        }
    }

    fn finish(self) -> SuiteResult {
        SuiteResult {
            name: self.name,
            max_residual: self.worst,
            tolerance: self.tolerance,
            passed: self.worst <= self.tolerance,
        }
    }
}

pub fn run(seed: u64, trials: usize) -> ValidationReport {
    run_with(seed, trials, djc_energies)
}

/// Runs every suite with `spectrum` standing in for the closed-form energies.
pub fn run_with(seed: u64, trials: usize, spectrum: SpectrumFn) -> ValidationReport {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let one = enumerate_sector(1).expect("one-excitation sector");

    let mut closed_form = Tracker::new("closed_form_vs_eigensolver", 1e-10);
    let mut eigen_residual = Tracker::new("eigenstate_residual", 1e-10);
    let mut gram = Tracker::new("eigenstate_orthonormality", 1e-10);
    let mut collective = Tracker::new("collective_equivalence", 1e-10);
    let mut decoupled = Tracker::new("decoupled_limit", 1e-12);
    let mut normalization = Tracker::new("amplitude_normalization", 1e-12);
    let mut threshold = Tracker::new("entanglement_threshold", 1e-12);
    let mut dark = Tracker::new("dark_states", 0.0);
    let mut sum_rule = Tracker::new("sum_rule", 1e-12);
    let mut two_line = Tracker::new("two_lorentzian_form", 1e-12);
    let mut dims = Tracker::new("sector_dimensions", 0.0);

    let probe = linspace(-25.0, 25.0, 64);
    for _ in 0..trials {
        let p = random_params(&mut rng);
        let closed = spectrum(&p);

        let h = build_hamiltonian(&p, &one).expect("valid basis").matrix;
        let oracle = eig_sym(&h).expect("finite matrix");
        closed_form.record(multiset_distance(&closed.values(), &oracle.values).unwrap_or(f64::INFINITY));

        let mut vectors = Vec::with_capacity(4);
        for l in BranchLabel::ALL {
            let v = eigenstate_vector(&p, l.epsilon, l.branch).expect("g > 0");
            let res = h
                .mul_vec(&v)
                .iter()
                .zip(&v)
                .map(|(hv, vi)| (hv - closed.get(l) * vi).abs())
                .fold(0.0, f64::max);
            eigen_residual.record(res);
            vectors.push(v.to_vec());
        }
        gram.record(gram_error(&vectors));

        let c = build_collective_hamiltonian(&p, 1).expect("nu = 1").matrix;
        let ce = eig_sym(&c).expect("finite matrix");
        collective.record(multiset_distance(&ce.values, &oracle.values).unwrap_or(f64::INFINITY));

        let q = SystemParams { kappa: 0.0, ..p };
        let e0 = jc_ground_energy(&q);
        let (hi, lo) = jc_doublet_energies(&q, 1).expect("n = 1");
        let free = spectrum(&q);
        for eps in Sign::BOTH {
            decoupled.record((free.get(BranchLabel::new(eps, Sign::Plus)) - (e0 + hi)).abs());
            decoupled.record((free.get(BranchLabel::new(eps, Sign::Minus)) - (e0 + lo)).abs());
        }
        decoupled.record((free.get(BranchLabel::ALL[0]) - free.get(BranchLabel::ALL[2])).abs());
        decoupled.record((free.get(BranchLabel::ALL[1]) - free.get(BranchLabel::ALL[3])).abs());

        let d = random_symmetric_damping(&mut rng);
        for eps in Sign::BOTH {
            let a = amplitudes(r_epsilon(&p, eps).expect("g > 0"), eps);
            for b in Sign::BOTH {
                let (u, w) = a.branch(b);
                normalization.record((2.0 * u * u + 2.0 * w * w - 1.0).abs());
            }
            normalization.record((2.0 * a.u_plus * a.u_minus + 2.0 * a.w_plus * a.w_minus).abs());

            let at = SystemParams::from_detuning(p.omega_c, -eps.value::<f64>() * p.kappa, p.g, p.kappa);
            let r = r_epsilon(&at, eps).expect("g > 0");
            threshold.record(entanglement_deviation(&amplitudes(r, eps)));

            let (gp, gm) = transition_probabilities(&a, &d, eps);
            match eps {
                Sign::Plus => {
                    dark.record(gp.abs());
                    dark.record(gm.abs());
                }
                Sign::Minus => {
                    let g = d.gamma().unwrap_or(f64::NAN);
                    let gc = d.gamma_c().unwrap_or(f64::NAN);
                    sum_rule.record((gp + gm - 2.0 * (g + gc)).abs());
                }
            }
        }

        let grid: Vec<f64> = probe.iter().map(|x| x + p.omega_c).collect();
        let full = susceptibility_curve(&p, &d, &grid).expect("valid inputs");
        let two = absorption_imag(&p, &d, &grid).expect("symmetric damping");
        for (a, b) in full.imag().iter().zip(&two) {
            two_line.record((a - b).abs());
        }
    }

    for nu in 0..=8 {
        let expected = if nu == 0 { 1 } else { 4 * nu };
        let got = enumerate_sector(nu).map(|b| b.len()).unwrap_or(0);
        dims.record((got as f64 - expected as f64).abs());
    }

    ValidationReport {
        seed,
        trials,
        suites: vec![
            closed_form.finish(),
            eigen_residual.finish(),
            gram.finish(),
            collective.finish(),
            decoupled.finish(),
            normalization.finish(),
            threshold.finish(),
            dark.finish(),
            sum_rule.finish(),
            two_line.finish(),
            dims.finish(),
        ],
    }
}
