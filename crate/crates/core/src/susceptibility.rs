//! Transition strengths, linear susceptibility and absorption-line diagnostics.
//!
//! The probe couples the one-excitation states to the ground state
//! `|0g0g>` through `sigma1+ + sigma2+` and `a1† + a2†`. Matrix elements are
//! `(1 - eps) w` and `(1 - eps) u`, so with identical cells the `eps = +`
//! states are dark. With per-cell rates the strength of level `(branch, eps)`
//! is
//!
//! ```text
//! Gamma = (sqrt(gamma1) - eps sqrt(gamma2))^2 w^2 + (sqrt(gammac1) - eps sqrt(gammac2))^2 u^2
//! ```
//!
//! and the susceptibility is `chi(w_p) = sum Gamma / (omega - w_p - i gamma_a)`
//! with unit prefactor. Lorentzians sit at the level energies themselves, not
//! at differences from the ground energy `-delta`.
//!
//! When each cell's atom and cavity share a rate (`gamma1 = gammac1`,
//! `gamma2 = gammac2`), `u^2 + w^2 = 1/2` gives
//! `Gamma = (sqrt(gamma1) - eps sqrt(gamma2))^2 / 2`. The half is easy to
//! lose; the general expression above is what is implemented.

use serde::{Deserialize, Serialize};

use crate::eigenstates::{amplitudes, r_epsilon, EigenAmplitudes};
use crate::error::{Error, Result};
use crate::linalg::ComplexValue;
use crate::model::{DampingParams, SystemParams};
use crate::scalar::Scalar;
use crate::spectrum::{djc_energies, BranchLabel, Sign};

/// Probe matrix elements `(atomic, photonic)` of one level.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct MatrixElements<T> {
    pub atomic: T,
    pub photonic: T,
}

impl<T: Scalar> MatrixElements<T> {
    pub fn is_dark(&self) -> bool {
        self.atomic == T::zero() && self.photonic == T::zero()
    }
}

/// `[(1 - eps) w, (1 - eps) u]` for the `+` and `-` branches.
pub fn matrix_elements<T: Scalar>(a: &EigenAmplitudes<T>, epsilon: Sign) -> [MatrixElements<T>; 2] {
    let f = T::one() - epsilon.value::<T>();
    Sign::BOTH.map(|b| {
        let (u, w) = a.branch(b);
        MatrixElements { atomic: f * w, photonic: f * u }
    })
}

/// Transition strengths `(Gamma_+, Gamma_-)` of the `eps` pair.
pub fn transition_probabilities<T: Scalar>(a: &EigenAmplitudes<T>, d: &DampingParams<T>, epsilon: Sign) -> (T, T) {
    let e = epsilon.value::<T>();
    let atomic = d.gamma1.sqrt() - e * d.gamma2.sqrt();
    let cavity = d.gammac1.sqrt() - e * d.gammac2.sqrt();
    let (atomic, cavity) = (atomic * atomic, cavity * cavity);
    let gamma = |b: Sign| {
        let (u, w) = a.branch(b);
        atomic * w * w + cavity * u * u
    };
    (gamma(Sign::Plus), gamma(Sign::Minus))
}

/// Strength and centre of one Lorentzian.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Transition<T> {
    pub label: BranchLabel,
    pub gamma_total: T,
    pub center: T,
}

/// All four transitions, in [`BranchLabel::ALL`] order.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TransitionTable<T> {
    pub entries: [Transition<T>; 4],
}

impl<T: Scalar> TransitionTable<T> {
    pub fn get(&self, label: BranchLabel) -> &Transition<T> {
        self.entries.iter().find(|t| t.label == label).expect("all labels present")
    }
}

pub fn transition_table<T: Scalar>(p: &SystemParams<T>, d: &DampingParams<T>) -> Result<TransitionTable<T>> {
    let energies = djc_energies(p);
    let mut gammas = [T::zero(); 4];
    for (k, eps) in Sign::BOTH.iter().enumerate() {
        let a = amplitudes(r_epsilon(p, *eps)?, *eps);
        let (gp, gm) = transition_probabilities(&a, d, *eps);
        gammas[2 * k] = gp;
        gammas[2 * k + 1] = gm;
    }
    let mut i = 0;
    let entries = BranchLabel::ALL.map(|label| {
        let t = Transition { label, gamma_total: gammas[i], center: energies.get(label) };
        i += 1;
        t
    });
    Ok(TransitionTable { entries })
}

/// Complex susceptibility sampled on a probe grid.
#[derive(Debug, Clone, PartialEq)]
pub struct AbsorptionCurve<T> {
    pub omega_p: Vec<T>,
    pub chi: Vec<ComplexValue<T>>,
}

impl<T: Scalar> AbsorptionCurve<T> {
    pub fn imag(&self) -> Vec<T> {
        self.chi.iter().map(|c| c.im).collect()
    }
}

fn check_grid<T: Scalar>(grid: &[T]) -> Result<()> {
    if grid.is_empty() || grid.windows(2).any(|w| !(w[0] < w[1])) {
        return Err(Error::BadGrid);
    }
    Ok(())
}

/// `Gamma / (center - w_p - i gamma_a)`.
#[inline]
fn lorentzian<T: Scalar>(t: &Transition<T>, omega_p: T, gamma_a: T) -> ComplexValue<T> {
    let detuning = t.center - omega_p;
    let denom = detuning * detuning + gamma_a * gamma_a;
    ComplexValue::new(t.gamma_total * detuning / denom, t.gamma_total * gamma_a / denom)
}

/// Sums the given transitions over `grid`.
pub fn curve_from_transitions<T: Scalar>(transitions: &[Transition<T>], gamma_a: T, grid: &[T]) -> Result<AbsorptionCurve<T>> {
    check_grid(grid)?;
    if !(gamma_a > T::zero()) {
        return Err(Error::NonPositiveLinewidth(gamma_a.to_f64().unwrap_or(f64::NAN)));
    }
    let chi = grid
        .iter()
        .map(|&w| {
            transitions
                .iter()
                .fold(ComplexValue::new(T::zero(), T::zero()), |acc, t| acc + lorentzian(t, w, gamma_a))
        })
        .collect();
    Ok(AbsorptionCurve { omega_p: grid.to_vec(), chi })
}

/// Four-term susceptibility over the probe grid.
pub fn susceptibility_curve<T: Scalar>(p: &SystemParams<T>, d: &DampingParams<T>, grid: &[T]) -> Result<AbsorptionCurve<T>> {
    d.validate()?;
    let table = transition_table(p, d)?;
    curve_from_transitions(&table.entries, d.gamma_a, grid)
}

/// Two-Lorentzian absorption `Im chi` for identical cells (only `eps = -` survives).
pub fn absorption_imag<T: Scalar>(p: &SystemParams<T>, d: &DampingParams<T>, grid: &[T]) -> Result<Vec<T>> {
    d.validate()?;
    if !d.is_symmetric() {
        return Err(Error::AsymmetricDamping);
    }
    check_grid(grid)?;
    let table = transition_table(p, d)?;
    let upper = table.get(BranchLabel::new(Sign::Minus, Sign::Plus));
    let lower = table.get(BranchLabel::new(Sign::Minus, Sign::Minus));
    let ga = d.gamma_a;
    let line = |t: &Transition<T>, w: T| {
        let x = t.center - w;
        ga * t.gamma_total / (x * x + ga * ga)
    };
    Ok(grid.iter().map(|&w| line(upper, w) + line(lower, w)).collect())
}

/// A strict local maximum of `Im chi`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Peak<T> {
    pub position: T,
    pub height: T,
}

/// Interior grid points strictly above both neighbours, by position.
pub fn peak_report<T: Scalar>(curve: &AbsorptionCurve<T>) -> Vec<Peak<T>> {
    let h = curve.imag();
    (1..h.len().saturating_sub(1))
        .filter(|&i| h[i] > h[i - 1] && h[i] > h[i + 1])
        .map(|i| Peak { position: curve.omega_p[i], height: h[i] })
        .collect()
}

/// `|h1 - h2| / (h1 + h2)` over the two tallest peaks.
pub fn symmetry_metric<T: Scalar>(curve: &AbsorptionCurve<T>) -> Result<T> {
    let peaks = peak_report(curve);
    if peaks.len() < 2 {
        return Err(Error::TooFewPeaks(peaks.len()));
    }
    let mut heights: Vec<T> = peaks.iter().map(|p| p.height).collect();
    heights.sort_by(|a, b| b.partial_cmp(a).expect("finite heights"));
    Ok(balance(heights[0], heights[1]))
}

/// `(max - min) / (max + min)` over all peak heights.
///
/// Same as [`symmetry_metric`] when there are exactly two peaks.
pub fn height_spread<T: Scalar>(peaks: &[Peak<T>]) -> Result<T> {
    if peaks.len() < 2 {
        return Err(Error::TooFewPeaks(peaks.len()));
    }
    let (lo, hi) = peaks
        .iter()
        .fold((T::infinity(), T::neg_infinity()), |(lo, hi), p| (lo.min(p.height), hi.max(p.height)));
    Ok(balance(hi, lo))
}

fn balance<T: Scalar>(a: T, b: T) -> T {
    let sum = a + b;
    if sum == T::zero() {
        T::zero()
    } else {
        (a - b).abs() / sum
    }
}
