//! Physical parameters and single-cell Jaynes-Cummings closed forms.
//!
//! All frequencies and rates share one arbitrary unit. The CLI works in units
//! of `g` by convention; the library does not care.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// Coherent parameters of the two-cell system.
///
/// Frequencies are stored as absolute values; the detuning is derived.
/// `kappa` is the photon hopping rate between the cavities and may carry
/// either sign.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SystemParams<T> {
    pub omega_c: T,
    pub omega_a: T,
    pub g: T,
    pub kappa: T,
}

impl<T: Scalar> SystemParams<T> {
    pub fn new(omega_c: T, omega_a: T, g: T, kappa: T) -> Self {
        Self { omega_c, omega_a, g, kappa }
    }

    /// Builds parameters from a detuning, placing the atom at `omega_c + delta`.
    ///
    /// Note that `delta()` then returns `(omega_c + delta) - omega_c`, which is
    /// only bit-exact when the sum is representable.
    pub fn from_detuning(omega_c: T, delta: T, g: T, kappa: T) -> Self {
        Self::new(omega_c, omega_c + delta, g, kappa)
    }

    /// Atom-cavity detuning `omega_a - omega_c`.
    #[inline]
    pub fn delta(&self) -> T {
        self.omega_a - self.omega_c
    }
}

/// Damping rates for the two cells plus the shared probe linewidth.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct DampingParams<T> {
    pub gamma1: T,
    pub gamma2: T,
    pub gammac1: T,
    pub gammac2: T,
    pub gamma_a: T,
}

impl<T: Scalar> DampingParams<T> {
    /// Identical cells: atomic rate `gamma`, cavity rate `gamma_c`.
    pub fn symmetric(gamma: T, gamma_c: T, gamma_a: T) -> Self {
        Self { gamma1: gamma, gamma2: gamma, gammac1: gamma_c, gammac2: gamma_c, gamma_a }
    }

    /// Checks every rate is non-negative and the linewidth is positive.
    pub fn validate(&self) -> Result<()> {
        for (name, v) in [
            ("gamma1", self.gamma1),
            ("gamma2", self.gamma2),
            ("gammac1", self.gammac1),
            ("gammac2", self.gammac2),
        ] {
            if !(v >= T::zero()) {
                return Err(Error::NegativeRate(name, v.to_f64().unwrap_or(f64::NAN)));
            }
        }
        if !(self.gamma_a > T::zero()) {
            return Err(Error::NonPositiveLinewidth(self.gamma_a.to_f64().unwrap_or(f64::NAN)));
        }
        Ok(())
    }

    /// Common atomic rate when both atoms decay alike.
    pub fn gamma(&self) -> Option<T> {
        (self.gamma1 == self.gamma2).then_some(self.gamma1)
    }

    /// Common cavity rate when both cavities decay alike.
    pub fn gamma_c(&self) -> Option<T> {
        (self.gammac1 == self.gammac2).then_some(self.gammac1)
    }

    pub fn is_symmetric(&self) -> bool {
        self.gamma().is_some() && self.gamma_c().is_some()
    }
}

/// Energy of the single-cell ground singlet `|0, g>`: `-delta / 2`.
pub fn jc_ground_energy<T: Scalar>(p: &SystemParams<T>) -> T {
    -p.delta() * T::half()
}

/// The `n`-th single-cell doublet `(upper, lower)`,
/// `n*omega_c ± sqrt(n g^2 + delta^2 / 4)`.
pub fn jc_doublet_energies<T: Scalar>(p: &SystemParams<T>, n: u32) -> Result<(T, T)> {
    if n == 0 {
        return Err(Error::ZeroDoublet);
    }
    let nf = T::from_u32(n).expect("photon number fits the scalar type");
    let delta = p.delta();
    let half_gap = (nf * p.g * p.g + delta * delta * T::quarter()).sqrt();
    let centre = nf * p.omega_c;
    Ok((centre + half_gap, centre - half_gap))
}

/// Mixing angle `atan(2 g sqrt(n) / delta) / 2` of the `n`-th doublet.
///
/// The branch at zero detuning is `+pi/4`, the limit from positive detuning.
pub fn jc_mixing_angle<T: Scalar>(p: &SystemParams<T>, n: u32) -> Result<T> {
    if n == 0 {
        return Err(Error::ZeroDoublet);
    }
    let delta = p.delta();
    let nf = T::from_u32(n).expect("photon number fits the scalar type");
    let coupling = T::two() * p.g * nf.sqrt();
    if delta == T::zero() {
        if p.g == T::zero() {
            return Err(Error::UndefinedAngle);
        }
        return Ok(T::FRAC_PI_4());
    }
    Ok((coupling / delta).atan() * T::half())
}
