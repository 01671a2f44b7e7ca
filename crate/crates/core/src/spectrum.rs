//! Closed-form one-excitation spectrum and detuning sweeps.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::model::SystemParams;
use crate::scalar::Scalar;

/// A `±1` label.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub const BOTH: [Sign; 2] = [Sign::Plus, Sign::Minus];

    #[inline]
    pub fn value<T: Scalar>(self) -> T {
        match self {
            Sign::Plus => T::one(),
            Sign::Minus => -T::one(),
        }
    }

    #[inline]
    pub fn flip(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }

    pub fn symbol(self) -> char {
        match self {
            Sign::Plus => '+',
            Sign::Minus => '-',
        }
    }

    fn letter(self) -> char {
        match self {
            Sign::Plus => 'p',
            Sign::Minus => 'm',
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.symbol())
    }
}

/// Index `(epsilon, branch)` of a one-excitation level.
///
/// `epsilon` selects the photon-mode parity pair, `branch` the upper (`+`)
/// or lower (`-`) member of that pair.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct BranchLabel {
    pub epsilon: Sign,
    pub branch: Sign,
}

impl BranchLabel {
    /// Canonical order: `(+,+), (+,-), (-,+), (-,-)`.
    pub const ALL: [BranchLabel; 4] = [
        BranchLabel { epsilon: Sign::Plus, branch: Sign::Plus },
        BranchLabel { epsilon: Sign::Plus, branch: Sign::Minus },
        BranchLabel { epsilon: Sign::Minus, branch: Sign::Plus },
        BranchLabel { epsilon: Sign::Minus, branch: Sign::Minus },
    ];

    pub const fn new(epsilon: Sign, branch: Sign) -> Self {
        Self { epsilon, branch }
    }

    fn index(self) -> usize {
        match (self.epsilon, self.branch) {
            (Sign::Plus, Sign::Plus) => 0,
            (Sign::Plus, Sign::Minus) => 1,
            (Sign::Minus, Sign::Plus) => 2,
            (Sign::Minus, Sign::Minus) => 3,
        }
    }

    /// Column name in the spectrum output, e.g. `omega_pm` for `eps = +, branch = -`.
    pub fn column(self) -> String {
        format!("omega_{}{}", self.epsilon.letter(), self.branch.letter())
    }
}

/// The four one-excitation energies, addressable by [`BranchLabel`].
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct DjcSpectrum<T> {
    energies: [T; 4],
}

impl<T: Scalar> DjcSpectrum<T> {
    pub fn get(&self, label: BranchLabel) -> T {
        self.energies[label.index()]
    }

    /// Energies in [`BranchLabel::ALL`] order.
    pub fn values(&self) -> [T; 4] {
        self.energies
    }

    pub fn iter(&self) -> impl Iterator<Item = (BranchLabel, T)> + '_ {
        BranchLabel::ALL.iter().map(move |&l| (l, self.get(l)))
    }

    /// Upper minus lower energy within the `epsilon` pair.
    pub fn pair_gap(&self, epsilon: Sign) -> T {
        self.get(BranchLabel::new(epsilon, Sign::Plus)) - self.get(BranchLabel::new(epsilon, Sign::Minus))
    }

    /// Wraps energies given in [`BranchLabel::ALL`] order.
    pub fn from_values(energies: [T; 4]) -> Self {
        Self { energies }
    }

    fn from_fn(mut f: impl FnMut(BranchLabel) -> T) -> Self {
        let mut energies = [T::zero(); 4];
        for l in BranchLabel::ALL {
            energies[l.index()] = f(l);
        }
        Self { energies }
    }
}

/// Exact energies `omega_c - (delta + eps kappa)/2 ± sqrt(g^2 + (delta + eps kappa)^2 / 4)`
/// evaluated at an explicit detuning.
pub fn djc_energies_at<T: Scalar>(omega_c: T, delta: T, g: T, kappa: T) -> DjcSpectrum<T> {
    DjcSpectrum::from_fn(|l| {
        let shift = (delta + l.epsilon.value::<T>() * kappa) * T::half();
        let half_gap = (g * g + shift * shift).sqrt();
        omega_c - shift + l.branch.value::<T>() * half_gap
    })
}

/// Exact one-excitation energies.
pub fn djc_energies<T: Scalar>(p: &SystemParams<T>) -> DjcSpectrum<T> {
    djc_energies_at(p.omega_c, p.delta(), p.g, p.kappa)
}

/// Weak-hopping expansion at resonance:
/// `omega_c ± g - eps kappa / 2 ± kappa^2 / 8g`, with the two `±` tied to the branch.
pub fn djc_energies_perturbative<T: Scalar>(p: &SystemParams<T>) -> Result<DjcSpectrum<T>> {
    if p.g == T::zero() {
        return Err(Error::ZeroCoupling("the perturbative expansion"));
    }
    let delta = p.delta();
    if delta != T::zero() {
        return Err(Error::NonZeroDetuning(delta.to_f64().unwrap_or(f64::NAN)));
    }
    let stark = p.kappa * p.kappa / (T::lit(8.0) * p.g);
    Ok(DjcSpectrum::from_fn(|l| {
        let b = l.branch.value::<T>();
        p.omega_c + b * p.g - l.epsilon.value::<T>() * p.kappa * T::half() + b * stark
    }))
}

/// Energies over a detuning grid.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SpectrumSweep<T> {
    pub deltas: Vec<T>,
    pub energies: Vec<DjcSpectrum<T>>,
}

/// Evaluates the spectrum at each detuning in `deltas`.
///
/// Uses `omega_c`, `g` and `kappa` from `base`; its `omega_a` is ignored so
/// each grid value is used as the detuning verbatim.
pub fn sweep_spectrum<T: Scalar>(base: &SystemParams<T>, deltas: &[T]) -> Result<SpectrumSweep<T>> {
    if deltas.is_empty() || deltas.windows(2).any(|w| !(w[0] < w[1])) {
        return Err(Error::BadGrid);
    }
    let energies = deltas.iter().map(|&d| djc_energies_at(base.omega_c, d, base.g, base.kappa)).collect();
    Ok(SpectrumSweep { deltas: deltas.to_vec(), energies })
}

/// Grid point with the smallest gap inside the `epsilon` pair, and that gap.
///
/// Returns the first grid point on ties; no interpolation.
pub fn min_gap<T: Scalar>(sweep: &SpectrumSweep<T>, epsilon: Sign) -> Result<(T, T)> {
    sweep
        .deltas
        .iter()
        .zip(&sweep.energies)
        .map(|(&d, e)| (d, e.pair_gap(epsilon)))
        .fold(None, |best: Option<(T, T)>, cur| match best {
            Some(b) if b.1 <= cur.1 => Some(b),
            _ => Some(cur),
        })
        .ok_or(Error::BadGrid)
}

/// `count` evenly spaced points from `start` to `stop` inclusive.
///
/// Point `i` is `start + (stop - start) * i / (count - 1)`, so integer
/// fractions of the span land exactly on representable values.
pub fn linspace<T: Scalar>(start: T, stop: T, count: usize) -> Vec<T> {
    match count {
        0 => Vec::new(),
        1 => vec![start],
        _ => {
            let span = stop - start;
            let denom = T::from_usize(count - 1).expect("grid size fits the scalar type");
            (0..count)
                .map(|i| {
                    if i == count - 1 {
                        stop
                    } else {
                        start + span * T::from_usize(i).expect("grid index") / denom
                    }
                })
                .collect()
        }
    }
}
