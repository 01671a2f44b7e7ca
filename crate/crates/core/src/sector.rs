//! Fixed-excitation bases and the two-cell Hamiltonian restricted to them.
//!
//! The full Hamiltonian is the sum of two single-cell Jaynes-Cummings terms,
//! `omega_c (a†a + 1/2) + omega_a sigma_z / 2 + g (a† sigma_- + a sigma_+)`,
//! plus photon hopping `kappa (a1† a2 + a1 a2†)`. It conserves the total
//! number of quanta `nu`, so it splits into finite blocks.
//!
//! Energy offsets are the ones those terms produce with no further shift:
//! the `nu = 0` block is `[-delta]` and the `nu = 1` block carries
//! `omega_c` on the atomic diagonal.
//!
//! Hopping enters with a `+kappa` matrix element. This is the sign under
//! which the one-excitation eigenstates take the form
//! `u (|1g0g> - eps |0g1g>) + w (|0e0g> - eps |0g0e>)` with
//! `r_eps = (delta + eps kappa) / 2g`, and under which the symmetric photon
//! mode sits at `omega_c + kappa`. Flipping the phase of cell 2
//! (`a2 -> -a2`, `sigma2 -> -sigma2`) maps it onto the `-kappa` convention;
//! spectra are identical either way.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::SymMatrix;
use crate::model::SystemParams;
use crate::scalar::Scalar;

/// Largest excitation number `enumerate_sector` accepts (matrices up to 48x48).
pub const MAX_SECTOR: usize = 12;

/// Two-level atom state. Ordered `Ground < Excited`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Level {
    Ground,
    Excited,
}

impl Level {
    #[inline]
    pub fn quanta(self) -> usize {
        match self {
            Level::Ground => 0,
            Level::Excited => 1,
        }
    }

    /// Eigenvalue of `sigma_z`.
    #[inline]
    pub fn sigma_z(self) -> i32 {
        match self {
            Level::Ground => -1,
            Level::Excited => 1,
        }
    }

    fn symbol(self) -> char {
        match self {
            Level::Ground => 'g',
            Level::Excited => 'e',
        }
    }
}

/// Product state `|n1, c1, n2, c2>`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct BasisState {
    pub n1: usize,
    pub c1: Level,
    pub n2: usize,
    pub c2: Level,
}

impl BasisState {
    pub const fn new(n1: usize, c1: Level, n2: usize, c2: Level) -> Self {
        Self { n1, c1, n2, c2 }
    }

    #[inline]
    pub fn excitation_number(&self) -> usize {
        self.n1 + self.n2 + self.c1.quanta() + self.c2.quanta()
    }
}

impl fmt::Display for BasisState {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "|{}{}{}{}>", self.n1, self.c1.symbol(), self.n2, self.c2.symbol())
    }
}

use Level::{Excited as E, Ground as G};

/// One-excitation basis order: `|0e0g>, |1g0g>, |0g1g>, |0g0e>`.
pub const ONE_EXCITATION_BASIS: [BasisState; 4] = [
    BasisState::new(0, E, 0, G),
    BasisState::new(1, G, 0, G),
    BasisState::new(0, G, 1, G),
    BasisState::new(0, G, 0, E),
];

/// Ordered basis of the fixed-`nu` subspace.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SectorBasis {
    pub nu: usize,
    pub states: Vec<BasisState>,
}

impl SectorBasis {
    pub fn len(&self) -> usize {
        self.states.len()
    }

    pub fn is_empty(&self) -> bool {
        self.states.is_empty()
    }

    pub fn index_of(&self, s: &BasisState) -> Option<usize> {
        self.states.iter().position(|t| t == s)
    }
}

/// Hamiltonian block together with the basis it is written in.
#[derive(Debug, Clone, PartialEq)]
pub struct SectorMatrix<T> {
    pub basis: SectorBasis,
    pub matrix: SymMatrix<T>,
}

/// Enumerates all states with `nu` quanta.
///
/// Ordering is lexicographic in `(n1, c1, n2, c2)` with `g < e`, except for
/// `nu = 1`, which uses [`ONE_EXCITATION_BASIS`].
pub fn enumerate_sector(nu: usize) -> Result<SectorBasis> {
    if nu > MAX_SECTOR {
        return Err(Error::SectorCapacity(nu, MAX_SECTOR));
    }
    if nu == 1 {
        return Ok(SectorBasis { nu, states: ONE_EXCITATION_BASIS.to_vec() });
    }
    let mut states = Vec::with_capacity(4 * nu.max(1));
    for n1 in 0..=nu {
        for c1 in [G, E] {
            for n2 in 0..=nu {
                for c2 in [G, E] {
                    let s = BasisState::new(n1, c1, n2, c2);
                    if s.excitation_number() == nu {
                        states.push(s);
                    }
                }
            }
        }
    }
    Ok(SectorBasis { nu, states })
}

/// Diagonal energy of a product state.
fn diagonal<T: Scalar>(p: &SystemParams<T>, s: &BasisState) -> T {
    let photons = T::from_usize(s.n1 + s.n2 + 1).expect("photon count fits the scalar type");
    let sz = T::from_i32(s.c1.sigma_z() + s.c2.sigma_z()).expect("small integer");
    p.omega_c * photons + p.omega_a * T::half() * sz
}

fn sqrt_usize<T: Scalar>(k: usize) -> T {
    T::from_usize(k).expect("small integer").sqrt()
}

/// Assembles the Hamiltonian block on `basis`.
pub fn build_hamiltonian<T: Scalar>(p: &SystemParams<T>, basis: &SectorBasis) -> Result<SectorMatrix<T>> {
    let dim = basis.len();
    let mut m = SymMatrix::zeros(dim)?;
    for (i, s) in basis.states.iter().enumerate() {
        m.set(i, i, diagonal(p, s));

        // atom-cavity exchange |n, e> -> |n+1, g>, element g sqrt(n+1)
        if s.c1 == E {
            let t = BasisState { n1: s.n1 + 1, c1: G, ..*s };
            if let Some(j) = basis.index_of(&t) {
                m.set(i, j, p.g * sqrt_usize::<T>(s.n1 + 1));
            }
        }
        if s.c2 == E {
            let t = BasisState { n2: s.n2 + 1, c2: G, ..*s };
            if let Some(j) = basis.index_of(&t) {
                m.set(i, j, p.g * sqrt_usize::<T>(s.n2 + 1));
            }
        }
        // hopping a1† a2: |n1, n2> -> |n1+1, n2-1>, element kappa sqrt((n1+1) n2)
        if s.n2 > 0 {
            let t = BasisState { n1: s.n1 + 1, n2: s.n2 - 1, ..*s };
            if let Some(j) = basis.index_of(&t) {
                m.set(i, j, p.kappa * sqrt_usize::<T>((s.n1 + 1) * s.n2));
            }
        }
    }
    Ok(SectorMatrix { basis: basis.clone(), matrix: m })
}

/// Labels for the collective basis used by [`build_collective_hamiltonian`].
pub const COLLECTIVE_LABELS: [&str; 4] = ["A1", "S1", "A2", "S2"];

/// Hamiltonian in the collective-mode basis.
///
/// For `nu = 1` the basis is `{A1†|0>, S1†|0>, A2†|0>, S2†|0>}` with
/// `A1,2 = (a1 ± a2)/sqrt(2)` and `S1,2 = (sigma1 ± sigma2)/sqrt(2)`. The
/// result is block diagonal: `[[omega_c - delta + kappa, g], [g, omega_c]]`
/// followed by `[[omega_c - delta - kappa, g], [g, omega_c]]`, i.e. the
/// symmetric mode sits at `omega_c + kappa` and the antisymmetric one at
/// `omega_c - kappa`. For `nu = 0` it is `[-delta]`.
///
/// The returned `basis` field lists the bare one-excitation states for
/// reference; rows follow [`COLLECTIVE_LABELS`].
pub fn build_collective_hamiltonian<T: Scalar>(p: &SystemParams<T>, nu: usize) -> Result<SectorMatrix<T>> {
    let basis = match nu {
        0 | 1 => enumerate_sector(nu)?,
        _ => return Err(Error::CollectiveSector(nu)),
    };
    // zero-point energy of the two modes plus ground-state atoms
    let vacuum = p.omega_c - p.omega_a;
    if nu == 0 {
        let mut m = SymMatrix::zeros(1)?;
        m.set(0, 0, vacuum);
        return Ok(SectorMatrix { basis, matrix: m });
    }
    let symmetric_mode = p.omega_c + p.kappa;
    let antisymmetric_mode = p.omega_c - p.kappa;
    let mut m = SymMatrix::zeros(4)?;
    m.set(0, 0, vacuum + symmetric_mode);
    m.set(1, 1, vacuum + p.omega_a);
    m.set(0, 1, p.g);
    m.set(2, 2, vacuum + antisymmetric_mode);
    m.set(3, 3, vacuum + p.omega_a);
    m.set(2, 3, p.g);
    Ok(SectorMatrix { basis, matrix: m })
}

/// Orthogonal change of basis from bare to collective one-excitation states.
///
/// Column `k` of the result (`q[i][k]`) is collective state `k` expressed in
/// [`ONE_EXCITATION_BASIS`].
pub fn collective_transform<T: Scalar>() -> Vec<Vec<T>> {
    let h = T::FRAC_1_SQRT_2();
    let z = T::zero();
    // rows: |0e0g>, |1g0g>, |0g1g>, |0g0e>; columns: A1, S1, A2, S2
    vec![
        vec![z, h, z, h],
        vec![h, z, h, z],
        vec![h, z, -h, z],
        vec![z, h, z, -h],
    ]
}
