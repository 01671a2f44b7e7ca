//! One-excitation eigenstates and the equal-weight (maximal entanglement) criterion.
//!
//! Each eigenstate has the W-like form
//!
//! ```text
//! |branch, r_eps> = u (|1g0g> - eps |0g1g>) + w (|0e0g> - eps |0g0e>)
//! r_eps = (delta + eps kappa) / 2g
//! u = (-r ± s) / sqrt(2 + 2 (r ∓ s)^2),   w = 1 / sqrt(2 + 2 (r ∓ s)^2),   s = sqrt(1 + r^2)
//! ```
//!
//! so `2u^2 + 2w^2 = 1`. The state spreads equal weight `1/4` over the four
//! basis kets exactly when `r_eps = 0`, i.e. at `delta = -eps kappa`. At that
//! point the lower branch has `u = -1/2`, `w = 1/2`; "equal weight" is a
//! statement about `|u|` and `|w|`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::model::SystemParams;
use crate::scalar::Scalar;
use crate::spectrum::Sign;

/// Photonic (`u`) and atomic (`w`) amplitudes of both branches of one `eps` pair.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct EigenAmplitudes<T> {
    pub epsilon: Sign,
    pub r: T,
    pub u_plus: T,
    pub w_plus: T,
    pub u_minus: T,
    pub w_minus: T,
}

impl<T: Scalar> EigenAmplitudes<T> {
    /// `(u, w)` for the given branch.
    pub fn branch(&self, branch: Sign) -> (T, T) {
        match branch {
            Sign::Plus => (self.u_plus, self.w_plus),
            Sign::Minus => (self.u_minus, self.w_minus),
        }
    }
}

/// `(delta + eps kappa) / 2g`.
pub fn r_epsilon<T: Scalar>(p: &SystemParams<T>, epsilon: Sign) -> Result<T> {
    if !(p.g > T::zero()) {
        return Err(Error::ZeroCoupling("the one-excitation eigenstates"));
    }
    Ok((p.delta() + epsilon.value::<T>() * p.kappa) / (T::two() * p.g))
}

/// Amplitudes for a given `r`.
///
/// `-r + s` and `-r - s` are formed without cancellation (via
/// `s - r = 1 / (s + r)` for `r > 0` and the mirror identity for `r < 0`),
/// so far-detuned states keep full relative precision.
pub fn amplitudes<T: Scalar>(r: T, epsilon: Sign) -> EigenAmplitudes<T> {
    let s = (T::one() + r * r).sqrt();
    // numerators of u: a_plus = -r + s, a_minus = -r - s
    let a_plus = if r > T::zero() { T::one() / (s + r) } else { s - r };
    let a_minus = if r < T::zero() { -T::one() / (s - r) } else { -(r + s) };
    // (r ∓ s)^2 = a_±^2
    let norm = |a: T| (T::two() + T::two() * a * a).sqrt();
    let (n_plus, n_minus) = (norm(a_plus), norm(a_minus));
    EigenAmplitudes {
        epsilon,
        r,
        u_plus: a_plus / n_plus,
        w_plus: T::one() / n_plus,
        u_minus: a_minus / n_minus,
        w_minus: T::one() / n_minus,
    }
}

/// Eigenvector in the basis `|0e0g>, |1g0g>, |0g1g>, |0g0e>`: `(w, u, -eps u, -eps w)`.
pub fn eigenstate_vector<T: Scalar>(p: &SystemParams<T>, epsilon: Sign, branch: Sign) -> Result<[T; 4]> {
    let a = amplitudes(r_epsilon(p, epsilon)?, epsilon);
    Ok(vector_from_amplitudes(&a, branch))
}

pub fn vector_from_amplitudes<T: Scalar>(a: &EigenAmplitudes<T>, branch: Sign) -> [T; 4] {
    let (u, w) = a.branch(branch);
    let m = -a.epsilon.value::<T>();
    [w, u, m * u, m * w]
}

/// `max_branch (| u^2 - 1/4 | + | w^2 - 1/4 |)`; zero iff every basis weight is `1/4`.
pub fn entanglement_deviation<T: Scalar>(a: &EigenAmplitudes<T>) -> T {
    Sign::BOTH
        .iter()
        .map(|&b| {
            let (u, w) = a.branch(b);
            (u * u - T::quarter()).abs() + (w * w - T::quarter()).abs()
        })
        .fold(T::zero(), T::max)
}
