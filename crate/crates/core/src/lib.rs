//! Energy spectrum, stationary states and linear susceptibility of two
//! Jaynes-Cummings cells coupled by photon hopping, restricted to the
//! zero- and one-excitation sectors, with a dense eigensolver oracle for
//! checking every closed form.
//!
//! The numerics are generic over [`Scalar`] (`f32` or `f64`); the `f64`
//! aliases below are what the CLI and the tolerance-pinned tests use.

#![allow(clippy::needless_range_loop, clippy::neg_cmp_op_on_partial_ord)]

pub mod commands;
pub mod config;
pub mod eigenstates;
pub mod error;
pub mod linalg;
pub mod model;
pub mod output;
pub mod scalar;
pub mod sector;
pub mod spectrum;
pub mod susceptibility;
pub mod validate;

pub use eigenstates::{amplitudes, eigenstate_vector, entanglement_deviation, r_epsilon, EigenAmplitudes};
pub use error::{Error, Result};
pub use linalg::{eig_sym, eigenvalue_multiset_equal, ComplexValue, EigenSystem, SymMatrix};
pub use model::{jc_doublet_energies, jc_ground_energy, jc_mixing_angle, DampingParams, SystemParams};
pub use scalar::Scalar;
pub use sector::{
    build_collective_hamiltonian, build_hamiltonian, enumerate_sector, BasisState, Level, SectorBasis, SectorMatrix,
};
pub use spectrum::{
    djc_energies, djc_energies_perturbative, linspace, min_gap, sweep_spectrum, BranchLabel, DjcSpectrum, Sign,
    SpectrumSweep,
};
pub use susceptibility::{
    absorption_imag, matrix_elements, peak_report, susceptibility_curve, symmetry_metric, transition_probabilities,
    transition_table, AbsorptionCurve, Peak, TransitionTable,
};

pub type Params = SystemParams<f64>;
pub type Damping = DampingParams<f64>;
pub type Matrix = SymMatrix<f64>;
pub type Eigen = EigenSystem<f64>;
pub type Amplitudes = EigenAmplitudes<f64>;
pub type Spectrum = DjcSpectrum<f64>;
pub type Sweep = SpectrumSweep<f64>;
pub type Curve = AbsorptionCurve<f64>;
pub type Complex64 = ComplexValue<f64>;
