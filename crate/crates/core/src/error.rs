use thiserror::Error;

/// Errors raised by the model, the eigensolver and the configuration layer.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("doublet index n must be >= 1 (n = 0 is the ground singlet)")]
    ZeroDoublet,
    #[error("mixing angle undefined: g = 0 and detuning = 0 leave the doublet fully degenerate")]
    UndefinedAngle,
    #[error("coupling g must be > 0 for {0}")]
    ZeroCoupling(&'static str),
    #[error("perturbative energies require zero detuning, got {0}")]
    NonZeroDetuning(f64),
    #[error("matrix contains non-finite entries")]
    NonFinite,
    #[error("matrix dimension must be >= 1 and rows must be square")]
    BadShape,
    #[error("length mismatch: {0} vs {1}")]
    LengthMismatch(usize, usize),
    #[error("excitation number {0} exceeds the supported cap of {1}")]
    SectorCapacity(usize, usize),
    #[error("collective Hamiltonian is only available for nu in {{0, 1}}, got {0}")]
    CollectiveSector(usize),
    #[error("grid must be nonempty and strictly ascending")]
    BadGrid,
    #[error("probe linewidth gamma_a must be > 0, got {0}")]
    NonPositiveLinewidth(f64),
    #[error("negative damping rate {0} = {1}")]
    NegativeRate(&'static str, f64),
    #[error("two-Lorentzian form requires symmetric damping (gamma1 = gamma2, gammac1 = gammac2)")]
    AsymmetricDamping,
    #[error("need at least two peaks, found {0}")]
    TooFewPeaks(usize),
    #[error("division by zero")]
    DivisionByZero,
    #[error("config error in key `{key}`: {msg}")]
    Config { key: String, msg: String },
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn config(key: impl Into<String>, msg: impl Into<String>) -> Self {
        Error::Config { key: key.into(), msg: msg.into() }
    }
}
