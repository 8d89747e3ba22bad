use thiserror::Error;

/// Error type shared by all modules of the crate.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// Exact integer combinatorics are only supported up to the photon
    /// cutoff; larger arguments would silently lose precision in floats.
    #[error("photon number {0} exceeds the exact-combinatorics cutoff of {max}", max = crate::comb::MAX_EXACT_PHOTONS)]
    PhotonCutoff(u32),

    #[error("mode split m = {split} exceeds photon number N = {photons}")]
    SplitOutOfRange { photons: u32, split: u32 },

    /// With 2m = N the two branch kets |N-m, m> and |m, N-m> coincide and
    /// the two-branch construction degenerates.
    #[error("degenerate mode split 2m = N (N = {photons}, m = {split})")]
    DegenerateSplit { photons: u32, split: u32 },

    #[error("entanglement angle {0} lies outside [0, pi/2]")]
    GammaOutOfRange(f64),

    #[error("photon number must be at least 1")]
    ZeroPhotonOrder,

    #[error("resonance index k must be at least 1")]
    ZeroResonanceIndex,

    #[error("wavelength must be positive, got {0}")]
    NonPositiveWavelength(f64),

    #[error("exposure time must be positive, got {0}")]
    NonPositiveTime(f64),

    #[error("phase grid must contain at least {required} samples, got {actual}")]
    GridTooSmall { required: usize, actual: usize },

    #[error("phase grid is not strictly increasing at index {0}")]
    GridNotIncreasing(usize),

    #[error("curve values and grid have different lengths ({values} vs {grid})")]
    LengthMismatch { grid: usize, values: usize },

    #[error("deposition value at index {index} is negative or non-finite ({value})")]
    InvalidCurveValue { index: usize, value: f64 },

    #[error("branch weight must be finite and nonnegative, got {0}")]
    InvalidWeight(f64),

    #[error("duplicate branch photon number {0}")]
    DuplicateBranch(u32),

    #[error("recipe has no branch with positive weight")]
    EmptyRecipe,

    #[error("harmonic index must be at least 1 (the constant term belongs to the background)")]
    ZeroHarmonic,

    /// sin(2 gamma) = 0 leaves no oscillatory component to fit with.
    #[error("entanglement angle gives sin(2 gamma) = 0; no oscillatory part is realizable")]
    ZeroOscillation,

    #[error("no interior fringe minimum found; curve has no resolvable modulation")]
    NoFringe,
}
