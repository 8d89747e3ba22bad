//! Simulation toolkit for quantum photolithography with entangled N-photon
//! states shared between two beams.
//!
//! Three layers cross-check each other:
//!
//! - [`fock`]: sparse two-mode Fock states and the brute-force dosing
//!   oracle (binomial ladder expansion of the superposition mode).
//! - [`deposition`]: closed-form deposition rates for maximally and
//!   nonmaximally entangled states, general mode splits, and the resonant
//!   local-entanglement scheme, plus Rayleigh resolution figures.
//! - [`pattern`]: pseudo-Fourier pattern synthesis — compiling target 1D
//!   patterns into superposition-state exposure recipes and measuring fit
//!   error and fringe resolution.
//!
//! [`verify`] sweeps the closed forms against the oracle over a fixed
//! parameter lattice and backs both the `verify` CLI command and the
//! acceptance suite.

pub mod deposition;
pub mod fock;
pub mod pattern;
pub mod verify;

mod comb;
mod error;

pub use deposition::{DepositionCurve, ResolutionScheme, SchemeKind};
pub use error::Error;
pub use fock::{NmesSpec, TwoModeFockState};
pub use pattern::{
    Branch, FourierPatternSpec, PatternDeviation, SuperpositionRecipe, TargetCoeffs,
    TargetHarmonic,
};
