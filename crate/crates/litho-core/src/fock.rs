//! Exact two-mode Fock-space state algebra and the brute-force dosing
//! oracle.
//!
//! States are sparse complex amplitude maps over occupation pairs
//! `(n_a, n_b)`. The dosing operator of order q is `(e^dag)^q e^q / q!`
//! with the superposition mode `e = (a + b)/sqrt(2)`; its expectation and
//! matrix elements are evaluated here by literal ladder-operator expansion,
//! with no closed-form shortcuts, so the module can serve as an independent
//! check on every analytic deposition formula.

use std::collections::BTreeMap;
use std::ops::{Add, Mul};

use num_complex::Complex64 as C64;

use crate::comb::{binomial_row, factorial, falling_factorial_sqrt};
use crate::error::Error;

/// Default magnitude below which amplitudes are dropped after an operator
/// application, keeping the support sparse.
pub const DEFAULT_PRUNE_EPS: f64 = 1e-15;

/// Parameters of one nonmaximally entangled N-photon branch pair:
/// amplitude cos(gamma) on |N-m, m> and e^{i theta} sin(gamma) on |m, N-m>,
/// with the evaluation phase phi supplied per call.
///
/// gamma runs from 0 (product state) to pi/4 (maximal entanglement); the
/// range up to pi/2 swaps the weight onto the second ket.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct NmesSpec {
    photons: u32,
    split: u32,
    gamma: f64,
    theta: f64,
}

impl NmesSpec {
    /// Validates 0 <= m <= N, 2m != N, and gamma in [0, pi/2].
    pub fn new(photons: u32, split: u32, gamma: f64, theta: f64) -> Result<Self, Error> {
        if split > photons {
            return Err(Error::SplitOutOfRange { photons, split });
        }
        if 2 * split == photons {
            return Err(Error::DegenerateSplit { photons, split });
        }
        if !(0.0..=std::f64::consts::FRAC_PI_2).contains(&gamma) {
            return Err(Error::GammaOutOfRange(gamma));
        }
        Ok(Self { photons, split, gamma, theta })
    }

    pub fn photons(&self) -> u32 {
        self.photons
    }

    pub fn split(&self) -> u32 {
        self.split
    }

    pub fn gamma(&self) -> f64 {
        self.gamma
    }

    pub fn theta(&self) -> f64 {
        self.theta
    }

    /// Fringe frequency N - 2m of the diagonal deposition rate.
    pub fn fringe_frequency(&self) -> i64 {
        self.photons as i64 - 2 * self.split as i64
    }
}

/// Sparse two-mode Fock state: finite map from occupation pairs to complex
/// amplitudes. Not necessarily normalized.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct TwoModeFockState {
    amps: BTreeMap<(u32, u32), C64>,
}

impl TwoModeFockState {
    /// The zero state (empty support).
    pub fn zero() -> Self {
        Self::default()
    }

    /// Basis ket |n_a, n_b> with amplitude 1.
    pub fn basis(n_a: u32, n_b: u32) -> Self {
        let mut amps = BTreeMap::new();
        amps.insert((n_a, n_b), C64::new(1.0, 0.0));
        Self { amps }
    }

    /// Builds a state from (occupation pair, amplitude) contributions;
    /// amplitudes landing on the same pair accumulate.
    pub fn from_amplitudes<I>(contributions: I) -> Self
    where
        I: IntoIterator<Item = ((u32, u32), C64)>,
    {
        let mut state = Self::zero();
        for ((n_a, n_b), amp) in contributions {
            state.add_amplitude(n_a, n_b, amp);
        }
        state
    }

    /// Adds `amp` to the amplitude stored at |n_a, n_b>.
    pub fn add_amplitude(&mut self, n_a: u32, n_b: u32, amp: C64) {
        *self.amps.entry((n_a, n_b)).or_insert(C64::new(0.0, 0.0)) += amp;
    }

    /// Amplitude at |n_a, n_b>; zero if the pair is not in the support.
    pub fn amplitude(&self, n_a: u32, n_b: u32) -> C64 {
        self.amps.get(&(n_a, n_b)).copied().unwrap_or(C64::new(0.0, 0.0))
    }

    /// Iterates over the support in occupation order.
    pub fn amplitudes(&self) -> impl Iterator<Item = ((u32, u32), C64)> + '_ {
        self.amps.iter().map(|(&k, &v)| (k, v))
    }

    pub fn support_size(&self) -> usize {
        self.amps.len()
    }

    pub fn is_zero(&self) -> bool {
        self.amps.is_empty()
    }

    /// Sum of squared amplitude magnitudes.
    pub fn squared_norm(&self) -> f64 {
        self.amps.values().map(|a| a.norm_sqr()).sum()
    }

    /// Largest total occupation n_a + n_b in the support.
    pub fn max_total_photons(&self) -> Option<u32> {
        self.amps.keys().map(|&(a, b)| a + b).max()
    }

    /// Inner product <self|other>; the left argument is conjugated.
    pub fn inner(&self, other: &Self) -> C64 {
        let mut acc = C64::new(0.0, 0.0);
        for (key, amp) in &self.amps {
            if let Some(their) = other.amps.get(key) {
                acc += amp.conj() * their;
            }
        }
        acc
    }

    /// Drops amplitudes with magnitude below `eps`.
    pub fn prune(&mut self, eps: f64) {
        self.amps.retain(|_, a| a.norm() >= eps);
    }
}

impl Add<&TwoModeFockState> for &TwoModeFockState {
    type Output = TwoModeFockState;

    fn add(self, rhs: &TwoModeFockState) -> TwoModeFockState {
        let mut out = self.clone();
        for ((n_a, n_b), amp) in rhs.amplitudes() {
            out.add_amplitude(n_a, n_b, amp);
        }
        out
    }
}

impl Mul<C64> for &TwoModeFockState {
    type Output = TwoModeFockState;

    fn mul(self, factor: C64) -> TwoModeFockState {
        TwoModeFockState {
            amps: self.amps.iter().map(|(&k, &a)| (k, a * factor)).collect(),
        }
    }
}

/// Builds the two-branch entangled state
/// e^{i m phi} cos(gamma) |N-m, m> + e^{i (N-m) phi} e^{i theta} sin(gamma) |m, N-m>.
///
/// Global branch phases are kept (never factored out) so off-diagonal
/// dosing matrix elements retain their phase structure.
pub fn make_nmes_state(spec: &NmesSpec, phi: f64) -> TwoModeFockState {
    let n = spec.photons();
    let m = spec.split();
    TwoModeFockState::from_amplitudes([
        ((n - m, m), C64::from_polar(spec.gamma().cos(), m as f64 * phi)),
        (
            (m, n - m),
            C64::from_polar(spec.gamma().sin(), (n - m) as f64 * phi + spec.theta()),
        ),
    ])
}

/// Applies e^q with e = (a + b)/sqrt(2), expanded binomially:
/// e^q = 2^{-q/2} sum_j C(q, j) a^j b^{q-j}, with exact sqrt ladder factors.
/// Occupation pairs driven below zero are dropped (vacuum annihilates to
/// the zero state, not an error). Output amplitudes below
/// [`DEFAULT_PRUNE_EPS`] are pruned.
pub fn apply_e_power(q: u32, state: &TwoModeFockState) -> Result<TwoModeFockState, Error> {
    apply_e_power_pruned(q, state, DEFAULT_PRUNE_EPS)
}

/// [`apply_e_power`] with a caller-chosen pruning threshold (0 disables
/// pruning).
pub fn apply_e_power_pruned(
    q: u32,
    state: &TwoModeFockState,
    prune_eps: f64,
) -> Result<TwoModeFockState, Error> {
    let coeffs = binomial_row(q)?;
    let prefactor = 2.0_f64.powi(-(q as i32)).sqrt(); // 2^{-q/2}
    let mut out = TwoModeFockState::zero();
    for ((n_a, n_b), amp) in state.amplitudes() {
        for j in 0..=q {
            let (k_a, k_b) = (j, q - j);
            if k_a > n_a || k_b > n_b {
                continue;
            }
            let ladder = falling_factorial_sqrt(n_a, k_a) * falling_factorial_sqrt(n_b, k_b);
            out.add_amplitude(n_a - k_a, n_b - k_b, amp * (prefactor * coeffs[j as usize] * ladder));
        }
    }
    out.prune(prune_eps);
    Ok(out)
}

/// Expectation of the order-q dosing operator: ||e^q |psi>||^2 / q!.
///
/// Zero whenever every supported occupation pair holds fewer than q photons.
pub fn dosing_expectation(q: u32, state: &TwoModeFockState) -> Result<f64, Error> {
    let lowered = apply_e_power(q, state)?;
    Ok(lowered.squared_norm() / factorial(q)? as f64)
}

/// Dosing matrix element <bra| (e^dag)^q e^q |ket> / q!; reduces to
/// [`dosing_expectation`] when bra = ket.
pub fn dosing_matrix_element(
    q: u32,
    bra: &TwoModeFockState,
    ket: &TwoModeFockState,
) -> Result<C64, Error> {
    let lowered_bra = apply_e_power(q, bra)?;
    let lowered_ket = apply_e_power(q, ket)?;
    Ok(lowered_bra.inner(&lowered_ket) / factorial(q)? as f64)
}
