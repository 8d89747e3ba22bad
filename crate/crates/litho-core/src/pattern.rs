//! Pseudo-Fourier pattern engineering: incoherent superpositions of
//! fixed-split entangled branches, one Fourier harmonic per branch.
//!
//! Branches with different photon numbers do not interfere under the dosing
//! operator, so a recipe's exposure is the weighted sum of per-branch rates,
//! each branch entering at its own photon order. (The same branches driven
//! at a single higher order annihilate to zero; that reading is available
//! directly through [`crate::fock::dosing_expectation`].)

use std::f64::consts::PI;

use crate::comb::{binomial, MAX_EXACT_PHOTONS};
use crate::deposition::DepositionCurve;
use crate::error::Error;

/// One branch of a superposition recipe: an n-photon entangled pair with
/// incoherent weight |C_n|^2 and subsidiary phase theta_n.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Branch {
    pub photons: u32,
    pub weight: f64,
    pub theta: f64,
}

impl Branch {
    pub fn new(photons: u32, weight: f64, theta: f64) -> Self {
        Self { photons, weight, theta }
    }
}

/// A weighted multi-branch state description with a shared mode split m,
/// entanglement angle gamma, and exposure time t.
///
/// Stored weights are normalized to sum to 1, with the overall scale folded
/// into the exposure time, so every weight * time product is preserved.
#[derive(Debug, Clone, PartialEq)]
pub struct SuperpositionRecipe {
    split: u32,
    gamma: f64,
    time: f64,
    branches: Vec<Branch>,
}

impl SuperpositionRecipe {
    /// Validates branch weights (finite, nonnegative, not all zero),
    /// distinct photon numbers, m <= n for every branch, and 2m != n for
    /// every branch carrying weight.
    pub fn new(
        split: u32,
        gamma: f64,
        time: f64,
        branches: Vec<Branch>,
    ) -> Result<Self, Error> {
        if !time.is_finite() || time <= 0.0 {
            return Err(Error::NonPositiveTime(time));
        }
        if !gamma.is_finite() {
            return Err(Error::GammaOutOfRange(gamma));
        }
        let mut total = 0.0;
        for (i, branch) in branches.iter().enumerate() {
            if !branch.weight.is_finite() || branch.weight < 0.0 {
                return Err(Error::InvalidWeight(branch.weight));
            }
            if branch.photons > MAX_EXACT_PHOTONS {
                return Err(Error::PhotonCutoff(branch.photons));
            }
            if split > branch.photons {
                return Err(Error::SplitOutOfRange { photons: branch.photons, split });
            }
            if 2 * split == branch.photons && branch.weight > 0.0 {
                return Err(Error::DegenerateSplit { photons: branch.photons, split });
            }
            if branches[..i].iter().any(|b| b.photons == branch.photons) {
                return Err(Error::DuplicateBranch(branch.photons));
            }
            total += branch.weight;
        }
        if !total.is_finite() || total <= 0.0 {
            return Err(Error::EmptyRecipe);
        }
        let branches = branches
            .into_iter()
            .map(|b| Branch { weight: b.weight / total, ..b })
            .collect();
        Ok(Self { split, gamma, time: time * total, branches })
    }

    pub fn split(&self) -> u32 {
        self.split
    }

    pub fn gamma(&self) -> f64 {
        self.gamma
    }

    pub fn time(&self) -> f64 {
        self.time
    }

    pub fn branches(&self) -> &[Branch] {
        &self.branches
    }
}

struct BranchTerm {
    /// weight * C(n, m) / 2^n
    prefactor: f64,
    /// n - 2m
    frequency: f64,
    theta: f64,
}

fn branch_terms(recipe: &SuperpositionRecipe) -> Result<Vec<BranchTerm>, Error> {
    let m = recipe.split();
    recipe
        .branches()
        .iter()
        .filter(|b| b.weight > 0.0)
        .map(|b| {
            Ok(BranchTerm {
                prefactor: b.weight * binomial(b.photons, m)? as f64
                    / 2.0_f64.powi(b.photons as i32),
                frequency: b.photons as f64 - 2.0 * m as f64,
                theta: b.theta,
            })
        })
        .collect()
}

/// Exposure pattern P(phi) = t * sum_n w_n * Delta_{n,m}(gamma, phi), the
/// incoherent branch sum with per-branch rate
/// C(n,m)/2^n * (1 + sin(2 gamma) cos((n-2m) phi + theta_n)).
pub fn exposure_curve(
    recipe: &SuperpositionRecipe,
    phi: &[f64],
) -> Result<DepositionCurve, Error> {
    let terms = branch_terms(recipe)?;
    let sin_2g = (2.0 * recipe.gamma()).sin();
    let t = recipe.time();
    DepositionCurve::sample(phi, |p| {
        let rate: f64 = terms
            .iter()
            .map(|term| term.prefactor * (1.0 + sin_2g * (term.frequency * p + term.theta).cos()))
            .sum();
        Ok(t * rate)
    })
}

/// Background rate plus truncated cosine/sine coefficients: the analytic
/// Fourier form of a recipe's exposure,
/// P(phi) = t * (Q + sum_k a_k cos(k phi) + b_k sin(k phi)).
///
/// Coefficients are rates (the stored exposure time multiplies them at
/// evaluation) and carry the full C(n,m)/2^n branch prefactors.
#[derive(Debug, Clone, PartialEq)]
pub struct FourierPatternSpec {
    background: f64,
    time: f64,
    cos_coeffs: Vec<f64>,
    sin_coeffs: Vec<f64>,
}

impl FourierPatternSpec {
    /// Uniform background penalty exposure rate Q.
    pub fn background(&self) -> f64 {
        self.background
    }

    pub fn time(&self) -> f64 {
        self.time
    }

    /// Truncation order: the highest harmonic carried.
    pub fn max_harmonic(&self) -> u32 {
        (self.cos_coeffs.len() - 1) as u32
    }

    /// Cosine coefficients indexed by harmonic; index 0 is unused (zero).
    pub fn cos_coeffs(&self) -> &[f64] {
        &self.cos_coeffs
    }

    pub fn sin_coeffs(&self) -> &[f64] {
        &self.sin_coeffs
    }

    pub fn cos_coeff(&self, harmonic: u32) -> f64 {
        self.cos_coeffs.get(harmonic as usize).copied().unwrap_or(0.0)
    }

    pub fn sin_coeff(&self, harmonic: u32) -> f64 {
        self.sin_coeffs.get(harmonic as usize).copied().unwrap_or(0.0)
    }

    /// Pattern value at one phase (clamped at zero, like curve sampling).
    pub fn evaluate(&self, phi: f64) -> f64 {
        let mut rate = self.background;
        for k in 1..self.cos_coeffs.len() {
            let kp = k as f64 * phi;
            rate += self.cos_coeffs[k] * kp.cos() + self.sin_coeffs[k] * kp.sin();
        }
        (self.time * rate).max(0.0)
    }

    pub fn evaluate_curve(&self, phi: &[f64]) -> Result<DepositionCurve, Error> {
        DepositionCurve::sample(phi, |p| Ok(self.evaluate(p)))
    }

    /// The oscillatory content as target coefficients (pattern-level, i.e.
    /// multiplied by the exposure time), with the background as the mean.
    /// Feeding this back through [`fit_target`] reproduces the recipe.
    pub fn oscillatory_target(&self) -> TargetCoeffs {
        let harmonics = (1..self.cos_coeffs.len())
            .filter(|&k| self.cos_coeffs[k] != 0.0 || self.sin_coeffs[k] != 0.0)
            .map(|k| TargetHarmonic {
                harmonic: k as u32,
                cos: self.time * self.cos_coeffs[k],
                sin: self.time * self.sin_coeffs[k],
            })
            .collect();
        TargetCoeffs { mean: self.time * self.background, harmonics }
    }
}

/// Expands a recipe's exposure analytically into its Fourier form. Each
/// positive-weight branch contributes one harmonic at |n - 2m|; evaluating
/// the result reproduces [`exposure_curve`] pointwise.
pub fn fourier_form(recipe: &SuperpositionRecipe) -> Result<FourierPatternSpec, Error> {
    let terms = branch_terms(recipe)?;
    let sin_2g = (2.0 * recipe.gamma()).sin();
    let max_harmonic = terms
        .iter()
        .map(|t| t.frequency.abs() as usize)
        .max()
        .unwrap_or(0);
    let mut cos_coeffs = vec![0.0; max_harmonic + 1];
    let mut sin_coeffs = vec![0.0; max_harmonic + 1];
    let mut background = 0.0;
    for term in &terms {
        background += term.prefactor;
        let harmonic = term.frequency.abs() as usize;
        let amplitude = term.prefactor * sin_2g;
        // cos(f phi + theta) with f possibly negative:
        // = cos(theta) cos(|f| phi) - sign(f) sin(theta) sin(|f| phi)
        cos_coeffs[harmonic] += amplitude * term.theta.cos();
        sin_coeffs[harmonic] -= term.frequency.signum() * amplitude * term.theta.sin();
    }
    Ok(FourierPatternSpec {
        background,
        time: recipe.time(),
        cos_coeffs,
        sin_coeffs,
    })
}

/// Target pattern description for fitting: a mean level f0 plus cosine and
/// sine coefficients at integer harmonics.
#[derive(Debug, Clone, PartialEq)]
pub struct TargetCoeffs {
    pub mean: f64,
    pub harmonics: Vec<TargetHarmonic>,
}

/// One harmonic of a fit target.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TargetHarmonic {
    pub harmonic: u32,
    pub cos: f64,
    pub sin: f64,
}

/// Compiles target Fourier coefficients into an m = 0 superposition recipe
/// whose exposure reproduces every target harmonic exactly.
///
/// Each harmonic h becomes an h-photon branch with subsidiary phase
/// atan2(-sin, cos) (so a negative cosine coefficient is realized by
/// theta = pi) and weight |coeff| * 2^h / (t sin(2 gamma)). The background
/// Q t generally exceeds the target mean for gamma < pi/4: the fit
/// guarantees the oscillatory part, never the DC level.
pub fn fit_target(
    target: &TargetCoeffs,
    gamma: f64,
    time: f64,
) -> Result<SuperpositionRecipe, Error> {
    if !time.is_finite() || time <= 0.0 {
        return Err(Error::NonPositiveTime(time));
    }
    let sin_2g = (2.0 * gamma).sin();
    if sin_2g == 0.0 {
        return Err(Error::ZeroOscillation);
    }
    let mut branches = Vec::new();
    for h in &target.harmonics {
        if h.harmonic == 0 {
            return Err(Error::ZeroHarmonic);
        }
        let magnitude = h.cos.hypot(h.sin);
        if magnitude == 0.0 {
            continue;
        }
        // keep the signed zero out of atan2 so a pure negative cosine
        // lands on theta = +pi, not -pi
        let neg_sin = if h.sin == 0.0 { 0.0 } else { -h.sin };
        let theta = neg_sin.atan2(h.cos);
        let weight = magnitude * 2.0_f64.powi(h.harmonic as i32) / (time * sin_2g);
        branches.push(Branch::new(h.harmonic, weight, theta));
    }
    SuperpositionRecipe::new(0, gamma, time, branches)
}

/// Fourier data of the |sin phi| test pattern, truncated after `n_terms`
/// cosine harmonics: f0 = 2/pi, coefficient -4/(pi (4n^2 - 1)) at harmonic
/// 2n; odd harmonics absent, all sine coefficients zero.
pub fn sinphi_target_coeffs(n_terms: u32) -> TargetCoeffs {
    let harmonics = (1..=n_terms)
        .map(|n| TargetHarmonic {
            harmonic: 2 * n,
            cos: -4.0 / (PI * ((4 * n * n) as f64 - 1.0)),
            sin: 0.0,
        })
        .collect();
    TargetCoeffs { mean: 2.0 / PI, harmonics }
}

/// Recipe realizing the |sin phi| pattern with branches up to `n_max`
/// photons (harmonics 2, 4, ..., n_max).
pub fn sinphi_recipe(n_max: u32, gamma: f64, time: f64) -> Result<SuperpositionRecipe, Error> {
    fit_target(&sinphi_target_coeffs(n_max / 2), gamma, time)
}

/// Root-mean-square and supremum deviation between a curve and target
/// samples.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PatternDeviation {
    pub rms: f64,
    pub sup: f64,
}

/// Rescales a signal affinely to zero mean and unit peak magnitude; a flat
/// signal maps to all zeros.
pub fn normalized_shape(values: &[f64]) -> Vec<f64> {
    if values.is_empty() {
        return Vec::new();
    }
    let mean = values.iter().sum::<f64>() / values.len() as f64;
    let mut centered: Vec<f64> = values.iter().map(|v| v - mean).collect();
    let peak = centered.iter().fold(0.0_f64, |acc, v| acc.max(v.abs()));
    if peak > 0.0 {
        for v in &mut centered {
            *v /= peak;
        }
    }
    centered
}

/// Deviation between a curve and target samples of the same length. With
/// `normalize` set, both signals are first rescaled to zero mean and unit
/// peak, which removes the gamma-dependent background offset and overall
/// scale before comparison.
pub fn pattern_error(
    curve: &DepositionCurve,
    target: &[f64],
    normalize: bool,
) -> Result<PatternDeviation, Error> {
    if curve.len() != target.len() {
        return Err(Error::LengthMismatch { grid: curve.len(), values: target.len() });
    }
    let (a, b) = if normalize {
        (normalized_shape(curve.values()), normalized_shape(target))
    } else {
        (curve.values().to_vec(), target.to_vec())
    };
    let mut sum_sq = 0.0;
    let mut sup: f64 = 0.0;
    for (x, y) in a.iter().zip(&b) {
        let d = (x - y).abs();
        sum_sq += d * d;
        sup = sup.max(d);
    }
    Ok(PatternDeviation { rms: (sum_sq / a.len() as f64).sqrt(), sup })
}

/// Measured fringe half-period: the phase distance from the curve's global
/// maximum to the nearest adjacent local minimum, located by grid scan with
/// parabolic refinement of interior extrema.
///
/// The grid edge is not a minimum: a descent that runs off the sampled
/// window without turning up is discarded. Flat curves (gamma = 0) have no
/// interior minimum and produce [`Error::NoFringe`].
pub fn fringe_halfperiod(curve: &DepositionCurve) -> Result<f64, Error> {
    let values = curve.values();
    let phi = curve.phi();
    let n = values.len();
    if n < 3 {
        return Err(Error::GridTooSmall { required: 3, actual: n });
    }
    let mut i_max = 0;
    for i in 1..n {
        if values[i] > values[i_max] {
            i_max = i;
        }
    }
    let peak_pos = refine_extremum(phi, values, i_max);
    let mut best: Option<f64> = None;
    for dir in [1isize, -1isize] {
        let mut i = i_max as isize;
        loop {
            let next = i + dir;
            if next < 0 || next >= n as isize || values[next as usize] > values[i as usize] {
                break;
            }
            i = next;
        }
        let turned_up = (0..n as isize).contains(&(i + dir));
        if i != i_max as isize && turned_up && values[i as usize] < values[i_max] {
            let min_pos = refine_extremum(phi, values, i as usize);
            let dist = (peak_pos - min_pos).abs();
            best = Some(best.map_or(dist, |b: f64| b.min(dist)));
        }
    }
    best.ok_or(Error::NoFringe)
}

/// Vertex of the parabola through the three samples around index i; falls
/// back to the grid point at the window edge or for a degenerate fit.
fn refine_extremum(phi: &[f64], values: &[f64], i: usize) -> f64 {
    if i == 0 || i + 1 >= values.len() {
        return phi[i];
    }
    let (x0, x1, x2) = (phi[i - 1], phi[i], phi[i + 1]);
    let (y0, y1, y2) = (values[i - 1], values[i], values[i + 1]);
    let left = x1 - x0;
    let right = x1 - x2;
    let numerator = left * left * (y1 - y2) - right * right * (y1 - y0);
    let denominator = left * (y1 - y2) - right * (y1 - y0);
    if denominator.abs() <= f64::EPSILON * (y0.abs() + y1.abs() + y2.abs()) {
        return x1;
    }
    (x1 - 0.5 * numerator / denominator).clamp(x0, x2)
}
