//! Closed-form deposition rates and resolution figures of merit.
//!
//! Rates here are analytic companions to the ladder oracle in
//! [`crate::fock`]; the standing verification sweep in [`crate::verify`]
//! keeps the two routes in agreement.

use num_complex::Complex64 as C64;

pub use crate::comb::{binomial, factorial, MAX_EXACT_PHOTONS};
use crate::error::Error;
use crate::fock::NmesSpec;

/// Deposition rate of the maximally entangled N-photon state:
/// (1 + cos(N phi)) / 2^N.
pub fn deposition_mes(photons: u32, phi: f64) -> Result<f64, Error> {
    if photons == 0 {
        return Err(Error::ZeroPhotonOrder);
    }
    Ok((1.0 + (photons as f64 * phi).cos()) / 2.0_f64.powi(photons as i32))
}

/// Deposition rate of the nonmaximally entangled state with entanglement
/// angle gamma: (1 + sin(2 gamma) cos(N phi)) / 2^N.
///
/// gamma is unrestricted here; in particular the resonant substitution
/// gamma = k N phi / 2 is a valid argument.
pub fn deposition_nmes(photons: u32, gamma: f64, phi: f64) -> Result<f64, Error> {
    if photons == 0 {
        return Err(Error::ZeroPhotonOrder);
    }
    Ok((1.0 + (2.0 * gamma).sin() * (photons as f64 * phi).cos()) / 2.0_f64.powi(photons as i32))
}

/// Deposition rate of the general split-m branch:
/// C(N, m)/2^N * (1 + sin(2 gamma) cos((N - 2m) phi + theta)).
pub fn deposition_general(spec: &NmesSpec, phi: f64) -> Result<f64, Error> {
    let weight = binomial(spec.photons(), spec.split())? as f64;
    let fringe = spec.fringe_frequency() as f64;
    Ok(weight / 2.0_f64.powi(spec.photons() as i32)
        * (1.0 + (2.0 * spec.gamma()).sin() * (fringe * phi + spec.theta()).cos()))
}

/// Off-diagonal dosing matrix element between split-m and split-m' branches
/// of the same photon number, as a four-term closed form:
///
/// sqrt(C(N,m) C(N,m')) / 2^N * [ cos^2(g) e^{i(m'-m)phi}
///   + sin^2(g) e^{-i(m'-m)phi} e^{i(th'-th)}
///   + (1/2) sin(2g) (e^{i(N-m-m')phi} e^{i th'} + e^{-i(N-m-m')phi} e^{-i th}) ]
///
/// Degenerate splits (2m = N) are allowed: the element is linear in each
/// branch, so the formula holds even when a state's two kets coincide.
pub fn matrix_element_general(
    photons: u32,
    m: u32,
    m_prime: u32,
    gamma: f64,
    theta_m: f64,
    theta_m_prime: f64,
    phi: f64,
) -> Result<C64, Error> {
    let prefactor = (binomial(photons, m)? as f64 * binomial(photons, m_prime)? as f64).sqrt()
        / 2.0_f64.powi(photons as i32);
    let dm = m_prime as f64 - m as f64;
    let cross = photons as f64 - m as f64 - m_prime as f64;
    let (cos_g, sin_g) = (gamma.cos(), gamma.sin());
    let half_sin_2g = 0.5 * (2.0 * gamma).sin();
    let sum = C64::from_polar(cos_g * cos_g, dm * phi)
        + C64::from_polar(sin_g * sin_g, -dm * phi + (theta_m_prime - theta_m))
        + C64::from_polar(half_sin_2g, cross * phi + theta_m_prime)
        + C64::from_polar(half_sin_2g, -cross * phi - theta_m);
    Ok(sum * prefactor)
}

/// Deposition rate under the resonant local-entanglement relation
/// 2 gamma = k N phi:
/// (2 + sin((k+1) N phi) + sin((k-1) N phi)) / 2^{N+1}.
///
/// Equals `deposition_nmes(N, k N phi / 2, phi)` identically; both routes
/// are kept and tested against each other.
pub fn deposition_resonant(photons: u32, resonance: u32, phi: f64) -> Result<f64, Error> {
    if photons == 0 {
        return Err(Error::ZeroPhotonOrder);
    }
    if resonance == 0 {
        return Err(Error::ZeroResonanceIndex);
    }
    let n = photons as f64;
    let k = resonance as f64;
    Ok((2.0 + ((k + 1.0) * n * phi).sin() + ((k - 1.0) * n * phi).sin())
        / 2.0_f64.powi(photons as i32 + 1))
}

/// Which fringe-producing scheme a resolution figure refers to.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SchemeKind {
    /// Classical two-beam interference.
    Classical,
    /// Maximally entangled N-photon state.
    Mes { photons: u32 },
    /// Resonant local entanglement, 2 gamma = k N phi.
    Resonant { photons: u32, resonance: u32 },
}

/// A scheme plus the optical wavelength it is evaluated at.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ResolutionScheme {
    kind: SchemeKind,
    wavelength: f64,
}

impl ResolutionScheme {
    pub fn new(kind: SchemeKind, wavelength: f64) -> Result<Self, Error> {
        if !wavelength.is_finite() || wavelength <= 0.0 {
            return Err(Error::NonPositiveWavelength(wavelength));
        }
        match kind {
            SchemeKind::Classical => {}
            SchemeKind::Mes { photons } => {
                if photons == 0 {
                    return Err(Error::ZeroPhotonOrder);
                }
            }
            SchemeKind::Resonant { photons, resonance } => {
                if photons == 0 {
                    return Err(Error::ZeroPhotonOrder);
                }
                if resonance == 0 {
                    return Err(Error::ZeroResonanceIndex);
                }
            }
        }
        Ok(Self { kind, wavelength })
    }

    pub fn kind(&self) -> SchemeKind {
        self.kind
    }

    pub fn wavelength(&self) -> f64 {
        self.wavelength
    }
}

/// Effective Rayleigh resolution (maximum-to-adjacent-minimum distance in
/// x-space): lambda/4 classically, lambda/(4N) for the N-photon MES, and
/// lambda/(4(k+1)N) for the resonant scheme.
pub fn effective_resolution(scheme: &ResolutionScheme) -> f64 {
    let lambda = scheme.wavelength();
    match scheme.kind() {
        SchemeKind::Classical => lambda / 4.0,
        SchemeKind::Mes { photons } => lambda / (4.0 * photons as f64),
        SchemeKind::Resonant { photons, resonance } => {
            lambda / (4.0 * (resonance as f64 + 1.0) * photons as f64)
        }
    }
}

/// A sampled deposition or exposure curve over a strictly increasing phase
/// grid; all values are nonnegative.
#[derive(Debug, Clone, PartialEq)]
pub struct DepositionCurve {
    phi: Vec<f64>,
    values: Vec<f64>,
}

impl DepositionCurve {
    pub fn new(phi: Vec<f64>, values: Vec<f64>) -> Result<Self, Error> {
        if phi.len() != values.len() {
            return Err(Error::LengthMismatch { grid: phi.len(), values: values.len() });
        }
        if phi.is_empty() {
            return Err(Error::GridTooSmall { required: 1, actual: 0 });
        }
        for i in 1..phi.len() {
            // NaN compares false, so it is rejected here too
            if phi[i].partial_cmp(&phi[i - 1]) != Some(std::cmp::Ordering::Greater) {
                return Err(Error::GridNotIncreasing(i));
            }
        }
        for (index, &value) in values.iter().enumerate() {
            if !value.is_finite() || value < 0.0 {
                return Err(Error::InvalidCurveValue { index, value });
            }
        }
        Ok(Self { phi, values })
    }

    /// Samples a rate function over a grid. Values are clamped at zero:
    /// the modeled rates are nonnegative, and clamping absorbs the odd
    /// -1e-17 from floating-point cancellation near a dark fringe.
    pub fn sample<F>(phi: &[f64], mut rate: F) -> Result<Self, Error>
    where
        F: FnMut(f64) -> Result<f64, Error>,
    {
        let values = phi
            .iter()
            .map(|&p| rate(p).map(|v| v.max(0.0)))
            .collect::<Result<Vec<_>, _>>()?;
        Self::new(phi.to_vec(), values)
    }

    pub fn phi(&self) -> &[f64] {
        &self.phi
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.phi.len()
    }

    pub fn is_empty(&self) -> bool {
        self.phi.is_empty()
    }

    pub fn points(&self) -> impl Iterator<Item = (f64, f64)> + '_ {
        self.phi.iter().copied().zip(self.values.iter().copied())
    }
}

/// Evenly spaced grid of `samples` points covering [min, max] inclusive.
pub fn phi_grid(min: f64, max: f64, samples: usize) -> Result<Vec<f64>, Error> {
    if samples < 2 {
        return Err(Error::GridTooSmall { required: 2, actual: samples });
    }
    if !min.is_finite() || !max.is_finite() || min >= max {
        return Err(Error::GridNotIncreasing(1));
    }
    let step = (max - min) / (samples - 1) as f64;
    Ok((0..samples).map(|i| min + step * i as f64).collect())
}
