//! Standing verification sweep: closed-form deposition rates and matrix
//! elements checked against the brute-force Fock-space ladder oracle over a
//! fixed parameter lattice.

use std::f64::consts::{FRAC_PI_4, FRAC_PI_6, FRAC_PI_8, PI, TAU};

use crate::deposition::{deposition_general, matrix_element_general};
use crate::error::Error;
use crate::fock::{
    dosing_expectation, dosing_matrix_element, make_nmes_state, NmesSpec, TwoModeFockState,
};

/// Entanglement angles of the standing lattice.
pub const GAMMA_LATTICE: [f64; 5] = [0.0, FRAC_PI_8, FRAC_PI_6, FRAC_PI_4, 3.0 * FRAC_PI_8];

/// Subsidiary phases of the standing lattice.
pub const THETA_LATTICE: [f64; 3] = [0.0, FRAC_PI_4, PI];

/// Agreement threshold for the sweep.
pub const ORACLE_TOLERANCE: f64 = 1e-10;

/// One diagonal case: closed-form deposition rate vs dosing expectation.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DiagonalCase {
    pub photons: u32,
    pub split: u32,
    pub gamma: f64,
    pub theta: f64,
    pub phi: f64,
}

/// One off-diagonal case: closed-form matrix element vs the ladder oracle.
/// Degenerate splits are included; the two-branch state is then built by
/// accumulating both contributions on the same ket.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CrossCase {
    pub photons: u32,
    pub split: u32,
    pub split_prime: u32,
    pub gamma: f64,
    pub theta: f64,
    pub theta_prime: f64,
    pub phi: f64,
}

/// All valid-split diagonal cases with N <= max_photons over the standing
/// gamma/theta lattice and a uniform phi grid on [0, 2pi).
pub fn diagonal_cases(max_photons: u32, phi_samples: usize) -> Vec<DiagonalCase> {
    let mut cases = Vec::new();
    for photons in 1..=max_photons {
        for split in 0..=photons {
            if 2 * split == photons {
                continue;
            }
            for &gamma in &GAMMA_LATTICE {
                for &theta in &THETA_LATTICE {
                    for i in 0..phi_samples {
                        cases.push(DiagonalCase {
                            photons,
                            split,
                            gamma,
                            theta,
                            phi: i as f64 * TAU / phi_samples as f64,
                        });
                    }
                }
            }
        }
    }
    cases
}

/// |closed form - oracle| for one diagonal case.
pub fn diagonal_discrepancy(case: &DiagonalCase) -> Result<f64, Error> {
    let spec = NmesSpec::new(case.photons, case.split, case.gamma, case.theta)?;
    let closed = deposition_general(&spec, case.phi)?;
    let state = make_nmes_state(&spec, case.phi);
    let oracle = dosing_expectation(case.photons, &state)?;
    Ok((closed - oracle).abs())
}

/// Off-diagonal lattice: every (m, m') pair (degenerate splits included)
/// with N <= max_photons, a reduced angle lattice, and a uniform phi grid.
pub fn cross_cases(max_photons: u32, phi_samples: usize) -> Vec<CrossCase> {
    let mut cases = Vec::new();
    for photons in 1..=max_photons {
        for split in 0..=photons {
            for split_prime in 0..=photons {
                for &gamma in &[FRAC_PI_8, FRAC_PI_4, 3.0 * FRAC_PI_8] {
                    for &(theta, theta_prime) in &[(0.0, FRAC_PI_4), (FRAC_PI_4, PI)] {
                        for i in 0..phi_samples {
                            cases.push(CrossCase {
                                photons,
                                split,
                                split_prime,
                                gamma,
                                theta,
                                theta_prime,
                                phi: i as f64 * TAU / phi_samples as f64,
                            });
                        }
                    }
                }
            }
        }
    }
    cases
}

/// Two-branch state for a possibly degenerate split, built literally so the
/// oracle sees exactly the kets the closed form assumes.
fn branch_state(photons: u32, split: u32, gamma: f64, theta: f64, phi: f64) -> TwoModeFockState {
    TwoModeFockState::from_amplitudes([
        (
            (photons - split, split),
            num_complex::Complex64::from_polar(gamma.cos(), split as f64 * phi),
        ),
        (
            (split, photons - split),
            num_complex::Complex64::from_polar(
                gamma.sin(),
                (photons - split) as f64 * phi + theta,
            ),
        ),
    ])
}

/// |closed form - oracle| for one off-diagonal case (complex modulus).
pub fn cross_discrepancy(case: &CrossCase) -> Result<f64, Error> {
    let closed = matrix_element_general(
        case.photons,
        case.split,
        case.split_prime,
        case.gamma,
        case.theta,
        case.theta_prime,
        case.phi,
    )?;
    let bra = branch_state(case.photons, case.split, case.gamma, case.theta, case.phi);
    let ket = branch_state(
        case.photons,
        case.split_prime,
        case.gamma,
        case.theta_prime,
        case.phi,
    );
    let oracle = dosing_matrix_element(case.photons, &bra, &ket)?;
    Ok((closed - oracle).norm())
}

/// Outcome of a full sweep.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SweepReport {
    pub cases: usize,
    pub max_discrepancy: f64,
}

impl SweepReport {
    pub fn passes(&self, tolerance: f64) -> bool {
        self.max_discrepancy <= tolerance
    }
}

/// Runs the diagonal sweep sequentially.
pub fn run_diagonal_sweep(max_photons: u32, phi_samples: usize) -> Result<SweepReport, Error> {
    let cases = diagonal_cases(max_photons, phi_samples);
    let mut max_discrepancy: f64 = 0.0;
    for case in &cases {
        max_discrepancy = max_discrepancy.max(diagonal_discrepancy(case)?);
    }
    Ok(SweepReport { cases: cases.len(), max_discrepancy })
}

/// Runs the off-diagonal sweep sequentially.
pub fn run_cross_sweep(max_photons: u32, phi_samples: usize) -> Result<SweepReport, Error> {
    let cases = cross_cases(max_photons, phi_samples);
    let mut max_discrepancy: f64 = 0.0;
    for case in &cases {
        max_discrepancy = max_discrepancy.max(cross_discrepancy(case)?);
    }
    Ok(SweepReport { cases: cases.len(), max_discrepancy })
}
