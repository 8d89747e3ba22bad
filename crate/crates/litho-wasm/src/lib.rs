//! wasm-bindgen exports for the browser demo page (www/index.html).
//!
//! Every function samples a curve on `samples` points covering [0, 2 pi)
//! and returns the values as a Float64Array; the page reconstructs the
//! phase axis as i / samples * 2 pi. The pure Rust lives in [`demo`] so it
//! can be unit-tested on the host; the exported wrappers only translate
//! errors into JS exceptions.

use wasm_bindgen::prelude::*;

pub mod demo {
    use litho_core::deposition::{deposition_mes, deposition_resonant};
    use litho_core::pattern::{exposure_curve, normalized_shape, pattern_error, sinphi_recipe};
    use litho_core::{DepositionCurve, Error, NmesSpec};
    use std::f64::consts::TAU;

    pub fn grid(samples: usize) -> Result<Vec<f64>, Error> {
        if samples < 2 {
            return Err(Error::GridTooSmall { required: 2, actual: samples });
        }
        Ok((0..samples).map(|i| i as f64 * TAU / samples as f64).collect())
    }

    /// Deposition rate of one entangled branch over [0, 2 pi).
    pub fn deposition_values(
        photons: u32,
        split: u32,
        gamma: f64,
        theta: f64,
        samples: usize,
    ) -> Result<Vec<f64>, Error> {
        let spec = NmesSpec::new(photons, split, gamma, theta)?;
        let grid = grid(samples)?;
        let curve = DepositionCurve::sample(&grid, |p| {
            litho_core::deposition::deposition_general(&spec, p)
        })?;
        Ok(curve.values().to_vec())
    }

    /// MES deposition fringes, the resolution baseline.
    pub fn mes_values(photons: u32, samples: usize) -> Result<Vec<f64>, Error> {
        let grid = grid(samples)?;
        let curve = DepositionCurve::sample(&grid, |p| deposition_mes(photons, p))?;
        Ok(curve.values().to_vec())
    }

    /// Resonant local-entanglement fringes (2 gamma = k N phi).
    pub fn resonant_values(photons: u32, resonance: u32, samples: usize) -> Result<Vec<f64>, Error> {
        let grid = grid(samples)?;
        let curve = DepositionCurve::sample(&grid, |p| deposition_resonant(photons, resonance, p))?;
        Ok(curve.values().to_vec())
    }

    /// Normalized (zero-mean, unit-peak) exposure of the |sin phi| fit.
    pub fn sinphi_fit_shape(n_max: u32, gamma: f64, samples: usize) -> Result<Vec<f64>, Error> {
        let recipe = sinphi_recipe(n_max, gamma, 1.0)?;
        let grid = grid(samples)?;
        let curve = exposure_curve(&recipe, &grid)?;
        Ok(normalized_shape(curve.values()))
    }

    /// Normalized |sin phi| reference samples.
    pub fn sinphi_target_shape(samples: usize) -> Result<Vec<f64>, Error> {
        let grid = grid(samples)?;
        let target: Vec<f64> = grid.iter().map(|p| p.sin().abs()).collect();
        Ok(normalized_shape(&target))
    }

    /// Normalized rms deviation of the fit from the reference.
    pub fn sinphi_fit_rms(n_max: u32, gamma: f64, samples: usize) -> Result<f64, Error> {
        let recipe = sinphi_recipe(n_max, gamma, 1.0)?;
        let grid = grid(samples)?;
        let curve = exposure_curve(&recipe, &grid)?;
        let target: Vec<f64> = grid.iter().map(|p| p.sin().abs()).collect();
        Ok(pattern_error(&curve, &target, true)?.rms)
    }
}

fn js_err(err: litho_core::Error) -> JsError {
    JsError::new(&err.to_string())
}

/// Deposition-rate curve of one entangled branch.
#[wasm_bindgen]
pub fn deposition_curve(
    photons: u32,
    split: u32,
    gamma: f64,
    theta: f64,
    samples: usize,
) -> Result<Vec<f64>, JsError> {
    demo::deposition_values(photons, split, gamma, theta, samples).map_err(js_err)
}

/// MES fringes at photon number N.
#[wasm_bindgen]
pub fn mes_curve(photons: u32, samples: usize) -> Result<Vec<f64>, JsError> {
    demo::mes_values(photons, samples).map_err(js_err)
}

/// Resonant fringes at photon number N and resonance integer k.
#[wasm_bindgen]
pub fn resonant_curve(photons: u32, resonance: u32, samples: usize) -> Result<Vec<f64>, JsError> {
    demo::resonant_values(photons, resonance, samples).map_err(js_err)
}

/// Normalized |sin phi| fit shape for branches up to n_max photons.
#[wasm_bindgen]
pub fn sinphi_fit_curve(n_max: u32, gamma: f64, samples: usize) -> Result<Vec<f64>, JsError> {
    demo::sinphi_fit_shape(n_max, gamma, samples).map_err(js_err)
}

/// Normalized |sin phi| reference curve.
#[wasm_bindgen]
pub fn sinphi_target_curve(samples: usize) -> Result<Vec<f64>, JsError> {
    demo::sinphi_target_shape(samples).map_err(js_err)
}

/// Normalized rms deviation of the |sin phi| fit.
#[wasm_bindgen]
pub fn sinphi_rms(n_max: u32, gamma: f64, samples: usize) -> Result<f64, JsError> {
    demo::sinphi_fit_rms(n_max, gamma, samples).map_err(js_err)
}
