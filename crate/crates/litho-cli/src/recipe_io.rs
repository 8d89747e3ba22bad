//! JSON schemas for recipes and fit targets.
//!
//! Recipe: {"m": int, "gamma": float, "t": float,
//!          "branches": [{"n": int, "weight": float, "theta": float}]}
//! Target: {"f0": float, "harmonics": [{"n": int, "cos": float, "sin": float}]}

use std::path::Path;

use serde::{Deserialize, Serialize};

use litho_core::{Branch, SuperpositionRecipe, TargetCoeffs, TargetHarmonic};

use crate::error::CliError;

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RecipeDto {
    pub m: u32,
    pub gamma: f64,
    pub t: f64,
    pub branches: Vec<BranchDto>,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BranchDto {
    pub n: u32,
    pub weight: f64,
    pub theta: f64,
}

impl From<&SuperpositionRecipe> for RecipeDto {
    fn from(recipe: &SuperpositionRecipe) -> Self {
        RecipeDto {
            m: recipe.split(),
            gamma: recipe.gamma(),
            t: recipe.time(),
            branches: recipe
                .branches()
                .iter()
                .map(|b| BranchDto { n: b.photons, weight: b.weight, theta: b.theta })
                .collect(),
        }
    }
}

impl RecipeDto {
    /// Revalidates through the core constructor, so file-supplied recipes
    /// honor the same invariants as programmatic ones.
    pub fn into_recipe(self) -> Result<SuperpositionRecipe, CliError> {
        let branches = self
            .branches
            .into_iter()
            .map(|b| Branch::new(b.n, b.weight, b.theta))
            .collect();
        SuperpositionRecipe::new(self.m, self.gamma, self.t, branches).map_err(CliError::from)
    }
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TargetDto {
    pub f0: f64,
    pub harmonics: Vec<TargetHarmonicDto>,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TargetHarmonicDto {
    pub n: u32,
    pub cos: f64,
    #[serde(default)]
    pub sin: f64,
}

impl From<TargetDto> for TargetCoeffs {
    fn from(dto: TargetDto) -> Self {
        TargetCoeffs {
            mean: dto.f0,
            harmonics: dto
                .harmonics
                .into_iter()
                .map(|h| TargetHarmonic { harmonic: h.n, cos: h.cos, sin: h.sin })
                .collect(),
        }
    }
}

pub fn read_json<T: serde::de::DeserializeOwned>(path: &Path) -> Result<T, CliError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::Io(format!("cannot read {}: {e}", path.display())))?;
    serde_json::from_str(&text)
        .map_err(|e| CliError::Parse(format!("malformed JSON in {}: {e}", path.display())))
}
