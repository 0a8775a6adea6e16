//! JSON file formats.
//!
//! Model file:
//!
//! ```json
//! {
//!   "energies": [-1.0, 0.3, 1.0],
//!   "rates": [[0, 1, 0], [0, 0, 1], [0, 0, 0]],
//!   "dephasing_rate": 0.0,
//!   "spectral": {
//!     "beta": 2.0,
//!     "couplings": [{ "pair": [0, 1], "form": "ohmic", "g": 0.1, "omega_c": 5.0 }]
//!   }
//! }
//! ```
//!
//! `rates[m][n]` is the rate of `|n⟩ → |m⟩`. `rates` may be omitted when
//! `spectral` is present; rates from both are summed. A missing or null `beta`
//! means zero temperature. Complex matrices are nested rows of `[re, im]`.

use std::fs;
use std::path::Path;

use ndarray::Array2;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::matrix::ComplexMatrix;
use crate::microscopic::{rates_from_spectral, Coupling};
use crate::model::LindbladModel;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SpectralSpec {
    #[serde(default)]
    pub beta: Option<f64>,
    pub couplings: Vec<Coupling>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ModelFile {
    pub energies: Vec<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub rates: Option<Vec<Vec<f64>>>,
    #[serde(default)]
    pub dephasing_rate: f64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub spectral: Option<SpectralSpec>,
}

impl ModelFile {
    /// Resolves spectral couplings into rates. Does not validate the physics.
    pub fn to_model(&self) -> Result<LindbladModel> {
        let n = self.energies.len();
        let mut rates = match &self.rates {
            Some(rows) => {
                if rows.len() != n || rows.iter().any(|r| r.len() != n) {
                    return Err(Error::Schema(format!("rates must be a {n}x{n} array")));
                }
                Array2::from_shape_fn((n, n), |(i, j)| rows[i][j])
            }
            None => Array2::zeros((n, n)),
        };
        if let Some(spec) = &self.spectral {
            let beta = spec.beta.unwrap_or(f64::INFINITY);
            rates = rates + rates_from_spectral(&self.energies, &spec.couplings, beta)?;
        }
        LindbladModel::new(self.energies.clone(), rates)?.with_dephasing(self.dephasing_rate)
    }

    /// The resolved form: explicit rates, no spectral section.
    pub fn from_model(model: &LindbladModel) -> Self {
        Self {
            energies: model.energies().to_vec(),
            rates: Some(model.rates().outer_iter().map(|r| r.to_vec()).collect()),
            dephasing_rate: model.dephasing_rate(),
            spectral: None,
        }
    }
}

pub fn parse_model(json: &str) -> Result<LindbladModel> {
    serde_json::from_str::<ModelFile>(json)?.to_model()
}

pub fn model_to_json(model: &LindbladModel) -> String {
    serde_json::to_string_pretty(&ModelFile::from_model(model)).expect("plain data serializes")
}

pub fn read_model(path: &Path) -> Result<LindbladModel> {
    parse_model(&fs::read_to_string(path)?)
}

pub fn parse_matrix(json: &str) -> Result<ComplexMatrix> {
    Ok(serde_json::from_str(json)?)
}

pub fn read_matrix(path: &Path) -> Result<ComplexMatrix> {
    parse_matrix(&fs::read_to_string(path)?)
}

pub fn matrix_to_json(m: &ComplexMatrix) -> String {
    serde_json::to_string(m).expect("plain data serializes")
}
