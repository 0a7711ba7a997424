//! Tolerance and limit registry.
//!
//! Every threshold that trades speed against rigor lives here, so a single
//! config file can tighten or relax the whole pipeline.

use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct Config {
    /// Interior-point target accuracy (duality gap and feasibility).
    pub solver_accuracy: f64,
    /// Half-width of the boundary band around s_opt = 0 when classifying.
    pub verdict_eps: f64,
    /// Default bracket tolerance of the noise-tolerance bisection.
    pub bisection_tol: f64,
    /// Max decomposition residual / eigenvalue deficit accepted by the
    /// three-qubit biseparability certificate.
    pub certificate_tol: f64,
    /// Largest N accepted by the analysis entry points.
    pub max_qubits: usize,
    /// Solver iteration cap.
    pub max_iterations: u32,
}

impl Default for Config {
    fn default() -> Self {
        Config {
            solver_accuracy: 1e-9,
            verdict_eps: 1e-7,
            bisection_tol: 1e-4,
            certificate_tol: 1e-6,
            max_qubits: 10,
            max_iterations: 200,
        }
    }
}

impl Config {
    pub fn from_toml_str(text: &str) -> Result<Config> {
        toml::from_str(text).map_err(|e| Error::invalid(format!("config parse error: {e}")))
    }

    pub fn from_file(path: impl AsRef<Path>) -> Result<Config> {
        let text = std::fs::read_to_string(path)?;
        Config::from_toml_str(&text)
    }
}
