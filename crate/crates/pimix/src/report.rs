//! Solver verdicts and reports shared by the dense and block SDP paths.

use serde::{Deserialize, Serialize};

/// Outcome class of a conic solve.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum SolveStatus {
    /// Solver met its accuracy targets.
    Optimal,
    /// Reduced accuracy or an infeasibility certificate; s_opt is suspect.
    InfeasibleNumerics,
    /// No usable solution (divergence, iteration or time limit).
    SolverError,
}

/// Entanglement verdict derived from the sign of s_opt.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    /// Genuinely multipartite entangled: s_opt < -eps.
    Gme,
    /// PPT mixture: s_opt > +eps.
    PptMixture,
    /// |s_opt| <= eps, or the solve failed.
    Boundary,
}

impl Verdict {
    pub fn from_s_opt(s_opt: f64, eps: f64) -> Verdict {
        if s_opt.is_nan() {
            Verdict::Boundary
        } else if s_opt < -eps {
            Verdict::Gme
        } else if s_opt > eps {
            Verdict::PptMixture
        } else {
            Verdict::Boundary
        }
    }

    pub fn as_str(&self) -> &'static str {
        match self {
            Verdict::Gme => "gme",
            Verdict::PptMixture => "ppt-mixture",
            Verdict::Boundary => "boundary",
        }
    }
}

impl std::fmt::Display for Verdict {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.as_str())
    }
}

impl SolveStatus {
    pub fn as_str(&self) -> &'static str {
        match self {
            SolveStatus::Optimal => "optimal",
            SolveStatus::InfeasibleNumerics => "infeasible-numerics",
            SolveStatus::SolverError => "solver-error",
        }
    }
}

impl std::fmt::Display for SolveStatus {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Feasibility of the returned primal point, rechecked outside the solver.
#[derive(Debug, Clone, Copy, Serialize, Deserialize)]
pub struct Residuals {
    /// Largest entry of |sum of reconstructed parts - target|.
    pub max_equality: f64,
    /// Smallest eigenvalue of any (partially transposed) part minus s_opt.
    pub min_eigenvalue_slack: f64,
}

/// Verdict report of one PPT-mixture SDP.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SdpReport {
    pub status: SolveStatus,
    pub s_opt: f64,
    pub verdict: Verdict,
    pub residuals: Residuals,
    /// Solve wall time in seconds.
    pub wall_time: f64,
}
