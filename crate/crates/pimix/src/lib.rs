//! Detection of genuine multipartite entanglement (GME) for permutationally
//! invariant (PI) N-qubit states.
//!
//! A state that cannot be written as a mixture of states separable across
//! bipartitions is genuinely multipartite entangled. Deciding this exactly is
//! hard, but membership in the larger set of *PPT mixtures* (convex
//! combinations of states with positive partial transpose across some
//! bipartition) is a semidefinite program. For PI states that program
//! collapses onto the spin-sector blocks of the Schur-Weyl decomposition and
//! scales polynomially in N, which makes ten-qubit instances routine.
//!
//! The crate is organised around that split:
//!
//! - [`spin`]: spin sectors, multiplicity dimensions and Clebsch-Gordan
//!   tables for N qubits.
//! - [`pi_state`]: PI density operators stored block-per-sector, with GHZ,
//!   W, Dicke and white-noise constructors.
//! - [`dense`]: brute-force reference path on full 2^N x 2^N matrices,
//!   including the unsymmetrised PPT-mixture SDP, usable up to five qubits.
//! - [`block`]: the polynomially sized block SDP over one symmetrised
//!   variable per cut size, cross-validated against the dense oracle.
//! - [`analysis`]: white-noise tolerance bisection, (p1, p2) plane scans,
//!   the three-qubit biseparability certificate and the selftest suite.
//!
//! The conic solves behind both SDP paths run on Clarabel through the
//! adapter in [`conic`]; complex Hermitian constraints enter the solver via
//! the standard real symmetric embedding.

pub mod analysis;
pub mod block;
pub mod config;
pub mod conic;
pub mod dense;
pub mod error;
pub mod linalg;
pub mod pi_state;
pub mod report;
pub mod spin;

pub use config::Config;
pub use error::{Error, Result};
pub use report::{Residuals, SdpReport, SolveStatus, Verdict};
