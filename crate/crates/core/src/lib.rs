//! Compiler-style toolkit from electronic-structure integrals to qubit
//! Hamiltonians, UCCSD ansatz circuits, and circuit resource reports.
//!
//! The pipeline runs in four stages: integral ingestion and reduction
//! ([`integrals`]), second-quantized operator construction ([`fermion`]),
//! fermion-to-qubit encoding and symmetry reduction ([`mapping`], [`taper`]),
//! and circuit synthesis with resource metrics ([`circuit`]). The [`oracle`]
//! module is a dense-matrix verification engine for small systems, and
//! [`pipeline`] orchestrates end-to-end runs and sweeps.

pub mod bits;
pub mod circuit;
pub mod error;
pub mod fermion;
pub mod integrals;
pub mod mapping;
pub mod oracle;
pub mod pauli;
pub mod pipeline;
pub mod taper;

pub use error::{Error, Result};

/// Coefficients and ingested integrals with magnitude below this are dropped.
/// Shared by ingestion, operator merging, and Pauli-sum simplification so
/// that term counts are stable and deterministic.
pub const COEFF_CUTOFF: f64 = 1e-12;
