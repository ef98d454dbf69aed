//! Construction and exhaustive verification of optimum distance flag codes
//! over small finite fields.
//!
//! The pipeline runs bottom-up: finite-field arithmetic ([`galois`]),
//! matrices and echelon forms ([`matrix`]), square MRD codes in the rank
//! metric ([`rankmetric`]), subspaces with their distance and identifying
//! invariants ([`subspace`]), flags and the flag-code construction
//! ([`flag`]), and finally distance verification plus optimality bounds
//! ([`analysis`]). Serialization lives in [`wire`], runtime property
//! suites in [`selftest`].
//!
//! Everything is sized for desk-scale parameters: field orders up to
//! 2^16 and codeword enumerations up to 2^20. Within those caps all
//! checks are exhaustive; nothing is sampled unless a function says so.

pub mod analysis;
pub mod error;
pub mod flag;
pub mod galois;
pub mod matrix;
pub mod rankmetric;
pub mod selftest;
pub mod subspace;
pub mod wire;

pub use analysis::{
    cdc_upper_bound, is_disjoint, max_flag_distance_bound, min_flag_distance, odfc_bounds,
    odfc_predicates, partial_spread_check, projected_code, size_formula, verify_odfc, CdcBound,
    GaussianBinomial, OdfcBounds, Optimality, TickReport, VerificationReport,
};
pub use error::{Error, Result};
pub use flag::{
    build_matrix_set, construct_odfc, type_set, CodeParams, Family, Flag, FlagCode, FlagType,
    Provenance,
};
pub use galois::{Fe, Field};
pub use matrix::{block_assemble, EchelonForm, EchelonResult, MatGF};
pub use rankmetric::{min_rank_distance, rank_distance, truncate_code, verify_mrd, MrdCode};
pub use subspace::{IdVector, Subspace};
