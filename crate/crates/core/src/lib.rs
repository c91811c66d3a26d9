//! Exact Plücker degree and genus of Fano schemes of linear subspaces on
//! general complete intersections, computed by coefficient extraction in a
//! dense truncated polynomial ring over big integers.

pub mod cli;
pub mod error;
pub mod invariants;
pub mod oracle;
pub mod polyring;

pub use error::{FanoError, Result};
pub use invariants::{
    canonical_factor, compute_report, curve_genus, expected_dimension, hypothesis_check,
    plucker_degree, FanoProblem, InvariantsReport,
};
pub use oracle::{naive_coefficient, vandermonde_degree};
pub use polyring::{ExponentVector, LinearForm, TruncPoly};
