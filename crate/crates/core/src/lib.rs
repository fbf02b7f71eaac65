//! Exact generators for Schur-type and Schubert-type polynomial families,
//! the normalization operator `N(x^mu) = x^mu / mu!`, and an exact
//! certifier for the Lorentzian property.
//!
//! Everything is computed over arbitrary-precision rationals; floating point
//! only appears in the advisory numeric log-concavity spot check.

pub mod certify;
pub mod corpus;
pub mod error;
pub mod poly;
pub mod schubert;
pub mod symmetric;

pub use certify::{
    bivariate_ulc, discrete_root_log_concavity, inertia, is_m_convex, lorentzian_certify, numeric_log_concavity_spot,
    quadratic_form_matrix, Failure, InertiaSignature, LorentzCertificate, SupportSet, SymmetricMatrix, Verdict,
};
pub use error::{Error, Result};
pub use poly::{ExponentVector, Polynomial, Rational, ShiftedLaurent, Substitution};
pub use schubert::Permutation;
pub use symmetric::{Partition, SkewShape, StrictPartition, WeightVector};
