//! Reversing and Pasting over vectors, polynomials and matrices.
//!
//! Every operator is exact over the rationals and over prime fields GF(p);
//! a tolerance-based `f64` mode is available for convenience. The
//! [`verifier`] module checks the algebraic laws of the operators by
//! exhaustive enumeration over small prime fields or by seeded random
//! sampling.

pub mod crossn;
pub mod error;
pub mod json;
pub mod matrices;
pub mod polynomials;
pub mod rng;
pub mod scalar;
pub mod transform;
pub mod vectors;
pub mod verifier;

pub use crossn::{cross_reversal_sign, generalized_cross, minor_drop_col, CrossInput};
pub use error::{Error, Result};
pub use matrices::{symmetry_basis, Matrix, QuadDecomposition, SymmetryMode};
pub use polynomials::Poly;
pub use scalar::{characteristic, scalar_inv, FieldKind, FieldTag, Scalar};
pub use transform::{
    eigenspace_basis, exchange_matrix, reversing_char_poly, reversing_min_poly, Permutation, Sign,
};
pub use vectors::{antipalindromic_basis, palindromic_basis, PalAntiPair, Vector};
