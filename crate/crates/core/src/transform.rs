//! Reversing as a linear map: the exchange matrix, general permutation
//! maps, and the eigenstructure of the reversal.
//!
//! Vectors are columns and maps act on the left. The exchange matrix is
//! symmetric, so the row-vector convention gives the same matrix.

use std::fmt;

use crate::error::{Error, Result};
use crate::matrices::Matrix;
use crate::polynomials::Poly;
use crate::scalar::{FieldTag, Scalar};
use crate::vectors::{antipalindromic_basis, palindromic_basis, Vector};

/// Anti-diagonal identity `Ĩ_n`.
pub fn exchange_matrix(n: usize, tag: FieldTag) -> Matrix {
    Matrix::identity(tag, n).reverse_rows()
}

/// A bijection of `{1, …, n}` stored by its images: `σ(i) = images[i-1]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn new(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &k in &images {
            if k == 0 || k > n {
                return Err(Error::InvalidPermutation(format!(
                    "image {k} outside 1..={n}"
                )));
            }
            if std::mem::replace(&mut seen[k - 1], true) {
                return Err(Error::InvalidPermutation(format!("image {k} repeated")));
            }
        }
        Ok(Permutation { images })
    }

    pub fn identity(n: usize) -> Self {
        Permutation {
            images: (1..=n).collect(),
        }
    }

    /// `σ(i) = n + 1 - i`.
    pub fn reversal(n: usize) -> Self {
        Permutation {
            images: (1..=n).rev().collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.images.len()
    }

    pub fn is_empty(&self) -> bool {
        self.images.is_empty()
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    /// `(v_{σ(1)}, …, v_{σ(n)})`.
    pub fn apply(&self, v: &Vector) -> Result<Vector> {
        if v.len() != self.len() {
            return Err(Error::dims(format!(
                "permutation of {} elements applied to a vector of length {}",
                self.len(),
                v.len()
            )));
        }
        Vector::new(
            v.tag(),
            self.images.iter().map(|&k| v.get(k - 1).clone()).collect(),
        )
    }

    /// The matrix `A_σ` with `A_σ v = apply(σ, v)`: row `i` is `e_{σ(i)}`.
    pub fn matrix(&self, tag: FieldTag) -> Matrix {
        let n = self.len();
        let rows = self
            .images
            .iter()
            .map(|&k| Vector::unit(tag, n, k - 1))
            .collect();
        Matrix::from_rows(tag, rows, n).expect("unit rows")
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.images.iter().map(usize::to_string).collect();
        f.write_str(&parts.join(","))
    }
}

pub fn permutation_matrix(sigma: &Permutation, tag: FieldTag) -> Matrix {
    sigma.matrix(tag)
}

pub fn apply_permutation(sigma: &Permutation, v: &Vector) -> Result<Vector> {
    sigma.apply(v)
}

fn linear(tag: FieldTag, constant: i64) -> Poly {
    Poly::new(1, Vector::from_i64s(tag, &[constant, 1])).expect("two coefficients")
}

/// Monic `det(λI - Ĩ_n) = (λ-1)^⌈n/2⌉ (λ+1)^⌊n/2⌋`, ambient degree `n`.
pub fn reversing_char_poly(n: usize, tag: FieldTag) -> Poly {
    let mut p = Poly::new(0, Vector::from_i64s(tag, &[1])).expect("constant");
    for _ in 0..n.div_ceil(2) {
        p = p.mul(&linear(tag, -1)).expect("same field");
    }
    for _ in 0..n / 2 {
        p = p.mul(&linear(tag, 1)).expect("same field");
    }
    p
}

/// `λ² - 1` for `n ≥ 2`, `λ - 1` for `n = 1` (where `Ĩ_1 = I`), and the
/// constant `1` for the empty space.
pub fn reversing_min_poly(n: usize, tag: FieldTag) -> Poly {
    match n {
        0 => Poly::from_i64s(tag, &[1]),
        1 => Poly::from_i64s(tag, &[-1, 1]),
        _ => Poly::from_i64s(tag, &[-1, 0, 1]),
    }
    .expect("nonempty coefficients")
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn value(self) -> i64 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }
}

impl std::str::FromStr for Sign {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "+1" | "1" | "+" => Ok(Sign::Plus),
            "-1" | "-" => Ok(Sign::Minus),
            _ => Err(Error::Parse(format!("sign must be +1 or -1, got `{s}`"))),
        }
    }
}

/// Basis of `ker(R - sign·id)`: the palindromic basis for `+1`, the
/// antipalindromic basis for `-1`.
pub fn eigenspace_basis(n: usize, sign: Sign, tag: FieldTag) -> Result<Vec<Vector>> {
    match sign {
        Sign::Plus => Ok(palindromic_basis(n, tag)),
        Sign::Minus => antipalindromic_basis(n, tag),
    }
}

/// Dimension of `ker(Ĩ_n - sign·I)` computed by elimination.
pub fn eigenspace_dimension(n: usize, sign: Sign, tag: FieldTag) -> usize {
    let shift = Matrix::identity(tag, n)
        .scale(&Scalar::from_i64(tag, sign.value()))
        .expect("same field");
    n - exchange_matrix(n, tag)
        .try_sub(&shift)
        .expect("same shape")
        .rank()
}
