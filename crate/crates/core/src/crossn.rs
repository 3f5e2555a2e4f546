//! The generalized vector product of `n - 1` vectors in K^n.
//!
//! For the `(n-1) × n` matrix `M` whose rows are the inputs, component `k`
//! (1-based) of the product is `(-1)^{1+k} det(M^(k))`, where `M^(k)` drops
//! column `k`.

use crate::error::{Error, Result};
use crate::matrices::Matrix;
use crate::scalar::{FieldTag, Scalar};
use crate::vectors::Vector;

/// `n - 1` rows of length `n`, all over one field.
#[derive(Debug, Clone, PartialEq)]
pub struct CrossInput {
    matrix: Matrix,
}

impl CrossInput {
    pub fn from_matrix(matrix: Matrix) -> Result<Self> {
        let (rows, cols) = matrix.shape();
        if cols < 2 || rows + 1 != cols {
            return Err(Error::dims(format!(
                "generalized cross product needs (n-1) x n input with n >= 2, got {rows}x{cols}"
            )));
        }
        Ok(CrossInput { matrix })
    }

    pub fn from_rows(tag: FieldTag, rows: &[Vector]) -> Result<Self> {
        let cols = rows.first().map_or(0, Vector::len);
        Self::from_matrix(Matrix::from_rows(tag, rows.to_vec(), cols)?)
    }

    /// Dimension of the ambient space.
    pub fn n(&self) -> usize {
        self.matrix.cols()
    }

    pub fn matrix(&self) -> &Matrix {
        &self.matrix
    }

    pub fn product(&self) -> Vector {
        let tag = self.matrix.tag();
        let n = self.n();
        let entries = (1..=n)
            .map(|k| {
                let minor = minor_drop_col(&self.matrix, k).expect("k in range");
                Scalar::sign(tag, k + 1) * minor.det().expect("square minor")
            })
            .collect();
        Vector::new(tag, entries).expect("uniform field")
    }
}

/// Removes column `k` (1-based).
pub fn minor_drop_col(m: &Matrix, k: usize) -> Result<Matrix> {
    let cols = m.cols();
    if k == 0 || k > cols {
        return Err(Error::IndexOutOfRange {
            index: k,
            len: cols,
        });
    }
    let rows = (0..m.rows())
        .map(|i| {
            let row = m.row(i);
            let kept = row
                .entries()
                .iter()
                .enumerate()
                .filter(|&(j, _)| j + 1 != k)
                .map(|(_, x)| x.clone())
                .collect();
            Vector::new(m.tag(), kept)
        })
        .collect::<Result<Vec<_>>>()?;
    Matrix::from_rows(m.tag(), rows, cols - 1)
}

/// `×(M_1, …, M_{n-1})` for `n - 1` rows of length `n`.
pub fn generalized_cross(rows: &[Vector]) -> Result<Vector> {
    let tag = rows
        .first()
        .map(Vector::tag)
        .ok_or_else(|| Error::dims("generalized cross product needs at least one row"))?;
    Ok(CrossInput::from_rows(tag, rows)?.product())
}

/// Sign relating the product of reversed rows to the reversed product:
/// `×(R M_1, …, R M_{n-1}) = (-1)^⌈3n/2⌉ R(×(M_1, …, M_{n-1}))`.
pub fn cross_reversal_sign(n: usize) -> i64 {
    if (3 * n).div_ceil(2).is_multiple_of(2) {
        1
    } else {
        -1
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const Q: FieldTag = FieldTag::RATIONAL;

    fn m(rows: &[&[i64]]) -> Matrix {
        Matrix::from_i64_rows(Q, rows).unwrap()
    }

    #[test]
    fn minor_examples() {
        let a = m(&[&[1, 2, 3], &[4, 5, 6]]);
        assert_eq!(minor_drop_col(&a, 1).unwrap(), m(&[&[2, 3], &[5, 6]]));
        assert_eq!(minor_drop_col(&a, 3).unwrap(), m(&[&[1, 2], &[4, 5]]));
        let reversed_minor = minor_drop_col(&a.reverse_rows(), 1).unwrap();
        assert_eq!(
            reversed_minor,
            minor_drop_col(&a, 3).unwrap().reverse_rows()
        );
        assert_eq!(reversed_minor, m(&[&[2, 1], &[5, 4]]));
        assert_eq!(
            minor_drop_col(&a, 0),
            Err(Error::IndexOutOfRange { index: 0, len: 3 })
        );
        assert!(minor_drop_col(&a, 4).is_err());
    }

    #[test]
    fn cross_examples() {
        let rows = [
            Vector::from_i64s(Q, &[1, 0, 0]),
            Vector::from_i64s(Q, &[0, 1, 0]),
        ];
        assert_eq!(
            generalized_cross(&rows).unwrap(),
            Vector::from_i64s(Q, &[0, 0, 1])
        );
        // row-palindromic 3x4 input vanishes
        let pal = [
            Vector::from_i64s(Q, &[1, 2, 2, 1]),
            Vector::from_i64s(Q, &[3, -1, -1, 3]),
            Vector::from_i64s(Q, &[0, 5, 5, 0]),
        ];
        assert!(generalized_cross(&pal).unwrap().is_zero());
    }

    #[test]
    fn two_dimensional_product() {
        let v = Vector::from_i64s(Q, &[3, 7]);
        assert_eq!(
            generalized_cross(&[v]).unwrap(),
            Vector::from_i64s(Q, &[7, -3])
        );
    }

    #[test]
    fn malformed_inputs() {
        assert!(generalized_cross(&[]).is_err());
        let bad = [Vector::from_i64s(Q, &[1, 2, 3])];
        assert!(matches!(
            generalized_cross(&bad),
            Err(Error::DimensionMismatch(_))
        ));
        let ragged = [
            Vector::from_i64s(Q, &[1, 2, 3]),
            Vector::from_i64s(Q, &[1, 2]),
        ];
        assert!(generalized_cross(&ragged).is_err());
        assert!(CrossInput::from_matrix(Matrix::zeros(Q, 0, 1)).is_err());
    }

    #[test]
    fn sign_values() {
        assert_eq!(cross_reversal_sign(2), -1);
        assert_eq!(cross_reversal_sign(3), -1);
        assert_eq!(cross_reversal_sign(4), 1);
        assert_eq!(cross_reversal_sign(5), 1);
        assert_eq!(cross_reversal_sign(6), -1);
    }
}
