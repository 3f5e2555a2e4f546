//! Dense matrices with row, column and full Reversing, the three Pasting
//! modes, exact elimination kernels and the symmetry subspace decompositions.
//!
//! Conventions: `reverse_rows(A) = A·Ĩ_m` reverses every row and
//! `reverse_cols(A) = Ĩ_n·A` reverses every column. A matrix is
//! *row-palindromic* when `reverse_rows(A) = A`, *column-palindromic* when
//! `reverse_cols(A) = A`, and *palindromic* (full) when `reverse_full(A) = A`.
//! The antipalindromic variants replace `A` by `-A` on the right-hand side.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::scalar::{rational_parts, FieldKind, FieldTag, Scalar};
use crate::vectors::{
    antipalindromic_basis, palindromic_basis, require_odd_characteristic, same_tag, Vector,
};

/// Dense `rows × cols` matrix stored row-major.
#[derive(Debug, Clone, PartialEq)]
pub struct Matrix {
    tag: FieldTag,
    rows: usize,
    cols: usize,
    entries: Vec<Scalar>,
}

impl Matrix {
    pub fn new(tag: FieldTag, rows: usize, cols: usize, entries: Vec<Scalar>) -> Result<Self> {
        if entries.len() != rows * cols {
            return Err(Error::dims(format!(
                "{} entries for a {rows}x{cols} matrix",
                entries.len()
            )));
        }
        for e in &entries {
            same_tag(tag, e.tag())?;
        }
        Ok(Matrix {
            tag,
            rows,
            cols,
            entries,
        })
    }

    pub(crate) fn from_fn(
        tag: FieldTag,
        rows: usize,
        cols: usize,
        mut f: impl FnMut(usize, usize) -> Scalar,
    ) -> Self {
        let mut entries = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                entries.push(f(i, j));
            }
        }
        Matrix {
            tag,
            rows,
            cols,
            entries,
        }
    }

    pub fn zeros(tag: FieldTag, rows: usize, cols: usize) -> Self {
        Matrix {
            tag,
            rows,
            cols,
            entries: vec![Scalar::zero(tag); rows * cols],
        }
    }

    pub fn identity(tag: FieldTag, n: usize) -> Self {
        Self::from_fn(tag, n, n, |i, j| Scalar::from_i64(tag, (i == j) as i64))
    }

    pub fn from_i64_rows(tag: FieldTag, rows: &[&[i64]]) -> Result<Self> {
        let vecs = rows.iter().map(|r| Vector::from_i64s(tag, r)).collect();
        Self::from_rows(tag, vecs, rows.first().map_or(0, |r| r.len()))
    }

    /// Stacks row vectors. `cols` is only consulted when `rows` is empty.
    pub fn from_rows(tag: FieldTag, rows: Vec<Vector>, cols: usize) -> Result<Self> {
        let cols = rows.first().map_or(cols, Vector::len);
        let n = rows.len();
        let mut entries = Vec::with_capacity(n * cols);
        for r in rows {
            same_tag(tag, r.tag())?;
            if r.len() != cols {
                return Err(Error::dims(format!(
                    "ragged rows: expected {cols} entries, found {}",
                    r.len()
                )));
            }
            entries.extend(r.into_entries());
        }
        Ok(Matrix {
            tag,
            rows: n,
            cols,
            entries,
        })
    }

    /// Reshapes a vector of length `rows * cols` row-major.
    pub fn from_flat(rows: usize, cols: usize, v: &Vector) -> Result<Self> {
        Self::new(v.tag(), rows, cols, v.entries().to_vec())
    }

    /// Inline syntax: rows separated by `;`, entries by `,`.
    pub fn parse(tag: FieldTag, text: &str) -> Result<Self> {
        let text = text.trim();
        if text.is_empty() {
            return Ok(Self::zeros(tag, 0, 0));
        }
        let rows = text
            .split(';')
            .map(|r| Vector::parse(tag, r))
            .collect::<Result<Vec<_>>>()?;
        Self::from_rows(tag, rows, 0)
    }

    pub fn tag(&self) -> FieldTag {
        self.tag
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Scalar {
        &self.entries[i * self.cols + j]
    }

    pub fn entries(&self) -> &[Scalar] {
        &self.entries
    }

    pub fn row(&self, i: usize) -> Vector {
        Vector::from_parts_unchecked(
            self.tag,
            self.entries[i * self.cols..(i + 1) * self.cols].to_vec(),
        )
    }

    pub fn col(&self, j: usize) -> Vector {
        Vector::from_parts_unchecked(
            self.tag,
            (0..self.rows).map(|i| self.get(i, j).clone()).collect(),
        )
    }

    pub fn row_vectors(&self) -> Vec<Vector> {
        (0..self.rows).map(|i| self.row(i)).collect()
    }

    /// Row-major flattening, the matrix-as-vector view.
    pub fn flatten(&self) -> Vector {
        Vector::from_parts_unchecked(self.tag, self.entries.clone())
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Scalar::is_zero)
    }

    fn same_shape(&self, other: &Matrix) -> Result<()> {
        same_tag(self.tag, other.tag)?;
        if self.shape() != other.shape() {
            return Err(Error::dims(format!(
                "shapes {}x{} and {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        Ok(())
    }

    fn map(&self, f: impl Fn(&Scalar) -> Scalar) -> Matrix {
        Matrix {
            tag: self.tag,
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(f).collect(),
        }
    }

    pub fn try_add(&self, other: &Matrix) -> Result<Matrix> {
        self.same_shape(other)?;
        let entries = self
            .entries
            .iter()
            .zip(&other.entries)
            .map(|(a, b)| a + b)
            .collect();
        Ok(self.with_entries(entries))
    }

    pub fn try_sub(&self, other: &Matrix) -> Result<Matrix> {
        self.same_shape(other)?;
        let entries = self
            .entries
            .iter()
            .zip(&other.entries)
            .map(|(a, b)| a - b)
            .collect();
        Ok(self.with_entries(entries))
    }

    fn with_entries(&self, entries: Vec<Scalar>) -> Matrix {
        Matrix {
            tag: self.tag,
            rows: self.rows,
            cols: self.cols,
            entries,
        }
    }

    pub fn neg(&self) -> Matrix {
        self.map(|x| -x)
    }

    pub fn scale(&self, a: &Scalar) -> Result<Matrix> {
        same_tag(self.tag, a.tag())?;
        Ok(self.map(|x| a * x))
    }

    pub fn matmul(&self, other: &Matrix) -> Result<Matrix> {
        same_tag(self.tag, other.tag)?;
        if self.cols != other.rows {
            return Err(Error::dims(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let tag = self.tag;
        Ok(Self::from_fn(tag, self.rows, other.cols, |i, j| {
            (0..self.cols).fold(Scalar::zero(tag), |acc, k| {
                acc + self.get(i, k) * other.get(k, j)
            })
        }))
    }

    /// Matrix-vector product with `v` as a column.
    pub fn apply(&self, v: &Vector) -> Result<Vector> {
        let col = Matrix::new(v.tag(), v.len(), 1, v.entries().to_vec())?;
        Ok(self.matmul(&col)?.flatten())
    }

    pub fn transpose(&self) -> Matrix {
        Self::from_fn(self.tag, self.cols, self.rows, |i, j| {
            self.get(j, i).clone()
        })
    }

    pub fn trace(&self) -> Result<Scalar> {
        self.require_square("trace")?;
        Ok((0..self.rows).fold(Scalar::zero(self.tag), |acc, i| acc + self.get(i, i)))
    }

    fn require_square(&self, what: &str) -> Result<()> {
        if self.is_square() {
            Ok(())
        } else {
            Err(Error::dims(format!(
                "{what} needs a square matrix, got {}x{}",
                self.rows, self.cols
            )))
        }
    }

    /// Reverses every row: `A·Ĩ_m`.
    pub fn reverse_rows(&self) -> Matrix {
        let m = self.cols;
        Self::from_fn(self.tag, self.rows, m, |i, j| {
            self.get(i, m - 1 - j).clone()
        })
    }

    /// Reverses every column: `Ĩ_n·A`.
    pub fn reverse_cols(&self) -> Matrix {
        let n = self.rows;
        Self::from_fn(self.tag, n, self.cols, |i, j| {
            self.get(n - 1 - i, j).clone()
        })
    }

    /// Reverses the row-major entry sequence: entry `(i, j)` becomes `(n-1-i, m-1-j)`.
    pub fn reverse_full(&self) -> Matrix {
        let mut entries = self.entries.clone();
        entries.reverse();
        self.with_entries(entries)
    }

    /// `A ⋄_r C`: row `i` is `row_i(A) ⋄ row_i(C)`.
    pub fn paste_rows(&self, other: &Matrix) -> Result<Matrix> {
        same_tag(self.tag, other.tag)?;
        if self.rows != other.rows {
            return Err(Error::dims(format!(
                "row pasting needs equal row counts, got {} and {}",
                self.rows, other.rows
            )));
        }
        let m = self.cols;
        Ok(Self::from_fn(
            self.tag,
            self.rows,
            m + other.cols,
            |i, j| {
                if j < m {
                    self.get(i, j).clone()
                } else {
                    other.get(i, j - m).clone()
                }
            },
        ))
    }

    /// `A ⋄_c B`: column `j` is `col_j(A) ⋄ col_j(B)`, `A` on top.
    pub fn paste_cols(&self, other: &Matrix) -> Result<Matrix> {
        same_tag(self.tag, other.tag)?;
        if self.cols != other.cols {
            return Err(Error::dims(format!(
                "column pasting needs equal column counts, got {} and {}",
                self.cols, other.cols
            )));
        }
        let mut entries = self.entries.clone();
        entries.extend_from_slice(&other.entries);
        Ok(Matrix {
            tag: self.tag,
            rows: self.rows + other.rows,
            cols: self.cols,
            entries,
        })
    }

    /// Block-diagonal `A ⋄_b B = (A 0; 0 B)`.
    pub fn paste_blocks(&self, other: &Matrix) -> Result<Matrix> {
        same_tag(self.tag, other.tag)?;
        let (n, m) = self.shape();
        let tag = self.tag;
        Ok(Self::from_fn(
            tag,
            n + other.rows,
            m + other.cols,
            |i, j| match (i < n, j < m) {
                (true, true) => self.get(i, j).clone(),
                (false, false) => other.get(i - n, j - m).clone(),
                _ => Scalar::zero(tag),
            },
        ))
    }

    fn to_grid(&self) -> Vec<Vec<Scalar>> {
        self.entries
            .chunks(self.cols.max(1))
            .take(self.rows)
            .map(<[Scalar]>::to_vec)
            .collect()
    }

    /// Exact for rationals (fraction-free elimination on cleared
    /// denominators) and prime fields; partial pivoting for floats.
    pub fn det(&self) -> Result<Scalar> {
        self.require_square("det")?;
        if self.rows == 0 {
            return Ok(Scalar::one(self.tag));
        }
        match self.tag.kind() {
            FieldKind::Rational => Ok(self.det_rational()),
            _ => {
                let mut grid = self.to_grid();
                let elim = eliminate(&mut grid, self.cols, self.tag, false);
                if elim.rank < self.rows {
                    return Ok(Scalar::zero(self.tag));
                }
                let mut det = Scalar::sign(self.tag, elim.swaps);
                for (i, row) in grid.iter().enumerate() {
                    det = det * &row[i];
                }
                Ok(det)
            }
        }
    }

    fn det_rational(&self) -> Scalar {
        let n = self.rows;
        let mut scale = BigInt::one();
        let mut grid: Vec<Vec<BigInt>> = Vec::with_capacity(n);
        for i in 0..n {
            let parts: Vec<(BigInt, BigInt)> = (0..n)
                .map(|j| rational_parts(self.get(i, j).as_rational().expect("rational entry")))
                .collect();
            let lcm = parts.iter().fold(BigInt::one(), |l, (_, d)| l.lcm(d));
            grid.push(parts.iter().map(|(a, d)| a * (&lcm / d)).collect());
            scale *= lcm;
        }
        let det = bareiss(&mut grid);
        Scalar::from_rational(BigRational::new(det, scale))
    }

    pub fn rank(&self) -> usize {
        let mut grid = self.to_grid();
        eliminate(&mut grid, self.cols, self.tag, false).rank
    }

    pub fn inverse(&self) -> Result<Matrix> {
        self.require_square("inverse")?;
        let n = self.rows;
        let tag = self.tag;
        let mut grid: Vec<Vec<Scalar>> = (0..n)
            .map(|i| {
                let mut row: Vec<Scalar> = (0..n).map(|j| self.get(i, j).clone()).collect();
                row.extend((0..n).map(|j| Scalar::from_i64(tag, (i == j) as i64)));
                row
            })
            .collect();
        let elim = eliminate(&mut grid, n, tag, true);
        if elim.rank < n {
            return Err(Error::Singular);
        }
        Ok(Self::from_fn(tag, n, n, |i, j| grid[i][n + j].clone()))
    }

    pub fn is_row_palindromic(&self) -> bool {
        (0..self.rows).all(|i| self.row(i).is_palindromic())
    }

    pub fn is_row_antipalindromic(&self) -> bool {
        (0..self.rows).all(|i| self.row(i).is_antipalindromic())
    }

    pub fn is_col_palindromic(&self) -> bool {
        (0..self.cols).all(|j| self.col(j).is_palindromic())
    }

    pub fn is_col_antipalindromic(&self) -> bool {
        (0..self.cols).all(|j| self.col(j).is_antipalindromic())
    }

    pub fn is_palindromic(&self) -> bool {
        self.flatten().is_palindromic()
    }

    pub fn is_antipalindromic(&self) -> bool {
        self.flatten().is_antipalindromic()
    }

    pub fn satisfies(&self, mode: SymmetryMode) -> bool {
        use SymmetryMode::*;
        match mode {
            RowPal => self.is_row_palindromic(),
            RowAnti => self.is_row_antipalindromic(),
            ColPal => self.is_col_palindromic(),
            ColAnti => self.is_col_antipalindromic(),
            PalPal => self.is_row_palindromic() && self.is_col_palindromic(),
            PalAnti => self.is_row_palindromic() && self.is_col_antipalindromic(),
            AntiPal => self.is_row_antipalindromic() && self.is_col_palindromic(),
            AntiAnti => self.is_row_antipalindromic() && self.is_col_antipalindromic(),
            FullPal => self.is_palindromic(),
            FullAnti => self.is_antipalindromic(),
        }
    }

    fn quarter_combination(&self, row_sign: i64, col_sign: i64) -> Result<Matrix> {
        require_odd_characteristic(self.tag)?;
        let tag = self.tag;
        let quarter = Scalar::from_i64(tag, 4).inv()?;
        let (rs, cs) = (
            Scalar::from_i64(tag, row_sign),
            Scalar::from_i64(tag, col_sign),
        );
        let rsc = &rs * &cs;
        let (r, c, f) = (
            self.reverse_rows(),
            self.reverse_cols(),
            self.reverse_full(),
        );
        let (n, m) = self.shape();
        Ok(Self::from_fn(tag, n, m, |i, j| {
            let sum = self.get(i, j)
                + &(&rs * r.get(i, j))
                + &(&cs * c.get(i, j))
                + &(&rsc * f.get(i, j));
            &quarter * &sum
        }))
    }

    /// Splits `A` into its four row/column symmetry components.
    pub fn decompose_rc(&self) -> Result<QuadDecomposition> {
        Ok(QuadDecomposition {
            pp: self.quarter_combination(1, 1)?,
            pa: self.quarter_combination(1, -1)?,
            ap: self.quarter_combination(-1, 1)?,
            aa: self.quarter_combination(-1, -1)?,
        })
    }

    fn half_combination(&self, other: Matrix, sign: i64) -> Result<Matrix> {
        require_odd_characteristic(self.tag)?;
        let half = Scalar::from_i64(self.tag, 2).inv()?;
        let s = Scalar::from_i64(self.tag, sign);
        let entries = self
            .entries
            .iter()
            .zip(&other.entries)
            .map(|(a, b)| &half * &(a + &(&s * b)))
            .collect();
        Ok(self.with_entries(entries))
    }

    /// `((A + RA)/2, (A - RA)/2)` for the full reversal `R`.
    pub fn decompose_full(&self) -> Result<(Matrix, Matrix)> {
        let pal = self.half_combination(self.reverse_full(), 1)?;
        let anti = self.half_combination(self.reverse_full(), -1)?;
        Ok((pal, anti))
    }

    /// `((A + R_r A)/2, (A - R_r A)/2)`: row-palindromic plus row-antipalindromic.
    pub fn decompose_by_rows(&self) -> Result<(Matrix, Matrix)> {
        let pal = self.half_combination(self.reverse_rows(), 1)?;
        let anti = self.half_combination(self.reverse_rows(), -1)?;
        Ok((pal, anti))
    }

    /// `((A + R_c A)/2, (A - R_c A)/2)`: column-palindromic plus column-antipalindromic.
    pub fn decompose_by_cols(&self) -> Result<(Matrix, Matrix)> {
        let pal = self.half_combination(self.reverse_cols(), 1)?;
        let anti = self.half_combination(self.reverse_cols(), -1)?;
        Ok((pal, anti))
    }
}

struct Elimination {
    rank: usize,
    swaps: usize,
}

/// Row echelon form on the first `pivot_cols` columns. With `reduce`, the
/// pivots are scaled to one and cleared above as well (Gauss-Jordan).
fn eliminate(
    grid: &mut [Vec<Scalar>],
    pivot_cols: usize,
    tag: FieldTag,
    reduce: bool,
) -> Elimination {
    let rows = grid.len();
    let float = tag.kind() == FieldKind::Float;
    let mut rank = 0;
    let mut swaps = 0;
    for col in 0..pivot_cols {
        if rank == rows {
            break;
        }
        let candidates = (rank..rows).filter(|&r| !grid[r][col].is_zero());
        let pivot = if float {
            candidates.max_by(|&a, &b| {
                grid[a][col]
                    .magnitude()
                    .total_cmp(&grid[b][col].magnitude())
            })
        } else {
            candidates.min()
        };
        let Some(p) = pivot else { continue };
        if p != rank {
            grid.swap(p, rank);
            swaps += 1;
        }
        let inv = grid[rank][col].inv().expect("nonzero pivot");
        if reduce {
            for x in grid[rank].iter_mut() {
                *x = &*x * &inv;
            }
        }
        let pivot_row = grid[rank].clone();
        for (r, row) in grid.iter_mut().enumerate().take(rows) {
            if r == rank || (!reduce && r < rank) || row[col].is_zero() {
                continue;
            }
            let factor = if reduce {
                row[col].clone()
            } else {
                &row[col] * &inv
            };
            for (x, y) in row.iter_mut().zip(&pivot_row).skip(col) {
                *x = &*x - &(&factor * y);
            }
        }
        rank += 1;
    }
    Elimination { rank, swaps }
}

/// Fraction-free (Bareiss) determinant of an integer matrix.
fn bareiss(m: &mut [Vec<BigInt>]) -> BigInt {
    let n = m.len();
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&r| !m[r][k].is_zero()) {
                Some(r) => {
                    m.swap(k, r);
                    sign = -sign;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = &m[i][j] * &m[k][k] - &m[i][k] * &m[k][j];
                m[i][j] = v / &prev;
            }
        }
        prev = m[k][k].clone();
    }
    sign * &m[n - 1][n - 1]
}

/// The four row/column symmetry components of a matrix.
#[derive(Debug, Clone, PartialEq)]
pub struct QuadDecomposition {
    /// row- and column-palindromic
    pub pp: Matrix,
    /// row-palindromic, column-antipalindromic
    pub pa: Matrix,
    /// row-antipalindromic, column-palindromic
    pub ap: Matrix,
    /// row- and column-antipalindromic
    pub aa: Matrix,
}

impl QuadDecomposition {
    pub fn sum(&self) -> Result<Matrix> {
        self.pp
            .try_add(&self.pa)?
            .try_add(&self.ap)?
            .try_add(&self.aa)
    }
}

/// Symmetry classes of `n × m` matrices.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SymmetryMode {
    RowPal,
    RowAnti,
    ColPal,
    ColAnti,
    PalPal,
    PalAnti,
    AntiPal,
    AntiAnti,
    FullPal,
    FullAnti,
}

impl SymmetryMode {
    pub const ALL: [SymmetryMode; 10] = [
        SymmetryMode::RowPal,
        SymmetryMode::RowAnti,
        SymmetryMode::ColPal,
        SymmetryMode::ColAnti,
        SymmetryMode::PalPal,
        SymmetryMode::PalAnti,
        SymmetryMode::AntiPal,
        SymmetryMode::AntiAnti,
        SymmetryMode::FullPal,
        SymmetryMode::FullAnti,
    ];

    pub fn name(self) -> &'static str {
        use SymmetryMode::*;
        match self {
            RowPal => "row-pal",
            RowAnti => "row-anti",
            ColPal => "col-pal",
            ColAnti => "col-anti",
            PalPal => "pp",
            PalAnti => "pa",
            AntiPal => "ap",
            AntiAnti => "aa",
            FullPal => "full-pal",
            FullAnti => "full-anti",
        }
    }

    fn needs_odd_characteristic(self) -> bool {
        use SymmetryMode::*;
        !matches!(self, RowPal | ColPal | PalPal | FullPal)
    }
}

impl FromStr for SymmetryMode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        SymmetryMode::ALL
            .into_iter()
            .find(|m| m.name() == s)
            .ok_or_else(|| Error::Parse(format!("unknown symmetry mode `{s}`")))
    }
}

impl fmt::Display for SymmetryMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

fn outer(u: &Vector, v: &Vector) -> Matrix {
    Matrix::from_fn(u.tag(), u.len(), v.len(), |i, j| u.get(i) * v.get(j))
}

/// A basis of the `mode` subspace of `n × m` matrices.
pub fn symmetry_basis(
    n: usize,
    m: usize,
    mode: SymmetryMode,
    tag: FieldTag,
) -> Result<Vec<Matrix>> {
    use SymmetryMode::*;
    if mode.needs_odd_characteristic() {
        require_odd_characteristic(tag)?;
    }
    let pal = palindromic_basis;
    let anti = |k| antipalindromic_basis(k, tag).expect("odd characteristic checked");
    let per_row = |family: Vec<Vector>| -> Vec<Matrix> {
        (0..n)
            .flat_map(|i| {
                family
                    .iter()
                    .map(move |b| outer(&Vector::unit(tag, n, i), b))
                    .collect::<Vec<_>>()
            })
            .collect()
    };
    let per_col = |family: Vec<Vector>| -> Vec<Matrix> {
        (0..m)
            .flat_map(|j| {
                family
                    .iter()
                    .map(move |b| outer(b, &Vector::unit(tag, m, j)))
                    .collect::<Vec<_>>()
            })
            .collect()
    };
    let products = |left: Vec<Vector>, right: Vec<Vector>| -> Vec<Matrix> {
        left.iter()
            .flat_map(|u| right.iter().map(move |v| outer(u, v)))
            .collect()
    };
    let flat = |family: Vec<Vector>| -> Vec<Matrix> {
        family
            .iter()
            .map(|b| Matrix::from_flat(n, m, b).expect("length n*m"))
            .collect()
    };
    Ok(match mode {
        RowPal => per_row(pal(m, tag)),
        RowAnti => per_row(anti(m)),
        ColPal => per_col(pal(n, tag)),
        ColAnti => per_col(anti(n)),
        // column profile on the left factor, row profile on the right
        PalPal => products(pal(n, tag), pal(m, tag)),
        PalAnti => products(anti(n), pal(m, tag)),
        AntiPal => products(pal(n, tag), anti(m)),
        AntiAnti => products(anti(n), anti(m)),
        FullPal => flat(pal(n * m, tag)),
        FullAnti => flat(anti(n * m)),
    })
}

/// Rank of a family of vectors.
pub fn family_rank(tag: FieldTag, family: &[Vector]) -> usize {
    let cols = family.first().map_or(0, Vector::len);
    Matrix::from_rows(tag, family.to_vec(), cols)
        .expect("uniform family")
        .rank()
}

impl fmt::Display for Matrix {
    /// Inline syntax: `1,2;3,4`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            if i > 0 {
                f.write_str(";")?;
            }
            write!(f, "{}", self.row(i))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const Q: FieldTag = FieldTag::RATIONAL;

    fn mq(rows: &[&[i64]]) -> Matrix {
        Matrix::from_i64_rows(Q, rows).unwrap()
    }

    fn s(text: &str) -> Scalar {
        Scalar::parse(Q, text).unwrap()
    }

    fn gf(p: u64) -> FieldTag {
        FieldTag::prime(p).unwrap()
    }

    #[test]
    fn reversal_examples() {
        let a = mq(&[&[1, 2], &[3, 4]]);
        assert_eq!(a.reverse_rows(), mq(&[&[2, 1], &[4, 3]]));
        assert_eq!(a.reverse_cols(), mq(&[&[3, 4], &[1, 2]]));
        assert_eq!(a.reverse_full(), mq(&[&[4, 3], &[2, 1]]));
        assert_eq!(
            Matrix::identity(Q, 4).reverse_full(),
            Matrix::identity(Q, 4)
        );
        let b = mq(&[&[1, 2, 3], &[4, 5, 6], &[7, 8, 10]]);
        assert_eq!(b.reverse_full(), b.reverse_rows().reverse_cols());
        assert_eq!(b.reverse_full(), b.reverse_cols().reverse_rows());
    }

    #[test]
    fn pasting_examples() {
        let a = mq(&[&[1, 2], &[3, 4]]);
        let c = mq(&[&[5], &[6]]);
        let ac = a.paste_rows(&c).unwrap();
        assert_eq!(ac, mq(&[&[1, 2, 5], &[3, 4, 6]]));
        assert_eq!(
            ac.reverse_rows(),
            c.reverse_rows().paste_rows(&a.reverse_rows()).unwrap()
        );
        let top = mq(&[&[1, 2]]);
        let bottom = mq(&[&[3, 4]]);
        let tb = top.paste_cols(&bottom).unwrap();
        assert_eq!(tb, mq(&[&[1, 2], &[3, 4]]));
        assert_eq!(
            tb.transpose(),
            top.transpose().paste_rows(&bottom.transpose()).unwrap()
        );
        assert_eq!(
            tb.reverse_cols(),
            bottom
                .reverse_cols()
                .paste_cols(&top.reverse_cols())
                .unwrap()
        );
        assert!(matches!(
            a.paste_rows(&top),
            Err(Error::DimensionMismatch(_))
        ));
        assert!(matches!(a.paste_cols(&c), Err(Error::DimensionMismatch(_))));
    }

    #[test]
    fn block_pasting() {
        let one = mq(&[&[1]]);
        let two = mq(&[&[2]]);
        assert_eq!(one.paste_blocks(&two).unwrap(), mq(&[&[1, 0], &[0, 2]]));
        let a = mq(&[&[1, 2], &[3, 5]]);
        let b = mq(&[&[2, 0, 1], &[1, 1, 0], &[0, 3, 1]]);
        let ab = a.paste_blocks(&b).unwrap();
        assert_eq!(ab.shape(), (5, 5));
        assert_eq!(ab.det().unwrap(), a.det().unwrap() * b.det().unwrap());
        assert_eq!(ab.trace().unwrap(), a.trace().unwrap() + b.trace().unwrap());
        assert_eq!(
            ab.inverse().unwrap(),
            a.inverse()
                .unwrap()
                .paste_blocks(&b.inverse().unwrap())
                .unwrap()
        );
    }

    #[test]
    fn empty_matrices_are_pasting_identities() {
        let a = mq(&[&[1, 2], &[3, 4]]);
        let none = Matrix::zeros(Q, 2, 0);
        assert_eq!(a.paste_rows(&none).unwrap(), a);
        assert_eq!(Matrix::zeros(Q, 0, 2).paste_cols(&a).unwrap(), a);
        assert_eq!(Matrix::zeros(Q, 0, 0).paste_blocks(&a).unwrap(), a);
        assert!(none.is_row_palindromic() && none.is_antipalindromic());
    }

    #[test]
    fn plumbing_examples() {
        let a = mq(&[&[1, 2], &[3, 4]]);
        assert_eq!(a.matmul(&Matrix::identity(Q, 2)).unwrap(), a);
        assert_eq!(a.trace().unwrap(), s("5"));
        let r = mq(&[&[1, 2, 3, 4], &[5, 6, 7, 8], &[9, 10, 11, 12]]);
        assert_eq!(r.transpose().transpose(), r);
        assert!(r.trace().is_err());
        assert!(a.matmul(&r.transpose()).is_err());
    }

    #[test]
    fn det_examples() {
        let a = mq(&[&[1, 2], &[3, 4]]);
        assert_eq!(a.det().unwrap(), s("-2"));
        assert_eq!(a.reverse_rows().det().unwrap(), s("2"));
        assert_eq!(Matrix::zeros(Q, 0, 0).det().unwrap(), s("1"));
        assert!(mq(&[&[1, 2, 3]]).det().is_err());
        let frac = Matrix::parse(Q, "1/2,1/3;1/4,1/5").unwrap();
        // 1/10 - 1/12 = 1/60
        assert_eq!(frac.det().unwrap(), s("1/60"));
        let singular = mq(&[&[1, 2, 3], &[2, 4, 6], &[0, 1, 1]]);
        assert_eq!(singular.det().unwrap(), s("0"));
    }

    #[test]
    fn det_matches_across_fields() {
        let rows: &[&[i64]] = &[&[2, 7, 1, 8], &[2, 8, 1, 8], &[2, 8, 4, 5], &[9, 0, 4, 5]];
        let exact = Matrix::from_i64_rows(Q, rows).unwrap().det().unwrap();
        let f = gf(101);
        let modp = Matrix::from_i64_rows(f, rows).unwrap().det().unwrap();
        let expected = exact.as_rational().unwrap().numer().clone();
        assert_eq!(modp, Scalar::from_bigint(f, expected));
        let fl = FieldTag::float_default();
        let float = Matrix::from_i64_rows(fl, rows).unwrap().det().unwrap();
        let want = exact
            .as_rational()
            .unwrap()
            .numer()
            .to_string()
            .parse::<f64>()
            .unwrap();
        assert!((float.as_f64().unwrap() - want).abs() < 1e-6);
    }

    #[test]
    fn inverse_examples() {
        assert_eq!(
            Matrix::identity(Q, 3).inverse().unwrap(),
            Matrix::identity(Q, 3)
        );
        let a = mq(&[&[1, 2], &[3, 4]]);
        let lhs = a.reverse_cols().inverse().unwrap();
        let rhs = a.inverse().unwrap().reverse_rows();
        assert_eq!(lhs, rhs);
        assert_eq!(lhs, Matrix::parse(Q, "1,-2;-1/2,3/2").unwrap());
        assert_eq!(mq(&[&[1, 2], &[2, 4]]).inverse(), Err(Error::Singular));
        let f = FieldTag::float_default();
        let fa = Matrix::from_i64_rows(f, &[&[0, 2], &[3, 4]]).unwrap();
        let prod = fa.matmul(&fa.inverse().unwrap()).unwrap();
        assert_eq!(prod, Matrix::identity(f, 2));
    }

    #[test]
    fn rank_examples() {
        assert_eq!(mq(&[&[1, 2], &[2, 4]]).rank(), 1);
        assert_eq!(Matrix::identity(gf(3), 4).rank(), 4);
        assert_eq!(Matrix::zeros(Q, 3, 2).rank(), 0);
        // rank over GF(3) can drop
        assert_eq!(
            Matrix::from_i64_rows(gf(3), &[&[1, 1], &[1, 4]])
                .unwrap()
                .rank(),
            1
        );
    }

    #[test]
    fn quad_decomposition_example() {
        let a = mq(&[&[1, 2], &[3, 4]]);
        let d = a.decompose_rc().unwrap();
        assert_eq!(d.pp, Matrix::parse(Q, "5/2,5/2;5/2,5/2").unwrap());
        assert_eq!(d.pa, mq(&[&[-1, -1], &[1, 1]]));
        assert_eq!(d.ap, Matrix::parse(Q, "-1/2,1/2;-1/2,1/2").unwrap());
        assert!(d.aa.is_zero());
        assert_eq!(d.sum().unwrap(), a);
        assert!(d.pp.satisfies(SymmetryMode::PalPal));
        assert!(d.pa.satisfies(SymmetryMode::PalAnti));
        assert!(d.ap.satisfies(SymmetryMode::AntiPal));
        assert!(d.aa.satisfies(SymmetryMode::AntiAnti));
    }

    #[test]
    fn quad_decomposition_of_row_palindromic_input() {
        let a = mq(&[&[1, 1], &[2, 2]]);
        let d = a.decompose_rc().unwrap();
        assert!(d.ap.is_zero() && d.aa.is_zero());
        assert_eq!(d.pp.try_add(&d.pa).unwrap(), a);
        let z = Matrix::zeros(Q, 2, 3).decompose_rc().unwrap();
        assert!(z.pp.is_zero() && z.pa.is_zero() && z.ap.is_zero() && z.aa.is_zero());
    }

    #[test]
    fn full_decomposition_example() {
        let a = mq(&[&[1, 2], &[3, 4]]);
        let (pal, anti) = a.decompose_full().unwrap();
        assert_eq!(pal, Matrix::parse(Q, "5/2,5/2;5/2,5/2").unwrap());
        assert_eq!(anti, Matrix::parse(Q, "-3/2,-1/2;1/2,3/2").unwrap());
        let p = mq(&[&[1, 2], &[2, 1]]);
        let (pp, pz) = p.decompose_full().unwrap();
        assert_eq!(pp, p);
        assert!(pz.is_zero());
    }

    #[test]
    fn characteristic_two_refusals() {
        let a = Matrix::from_i64_rows(gf(2), &[&[1, 0], &[1, 1]]).unwrap();
        assert_eq!(a.decompose_rc(), Err(Error::CharacteristicTwo));
        assert_eq!(a.decompose_full(), Err(Error::CharacteristicTwo));
        assert_eq!(
            symmetry_basis(2, 2, SymmetryMode::RowAnti, gf(2)),
            Err(Error::CharacteristicTwo)
        );
        assert!(symmetry_basis(2, 2, SymmetryMode::RowPal, gf(2)).is_ok());
    }

    #[test]
    fn symmetry_basis_examples() {
        assert_eq!(
            symmetry_basis(2, 3, SymmetryMode::RowPal, Q).unwrap().len(),
            4
        );
        let pp = symmetry_basis(2, 2, SymmetryMode::PalPal, Q).unwrap();
        assert_eq!(pp, vec![mq(&[&[1, 1], &[1, 1]])]);
        assert_eq!(
            symmetry_basis(2, 3, SymmetryMode::FullPal, Q)
                .unwrap()
                .len(),
            3
        );
        // pa = row-palindromic, column-antipalindromic at 2x3: rows (a,b,a), (-a,-b,-a)
        let pa = symmetry_basis(2, 3, SymmetryMode::PalAnti, Q).unwrap();
        assert_eq!(pa.len(), 2);
        assert!(pa.iter().all(|b| b.satisfies(SymmetryMode::PalAnti)));
    }

    #[test]
    fn symmetry_mode_names_parse() {
        for mode in SymmetryMode::ALL {
            assert_eq!(mode.name().parse::<SymmetryMode>().unwrap(), mode);
        }
        assert!("diag".parse::<SymmetryMode>().is_err());
    }

    #[test]
    fn parse_inline() {
        let a = Matrix::parse(Q, "1,2;3,4").unwrap();
        assert_eq!(a, mq(&[&[1, 2], &[3, 4]]));
        assert_eq!(a.to_string(), "1,2;3,4");
        assert!(Matrix::parse(Q, "1,2;3").is_err());
    }
}
