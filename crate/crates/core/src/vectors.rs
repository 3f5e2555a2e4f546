//! Reversing and Pasting on K^n, together with the palindromic and
//! antipalindromic subspaces and their projectors.

use std::fmt;
use std::ops::{Add, Neg, Sub};

use crate::error::{Error, Result};
use crate::scalar::{FieldTag, Scalar};

/// A finite sequence of scalars from one field.
#[derive(Debug, Clone, PartialEq)]
pub struct Vector {
    tag: FieldTag,
    entries: Vec<Scalar>,
}

/// Palindromic and antipalindromic parts of a vector.
#[derive(Debug, Clone, PartialEq)]
pub struct PalAntiPair {
    pub pal: Vector,
    pub anti: Vector,
}

pub(crate) fn require_odd_characteristic(tag: FieldTag) -> Result<()> {
    if tag.characteristic() == 2 {
        Err(Error::CharacteristicTwo)
    } else {
        Ok(())
    }
}

pub(crate) fn same_tag(a: FieldTag, b: FieldTag) -> Result<()> {
    if a == b {
        Ok(())
    } else {
        Err(Error::IncompatibleField { left: a, right: b })
    }
}

impl Vector {
    pub fn new(tag: FieldTag, entries: Vec<Scalar>) -> Result<Self> {
        for e in &entries {
            same_tag(tag, e.tag())?;
        }
        Ok(Vector { tag, entries })
    }

    pub(crate) fn from_parts_unchecked(tag: FieldTag, entries: Vec<Scalar>) -> Self {
        Vector { tag, entries }
    }

    pub fn zeros(tag: FieldTag, n: usize) -> Self {
        Vector {
            tag,
            entries: vec![Scalar::zero(tag); n],
        }
    }

    pub fn from_i64s(tag: FieldTag, values: &[i64]) -> Self {
        Vector {
            tag,
            entries: values.iter().map(|&v| Scalar::from_i64(tag, v)).collect(),
        }
    }

    /// `i`-th standard basis vector, 0-based.
    pub fn unit(tag: FieldTag, n: usize, i: usize) -> Self {
        let mut v = Self::zeros(tag, n);
        v.entries[i] = Scalar::one(tag);
        v
    }

    /// Comma-separated scalar list; the empty string is the empty vector.
    pub fn parse(tag: FieldTag, text: &str) -> Result<Self> {
        let text = text.trim();
        if text.is_empty() {
            return Ok(Self::zeros(tag, 0));
        }
        let entries = text
            .split(',')
            .map(|s| Scalar::parse(tag, s))
            .collect::<Result<Vec<_>>>()?;
        Ok(Vector { tag, entries })
    }

    pub fn tag(&self) -> FieldTag {
        self.tag
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn entries(&self) -> &[Scalar] {
        &self.entries
    }

    pub fn get(&self, i: usize) -> &Scalar {
        &self.entries[i]
    }

    pub fn into_entries(self) -> Vec<Scalar> {
        self.entries
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Scalar::is_zero)
    }

    fn check_compatible(&self, other: &Vector) -> Result<()> {
        same_tag(self.tag, other.tag)?;
        if self.len() != other.len() {
            return Err(Error::dims(format!(
                "vector lengths {} and {}",
                self.len(),
                other.len()
            )));
        }
        Ok(())
    }

    pub fn try_add(&self, other: &Vector) -> Result<Vector> {
        self.check_compatible(other)?;
        Ok(self.zip_with(other, |a, b| a + b))
    }

    pub fn try_sub(&self, other: &Vector) -> Result<Vector> {
        self.check_compatible(other)?;
        Ok(self.zip_with(other, |a, b| a - b))
    }

    fn zip_with(&self, other: &Vector, f: impl Fn(&Scalar, &Scalar) -> Scalar) -> Vector {
        Vector {
            tag: self.tag,
            entries: self
                .entries
                .iter()
                .zip(&other.entries)
                .map(|(a, b)| f(a, b))
                .collect(),
        }
    }

    pub fn scale(&self, a: &Scalar) -> Result<Vector> {
        same_tag(self.tag, a.tag())?;
        Ok(Vector {
            tag: self.tag,
            entries: self.entries.iter().map(|x| a * x).collect(),
        })
    }

    /// Entry `i` of the result is entry `n - 1 - i` of `self`.
    pub fn reverse(&self) -> Vector {
        Vector {
            tag: self.tag,
            entries: self.entries.iter().rev().cloned().collect(),
        }
    }

    /// Concatenation `self ⋄ other`.
    pub fn paste(&self, other: &Vector) -> Result<Vector> {
        same_tag(self.tag, other.tag)?;
        let mut entries = Vec::with_capacity(self.len() + other.len());
        entries.extend_from_slice(&self.entries);
        entries.extend_from_slice(&other.entries);
        Ok(Vector {
            tag: self.tag,
            entries,
        })
    }

    pub fn dot(&self, other: &Vector) -> Result<Scalar> {
        self.check_compatible(other)?;
        Ok(self
            .entries
            .iter()
            .zip(&other.entries)
            .fold(Scalar::zero(self.tag), |acc, (a, b)| acc + a * b))
    }

    /// Classical vector product on K^3.
    pub fn cross3(&self, other: &Vector) -> Result<Vector> {
        self.check_compatible(other)?;
        if self.len() != 3 {
            return Err(Error::dims(format!(
                "cross3 needs length 3, got {}",
                self.len()
            )));
        }
        let (v, w) = (&self.entries, &other.entries);
        let minor = |i: usize, j: usize| &(&v[i] * &w[j]) - &(&v[j] * &w[i]);
        Ok(Vector {
            tag: self.tag,
            entries: vec![minor(1, 2), -minor(0, 2), minor(0, 1)],
        })
    }

    pub fn is_palindromic(&self) -> bool {
        let n = self.len();
        (0..n / 2).all(|i| self.entries[i] == self.entries[n - 1 - i])
    }

    pub fn is_antipalindromic(&self) -> bool {
        let n = self.len();
        (0..n.div_ceil(2)).all(|i| self.entries[i] == -&self.entries[n - 1 - i])
    }

    /// `(v + reverse(v)) / 2`.
    pub fn palindromic_part(&self) -> Result<Vector> {
        self.half_combination(1)
    }

    /// `(v - reverse(v)) / 2`.
    pub fn antipalindromic_part(&self) -> Result<Vector> {
        self.half_combination(-1)
    }

    fn half_combination(&self, sign: i64) -> Result<Vector> {
        require_odd_characteristic(self.tag)?;
        let half = Scalar::from_i64(self.tag, 2).inv()?;
        let n = self.len();
        let sign = Scalar::from_i64(self.tag, sign);
        let entries = (0..n)
            .map(|i| &half * &(&self.entries[i] + &(&sign * &self.entries[n - 1 - i])))
            .collect();
        Ok(Vector {
            tag: self.tag,
            entries,
        })
    }

    pub fn decompose(&self) -> Result<PalAntiPair> {
        let pal = self.palindromic_part()?;
        // anti = v - pal keeps the reconstruction exact in float mode too
        let anti = self.try_sub(&pal)?;
        Ok(PalAntiPair { pal, anti })
    }
}

/// `e_i + e_{n+1-i}` for `i = 1..=ceil(n/2)`, with the middle `e_{(n+1)/2}`
/// appearing alone when `n` is odd.
pub fn palindromic_basis(n: usize, tag: FieldTag) -> Vec<Vector> {
    (0..n.div_ceil(2))
        .map(|i| {
            let mut v = Vector::unit(tag, n, i);
            v.entries[n - 1 - i] = Scalar::one(tag);
            v
        })
        .collect()
}

/// `e_i - e_{n+1-i}` for `i = 1..=floor(n/2)`.
pub fn antipalindromic_basis(n: usize, tag: FieldTag) -> Result<Vec<Vector>> {
    require_odd_characteristic(tag)?;
    Ok((0..n / 2)
        .map(|i| {
            let mut v = Vector::unit(tag, n, i);
            v.entries[n - 1 - i] = -Scalar::one(tag);
            v
        })
        .collect())
}

/// Builds the palindromic vector of length `n` whose first `ceil(n/2)` entries are `free`.
pub fn palindromic_from_free(tag: FieldTag, n: usize, free: &[Scalar]) -> Vector {
    assert_eq!(free.len(), n.div_ceil(2));
    let entries = (0..n).map(|i| free[i.min(n - 1 - i)].clone()).collect();
    Vector { tag, entries }
}

/// Builds the antipalindromic vector of length `n` whose first `floor(n/2)` entries are `free`.
pub fn antipalindromic_from_free(tag: FieldTag, n: usize, free: &[Scalar]) -> Vector {
    assert_eq!(free.len(), n / 2);
    let entries = (0..n)
        .map(|i| {
            let j = n - 1 - i;
            if i < j {
                free[i].clone()
            } else if i > j {
                -&free[j]
            } else {
                Scalar::zero(tag)
            }
        })
        .collect();
    Vector { tag, entries }
}

impl Add for &Vector {
    type Output = Vector;
    fn add(self, rhs: &Vector) -> Vector {
        self.try_add(rhs).expect("vector addition")
    }
}

impl Sub for &Vector {
    type Output = Vector;
    fn sub(self, rhs: &Vector) -> Vector {
        self.try_sub(rhs).expect("vector subtraction")
    }
}

impl Neg for &Vector {
    type Output = Vector;
    fn neg(self) -> Vector {
        Vector {
            tag: self.tag,
            entries: self.entries.iter().map(|x| -x).collect(),
        }
    }
}

impl fmt::Display for Vector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, e) in self.entries.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{e}")?;
        }
        Ok(())
    }
}
