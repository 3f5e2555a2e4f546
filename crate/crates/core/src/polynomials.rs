//! K_n[x] viewed as the coefficient space K^{n+1}.
//!
//! A [`Poly`] carries its ambient degree bound explicitly; the actual degree
//! may be lower. Coefficients ascend, so entry `i` multiplies `x^i`.

use std::fmt;

use crate::error::{Error, Result};
use crate::matrices::Matrix;
use crate::scalar::{FieldTag, Scalar};
use crate::vectors::{antipalindromic_basis, palindromic_basis, same_tag, Vector};

#[derive(Debug, Clone, PartialEq)]
pub struct Poly {
    ambient: usize,
    coeffs: Vector,
}

impl Poly {
    /// `coeffs` must have exactly `ambient + 1` entries.
    pub fn new(ambient: usize, coeffs: Vector) -> Result<Self> {
        if coeffs.len() != ambient + 1 {
            return Err(Error::dims(format!(
                "ambient degree {ambient} needs {} coefficients, got {}",
                ambient + 1,
                coeffs.len()
            )));
        }
        Ok(Poly { ambient, coeffs })
    }

    /// Ambient degree taken from the coefficient count.
    pub fn from_coeffs(coeffs: Vector) -> Result<Self> {
        match coeffs.len() {
            0 => Err(Error::dims("a polynomial needs at least one coefficient")),
            n => Self::new(n - 1, coeffs),
        }
    }

    pub fn from_i64s(tag: FieldTag, coeffs: &[i64]) -> Result<Self> {
        Self::from_coeffs(Vector::from_i64s(tag, coeffs))
    }

    pub fn zero(tag: FieldTag, ambient: usize) -> Self {
        Poly {
            ambient,
            coeffs: Vector::zeros(tag, ambient + 1),
        }
    }

    pub fn tag(&self) -> FieldTag {
        self.coeffs.tag()
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn coeffs(&self) -> &Vector {
        &self.coeffs
    }

    /// Index of the highest nonzero coefficient, `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.entries().iter().rposition(|c| !c.is_zero())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_zero()
    }

    /// Same ambient, coefficient vector reversed: `x^n P(1/x)`.
    pub fn reverse(&self) -> Poly {
        Poly {
            ambient: self.ambient,
            coeffs: self.coeffs.reverse(),
        }
    }

    /// `P ⋄ Q` has ambient `n + m + 1` and equals `P(x) + x^{n+1} Q(x)`.
    pub fn paste(&self, other: &Poly) -> Result<Poly> {
        Ok(Poly {
            ambient: self.ambient + other.ambient + 1,
            coeffs: self.coeffs.paste(&other.coeffs)?,
        })
    }

    pub fn is_palindromic(&self) -> bool {
        self.coeffs.is_palindromic()
    }

    pub fn is_antipalindromic(&self) -> bool {
        self.coeffs.is_antipalindromic()
    }

    /// Palindromic and antipalindromic parts, both at the ambient of `self`.
    pub fn decompose(&self) -> Result<(Poly, Poly)> {
        let d = self.coeffs.decompose()?;
        Ok((
            Poly {
                ambient: self.ambient,
                coeffs: d.pal,
            },
            Poly {
                ambient: self.ambient,
                coeffs: d.anti,
            },
        ))
    }

    fn check_same_ambient(&self, other: &Poly) -> Result<()> {
        if self.ambient != other.ambient {
            return Err(Error::dims(format!(
                "ambient degrees {} and {}",
                self.ambient, other.ambient
            )));
        }
        Ok(())
    }

    pub fn try_add(&self, other: &Poly) -> Result<Poly> {
        self.check_same_ambient(other)?;
        Ok(Poly {
            ambient: self.ambient,
            coeffs: self.coeffs.try_add(&other.coeffs)?,
        })
    }

    pub fn scale(&self, a: &Scalar) -> Result<Poly> {
        Ok(Poly {
            ambient: self.ambient,
            coeffs: self.coeffs.scale(a)?,
        })
    }

    /// Horner evaluation.
    pub fn eval(&self, x: &Scalar) -> Result<Scalar> {
        same_tag(self.tag(), x.tag())?;
        Ok(self
            .coeffs
            .entries()
            .iter()
            .rev()
            .fold(Scalar::zero(self.tag()), |acc, c| acc * x + c))
    }

    /// Evaluates at a square matrix argument.
    pub fn eval_matrix(&self, a: &Matrix) -> Result<Matrix> {
        same_tag(self.tag(), a.tag())?;
        if !a.is_square() {
            return Err(Error::dims("matrix polynomial needs a square argument"));
        }
        let n = a.rows();
        let mut acc = Matrix::zeros(self.tag(), n, n);
        for c in self.coeffs.entries().iter().rev() {
            acc = acc
                .matmul(a)?
                .try_add(&Matrix::identity(self.tag(), n).scale(c)?)?;
        }
        Ok(acc)
    }

    /// Product; the ambient of the result is the sum of the ambients.
    pub fn mul(&self, other: &Poly) -> Result<Poly> {
        same_tag(self.tag(), other.tag())?;
        let tag = self.tag();
        let mut out = vec![Scalar::zero(tag); self.ambient + other.ambient + 1];
        for (i, a) in self.coeffs.entries().iter().enumerate() {
            for (j, b) in other.coeffs.entries().iter().enumerate() {
                out[i + j] = &out[i + j] + &(a * b);
            }
        }
        Poly::new(self.ambient + other.ambient, Vector::new(tag, out)?)
    }

    /// Euclidean division by a nonzero divisor. Quotient and remainder keep
    /// the ambient of `self`.
    pub fn div_rem(&self, divisor: &Poly) -> Result<(Poly, Poly)> {
        same_tag(self.tag(), divisor.tag())?;
        let tag = self.tag();
        let d = divisor.degree().ok_or(Error::DivisionByZero)?;
        let lead_inv = divisor.coeffs.get(d).inv()?;
        let mut rem: Vec<Scalar> = self.coeffs.entries().to_vec();
        let mut quot = vec![Scalar::zero(tag); self.ambient + 1];
        for k in (d..=self.ambient).rev() {
            if rem[k].is_zero() {
                continue;
            }
            let factor = &rem[k] * &lead_inv;
            for (i, c) in divisor.coeffs.entries()[..=d].iter().enumerate() {
                rem[k - d + i] = &rem[k - d + i] - &(&factor * c);
            }
            quot[k - d] = factor;
        }
        Ok((
            Poly::new(self.ambient, Vector::new(tag, quot)?)?,
            Poly::new(self.ambient, Vector::new(tag, rem)?)?,
        ))
    }
}

/// Palindromic basis of K_n[x]: `ceil((n+1)/2)` polynomials.
pub fn palindromic_poly_basis(ambient: usize, tag: FieldTag) -> Vec<Poly> {
    palindromic_basis(ambient + 1, tag)
        .into_iter()
        .map(|coeffs| Poly { ambient, coeffs })
        .collect()
}

/// Antipalindromic basis of K_n[x]: `floor((n+1)/2)` polynomials.
pub fn antipalindromic_poly_basis(ambient: usize, tag: FieldTag) -> Result<Vec<Poly>> {
    Ok(antipalindromic_basis(ambient + 1, tag)?
        .into_iter()
        .map(|coeffs| Poly { ambient, coeffs })
        .collect())
}

impl fmt::Display for Poly {
    /// Ascending coefficient list, e.g. `1,2,0` for `1 + 2x` at ambient 2.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.coeffs)
    }
}

/// Descending human-readable form in the variable `var`, e.g. `x^2 - 1`.
pub fn format_poly(p: &Poly, var: &str) -> String {
    let tag = p.tag();
    let mut out = String::new();
    for (k, c) in p.coeffs.entries().iter().enumerate().rev() {
        if c.is_zero() {
            continue;
        }
        let neg = tag.modulus().is_none() && c.to_string().starts_with('-');
        let mag = if neg { -c } else { c.clone() };
        if out.is_empty() {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        let show_coeff = k == 0 || !mag.is_one();
        if show_coeff {
            out.push_str(&mag.to_string());
        }
        match k {
            0 => {}
            1 => out.push_str(var),
            _ => out.push_str(&format!("{var}^{k}")),
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}
