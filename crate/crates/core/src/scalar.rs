//! Field elements behind one runtime-tagged interface.
//!
//! Three kinds of field are supported: exact rationals (arbitrary precision),
//! prime fields GF(p) with `p < 2^32`, and `f64` floats compared within a
//! tolerance. Every [`Scalar`] carries enough information to recover its
//! [`FieldTag`], and arithmetic between two different fields is refused.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Default equality tolerance for the float field.
pub const DEFAULT_TOLERANCE: f64 = 1e-9;

/// Largest modulus accepted for prime fields (exclusive). Keeps products in `u64`.
pub const MAX_MODULUS: u64 = 1 << 32;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FieldKind {
    Rational,
    PrimeField,
    Float,
}

#[derive(Debug, Clone, Copy)]
enum TagRepr {
    Rational,
    Prime(u64),
    Float(f64),
}

/// Identifies the field a scalar lives in.
#[derive(Debug, Clone, Copy)]
pub struct FieldTag(TagRepr);

impl PartialEq for FieldTag {
    fn eq(&self, other: &Self) -> bool {
        match (self.0, other.0) {
            (TagRepr::Rational, TagRepr::Rational) => true,
            (TagRepr::Prime(p), TagRepr::Prime(q)) => p == q,
            (TagRepr::Float(a), TagRepr::Float(b)) => a.to_bits() == b.to_bits(),
            _ => false,
        }
    }
}

impl Eq for FieldTag {}

pub fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

impl FieldTag {
    pub const RATIONAL: FieldTag = FieldTag(TagRepr::Rational);

    pub fn rational() -> Self {
        Self::RATIONAL
    }

    /// GF(p). The modulus is checked by trial division.
    pub fn prime(p: u64) -> Result<Self> {
        if p >= MAX_MODULUS || !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        Ok(FieldTag(TagRepr::Prime(p)))
    }

    pub fn float(tolerance: f64) -> Result<Self> {
        if !tolerance.is_finite() || tolerance < 0.0 {
            return Err(Error::InvalidTolerance(tolerance));
        }
        Ok(FieldTag(TagRepr::Float(tolerance)))
    }

    pub fn float_default() -> Self {
        FieldTag(TagRepr::Float(DEFAULT_TOLERANCE))
    }

    pub fn kind(&self) -> FieldKind {
        match self.0 {
            TagRepr::Rational => FieldKind::Rational,
            TagRepr::Prime(_) => FieldKind::PrimeField,
            TagRepr::Float(_) => FieldKind::Float,
        }
    }

    pub fn modulus(&self) -> Option<u64> {
        match self.0 {
            TagRepr::Prime(p) => Some(p),
            _ => None,
        }
    }

    /// Zero for the exact kinds.
    pub fn tolerance(&self) -> f64 {
        match self.0 {
            TagRepr::Float(t) => t,
            _ => 0.0,
        }
    }

    pub fn is_exact(&self) -> bool {
        !matches!(self.0, TagRepr::Float(_))
    }

    /// 0 for rationals and floats, `p` for GF(p).
    pub fn characteristic(&self) -> u64 {
        self.modulus().unwrap_or(0)
    }

    /// All elements of a finite field in ascending residue order.
    pub fn elements(&self) -> Option<Vec<Scalar>> {
        let p = self.modulus()?;
        Some((0..p).map(|r| Scalar(Repr::Prime { r, p })).collect())
    }

    /// Parses a field selector: `q`, `gf:<p>`, `f64` or `f64:<tolerance>`.
    pub fn parse(selector: &str) -> Result<Self> {
        let s = selector.trim();
        match s {
            "q" => return Ok(Self::RATIONAL),
            "f64" => return Ok(Self::float_default()),
            _ => {}
        }
        if let Some(p) = s.strip_prefix("gf:") {
            let p: u64 = p
                .parse()
                .map_err(|_| Error::Parse(format!("bad modulus in `{s}`")))?;
            return Self::prime(p);
        }
        if let Some(t) = s.strip_prefix("f64:") {
            let t: f64 = t
                .parse()
                .map_err(|_| Error::Parse(format!("bad tolerance in `{s}`")))?;
            return Self::float(t);
        }
        Err(Error::Parse(format!("unknown field selector `{s}`")))
    }
}

pub fn characteristic(tag: FieldTag) -> u64 {
    tag.characteristic()
}

impl fmt::Display for FieldTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.0 {
            TagRepr::Rational => write!(f, "q"),
            TagRepr::Prime(p) => write!(f, "gf:{p}"),
            TagRepr::Float(t) if t.to_bits() == DEFAULT_TOLERANCE.to_bits() => write!(f, "f64"),
            TagRepr::Float(t) => write!(f, "f64:{t}"),
        }
    }
}

#[derive(Debug, Clone)]
enum Repr {
    Rational(BigRational),
    Prime { r: u64, p: u64 },
    Float { x: f64, tol: f64 },
}

/// An element of a rational, prime or float field.
///
/// Binary operators panic when the operands come from different fields;
/// the container types check tags before reaching scalar arithmetic.
#[derive(Debug, Clone)]
pub struct Scalar(Repr);

fn reduce_bigint(v: &BigInt, p: u64) -> u64 {
    let m = BigInt::from(p);
    v.mod_floor(&m).to_u64().expect("residue fits in u64")
}

fn pow_mod(mut base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc = 1 % p;
    base %= p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % p;
        }
        base = base * base % p;
        exp >>= 1;
    }
    acc
}

impl Scalar {
    pub fn zero(tag: FieldTag) -> Self {
        Self::from_i64(tag, 0)
    }

    pub fn one(tag: FieldTag) -> Self {
        Self::from_i64(tag, 1)
    }

    pub fn from_i64(tag: FieldTag, v: i64) -> Self {
        match tag.0 {
            TagRepr::Rational => Scalar(Repr::Rational(BigRational::from_integer(v.into()))),
            TagRepr::Prime(p) => Scalar(Repr::Prime {
                r: v.rem_euclid(p as i64) as u64,
                p,
            }),
            TagRepr::Float(tol) => Scalar(Repr::Float { x: v as f64, tol }),
        }
    }

    pub fn from_bigint(tag: FieldTag, v: BigInt) -> Self {
        match tag.0 {
            TagRepr::Rational => Scalar(Repr::Rational(BigRational::from_integer(v))),
            TagRepr::Prime(p) => Scalar(Repr::Prime {
                r: reduce_bigint(&v, p),
                p,
            }),
            TagRepr::Float(tol) => Scalar(Repr::Float {
                x: v.to_f64().unwrap_or(f64::NAN),
                tol,
            }),
        }
    }

    /// `num / den` in the given field.
    pub fn from_ratio(tag: FieldTag, num: i64, den: i64) -> Result<Self> {
        Self::from_bigint(tag, num.into()).div(&Self::from_bigint(tag, den.into()))
    }

    pub fn from_rational(value: BigRational) -> Self {
        Scalar(Repr::Rational(value))
    }

    pub fn from_f64(tag: FieldTag, x: f64) -> Result<Self> {
        match tag.0 {
            TagRepr::Float(tol) => Ok(Scalar(Repr::Float { x, tol })),
            _ => Err(Error::Parse(format!("{x} is not an element of {tag}"))),
        }
    }

    /// Parses the textual scalar syntax for the given field.
    ///
    /// Rationals accept `a` or `a/b` with an optional sign. Prime-field
    /// elements accept any integer (reduced mod p) or `a/b`. Floats accept
    /// decimal literals.
    pub fn parse(tag: FieldTag, text: &str) -> Result<Self> {
        let s = text.trim();
        let bad = || Error::Parse(format!("`{s}` is not a valid {tag} scalar"));
        match tag.0 {
            TagRepr::Float(tol) => {
                let x: f64 = s.parse().map_err(|_| bad())?;
                if !x.is_finite() {
                    return Err(bad());
                }
                Ok(Scalar(Repr::Float { x, tol }))
            }
            _ => {
                let (num, den) = match s.split_once('/') {
                    Some((n, d)) => (n.trim(), Some(d.trim())),
                    None => (s, None),
                };
                let parse_int = |t: &str| -> Result<BigInt> {
                    if t.is_empty() || t.starts_with("+-") || t.starts_with("-+") {
                        return Err(bad());
                    }
                    t.parse::<BigInt>().map_err(|_| bad())
                };
                let num = Self::from_bigint(tag, parse_int(num)?);
                match den {
                    None => Ok(num),
                    Some(d) => {
                        let d = parse_int(d)?;
                        if d.is_zero() {
                            return Err(Error::Parse(format!("`{s}` has a zero denominator")));
                        }
                        num.div(&Self::from_bigint(tag, d))
                    }
                }
            }
        }
    }

    pub fn tag(&self) -> FieldTag {
        match &self.0 {
            Repr::Rational(_) => FieldTag::RATIONAL,
            Repr::Prime { p, .. } => FieldTag(TagRepr::Prime(*p)),
            Repr::Float { tol, .. } => FieldTag(TagRepr::Float(*tol)),
        }
    }

    /// Residue in `[0, p)` for prime-field elements.
    pub fn residue(&self) -> Option<u64> {
        match &self.0 {
            Repr::Prime { r, .. } => Some(*r),
            _ => None,
        }
    }

    pub fn as_rational(&self) -> Option<&BigRational> {
        match &self.0 {
            Repr::Rational(q) => Some(q),
            _ => None,
        }
    }

    pub fn as_f64(&self) -> Option<f64> {
        match &self.0 {
            Repr::Float { x, .. } => Some(*x),
            _ => None,
        }
    }

    /// Magnitude used for pivoting in the float field; 0/1 indicator otherwise.
    pub(crate) fn magnitude(&self) -> f64 {
        match &self.0 {
            Repr::Float { x, .. } => x.abs(),
            _ if self.is_zero() => 0.0,
            _ => 1.0,
        }
    }

    pub fn is_zero(&self) -> bool {
        match &self.0 {
            Repr::Rational(q) => q.is_zero(),
            Repr::Prime { r, .. } => *r == 0,
            Repr::Float { x, tol } => x.abs() <= *tol,
        }
    }

    pub fn is_one(&self) -> bool {
        *self == Scalar::one(self.tag())
    }

    pub(crate) fn same_field(&self, other: &Scalar) -> Result<()> {
        let (a, b) = (self.tag(), other.tag());
        if a == b {
            Ok(())
        } else {
            Err(Error::IncompatibleField { left: a, right: b })
        }
    }

    /// Multiplicative inverse.
    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(match &self.0 {
            Repr::Rational(q) => Scalar(Repr::Rational(q.recip())),
            Repr::Prime { r, p } => Scalar(Repr::Prime {
                r: pow_mod(*r, p - 2, *p),
                p: *p,
            }),
            Repr::Float { x, tol } => Scalar(Repr::Float {
                x: 1.0 / x,
                tol: *tol,
            }),
        })
    }

    pub fn div(&self, other: &Scalar) -> Result<Self> {
        self.same_field(other)?;
        Ok(self * &other.inv()?)
    }

    pub fn pow(&self, exp: u32) -> Self {
        let mut acc = Scalar::one(self.tag());
        for _ in 0..exp {
            acc = &acc * self;
        }
        acc
    }

    /// `(-1)^k` in the field of `tag`.
    pub fn sign(tag: FieldTag, k: usize) -> Self {
        Scalar::from_i64(tag, if k.is_multiple_of(2) { 1 } else { -1 })
    }
}

pub fn scalar_inv(x: &Scalar) -> Result<Scalar> {
    x.inv()
}

impl PartialEq for Scalar {
    fn eq(&self, other: &Self) -> bool {
        match (&self.0, &other.0) {
            (Repr::Rational(a), Repr::Rational(b)) => a == b,
            (Repr::Prime { r: a, p }, Repr::Prime { r: b, p: q }) => p == q && a == b,
            (Repr::Float { x: a, tol: s }, Repr::Float { x: b, tol: t }) => {
                s.to_bits() == t.to_bits() && (a - b).abs() <= *s
            }
            _ => false,
        }
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.0 {
            Repr::Rational(q) => {
                if q.denom().is_one() {
                    write!(f, "{}", q.numer())
                } else {
                    write!(f, "{}/{}", q.numer(), q.denom())
                }
            }
            Repr::Prime { r, .. } => write!(f, "{r}"),
            Repr::Float { x, .. } => {
                // avoid printing "-0"
                let x = if *x == 0.0 { 0.0 } else { *x };
                write!(f, "{x}")
            }
        }
    }
}

fn mismatch(a: &Scalar, b: &Scalar) -> ! {
    panic!(
        "scalar arithmetic across fields {} and {}",
        a.tag(),
        b.tag()
    )
}

macro_rules! binop {
    ($trait:ident, $method:ident, $rat:expr, $prime:expr, $float:expr) => {
        impl $trait<&Scalar> for &Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &Scalar) -> Scalar {
                match (&self.0, &rhs.0) {
                    (Repr::Rational(a), Repr::Rational(b)) => Scalar(Repr::Rational($rat(a, b))),
                    (Repr::Prime { r: a, p }, Repr::Prime { r: b, p: q }) if p == q => {
                        Scalar(Repr::Prime {
                            r: $prime(*a, *b, *p),
                            p: *p,
                        })
                    }
                    (Repr::Float { x: a, tol: s }, Repr::Float { x: b, tol: t })
                        if s.to_bits() == t.to_bits() =>
                    {
                        Scalar(Repr::Float {
                            x: $float(*a, *b),
                            tol: *s,
                        })
                    }
                    _ => mismatch(self, rhs),
                }
            }
        }

        impl $trait<Scalar> for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: Scalar) -> Scalar {
                (&self).$method(&rhs)
            }
        }

        impl $trait<&Scalar> for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &Scalar) -> Scalar {
                (&self).$method(rhs)
            }
        }
    };
}

binop!(
    Add,
    add,
    |a: &BigRational, b: &BigRational| a + b,
    |a: u64, b: u64, p: u64| (a + b) % p,
    |a: f64, b: f64| a + b
);
binop!(
    Sub,
    sub,
    |a: &BigRational, b: &BigRational| a - b,
    |a: u64, b: u64, p: u64| (a + p - b) % p,
    |a: f64, b: f64| a - b
);
binop!(
    Mul,
    mul,
    |a: &BigRational, b: &BigRational| a * b,
    |a: u64, b: u64, p: u64| a * b % p,
    |a: f64, b: f64| a * b
);

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar(match &self.0 {
            Repr::Rational(q) => Repr::Rational(-q),
            Repr::Prime { r, p } => Repr::Prime {
                r: (p - r) % p,
                p: *p,
            },
            Repr::Float { x, tol } => Repr::Float { x: -x, tol: *tol },
        })
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

/// Numerator and denominator of a rational scalar, for integer-only algorithms.
pub(crate) fn rational_parts(q: &BigRational) -> (BigInt, BigInt) {
    (q.numer().clone(), q.denom().clone())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gf(p: u64) -> FieldTag {
        FieldTag::prime(p).unwrap()
    }

    #[test]
    fn inverse_examples() {
        let q = FieldTag::RATIONAL;
        let two_thirds = Scalar::parse(q, "2/3").unwrap();
        assert_eq!(two_thirds.inv().unwrap(), Scalar::parse(q, "3/2").unwrap());
        assert_eq!(Scalar::from_i64(gf(7), 3).inv().unwrap().residue(), Some(5));
        assert_eq!(Scalar::from_i64(gf(2), 1).inv().unwrap().residue(), Some(1));
        assert_eq!(Scalar::zero(q).inv(), Err(Error::DivisionByZero));
        assert_eq!(Scalar::zero(gf(5)).inv(), Err(Error::DivisionByZero));
    }

    #[test]
    fn characteristic_examples() {
        assert_eq!(characteristic(FieldTag::RATIONAL), 0);
        assert_eq!(characteristic(FieldTag::float_default()), 0);
        assert_eq!(characteristic(gf(7)), 7);
        assert_eq!(characteristic(gf(2)), 2);
    }

    #[test]
    fn modulus_must_be_prime() {
        assert_eq!(FieldTag::prime(9), Err(Error::NotPrime(9)));
        assert_eq!(FieldTag::prime(1), Err(Error::NotPrime(1)));
        assert_eq!(FieldTag::prime(0), Err(Error::NotPrime(0)));
        assert!(FieldTag::prime(65_521).is_ok());
        assert!(FieldTag::float(-1.0).is_err());
    }

    #[test]
    fn selectors_round_trip() {
        for s in ["q", "gf:2", "gf:101", "f64", "f64:0.001"] {
            assert_eq!(FieldTag::parse(s).unwrap().to_string(), s);
        }
        assert!(FieldTag::parse("gf:4").is_err());
        assert!(FieldTag::parse("r").is_err());
    }

    #[test]
    fn rational_parsing_normalizes() {
        let q = FieldTag::RATIONAL;
        let x = Scalar::parse(q, "6/-4").unwrap();
        assert_eq!(x.to_string(), "-3/2");
        let r = x.as_rational().unwrap();
        assert!(r.denom() > &BigInt::zero());
        assert_eq!(Scalar::parse(q, "+7").unwrap().to_string(), "7");
        assert!(Scalar::parse(q, "1/0").is_err());
        assert!(Scalar::parse(q, "abc").is_err());
        assert!(Scalar::parse(q, "").is_err());
    }

    #[test]
    fn prime_parsing_reduces() {
        let f = gf(7);
        assert_eq!(Scalar::parse(f, "-1").unwrap().residue(), Some(6));
        assert_eq!(Scalar::parse(f, "15").unwrap().residue(), Some(1));
        // 1/3 = 5 mod 7
        assert_eq!(Scalar::parse(f, "1/3").unwrap().residue(), Some(5));
        assert!(Scalar::parse(f, "1/7").is_err());
    }

    #[test]
    fn float_equality_uses_tolerance() {
        let f = FieldTag::float_default();
        let a = Scalar::parse(f, "0.1").unwrap();
        let b = Scalar::parse(f, "0.2").unwrap();
        let c = Scalar::parse(f, "0.3").unwrap();
        assert_eq!(&a + &b, c);
        assert_ne!(a, c);
        let loose = FieldTag::float(0.5).unwrap();
        assert_ne!(Scalar::from_i64(loose, 0), Scalar::from_i64(f, 0));
    }

    #[test]
    fn different_fields_never_compare_equal() {
        assert_ne!(Scalar::one(gf(3)), Scalar::one(gf(5)));
        assert_ne!(Scalar::one(gf(3)), Scalar::one(FieldTag::RATIONAL));
        let e = Scalar::one(gf(3)).div(&Scalar::one(gf(5))).unwrap_err();
        assert!(matches!(e, Error::IncompatibleField { .. }));
    }

    #[test]
    #[should_panic(expected = "across fields")]
    fn mixed_operator_panics() {
        let _ = Scalar::one(gf(3)) + Scalar::one(FieldTag::RATIONAL);
    }

    fn check_axioms(tag: FieldTag) {
        let els = tag.elements().unwrap();
        let zero = Scalar::zero(tag);
        let one = Scalar::one(tag);
        for a in &els {
            assert_eq!(a + &zero, *a);
            assert_eq!(a * &one, *a);
            assert_eq!(a + &(-a), zero);
            if !a.is_zero() {
                assert_eq!(a * &a.inv().unwrap(), one);
            }
            for b in &els {
                assert_eq!(a + b, b + a);
                assert_eq!(a * b, b * a);
                assert_eq!(&(a - b) + b, *a);
                for c in &els {
                    assert_eq!(&(a + b) + c, a + &(b + c));
                    assert_eq!(&(a * b) * c, a * &(b * c));
                    assert_eq!(a * &(b + c), &(a * b) + &(a * c));
                }
            }
        }
    }

    #[test]
    fn field_axioms_small_primes() {
        for p in [2, 3, 5, 7] {
            check_axioms(gf(p));
        }
    }

    #[test]
    fn display_floats_and_rationals() {
        let f = FieldTag::float_default();
        assert_eq!(Scalar::parse(f, "2.50").unwrap().to_string(), "2.5");
        assert_eq!((-Scalar::zero(f)).to_string(), "0");
        assert_eq!(
            Scalar::from_ratio(FieldTag::RATIONAL, 10, -4)
                .unwrap()
                .to_string(),
            "-5/2"
        );
    }
}
