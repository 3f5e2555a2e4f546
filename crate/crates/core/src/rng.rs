//! Counter-based case generator for random law checks.
//!
//! Every value is a pure function of `(seed, case, draw)`, so any
//! implementation can reproduce a case sequence without sharing state:
//!
//! ```text
//! GOLDEN    = 0x9E37_79B9_7F4A_7C15
//! mix64(z)  = z ^= z >> 30; z *= 0xBF58_476D_1CE4_E5B9;
//!             z ^= z >> 27; z *= 0x94D0_49BB_1331_11EB;
//!             z ^ (z >> 31)                  (wrapping arithmetic)
//! case_seed = mix64(seed + (case + 1) * GOLDEN)
//! draw(k)   = mix64(case_seed + (k + 1) * GOLDEN)
//! ```
//!
//! Scalars are taken from one 64-bit draw `u`:
//! * GF(p): `u mod p`
//! * rationals: `(u mod 19 - 9) / ((u >> 32) mod 4 + 1)`

use crate::error::Result;
use crate::scalar::{FieldKind, FieldTag, Scalar};

pub const GOLDEN: u64 = 0x9E37_79B9_7F4A_7C15;

pub fn mix64(mut z: u64) -> u64 {
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// Draw stream for one case.
#[derive(Debug, Clone)]
pub struct CaseStream {
    case_seed: u64,
    next: u64,
}

impl CaseStream {
    pub fn new(seed: u64, case: u64) -> Self {
        CaseStream {
            case_seed: mix64(seed.wrapping_add(case.wrapping_add(1).wrapping_mul(GOLDEN))),
            next: 0,
        }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.next += 1;
        mix64(self.case_seed.wrapping_add(self.next.wrapping_mul(GOLDEN)))
    }

    pub fn scalar(&mut self, tag: FieldTag) -> Result<Scalar> {
        let u = self.next_u64();
        match tag.kind() {
            FieldKind::PrimeField => {
                let p = tag.modulus().expect("prime field");
                Ok(Scalar::from_i64(tag, (u % p) as i64))
            }
            FieldKind::Rational => {
                let num = (u % 19) as i64 - 9;
                let den = ((u >> 32) % 4) as i64 + 1;
                Scalar::from_ratio(tag, num, den)
            }
            FieldKind::Float => Scalar::from_f64(tag, (u % 19) as f64 - 9.0),
        }
    }
}
