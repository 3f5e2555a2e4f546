//! Randomized invariants over the rationals.

use proptest::prelude::*;
use revpaste::matrices::SymmetryMode;
use revpaste::vectors::{antipalindromic_from_free, palindromic_from_free};
use revpaste::{
    cross_reversal_sign, generalized_cross, minor_drop_col, FieldTag, Matrix, Poly, Scalar, Vector,
};

const Q: FieldTag = FieldTag::RATIONAL;

fn scalar() -> impl Strategy<Value = Scalar> {
    (-12i64..=12, 1i64..=5).prop_map(|(a, b)| Scalar::from_ratio(Q, a, b).unwrap())
}

fn vector(len: usize) -> impl Strategy<Value = Vector> {
    prop::collection::vec(scalar(), len).prop_map(|e| Vector::new(Q, e).unwrap())
}

fn any_vector() -> impl Strategy<Value = Vector> {
    (0usize..7).prop_flat_map(vector)
}

fn matrix(rows: usize, cols: usize) -> impl Strategy<Value = Matrix> {
    prop::collection::vec(scalar(), rows * cols)
        .prop_map(move |e| Matrix::new(Q, rows, cols, e).unwrap())
}

fn any_matrix() -> impl Strategy<Value = Matrix> {
    (1usize..=5, 1usize..=5).prop_flat_map(|(r, c)| matrix(r, c))
}

fn square() -> impl Strategy<Value = Matrix> {
    (1usize..=5).prop_flat_map(|n| matrix(n, n))
}

/// A matrix whose rows are palindromic (or antipalindromic).
fn row_symmetric(rows: usize, cols: usize, anti: bool) -> impl Strategy<Value = Matrix> {
    let free = if anti { cols / 2 } else { cols.div_ceil(2) };
    prop::collection::vec(prop::collection::vec(scalar(), free), rows).prop_map(move |blocks| {
        let vs = blocks
            .iter()
            .map(|b| {
                if anti {
                    antipalindromic_from_free(Q, cols, b)
                } else {
                    palindromic_from_free(Q, cols, b)
                }
            })
            .collect();
        Matrix::from_rows(Q, vs, cols).unwrap()
    })
}

fn int(k: i64) -> Scalar {
    Scalar::from_i64(Q, k)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn rationals_are_normalized(a in -1000i64..1000, b in 1i64..1000, s in prop::bool::ANY) {
        let den = if s { b } else { -b };
        let x = Scalar::from_ratio(Q, a, den).unwrap();
        let q = x.as_rational().unwrap();
        prop_assert!(q.denom() > &0.into());
        prop_assert_eq!(num_integer::Integer::gcd(q.numer(), q.denom()), 1.into());
    }

    #[test]
    fn vector_reversal_laws(v in any_vector(), a in scalar(), b in scalar()) {
        prop_assert_eq!(v.reverse().reverse(), v.clone());
        let w = Vector::new(Q, v.entries().iter().rev().map(|x| x * &a).collect()).unwrap();
        let lhs = v.scale(&a).unwrap().try_add(&w.scale(&b).unwrap()).unwrap().reverse();
        let rhs = v.reverse().scale(&a).unwrap().try_add(&w.reverse().scale(&b).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
        prop_assert_eq!(v.dot(&w).unwrap(), v.reverse().dot(&w.reverse()).unwrap());
    }

    #[test]
    fn pasting_is_a_monoid(u in any_vector(), v in any_vector(), w in any_vector()) {
        let empty = Vector::zeros(Q, 0);
        prop_assert_eq!(u.paste(&empty).unwrap(), u.clone());
        prop_assert_eq!(empty.paste(&u).unwrap(), u.clone());
        prop_assert_eq!(u.paste(&v).unwrap().paste(&w).unwrap(), u.paste(&v.paste(&w).unwrap()).unwrap());
        prop_assert_eq!(u.paste(&v).unwrap().reverse(), v.reverse().paste(&u.reverse()).unwrap());
    }

    #[test]
    fn cross3_anti_homomorphism(v in vector(3), w in vector(3)) {
        prop_assert_eq!(v.cross3(&w).unwrap().reverse(), w.reverse().cross3(&v.reverse()).unwrap());
    }

    #[test]
    fn vector_decomposition(v in any_vector()) {
        let parts = v.decompose().unwrap();
        prop_assert!(parts.pal.is_palindromic());
        prop_assert!(parts.anti.is_antipalindromic());
        prop_assert_eq!(&parts.pal + &parts.anti, v);
    }

    #[test]
    fn poly_paste_evaluates(p in (0usize..5).prop_flat_map(vector), q in (0usize..5).prop_flat_map(vector), x in scalar()) {
        prop_assume!(!p.is_empty() && !q.is_empty());
        let (pp, qq) = (Poly::from_coeffs(p).unwrap(), Poly::from_coeffs(q).unwrap());
        let pasted = pp.paste(&qq).unwrap();
        prop_assert_eq!(pasted.ambient(), pp.ambient() + qq.ambient() + 1);
        let want = pp.eval(&x).unwrap() + x.pow(pp.ambient() as u32 + 1) * qq.eval(&x).unwrap();
        prop_assert_eq!(pasted.eval(&x).unwrap(), want);
    }

    #[test]
    fn matrix_reversals(a in any_matrix()) {
        prop_assert_eq!(a.reverse_rows().reverse_rows(), a.clone());
        prop_assert_eq!(a.reverse_cols().reverse_cols(), a.clone());
        prop_assert_eq!(a.reverse_full(), a.reverse_rows().reverse_cols());
        prop_assert_eq!(a.reverse_full(), a.reverse_cols().reverse_rows());
        prop_assert_eq!(a.reverse_rows().transpose(), a.transpose().reverse_cols());
        prop_assert_eq!(a.reverse_full().transpose(), a.transpose().reverse_full());
    }

    #[test]
    fn product_laws(a in matrix(3, 4), b in matrix(4, 2)) {
        let ab = a.matmul(&b).unwrap();
        prop_assert_eq!(ab.reverse_rows(), a.matmul(&b.reverse_rows()).unwrap());
        prop_assert_eq!(ab.reverse_cols(), a.reverse_cols().matmul(&b).unwrap());
        prop_assert_eq!(ab.reverse_full(), a.reverse_full().matmul(&b.reverse_full()).unwrap());
    }

    #[test]
    fn determinant_and_inverse_laws(a in square()) {
        let n = a.rows();
        let sign = Scalar::sign(Q, n / 2);
        let d = a.det().unwrap();
        prop_assert_eq!(a.reverse_rows().det().unwrap(), &sign * &d);
        prop_assert_eq!(a.reverse_cols().det().unwrap(), &sign * &d);
        prop_assert_eq!(a.reverse_full().det().unwrap(), d.clone());
        prop_assert_eq!(a.reverse_full().trace().unwrap(), a.trace().unwrap());
        if !d.is_zero() {
            let inv = a.inverse().unwrap();
            prop_assert_eq!(a.matmul(&inv).unwrap(), Matrix::identity(Q, n));
            prop_assert_eq!(a.reverse_cols().inverse().unwrap(), inv.reverse_rows());
            prop_assert_eq!(a.reverse_rows().inverse().unwrap(), inv.reverse_cols());
            prop_assert_eq!(a.reverse_full().inverse().unwrap(), inv.reverse_full());
        }
    }

    #[test]
    fn symmetry_transfer(a in matrix(3, 4), b in row_symmetric(4, 5, false), c in row_symmetric(4, 5, true)) {
        prop_assert!(a.matmul(&b).unwrap().is_row_palindromic());
        prop_assert!(a.matmul(&c).unwrap().is_row_antipalindromic());
        let (bt, ct) = (b.transpose(), c.transpose());
        prop_assert!(bt.matmul(&a.transpose()).unwrap().is_col_palindromic());
        prop_assert!(ct.matmul(&a.transpose()).unwrap().is_col_antipalindromic());
    }

    #[test]
    fn full_symmetry_products(a in matrix(2, 3), b in matrix(3, 2)) {
        let (ap, aa) = a.decompose_full().unwrap();
        let (bp, ba) = b.decompose_full().unwrap();
        prop_assert!(ap.matmul(&bp).unwrap().is_palindromic());
        prop_assert!(aa.matmul(&ba).unwrap().is_palindromic());
        prop_assert!(ap.matmul(&ba).unwrap().is_antipalindromic());
    }

    #[test]
    fn quad_decomposition(a in any_matrix()) {
        let q = a.decompose_rc().unwrap();
        prop_assert_eq!(q.sum().unwrap(), a.clone());
        prop_assert!(q.pp.satisfies(SymmetryMode::PalPal));
        prop_assert!(q.pa.satisfies(SymmetryMode::PalAnti));
        prop_assert!(q.ap.satisfies(SymmetryMode::AntiPal));
        prop_assert!(q.aa.satisfies(SymmetryMode::AntiAnti));
    }

    #[test]
    fn block_laws(a in square(), b in square()) {
        let ab = a.paste_blocks(&b).unwrap();
        prop_assert_eq!(ab.reverse_full(), b.reverse_full().paste_blocks(&a.reverse_full()).unwrap());
        prop_assert_eq!(ab.transpose(), a.transpose().paste_blocks(&b.transpose()).unwrap());
        prop_assert_eq!(ab.det().unwrap(), a.det().unwrap() * b.det().unwrap());
        prop_assert_eq!(ab.trace().unwrap(), a.trace().unwrap() + b.trace().unwrap());
        if let (Ok(ai), Ok(bi)) = (a.inverse(), b.inverse()) {
            prop_assert_eq!(ab.inverse().unwrap(), ai.paste_blocks(&bi).unwrap());
        }
    }

    #[test]
    fn cross_product_reversal(m in (2usize..=5).prop_flat_map(|n| matrix(n - 1, n))) {
        let n = m.cols();
        for k in 1..=n {
            prop_assert_eq!(
                minor_drop_col(&m.reverse_rows(), k).unwrap(),
                minor_drop_col(&m, n - k + 1).unwrap().reverse_rows()
            );
        }
        let lhs = generalized_cross(&m.reverse_rows().row_vectors()).unwrap();
        let base = generalized_cross(&m.row_vectors()).unwrap();
        prop_assert_eq!(lhs, base.reverse().scale(&int(cross_reversal_sign(n))).unwrap());
        // the product is orthogonal to every input row
        for row in m.row_vectors() {
            prop_assert!(row.dot(&base).unwrap().is_zero());
        }
    }

    #[test]
    fn cross_product_is_alternating(m in matrix(3, 4), a in scalar()) {
        let rows = m.row_vectors();
        let base = generalized_cross(&rows).unwrap();
        let swapped = [rows[1].clone(), rows[0].clone(), rows[2].clone()];
        prop_assert_eq!(generalized_cross(&swapped).unwrap(), -&base);
        let scaled = [rows[0].scale(&a).unwrap(), rows[1].clone(), rows[2].clone()];
        prop_assert_eq!(generalized_cross(&scaled).unwrap(), base.scale(&a).unwrap());
    }
}
