//! JSON encodings shared by the CLI and the verifier.
//!
//! * scalar: string in the textual scalar syntax, e.g. `"-2/3"`
//! * vector: array of scalar strings
//! * polynomial: `{"ambient": n, "coeffs": [...]}` with ascending coefficients
//! * matrix: `{"rows": n, "cols": m, "entries": [[...], ...]}`
//! * permutation: array of 1-based images

use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::matrices::Matrix;
use crate::polynomials::Poly;
use crate::scalar::{FieldTag, Scalar};
use crate::transform::Permutation;
use crate::vectors::Vector;

fn bad(what: &str, v: &Value) -> Error {
    Error::Parse(format!("expected {what}, got {v}"))
}

pub fn scalar_to_json(s: &Scalar) -> Value {
    Value::String(s.to_string())
}

pub fn scalar_from_json(tag: FieldTag, v: &Value) -> Result<Scalar> {
    match v {
        Value::String(s) => Scalar::parse(tag, s),
        _ => Err(bad("a scalar string", v)),
    }
}

pub fn vector_to_json(v: &Vector) -> Value {
    Value::Array(v.entries().iter().map(scalar_to_json).collect())
}

pub fn vector_from_json(tag: FieldTag, v: &Value) -> Result<Vector> {
    let items = v.as_array().ok_or_else(|| bad("an array of scalars", v))?;
    let entries = items
        .iter()
        .map(|x| scalar_from_json(tag, x))
        .collect::<Result<Vec<_>>>()?;
    Vector::new(tag, entries)
}

pub fn poly_to_json(p: &Poly) -> Value {
    json!({ "ambient": p.ambient(), "coeffs": vector_to_json(p.coeffs()) })
}

pub fn poly_from_json(tag: FieldTag, v: &Value) -> Result<Poly> {
    let ambient = v
        .get("ambient")
        .and_then(Value::as_u64)
        .ok_or_else(|| bad("a polynomial object with `ambient`", v))?;
    let coeffs = v
        .get("coeffs")
        .ok_or_else(|| bad("a polynomial object with `coeffs`", v))?;
    Poly::new(ambient as usize, vector_from_json(tag, coeffs)?)
}

pub fn matrix_to_json(m: &Matrix) -> Value {
    let rows: Vec<Value> = (0..m.rows()).map(|i| vector_to_json(&m.row(i))).collect();
    json!({ "rows": m.rows(), "cols": m.cols(), "entries": rows })
}

pub fn matrix_from_json(tag: FieldTag, v: &Value) -> Result<Matrix> {
    let dim = |key: &str| {
        v.get(key)
            .and_then(Value::as_u64)
            .map(|x| x as usize)
            .ok_or_else(|| bad(&format!("a matrix object with `{key}`"), v))
    };
    let (rows, cols) = (dim("rows")?, dim("cols")?);
    let grid = v
        .get("entries")
        .and_then(Value::as_array)
        .ok_or_else(|| bad("a matrix object with `entries`", v))?;
    if grid.len() != rows {
        return Err(Error::dims(format!(
            "matrix declares {rows} rows but lists {}",
            grid.len()
        )));
    }
    let vecs = grid
        .iter()
        .map(|r| vector_from_json(tag, r))
        .collect::<Result<Vec<_>>>()?;
    let m = Matrix::from_rows(tag, vecs, cols)?;
    if m.cols() != cols {
        return Err(Error::dims(format!(
            "matrix declares {cols} columns but rows have {}",
            m.cols()
        )));
    }
    Ok(m)
}

pub fn permutation_to_json(p: &Permutation) -> Value {
    json!(p.images())
}

pub fn permutation_from_json(v: &Value) -> Result<Permutation> {
    let items = v.as_array().ok_or_else(|| bad("an array of images", v))?;
    let images = items
        .iter()
        .map(|x| {
            x.as_u64()
                .map(|k| k as usize)
                .ok_or_else(|| bad("an image", x))
        })
        .collect::<Result<Vec<_>>>()?;
    Permutation::new(images)
}
