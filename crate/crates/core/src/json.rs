//! JSON encoding of the concrete rational-coefficient types.
//!
//! Rationals serialize as plain integers when the denominator is one and as
//! `"p/q"` strings otherwise, so round-trips are bit-exact. All decoding is
//! strict: floating-point numbers and malformed fractions are rejected.

use std::str::FromStr;
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde_json::{json, Map, Value};

use crate::algebra::Violation;
use crate::bicomplex::{PageTable, TotalParityReport};
use crate::cochain::Cochain;
use crate::deform::{ConstantBivector, FormalSeries};
use crate::error::{Error, Result};
use crate::poisson::{Multivector, Poly};
use crate::{Rat, RatAlgebra, RatCochain};

pub fn rat_to_value(r: &Rat) -> Value {
    if r.denom() == &BigInt::from(1) {
        if let Some(n) = r.numer().to_i64() {
            return json!(n);
        }
        return json!(r.numer().to_string());
    }
    json!(format!("{}/{}", r.numer(), r.denom()))
}

pub fn rat_from_value(v: &Value) -> Result<Rat> {
    match v {
        Value::Number(n) => {
            if let Some(i) = n.as_i64() {
                Ok(Rat::from_integer(i.into()))
            } else if let Some(u) = n.as_u64() {
                Ok(Rat::from_integer(u.into()))
            } else {
                Err(Error::Parse(format!("expected an exact integer, got {n}")))
            }
        }
        Value::String(s) => {
            let mut parts = s.splitn(2, '/');
            let numer = parts.next().unwrap_or("");
            let numer = BigInt::from_str(numer.trim())
                .map_err(|_| Error::Parse(format!("bad numerator in {s:?}")))?;
            match parts.next() {
                None => Ok(Rat::from_integer(numer)),
                Some(d) => {
                    let denom = BigInt::from_str(d.trim())
                        .map_err(|_| Error::Parse(format!("bad denominator in {s:?}")))?;
                    if denom == BigInt::from(0) {
                        return Err(Error::Parse(format!("zero denominator in {s:?}")));
                    }
                    Ok(Rat::new(numer, denom))
                }
            }
        }
        other => Err(Error::Parse(format!("expected a rational, got {other}"))),
    }
}

fn rat_vec_from_value(v: &Value) -> Result<Vec<Rat>> {
    let arr = v
        .as_array()
        .ok_or_else(|| Error::Parse(format!("expected an array, got {v}")))?;
    arr.iter().map(rat_from_value).collect()
}

fn rat_vec_to_value(v: &[Rat]) -> Value {
    Value::Array(v.iter().map(rat_to_value).collect())
}

fn get<'a>(obj: &'a Map<String, Value>, key: &str) -> Result<&'a Value> {
    obj.get(key)
        .ok_or_else(|| Error::Parse(format!("missing field {key:?}")))
}

fn as_object(v: &Value) -> Result<&Map<String, Value>> {
    v.as_object()
        .ok_or_else(|| Error::Parse(format!("expected an object, got {v}")))
}

fn as_usize(v: &Value) -> Result<usize> {
    v.as_u64()
        .map(|u| u as usize)
        .ok_or_else(|| Error::Parse(format!("expected a nonnegative integer, got {v}")))
}

pub fn algebra_to_value(a: &RatAlgebra) -> Value {
    let m = a.dim();
    let table: Vec<Value> = (0..m)
        .map(|i| {
            Value::Array(
                (0..m)
                    .map(|j| {
                        Value::Array((0..m).map(|k| rat_to_value(a.structure(i, j, k))).collect())
                    })
                    .collect(),
            )
        })
        .collect();
    json!({
        "dim": m,
        "basis": a.basis_names(),
        "unit": rat_vec_to_value(a.unit()),
        "table": table,
    })
}

pub fn algebra_from_value(v: &Value) -> Result<RatAlgebra> {
    let obj = as_object(v)?;
    let dim = as_usize(get(obj, "dim")?)?;
    let basis: Vec<String> = get(obj, "basis")?
        .as_array()
        .ok_or_else(|| Error::Parse("basis must be an array".into()))?
        .iter()
        .map(|x| {
            x.as_str()
                .map(str::to_string)
                .ok_or_else(|| Error::Parse("basis names must be strings".into()))
        })
        .collect::<Result<_>>()?;
    let unit = rat_vec_from_value(get(obj, "unit")?)?;
    let table_rows = get(obj, "table")?
        .as_array()
        .ok_or_else(|| Error::Parse("table must be an array".into()))?;
    if table_rows.len() != dim {
        return Err(Error::Parse(format!(
            "table has {} rows, expected {dim}",
            table_rows.len()
        )));
    }
    let mut table = Vec::with_capacity(dim * dim * dim);
    for row in table_rows {
        let cols = row
            .as_array()
            .ok_or_else(|| Error::Parse("table rows must be arrays".into()))?;
        if cols.len() != dim {
            return Err(Error::Parse("table row of wrong length".into()));
        }
        for cell in cols {
            let coords = rat_vec_from_value(cell)?;
            if coords.len() != dim {
                return Err(Error::Parse("table entry of wrong length".into()));
            }
            table.extend(coords);
        }
    }
    RatAlgebra::new(dim, table, unit, basis)
}

pub fn algebra_from_str(s: &str) -> Result<RatAlgebra> {
    let v: Value =
        serde_json::from_str(s).map_err(|e| Error::Parse(format!("invalid JSON: {e}")))?;
    algebra_from_value(&v)
}

pub fn cochain_to_value(c: &RatCochain) -> Value {
    json!({
        "arity": c.arity(),
        "coeffs": rat_vec_to_value(c.coeffs()),
    })
}

pub fn cochain_from_value(algebra: Arc<RatAlgebra>, v: &Value) -> Result<RatCochain> {
    let obj = as_object(v)?;
    let arity = as_usize(get(obj, "arity")?)?;
    let coeffs = rat_vec_from_value(get(obj, "coeffs")?)?;
    Cochain::from_coeffs(algebra, arity, coeffs)
}

pub fn poly_to_value(p: &Poly<Rat>) -> Value {
    let terms: Vec<Value> = p
        .terms()
        .iter()
        .map(|(e, c)| {
            json!({
                "exponents": e,
                "coeff": rat_to_value(c),
            })
        })
        .collect();
    Value::Array(terms)
}

pub fn poly_from_value(vars: usize, v: &Value) -> Result<Poly<Rat>> {
    let arr = v
        .as_array()
        .ok_or_else(|| Error::Parse("polynomial must be an array of terms".into()))?;
    let mut out = Poly::zero(vars);
    for term in arr {
        let obj = as_object(term)?;
        let coeff = rat_from_value(get(obj, "coeff")?)?;
        let exponents: Vec<usize> = get(obj, "exponents")?
            .as_array()
            .ok_or_else(|| Error::Parse("exponents must be an array".into()))?
            .iter()
            .map(as_usize)
            .collect::<Result<_>>()?;
        if exponents.len() != vars {
            return Err(Error::Parse(format!(
                "exponent vector of length {}, expected {vars}",
                exponents.len()
            )));
        }
        out = out.add(&Poly::monomial(vars, exponents, coeff));
    }
    Ok(out)
}

pub fn multivector_to_value(mv: &Multivector<Rat>) -> Value {
    let comps: Vec<Value> = mv
        .components()
        .iter()
        .map(|(idx, poly)| {
            json!({
                "directions": idx,
                "poly": poly_to_value(poly),
            })
        })
        .collect();
    json!({
        "vars": mv.vars(),
        "degree": mv.degree(),
        "components": comps,
    })
}

pub fn multivector_from_value(v: &Value) -> Result<Multivector<Rat>> {
    let obj = as_object(v)?;
    let vars = as_usize(get(obj, "vars")?)?;
    let degree = as_usize(get(obj, "degree")?)?;
    let mut out = Multivector::zero(vars, degree);
    for comp in get(obj, "components")?
        .as_array()
        .ok_or_else(|| Error::Parse("components must be an array".into()))?
    {
        let cobj = as_object(comp)?;
        let directions: Vec<usize> = get(cobj, "directions")?
            .as_array()
            .ok_or_else(|| Error::Parse("directions must be an array".into()))?
            .iter()
            .map(as_usize)
            .collect::<Result<_>>()?;
        let mut sorted = directions.clone();
        sorted.sort_unstable();
        if sorted.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::Parse("repeated direction in multivector term".into()));
        }
        let poly = poly_from_value(vars, get(cobj, "poly")?)?;
        out.add_term(&directions, &poly)?;
    }
    Ok(out)
}

pub fn multivector_from_str(s: &str) -> Result<Multivector<Rat>> {
    let v: Value =
        serde_json::from_str(s).map_err(|e| Error::Parse(format!("invalid JSON: {e}")))?;
    multivector_from_value(&v)
}

pub fn constant_bivector_to_value(pi: &ConstantBivector<Rat>) -> Value {
    let vars = pi.vars();
    let rows: Vec<Value> = (0..vars)
        .map(|i| Value::Array((0..vars).map(|j| rat_to_value(pi.get(i, j))).collect()))
        .collect();
    json!({ "vars": vars, "matrix": rows })
}

pub fn constant_bivector_from_value(v: &Value) -> Result<ConstantBivector<Rat>> {
    let obj = as_object(v)?;
    let vars = as_usize(get(obj, "vars")?)?;
    let rows = get(obj, "matrix")?
        .as_array()
        .ok_or_else(|| Error::Parse("matrix must be an array".into()))?
        .iter()
        .map(rat_vec_from_value)
        .collect::<Result<Vec<_>>>()?;
    ConstantBivector::new(vars, rows)
}

pub fn series_to_value(s: &FormalSeries<Rat>) -> Value {
    json!({
        "vars": s.vars(),
        "order": s.order(),
        "coeffs": s.coeffs().iter().map(poly_to_value).collect::<Vec<_>>(),
    })
}

pub fn series_from_value(v: &Value) -> Result<FormalSeries<Rat>> {
    let obj = as_object(v)?;
    let vars = as_usize(get(obj, "vars")?)?;
    let coeffs = get(obj, "coeffs")?
        .as_array()
        .ok_or_else(|| Error::Parse("coeffs must be an array".into()))?
        .iter()
        .map(|p| poly_from_value(vars, p))
        .collect::<Result<Vec<_>>>()?;
    FormalSeries::from_coeffs(vars, coeffs)
}

pub fn violations_to_value(violations: &[Violation]) -> Value {
    let items: Vec<Value> = violations
        .iter()
        .map(|v| {
            let (kind, indices) = match v {
                Violation::Commutativity { i, j } => ("commutativity", vec![*i, *j]),
                Violation::Associativity { i, j, k } => ("associativity", vec![*i, *j, *k]),
                Violation::Unit { i, .. } => ("unit", vec![*i]),
            };
            json!({
                "kind": kind,
                "indices": indices,
                "message": v.to_string(),
            })
        })
        .collect();
    json!({ "count": violations.len(), "violations": items })
}

pub fn page_table_to_value(t: &PageTable) -> Value {
    let entries: Vec<Value> = t
        .entries
        .iter()
        .map(|(&(p, q), &dim)| json!({ "p": p, "q": q, "dim": dim }))
        .collect();
    json!({ "max_total": t.max_total, "entries": entries })
}

pub fn total_parity_to_value(r: &TotalParityReport) -> Value {
    json!({
        "window": r.window,
        "even": r.even_dim,
        "odd": r.odd_dim,
        "interior_valid_upto": r.interior_valid_upto,
    })
}
