//! JSON problem files and the exact JSON encodings shared with reports.
//!
//! Rationals are strings `"p/q"` or `"p"`; floats are rejected. Gaussian
//! rationals are a string (real) or a pair `[re, im]` of such strings.
//!
//! ```json
//! { "matrix": [[["1","0"],["0","1"]], [["0","0"],["1","0"]]] }
//! { "factorization": { "prefix": [["1","0"],["0","1"]],
//!                      "factors": [{ "poly": ["1"], "direction": [1, 0] }] } }
//! { "herglotz_input": { "transfer": { "factors": [...] }, "y": "inf" } }
//! { "herglotz_input": { "num": ["-1"], "den": ["0", "1"] } }
//! ```
//!
//! A `poly` list starts at the coefficient of `z`; the constant term is always zero.

use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::Zero;
use serde_json::{json, Map, Value};
use thiserror::Error;

use crate::algebra::{
    parse_rational, ExtendedReal, GaussPoly, GaussRational, Mat2Q, Poly, PolyMat, RatFunc, Rational,
};
use crate::error::Error;
use crate::factors::{Factor, Factorization, Projection};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("syntax error at line {line}, column {column}: {message}")]
    Syntax { line: usize, column: usize, message: String },
    #[error("{path}: {message}")]
    Invalid { path: String, message: String },
    #[error("{path}: not an exact rational")]
    NonRationalCoefficient { path: String },
    #[error("{path}: determinant is not identically 1")]
    DetNotOne { path: String },
    #[error("{path}: {source}")]
    Domain { path: String, source: Error },
}

type Parsed<T> = Result<T, ParseError>;

/// The operator a command acts with.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Operator {
    Matrix(PolyMat),
    Factorization(Factorization),
}

#[derive(Debug, Clone, PartialEq, Eq)]
#[allow(clippy::large_enum_variant)]
pub enum HerglotzInput {
    /// `T^{-1}(z) · y` for a transfer matrix `T`.
    Generated { transfer: Factorization, y: ExtendedReal },
    Explicit(RatFunc),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProblemFile {
    pub operator: Option<Operator>,
    pub herglotz: Option<HerglotzInput>,
}

fn invalid(path: &str, message: impl Into<String>) -> ParseError {
    ParseError::Invalid { path: path.to_string(), message: message.into() }
}

fn as_array<'a>(v: &'a Value, path: &str, len: Option<usize>) -> Parsed<&'a Vec<Value>> {
    let arr = v.as_array().ok_or_else(|| invalid(path, "expected an array"))?;
    match len {
        Some(n) if arr.len() != n => Err(invalid(path, format!("expected {n} elements"))),
        _ => Ok(arr),
    }
}

fn as_object<'a>(v: &'a Value, path: &str, allowed: &[&str]) -> Parsed<&'a Map<String, Value>> {
    let obj = v.as_object().ok_or_else(|| invalid(path, "expected an object"))?;
    if let Some(k) = obj.keys().find(|k| !allowed.contains(&k.as_str())) {
        return Err(invalid(path, format!("unknown key {k:?}")));
    }
    Ok(obj)
}

fn parse_rational_value(v: &Value, path: &str) -> Parsed<Rational> {
    let parsed = match v {
        Value::String(s) => parse_rational(s),
        Value::Number(n) if n.is_i64() || n.is_u64() => parse_rational(&n.to_string()),
        _ => None,
    };
    parsed.ok_or_else(|| ParseError::NonRationalCoefficient { path: path.to_string() })
}

fn parse_integer_value(v: &Value, path: &str) -> Parsed<BigInt> {
    let text = match v {
        Value::Number(n) if n.is_i64() || n.is_u64() => n.to_string(),
        Value::String(s) => s.clone(),
        _ => return Err(invalid(path, "expected an integer")),
    };
    BigInt::from_str(&text).map_err(|_| invalid(path, "expected an integer"))
}

fn parse_gauss_value(v: &Value, path: &str) -> Parsed<GaussRational> {
    match v {
        Value::Array(parts) => {
            let parts = as_array(v, path, Some(2)).map(|_| parts)?;
            Ok(GaussRational::new(
                parse_rational_value(&parts[0], &format!("{path}[0]"))?,
                parse_rational_value(&parts[1], &format!("{path}[1]"))?,
            ))
        }
        _ => parse_rational_value(v, path).map(GaussRational::real),
    }
}

fn parse_mat2(v: &Value, path: &str) -> Parsed<Mat2Q> {
    let rows = as_array(v, path, Some(2))?;
    let mut out = Mat2Q::zero();
    for (i, row) in rows.iter().enumerate() {
        let rp = format!("{path}[{i}]");
        for (j, x) in as_array(row, &rp, Some(2))?.iter().enumerate() {
            out.0[i][j] = parse_rational_value(x, &format!("{rp}[{j}]"))?;
        }
    }
    Ok(out)
}

fn parse_matrix(v: &Value, path: &str) -> Parsed<PolyMat> {
    let coeffs = as_array(v, path, None)?;
    if coeffs.is_empty() {
        return Err(invalid(path, "expected at least one coefficient matrix"));
    }
    let mats = coeffs
        .iter()
        .enumerate()
        .map(|(k, m)| parse_mat2(m, &format!("{path}[{k}]")))
        .collect::<Parsed<Vec<_>>>()?;
    let a = PolyMat::from_coefficients(&mats);
    if !a.has_unit_det() {
        return Err(ParseError::DetNotOne { path: path.to_string() });
    }
    Ok(a)
}

fn parse_factorization(v: &Value, path: &str) -> Parsed<Factorization> {
    let obj = as_object(v, path, &["prefix", "factors"])?;
    let prefix = match obj.get("prefix") {
        Some(p) => {
            let pp = format!("{path}.prefix");
            let m = parse_mat2(p, &pp)?;
            if !m.is_sl2() {
                return Err(ParseError::DetNotOne { path: pp });
            }
            m
        }
        None => Mat2Q::identity(),
    };
    let fp = format!("{path}.factors");
    let list = as_array(obj.get("factors").ok_or_else(|| invalid(path, "missing \"factors\""))?, &fp, None)?;
    let mut factors = Vec::with_capacity(list.len());
    for (k, item) in list.iter().enumerate() {
        let ip = format!("{fp}[{k}]");
        let o = as_object(item, &ip, &["poly", "direction"])?;
        let pp = format!("{ip}.poly");
        let cs = as_array(o.get("poly").ok_or_else(|| invalid(&ip, "missing \"poly\""))?, &pp, None)?;
        let mut coeffs = vec![Rational::zero()];
        for (j, c) in cs.iter().enumerate() {
            coeffs.push(parse_rational_value(c, &format!("{pp}[{j}]"))?);
        }
        let dp = format!("{ip}.direction");
        let dir = as_array(o.get("direction").ok_or_else(|| invalid(&ip, "missing \"direction\""))?, &dp, Some(2))?;
        let v1 = parse_integer_value(&dir[0], &format!("{dp}[0]"))?;
        let v2 = parse_integer_value(&dir[1], &format!("{dp}[1]"))?;
        let proj = Projection::new(v1, v2).map_err(|source| ParseError::Domain { path: dp.clone(), source })?;
        let factor = Factor::new(Poly::new(coeffs), proj).map_err(|source| ParseError::Domain { path: ip, source })?;
        factors.push(factor);
    }
    Factorization::new(prefix, factors).map_err(|source| ParseError::Domain { path: path.to_string(), source })
}

fn parse_extended_real(v: &Value, path: &str) -> Parsed<ExtendedReal> {
    match v {
        Value::String(s) if s == "inf" => Ok(ExtendedReal::Infinity),
        _ => parse_rational_value(v, path).map(ExtendedReal::Finite),
    }
}

fn parse_gauss_poly(v: &Value, path: &str) -> Parsed<GaussPoly> {
    let cs = as_array(v, path, None)?;
    let coeffs = cs
        .iter()
        .enumerate()
        .map(|(k, c)| parse_gauss_value(c, &format!("{path}[{k}]")))
        .collect::<Parsed<Vec<_>>>()?;
    Ok(GaussPoly::new(coeffs))
}

fn parse_herglotz(v: &Value, path: &str) -> Parsed<HerglotzInput> {
    let obj = as_object(v, path, &["transfer", "y", "num", "den"])?;
    match (obj.get("transfer"), obj.get("num")) {
        (Some(t), None) => {
            if obj.contains_key("den") {
                return Err(invalid(path, "\"den\" belongs with \"num\""));
            }
            let transfer = parse_factorization(t, &format!("{path}.transfer"))?;
            let y = obj.get("y").ok_or_else(|| invalid(path, "missing \"y\""))?;
            let y = parse_extended_real(y, &format!("{path}.y"))?;
            Ok(HerglotzInput::Generated { transfer, y })
        }
        (None, Some(n)) => {
            if obj.contains_key("y") {
                return Err(invalid(path, "\"y\" belongs with \"transfer\""));
            }
            let num = parse_gauss_poly(n, &format!("{path}.num"))?;
            let den = match obj.get("den") {
                Some(d) => parse_gauss_poly(d, &format!("{path}.den"))?,
                None => GaussPoly::one(),
            };
            RatFunc::new(num, den)
                .map(HerglotzInput::Explicit)
                .map_err(|source| ParseError::Domain { path: path.to_string(), source })
        }
        _ => Err(invalid(path, "expected exactly one of \"transfer\" or \"num\"")),
    }
}

pub fn parse_problem(text: &str) -> Parsed<ProblemFile> {
    let root: Value = serde_json::from_str(text).map_err(|e| ParseError::Syntax {
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    })?;
    let obj = as_object(&root, "$", &["matrix", "factorization", "herglotz_input"])?;
    let operator = match (obj.get("matrix"), obj.get("factorization")) {
        (Some(_), Some(_)) => return Err(invalid("$", "give either \"matrix\" or \"factorization\", not both")),
        (Some(m), None) => Some(Operator::Matrix(parse_matrix(m, "$.matrix")?)),
        (None, Some(f)) => Some(Operator::Factorization(parse_factorization(f, "$.factorization")?)),
        (None, None) => None,
    };
    let herglotz = obj.get("herglotz_input").map(|h| parse_herglotz(h, "$.herglotz_input")).transpose()?;
    if operator.is_none() && herglotz.is_none() {
        return Err(invalid("$", "empty problem"));
    }
    Ok(ProblemFile { operator, herglotz })
}

pub fn rational_json(r: &Rational) -> Value {
    Value::String(r.to_string())
}

pub fn gauss_json(g: &GaussRational) -> Value {
    if g.is_real() {
        rational_json(&g.re)
    } else {
        json!([g.re.to_string(), g.im.to_string()])
    }
}

pub fn extended_real_json(x: &ExtendedReal) -> Value {
    Value::String(x.to_string())
}

pub fn mat2_json(m: &Mat2Q) -> Value {
    json!([
        [rational_json(&m.0[0][0]), rational_json(&m.0[0][1])],
        [rational_json(&m.0[1][0]), rational_json(&m.0[1][1])],
    ])
}

pub fn matrix_json(a: &PolyMat) -> Value {
    Value::Array(a.coefficients().iter().map(mat2_json).collect())
}

pub fn projection_json(p: &Projection) -> Value {
    let (a, b) = p.direction();
    let num = |x: &BigInt| match i64::try_from(x) {
        Ok(v) => json!(v),
        Err(_) => Value::String(x.to_string()),
    };
    json!([num(a), num(b)])
}

pub fn factor_json(f: &Factor) -> Value {
    json!({
        "poly": f.poly().coeffs().iter().skip(1).map(rational_json).collect::<Vec<_>>(),
        "direction": projection_json(f.projection()),
    })
}

pub fn factorization_json(f: &Factorization) -> Value {
    json!({
        "prefix": mat2_json(f.prefix()),
        "factors": f.factors().iter().map(factor_json).collect::<Vec<_>>(),
    })
}

pub fn gauss_poly_json(p: &GaussPoly) -> Value {
    Value::Array(p.coeffs().iter().map(gauss_json).collect())
}

/// `{"num": [...], "den": [...]}`; the constant `∞` has an empty denominator.
pub fn ratfunc_json(f: &RatFunc) -> Value {
    json!({ "num": gauss_poly_json(f.numerator()), "den": gauss_poly_json(f.denominator()) })
}

pub fn problem_json(p: &ProblemFile) -> Value {
    let mut obj = Map::new();
    match &p.operator {
        Some(Operator::Matrix(a)) => {
            obj.insert("matrix".into(), matrix_json(a));
        }
        Some(Operator::Factorization(f)) => {
            obj.insert("factorization".into(), factorization_json(f));
        }
        None => {}
    }
    match &p.herglotz {
        Some(HerglotzInput::Generated { transfer, y }) => {
            obj.insert("herglotz_input".into(), json!({ "transfer": factorization_json(transfer), "y": extended_real_json(y) }));
        }
        Some(HerglotzInput::Explicit(f)) => {
            obj.insert("herglotz_input".into(), ratfunc_json(f));
        }
        None => {}
    }
    Value::Object(obj)
}

pub fn serialize_problem(p: &ProblemFile) -> String {
    serde_json::to_string_pretty(&problem_json(p)).expect("JSON values serialize")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::int;

    fn p(cs: &[i64]) -> Poly {
        Poly::new(cs.iter().map(|&c| int(c)).collect())
    }

    #[test]
    fn identity_matrix() {
        let pf = parse_problem(r#"{"matrix": [[["1","0"],["0","1"]]]}"#).unwrap();
        match pf.operator {
            Some(Operator::Matrix(a)) => {
                assert_eq!(a, PolyMat::identity());
                assert_eq!(a.degree(), 0);
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn worked_matrix_from_coefficients() {
        let text = r#"{"matrix": [[["1","0"],["0","1"]], [["0","-1"],["1","0"]], [["0","0"],["0","-1"]]]}"#;
        let pf = parse_problem(text).unwrap();
        let expected = PolyMat::new(p(&[1]), p(&[0, -1]), p(&[0, 1]), p(&[1, 0, -1]));
        assert_eq!(pf.operator, Some(Operator::Matrix(expected)));
    }

    #[test]
    fn single_linear_factor() {
        let pf = parse_problem(r#"{"factorization": {"factors": [{"poly": ["1"], "direction": [1,0]}]}}"#).unwrap();
        let f = Factor::new(p(&[0, 1]), Projection::new(1, 0).unwrap()).unwrap();
        assert_eq!(pf.operator, Some(Operator::Factorization(Factorization::from_factors(vec![f]).unwrap())));
    }

    #[test]
    fn syntax_error_location() {
        match parse_problem("{\n  \"matrix\": [,]\n}") {
            Err(ParseError::Syntax { line, column, .. }) => assert_eq!((line, column), (2, 14)),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn rejects_floats_and_bad_determinants() {
        let e = parse_problem(r#"{"matrix": [[["1.0","0"],["0","1"]]]}"#).unwrap_err();
        assert_eq!(e, ParseError::NonRationalCoefficient { path: "$.matrix[0][0][0]".into() });
        let e = parse_problem(r#"{"matrix": [[[1.5,0],[0,1]]]}"#).unwrap_err();
        assert!(matches!(e, ParseError::NonRationalCoefficient { .. }));
        let e = parse_problem(r#"{"matrix": [[["1","0"],["0","1"]], [["0","1"],["0","1"]]]}"#).unwrap_err();
        assert!(matches!(e, ParseError::DetNotOne { .. }));
        let e = parse_problem(r#"{"factorization": {"prefix": [["2","0"],["0","1"]], "factors": []}}"#).unwrap_err();
        assert!(matches!(e, ParseError::DetNotOne { .. }));
    }

    #[test]
    fn rejects_structural_problems() {
        for text in [
            r#"{}"#,
            r#"{"matrix": []}"#,
            r#"{"matrix": [[["1","0"],["0","1"]]], "factorization": {"factors": []}}"#,
            r#"{"factorization": {"factors": [{"poly": ["1"], "direction": [0,0]}]}}"#,
            r#"{"factorization": {"factors": [{"poly": [], "direction": [1,0]}]}}"#,
            r#"{"factorization": {"factors": [{"poly": ["1"], "direction": [1,0]}, {"poly": ["2"], "direction": [2,0]}]}}"#,
            r#"{"herglotz_input": {"num": ["1"], "y": "0"}}"#,
            r#"{"herglotz_input": {"num": [], "den": []}}"#,
            r#"{"bogus": 1}"#,
        ] {
            assert!(parse_problem(text).is_err(), "{text}");
        }
    }

    #[test]
    fn herglotz_inputs() {
        let pf = parse_problem(r#"{"herglotz_input": {"transfer": {"factors": []}, "y": "inf"}}"#).unwrap();
        assert_eq!(
            pf.herglotz,
            Some(HerglotzInput::Generated { transfer: Factorization::identity(), y: ExtendedReal::Infinity })
        );
        let pf = parse_problem(r#"{"herglotz_input": {"num": [["0","1"]], "den": ["1/2"]}}"#).unwrap();
        let expected = RatFunc::constant(GaussRational::new(int(0), int(2)));
        assert_eq!(pf.herglotz, Some(HerglotzInput::Explicit(expected)));
    }

    #[test]
    fn serialization_is_canonical() {
        let text = r#"{"factorization": {"prefix": [["2","0"],["0","1/2"]],
            "factors": [{"poly": ["2/4", "-3"], "direction": [-2, 4]}]},
            "herglotz_input": {"num": ["3", ["0","1"]], "den": ["6"]}}"#;
        let pf = parse_problem(text).unwrap();
        let out = serialize_problem(&pf);
        assert!(out.contains("\"1/2\""));
        assert_eq!(parse_problem(&out).unwrap(), pf);
        assert_eq!(serialize_problem(&parse_problem(&out).unwrap()), out);
    }
}
