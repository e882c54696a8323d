//! Text and JSON formats for scalars, field descriptions and matrices.

use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::field::Field;
use crate::galois::{BaseField, ExtElem, ExtField, Fq};
use crate::linalg::Matrix;

/// Scalar serialization shared by `F` and `L`.
pub trait ScalarIo: Field {
    fn format_scalar(&self, a: &Self::Elem) -> String;
    fn parse_scalar(&self, s: &str) -> Result<Self::Elem>;
    fn scalar_to_json(&self, a: &Self::Elem) -> Value;
    fn scalar_from_json(&self, v: &Value) -> Result<Self::Elem>;
}

fn parse_int(s: &str) -> Result<i64> {
    s.trim()
        .parse::<i64>()
        .map_err(|_| Error::parse(format!("expected an integer, got {s:?}")))
}

impl ScalarIo for BaseField {
    /// Integers for elements of the prime field, `{c0;c1;...}` otherwise.
    fn format_scalar(&self, a: &Fq) -> String {
        let c = self.coords(*a);
        if c[1..].iter().all(|&x| x == 0) {
            c[0].to_string()
        } else {
            let parts: Vec<String> = c.iter().map(|x| x.to_string()).collect();
            format!("{{{}}}", parts.join(";"))
        }
    }

    fn parse_scalar(&self, s: &str) -> Result<Fq> {
        let s = s.trim();
        if let Some(inner) = s.strip_prefix('{').and_then(|r| r.strip_suffix('}')) {
            let parts: Vec<&str> = inner.split(';').collect();
            if parts.len() > self.degree() {
                return Err(Error::parse(format!("too many coordinates in {s:?}")));
            }
            let p = self.p() as i64;
            let coords = parts
                .iter()
                .map(|x| parse_int(x).map(|v| v.rem_euclid(p) as u32))
                .collect::<Result<Vec<_>>>()?;
            self.from_coords(&coords)
        } else {
            Ok(self.from_i64(parse_int(s)?))
        }
    }

    fn scalar_to_json(&self, a: &Fq) -> Value {
        if self.degree() == 1 {
            json!(a.index())
        } else {
            json!(self.coords(*a))
        }
    }

    fn scalar_from_json(&self, v: &Value) -> Result<Fq> {
        match v {
            Value::Number(n) => n
                .as_i64()
                .map(|x| self.from_i64(x))
                .ok_or_else(|| Error::parse("scalar must be an integer")),
            Value::Array(items) => {
                if items.len() > self.degree() {
                    return Err(Error::parse("too many coordinates"));
                }
                let p = self.p() as i64;
                let coords = items
                    .iter()
                    .map(|x| {
                        x.as_i64()
                            .map(|v| v.rem_euclid(p) as u32)
                            .ok_or_else(|| Error::parse("coordinate must be an integer"))
                    })
                    .collect::<Result<Vec<_>>>()?;
                self.from_coords(&coords)
            }
            Value::String(s) => self.parse_scalar(s),
            _ => Err(Error::parse("unexpected JSON scalar")),
        }
    }
}

/// Splits on `sep` outside of brackets and braces.
pub(crate) fn split_top(s: &str, sep: char) -> Vec<&str> {
    let mut out = Vec::new();
    let mut depth = 0i32;
    let mut start = 0;
    for (i, ch) in s.char_indices() {
        match ch {
            '[' | '{' => depth += 1,
            ']' | '}' => depth -= 1,
            c if c == sep && depth == 0 => {
                out.push(&s[start..i]);
                start = i + ch.len_utf8();
            }
            _ => {}
        }
    }
    out.push(&s[start..]);
    out
}

impl ScalarIo for ExtField {
    /// `[c0,c1,...]` on the power basis, each coordinate a base-field scalar.
    fn format_scalar(&self, a: &ExtElem) -> String {
        let parts: Vec<String> = a.coords().iter().map(|c| self.base().format_scalar(c)).collect();
        format!("[{}]", parts.join(","))
    }

    fn parse_scalar(&self, s: &str) -> Result<ExtElem> {
        let s = s.trim();
        if let Some(inner) = s.strip_prefix('[').and_then(|r| r.strip_suffix(']')) {
            let parts = split_top(inner, ',');
            if parts.len() > self.n() {
                return Err(Error::parse(format!("too many coordinates in {s:?}")));
            }
            let mut coords = vec![self.base().zero(); self.n()];
            for (c, p) in coords.iter_mut().zip(parts) {
                *c = self.base().parse_scalar(p)?;
            }
            self.from_coords(&coords)
        } else {
            Ok(self.from_base(self.base().parse_scalar(s)?))
        }
    }

    fn scalar_to_json(&self, a: &ExtElem) -> Value {
        Value::Array(a.coords().iter().map(|c| self.base().scalar_to_json(c)).collect())
    }

    fn scalar_from_json(&self, v: &Value) -> Result<ExtElem> {
        match v {
            Value::Array(items) => {
                if items.len() > self.n() {
                    return Err(Error::parse("too many coordinates"));
                }
                let mut coords = vec![self.base().zero(); self.n()];
                for (c, x) in coords.iter_mut().zip(items) {
                    *c = self.base().scalar_from_json(x)?;
                }
                self.from_coords(&coords)
            }
            Value::String(s) => self.parse_scalar(s),
            other => Ok(self.from_base(self.base().scalar_from_json(other)?)),
        }
    }
}

/// Parses `"p"` or `"p^m:c0,...,cm"` (modulus coefficients, constant first).
pub fn parse_field_spec(spec: &str) -> Result<BaseField> {
    let spec = spec.trim();
    match spec.split_once(':') {
        None => {
            if spec.contains('^') {
                return Err(Error::parse("prime-power field needs a modulus: p^m:c0,...,cm"));
            }
            BaseField::prime(parse_int(spec)? as u32)
        }
        Some((head, coeffs)) => {
            let (p, m) = match head.split_once('^') {
                Some((p, m)) => (parse_int(p)?, parse_int(m)?),
                None => (parse_int(head)?, 1),
            };
            if p < 2 || p > u32::MAX as i64 {
                return Err(Error::domain(format!("invalid characteristic {p}")));
            }
            let c = coeffs.split(',').map(parse_int).collect::<Result<Vec<_>>>()?;
            if c.len() as i64 != m + 1 {
                return Err(Error::parse(format!(
                    "modulus of degree {m} needs {} coefficients",
                    m + 1
                )));
            }
            if c[m as usize].rem_euclid(p) == 0 {
                return Err(Error::parse("leading modulus coefficient vanishes"));
            }
            BaseField::new(p as u32, &c)
        }
    }
}

/// Parses `"n"`, `"n:c0,...,cn"` or `"n:c0,...,cn:s"`. With only `n`, the
/// modulus is the first irreducible found by [`crate::galois::find_irreducible`].
pub fn parse_ext_spec(base: &BaseField, spec: &str) -> Result<ExtField> {
    let parts: Vec<&str> = spec.trim().split(':').collect();
    let n = parse_int(parts[0])?;
    if n < 1 {
        return Err(Error::domain("extension degree must be positive"));
    }
    let s = match parts.get(2) {
        Some(s) => parse_int(s)?,
        None => 1,
    };
    if s < 0 {
        return Err(Error::domain("Frobenius exponent must be nonnegative"));
    }
    if parts.len() > 3 {
        return Err(Error::parse(format!("malformed extension spec {spec:?}")));
    }
    match parts.get(1).filter(|c| !c.trim().is_empty()) {
        None => ExtField::search(base.clone(), n as usize, s as usize),
        Some(coeffs) => {
            let c = coeffs
                .split(',')
                .map(|x| base.parse_scalar(x))
                .collect::<Result<Vec<_>>>()?;
            if c.len() as i64 != n + 1 {
                return Err(Error::parse(format!(
                    "extension modulus of degree {n} needs {} coefficients",
                    n + 1
                )));
            }
            if base.is_zero(&c[n as usize]) {
                return Err(Error::parse("leading modulus coefficient vanishes"));
            }
            ExtField::new(base.clone(), c, s as usize)
        }
    }
}

pub fn matrix_to_json<K: ScalarIo>(k: &K, m: &Matrix<K::Elem>) -> Value {
    Value::Array(
        (0..m.rows())
            .map(|i| Value::Array(m.row(i).iter().map(|x| k.scalar_to_json(x)).collect()))
            .collect(),
    )
}

pub fn matrix_to_csv<K: ScalarIo>(k: &K, m: &Matrix<K::Elem>) -> String {
    let mut out = String::new();
    for i in 0..m.rows() {
        let row: Vec<String> = m.row(i).iter().map(|x| k.format_scalar(x)).collect();
        out.push_str(&row.join(","));
        out.push('\n');
    }
    out
}

pub fn matrix_from_json<K: ScalarIo>(k: &K, v: &Value) -> Result<Matrix<K::Elem>> {
    let rows = v
        .as_array()
        .ok_or_else(|| Error::parse("matrix must be an array of rows"))?;
    let parsed = rows
        .iter()
        .map(|r| {
            r.as_array()
                .ok_or_else(|| Error::parse("matrix row must be an array"))?
                .iter()
                .map(|x| k.scalar_from_json(x))
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    let cols = parsed.first().map_or(0, |r| r.len());
    if parsed.iter().any(|r| r.len() != cols) {
        return Err(Error::parse("ragged matrix"));
    }
    Ok(Matrix::from_rows(cols, parsed))
}

/// Parses a matrix given either as JSON (array of rows) or as CSV lines.
pub fn parse_matrix<K: ScalarIo>(k: &K, text: &str) -> Result<Matrix<K::Elem>> {
    let t = text.trim();
    if t.starts_with("[[") || t.starts_with("[ [") || t == "[]" {
        let v: Value = serde_json::from_str(t).map_err(|e| Error::parse(e.to_string()))?;
        return matrix_from_json(k, &v);
    }
    let rows = t
        .lines()
        .filter(|l| !l.trim().is_empty())
        .map(|l| split_top(l, ',').iter().map(|x| k.parse_scalar(x)).collect())
        .collect::<Result<Vec<Vec<_>>>>()?;
    let cols = rows.first().map_or(0, |r| r.len());
    if rows.iter().any(|r| r.len() != cols) {
        return Err(Error::parse("ragged matrix"));
    }
    Ok(Matrix::from_rows(cols, rows))
}
