use serde_json::{json, Value};
use smallvec::SmallVec;

use super::{Homog, HomogPoly, Monomial};
use crate::error::{Error, Result};
use crate::io::{split_top, ScalarIo};

/// Renders `c*x1^a1*x2^a2*...` terms joined by `+`, in canonical order.
/// Exponent 1 is written as a bare variable; the zero polynomial is `0`.
pub fn format_poly<K: ScalarIo, T>(k: &K, f: &Homog<K::Elem, T>) -> String {
    if f.is_zero() {
        return "0".to_string();
    }
    let mut terms = Vec::with_capacity(f.num_terms());
    for (m, c) in f.terms() {
        let mut s = k.format_scalar(c);
        for (i, &e) in m.exps().iter().enumerate() {
            match e {
                0 => {}
                1 => s.push_str(&format!("*x{}", i + 1)),
                _ => s.push_str(&format!("*x{}^{}", i + 1, e)),
            }
        }
        terms.push(s);
    }
    terms.join("+")
}

fn split_signed(s: &str) -> Vec<(bool, &str)> {
    let mut out = Vec::new();
    let mut depth = 0i32;
    let mut start = 0;
    let mut neg = false;
    let bytes: Vec<(usize, char)> = s.char_indices().collect();
    for (pos, &(i, ch)) in bytes.iter().enumerate() {
        match ch {
            '[' | '{' => depth += 1,
            ']' | '}' => depth -= 1,
            '+' | '-' if depth == 0 => {
                let prev = if pos == 0 { None } else { Some(bytes[pos - 1].1) };
                if matches!(prev, Some('^') | Some('*')) {
                    continue;
                }
                let piece = &s[start..i];
                if !piece.is_empty() {
                    out.push((neg, piece));
                }
                neg = ch == '-';
                start = i + 1;
            }
            _ => {}
        }
    }
    out.push((neg, &s[start..]));
    out
}

/// Parses the text format written by [`format_poly`]. Also accepts `-`,
/// implicit unit coefficients, repeated factors and whitespace. The degree
/// is inferred from the terms unless `d` is given.
pub fn parse_poly<K: ScalarIo>(k: &K, n: usize, d: Option<usize>, text: &str) -> Result<HomogPoly<K::Elem>> {
    let s: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    if s.is_empty() {
        return Err(Error::parse("empty polynomial"));
    }
    let mut terms: Vec<(Monomial, K::Elem)> = Vec::new();
    for (neg, term) in split_signed(&s) {
        if term.is_empty() {
            return Err(Error::parse(format!("dangling sign in {text:?}")));
        }
        let mut coeff = k.one();
        let mut exps: SmallVec<[u16; 8]> = SmallVec::from_elem(0, n);
        for factor in split_top(term, '*') {
            if let Some(var) = factor.strip_prefix('x') {
                let (idx, e) = match var.split_once('^') {
                    Some((i, e)) => (i, e),
                    None => (var, "1"),
                };
                let idx: usize = idx
                    .parse()
                    .map_err(|_| Error::parse(format!("bad variable {factor:?}")))?;
                let e: u16 = e
                    .parse()
                    .map_err(|_| Error::parse(format!("bad exponent in {factor:?}")))?;
                if idx == 0 || idx > n {
                    return Err(Error::parse(format!("variable x{idx} outside x1..x{n}")));
                }
                exps[idx - 1] += e;
            } else {
                coeff = k.mul(&coeff, &k.parse_scalar(factor)?);
            }
        }
        if neg {
            coeff = k.neg(&coeff);
        }
        terms.push((Monomial(exps), coeff));
    }
    let inferred = terms.iter().find(|(_, c)| !k.is_zero(c)).map(|(m, _)| m.degree());
    let d = match (d, inferred) {
        (Some(d), _) => d,
        (None, Some(d)) => d,
        (None, None) => return Err(Error::parse("cannot infer the degree of the zero polynomial")),
    };
    let mut f = HomogPoly::zero(n, d);
    for (m, c) in terms {
        if k.is_zero(&c) {
            continue;
        }
        if m.degree() != d {
            return Err(Error::parse(format!(
                "term of degree {} in a polynomial of degree {d}",
                m.degree()
            )));
        }
        f.add_term(k, m, &c);
    }
    Ok(f)
}

pub fn poly_to_json<K: ScalarIo, T>(k: &K, f: &Homog<K::Elem, T>) -> Value {
    let terms: Vec<Value> = f
        .terms()
        .map(|(m, c)| json!({"exp": m.exps(), "coeff": k.scalar_to_json(c)}))
        .collect();
    json!({"n": f.n(), "d": f.d(), "terms": terms})
}

pub fn poly_from_json<K: ScalarIo>(k: &K, v: &Value) -> Result<HomogPoly<K::Elem>> {
    let get = |key: &str| {
        v.get(key)
            .and_then(Value::as_u64)
            .ok_or_else(|| Error::parse(format!("missing integer field {key:?}")))
    };
    let n = get("n")? as usize;
    let d = get("d")? as usize;
    let mut f = HomogPoly::zero(n, d);
    let terms = v
        .get("terms")
        .and_then(Value::as_array)
        .ok_or_else(|| Error::parse("missing \"terms\" array"))?;
    for t in terms {
        let exps = t
            .get("exp")
            .and_then(Value::as_array)
            .ok_or_else(|| Error::parse("term without \"exp\""))?
            .iter()
            .map(|e| {
                e.as_u64()
                    .and_then(|x| u16::try_from(x).ok())
                    .ok_or_else(|| Error::parse("bad exponent"))
            })
            .collect::<Result<SmallVec<[u16; 8]>>>()?;
        let m = Monomial(exps);
        if m.n() != n || m.degree() != d {
            return Err(Error::parse("term shape does not match n and d"));
        }
        let c = k.scalar_from_json(t.get("coeff").ok_or_else(|| Error::parse("term without \"coeff\""))?)?;
        f.add_term(k, m, &c);
    }
    Ok(f)
}
