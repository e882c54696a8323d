//! Dense univariate polynomials over a field, constant term first.

use crate::error::{Error, Result};
use crate::field::Field;

pub fn trim<K: Field>(k: &K, a: &mut Vec<K::Elem>) {
    while a.last().is_some_and(|c| k.is_zero(c)) {
        a.pop();
    }
}

pub fn mul<K: Field>(k: &K, a: &[K::Elem], b: &[K::Elem]) -> Vec<K::Elem> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![k.zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if k.is_zero(x) {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] = k.mul_add(&out[i + j], x, y);
        }
    }
    trim(k, &mut out);
    out
}

pub fn sub<K: Field>(k: &K, a: &[K::Elem], b: &[K::Elem]) -> Vec<K::Elem> {
    let len = a.len().max(b.len());
    let z = k.zero();
    let mut out: Vec<K::Elem> = (0..len)
        .map(|i| k.sub(a.get(i).unwrap_or(&z), b.get(i).unwrap_or(&z)))
        .collect();
    trim(k, &mut out);
    out
}

/// Quotient and remainder; `b` must be nonzero.
pub fn divmod<K: Field>(k: &K, a: &[K::Elem], b: &[K::Elem]) -> (Vec<K::Elem>, Vec<K::Elem>) {
    let mut b = b.to_vec();
    trim(k, &mut b);
    assert!(!b.is_empty(), "division by the zero polynomial");
    let mut r = a.to_vec();
    trim(k, &mut r);
    if r.len() < b.len() {
        return (Vec::new(), r);
    }
    let lead_inv = k.inv(b.last().unwrap()).unwrap();
    let mut q = vec![k.zero(); r.len() - b.len() + 1];
    while r.len() >= b.len() {
        let shift = r.len() - b.len();
        let c = k.mul(r.last().unwrap(), &lead_inv);
        for (i, bi) in b.iter().enumerate() {
            r[shift + i] = k.sub(&r[shift + i], &k.mul(&c, bi));
        }
        q[shift] = c;
        r.pop();
        trim(k, &mut r);
    }
    trim(k, &mut q);
    (q, r)
}

pub fn rem<K: Field>(k: &K, a: &[K::Elem], b: &[K::Elem]) -> Vec<K::Elem> {
    divmod(k, a, b).1
}

pub fn gcd<K: Field>(k: &K, a: &[K::Elem], b: &[K::Elem]) -> Vec<K::Elem> {
    let mut a = a.to_vec();
    let mut b = b.to_vec();
    trim(k, &mut a);
    trim(k, &mut b);
    while !b.is_empty() {
        let r = rem(k, &a, &b);
        a = b;
        b = r;
    }
    a
}

/// `(g, s)` with `g = gcd(a, m)` and `s·a ≡ g (mod m)`.
pub fn ext_gcd<K: Field>(k: &K, a: &[K::Elem], m: &[K::Elem]) -> (Vec<K::Elem>, Vec<K::Elem>) {
    let (mut r0, mut r1) = (m.to_vec(), a.to_vec());
    trim(k, &mut r0);
    trim(k, &mut r1);
    let (mut s0, mut s1): (Vec<K::Elem>, Vec<K::Elem>) = (Vec::new(), vec![k.one()]);
    while !r1.is_empty() {
        let (q, r) = divmod(k, &r0, &r1);
        let s = sub(k, &s0, &mul(k, &q, &s1));
        r0 = std::mem::replace(&mut r1, r);
        s0 = std::mem::replace(&mut s1, s);
    }
    (r0, s0)
}

fn mulmod<K: Field>(k: &K, a: &[K::Elem], b: &[K::Elem], m: &[K::Elem]) -> Vec<K::Elem> {
    rem(k, &mul(k, a, b), m)
}

pub fn powmod<K: Field>(k: &K, a: &[K::Elem], mut e: u128, m: &[K::Elem]) -> Vec<K::Elem> {
    let mut base = rem(k, a, m);
    let mut acc = rem(k, &[k.one()], m);
    while e > 0 {
        if e & 1 == 1 {
            acc = mulmod(k, &acc, &base, m);
        }
        base = mulmod(k, &base, &base, m);
        e >>= 1;
    }
    acc
}

fn prime_factors(mut n: usize) -> Vec<usize> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            out.push(d);
            while n.is_multiple_of(d) {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// Rabin's irreducibility test for a polynomial over a finite field.
///
/// `budget` caps the number of coefficient multiplications spent on the
/// repeated `q`-th powers; exceeding it reports `TooLarge`.
pub fn is_irreducible<K: Field>(k: &K, f: &[K::Elem], budget: u128) -> Result<bool> {
    let mut f = f.to_vec();
    trim(k, &mut f);
    if f.len() < 2 {
        return Ok(false);
    }
    let n = f.len() - 1;
    if n == 1 {
        return Ok(true);
    }
    let q = k
        .order()
        .ok_or_else(|| Error::domain("irreducibility test needs a finite field"))?;
    let bits = 128 - q.leading_zeros() as u128;
    let cost = n as u128 * 2 * bits * (n * n) as u128;
    if cost > budget {
        return Err(Error::TooLarge { needed: cost, budget });
    }
    let x = vec![k.zero(), k.one()];
    // frob[i] = x^{q^i} mod f
    let mut frob = vec![rem(k, &x, &f)];
    for _ in 0..n {
        let next = powmod(k, frob.last().unwrap(), q, &f);
        frob.push(next);
    }
    if !sub(k, &frob[n], &rem(k, &x, &f)).is_empty() {
        return Ok(false);
    }
    for r in prime_factors(n) {
        let h = sub(k, &frob[n / r], &x);
        if gcd(k, &h, &f).len() != 1 {
            return Ok(false);
        }
    }
    Ok(true)
}
