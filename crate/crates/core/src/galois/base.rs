use std::fmt;
use std::sync::Arc;

use rand::Rng;

use super::upoly;
use crate::error::{Error, Result};
use crate::field::Field;

/// An element of `F_q`, `q = p^m`.
///
/// The value packs the coordinates over `F_p` in base `p`, constant term
/// first: `c0 + c1 p + ... + c_{m-1} p^{m-1}`. For prime fields this is just
/// the residue. Values run over `0..q`, which also fixes the enumeration order
/// used by exhaustive scans.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Fq(pub(crate) u32);

impl Fq {
    pub fn index(self) -> u32 {
        self.0
    }
}

impl fmt::Debug for Fq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

struct Inner {
    p: u32,
    m: usize,
    q: u32,
    /// Monic modulus over `F_p`, constant term first (length m + 1).
    modulus: Vec<u32>,
    inv: Vec<u32>,
    // Only populated when m > 1.
    exp: Vec<u32>,
    log: Vec<u32>,
}

/// The base field `F = F_{p^m}`. Cheap to clone.
#[derive(Clone)]
pub struct BaseField {
    inner: Arc<Inner>,
}

impl fmt::Debug for BaseField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.inner.m == 1 {
            write!(f, "F_{}", self.inner.p)
        } else {
            write!(f, "F_{}^{}{:?}", self.inner.p, self.inner.m, self.inner.modulus)
        }
    }
}

impl PartialEq for BaseField {
    fn eq(&self, other: &Self) -> bool {
        self.inner.p == other.inner.p && self.inner.modulus == other.inner.modulus
    }
}
impl Eq for BaseField {}

const MAX_TABLE: u32 = 1 << 16;

fn is_prime(p: u32) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= p as u64 {
        if (p as u64).is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

fn pow_mod(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1u64;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    acc
}

impl BaseField {
    /// The prime field `F_p`.
    pub fn prime(p: u32) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::domain(format!("{p} is not prime")));
        }
        if p >= 1 << 31 {
            return Err(Error::domain("prime must be below 2^31"));
        }
        let inv = if p <= MAX_TABLE {
            let mut t = vec![0u32; p as usize];
            for a in 1..p {
                t[a as usize] = pow_mod(a as u64, p as u64 - 2, p as u64) as u32;
            }
            t
        } else {
            Vec::new()
        };
        Ok(BaseField {
            inner: Arc::new(Inner {
                p,
                m: 1,
                q: p,
                modulus: vec![0, 1],
                inv,
                exp: Vec::new(),
                log: Vec::new(),
            }),
        })
    }

    /// `F_{p^m} = F_p[t]/(modulus)`; `modulus` lists coefficients constant
    /// term first and must be irreducible of degree `m`.
    pub fn new(p: u32, modulus: &[i64]) -> Result<Self> {
        let fp = Self::prime(p)?;
        let mut poly: Vec<Fq> = modulus.iter().map(|&c| fp.from_i64(c)).collect();
        upoly::trim(&fp, &mut poly);
        if poly.len() < 2 {
            return Err(Error::domain("modulus must have degree at least 1"));
        }
        let m = poly.len() - 1;
        if m == 1 {
            return Ok(fp);
        }
        let lead = fp.inv(poly.last().unwrap()).unwrap();
        let poly: Vec<Fq> = poly.iter().map(|c| fp.mul(c, &lead)).collect();
        if !upoly::is_irreducible(&fp, &poly, 10_000_000)? {
            return Err(Error::NotIrreducible);
        }
        let q = (p as u64)
            .checked_pow(m as u32)
            .filter(|&q| q <= MAX_TABLE as u64)
            .ok_or_else(|| Error::domain("base field order must not exceed 65536"))? as u32;
        let modulus: Vec<u32> = poly.iter().map(|c| c.0).collect();
        let slow_mul = |a: u32, b: u32| -> u32 {
            let da = digits(a, p, m);
            let db = digits(b, p, m);
            let mut prod = vec![0u64; 2 * m - 1];
            for i in 0..m {
                for j in 0..m {
                    prod[i + j] = (prod[i + j] + da[i] as u64 * db[j] as u64) % p as u64;
                }
            }
            for deg in (m..2 * m - 1).rev() {
                let c = prod[deg];
                if c == 0 {
                    continue;
                }
                prod[deg] = 0;
                for i in 0..m {
                    let sub = c * modulus[i] as u64 % p as u64;
                    prod[deg - m + i] = (prod[deg - m + i] + p as u64 - sub) % p as u64;
                }
            }
            pack(&prod[..m].iter().map(|&x| x as u32).collect::<Vec<_>>(), p)
        };
        // Search for a generator of the multiplicative group.
        let mut exp = Vec::new();
        for g in 2..q {
            let mut table = Vec::with_capacity(q as usize - 1);
            let mut x = 1u32;
            loop {
                table.push(x);
                x = slow_mul(x, g);
                if x == 1 {
                    break;
                }
            }
            if table.len() == q as usize - 1 {
                exp = table;
                break;
            }
        }
        let mut log = vec![0u32; q as usize];
        for (i, &x) in exp.iter().enumerate() {
            log[x as usize] = i as u32;
        }
        let mut inv = vec![0u32; q as usize];
        for a in 1..q {
            let l = log[a as usize] as usize;
            inv[a as usize] = exp[(q as usize - 1 - l) % (q as usize - 1)];
        }
        Ok(BaseField {
            inner: Arc::new(Inner {
                p,
                m,
                q,
                modulus,
                inv,
                exp,
                log,
            }),
        })
    }

    pub fn p(&self) -> u32 {
        self.inner.p
    }

    pub fn degree(&self) -> usize {
        self.inner.m
    }

    pub fn size(&self) -> u32 {
        self.inner.q
    }

    /// Monic modulus over `F_p`, constant term first.
    pub fn modulus(&self) -> &[u32] {
        &self.inner.modulus
    }

    /// The element with packed index `i` (`0 <= i < q`).
    pub fn element(&self, i: u32) -> Fq {
        assert!(i < self.inner.q, "element index out of range");
        Fq(i)
    }

    pub fn elements(&self) -> impl Iterator<Item = Fq> {
        (0..self.inner.q).map(Fq)
    }

    /// Coordinates over `F_p`, constant term first.
    pub fn coords(&self, a: Fq) -> Vec<u32> {
        digits(a.0, self.inner.p, self.inner.m)
    }

    pub fn from_coords(&self, c: &[u32]) -> Result<Fq> {
        if c.len() > self.inner.m || c.iter().any(|&x| x >= self.inner.p) {
            return Err(Error::domain("invalid base-field coordinates"));
        }
        Ok(Fq(pack(c, self.inner.p)))
    }
}

fn digits(mut v: u32, p: u32, m: usize) -> Vec<u32> {
    let mut d = vec![0u32; m];
    for x in d.iter_mut() {
        *x = v % p;
        v /= p;
    }
    d
}

fn pack(c: &[u32], p: u32) -> u32 {
    c.iter().rev().fold(0, |acc, &x| acc * p + x)
}

impl Field for BaseField {
    type Elem = Fq;

    fn zero(&self) -> Fq {
        Fq(0)
    }

    fn one(&self) -> Fq {
        Fq(1)
    }

    #[inline]
    fn is_zero(&self, a: &Fq) -> bool {
        a.0 == 0
    }

    #[inline]
    fn add(&self, a: &Fq, b: &Fq) -> Fq {
        let p = self.inner.p;
        if self.inner.m == 1 {
            let s = a.0 as u64 + b.0 as u64;
            Fq((s % p as u64) as u32)
        } else {
            let (mut x, mut y) = (a.0, b.0);
            let mut out = 0;
            let mut scale = 1;
            for _ in 0..self.inner.m {
                out += ((x % p + y % p) % p) * scale;
                x /= p;
                y /= p;
                scale *= p;
            }
            Fq(out)
        }
    }

    #[inline]
    fn neg(&self, a: &Fq) -> Fq {
        let p = self.inner.p;
        if self.inner.m == 1 {
            Fq(if a.0 == 0 { 0 } else { p - a.0 })
        } else {
            let mut x = a.0;
            let mut out = 0;
            let mut scale = 1;
            for _ in 0..self.inner.m {
                out += ((p - x % p) % p) * scale;
                x /= p;
                scale *= p;
            }
            Fq(out)
        }
    }

    #[inline]
    fn sub(&self, a: &Fq, b: &Fq) -> Fq {
        if self.inner.m == 1 {
            let p = self.inner.p as u64;
            Fq(((a.0 as u64 + p - b.0 as u64) % p) as u32)
        } else {
            self.add(a, &self.neg(b))
        }
    }

    #[inline]
    fn mul(&self, a: &Fq, b: &Fq) -> Fq {
        if self.inner.m == 1 {
            Fq((a.0 as u64 * b.0 as u64 % self.inner.p as u64) as u32)
        } else {
            if a.0 == 0 || b.0 == 0 {
                return Fq(0);
            }
            let ord = self.inner.q as usize - 1;
            let l = self.inner.log[a.0 as usize] as usize + self.inner.log[b.0 as usize] as usize;
            Fq(self.inner.exp[l % ord])
        }
    }

    fn inv(&self, a: &Fq) -> Option<Fq> {
        if a.0 == 0 {
            return None;
        }
        if self.inner.inv.is_empty() {
            let p = self.inner.p as u64;
            return Some(Fq(pow_mod(a.0 as u64, p - 2, p) as u32));
        }
        Some(Fq(self.inner.inv[a.0 as usize]))
    }

    fn from_i64(&self, v: i64) -> Fq {
        Fq(v.rem_euclid(self.inner.p as i64) as u32)
    }

    fn characteristic(&self) -> u32 {
        self.inner.p
    }

    fn order(&self) -> Option<u128> {
        Some(self.inner.q as u128)
    }

    fn random<R: Rng + ?Sized>(&self, rng: &mut R) -> Fq {
        Fq(rng.gen_range(0..self.inner.q))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn check_axioms(k: &BaseField, samples: usize) {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..samples {
            let a = k.random(&mut rng);
            let b = k.random(&mut rng);
            let c = k.random(&mut rng);
            assert_eq!(k.add(&a, &k.add(&b, &c)), k.add(&k.add(&a, &b), &c));
            assert_eq!(k.mul(&a, &k.mul(&b, &c)), k.mul(&k.mul(&a, &b), &c));
            assert_eq!(k.mul(&a, &k.add(&b, &c)), k.add(&k.mul(&a, &b), &k.mul(&a, &c)));
            assert!(k.is_zero(&k.add(&a, &k.neg(&a))));
            if !k.is_zero(&a) {
                assert!(k.is_one(&k.mul(&a, &k.inv(&a).unwrap())));
            }
        }
    }

    #[test]
    fn prime_field_axioms() {
        check_axioms(&BaseField::prime(5).unwrap(), 1000);
        check_axioms(&BaseField::prime(11).unwrap(), 1000);
    }

    #[test]
    fn prime_power_field_axioms() {
        // t^2 + 1 is irreducible over F_3.
        let f9 = BaseField::new(3, &[1, 0, 1]).unwrap();
        assert_eq!(f9.size(), 9);
        check_axioms(&f9, 2000);
        // t^2 = -1
        let t = f9.from_coords(&[0, 1]).unwrap();
        assert_eq!(f9.mul(&t, &t), f9.from_i64(-1));
        // t^3 + 2t + 1 over F_3
        check_axioms(&BaseField::new(3, &[1, 2, 0, 1]).unwrap(), 2000);
    }

    #[test]
    fn rejects_bad_input() {
        assert!(BaseField::prime(6).is_err());
        assert_eq!(BaseField::new(3, &[2, 0, 1]), Err(Error::NotIrreducible));
    }
}
