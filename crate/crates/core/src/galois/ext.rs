use std::fmt;
use std::sync::Arc;

use rand::Rng;
use smallvec::SmallVec;

use super::base::{BaseField, Fq};
use super::upoly;
use crate::error::{Error, Result};
use crate::field::Field;
use crate::linalg::Matrix;

/// An element of `L`, stored as its coordinates on `1, t, ..., t^{n-1}`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ExtElem(pub(crate) SmallVec<[Fq; 8]>);

impl ExtElem {
    pub fn coords(&self) -> &[Fq] {
        &self.0
    }
}

impl fmt::Debug for ExtElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.0.iter()).finish()
    }
}

struct ExtInner {
    base: BaseField,
    n: usize,
    s: usize,
    /// Monic modulus, constant term first, length n + 1.
    modulus: Vec<Fq>,
    /// `reduce[i]` holds the coordinates of `t^{n+i}`.
    reduce: Vec<Vec<Fq>>,
    /// `frob[i]` has row `j` equal to the coordinates of `σ^i(t^j)`.
    frob: Vec<Matrix<Fq>>,
    /// `Tr(t^j)`.
    traces: Vec<Fq>,
}

/// The cyclic extension `L = F[t]/(modulus)` of degree `n` with the generator
/// `σ = (x ↦ x^q)^s` of its Galois group. Cheap to clone.
#[derive(Clone)]
pub struct ExtField {
    inner: Arc<ExtInner>,
}

impl fmt::Debug for ExtField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{:?}[t]/{:?} (s={})",
            self.inner.base, self.inner.modulus, self.inner.s
        )
    }
}

impl PartialEq for ExtField {
    fn eq(&self, other: &Self) -> bool {
        self.inner.base == other.inner.base
            && self.inner.modulus == other.inner.modulus
            && self.inner.s == other.inner.s
    }
}
impl Eq for ExtField {}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

impl ExtField {
    /// Builds `L` from an irreducible polynomial over `F` (constant term
    /// first; it is made monic) and the Frobenius exponent `s`.
    pub fn new(base: BaseField, modulus: Vec<Fq>, s: usize) -> Result<Self> {
        let mut modulus = modulus;
        upoly::trim(&base, &mut modulus);
        if modulus.len() < 2 {
            return Err(Error::domain("extension modulus must have degree at least 1"));
        }
        let n = modulus.len() - 1;
        if gcd(s % n, n) != 1 && n > 1 {
            return Err(Error::domain(format!("Frobenius exponent {s} is not coprime to {n}")));
        }
        let lead = base.inv(modulus.last().unwrap()).unwrap();
        for c in modulus.iter_mut() {
            *c = base.mul(c, &lead);
        }
        if !upoly::is_irreducible(&base, &modulus, 1 << 40)? {
            return Err(Error::NotIrreducible);
        }
        let zero = base.zero();
        let mut reduce: Vec<Vec<Fq>> = Vec::with_capacity(n.saturating_sub(1));
        // t^n = -(c_0 + ... + c_{n-1} t^{n-1})
        let mut cur: Vec<Fq> = modulus[..n].iter().map(|c| base.neg(c)).collect();
        for _ in 0..n.saturating_sub(1) {
            reduce.push(cur.clone());
            let top = cur[n - 1];
            let mut next = vec![zero; n];
            next[1..n].copy_from_slice(&cur[..n - 1]);
            for i in 0..n {
                next[i] = base.mul_add(&next[i], &top, &reduce[0][i]);
            }
            cur = next;
        }
        let mut field = ExtField {
            inner: Arc::new(ExtInner {
                base: base.clone(),
                n,
                s: s % n.max(1),
                modulus: modulus.clone(),
                reduce,
                frob: Vec::new(),
                traces: Vec::new(),
            }),
        };
        // σ(t) = t^{q^s}
        let q = base.size() as u128;
        let mut sig_t = vec![zero, base.one()];
        for _ in 0..field.inner.s {
            sig_t = upoly::powmod(&base, &sig_t, q, &modulus);
        }
        let sig_t = field.from_poly(&sig_t);
        let mut rows = Vec::with_capacity(n);
        let mut power = field.one();
        for _ in 0..n {
            rows.push(power.0.to_vec());
            power = field.mul(&power, &sig_t);
        }
        let m1 = Matrix::from_rows(n, rows);
        let mut frob = vec![Matrix::identity(&base, n)];
        for i in 1..n {
            let next = crate::linalg::mat_mul(&base, &frob[i - 1], &m1);
            frob.push(next);
        }
        let full = crate::linalg::mat_mul(&base, &frob[n - 1], &m1);
        if full != frob[0] {
            return Err(Error::NotIrreducible);
        }
        let inner = Arc::get_mut(&mut field.inner).unwrap();
        inner.frob = frob;
        let traces: Vec<Fq> = (0..n)
            .map(|j| {
                let mut acc = zero;
                for m in &inner.frob {
                    acc = base.add(&acc, &m[(j, 0)]);
                }
                acc
            })
            .collect();
        inner.traces = traces;
        Ok(field)
    }

    /// Extension of degree `n` using the first monic irreducible polynomial in
    /// the enumeration order of [`find_irreducible`].
    pub fn search(base: BaseField, n: usize, s: usize) -> Result<Self> {
        let m = find_irreducible(&base, n)?;
        Self::new(base, m, s)
    }

    pub fn base(&self) -> &BaseField {
        &self.inner.base
    }

    pub fn n(&self) -> usize {
        self.inner.n
    }

    pub fn frobenius_exponent(&self) -> usize {
        self.inner.s
    }

    pub fn modulus(&self) -> &[Fq] {
        &self.inner.modulus
    }

    /// The class of `t`.
    pub fn generator(&self) -> ExtElem {
        if self.inner.n == 1 {
            // t ≡ -c_0
            return ExtElem(SmallVec::from_slice(&[self.inner.base.neg(&self.inner.modulus[0])]));
        }
        let mut v = self.zero();
        v.0[1] = self.inner.base.one();
        v
    }

    pub fn from_coords(&self, c: &[Fq]) -> Result<ExtElem> {
        if c.len() != self.inner.n {
            return Err(Error::LengthMismatch {
                expected: self.inner.n,
                got: c.len(),
            });
        }
        Ok(ExtElem(SmallVec::from_slice(c)))
    }

    /// Reduces a polynomial in `t` (constant term first).
    pub fn from_poly(&self, c: &[Fq]) -> ExtElem {
        let n = self.inner.n;
        let b = &self.inner.base;
        let mut out: SmallVec<[Fq; 8]> = SmallVec::from_elem(b.zero(), n);
        for (i, x) in c.iter().enumerate() {
            if b.is_zero(x) {
                continue;
            }
            if i < n {
                out[i] = b.add(&out[i], x);
            } else if n == 1 {
                let r = b.pow(&b.neg(&self.inner.modulus[0]), i as u128);
                out[0] = b.mul_add(&out[0], x, &r);
            } else {
                let red = self.reduce_row(i - n);
                for j in 0..n {
                    out[j] = b.mul_add(&out[j], x, &red[j]);
                }
            }
        }
        ExtElem(out)
    }

    fn reduce_row(&self, i: usize) -> std::borrow::Cow<'_, [Fq]> {
        if i < self.inner.reduce.len() {
            std::borrow::Cow::Borrowed(&self.inner.reduce[i])
        } else {
            let t = self.generator();
            let e = self.pow(&t, (self.inner.n + i) as u128);
            std::borrow::Cow::Owned(e.0.to_vec())
        }
    }

    pub fn from_base(&self, a: Fq) -> ExtElem {
        let mut v = self.zero();
        v.0[0] = a;
        v
    }

    /// `Some(a)` if `x` lies in `F`.
    pub fn to_base(&self, x: &ExtElem) -> Option<Fq> {
        if x.0[1..].iter().all(|c| self.inner.base.is_zero(c)) {
            Some(x.0[0])
        } else {
            None
        }
    }

    /// `σ^i(x)`; `i` is reduced mod `n`.
    pub fn frob(&self, x: &ExtElem, i: i64) -> ExtElem {
        let n = self.inner.n;
        let i = i.rem_euclid(n as i64) as usize;
        if i == 0 {
            return x.clone();
        }
        let b = &self.inner.base;
        let m = &self.inner.frob[i];
        let mut out: SmallVec<[Fq; 8]> = SmallVec::from_elem(b.zero(), n);
        for (j, c) in x.0.iter().enumerate() {
            if b.is_zero(c) {
                continue;
            }
            let row = m.row(j);
            for k in 0..n {
                out[k] = b.mul_add(&out[k], c, &row[k]);
            }
        }
        ExtElem(out)
    }

    pub fn frob_vec(&self, v: &[ExtElem], i: i64) -> Vec<ExtElem> {
        v.iter().map(|x| self.frob(x, i)).collect()
    }

    /// `Tr_{L/F}(x) = Σ_i σ^i(x)`.
    pub fn trace(&self, x: &ExtElem) -> Fq {
        let b = &self.inner.base;
        x.0.iter()
            .zip(&self.inner.traces)
            .fold(b.zero(), |acc, (c, t)| b.mul_add(&acc, c, t))
    }

    /// The matrix of `σ^i` on power-basis coordinates (row vector convention).
    pub fn frobenius_matrix(&self, i: i64) -> &Matrix<Fq> {
        &self.inner.frob[i.rem_euclid(self.inner.n as i64) as usize]
    }

    /// The `n × m` matrix whose column `j` holds the coordinates of `v_j`.
    pub fn coord_matrix(&self, v: &[ExtElem]) -> Matrix<Fq> {
        Matrix::from_fn(self.inner.n, v.len(), |i, j| v[j].0[i])
    }

    /// Enumerates `L` by packing coordinates in base `q`, constant term first.
    pub fn element(&self, mut idx: u128) -> ExtElem {
        let q = self.inner.base.size() as u128;
        let mut v = self.zero();
        for c in v.0.iter_mut() {
            *c = self.inner.base.element((idx % q) as u32);
            idx /= q;
        }
        v
    }
}

impl Field for ExtField {
    type Elem = ExtElem;

    fn zero(&self) -> ExtElem {
        ExtElem(SmallVec::from_elem(self.inner.base.zero(), self.inner.n))
    }

    fn one(&self) -> ExtElem {
        self.from_base(self.inner.base.one())
    }

    fn is_zero(&self, a: &ExtElem) -> bool {
        a.0.iter().all(|c| self.inner.base.is_zero(c))
    }

    fn add(&self, a: &ExtElem, b: &ExtElem) -> ExtElem {
        let k = &self.inner.base;
        ExtElem(a.0.iter().zip(&b.0).map(|(x, y)| k.add(x, y)).collect())
    }

    fn sub(&self, a: &ExtElem, b: &ExtElem) -> ExtElem {
        let k = &self.inner.base;
        ExtElem(a.0.iter().zip(&b.0).map(|(x, y)| k.sub(x, y)).collect())
    }

    fn neg(&self, a: &ExtElem) -> ExtElem {
        let k = &self.inner.base;
        ExtElem(a.0.iter().map(|x| k.neg(x)).collect())
    }

    fn mul(&self, a: &ExtElem, b: &ExtElem) -> ExtElem {
        let k = &self.inner.base;
        let n = self.inner.n;
        if n == 1 {
            return ExtElem(SmallVec::from_slice(&[k.mul(&a.0[0], &b.0[0])]));
        }
        let mut prod: SmallVec<[Fq; 16]> = SmallVec::from_elem(k.zero(), 2 * n - 1);
        for (i, x) in a.0.iter().enumerate() {
            if k.is_zero(x) {
                continue;
            }
            for (j, y) in b.0.iter().enumerate() {
                prod[i + j] = k.mul_add(&prod[i + j], x, y);
            }
        }
        let mut out: SmallVec<[Fq; 8]> = SmallVec::from_slice(&prod[..n]);
        for (i, c) in prod[n..].iter().enumerate() {
            if k.is_zero(c) {
                continue;
            }
            let red = &self.inner.reduce[i];
            for j in 0..n {
                out[j] = k.mul_add(&out[j], c, &red[j]);
            }
        }
        ExtElem(out)
    }

    fn inv(&self, a: &ExtElem) -> Option<ExtElem> {
        if self.is_zero(a) {
            return None;
        }
        let k = &self.inner.base;
        let mut poly = a.0.to_vec();
        upoly::trim(k, &mut poly);
        let (g, s) = upoly::ext_gcd(k, &poly, &self.inner.modulus);
        debug_assert_eq!(g.len(), 1);
        let gi = k.inv(&g[0])?;
        let s: Vec<Fq> = s.iter().map(|c| k.mul(c, &gi)).collect();
        Some(self.from_poly(&s))
    }

    fn from_i64(&self, v: i64) -> ExtElem {
        self.from_base(self.inner.base.from_i64(v))
    }

    fn characteristic(&self) -> u32 {
        self.inner.base.p()
    }

    fn order(&self) -> Option<u128> {
        (self.inner.base.size() as u128).checked_pow(self.inner.n as u32)
    }

    fn random<R: Rng + ?Sized>(&self, rng: &mut R) -> ExtElem {
        ExtElem((0..self.inner.n).map(|_| self.inner.base.random(rng)).collect())
    }
}

/// First monic irreducible polynomial of degree `n` over `F`, searching
/// candidates whose lower coefficients, read as base-`q` digits of a counter
/// (constant term first), increase from zero.
pub fn find_irreducible(base: &BaseField, n: usize) -> Result<Vec<Fq>> {
    if n == 0 {
        return Err(Error::domain("extension degree must be positive"));
    }
    let q = base.size() as u128;
    let total = q
        .checked_pow(n as u32)
        .ok_or_else(|| Error::domain("extension degree too large"))?;
    for idx in 0..total {
        let mut c = Vec::with_capacity(n + 1);
        let mut v = idx;
        for _ in 0..n {
            c.push(base.element((v % q) as u32));
            v /= q;
        }
        c.push(base.one());
        if upoly::is_irreducible(base, &c, 1 << 40)? {
            return Ok(c);
        }
    }
    Err(Error::NotIrreducible)
}
