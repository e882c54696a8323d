//! Homogeneous polynomials, differential operators and the apolarity action.

mod text;

use std::cmp::Ordering;
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::marker::PhantomData;

use smallvec::SmallVec;

use crate::combin::binomial;
use crate::error::{Error, Result};
use crate::field::Field;
use crate::galois::{ExtElem, ExtField, Fq, LBasis};
use crate::linalg::{self, Matrix};

pub use text::{format_poly, parse_poly, poly_from_json, poly_to_json};

/// An exponent vector. Ordered so that ascending iteration visits monomials
/// in lexicographically descending order of their exponents (`x1^d` first).
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Monomial(SmallVec<[u16; 8]>);

impl Monomial {
    pub fn new(exps: &[u16]) -> Self {
        Monomial(SmallVec::from_slice(exps))
    }

    pub fn exps(&self) -> &[u16] {
        &self.0
    }

    pub fn n(&self) -> usize {
        self.0.len()
    }

    pub fn degree(&self) -> usize {
        self.0.iter().map(|&e| e as usize).sum()
    }

    /// `x_i^e`.
    pub fn power(n: usize, i: usize, e: u16) -> Self {
        let mut v = SmallVec::from_elem(0, n);
        v[i] = e;
        Monomial(v)
    }

    /// `t_1! ... t_n!` as a field element.
    pub fn factorial_product<K: Field>(&self, k: &K) -> K::Elem {
        let mut acc = k.one();
        for &e in self.0.iter() {
            for j in 2..=e as i64 {
                acc = k.mul(&acc, &k.from_i64(j));
            }
        }
        acc
    }

    fn mul(&self, other: &Self) -> Self {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        other.0.cmp(&self.0)
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0.as_slice())
    }
}

/// Number of monomials of degree `d` in `n` variables.
pub fn num_monomials(n: usize, d: usize) -> usize {
    if n == 0 {
        return (d == 0) as usize;
    }
    binomial((n + d - 1) as u64, d as u64) as usize
}

/// The ordered monomial basis of `S_{n,d}`.
#[derive(Clone, Debug)]
pub struct MonomialBasis {
    n: usize,
    d: usize,
    monos: Vec<Monomial>,
    index: HashMap<Monomial, usize>,
}

impl MonomialBasis {
    pub fn new(n: usize, d: usize) -> Self {
        fn rec(n: usize, left: u16, cur: &mut SmallVec<[u16; 8]>, out: &mut Vec<Monomial>) {
            if cur.len() + 1 == n {
                cur.push(left);
                out.push(Monomial(cur.clone()));
                cur.pop();
                return;
            }
            for e in (0..=left).rev() {
                cur.push(e);
                rec(n, left - e, cur, out);
                cur.pop();
            }
        }
        let mut monos = Vec::with_capacity(num_monomials(n, d));
        if n > 0 {
            rec(n, d as u16, &mut SmallVec::new(), &mut monos);
        } else if d == 0 {
            monos.push(Monomial(SmallVec::new()));
        }
        let index = monos.iter().enumerate().map(|(i, m)| (m.clone(), i)).collect();
        MonomialBasis { n, d, monos, index }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn len(&self) -> usize {
        self.monos.len()
    }

    pub fn is_empty(&self) -> bool {
        self.monos.is_empty()
    }

    pub fn monomials(&self) -> &[Monomial] {
        &self.monos
    }

    pub fn get(&self, i: usize) -> &Monomial {
        &self.monos[i]
    }

    pub fn index_of(&self, m: &Monomial) -> Option<usize> {
        self.index.get(m).copied()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct PolyTag;
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct OpTag;

/// A homogeneous element of degree `d` in `n` variables, stored sparsely.
/// The tag distinguishes polynomials in `x` from operators in `∂`.
pub struct Homog<E, T> {
    n: usize,
    d: usize,
    terms: BTreeMap<Monomial, E>,
    _tag: PhantomData<fn() -> T>,
}

/// An element of `S_{n,d}`.
pub type HomogPoly<E> = Homog<E, PolyTag>;
/// An element of `T_{n,d}`.
pub type DiffOp<E> = Homog<E, OpTag>;

impl<E: Clone, T> Clone for Homog<E, T> {
    fn clone(&self) -> Self {
        Homog {
            n: self.n,
            d: self.d,
            terms: self.terms.clone(),
            _tag: PhantomData,
        }
    }
}

impl<E: PartialEq, T> PartialEq for Homog<E, T> {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.d == other.d && self.terms == other.terms
    }
}

impl<E: Eq, T> Eq for Homog<E, T> {}

impl<E: std::hash::Hash, T> std::hash::Hash for Homog<E, T> {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        (self.n, self.d).hash(state);
        self.terms.hash(state);
    }
}

impl<E: fmt::Debug, T> fmt::Debug for Homog<E, T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Homog(n={}, d={}, ", self.n, self.d)?;
        f.debug_map().entries(self.terms.iter()).finish()?;
        write!(f, ")")
    }
}

impl<E: Clone, T> Homog<E, T> {
    pub fn zero(n: usize, d: usize) -> Self {
        Homog {
            n,
            d,
            terms: BTreeMap::new(),
            _tag: PhantomData,
        }
    }

    /// Sums the given terms, dropping zero coefficients.
    pub fn from_terms<K: Field<Elem = E>>(
        k: &K,
        n: usize,
        d: usize,
        terms: impl IntoIterator<Item = (Monomial, E)>,
    ) -> Self {
        let mut p = Self::zero(n, d);
        for (m, c) in terms {
            p.add_term(k, m, &c);
        }
        p
    }

    pub fn monomial<K: Field<Elem = E>>(k: &K, exps: &[u16], c: E) -> Self {
        let m = Monomial::new(exps);
        let d = m.degree();
        Self::from_terms(k, exps.len(), d, [(m, c)])
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Nonzero terms in canonical order.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &E)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &Monomial) -> Option<&E> {
        self.terms.get(m)
    }

    /// Adds `c·m` in place.
    pub fn add_term<K: Field<Elem = E>>(&mut self, k: &K, m: Monomial, c: &E) {
        assert_eq!(m.n(), self.n, "variable count mismatch");
        assert_eq!(m.degree(), self.d, "degree mismatch");
        if k.is_zero(c) {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c.clone());
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let s = k.add(e.get(), c);
                if k.is_zero(&s) {
                    e.remove();
                } else {
                    *e.get_mut() = s;
                }
            }
        }
    }

    pub fn add<K: Field<Elem = E>>(&self, k: &K, other: &Self) -> Self {
        assert_eq!((self.n, self.d), (other.n, other.d));
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(k, m.clone(), c);
        }
        out
    }

    pub fn neg<K: Field<Elem = E>>(&self, k: &K) -> Self {
        self.map_coeffs(k, |c| k.neg(c))
    }

    pub fn sub<K: Field<Elem = E>>(&self, k: &K, other: &Self) -> Self {
        self.add(k, &other.neg(k))
    }

    pub fn scale<K: Field<Elem = E>>(&self, k: &K, c: &E) -> Self {
        self.map_coeffs(k, |x| k.mul(x, c))
    }

    /// Applies `f` to every coefficient, landing in the field `k2`.
    pub fn map_coeffs<K2: Field>(&self, k2: &K2, f: impl Fn(&E) -> K2::Elem) -> Homog<K2::Elem, T> {
        let terms = self
            .terms
            .iter()
            .filter_map(|(m, c)| {
                let v = f(c);
                (!k2.is_zero(&v)).then(|| (m.clone(), v))
            })
            .collect();
        Homog {
            n: self.n,
            d: self.d,
            terms,
            _tag: PhantomData,
        }
    }

    /// Reinterprets the coefficient table under another tag (`x_i ↔ ∂_i`).
    pub fn retag<T2>(self) -> Homog<E, T2> {
        Homog {
            n: self.n,
            d: self.d,
            terms: self.terms,
            _tag: PhantomData,
        }
    }

    /// Coefficients on the ordered monomial basis.
    pub fn to_dense<K: Field<Elem = E>>(&self, k: &K) -> Vec<E> {
        let basis = MonomialBasis::new(self.n, self.d);
        self.to_dense_in(k, &basis)
    }

    pub fn to_dense_in<K: Field<Elem = E>>(&self, k: &K, basis: &MonomialBasis) -> Vec<E> {
        debug_assert_eq!((basis.n(), basis.d()), (self.n, self.d));
        let mut v = vec![k.zero(); basis.len()];
        for (m, c) in &self.terms {
            v[basis.index_of(m).expect("monomial in basis")] = c.clone();
        }
        v
    }

    pub fn from_dense<K: Field<Elem = E>>(k: &K, basis: &MonomialBasis, v: &[E]) -> Self {
        assert_eq!(v.len(), basis.len());
        Self::from_terms(
            k,
            basis.n(),
            basis.d(),
            basis.monomials().iter().cloned().zip(v.iter().cloned()),
        )
    }
}

/// A uniformly random element of `S_{n,d}` (or `T_{n,d}`).
pub fn random_homog<K: Field, T, R: rand::Rng + ?Sized>(k: &K, n: usize, d: usize, rng: &mut R) -> Homog<K::Elem, T> {
    let basis = MonomialBasis::new(n, d);
    Homog::from_terms(k, n, d, basis.monomials().iter().map(|m| (m.clone(), k.random(rng))))
}

/// `D ∘ f`, the result of letting the operator act by formal differentiation.
pub fn apply_diffop<K: Field>(k: &K, op: &DiffOp<K::Elem>, f: &HomogPoly<K::Elem>) -> Result<HomogPoly<K::Elem>> {
    if op.d > f.d {
        return Err(Error::DegreeMismatch { op: op.d, poly: f.d });
    }
    if op.n != f.n {
        return Err(Error::LengthMismatch {
            expected: f.n,
            got: op.n,
        });
    }
    let mut out = HomogPoly::zero(f.n, f.d - op.d);
    for (u, c) in &op.terms {
        for (t, a) in &f.terms {
            if t.0.iter().zip(&u.0).any(|(ti, ui)| ti < ui) {
                continue;
            }
            let mut coeff = k.mul(c, a);
            for (&ti, &ui) in t.0.iter().zip(&u.0) {
                for j in 0..ui {
                    coeff = k.mul(&coeff, &k.from_i64((ti - j) as i64));
                }
            }
            let m = Monomial(t.0.iter().zip(&u.0).map(|(ti, ui)| ti - ui).collect());
            out.add_term(k, m, &coeff);
        }
    }
    Ok(out)
}

/// `v(∂) ∘ f = Σ v_i ∂_i f`.
pub fn apply_linear<K: Field>(k: &K, v: &[K::Elem], f: &HomogPoly<K::Elem>) -> HomogPoly<K::Elem> {
    assert_eq!(v.len(), f.n);
    assert!(f.d >= 1, "cannot differentiate a constant");
    let mut out = HomogPoly::zero(f.n, f.d - 1);
    for (t, a) in &f.terms {
        for (i, vi) in v.iter().enumerate() {
            if t.0[i] == 0 || k.is_zero(vi) {
                continue;
            }
            let mut m = t.clone();
            m.0[i] -= 1;
            let c = k.mul(&k.mul(a, vi), &k.from_i64(t.0[i] as i64));
            out.add_term(k, m, &c);
        }
    }
    out
}

/// `∂_i f`.
pub fn partial<K: Field>(k: &K, i: usize, f: &HomogPoly<K::Elem>) -> HomogPoly<K::Elem> {
    let mut v = vec![k.zero(); f.n];
    v[i] = k.one();
    apply_linear(k, &v, f)
}

/// The apolarity pairing `D ∘ f` for `deg D = deg f`.
pub fn pairing<K: Field>(k: &K, f: &HomogPoly<K::Elem>, op: &DiffOp<K::Elem>) -> Result<K::Elem> {
    if op.d != f.d {
        return Err(Error::DegreeMismatch { op: op.d, poly: f.d });
    }
    let r = apply_diffop(k, op, f)?;
    Ok(r.terms.values().next().cloned().unwrap_or_else(|| k.zero()))
}

/// Views a polynomial over `F` as one over `L`.
pub fn promote<T>(ext: &ExtField, f: &Homog<Fq, T>) -> Homog<ExtElem, T> {
    f.map_coeffs(ext, |c| ext.from_base(*c))
}

/// Applies `σ^i` to every coefficient.
pub fn frob_coeffs<T>(ext: &ExtField, f: &Homog<ExtElem, T>, i: i64) -> Homog<ExtElem, T> {
    f.map_coeffs(ext, |c| ext.frob(c, i))
}

/// The `F`-linear conditions `D ∘ f = 0` on the dense coefficient vector of
/// `f ∈ S_{n,d}(F)`; each operator contributes `n` rows, one per power-basis
/// coordinate of its `L`-valued condition.
pub fn condition_matrix(ext: &ExtField, ops: &[DiffOp<ExtElem>], n: usize, d: usize) -> Matrix<Fq> {
    let k = ext.base();
    let basis = MonomialBasis::new(n, d);
    let facts: Vec<Fq> = basis.monomials().iter().map(|m| m.factorial_product(k)).collect();
    let deg = ext.n();
    let mut m = Matrix::zeros(k, ops.len() * deg, basis.len());
    for (o, op) in ops.iter().enumerate() {
        assert_eq!((op.n, op.d), (n, d), "operator shape mismatch");
        for (mono, c) in &op.terms {
            let j = basis.index_of(mono).unwrap();
            for (r, x) in c.coords().iter().enumerate() {
                m[(o * deg + r, j)] = k.mul(x, &facts[j]);
            }
        }
    }
    m
}

/// RREF basis of `{f ∈ S_{n,d}(F) : D ∘ f = 0 for every D in ops}`.
pub fn perp_in_s(ext: &ExtField, ops: &[DiffOp<ExtElem>], n: usize, d: usize) -> Vec<HomogPoly<Fq>> {
    let k = ext.base();
    let basis = MonomialBasis::new(n, d);
    let m = condition_matrix(ext, ops, n, d);
    let ker = if ops.is_empty() {
        (0..basis.len())
            .map(|i| {
                let mut v = vec![k.zero(); basis.len()];
                v[i] = k.one();
                v
            })
            .collect()
    } else {
        linalg::kernel(k, &m)
    };
    ker.iter().map(|v| HomogPoly::from_dense(k, &basis, v)).collect()
}

/// The unique `coeff_i ∈ S_{n,d}(F)` with `h = Σ α_i coeff_i`.
pub fn coeff_decompose<T>(ext: &ExtField, h: &Homog<ExtElem, T>, alpha: &LBasis) -> Vec<Homog<Fq, T>> {
    let k = ext.base();
    let mut out: Vec<Homog<Fq, T>> = (0..ext.n()).map(|_| Homog::zero(h.n, h.d)).collect();
    for (m, c) in &h.terms {
        for (i, x) in alpha.coords_of(ext, c).iter().enumerate() {
            out[i].add_term(k, m.clone(), x);
        }
    }
    out
}

/// `Σ α_i coeff_i`.
pub fn coeff_recompose<T: Clone>(ext: &ExtField, parts: &[Homog<Fq, T>], alpha: &LBasis) -> Homog<ExtElem, T> {
    let mut acc: Homog<ExtElem, T> = Homog::zero(parts[0].n, parts[0].d);
    for (p, a) in parts.iter().zip(alpha.elements()) {
        acc = acc.add(ext, &promote(ext, p).scale(ext, a));
    }
    acc
}

pub fn mul<K: Field, T>(k: &K, f: &Homog<K::Elem, T>, g: &Homog<K::Elem, T>) -> Homog<K::Elem, T> {
    assert_eq!(f.n, g.n);
    let mut out = Homog::zero(f.n, f.d + g.d);
    for (a, x) in &f.terms {
        for (b, y) in &g.terms {
            out.add_term(k, a.mul(b), &k.mul(x, y));
        }
    }
    out
}

/// The constant polynomial 1 in `n` variables.
pub fn one<K: Field, T>(k: &K, n: usize) -> Homog<K::Elem, T> {
    Homog::from_terms(k, n, 0, [(Monomial(SmallVec::from_elem(0, n)), k.one())])
}

pub fn pow<K: Field, T>(k: &K, f: &Homog<K::Elem, T>, e: usize) -> Homog<K::Elem, T> {
    let mut acc = one(k, f.n);
    for _ in 0..e {
        acc = mul(k, &acc, f);
    }
    acc
}

fn linear<K: Field, T>(k: &K, v: &[K::Elem]) -> Homog<K::Elem, T> {
    let n = v.len();
    Homog::from_terms(
        k,
        n,
        1,
        v.iter().enumerate().map(|(i, c)| (Monomial::power(n, i, 1), c.clone())),
    )
}

/// `v(x) = v_1 x_1 + ... + v_n x_n`.
pub fn linear_form<K: Field>(k: &K, v: &[K::Elem]) -> HomogPoly<K::Elem> {
    linear(k, v)
}

/// `v(∂) = v_1 ∂_1 + ... + v_n ∂_n`.
pub fn linear_diffop<K: Field>(k: &K, v: &[K::Elem]) -> DiffOp<K::Elem> {
    linear(k, v)
}

/// `∏_j v_j(∂)`.
pub fn product_of_linear_diffops<K: Field>(k: &K, vs: &[Vec<K::Elem>]) -> DiffOp<K::Elem> {
    assert!(!vs.is_empty(), "empty product");
    let mut acc = linear_diffop(k, &vs[0]);
    for v in &vs[1..] {
        acc = mul(k, &acc, &linear_diffop(k, v));
    }
    acc
}

/// `g(ℓ_1, ..., ℓ_e)` where `g` has `e` variables and each `ℓ_i` is a
/// coefficient vector of a linear form in `n` variables.
pub fn compose_linear<K: Field>(k: &K, g: &HomogPoly<K::Elem>, forms: &[Vec<K::Elem>], n: usize) -> HomogPoly<K::Elem> {
    assert_eq!(g.n, forms.len(), "one linear form per variable");
    let lin: Vec<HomogPoly<K::Elem>> = forms.iter().map(|v| linear_form(k, v)).collect();
    // powers[i][e] = ℓ_i^e
    let mut powers: Vec<Vec<HomogPoly<K::Elem>>> = lin.iter().map(|_| vec![one(k, n)]).collect();
    for (i, l) in lin.iter().enumerate() {
        for e in 1..=g.d {
            let next = mul(k, &powers[i][e - 1], l);
            powers[i].push(next);
        }
    }
    let mut out = HomogPoly::zero(n, g.d);
    for (m, c) in &g.terms {
        let mut t = one(k, n);
        for (i, &e) in m.0.iter().enumerate() {
            if e > 0 {
                t = mul(k, &t, &powers[i][e as usize]);
            }
        }
        out = out.add(k, &t.scale(k, c));
    }
    out
}

/// `f(x·A)`: variable `x_j` is replaced by `Σ_i A_ij x_i`.
pub fn substitute<K: Field>(k: &K, f: &HomogPoly<K::Elem>, a: &Matrix<K::Elem>) -> HomogPoly<K::Elem> {
    assert_eq!((a.rows(), a.cols()), (f.n, f.n), "matrix must be n × n");
    let forms: Vec<Vec<K::Elem>> = (0..f.n).map(|j| a.column(j)).collect();
    compose_linear(k, f, &forms, f.n)
}

/// The first catalecticant matrix: row `i` holds the coefficients of `∂_i f`
/// on the ordered monomial basis of `S_{n,d-1}`.
pub fn catalecticant<K: Field>(k: &K, f: &HomogPoly<K::Elem>) -> Matrix<K::Elem> {
    assert!(f.d >= 1, "catalecticant needs positive degree");
    let basis = MonomialBasis::new(f.n, f.d - 1);
    catalecticant_in(k, f, &basis)
}

pub fn catalecticant_in<K: Field>(k: &K, f: &HomogPoly<K::Elem>, basis: &MonomialBasis) -> Matrix<K::Elem> {
    let mut m = Matrix::zeros(k, f.n, basis.len());
    for (t, a) in &f.terms {
        for i in 0..f.n {
            if t.0[i] == 0 {
                continue;
            }
            let mut u = t.clone();
            u.0[i] -= 1;
            let j = basis.index_of(&u).unwrap();
            m[(i, j)] = k.mul(a, &k.from_i64(t.0[i] as i64));
        }
    }
    m
}

#[cfg(test)]
mod tests;
