use super::base::Fq;
use super::ext::{ExtElem, ExtField};
use crate::error::{Error, Result};
use crate::field::Field;
use crate::linalg::{self, Matrix};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BasisKind {
    Arbitrary,
    Normal,
    Power,
}

/// An `F`-basis `α = (α_1, ..., α_n)` of `L`.
#[derive(Clone, Debug)]
pub struct LBasis {
    elems: Vec<ExtElem>,
    kind: BasisKind,
    /// Inverse of the matrix whose row `i` holds the coordinates of `α_i`.
    inv: Matrix<Fq>,
}

impl PartialEq for LBasis {
    fn eq(&self, other: &Self) -> bool {
        self.elems == other.elems
    }
}
impl Eq for LBasis {}

impl LBasis {
    pub fn from_elements(ext: &ExtField, elems: Vec<ExtElem>, kind: BasisKind) -> Result<Self> {
        if elems.len() != ext.n() {
            return Err(Error::LengthMismatch {
                expected: ext.n(),
                got: elems.len(),
            });
        }
        let rows = Matrix::from_rows(ext.n(), elems.iter().map(|e| e.coords().to_vec()).collect());
        let inv = linalg::inverse(ext.base(), &rows).ok_or(Error::SingularBasis)?;
        Ok(LBasis { elems, kind, inv })
    }

    /// `(1, t, ..., t^{n-1})`.
    pub fn power(ext: &ExtField) -> Self {
        let t = ext.generator();
        let mut elems = Vec::with_capacity(ext.n());
        let mut x = ext.one();
        for _ in 0..ext.n() {
            elems.push(x.clone());
            x = ext.mul(&x, &t);
        }
        Self::from_elements(ext, elems, BasisKind::Power).expect("power basis is a basis")
    }

    /// The normal basis `(x, σ(x), ..., σ^{n-1}(x))` for the first `x` in
    /// enumeration order that generates one.
    pub fn normal(ext: &ExtField) -> Result<Self> {
        let total = ext.order().unwrap_or(u128::MAX);
        for idx in 1..total {
            let x = ext.element(idx);
            let elems: Vec<ExtElem> = (0..ext.n()).map(|i| ext.frob(&x, i as i64)).collect();
            if let Ok(b) = Self::from_elements(ext, elems, BasisKind::Normal) {
                return Ok(b);
            }
        }
        Err(Error::SingularBasis)
    }

    pub fn elements(&self) -> &[ExtElem] {
        &self.elems
    }

    pub fn kind(&self) -> BasisKind {
        self.kind
    }

    pub fn len(&self) -> usize {
        self.elems.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elems.is_empty()
    }

    /// The unique `c ∈ F^n` with `x = Σ c_i α_i`.
    pub fn coords_of(&self, ext: &ExtField, x: &ExtElem) -> Vec<Fq> {
        let k = ext.base();
        let n = ext.n();
        let mut out = vec![k.zero(); n];
        for (j, c) in x.coords().iter().enumerate() {
            if k.is_zero(c) {
                continue;
            }
            let row = self.inv.row(j);
            for i in 0..n {
                out[i] = k.mul_add(&out[i], c, &row[i]);
            }
        }
        out
    }

    /// `Σ c_i α_i`.
    pub fn combine(&self, ext: &ExtField, c: &[Fq]) -> ExtElem {
        let mut acc = ext.zero();
        for (ci, a) in c.iter().zip(&self.elems) {
            if !ext.base().is_zero(ci) {
                acc = ext.add(&acc, &ext.mul(&ext.from_base(*ci), a));
            }
        }
        acc
    }

    /// `σ^i(α)`, again a basis.
    pub fn frob(&self, ext: &ExtField, i: i64) -> Self {
        let kind = match self.kind {
            BasisKind::Normal => BasisKind::Normal,
            _ => BasisKind::Arbitrary,
        };
        let kind = if i.rem_euclid(ext.n() as i64) == 0 {
            self.kind
        } else {
            kind
        };
        Self::from_elements(ext, ext.frob_vec(&self.elems, i), kind).expect("Frobenius image of a basis is a basis")
    }
}

/// `σ^i(x)`.
pub fn frobenius(ext: &ExtField, x: &ExtElem, i: i64) -> ExtElem {
    ext.frob(x, i)
}

/// `Tr_{L/F}(x)`.
pub fn trace(ext: &ExtField, x: &ExtElem) -> Fq {
    ext.trace(x)
}

/// The `rows × m` matrix with entries `σ^i(v_j)`.
pub fn moore_matrix(ext: &ExtField, v: &[ExtElem], rows: usize) -> Matrix<ExtElem> {
    let mut data = Vec::with_capacity(rows);
    for i in 0..rows {
        data.push(ext.frob_vec(v, i as i64));
    }
    Matrix::from_rows(v.len(), data)
}

/// The basis `β` with `Tr(α_i β_j) = δ_ij`.
pub fn dual_basis(ext: &ExtField, alpha: &LBasis) -> Result<LBasis> {
    let n = ext.n();
    let t = LBasis::power(ext);
    let gram = Matrix::from_fn(n, n, |i, k| ext.trace(&ext.mul(&alpha.elements()[i], &t.elements()[k])));
    // β_j = Σ_k B_jk t^k with T·Bᵀ = I.
    let tinv = linalg::inverse(ext.base(), &gram).ok_or(Error::SingularBasis)?;
    let elems = (0..n).map(|j| ext.from_coords(&tinv.column(j)).unwrap()).collect();
    LBasis::from_elements(ext, elems, BasisKind::Arbitrary)
}

/// The nonzero `γ ∈ L^n`, unique up to scaling, with
/// `Σ_j σ^i(v_j) γ_j = 0` for every `i ∈ {0, ..., n-1}` except `skip`
/// (taken mod `n`). The first nonzero coordinate is scaled to 1.
pub fn orthogonal_vector(ext: &ExtField, v: &[ExtElem], skip: i64) -> Result<Vec<ExtElem>> {
    let n = ext.n();
    if v.len() != n {
        return Err(Error::LengthMismatch {
            expected: n,
            got: v.len(),
        });
    }
    let skip = skip.rem_euclid(n as i64) as usize;
    let rows: Vec<Vec<ExtElem>> = (0..n)
        .filter(|&i| i != skip)
        .map(|i| ext.frob_vec(v, i as i64))
        .collect();
    let m = Matrix::from_rows(n, rows);
    let ker = linalg::kernel(ext, &m);
    if ker.len() != 1 {
        return Err(Error::SingularBasis);
    }
    let mut g = ker.into_iter().next().unwrap();
    let lead = g.iter().find(|x| !ext.is_zero(x)).cloned().unwrap();
    let li = ext.inv(&lead).unwrap();
    for x in g.iter_mut() {
        *x = ext.mul(x, &li);
    }
    Ok(g)
}

/// The evaluation vector `γ` of a Gabidulin code with parity-check rows
/// `σ^i(β)`, `i = 0, ..., ρ-2`: orthogonal to `σ^i(β)` for every `i` other
/// than `ρ - 1` (mod `n`).
pub fn solve_gamma(ext: &ExtField, beta: &LBasis, rho: usize) -> Result<Vec<ExtElem>> {
    if rho < 2 || rho > ext.n() {
        return Err(Error::domain(format!("rho must lie in 2..={}, got {rho}", ext.n())));
    }
    orthogonal_vector(ext, beta.elements(), rho as i64 - 1)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::galois::BaseField;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn f625() -> ExtField {
        let f5 = BaseField::prime(5).unwrap();
        let m = [2, 4, 4, 0, 1].iter().map(|&c| f5.from_i64(c)).collect();
        ExtField::new(f5, m, 1).unwrap()
    }

    #[test]
    fn moore_small_cases() {
        let l = f625();
        let one = moore_matrix(&l, &[l.one()], 1);
        assert_eq!(one.to_rows(), vec![vec![l.one()]]);
        let p = LBasis::power(&l);
        let m = moore_matrix(&l, p.elements(), 4);
        assert!(!l.is_zero(&linalg::determinant(&l, &m)));
        let m = moore_matrix(&l, &[l.one(), l.one()], 2);
        assert!(l.is_zero(&linalg::determinant(&l, &m)));
    }

    #[test]
    fn moore_invertible_iff_independent() {
        let l = f625();
        let mut rng = ChaCha8Rng::seed_from_u64(9);
        let mut seen_dep = 0;
        for trial in 0..300 {
            let mut v: Vec<ExtElem> = (0..4).map(|_| l.random(&mut rng)).collect();
            if trial % 3 == 0 {
                // force a dependency
                let c = l.from_i64(trial as i64);
                v[3] = l.add(&v[0], &l.mul(&c, &v[1]));
            }
            let indep = linalg::rank(l.base(), &l.coord_matrix(&v)) == 4;
            let inv = !l.is_zero(&linalg::determinant(&l, &moore_matrix(&l, &v, 4)));
            assert_eq!(indep, inv);
            seen_dep += (!indep) as usize;
        }
        assert!(seen_dep >= 100);
    }

    #[test]
    fn dual_basis_properties() {
        let l = f625();
        let a = LBasis::power(&l);
        let b = dual_basis(&l, &a).unwrap();
        for i in 0..4 {
            for j in 0..4 {
                let t = l.trace(&l.mul(&a.elements()[i], &b.elements()[j]));
                assert_eq!(t, l.base().from_i64((i == j) as i64));
            }
        }
        assert_eq!(dual_basis(&l, &b).unwrap(), a);
        let n = LBasis::normal(&l).unwrap();
        assert_eq!(dual_basis(&l, &dual_basis(&l, &n).unwrap()).unwrap(), n);
    }

    #[test]
    fn dual_basis_degree_one() {
        let l = ExtField::search(BaseField::prime(7).unwrap(), 1, 1).unwrap();
        let a = LBasis::power(&l);
        assert_eq!(dual_basis(&l, &a).unwrap().elements(), &[l.one()]);
    }

    #[test]
    fn coords_round_trip() {
        let l = f625();
        let b = LBasis::normal(&l).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for _ in 0..100 {
            let x = l.random(&mut rng);
            assert_eq!(b.combine(&l, &b.coords_of(&l, &x)), x);
        }
    }

    #[test]
    fn gamma_relations() {
        let l = f625();
        let beta = LBasis::power(&l);
        for rho in 2..=4 {
            let g = solve_gamma(&l, &beta, rho).unwrap();
            let first = g.iter().find(|x| !l.is_zero(x)).unwrap();
            assert!(l.is_one(first));
            for i in 0..4i64 {
                let s = l
                    .frob_vec(beta.elements(), i)
                    .iter()
                    .zip(&g)
                    .fold(l.zero(), |acc, (b, c)| l.add(&acc, &l.mul(b, c)));
                assert_eq!(l.is_zero(&s), i != rho as i64 - 1, "rho={rho} i={i}");
            }
            // γ is itself a basis
            assert!(LBasis::from_elements(&l, g, BasisKind::Arbitrary).is_ok());
        }
        assert!(solve_gamma(&l, &beta, 1).is_err());
    }
}
