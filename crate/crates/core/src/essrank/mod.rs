//! Essential rank, spaces of essential variables and code-level quantities.

mod bounds;
mod brute;
mod scan;

use crate::error::{Error, Result};
use crate::field::Field;
use crate::galois::{BaseField, Fq};
use crate::linalg::{self, Matrix};
use crate::polyring::{self, HomogPoly, MonomialBasis};

pub use bounds::{dim_lower_bound_s, inherited_bound, schmidt_bound, singleton_like_bound};
pub use brute::{ess_rank_bruteforce, subspace_count};
pub use scan::{code_min_distance_bruteforce, scan_range, ScanConfig, ScanPartial};

/// Fails unless the characteristic exceeds `d`.
pub fn require_char(k: &BaseField, d: usize) -> Result<()> {
    if (k.p() as usize) <= d {
        Err(Error::CharTooSmall { p: k.p(), d })
    } else {
        Ok(())
    }
}

/// A subspace of linear forms `S_{n,1}(F)`, kept as an RREF basis of
/// coefficient vectors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinSpan {
    n: usize,
    basis: Vec<Vec<Fq>>,
}

impl LinSpan {
    pub fn new(k: &BaseField, n: usize, vectors: Vec<Vec<Fq>>) -> Self {
        LinSpan {
            n,
            basis: linalg::row_space(k, n, vectors),
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Vec<Fq>] {
        &self.basis
    }

    pub fn forms(&self, k: &BaseField) -> Vec<HomogPoly<Fq>> {
        self.basis.iter().map(|v| polyring::linear_form(k, v)).collect()
    }

    pub fn contains(&self, k: &BaseField, v: &[Fq]) -> bool {
        let mut rows = self.basis.clone();
        rows.push(v.to_vec());
        linalg::row_space(k, self.n, rows).len() == self.basis.len()
    }

    pub fn sum(&self, k: &BaseField, other: &LinSpan) -> LinSpan {
        let mut rows = self.basis.clone();
        rows.extend(other.basis.iter().cloned());
        LinSpan::new(k, self.n, rows)
    }

    pub fn is_subspace_of(&self, k: &BaseField, other: &LinSpan) -> bool {
        self.basis.iter().all(|v| other.contains(k, v))
    }
}

/// `ess(f)`, computed as the rank of the first catalecticant matrix.
pub fn ess_rank(k: &BaseField, f: &HomogPoly<Fq>) -> Result<usize> {
    require_char(k, f.d())?;
    if f.d() == 0 {
        return Ok(0);
    }
    Ok(linalg::rank(k, &polyring::catalecticant(k, f)))
}

/// `V_ess(f)`: the span of all order-`(d-1)` derivatives of `f`, i.e. the
/// column space of the catalecticant read as linear forms.
pub fn ess_variables(k: &BaseField, f: &HomogPoly<Fq>) -> Result<LinSpan> {
    require_char(k, f.d())?;
    if f.d() == 0 {
        return Ok(LinSpan::new(k, f.n(), Vec::new()));
    }
    let c = polyring::catalecticant(k, f);
    Ok(LinSpan::new(k, f.n(), c.transpose().to_rows()))
}

/// An `F`-linear subspace of `S_{n,d}(F)` with a canonical RREF basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EssCode {
    field: BaseField,
    n: usize,
    d: usize,
    basis: Vec<HomogPoly<Fq>>,
    rho: Option<usize>,
}

impl EssCode {
    /// The span of `polys`, brought into canonical form.
    pub fn from_polys(k: &BaseField, n: usize, d: usize, polys: &[HomogPoly<Fq>], rho: Option<usize>) -> Result<Self> {
        let mb = MonomialBasis::new(n, d);
        let mut rows = Vec::with_capacity(polys.len());
        for p in polys {
            if p.n() != n || p.d() != d {
                return Err(Error::domain("codeword shape does not match the code"));
            }
            rows.push(p.to_dense_in(k, &mb));
        }
        let basis = linalg::row_space(k, mb.len(), rows)
            .iter()
            .map(|v| HomogPoly::from_dense(k, &mb, v))
            .collect();
        Ok(EssCode {
            field: k.clone(),
            n,
            d,
            basis,
            rho,
        })
    }

    /// The code whose generator matrix has the given rows.
    pub fn from_generator(k: &BaseField, n: usize, d: usize, g: &Matrix<Fq>, rho: Option<usize>) -> Result<Self> {
        let mb = MonomialBasis::new(n, d);
        if g.cols() != mb.len() {
            return Err(Error::LengthMismatch {
                expected: mb.len(),
                got: g.cols(),
            });
        }
        let polys: Vec<_> = g.to_rows().iter().map(|r| HomogPoly::from_dense(k, &mb, r)).collect();
        Self::from_polys(k, n, d, &polys, rho)
    }

    pub fn field(&self) -> &BaseField {
        &self.field
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn k(&self) -> usize {
        self.basis.len()
    }

    pub fn rho(&self) -> Option<usize> {
        self.rho
    }

    pub fn basis(&self) -> &[HomogPoly<Fq>] {
        &self.basis
    }

    /// Dimension of the ambient space minus `k`.
    pub fn codim(&self) -> usize {
        polyring::num_monomials(self.n, self.d) - self.k()
    }

    /// The `k × C(n+d-1, d)` RREF generator matrix.
    pub fn generator_matrix(&self) -> Matrix<Fq> {
        let mb = MonomialBasis::new(self.n, self.d);
        Matrix::from_rows(
            mb.len(),
            self.basis.iter().map(|p| p.to_dense_in(&self.field, &mb)).collect(),
        )
    }

    /// `Σ m_i · basis_i`.
    pub fn encode(&self, message: &[Fq]) -> Result<HomogPoly<Fq>> {
        if message.len() != self.k() {
            return Err(Error::LengthMismatch {
                expected: self.k(),
                got: message.len(),
            });
        }
        let k = &self.field;
        let mut acc = HomogPoly::zero(self.n, self.d);
        for (m, b) in message.iter().zip(&self.basis) {
            if !k.is_zero(m) {
                acc = acc.add(k, &b.scale(k, m));
            }
        }
        Ok(acc)
    }

    /// Recovers the message of a codeword from its pivot coordinates;
    /// `None` if `f` is not in the code.
    pub fn unencode(&self, f: &HomogPoly<Fq>) -> Option<Vec<Fq>> {
        let k = &self.field;
        let mb = MonomialBasis::new(self.n, self.d);
        let v = f.to_dense_in(k, &mb);
        let g = self.generator_matrix();
        let msg: Vec<Fq> = (0..self.k())
            .map(|i| {
                let pivot = g.row(i).iter().position(|x| !k.is_zero(x)).unwrap();
                v[pivot]
            })
            .collect();
        (self.encode(&msg).ok()? == *f).then_some(msg)
    }

    pub fn contains(&self, f: &HomogPoly<Fq>) -> bool {
        self.unencode(f).is_some()
    }
}

/// `V_ess(C)`, the sum of `V_ess(f)` over the basis codewords.
pub fn code_ess_variables(code: &EssCode) -> Result<LinSpan> {
    let k = code.field();
    require_char(k, code.d())?;
    let mut span = LinSpan::new(k, code.n(), Vec::new());
    for f in code.basis() {
        span = span.sum(k, &ess_variables(k, f)?);
    }
    Ok(span)
}

pub fn is_nondegenerate(code: &EssCode) -> Result<bool> {
    Ok(code_ess_variables(code)?.dim() == code.n())
}

/// `λ·C·A = {λ f(x·A) : f ∈ C}` in canonical form.
pub fn apply_equivalence(code: &EssCode, a: &Matrix<Fq>, lambda: Fq) -> Result<EssCode> {
    let k = code.field();
    if a.rows() != code.n() || a.cols() != code.n() || linalg::rank(k, a) != code.n() {
        return Err(Error::SingularMatrix);
    }
    if k.is_zero(&lambda) {
        return Err(Error::domain("scalar must be nonzero"));
    }
    let polys: Vec<_> = code
        .basis()
        .iter()
        .map(|f| polyring::substitute(k, f, a).scale(k, &lambda))
        .collect();
    EssCode::from_polys(k, code.n(), code.d(), &polys, code.rho())
}
