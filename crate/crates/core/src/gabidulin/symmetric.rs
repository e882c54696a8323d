use crate::error::{Error, Result};
use crate::field::Field;
use crate::galois::{dual_basis, orthogonal_vector, ExtElem, ExtField, Fq, LBasis};
use crate::linalg::{self, Matrix};

/// `Σ_k μ_k σ^k` with integer exponents, as an `F`-endomorphism of `L`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SkewEndo {
    pub terms: Vec<(i64, ExtElem)>,
}

impl SkewEndo {
    pub fn eval(&self, ext: &ExtField, x: &ExtElem) -> ExtElem {
        self.terms
            .iter()
            .fold(ext.zero(), |acc, (k, mu)| ext.add(&acc, &ext.mul(mu, &ext.frob(x, *k))))
    }

    /// Applies `(μσ^k)ᵀ = σ^{-k}(μ)σ^{-k}` termwise.
    pub fn transpose(&self, ext: &ExtField) -> SkewEndo {
        SkewEndo {
            terms: self.terms.iter().map(|(k, mu)| (-k, ext.frob(mu, -k))).collect(),
        }
    }
}

/// `M_ij = Tr(φ(α_i) α_j)`.
pub fn endomorphism_matrix(ext: &ExtField, alpha: &LBasis, phi: &SkewEndo) -> Matrix<Fq> {
    let a = alpha.elements();
    let images: Vec<ExtElem> = a.iter().map(|x| phi.eval(ext, x)).collect();
    Matrix::from_fn(a.len(), a.len(), |i, j| ext.trace(&ext.mul(&images[i], &a[j])))
}

fn flatten(m: &Matrix<Fq>) -> Vec<Fq> {
    m.to_rows().concat()
}

fn unflatten(n: usize, v: &[Fq]) -> Matrix<Fq> {
    Matrix::from_fn(n, n, |i, j| v[i * n + j])
}

/// RREF basis of the span of `ms`, flattened row-major.
pub(crate) fn canonical_matrix_span(k: &crate::galois::BaseField, n: usize, ms: &[Matrix<Fq>]) -> Vec<Matrix<Fq>> {
    linalg::row_space(k, n * n, ms.iter().map(flatten).collect())
        .iter()
        .map(|v| unflatten(n, v))
        .collect()
}

/// Symmetric `M` with `σ^i(γ)·M·βᵀ = 0` for `i = -(n-2-ℓ), ..., -ℓ`, where
/// `β` is the trace-dual of `α` and `γ ⊥ σ^i(α)` for `i = 0, ..., n-2`.
pub fn symmetric_gabidulin_d2(ext: &ExtField, alpha: &LBasis, ell: usize) -> Result<Vec<Matrix<Fq>>> {
    let k = ext.base();
    let n = ext.n();
    if k.p() == 2 {
        return Err(Error::domain("symmetric codes need odd characteristic"));
    }
    if n < 2 || 2 * ell > n - 2 {
        return Err(Error::domain(format!("need 2ℓ ≤ n - 2, got ℓ={ell}, n={n}")));
    }
    let (beta, gamma) = symmetric_data(ext, alpha)?;
    let beta = beta.elements();
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|a| (a..n).map(move |b| (a, b))).collect();
    let exps: Vec<i64> = (ell as i64..=(n - 2 - ell) as i64).map(|e| -e).collect();
    let mut rows = Vec::with_capacity(exps.len() * n);
    for &i in &exps {
        let g = ext.frob_vec(&gamma, i);
        let cols: Vec<ExtElem> = pairs
            .iter()
            .map(|&(a, b)| {
                let x = ext.mul(&g[a], &beta[b]);
                if a == b {
                    x
                } else {
                    ext.add(&x, &ext.mul(&g[b], &beta[a]))
                }
            })
            .collect();
        for r in 0..n {
            rows.push(cols.iter().map(|c| c.coords()[r]).collect());
        }
    }
    let ker = linalg::kernel(k, &Matrix::from_rows(pairs.len(), rows));
    let ms: Vec<Matrix<Fq>> = ker
        .iter()
        .map(|v| {
            let mut m = Matrix::zeros(k, n, n);
            for (&(a, b), x) in pairs.iter().zip(v) {
                m[(a, b)] = *x;
                m[(b, a)] = *x;
            }
            m
        })
        .collect();
    Ok(canonical_matrix_span(k, n, &ms))
}

/// `(β, γ)`: the trace-dual basis of `α` and the vector orthogonal to
/// `σ^i(α)` for `i = 0, ..., n-2`.
pub fn symmetric_data(ext: &ExtField, alpha: &LBasis) -> Result<(LBasis, Vec<ExtElem>)> {
    let beta = dual_basis(ext, alpha)?;
    let gamma = orthogonal_vector(ext, alpha.elements(), ext.n() as i64 - 1)?;
    Ok((beta, gamma))
}

/// Outcome of comparing the symmetric-matrix description with the
/// catalecticant image of the matching two-basis code.
#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize)]
pub struct SymmetricCheck {
    pub n: usize,
    pub ell: usize,
    pub dimension: usize,
    pub expected_dimension: usize,
    pub code_dimension: usize,
    pub equal: bool,
}

/// Builds `C_{n-2ℓ}^{n,2}(σ^{n-2-ℓ}(β), γ)` and compares the span of its
/// catalecticants with [`symmetric_gabidulin_d2`].
pub fn verify_symmetric(ext: &ExtField, alpha: &LBasis, ell: usize) -> Result<SymmetricCheck> {
    let k = ext.base();
    let n = ext.n();
    let sym = symmetric_gabidulin_d2(ext, alpha, ell)?;
    let (beta, gamma) = symmetric_data(ext, alpha)?;
    let first = beta.frob(ext, (n - 2 - ell) as i64);
    let second = LBasis::from_elements(ext, gamma, crate::galois::BasisKind::Arbitrary)?;
    let params = crate::codegen::CodeParams::distinct(ext, 2, n - 2 * ell, vec![first, second])?;
    let code = crate::codegen::construct_code(&params)?;
    let cats: Vec<Matrix<Fq>> = code
        .basis()
        .iter()
        .map(|f| crate::polyring::catalecticant(k, f))
        .collect();
    let image = canonical_matrix_span(k, n, &cats);
    Ok(SymmetricCheck {
        n,
        ell,
        dimension: sym.len(),
        expected_dimension: n * (ell + 1),
        code_dimension: code.k(),
        equal: image == sym,
    })
}
