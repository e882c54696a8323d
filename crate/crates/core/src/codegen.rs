//! Construction of the codes `C_ρ^{n,d}(α^(1), ..., α^(d))` as apolar
//! complements of products of Frobenius-twisted linear operators.

use serde::Serialize;

use crate::combin::nondecreasing_tuples;
use crate::error::{Error, Result};
use crate::essrank::{require_char, EssCode};
use crate::galois::{ExtElem, ExtField, LBasis};
use crate::linalg::Matrix;
use crate::orbits;
use crate::polyring::{self, DiffOp};
use crate::Field;

#[derive(Clone, Debug)]
pub struct CodeParams {
    ext: ExtField,
    d: usize,
    rho: usize,
    bases: Vec<LBasis>,
}

impl CodeParams {
    /// All `d` bases equal to `alpha`.
    pub fn equal(ext: &ExtField, d: usize, rho: usize, alpha: LBasis) -> Result<Self> {
        Self::distinct(ext, d, rho, vec![alpha; d])
    }

    pub fn distinct(ext: &ExtField, d: usize, rho: usize, bases: Vec<LBasis>) -> Result<Self> {
        let n = ext.n();
        if d < 1 {
            return Err(Error::domain("degree must be positive"));
        }
        if rho < 1 || rho > n {
            return Err(Error::domain(format!("designed distance {rho} outside 1..={n}")));
        }
        if bases.len() != d {
            return Err(Error::LengthMismatch {
                expected: d,
                got: bases.len(),
            });
        }
        if bases.iter().any(|b| b.len() != n) {
            return Err(Error::SingularBasis);
        }
        Ok(CodeParams {
            ext: ext.clone(),
            d,
            rho,
            bases,
        })
    }

    pub fn ext(&self) -> &ExtField {
        &self.ext
    }

    pub fn n(&self) -> usize {
        self.ext.n()
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn rho(&self) -> usize {
        self.rho
    }

    pub fn bases(&self) -> &[LBasis] {
        &self.bases
    }

    pub fn equal_bases(&self) -> bool {
        self.bases.iter().all(|b| b == &self.bases[0])
    }
}

/// `(0, r_2, ..., r_k)` with `0 ≤ r_2 ≤ ... ≤ r_k ≤ ρ-2`, lexicographically.
/// Empty when `ρ < 2`.
pub fn x_set(k: usize, rho: usize) -> Vec<Vec<usize>> {
    assert!(k >= 1, "tuples need at least one entry");
    if rho < 2 {
        return Vec::new();
    }
    nondecreasing_tuples(k - 1, 0, rho - 2)
        .into_iter()
        .map(|t| {
            let mut v = Vec::with_capacity(k);
            v.push(0);
            v.extend(t);
            v
        })
        .collect()
}

fn twisted(ext: &ExtField, b: &LBasis, r: usize) -> Vec<ExtElem> {
    ext.frob_vec(b.elements(), r as i64)
}

/// All tuples in `{0, ..., ρ-2}^len`, last entry varying fastest.
fn cube(len: usize, rho: usize) -> Vec<Vec<usize>> {
    if rho < 2 {
        return Vec::new();
    }
    let side = rho - 1;
    let total = side.pow(len as u32);
    (0..total)
        .map(|mut idx| {
            let mut t = vec![0; len];
            for x in t.iter_mut().rev() {
                *x = idx % side;
                idx /= side;
            }
            t
        })
        .collect()
}

pub fn defining_operators(params: &CodeParams) -> Vec<DiffOp<ExtElem>> {
    let ext = &params.ext;
    let d = params.d;
    if params.equal_bases() {
        let alpha = &params.bases[0];
        x_set(d, params.rho)
            .iter()
            .map(|r| {
                let forms: Vec<_> = r.iter().map(|&rj| twisted(ext, alpha, rj)).collect();
                polyring::product_of_linear_diffops(ext, &forms)
            })
            .collect()
    } else {
        cube(d - 1, params.rho)
            .iter()
            .map(|r| {
                let mut forms = vec![params.bases[0].elements().to_vec()];
                for (j, &rj) in r.iter().enumerate() {
                    forms.push(twisted(ext, &params.bases[j + 1], rj));
                }
                polyring::product_of_linear_diffops(ext, &forms)
            })
            .collect()
    }
}

/// `∏_j σ^{r_j}(α^(j))(∂)` over every `r ∈ {0, ..., ρ-2}^d`.
pub fn unreduced_operators(params: &CodeParams) -> Vec<DiffOp<ExtElem>> {
    let ext = &params.ext;
    cube(params.d, params.rho)
        .iter()
        .map(|r| {
            let forms: Vec<_> = r
                .iter()
                .zip(&params.bases)
                .map(|(&rj, b)| twisted(ext, b, rj))
                .collect();
            polyring::product_of_linear_diffops(ext, &forms)
        })
        .collect()
}

pub fn construct_code(params: &CodeParams) -> Result<EssCode> {
    let k = params.ext.base();
    require_char(k, params.d)?;
    let (n, d) = (params.n(), params.d);
    let ops = defining_operators(params);
    let basis = polyring::perp_in_s(&params.ext, &ops, n, d);
    EssCode::from_polys(k, n, d, &basis, Some(params.rho))
}

pub fn generator_matrix(code: &EssCode) -> Matrix<crate::galois::Fq> {
    code.generator_matrix()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ConjectureReport {
    pub n: usize,
    pub d: usize,
    pub rho: usize,
    pub actual_codim: u128,
    pub predicted_codim: u128,
    pub matches: bool,
}

/// Compares the codimension of `C_ρ^{n,d}(α)` with `n` times the number of
/// shift orbits of multisets drawn from `{0, ..., ρ-2}`.
pub fn codim_conjecture_report(params: &CodeParams, orbit_budget: u128) -> Result<ConjectureReport> {
    if !params.equal_bases() {
        return Err(Error::domain("the codimension comparison needs equal bases"));
    }
    let code = construct_code(params)?;
    let (n, d, rho) = (params.n(), params.d, params.rho);
    let predicted = if rho < 2 {
        0
    } else {
        n as u128 * orbits::orbit_count_bruteforce(n, d, rho - 2, orbit_budget)?
    };
    let actual = code.codim() as u128;
    Ok(ConjectureReport {
        n,
        d,
        rho,
        actual_codim: actual,
        predicted_codim: predicted,
        matches: actual == predicted,
    })
}

/// A random `F`-basis of `L`.
pub fn random_basis<R: rand::Rng + ?Sized>(ext: &ExtField, rng: &mut R) -> LBasis {
    loop {
        let elems: Vec<ExtElem> = (0..ext.n()).map(|_| ext.random(rng)).collect();
        if let Ok(b) = LBasis::from_elements(ext, elems, crate::galois::BasisKind::Arbitrary) {
            return b;
        }
    }
}
