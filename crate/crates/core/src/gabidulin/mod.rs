//! Gabidulin codes in `L^n` with parity-check rows `σ^i(β)` and a
//! syndrome decoder up to half the designed rank distance.

mod symmetric;

pub use symmetric::{
    endomorphism_matrix, symmetric_data, symmetric_gabidulin_d2, verify_symmetric, SkewEndo, SymmetricCheck,
};

use crate::error::{Error, Result};
use crate::field::Field;
use crate::galois::{solve_gamma, ExtElem, ExtField, Fq, LBasis};
use crate::linalg::{self, Matrix, Solution};

/// `dim_F ⟨v_1, ..., v_n⟩`.
pub fn rank_weight(ext: &ExtField, v: &[ExtElem]) -> usize {
    if v.is_empty() {
        return 0;
    }
    linalg::rank(ext.base(), &ext.coord_matrix(v))
}

/// `Σ f_i σ^i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SkewPoly {
    coeffs: Vec<ExtElem>,
}

impl SkewPoly {
    pub fn new(ext: &ExtField, mut coeffs: Vec<ExtElem>) -> Self {
        while coeffs.last().is_some_and(|c| ext.is_zero(c)) {
            coeffs.pop();
        }
        SkewPoly { coeffs }
    }

    pub fn zero() -> Self {
        SkewPoly { coeffs: Vec::new() }
    }

    pub fn coeffs(&self) -> &[ExtElem] {
        &self.coeffs
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn eval(&self, ext: &ExtField, x: &ExtElem) -> ExtElem {
        self.coeffs.iter().enumerate().fold(ext.zero(), |acc, (i, f)| {
            ext.add(&acc, &ext.mul(f, &ext.frob(x, i as i64)))
        })
    }

    pub fn random<R: rand::Rng + ?Sized>(ext: &ExtField, max_deg: usize, rng: &mut R) -> Self {
        Self::new(ext, (0..=max_deg).map(|_| ext.random(rng)).collect())
    }
}

#[derive(Clone, Debug)]
pub struct GabCodeCtx {
    ext: ExtField,
    rho: usize,
    beta: LBasis,
    h: Matrix<ExtElem>,
    gamma: Vec<ExtElem>,
}

impl GabCodeCtx {
    pub fn new(ext: &ExtField, beta: LBasis, rho: usize) -> Result<Self> {
        let gamma = solve_gamma(ext, &beta, rho)?;
        let rows = (0..rho - 1).map(|i| ext.frob_vec(beta.elements(), i as i64)).collect();
        Ok(GabCodeCtx {
            ext: ext.clone(),
            rho,
            h: Matrix::from_rows(ext.n(), rows),
            beta,
            gamma,
        })
    }

    pub fn ext(&self) -> &ExtField {
        &self.ext
    }

    pub fn rho(&self) -> usize {
        self.rho
    }

    pub fn beta(&self) -> &LBasis {
        &self.beta
    }

    pub fn parity_check(&self) -> &Matrix<ExtElem> {
        &self.h
    }

    pub fn gamma(&self) -> &[ExtElem] {
        &self.gamma
    }

    pub fn radius(&self) -> usize {
        (self.rho - 1) / 2
    }

    pub fn dimension(&self) -> usize {
        self.ext.n() - self.rho + 1
    }
}

pub fn gab_encode(ctx: &GabCodeCtx, f: &SkewPoly) -> Result<Vec<ExtElem>> {
    let max = ctx.dimension() - 1;
    if let Some(deg) = f.degree().filter(|&d| d > max) {
        return Err(Error::DegreeTooHigh { deg, max });
    }
    Ok(ctx.gamma.iter().map(|g| f.eval(&ctx.ext, g)).collect())
}

/// `v·Hᵀ`.
pub fn syndrome(ctx: &GabCodeCtx, v: &[ExtElem]) -> Result<Vec<ExtElem>> {
    let n = ctx.ext.n();
    if v.len() != n {
        return Err(Error::LengthMismatch {
            expected: n,
            got: v.len(),
        });
    }
    Ok(linalg::mat_vec(&ctx.ext, &ctx.h, v))
}

/// Matrix over `F` of `z ↦ Σ λ_k σ^k(z)` in power-basis coordinates
/// (column `c` is the image of `t^c`).
fn linearized_matrix(ext: &ExtField, lambda: &[ExtElem]) -> Matrix<Fq> {
    let n = ext.n();
    let k = ext.base();
    let cols: Vec<Vec<Fq>> = (0..n)
        .map(|c| {
            let mut e = vec![k.zero(); n];
            e[c] = k.one();
            let z = ext.from_coords(&e).unwrap();
            let img = lambda.iter().enumerate().fold(ext.zero(), |acc, (i, l)| {
                ext.add(&acc, &ext.mul(l, &ext.frob(&z, i as i64)))
            });
            img.coords().to_vec()
        })
        .collect();
    Matrix::from_rows(n, cols).transpose()
}

/// Attempts to explain `s` by an error of rank exactly `t` whose error
/// values are the roots of `Σ λ_k σ^k`.
fn attempt(ctx: &GabCodeCtx, s: &[ExtElem], t: usize, lambda: &[ExtElem]) -> Option<Vec<ExtElem>> {
    let ext = &ctx.ext;
    let k = ext.base();
    let n = ext.n();
    let roots = linalg::kernel(k, &linearized_matrix(ext, lambda));
    if roots.len() != t {
        return None;
    }
    let eps: Vec<ExtElem> = roots.iter().map(|c| ext.from_coords(c).unwrap()).collect();
    // σ^{-i}(s_i) = Σ_l σ^{-i}(ε_l) y_l
    let m = s.len();
    let sys = Matrix::from_fn(m, t, |i, l| ext.frob(&eps[l], -(i as i64)));
    let rhs: Vec<ExtElem> = s.iter().enumerate().map(|(i, x)| ext.frob(x, -(i as i64))).collect();
    let y = match linalg::solve(ext, &sys, &rhs) {
        Solution::Unique(y) => y,
        _ => return None,
    };
    let x: Vec<Vec<Fq>> = y.iter().map(|yl| ctx.beta.coords_of(ext, yl)).collect();
    let v: Vec<ExtElem> = (0..n)
        .map(|j| {
            (0..t).fold(ext.zero(), |acc, l| {
                ext.add(&acc, &ext.mul(&eps[l], &ext.from_base(x[l][j])))
            })
        })
        .collect();
    (syndrome(ctx, &v).ok()? == s && rank_weight(ext, &v) <= ctx.radius()).then_some(v)
}

/// The unique `v` of rank weight at most the radius with `v·Hᵀ = s`.
pub fn syndrome_decode(ctx: &GabCodeCtx, s: &[ExtElem]) -> Result<Vec<ExtElem>> {
    let ext = &ctx.ext;
    let n = ext.n();
    if s.len() != ctx.rho - 1 {
        return Err(Error::LengthMismatch {
            expected: ctx.rho - 1,
            got: s.len(),
        });
    }
    if s.iter().all(|x| ext.is_zero(x)) {
        return Ok(vec![ext.zero(); n]);
    }
    for t in 1..=ctx.radius() {
        // Σ_{k=0}^{t} λ_k σ^k(s_{i-k}) = 0 for i = t, ..., ρ-2
        let rows: Vec<Vec<ExtElem>> = (t..s.len())
            .map(|i| (0..=t).map(|k| ext.frob(&s[i - k], k as i64)).collect())
            .collect();
        let ker = linalg::kernel(ext, &Matrix::from_rows(t + 1, rows));
        for lambda in &ker {
            if let Some(v) = attempt(ctx, s, t, lambda) {
                return Ok(v);
            }
        }
    }
    Err(Error::NotDecodable)
}

#[cfg(test)]
mod tests;
