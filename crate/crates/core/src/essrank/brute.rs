use super::require_char;
use crate::error::{Error, Result};
use crate::field::Field;
use crate::galois::{BaseField, Fq};
use crate::linalg::{self, Matrix};
use crate::polyring::{self, HomogPoly, MonomialBasis};

/// Number of `r`-dimensional subspaces of `F_q^n` (the Gaussian binomial).
pub fn subspace_count(q: u128, n: usize, r: usize) -> u128 {
    if r > n {
        return 0;
    }
    let mut num: u128 = 1;
    let mut den: u128 = 1;
    for i in 0..r {
        num = num.saturating_mul(q.saturating_pow((n - i) as u32) - 1);
        den = den.saturating_mul(q.saturating_pow((i + 1) as u32) - 1);
    }
    if num == u128::MAX {
        return u128::MAX;
    }
    num / den
}

/// Calls `visit` with the RREF row basis of every `r`-dimensional subspace
/// of `F^n`; stops early when `visit` returns true.
fn for_each_subspace(k: &BaseField, n: usize, r: usize, visit: &mut dyn FnMut(&[Vec<Fq>]) -> bool) -> bool {
    fn pivots_rec(
        k: &BaseField,
        n: usize,
        r: usize,
        start: usize,
        piv: &mut Vec<usize>,
        visit: &mut dyn FnMut(&[Vec<Fq>]) -> bool,
    ) -> bool {
        if piv.len() == r {
            // Free positions: (row, col) with col > pivot of row, col not a pivot.
            let free: Vec<(usize, usize)> = (0..r)
                .flat_map(|i| {
                    let piv = piv.clone();
                    ((piv[i] + 1)..n).filter(move |c| !piv.contains(c)).map(move |c| (i, c))
                })
                .collect();
            let q = k.size() as u128;
            let total = q.pow(free.len() as u32);
            let mut rows = vec![vec![k.zero(); n]; r];
            for (i, &p) in piv.iter().enumerate() {
                rows[i][p] = k.one();
            }
            for idx in 0..total {
                let mut v = idx;
                for &(i, c) in &free {
                    rows[i][c] = k.element((v % q) as u32);
                    v /= q;
                }
                if visit(&rows) {
                    return true;
                }
            }
            return false;
        }
        for p in start..n {
            piv.push(p);
            if pivots_rec(k, n, r, p + 1, piv, visit) {
                return true;
            }
            piv.pop();
        }
        false
    }
    pivots_rec(k, n, r, 0, &mut Vec::with_capacity(r), visit)
}

/// Whether `f` lies in `F[ℓ_1, ..., ℓ_r]`.
fn in_subalgebra(k: &BaseField, f: &[Fq], forms: &[Vec<Fq>], n: usize, d: usize) -> bool {
    let r = forms.len();
    let target = MonomialBasis::new(n, d);
    let source = MonomialBasis::new(r, d);
    let mut cols: Vec<Vec<Fq>> = source
        .monomials()
        .iter()
        .map(|m| {
            let g = HomogPoly::from_terms(k, r, d, [(m.clone(), k.one())]);
            polyring::compose_linear(k, &g, forms, n).to_dense_in(k, &target)
        })
        .collect();
    let base = linalg::rank(k, &Matrix::from_rows(target.len(), cols.clone()));
    cols.push(f.to_vec());
    linalg::rank(k, &Matrix::from_rows(target.len(), cols)) == base
}

/// `ess(f)` straight from the definition: the least `r` such that `f` is a
/// polynomial in some `r` linear forms, found by enumerating subspaces.
pub fn ess_rank_bruteforce(k: &BaseField, f: &HomogPoly<Fq>, budget: u128) -> Result<usize> {
    require_char(k, f.d())?;
    if f.is_zero() {
        return Ok(0);
    }
    let n = f.n();
    let q = k.size() as u128;
    let needed = (0..=n).fold(0u128, |acc, r| acc.saturating_add(subspace_count(q, n, r)));
    if needed > budget {
        return Err(Error::TooLarge { needed, budget });
    }
    if f.d() == 0 {
        return Ok(0);
    }
    let dense = f.to_dense(k);
    for r in 1..=n {
        let found = for_each_subspace(k, n, r, &mut |rows| in_subalgebra(k, &dense, rows, n, f.d()));
        if found {
            return Ok(r);
        }
    }
    unreachable!("every polynomial is a polynomial in x1..xn")
}
