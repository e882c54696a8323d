//! Decoding `C_ρ^{n,d}(α)` up to half the designed distance: syndromes of
//! the received polynomial feed one Gabidulin decode per `r ∈ X_{d-1,ρ}`,
//! which together reveal `V_ess` of the error; the error itself is then the
//! unique solution of a linear system over `F`.

use std::collections::BTreeMap;
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::codegen::{construct_code, defining_operators, x_set, CodeParams};
use crate::error::{Error, Result};
use crate::essrank::{ess_rank, require_char, EssCode, LinSpan};
use crate::field::Field;
use crate::gabidulin::{syndrome_decode, GabCodeCtx};
use crate::galois::{ExtElem, Fq, LBasis};
use crate::linalg::{self, Matrix, Solution};
use crate::polyring::{self, Homog, HomogPoly, MonomialBasis};

/// `Z_k^u(∂)∘F` for every `u ∈ X_{k,ρ}`, `k = 1, ..., d`.
#[derive(Clone, Debug)]
pub struct SyndromeTable {
    layers: Vec<BTreeMap<Vec<usize>, HomogPoly<ExtElem>>>,
    syndromes: BTreeMap<Vec<usize>, ExtElem>,
    all_zero: bool,
}

impl SyndromeTable {
    /// `s_u`, with `u` in any order.
    pub fn get(&self, u: &[usize]) -> Option<&ExtElem> {
        let mut key = u.to_vec();
        key.sort_unstable();
        self.syndromes.get(&key)
    }

    pub fn syndromes(&self) -> &BTreeMap<Vec<usize>, ExtElem> {
        &self.syndromes
    }

    /// Layer `k` (1-based): polynomials of degree `d - k`.
    pub fn layer(&self, k: usize) -> &BTreeMap<Vec<usize>, HomogPoly<ExtElem>> {
        &self.layers[k - 1]
    }

    pub fn is_zero(&self) -> bool {
        self.all_zero
    }
}

pub fn compute_syndromes(received: &HomogPoly<Fq>, params: &CodeParams) -> Result<SyndromeTable> {
    let ext = params.ext();
    let (n, d, rho) = (params.n(), params.d(), params.rho());
    if received.n() != n || received.d() != d {
        return Err(Error::domain("received polynomial does not match the code shape"));
    }
    if !params.equal_bases() {
        return Err(Error::domain("decoding needs equal bases"));
    }
    let alpha = &params.bases()[0];
    let twists: Vec<Vec<ExtElem>> = (0..rho.saturating_sub(1))
        .map(|r| ext.frob_vec(alpha.elements(), r as i64))
        .collect();
    let mut layers: Vec<BTreeMap<Vec<usize>, HomogPoly<ExtElem>>> = Vec::with_capacity(d);
    if rho >= 2 {
        let top = polyring::promote(ext, received);
        let mut first = BTreeMap::new();
        first.insert(vec![0], polyring::apply_linear(ext, &twists[0], &top));
        layers.push(first);
        for _ in 1..d {
            let prev = layers.last().unwrap();
            let mut next = BTreeMap::new();
            for (u, p) in prev {
                for (r, tw) in twists.iter().enumerate().skip(*u.last().unwrap()) {
                    let mut key = u.clone();
                    key.push(r);
                    next.insert(key, polyring::apply_linear(ext, tw, p));
                }
            }
            layers.push(next);
        }
    }
    let syndromes: BTreeMap<Vec<usize>, ExtElem> = layers
        .last()
        .map(|last| {
            last.iter()
                .map(|(u, p)| {
                    (
                        u.clone(),
                        p.terms().next().map_or_else(|| ext.zero(), |(_, c)| c.clone()),
                    )
                })
                .collect()
        })
        .unwrap_or_default();
    let all_zero = syndromes.values().all(|x| ext.is_zero(x));
    Ok(SyndromeTable {
        layers,
        syndromes,
        all_zero,
    })
}

/// Result of a successful decode.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Decoded {
    pub codeword: HomogPoly<Fq>,
    pub error: HomogPoly<Fq>,
    pub error_ess_rank: usize,
}

/// Precomputed data for repeated decoding of one code.
#[derive(Clone, Debug)]
pub struct EssDecoder {
    params: CodeParams,
    ctx: Option<GabCodeCtx>,
    conditions: Matrix<Fq>,
}

impl EssDecoder {
    pub fn new(params: &CodeParams) -> Result<Self> {
        let ext = params.ext();
        require_char(ext.base(), params.d())?;
        if params.d() < 2 {
            return Err(Error::domain("decoding needs degree at least 2"));
        }
        if !params.equal_bases() {
            return Err(Error::domain("decoding needs equal bases"));
        }
        let rho = params.rho();
        let ctx = if rho >= 2 {
            let beta = params.bases()[0].frob(ext, 2 - rho as i64);
            Some(GabCodeCtx::new(ext, beta, rho)?)
        } else {
            None
        };
        let ops = defining_operators(params);
        let conditions = polyring::condition_matrix(ext, &ops, params.n(), params.d());
        Ok(EssDecoder {
            params: params.clone(),
            ctx,
            conditions,
        })
    }

    pub fn params(&self) -> &CodeParams {
        &self.params
    }

    pub fn radius(&self) -> usize {
        self.params.rho().saturating_sub(1) / 2
    }

    /// The decoded vectors `(h_1^r(α), ..., h_n^r(α))`, in order of `r`.
    pub fn h_vectors(&self, table: &SyndromeTable) -> Result<Vec<(Vec<usize>, Vec<ExtElem>)>> {
        let Some(ctx) = &self.ctx else {
            return Ok(Vec::new());
        };
        let ext = self.params.ext();
        let (d, rho) = (self.params.d(), self.params.rho());
        x_set(d - 1, rho)
            .into_par_iter()
            .map(|r| {
                let s: Vec<ExtElem> = (0..rho - 1)
                    .map(|t| {
                        let mut u = r.clone();
                        u.push(rho - 2 - t);
                        let su = table.get(&u).expect("syndrome table is complete");
                        ext.frob(su, t as i64 + 2 - rho as i64)
                    })
                    .collect();
                match syndrome_decode(ctx, &s) {
                    Ok(v) => Ok((r, v)),
                    Err(Error::NotDecodable) => Err(Error::DecodingFailure(format!(
                        "no error within radius {} explains the syndromes for r = {r:?}",
                        ctx.radius()
                    ))),
                    Err(e) => Err(e),
                }
            })
            .collect()
    }

    pub fn recover_error_space(&self, table: &SyndromeTable) -> Result<LinSpan> {
        let alpha: &LBasis = &self.params.bases()[0];
        let ext = self.params.ext();
        let forms: Vec<Vec<Fq>> = self
            .h_vectors(table)?
            .iter()
            .flat_map(|(_, v)| v.iter().map(|x| alpha.coords_of(ext, x)).collect::<Vec<_>>())
            .collect();
        Ok(LinSpan::new(ext.base(), self.params.n(), forms))
    }

    /// The unique `g' ∈ F[ℓ_1, ..., ℓ_e]_d` with `Z_d^u(∂)∘g' = s_u` for
    /// every `u ∈ X_{d,ρ}`.
    pub fn recover_error(&self, span: &LinSpan, table: &SyndromeTable) -> Result<HomogPoly<Fq>> {
        self.recover_error_in(span.basis(), table)
    }

    /// As [`Self::recover_error`], for any basis `forms` of the error space.
    pub fn recover_error_in(&self, forms: &[Vec<Fq>], table: &SyndromeTable) -> Result<HomogPoly<Fq>> {
        let ext = self.params.ext();
        let k = ext.base();
        let (n, d) = (self.params.n(), self.params.d());
        let rhs: Vec<Fq> = table.syndromes().values().flat_map(|s| s.coords().to_vec()).collect();
        let e = forms.len();
        if e == 0 {
            return if rhs.iter().all(|c| k.is_zero(c)) {
                Ok(HomogPoly::zero(n, d))
            } else {
                Err(Error::Inconsistent)
            };
        }
        let target = MonomialBasis::new(n, d);
        let candidates: Vec<HomogPoly<Fq>> = MonomialBasis::new(e, d)
            .monomials()
            .iter()
            .map(|m| {
                let g = Homog::from_terms(k, e, d, [(m.clone(), k.one())]);
                polyring::compose_linear(k, &g, forms, n)
            })
            .collect();
        let cols: Vec<Vec<Fq>> = candidates
            .iter()
            .map(|p| linalg::mat_vec(k, &self.conditions, &p.to_dense_in(k, &target)))
            .collect();
        let sys = Matrix::from_rows(rhs.len(), cols).transpose();
        match linalg::solve(k, &sys, &rhs) {
            Solution::Unique(a) => Ok(candidates
                .iter()
                .zip(&a)
                .fold(HomogPoly::zero(n, d), |acc, (p, c)| acc.add(k, &p.scale(k, c)))),
            Solution::Many(..) => Err(Error::AmbiguousSolution),
            Solution::None => Err(Error::Inconsistent),
        }
    }

    pub fn in_code(&self, f: &HomogPoly<Fq>) -> bool {
        let k = self.params.ext().base();
        let dense = f.to_dense_in(k, &MonomialBasis::new(self.params.n(), self.params.d()));
        linalg::mat_vec(k, &self.conditions, &dense)
            .iter()
            .all(|c| k.is_zero(c))
    }

    pub fn decode(&self, received: &HomogPoly<Fq>) -> Result<Decoded> {
        let k = self.params.ext().base();
        let table = compute_syndromes(received, &self.params)?;
        let error = if table.is_zero() {
            HomogPoly::zero(received.n(), received.d())
        } else {
            let span = self.recover_error_space(&table)?;
            if span.dim() > self.radius() {
                return Err(Error::DecodingFailure(format!(
                    "recovered error space has dimension {} beyond radius {}",
                    span.dim(),
                    self.radius()
                )));
            }
            self.recover_error(&span, &table)?
        };
        let codeword = received.sub(k, &error);
        if !self.in_code(&codeword) {
            return Err(Error::FailedVerification("result is not a codeword".into()));
        }
        let error_ess_rank = ess_rank(k, &error)?;
        if error_ess_rank > self.radius() {
            return Err(Error::FailedVerification(format!(
                "error has essential rank {error_ess_rank} beyond radius {}",
                self.radius()
            )));
        }
        Ok(Decoded {
            codeword,
            error,
            error_ess_rank,
        })
    }
}

pub fn recover_error_space(table: &SyndromeTable, params: &CodeParams) -> Result<LinSpan> {
    EssDecoder::new(params)?.recover_error_space(table)
}

pub fn recover_error(span: &LinSpan, table: &SyndromeTable, params: &CodeParams) -> Result<HomogPoly<Fq>> {
    EssDecoder::new(params)?.recover_error(span, table)
}

pub fn decode(received: &HomogPoly<Fq>, params: &CodeParams) -> Result<Decoded> {
    EssDecoder::new(params)?.decode(received)
}

/// `g(ℓ_1, ..., ℓ_e)` for independent random linear forms `ℓ_i` and a
/// random nonzero `g ∈ S_{e,d}(F)`.
pub fn random_error<R: Rng + ?Sized>(
    k: &crate::galois::BaseField,
    n: usize,
    d: usize,
    e: usize,
    rng: &mut R,
) -> HomogPoly<Fq> {
    assert!(e <= n, "error rank exceeds the number of variables");
    if e == 0 {
        return HomogPoly::zero(n, d);
    }
    let forms = loop {
        let f: Vec<Vec<Fq>> = (0..e).map(|_| (0..n).map(|_| k.random(rng)).collect()).collect();
        if linalg::rank(k, &Matrix::from_rows(n, f.clone())) == e {
            break f;
        }
    };
    let g = loop {
        let g: HomogPoly<Fq> = polyring::random_homog(k, e, d, rng);
        if !g.is_zero() {
            break g;
        }
    };
    polyring::compose_linear(k, &g, &forms, n)
}

fn random_codeword<R: Rng + ?Sized>(code: &EssCode, rng: &mut R) -> HomogPoly<Fq> {
    let k = code.field();
    let msg: Vec<Fq> = (0..code.k()).map(|_| k.random(rng)).collect();
    code.encode(&msg).unwrap()
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SimulationReport {
    pub trials: u64,
    pub successes: u64,
    pub failures: u64,
    /// Decodes that returned a valid codeword other than the one sent.
    pub miscorrections: u64,
    pub mean_decode_ms: f64,
}

/// Decodes `trials` random codewords, each corrupted by a random error of
/// essential rank at most `error_rank`. Trial `i` draws from stream `i` of
/// a generator seeded with `seed`, so the counts do not depend on
/// scheduling.
pub fn simulate(params: &CodeParams, trials: u64, error_rank: usize, seed: u64) -> Result<SimulationReport> {
    let decoder = EssDecoder::new(params)?;
    let code = construct_code(params)?;
    let k = params.ext().base().clone();
    let (n, d) = (params.n(), params.d());
    if error_rank > n {
        return Err(Error::domain(format!("error rank {error_rank} exceeds n = {n}")));
    }
    let outcomes: Vec<(u8, f64)> = (0..trials)
        .into_par_iter()
        .map(|i| {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            rng.set_stream(i);
            let f = random_codeword(&code, &mut rng);
            let g = random_error(&k, n, d, error_rank, &mut rng);
            let received = f.add(&k, &g);
            let start = Instant::now();
            let result = decoder.decode(&received);
            let ms = start.elapsed().as_secs_f64() * 1e3;
            let kind = match result {
                Ok(dec) if dec.codeword == f => 0,
                Ok(_) => 2,
                Err(_) => 1,
            };
            (kind, ms)
        })
        .collect();
    let count = |c| outcomes.iter().filter(|(k, _)| *k == c).count() as u64;
    let total_ms: f64 = outcomes.iter().map(|(_, ms)| ms).sum();
    Ok(SimulationReport {
        trials,
        successes: count(0),
        failures: count(1),
        miscorrections: count(2),
        mean_decode_ms: if trials == 0 { 0.0 } else { total_ms / trials as f64 },
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::codegen::random_basis;
    use crate::essrank::ess_variables;
    use crate::gabidulin::rank_weight;
    use crate::galois::{BaseField, ExtField};
    use crate::polyring::parse_poly;

    fn f625() -> ExtField {
        let k = BaseField::prime(5).unwrap();
        let m = [2, 4, 4, 0, 1].iter().map(|&c| k.from_i64(c)).collect();
        ExtField::new(k, m, 1).unwrap()
    }

    fn params433() -> CodeParams {
        let ext = f625();
        CodeParams::equal(&ext, 3, 3, LBasis::power(&ext)).unwrap()
    }

    #[test]
    fn syndromes_of_codewords_vanish() {
        let params = params433();
        let code = construct_code(&params).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        for _ in 0..10 {
            let t = compute_syndromes(&random_codeword(&code, &mut rng), &params).unwrap();
            assert!(t.is_zero());
            assert_eq!(t.syndromes().len(), 3);
            assert_eq!(t.layer(1).len(), 1);
            assert_eq!(t.layer(2).len(), 2);
        }
    }

    #[test]
    fn syndromes_match_direct_evaluation() {
        let params = params433();
        let ext = params.ext().clone();
        let k = ext.base().clone();
        let code = construct_code(&params).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(2);
        let g = random_error(&k, 4, 3, 1, &mut rng);
        let received = random_codeword(&code, &mut rng).add(&k, &g);
        let table = compute_syndromes(&received, &params).unwrap();
        let alpha = params.bases()[0].elements();
        for v in [vec![1usize, 0, 0], vec![0, 1, 0], vec![1, 1, 0], vec![0, 0, 1]] {
            let forms: Vec<Vec<ExtElem>> = v.iter().map(|&r| ext.frob_vec(alpha, r as i64)).collect();
            let op = polyring::product_of_linear_diffops(&ext, &forms);
            let direct = polyring::apply_diffop(&ext, &op, &polyring::promote(&ext, &g)).unwrap();
            let value = direct.terms().next().map_or_else(|| ext.zero(), |(_, c)| c.clone());
            assert_eq!(table.get(&v), Some(&value), "{v:?}");
        }
    }

    #[test]
    fn quadric_single_syndrome() {
        let ext = f625();
        let k = ext.base().clone();
        let params = CodeParams::equal(&ext, 2, 2, LBasis::power(&ext)).unwrap();
        let f = parse_poly(&k, 4, Some(2), "x1^2+3*x2*x4").unwrap();
        let t = compute_syndromes(&f, &params).unwrap();
        let op = polyring::pow(&ext, &polyring::linear_diffop(&ext, params.bases()[0].elements()), 2);
        let want = polyring::apply_diffop(&ext, &op, &polyring::promote(&ext, &f)).unwrap();
        assert_eq!(t.syndromes().len(), 1);
        assert_eq!(Some(t.get(&[0, 0]).unwrap()), want.terms().next().map(|(_, c)| c));
    }

    #[test]
    fn cube_of_a_linear_form() {
        let params = params433();
        let k = params.ext().base().clone();
        let code = construct_code(&params).unwrap();
        let g = parse_poly(&k, 4, Some(3), "x1^3+3*x1^2*x2+3*x1*x2^2+x2^3").unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let f = random_codeword(&code, &mut rng);
        let received = f.add(&k, &g);
        let dec = EssDecoder::new(&params).unwrap();
        let table = compute_syndromes(&received, &params).unwrap();
        let span = dec.recover_error_space(&table).unwrap();
        assert_eq!(
            span,
            LinSpan::new(&k, 4, vec![vec![k.one(), k.one(), k.zero(), k.zero()]])
        );
        assert_eq!(dec.recover_error(&span, &table).unwrap(), g);
        let out = dec.decode(&received).unwrap();
        assert_eq!(out.codeword, f);
        assert_eq!(out.error_ess_rank, 1);
        // scaled error: coefficient 2 is recovered
        let g2 = g.scale(&k, &k.from_i64(2));
        assert_eq!(dec.decode(&f.add(&k, &g2)).unwrap().error, g2);
    }

    #[test]
    fn codewords_pass_through() {
        let params = params433();
        let code = construct_code(&params).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(4);
        let dec = EssDecoder::new(&params).unwrap();
        for _ in 0..5 {
            let f = random_codeword(&code, &mut rng);
            let out = dec.decode(&f).unwrap();
            assert_eq!(out.codeword, f);
            assert!(out.error.is_zero());
        }
        let full = CodeParams::equal(params.ext(), 3, 1, params.bases()[0].clone()).unwrap();
        let k = params.ext().base().clone();
        let any = random_error(&k, 4, 3, 3, &mut rng);
        assert_eq!(decode(&any, &full).unwrap().codeword, any);
    }

    #[test]
    fn round_trips_and_span_consistency() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        let k5 = BaseField::prime(5).unwrap();
        let k7 = BaseField::prime(7).unwrap();
        let cases = [
            (f625(), 3, 3, 100),
            (ExtField::search(k5.clone(), 5, 1).unwrap(), 2, 3, 50),
            (ExtField::search(k5, 5, 2).unwrap(), 3, 5, 20),
            (ExtField::search(k7, 4, 1).unwrap(), 4, 3, 20),
        ];
        for (ext, d, rho, trials) in cases {
            let k = ext.base().clone();
            let n = ext.n();
            let params = CodeParams::equal(&ext, d, rho, random_basis(&ext, &mut rng)).unwrap();
            let code = construct_code(&params).unwrap();
            let dec = EssDecoder::new(&params).unwrap();
            for _ in 0..trials {
                let e = rng.gen_range(1..=dec.radius());
                let g = random_error(&k, n, d, e, &mut rng);
                let f = random_codeword(&code, &mut rng);
                let received = f.add(&k, &g);
                let table = compute_syndromes(&received, &params).unwrap();
                let truth = ess_variables(&k, &g).unwrap();
                for (_, v) in dec.h_vectors(&table).unwrap() {
                    assert!(rank_weight(&ext, &v) <= truth.dim());
                }
                let span = dec.recover_error_space(&table).unwrap();
                assert!(truth.is_subspace_of(&k, &span));
                assert_eq!(span, truth);
                assert_eq!(dec.decode(&received).unwrap().codeword, f);
            }
        }
    }

    #[test]
    fn recovered_error_is_basis_independent() {
        let params = params433();
        let k = params.ext().base().clone();
        let dec = EssDecoder::new(&params).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(6);
        let g = random_error(&k, 4, 3, 1, &mut rng);
        let table = compute_syndromes(&g, &params).unwrap();
        let span = ess_variables(&k, &g).unwrap();
        assert_eq!(dec.recover_error(&span, &table).unwrap(), g);
        let u = span.basis()[0].clone();
        let scaled: Vec<Fq> = u.iter().map(|x| k.mul(x, &k.from_i64(3))).collect();
        assert_eq!(dec.recover_error_in(&[scaled], &table).unwrap(), g);
        // two bases of a plane containing the error's linear form
        let w: Vec<Fq> = (0..4).map(|i| k.from_i64(i as i64 + 1)).collect();
        let plane = [u.clone(), w.clone()];
        let mixed = [
            u.iter().zip(&w).map(|(x, y)| k.add(x, y)).collect::<Vec<_>>(),
            u.iter()
                .zip(&w)
                .map(|(x, y)| k.sub(&k.mul(x, &k.from_i64(2)), y))
                .collect(),
        ];
        assert_eq!(dec.recover_error_in(&plane, &table).unwrap(), g);
        assert_eq!(dec.recover_error_in(&mixed, &table).unwrap(), g);
    }

    #[test]
    fn too_many_errors_are_reported() {
        let params = params433();
        let k = params.ext().base().clone();
        let code = construct_code(&params).unwrap();
        let dec = EssDecoder::new(&params).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let mut reported = 0;
        for _ in 0..30 {
            let f = random_codeword(&code, &mut rng);
            let received = f.add(&k, &random_error(&k, 4, 3, 3, &mut rng));
            match dec.decode(&received) {
                Ok(out) => {
                    assert!(dec.in_code(&out.codeword));
                    assert!(out.error_ess_rank <= 1);
                }
                Err(e) => {
                    assert_eq!(e.exit_code(), 2, "{e}");
                    reported += 1;
                }
            }
        }
        assert!(reported > 0);
    }

    #[test]
    fn simulation_is_deterministic() {
        let params = params433();
        let a = simulate(&params, 40, 1, 11).unwrap();
        let b = simulate(&params, 40, 1, 11).unwrap();
        assert_eq!((a.successes, a.failures, a.miscorrections), (40, 0, 0));
        assert_eq!((a.successes, a.failures), (b.successes, b.failures));
        let c = simulate(&params, 10, 0, 1).unwrap();
        assert_eq!(c.successes, 10);
    }
}
