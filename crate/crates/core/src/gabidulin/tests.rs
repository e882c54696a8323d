use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::symmetric::canonical_matrix_span;
use super::*;
use crate::codegen::{construct_code, random_basis, CodeParams};
use crate::galois::{BaseField, LBasis};
use crate::polyring;

fn f625() -> ExtField {
    let k = BaseField::prime(5).unwrap();
    let m = [2, 4, 4, 0, 1].iter().map(|&c| k.from_i64(c)).collect();
    ExtField::new(k, m, 1).unwrap()
}

fn ext(p: u32, n: usize) -> ExtField {
    ExtField::search(BaseField::prime(p).unwrap(), n, 1).unwrap()
}

fn random_error<R: Rng>(ext: &ExtField, t: usize, rng: &mut R) -> Vec<ExtElem> {
    let k = ext.base();
    let n = ext.n();
    loop {
        let eps: Vec<ExtElem> = (0..t).map(|_| ext.random(rng)).collect();
        let x: Vec<Vec<Fq>> = (0..t).map(|_| (0..n).map(|_| k.random(rng)).collect()).collect();
        let v: Vec<ExtElem> = (0..n)
            .map(|j| {
                (0..t).fold(ext.zero(), |acc, l| {
                    ext.add(&acc, &ext.mul(&eps[l], &ext.from_base(x[l][j])))
                })
            })
            .collect();
        if rank_weight(ext, &v) == t {
            return v;
        }
    }
}

#[test]
fn rank_weights() {
    let ext = f625();
    let z = ext.zero();
    assert_eq!(rank_weight(&ext, &[z.clone(), z.clone(), z.clone(), z]), 0);
    let g = ext.generator();
    assert_eq!(rank_weight(&ext, &[g.clone(), g.clone(), g.clone(), g]), 1);
    assert_eq!(rank_weight(&ext, LBasis::power(&ext).elements()), 4);
}

#[test]
fn encoding_and_syndromes() {
    let ext = f625();
    let beta = LBasis::power(&ext);
    let ctx = GabCodeCtx::new(&ext, beta.clone(), 3).unwrap();
    assert_eq!(ctx.parity_check().rows(), 2);
    assert_eq!(ctx.radius(), 1);
    let zero = gab_encode(&ctx, &SkewPoly::zero()).unwrap();
    assert!(zero.iter().all(|x| ext.is_zero(x)));
    let one = SkewPoly::new(&ext, vec![ext.one()]);
    assert_eq!(gab_encode(&ctx, &one).unwrap(), ctx.gamma());
    let too_high = SkewPoly::new(&ext, vec![ext.one(); 3]);
    assert_eq!(
        gab_encode(&ctx, &too_high),
        Err(Error::DegreeTooHigh { deg: 2, max: 1 })
    );

    let mut rng = ChaCha8Rng::seed_from_u64(1);
    for _ in 0..50 {
        let c = gab_encode(&ctx, &SkewPoly::random(&ext, 1, &mut rng)).unwrap();
        assert!(syndrome(&ctx, &c).unwrap().iter().all(|x| ext.is_zero(x)));
        let u: Vec<ExtElem> = (0..4).map(|_| ext.random(&mut rng)).collect();
        let v: Vec<ExtElem> = (0..4).map(|_| ext.random(&mut rng)).collect();
        let sum: Vec<ExtElem> = u.iter().zip(&v).map(|(a, b)| ext.add(a, b)).collect();
        let (su, sv) = (syndrome(&ctx, &u).unwrap(), syndrome(&ctx, &v).unwrap());
        let want: Vec<ExtElem> = su.iter().zip(&sv).map(|(a, b)| ext.add(a, b)).collect();
        assert_eq!(syndrome(&ctx, &sum).unwrap(), want);
    }
    for j in 0..4 {
        let mut e = vec![ext.zero(); 4];
        e[j] = ext.one();
        let bj = &beta.elements()[j];
        assert_eq!(syndrome(&ctx, &e).unwrap(), vec![bj.clone(), ext.frob(bj, 1)]);
    }
}

#[test]
fn minimum_rank_distance_exhaustive_n3() {
    let ext = ext(3, 3);
    let ctx = GabCodeCtx::new(&ext, LBasis::power(&ext), 2).unwrap();
    let q = 27u128;
    let mut min = usize::MAX;
    for i in 1..q * q {
        let f = SkewPoly::new(&ext, vec![ext.element(i % q), ext.element(i / q)]);
        min = min.min(rank_weight(&ext, &gab_encode(&ctx, &f).unwrap()));
    }
    assert_eq!(min, 2);
}

#[test]
fn minimum_rank_distance_sampled_n4() {
    let ext = f625();
    let ctx = GabCodeCtx::new(&ext, LBasis::normal(&ext).unwrap(), 3).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    for _ in 0..2000 {
        let f = SkewPoly::random(&ext, 1, &mut rng);
        if f.degree().is_some() {
            assert!(rank_weight(&ext, &gab_encode(&ctx, &f).unwrap()) >= 3);
        }
    }
}

#[test]
fn decodes_within_radius() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for (ext, rho, trials) in [(f625(), 3, 1000), (ext(5, 5), 5, 200), (ext(3, 6), 5, 100)] {
        let ctx = GabCodeCtx::new(&ext, random_basis(&ext, &mut rng), rho).unwrap();
        let zero = vec![ext.zero(); rho - 1];
        assert!(syndrome_decode(&ctx, &zero).unwrap().iter().all(|x| ext.is_zero(x)));
        for _ in 0..trials {
            let t = rng.gen_range(1..=ctx.radius());
            let e = random_error(&ext, t, &mut rng);
            let c = gab_encode(&ctx, &SkewPoly::random(&ext, ctx.dimension() - 1, &mut rng)).unwrap();
            let r: Vec<ExtElem> = c.iter().zip(&e).map(|(a, b)| ext.add(a, b)).collect();
            let s = syndrome(&ctx, &r).unwrap();
            assert_eq!(syndrome_decode(&ctx, &s).unwrap(), e);
        }
    }
}

#[test]
fn decoder_matches_exhaustive_search() {
    // Every vector of rank ≤ 1 in L^3, L = F_27, is returned from its own
    // syndrome, so no two of them share a syndrome.
    let ext = ext(3, 3);
    let k = ext.base().clone();
    let ctx = GabCodeCtx::new(&ext, LBasis::power(&ext), 3).unwrap();
    let mut seen = std::collections::HashMap::new();
    for e in 1..27u128 {
        let eps = ext.element(e);
        for xi in 1..27u32 {
            let x: Vec<Fq> = (0..3).map(|j| k.element((xi / 3u32.pow(j)) % 3)).collect();
            let v: Vec<ExtElem> = x.iter().map(|c| ext.mul(&eps, &ext.from_base(*c))).collect();
            let s = syndrome(&ctx, &v).unwrap();
            assert_eq!(syndrome_decode(&ctx, &s).unwrap(), v);
            if let Some(prev) = seen.insert(s, v.clone()) {
                assert_eq!(prev, v);
            }
        }
    }
}

#[test]
fn beyond_radius_never_misreports() {
    let ext = f625();
    let ctx = GabCodeCtx::new(&ext, LBasis::power(&ext), 3).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    let mut failures = 0;
    for _ in 0..200 {
        let e = random_error(&ext, 2, &mut rng);
        let s = syndrome(&ctx, &e).unwrap();
        match syndrome_decode(&ctx, &s) {
            Ok(v) => {
                assert!(rank_weight(&ext, &v) <= 1);
                assert_eq!(syndrome(&ctx, &v).unwrap(), s);
            }
            Err(Error::NotDecodable) => failures += 1,
            Err(other) => panic!("{other}"),
        }
    }
    assert!(failures > 0);
    assert!(matches!(
        syndrome_decode(&ctx, &[ext.one()]),
        Err(Error::LengthMismatch { .. })
    ));
}

#[test]
fn transpose_rule_and_commutative_square() {
    let ext = f625();
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    for _ in 0..20 {
        let alpha = random_basis(&ext, &mut rng);
        let beta = crate::galois::dual_basis(&ext, &alpha).unwrap();
        let terms = (0..3)
            .map(|_| (rng.gen_range(-5i64..6), ext.random(&mut rng)))
            .collect();
        let phi = SkewEndo { terms };
        let m = endomorphism_matrix(&ext, &alpha, &phi);
        // row i of the L^n-side matrix: β-coordinates of φ(α_i)
        let via_dual = Matrix::from_rows(
            4,
            alpha
                .elements()
                .iter()
                .map(|a| beta.coords_of(&ext, &phi.eval(&ext, a)))
                .collect(),
        );
        assert_eq!(m, via_dual);
        assert_eq!(endomorphism_matrix(&ext, &alpha, &phi.transpose(&ext)), m.transpose());
    }
}

fn symmetric_endo_span(ext: &ExtField, alpha: &LBasis, ell: usize) -> Vec<Matrix<Fq>> {
    let power = LBasis::power(ext);
    let mut ms = Vec::new();
    for mu in power.elements() {
        ms.push(endomorphism_matrix(
            ext,
            alpha,
            &SkewEndo {
                terms: vec![(0, mu.clone())],
            },
        ));
        for i in 1..=ell as i64 {
            let phi = SkewEndo {
                terms: vec![(i, mu.clone()), (-i, ext.frob(mu, -i))],
            };
            ms.push(endomorphism_matrix(ext, alpha, &phi));
        }
    }
    canonical_matrix_span(ext.base(), ext.n(), &ms)
}

#[test]
fn symmetric_codes_three_ways() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for ext in [f625(), ext(3, 3), ext(5, 5), ext(3, 6)] {
        let n = ext.n();
        let k = ext.base().clone();
        for alpha in [LBasis::power(&ext), random_basis(&ext, &mut rng)] {
            for ell in 0..=(n - 2) / 2 {
                let sym = symmetric_gabidulin_d2(&ext, &alpha, ell).unwrap();
                assert!(sym.iter().all(|m| *m == m.transpose()));
                assert_eq!(sym.len(), n * (ell + 1), "n={n} ℓ={ell}");
                assert_eq!(sym, symmetric_endo_span(&ext, &alpha, ell));

                let (beta, gamma) = symmetric_data(&ext, &alpha).unwrap();
                let first = beta.frob(&ext, (n - 2 - ell) as i64);
                let second = LBasis::from_elements(&ext, gamma, crate::galois::BasisKind::Arbitrary).unwrap();
                let params = CodeParams::distinct(&ext, 2, n - 2 * ell, vec![first, second]).unwrap();
                let code = construct_code(&params).unwrap();
                let cats: Vec<Matrix<Fq>> = code.basis().iter().map(|f| polyring::catalecticant(&k, f)).collect();
                assert_eq!(canonical_matrix_span(&k, n, &cats), sym);
            }
        }
        assert!(symmetric_gabidulin_d2(&ext, &LBasis::power(&ext), n).is_err());
    }
    let f8 = ext(2, 3);
    assert!(symmetric_gabidulin_d2(&f8, &LBasis::power(&f8), 0).is_err());
}
