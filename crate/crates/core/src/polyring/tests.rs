use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::*;
use crate::galois::BaseField;
use crate::io::parse_ext_spec;

fn f(k: &BaseField, n: usize, s: &str) -> HomogPoly<Fq> {
    parse_poly(k, n, None, s).unwrap()
}

fn rows(m: &Matrix<Fq>) -> Vec<Vec<u32>> {
    m.to_rows()
        .into_iter()
        .map(|r| r.into_iter().map(|x| x.index()).collect())
        .collect()
}

const EXA3: &str = "3*x1^3+8*x1^2*x2+5*x1^2*x3+12*x1*x2^2+4*x1*x2*x3+4*x1*x3^2+8*x2^3+2*x2*x3^2+x3^3";

#[test]
fn monomial_order() {
    let b = MonomialBasis::new(4, 3);
    assert_eq!(b.len(), 20);
    assert_eq!(b.get(0).exps(), &[3, 0, 0, 0]);
    assert_eq!(b.get(1).exps(), &[2, 1, 0, 0]);
    assert_eq!(b.get(2).exps(), &[2, 0, 1, 0]);
    assert_eq!(b.get(4).exps(), &[1, 2, 0, 0]);
    assert_eq!(b.get(19).exps(), &[0, 0, 0, 3]);
    let mut sorted = b.monomials().to_vec();
    sorted.sort();
    assert_eq!(sorted, b.monomials());
    assert_eq!(MonomialBasis::new(3, 0).len(), 1);
    assert_eq!(num_monomials(5, 3), 35);
}

#[test]
fn power_rule_and_absent_variables() {
    let k = BaseField::prime(7).unwrap();
    let p = f(&k, 2, "x1^3");
    assert_eq!(partial(&k, 0, &p), f(&k, 2, "3*x1^2"));
    let d2 = DiffOp::monomial(&k, &[0, 2], k.one());
    assert!(apply_diffop(&k, &d2, &p).unwrap().is_zero());
    let d4 = DiffOp::monomial(&k, &[4, 0], k.one());
    assert_eq!(apply_diffop(&k, &d4, &p), Err(Error::DegreeMismatch { op: 4, poly: 3 }));
}

#[test]
fn second_derivative_of_worked_example() {
    for p in [7, 11] {
        let k = BaseField::prime(p).unwrap();
        let poly = f(&k, 3, EXA3);
        let d11 = DiffOp::monomial(&k, &[2, 0, 0], k.one());
        let got = apply_diffop(&k, &d11, &poly).unwrap();
        assert_eq!(got, f(&k, 3, "18*x1+16*x2+10*x3"));
    }
}

#[test]
fn worked_example_expansion() {
    // Large enough prime that no coefficient wraps.
    let k = BaseField::prime(101).unwrap();
    let g = f(&k, 2, "x1*x2^2+x1^3+x2^3");
    let forms = vec![
        vec![k.from_i64(1), k.from_i64(2), k.from_i64(0)],
        vec![k.from_i64(1), k.from_i64(0), k.from_i64(1)],
    ];
    assert_eq!(compose_linear(&k, &g, &forms, 3), f(&k, 3, EXA3));
}

#[test]
fn worked_example_catalecticant() {
    let expect = [[9i64, 16, 10, 12, 4, 4], [8, 24, 4, 24, 0, 2], [5, 4, 8, 0, 4, 3]];
    for p in [7u32, 11] {
        let k = BaseField::prime(p).unwrap();
        let c = catalecticant(&k, &f(&k, 3, EXA3));
        let want: Vec<Vec<u32>> = expect
            .iter()
            .map(|r| r.iter().map(|&x| x.rem_euclid(p as i64) as u32).collect())
            .collect();
        assert_eq!(rows(&c), want);
    }
}

#[test]
fn catalecticant_quadrics_are_symmetric() {
    let k = BaseField::prime(5).unwrap();
    let q = f(&k, 3, "x1^2+2*x1*x2+3*x2*x3+4*x3^2");
    let c = catalecticant(&k, &q);
    assert_eq!(rows(&c), vec![vec![2, 2, 0], vec![2, 0, 3], vec![0, 3, 3]]);
    assert_eq!(c, c.transpose());
    assert_eq!(rows(&catalecticant(&k, &HomogPoly::zero(3, 2))), vec![vec![0; 3]; 3]);
}

#[test]
fn pairing_gram_is_diagonal() {
    let k = BaseField::prime(7).unwrap();
    let b = MonomialBasis::new(3, 3);
    for t in b.monomials() {
        for u in b.monomials() {
            let x = HomogPoly::from_terms(&k, 3, 3, [(t.clone(), k.one())]);
            let dd = DiffOp::from_terms(&k, 3, 3, [(u.clone(), k.one())]);
            let v = pairing(&k, &x, &dd).unwrap();
            if t == u {
                assert_eq!(v, t.factorial_product(&k));
                assert!(!k.is_zero(&v));
            } else {
                assert!(k.is_zero(&v));
            }
        }
    }
    let x3 = HomogPoly::monomial(&k, &[3, 0], k.one());
    assert_eq!(
        pairing(&k, &x3, &DiffOp::monomial(&k, &[3, 0], k.one())).unwrap(),
        k.from_i64(6)
    );
}

#[test]
fn perp_extremes() {
    let k = BaseField::prime(5).unwrap();
    let l = parse_ext_spec(&k, "2").unwrap();
    assert_eq!(perp_in_s(&l, &[], 3, 2).len(), 6);
    let all: Vec<DiffOp<ExtElem>> = MonomialBasis::new(3, 2)
        .monomials()
        .iter()
        .map(|m| DiffOp::from_terms(&l, 3, 2, [(m.clone(), l.one())]))
        .collect();
    assert!(perp_in_s(&l, &all, 3, 2).is_empty());
}

#[test]
fn perp_agrees_with_pairing() {
    let k = BaseField::prime(5).unwrap();
    let l = parse_ext_spec(&k, "4:2,4,4,0,1").unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..10 {
        let ops: Vec<DiffOp<ExtElem>> = (0..2).map(|_| random_homog(&l, 3, 3, &mut rng)).collect();
        let basis = perp_in_s(&l, &ops, 3, 3);
        let rank = linalg::rank(&k, &condition_matrix(&l, &ops, 3, 3));
        assert_eq!(basis.len() + rank, 10);
        for g in &basis {
            for op in &ops {
                assert!(l.is_zero(&pairing(&l, &promote(&l, g), op).unwrap()));
            }
        }
    }
}

#[test]
fn decompose_example() {
    let k = BaseField::prime(5).unwrap();
    let l = parse_ext_spec(&k, "4:2,4,4,0,1").unwrap();
    let alpha = LBasis::power(&l);
    let g = l.generator();
    let h = HomogPoly::from_terms(
        &l,
        2,
        1,
        [
            (Monomial::new(&[1, 0]), g.clone()),
            (Monomial::new(&[0, 1]), l.add(&l.one(), &g)),
        ],
    );
    let parts = coeff_decompose(&l, &h, &alpha);
    assert_eq!(parts[0], f(&k, 2, "x2"));
    assert_eq!(parts[1], f(&k, 2, "x1+x2"));
    assert!(parts[2].is_zero() && parts[3].is_zero());
    assert_eq!(coeff_recompose(&l, &parts, &alpha), h);
    let over_f = promote(&l, &f(&k, 2, "x1+3*x2"));
    assert_eq!(coeff_decompose(&l, &over_f, &alpha)[0], f(&k, 2, "x1+3*x2"));
}

#[test]
fn decompose_round_trip_normal_basis() {
    let k = BaseField::prime(3).unwrap();
    let l = parse_ext_spec(&k, "3").unwrap();
    let alpha = LBasis::normal(&l).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(12);
    for _ in 0..20 {
        let h: HomogPoly<ExtElem> = random_homog(&l, 3, 2, &mut rng);
        assert_eq!(coeff_recompose(&l, &coeff_decompose(&l, &h, &alpha), &alpha), h);
    }
}

#[test]
fn substitution_small_cases() {
    let k = BaseField::prime(7).unwrap();
    let p = f(&k, 2, "x1^2");
    let swap = Matrix::from_rows(2, vec![vec![k.zero(), k.one()], vec![k.one(), k.zero()]]);
    assert_eq!(substitute(&k, &p, &swap), f(&k, 2, "x2^2"));
    let q = f(&k, 3, EXA3);
    assert_eq!(substitute(&k, &q, &Matrix::identity(&k, 3)), q);
}

#[test]
fn linear_operators() {
    let k = BaseField::prime(7).unwrap();
    let v = vec![k.one(), k.zero(), k.from_i64(3)];
    assert_eq!(linear_form(&k, &v), f(&k, 3, "x1+3*x3"));
    assert!(linear_form(&k, &[k.zero(), k.zero()]).is_zero());
    assert_eq!(
        product_of_linear_diffops(&k, std::slice::from_ref(&v)),
        linear_diffop(&k, &v)
    );
    let a = vec![k.one(), k.one()];
    let b = vec![k.one(), k.from_i64(-1)];
    let prod = product_of_linear_diffops(&k, &[a.clone(), b.clone()]);
    assert_eq!(prod, f(&k, 2, "x1^2-x2^2").retag());
    assert_eq!(prod, product_of_linear_diffops(&k, &[b, a]));
}

#[test]
fn text_and_json_round_trip() {
    let k = BaseField::prime(11).unwrap();
    let p = f(&k, 3, EXA3);
    let s = format_poly(&k, &p);
    assert_eq!(
        s,
        "3*x1^3+8*x1^2*x2+5*x1^2*x3+1*x1*x2^2+4*x1*x2*x3+4*x1*x3^2+8*x2^3+2*x2*x3^2+1*x3^3"
    );
    assert_eq!(parse_poly(&k, 3, None, &s).unwrap(), p);
    assert_eq!(poly_from_json(&k, &poly_to_json(&k, &p)).unwrap(), p);
    assert_eq!(format_poly(&k, &HomogPoly::<Fq>::zero(3, 2)), "0");
    assert!(parse_poly(&k, 3, Some(2), "0").unwrap().is_zero());
    assert!(parse_poly(&k, 3, None, "x1^2+x2").is_err());
    assert!(parse_poly(&k, 2, None, "x3").is_err());
    assert_eq!(
        parse_poly(&k, 2, None, "-x1*x2 + 2 * x2 * x1").unwrap(),
        f(&k, 2, "x1*x2")
    );
    let l = parse_ext_spec(&k, "2").unwrap();
    let h = parse_poly(&l, 2, None, "[1,-1]*x1+[0,2]*x2").unwrap();
    assert_eq!(format_poly(&l, &h), "[1,10]*x1+[0,2]*x2");
    assert_eq!(poly_from_json(&l, &poly_to_json(&l, &h)).unwrap(), h);
}

fn sample(k: &BaseField, n: usize, d: usize, seed: u64) -> HomogPoly<Fq> {
    random_homog(k, n, d, &mut ChaCha8Rng::seed_from_u64(seed))
}

fn random_invertible(k: &BaseField, n: usize, seed: u64) -> Matrix<Fq> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    loop {
        let m = Matrix::from_fn(n, n, |_, _| k.random(&mut rng));
        if linalg::rank(k, &m) == n {
            return m;
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn apply_is_bilinear(seed in any::<u64>(), c in 0i64..7) {
        let k = BaseField::prime(7).unwrap();
        let f1 = sample(&k, 3, 4, seed);
        let f2 = sample(&k, 3, 4, seed ^ 1);
        let d1: DiffOp<Fq> = random_homog(&k, 3, 2, &mut ChaCha8Rng::seed_from_u64(seed ^ 2));
        let d2: DiffOp<Fq> = random_homog(&k, 3, 2, &mut ChaCha8Rng::seed_from_u64(seed ^ 3));
        let c = k.from_i64(c);
        let lhs = apply_diffop(&k, &d1, &f1.add(&k, &f2.scale(&k, &c))).unwrap();
        let rhs = apply_diffop(&k, &d1, &f1).unwrap().add(&k, &apply_diffop(&k, &d1, &f2).unwrap().scale(&k, &c));
        prop_assert_eq!(lhs, rhs);
        let lhs = apply_diffop(&k, &d1.add(&k, &d2.scale(&k, &c)), &f1).unwrap();
        let rhs = apply_diffop(&k, &d1, &f1).unwrap().add(&k, &apply_diffop(&k, &d2, &f1).unwrap().scale(&k, &c));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn operator_products_compose(seed in any::<u64>()) {
        let k = BaseField::prime(11).unwrap();
        let g = sample(&k, 3, 5, seed);
        let d1: DiffOp<Fq> = random_homog(&k, 3, 2, &mut ChaCha8Rng::seed_from_u64(seed ^ 5));
        let d2: DiffOp<Fq> = random_homog(&k, 3, 1, &mut ChaCha8Rng::seed_from_u64(seed ^ 6));
        let lhs = apply_diffop(&k, &mul(&k, &d1, &d2), &g).unwrap();
        let rhs = apply_diffop(&k, &d1, &apply_diffop(&k, &d2, &g).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
        let v: Vec<Fq> = d2.to_dense(&k);
        prop_assert_eq!(apply_linear(&k, &v, &g), apply_diffop(&k, &d2, &g).unwrap());
    }

    #[test]
    fn substitution_composes_in_reverse(seed in any::<u64>()) {
        let k = BaseField::prime(5).unwrap();
        let g = sample(&k, 3, 3, seed);
        let a = random_invertible(&k, 3, seed ^ 7);
        let b = random_invertible(&k, 3, seed ^ 8);
        let lhs = substitute(&k, &substitute(&k, &g, &a), &b);
        prop_assert_eq!(lhs, substitute(&k, &g, &linalg::mat_mul(&k, &b, &a)));
    }

    #[test]
    fn catalecticant_linear_and_rank_invariant(seed in any::<u64>(), c in 0i64..5) {
        let k = BaseField::prime(5).unwrap();
        let f1 = sample(&k, 4, 3, seed);
        let f2 = sample(&k, 4, 3, seed ^ 9);
        let c = k.from_i64(c);
        let lhs = catalecticant(&k, &f1.add(&k, &f2.scale(&k, &c)));
        let c1 = catalecticant(&k, &f1);
        let c2 = catalecticant(&k, &f2);
        let rhs = Matrix::from_fn(4, 10, |i, j| k.add(&c1[(i, j)], &k.mul(&c, &c2[(i, j)])));
        prop_assert_eq!(lhs, rhs);
        let a = random_invertible(&k, 4, seed ^ 10);
        prop_assert_eq!(linalg::rank(&k, &catalecticant(&k, &substitute(&k, &f1, &a))), linalg::rank(&k, &c1));
    }
}
