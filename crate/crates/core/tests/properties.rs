mod common;

use num_complex::Complex64;
use num_traits::Signed;
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use common::generated_herglotz;
use todafactor::algebra::{rat, GaussPoly};
use todafactor::io::{parse_problem, serialize_problem, Operator, ProblemFile};
use todafactor::random::{self, FactorizationParams};
use todafactor::{
    classify, conjugate_jp, elementary, expand, factorize, herglotz_check, jp_chain, toda_apply, weyl_disk,
    ComplexPoint, Disk, Factor, Factorization, GaussRational, Poly, PolyMat, Projection, RatFunc, SampleGrid,
    Side, Verdict,
};

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn random_polymat<R: Rng>(rng: &mut R) -> PolyMat {
    let mut entry = || {
        let deg = rng.gen_range(0..=3);
        Poly::new((0..=deg).map(|_| random::rational(rng, 9)).collect())
    };
    PolyMat::new(entry(), entry(), entry(), entry())
}

fn random_gauss_poly<R: Rng>(rng: &mut R, max_degree: usize) -> GaussPoly {
    let deg = rng.gen_range(0..=max_degree);
    GaussPoly::new(
        (0..=deg)
            .map(|_| GaussRational::new(random::rational(rng, 9), random::rational(rng, 9)))
            .collect(),
    )
}

fn random_ratfunc<R: Rng>(rng: &mut R) -> RatFunc {
    loop {
        let (num, den) = (random_gauss_poly(rng, 2), random_gauss_poly(rng, 2));
        if !den.is_zero() {
            return RatFunc::new(num, den).unwrap();
        }
    }
}

fn small_factorization<R: Rng>(rng: &mut R) -> PolyMat {
    let params = FactorizationParams { max_factors: 2, max_degree: 2, coeff_bound: 5, direction_bound: 5 };
    expand(&random::factorization(rng, &params))
}

fn negate(f: &RatFunc) -> RatFunc {
    RatFunc::new(-f.numerator(), f.denominator().clone()).unwrap()
}

fn close(a: Complex64, b: Complex64, scale: f64) -> bool {
    (a - b).norm() <= 1e-9 * (1.0 + scale)
}

/// Circumcircle through three points.
fn circumcircle(a: Complex64, b: Complex64, c: Complex64) -> (Complex64, f64) {
    let (b, c) = (b - a, c - a);
    let d = 2.0 * (b.re * c.im - b.im * c.re);
    let ux = (c.im * b.norm_sqr() - b.im * c.norm_sqr()) / d;
    let uy = (b.re * c.norm_sqr() - c.re * b.norm_sqr()) / d;
    let u = Complex64::new(ux, uy);
    (u + a, u.norm())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn factorization_round_trip(seed in any::<u64>()) {
        let f = random::factorization(&mut rng(seed), &FactorizationParams::default());
        let a = expand(&f);
        prop_assert!(a.has_unit_det());
        prop_assert!(a.at_zero().is_identity());
        prop_assert_eq!(factorize(&a).unwrap(), f);
    }

    #[test]
    fn prefixed_matrices_round_trip(seed in any::<u64>()) {
        let mut rng = rng(seed);
        let c = random::sl2(&mut rng, 9);
        let a = &c * &expand(&random::factorization(&mut rng, &FactorizationParams::default()));
        let f = factorize(&a).unwrap();
        prop_assert_eq!(f.prefix(), &c);
        prop_assert_eq!(expand(&f), a);
    }

    #[test]
    fn determinant_is_multiplicative(seed in any::<u64>()) {
        let mut rng = rng(seed);
        let (a, b) = (random_polymat(&mut rng), random_polymat(&mut rng));
        prop_assert_eq!((&a * &b).det(), &a.det() * &b.det());
    }

    #[test]
    fn evaluation_is_a_homomorphism(seed in any::<u64>(), re in -5.0f64..5.0, im in 0.01f64..5.0) {
        let mut rng = rng(seed);
        let (a, b) = (random_polymat(&mut rng), random_polymat(&mut rng));
        let z = Complex64::new(re, im);
        let lhs = (&a * &b).eval_c64(z);
        let rhs = a.eval_c64(z) * b.eval_c64(z);
        let scale = a.eval_c64(z).norm_inf() * b.eval_c64(z).norm_inf();
        for i in 0..2 {
            for j in 0..2 {
                prop_assert!(close(lhs.0[i][j], rhs.0[i][j], scale));
            }
        }
    }

    #[test]
    fn ratfunc_canonical_form_is_idempotent(seed in any::<u64>()) {
        let f = random_ratfunc(&mut rng(seed));
        let again = RatFunc::new(f.numerator().clone(), f.denominator().clone()).unwrap();
        prop_assert_eq!(&again, &f);
        prop_assert!(f.is_infinity() || f.denominator().leading().unwrap() == &GaussRational::new(rat(1, 1), rat(0, 1)));
    }

    #[test]
    fn conjugation_of_jp(seed in any::<u64>()) {
        let mut rng = rng(seed);
        let s = random::sl2(&mut rng, 9);
        let p = random::projection(&mut rng, 9);
        let (c, q) = conjugate_jp(&s, &p).unwrap();
        prop_assert!(c.is_positive());
        prop_assert_eq!(&(&s.inverse().unwrap() * &p.jp()) * &s, q.jp().scale(&c));
    }

    #[test]
    fn merge_rule(seed in any::<u64>()) {
        let mut rng = rng(seed);
        let proj = random::projection(&mut rng, 9);
        let p = random::factor_poly(&mut rng, 3, 9);
        let q = if rng.gen_ratio(1, 4) { -&p } else { random::factor_poly(&mut rng, 3, 9) };
        let product = &elementary(&Factor::new(p.clone(), proj.clone()).unwrap())
            * &elementary(&Factor::new(q.clone(), proj.clone()).unwrap());
        let sum = &p + &q;
        if sum.is_zero() {
            prop_assert_eq!(&product, &PolyMat::identity());
            prop_assert!(factorize(&product).unwrap().is_empty());
        } else {
            let merged = Factor::new(sum, proj).unwrap();
            prop_assert_eq!(&product, &elementary(&merged));
            let f = factorize(&product).unwrap();
            prop_assert_eq!(f.factors(), &[merged][..]);
        }
    }

    #[test]
    fn toda_action_is_a_group_action(seed in any::<u64>()) {
        let mut rng = rng(seed);
        let (a, b) = (small_factorization(&mut rng), small_factorization(&mut rng));
        let f = random_ratfunc(&mut rng);
        let lhs = toda_apply(&(&a * &b), &f, Side::Plus).unwrap();
        let rhs = toda_apply(&a, &toda_apply(&b, &f, Side::Plus).unwrap(), Side::Plus).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn minus_side_symmetry(seed in any::<u64>()) {
        let mut rng = rng(seed);
        let a = small_factorization(&mut rng);
        let f = random_ratfunc(&mut rng);
        let minus = toda_apply(&a, &f, Side::Minus).unwrap();
        prop_assert_eq!(&minus, &toda_apply(&a.flip_conjugate(), &f, Side::Plus).unwrap());
        if !f.is_infinity() {
            // -(A · (-F))
            prop_assert_eq!(&minus, &negate(&toda_apply(&a, &negate(&f), Side::Plus).unwrap()));
        }
    }

    #[test]
    fn inverse_duality(seed in any::<u64>()) {
        let mut rng = rng(seed);
        let n = rng.gen_range(1..=4);
        let t = random::transfer_matrix(&mut rng, n, 9);
        let lengths = match classify(&t).unwrap() {
            Verdict::TransferMatrix(ls) => ls,
            other => panic!("{other:?}"),
        };
        let inv = factorize(&expand(&t).sl2_inverse().unwrap()).unwrap();
        let expected: Vec<_> = lengths.into_iter().rev().map(|(l, p)| (-l, p)).collect();
        prop_assert_eq!(classify(&inv).unwrap(), Verdict::InverseTransferMatrix(expected));
        prop_assert_eq!(inv, t.inverse());
    }

    #[test]
    fn transfer_matrices_preserve_herglotz_functions(seed in any::<u64>()) {
        let mut rng = rng(seed);
        let n = rng.gen_range(1..=3);
        let t = random::transfer_matrix(&mut rng, n, 9);
        let m = generated_herglotz(&mut rng, 0, 3, false).f;
        let a = expand(&t);
        let inner = toda_apply(&a.sl2_inverse().unwrap(), &m, Side::Plus).unwrap();
        prop_assert!(herglotz_check(&inner, &SampleGrid::default()).unwrap().passed);
        prop_assert_eq!(toda_apply(&a, &inner, Side::Plus).unwrap(), m);
    }

    #[test]
    fn generated_herglotz_growth(seed in any::<u64>()) {
        let f = generated_herglotz(&mut rng(seed), 0, 3, false).f;
        let (num, den) = f.real_parts().unwrap();
        prop_assert!(num.is_zero() || (-1..=1).contains(&(num.degree() - den.degree())));
        prop_assert!(herglotz_check(&f, &SampleGrid::default()).unwrap().passed);
    }

    #[test]
    fn weyl_disk_matches_three_point_circle(seed in any::<u64>(), re in -10.0f64..10.0, im in 0.001f64..100.0) {
        let mut rng = rng(seed);
        let n = rng.gen_range(1..=3);
        let t = random::transfer_matrix(&mut rng, n, 9);
        let a = expand(&t);
        let z = Complex64::new(re, im);
        let g = a.sl2_inverse().unwrap().eval_c64(z);
        let [[alpha, beta], [gamma, delta]] = g.0;
        let disk = weyl_disk(&a, ComplexPoint::Finite(z)).unwrap();
        match disk {
            Disk::Round { center, radius, exterior } => {
                prop_assert!(!exterior);
                let (c, r) = circumcircle(beta / delta, (alpha + beta) / (gamma + delta), alpha / gamma);
                let scale = c.norm() + r;
                prop_assert!(close(center, c, scale), "{center} vs {c}");
                prop_assert!((radius - r).abs() <= 1e-9 * (1.0 + scale));
                prop_assert!(center.im > 0.0 && radius <= center.im * (1.0 + 1e-9));
            }
            Disk::HalfPlane { interior, .. } => prop_assert!(interior.im > 0.0),
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(500))]

    #[test]
    fn serialization_round_trip(seed in any::<u64>()) {
        let mut rng = rng(seed);
        let mut f = random::factorization(&mut rng, &FactorizationParams::default());
        if rng.gen_bool(0.5) {
            f = Factorization::new(random::sl2(&mut rng, 9), f.factors().to_vec()).unwrap();
        }
        let problem = ProblemFile { operator: Some(Operator::Factorization(f)), herglotz: None };
        let text = serialize_problem(&problem);
        let parsed = parse_problem(&text).unwrap();
        prop_assert_eq!(&parsed, &problem);
        prop_assert_eq!(serialize_problem(&parsed), text);
    }
}

#[test]
fn projection_chains_exhaustive() {
    let pool: Vec<Projection> = [(1, 0), (0, 1), (1, 1), (1, -1), (2, 3)]
        .iter()
        .map(|&(a, b)| Projection::new(a, b).unwrap())
        .collect();
    for len in 1..=6u32 {
        for code in 0..5usize.pow(len) {
            let idx: Vec<usize> = (0..len).map(|k| code / 5usize.pow(k) % 5).collect();
            let projs: Vec<Projection> = idx.iter().map(|&i| pool[i].clone()).collect();
            let chain = jp_chain(&projs).unwrap();
            let distinct = idx.windows(2).all(|w| w[0] != w[1]);
            assert_eq!(chain.nonzero, distinct, "{idx:?}");
            if distinct {
                assert_eq!(chain.diagonalizable, idx[0] != idx[idx.len() - 1], "{idx:?}");
            }
        }
    }
}

#[test]
fn trailing_products_give_nested_disks() {
    let mut rng = rng(11);
    let grid = SampleGrid { re_count: 5, im_count: 5, ..SampleGrid::default() };
    for _ in 0..30 {
        let t = random::transfer_matrix(&mut rng, 4, 9);
        for z in grid.points() {
            let disks: Vec<Disk> =
                (0..=4).map(|k| weyl_disk(&expand(&t.trailing(k)), ComplexPoint::Finite(z)).unwrap()).collect();
            for w in disks.windows(2) {
                let slack = 1e-9 * (1.0 + z.norm());
                assert!(w[0].contains_disk(&w[1], slack), "{t} at {z}");
            }
        }
    }
}

#[test]
fn leading_products_need_not_nest() {
    // (1 + z J P(1,0)) (1 + z J P(0,1)): the one-factor disk {|w - i/2| <= 1/2}
    // does not contain the two-factor disk at z = i
    let t = Factorization::from_factors(vec![
        Factor::linear(rat(1, 1), Projection::new(1, 0).unwrap()).unwrap(),
        Factor::linear(rat(1, 1), Projection::new(0, 1).unwrap()).unwrap(),
    ])
    .unwrap();
    let i = ComplexPoint::Finite(Complex64::new(0.0, 1.0));
    let first = weyl_disk(&expand(&t.leading(1)), i).unwrap();
    let full = weyl_disk(&expand(&t), i).unwrap();
    assert!(!first.contains_disk(&full, 1e-9));
    assert!(weyl_disk(&expand(&t.trailing(1)), i).unwrap().contains_disk(&full, 1e-9));
}
