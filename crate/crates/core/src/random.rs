//! Seeded generators for random rationals, projections, factorizations and
//! rational Herglotz functions.

use rand::Rng;

use crate::algebra::{int, rat, ExtendedReal, Mat2Q, Poly, Rational};
use crate::factors::{Factor, Factorization, Projection};

/// Shape of random factorizations.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FactorizationParams {
    pub max_factors: usize,
    pub max_degree: usize,
    /// Numerators lie in `[-bound, bound]`, denominators in `[1, bound]`.
    pub coeff_bound: i64,
    pub direction_bound: i64,
}

impl Default for FactorizationParams {
    fn default() -> Self {
        FactorizationParams { max_factors: 4, max_degree: 3, coeff_bound: 9, direction_bound: 9 }
    }
}

pub fn rational<R: Rng + ?Sized>(rng: &mut R, bound: i64) -> Rational {
    rat(rng.gen_range(-bound..=bound), rng.gen_range(1..=bound))
}

pub fn nonzero_rational<R: Rng + ?Sized>(rng: &mut R, bound: i64) -> Rational {
    let mut n = 0;
    while n == 0 {
        n = rng.gen_range(-bound..=bound);
    }
    rat(n, rng.gen_range(1..=bound))
}

pub fn positive_rational<R: Rng + ?Sized>(rng: &mut R, bound: i64) -> Rational {
    rat(rng.gen_range(1..=bound), rng.gen_range(1..=bound))
}

pub fn projection<R: Rng + ?Sized>(rng: &mut R, bound: i64) -> Projection {
    loop {
        let (a, b) = (rng.gen_range(-bound..=bound), rng.gen_range(-bound..=bound));
        if let Ok(p) = Projection::new(a, b) {
            return p;
        }
    }
}

fn projection_other_than<R: Rng + ?Sized>(rng: &mut R, bound: i64, prev: Option<&Projection>) -> Projection {
    loop {
        let p = projection(rng, bound);
        if Some(&p) != prev {
            return p;
        }
    }
}

/// Non-zero polynomial with `p(0) = 0` and degree in `1..=max_degree`.
pub fn factor_poly<R: Rng + ?Sized>(rng: &mut R, max_degree: usize, bound: i64) -> Poly {
    let deg = rng.gen_range(1..=max_degree);
    let mut coeffs = vec![int(0)];
    coeffs.extend((1..deg).map(|_| rational(rng, bound)));
    coeffs.push(nonzero_rational(rng, bound));
    Poly::new(coeffs)
}

/// Random canonical factorization with identity prefix.
pub fn factorization<R: Rng + ?Sized>(rng: &mut R, params: &FactorizationParams) -> Factorization {
    let n = rng.gen_range(0..=params.max_factors);
    factorization_with(rng, n, |rng| factor_poly(rng, params.max_degree, params.coeff_bound), params.direction_bound)
}

fn factorization_with<R: Rng + ?Sized>(
    rng: &mut R,
    n: usize,
    mut poly: impl FnMut(&mut R) -> Poly,
    direction_bound: i64,
) -> Factorization {
    let mut factors: Vec<Factor> = Vec::with_capacity(n);
    for _ in 0..n {
        let proj = projection_other_than(rng, direction_bound, factors.last().map(Factor::projection));
        factors.push(Factor::new(poly(rng), proj).expect("valid factor"));
    }
    Factorization::from_factors(factors).expect("consecutive projections differ")
}

/// `(1 + L_1 z J P_1) ... (1 + L_n z J P_n)` with every `L_j > 0`.
pub fn transfer_matrix<R: Rng + ?Sized>(rng: &mut R, n: usize, bound: i64) -> Factorization {
    factorization_with(rng, n, |rng| Poly::monomial(positive_rational(rng, bound), 1), bound)
}

/// Degree-one factors of both signs, at least one of each, `n >= 2`.
pub fn empty_domain<R: Rng + ?Sized>(rng: &mut R, n: usize, bound: i64) -> Factorization {
    assert!(n >= 2, "mixed signs need two factors");
    let negative_at = rng.gen_range(0..n);
    let positive_at = (negative_at + rng.gen_range(1..n)) % n;
    let mut k = 0;
    factorization_with(
        rng,
        n,
        |rng| {
            let l = positive_rational(rng, bound);
            let sign_negative = match k {
                _ if k == negative_at => true,
                _ if k == positive_at => false,
                _ => rng.gen_bool(0.5),
            };
            k += 1;
            Poly::monomial(if sign_negative { -l } else { l }, 1)
        },
        bound,
    )
}

/// Random element of SL(2, Q).
pub fn sl2<R: Rng + ?Sized>(rng: &mut R, bound: i64) -> Mat2Q {
    let a = nonzero_rational(rng, bound);
    let b = rational(rng, bound);
    let c = rational(rng, bound);
    let d = (int(1) + &b * &c) / &a;
    Mat2Q::new(a, b, c, d)
}

pub fn extended_real<R: Rng + ?Sized>(rng: &mut R, bound: i64) -> ExtendedReal {
    if rng.gen_ratio(1, 8) {
        ExtendedReal::Infinity
    } else {
        ExtendedReal::Finite(rational(rng, bound))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::classify::{classify, Verdict};
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn generators_respect_their_shapes() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        for _ in 0..200 {
            let f = factorization(&mut rng, &FactorizationParams::default());
            assert!(f.len() <= 4);
            assert!(f.factors().iter().all(|x| (1..=3).contains(&x.poly().degree())));
            assert!(matches!(classify(&transfer_matrix(&mut rng, 3, 9)).unwrap(), Verdict::TransferMatrix(_)));
            assert_eq!(classify(&empty_domain(&mut rng, 2, 9)).unwrap(), Verdict::EmptyDomain);
            assert!(sl2(&mut rng, 9).is_sl2());
        }
    }
}
