#![allow(dead_code)]

use rand::Rng;
use todafactor::random;
use todafactor::{herglotz_generate, ExtendedReal, Factorization, RatFunc};

/// A generated rational Herglotz function `T^{-1} y` with `T` of length `n`.
pub struct Generated {
    pub transfer: Factorization,
    pub y: ExtendedReal,
    pub f: RatFunc,
}

/// Draws `T` with `min_len..=max_len` factors and a boundary value `y`,
/// redrawing the identically infinite function (and constants if `non_constant`).
pub fn generated_herglotz<R: Rng>(rng: &mut R, min_len: usize, max_len: usize, non_constant: bool) -> Generated {
    loop {
        let n = rng.gen_range(min_len..=max_len);
        let transfer = random::transfer_matrix(rng, n, 9);
        let y = random::extended_real(rng, 9);
        let f = herglotz_generate(&transfer, &y).expect("transfer matrix");
        if f.is_infinity() || (non_constant && f.is_constant()) {
            continue;
        }
        return Generated { transfer, y, f };
    }
}
