use std::fmt;

use num_complex::Complex64;
use num_traits::{One, Zero};

use super::complex::ComplexPoint;
use super::poly::{GaussPoly, Poly};
use super::rational::{ExtendedReal, GaussRational, Rational};
use crate::error::{Error, Result};

/// Reduced quotient of Gaussian-rational polynomials.
///
/// Canonical form: `gcd(num, den) = 1` and `den` is monic. The constant
/// function `∞` is the single exception to `den != 0` and is stored as `1/0`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RatFunc {
    num: GaussPoly,
    den: GaussPoly,
}

impl RatFunc {
    /// Reduces `num/den`. Fails only for `0/0`.
    pub fn new(num: GaussPoly, den: GaussPoly) -> Result<Self> {
        if den.is_zero() {
            return if num.is_zero() {
                Err(Error::Indeterminate)
            } else {
                Ok(Self::infinity())
            };
        }
        let g = GaussPoly::gcd(&num, &den);
        let (num, _) = num.div_rem(&g);
        let (den, _) = den.div_rem(&g);
        let lead = den.leading().cloned().expect("non-zero denominator");
        let inv = GaussRational::one() / lead;
        Ok(RatFunc { num: num.scale(&inv), den: den.scale(&inv) })
    }

    pub fn from_real(num: &Poly, den: &Poly) -> Result<Self> {
        Self::new(num.to_gauss(), den.to_gauss())
    }

    pub fn polynomial(p: GaussPoly) -> Self {
        RatFunc { num: p, den: GaussPoly::one() }
    }

    pub fn constant(c: GaussRational) -> Self {
        Self::polynomial(GaussPoly::constant(c))
    }

    pub fn real_constant(x: &ExtendedReal) -> Self {
        match x {
            ExtendedReal::Finite(x) => Self::constant(GaussRational::real(x.clone())),
            ExtendedReal::Infinity => Self::infinity(),
        }
    }

    pub fn infinity() -> Self {
        RatFunc { num: GaussPoly::one(), den: GaussPoly::zero() }
    }

    pub fn is_infinity(&self) -> bool {
        self.den.is_zero()
    }

    pub fn numerator(&self) -> &GaussPoly {
        &self.num
    }

    pub fn denominator(&self) -> &GaussPoly {
        &self.den
    }

    pub fn is_constant(&self) -> bool {
        self.num.is_constant() && self.den.is_constant()
    }

    pub fn is_real(&self) -> bool {
        self.num.coeffs().iter().chain(self.den.coeffs()).all(GaussRational::is_real)
    }

    /// Numerator and denominator with real coefficients, if the function is real.
    pub fn real_parts(&self) -> Option<(Poly, Poly)> {
        self.is_real()
            .then(|| (self.num.map(|c| c.re.clone()), self.den.map(|c| c.re.clone())))
    }

    /// `deg num - deg den`, undefined for `0` and `∞`.
    pub fn degree_excess(&self) -> Option<isize> {
        (!self.num.is_zero() && !self.den.is_zero()).then(|| self.num.degree() - self.den.degree())
    }

    pub fn eval_c64(&self, z: Complex64) -> ComplexPoint {
        let d = self.den.eval_c64(z);
        if d == Complex64::new(0.0, 0.0) {
            return ComplexPoint::Infinity;
        }
        ComplexPoint::Finite(self.num.eval_c64(z) / d)
    }

    /// Exact value at a rational point, `None` at a pole.
    pub fn eval(&self, x: &Rational) -> Option<GaussRational> {
        let x = GaussRational::real(x.clone());
        let d = self.den.eval(&x);
        (!d.is_zero()).then(|| self.num.eval(&x) / d)
    }
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_infinity() {
            f.write_str("inf")
        } else if self.den == GaussPoly::one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({}) / ({})", self.num, self.den)
        }
    }
}
