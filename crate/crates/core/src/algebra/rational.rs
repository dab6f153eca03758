use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// Arbitrary-precision rational, always kept in lowest terms with a positive denominator.
pub type Rational = BigRational;

pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Parses `"p/q"` or `"p"` with an optional leading minus sign. Decimal points,
/// exponents, whitespace and zero denominators are rejected.
pub fn parse_rational(s: &str) -> Option<Rational> {
    let ok = |part: &str| {
        let digits = part.strip_prefix('-').unwrap_or(part);
        !digits.is_empty() && digits.bytes().all(|b| b.is_ascii_digit())
    };
    match s.split_once('/') {
        Some((n, d)) => {
            if !ok(n) || d.is_empty() || !d.bytes().all(|b| b.is_ascii_digit()) {
                return None;
            }
            let n = BigInt::from_str(n).ok()?;
            let d = BigInt::from_str(d).ok()?;
            if d.is_zero() {
                return None;
            }
            Some(Rational::new(n, d))
        }
        None => ok(s).then(|| BigInt::from_str(s).ok().map(Rational::from_integer))?,
    }
}

pub fn rational_to_f64(r: &Rational) -> f64 {
    r.to_f64().unwrap_or_else(|| {
        if r.is_negative() {
            f64::NEG_INFINITY
        } else {
            f64::INFINITY
        }
    })
}

/// A point of the extended real line.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum ExtendedReal {
    Finite(Rational),
    Infinity,
}

impl ExtendedReal {
    /// Homogeneous representative `(x, 1)` or `(1, 0)`.
    pub fn vector(&self) -> (Rational, Rational) {
        match self {
            ExtendedReal::Finite(x) => (x.clone(), Rational::one()),
            ExtendedReal::Infinity => (Rational::one(), Rational::zero()),
        }
    }

    pub fn from_vector(v1: &Rational, v2: &Rational) -> Option<Self> {
        if v2.is_zero() {
            (!v1.is_zero()).then_some(ExtendedReal::Infinity)
        } else {
            Some(ExtendedReal::Finite(v1 / v2))
        }
    }
}

impl fmt::Display for ExtendedReal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExtendedReal::Finite(x) => write!(f, "{x}"),
            ExtendedReal::Infinity => f.write_str("inf"),
        }
    }
}

/// Complex number with rational real and imaginary parts.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GaussRational {
    pub re: Rational,
    pub im: Rational,
}

impl GaussRational {
    pub fn new(re: Rational, im: Rational) -> Self {
        GaussRational { re, im }
    }

    pub fn real(re: Rational) -> Self {
        GaussRational { re, im: Rational::zero() }
    }

    pub fn i() -> Self {
        GaussRational { re: Rational::zero(), im: Rational::one() }
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    pub fn conj(&self) -> Self {
        GaussRational { re: self.re.clone(), im: -&self.im }
    }

    pub fn norm_sqr(&self) -> Rational {
        &self.re * &self.re + &self.im * &self.im
    }

    pub fn to_c64(&self) -> Complex64 {
        Complex64::new(rational_to_f64(&self.re), rational_to_f64(&self.im))
    }
}

impl fmt::Display for GaussRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.im.is_zero() {
            write!(f, "{}", self.re)
        } else if self.re.is_zero() {
            write!(f, "({})i", self.im)
        } else {
            write!(f, "{}+({})i", self.re, self.im)
        }
    }
}

impl From<Rational> for GaussRational {
    fn from(re: Rational) -> Self {
        GaussRational::real(re)
    }
}

impl Zero for GaussRational {
    fn zero() -> Self {
        GaussRational::real(Rational::zero())
    }
    fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }
}

impl One for GaussRational {
    fn one() -> Self {
        GaussRational::real(Rational::one())
    }
}

impl Add for GaussRational {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        GaussRational { re: self.re + rhs.re, im: self.im + rhs.im }
    }
}

impl Sub for GaussRational {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        GaussRational { re: self.re - rhs.re, im: self.im - rhs.im }
    }
}

impl Mul for GaussRational {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        GaussRational {
            re: &self.re * &rhs.re - &self.im * &rhs.im,
            im: &self.re * &rhs.im + &self.im * &rhs.re,
        }
    }
}

impl Div for GaussRational {
    type Output = Self;
    fn div(self, rhs: Self) -> Self {
        let n = rhs.norm_sqr();
        assert!(!n.is_zero(), "division by zero Gaussian rational");
        let p = self * rhs.conj();
        GaussRational { re: p.re / &n, im: p.im / n }
    }
}

impl Neg for GaussRational {
    type Output = Self;
    fn neg(self) -> Self {
        GaussRational { re: -self.re, im: -self.im }
    }
}
