//! Rank-one projections, elementary factors `1 + p(z) J P`, and the
//! factorization container.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use crate::algebra::{ExtendedReal, Mat2Q, Poly, PolyMat, Rational};
use crate::error::{Error, Result};

/// Orthogonal projection onto the line through a primitive integer vector.
///
/// The direction is canonical (coprime components, first non-zero component
/// positive), so two projections are equal iff their directions are equal.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Projection {
    v1: BigInt,
    v2: BigInt,
}

/// Projection onto the line through `(v1, v2)`.
pub fn projection_of(v1: impl Into<BigInt>, v2: impl Into<BigInt>) -> Result<Projection> {
    Projection::new(v1, v2)
}

impl Projection {
    pub fn new(v1: impl Into<BigInt>, v2: impl Into<BigInt>) -> Result<Self> {
        let (mut v1, mut v2) = (v1.into(), v2.into());
        if v1.is_zero() && v2.is_zero() {
            return Err(Error::ZeroDirection);
        }
        let g = v1.gcd(&v2);
        v1 /= &g;
        v2 /= &g;
        if v1.is_negative() || (v1.is_zero() && v2.is_negative()) {
            v1 = -v1;
            v2 = -v2;
        }
        Ok(Projection { v1, v2 })
    }

    /// Projection onto the line through a rational vector.
    pub fn from_rational(a: &Rational, b: &Rational) -> Result<Self> {
        let l = a.denom().lcm(b.denom());
        let scale = Rational::from_integer(l);
        let (a, b) = (a * &scale, b * &scale);
        Self::new(a.to_integer(), b.to_integer())
    }

    pub fn direction(&self) -> (&BigInt, &BigInt) {
        (&self.v1, &self.v2)
    }

    pub fn direction_rational(&self) -> (Rational, Rational) {
        (Rational::from_integer(self.v1.clone()), Rational::from_integer(self.v2.clone()))
    }

    /// `v v^t / (v . v)`
    pub fn matrix(&self) -> Mat2Q {
        let n = Rational::from_integer(&self.v1 * &self.v1 + &self.v2 * &self.v2);
        let e = |a: &BigInt, b: &BigInt| Rational::from_integer(a * b) / &n;
        Mat2Q::new(
            e(&self.v1, &self.v1),
            e(&self.v1, &self.v2),
            e(&self.v2, &self.v1),
            e(&self.v2, &self.v2),
        )
    }

    /// `J P`
    pub fn jp(&self) -> Mat2Q {
        &Mat2Q::j() * &self.matrix()
    }

    /// Canonical direction spanning the null space `N(P)`.
    pub fn kernel(&self) -> (BigInt, BigInt) {
        let k = Projection::new(-&self.v2, self.v1.clone()).expect("non-zero direction");
        (k.v1, k.v2)
    }

    /// The extended real number represented by `N(P)`.
    pub fn boundary_point(&self) -> ExtendedReal {
        let (k1, k2) = self.kernel();
        ExtendedReal::from_vector(&Rational::from_integer(k1), &Rational::from_integer(k2))
            .expect("non-zero kernel vector")
    }

    /// `I P I` with `I = diag(1, -1)`.
    pub fn flipped(&self) -> Projection {
        Projection::new(self.v1.clone(), -&self.v2).expect("non-zero direction")
    }
}

impl fmt::Display for Projection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "P({}, {})", self.v1, self.v2)
    }
}

/// Elementary factor `1 + p(z) J P` with `p != 0`, `p(0) = 0`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Factor {
    p: Poly,
    proj: Projection,
}

impl Factor {
    pub fn new(p: Poly, proj: Projection) -> Result<Self> {
        if p.is_zero() || !p.coeff(0).is_zero() {
            return Err(Error::InvalidFactor);
        }
        Ok(Factor { p, proj })
    }

    /// `L z J P`
    pub fn linear(length: Rational, proj: Projection) -> Result<Self> {
        Self::new(Poly::monomial(length, 1), proj)
    }

    pub fn poly(&self) -> &Poly {
        &self.p
    }

    pub fn projection(&self) -> &Projection {
        &self.proj
    }

    /// `L` if the polynomial is `L z`.
    pub fn linear_length(&self) -> Option<&Rational> {
        (self.p.degree() == 1).then(|| &self.p.coeffs()[1])
    }

    pub fn inverse(&self) -> Factor {
        Factor { p: -&self.p, proj: self.proj.clone() }
    }
}

impl fmt::Display for Factor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "1 + [{}] J {}", self.p, self.proj)
    }
}

/// `1 + p(z) J P` as a polynomial matrix.
pub fn elementary(f: &Factor) -> PolyMat {
    let jp = f.proj.jp();
    let entry = |i: usize, j: usize| {
        let delta = if i == j { Poly::one() } else { Poly::zero() };
        &delta + &f.p.scale(jp.get(i, j))
    };
    PolyMat::new(entry(0, 0), entry(0, 1), entry(1, 0), entry(1, 1))
}

/// Conjugates `J P` by `s`: returns `(c, Q)` with `s^-1 J P s = c J Q`, `c > 0`,
/// and `Q` the projection onto `s^t v`.
pub fn conjugate_jp(s: &Mat2Q, p: &Projection) -> Result<(Rational, Projection)> {
    if !s.is_sl2() {
        return Err(Error::DetNotOne);
    }
    let v = p.direction_rational();
    let w = s.transpose().apply(&v);
    let norm = |x: &(Rational, Rational)| &x.0 * &x.0 + &x.1 * &x.1;
    let c = norm(&w) / norm(&v);
    Ok((c, Projection::from_rational(&w.0, &w.1)?))
}

/// The product `J P_1 J P_2 ... J P_N` and the facts read off from it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct JpChain {
    pub product: Mat2Q,
    pub nonzero: bool,
    /// Meaningful only when `nonzero`: a non-zero singular 2x2 matrix is
    /// diagonalizable iff its trace is non-zero.
    pub diagonalizable: bool,
}

pub fn jp_chain(projs: &[Projection]) -> Result<JpChain> {
    let (first, rest) = projs.split_first().ok_or(Error::EmptyChain)?;
    let product = rest.iter().fold(first.jp(), |acc, p| &acc * &p.jp());
    let nonzero = !product.is_zero();
    let diagonalizable = nonzero && !product.trace().is_zero();
    Ok(JpChain { product, nonzero, diagonalizable })
}

/// `prefix * (1 + p_1 J P_1) ... (1 + p_N J P_N)` with `P_j != P_{j+1}` and `det prefix = 1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Factorization {
    prefix: Mat2Q,
    factors: Vec<Factor>,
}

impl Factorization {
    pub fn new(prefix: Mat2Q, factors: Vec<Factor>) -> Result<Self> {
        if !prefix.is_sl2() {
            return Err(Error::DetNotOne);
        }
        if let Some(i) = factors.windows(2).position(|w| w[0].proj == w[1].proj) {
            return Err(Error::RepeatedProjection(i, i + 1));
        }
        Ok(Factorization { prefix, factors })
    }

    pub fn from_factors(factors: Vec<Factor>) -> Result<Self> {
        Self::new(Mat2Q::identity(), factors)
    }

    pub fn identity() -> Self {
        Factorization { prefix: Mat2Q::identity(), factors: Vec::new() }
    }

    pub fn prefix(&self) -> &Mat2Q {
        &self.prefix
    }

    pub fn factors(&self) -> &[Factor] {
        &self.factors
    }

    pub fn len(&self) -> usize {
        self.factors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.factors.is_empty()
    }

    /// The same factor list with identity prefix.
    pub fn normalized(&self) -> Factorization {
        Factorization { prefix: Mat2Q::identity(), factors: self.factors.clone() }
    }

    /// The first `k` factors, identity prefix.
    pub fn leading(&self, k: usize) -> Factorization {
        Factorization { prefix: Mat2Q::identity(), factors: self.factors[..k].to_vec() }
    }

    /// The last `k` factors, identity prefix. For a transfer matrix these are
    /// the factors of the initial interval, since later intervals multiply on the left.
    pub fn trailing(&self, k: usize) -> Factorization {
        Factorization { prefix: Mat2Q::identity(), factors: self.factors[self.factors.len() - k..].to_vec() }
    }

    /// Factorization of the inverse of the normalized part.
    pub fn inverse(&self) -> Factorization {
        Factorization {
            prefix: Mat2Q::identity(),
            factors: self.factors.iter().rev().map(Factor::inverse).collect(),
        }
    }
}

impl fmt::Display for Factorization {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if !self.prefix.is_identity() {
            write!(f, "{} ", self.prefix)?;
        }
        if self.factors.is_empty() {
            return f.write_str("1");
        }
        for (k, fac) in self.factors.iter().enumerate() {
            if k > 0 {
                f.write_str(" ")?;
            }
            write!(f, "({fac})")?;
        }
        Ok(())
    }
}
