use std::fmt;
use std::ops::Mul;

use num_complex::Complex64;

use super::complex::{CMat2, ComplexPoint};
use super::mat2::Mat2Q;
use super::poly::Poly;
use crate::error::{Error, Result};

/// 2x2 matrix whose entries are rational polynomials in `z`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PolyMat(pub [[Poly; 2]; 2]);

impl PolyMat {
    pub fn new(a: Poly, b: Poly, c: Poly, d: Poly) -> Self {
        PolyMat([[a, b], [c, d]])
    }

    pub fn identity() -> Self {
        Self::constant(&Mat2Q::identity())
    }

    pub fn constant(m: &Mat2Q) -> Self {
        let e = |i: usize, j: usize| Poly::constant(m.0[i][j].clone());
        PolyMat::new(e(0, 0), e(0, 1), e(1, 0), e(1, 1))
    }

    /// Builds `sum_k z^k A_k`.
    pub fn from_coefficients(coefficients: &[Mat2Q]) -> Self {
        let entry = |i: usize, j: usize| {
            Poly::new(coefficients.iter().map(|m| m.0[i][j].clone()).collect())
        };
        PolyMat::new(entry(0, 0), entry(0, 1), entry(1, 0), entry(1, 1))
    }

    pub fn entry(&self, i: usize, j: usize) -> &Poly {
        &self.0[i][j]
    }

    /// Largest entry degree; -1 for the zero matrix.
    pub fn degree(&self) -> isize {
        self.0.iter().flatten().map(Poly::degree).max().unwrap_or(-1)
    }

    /// Coefficient matrix `A_k` of `z^k`.
    pub fn coefficient(&self, k: usize) -> Mat2Q {
        let e = |i: usize, j: usize| self.0[i][j].coeff(k);
        Mat2Q::new(e(0, 0), e(0, 1), e(1, 0), e(1, 1))
    }

    /// `A_0, ..., A_n`; a single zero matrix for the zero polynomial matrix.
    pub fn coefficients(&self) -> Vec<Mat2Q> {
        let n = self.degree().max(0) as usize;
        (0..=n).map(|k| self.coefficient(k)).collect()
    }

    pub fn at_zero(&self) -> Mat2Q {
        self.coefficient(0)
    }

    pub fn det(&self) -> Poly {
        let m = &self.0;
        &(&m[0][0] * &m[1][1]) - &(&m[0][1] * &m[1][0])
    }

    pub fn has_unit_det(&self) -> bool {
        self.det() == Poly::one()
    }

    /// `det = 1` and `A(0) = I`.
    pub fn is_normalized(&self) -> bool {
        self.has_unit_det() && self.at_zero().is_identity()
    }

    /// Adjugate inverse, valid because the determinant is identically one.
    pub fn sl2_inverse(&self) -> Result<PolyMat> {
        if !self.has_unit_det() {
            return Err(Error::DetNotOne);
        }
        let m = &self.0;
        Ok(PolyMat::new(m[1][1].clone(), -&m[0][1], -&m[1][0], m[0][0].clone()))
    }

    /// `I A I` with `I = diag(1, -1)`: the off-diagonal entries change sign.
    pub fn flip_conjugate(&self) -> PolyMat {
        let m = &self.0;
        PolyMat::new(m[0][0].clone(), -&m[0][1], -&m[1][0], m[1][1].clone())
    }

    pub fn eval(&self, z: ComplexPoint) -> Result<CMat2> {
        z.finite().map(|z| self.eval_c64(z)).ok_or(Error::InfiniteArgument)
    }

    pub fn eval_c64(&self, z: Complex64) -> CMat2 {
        let e = |i: usize, j: usize| self.0[i][j].eval_c64(z);
        CMat2::new(e(0, 0), e(0, 1), e(1, 0), e(1, 1))
    }
}

impl Mul for &PolyMat {
    type Output = PolyMat;
    fn mul(self, rhs: &PolyMat) -> PolyMat {
        let (a, b) = (&self.0, &rhs.0);
        let e = |i: usize, j: usize| &(&a[i][0] * &b[0][j]) + &(&a[i][1] * &b[1][j]);
        PolyMat::new(e(0, 0), e(0, 1), e(1, 0), e(1, 1))
    }
}

impl Mul for PolyMat {
    type Output = PolyMat;
    fn mul(self, rhs: PolyMat) -> PolyMat {
        &self * &rhs
    }
}

impl Mul<&PolyMat> for &Mat2Q {
    type Output = PolyMat;
    fn mul(self, rhs: &PolyMat) -> PolyMat {
        &PolyMat::constant(self) * rhs
    }
}

impl Mul<&Mat2Q> for &PolyMat {
    type Output = PolyMat;
    fn mul(self, rhs: &Mat2Q) -> PolyMat {
        self * &PolyMat::constant(rhs)
    }
}

impl fmt::Display for PolyMat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let m = &self.0;
        write!(f, "[[{}, {}], [{}, {}]]", m[0][0], m[0][1], m[1][0], m[1][1])
    }
}
