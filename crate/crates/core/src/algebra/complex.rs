use std::ops::Mul;

use num_complex::Complex64;

/// Point of the Riemann sphere.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum ComplexPoint {
    Finite(Complex64),
    Infinity,
}

impl ComplexPoint {
    pub fn new(re: f64, im: f64) -> Self {
        ComplexPoint::Finite(Complex64::new(re, im))
    }

    pub fn finite(self) -> Option<Complex64> {
        match self {
            ComplexPoint::Finite(z) => Some(z),
            ComplexPoint::Infinity => None,
        }
    }

    pub fn is_infinite(self) -> bool {
        matches!(self, ComplexPoint::Infinity)
    }
}

impl From<Complex64> for ComplexPoint {
    fn from(z: Complex64) -> Self {
        ComplexPoint::Finite(z)
    }
}

/// 2x2 complex matrix in binary64, row-major.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CMat2(pub [[Complex64; 2]; 2]);

impl CMat2 {
    pub fn new(a: Complex64, b: Complex64, c: Complex64, d: Complex64) -> Self {
        CMat2([[a, b], [c, d]])
    }

    pub fn from_real(a: f64, b: f64, c: f64, d: f64) -> Self {
        let r = |x| Complex64::new(x, 0.0);
        CMat2::new(r(a), r(b), r(c), r(d))
    }

    pub fn identity() -> Self {
        CMat2::from_real(1.0, 0.0, 0.0, 1.0)
    }

    pub fn j() -> Self {
        CMat2::from_real(0.0, -1.0, 1.0, 0.0)
    }

    pub fn det(&self) -> Complex64 {
        let m = &self.0;
        m[0][0] * m[1][1] - m[0][1] * m[1][0]
    }

    /// Conjugate transpose.
    pub fn adjoint(&self) -> Self {
        let m = &self.0;
        CMat2::new(m[0][0].conj(), m[1][0].conj(), m[0][1].conj(), m[1][1].conj())
    }

    pub fn inverse(&self) -> Option<Self> {
        let d = self.det();
        if d == Complex64::new(0.0, 0.0) {
            return None;
        }
        let m = &self.0;
        Some(CMat2::new(m[1][1] / d, -m[0][1] / d, -m[1][0] / d, m[0][0] / d))
    }

    pub fn sub(&self, rhs: &CMat2) -> CMat2 {
        let (a, b) = (&self.0, &rhs.0);
        CMat2::new(a[0][0] - b[0][0], a[0][1] - b[0][1], a[1][0] - b[1][0], a[1][1] - b[1][1])
    }

    pub fn scale(&self, c: Complex64) -> CMat2 {
        let m = &self.0;
        CMat2::new(m[0][0] * c, m[0][1] * c, m[1][0] * c, m[1][1] * c)
    }

    /// Maximum absolute row sum.
    pub fn norm_inf(&self) -> f64 {
        self.0
            .iter()
            .map(|row| row[0].norm() + row[1].norm())
            .fold(0.0, f64::max)
    }
}

impl Mul for CMat2 {
    type Output = CMat2;
    fn mul(self, rhs: CMat2) -> CMat2 {
        let (a, b) = (&self.0, &rhs.0);
        let e = |i: usize, j: usize| a[i][0] * b[0][j] + a[i][1] * b[1][j];
        CMat2::new(e(0, 0), e(0, 1), e(1, 0), e(1, 1))
    }
}
