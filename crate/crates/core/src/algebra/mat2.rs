use std::fmt;
use std::ops::Mul;

use num_traits::{One, Zero};

use super::rational::{int, Rational};

/// 2x2 matrix of rationals, row-major.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Mat2Q(pub [[Rational; 2]; 2]);

impl Mat2Q {
    pub fn new(a: Rational, b: Rational, c: Rational, d: Rational) -> Self {
        Mat2Q([[a, b], [c, d]])
    }

    pub fn from_ints(a: i64, b: i64, c: i64, d: i64) -> Self {
        Mat2Q::new(int(a), int(b), int(c), int(d))
    }

    pub fn identity() -> Self {
        Mat2Q::from_ints(1, 0, 0, 1)
    }

    pub fn zero() -> Self {
        Mat2Q::from_ints(0, 0, 0, 0)
    }

    /// The rotation by 90 degrees, `[[0, -1], [1, 0]]`.
    pub fn j() -> Self {
        Mat2Q::from_ints(0, -1, 1, 0)
    }

    /// `diag(1, -1)`; conjugation by it flips the off-diagonal signs.
    pub fn flip() -> Self {
        Mat2Q::from_ints(1, 0, 0, -1)
    }

    pub fn get(&self, i: usize, j: usize) -> &Rational {
        &self.0[i][j]
    }

    pub fn det(&self) -> Rational {
        let m = &self.0;
        &m[0][0] * &m[1][1] - &m[0][1] * &m[1][0]
    }

    pub fn trace(&self) -> Rational {
        &self.0[0][0] + &self.0[1][1]
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().flatten().all(Zero::is_zero)
    }

    pub fn is_identity(&self) -> bool {
        *self == Mat2Q::identity()
    }

    pub fn is_sl2(&self) -> bool {
        self.det().is_one()
    }

    pub fn transpose(&self) -> Self {
        let m = &self.0;
        Mat2Q::new(m[0][0].clone(), m[1][0].clone(), m[0][1].clone(), m[1][1].clone())
    }

    /// Adjugate `[[d, -b], [-c, a]]`, the inverse when `det = 1`.
    pub fn adjugate(&self) -> Self {
        let m = &self.0;
        Mat2Q::new(m[1][1].clone(), -&m[0][1], -&m[1][0], m[0][0].clone())
    }

    pub fn inverse(&self) -> Option<Self> {
        let d = self.det();
        if d.is_zero() {
            return None;
        }
        Some(self.adjugate().scale(&(Rational::one() / d)))
    }

    pub fn scale(&self, c: &Rational) -> Self {
        let m = &self.0;
        Mat2Q([
            [&m[0][0] * c, &m[0][1] * c],
            [&m[1][0] * c, &m[1][1] * c],
        ])
    }

    pub fn apply(&self, v: &(Rational, Rational)) -> (Rational, Rational) {
        let m = &self.0;
        (
            &m[0][0] * &v.0 + &m[0][1] * &v.1,
            &m[1][0] * &v.0 + &m[1][1] * &v.1,
        )
    }
}

impl Mul for &Mat2Q {
    type Output = Mat2Q;
    fn mul(self, rhs: &Mat2Q) -> Mat2Q {
        let (a, b) = (&self.0, &rhs.0);
        let e = |i: usize, j: usize| &a[i][0] * &b[0][j] + &a[i][1] * &b[1][j];
        Mat2Q([[e(0, 0), e(0, 1)], [e(1, 0), e(1, 1)]])
    }
}

impl Mul for Mat2Q {
    type Output = Mat2Q;
    fn mul(self, rhs: Mat2Q) -> Mat2Q {
        &self * &rhs
    }
}

impl fmt::Display for Mat2Q {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let m = &self.0;
        write!(f, "[[{}, {}], [{}, {}]]", m[0][0], m[0][1], m[1][0], m[1][1])
    }
}
