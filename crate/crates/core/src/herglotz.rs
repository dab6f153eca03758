//! Möbius action on the Riemann sphere and on rational functions, Toda-map
//! application, and Herglotz-function checks for rational functions.

use num_complex::Complex64;
use num_traits::{Signed, Zero};

use crate::algebra::{CMat2, ComplexPoint, ExtendedReal, GaussPoly, PolyMat, RatFunc, Rational};
use crate::classify::{classify, Verdict};
use crate::error::{Error, Result};
use crate::factorization::expand;
use crate::factors::Factorization;
use crate::grid::SampleGrid;

/// Homogeneous coordinates `(w1, w2) != 0` of the point `w1 / w2`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ProjectivePoint {
    pub w1: Complex64,
    pub w2: Complex64,
}

impl ProjectivePoint {
    pub fn new(w1: Complex64, w2: Complex64) -> Option<Self> {
        (w1 != Complex64::zero() || w2 != Complex64::zero()).then_some(ProjectivePoint { w1, w2 })
    }

    pub fn finite(w: Complex64) -> Self {
        ProjectivePoint { w1: w, w2: Complex64::new(1.0, 0.0) }
    }

    pub fn infinity() -> Self {
        ProjectivePoint { w1: Complex64::new(1.0, 0.0), w2: Complex64::zero() }
    }

    pub fn value(&self) -> ComplexPoint {
        if self.w2 == Complex64::zero() {
            ComplexPoint::Infinity
        } else {
            ComplexPoint::Finite(self.w1 / self.w2)
        }
    }

    /// Projective equality up to a relative tolerance.
    pub fn approx_eq(&self, other: &ProjectivePoint, tol: f64) -> bool {
        let lhs = (self.w1 * other.w2 - self.w2 * other.w1).norm();
        let scale = self.w1.norm().hypot(self.w2.norm()) * other.w1.norm().hypot(other.w2.norm());
        lhs <= tol * scale
    }
}

impl From<ComplexPoint> for ProjectivePoint {
    fn from(p: ComplexPoint) -> Self {
        match p {
            ComplexPoint::Finite(w) => ProjectivePoint::finite(w),
            ComplexPoint::Infinity => ProjectivePoint::infinity(),
        }
    }
}

/// `b * w` acting on homogeneous coordinates.
pub fn moebius_point(b: &CMat2, w: &ProjectivePoint) -> Result<ProjectivePoint> {
    if b.det() == Complex64::zero() {
        return Err(Error::SingularMatrix);
    }
    let m = &b.0;
    Ok(ProjectivePoint {
        w1: m[0][0] * w.w1 + m[0][1] * w.w2,
        w2: m[1][0] * w.w1 + m[1][1] * w.w2,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    Plus,
    Minus,
}

/// `G = ±(A · (±F))`, exactly. The minus side uses `-(A · (-F)) = (IAI) · F`.
pub fn toda_apply(a: &PolyMat, f: &RatFunc, side: Side) -> Result<RatFunc> {
    let m = match side {
        Side::Plus => a.clone(),
        Side::Minus => a.flip_conjugate(),
    };
    let e = |i: usize, j: usize| m.entry(i, j).to_gauss();
    let (n, d) = (f.numerator(), f.denominator());
    let num: GaussPoly = &(&e(0, 0) * n) + &(&e(0, 1) * d);
    let den: GaussPoly = &(&e(1, 0) * n) + &(&e(1, 1) * d);
    RatFunc::new(num, den)
}

/// Whether `A(z) · x = x` identically, checked exactly.
pub fn fixes_point(a: &PolyMat, x: &ExtendedReal) -> Result<bool> {
    let c = RatFunc::real_constant(x);
    Ok(toda_apply(a, &c, Side::Plus)? == c)
}

#[derive(Debug, Clone, PartialEq)]
pub struct HerglotzSample {
    pub passed: bool,
    /// Smallest `Im F(z)` over the evaluated grid points.
    pub min_imag: f64,
    /// First grid point attaining `min_imag`; `None` if nothing was evaluated.
    pub witness: Option<Complex64>,
    pub evaluated: usize,
    pub poles_skipped: usize,
}

pub const HERGLOTZ_TOLERANCE: f64 = 1e-9;

/// Samples `Im F >= 0` on the grid. A pass means no violation was found.
pub fn herglotz_check(f: &RatFunc, grid: &SampleGrid) -> Result<HerglotzSample> {
    grid.validate()?;
    let mut out = HerglotzSample {
        passed: true,
        min_imag: f64::INFINITY,
        witness: None,
        evaluated: 0,
        poles_skipped: 0,
    };
    if f.is_infinity() {
        out.poles_skipped = grid.len();
        return Ok(out);
    }
    let (num, den) = (f.numerator(), f.denominator());
    for z in grid.points() {
        let d = den.eval_c64(z);
        if d.norm() <= HERGLOTZ_TOLERANCE * den.abs_bound_c64(z) {
            out.poles_skipped += 1;
            continue;
        }
        let v = num.eval_c64(z) / d;
        out.evaluated += 1;
        if v.im < -HERGLOTZ_TOLERANCE * (1.0 + v.norm()) {
            out.passed = false;
        }
        if v.im < out.min_imag {
            out.min_imag = v.im;
            out.witness = Some(z);
        }
    }
    Ok(out)
}

/// The rational Herglotz function `T^{-1}(z) · y` for a transfer matrix `T`.
pub fn herglotz_generate(tm: &Factorization, y: &ExtendedReal) -> Result<RatFunc> {
    match classify(tm) {
        Ok(Verdict::TransferMatrix(_) | Verdict::Constant) => {}
        Ok(_) | Err(Error::NonIdentityPrefix) => return Err(Error::NotATransferMatrix),
        Err(e) => return Err(e),
    }
    let inv = expand(tm).sl2_inverse()?;
    let (y1, y2) = y.vector();
    let row = |i: usize| &inv.entry(i, 0).scale(&y1) + &inv.entry(i, 1).scale(&y2);
    RatFunc::from_real(&row(0), &row(1))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Limit {
    Finite(Rational),
    Infinite,
}

impl Limit {
    pub fn finite(&self) -> Option<&Rational> {
        match self {
            Limit::Finite(x) => Some(x),
            Limit::Infinite => None,
        }
    }
}

/// `b = lim -i F(iy) / y` and `c = lim -i y F(iy)` as `y -> ∞`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Asymptotics {
    pub b: Limit,
    pub c: Limit,
}

/// Exact asymptotics of a real rational function from its leading coefficients.
pub fn asymptotics(f: &RatFunc) -> Result<Asymptotics> {
    if f.is_infinity() {
        return Err(Error::IdenticallyInfinite);
    }
    let (num, den) = f.real_parts().ok_or(Error::NonRealCoefficients)?;
    if num.is_zero() {
        return Ok(Asymptotics { b: Limit::Finite(Rational::zero()), c: Limit::Finite(Rational::zero()) });
    }
    let excess = num.degree() - den.degree();
    let ratio = num.leading().expect("non-zero") / den.leading().expect("non-zero");
    let b = match excess {
        e if e >= 2 => Limit::Infinite,
        1 => Limit::Finite(ratio.clone()),
        _ => Limit::Finite(Rational::zero()),
    };
    let c = match excess {
        e if e >= 0 => Limit::Infinite,
        -1 => Limit::Finite(-ratio),
        _ => Limit::Finite(Rational::zero()),
    };
    Ok(Asymptotics { b, c })
}

impl Asymptotics {
    /// The growth constraints every Herglotz function satisfies.
    pub fn is_herglotz_compatible(&self) -> bool {
        let b_ok = self.b.finite().is_some_and(|b| !b.is_negative());
        let c_ok = match &self.c {
            Limit::Infinite => true,
            Limit::Finite(c) => c.is_positive(),
        };
        b_ok && c_ok
    }
}
