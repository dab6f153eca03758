//! Toda-map classification of canonical factorizations, the positivity
//! certificate `i(A*(z) J A(z) - J) >= 0`, and Weyl disks.

use num_bigint::BigInt;
use num_complex::{Complex, Complex64};
use num_integer::Integer;
use num_rational::Ratio;
use num_traits::{float::FloatCore, One, Signed, ToPrimitive, Zero};

use crate::algebra::{CMat2, ComplexPoint, ExtendedReal, Poly, PolyMat, Rational};
use crate::error::{Error, Result};
use crate::factors::{Factorization, Projection};
use crate::grid::SampleGrid;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Verdict {
    /// No factors: the identity, whose domain is everything.
    Constant,
    /// `(1 + L_1 z J P_1) ... (1 + L_N z J P_N)` with every `L_j > 0`.
    TransferMatrix(Vec<(Rational, Projection)>),
    /// Same shape with every `L_j < 0`; the inverse is a transfer matrix.
    InverseTransferMatrix(Vec<(Rational, Projection)>),
    /// A single factor `1 + p J P` with `deg p >= 2`. Its domain is the single
    /// pair `(x, -x)` where `x` is the boundary point represented by `N(P)`.
    TrivialSingular { p: Poly, proj: Projection, fixed_point: ExtendedReal },
    /// No Herglotz pair is mapped to a Herglotz pair.
    EmptyDomain,
}

impl Verdict {
    pub fn name(&self) -> &'static str {
        match self {
            Verdict::Constant => "Constant",
            Verdict::TransferMatrix(_) => "TransferMatrix",
            Verdict::InverseTransferMatrix(_) => "InverseTransferMatrix",
            Verdict::TrivialSingular { .. } => "TrivialSingular",
            Verdict::EmptyDomain => "EmptyDomain",
        }
    }
}

/// Classifies the matrix function given by a canonical factorization.
///
/// The prefix must be the identity; callers with a constant prefix classify
/// [`Factorization::normalized`] instead.
pub fn classify(f: &Factorization) -> Result<Verdict> {
    if !f.prefix().is_identity() {
        return Err(Error::NonIdentityPrefix);
    }
    let factors = f.factors();
    if factors.is_empty() {
        return Ok(Verdict::Constant);
    }
    if let [single] = factors {
        if single.poly().degree() >= 2 {
            let proj = single.projection().clone();
            return Ok(Verdict::TrivialSingular {
                p: single.poly().clone(),
                fixed_point: proj.boundary_point(),
                proj,
            });
        }
    }
    let lengths: Option<Vec<_>> = factors
        .iter()
        .map(|fac| fac.linear_length().map(|l| (l.clone(), fac.projection().clone())))
        .collect();
    Ok(match lengths {
        Some(ls) if ls.iter().all(|(l, _)| l.is_positive()) => Verdict::TransferMatrix(ls),
        Some(ls) if ls.iter().all(|(l, _)| l.is_negative()) => Verdict::InverseTransferMatrix(ls),
        _ => Verdict::EmptyDomain,
    })
}

/// Result of sampling the smallest eigenvalue of `M(z) = i(A*(z) J A(z) - J)`.
#[derive(Debug, Clone, PartialEq)]
pub struct HpReport {
    pub grid: SampleGrid,
    pub min_eigenvalue: f64,
    /// First grid point attaining `min_eigenvalue`.
    pub witness: Complex64,
    /// `||M(witness)||_inf`
    pub witness_norm: f64,
    /// Number of grid points violating the relative tolerance.
    pub violations: usize,
    pub passed: bool,
}

/// Relative slack for the positivity test.
pub const HP_TOLERANCE: f64 = 1e-9;

/// `M(z) = i(A* J A - J)` for a matrix value `A`.
pub fn hp_matrix(a: &CMat2) -> CMat2 {
    let j = CMat2::j();
    (a.adjoint() * j * *a).sub(&j).scale(Complex64::new(0.0, 1.0))
}

/// Smaller eigenvalue of a 2x2 Hermitian matrix.
pub fn hermitian_min_eigenvalue(m: &CMat2) -> f64 {
    let p = m.0[0][0].re;
    let r = m.0[1][1].re;
    let q = (m.0[0][1] + m.0[1][0].conj()) * 0.5;
    0.5 * (p + r) - (0.5 * (p - r)).hypot(q.norm())
}

/// `A` as integer coefficient lists over a common denominator, for exact
/// evaluation at dyadic points (every binary64 value is one).
struct ScaledMatrix {
    coeffs: [[Vec<BigInt>; 2]; 2],
    denom: BigInt,
    degree: usize,
}

/// `x = m * 2^e` exactly.
fn dyadic(x: f64) -> (BigInt, i32) {
    let (mantissa, exponent, sign) = FloatCore::integer_decode(x);
    (BigInt::from(mantissa) * i32::from(sign), i32::from(exponent))
}

fn ratio_to_f64(n: &BigInt, d: &BigInt) -> f64 {
    Ratio::new_raw(n.clone(), d.clone()).to_f64().unwrap_or(f64::NAN)
}

/// `|u|^2` of a Gaussian integer.
fn norm_sqr(u: &Complex<BigInt>) -> BigInt {
    &u.re * &u.re + &u.im * &u.im
}

/// `Im(conj(u) v)`
fn im_conj_mul(u: &Complex<BigInt>, v: &Complex<BigInt>) -> BigInt {
    &u.re * &v.im - &u.im * &v.re
}

/// Smaller eigenvalue and `||.||_inf` of `M = i(A* J A - J)` at a grid point.
#[derive(Debug, Clone, Copy, PartialEq)]
struct HpSample {
    min_eigenvalue: f64,
    norm: f64,
}

impl ScaledMatrix {
    fn new(a: &PolyMat) -> Self {
        let degree = a.degree().max(0) as usize;
        let mut denom = BigInt::one();
        for i in 0..2 {
            for j in 0..2 {
                for c in a.entry(i, j).coeffs() {
                    denom = denom.lcm(c.denom());
                }
            }
        }
        let row = |i: usize, j: usize| -> Vec<BigInt> {
            (0..=degree).map(|k| (a.entry(i, j).coeff(k) * &denom).to_integer()).collect()
        };
        let coeffs = [[row(0, 0), row(0, 1)], [row(1, 0), row(1, 1)]];
        ScaledMatrix { coeffs, denom, degree }
    }

    /// Exact `M(z)` scaled by `s^2 = (denom t^degree)^2` with `z = w / t`, then
    /// reduced to floats with a cancellation-free eigenvalue formula.
    fn sample(&self, z: Complex64) -> HpSample {
        let ((x, ex), (y, ey)) = (dyadic(z.re), dyadic(z.im));
        let e = if x.is_zero() { ey } else { ex.min(ey) };
        let shift = |m: BigInt, from: i32| m << (from - e).max(0) as usize;
        let (x, y) = (shift(x, ex), shift(y, ey));
        let (w, t) = if e >= 0 {
            (Complex::new(x << e as usize, y << e as usize), BigInt::one())
        } else {
            (Complex::new(x, y), BigInt::one() << (-e) as usize)
        };
        let mut t_pows = vec![BigInt::one()];
        for k in 1..=self.degree {
            t_pows.push(&t_pows[k - 1] * &t);
        }
        let eval = |c: &[BigInt]| -> Complex<BigInt> {
            let d = self.degree;
            let mut acc = Complex::new(c[d].clone(), BigInt::zero());
            for j in (0..d).rev() {
                acc = &acc * &w;
                acc.re += &c[j] * &t_pows[d - j];
            }
            acc
        };
        let [[a11, a12], [a21, a22]] = [
            [eval(&self.coeffs[0][0]), eval(&self.coeffs[0][1])],
            [eval(&self.coeffs[1][0]), eval(&self.coeffs[1][1])],
        ];
        let s = &self.denom * &t_pows[self.degree];
        let s2 = &s * &s;
        let m11: BigInt = im_conj_mul(&a21, &a11) * -2i32;
        let m22: BigInt = im_conj_mul(&a22, &a12) * -2i32;
        // M_12 = i q
        let q = &(&a21.conj() * &a12) - &(&a11.conj() * &a22) + Complex::new(s2.clone(), BigInt::zero());
        let q2 = norm_sqr(&q);
        let s4 = &s2 * &s2;
        let trace = ratio_to_f64(&(&m11 + &m22), &s2);
        let det = ratio_to_f64(&(&m11 * &m22 - &q2), &s4);
        let diff = &m11 - &m22;
        let root = ratio_to_f64(&(&diff * &diff + &q2 * 4u32), &s4).sqrt();
        let min_eigenvalue = if trace > 0.0 { 2.0 * det / (trace + root) } else { 0.5 * (trace - root) };
        let q_abs = ratio_to_f64(&q2, &s4).sqrt();
        let norm = (ratio_to_f64(&m11.abs(), &s2) + q_abs).max(q_abs + ratio_to_f64(&m22.abs(), &s2));
        HpSample { min_eigenvalue, norm }
    }
}

/// Samples the smallest eigenvalue of `i(A*(z) J A(z) - J)` over the grid.
///
/// `M(z)` is formed exactly at each (dyadic) grid point, so it is Hermitian
/// by construction and the eigenvalue carries only final rounding error.
pub fn hp_min_eigen_sample(a: &PolyMat, grid: &SampleGrid) -> Result<HpReport> {
    if !a.has_unit_det() {
        return Err(Error::DetNotOne);
    }
    grid.validate()?;
    let scaled = ScaledMatrix::new(a);
    let mut report = HpReport {
        grid: *grid,
        min_eigenvalue: f64::INFINITY,
        witness: Complex64::new(0.0, 0.0),
        witness_norm: 0.0,
        violations: 0,
        passed: true,
    };
    for z in grid.points() {
        let HpSample { min_eigenvalue: lambda, norm } = scaled.sample(z);
        if lambda < -HP_TOLERANCE * (1.0 + norm) {
            report.violations += 1;
            report.passed = false;
        }
        if lambda < report.min_eigenvalue {
            report.min_eigenvalue = lambda;
            report.witness = z;
            report.witness_norm = norm;
        }
    }
    Ok(report)
}

/// Image of the closed upper half plane under a Möbius map: a closed disk, the
/// closed exterior of a disk, or a closed half plane.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Disk {
    Round { center: Complex64, radius: f64, exterior: bool },
    HalfPlane { boundary: [Complex64; 2], interior: Complex64 },
}

/// `Im(conj(a) b)`, the signed area of `(a, b)`.
fn cross(a: Complex64, b: Complex64) -> f64 {
    a.re * b.im - a.im * b.re
}

impl Disk {
    pub fn is_half_plane(&self) -> bool {
        matches!(self, Disk::HalfPlane { .. })
    }

    /// Signed distance to the boundary line, positive on the interior side.
    fn half_plane_distance(boundary: &[Complex64; 2], interior: Complex64, w: Complex64) -> f64 {
        let d = boundary[1] - boundary[0];
        let d = d / d.norm();
        let side = cross(d, interior - boundary[0]).signum();
        side * cross(d, w - boundary[0])
    }

    /// Inward unit normal of a half plane.
    fn half_plane_normal(boundary: &[Complex64; 2], interior: Complex64) -> Complex64 {
        let d = boundary[1] - boundary[0];
        let d = d / d.norm();
        d * Complex64::new(0.0, cross(d, interior - boundary[0]).signum())
    }

    pub fn contains(&self, w: Complex64, slack: f64) -> bool {
        match *self {
            Disk::Round { center, radius, exterior: false } => (w - center).norm() <= radius + slack,
            Disk::Round { center, radius, exterior: true } => (w - center).norm() >= radius - slack,
            Disk::HalfPlane { boundary, interior } => {
                Self::half_plane_distance(&boundary, interior, w) >= -slack
            }
        }
    }

    /// Whether `inner` is a subset of `self`, up to `slack`.
    pub fn contains_disk(&self, inner: &Disk, slack: f64) -> bool {
        use Disk::*;
        match (*self, *inner) {
            (Round { center: c1, radius: r1, exterior: false }, Round { center: c2, radius: r2, exterior: false }) => {
                (c1 - c2).norm() + r2 <= r1 + slack
            }
            (Round { center: c1, radius: r1, exterior: true }, Round { center: c2, radius: r2, exterior: false }) => {
                (c1 - c2).norm() >= r1 + r2 - slack
            }
            (HalfPlane { boundary, interior }, Round { center, radius, exterior: false }) => {
                Self::half_plane_distance(&boundary, interior, center) - radius >= -slack
            }
            (HalfPlane { boundary: b1, interior: i1 }, HalfPlane { boundary: b2, interior: i2 }) => {
                let n1 = Self::half_plane_normal(&b1, i1);
                let n2 = Self::half_plane_normal(&b2, i2);
                (n1 - n2).norm() <= slack && Self::half_plane_distance(&b1, i1, b2[0]) >= -slack
            }
            _ => false,
        }
    }
}

/// The Weyl disk `A^{-1}(z) * closure(C+)` at a point of the open upper half plane.
pub fn weyl_disk(a: &PolyMat, z: ComplexPoint) -> Result<Disk> {
    let z = match z {
        ComplexPoint::Finite(z) if z.im > 0.0 => z,
        _ => return Err(Error::ArgumentNotInUpperHalfPlane),
    };
    let g = a.sl2_inverse()?.eval_c64(z);
    // det g = 1 exactly; the float determinant may cancel to nothing
    Ok(image_of_upper_half_plane(&g, 1.0))
}

/// Image of `closure(C+)` under `w -> (alpha w + beta) / (gamma w + delta)`.
pub fn moebius_image_of_upper_half_plane(g: &CMat2) -> Disk {
    image_of_upper_half_plane(g, g.det().norm())
}

fn image_of_upper_half_plane(g: &CMat2, abs_det: f64) -> Disk {
    let [[alpha, beta], [gamma, delta]] = g.0;
    let apply = |w: Complex64| -> Option<Complex64> {
        let den = gamma * w + delta;
        (den != Complex64::zero()).then(|| (alpha * w + beta) / den)
    };
    let at_infinity = (gamma != Complex64::zero()).then(|| alpha / gamma);
    let i = Complex64::new(0.0, 1.0);

    // pole -delta/gamma on the real line (or at infinity) gives a half plane
    let im_cross = cross(gamma, delta);
    if gamma == Complex64::zero() || im_cross.abs() <= 1e-14 * gamma.norm() * delta.norm() {
        let mut pts = [0.0, 1.0, -1.0, 2.0]
            .into_iter()
            .filter_map(|x| apply(Complex64::new(x, 0.0)))
            .chain(at_infinity);
        let b0 = pts.next().expect("boundary point");
        let b1 = pts.find(|w| *w != b0).expect("second boundary point");
        let interior = apply(i).expect("pole is real");
        return Disk::HalfPlane { boundary: [b0, b1], interior };
    }

    // center is the image of the reflection of the pole across the real line
    let denom = delta * gamma.conj() - gamma * delta.conj();
    let center = (beta * gamma.conj() - alpha * delta.conj()) / denom;
    let radius = abs_det / denom.norm();
    // exterior iff the pole -delta/gamma lies in C+
    Disk::Round { center, radius, exterior: im_cross < 0.0 }
}
