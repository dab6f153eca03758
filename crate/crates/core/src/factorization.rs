//! Constructive unique factorization of polynomial SL(2) matrix functions into
//! elementary factors.
//!
//! The algorithm splits off the constant term `A(0)`, then repeatedly brings the
//! leading coefficient into Jordan form by an exact SL(2, Q) similarity and
//! peels a monomial factor `1 + k z^m J Q` from the left, which strictly lowers
//! the degree. Adjacent factors with equal projections are merged using
//! `(1 + pJP)(1 + qJP) = 1 + (p + q)JP`.

use num_traits::{One, Zero};

use crate::algebra::{Mat2Q, Poly, PolyMat, Rational};
use crate::error::{Error, Result};
use crate::factors::{conjugate_jp, elementary, Factor, Factorization, Projection};

/// Splits `a = a(0) * normalized` with `normalized(0) = I`.
pub fn split_constant(a: &PolyMat) -> Result<(Mat2Q, PolyMat)> {
    if !a.has_unit_det() {
        return Err(Error::DetNotOne);
    }
    let prefix = a.at_zero();
    let inv = prefix.adjugate();
    Ok((prefix, &inv * a))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NormalFormKind {
    /// `s A s^-1 = diag(tr A, 0)`
    DiagonalizableTopLeft,
    /// `s A s^-1 = [[0, lambda], [0, 0]]`, `lambda != 0`
    NilpotentUpperRight,
}

/// Exact det-1 similarity bringing a non-zero singular matrix to Jordan form.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct JordanStep {
    pub s: Mat2Q,
    pub kind: NormalFormKind,
    pub trace: Rational,
    /// `s A s^-1`
    pub normal_form: Mat2Q,
}

fn primitive(a: &Rational, b: &Rational) -> (Rational, Rational) {
    Projection::from_rational(a, b)
        .expect("non-zero vector")
        .direction_rational()
}

/// Matrix with columns `c1`, `c2`.
fn columns(c1: &(Rational, Rational), c2: &(Rational, Rational)) -> Mat2Q {
    Mat2Q::new(c1.0.clone(), c2.0.clone(), c1.1.clone(), c2.1.clone())
}

pub fn jordan_similarity(an: &Mat2Q) -> Result<JordanStep> {
    if an.is_zero() {
        return Err(Error::ZeroMatrix);
    }
    if !an.det().is_zero() {
        return Err(Error::NonSingular);
    }
    let m = &an.0;
    let row = if m[0].iter().any(|x| !x.is_zero()) { &m[0] } else { &m[1] };
    let kernel = primitive(&-&row[1], &row[0]);
    let trace = an.trace();

    let (basis, kind) = if !trace.is_zero() {
        // the range is the eigenspace for the eigenvalue tr A
        let col = if !m[0][0].is_zero() || !m[1][0].is_zero() { 0 } else { 1 };
        let eigen = primitive(&m[0][col], &m[1][col]);
        let raw = columns(&eigen, &kernel);
        let k = Rational::one() / raw.det();
        let scaled = (&kernel.0 * &k, &kernel.1 * &k);
        (columns(&eigen, &scaled), NormalFormKind::DiagonalizableTopLeft)
    } else {
        let n2 = &kernel.0 * &kernel.0 + &kernel.1 * &kernel.1;
        let w = (-&kernel.1 / &n2, &kernel.0 / &n2);
        (columns(&kernel, &w), NormalFormKind::NilpotentUpperRight)
    };
    debug_assert!(basis.is_sl2());
    let s = basis.adjugate();
    let normal_form = &(&s * an) * &basis;
    Ok(JordanStep { s, kind, trace, normal_form })
}

/// Splits `b = (1 + k z^m J Q) * rest` with `deg rest < deg b`.
pub fn peel_left(b: &PolyMat) -> Result<(Factor, PolyMat)> {
    if !b.has_unit_det() {
        return Err(Error::DetNotOne);
    }
    let n = b.degree();
    if n <= 0 {
        return Err(Error::DegreeZero);
    }
    let n = n as usize;
    let step = jordan_similarity(&b.coefficient(n))?;
    let s_inv = step.s.adjugate();
    let conj = &(&step.s * b) * &s_inv;

    // Row 2 of `conj` has degree < n; eliminate the degree-n entry of row 1
    // against the leading term of the row-2 entry in the same column.
    let col = match step.kind {
        NormalFormKind::DiagonalizableTopLeft => 0,
        NormalFormKind::NilpotentUpperRight => 1,
    };
    let top = conj.entry(0, col).coeff(n);
    let pivot = conj.entry(1, col);
    let t = pivot.degree();
    assert!(t >= 0 && (t as usize) < n, "pivot degree out of range");
    let m = n - t as usize;
    let kappa = top / pivot.leading().expect("non-zero pivot");

    let shear = Poly::monomial(kappa.clone(), m);
    let reduce = PolyMat::new(Poly::one(), -&shear, Poly::zero(), Poly::one());
    let reduced = &reduce * &conj;
    let rest = &(&s_inv * &reduced) * &step.s;
    assert!(rest.degree() < n as isize, "peel did not lower the degree");

    // [[1, kappa z^m], [0, 1]] = 1 - kappa z^m J P_2, conjugated back by s.
    let e2 = Projection::new(0, 1)?;
    let (c, q) = conjugate_jp(&step.s, &e2)?;
    let factor = Factor::new(Poly::monomial(-(kappa * c), m), q)?;
    debug_assert_eq!(&elementary(&factor) * &rest, *b);
    Ok((factor, rest))
}

/// Appends `f`, merging with the previous factor when the projections agree.
fn push_merged(out: &mut Vec<Factor>, f: Factor) {
    match out.last() {
        Some(last) if last.projection() == f.projection() => {
            let last = out.pop().expect("non-empty");
            let sum = last.poly() + f.poly();
            if !sum.is_zero() {
                out.push(Factor::new(sum, f.projection().clone()).expect("p(0) = 0"));
            }
        }
        _ => out.push(f),
    }
}

/// The unique factorization `a = a(0) (1 + p_1 J P_1) ... (1 + p_N J P_N)`.
pub fn factorize(a: &PolyMat) -> Result<Factorization> {
    let (prefix, mut rest) = split_constant(a)?;
    let mut factors = Vec::new();
    while rest.degree() > 0 {
        let (f, next) = peel_left(&rest)?;
        push_merged(&mut factors, f);
        rest = next;
    }
    debug_assert!(rest.at_zero().is_identity());
    Factorization::new(prefix, factors)
}

/// `prefix * prod_j (1 + p_j J P_j)` in list order.
pub fn expand(f: &Factorization) -> PolyMat {
    f.factors()
        .iter()
        .fold(PolyMat::constant(f.prefix()), |acc, fac| &acc * &elementary(fac))
}
