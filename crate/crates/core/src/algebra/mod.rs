//! Exact arithmetic: rationals, polynomials, rational functions and 2x2
//! polynomial matrices, plus binary64 complex evaluation.

pub mod complex;
pub mod mat2;
pub mod poly;
pub mod polymat;
pub mod ratfunc;
pub mod rational;

pub use complex::{CMat2, ComplexPoint};
pub use mat2::Mat2Q;
pub use poly::{GaussPoly, Poly, Polynomial, Scalar};
pub use polymat::PolyMat;
pub use ratfunc::RatFunc;
pub use rational::{int, parse_rational, rat, rational_to_f64, ExtendedReal, GaussRational, Rational};
