//! Exact factorization of polynomial SL(2) matrix functions into elementary
//! factors `1 + p(z) J P`, classification of the induced Toda maps, and
//! numerical certificates (positivity sampling, Weyl disks, Herglotz checks).

pub mod algebra;
pub mod classify;
pub mod cli;
pub mod error;
pub mod factorization;
pub mod factors;
pub mod grid;
pub mod herglotz;
pub mod io;
pub mod random;

pub use algebra::{ComplexPoint, ExtendedReal, GaussRational, Mat2Q, Poly, PolyMat, RatFunc, Rational};
pub use classify::{classify, hp_min_eigen_sample, weyl_disk, Disk, HpReport, Verdict};
pub use error::{Error, Result};
pub use factorization::{expand, factorize, jordan_similarity, peel_left, split_constant};
pub use factors::{conjugate_jp, elementary, jp_chain, projection_of, Factor, Factorization, Projection};
pub use grid::SampleGrid;
pub use herglotz::{asymptotics, herglotz_check, herglotz_generate, moebius_point, toda_apply, Side};
