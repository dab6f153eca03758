use num_complex::Complex64;

use crate::error::{Error, Result};

/// Cartesian sampling grid in the upper half plane: real parts uniform in
/// `[re_min, re_max]`, imaginary parts log-uniform in `[im_min, im_max]`.
///
/// Points are ordered real part outermost, so the "first point attaining the
/// minimum" rule is deterministic.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SampleGrid {
    pub re_min: f64,
    pub re_max: f64,
    pub re_count: usize,
    pub im_min: f64,
    pub im_max: f64,
    pub im_count: usize,
}

impl Default for SampleGrid {
    fn default() -> Self {
        SampleGrid {
            re_min: -10.0,
            re_max: 10.0,
            re_count: 21,
            im_min: 1e-3,
            im_max: 1e3,
            im_count: 25,
        }
    }
}

fn spaced(lo: f64, hi: f64, count: usize, k: usize) -> f64 {
    if count == 1 {
        lo
    } else {
        lo + (hi - lo) * k as f64 / (count - 1) as f64
    }
}

impl SampleGrid {
    pub fn validate(&self) -> Result<()> {
        let finite = [self.re_min, self.re_max, self.im_min, self.im_max]
            .iter()
            .all(|x| x.is_finite());
        if !finite {
            return Err(Error::InvalidGrid("bounds must be finite"));
        }
        if self.re_count == 0 || self.im_count == 0 {
            return Err(Error::InvalidGrid("counts must be positive"));
        }
        if self.re_min > self.re_max || self.im_min > self.im_max {
            return Err(Error::InvalidGrid("min exceeds max"));
        }
        if self.im_min <= 0.0 {
            return Err(Error::InvalidGrid("imaginary parts must be positive"));
        }
        Ok(())
    }

    pub fn len(&self) -> usize {
        self.re_count * self.im_count
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn points(&self) -> Vec<Complex64> {
        let (lo, hi) = (self.im_min.ln(), self.im_max.ln());
        let ims: Vec<f64> = (0..self.im_count)
            .map(|k| match k {
                0 => self.im_min,
                k if k + 1 == self.im_count => self.im_max,
                k => spaced(lo, hi, self.im_count, k).exp(),
            })
            .collect();
        (0..self.re_count)
            .flat_map(|j| {
                let re = spaced(self.re_min, self.re_max, self.re_count, j);
                ims.iter().map(move |&im| Complex64::new(re, im))
            })
            .collect()
    }
}
