//! Float helpers backed by `libm` so the crate builds without `std`.

use core::f64::consts::PI;

use num_complex::Complex64;

pub(crate) use libm::{ceil, cos, cosh, exp, fabs, floor, log, pow, round, sin, sinh, sqrt, tan};

pub(crate) const TWO_PI: f64 = 2.0 * PI;

/// `e^{iθ}`.
#[inline]
pub(crate) fn cis(theta: f64) -> Complex64 {
    Complex64::new(cos(theta), sin(theta))
}

#[inline]
pub(crate) fn signum(x: f64) -> f64 {
    if x > 0.0 {
        1.0
    } else if x < 0.0 {
        -1.0
    } else {
        0.0
    }
}

#[inline]
pub(crate) fn is_power_of_two(n: usize) -> bool {
    n != 0 && n & (n - 1) == 0
}

/// Pairwise sum; the reduction order is fixed by the length only.
pub(crate) fn pairwise_sum(values: &[Complex64]) -> Complex64 {
    const BLOCK: usize = 64;
    if values.len() <= BLOCK {
        let mut acc = Complex64::new(0.0, 0.0);
        for v in values {
            acc += v;
        }
        acc
    } else {
        let mid = values.len() / 2;
        pairwise_sum(&values[..mid]) + pairwise_sum(&values[mid..])
    }
}

pub(crate) fn pairwise_sum_real(values: &[f64]) -> f64 {
    const BLOCK: usize = 64;
    if values.len() <= BLOCK {
        values.iter().sum()
    } else {
        let mid = values.len() / 2;
        pairwise_sum_real(&values[..mid]) + pairwise_sum_real(&values[mid..])
    }
}
