//! In-place iterative radix-2 FFT.

use alloc::vec::Vec;

use num_complex::Complex64;

use crate::math::{cos, sin, TWO_PI};

#[derive(Clone, Copy, PartialEq, Eq)]
pub(crate) enum Direction {
    /// `X_k = Σ x_j e^{-2πijk/N}`
    Forward,
    /// `X_k = Σ x_j e^{+2πijk/N}` (unscaled)
    Inverse,
}

fn twiddles(n: usize, dir: Direction) -> Vec<Complex64> {
    let sign = match dir {
        Direction::Forward => -1.0,
        Direction::Inverse => 1.0,
    };
    (0..n / 2)
        .map(|k| {
            let th = TWO_PI * k as f64 / n as f64;
            Complex64::new(cos(th), sign * sin(th))
        })
        .collect()
}

fn bit_reverse(data: &mut [Complex64]) {
    let n = data.len();
    let mut j = 0usize;
    for i in 1..n {
        let mut bit = n >> 1;
        while j & bit != 0 {
            j ^= bit;
            bit >>= 1;
        }
        j |= bit;
        if i < j {
            data.swap(i, j);
        }
    }
}

/// Transforms `data` in place. The length must be a power of two.
pub(crate) fn fft(data: &mut [Complex64], dir: Direction) {
    let n = data.len();
    debug_assert!(n.is_power_of_two());
    if n <= 1 {
        return;
    }
    bit_reverse(data);
    let tw = twiddles(n, dir);
    let mut len = 2;
    while len <= n {
        let half = len / 2;
        let stride = n / len;
        for start in (0..n).step_by(len) {
            for k in 0..half {
                let w = tw[k * stride];
                let a = data[start + k];
                let b = data[start + k + half] * w;
                data[start + k] = a + b;
                data[start + k + half] = a - b;
            }
        }
        len <<= 1;
    }
}
