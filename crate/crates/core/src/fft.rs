//! Discrete Fourier transform over the `n`-th roots of unity.
//!
//! Power-of-two lengths use an in-place iterative radix-2 transform; every
//! other length falls back to direct `O(n^2)` evaluation. Twiddles are taken
//! from a table of `cos(2πk/n) ± i sin(2πk/n)` so no error accumulates through
//! recurrences.

use std::f64::consts::PI;

use num_complex::Complex64;

/// Sign of the exponent in `exp(±2πi jk/n)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Direction {
    /// `y_j = sum_k x_k ω^{jk}` with `ω = exp(2πi/n)`.
    Positive,
    /// `y_j = sum_k x_k ω^{-jk}`.
    Negative,
}

/// `exp(sign · 2πi k / n)` for `k` in `0..n`.
pub fn root_table(n: usize, direction: Direction) -> Vec<Complex64> {
    let sign = match direction {
        Direction::Positive => 1.0,
        Direction::Negative => -1.0,
    };
    (0..n)
        .map(|k| {
            if k == 0 {
                return Complex64::new(1.0, 0.0);
            }
            let theta = 2.0 * PI * k as f64 / n as f64;
            Complex64::new(theta.cos(), sign * theta.sin())
        })
        .collect()
}

/// Unnormalized transform of `data` in place.
pub fn transform(data: &mut [Complex64], direction: Direction) {
    let n = data.len();
    if n <= 1 {
        return;
    }
    let table = root_table(n, direction);
    if n.is_power_of_two() {
        radix2(data, &table);
    } else {
        let out = direct(data, &table);
        data.copy_from_slice(&out);
    }
}

fn direct(data: &[Complex64], table: &[Complex64]) -> Vec<Complex64> {
    let n = data.len();
    (0..n)
        .map(|j| data.iter().enumerate().map(|(k, x)| x * table[(j * k) % n]).sum())
        .collect()
}

fn radix2(data: &mut [Complex64], table: &[Complex64]) {
    let n = data.len();
    let bits = n.trailing_zeros();
    for i in 0..n {
        let r = i.reverse_bits() >> (usize::BITS - bits);
        if i < r {
            data.swap(i, r);
        }
    }
    let mut len = 2;
    while len <= n {
        let half = len / 2;
        let stride = n / len;
        for start in (0..n).step_by(len) {
            for k in 0..half {
                let w = table[k * stride];
                let u = data[start + k];
                let v = data[start + k + half] * w;
                data[start + k] = u + v;
                data[start + k + half] = u - v;
            }
        }
        len <<= 1;
    }
}
