//! Seeded random inputs shared by the verification suites, the benchmark
//! harness and the examples.

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::circulant::Circulant;

/// Default seed for `verify-all` and `bench`.
pub const DEFAULT_SEED: u64 = 0x5EED;

pub type SampleRng = ChaCha8Rng;

pub fn rng(seed: u64) -> SampleRng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Uniform in `[-1, 1]`.
pub fn unit(rng: &mut SampleRng) -> f64 {
    rng.gen_range(-1.0..=1.0)
}

/// Real and imaginary parts uniform in `[-1, 1]`.
pub fn unit_complex(rng: &mut SampleRng) -> Complex64 {
    Complex64::new(unit(rng), unit(rng))
}

/// Circulant with real entries uniform in `[-1, 1]`.
pub fn real_circulant(rng: &mut SampleRng, n: usize) -> Circulant {
    Circulant::new((0..n).map(|_| Complex64::new(unit(rng), 0.0)).collect()).expect("n >= 1")
}

/// Circulant with complex entries, parts uniform in `[-1, 1]`.
pub fn complex_circulant(rng: &mut SampleRng, n: usize) -> Circulant {
    Circulant::new((0..n).map(|_| unit_complex(rng)).collect()).expect("n >= 1")
}

/// Integer vector with entries uniform in `[-bound, bound]`.
pub fn integers(rng: &mut SampleRng, n: usize, bound: i64) -> Vec<i64> {
    (0..n).map(|_| rng.gen_range(-bound..=bound)).collect()
}

/// Nonzero weights `μ_2, ..., μ_n` with modulus in `[1/2, 2]` and random phase.
pub fn weight_tail(rng: &mut SampleRng, n: usize) -> Vec<Complex64> {
    (1..n)
        .map(|_| {
            let r = 2f64.powf(unit(rng));
            let theta = std::f64::consts::PI * unit(rng);
            Complex64::from_polar(r, theta)
        })
        .collect()
}

/// Circulant accepted by [`crate::forms::is_invertible`]: a complex unit-scale
/// circulant whose leading coefficient is shifted by a random real of modulus
/// in `[n/2, n]`, redrawn until the classification says invertible. Unshifted
/// unit-scale draws fall under the singularity threshold for large `n`.
pub fn invertible_circulant(rng: &mut SampleRng, n: usize) -> Circulant {
    loop {
        let mut coeffs = complex_circulant(rng, n).into_coeffs();
        let shift = n as f64 * (0.75 + 0.25 * unit(rng));
        coeffs[0] += if rng.gen_bool(0.5) { shift } else { -shift };
        let c = Circulant::new(coeffs).expect("finite");
        if crate::forms::is_invertible(&c).is_invertible() {
            return c;
        }
    }
}
