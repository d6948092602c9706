//! Multiplication benchmark: cyclic convolution (`naive`), the spectral path
//! (`spectral`) and the dense `O(n^3)` product (`dense`).
//!
//! Every size is cross-checked before anything is timed; a disagreement
//! aborts the run so timings are never reported for wrong answers.

use std::fmt;
use std::time::Instant;

use serde_json::json;

use crate::circulant::Circulant;
use crate::document::format_real;
use crate::oracle;
use crate::sample;
use crate::spectral::fast_mul;

/// Largest order timed with the dense product (beyond it one repetition
/// alone takes seconds).
pub const DEFAULT_DENSE_LIMIT: usize = 256;
pub const DEFAULT_TOLERANCE: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Method {
    Naive,
    Spectral,
    Dense,
}

impl Method {
    pub fn name(self) -> &'static str {
        match self {
            Self::Naive => "naive",
            Self::Spectral => "spectral",
            Self::Dense => "dense",
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct BenchConfig {
    pub sizes: Vec<usize>,
    pub reps: usize,
    pub seed: u64,
    /// Scale-aware agreement tolerance: `|Δ| <= tol (1 + ‖X‖∞ ‖Y‖∞)`.
    pub tol: f64,
    pub dense_limit: usize,
}

impl Default for BenchConfig {
    fn default() -> Self {
        Self {
            sizes: vec![256, 1024],
            reps: 5,
            seed: sample::DEFAULT_SEED,
            tol: DEFAULT_TOLERANCE,
            dense_limit: DEFAULT_DENSE_LIMIT,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct BenchResult {
    pub n: usize,
    pub method: Method,
    pub reps: usize,
    pub median_ns: u128,
    pub checksum: f64,
}

impl BenchResult {
    /// One JSON record: `{"n", "method", "reps", "median_ns", "checksum"}`.
    pub fn to_json_line(&self) -> String {
        json!({
            "n": self.n,
            "method": self.method.name(),
            "reps": self.reps,
            "median_ns": self.median_ns as u64,
            "checksum": format_real(self.checksum),
        })
        .to_string()
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum BenchError {
    Precondition(String),
    Disagreement {
        n: usize,
        method: Method,
        deviation: f64,
        bound: f64,
    },
}

impl fmt::Display for BenchError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Precondition(msg) => write!(f, "bench precondition failed: {msg}"),
            Self::Disagreement {
                n,
                method,
                deviation,
                bound,
            } => write!(
                f,
                "bench aborted: {} disagrees with naive at n = {n} (deviation {deviation:.3e} > {bound:.3e}); no timings reported",
                method.name()
            ),
        }
    }
}

impl std::error::Error for BenchError {}

/// `sum_k (k + 1)(Re c_k + Im c_k) / n`.
pub fn checksum(c: &Circulant) -> f64 {
    let n = c.n() as f64;
    c.coeffs()
        .iter()
        .enumerate()
        .map(|(k, z)| (k + 1) as f64 * (z.re + z.im))
        .sum::<f64>()
        / n
}

/// The product under `method`.
pub fn multiply(method: Method, x: &Circulant, y: &Circulant) -> Circulant {
    match method {
        Method::Naive => x.mul_naive(y).expect("equal orders"),
        Method::Spectral => fast_mul(x, y).expect("equal orders"),
        Method::Dense => {
            let d = oracle::dense_mul(&x.to_dense(), &y.to_dense()).expect("equal orders");
            Circulant::new(d.row(0).to_vec()).expect("finite")
        }
    }
}

pub fn run(config: &BenchConfig) -> Result<Vec<BenchResult>, BenchError> {
    run_with(config, multiply)
}

/// [`run`] with a substitutable kernel (used to exercise the refusal path).
pub fn run_with(
    config: &BenchConfig,
    kernel: impl Fn(Method, &Circulant, &Circulant) -> Circulant,
) -> Result<Vec<BenchResult>, BenchError> {
    if config.reps < 3 {
        return Err(BenchError::Precondition(format!(
            "reps must be at least 3, got {}",
            config.reps
        )));
    }
    if config.sizes.is_empty() {
        return Err(BenchError::Precondition("no sizes given".into()));
    }
    if let Some(n) = config.sizes.iter().find(|&&n| n < 2) {
        return Err(BenchError::Precondition(format!("sizes must be at least 2, got {n}")));
    }

    let mut rng = sample::rng(config.seed);
    let inputs: Vec<(Circulant, Circulant)> = config
        .sizes
        .iter()
        .map(|&n| {
            (
                sample::complex_circulant(&mut rng, n),
                sample::complex_circulant(&mut rng, n),
            )
        })
        .collect();
    let methods = |n: usize| {
        let mut m = vec![Method::Naive, Method::Spectral];
        if n <= config.dense_limit {
            m.push(Method::Dense);
        }
        m
    };

    // every size is verified before any timing starts
    let mut reference = Vec::with_capacity(inputs.len());
    for (x, y) in &inputs {
        let n = x.n();
        let naive = kernel(Method::Naive, x, y);
        let bound = config.tol * (1.0 + x.inf_norm() * y.inf_norm());
        for method in methods(n).into_iter().skip(1) {
            let other = kernel(method, x, y);
            let deviation = naive.max_abs_diff(&other);
            let checksum_gap = (checksum(&naive) - checksum(&other)).abs();
            if !(deviation <= bound && checksum_gap <= bound * n as f64) {
                return Err(BenchError::Disagreement {
                    n,
                    method,
                    deviation: deviation.max(checksum_gap),
                    bound,
                });
            }
        }
        reference.push(naive);
    }

    let mut results = Vec::new();
    for ((x, y), naive) in inputs.iter().zip(&reference) {
        let n = x.n();
        for method in methods(n) {
            let mut times = Vec::with_capacity(config.reps);
            let mut last = None;
            for _ in 0..config.reps {
                let start = Instant::now();
                let product = std::hint::black_box(kernel(method, x, y));
                times.push(start.elapsed().as_nanos());
                last = Some(product);
            }
            times.sort_unstable();
            let product = last.expect("reps >= 3");
            debug_assert!(naive.max_abs_diff(&product) <= config.tol * (1.0 + x.inf_norm() * y.inf_norm()));
            results.push(BenchResult {
                n,
                method,
                reps: config.reps,
                median_ns: times[times.len() / 2],
                checksum: checksum(&product),
            });
        }
    }
    Ok(results)
}
