//! Generalized circulants from coboundary two-cocycles.
//!
//! A weight map `μ` on the cyclic group with `μ_1 = 1` gives the cocycle
//! `F(e_i, e_j) = μ_i μ_j / μ_{i+j-1}` and the twisted product
//! `x ·_F y = F(x, y) xy`. Its regular representation is the matrix
//! `circ(c_1, ..., c_n; μ_2, ..., μ_n)` with entry `c_{j-i+1} μ_i μ_{j-i+1} / μ_j`
//! at `(i, j)`. Scaling coefficients by `μ`,
//! `Ψ(circ(c; μ)) = circ(c_1, c_2 μ_2, ..., c_n μ_n)`, is an algebra
//! isomorphism onto ordinary circulants, which transports products,
//! eigenvalues and eigenvectors.
//!
//! Skew circulants are the case `μ_i = σ^{i-1}` with `σ = exp(πi/n)`.

use std::f64::consts::PI;

use num_complex::Complex64;

use crate::circulant::{Circulant, ONE};
use crate::dense::DenseMatrix;
use crate::error::{Error, Result};
use crate::forms::{forms_of_spectrum, FormsVector};
use crate::hopf::HopfReport;
use crate::spectral::{eigenvalues, FourierContext, Spectrum};

/// Absolute tolerance for deciding that two operands share the same weights.
pub const WEIGHT_TOLERANCE: f64 = 1e-12;

/// `(μ_1, ..., μ_n)` with `μ_1 = 1` and every `μ_i` nonzero.
#[derive(Debug, Clone, PartialEq)]
pub struct MuWeights {
    mu: Vec<Complex64>,
}

impl MuWeights {
    /// Full weight list; `mu[0]` must be exactly 1.
    pub fn new(mu: Vec<Complex64>) -> Result<Self> {
        if mu.is_empty() {
            return Err(Error::InvalidOrder(0));
        }
        if mu[0] != ONE {
            return Err(Error::InvalidWeights { index: 1 });
        }
        if let Some(i) = mu
            .iter()
            .position(|z| !(z.re.is_finite() && z.im.is_finite()) || z.norm() == 0.0)
        {
            return Err(Error::InvalidWeights { index: i + 1 });
        }
        Ok(Self { mu })
    }

    /// Weights from `μ_2, ..., μ_n`; `μ_1 = 1` is implied.
    pub fn from_tail(tail: &[Complex64]) -> Result<Self> {
        let mut mu = Vec::with_capacity(tail.len() + 1);
        mu.push(ONE);
        mu.extend_from_slice(tail);
        Self::new(mu)
    }

    pub fn trivial(n: usize) -> Result<Self> {
        Self::new(vec![ONE; n])
    }

    pub fn n(&self) -> usize {
        self.mu.len()
    }

    pub fn values(&self) -> &[Complex64] {
        &self.mu
    }

    /// `μ_2, ..., μ_n`.
    pub fn tail(&self) -> &[Complex64] {
        &self.mu[1..]
    }

    /// `μ_i`, 1-based, index taken mod `n`.
    pub fn mu(&self, i: usize) -> Complex64 {
        self.mu[(i + self.n() - 1) % self.n()]
    }

    pub fn approx_eq(&self, other: &Self) -> bool {
        self.n() == other.n()
            && self
                .mu
                .iter()
                .zip(&other.mu)
                .all(|(a, b)| (a - b).norm() <= WEIGHT_TOLERANCE)
    }
}

/// Explicit `n x n` table `F(e_i, e_j)`.
#[derive(Debug, Clone, PartialEq)]
pub struct TwoCocycle {
    table: Vec<Vec<Complex64>>,
}

impl TwoCocycle {
    /// Accepts any square table; [`verify_cocycle`] decides whether it is a
    /// normalized cocycle.
    pub fn from_table(table: Vec<Vec<Complex64>>) -> Result<Self> {
        let n = table.len();
        if n == 0 {
            return Err(Error::InvalidOrder(0));
        }
        if let Some(row) = table.iter().find(|r| r.len() != n) {
            return Err(Error::NotSquare {
                rows: n,
                cols: row.len(),
            });
        }
        Ok(Self { table })
    }

    pub fn n(&self) -> usize {
        self.table.len()
    }

    /// `F(e_i, e_j)`, 1-based.
    pub fn f(&self, i: usize, j: usize) -> Complex64 {
        self.table[i - 1][j - 1]
    }

    pub fn table(&self) -> &[Vec<Complex64>] {
        &self.table
    }
}

/// `circ(c_1, ..., c_n; μ_2, ..., μ_n)`.
#[derive(Debug, Clone, PartialEq)]
pub struct MuCirculant {
    coeffs: Vec<Complex64>,
    weights: MuWeights,
}

impl MuCirculant {
    pub fn new(coeffs: Vec<Complex64>, weights: MuWeights) -> Result<Self> {
        let c = Circulant::new(coeffs)?;
        if c.n() != weights.n() {
            return Err(Error::Dimension {
                expected: c.n(),
                found: weights.n(),
            });
        }
        Ok(Self {
            coeffs: c.into_coeffs(),
            weights,
        })
    }

    pub fn n(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeffs(&self) -> &[Complex64] {
        &self.coeffs
    }

    pub fn weights(&self) -> &MuWeights {
        &self.weights
    }
}

/// `σ = cos(π/n) + i sin(π/n)`, so `σ^2 = ω` and `σ^n = -1`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SkewRoot {
    n: usize,
}

impl SkewRoot {
    pub fn new(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidOrder(0));
        }
        Ok(Self { n })
    }

    pub fn sigma(&self) -> Complex64 {
        self.power(1)
    }

    /// `σ^k` evaluated directly from the angle `kπ/n`.
    pub fn power(&self, k: usize) -> Complex64 {
        let k = k % (2 * self.n);
        if k == 0 {
            return ONE;
        }
        if k == self.n {
            return -ONE;
        }
        let theta = PI * k as f64 / self.n as f64;
        Complex64::new(theta.cos(), theta.sin())
    }
}

/// `F(e_i, e_j) = μ_i μ_j / μ_{i+j-1}`.
pub fn cocycle_from_mu(weights: &MuWeights) -> TwoCocycle {
    let n = weights.n();
    let table = (1..=n)
        .map(|i| {
            (1..=n)
                .map(|j| weights.mu(i) * weights.mu(j) / weights.mu(i + j - 1))
                .collect()
        })
        .collect();
    TwoCocycle { table }
}

/// Checks normalization and `F(x, y) F(xy, z) = F(y, z) F(x, yz)` on all `n^3`
/// triples. The residual is the largest `|lhs / rhs - 1|` (and the largest
/// deviation of the first row and column from 1).
pub fn verify_cocycle(f: &TwoCocycle) -> Result<HopfReport> {
    let n = f.n();
    for i in 1..=n {
        for j in 1..=n {
            let v = f.f(i, j);
            if v.norm() == 0.0 || !(v.re.is_finite() && v.im.is_finite()) {
                return Err(Error::InvalidCocycle { i, j });
            }
        }
    }
    let wrap = |k: usize| (k - 1) % n + 1;
    let mut residual: f64 = 0.0;
    for x in 1..=n {
        residual = residual.max((f.f(1, x) - ONE).norm()).max((f.f(x, 1) - ONE).norm());
    }
    for x in 1..=n {
        for y in 1..=n {
            for z in 1..=n {
                let lhs = f.f(x, y) * f.f(wrap(x + y - 1), z);
                let rhs = f.f(y, z) * f.f(x, wrap(y + z - 1));
                residual = residual.max((lhs / rhs - ONE).norm());
            }
        }
    }
    Ok(HopfReport {
        axiom: "cocycle".to_string(),
        holds: residual <= 1e-10,
        max_residual: residual,
    })
}

/// Entry `(i, j)` is `c_{j-i+1} μ_i μ_{j-i+1} / μ_j`.
pub fn mu_to_dense(m: &MuCirculant) -> DenseMatrix {
    let n = m.n();
    let w = &m.weights;
    DenseMatrix::from_fn(n, |i, j| {
        let k = (j + n - i) % n;
        if k == 0 {
            // diagonal: μ_i μ_1 / μ_i
            return m.coeffs[0];
        }
        m.coeffs[k] * w.mu(i + 1) * w.mu(k + 1) / w.mu(j + 1)
    })
}

/// `Ψ(circ(c; μ)) = circ(c_1, c_2 μ_2, ..., c_n μ_n)`.
pub fn psi(m: &MuCirculant) -> Circulant {
    Circulant::new(m.coeffs.iter().zip(m.weights.values()).map(|(c, mu)| c * mu).collect()).expect("finite")
}

/// `Ψ^{-1}(circ(c)) = circ(c_1, c_2 / μ_2, ..., c_n / μ_n; μ)`.
pub fn psi_inv(c: &Circulant, weights: &MuWeights) -> Result<MuCirculant> {
    if c.n() != weights.n() {
        return Err(Error::Dimension {
            expected: c.n(),
            found: weights.n(),
        });
    }
    let coeffs = c.coeffs().iter().zip(weights.values()).map(|(c, mu)| c / mu).collect();
    MuCirculant::new(coeffs, weights.clone())
}

/// Twisted product, transported through `Ψ`.
pub fn mu_mul(x: &MuCirculant, y: &MuCirculant) -> Result<MuCirculant> {
    if x.n() != y.n() {
        return Err(Error::Dimension {
            expected: x.n(),
            found: y.n(),
        });
    }
    if !x.weights.approx_eq(&y.weights) {
        return Err(Error::IncompatibleAlgebras);
    }
    psi_inv(&psi(x).mul_naive(&psi(y))?, &x.weights)
}

#[derive(Debug, Clone, PartialEq)]
pub struct MuEigen {
    pub spectrum: Spectrum,
    /// `vectors[j - 1] = (1, μ_2 ω^{j-1}, μ_3 ω^{2(j-1)}, ..., μ_n ω^{(n-1)(j-1)})`.
    pub vectors: Vec<Vec<Complex64>>,
}

/// `λ_j = p(ω^{j-1})` with `p(X) = c_1 + c_2 μ_2 X + ... + c_n μ_n X^{n-1}`.
pub fn mu_eigen(m: &MuCirculant) -> MuEigen {
    let n = m.n();
    let spectrum = eigenvalues(&psi(m));
    let ctx = FourierContext::new(n).expect("order is nonzero");
    let vectors = (1..=n)
        .map(|j| {
            ctx.eigenvector(j)
                .expect("index in range")
                .into_iter()
                .zip(m.weights.values())
                .map(|(x, mu)| x * mu)
                .collect()
        })
        .collect();
    MuEigen { spectrum, vectors }
}

/// `scirc(c) = circ(c; σ, σ^2, ..., σ^{n-1})`.
pub fn skew_circ(coeffs: Vec<Complex64>) -> Result<MuCirculant> {
    let n = coeffs.len();
    let root = SkewRoot::new(n)?;
    let weights = MuWeights::new((0..n).map(|k| root.power(k)).collect())?;
    MuCirculant::new(coeffs, weights)
}

/// Elementary symmetric polynomials of the [`mu_eigen`] spectrum.
pub fn mu_forms(m: &MuCirculant) -> FormsVector {
    forms_of_spectrum(&mu_eigen(m).spectrum)
}
