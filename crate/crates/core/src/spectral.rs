//! Diagonalization of circulants by the discrete Fourier transform.
//!
//! With `ω = cos(2π/n) + i sin(2π/n)` and representer polynomial
//! `p_C(X) = c_1 + c_2 X + ... + c_n X^{n-1}`, the eigenvalues of
//! `C = circ(c_1, ..., c_n)` are `λ_j = p_C(ω^{j-1})` with eigenvectors
//! `x_j = (1, ω^{j-1}, ..., ω^{(n-1)(j-1)})^T`. The map
//! `C ↦ diag(λ_1, ..., λ_n)` is an algebra isomorphism onto the diagonal
//! matrices, which gives the `O(n log n)` product.
//!
//! Spectra are always ordered by `j`; nothing here sorts eigenvalues.

use num_complex::Complex64;

use crate::circulant::{check_orders, Circulant, ZERO};
use crate::dense::DenseMatrix;
use crate::error::{Error, Result};
use crate::fft::{self, Direction};

/// Powers of the primitive root `ω` for one order.
#[derive(Debug, Clone, PartialEq)]
pub struct FourierContext {
    n: usize,
    powers: Vec<Complex64>,
}

impl FourierContext {
    pub fn new(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidOrder(0));
        }
        Ok(Self {
            n,
            powers: fft::root_table(n, Direction::Positive),
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn omega(&self) -> Complex64 {
        self.power(1)
    }

    /// `ω^k`, reduced mod `n`.
    pub fn power(&self, k: usize) -> Complex64 {
        self.powers[k % self.n]
    }

    /// `x_j = (1, ω^{j-1}, ω^{2(j-1)}, ..., ω^{(n-1)(j-1)})`, `1 <= j <= n`.
    pub fn eigenvector(&self, j: usize) -> Result<Vec<Complex64>> {
        if j == 0 || j > self.n {
            return Err(Error::Index { index: j, n: self.n });
        }
        Ok((0..self.n).map(|k| self.power(k * (j - 1))).collect())
    }
}

/// Eigenvalues `λ_1, ..., λ_n` in root-of-unity order.
#[derive(Debug, Clone, PartialEq)]
pub struct Spectrum {
    lambdas: Vec<Complex64>,
}

impl Spectrum {
    pub fn new(lambdas: Vec<Complex64>) -> Result<Self> {
        if lambdas.is_empty() {
            return Err(Error::InvalidOrder(0));
        }
        if let Some(index) = lambdas.iter().position(|z| !(z.re.is_finite() && z.im.is_finite())) {
            return Err(Error::InvalidScalar { index });
        }
        Ok(Self { lambdas })
    }

    pub fn n(&self) -> usize {
        self.lambdas.len()
    }

    pub fn values(&self) -> &[Complex64] {
        &self.lambdas
    }

    /// `λ_j`, 1-based.
    pub fn lambda(&self, j: usize) -> Complex64 {
        self.lambdas[j - 1]
    }

    pub fn pointwise_mul(&self, other: &Self) -> Result<Self> {
        self.zip_with(other, |a, b| a * b)
    }

    pub fn pointwise_add(&self, other: &Self) -> Result<Self> {
        self.zip_with(other, |a, b| a + b)
    }

    fn zip_with(&self, other: &Self, f: impl Fn(Complex64, Complex64) -> Complex64) -> Result<Self> {
        if self.n() != other.n() {
            return Err(Error::Dimension {
                expected: self.n(),
                found: other.n(),
            });
        }
        Ok(Self {
            lambdas: self
                .lambdas
                .iter()
                .zip(&other.lambdas)
                .map(|(&a, &b)| f(a, b))
                .collect(),
        })
    }

    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        assert_eq!(self.n(), other.n(), "order mismatch");
        self.lambdas
            .iter()
            .zip(&other.lambdas)
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max)
    }
}

/// `p_C(X) = c_1 + c_2 X + ... + c_n X^{n-1}`.
#[derive(Debug, Clone, PartialEq)]
pub struct RepresenterPolynomial {
    coeffs: Vec<Complex64>,
}

impl RepresenterPolynomial {
    pub fn of(c: &Circulant) -> Self {
        Self {
            coeffs: c.coeffs().to_vec(),
        }
    }

    pub fn from_coeffs(coeffs: Vec<Complex64>) -> Self {
        Self { coeffs }
    }

    pub fn coeffs(&self) -> &[Complex64] {
        &self.coeffs
    }

    pub fn eval(&self, x: Complex64) -> Complex64 {
        self.coeffs.iter().rev().fold(ZERO, |acc, &c| acc * x + c)
    }
}

/// `λ_j = p_C(ω^{j-1})` for `j = 1..n`, via the DFT of the first row.
pub fn eigenvalues(c: &Circulant) -> Spectrum {
    let mut values = c.coeffs().to_vec();
    fft::transform(&mut values, Direction::Positive);
    Spectrum { lambdas: values }
}

pub fn eigenvector(ctx: &FourierContext, j: usize) -> Result<Vec<Complex64>> {
    ctx.eigenvector(j)
}

/// `ψ(C) = diag(λ_1, ..., λ_n)`.
pub fn to_diagonal(c: &Circulant) -> DenseMatrix {
    let spectrum = eigenvalues(c);
    DenseMatrix::from_fn(c.n(), |i, j| if i == j { spectrum.lambdas[i] } else { ZERO })
}

/// Inverse of [`eigenvalues`]:
/// `c_i = (1/n) sum_j conj(ω^{(i-1)(j-1)}) λ_j`.
pub fn from_spectrum(spectrum: &Spectrum) -> Circulant {
    let n = spectrum.n();
    let mut coeffs = spectrum.lambdas.clone();
    fft::transform(&mut coeffs, Direction::Negative);
    let scale = 1.0 / n as f64;
    for c in &mut coeffs {
        *c *= scale;
    }
    Circulant::new(coeffs).expect("finite spectrum gives finite coefficients")
}

/// Product through the spectral domain: `O(n log n)` for power-of-two `n`.
pub fn fast_mul(x: &Circulant, y: &Circulant) -> Result<Circulant> {
    check_orders(x, y)?;
    let product = eigenvalues(x).pointwise_mul(&eigenvalues(y))?;
    Ok(from_spectrum(&product))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn circ(c: &[f64]) -> Circulant {
        Circulant::from_real(c).unwrap()
    }

    fn assert_close(a: &[Complex64], b: &[Complex64], tol: f64) {
        assert_eq!(a.len(), b.len());
        for (x, y) in a.iter().zip(b) {
            assert!((x - y).norm() <= tol, "{x} vs {y}");
        }
    }

    fn cx(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn spectrum_of_all_ones() {
        let s = eigenvalues(&circ(&[1.0, 1.0, 1.0]));
        assert_close(s.values(), &[cx(3.0, 0.0), ZERO, ZERO], 1e-12);
    }

    #[test]
    fn spectrum_of_123() {
        let h = 3f64.sqrt() / 2.0;
        let s = eigenvalues(&circ(&[1.0, 2.0, 3.0]));
        assert_close(s.values(), &[cx(6.0, 0.0), cx(-1.5, -h), cx(-1.5, h)], 1e-12);
    }

    #[test]
    fn spectrum_of_shift_is_root_powers() {
        for n in [3usize, 5, 8] {
            let ctx = FourierContext::new(n).unwrap();
            let s = eigenvalues(&Circulant::fundamental(n).unwrap());
            let expected: Vec<_> = (0..n).map(|k| ctx.power(k)).collect();
            assert_close(s.values(), &expected, 1e-12);
        }
    }

    #[test]
    fn roots_of_unity_are_unimodular() {
        for n in 1..=64 {
            let ctx = FourierContext::new(n).unwrap();
            let mut w = Complex64::new(1.0, 0.0);
            for _ in 0..n {
                w *= ctx.omega();
            }
            assert!((w - 1.0).norm() < 1e-12, "n={n}");
            for k in 0..n {
                assert!((ctx.power(k).norm() - 1.0).abs() < 1e-12);
            }
        }
    }

    #[test]
    fn eigenvectors() {
        let ctx = FourierContext::new(4).unwrap();
        assert_eq!(ctx.eigenvector(1).unwrap(), vec![cx(1.0, 0.0); 4]);
        assert_close(
            &ctx.eigenvector(2).unwrap(),
            &[cx(1.0, 0.0), cx(0.0, 1.0), cx(-1.0, 0.0), cx(0.0, -1.0)],
            1e-15,
        );
        assert_eq!(ctx.eigenvector(5), Err(Error::Index { index: 5, n: 4 }));
        assert_eq!(ctx.eigenvector(2).unwrap()[0], cx(1.0, 0.0));
    }

    #[test]
    fn diagonal_images() {
        let d = to_diagonal(&circ(&[1.0, 1.0, 1.0]));
        assert!(d.is_diagonal());
        assert!((d[(0, 0)] - 3.0).norm() < 1e-12);
        assert!(d[(1, 1)].norm() < 1e-12 && d[(2, 2)].norm() < 1e-12);
        assert_eq!(to_diagonal(&circ(&[1.0, 0.0])), DenseMatrix::identity(2));
        let p = to_diagonal(&circ(&[0.0, 1.0]));
        assert_close(&[p[(0, 0)], p[(1, 1)]], &[cx(1.0, 0.0), cx(-1.0, 0.0)], 1e-15);
    }

    #[test]
    fn reconstruction() {
        let c = from_spectrum(&Spectrum::new(vec![cx(3.0, 0.0), ZERO, ZERO]).unwrap());
        assert_close(c.coeffs(), circ(&[1.0, 1.0, 1.0]).coeffs(), 1e-12);
        for n in [1usize, 4, 7] {
            let mut l = vec![ZERO; n];
            l[0] = cx(n as f64, 0.0);
            let c = from_spectrum(&Spectrum::new(l).unwrap());
            assert_close(c.coeffs(), &vec![cx(1.0, 0.0); n], 1e-12);
            let id = from_spectrum(&Spectrum::new(vec![cx(1.0, 0.0); n]).unwrap());
            assert_close(id.coeffs(), Circulant::identity(n).unwrap().coeffs(), 1e-12);
        }
    }

    #[test]
    fn fast_products() {
        let c = circ(&[1.0, 2.0, 3.0]);
        assert_close(
            fast_mul(&c, &c).unwrap().coeffs(),
            circ(&[13.0, 13.0, 10.0]).coeffs(),
            1e-12,
        );
        let x = circ(&[0.3, -1.0, 2.0, 0.5]);
        assert_close(
            fast_mul(&x, &Circulant::identity(4).unwrap()).unwrap().coeffs(),
            x.coeffs(),
            1e-12,
        );
        for n in [4usize, 6, 16] {
            let p = Circulant::fundamental(n).unwrap();
            let q = Circulant::fundamental_power(n, n - 1).unwrap();
            assert_close(
                fast_mul(&p, &q).unwrap().coeffs(),
                Circulant::identity(n).unwrap().coeffs(),
                1e-12,
            );
        }
        assert!(matches!(fast_mul(&c, &x), Err(Error::Dimension { .. })));
    }

    #[test]
    fn polynomial_evaluation_matches_dft() {
        let c = circ(&[0.5, -1.0, 2.0, 3.0, -0.25]);
        let ctx = FourierContext::new(5).unwrap();
        let p = RepresenterPolynomial::of(&c);
        let s = eigenvalues(&c);
        for j in 1..=5 {
            assert!((p.eval(ctx.power(j - 1)) - s.lambda(j)).norm() < 1e-12);
        }
    }
}
