//! Circulant matrices over complex scalars and their identification with the
//! cyclic group algebra.
//!
//! A circulant of order `n` is stored as its first row `(c_1, ..., c_n)`; the
//! same vector is the coefficient list of `c_1 e_1 + ... + c_n e_n` in the group
//! algebra, so the constructor is also the algebra isomorphism onto the
//! circulants. Formulas in the docs are 1-based; storage is 0-based.

use num_complex::Complex64;

use crate::dense::DenseMatrix;
use crate::error::{Error, Result};

pub(crate) const ZERO: Complex64 = Complex64::new(0.0, 0.0);
pub(crate) const ONE: Complex64 = Complex64::new(1.0, 0.0);

/// A basis element `e_i` of the group algebra, `1 <= i <= n`.
///
/// `e_i` corresponds to the residue `i - 1`, so `e_i e_j = e_{i+j-1}` and
/// `e_i^{-1} = e_{n-i+2}` with indices taken mod `n` (residue 0 maps to `n`).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct GroupElementIndex {
    i: usize,
    n: usize,
}

impl GroupElementIndex {
    pub fn new(i: usize, n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidOrder(0));
        }
        if i == 0 || i > n {
            return Err(Error::Index { index: i, n });
        }
        Ok(Self { i, n })
    }

    pub fn index(self) -> usize {
        self.i
    }

    pub fn order(self) -> usize {
        self.n
    }

    #[allow(clippy::should_implement_trait)]
    pub fn mul(self, other: Self) -> Self {
        assert_eq!(self.n, other.n, "group elements of different orders");
        Self {
            i: wrap(self.i + other.i - 1, self.n),
            n: self.n,
        }
    }

    pub fn inverse(self) -> Self {
        Self {
            i: wrap(self.n + 2 - self.i, self.n),
            n: self.n,
        }
    }
}

/// Reduces a 1-based index mod `n` into `1..=n`.
pub fn wrap(i: usize, n: usize) -> usize {
    (i + n - 1) % n + 1
}

/// `circ(c_1, ..., c_n)`.
#[derive(Debug, Clone, PartialEq)]
pub struct Circulant {
    coeffs: Vec<Complex64>,
}

impl Circulant {
    /// Stores the first row verbatim. Rejects an empty row and non-finite
    /// entries.
    pub fn new(coeffs: Vec<Complex64>) -> Result<Self> {
        if coeffs.is_empty() {
            return Err(Error::InvalidOrder(0));
        }
        if let Some(index) = coeffs.iter().position(|z| !(z.re.is_finite() && z.im.is_finite())) {
            return Err(Error::InvalidScalar { index });
        }
        Ok(Self { coeffs })
    }

    pub fn from_real(coeffs: &[f64]) -> Result<Self> {
        Self::new(coeffs.iter().map(|&x| Complex64::new(x, 0.0)).collect())
    }

    pub fn identity(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidOrder(0));
        }
        let mut coeffs = vec![ZERO; n];
        coeffs[0] = ONE;
        Ok(Self { coeffs })
    }

    pub fn zero(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidOrder(0));
        }
        Ok(Self { coeffs: vec![ZERO; n] })
    }

    /// The fundamental circulant `P_n = circ(0, 1, 0, ..., 0)`, the cyclic
    /// shift. For `n = 1` this is `I_1`.
    pub fn fundamental(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidOrder(0));
        }
        let mut coeffs = vec![ZERO; n];
        coeffs[1 % n] = ONE;
        Ok(Self { coeffs })
    }

    /// `P_n^k`, which is `circ` with a single 1 at position `k mod n + 1`.
    pub fn fundamental_power(n: usize, k: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidOrder(0));
        }
        let mut coeffs = vec![ZERO; n];
        coeffs[k % n] = ONE;
        Ok(Self { coeffs })
    }

    pub fn n(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeffs(&self) -> &[Complex64] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<Complex64> {
        self.coeffs
    }

    /// 1-based coefficient access with mod-`n` wrap-around.
    pub fn c(&self, k: usize) -> Complex64 {
        self.coeffs[(k + self.n() - 1) % self.n()]
    }

    /// Entry `(i, j)` (0-based) is `c_{j-i+1 mod n}`.
    pub fn to_dense(&self) -> DenseMatrix {
        let n = self.n();
        DenseMatrix::from_fn(n, |i, j| self.coeffs[(j + n - i) % n])
    }

    /// Coefficientwise `a X + b Y`.
    pub fn linear_combine(a: Complex64, x: &Self, b: Complex64, y: &Self) -> Result<Self> {
        check_orders(x, y)?;
        Ok(Self {
            coeffs: x.coeffs.iter().zip(&y.coeffs).map(|(xi, yi)| a * xi + b * yi).collect(),
        })
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        Self::linear_combine(ONE, self, ONE, other)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        Self::linear_combine(ONE, self, -ONE, other)
    }

    pub fn scale(&self, a: Complex64) -> Self {
        Self {
            coeffs: self.coeffs.iter().map(|c| a * c).collect(),
        }
    }

    /// Reference `O(n^2)` product: cyclic convolution of first rows,
    /// `r_k = sum_{i+j-1 = k mod n} x_i y_j`.
    ///
    /// Terms are accumulated over unordered index pairs so that
    /// `mul_naive(X, Y)` and `mul_naive(Y, X)` are bitwise identical.
    pub fn mul_naive(&self, other: &Self) -> Result<Self> {
        check_orders(self, other)?;
        let n = self.n();
        let (x, y) = (&self.coeffs, &other.coeffs);
        let coeffs = (0..n)
            .map(|k| {
                let mut acc = ZERO;
                for i in 0..n {
                    let p = (k + n - i) % n;
                    if i < p {
                        acc += x[i] * y[p] + x[p] * y[i];
                    } else if i == p {
                        acc += x[i] * y[i];
                    }
                }
                acc
            })
            .collect();
        Ok(Self { coeffs })
    }

    /// `X^k` by repeated squaring with [`Circulant::mul_naive`].
    pub fn pow(&self, mut k: u32) -> Self {
        let mut result = Self::identity(self.n()).expect("order is nonzero");
        let mut base = self.clone();
        while k > 0 {
            if k & 1 == 1 {
                result = result.mul_naive(&base).expect("same order");
            }
            k >>= 1;
            if k > 0 {
                base = base.mul_naive(&base).expect("same order");
            }
        }
        result
    }

    /// `circ(c_1, c_n, c_{n-1}, ..., c_2)`, the transpose.
    pub fn transpose(&self) -> Self {
        let n = self.n();
        Self {
            coeffs: (0..n).map(|k| self.coeffs[(n - k) % n]).collect(),
        }
    }

    /// Maximum absolute row sum of the dense expansion, `sum |c_k|`.
    pub fn inf_norm(&self) -> f64 {
        self.coeffs.iter().map(|z| z.norm()).sum()
    }

    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        assert_eq!(self.n(), other.n(), "order mismatch");
        self.coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max)
    }
}

pub(crate) fn check_orders(x: &Circulant, y: &Circulant) -> Result<()> {
    if x.n() != y.n() {
        return Err(Error::Dimension {
            expected: x.n(),
            found: y.n(),
        });
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn circ(c: &[f64]) -> Circulant {
        Circulant::from_real(c).unwrap()
    }

    fn re(m: &DenseMatrix) -> Vec<Vec<f64>> {
        m.rows().map(|r| r.iter().map(|z| z.re).collect()).collect()
    }

    #[test]
    fn constructor_stores_row() {
        let c = circ(&[1.0, 2.0, 3.0]);
        assert_eq!(c.n(), 3);
        assert_eq!(c.coeffs()[2], Complex64::new(3.0, 0.0));
        assert_eq!(Circulant::new(vec![]), Err(Error::InvalidOrder(0)));
        assert_eq!(
            Circulant::new(vec![ONE, Complex64::new(f64::NAN, 0.0)]),
            Err(Error::InvalidScalar { index: 1 })
        );
    }

    #[test]
    fn identity_is_multiplicative_unit() {
        let c = circ(&[1.0, -2.0, 0.5]);
        let id = circ(&[1.0, 0.0, 0.0]);
        assert_eq!(id.mul_naive(&c).unwrap(), c);
    }

    #[test]
    fn dense_layout() {
        let d = circ(&[1.0, 2.0, 3.0]).to_dense();
        assert_eq!(
            re(&d),
            vec![vec![1.0, 2.0, 3.0], vec![3.0, 1.0, 2.0], vec![2.0, 3.0, 1.0]]
        );
        assert_eq!(circ(&[1.0, 0.0]).to_dense(), DenseMatrix::identity(2));
        let p = circ(&[0.0, 1.0, 0.0]).to_dense();
        assert_eq!(
            re(&p),
            vec![vec![0.0, 1.0, 0.0], vec![0.0, 0.0, 1.0], vec![1.0, 0.0, 0.0]]
        );
    }

    #[test]
    fn linear_combination() {
        let r = Circulant::linear_combine(ONE, &circ(&[1.0, 2.0, 3.0]), ONE, &circ(&[0.0, 0.0, 1.0])).unwrap();
        assert_eq!(r, circ(&[1.0, 2.0, 4.0]));
        let y = circ(&[4.0, 5.0, 6.0]);
        assert_eq!(
            Circulant::linear_combine(ZERO, &circ(&[1.0, 2.0, 3.0]), ONE, &y).unwrap(),
            y
        );
        assert_eq!(
            circ(&[1.0, 2.0, 3.0]).add(&circ(&[1.0; 4])),
            Err(Error::Dimension { expected: 3, found: 4 })
        );
    }

    #[test]
    fn naive_products() {
        let c = circ(&[1.0, 2.0, 3.0]);
        assert_eq!(c.mul_naive(&c).unwrap(), circ(&[13.0, 13.0, 10.0]));
        let p = circ(&[0.0, 1.0]);
        assert_eq!(p.mul_naive(&p).unwrap(), circ(&[1.0, 0.0]));
    }

    #[test]
    fn fundamental_circulant() {
        assert_eq!(Circulant::fundamental(3).unwrap(), circ(&[0.0, 1.0, 0.0]));
        assert_eq!(
            Circulant::fundamental(3).unwrap().pow(3),
            Circulant::identity(3).unwrap()
        );
        assert_eq!(Circulant::fundamental(1).unwrap(), circ(&[1.0]));
        assert_eq!(Circulant::fundamental(0), Err(Error::InvalidOrder(0)));
    }

    #[test]
    fn transposes() {
        assert_eq!(circ(&[1.0, 2.0, 3.0]).transpose(), circ(&[1.0, 3.0, 2.0]));
        assert_eq!(circ(&[5.0, 7.0]).transpose(), circ(&[5.0, 7.0]));
        let c = circ(&[1.0, 2.0, 3.0, 4.0]);
        assert_eq!(c.transpose(), circ(&[1.0, 4.0, 3.0, 2.0]));
        assert_eq!(c.transpose().to_dense(), c.to_dense().transpose());
    }

    #[test]
    fn group_index_arithmetic() {
        let n = 5;
        let e = |i| GroupElementIndex::new(i, n).unwrap();
        assert_eq!(e(3).mul(e(4)).index(), 1);
        assert_eq!(e(2).mul(e(2)).index(), 3);
        assert_eq!(e(1).inverse().index(), 1);
        assert_eq!(e(2).inverse().index(), 5);
        for i in 1..=n {
            assert_eq!(e(i).mul(e(i).inverse()).index(), 1);
        }
        assert_eq!(GroupElementIndex::new(6, 5), Err(Error::Index { index: 6, n: 5 }));
    }

    #[test]
    fn order_one_collapses_to_scalars() {
        let a = circ(&[3.0]);
        let b = circ(&[-2.0]);
        assert_eq!(a.mul_naive(&b).unwrap(), circ(&[-6.0]));
        assert_eq!(a.transpose(), a);
    }
}
