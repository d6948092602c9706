//! The group-algebra Hopf structure carried over to circulants.
//!
//! Under `e_k ↦ P_n^{k-1}`:
//!
//! * counit `ε(C) = c_1 + ... + c_n`,
//! * comultiplication `Δ(C) = sum_k c_k P^{k-1} ⊗ P^{k-1}`, which as an
//!   `n^2 x n^2` matrix is the block circulant `circ(c_1 I, c_2 P, ..., c_n P^{n-1})`,
//! * antipode `S(C) = C^T`.
//!
//! `Δ(C)` is kept as `n` circulant blocks; the dense `n^2 x n^2` form is only
//! built on verification paths.

use num_complex::Complex64;

use crate::circulant::{check_orders, Circulant, ONE, ZERO};
use crate::dense::DenseMatrix;
use crate::error::{Error, Result};
use crate::oracle;
use crate::spectral::FourierContext;

/// Largest block order for which the dense `n^2 x n^2` expansion is built.
pub const MAX_EXPANDED_ORDER: usize = 8;

/// Block circulant `circ(B_1, ..., B_n)` whose blocks are circulants of a
/// common order. Block position `(I, J)` holds `B_{J-I+1 mod n}`.
#[derive(Debug, Clone, PartialEq)]
pub struct BlockCirculant {
    blocks: Vec<Circulant>,
}

impl BlockCirculant {
    pub fn new(blocks: Vec<Circulant>) -> Result<Self> {
        let first = blocks.first().ok_or(Error::InvalidOrder(0))?;
        for b in &blocks {
            check_orders(first, b)?;
        }
        Ok(Self { blocks })
    }

    /// Number of blocks per block row.
    pub fn n(&self) -> usize {
        self.blocks.len()
    }

    pub fn block_order(&self) -> usize {
        self.blocks[0].n()
    }

    pub fn blocks(&self) -> &[Circulant] {
        &self.blocks
    }

    /// Structural product: block `k` of the result is
    /// `sum_{a+b-1 = k mod n} A_a B_b`.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        if self.n() != other.n() {
            return Err(Error::Dimension {
                expected: self.n(),
                found: other.n(),
            });
        }
        let n = self.n();
        let m = self.block_order();
        let mut out = vec![Circulant::zero(m)?; n];
        for (a, block_a) in self.blocks.iter().enumerate() {
            for (b, block_b) in other.blocks.iter().enumerate() {
                let prod = block_a.mul_naive(block_b)?;
                let k = (a + b) % n;
                out[k] = out[k].add(&prod)?;
            }
        }
        Ok(Self { blocks: out })
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        if self.n() != other.n() {
            return Err(Error::Dimension {
                expected: self.n(),
                found: other.n(),
            });
        }
        let blocks = self
            .blocks
            .iter()
            .zip(&other.blocks)
            .map(|(a, b)| a.add(b))
            .collect::<Result<_>>()?;
        Ok(Self { blocks })
    }

    /// Dense `(n m) x (n m)` matrix.
    pub fn expand(&self) -> DenseMatrix {
        let n = self.n();
        let m = self.block_order();
        let dense: Vec<DenseMatrix> = self.blocks.iter().map(Circulant::to_dense).collect();
        DenseMatrix::from_fn(n * m, |row, col| {
            let (bi, i) = (row / m, row % m);
            let (bj, j) = (col / m, col % m);
            dense[(bj + n - bi) % n][(i, j)]
        })
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct HopfReport {
    pub axiom: String,
    pub holds: bool,
    pub max_residual: f64,
}

impl HopfReport {
    fn new(axiom: &str, max_residual: f64, tol: f64) -> Self {
        Self {
            axiom: axiom.to_string(),
            holds: max_residual <= tol,
            max_residual,
        }
    }
}

/// `ε(C) = c_1 + ... + c_n`.
pub fn counit(c: &Circulant) -> Complex64 {
    c.coeffs().iter().sum()
}

/// `Δ(C)` with blocks `B_k = c_k P^{k-1}`.
pub fn comultiplication(c: &Circulant) -> BlockCirculant {
    let n = c.n();
    let blocks = c
        .coeffs()
        .iter()
        .enumerate()
        .map(|(k, &ck)| Circulant::fundamental_power(n, k).expect("order is nonzero").scale(ck))
        .collect();
    BlockCirculant { blocks }
}

/// `S(C) = circ(c_1, c_n, ..., c_2)`.
pub fn antipode(c: &Circulant) -> Circulant {
    c.transpose()
}

/// Eigenvalues of `Δ(C)` read off the block-diagonal form
/// `diag(sum_k ω^{(j-1)(k-1)} Λ_k)_j` with `Λ_k = c_k diag(1, ω^{k-1}, ..., ω^{(k-1)(n-1)})`.
///
/// Entry `(j - 1) n + (i - 1)` is the `i`-th diagonal entry of block `j`,
/// which equals `λ_{i+j-1 mod n}`; every eigenvalue of `C` appears `n` times.
pub fn delta_spectrum(c: &Circulant) -> Vec<Complex64> {
    let n = c.n();
    let ctx = FourierContext::new(n).expect("order is nonzero");
    let mut out = Vec::with_capacity(n * n);
    for j in 0..n {
        for i in 0..n {
            let entry = c
                .coeffs()
                .iter()
                .enumerate()
                .map(|(k, &ck)| ck * ctx.power(j * k) * ctx.power(k * i))
                .sum();
            out.push(entry);
        }
    }
    out
}

/// Eigenpairs of the dense expansion of `Δ(C)` on the basis `x_a ⊗ x_b` of
/// Fourier vectors. Each eigenvalue is the Rayleigh quotient of the expanded
/// matrix, paired with the scale-aware residual of that vector.
pub fn delta_eigenpairs_expanded(c: &Circulant) -> Result<Vec<(Complex64, f64)>> {
    let n = c.n();
    if n > MAX_EXPANDED_ORDER {
        return Err(Error::Dimension {
            expected: MAX_EXPANDED_ORDER,
            found: n,
        });
    }
    let dense = comultiplication(c).expand();
    let ctx = FourierContext::new(n)?;
    let mut out = Vec::with_capacity(n * n);
    for a in 1..=n {
        let xa = ctx.eigenvector(a)?;
        for b in 1..=n {
            let xb = ctx.eigenvector(b)?;
            let v: Vec<Complex64> = xa.iter().flat_map(|p| xb.iter().map(move |q| p * q)).collect();
            let av = dense.mul_vec(&v);
            let num: Complex64 = v.iter().zip(&av).map(|(x, y)| x.conj() * y).sum();
            let den: f64 = v.iter().map(|x| x.norm_sqr()).sum();
            let lambda = num / den;
            out.push((lambda, oracle::eigen_residual(&dense, lambda, &v)?));
        }
    }
    Ok(out)
}

/// Greedy nearest-neighbour matching of two multisets. Returns the largest
/// pairing distance, or `None` when some element has no partner within `tol`.
pub fn match_multisets(expected: &[Complex64], actual: &[Complex64], tol: f64) -> Option<f64> {
    if expected.len() != actual.len() {
        return None;
    }
    let mut used = vec![false; actual.len()];
    let mut worst: f64 = 0.0;
    for e in expected {
        let (idx, dist) = actual
            .iter()
            .enumerate()
            .filter(|(i, _)| !used[*i])
            .map(|(i, a)| (i, (a - e).norm()))
            .min_by(|x, y| x.1.total_cmp(&y.1))?;
        if dist > tol {
            return None;
        }
        used[idx] = true;
        worst = worst.max(dist);
    }
    Some(worst)
}

/// `(ε ⊗ id) Δ(C) = C`, i.e. `sum_k c_k P^{k-1} = C`.
pub fn verify_counit_axiom(c: &Circulant) -> HopfReport {
    let delta = comultiplication(c);
    // ε(B_k) collapses c_k P^{k-1} ⊗ P^{k-1} to c_k P^{k-1}: ε(P^{k-1}) = 1
    let mut acc = Circulant::zero(c.n()).expect("order is nonzero");
    for (k, block) in delta.blocks().iter().enumerate() {
        let coefficient = counit(block);
        let term = Circulant::fundamental_power(c.n(), k)
            .expect("order is nonzero")
            .scale(coefficient);
        acc = acc.add(&term).expect("same order");
    }
    HopfReport::new("counit", acc.max_abs_diff(c), 1e-12 * (1.0 + c.inf_norm()))
}

/// `S(C_(1)) C_(2) = ε(C) I`, i.e. `sum_k c_k Q^{k-1} P^{k-1} = ε(C) I`
/// with `Q = P^T`.
pub fn verify_antipode_axiom(c: &Circulant) -> HopfReport {
    let n = c.n();
    let mut acc = Circulant::zero(n).expect("order is nonzero");
    for (k, &ck) in c.coeffs().iter().enumerate() {
        let p = Circulant::fundamental_power(n, k).expect("order is nonzero");
        let term = antipode(&p).mul_naive(&p).expect("same order").scale(ck);
        acc = acc.add(&term).expect("same order");
    }
    let expected = Circulant::identity(n).expect("order is nonzero").scale(counit(c));
    HopfReport::new("antipode", acc.max_abs_diff(&expected), 1e-12 * (1.0 + c.inf_norm()))
}

/// `h x = ε(h) x` for the integral `x = (1/n)(e_1 + ... + e_n)`, checked as
/// `h · circ(1, ..., 1) = ε(h) circ(1, ..., 1)`.
pub fn integral_check(h: &Circulant) -> HopfReport {
    let ones = Circulant::new(vec![ONE; h.n()]).expect("order is nonzero");
    let lhs = h.mul_naive(&ones).expect("same order");
    let rhs = ones.scale(counit(h));
    HopfReport::new("integral", lhs.max_abs_diff(&rhs), 1e-12 * (1.0 + h.inf_norm()))
}

/// `(Δ ⊗ id) Δ = (id ⊗ Δ) Δ` on coefficient tensors over `P^a ⊗ P^b ⊗ P^c`.
pub fn verify_coassociativity(c: &Circulant) -> HopfReport {
    let n = c.n();
    // Δ(C) on the basis P^a ⊗ P^b
    let mut delta = vec![vec![ZERO; n]; n];
    for (k, block) in comultiplication(c).blocks().iter().enumerate() {
        delta[k][k] = block.coeffs()[k];
    }
    let mut left = vec![ZERO; n * n * n];
    let mut right = vec![ZERO; n * n * n];
    for a in 0..n {
        for b in 0..n {
            let d = delta[a][b];
            left[(a * n + a) * n + b] += d;
            right[(a * n + b) * n + b] += d;
        }
    }
    let residual = left.iter().zip(&right).map(|(l, r)| (l - r).norm()).fold(0.0, f64::max);
    HopfReport::new("coassociativity", residual, 0.0)
}

/// Coefficients `a[i][k]` of `A = sum_{i,k} a[i][k] E_ii P^k` (0-based), the
/// unique decomposition of a matrix as diagonal times circulant.
#[derive(Debug, Clone, PartialEq)]
pub struct FactorGrid {
    pub coeffs: Vec<Vec<Complex64>>,
}

/// `a[i][k] = A[i, i + k mod n]`.
pub fn factorize_dense(a: &DenseMatrix) -> FactorGrid {
    let n = a.n();
    FactorGrid {
        coeffs: (0..n).map(|i| (0..n).map(|k| a[(i, (i + k) % n)]).collect()).collect(),
    }
}

/// `sum_{i,k} a[i][k] E_ii P^k`.
pub fn reconstruct_dense(grid: &FactorGrid) -> Result<DenseMatrix> {
    let n = grid.coeffs.len();
    if n == 0 {
        return Err(Error::InvalidOrder(0));
    }
    let mut out = DenseMatrix::zeros(n);
    for (i, row) in grid.coeffs.iter().enumerate() {
        if row.len() != n {
            return Err(Error::NotSquare {
                rows: n,
                cols: row.len(),
            });
        }
        for (k, &a) in row.iter().enumerate() {
            // E_ii P^k is row i of P^k: a single 1 at column i + k
            let shift = Circulant::fundamental_power(n, k)?.to_dense();
            for j in 0..n {
                out[(i, j)] += a * shift[(i, j)];
            }
        }
    }
    Ok(out)
}
