//! Brute-force reference implementations.
//!
//! Nothing in here calls the structured code it is used to validate: products
//! are textbook triple loops, characteristic polynomials come from the
//! Faddeev–LeVerrier trace recurrence on the dense matrix, and inverses from
//! Gauss–Jordan elimination. Cost is irrelevant; these run at desk scale.

use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::dense::DenseMatrix;
use crate::error::{Error, Result};

/// Square matrix of exact rationals, row-major.
pub type RationalMatrix = Vec<Vec<BigRational>>;

#[derive(Debug, Clone, PartialEq)]
pub struct OracleReport {
    pub check: String,
    pub pass: bool,
    pub max_deviation: f64,
    /// 0-based `(row, col)` of the worst deviation, if any entries were compared.
    pub location: Option<(usize, usize)>,
}

impl OracleReport {
    /// Compares two dense matrices entrywise against an absolute tolerance.
    pub fn compare(check: &str, expected: &DenseMatrix, actual: &DenseMatrix, tol: f64) -> Self {
        assert_eq!(expected.n(), actual.n(), "order mismatch in {check}");
        let mut worst = 0.0;
        let mut location = None;
        for i in 0..expected.n() {
            for j in 0..expected.n() {
                let d = (expected[(i, j)] - actual[(i, j)]).norm();
                if location.is_none() || d > worst {
                    worst = d;
                    location = Some((i, j));
                }
            }
        }
        Self {
            check: check.to_string(),
            pass: worst <= tol,
            max_deviation: worst,
            location,
        }
    }
}

pub fn dense_mul(a: &DenseMatrix, b: &DenseMatrix) -> Result<DenseMatrix> {
    if a.n() != b.n() {
        return Err(Error::Dimension {
            expected: a.n(),
            found: b.n(),
        });
    }
    let n = a.n();
    let mut out = DenseMatrix::zeros(n);
    for i in 0..n {
        for k in 0..n {
            let aik = a[(i, k)];
            for j in 0..n {
                out[(i, j)] += aik * b[(k, j)];
            }
        }
    }
    Ok(out)
}

/// Characteristic polynomial `det(X I - A)` by the Faddeev–LeVerrier
/// recurrence. Coefficients are highest degree first, so the result is
/// `[1, a_{n-1}, ..., a_0]`.
pub fn faddeev_leverrier(a: &DenseMatrix) -> Vec<Complex64> {
    let n = a.n();
    let mut coeffs = vec![Complex64::new(1.0, 0.0)];
    let mut m = DenseMatrix::zeros(n);
    for k in 1..=n {
        // M_k = A M_{k-1} + c_{n-k+1} I
        let mut next = dense_mul(a, &m).expect("same order");
        let c_prev = *coeffs.last().unwrap();
        for i in 0..n {
            next[(i, i)] += c_prev;
        }
        let am = dense_mul(a, &next).expect("same order");
        let trace: Complex64 = (0..n).map(|i| am[(i, i)]).sum();
        coeffs.push(-trace / k as f64);
        m = next;
    }
    coeffs
}

/// Exact Faddeev–LeVerrier over the rationals; same layout as
/// [`faddeev_leverrier`].
pub fn faddeev_leverrier_exact(a: &RationalMatrix) -> Result<Vec<BigRational>> {
    let n = check_square(a)?;
    let mut coeffs = vec![BigRational::one()];
    let mut m = vec![vec![BigRational::zero(); n]; n];
    for k in 1..=n {
        let mut next = rational_mul(a, &m);
        let c_prev = coeffs.last().unwrap().clone();
        for (i, row) in next.iter_mut().enumerate() {
            row[i] += &c_prev;
        }
        let am = rational_mul(a, &next);
        let trace = (0..n).fold(BigRational::zero(), |acc, i| acc + &am[i][i]);
        coeffs.push(-trace / BigRational::from_integer(k.into()));
        m = next;
    }
    Ok(coeffs)
}

pub fn rational_mul(a: &RationalMatrix, b: &RationalMatrix) -> RationalMatrix {
    let n = a.len();
    let mut out = vec![vec![BigRational::zero(); n]; n];
    for i in 0..n {
        for k in 0..n {
            if a[i][k].is_zero() {
                continue;
            }
            for j in 0..n {
                let t = &a[i][k] * &b[k][j];
                out[i][j] += t;
            }
        }
    }
    out
}

pub fn rational_identity(n: usize) -> RationalMatrix {
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    if i == j {
                        BigRational::one()
                    } else {
                        BigRational::zero()
                    }
                })
                .collect()
        })
        .collect()
}

/// Exact inverse by Gauss–Jordan elimination with full pivoting.
pub fn exact_inverse(a: &RationalMatrix) -> Result<RationalMatrix> {
    let n = check_square(a)?;
    let mut m = a.clone();
    let mut inv = rational_identity(n);
    // col_perm[k] = original column now sitting at position k
    let mut col_perm: Vec<usize> = (0..n).collect();

    for k in 0..n {
        let pivot = (k..n)
            .flat_map(|i| (k..n).map(move |j| (i, j)))
            .find(|&(i, j)| !m[i][j].is_zero());
        let Some((pi, pj)) = pivot else {
            return Err(Error::Singular { witness: None });
        };
        m.swap(k, pi);
        inv.swap(k, pi);
        if pj != k {
            for row in m.iter_mut() {
                row.swap(k, pj);
            }
            col_perm.swap(k, pj);
        }

        let p = m[k][k].clone();
        for x in m[k].iter_mut() {
            *x /= &p;
        }
        for x in inv[k].iter_mut() {
            *x /= &p;
        }
        for i in 0..n {
            if i == k || m[i][k].is_zero() {
                continue;
            }
            let factor = m[i][k].clone();
            for j in 0..n {
                let t = &factor * &m[k][j];
                m[i][j] -= t;
                let t = &factor * &inv[k][j];
                inv[i][j] -= t;
            }
        }
    }

    // inv is now (A Q)^{-1} = Q^{-1} A^{-1}; undo the column permutation Q on rows.
    let mut out = vec![Vec::new(); n];
    for (k, &orig) in col_perm.iter().enumerate() {
        out[orig] = inv[k].clone();
    }
    Ok(out)
}

/// Exact determinant by fraction-based Gaussian elimination.
pub fn exact_determinant(a: &RationalMatrix) -> Result<BigRational> {
    let n = check_square(a)?;
    let mut m = a.clone();
    let mut det = BigRational::one();
    for k in 0..n {
        let Some(p) = (k..n).find(|&i| !m[i][k].is_zero()) else {
            return Ok(BigRational::zero());
        };
        if p != k {
            m.swap(k, p);
            det = -det;
        }
        let pivot = m[k][k].clone();
        det *= &pivot;
        let (upper, lower) = m.split_at_mut(k + 1);
        let pivot_row = &upper[k];
        for row in lower {
            if row[k].is_zero() {
                continue;
            }
            let factor = &row[k] / &pivot;
            for (x, p) in row[k..].iter_mut().zip(&pivot_row[k..]) {
                *x -= &factor * p;
            }
        }
    }
    Ok(det)
}

/// Scale-aware eigen residual `‖Ax - λx‖∞ / (1 + ‖A‖∞ ‖x‖∞)`.
pub fn eigen_residual(a: &DenseMatrix, lambda: Complex64, x: &[Complex64]) -> Result<f64> {
    if x.len() != a.n() {
        return Err(Error::Dimension {
            expected: a.n(),
            found: x.len(),
        });
    }
    let x_norm = x.iter().map(|z| z.norm()).fold(0.0, f64::max);
    if x_norm == 0.0 {
        return Err(Error::InvalidVector);
    }
    let ax = a.mul_vec(x);
    let r = ax
        .iter()
        .zip(x)
        .map(|(y, xi)| (y - lambda * xi).norm())
        .fold(0.0, f64::max);
    Ok(r / (1.0 + a.inf_norm() * x_norm))
}

fn check_square(a: &RationalMatrix) -> Result<usize> {
    let n = a.len();
    if n == 0 {
        return Err(Error::InvalidOrder(0));
    }
    if let Some(row) = a.iter().find(|r| r.len() != n) {
        return Err(Error::NotSquare {
            rows: n,
            cols: row.len(),
        });
    }
    Ok(n)
}

/// Hard-coded closed forms `(q_1, ..., q_n)` for `n = 3` and `n = 4`, written
/// out from the first row only (an independent check of the spectral path).
pub fn closed_form_forms(c: &[Complex64]) -> Option<Vec<Complex64>> {
    match *c {
        [c1, c2, c3] => Some(vec![
            3.0 * c1,
            3.0 * c1 * c1 - 3.0 * c2 * c3,
            c1 * c1 * c1 + c2 * c2 * c2 + c3 * c3 * c3 - 3.0 * c1 * c2 * c3,
        ]),
        [c1, c2, c3, c4] => Some(vec![
            4.0 * c1,
            6.0 * c1 * c1 - 4.0 * c2 * c4 - 2.0 * c3 * c3,
            4.0 * c1 * c1 * c1 - 8.0 * c1 * c2 * c4 - 4.0 * c1 * c3 * c3 + 4.0 * c2 * c2 * c3 + 4.0 * c3 * c4 * c4,
            c1.powu(4) - c2.powu(4) + c3.powu(4) - c4.powu(4) - 2.0 * c1 * c1 * c3 * c3 - 4.0 * c1 * c1 * c2 * c4
                + 4.0 * c1 * c2 * c2 * c3
                + 4.0 * c1 * c3 * c4 * c4
                + 2.0 * c2 * c2 * c4 * c4
                - 4.0 * c2 * c3 * c3 * c4,
        ]),
        _ => None,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(p: i64, d: i64) -> BigRational {
        BigRational::new(p.into(), d.into())
    }

    fn int_matrix(rows: &[&[i64]]) -> RationalMatrix {
        rows.iter().map(|r| r.iter().map(|&x| q(x, 1)).collect()).collect()
    }

    fn real(rows: &[&[f64]]) -> DenseMatrix {
        DenseMatrix::from_real_rows(rows).unwrap()
    }

    fn circ123() -> DenseMatrix {
        real(&[&[1.0, 2.0, 3.0], &[3.0, 1.0, 2.0], &[2.0, 3.0, 1.0]])
    }

    #[test]
    fn products() {
        let a = circ123();
        assert_eq!(dense_mul(&DenseMatrix::identity(3), &a).unwrap(), a);
        let sq = dense_mul(&a, &a).unwrap();
        assert_eq!(
            sq,
            real(&[&[13.0, 13.0, 10.0], &[10.0, 13.0, 13.0], &[13.0, 10.0, 13.0]])
        );
        let p = real(&[&[0.0, 1.0, 0.0], &[0.0, 0.0, 1.0], &[1.0, 0.0, 0.0]]);
        assert_eq!(dense_mul(&p, &p.transpose()).unwrap(), DenseMatrix::identity(3));
    }

    #[test]
    fn char_polys() {
        let re: Vec<f64> = faddeev_leverrier(&circ123()).iter().map(|z| z.re).collect();
        for (a, b) in re.iter().zip([1.0, -3.0, -15.0, -18.0]) {
            assert!((a - b).abs() < 1e-12);
        }
        let z: Vec<f64> = faddeev_leverrier(&DenseMatrix::zeros(2)).iter().map(|z| z.re).collect();
        assert_eq!(z, vec![1.0, 0.0, 0.0]);
        let d = int_matrix(&[&[4, 0, 0], &[0, 1, 0], &[0, 0, 1]]);
        assert_eq!(
            faddeev_leverrier_exact(&d).unwrap(),
            vec![q(1, 1), q(-6, 1), q(9, 1), q(-4, 1)]
        );
    }

    #[test]
    fn inverses() {
        let basis = vec![
            vec![q(0, 1), q(-1, 1), q(1, 1)],
            vec![q(-1, 3), q(1, 3), q(1, 3)],
            vec![q(1, 3), q(2, 3), q(-1, 3)],
        ];
        let inv = exact_inverse(&basis).unwrap();
        assert_eq!(inv, int_matrix(&[&[1, -1, 2], &[0, 1, 1], &[1, 1, 1]]));
        assert_eq!(rational_mul(&inv, &basis), rational_identity(3));
        assert_eq!(exact_inverse(&rational_identity(4)).unwrap(), rational_identity(4));
        assert!(matches!(
            exact_inverse(&int_matrix(&[&[1, 1], &[1, 1]])),
            Err(Error::Singular { witness: None })
        ));
    }

    #[test]
    fn determinants() {
        let a = int_matrix(&[&[0, 0, 2], &[0, 3, 0], &[5, 0, 0]]);
        assert_eq!(exact_determinant(&a).unwrap(), q(-30, 1));
        assert_eq!(exact_determinant(&int_matrix(&[&[1, 2], &[2, 4]])).unwrap(), q(0, 1));
        let basis = vec![
            vec![q(0, 1), q(-1, 1), q(1, 1)],
            vec![q(-1, 3), q(1, 3), q(1, 3)],
            vec![q(1, 3), q(2, 3), q(-1, 3)],
        ];
        // the inverse [[1,-1,2],[0,1,1],[1,1,1]] has determinant -3
        assert_eq!(exact_determinant(&basis).unwrap(), q(-1, 3));
    }

    #[test]
    fn full_pivoting_handles_zero_leading_block() {
        let a = int_matrix(&[&[0, 0, 2], &[0, 3, 0], &[5, 0, 0]]);
        let inv = exact_inverse(&a).unwrap();
        assert_eq!(rational_mul(&a, &inv), rational_identity(3));
    }

    #[test]
    fn residuals() {
        let ones = real(&[&[1.0; 3], &[1.0; 3], &[1.0; 3]]);
        let x = vec![Complex64::new(1.0, 0.0); 3];
        assert!(eigen_residual(&ones, Complex64::new(3.0, 0.0), &x).unwrap() <= 1e-15);
        let r = eigen_residual(
            &DenseMatrix::identity(2),
            Complex64::new(2.0, 0.0),
            &[Complex64::new(1.0, 0.0), Complex64::new(0.0, 0.0)],
        )
        .unwrap();
        assert_eq!(r, 0.5);
        assert_eq!(
            eigen_residual(
                &DenseMatrix::identity(2),
                Complex64::new(1.0, 0.0),
                &[Complex64::new(0.0, 0.0); 2]
            ),
            Err(Error::InvalidVector)
        );
    }

    #[test]
    fn report_locates_worst_entry() {
        let a = DenseMatrix::identity(3);
        let mut b = a.clone();
        b[(2, 1)] = Complex64::new(0.25, 0.0);
        let r = OracleReport::compare("perturbed", &a, &b, 0.1);
        assert!(!r.pass);
        assert_eq!(r.location, Some((2, 1)));
        assert_eq!(r.max_deviation, 0.25);
    }
}
