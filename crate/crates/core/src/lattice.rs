//! Exact analysis of circulants with integer or rational entries.
//!
//! Covers rational spectra (and the reconstruction of a circulant from one),
//! the Brandt-algebra predicate on the characteristic forms, and lattices
//! `Z v_1 + ... + Z v_n` spanned by circulants `v_i = sum_k c_ik P^{k-1}`.
//! When the coefficient matrix `(c_ik)` has an integral inverse, every
//! integral circulant is an integral combination of the `v_i`, and likewise
//! every `circ(a_1 I, a_2 P, ..., a_n P^{n-1})` of the `Δ(v_i)`.
//!
//! Everything is exact except the assignment of roots to spectrum positions
//! and [`reconstruct_from_spectrum`], which need `ω`.

use num_bigint::BigInt;
use num_complex::Complex64;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{FromPrimitive, One, ToPrimitive, Zero};

use crate::circulant::{Circulant, ZERO};
use crate::error::{Error, Result};
use crate::oracle::{self, RationalMatrix};
use crate::spectral::{eigenvalues, FourierContext};

pub type Rational = BigRational;

/// Tolerance used to pair exact roots with floating eigenvalues.
pub const ASSIGNMENT_TOLERANCE: f64 = 1e-6;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Mode {
    Integral,
    Rational,
}

/// Circulant with exact rational first row.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalCirculant {
    coeffs: Vec<Rational>,
}

impl RationalCirculant {
    pub fn new(coeffs: Vec<Rational>) -> Result<Self> {
        if coeffs.is_empty() {
            return Err(Error::InvalidOrder(0));
        }
        Ok(Self { coeffs })
    }

    pub fn from_integers(coeffs: &[i64]) -> Result<Self> {
        Self::new(coeffs.iter().map(|&c| Rational::from_integer(c.into())).collect())
    }

    pub fn identity(n: usize) -> Result<Self> {
        let mut coeffs = vec![Rational::zero(); n];
        *coeffs.first_mut().ok_or(Error::InvalidOrder(0))? = Rational::one();
        Ok(Self { coeffs })
    }

    pub fn n(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_integral(&self) -> bool {
        self.coeffs.iter().all(Rational::is_integer)
    }

    pub fn to_dense_exact(&self) -> RationalMatrix {
        let n = self.n();
        (0..n)
            .map(|i| (0..n).map(|j| self.coeffs[(j + n - i) % n].clone()).collect())
            .collect()
    }

    pub fn to_complex(&self) -> Circulant {
        Circulant::new(self.coeffs.iter().map(to_complex).collect()).expect("finite")
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_order(other)?;
        Ok(Self {
            coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect(),
        })
    }

    /// Exact cyclic convolution.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_order(other)?;
        let n = self.n();
        let mut coeffs = vec![Rational::zero(); n];
        for (i, x) in self.coeffs.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in other.coeffs.iter().enumerate() {
                coeffs[(i + j) % n] += x * y;
            }
        }
        Ok(Self { coeffs })
    }

    fn check_order(&self, other: &Self) -> Result<()> {
        if self.n() != other.n() {
            return Err(Error::Dimension {
                expected: self.n(),
                found: other.n(),
            });
        }
        Ok(())
    }
}

fn to_complex(q: &Rational) -> Complex64 {
    let re = q.numer().to_f64().unwrap_or(f64::NAN) / q.denom().to_f64().unwrap_or(f64::NAN);
    let re = if re.is_finite() {
        re
    } else {
        // huge numerator and denominator: divide at reduced precision
        (q.numer() * BigInt::from(1u64 << 53) / q.denom())
            .to_f64()
            .unwrap_or(f64::NAN)
            / (1u64 << 53) as f64
    };
    Complex64::new(re, 0.0)
}

/// Exact eigenvalues, position `j` paired with `ω^{j-1}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntegerSpectrum {
    values: Vec<Rational>,
}

impl IntegerSpectrum {
    pub fn new(values: Vec<Rational>) -> Result<Self> {
        if values.is_empty() {
            return Err(Error::InvalidOrder(0));
        }
        Ok(Self { values })
    }

    pub fn from_integers(values: &[i64]) -> Result<Self> {
        Self::new(values.iter().map(|&v| Rational::from_integer(v.into())).collect())
    }

    pub fn n(&self) -> usize {
        self.values.len()
    }

    pub fn values(&self) -> &[Rational] {
        &self.values
    }

    pub fn is_integral(&self) -> bool {
        self.values.iter().all(Rational::is_integer)
    }
}

/// Monic characteristic polynomial, highest degree first, by exact
/// Faddeev–LeVerrier on the dense expansion.
pub fn exact_char_poly(c: &RationalCirculant) -> Vec<Rational> {
    oracle::faddeev_leverrier_exact(&c.to_dense_exact()).expect("circulant expansion is square")
}

/// Exact forms `q_i = (-1)^i a_i` from the characteristic polynomial.
pub fn exact_forms(c: &RationalCirculant) -> Vec<Rational> {
    exact_char_poly(c)
        .into_iter()
        .enumerate()
        .skip(1)
        .map(|(i, a)| if i % 2 == 0 { a } else { -a })
        .collect()
}

/// Rational spectrum if the characteristic polynomial splits over the
/// rationals, `None` otherwise.
///
/// Any rational eigenvalue of a matrix with entries in `(1/d) Z` lies in
/// `(1/d) Z`, so each floating `λ_j` proposes the single candidate
/// `round(d λ_j) / d`. Candidates are confirmed by exact evaluation and removed
/// by exact deflation, repeatedly for repeated roots.
pub fn rational_spectrum(c: &RationalCirculant) -> Result<Option<IntegerSpectrum>> {
    let n = c.n();
    let mut poly = exact_char_poly(c);
    let lambdas = eigenvalues(&c.to_complex());
    let d = c.coeffs.iter().fold(BigInt::one(), |acc, q| acc.lcm(q.denom()));
    let d_f = d.to_f64().unwrap_or(f64::INFINITY);

    let mut roots: Vec<(Rational, usize)> = Vec::new();
    let mut candidates: Vec<Rational> = Vec::new();
    for l in lambdas.values() {
        if l.im.abs() > ASSIGNMENT_TOLERANCE * (1.0 + l.norm()) || !d_f.is_finite() {
            continue;
        }
        let Some(num) = BigInt::from_f64((l.re * d_f).round()) else {
            continue;
        };
        let candidate = Rational::new(num, d.clone());
        if !candidates.contains(&candidate) {
            candidates.push(candidate);
        }
    }
    for r in candidates {
        let mut multiplicity = 0;
        while poly.len() > 1 && eval(&poly, &r).is_zero() {
            poly = deflate(&poly, &r);
            multiplicity += 1;
        }
        if multiplicity > 0 {
            roots.push((r, multiplicity));
        }
    }
    if poly.len() > 1 {
        return Ok(None);
    }
    debug_assert_eq!(roots.iter().map(|r| r.1).sum::<usize>(), n);
    assign_positions(lambdas.values(), roots).map(|v| Some(IntegerSpectrum { values: v }))
}

/// [`rational_spectrum`] restricted to integer eigenvalues.
pub fn integer_spectrum(c: &RationalCirculant) -> Result<Option<IntegerSpectrum>> {
    Ok(rational_spectrum(c)?.filter(IntegerSpectrum::is_integral))
}

fn assign_positions(lambdas: &[Complex64], mut roots: Vec<(Rational, usize)>) -> Result<Vec<Rational>> {
    let approx: Vec<f64> = roots.iter().map(|(r, _)| to_complex(r).re).collect();
    let mut out = Vec::with_capacity(lambdas.len());
    for (idx, l) in lambdas.iter().enumerate() {
        let j = idx + 1;
        let tol = ASSIGNMENT_TOLERANCE * (1.0 + l.norm());
        let near: Vec<usize> = (0..roots.len())
            .filter(|&k| roots[k].1 > 0 && (Complex64::new(approx[k], 0.0) - l).norm() <= tol)
            .collect();
        match near.as_slice() {
            [k] => {
                roots[*k].1 -= 1;
                out.push(roots[*k].0.clone());
            }
            [] => {
                return Err(Error::Assignment {
                    j,
                    reason: format!("no unassigned exact root within {tol:.1e} of {l}"),
                })
            }
            _ => {
                return Err(Error::Assignment {
                    j,
                    reason: format!("{} distinct exact roots within {tol:.1e} of {l}", near.len()),
                })
            }
        }
    }
    Ok(out)
}

/// Horner evaluation; coefficients highest degree first.
fn eval(poly: &[Rational], x: &Rational) -> Rational {
    poly.iter().fold(Rational::zero(), |acc, a| acc * x + a)
}

/// Synthetic division by `(X - r)`; assumes `r` is a root.
fn deflate(poly: &[Rational], r: &Rational) -> Vec<Rational> {
    let mut out = Vec::with_capacity(poly.len() - 1);
    let mut acc = Rational::zero();
    for a in &poly[..poly.len() - 1] {
        acc = acc * r + a;
        out.push(acc.clone());
    }
    out
}

/// Which quantity failed the Brandt predicate.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BrandtTerm {
    Left,
    Right,
    Sum,
    Product,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BrandtViolation {
    /// 0-based indices of the pair `(a, b)`.
    pub a: usize,
    pub b: usize,
    pub term: BrandtTerm,
    /// 1-based form index.
    pub form: usize,
    pub value: Rational,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BrandtVerdict {
    pub holds: bool,
    pub counterexample: Option<BrandtViolation>,
}

/// Checks `q_i(a), q_i(b), q_i(a + b), q_i(ab)` in `Z` (or `Q`) for every
/// ordered pair, including `a = b`, and every `i`.
pub fn brandt_check(elements: &[RationalCirculant], mode: Mode) -> Result<BrandtVerdict> {
    if let Some(first) = elements.first() {
        for e in elements {
            first.check_order(e)?;
        }
    }
    let admissible = |q: &Rational| match mode {
        Mode::Integral => q.is_integer(),
        // rational entries always give rational forms
        Mode::Rational => true,
    };
    let first_bad = |forms: &[Rational]| forms.iter().position(|q| !admissible(q));

    let single: Vec<Vec<Rational>> = elements.iter().map(exact_forms).collect();
    for (a, x) in elements.iter().enumerate() {
        for (b, y) in elements.iter().enumerate() {
            let checks = [
                (BrandtTerm::Left, single[a].clone()),
                (BrandtTerm::Right, single[b].clone()),
                (BrandtTerm::Sum, exact_forms(&x.add(y)?)),
                (BrandtTerm::Product, exact_forms(&x.mul(y)?)),
            ];
            for (term, forms) in checks {
                if let Some(i) = first_bad(&forms) {
                    return Ok(BrandtVerdict {
                        holds: false,
                        counterexample: Some(BrandtViolation {
                            a,
                            b,
                            term,
                            form: i + 1,
                            value: forms[i].clone(),
                        }),
                    });
                }
            }
        }
    }
    Ok(BrandtVerdict {
        holds: true,
        counterexample: None,
    })
}

#[derive(Debug, Clone, PartialEq)]
pub struct Reconstruction {
    pub circulant: Circulant,
    /// `λ_{k+1} = λ_{n-k+1}` for all `1 <= k <= n-1`, which forces real entries.
    pub real: bool,
}

/// `(c_1, ..., c_n)^T = (1/n) M (λ_1, ..., λ_n)^T` with
/// `M_ij = conj(ω^{(i-1)(j-1)})`.
pub fn reconstruct_from_spectrum(spectrum: &IntegerSpectrum) -> Reconstruction {
    let n = spectrum.n();
    let ctx = FourierContext::new(n).expect("order is nonzero");
    let lambdas: Vec<Complex64> = spectrum.values.iter().map(to_complex).collect();
    let real = (1..n).all(|k| spectrum.values[k] == spectrum.values[n - k]);
    let coeffs = (0..n)
        .map(|i| {
            let sum: Complex64 = (0..n)
                .map(|j| ctx.power(i * j).conj() * lambdas[j])
                .fold(ZERO, |acc, t| acc + t);
            let c = sum / n as f64;
            if real {
                debug_assert!(c.im.abs() <= 1e-10 * (1.0 + c.norm()));
                Complex64::new(c.re, 0.0)
            } else {
                c
            }
        })
        .collect();
    Reconstruction {
        circulant: Circulant::new(coeffs).expect("finite"),
        real,
    }
}

/// Basis `v_1, ..., v_n` of a lattice of circulants; row `i` of the
/// coefficient matrix holds `(c_i1, ..., c_in)` with
/// `v_i = c_i1 I + c_i2 P + ... + c_in P^{n-1}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LatticeBasis {
    rows: RationalMatrix,
    determinant: Rational,
    inverse: RationalMatrix,
}

impl LatticeBasis {
    pub fn new(rows: RationalMatrix) -> Result<Self> {
        let determinant = oracle::exact_determinant(&rows)?;
        if determinant.is_zero() {
            return Err(Error::DependentBasis);
        }
        let inverse = oracle::exact_inverse(&rows).map_err(|_| Error::DependentBasis)?;
        Ok(Self {
            rows,
            determinant,
            inverse,
        })
    }

    pub fn n(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &RationalMatrix {
        &self.rows
    }

    pub fn determinant(&self) -> &Rational {
        &self.determinant
    }

    /// `v_i` as a circulant.
    pub fn vector(&self, i: usize) -> RationalCirculant {
        RationalCirculant {
            coeffs: self.rows[i].clone(),
        }
    }
}

pub fn lattice_new(rows: RationalMatrix) -> Result<LatticeBasis> {
    LatticeBasis::new(rows)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntegralInverse {
    pub integral: bool,
    pub inverse: RationalMatrix,
}

/// Whether the exact inverse of the coefficient matrix has only integer
/// entries.
pub fn basis_inverse_integral(basis: &LatticeBasis) -> IntegralInverse {
    IntegralInverse {
        integral: basis.inverse.iter().flatten().all(Rational::is_integer),
        inverse: basis.inverse.clone(),
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Decomposition {
    /// `a_1, ..., a_n` with `target = sum a_i v_i`.
    pub coeffs: Vec<Rational>,
    pub member: bool,
}

/// Solves `(a_1, ..., a_n) C = target` exactly.
pub fn lattice_decompose(basis: &LatticeBasis, target: &RationalCirculant) -> Result<Decomposition> {
    let n = basis.n();
    if target.n() != n {
        return Err(Error::Dimension {
            expected: n,
            found: target.n(),
        });
    }
    let coeffs: Vec<Rational> = (0..n)
        .map(|j| {
            (0..n).fold(Rational::zero(), |acc, i| {
                acc + &target.coeffs[i] * &basis.inverse[i][j]
            })
        })
        .collect();
    let member = coeffs.iter().all(Rational::is_integer);
    debug_assert!(
        member || !(target.is_integral() && basis_inverse_integral(basis).integral),
        "integral target must lie in a lattice whose basis has integral inverse"
    );
    Ok(Decomposition { coeffs, member })
}

/// Sum of coefficients times basis vectors, exactly.
pub fn recombine(basis: &LatticeBasis, coeffs: &[Rational]) -> RationalCirculant {
    let n = basis.n();
    let mut out = vec![Rational::zero(); n];
    for (a, row) in coeffs.iter().zip(&basis.rows) {
        for (o, c) in out.iter_mut().zip(row) {
            *o += a * c;
        }
    }
    RationalCirculant { coeffs: out }
}

/// Exact `Δ(v)`: block `k` is `c_k P^{k-1}`, stored as its first row.
pub fn delta_exact(v: &RationalCirculant) -> Vec<RationalCirculant> {
    let n = v.n();
    v.coeffs
        .iter()
        .enumerate()
        .map(|(k, c)| {
            let mut row = vec![Rational::zero(); n];
            row[k] = c.clone();
            RationalCirculant { coeffs: row }
        })
        .collect()
}

/// Integer `m_1, ..., m_n` with `sum m_i Δ(v_i) = circ(a_1 I, a_2 P, ..., a_n P^{n-1})`.
///
/// By linearity of `Δ` these are the coefficients of `circ(a_1, ..., a_n)` in
/// the basis; for `n <= 5` the block identity is also checked directly.
pub fn delta_lattice_decompose(basis: &LatticeBasis, a: &[BigInt]) -> Result<Vec<BigInt>> {
    if !basis_inverse_integral(basis).integral {
        return Err(Error::NotIntegralBasis);
    }
    let n = basis.n();
    if a.len() != n {
        return Err(Error::Dimension {
            expected: n,
            found: a.len(),
        });
    }
    let target = RationalCirculant::new(a.iter().cloned().map(Rational::from_integer).collect())?;
    let decomposition = lattice_decompose(basis, &target)?;
    let m: Vec<BigInt> = decomposition.coeffs.iter().map(Rational::to_integer).collect();

    if n <= 5 {
        let mut blocks = vec![
            RationalCirculant {
                coeffs: vec![Rational::zero(); n]
            };
            n
        ];
        for (mi, i) in m.iter().zip(0..n) {
            let scale = Rational::from_integer(mi.clone());
            for (acc, block) in blocks.iter_mut().zip(delta_exact(&basis.vector(i))) {
                for (x, y) in acc.coeffs.iter_mut().zip(block.coeffs) {
                    *x += &scale * y;
                }
            }
        }
        let expected = delta_exact(&target);
        assert_eq!(blocks, expected, "block-level recombination of Δ-lattice coefficients");
    }
    Ok(m)
}

/// `p/q` with optional sign, or a bare integer.
pub fn parse_rational(s: &str) -> Option<Rational> {
    let s = s.trim();
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let num: BigInt = num.parse().ok()?;
    let den: BigInt = den.parse().ok()?;
    if den.is_zero() {
        return None;
    }
    Some(Rational::new(num, den))
}

/// Canonical text form: `p` for integers, `p/q` otherwise.
pub fn format_rational(q: &Rational) -> String {
    if q.is_integer() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

/// Nearest `f64` (up to rounding of the final division).
pub fn rational_to_f64(q: &Rational) -> f64 {
    to_complex(q).re
}
