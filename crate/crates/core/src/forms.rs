//! Characteristic forms of group-algebra elements.
//!
//! Every `x = c_1 e_1 + ... + c_n e_n` satisfies
//! `X^n - q_1(x) X^{n-1} + q_2(x) X^{n-2} - ... + (-1)^n q_n(x) = 0`, the
//! characteristic polynomial of `circ(c_1, ..., c_n)`. Over the complex
//! numbers `q_i(x) = s_i(λ_1, ..., λ_n)`, the elementary symmetric polynomials
//! of the eigenvalues. They are obtained from the power sums with Newton's
//! identities `k s_k = sum_{i=1}^{k} (-1)^{i-1} s_{k-i} p_i`.
//!
//! The conjugate `x̄ = (-1)^{n+1} x^{n-1} + (-1)^n q_1 x^{n-2} + ... + q_{n-1}`
//! satisfies `x x̄ = q_n(x)`, which yields the inverse `x̄ / q_n(x)`.

use num_complex::Complex64;

use crate::circulant::{Circulant, ONE, ZERO};
use crate::error::{Error, Result, SingularWitness};
use crate::spectral::{eigenvalues, FourierContext, Spectrum};

/// Power sums `p_1..p_n` and elementary symmetric polynomials `s_0..s_n` of a
/// spectrum.
#[derive(Debug, Clone, PartialEq)]
pub struct SymmetricTables {
    /// `power_sums[k - 1] = p_k`.
    pub power_sums: Vec<Complex64>,
    /// `elementary[k] = s_k`, with `s_0 = 1`.
    pub elementary: Vec<Complex64>,
}

/// `q_1(x), ..., q_n(x)`.
#[derive(Debug, Clone, PartialEq)]
pub struct FormsVector {
    q: Vec<Complex64>,
}

impl FormsVector {
    pub fn n(&self) -> usize {
        self.q.len()
    }

    /// `q_i`, 1-based.
    pub fn q(&self, i: usize) -> Complex64 {
        self.q[i - 1]
    }

    pub fn values(&self) -> &[Complex64] {
        &self.q
    }

    /// Trace form `q_1`.
    pub fn trace(&self) -> Complex64 {
        self.q[0]
    }

    /// Norm form `q_n`, the determinant.
    pub fn norm(&self) -> Complex64 {
        *self.q.last().unwrap()
    }

    /// Monic characteristic polynomial, highest degree first:
    /// `[1, -q_1, q_2, ..., (-1)^n q_n]`.
    pub fn char_poly(&self) -> Vec<Complex64> {
        std::iter::once(ONE)
            .chain(self.q.iter().enumerate().map(|(i, &q)| if i % 2 == 0 { -q } else { q }))
            .collect()
    }
}

pub fn symmetric_tables(spectrum: &Spectrum) -> SymmetricTables {
    let n = spectrum.n();
    let lambdas = spectrum.values();

    let mut powers = lambdas.to_vec();
    let mut power_sums = Vec::with_capacity(n);
    for k in 1..=n {
        if k > 1 {
            for (p, l) in powers.iter_mut().zip(lambdas) {
                *p *= l;
            }
        }
        power_sums.push(powers.iter().sum::<Complex64>());
    }

    let mut elementary = Vec::with_capacity(n + 1);
    elementary.push(ONE);
    for k in 1..=n {
        let mut acc = ZERO;
        for i in 1..=k {
            let term = elementary[k - i] * power_sums[i - 1];
            if i % 2 == 1 {
                acc += term;
            } else {
                acc -= term;
            }
        }
        elementary.push(acc / k as f64);
    }

    SymmetricTables { power_sums, elementary }
}

/// Forms from the eigenvalues of a spectrum.
pub fn forms_of_spectrum(spectrum: &Spectrum) -> FormsVector {
    let tables = symmetric_tables(spectrum);
    FormsVector {
        q: tables.elementary[1..].to_vec(),
    }
}

pub fn forms(c: &Circulant) -> FormsVector {
    forms_of_spectrum(&eigenvalues(c))
}

/// See [`FormsVector::char_poly`].
pub fn char_poly(c: &Circulant) -> Vec<Complex64> {
    forms(c).char_poly()
}

/// Evaluates the characteristic polynomial at `c` itself in the circulant
/// algebra (Horner with [`Circulant::mul_naive`]); zero up to rounding.
pub fn char_poly_at_self(c: &Circulant) -> Circulant {
    let coeffs = char_poly(c);
    let n = c.n();
    let mut acc = Circulant::zero(n).expect("order is nonzero");
    for k in coeffs {
        acc = acc.mul_naive(c).expect("same order");
        let mut row = acc.into_coeffs();
        row[0] += k;
        acc = Circulant::new(row).expect("finite");
    }
    acc
}

/// `x̄` by Horner accumulation of circulant powers (`n - 1` products).
pub fn conjugate(c: &Circulant) -> Circulant {
    conjugate_with_forms(c, &forms(c))
}

fn conjugate_with_forms(c: &Circulant, forms: &FormsVector) -> Circulant {
    let n = c.n();
    // coefficient of x^{n-1-k} is (-1)^{n+1+k} q_k, with q_0 = 1
    let sign = |k: usize| if (n + 1 + k).is_multiple_of(2) { ONE } else { -ONE };
    let mut row = vec![ZERO; n];
    row[0] = sign(0);
    let mut acc = Circulant::new(row).expect("finite");
    for k in 1..n {
        let mut next = acc.mul_naive(c).expect("same order").into_coeffs();
        next[0] += sign(k) * forms.q(k);
        acc = Circulant::new(next).expect("finite");
    }
    acc
}

#[derive(Debug, Clone, PartialEq)]
pub enum Invertibility {
    Invertible {
        norm: Complex64,
    },
    /// `q_n` vanished; the witness is a root of unity where `p_C` vanishes
    /// (the smallest `|λ_j|` when none is below the per-eigenvalue tolerance).
    Singular {
        norm: Complex64,
        witness: SingularWitness,
    },
}

impl Invertibility {
    pub fn is_invertible(&self) -> bool {
        matches!(self, Self::Invertible { .. })
    }
}

/// `|q_n| <= 1e-9 (1 + ‖C‖∞)^n` declares a circulant singular.
pub fn singularity_threshold(c: &Circulant) -> f64 {
    1e-9 * (1.0 + c.inf_norm()).powi(c.n() as i32)
}

pub fn is_invertible(c: &Circulant) -> Invertibility {
    let spectrum = eigenvalues(c);
    let norm = forms_of_spectrum(&spectrum).norm();
    classify(c, &spectrum, norm)
}

fn classify(c: &Circulant, spectrum: &Spectrum, norm: Complex64) -> Invertibility {
    if norm.norm() > singularity_threshold(c) {
        return Invertibility::Invertible { norm };
    }
    let eig_tol = 1e-9 * (1.0 + c.inf_norm());
    let values = spectrum.values();
    let j = values.iter().position(|l| l.norm() <= eig_tol).unwrap_or_else(|| {
        values
            .iter()
            .enumerate()
            .min_by(|a, b| a.1.norm().total_cmp(&b.1.norm()))
            .map(|(i, _)| i)
            .unwrap()
    }) + 1;
    let ctx = FourierContext::new(c.n()).expect("order is nonzero");
    Invertibility::Singular {
        norm,
        witness: SingularWitness {
            j,
            root: ctx.power(j - 1),
            magnitude: values[j - 1].norm(),
        },
    }
}

/// `x^{-1} = x̄ / q_n(x)`.
pub fn inverse(c: &Circulant) -> Result<Circulant> {
    let spectrum = eigenvalues(c);
    let f = forms_of_spectrum(&spectrum);
    match classify(c, &spectrum, f.norm()) {
        Invertibility::Singular { witness, .. } => Err(Error::Singular { witness: Some(witness) }),
        Invertibility::Invertible { norm } => Ok(conjugate_with_forms(c, &f).scale(norm.inv())),
    }
}
