use num_complex::Complex64;
use thiserror::Error;

/// Root of unity at which the representer polynomial of a singular
/// circulant vanishes (numerically).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SingularWitness {
    /// 1-based position `j`; the root is `ω^(j-1)`.
    pub j: usize,
    pub root: Complex64,
    /// `|p_C(ω^(j-1))|` as measured.
    pub magnitude: f64,
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("invalid order: {0} (order must be at least 1)")]
    InvalidOrder(usize),
    #[error("invalid scalar at position {index}: entries must be finite")]
    InvalidScalar { index: usize },
    #[error("dimension mismatch: expected {expected}, found {found}")]
    Dimension { expected: usize, found: usize },
    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },
    #[error("index {index} out of range 1..={n}")]
    Index { index: usize, n: usize },
    #[error("{}", singular_message(.witness))]
    Singular { witness: Option<SingularWitness> },
    #[error("invalid weights: mu_{index} must be nonzero and finite (mu_1 = 1)")]
    InvalidWeights { index: usize },
    #[error("invalid cocycle: entry F(e_{i}, e_{j}) is zero or not finite")]
    InvalidCocycle { i: usize, j: usize },
    #[error("incompatible algebras: operands carry different mu weights")]
    IncompatibleAlgebras,
    #[error("invalid vector: eigenvector candidate is zero")]
    InvalidVector,
    #[error("dependent basis: coefficient matrix has zero determinant")]
    DependentBasis,
    #[error("basis coefficient matrix does not have an integral inverse")]
    NotIntegralBasis,
    #[error("cannot assign exact root to eigenvalue position j={j}: {reason}")]
    Assignment { j: usize, reason: String },
}

fn singular_message(witness: &Option<SingularWitness>) -> String {
    match witness {
        Some(w) => format!(
            "singular matrix: p_C vanishes at root of unity y = {} (j = {}, |p_C(y)| = {:.3e})",
            format_root(w.root),
            w.j,
            w.magnitude
        ),
        None => "singular matrix".to_string(),
    }
}

fn format_root(z: Complex64) -> String {
    let clean = |x: f64| {
        let r = (x * 1e9).round() / 1e9;
        if r == 0.0 {
            0.0
        } else {
            r
        }
    };
    let (re, im) = (clean(z.re), clean(z.im));
    if im == 0.0 {
        format!("{re}")
    } else if re == 0.0 {
        format!("{im}i")
    } else if im < 0.0 {
        format!("{re}-{}i", -im)
    } else {
        format!("{re}+{im}i")
    }
}

pub type Result<T> = std::result::Result<T, Error>;
