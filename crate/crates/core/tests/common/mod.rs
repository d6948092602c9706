//! Strategies and helpers shared by the integration tests.
#![allow(dead_code)]

use circulant::circulant::Circulant;
use circulant::document::MatrixDocument;
use circulant::lattice::{Rational, RationalCirculant};
use num_complex::Complex64;
use proptest::collection::vec;
use proptest::prelude::*;

pub fn unit() -> impl Strategy<Value = f64> {
    -1.0f64..=1.0
}

pub fn unit_complex() -> impl Strategy<Value = Complex64> {
    (unit(), unit()).prop_map(|(re, im)| Complex64::new(re, im))
}

/// Complex circulant of order exactly `n`, parts in `[-1, 1]`.
pub fn circulant_of(n: usize) -> impl Strategy<Value = Circulant> {
    vec(unit_complex(), n).prop_map(|c| Circulant::new(c).unwrap())
}

/// Complex circulant of order in `orders`.
pub fn circulant(orders: std::ops::RangeInclusive<usize>) -> impl Strategy<Value = Circulant> {
    orders.prop_flat_map(circulant_of)
}

/// Real circulant of order in `orders`.
pub fn real_circulant(orders: std::ops::RangeInclusive<usize>) -> impl Strategy<Value = Circulant> {
    orders.prop_flat_map(|n| vec(unit(), n).prop_map(|c| Circulant::from_real(&c).unwrap()))
}

/// Two circulants of the same order.
pub fn pair(orders: std::ops::RangeInclusive<usize>) -> impl Strategy<Value = (Circulant, Circulant)> {
    orders.prop_flat_map(|n| (circulant_of(n), circulant_of(n)))
}

/// Weights `μ_2..μ_n` with modulus in `[1/2, 2]`.
pub fn weight_tail(n: usize) -> impl Strategy<Value = Vec<Complex64>> {
    vec((unit(), -std::f64::consts::PI..std::f64::consts::PI), n - 1).prop_map(|v| {
        v.into_iter()
            .map(|(e, t)| Complex64::from_polar(2f64.powf(e), t))
            .collect()
    })
}

pub fn rational() -> impl Strategy<Value = Rational> {
    (-10_000i64..=10_000, 1i64..=500).prop_map(|(p, q)| Rational::new(p.into(), q.into()))
}

pub fn integer_circulant(n: usize, bound: i64) -> impl Strategy<Value = RationalCirculant> {
    vec(-bound..=bound, n).prop_map(|v| RationalCirculant::from_integers(&v).unwrap())
}

/// Symmetric integer circulant (`c_k = c_{n-k+2}`) of order `n`; for
/// `n ∈ {1, 2, 3, 4, 6}` its spectrum is integral.
pub fn symmetric_integer_circulant(n: usize, bound: i64) -> impl Strategy<Value = RationalCirculant> {
    vec(-bound..=bound, n).prop_map(move |mut c| {
        for k in 1..n {
            let mirror = n - k;
            if mirror < k {
                c[k] = c[mirror];
            }
        }
        RationalCirculant::from_integers(&c).unwrap()
    })
}

/// Finite doubles over a wide exponent range.
pub fn wide_real() -> impl Strategy<Value = f64> {
    prop_oneof![
        unit(),
        (unit(), -300i32..300).prop_map(|(m, e)| m * 10f64.powi(e)),
        Just(0.0),
        Just(-0.0)
    ]
}

pub fn wide_complex() -> impl Strategy<Value = Complex64> {
    (wide_real(), wide_real()).prop_map(|(re, im)| Complex64::new(re, im))
}

/// Any document kind.
pub fn document() -> impl Strategy<Value = MatrixDocument> {
    (1usize..=5).prop_flat_map(|n| {
        prop_oneof![
            vec(wide_complex(), n).prop_map(|first_row| MatrixDocument::Circulant { first_row }),
            (vec(wide_complex(), n), weight_tail(n))
                .prop_map(|(first_row, mu)| MatrixDocument::MuCirculant { first_row, mu }),
            vec(wide_complex(), n).prop_map(|first_row| MatrixDocument::SkewCirculant { first_row }),
            vec(vec(wide_complex(), n), n).prop_map(|entries| MatrixDocument::Dense { entries }),
            vec(rational(), n).prop_map(|first_row| MatrixDocument::RationalCirculant { first_row }),
            vec(rational(), n).prop_map(|values| MatrixDocument::RationalSpectrum { values }),
            vec(vec(wide_complex(), n), n).prop_map(|table| MatrixDocument::Cocycle { table }),
        ]
    })
}

pub fn relative(a: Complex64, b: Complex64) -> f64 {
    (a - b).norm() / 1f64.max(a.norm()).max(b.norm())
}
