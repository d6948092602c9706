//! Property tests for the invariants of every module.

mod common;

use circulant::circulant::Circulant;
use circulant::dense::DenseMatrix;
use circulant::document::MatrixDocument;
use circulant::lattice::{self, Mode, Rational, RationalCirculant};
use circulant::spectral::{eigenvalues, fast_mul, from_spectrum, FourierContext};
use circulant::twisted::{self, MuCirculant, MuWeights, SkewRoot};
use circulant::{forms, hopf, oracle};
use common::*;
use num_complex::Complex64;
use proptest::collection::vec;
use proptest::prelude::*;

fn scale2(x: &Circulant, y: &Circulant) -> f64 {
    1.0 + x.inf_norm() * y.inf_norm()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    // ---- core_circulant ----

    #[test]
    fn convolution_is_dense_product((x, y) in pair(1..=64)) {
        let dense = oracle::dense_mul(&x.to_dense(), &y.to_dense()).unwrap();
        prop_assert!(x.mul_naive(&y).unwrap().to_dense().max_abs_diff(&dense) <= 1e-12);
    }

    #[test]
    fn convolution_commutes_exactly((x, y) in pair(1..=32)) {
        prop_assert_eq!(x.mul_naive(&y).unwrap(), y.mul_naive(&x).unwrap());
    }

    #[test]
    fn transpose_commutes_with_expansion(x in circulant(1..=32)) {
        prop_assert!(x.transpose().to_dense() == x.to_dense().transpose());
    }

    #[test]
    fn sum_of_fundamental_powers(x in circulant(1..=32)) {
        let n = x.n();
        let mut acc = Circulant::zero(n).unwrap();
        for (k, &c) in x.coeffs().iter().enumerate() {
            acc = acc.add(&Circulant::fundamental_power(n, k).unwrap().scale(c)).unwrap();
        }
        prop_assert_eq!(acc, x);
    }

    #[test]
    fn first_row_verbatim(row in (1usize..=16).prop_flat_map(|n| vec(wide_complex(), n))) {
        let c = Circulant::new(row.clone()).unwrap();
        let dense = c.to_dense();
        prop_assert_eq!(dense.row(0), &row[..]);
    }

    // ---- spectral ----

    #[test]
    fn spectrum_round_trip(x in circulant(1..=64)) {
        prop_assert!(from_spectrum(&eigenvalues(&x)).max_abs_diff(&x) <= 1e-9);
    }

    #[test]
    fn spectrum_is_additive((x, y) in pair(1..=64)) {
        let lhs = eigenvalues(&x.add(&y).unwrap());
        let rhs = eigenvalues(&x).pointwise_add(&eigenvalues(&y)).unwrap();
        prop_assert!(lhs.max_abs_diff(&rhs) <= 1e-12);
    }

    #[test]
    fn spectrum_is_multiplicative((x, y) in pair(1..=64)) {
        let lhs = eigenvalues(&fast_mul(&x, &y).unwrap());
        let rhs = eigenvalues(&x).pointwise_mul(&eigenvalues(&y)).unwrap();
        prop_assert!(lhs.max_abs_diff(&rhs) <= 1e-9 * scale2(&x, &y));
    }

    #[test]
    fn fast_mul_matches_convolution(
        (x, y) in prop::sample::select(vec![2usize, 3, 4, 5, 8, 12, 16, 31, 32, 64])
            .prop_flat_map(|n| (circulant_of(n), circulant_of(n)))
    ) {
        let d = fast_mul(&x, &y).unwrap().max_abs_diff(&x.mul_naive(&y).unwrap());
        prop_assert!(d <= 1e-9 * scale2(&x, &y));
    }

    #[test]
    fn fourier_vectors_are_eigenvectors(x in circulant(1..=64)) {
        let n = x.n();
        let ctx = FourierContext::new(n).unwrap();
        let dense = x.to_dense();
        let spectrum = eigenvalues(&x);
        for j in 1..=n {
            let v = ctx.eigenvector(j).unwrap();
            let av = dense.mul_vec(&v);
            let r = av.iter().zip(&v).map(|(a, b)| (a - spectrum.lambda(j) * b).norm()).fold(0.0, f64::max);
            prop_assert!(r <= 1e-9 * (1.0 + x.inf_norm()));
        }
    }

    // ---- forms ----

    #[test]
    fn cayley_hamilton(x in real_circulant(1..=10)) {
        let n = x.n() as i32;
        prop_assert!(forms::char_poly_at_self(&x).inf_norm() <= 1e-8 * (1.0 + x.inf_norm()).powi(n));
    }

    #[test]
    fn conjugate_first_form(x in circulant(2..=10)) {
        let n = x.n();
        let lhs = forms::forms(&forms::conjugate(&x)).q(1);
        prop_assert!(relative(lhs, forms::forms(&x).q(n - 1)) <= 1e-9);
    }

    #[test]
    fn second_form_of_sums((x, y) in pair(2..=10)) {
        let (fx, fy) = (forms::forms(&x), forms::forms(&y));
        let lhs = forms::forms(&x.add(&y).unwrap()).q(2);
        let rhs = fx.q(2) + fy.q(2) + fx.q(1) * fy.q(1) - forms::forms(&x.mul_naive(&y).unwrap()).q(1);
        prop_assert!(relative(lhs, rhs) <= 1e-9);
    }

    #[test]
    fn closed_forms_for_small_orders(x in circulant(3..=4)) {
        let reference = oracle::closed_form_forms(x.coeffs()).unwrap();
        for (a, b) in forms::forms(&x).values().iter().zip(&reference) {
            prop_assert!((a - b).norm() <= 1e-10);
        }
    }

    #[test]
    fn forms_match_faddeev_leverrier(x in real_circulant(1..=12)) {
        let scale = 1.0 + x.inf_norm();
        let reference = oracle::faddeev_leverrier(&x.to_dense());
        for (i, (a, b)) in forms::char_poly(&x).iter().zip(&reference).enumerate() {
            prop_assert!((a - b).norm() <= 1e-8 * scale.powi(i as i32), "coefficient {i}: {a} vs {b}");
        }
    }

    #[test]
    fn real_input_gives_real_forms(x in real_circulant(1..=12)) {
        let scale = 1.0 + x.inf_norm();
        for (i, q) in forms::forms(&x).values().iter().enumerate() {
            prop_assert!(q.im.abs() <= 1e-9 * scale.powi(i as i32 + 1));
        }
    }

    #[test]
    fn inverse_is_inverse(x in circulant(1..=16), shift in 0.75f64..=1.0, negative in any::<bool>()) {
        let n = x.n();
        let mut c = x.into_coeffs();
        c[0] += if negative { -shift * n as f64 } else { shift * n as f64 };
        let c = Circulant::new(c).unwrap();
        prop_assume!(forms::is_invertible(&c).is_invertible());
        let inv = forms::inverse(&c).unwrap();
        let r = c.mul_naive(&inv).unwrap().max_abs_diff(&Circulant::identity(n).unwrap());
        prop_assert!(r <= 1e-9 * (1.0 + c.inf_norm() * inv.inf_norm()));
    }

    // ---- hopf ----

    #[test]
    fn delta_is_an_algebra_map((x, y) in pair(1..=6)) {
        let lhs = hopf::comultiplication(&x.mul_naive(&y).unwrap()).expand();
        let (dx, dy) = (hopf::comultiplication(&x), hopf::comultiplication(&y));
        let blockwise = dx.mul(&dy).unwrap().expand();
        let dense = oracle::dense_mul(&dx.expand(), &dy.expand()).unwrap();
        prop_assert!(lhs.max_abs_diff(&blockwise) <= 1e-9 * scale2(&x, &y));
        prop_assert!(lhs.max_abs_diff(&dense) <= 1e-9 * scale2(&x, &y));
    }

    #[test]
    fn coassociativity(x in circulant(1..=12)) {
        let report = hopf::verify_coassociativity(&x);
        prop_assert!(report.holds && report.max_residual == 0.0);
    }

    #[test]
    fn delta_spectrum_has_multiplicity_n(x in circulant(1..=8)) {
        let n = x.n();
        let expected: Vec<Complex64> = (0..n).flat_map(|_| eigenvalues(&x).values().to_vec()).collect();
        let tol = 1e-9 * (1.0 + x.inf_norm());
        prop_assert!(hopf::match_multisets(&expected, &hopf::delta_spectrum(&x), tol).is_some());
        let pairs = hopf::delta_eigenpairs_expanded(&x).unwrap();
        let quotients: Vec<Complex64> = pairs.iter().map(|p| p.0).collect();
        prop_assert!(hopf::match_multisets(&expected, &quotients, tol).is_some());
        prop_assert!(pairs.iter().all(|p| p.1 <= 1e-9));
    }

    #[test]
    fn hopf_axioms(x in circulant(1..=16)) {
        prop_assert!(hopf::verify_counit_axiom(&x).max_residual <= 1e-10);
        prop_assert!(hopf::verify_antipode_axiom(&x).max_residual <= 1e-10);
    }

    #[test]
    fn antipode_is_an_involution(x in circulant(1..=32)) {
        prop_assert_eq!(hopf::antipode(&hopf::antipode(&x)), x.clone());
        prop_assert_eq!(hopf::antipode(&x), x.transpose());
    }

    #[test]
    fn factor_grids_round_trip(grid in (1usize..=8).prop_flat_map(|n| vec(vec(wide_complex(), n), n))) {
        let g = hopf::FactorGrid { coeffs: grid };
        let back = hopf::factorize_dense(&hopf::reconstruct_dense(&g).unwrap());
        prop_assert_eq!(back, g);
    }

    #[test]
    fn dense_matrices_factor(entries in (1usize..=8).prop_flat_map(|n| vec(vec(wide_complex(), n), n))) {
        let a = DenseMatrix::from_rows(entries).unwrap();
        prop_assert!(hopf::reconstruct_dense(&hopf::factorize_dense(&a)).unwrap() == a);
    }

    // ---- twisted ----

    #[test]
    fn coboundaries_are_cocycles(tail in (1usize..=10).prop_flat_map(weight_tail)) {
        let w = MuWeights::from_tail(&tail).unwrap();
        let report = twisted::verify_cocycle(&twisted::cocycle_from_mu(&w)).unwrap();
        prop_assert!(report.holds && report.max_residual <= 1e-10, "{report:?}");
    }

    #[test]
    fn psi_transports_products(
        (x, y, tail) in (1usize..=16).prop_flat_map(|n| (circulant_of(n), circulant_of(n), weight_tail(n)))
    ) {
        let w = MuWeights::from_tail(&tail).unwrap();
        let x = MuCirculant::new(x.into_coeffs(), w.clone()).unwrap();
        let y = MuCirculant::new(y.into_coeffs(), w).unwrap();
        let (dx, dy) = (twisted::mu_to_dense(&x), twisted::mu_to_dense(&y));
        let lhs = twisted::mu_to_dense(&twisted::mu_mul(&x, &y).unwrap());
        let rhs = oracle::dense_mul(&dx, &dy).unwrap();
        prop_assert!(lhs.max_abs_diff(&rhs) <= 1e-9 * (1.0 + dx.inf_norm() * dy.inf_norm()));
    }

    #[test]
    fn mu_eigenpairs(
        (x, tail) in (1usize..=16).prop_flat_map(|n| (circulant_of(n), weight_tail(n)))
    ) {
        let m = MuCirculant::new(x.into_coeffs(), MuWeights::from_tail(&tail).unwrap()).unwrap();
        let dense = twisted::mu_to_dense(&m);
        let e = twisted::mu_eigen(&m);
        for (j, v) in e.vectors.iter().enumerate() {
            prop_assert!(oracle::eigen_residual(&dense, e.spectrum.lambda(j + 1), v).unwrap() <= 1e-9);
        }
    }

    #[test]
    fn skew_is_sign_flipped_circulant(x in circulant(1..=32)) {
        let n = x.n();
        let plain = x.to_dense();
        let expected = DenseMatrix::from_fn(n, |i, j| if j < i { -plain[(i, j)] } else { plain[(i, j)] });
        let m = twisted::skew_circ(x.coeffs().to_vec()).unwrap();
        prop_assert!(twisted::mu_to_dense(&m).max_abs_diff(&expected) <= 1e-12);
    }

    #[test]
    fn skew_root(n in 1usize..=64) {
        let root = SkewRoot::new(n).unwrap();
        let ctx = FourierContext::new(n).unwrap();
        let s = root.sigma();
        prop_assert!((s * s - ctx.omega()).norm() <= 1e-12);
        let sn = (0..n).fold(Complex64::new(1.0, 0.0), |acc, _| acc * s);
        prop_assert!((sn + 1.0).norm() <= 1e-12);
    }

    // ---- integral_lattice ----

    #[test]
    fn integer_spectra_reconstruct_and_are_brandt(
        c in prop::sample::select(vec![1usize, 2, 3, 4, 6]).prop_flat_map(|n| symmetric_integer_circulant(n, 20))
    ) {
        let s = lattice::integer_spectrum(&c).unwrap();
        prop_assert!(s.is_some());
        let r = lattice::reconstruct_from_spectrum(&s.unwrap());
        let expected = c.to_complex();
        prop_assert!(r.real);
        prop_assert!(r.circulant.max_abs_diff(&expected) <= 1e-9 * (1.0 + expected.inf_norm()));
        prop_assert!(lattice::brandt_check(&[c], Mode::Integral).unwrap().holds);
    }

    #[test]
    fn integer_spectra_are_closed(
        (a, b) in prop::sample::select(vec![1usize, 2, 3, 4, 6])
            .prop_flat_map(|n| (symmetric_integer_circulant(n, 9), symmetric_integer_circulant(n, 9)))
    ) {
        let (sa, sb) = (lattice::integer_spectrum(&a).unwrap().unwrap(), lattice::integer_spectrum(&b).unwrap().unwrap());
        let sum = lattice::integer_spectrum(&a.add(&b).unwrap()).unwrap().unwrap();
        let prod = lattice::integer_spectrum(&a.mul(&b).unwrap()).unwrap().unwrap();
        for j in 0..a.n() {
            prop_assert_eq!(&sum.values()[j], &(&sa.values()[j] + &sb.values()[j]));
            prop_assert_eq!(&prod.values()[j], &(&sa.values()[j] * &sb.values()[j]));
        }
    }

    #[test]
    fn delta_spectrum_of_integer_spectrum_is_integral(
        c in prop::sample::select(vec![1usize, 2, 3, 4, 6]).prop_flat_map(|n| symmetric_integer_circulant(n, 20))
    ) {
        let c = c.to_complex();
        let tol = 1e-9 * (1.0 + c.inf_norm());
        for z in hopf::delta_spectrum(&c) {
            prop_assert!((z - Complex64::new(z.re.round(), 0.0)).norm() <= tol, "{z}");
        }
    }

    #[test]
    fn exact_forms_are_integral_for_integer_circulants(c in (1usize..=6).prop_flat_map(|n| integer_circulant(n, 9))) {
        prop_assert!(lattice::brandt_check(&[c], Mode::Integral).unwrap().holds);
    }

    #[test]
    fn decomposition_recombines_exactly(
        (rows, target) in (1usize..=5).prop_flat_map(|n| (vec(vec(-4i64..=4, n), n), vec(rational(), n)))
    ) {
        let rows: Vec<Vec<Rational>> = rows
            .into_iter()
            .map(|r| r.into_iter().map(|v| Rational::from_integer(v.into())).collect())
            .collect();
        let Ok(basis) = lattice::lattice_new(rows) else { return Ok(()) };
        let target = RationalCirculant::new(target).unwrap();
        let d = lattice::lattice_decompose(&basis, &target).unwrap();
        prop_assert_eq!(lattice::recombine(&basis, &d.coeffs), target);
        prop_assert_eq!(d.member, d.coeffs.iter().all(|c| c.is_integer()));
    }

    #[test]
    fn example_lattice_contains_integral_targets(t in vec(-1_000_000i64..=1_000_000, 3)) {
        let q = |p: i64, d: i64| Rational::new(p.into(), d.into());
        let basis = lattice::lattice_new(vec![
            vec![q(0, 1), q(-1, 1), q(1, 1)],
            vec![q(-1, 3), q(1, 3), q(1, 3)],
            vec![q(1, 3), q(2, 3), q(-1, 3)],
        ])
        .unwrap();
        let target = RationalCirculant::from_integers(&t).unwrap();
        let d = lattice::lattice_decompose(&basis, &target).unwrap();
        prop_assert!(d.member);
        let a: Vec<num_bigint::BigInt> = t.iter().map(|&v| v.into()).collect();
        let m = lattice::delta_lattice_decompose(&basis, &a).unwrap();
        let as_rationals: Vec<Rational> = m.into_iter().map(Rational::from_integer).collect();
        prop_assert_eq!(as_rationals, d.coeffs);
    }

    // ---- oracle ----

    #[test]
    fn exact_and_floating_char_polys_agree(c in (1usize..=10).prop_flat_map(|n| integer_circulant(n, 5))) {
        let exact = lattice::exact_char_poly(&c);
        let float = oracle::faddeev_leverrier(&c.to_complex().to_dense());
        for (e, f) in exact.iter().zip(&float) {
            prop_assert!(relative(*f, lattice::rational_to_f64(e).into()) <= 1e-8);
        }
    }

    #[test]
    fn exact_inverse_is_exact(a in (1usize..=6).prop_flat_map(|n| vec(vec(rational(), n), n))) {
        if let Ok(inv) = oracle::exact_inverse(&a) {
            let n = a.len();
            prop_assert_eq!(oracle::rational_mul(&inv, &a), oracle::rational_identity(n));
            prop_assert_eq!(oracle::rational_mul(&a, &inv), oracle::rational_identity(n));
        }
    }

    // ---- cli documents ----

    #[test]
    fn documents_round_trip(doc in document()) {
        prop_assert_eq!(MatrixDocument::parse(&doc.print()).unwrap(), doc);
    }
}
