//! Invariant suites for every module on seeded random inputs (`verify-all`).
//!
//! Each suite reports the largest normalized residual it saw and passes when
//! that stays within its tolerance. Exact suites have tolerance zero and
//! record `0` or `1` per case.

use num_bigint::BigInt;
use num_complex::Complex64;
use rand::Rng;

use crate::circulant::Circulant;
use crate::dense::DenseMatrix;
use crate::document::MatrixDocument;
use crate::lattice::{self, Mode, Rational, RationalCirculant};
use crate::sample::{self, SampleRng};
use crate::spectral::{eigenvalues, fast_mul, from_spectrum, FourierContext};
use crate::twisted::{self, MuCirculant, MuWeights, SkewRoot};
use crate::{forms, hopf, oracle};

#[derive(Debug, Clone, PartialEq)]
pub struct SuiteReport {
    pub module: &'static str,
    pub suite: &'static str,
    pub cases: usize,
    pub max_residual: f64,
    pub tolerance: f64,
    pub pass: bool,
}

impl SuiteReport {
    pub fn line(&self) -> String {
        format!(
            "{} {}/{}: {} cases, max residual {:.3e} (tolerance {:.1e})",
            if self.pass { "PASS" } else { "FAIL" },
            self.module,
            self.suite,
            self.cases,
            self.max_residual,
            self.tolerance
        )
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct VerifyConfig {
    pub seed: u64,
    /// Replaces the tolerance of every non-exact suite.
    pub tol: Option<f64>,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        Self {
            seed: sample::DEFAULT_SEED,
            tol: None,
        }
    }
}

struct Suite {
    module: &'static str,
    suite: &'static str,
    cases: usize,
    worst: f64,
    tol: f64,
}

impl Suite {
    fn new(module: &'static str, suite: &'static str, tol: f64, config: &VerifyConfig) -> Self {
        let tol = match config.tol {
            Some(t) if tol > 0.0 => t,
            _ => tol,
        };
        Self {
            module,
            suite,
            cases: 0,
            worst: 0.0,
            tol,
        }
    }

    fn exact(module: &'static str, suite: &'static str) -> Self {
        Self {
            module,
            suite,
            cases: 0,
            worst: 0.0,
            tol: 0.0,
        }
    }

    fn check(&mut self, residual: f64) {
        self.cases += 1;
        // NaN counts as a failure
        self.worst = if residual.is_nan() {
            f64::INFINITY
        } else {
            self.worst.max(residual)
        };
    }

    fn holds(&mut self, ok: bool) {
        self.check(if ok { 0.0 } else { 1.0 });
    }

    fn finish(self) -> SuiteReport {
        SuiteReport {
            module: self.module,
            suite: self.suite,
            cases: self.cases,
            max_residual: self.worst,
            tolerance: self.tol,
            pass: self.worst <= self.tol,
        }
    }
}

fn relative(a: Complex64, b: Complex64) -> f64 {
    (a - b).norm() / 1f64.max(a.norm()).max(b.norm())
}

/// Runs every suite; `verify-all` succeeds iff all reports pass.
pub fn run_all(config: &VerifyConfig) -> Vec<SuiteReport> {
    let mut rng = sample::rng(config.seed);
    let mut out = Vec::new();
    out.extend(core_circulant(&mut rng, config));
    out.extend(spectral(&mut rng, config));
    out.extend(forms_suites(&mut rng, config));
    out.extend(hopf_suites(&mut rng, config));
    out.extend(twisted_suites(&mut rng, config));
    out.extend(lattice_suites(&mut rng));
    out.extend(oracle_suites(&mut rng, config));
    out.extend(document_suites(&mut rng));
    out
}

fn core_circulant(rng: &mut SampleRng, config: &VerifyConfig) -> Vec<SuiteReport> {
    const M: &str = "core_circulant";
    let mut iso = Suite::new(M, "dense isomorphism", 1e-12, config);
    let mut comm = Suite::exact(M, "commutativity");
    let mut transpose = Suite::exact(M, "transpose");
    let mut expansion = Suite::exact(M, "P-power expansion");
    for n in [1, 2, 3, 4, 5, 8, 16, 32, 64] {
        for _ in 0..10 {
            let x = sample::complex_circulant(rng, n);
            let y = sample::complex_circulant(rng, n);
            let xy = x.mul_naive(&y).expect("same order");
            let dense = oracle::dense_mul(&x.to_dense(), &y.to_dense()).expect("same order");
            iso.check(xy.to_dense().max_abs_diff(&dense));
            comm.holds(xy == y.mul_naive(&x).expect("same order"));
            transpose.holds(x.transpose().to_dense() == x.to_dense().transpose());
            let mut acc = Circulant::zero(n).expect("n >= 1");
            for (k, &c) in x.coeffs().iter().enumerate() {
                let term = Circulant::fundamental_power(n, k).expect("n >= 1").scale(c);
                acc = acc.add(&term).expect("same order");
            }
            expansion.holds(acc == x);
        }
    }
    vec![iso.finish(), comm.finish(), transpose.finish(), expansion.finish()]
}

fn spectral(rng: &mut SampleRng, config: &VerifyConfig) -> Vec<SuiteReport> {
    const M: &str = "spectral";
    let mut round_trip = Suite::new(M, "spectrum round trip", 1e-9, config);
    let mut linearity = Suite::new(M, "spectrum linearity", 1e-12, config);
    let mut product = Suite::new(M, "spectrum of products", 1e-9, config);
    let mut fast = Suite::new(M, "fast_mul = mul_naive", 1e-9, config);
    let mut residual = Suite::new(M, "eigen residual", 1e-9, config);
    for n in 1..=64 {
        let x = sample::complex_circulant(rng, n);
        let y = sample::complex_circulant(rng, n);
        let (ex, ey) = (eigenvalues(&x), eigenvalues(&y));
        round_trip.check(from_spectrum(&ex).max_abs_diff(&x));
        linearity.check(
            eigenvalues(&x.add(&y).expect("same order")).max_abs_diff(&ex.pointwise_add(&ey).expect("same order")),
        );
        let scale = 1.0 + x.inf_norm() * y.inf_norm();
        let fm = fast_mul(&x, &y).expect("same order");
        product.check(eigenvalues(&fm).max_abs_diff(&ex.pointwise_mul(&ey).expect("same order")) / scale);
        if [2, 3, 4, 5, 8, 12, 16, 31, 32, 64].contains(&n) {
            for _ in 0..20 {
                let a = sample::complex_circulant(rng, n);
                let b = sample::complex_circulant(rng, n);
                let s = 1.0 + a.inf_norm() * b.inf_norm();
                fast.check(
                    fast_mul(&a, &b)
                        .expect("same order")
                        .max_abs_diff(&a.mul_naive(&b).expect("same order"))
                        / s,
                );
            }
        }
        let ctx = FourierContext::new(n).expect("n >= 1");
        let dense = x.to_dense();
        for j in 1..=n {
            let v = ctx.eigenvector(j).expect("in range");
            residual.check(oracle::eigen_residual(&dense, ex.lambda(j), &v).expect("nonzero vector"));
        }
    }
    vec![
        round_trip.finish(),
        linearity.finish(),
        product.finish(),
        fast.finish(),
        residual.finish(),
    ]
}

fn forms_suites(rng: &mut SampleRng, config: &VerifyConfig) -> Vec<SuiteReport> {
    const M: &str = "forms";
    let mut cayley = Suite::new(M, "Cayley-Hamilton", 1e-8, config);
    let mut conj = Suite::new(M, "q1(conjugate) = q_{n-1}", 1e-9, config);
    let mut q2 = Suite::new(M, "q2 sum identity", 1e-9, config);
    let mut closed = Suite::new(M, "n=3,4 closed forms", 1e-10, config);
    let mut fl = Suite::new(M, "forms = Faddeev-LeVerrier", 1e-8, config);
    let mut inverse = Suite::new(M, "inverse", 1e-9, config);
    for n in 1..=12 {
        for _ in 0..10 {
            let x = sample::real_circulant(rng, n);
            let y = sample::real_circulant(rng, n);
            let scale = 1.0 + x.inf_norm();
            let fx = forms::forms(&x);
            if n <= 10 {
                cayley.check(forms::char_poly_at_self(&x).inf_norm() / scale.powi(n as i32));
            }
            if (2..=10).contains(&n) {
                conj.check(relative(forms::forms(&forms::conjugate(&x)).q(1), fx.q(n - 1)));
                let fy = forms::forms(&y);
                let sum = forms::forms(&x.add(&y).expect("same order")).q(2);
                let xy = forms::forms(&x.mul_naive(&y).expect("same order")).q(1);
                q2.check(relative(sum, fx.q(2) + fy.q(2) + fx.q(1) * fy.q(1) - xy));
            }
            let reference = oracle::faddeev_leverrier(&x.to_dense());
            for (i, (a, b)) in fx.char_poly().iter().zip(&reference).enumerate() {
                fl.check((a - b).norm() / scale.powi(i as i32));
            }
            if n <= 16 {
                let c = sample::invertible_circulant(rng, n);
                let inv = forms::inverse(&c).expect("sampled invertible");
                let id = Circulant::identity(n).expect("n >= 1");
                inverse.check(
                    c.mul_naive(&inv).expect("same order").max_abs_diff(&id) / (1.0 + c.inf_norm() * inv.inf_norm()),
                );
            }
        }
    }
    for n in [3, 4] {
        for _ in 0..100 {
            let x = sample::complex_circulant(rng, n);
            let expected = oracle::closed_form_forms(x.coeffs()).expect("n is 3 or 4");
            let got = forms::forms(&x);
            for (a, b) in got.values().iter().zip(&expected) {
                closed.check((a - b).norm());
            }
        }
    }
    vec![
        cayley.finish(),
        conj.finish(),
        q2.finish(),
        closed.finish(),
        fl.finish(),
        inverse.finish(),
    ]
}

fn hopf_suites(rng: &mut SampleRng, config: &VerifyConfig) -> Vec<SuiteReport> {
    const M: &str = "hopf";
    let mut algebra = Suite::new(M, "Δ algebra map", 1e-9, config);
    let mut coassoc = Suite::exact(M, "coassociativity");
    let mut spectrum = Suite::new(M, "Δ spectrum multiplicity n", 1e-9, config);
    let mut counit = Suite::new(M, "counit axiom", 1e-10, config);
    let mut antipode = Suite::new(M, "antipode axiom", 1e-10, config);
    let mut transpose = Suite::exact(M, "antipode = transpose, involution");
    let mut factor = Suite::exact(M, "factorize/reconstruct");
    for n in 1..=16 {
        for _ in 0..10 {
            let x = sample::complex_circulant(rng, n);
            let scale = 1.0 + x.inf_norm();
            counit.check(hopf::verify_counit_axiom(&x).max_residual / scale);
            antipode.check(hopf::verify_antipode_axiom(&x).max_residual / scale);
            let s = hopf::antipode(&x);
            transpose.holds(s == x.transpose() && hopf::antipode(&s) == x);
            coassoc.holds(hopf::verify_coassociativity(&x).holds);
            if n > 6 {
                continue;
            }
            let y = sample::complex_circulant(rng, n);
            let lhs = hopf::comultiplication(&x.mul_naive(&y).expect("same order")).expand();
            let (dx, dy) = (hopf::comultiplication(&x), hopf::comultiplication(&y));
            let blockwise = dx.mul(&dy).expect("same order").expand();
            let dense = oracle::dense_mul(&dx.expand(), &dy.expand()).expect("same order");
            let s = 1.0 + x.inf_norm() * y.inf_norm();
            algebra.check(lhs.max_abs_diff(&blockwise).max(lhs.max_abs_diff(&dense)) / s);

            let expected: Vec<Complex64> = (0..n).flat_map(|_| eigenvalues(&x).values().to_vec()).collect();
            let pairs = hopf::delta_eigenpairs_expanded(&x).expect("n <= 6");
            let quotients: Vec<Complex64> = pairs.iter().map(|p| p.0).collect();
            let tol = 1e-6 * scale;
            let worst_pair = hopf::match_multisets(&expected, &quotients, tol).map_or(f64::INFINITY, |d| d / scale);
            let worst_vec = pairs.iter().map(|p| p.1).fold(0.0, f64::max);
            let structural =
                hopf::match_multisets(&expected, &hopf::delta_spectrum(&x), tol).map_or(f64::INFINITY, |d| d / scale);
            spectrum.check(worst_pair.max(worst_vec).max(structural));
        }
        let a = DenseMatrix::from_fn(n, |_, _| sample::unit_complex(rng));
        let grid = hopf::factorize_dense(&a);
        let back = hopf::reconstruct_dense(&grid).expect("n >= 1");
        factor.holds(back == a && hopf::factorize_dense(&back) == grid);
    }
    vec![
        algebra.finish(),
        coassoc.finish(),
        spectrum.finish(),
        counit.finish(),
        antipode.finish(),
        transpose.finish(),
        factor.finish(),
    ]
}

fn twisted_suites(rng: &mut SampleRng, config: &VerifyConfig) -> Vec<SuiteReport> {
    const M: &str = "twisted";
    let mut cocycle = Suite::new(M, "coboundary cocycle", 1e-10, config);
    let mut transport = Suite::new(M, "Ψ transport", 1e-9, config);
    let mut eigen = Suite::new(M, "eigen transport", 1e-9, config);
    let mut skew = Suite::new(M, "skew sign flip", 1e-12, config);
    let mut skew_eigen = Suite::new(M, "skew eigenvalues", 1e-9, config);
    let mut sigma = Suite::new(M, "σ^2 = ω, σ^n = -1", 1e-12, config);
    for n in 1..=16 {
        for _ in 0..7 {
            let weights = MuWeights::from_tail(&sample::weight_tail(rng, n)).expect("nonzero weights");
            let report = twisted::verify_cocycle(&twisted::cocycle_from_mu(&weights)).expect("nonzero table");
            cocycle.check(report.max_residual);

            let x = MuCirculant::new(sample::complex_circulant(rng, n).into_coeffs(), weights.clone()).expect("n");
            let y = MuCirculant::new(sample::complex_circulant(rng, n).into_coeffs(), weights).expect("n");
            let (dx, dy) = (twisted::mu_to_dense(&x), twisted::mu_to_dense(&y));
            let prod = twisted::mu_to_dense(&twisted::mu_mul(&x, &y).expect("same weights"));
            let dense = oracle::dense_mul(&dx, &dy).expect("same order");
            transport.check(prod.max_abs_diff(&dense) / (1.0 + dx.inf_norm() * dy.inf_norm()));

            let me = twisted::mu_eigen(&x);
            for (j, v) in me.vectors.iter().enumerate() {
                eigen.check(oracle::eigen_residual(&dx, me.spectrum.lambda(j + 1), v).expect("nonzero vector"));
            }
        }
    }
    for n in 1..=64 {
        let root = SkewRoot::new(n).expect("n >= 1");
        let ctx = FourierContext::new(n).expect("n >= 1");
        let s = root.sigma();
        let sn = (0..n).fold(Complex64::new(1.0, 0.0), |acc, _| acc * s);
        sigma.check((s * s - ctx.omega()).norm().max((sn + 1.0).norm()));
        if n > 32 {
            continue;
        }
        let c = sample::complex_circulant(rng, n);
        let m = twisted::skew_circ(c.coeffs().to_vec()).expect("n >= 1");
        let plain = c.to_dense();
        let flipped = DenseMatrix::from_fn(n, |i, j| if j < i { -plain[(i, j)] } else { plain[(i, j)] });
        skew.check(twisted::mu_to_dense(&m).max_abs_diff(&flipped));
        let spectrum = twisted::mu_eigen(&m).spectrum;
        for j in 1..=n {
            let y = ctx.power(j - 1);
            let p: Complex64 = c
                .coeffs()
                .iter()
                .enumerate()
                .map(|(k, ck)| ck * root.power(k) * y.powu(k as u32))
                .sum();
            skew_eigen.check((spectrum.lambda(j) - p).norm() / (1.0 + c.inf_norm()));
        }
    }
    vec![
        cocycle.finish(),
        transport.finish(),
        eigen.finish(),
        skew.finish(),
        skew_eigen.finish(),
        sigma.finish(),
    ]
}

/// Symmetric integer circulant (`c_k = c_{n-k+2}`) of order 1, 2, 3, 4 or 6;
/// these have integer spectra because `2 cos(2πk/n)` is an integer there.
pub fn integer_spectrum_circulant(rng: &mut SampleRng) -> RationalCirculant {
    let n = [1, 2, 3, 4, 6][rng.gen_range(0..5)];
    let mut c = vec![0i64; n];
    for k in 0..n {
        let mirror = (n - k) % n;
        if mirror < k {
            c[k] = c[mirror];
        } else {
            c[k] = rng.gen_range(-5..=5);
        }
    }
    RationalCirculant::from_integers(&c).expect("n >= 1")
}

fn lattice_suites(rng: &mut SampleRng) -> Vec<SuiteReport> {
    const M: &str = "integral_lattice";
    let mut brandt = Suite::exact(M, "integer spectrum ⇒ reconstruction, Brandt");
    let mut closure = Suite::exact(M, "integer spectra closed under + and ×");
    let mut delta = Suite::exact(M, "Δ spectrum integral");
    let mut recombine = Suite::exact(M, "decompose/recombine");
    let mut paper = Suite::exact(M, "integral targets in the example lattice");
    for _ in 0..40 {
        let a = integer_spectrum_circulant(rng);
        let spectrum = lattice::integer_spectrum(&a).ok().flatten();
        let ok = spectrum.as_ref().is_some_and(|s| {
            let r = lattice::reconstruct_from_spectrum(s);
            let c = a.to_complex();
            r.real
                && r.circulant.max_abs_diff(&c) <= 1e-9 * (1.0 + c.inf_norm())
                && lattice::brandt_check(std::slice::from_ref(&a), Mode::Integral).is_ok_and(|v| v.holds)
        });
        brandt.holds(ok);

        let c = a.to_complex();
        let tol = 1e-9 * (1.0 + c.inf_norm());
        delta.holds(
            hopf::delta_spectrum(&c)
                .iter()
                .all(|z| (z - Complex64::new(z.re.round(), 0.0)).norm() <= tol),
        );

        // a partner of the same order
        let b = loop {
            let b = integer_spectrum_circulant(rng);
            if b.n() == a.n() {
                break b;
            }
        };
        let (sa, sb) = (spectrum, lattice::integer_spectrum(&b).ok().flatten());
        let sum = lattice::integer_spectrum(&a.add(&b).expect("same order"))
            .ok()
            .flatten();
        let prod = lattice::integer_spectrum(&a.mul(&b).expect("same order"))
            .ok()
            .flatten();
        closure.holds(match (sa, sb, sum, prod) {
            (Some(sa), Some(sb), Some(sum), Some(prod)) => (0..a.n()).all(|j| {
                sum.values()[j] == &sa.values()[j] + &sb.values()[j]
                    && prod.values()[j] == &sa.values()[j] * &sb.values()[j]
            }),
            _ => false,
        });
    }
    for _ in 0..40 {
        let n = rng.gen_range(1..=5);
        let rows: Vec<Vec<Rational>> = (0..n)
            .map(|_| {
                sample::integers(rng, n, 3)
                    .into_iter()
                    .map(|v| Rational::from_integer(v.into()))
                    .collect()
            })
            .collect();
        let Ok(basis) = lattice::lattice_new(rows) else {
            continue;
        };
        let target = RationalCirculant::new(
            (0..n)
                .map(|_| Rational::new(rng.gen_range(-9..=9).into(), rng.gen_range(1..=4).into()))
                .collect(),
        )
        .expect("n >= 1");
        let d = lattice::lattice_decompose(&basis, &target).expect("same order");
        recombine.holds(lattice::recombine(&basis, &d.coeffs) == target);
    }
    let q = |p: i64, d: i64| Rational::new(p.into(), d.into());
    let example = lattice::lattice_new(vec![
        vec![q(0, 1), q(-1, 1), q(1, 1)],
        vec![q(-1, 3), q(1, 3), q(1, 3)],
        vec![q(1, 3), q(2, 3), q(-1, 3)],
    ])
    .expect("independent basis");
    for _ in 0..100 {
        let t = RationalCirculant::from_integers(&sample::integers(rng, 3, 50)).expect("n = 3");
        let d = lattice::lattice_decompose(&example, &t).expect("same order");
        paper
            .holds(d.member && d.coeffs.iter().all(|c| c.is_integer()) && lattice::recombine(&example, &d.coeffs) == t);
    }
    vec![
        brandt.finish(),
        closure.finish(),
        delta.finish(),
        recombine.finish(),
        paper.finish(),
    ]
}

fn oracle_suites(rng: &mut SampleRng, config: &VerifyConfig) -> Vec<SuiteReport> {
    const M: &str = "oracle";
    let mut fl = Suite::new(M, "exact = floating Faddeev-LeVerrier", 1e-8, config);
    let mut inverse = Suite::exact(M, "exact inverse");
    for n in 1..=10 {
        for _ in 0..3 {
            let c = RationalCirculant::from_integers(&sample::integers(rng, n, 5)).expect("n >= 1");
            let exact = lattice::exact_char_poly(&c);
            let float = oracle::faddeev_leverrier(&c.to_complex().to_dense());
            for (e, f) in exact.iter().zip(&float) {
                fl.check(relative(*f, lattice::rational_to_f64(e).into()));
            }
        }
    }
    for n in 1..=6 {
        for _ in 0..5 {
            let a: Vec<Vec<Rational>> = (0..n)
                .map(|_| {
                    sample::integers(rng, n, 4)
                        .into_iter()
                        .map(|v| Rational::from_integer(BigInt::from(v)))
                        .collect()
                })
                .collect();
            if let Ok(inv) = oracle::exact_inverse(&a) {
                inverse.holds(oracle::rational_mul(&inv, &a) == oracle::rational_identity(n));
            }
        }
    }
    vec![fl.finish(), inverse.finish()]
}

fn document_suites(rng: &mut SampleRng) -> Vec<SuiteReport> {
    let mut round_trip = Suite::exact("cli", "document round trip");
    for n in 1..=6 {
        let row = |rng: &mut SampleRng| {
            (0..n)
                .map(|_| sample::unit_complex(rng) * 10f64.powi(rng.gen_range(-20..20)))
                .collect::<Vec<_>>()
        };
        let rationals = |rng: &mut SampleRng| {
            (0..n)
                .map(|_| Rational::new(rng.gen_range(-1000..=1000).into(), rng.gen_range(1..=97).into()))
                .collect::<Vec<_>>()
        };
        let docs = [
            MatrixDocument::Circulant { first_row: row(rng) },
            MatrixDocument::MuCirculant {
                first_row: row(rng),
                mu: sample::weight_tail(rng, n),
            },
            MatrixDocument::SkewCirculant { first_row: row(rng) },
            MatrixDocument::Dense {
                entries: (0..n).map(|_| row(rng)).collect(),
            },
            MatrixDocument::RationalCirculant {
                first_row: rationals(rng),
            },
            MatrixDocument::RationalSpectrum { values: rationals(rng) },
            MatrixDocument::Cocycle {
                table: (0..n).map(|_| row(rng)).collect(),
            },
        ];
        for doc in docs {
            round_trip.holds(MatrixDocument::parse(&doc.print()).as_ref() == Ok(&doc));
        }
    }
    vec![round_trip.finish()]
}
