//! Exact rational work: integer spectra, the Brandt predicate, spectrum
//! reconstruction and lattice decomposition.
//!
//! Run with `cargo run --example brandt_lattice`.

use circulant::lattice::{self, IntegerSpectrum, Mode, Rational, RationalCirculant};

fn main() -> Result<(), circulant::error::Error> {
    let q = |p: i64, d: i64| Rational::new(p.into(), d.into());

    // Symmetric integer circulants of order 3 have integer spectra.
    let c = RationalCirculant::from_integers(&[4, 1, 1])?;
    let spectrum = lattice::integer_spectrum(&c)?.expect("integral spectrum");
    println!(
        "spectrum of circ(4, 1, 1): {:?}",
        spectrum
            .values()
            .iter()
            .map(lattice::format_rational)
            .collect::<Vec<_>>()
    );
    println!(
        "exact forms: {:?}",
        lattice::exact_forms(&c)
            .iter()
            .map(lattice::format_rational)
            .collect::<Vec<_>>()
    );

    // The Brandt predicate holds for integer circulants, fails over the
    // integers for 1/2 I, and holds again in rational mode.
    let half = RationalCirculant::new(vec![q(1, 2), q(0, 1), q(0, 1)])?;
    let pair = [c.clone(), half];
    println!(
        "Brandt (integral): {}",
        lattice::brandt_check(&pair, Mode::Integral)?.holds
    );
    println!(
        "Brandt (rational): {}",
        lattice::brandt_check(&pair, Mode::Rational)?.holds
    );

    // Reconstruct a circulant from a prescribed spectrum.
    let r = lattice::reconstruct_from_spectrum(&IntegerSpectrum::from_integers(&[6, 3, 3])?);
    println!(
        "circulant with spectrum (6, 3, 3): {:?} (real: {})",
        r.circulant
            .coeffs()
            .iter()
            .map(|z| format!("{:.6}", z.re))
            .collect::<Vec<_>>(),
        r.real
    );

    // Decompose the identity in a lattice with a non-integral basis.
    let basis = lattice::lattice_new(vec![
        vec![q(0, 1), q(-1, 1), q(1, 1)],
        vec![q(-1, 3), q(1, 3), q(1, 3)],
        vec![q(1, 3), q(2, 3), q(-1, 3)],
    ])?;
    let target = RationalCirculant::from_integers(&[1, 0, 0])?;
    let d = lattice::lattice_decompose(&basis, &target)?;
    println!(
        "identity = {:?} in the basis (member: {}, det {})",
        d.coeffs.iter().map(lattice::format_rational).collect::<Vec<_>>(),
        d.member,
        lattice::format_rational(basis.determinant()),
    );
    Ok(())
}
