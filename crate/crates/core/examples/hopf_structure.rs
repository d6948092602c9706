//! Counit, comultiplication and antipode of the circulant Hopf algebra,
//! plus the diagonal-times-circulant factorization of a dense matrix.
//!
//! Run with `cargo run --example hopf_structure`.

use circulant::circulant::Circulant;
use circulant::dense::DenseMatrix;
use circulant::hopf;
use num_complex::Complex64;

fn main() -> Result<(), circulant::error::Error> {
    let c = Circulant::from_real(&[1.0, 2.0, 3.0])?;
    println!("counit ε(C) = {}", hopf::counit(&c));
    println!("antipode S(C) = {}", show(hopf::antipode(&c).coeffs()));

    let delta = hopf::comultiplication(&c);
    println!(
        "Δ(C) is a {0}×{0} block circulant of order-{1} blocks",
        delta.n(),
        delta.block_order()
    );
    println!("spectrum of Δ(C): {}", show(&hopf::delta_spectrum(&c)));

    for report in [
        hopf::verify_counit_axiom(&c),
        hopf::verify_antipode_axiom(&c),
        hopf::verify_coassociativity(&c),
    ] {
        println!(
            "{}: holds = {}, residual {:.1e}",
            report.axiom, report.holds, report.max_residual
        );
    }

    // Every dense matrix is a sum of diagonal matrices times powers of the
    // fundamental circulant.
    let a = DenseMatrix::from_real_rows(&[&[1.0, 2.0], &[3.0, 4.0]])?;
    let grid = hopf::factorize_dense(&a);
    for (k, diagonal) in grid.coeffs.iter().enumerate() {
        println!("  diagonal factor of P^{k}: {}", show(diagonal));
    }
    println!("reconstruction exact: {}", hopf::reconstruct_dense(&grid)? == a);
    Ok(())
}

/// Formats complex values as `a+bi`, rounded to 12 decimals.
fn show(values: &[Complex64]) -> String {
    let chop = |x: f64| (x * 1e12).round() / 1e12 + 0.0;
    let parts: Vec<String> = values
        .iter()
        .map(|z| Complex64::new(chop(z.re), chop(z.im)).to_string())
        .collect();
    format!("[{}]", parts.join(", "))
}
