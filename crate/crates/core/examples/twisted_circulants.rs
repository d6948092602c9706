//! μ-circulants, skew circulants and two-cocycles.
//!
//! Run with `cargo run --example twisted_circulants`.

use circulant::twisted::{self, MuCirculant, MuWeights};
use num_complex::Complex64;

fn main() -> Result<(), circulant::error::Error> {
    let re = |x: f64| Complex64::new(x, 0.0);
    let weights = MuWeights::from_tail(&[re(2.0), Complex64::new(0.0, 1.0)])?;

    // The coboundary of the weights is a two-cocycle.
    let cocycle = twisted::cocycle_from_mu(&weights);
    let report = twisted::verify_cocycle(&cocycle)?;
    println!(
        "cocycle identity: holds = {}, residual {:.1e}",
        report.holds, report.max_residual
    );

    // μ-circulants are diagonalized in closed form.
    let m = MuCirculant::new(vec![re(1.0), re(2.0), re(-1.0)], weights)?;
    let eigen = twisted::mu_eigen(&m);
    println!("μ-eigenvalues: {}", show(eigen.spectrum.values()));
    println!("psi(m) as an ordinary circulant: {}", show(twisted::psi(&m).coeffs()));

    // Skew circulants flip the sign below the diagonal.
    let skew = twisted::skew_circ(vec![re(1.0), re(2.0), re(3.0)])?;
    for row in twisted::mu_to_dense(&skew).rows() {
        println!("  {}", show(row));
    }
    println!("skew eigenvalues: {}", show(twisted::mu_eigen(&skew).spectrum.values()));
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
