//! Diagonalize a circulant with the DFT and multiply two circulants in
//! the frequency domain.
//!
//! Run with `cargo run --example spectral_multiplication`.

use circulant::circulant::Circulant;
use circulant::spectral::{eigenvalues, fast_mul, from_spectrum};
use num_complex::Complex64;

fn main() -> Result<(), circulant::error::Error> {
    // circ(1, 1, 1) has spectrum (3, 0, 0).
    let ones = Circulant::from_real(&[1.0, 1.0, 1.0])?;
    println!("spectrum of circ(1, 1, 1): {}", show(eigenvalues(&ones).values()));

    let x = Circulant::from_real(&[1.0, 2.0, 0.0, -1.0, 0.5])?;
    let y = Circulant::from_real(&[0.0, 1.0, 3.0, 0.0, 2.0])?;

    // Products of circulants are circulants; the spectrum of the product is
    // the pointwise product of the spectra.
    let naive = x.mul_naive(&y)?;
    let fast = fast_mul(&x, &y)?;
    println!("x * y by convolution: {}", show(naive.coeffs()));
    println!("x * y through the DFT differs by {:.1e}", naive.max_abs_diff(&fast));

    let pointwise = eigenvalues(&x).pointwise_mul(&eigenvalues(&y))?;
    println!(
        "spectrum of x * y vs pointwise product: {:.1e}",
        eigenvalues(&naive).max_abs_diff(&pointwise)
    );

    // A circulant is recovered from its spectrum by the inverse DFT.
    println!(
        "round trip error: {:.1e}",
        from_spectrum(&eigenvalues(&x)).max_abs_diff(&x)
    );
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
