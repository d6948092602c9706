//! Characteristic forms, the conjugate, and inversion.
//!
//! Run with `cargo run --example characteristic_forms`.

use circulant::circulant::Circulant;
use circulant::error::Error;
use circulant::forms;
use num_complex::Complex64;

fn main() -> Result<(), Error> {
    let c = Circulant::from_real(&[3.0, 1.0, 0.0, 1.0])?;
    let f = forms::forms(&c);
    println!("forms q_1..q_n: {}", show(f.values()));
    println!("trace q_1 = {}, norm q_n = {}", f.trace(), f.norm());
    println!("characteristic polynomial: {}", show(&forms::char_poly(&c)));

    // The conjugate x̄ satisfies C x̄ = q_n I, so the inverse is x̄ / q_n.
    let bar = forms::conjugate(&c);
    println!("conjugate: {}", show(bar.coeffs()));
    let inv = forms::inverse(&c)?;
    let residual = c.mul_naive(&inv)?.max_abs_diff(&Circulant::identity(4)?);
    println!("inverse: {} (residual {residual:.1e})", show(inv.coeffs()));

    // circ(1, 1, 0, 0) vanishes at the root of unity -1.
    let singular = Circulant::from_real(&[1.0, 1.0, 0.0, 0.0])?;
    match forms::inverse(&singular) {
        Err(Error::Singular { witness: Some(w) }) => {
            println!(
                "circ(1, 1, 0, 0) is singular: p_C({}) = 0 at j = {}",
                show(&[w.root]).trim_matches(['[', ']']),
                w.j
            )
        }
        other => println!("unexpected: {other:?}"),
    }
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
