//! Run every module's invariant suite on seeded random inputs.
//!
//! Run with `cargo run --release --example verify_all`.

use circulant::sample::DEFAULT_SEED;
use circulant::verify::{self, VerifyConfig};

fn main() {
    let reports = verify::run_all(&VerifyConfig {
        seed: DEFAULT_SEED,
        tol: None,
    });
    for r in &reports {
        println!("{}", r.line());
    }
    let failed = reports.iter().filter(|r| !r.pass).count();
    println!("{} suites, {failed} failed", reports.len());
}
