//! Compare naive, spectral and dense circulant multiplication.
//!
//! Run with `cargo run --release --example benchmark`.

use circulant::bench::{self, BenchConfig};

fn main() {
    let config = BenchConfig {
        sizes: vec![64, 256, 1024],
        ..BenchConfig::default()
    };
    match bench::run(&config) {
        Ok(results) => {
            for r in results {
                println!("n = {:5}  {:8}  median {:>12} ns", r.n, r.method.name(), r.median_ns);
            }
        }
        Err(e) => eprintln!("benchmark refused: {e}"),
    }
}
