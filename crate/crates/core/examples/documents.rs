//! Read and write the JSON matrix documents used by the `circ` binary.
//!
//! Run with `cargo run --example documents`.

use circulant::document::{self, MatrixDocument};
use num_complex::Complex64;

fn main() {
    let doc = MatrixDocument::Circulant {
        first_row: vec![Complex64::new(1.0, 0.0), Complex64::new(0.5, -2.0)],
    };
    let text = doc.print();
    println!("{text}");
    assert_eq!(MatrixDocument::parse(&text).unwrap(), doc);

    // Several documents may be given as an array or as a concatenated stream.
    let stream = r#"{"kind": "rational_circulant", "n": 2, "first_row": ["1/2", "3"]}
                    {"kind": "rational_spectrum", "n": 2, "values": ["1", "-1"]}"#;
    for d in document::parse_documents(stream).unwrap() {
        println!("{} of order {}", d.kind(), d.n());
    }

    // Errors name the offending field.
    let err = MatrixDocument::parse(r#"{"kind": "circulant", "n": 3, "first_row": [["1", "0"]]}"#).unwrap_err();
    println!("error: {err}");
}
