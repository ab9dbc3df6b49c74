//! Text and JSON forms of scalars, polynomials and matrices, and the
//! diagnostics produced for malformed input.
//!
//! Run with `cargo run --example file_formats`.

use supertropical::{Matrix, Polynomial, Scalar};

fn main() -> supertropical::Result<()> {
    for s in ["3", "-1/2", "5g", "-inf", "7/3g"] {
        let x: Scalar = s.parse()?;
        println!(
            "{s:>6} -> {x:?} -> {x} -> {}",
            serde_json::to_string(&x).unwrap()
        );
    }

    let f: Polynomial = "x^3 + 2x + 1/2g".parse()?;
    let json = serde_json::to_string(&f).unwrap();
    println!("\n{f}\n{json}");
    assert_eq!(serde_json::from_str::<Polynomial>(&json).unwrap(), f);

    let a: Matrix = "0 1g\n-inf 3/2\n".parse()?;
    println!("\n{a}{}", a.to_json());
    assert_eq!(Matrix::parse_any(&a.to_json())?, a);
    assert_eq!(Matrix::parse_any(&a.to_string())?, a);

    println!();
    for bad in ["0 1\n2 y\n", "0 1\n2\n", "{\"n\": 2, \"rows\": [[\"0\"]]}"] {
        println!("{:?}: {}", bad, Matrix::parse_any(bad).unwrap_err());
    }
    println!("{}", "x^2 + + 1".parse::<Polynomial>().unwrap_err());
    Ok(())
}
