//! Essential parts, corner roots and ghost root regions of polynomials.
//!
//! Run with `cargo run --example polynomial_roots`.

use supertropical::{Polynomial, Scalar};

fn main() -> supertropical::Result<()> {
    for text in [
        "x^2 + 2x + 2",
        "x^2 + 4x + 5g",
        "x^3 + 1x^2 + 3x + 3",
        "x^4 + 0x^3 + 10",
        "x^2 + 1gx + 0",
        "3g",
    ] {
        let f: Polynomial = text.parse()?;
        println!("f = {f}");
        println!("  essential: {}", f.essential()?);
        println!("  {}", f.roots().to_string().replace('\n', "\n  "));
        if let Ok(r) = f.primary_root() {
            println!("  primary with root {r}");
        }
    }

    // multiplicities are read off a factorization
    let g =
        Polynomial::linear(Scalar::tangible(1)).pow(2) * Polynomial::linear(Scalar::tangible(-2));
    println!("\n(x + 1)^2 (x - 2) = {g}");
    println!("  {}", g.roots().to_string().replace('\n', "\n  "));

    let x = Scalar::tangible(1);
    println!(
        "\nf(1) for f = x^2 + 2x + 2: {}",
        "x^2 + 2x + 2".parse::<Polynomial>()?.evaluate(&x)
    );
    Ok(())
}
