//! Eigenvalues as corner roots of the characteristic polynomial, with
//! eigenvectors found on a rational lattice.
//!
//! Run with `cargo run --example eigenvalues`.

use supertropical::{fuzz, spectral, Matrix, Scalar};

fn main() -> supertropical::Result<()> {
    let cycle = Matrix::from_rows(vec![
        vec![Scalar::Zero, Scalar::tangible(1)],
        vec![Scalar::tangible(0), Scalar::Zero],
    ])?;
    for (name, a) in [
        ("A", Matrix::from_tangibles(&[&[0, 0], &[1, 2]])?),
        ("C", cycle),
        (
            "D",
            Matrix::from_tangibles(&[&[3, 0, -1], &[1, 2, 0], &[0, 4, 1]])?,
        ),
    ] {
        println!("{name} =\n{a}f = {}", a.char_poly()?);
        let report = spectral::eigenvalues(&a)?;
        println!("{report}");
        for e in &report.eigenvalues {
            match fuzz::find_eigenvector(&a, &e.root, 6) {
                Some(v) => {
                    println!("  x = {}: v = {}", e.root, spectral::display_vec(&v));
                    print!("{}", spectral::check_eigenpair(&a, &v, &e.root)?);
                    print!("{}", spectral::check_eigen_power(&a, &v, &e.root, 3)?);
                }
                None => println!("  x = {}: no eigenvector on the lattice", e.root),
            }
        }
        println!();
    }
    Ok(())
}
