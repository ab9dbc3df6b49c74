//! Determinants by permutation-track enumeration, and the product rule.
//!
//! Run with `cargo run --example determinant`.

use supertropical::{spectral, Matrix, Scalar};

fn show(name: &str, m: &Matrix) -> supertropical::Result<()> {
    println!("{name} =\n{m}|{name}| = {}\n", m.det()?);
    Ok(())
}

fn main() -> supertropical::Result<()> {
    // unique best track: tangible
    let a = Matrix::from_tangibles(&[&[0, 0], &[1, 2]])?;
    show("A", &a)?;

    // two tracks tie: ghost
    let tie = Matrix::from_tangibles(&[&[1, 2], &[2, 3]])?;
    show("T", &tie)?;

    // best track runs through a ghost entry
    let g = Matrix::from_rows(vec![
        vec![Scalar::ghost(3), Scalar::tangible(0)],
        vec![Scalar::tangible(0), Scalar::tangible(1)],
    ])?;
    show("G", &g)?;

    let anti = Matrix::from_tangibles(&[&[0, 5, 0], &[0, 5, 0], &[5, 0, 0]])?;
    show("S", &anti)?;
    for track in anti.tracks().filter(|t| !t.product.is_zero()) {
        println!("  track {:<8} product {}", track.label(), track.product);
    }

    let b = Matrix::from_tangibles(&[&[2, -1], &[0, 3]])?;
    println!("\nproduct rule, |AB| against |A||B|:");
    print!("{}", spectral::check_det_rule(&a, &b)?);
    print!("{}", spectral::check_det_rule(&tie, &b)?);
    Ok(())
}
