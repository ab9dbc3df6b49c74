//! The two-by-two worked example, end to end.
//!
//! `A = [[0, 0], [1, 2]]` has `f_A = x^2 + 2x + 2` with corner roots 0 and 2.
//! Squaring gives `A^2 = [[1, 2], [3, 4]]`, whose characteristic polynomial
//! `x^2 + 4x + 5g` ghost-surpasses `f_A^2 = x^2 + 4x + 4` coefficientwise.
//!
//! Run with `cargo run --example golden_example`.

use supertropical::{spectral, Matrix};

fn main() -> supertropical::Result<()> {
    let a = Matrix::from_tangibles(&[&[0, 0], &[1, 2]])?;
    println!("A =\n{a}");
    println!("|A| = {}", a.det()?);

    let f = a.char_poly()?;
    println!("f_A = {f}");
    println!("roots of f_A: {}", f.roots());

    let a2 = a.pow(2);
    println!("\nA^2 =\n{a2}");
    let f2 = a2.char_poly()?;
    println!("f_(A^2) = {f2}");
    println!("{}", f2.roots());
    println!("f_A^2 = {}", f.pow(2));

    println!();
    print!("{}", spectral::check_charpoly_power(&a, 2)?);
    print!("{}", spectral::check_tangible_equality(&a, 2)?);
    print!("{}", spectral::check_corner_root_power(&a, 2)?);
    Ok(())
}
