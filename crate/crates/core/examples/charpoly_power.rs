//! The characteristic polynomial of a power against the power of the
//! characteristic polynomial, with the trace and corner-root consequences.
//!
//! Run with `cargo run --example charpoly_power [SEED]`.

use rand::Rng;
use supertropical::fuzz::{self, FuzzConfig};
use supertropical::spectral;

fn main() -> supertropical::Result<()> {
    let seed = std::env::args()
        .nth(1)
        .and_then(|s| s.parse().ok())
        .unwrap_or(3);
    let config = FuzzConfig::default();
    let mut rng = fuzz::trial_rng(seed, 0);
    for _ in 0..3 {
        let n = rng.random_range(2..=4);
        let a = fuzz::random_matrix(&mut rng, n, &config);
        println!("A =\n{a}f_A = {}", a.char_poly()?);
        for m in 2..=3 {
            println!("m = {m}: f_(A^m) = {}", a.pow(m).char_poly()?);
            println!("       f_A^m   = {}", a.char_poly()?.pow(m));
            print!("{}", spectral::check_charpoly_power(&a, m)?);
            print!("{}", spectral::check_trace_power(&a, m)?);
            print!("{}", spectral::check_corner_root_power(&a, m)?);
        }
        println!();
    }
    Ok(())
}
