//! Formal census of characteristic-polynomial coefficients of `A^m`.
//!
//! For a generic matrix whose entries are indeterminates, every `m`-th power
//! of a permutation-track monomial of `A` occurs exactly once in the matching
//! coefficient of `f_{A^m}`; every other monomial occurs at least twice, so
//! after tropical collapse it can only contribute a ghost.
//!
//! Run with `cargo run --example power_monomial_census`.

use std::time::Instant;

use supertropical::oracle;

fn main() -> supertropical::Result<()> {
    let start = Instant::now();
    println!(
        "{:>2} {:>2} {:>2}  {:>7} {:>7} {:>9} {:>9}  verdict",
        "n", "m", "k", "powers", "others", "min count", "odd count"
    );
    for n in 1..=3 {
        for m in 2..=3 {
            for k in 0..=n {
                let census = oracle::census(n, m, k)?;
                let others: Vec<u64> = census
                    .coefficient
                    .terms()
                    .iter()
                    .filter(|(mono, _)| !census.power_monomials.contains(*mono))
                    .map(|(_, &c)| c)
                    .collect();
                println!(
                    "{n:>2} {m:>2} {k:>2}  {:>7} {:>7} {:>9} {:>9}  {}",
                    census.power_monomials.len(),
                    others.len(),
                    others.iter().min().map_or("-".into(), |c| c.to_string()),
                    census.odd_non_power_counts(),
                    if census.verdict.holds() {
                        "holds"
                    } else {
                        "VIOLATED"
                    },
                );
            }
        }
    }
    println!(
        "\nsmallest case as JSON:\n{}",
        oracle::census(2, 2, 1)?.to_json()
    );
    println!("elapsed: {:.2?}", start.elapsed());
    Ok(())
}
