//! A seeded campaign over every checker. The same seed always yields the same
//! JSON summary, and any failing trial can be replayed on its own.
//!
//! Run with `cargo run --release --example fuzz_campaign [TRIALS] [SEED]`.

use std::time::Instant;

use supertropical::fuzz::{self, FuzzConfig};

fn main() -> supertropical::Result<()> {
    let mut args = std::env::args().skip(1);
    let trials = args.next().and_then(|s| s.parse().ok()).unwrap_or(200);
    let seed = args.next().and_then(|s| s.parse().ok()).unwrap_or(42);
    let config = FuzzConfig {
        trials,
        seed,
        ..FuzzConfig::default()
    };

    let start = Instant::now();
    let summary = fuzz::run_campaign(&config)?;
    println!("{trials} trials, seed {seed}, {:.2?}", start.elapsed());
    println!(
        "{:<15} {:>6} {:>6} {:>6} {:>6}",
        "theorem", "pass", "fail", "n/a", "exact"
    );
    for (name, t) in &summary.tallies {
        println!(
            "{name:<15} {:>6} {:>6} {:>6} {:>6}",
            t.pass, t.fail, t.not_applicable, t.exact
        );
    }
    for f in &summary.failures {
        println!("trial {} seed {}\n{}", f.trial, f.seed, f.verdict);
    }

    let again = fuzz::run_campaign(&config)?;
    println!("reproducible: {}", summary.to_json() == again.to_json());

    let t = fuzz::run_trial(&config, 0)?;
    println!("\ntrial 0 replayed: n = {}, m = {}\nA =\n{}", t.n, t.m, t.a);
    Ok(())
}
