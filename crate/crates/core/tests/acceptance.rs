//! Acceptance suite. Runs every criterion, prints one line each, and exits
//! non-zero if any fails.

mod common;

use std::collections::BTreeMap;
use std::panic::{self, AssertUnwindSafe};
use std::time::{Duration, Instant};

use proptest::prelude::*;
use proptest::test_runner::TestCaseError;
use rand::Rng;
use supertropical::fuzz::{self, CampaignSummary, FuzzConfig};
use supertropical::matrix::DetClass;
use supertropical::polynomial::CornerRoot;
use supertropical::spectral::{self, ids, Outcome};
use supertropical::{oracle, Matrix, Polynomial, Scalar};

type Check = Result<String, String>;

fn within(label: &str, elapsed: Duration, limit: Duration) -> Result<(), String> {
    if elapsed > limit {
        return Err(format!("{label} took {elapsed:.2?}, limit {limit:.0?}"));
    }
    Ok(())
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn s(text: &str) -> Scalar {
    text.parse().unwrap()
}

fn golden() -> Check {
    let start = Instant::now();
    let a = Matrix::from_tangibles(&[&[0, 0], &[1, 2]]).unwrap();
    let f = a.char_poly().unwrap();
    ensure(f == "x^2 + 2x + 2".parse().unwrap(), || {
        format!("f_A = {f}")
    })?;
    let roots = f.roots();
    let expected = vec![
        CornerRoot {
            root: s("0"),
            multiplicity: 1,
        },
        CornerRoot {
            root: s("2"),
            multiplicity: 1,
        },
    ];
    ensure(roots.corner_roots == expected, || {
        format!("roots of f_A: {roots}")
    })?;
    ensure(roots.ghost_intervals.is_empty(), || {
        "f_A has a ghost region".into()
    })?;

    let a2 = a.pow(2);
    ensure(
        a2 == Matrix::from_tangibles(&[&[1, 2], &[3, 4]]).unwrap(),
        || format!("A^2 =\n{a2}"),
    )?;
    let f2 = a2.char_poly().unwrap();
    ensure(f2 == "x^2 + 4x + 5g".parse().unwrap(), || {
        format!("f_(A^2) = {f2}")
    })?;
    let r2 = f2.roots();
    ensure(
        r2.corner_roots
            == vec![CornerRoot {
                root: s("4"),
                multiplicity: 1,
            }],
        || format!("roots of f_(A^2): {r2}"),
    )?;
    ensure(
        r2.ghost_intervals.len() == 1 && r2.ghost_intervals[0].to_string() == "(-inf, 1]",
        || format!("ghost region of f_(A^2): {r2}"),
    )?;
    for x in ["-7", "1", "1/2", "-inf"] {
        ensure(r2.in_ghost_region(&s(x)), || {
            format!("{x} should be a ghost root")
        })?;
    }
    for x in ["3/2", "4", "9"] {
        ensure(!r2.in_ghost_region(&s(x)), || {
            format!("{x} should not be a ghost root")
        })?;
    }
    let det = a.det().unwrap();
    ensure(
        det.value == s("2") && det.classification == DetClass::Tangible,
        || det.to_string(),
    )?;
    within("golden example", start.elapsed(), Duration::from_secs(1))?;
    Ok(format!(
        "f_A = {f}, f_(A^2) = {f2}, {:.2?}",
        start.elapsed()
    ))
}

fn campaign_config() -> FuzzConfig {
    FuzzConfig {
        trials: 1000,
        seed: 42,
        min_n: 2,
        max_n: 4,
        min_m: 2,
        max_m: 3,
        ..FuzzConfig::default()
    }
}

fn charpoly_power_campaign(summary: &CampaignSummary, elapsed: Duration) -> Check {
    let t = summary.tally(ids::CHARPOLY_POWER);
    ensure(t.pass == 1000 && t.fail == 0, || {
        format!("{t:?}\n{}", summary.to_json())
    })?;
    within("campaign", elapsed, Duration::from_secs(60))?;
    Ok(format!("{} / 1000 pass, {:.2?}", t.pass, elapsed))
}

fn det_rule() -> Check {
    let config = FuzzConfig::default();
    let mut tangible = 0;
    for trial in 0..1000u64 {
        let mut rng = fuzz::trial_rng(1303, trial);
        let n = rng.random_range(1..=4);
        let a = fuzz::random_matrix(&mut rng, n, &config);
        let b = fuzz::random_matrix(&mut rng, n, &config);
        let verdict = spectral::check_det_rule(&a, &b).unwrap();
        ensure(verdict.holds(), || format!("trial {trial}\n{verdict}"))?;
        let ab = a.mul(&b).unwrap().det().unwrap().value;
        if ab.is_tangible() {
            tangible += 1;
            let product = &a.det().unwrap().value * &b.det().unwrap().value;
            ensure(ab == product, || {
                format!("trial {trial}: |AB| = {ab} but |A||B| = {product}")
            })?;
        }
    }
    Ok(format!(
        "1000 pairs surpass, {tangible} tangible |AB| all exact"
    ))
}

fn corollaries(summary: &CampaignSummary) -> Check {
    let roots = summary.tally(ids::CORNER_ROOT_POWER);
    ensure(roots.pass == 1000 && roots.fail == 0, || {
        format!("corner roots {roots:?}")
    })?;
    let eq = summary.tally(ids::TANGIBLE_EQUALITY);
    ensure(eq.fail == 0 && eq.pass + eq.not_applicable == 1000, || {
        format!("tangible equality {eq:?}")
    })?;
    let a = Matrix::from_tangibles(&[&[0, 0], &[1, 2]]).unwrap();
    let golden = spectral::check_tangible_equality(&a, 2).unwrap();
    ensure(golden.outcome == Outcome::NotApplicable, || {
        format!("golden example: {golden}")
    })?;
    Ok(format!(
        "corner roots 1000 / 1000, tangible equality {} applicable all pass, golden m = 2 not applicable",
        eq.pass
    ))
}

fn census() -> Check {
    let start = Instant::now();
    let mut cases = 0;
    let mut odd = 0;
    for n in 1..=3 {
        for m in 2..=3 {
            for k in 0..=n {
                let c = oracle::census(n, m, k).unwrap();
                ensure(c.verdict.holds(), || c.verdict.to_string())?;
                for mono in &c.power_monomials {
                    ensure(c.coefficient.count(mono) == 1, || {
                        format!("power monomial {mono} count")
                    })?;
                }
                for (mono, &count) in c.coefficient.terms() {
                    if !c.power_monomials.contains(mono) {
                        ensure(count >= 2, || {
                            format!("(n, m, k) = ({n}, {m}, {k}): {mono} x{count}")
                        })?;
                    }
                }
                odd += c.odd_non_power_counts();
                cases += 1;
            }
        }
    }
    within("census", start.elapsed(), Duration::from_secs(120))?;
    Ok(format!(
        "{cases} cases hold ({odd} odd non-power counts), {:.2?}",
        start.elapsed()
    ))
}

fn oracle_equivalence() -> Check {
    let config = FuzzConfig::default();
    let mut sizes = BTreeMap::new();
    for trial in 0..500u64 {
        let mut rng = fuzz::trial_rng(606, trial);
        let n = rng.random_range(1..=4);
        let a = fuzz::random_matrix(&mut rng, n, &config);
        let minors = a.char_poly().unwrap();
        let direct = oracle::sym_direct_charpoly(&a).unwrap();
        ensure(minors == direct, || {
            format!("A =\n{a}minor sums {minors}, direct {direct}")
        })?;
        *sizes.entry(n).or_insert(0) += 1;
    }
    Ok(format!("500 / 500 exact, by size {sizes:?}"))
}

const LAW_CASES: u32 = 10_000;

fn law<S: Strategy>(
    name: &str,
    strategy: S,
    test: impl Fn(S::Value) -> Result<(), TestCaseError>,
) -> Result<(), String>
where
    S::Value: std::fmt::Debug,
{
    common::runner(LAW_CASES)
        .run(&strategy, test)
        .map_err(|e| format!("{name}: {e}"))
}

fn mixed() -> impl Strategy<Value = Scalar> {
    prop_oneof![common::small_scalar(), common::scalar()]
}

fn algebraic_laws() -> Check {
    let triple = || (mixed(), mixed(), mixed());
    let mut laws = 0;
    let mut run = |r: Result<(), String>| {
        laws += 1;
        r
    };
    run(law("add associative", triple(), |(a, b, c)| {
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        Ok(())
    }))?;
    run(law("add commutative", triple(), |(a, b, _)| {
        prop_assert_eq!(&a + &b, &b + &a);
        Ok(())
    }))?;
    run(law("add identity", mixed(), |a| {
        prop_assert_eq!(&a + &Scalar::Zero, a);
        Ok(())
    }))?;
    run(law("mul associative", triple(), |(a, b, c)| {
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        Ok(())
    }))?;
    run(law("mul commutative", triple(), |(a, b, _)| {
        prop_assert_eq!(&a * &b, &b * &a);
        Ok(())
    }))?;
    run(law("mul identity", mixed(), |a| {
        prop_assert_eq!(&a * &Scalar::one(), a.clone());
        prop_assert_eq!(&a * &Scalar::Zero, Scalar::Zero);
        Ok(())
    }))?;
    run(law("distributive", triple(), |(a, b, c)| {
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        Ok(())
    }))?;
    run(law(
        "frobenius",
        (mixed(), mixed(), 1u32..=7),
        |(a, b, n)| {
            prop_assert_eq!((&a + &b).pow(n), &a.pow(n) + &b.pow(n));
            prop_assert!(spectral::check_frobenius(&a, &b, n).unwrap().holds());
            Ok(())
        },
    ))?;
    run(law("surpass reflexive", mixed(), |a| {
        prop_assert!(a.surpasses(&a));
        Ok(())
    }))?;
    run(law("surpass antisymmetric", triple(), |(a, b, _)| {
        if a.surpasses(&b) && b.surpasses(&a) {
            prop_assert_eq!(a, b);
        }
        Ok(())
    }))?;
    run(law("surpass transitive", triple(), |(a, b, c)| {
        if a.surpasses(&b) && b.surpasses(&c) {
            prop_assert!(a.surpasses(&c));
        }
        Ok(())
    }))?;
    run(law(
        "surpass multiplicative",
        (mixed(), mixed(), mixed(), mixed()),
        |(a, b, c, d)| {
            if a.surpasses(&b) {
                prop_assert!((&a * &c).surpasses(&(&b * &c)));
                prop_assert!((&a + &c).surpasses(&(&b + &c)));
                if c.surpasses(&d) {
                    prop_assert!((&a * &c).surpasses(&(&b * &d)));
                }
            }
            Ok(())
        },
    ))?;
    run(law(
        "root uniqueness",
        (common::tangible(), common::tangible(), 1u32..=8),
        |(y, z, n)| {
            let a = y.pow(n);
            prop_assert_eq!(a.kth_root(n).unwrap(), y.clone());
            if z.pow(n) == a {
                prop_assert_eq!(z, y);
            }
            Ok(())
        },
    ))?;
    Ok(format!("{laws} laws x {LAW_CASES} cases"))
}

fn primary() -> impl Strategy<Value = (Polynomial, Scalar, usize)> {
    (common::tangible(), common::tangible(), 1usize..=8)
        .prop_flat_map(|(lead, root, n)| {
            let gaps = prop::collection::vec(
                prop_oneof![
                    3 => (0i64..=6).prop_map(|d| (d, false)),
                    2 => (1i64..=6).prop_map(|d| (d, true)),
                    1 => Just((-1, false)),
                ],
                n.saturating_sub(1),
            );
            (Just(lead), Just(root), Just(n), gaps)
        })
        .prop_map(|(lead, root, n, gaps)| {
            let line = |i: usize| &lead * &root.pow((n - i) as u32);
            let mut coeffs = vec![line(0)];
            for (i, (drop, ghost)) in gaps.into_iter().enumerate() {
                let at = line(i + 1);
                coeffs.push(match (drop, ghost) {
                    (-1, _) => Scalar::Zero,
                    (d, g) => {
                        let v = &at * &Scalar::tangible(-d);
                        if g {
                            v.nu()
                        } else {
                            v
                        }
                    }
                });
            }
            coeffs.push(lead);
            (Polynomial::new(coeffs), root, n)
        })
}

fn polynomial_suite() -> Check {
    common::runner(500)
        .run(
            &common::polynomial(8).prop_filter("nonzero", |f| !f.is_zero()),
            |f| {
                let e = f.essential().unwrap();
                let v = oracle::sampled_equiv(&f, &e, 24, 88);
                prop_assert!(v.holds(), "{}", v);
                Ok(())
            },
        )
        .map_err(|e| format!("essential equivalence: {e}"))?;

    let factors = prop::collection::btree_map(-12i64..=12, 1usize..=3, 1..=4)
        .prop_filter("degree at most 8", |m| m.values().sum::<usize>() <= 8);
    common::runner(500)
        .run(&factors, |roots| {
            let f = roots
                .iter()
                .fold(Polynomial::constant(Scalar::one()), |acc, (&r, &k)| {
                    acc * Polynomial::linear(Scalar::tangible(r)).pow(k as u32)
                });
            let expected: Vec<CornerRoot> = roots
                .iter()
                .map(|(&r, &k)| CornerRoot {
                    root: Scalar::tangible(r),
                    multiplicity: k,
                })
                .collect();
            prop_assert_eq!(f.roots().corner_roots, expected, "{}", f);
            Ok(())
        })
        .map_err(|e| format!("multiplicity recovery: {e}"))?;

    common::runner(200)
        .run(&primary(), |(f, root, n)| {
            let expected = vec![CornerRoot {
                root: root.clone(),
                multiplicity: n,
            }];
            prop_assert_eq!(&f.roots().corner_roots, &expected, "{}", f);
            prop_assert_eq!(f.primary_root().unwrap(), root.clone(), "{}", f);
            let formula = (f.coeff(0) * &f.leading().inverse().unwrap())
                .kth_root(n as u32)
                .unwrap();
            prop_assert_eq!(formula, root);
            Ok(())
        })
        .map_err(|e| format!("primary roots: {e}"))?;
    Ok("500 essential reductions, 500 factorizations, 200 primary polynomials".into())
}

fn guarded<T>(f: impl FnOnce() -> Result<T, String>) -> Result<T, String> {
    panic::catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|p| {
        let msg = p
            .downcast_ref::<String>()
            .cloned()
            .or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string()))
            .unwrap_or_default();
        Err(format!("panicked: {msg}"))
    })
}

fn main() {
    let start = Instant::now();
    let campaign = guarded(|| {
        let t = Instant::now();
        let summary = fuzz::run_campaign(&campaign_config()).map_err(|e| e.to_string())?;
        Ok((summary, t.elapsed()))
    })
    .map_err(|e| format!("campaign failed: {e}"));

    let results: Vec<(&str, Check)> = vec![
        ("golden example", guarded(golden)),
        (
            "characteristic polynomial of powers",
            campaign
                .clone()
                .and_then(|(s, t)| charpoly_power_campaign(&s, t)),
        ),
        ("rule of determinants", guarded(det_rule)),
        (
            "corollaries",
            campaign.clone().and_then(|(s, _)| corollaries(&s)),
        ),
        ("power monomial census", guarded(census)),
        ("oracle equivalence", guarded(oracle_equivalence)),
        ("algebraic laws", guarded(algebraic_laws)),
        ("polynomial suite", guarded(polynomial_suite)),
    ];

    let mut failed = 0;
    for (i, (name, result)) in results.iter().enumerate() {
        match result {
            Ok(detail) => println!("criterion {} {name}: PASS ({detail})", i + 1),
            Err(why) => {
                failed += 1;
                println!(
                    "criterion {} {name}: FAIL\n  {}",
                    i + 1,
                    why.replace('\n', "\n  ")
                );
            }
        }
    }
    println!(
        "acceptance: {} / {} passed in {:.2?}",
        results.len() - failed,
        results.len(),
        start.elapsed()
    );
    if failed > 0 {
        std::process::exit(1);
    }
}
