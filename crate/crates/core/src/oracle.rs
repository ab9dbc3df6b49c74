//! Brute-force witnesses that share no code path with the production
//! routines they check.
//!
//! The formal layer treats the matrix entries `a[i,j]` as commuting
//! indeterminates and counts every monomial with its natural-number
//! multiplicity. Counting happens before any tropical collapse, so a monomial
//! that appears twice is visible as such.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use itertools::Itertools;
use num_bigint::BigInt;
use num_rational::BigRational;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::matrix::{Matrix, DEFAULT_DET_BOUND};
use crate::polynomial::Polynomial;
use crate::scalar::Scalar;
use crate::spectral::{ids, Inputs, Record, Relation, TheoremVerdict};

/// A product of formal entries, as a map from `(row, column)` (0-based) to exponent.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SymMonomial(BTreeMap<(usize, usize), u32>);

impl SymMonomial {
    pub fn one() -> Self {
        SymMonomial::default()
    }

    /// The entry `a[i+1, j+1]`; indices are 0-based like [`Matrix::get`].
    pub fn var(i: usize, j: usize) -> Self {
        SymMonomial(BTreeMap::from([((i, j), 1)]))
    }

    pub fn exponents(&self) -> &BTreeMap<(usize, usize), u32> {
        &self.0
    }

    pub fn degree(&self) -> u32 {
        self.0.values().sum()
    }

    pub fn mul(&self, other: &SymMonomial) -> SymMonomial {
        let mut out = self.0.clone();
        for (&k, &e) in &other.0 {
            *out.entry(k).or_insert(0) += e;
        }
        SymMonomial(out)
    }

    pub fn pow(&self, m: u32) -> SymMonomial {
        SymMonomial(self.0.iter().map(|(&k, &e)| (k, e * m)).collect())
    }

    /// Substitute concrete entries and multiply out.
    pub fn evaluate(&self, a: &Matrix) -> Scalar {
        self.0.iter().fold(Scalar::one(), |acc, (&(i, j), &e)| {
            &acc * &a.get(i, j).pow(e)
        })
    }
}

impl fmt::Display for SymMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("1");
        }
        let mut parts = self.0.iter().map(|(&(i, j), &e)| match e {
            1 => format!("a[{},{}]", i + 1, j + 1),
            _ => format!("a[{},{}]^{e}", i + 1, j + 1),
        });
        f.write_str(&parts.join(" "))
    }
}

impl Serialize for SymMonomial {
    fn serialize<S: serde::Serializer>(
        &self,
        serializer: S,
    ) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_map(
            self.0
                .iter()
                .map(|(&(i, j), e)| (format!("a[{},{}]", i + 1, j + 1), e)),
        )
    }
}

/// A formal sum of monomials with occurrence counts.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct SymPoly(BTreeMap<SymMonomial, u64>);

impl SymPoly {
    pub fn zero() -> Self {
        SymPoly::default()
    }

    pub fn one() -> Self {
        SymPoly::from_monomial(SymMonomial::one())
    }

    pub fn from_monomial(m: SymMonomial) -> Self {
        SymPoly(BTreeMap::from([(m, 1)]))
    }

    pub fn terms(&self) -> &BTreeMap<SymMonomial, u64> {
        &self.0
    }

    pub fn count(&self, m: &SymMonomial) -> u64 {
        self.0.get(m).copied().unwrap_or(0)
    }

    /// Total number of occurrences, counted with multiplicity.
    pub fn total(&self) -> u64 {
        self.0.values().sum()
    }

    pub fn add_assign(&mut self, other: &SymPoly) {
        for (m, &c) in &other.0 {
            *self.0.entry(m.clone()).or_insert(0) += c;
        }
    }

    pub fn mul(&self, other: &SymPoly) -> SymPoly {
        let mut out = BTreeMap::new();
        for (a, &ca) in &self.0 {
            for (b, &cb) in &other.0 {
                *out.entry(a.mul(b)).or_insert(0) += ca * cb;
            }
        }
        SymPoly(out)
    }

    /// Substitute concrete entries and fold with the supertropical operations,
    /// each monomial added once per occurrence.
    pub fn evaluate(&self, a: &Matrix) -> Scalar {
        let mut acc = Scalar::Zero;
        for (m, &count) in &self.0 {
            let value = m.evaluate(a);
            for _ in 0..count.min(2) {
                // a third copy of the same value adds nothing beyond the ghost
                acc = &acc + &value;
            }
        }
        acc
    }
}

/// Limits on the formal expansion.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OracleBounds {
    pub max_n: usize,
    pub max_m: u32,
}

impl Default for OracleBounds {
    fn default() -> Self {
        OracleBounds { max_n: 3, max_m: 3 }
    }
}

fn formal_power(n: usize, m: u32) -> Vec<Vec<SymPoly>> {
    let base: Vec<Vec<SymPoly>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| SymPoly::from_monomial(SymMonomial::var(i, j)))
                .collect()
        })
        .collect();
    let mut acc = base.clone();
    for _ in 1..m {
        acc = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| {
                        let mut entry = SymPoly::zero();
                        for t in 0..n {
                            entry.add_assign(&acc[i][t].mul(&base[t][j]));
                        }
                        entry
                    })
                    .collect()
            })
            .collect();
    }
    acc
}

/// The coefficient of `x^(n-k)` in the characteristic polynomial of `A^m`,
/// with `A` a generic `n×n` matrix, as an exact multiset of monomials.
pub fn sym_charpoly_coeff(n: usize, m: u32, k: usize) -> Result<SymPoly> {
    sym_charpoly_coeff_with_bounds(n, m, k, OracleBounds::default())
}

pub fn sym_charpoly_coeff_with_bounds(
    n: usize,
    m: u32,
    k: usize,
    bounds: OracleBounds,
) -> Result<SymPoly> {
    check_census_args(n, m, k, bounds)?;
    let power = formal_power(n, m);
    let mut coeff = SymPoly::zero();
    for subset in (0..n).combinations(k) {
        for perm in subset.iter().copied().permutations(k) {
            let track = subset
                .iter()
                .zip(&perm)
                .fold(SymPoly::one(), |acc, (&i, &j)| acc.mul(&power[i][j]));
            coeff.add_assign(&track);
        }
    }
    Ok(coeff)
}

fn check_census_args(n: usize, m: u32, k: usize, bounds: OracleBounds) -> Result<()> {
    if n == 0 {
        return Err(Error::InvalidArgument(
            "dimension must be at least 1".into(),
        ));
    }
    if n > bounds.max_n {
        return Err(Error::BoundExceeded {
            dimension: n,
            bound: bounds.max_n,
        });
    }
    if m == 0 || m > bounds.max_m {
        return Err(Error::InvalidArgument(format!(
            "power {m} outside 1..={}",
            bounds.max_m
        )));
    }
    if k > n {
        return Err(Error::InvalidArgument(format!(
            "minor size {k} exceeds dimension {n}"
        )));
    }
    Ok(())
}

/// `m`-th powers of every permutation track of every `k×k` principal minor.
pub fn power_monomials(n: usize, m: u32, k: usize) -> BTreeSet<SymMonomial> {
    let mut out = BTreeSet::new();
    for subset in (0..n).combinations(k) {
        for perm in subset.iter().copied().permutations(k) {
            let track = subset
                .iter()
                .zip(&perm)
                .fold(SymMonomial::one(), |acc, (&i, &j)| {
                    acc.mul(&SymMonomial::var(i, j))
                });
            out.insert(track.pow(m));
        }
    }
    out
}

/// Full occurrence census of one characteristic-polynomial coefficient.
#[derive(Debug, Clone)]
pub struct Census {
    pub n: usize,
    pub m: u32,
    pub k: usize,
    pub coefficient: SymPoly,
    pub power_monomials: BTreeSet<SymMonomial>,
    pub verdict: TheoremVerdict,
}

#[derive(Serialize)]
struct CensusTerm<'a> {
    monomial: &'a SymMonomial,
    count: u64,
    power: bool,
}

impl Census {
    /// `{n, m, k, holds, terms: [{monomial, count, power}]}` for audit.
    pub fn to_json(&self) -> String {
        #[derive(Serialize)]
        struct Repr<'a> {
            n: usize,
            m: u32,
            k: usize,
            holds: bool,
            terms: Vec<CensusTerm<'a>>,
        }
        let terms = self
            .coefficient
            .terms()
            .iter()
            .map(|(monomial, &count)| CensusTerm {
                monomial,
                count,
                power: self.power_monomials.contains(monomial),
            })
            .collect();
        serde_json::to_string_pretty(&Repr {
            n: self.n,
            m: self.m,
            k: self.k,
            holds: self.verdict.holds(),
            terms,
        })
        .expect("census serializes")
    }

    /// Non-power monomials whose count is odd.
    pub fn odd_non_power_counts(&self) -> usize {
        self.coefficient
            .terms()
            .iter()
            .filter(|(m, &c)| !self.power_monomials.contains(*m) && c % 2 == 1)
            .count()
    }
}

/// Every power monomial appears exactly once, and every other monomial at
/// least twice.
pub fn census(n: usize, m: u32, k: usize) -> Result<Census> {
    census_with_bounds(n, m, k, OracleBounds::default())
}

pub fn census_with_bounds(n: usize, m: u32, k: usize, bounds: OracleBounds) -> Result<Census> {
    let coefficient = sym_charpoly_coeff_with_bounds(n, m, k, bounds)?;
    let powers = power_monomials(n, m, k);
    let mut detail = Vec::new();

    for p in &powers {
        let count = coefficient.count(p);
        if count != 1 {
            detail.push(count_record(p, count, "exactly 1"));
        }
    }
    let mut others = 0usize;
    let mut min_other: Option<u64> = None;
    for (mono, &count) in coefficient.terms() {
        if powers.contains(mono) {
            continue;
        }
        others += 1;
        min_other = Some(min_other.map_or(count, |c| c.min(count)));
        if count < 2 {
            detail.push(count_record(mono, count, "at least 2"));
        }
    }

    let flag = |prefix: &str| {
        if detail.iter().any(|r| r.index == prefix) {
            " (see violations)"
        } else {
            ""
        }
    };
    let mut summary = vec![
        Record {
            index: "power".into(),
            lhs: format!("{} monomials", powers.len()),
            rhs: format!("count exactly 1{}", flag("power")),
            relation: Relation::Equal,
        },
        Record {
            index: "other".into(),
            lhs: format!(
                "{others} monomials, min count {}",
                min_other.map_or("-".into(), |c| c.to_string())
            ),
            rhs: format!("count at least 2{}", flag("other")),
            relation: Relation::GhostSurpass,
        },
    ];
    summary.extend(detail);

    let inputs = Inputs::new().value("n", n).value("m", m).value("k", k);
    let verdict = TheoremVerdict::from_records(ids::POWER_MONOMIAL_CENSUS, inputs, summary);
    Ok(Census {
        n,
        m,
        k,
        coefficient,
        power_monomials: powers,
        verdict,
    })
}

fn count_record(mono: &SymMonomial, count: u64, expected: &str) -> Record {
    Record {
        index: if expected.starts_with("exactly") {
            "power"
        } else {
            "other"
        }
        .into(),
        lhs: format!("{mono} x{count}"),
        rhs: expected.into(),
        relation: Relation::Violation,
    }
}

pub fn census_verdict(n: usize, m: u32, k: usize) -> Result<TheoremVerdict> {
    census(n, m, k).map(|c| c.verdict)
}

/// Census over every minor size `0..=n`, merged into one verdict.
pub fn census_all_k(n: usize, m: u32) -> Result<TheoremVerdict> {
    let mut detail = Vec::new();
    let mut violated = false;
    for k in 0..=n {
        let c = census(n, m, k)?;
        violated |= c.verdict.is_violated();
        for mut r in c.verdict.detail {
            r.index = format!("k={k} {}", r.index);
            detail.push(r);
        }
    }
    let verdict = TheoremVerdict::from_records(
        ids::POWER_MONOMIAL_CENSUS,
        Inputs::new().value("n", n).value("m", m),
        detail,
    );
    debug_assert_eq!(verdict.is_violated(), violated);
    Ok(verdict)
}

/// `|xI + A|` computed directly as a permanent over polynomial entries.
pub fn sym_direct_charpoly(a: &Matrix) -> Result<Polynomial> {
    sym_direct_charpoly_with_bound(a, DEFAULT_DET_BOUND)
}

pub fn sym_direct_charpoly_with_bound(a: &Matrix, bound: usize) -> Result<Polynomial> {
    let n = a.dim();
    if n > bound {
        return Err(Error::BoundExceeded {
            dimension: n,
            bound,
        });
    }
    let entry = |i: usize, j: usize| {
        let c = Polynomial::constant(a.get(i, j).clone());
        if i == j {
            &c + &Polynomial::monomial(Scalar::one(), 1)
        } else {
            c
        }
    };
    let mut total = Polynomial::zero();
    for perm in (0..n).permutations(n) {
        let track = perm
            .iter()
            .enumerate()
            .fold(Polynomial::constant(Scalar::one()), |acc, (i, &j)| {
                &acc * &entry(i, j)
            });
        total = &total + &track;
    }
    Ok(total)
}

/// Minor-sum and direct-permanent routes must give the same polynomial.
pub fn check_charpoly_equiv(a: &Matrix) -> Result<TheoremVerdict> {
    let minor_sum = a.char_poly()?;
    let direct = sym_direct_charpoly(a)?;
    let len = minor_sum.coeffs().len().max(direct.coeffs().len());
    let detail = (0..len)
        .map(|i| {
            let (l, r) = (minor_sum.coeff(i), direct.coeff(i));
            let relation = if l == r {
                Relation::Equal
            } else {
                Relation::Violation
            };
            Record::new(format!("x^{i}"), l, r, relation)
        })
        .collect();
    Ok(TheoremVerdict::from_records(
        ids::CHARPOLY_EQUIV,
        Inputs::new().matrix("A", a),
        detail,
    ))
}

/// Evaluate both polynomials at `samples` seeded random rationals plus `-inf`
/// and every pairwise breakpoint of either; they must agree everywhere.
pub fn sampled_equiv(f: &Polynomial, g: &Polynomial, samples: usize, seed: u64) -> TheoremVerdict {
    let mut breaks = f.pairwise_breakpoints();
    breaks.extend(g.pairwise_breakpoints());
    breaks.sort();
    breaks.dedup();

    let int = |v: i64| BigRational::from_integer(BigInt::from(v));
    let lo = breaks.first().map_or(int(-10), |b| b.floor() - int(3));
    let hi = breaks.last().map_or(int(10), |b| b.ceil() + int(3));
    let lo = lo.to_integer().try_into().unwrap_or(i64::MIN / 8);
    let hi: i64 = hi.to_integer().try_into().unwrap_or(i64::MAX / 8);

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut points: Vec<Scalar> = vec![Scalar::Zero];
    points.extend(breaks.into_iter().map(Scalar::Tangible));
    for _ in 0..samples {
        let denom = rng.random_range(1..=6i64);
        let numer = rng.random_range(lo * denom..=hi * denom);
        points.push(Scalar::tangible_ratio(numer, denom));
    }

    let detail: Vec<Record> = points
        .iter()
        .filter_map(|x| {
            let (fx, gx) = (f.evaluate(x), g.evaluate(x));
            (fx != gx).then(|| Record::new(format!("x = {x}"), &fx, &gx, Relation::Violation))
        })
        .collect();
    TheoremVerdict::from_records(
        "sampled-equiv",
        Inputs::new()
            .value("f", f)
            .value("g", g)
            .value("samples", samples)
            .value("seed", seed),
        detail,
    )
}
