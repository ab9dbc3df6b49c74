//! Univariate supertropical polynomials.
//!
//! A polynomial `Σ a_i x^i` evaluates to its dominant monomial. Writing each
//! non-zero coefficient as the point `(i, ν(a_i))`, the monomials that can
//! dominate are exactly the points on the upper concave envelope of those
//! points, and the breakpoints between consecutive envelope vertices are the
//! candidate roots.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul};
use std::str::FromStr;

use num_rational::BigRational;
use num_traits::Zero;
use serde::ser::SerializeStruct;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::scalar::Scalar;

static ZERO: Scalar = Scalar::Zero;

/// Coefficients indexed by degree, with the leading coefficient non-zero.
/// The zero polynomial is stored as the single coefficient `-inf`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Polynomial {
    coeffs: Vec<Scalar>,
}

impl Polynomial {
    /// Build from coefficients `a_0, a_1, …`, trimming leading zeros.
    pub fn new(mut coeffs: Vec<Scalar>) -> Self {
        while coeffs.len() > 1 && coeffs.last().is_some_and(Scalar::is_zero) {
            coeffs.pop();
        }
        if coeffs.is_empty() {
            coeffs.push(Scalar::Zero);
        }
        Polynomial { coeffs }
    }

    pub fn zero() -> Self {
        Polynomial::new(vec![Scalar::Zero])
    }

    /// The constant polynomial `c`.
    pub fn constant(c: Scalar) -> Self {
        Polynomial::new(vec![c])
    }

    /// The monomial `c x^degree`.
    pub fn monomial(c: Scalar, degree: usize) -> Self {
        let mut coeffs = vec![Scalar::Zero; degree + 1];
        coeffs[degree] = c;
        Polynomial::new(coeffs)
    }

    /// The linear factor `x + root`.
    pub fn linear(root: Scalar) -> Self {
        Polynomial::new(vec![root, Scalar::one()])
    }

    /// Integer-valued tangible coefficients, lowest degree first.
    pub fn from_tangibles(values: &[i64]) -> Self {
        Polynomial::new(values.iter().map(|&v| Scalar::tangible(v)).collect())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_zero()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        (!self.is_zero()).then(|| self.coeffs.len() - 1)
    }

    pub fn coeffs(&self) -> &[Scalar] {
        &self.coeffs
    }

    /// Coefficient of `x^i`, zero past the degree.
    pub fn coeff(&self, i: usize) -> &Scalar {
        self.coeffs.get(i).unwrap_or(&ZERO)
    }

    pub fn leading(&self) -> &Scalar {
        self.coeffs.last().unwrap()
    }

    pub fn evaluate(&self, x: &Scalar) -> Scalar {
        let mut acc = Scalar::Zero;
        for (i, a) in self.coeffs.iter().enumerate() {
            if !a.is_zero() {
                acc = &acc + &(a * &x.pow(i as u32));
            }
        }
        acc
    }

    /// `f(x) ∈ G ∪ {-∞}`.
    pub fn is_root(&self, x: &Scalar) -> bool {
        self.evaluate(x).is_ghost_or_zero()
    }

    fn points(&self) -> Vec<HullPoint<'_>> {
        self.coeffs
            .iter()
            .enumerate()
            .filter_map(|(degree, c)| c.value().map(|value| HullPoint { degree, value }))
            .collect()
    }

    /// The essential polynomial: monomials that attain the maximum somewhere,
    /// ties included. Every other position becomes zero.
    pub fn essential(&self) -> Result<Polynomial> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let points = self.points();
        let mut coeffs = vec![Scalar::Zero; self.coeffs.len()];
        for p in upper_hull(&points, true) {
            let d = points[p].degree;
            coeffs[d] = self.coeffs[d].clone();
        }
        Ok(Polynomial::new(coeffs))
    }

    /// Degrees of the strict vertices of the upper envelope, ascending.
    pub fn hull_vertices(&self) -> Vec<usize> {
        let points = self.points();
        upper_hull(&points, false)
            .into_iter()
            .map(|p| points[p].degree)
            .collect()
    }

    /// Every ν-value where two non-zero monomials meet, ascending and deduplicated.
    pub fn pairwise_breakpoints(&self) -> Vec<BigRational> {
        let points = self.points();
        let mut out = Vec::new();
        for (a, p) in points.iter().enumerate() {
            for q in &points[a + 1..] {
                out.push(breakpoint(p.degree, p.value, q.degree, q.value));
            }
        }
        out.sort();
        out.dedup();
        out
    }

    /// Corner roots, ghost-dominated regions and degenerate cases.
    pub fn roots(&self) -> RootReport {
        if self.is_zero() {
            return RootReport {
                corner_roots: Vec::new(),
                ghost_intervals: vec![Interval::everything()],
                is_identically_root: true,
                root_at_zero: true,
            };
        }

        let points = self.points();
        let vertices = upper_hull(&points, false);
        let envelope = upper_hull(&points, true);
        let coeff = |p: usize| &self.coeffs[points[p].degree];
        let edge_break = |u: usize, w: usize| {
            breakpoint(
                points[u].degree,
                points[u].value,
                points[w].degree,
                points[w].value,
            )
        };

        let mut corner_roots = Vec::new();
        for pair in vertices.windows(2) {
            let (u, w) = (pair[0], pair[1]);
            if coeff(u).is_tangible() && coeff(w).is_tangible() {
                corner_roots.push(CornerRoot {
                    root: Scalar::Tangible(edge_break(u, w)),
                    multiplicity: points[w].degree - points[u].degree,
                });
            }
        }

        let mut regions = Vec::new();
        for &p in envelope.iter().filter(|&&p| coeff(p).is_ghost()) {
            let interval = match vertices.iter().position(|&v| v == p) {
                Some(pos) => Interval {
                    lower: match pos {
                        0 => Endpoint::Unbounded,
                        _ => Endpoint::Closed(edge_break(vertices[pos - 1], p)),
                    },
                    upper: if pos + 1 == vertices.len() {
                        Endpoint::Unbounded
                    } else {
                        Endpoint::Closed(edge_break(p, vertices[pos + 1]))
                    },
                },
                None => {
                    // collinear on an edge: dominant only at that edge's breakpoint
                    let next = vertices.iter().position(|&v| v > p).unwrap();
                    Interval::point(edge_break(vertices[next - 1], vertices[next]))
                }
            };
            regions.push(interval);
        }

        let is_identically_root = vertices.iter().all(|&p| coeff(p).is_ghost());
        RootReport {
            corner_roots,
            ghost_intervals: merge_intervals(regions),
            is_identically_root,
            root_at_zero: self.coeffs[0].is_ghost_or_zero(),
        }
    }

    /// For a polynomial whose single corner root spans the whole envelope,
    /// return that root as the `n`-th root of `a_0 / a_n`.
    pub fn primary_root(&self) -> Result<Scalar> {
        let n = self.degree().ok_or(Error::ZeroPolynomial)?;
        let report = self.roots();
        if report.corner_roots.len() != 1 {
            return Err(Error::NotPrimary(format!(
                "{} corner roots",
                report.corner_roots.len()
            )));
        }
        if self.hull_vertices() != [0, n] {
            return Err(Error::NotPrimary(
                "the corner root does not join the constant and leading terms".into(),
            ));
        }
        let ratio = &self.coeffs[0] * &self.leading().inverse()?;
        let root = ratio.kth_root(n as u32)?;
        debug_assert_eq!(root, report.corner_roots[0].root);
        Ok(root)
    }

    pub fn pow(&self, m: u32) -> Polynomial {
        (0..m).fold(Polynomial::constant(Scalar::one()), |acc, _| &acc * self)
    }

    /// Coefficientwise ghost surpassing, padding the shorter side with zeros.
    pub fn surpasses(&self, other: &Polynomial) -> bool {
        let len = self.coeffs.len().max(other.coeffs.len());
        (0..len).all(|i| self.coeff(i).surpasses(other.coeff(i)))
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;

    fn add(self, rhs: &Polynomial) -> Polynomial {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        Polynomial::new((0..len).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;

    fn mul(self, rhs: &Polynomial) -> Polynomial {
        let mut coeffs = vec![Scalar::Zero; self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] = &coeffs[i + j] + &(a * b);
            }
        }
        Polynomial::new(coeffs)
    }
}

impl Add for Polynomial {
    type Output = Polynomial;

    fn add(self, rhs: Polynomial) -> Polynomial {
        &self + &rhs
    }
}

impl Mul for Polynomial {
    type Output = Polynomial;

    fn mul(self, rhs: Polynomial) -> Polynomial {
        &self * &rhs
    }
}

struct HullPoint<'a> {
    degree: usize,
    value: &'a BigRational,
}

/// ν-value where `a_i x^i` and `a_j x^j` are equal.
fn breakpoint(i: usize, vi: &BigRational, j: usize, vj: &BigRational) -> BigRational {
    let gap = BigRational::from_integer((j as i64 - i as i64).into());
    (vi - vj) / gap
}

/// Upper envelope of points sorted by degree, as indices into `points`.
/// With `keep_collinear`, points lying on an edge are kept.
fn upper_hull(points: &[HullPoint<'_>], keep_collinear: bool) -> Vec<usize> {
    let mut hull: Vec<usize> = Vec::with_capacity(points.len());
    for (k, p) in points.iter().enumerate() {
        while hull.len() >= 2 {
            let a = &points[hull[hull.len() - 2]];
            let b = &points[hull[hull.len() - 1]];
            // sign of (b above the chord a-p): negative above, zero on, positive below
            let dx_ab = BigRational::from_integer((b.degree - a.degree).into());
            let dx_ap = BigRational::from_integer((p.degree - a.degree).into());
            let below = (p.value - a.value) * dx_ab - (b.value - a.value) * dx_ap;
            let pop = match below.cmp(&BigRational::zero()) {
                Ordering::Greater => true,
                Ordering::Equal => !keep_collinear,
                Ordering::Less => false,
            };
            if !pop {
                break;
            }
            hull.pop();
        }
        hull.push(k);
    }
    hull
}

/// A tangible root where two tangible envelope vertices meet.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CornerRoot {
    pub root: Scalar,
    pub multiplicity: usize,
}

/// One end of an interval of ν-values.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Endpoint {
    Unbounded,
    Closed(BigRational),
    Open(BigRational),
}

impl Endpoint {
    fn value(&self) -> Option<&BigRational> {
        match self {
            Endpoint::Unbounded => None,
            Endpoint::Closed(v) | Endpoint::Open(v) => Some(v),
        }
    }
}

/// An interval of ν-values.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Interval {
    pub lower: Endpoint,
    pub upper: Endpoint,
}

impl Interval {
    pub fn everything() -> Self {
        Interval {
            lower: Endpoint::Unbounded,
            upper: Endpoint::Unbounded,
        }
    }

    pub fn point(v: BigRational) -> Self {
        Interval {
            lower: Endpoint::Closed(v.clone()),
            upper: Endpoint::Closed(v),
        }
    }

    pub fn contains(&self, v: &BigRational) -> bool {
        let above_lower = match &self.lower {
            Endpoint::Unbounded => true,
            Endpoint::Closed(l) => v >= l,
            Endpoint::Open(l) => v > l,
        };
        let below_upper = match &self.upper {
            Endpoint::Unbounded => true,
            Endpoint::Closed(u) => v <= u,
            Endpoint::Open(u) => v < u,
        };
        above_lower && below_upper
    }

    /// Whether the scalar's ν-value lies inside. Zero sits in intervals
    /// unbounded below.
    pub fn contains_scalar(&self, x: &Scalar) -> bool {
        match x.value() {
            Some(v) => self.contains(v),
            None => self.lower == Endpoint::Unbounded,
        }
    }
}

/// Union of closed intervals, sorted and with overlapping ones joined.
fn merge_intervals(mut intervals: Vec<Interval>) -> Vec<Interval> {
    intervals.sort_by(|a, b| a.lower.value().cmp(&b.lower.value()));
    let mut merged: Vec<Interval> = Vec::new();
    for next in intervals {
        if let Some(last) = merged.last_mut() {
            let overlaps = match (last.upper.value(), next.lower.value()) {
                (None, _) | (_, None) => true,
                (Some(u), Some(l)) => l <= u,
            };
            if overlaps {
                let extend = match (last.upper.value(), next.upper.value()) {
                    (None, _) => false,
                    (_, None) => true,
                    (Some(u), Some(v)) => v > u,
                };
                if extend {
                    last.upper = next.upper;
                }
                continue;
            }
        }
        merged.push(next);
    }
    merged
}

impl fmt::Display for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.lower {
            Endpoint::Unbounded => f.write_str("(-inf")?,
            Endpoint::Closed(v) => write!(f, "[{v}")?,
            Endpoint::Open(v) => write!(f, "({v}")?,
        }
        match &self.upper {
            Endpoint::Unbounded => f.write_str(", +inf)"),
            Endpoint::Closed(v) => write!(f, ", {v}]"),
            Endpoint::Open(v) => write!(f, ", {v})"),
        }
    }
}

impl Serialize for Interval {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Bound {
            value: String,
            closed: bool,
        }
        let bound = |e: &Endpoint| match e {
            Endpoint::Unbounded => None,
            Endpoint::Closed(v) => Some(Bound {
                value: v.to_string(),
                closed: true,
            }),
            Endpoint::Open(v) => Some(Bound {
                value: v.to_string(),
                closed: false,
            }),
        };
        let mut s = serializer.serialize_struct("Interval", 2)?;
        s.serialize_field("lower", &bound(&self.lower))?;
        s.serialize_field("upper", &bound(&self.upper))?;
        s.end()
    }
}

/// Root structure of a polynomial.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RootReport {
    /// Ascending by root.
    pub corner_roots: Vec<CornerRoot>,
    /// Closed regions of ν-values where a ghost monomial dominates, ascending and disjoint.
    pub ghost_intervals: Vec<Interval>,
    /// Every element is a root (zero or all-ghost polynomial).
    pub is_identically_root: bool,
    /// `-inf` itself is a root (the constant term is ghost or zero).
    pub root_at_zero: bool,
}

impl RootReport {
    /// Whether the ν-value of `x` lies in one of the ghost intervals.
    pub fn in_ghost_region(&self, x: &Scalar) -> bool {
        self.ghost_intervals.iter().any(|i| i.contains_scalar(x))
    }

    pub fn total_multiplicity(&self) -> usize {
        self.corner_roots.iter().map(|c| c.multiplicity).sum()
    }
}

impl fmt::Display for RootReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.corner_roots.is_empty() {
            writeln!(f, "corner roots: none")?;
        } else {
            let roots: Vec<String> = self
                .corner_roots
                .iter()
                .map(|c| format!("{} (mult {})", c.root, c.multiplicity))
                .collect();
            writeln!(f, "corner roots: {}", roots.join(", "))?;
        }
        if self.ghost_intervals.is_empty() {
            writeln!(f, "ghost region: none")?;
        } else {
            let regions: Vec<String> = self.ghost_intervals.iter().map(|i| i.to_string()).collect();
            writeln!(f, "ghost region: {}", regions.join(" U "))?;
        }
        write!(f, "identically root: {}", self.is_identically_root)
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("-inf");
        }
        let mut first = true;
        for (degree, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            let coeff = if degree > 0 && *c == Scalar::one() {
                String::new()
            } else {
                c.to_string()
            };
            match degree {
                0 => write!(f, "{coeff}")?,
                1 => write!(f, "{coeff}x")?,
                _ => write!(f, "{coeff}x^{degree}")?,
            }
        }
        Ok(())
    }
}

impl FromStr for Polynomial {
    type Err = Error;

    /// Parse `COEFF x^DEG` terms joined by `+`. Repeated degrees are summed.
    fn from_str(s: &str) -> Result<Polynomial> {
        let mut coeffs: Vec<Scalar> = Vec::new();
        let mut offset = 0;
        for raw in s.split('+') {
            let lead = raw.len() - raw.trim_start().len();
            let term = raw.trim();
            let column = offset + lead + 1;
            offset += raw.len() + 1;
            if term.is_empty() {
                return Err(Error::parse(1, column, "empty term"));
            }
            let (coeff, degree) = parse_term(term).map_err(|e| e.relocate(1, column - 1))?;
            if coeffs.len() <= degree {
                coeffs.resize(degree + 1, Scalar::Zero);
            }
            coeffs[degree] = &coeffs[degree] + &coeff;
        }
        Ok(Polynomial::new(coeffs))
    }
}

fn parse_term(term: &str) -> Result<(Scalar, usize)> {
    let Some(x) = term.find('x') else {
        return Ok((term.parse()?, 0));
    };
    let coeff_text = term[..x].trim_end();
    let coeff = if coeff_text.is_empty() {
        Scalar::one()
    } else {
        coeff_text.parse()?
    };
    let rest = &term[x + 1..];
    let degree = if rest.is_empty() {
        1
    } else {
        let digits = rest
            .strip_prefix('^')
            .ok_or_else(|| Error::parse(1, x + 2, format!("expected `^`, found `{rest}`")))?;
        digits
            .parse::<usize>()
            .map_err(|_| Error::parse(1, x + 3, format!("bad degree `{digits}`")))?
    };
    Ok((coeff, degree))
}

impl Serialize for Polynomial {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.coeffs.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Polynomial {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        Vec::<Scalar>::deserialize(deserializer).map(Polynomial::new)
    }
}
