//! Eigenvalues and executable checks of the structural results relating a
//! matrix, its powers and their characteristic polynomials.
//!
//! Every checker returns a [`TheoremVerdict`]. A failing verdict carries the
//! full inputs so the violation can be reproduced from the witness alone.

use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::matrix::{Matrix, DEFAULT_DET_BOUND};
use crate::polynomial::{CornerRoot, Interval};
use crate::scalar::Scalar;

/// Identifiers accepted by [`crate::cli`] and used as verdict names.
pub mod ids {
    pub const DET_RULE: &str = "thm13";
    pub const FROBENIUS: &str = "frobenius";
    pub const EIGEN_POWER: &str = "prop32";
    pub const CHARPOLY_POWER: &str = "thm36";
    pub const TANGIBLE_EQUALITY: &str = "cor37";
    pub const CORNER_ROOT_POWER: &str = "cor38";
    pub const TRACE_POWER: &str = "trace";
    pub const POWER_MONOMIAL_CENSUS: &str = "claim35";
    pub const CHARPOLY_EQUIV: &str = "charpoly-equiv";
    pub const EIGENPAIR: &str = "eigenpair";

    pub const ALL: [&str; 9] = [
        DET_RULE,
        FROBENIUS,
        EIGEN_POWER,
        CHARPOLY_POWER,
        TANGIBLE_EQUALITY,
        CORNER_ROOT_POWER,
        TRACE_POWER,
        POWER_MONOMIAL_CENSUS,
        CHARPOLY_EQUIV,
    ];
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Outcome {
    Holds,
    Violated,
    /// The hypothesis of a conditional statement is not met.
    NotApplicable,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Relation {
    Equal,
    GhostSurpass,
    Violation,
}

impl Relation {
    /// How `lhs` relates to `rhs` under ghost surpassing.
    pub fn between(lhs: &Scalar, rhs: &Scalar) -> Relation {
        if lhs == rhs {
            Relation::Equal
        } else if lhs.surpasses(rhs) {
            Relation::GhostSurpass
        } else {
            Relation::Violation
        }
    }
}

impl fmt::Display for Relation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Relation::Equal => "=",
            Relation::GhostSurpass => "|=gs",
            Relation::Violation => "VIOLATION",
        })
    }
}

/// One compared position, e.g. a coefficient index or a vector component.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Record {
    pub index: String,
    pub lhs: String,
    pub rhs: String,
    pub relation: Relation,
}

impl Record {
    pub fn new(index: impl Into<String>, lhs: &Scalar, rhs: &Scalar, relation: Relation) -> Self {
        Record {
            index: index.into(),
            lhs: lhs.to_string(),
            rhs: rhs.to_string(),
            relation,
        }
    }

    fn surpass(index: impl Into<String>, lhs: &Scalar, rhs: &Scalar) -> Self {
        Record::new(index, lhs, rhs, Relation::between(lhs, rhs))
    }
}

/// Everything needed to reproduce a failed check.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub inputs: BTreeMap<String, String>,
    pub violations: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TheoremVerdict {
    pub theorem: String,
    pub outcome: Outcome,
    pub witness: Option<Witness>,
    pub detail: Vec<Record>,
}

impl TheoremVerdict {
    /// Holds unless some record is a violation.
    pub fn from_records(theorem: &str, inputs: Inputs, detail: Vec<Record>) -> Self {
        let violations: Vec<String> = detail
            .iter()
            .filter(|r| r.relation == Relation::Violation)
            .map(|r| format!("{}: {} does not surpass {}", r.index, r.lhs, r.rhs))
            .collect();
        let (outcome, witness) = if violations.is_empty() {
            (Outcome::Holds, None)
        } else {
            (
                Outcome::Violated,
                Some(Witness {
                    inputs: inputs.0,
                    violations,
                }),
            )
        };
        TheoremVerdict {
            theorem: theorem.into(),
            outcome,
            witness,
            detail,
        }
    }

    pub fn not_applicable(theorem: &str, detail: Vec<Record>) -> Self {
        TheoremVerdict {
            theorem: theorem.into(),
            outcome: Outcome::NotApplicable,
            witness: None,
            detail,
        }
    }

    pub fn holds(&self) -> bool {
        self.outcome == Outcome::Holds
    }

    pub fn is_violated(&self) -> bool {
        self.outcome == Outcome::Violated
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("verdict serializes")
    }
}

impl Serialize for TheoremVerdict {
    fn serialize<S: serde::Serializer>(
        &self,
        serializer: S,
    ) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Repr<'a> {
            theorem: &'a str,
            holds: bool,
            not_applicable: bool,
            #[serde(skip_serializing_if = "Option::is_none")]
            witness: &'a Option<Witness>,
            detail: &'a [Record],
        }
        Repr {
            theorem: &self.theorem,
            holds: self.holds(),
            not_applicable: self.outcome == Outcome::NotApplicable,
            witness: &self.witness,
            detail: &self.detail,
        }
        .serialize(serializer)
    }
}

impl fmt::Display for TheoremVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = match self.outcome {
            Outcome::Holds => "PASS",
            Outcome::Violated => "FAIL",
            Outcome::NotApplicable => "NOT APPLICABLE",
        };
        writeln!(f, "{}: {status}", self.theorem)?;
        for r in &self.detail {
            writeln!(f, "  {:<12} {} {} {}", r.index, r.lhs, r.relation, r.rhs)?;
        }
        if let Some(w) = &self.witness {
            writeln!(f, "witness:")?;
            for (name, value) in &w.inputs {
                writeln!(f, "  {name} = {value}")?;
            }
            for v in &w.violations {
                writeln!(f, "  {v}")?;
            }
        }
        Ok(())
    }
}

/// Named inputs recorded in a witness.
#[derive(Debug, Default, Clone)]
pub struct Inputs(BTreeMap<String, String>);

impl Inputs {
    pub fn new() -> Self {
        Inputs::default()
    }

    pub fn matrix(mut self, name: &str, m: &Matrix) -> Self {
        self.0.insert(name.into(), m.to_json());
        self
    }

    pub fn value(mut self, name: &str, v: impl fmt::Display) -> Self {
        self.0.insert(name.into(), v.to_string());
        self
    }
}

/// Tangible corner roots of the characteristic polynomial.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EigenReport {
    pub eigenvalues: Vec<CornerRoot>,
    /// Ghost intervals of the characteristic polynomial, for diagnostics only.
    pub ghost_root_region: Vec<Interval>,
}

impl fmt::Display for EigenReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.eigenvalues.is_empty() {
            writeln!(f, "eigenvalues: none")?;
        } else {
            let list: Vec<String> = self
                .eigenvalues
                .iter()
                .map(|e| format!("{} (mult {})", e.root, e.multiplicity))
                .collect();
            writeln!(f, "eigenvalues: {}", list.join(", "))?;
        }
        if self.ghost_root_region.is_empty() {
            write!(f, "ghost root region: none")
        } else {
            let list: Vec<String> = self
                .ghost_root_region
                .iter()
                .map(|i| i.to_string())
                .collect();
            write!(f, "ghost root region: {}", list.join(" U "))
        }
    }
}

/// Runs the checks with a fixed determinant enumeration bound.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Checker {
    pub det_bound: usize,
}

impl Default for Checker {
    fn default() -> Self {
        Checker {
            det_bound: DEFAULT_DET_BOUND,
        }
    }
}

fn require_power(m: u32) -> Result<()> {
    if m == 0 {
        return Err(Error::InvalidArgument("power must be at least 1".into()));
    }
    Ok(())
}

impl Checker {
    pub fn new(det_bound: usize) -> Self {
        Checker { det_bound }
    }

    pub fn eigenvalues(&self, a: &Matrix) -> Result<EigenReport> {
        let roots = a.char_poly_with_bound(self.det_bound)?.roots();
        Ok(EigenReport {
            eigenvalues: roots.corner_roots,
            ghost_root_region: roots.ghost_intervals,
        })
    }

    /// `Av` ghost-surpasses `xv` componentwise, for tangible `v` and `x`.
    pub fn check_eigenpair(&self, a: &Matrix, v: &[Scalar], x: &Scalar) -> Result<TheoremVerdict> {
        if !x.is_tangible() {
            return Err(Error::InvalidArgument(format!(
                "eigenvalue {x} is not tangible"
            )));
        }
        if let Some(bad) = v.iter().find(|c| !c.is_tangible()) {
            return Err(Error::InvalidArgument(format!(
                "eigenvector entry {bad} is not tangible"
            )));
        }
        let av = a.mul_vec(v)?;
        let detail = av
            .iter()
            .zip(v)
            .enumerate()
            .map(|(i, (lhs, vi))| Record::surpass(format!("v{}", i + 1), lhs, &(x * vi)))
            .collect();
        let inputs = Inputs::new()
            .matrix("A", a)
            .value("v", display_vec(v))
            .value("x", x);
        Ok(TheoremVerdict::from_records(ids::EIGENPAIR, inputs, detail))
    }

    /// If `(v, x)` is an eigenpair of `A`, then `(v, x^m)` is one of `A^m`.
    pub fn check_eigen_power(
        &self,
        a: &Matrix,
        v: &[Scalar],
        x: &Scalar,
        m: u32,
    ) -> Result<TheoremVerdict> {
        require_power(m)?;
        if !self.check_eigenpair(a, v, x)?.holds() {
            return Err(Error::Precondition(format!(
                "({}, {x}) is not an eigenpair of the matrix",
                display_vec(v)
            )));
        }
        let mut verdict = self.check_eigenpair(&a.pow(m), v, &x.pow(m))?;
        verdict.theorem = ids::EIGEN_POWER.into();
        if let Some(w) = &mut verdict.witness {
            w.inputs = Inputs::new()
                .matrix("A", a)
                .value("v", display_vec(v))
                .value("x", x)
                .value("m", m)
                .0;
        }
        Ok(verdict)
    }

    /// Coefficients `β_i` of `f_{A^m}` against `α_i^m` from `f_A`.
    fn power_coefficients(&self, a: &Matrix, m: u32) -> Result<Vec<(Scalar, Scalar)>> {
        require_power(m)?;
        let alpha = a.char_poly_with_bound(self.det_bound)?;
        let beta = a.pow(m).char_poly_with_bound(self.det_bound)?;
        Ok((0..=a.dim())
            .map(|i| (beta.coeff(i).clone(), alpha.coeff(i).pow(m)))
            .collect())
    }

    /// Every coefficient of the characteristic polynomial of `A^m`
    /// ghost-surpasses the `m`-th power of the matching coefficient of `f_A`.
    pub fn check_charpoly_power(&self, a: &Matrix, m: u32) -> Result<TheoremVerdict> {
        let detail = self
            .power_coefficients(a, m)?
            .iter()
            .enumerate()
            .map(|(i, (beta, alpha_m))| Record::surpass(format!("x^{i}"), beta, alpha_m))
            .collect();
        let inputs = Inputs::new().matrix("A", a).value("m", m);
        Ok(TheoremVerdict::from_records(
            ids::CHARPOLY_POWER,
            inputs,
            detail,
        ))
    }

    /// When every coefficient of `f_{A^m}` is tangible (or zero), each equals
    /// the `m`-th power of its counterpart exactly.
    pub fn check_tangible_equality(&self, a: &Matrix, m: u32) -> Result<TheoremVerdict> {
        let pairs = self.power_coefficients(a, m)?;
        let applicable = pairs.iter().all(|(beta, _)| !beta.is_ghost());
        let detail = pairs
            .iter()
            .enumerate()
            .map(|(i, (beta, alpha_m))| {
                let relation = if beta == alpha_m {
                    Relation::Equal
                } else if applicable {
                    Relation::Violation
                } else {
                    Relation::between(beta, alpha_m)
                };
                Record::new(format!("x^{i}"), beta, alpha_m, relation)
            })
            .collect();
        if !applicable {
            return Ok(TheoremVerdict::not_applicable(
                ids::TANGIBLE_EQUALITY,
                detail,
            ));
        }
        let inputs = Inputs::new().matrix("A", a).value("m", m);
        Ok(TheoremVerdict::from_records(
            ids::TANGIBLE_EQUALITY,
            inputs,
            detail,
        ))
    }

    /// Each corner root of `f_{A^m}` is the `m`-th power of a corner root of `f_A`.
    pub fn check_corner_root_power(&self, a: &Matrix, m: u32) -> Result<TheoremVerdict> {
        require_power(m)?;
        let base = a.char_poly_with_bound(self.det_bound)?.roots().corner_roots;
        let powered = a
            .pow(m)
            .char_poly_with_bound(self.det_bound)?
            .roots()
            .corner_roots;
        let detail = powered
            .iter()
            .map(|mu| {
                let source = base.iter().map(|l| l.root.pow(m)).find(|p| *p == mu.root);
                let index = format!("root {}", mu.root);
                match source {
                    Some(p) => Record::new(index, &mu.root, &p, Relation::Equal),
                    None => Record {
                        index,
                        lhs: mu.root.to_string(),
                        rhs: "no m-th power of a corner root".into(),
                        relation: Relation::Violation,
                    },
                }
            })
            .collect();
        let inputs = Inputs::new().matrix("A", a).value("m", m);
        Ok(TheoremVerdict::from_records(
            ids::CORNER_ROOT_POWER,
            inputs,
            detail,
        ))
    }

    /// `|AB|` ghost-surpasses `|A||B|` (equality when `|AB|` is tangible).
    pub fn check_det_rule(&self, a: &Matrix, b: &Matrix) -> Result<TheoremVerdict> {
        let ab = a.mul(b)?;
        let lhs = ab.det_with_bound(self.det_bound)?.value;
        let rhs =
            &a.det_with_bound(self.det_bound)?.value * &b.det_with_bound(self.det_bound)?.value;
        let detail = vec![Record::surpass("det", &lhs, &rhs)];
        let inputs = Inputs::new().matrix("A", a).matrix("B", b);
        Ok(TheoremVerdict::from_records(ids::DET_RULE, inputs, detail))
    }

    /// `tr(A^m)` ghost-surpasses `tr(A)^m`.
    pub fn check_trace_power(&self, a: &Matrix, m: u32) -> Result<TheoremVerdict> {
        require_power(m)?;
        let lhs = a.pow(m).trace();
        let rhs = a.trace().pow(m);
        let detail = vec![Record::surpass("trace", &lhs, &rhs)];
        let inputs = Inputs::new().matrix("A", a).value("m", m);
        Ok(TheoremVerdict::from_records(
            ids::TRACE_POWER,
            inputs,
            detail,
        ))
    }
}

/// `(a + b)^n = a^n + b^n` exactly.
pub fn check_frobenius(a: &Scalar, b: &Scalar, n: u32) -> Result<TheoremVerdict> {
    require_power(n)?;
    let lhs = (a + b).pow(n);
    let rhs = &a.pow(n) + &b.pow(n);
    let relation = if lhs == rhs {
        Relation::Equal
    } else {
        Relation::Violation
    };
    let detail = vec![Record::new("power", &lhs, &rhs, relation)];
    let inputs = Inputs::new().value("a", a).value("b", b).value("n", n);
    Ok(TheoremVerdict::from_records(ids::FROBENIUS, inputs, detail))
}

pub fn eigenvalues(a: &Matrix) -> Result<EigenReport> {
    Checker::default().eigenvalues(a)
}

pub fn check_eigenpair(a: &Matrix, v: &[Scalar], x: &Scalar) -> Result<TheoremVerdict> {
    Checker::default().check_eigenpair(a, v, x)
}

pub fn check_eigen_power(a: &Matrix, v: &[Scalar], x: &Scalar, m: u32) -> Result<TheoremVerdict> {
    Checker::default().check_eigen_power(a, v, x, m)
}

pub fn check_charpoly_power(a: &Matrix, m: u32) -> Result<TheoremVerdict> {
    Checker::default().check_charpoly_power(a, m)
}

pub fn check_tangible_equality(a: &Matrix, m: u32) -> Result<TheoremVerdict> {
    Checker::default().check_tangible_equality(a, m)
}

pub fn check_corner_root_power(a: &Matrix, m: u32) -> Result<TheoremVerdict> {
    Checker::default().check_corner_root_power(a, m)
}

pub fn check_det_rule(a: &Matrix, b: &Matrix) -> Result<TheoremVerdict> {
    Checker::default().check_det_rule(a, b)
}

pub fn check_trace_power(a: &Matrix, m: u32) -> Result<TheoremVerdict> {
    Checker::default().check_trace_power(a, m)
}

pub fn display_vec(v: &[Scalar]) -> String {
    let parts: Vec<String> = v.iter().map(Scalar::to_string).collect();
    format!("({})", parts.join(", "))
}
