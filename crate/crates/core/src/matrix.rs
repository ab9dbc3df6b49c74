//! Dense square supertropical matrices.
//!
//! The determinant is the permanent: the supertropical sum of every
//! permutation track product. It is computed by exhaustive enumeration so that
//! *all* dominant tracks are known, which is what decides whether the value is
//! tangible or ghost.

use std::fmt;
use std::str::FromStr;

use itertools::Itertools;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::polynomial::Polynomial;
use crate::scalar::Scalar;

/// Largest dimension for which permutation enumeration is attempted by default.
pub const DEFAULT_DET_BOUND: usize = 9;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Matrix {
    n: usize,
    entries: Vec<Scalar>,
}

impl Matrix {
    /// Build from rows. Fails unless the rows form a non-empty square.
    pub fn from_rows(rows: Vec<Vec<Scalar>>) -> Result<Matrix> {
        let n = rows.len();
        if n == 0 {
            return Err(Error::DimensionMismatch("matrix has no rows".into()));
        }
        if let Some((i, row)) = rows.iter().enumerate().find(|(_, r)| r.len() != n) {
            return Err(Error::DimensionMismatch(format!(
                "row {} has {} entries, expected {n}",
                i + 1,
                row.len()
            )));
        }
        Ok(Matrix {
            n,
            entries: rows.into_iter().flatten().collect(),
        })
    }

    /// Tangible integer entries; convenient in tests and examples.
    pub fn from_tangibles(rows: &[&[i64]]) -> Result<Matrix> {
        Matrix::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&v| Scalar::tangible(v)).collect())
                .collect(),
        )
    }

    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize) -> Scalar) -> Matrix {
        assert!(n > 0, "matrices are at least 1x1");
        let entries = (0..n)
            .flat_map(|i| (0..n).map(move |j| (i, j)))
            .map(|(i, j)| f(i, j))
            .collect();
        Matrix { n, entries }
    }

    /// Unit on the diagonal, zero elsewhere.
    pub fn identity(n: usize) -> Matrix {
        Matrix::from_fn(n, |i, j| if i == j { Scalar::one() } else { Scalar::Zero })
    }

    pub fn diagonal(values: Vec<Scalar>) -> Matrix {
        let n = values.len();
        Matrix::from_fn(n, |i, j| {
            if i == j {
                values[i].clone()
            } else {
                Scalar::Zero
            }
        })
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    /// Entry at 0-based `(i, j)`.
    pub fn get(&self, i: usize, j: usize) -> &Scalar {
        &self.entries[i * self.n + j]
    }

    pub fn rows(&self) -> impl Iterator<Item = &[Scalar]> {
        self.entries.chunks(self.n)
    }

    pub fn entries(&self) -> &[Scalar] {
        &self.entries
    }

    fn check_same_dim(&self, other: &Matrix) -> Result<()> {
        if self.n != other.n {
            return Err(Error::DimensionMismatch(format!(
                "{0}x{0} against {1}x{1}",
                self.n, other.n
            )));
        }
        Ok(())
    }

    pub fn mul(&self, other: &Matrix) -> Result<Matrix> {
        self.check_same_dim(other)?;
        let n = self.n;
        Ok(Matrix::from_fn(n, |i, j| {
            (0..n).fold(Scalar::Zero, |acc, t| {
                &acc + &(self.get(i, t) * other.get(t, j))
            })
        }))
    }

    /// `self^m` by iterated multiplication; `m = 0` gives the identity.
    pub fn pow(&self, m: u32) -> Matrix {
        if m == 0 {
            return Matrix::identity(self.n);
        }
        let mut acc = self.clone();
        for _ in 1..m {
            acc = acc.mul(self).expect("same dimension");
        }
        acc
    }

    pub fn mul_vec(&self, v: &[Scalar]) -> Result<Vec<Scalar>> {
        if v.len() != self.n {
            return Err(Error::DimensionMismatch(format!(
                "vector of length {} against {1}x{1} matrix",
                v.len(),
                self.n
            )));
        }
        Ok(self
            .rows()
            .map(|row| {
                row.iter()
                    .zip(v)
                    .fold(Scalar::Zero, |acc, (a, x)| &acc + &(a * x))
            })
            .collect())
    }

    /// Permutation tracks of every permutation, in lexicographic order.
    pub fn tracks(&self) -> impl Iterator<Item = PermutationTrack> + '_ {
        (0..self.n).permutations(self.n).map(|perm| {
            let product = Scalar::product(perm.iter().enumerate().map(|(i, &j)| self.get(i, j)));
            PermutationTrack { perm, product }
        })
    }

    /// Determinant with the default enumeration bound.
    pub fn det(&self) -> Result<DetReport> {
        self.det_with_bound(DEFAULT_DET_BOUND)
    }

    /// Fails with `BoundExceeded` when the dimension is above `bound`.
    pub fn check_bound(&self, bound: usize) -> Result<()> {
        if self.n > bound {
            return Err(Error::BoundExceeded {
                dimension: self.n,
                bound,
            });
        }
        Ok(())
    }

    pub fn det_with_bound(&self, bound: usize) -> Result<DetReport> {
        self.check_bound(bound)?;
        let mut value = Scalar::Zero;
        let mut dominant: Vec<PermutationTrack> = Vec::new();
        for track in self.tracks() {
            value = &value + &track.product;
            if track.product.is_zero() {
                continue;
            }
            match dominant.first().map(|d| track.product.cmp_nu(&d.product)) {
                None | Some(std::cmp::Ordering::Greater) => dominant = vec![track],
                Some(std::cmp::Ordering::Equal) => dominant.push(track),
                Some(std::cmp::Ordering::Less) => {}
            }
        }
        let classification = match (dominant.len(), &value) {
            (_, Scalar::Zero) => DetClass::Zero,
            (1, Scalar::Tangible(_)) => DetClass::Tangible,
            (1, _) => DetClass::GhostByGhostTrack,
            _ => DetClass::GhostByTie,
        };
        Ok(DetReport {
            value,
            dominant_tracks: dominant,
            classification,
        })
    }

    /// Submatrix on the rows and columns listed in `indices` (0-based, order kept).
    pub fn principal_minor(&self, indices: &[usize]) -> Result<Matrix> {
        if indices.is_empty() {
            return Err(Error::InvalidArgument(
                "principal minor of an empty index set".into(),
            ));
        }
        if let Some(&bad) = indices.iter().find(|&&i| i >= self.n) {
            return Err(Error::InvalidArgument(format!(
                "index {} out of range for dimension {}",
                bad + 1,
                self.n
            )));
        }
        Ok(Matrix::from_fn(indices.len(), |a, b| {
            self.get(indices[a], indices[b]).clone()
        }))
    }

    pub fn trace(&self) -> Scalar {
        Scalar::sum((0..self.n).map(|i| self.get(i, i)))
    }

    /// Characteristic polynomial `|xI + A|` with the default bound.
    pub fn char_poly(&self) -> Result<Polynomial> {
        self.char_poly_with_bound(DEFAULT_DET_BOUND)
    }

    /// The coefficient of `x^(n-k)` is the sum of the determinants of all
    /// `k×k` principal minors.
    pub fn char_poly_with_bound(&self, bound: usize) -> Result<Polynomial> {
        self.check_bound(bound)?;
        let n = self.n;
        let mut coeffs = vec![Scalar::Zero; n + 1];
        coeffs[n] = Scalar::one();
        for k in 1..=n {
            let mut sum = Scalar::Zero;
            for subset in (0..n).combinations(k) {
                let minor = self.principal_minor(&subset)?;
                sum = &sum + &minor.det_with_bound(bound)?.value;
            }
            coeffs[n - k] = sum;
        }
        Ok(Polynomial::new(coeffs))
    }

    /// Entrywise ghost surpassing.
    pub fn surpasses(&self, other: &Matrix) -> Result<bool> {
        self.check_same_dim(other)?;
        Ok(self
            .entries
            .iter()
            .zip(&other.entries)
            .all(|(a, b)| a.surpasses(b)))
    }

    /// Parse either the JSON form or the plain whitespace-separated form.
    pub fn parse_any(text: &str) -> Result<Matrix> {
        if text.trim_start().starts_with('{') {
            Matrix::from_json(text)
        } else {
            text.parse()
        }
    }

    pub fn from_json(text: &str) -> Result<Matrix> {
        let doc: MatrixJson = serde_json::from_str(text)
            .map_err(|e| Error::parse(e.line(), e.column(), e.to_string()))?;
        let matrix = Matrix::from_rows(doc.rows)?;
        if matrix.n != doc.n {
            return Err(Error::DimensionMismatch(format!(
                "declared n = {} but found {} rows",
                doc.n, matrix.n
            )));
        }
        Ok(matrix)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&MatrixJson {
            n: self.n,
            rows: self.rows().map(<[Scalar]>::to_vec).collect(),
        })
        .expect("matrix serializes")
    }
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct MatrixJson {
    n: usize,
    rows: Vec<Vec<Scalar>>,
}

impl Serialize for Matrix {
    fn serialize<S: serde::Serializer>(
        &self,
        serializer: S,
    ) -> std::result::Result<S::Ok, S::Error> {
        MatrixJson {
            n: self.n,
            rows: self.rows().map(<[Scalar]>::to_vec).collect(),
        }
        .serialize(serializer)
    }
}

/// Plain text: one row per line, entries separated by whitespace.
impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in self.rows() {
            writeln!(f, "{}", row.iter().join(" "))?;
        }
        Ok(())
    }
}

impl FromStr for Matrix {
    type Err = Error;

    fn from_str(text: &str) -> Result<Matrix> {
        let mut rows = Vec::new();
        for (line_no, line) in text.lines().enumerate() {
            let line_no = line_no + 1;
            if line.trim().is_empty() {
                continue;
            }
            let mut row = Vec::new();
            let mut rest = line;
            let mut column = 0;
            while let Some(start) = rest.find(|c: char| !c.is_whitespace()) {
                let token_len = rest[start..]
                    .find(char::is_whitespace)
                    .unwrap_or(rest.len() - start);
                let token = &rest[start..start + token_len];
                let scalar = token
                    .parse::<Scalar>()
                    .map_err(|e| e.relocate(line_no, column + start))?;
                row.push(scalar);
                column += start + token_len;
                rest = &rest[start + token_len..];
            }
            rows.push((line_no, row));
        }
        let n = rows.len();
        if let Some((line_no, row)) = rows.iter().find(|(_, r)| r.len() != n) {
            return Err(Error::parse(
                *line_no,
                1,
                format!("row has {} entries but the matrix has {n} rows", row.len()),
            ));
        }
        Matrix::from_rows(rows.into_iter().map(|(_, r)| r).collect())
    }
}

/// A permutation together with the product of the entries it selects.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PermutationTrack {
    /// 0-based images: row `i` uses column `perm[i]`.
    pub perm: Vec<usize>,
    pub product: Scalar,
}

impl PermutationTrack {
    /// `(row, column)` pairs, 1-based.
    pub fn entries(&self) -> Vec<(usize, usize)> {
        self.perm
            .iter()
            .enumerate()
            .map(|(i, &j)| (i + 1, j + 1))
            .collect()
    }

    pub fn is_identity(&self) -> bool {
        self.perm.iter().enumerate().all(|(i, &j)| i == j)
    }

    pub fn is_anti_identity(&self) -> bool {
        let n = self.perm.len();
        self.perm.iter().enumerate().all(|(i, &j)| j == n - 1 - i)
    }

    /// `Id`, `-Id`, or the 1-based image list such as `[2 3 1]`.
    pub fn label(&self) -> String {
        if self.is_identity() {
            "Id".into()
        } else if self.is_anti_identity() {
            "-Id".into()
        } else {
            format!("[{}]", self.perm.iter().map(|j| j + 1).join(" "))
        }
    }
}

impl Serialize for PermutationTrack {
    fn serialize<S: serde::Serializer>(
        &self,
        serializer: S,
    ) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Repr<'a> {
            label: String,
            perm: Vec<usize>,
            product: &'a Scalar,
        }
        Repr {
            label: self.label(),
            perm: self.perm.iter().map(|j| j + 1).collect(),
            product: &self.product,
        }
        .serialize(serializer)
    }
}

/// Why a determinant came out the way it did.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum DetClass {
    /// A single tangible track dominates.
    Tangible,
    /// Two or more tracks attain the maximum.
    GhostByTie,
    /// A single ghost track dominates.
    GhostByGhostTrack,
    /// Every track contains a zero entry.
    Zero,
}

impl fmt::Display for DetClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            DetClass::Tangible => "tangible",
            DetClass::GhostByTie => "ghost by tie",
            DetClass::GhostByGhostTrack => "ghost by ghost track",
            DetClass::Zero => "zero",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DetReport {
    pub value: Scalar,
    /// Every track attaining the maximal ν-value, in lexicographic order.
    pub dominant_tracks: Vec<PermutationTrack>,
    pub classification: DetClass,
}

impl fmt::Display for DetReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} ({})", self.value, self.classification)?;
        if !self.dominant_tracks.is_empty() {
            let labels = self
                .dominant_tracks
                .iter()
                .map(PermutationTrack::label)
                .join(", ");
            write!(f, ", dominant: {labels}")?;
        }
        Ok(())
    }
}
