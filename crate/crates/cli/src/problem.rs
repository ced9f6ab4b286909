//! The canonical problem-file format.
//!
//! A problem file is a JSON document with the sections `algebra`
//! (required), `representation`, `operator`, `deformation`, and
//! `wedge_element` (all optional). Rationals are strings `"p/q"` or integer
//! strings; indices are 1-based in files and 0-based internally. Bracket
//! entries are given for `i < j` only — the skew part is implied — and
//! omitted entries are zero.

use lie_yamaguti::algebra::{adjoint_representation, LyAlgebra, Representation};
use lie_yamaguti::linalg::Mat;
use lie_yamaguti::scalar::{fmt_rat, Rat};
use lie_yamaguti::wedge::{wedge_dim, WedgeBasis};
use num_bigint::BigInt;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ProblemFile {
    pub algebra: AlgebraSection,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub representation: Option<RepresentationSection>,
    /// `n × m` matrix of rationals, rows over the algebra basis.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub operator: Option<Vec<Vec<String>>>,
    /// Deformation coefficients `T_1, …, T_n` (the base operator is the
    /// `operator` section).
    #[serde(skip_serializing_if = "Option::is_none")]
    pub deformation: Option<Vec<Vec<Vec<String>>>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub wedge_element: Option<Vec<WedgeEntry>>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct AlgebraSection {
    pub dimension: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub basis: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub binary: Vec<BinaryEntry>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub ternary: Vec<TernaryEntry>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct BinaryEntry {
    pub i: usize,
    pub j: usize,
    pub value: Vec<String>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct TernaryEntry {
    pub i: usize,
    pub j: usize,
    pub k: usize,
    pub value: Vec<String>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct RepresentationSection {
    pub module_dim: usize,
    /// One `m × m` matrix per algebra basis vector.
    pub rho: Vec<Vec<Vec<String>>>,
    /// An `n × n` grid of `m × m` matrices.
    pub mu: Vec<Vec<Vec<Vec<String>>>>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct WedgeEntry {
    pub i: usize,
    pub j: usize,
    pub coeff: String,
}

/// Input-layer error: anything wrong with the file itself.
#[derive(Debug)]
pub struct InputError(pub String);

impl std::fmt::Display for InputError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl std::error::Error for InputError {}

pub fn parse_rat(s: &str) -> Result<Rat, InputError> {
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s.trim(), "1"),
    };
    let n: BigInt = num
        .parse()
        .map_err(|_| InputError(format!("invalid rational {s:?}")))?;
    let d: BigInt = den
        .parse()
        .map_err(|_| InputError(format!("invalid rational {s:?}")))?;
    if d.is_zero() {
        return Err(InputError(format!("zero denominator in rational {s:?}")));
    }
    Ok(Rat::new(n, d))
}

fn parse_vec(v: &[String], len: usize, what: &str) -> Result<Vec<Rat>, InputError> {
    if v.len() != len {
        return Err(InputError(format!(
            "{what}: expected {len} coordinates, found {}",
            v.len()
        )));
    }
    v.iter().map(|s| parse_rat(s)).collect()
}

pub fn parse_matrix(
    rows: &[Vec<String>],
    r: usize,
    c: usize,
    what: &str,
) -> Result<Mat, InputError> {
    if rows.len() != r || rows.iter().any(|row| row.len() != c) {
        return Err(InputError(format!("{what}: expected a {r}x{c} matrix")));
    }
    let mut m = Mat::zero(r, c);
    for (i, row) in rows.iter().enumerate() {
        for (j, s) in row.iter().enumerate() {
            m.set(i, j, parse_rat(s)?);
        }
    }
    Ok(m)
}

impl ProblemFile {
    pub fn from_json(text: &str) -> Result<Self, InputError> {
        serde_json::from_str(text).map_err(|e| InputError(format!("parse error: {e}")))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("problem files serialize")
    }

    pub fn algebra(&self) -> Result<LyAlgebra, InputError> {
        let n = self.algebra.dimension;
        let mut binary = Vec::new();
        for (pos, e) in self.algebra.binary.iter().enumerate() {
            if e.i == 0 || e.j == 0 || e.i > n || e.j > n {
                return Err(InputError(format!(
                    "binary entry {pos}: indices are 1-based and at most {n}"
                )));
            }
            if e.i >= e.j {
                return Err(InputError(format!(
                    "binary entry {pos}: requires i < j (the skew part is implied)"
                )));
            }
            binary.push((e.i - 1, e.j - 1, parse_vec(&e.value, n, "binary value")?));
        }
        let mut ternary = Vec::new();
        for (pos, e) in self.algebra.ternary.iter().enumerate() {
            if e.i == 0 || e.j == 0 || e.k == 0 || e.i > n || e.j > n || e.k > n {
                return Err(InputError(format!(
                    "ternary entry {pos}: indices are 1-based and at most {n}"
                )));
            }
            if e.i >= e.j {
                return Err(InputError(format!(
                    "ternary entry {pos}: requires i < j (the skew part is implied)"
                )));
            }
            ternary.push((
                e.i - 1,
                e.j - 1,
                e.k - 1,
                parse_vec(&e.value, n, "ternary value")?,
            ));
        }
        LyAlgebra::from_brackets(n, &binary, &ternary)
            .map_err(|e| InputError(format!("algebra section: {e}")))
    }

    /// The representation section, or the adjoint when `use_adjoint` is set.
    pub fn representation(
        &self,
        alg: &LyAlgebra,
        use_adjoint: bool,
    ) -> Result<Representation, InputError> {
        if use_adjoint {
            return Ok(adjoint_representation(alg));
        }
        let Some(sec) = &self.representation else {
            return Err(InputError(
                "missing representation section (or pass --adjoint)".into(),
            ));
        };
        let n = alg.dim;
        let m = sec.module_dim;
        if sec.rho.len() != n {
            return Err(InputError(format!("rho: expected {n} matrices")));
        }
        if sec.mu.len() != n || sec.mu.iter().any(|row| row.len() != n) {
            return Err(InputError(format!(
                "mu: expected an {n}x{n} grid of matrices"
            )));
        }
        let rho = sec
            .rho
            .iter()
            .map(|rows| parse_matrix(rows, m, m, "rho matrix"))
            .collect::<Result<Vec<_>, _>>()?;
        let mut mu = Vec::with_capacity(n * n);
        for row in &sec.mu {
            for entry in row {
                mu.push(parse_matrix(entry, m, m, "mu matrix")?);
            }
        }
        Representation::new(alg, m, rho, mu).map_err(|e| InputError(format!("representation: {e}")))
    }

    pub fn operator(&self, n: usize, m: usize) -> Result<Mat, InputError> {
        let Some(rows) = &self.operator else {
            return Err(InputError("missing operator section".into()));
        };
        parse_matrix(rows, n, m, "operator")
    }

    pub fn deformation(&self, n: usize, m: usize) -> Result<Vec<Mat>, InputError> {
        let Some(mats) = &self.deformation else {
            return Err(InputError("missing deformation section".into()));
        };
        mats.iter()
            .enumerate()
            .map(|(k, rows)| {
                parse_matrix(rows, n, m, &format!("deformation coefficient {}", k + 1))
            })
            .collect()
    }

    /// Wedge element over the algebra's wedge basis.
    pub fn wedge_element(&self, n: usize) -> Result<Vec<Rat>, InputError> {
        let Some(entries) = &self.wedge_element else {
            return Err(InputError("missing wedge_element section".into()));
        };
        let w = WedgeBasis::new(n);
        let mut out = vec![Rat::zero(); wedge_dim(n)];
        for (pos, e) in entries.iter().enumerate() {
            if e.i == 0 || e.j == 0 || e.i > n || e.j > n || e.i >= e.j {
                return Err(InputError(format!(
                    "wedge entry {pos}: requires 1-based indices with i < j <= {n}"
                )));
            }
            out[w.index_of(e.i - 1, e.j - 1)] = parse_rat(&e.coeff)?;
        }
        Ok(out)
    }
}

/// Re-serializes an algebra into the canonical sparse form (entries for
/// `i < j` with nonzero values only).
pub fn algebra_to_section(alg: &LyAlgebra) -> AlgebraSection {
    let n = alg.dim;
    let mut binary = Vec::new();
    let mut ternary = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            let v = alg.binary_at(i, j);
            if !v.iter().all(Zero::is_zero) {
                binary.push(BinaryEntry {
                    i: i + 1,
                    j: j + 1,
                    value: v.iter().map(fmt_rat).collect(),
                });
            }
            for k in 0..n {
                let v = alg.ternary_at(i, j, k);
                if !v.iter().all(Zero::is_zero) {
                    ternary.push(TernaryEntry {
                        i: i + 1,
                        j: j + 1,
                        k: k + 1,
                        value: v.iter().map(fmt_rat).collect(),
                    });
                }
            }
        }
    }
    AlgebraSection {
        dimension: n,
        basis: None,
        binary,
        ternary,
    }
}
