//! Problem files.
//!
//! ```json
//! {
//!   "A": [[2, -1], [-1, 2]],
//!   "b": [{"trapezoidal": [1, 1, 1, 1]},
//!         {"parametric": {"lower": [0, 1], "upper": [2, -1]}}],
//!   "solver": {"method": "aor", "gamma": 1, "omega": 1, "tol": 1e-10, "max_iter": 10000},
//!   "flags": {"check_inverse": true, "dump_embedding": false}
//! }
//! ```
//!
//! `solver` and `flags` are optional. Unknown top-level keys are ignored, so
//! the output of `fsle embed` is itself a valid problem file.

use std::path::Path;

use serde::{Deserialize, Serialize};
use serde_json::Value;
use thiserror::Error;

use crate::aor::AorParams;
use crate::fuzzy::FuzzyNumber;
use crate::matrix::CrispMatrix;
use crate::solve::SolveMethod;

#[derive(Debug, Error)]
pub enum ParseError {
    #[error("cannot read {path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },

    #[error("malformed JSON at line {line}, column {column}: {message}")]
    Json {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("{field}: {message}")]
    Field { field: String, message: String },
}

fn field_err(field: impl Into<String>, message: impl Into<String>) -> ParseError {
    ParseError::Field {
        field: field.into(),
        message: message.into(),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum MethodName {
    Lu,
    Aor,
}

#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SolverBlock {
    pub method: Option<MethodName>,
    pub gamma: Option<f64>,
    pub omega: Option<f64>,
    pub tol: Option<f64>,
    pub max_iter: Option<usize>,
}

impl SolverBlock {
    /// Fields set in `other` take precedence.
    pub fn merged(self, other: SolverBlock) -> SolverBlock {
        SolverBlock {
            method: other.method.or(self.method),
            gamma: other.gamma.or(self.gamma),
            omega: other.omega.or(self.omega),
            tol: other.tol.or(self.tol),
            max_iter: other.max_iter.or(self.max_iter),
        }
    }

    pub fn to_method(&self) -> SolveMethod {
        match self.method.unwrap_or(MethodName::Lu) {
            MethodName::Lu => SolveMethod::Lu,
            MethodName::Aor => {
                let d = AorParams::default();
                SolveMethod::Aor(AorParams {
                    gamma: self.gamma.unwrap_or(d.gamma),
                    omega: self.omega.unwrap_or(d.omega),
                    tol: self.tol.unwrap_or(d.tol),
                    max_iter: self.max_iter.unwrap_or(d.max_iter),
                })
            }
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ProblemFlags {
    #[serde(default)]
    pub check_inverse: bool,
    #[serde(default)]
    pub dump_embedding: bool,
}

#[derive(Debug, Deserialize)]
struct RawProblem {
    #[serde(rename = "A")]
    a: Vec<Vec<Value>>,
    b: Vec<Value>,
    #[serde(default)]
    solver: Option<SolverBlock>,
    #[serde(default)]
    flags: Option<ProblemFlags>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Problem {
    pub a: CrispMatrix,
    pub b: Vec<FuzzyNumber>,
    pub solver: SolverBlock,
    pub flags: ProblemFlags,
}

impl Problem {
    pub fn from_json(text: &str) -> Result<Problem, ParseError> {
        let raw: RawProblem = serde_json::from_str(text).map_err(|e| ParseError::Json {
            line: e.line(),
            column: e.column(),
            message: e.to_string(),
        })?;

        let n = raw.a.len();
        if n == 0 {
            return Err(field_err("A", "matrix must have at least one row"));
        }
        let mut data = Vec::with_capacity(n * n);
        for (i, row) in raw.a.iter().enumerate() {
            if row.len() != n {
                return Err(field_err(
                    format!("A[{i}]"),
                    format!("expected {n} entries, found {}", row.len()),
                ));
            }
            for (j, v) in row.iter().enumerate() {
                match v.as_f64() {
                    Some(x) if x.is_finite() => data.push(x),
                    _ => {
                        return Err(field_err(
                            format!("A[{i}][{j}]"),
                            format!("expected a finite number, found {v}"),
                        ))
                    }
                }
            }
        }
        let a = CrispMatrix::from_row_major(n, data).map_err(|e| field_err("A", e.to_string()))?;

        if raw.b.len() != n {
            return Err(field_err(
                "b",
                format!("expected {n} fuzzy numbers, found {}", raw.b.len()),
            ));
        }
        let b = raw
            .b
            .into_iter()
            .enumerate()
            .map(|(i, v)| {
                serde_json::from_value::<FuzzyNumber>(v)
                    .map_err(|e| field_err(format!("b[{i}]"), e.to_string()))
            })
            .collect::<Result<Vec<_>, _>>()?;

        Ok(Problem {
            a,
            b,
            solver: raw.solver.unwrap_or_default(),
            flags: raw.flags.unwrap_or_default(),
        })
    }

    pub fn from_path(path: &Path) -> Result<Problem, ParseError> {
        let text = std::fs::read_to_string(path).map_err(|source| ParseError::Io {
            path: path.display().to_string(),
            source,
        })?;
        Problem::from_json(&text)
    }
}
