//! Certificates for computed solutions.

use serde::{Deserialize, Serialize};

use crate::classify::Classification;
use crate::embedding::{build_embedding, Embedding};
use crate::error::{Error, Result};
use crate::fuzzy::{FuzzyNumber, Validity};
use crate::lu::{lu_factor, lu_factor_escalating, Pivoting};
use crate::matrix::{vec_norm_inf, CrispMatrix};
use crate::solve::SolveTelemetry;

/// Relative tolerance for the sign test on columns of `S^-1`.
pub const INVERSE_TOL: f64 = 1e-10;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SolutionReport {
    pub classification: Classification,
    pub permutation_used: Vec<usize>,
    /// Possibly invalid ("raw") fuzzy numbers.
    pub solution: Vec<FuzzyNumber>,
    pub per_component_validity: Vec<Validity>,
    pub all_fuzzy: bool,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub s_inverse_nonneg: Option<bool>,
    pub residual_intercept: f64,
    pub residual_slope: f64,
    pub telemetry: SolveTelemetry,
}

impl SolutionReport {
    /// `all_fuzzy` agrees with the per-component verdicts.
    pub fn is_consistent(&self) -> bool {
        self.all_fuzzy == self.per_component_validity.iter().all(|v| v.valid)
            && self.per_component_validity.len() == self.solution.len()
    }
}

/// Columns of `S^-1`, one solve per unit vector against one factorization.
pub fn s_inverse(e: &Embedding) -> Result<CrispMatrix> {
    let f = lu_factor_escalating(&e.matrix)?;
    let m = e.m();
    let mut inv = CrispMatrix::zeros(m);
    let mut unit = vec![0.0; m];
    for j in 0..m {
        unit[j] = 1.0;
        let col = f.solve(&unit);
        unit[j] = 0.0;
        for (i, v) in col.into_iter().enumerate() {
            inv[(i, j)] = v;
        }
    }
    Ok(inv)
}

/// True iff every column `z` of `S^-1` has entries `>= -tol * |z|_inf`.
pub fn s_inverse_nonnegative(e: &Embedding, tol: f64) -> Result<bool> {
    let inv = s_inverse(e)?.transpose();
    Ok((0..e.m()).all(|j| {
        let col = inv.row(j);
        let floor = -tol * vec_norm_inf(col);
        col.iter().all(|&v| v >= floor)
    }))
}

/// Per-component validity and their conjunction.
pub fn validate_solution(x: &[FuzzyNumber]) -> (bool, Vec<Validity>) {
    let details: Vec<Validity> = x.iter().map(FuzzyNumber::validity).collect();
    (details.iter().all(|v| v.valid), details)
}

/// Nonsingularity verdict from partially pivoted LU.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Nonsingularity {
    pub nonsingular: bool,
    /// Smallest pivot magnitude reached; on failure, the rejected pivot.
    pub smallest_pivot: f64,
    pub pivot_floor: f64,
}

impl Nonsingularity {
    pub fn of(m: &CrispMatrix) -> Self {
        match lu_factor(m, Pivoting::Partial) {
            Ok(f) => Nonsingularity {
                nonsingular: true,
                smallest_pivot: f.min_pivot,
                pivot_floor: f.pivot_floor,
            },
            Err(Error::SingularOrTinyPivot {
                magnitude, floor, ..
            }) => Nonsingularity {
                nonsingular: false,
                smallest_pivot: magnitude,
                pivot_floor: floor,
            },
            Err(e) => unreachable!("pivoted LU only fails on tiny pivots: {e}"),
        }
    }

    /// Smallest pivot within a factor `factor` of the floor (either side).
    pub fn near_floor(&self, factor: f64) -> bool {
        self.smallest_pivot <= factor * self.pivot_floor
            && self.smallest_pivot >= self.pivot_floor / factor
    }
}

/// Nonsingularity of the embedded matrix `S`, of `A = S1 + S2` and of
/// `S1 - S2 = |A|`, each decided independently.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct BlockNonsingularity {
    pub s: Nonsingularity,
    pub a: Nonsingularity,
    pub abs_a: Nonsingularity,
}

impl BlockNonsingularity {
    pub fn s_nonsingular(&self) -> bool {
        self.s.nonsingular
    }

    pub fn a_nonsingular(&self) -> bool {
        self.a.nonsingular
    }

    pub fn abs_a_nonsingular(&self) -> bool {
        self.abs_a.nonsingular
    }

    /// `S` nonsingular iff both `A` and `|A|` are.
    pub fn equivalence_holds(&self) -> bool {
        self.s_nonsingular() == (self.a_nonsingular() && self.abs_a_nonsingular())
    }

    pub fn near_floor(&self, factor: f64) -> bool {
        [self.s, self.a, self.abs_a]
            .iter()
            .any(|c| c.near_floor(factor))
    }
}

pub fn check_block_nonsingularity(a: &CrispMatrix) -> BlockNonsingularity {
    let zero_rhs = vec![FuzzyNumber::crisp(0.0); a.n()];
    let e = build_embedding(a, &zero_rhs).expect("crisp zero right-hand side is valid");
    let s = Nonsingularity::of(&e.matrix);
    let a_check = Nonsingularity::of(&e.coefficient_matrix());
    let abs_a = Nonsingularity::of(&e.abs_difference());
    BlockNonsingularity {
        s,
        a: a_check,
        abs_a,
    }
}
