//! End-to-end solution of a fuzzy system.

use serde::{Deserialize, Serialize};

use crate::aor::{aor_solve, relative_residual, AorParams};
use crate::classify::{classify, Verdict};
use crate::embedding::{build_embedding, Embedding};
use crate::error::{Error, Result};
use crate::fuzzy::{Affine, FuzzyNumber};
use crate::lu::{lu_factor_escalating, LuFactors};
use crate::matrix::CrispMatrix;
use crate::verify::{s_inverse_nonnegative, validate_solution, SolutionReport, INVERSE_TOL};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Method {
    #[serde(rename = "LU")]
    Lu,
    #[serde(rename = "LU_PIVOTED")]
    LuPivoted,
    #[serde(rename = "AOR")]
    Aor,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SolveTelemetry {
    pub method: Method,
    /// Sweeps used; for the iterative path, the larger of the intercept and
    /// slope solves. Zero for direct solves.
    pub iterations: usize,
    pub final_relative_residual: f64,
    pub converged: bool,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum SolveMethod {
    Lu,
    Aor(AorParams),
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SolveOptions {
    pub method: SolveMethod,
    /// Also test `S^-1 >= 0` (costs `2n` extra solves).
    pub check_inverse: bool,
    /// Solve even when `A` is not classified as an H-matrix.
    pub force: bool,
}

impl Default for SolveOptions {
    fn default() -> Self {
        SolveOptions {
            method: SolveMethod::Lu,
            check_inverse: false,
            force: false,
        }
    }
}

fn lu_method(f: &LuFactors) -> Method {
    if f.pivot_map.is_some() {
        Method::LuPivoted
    } else {
        Method::Lu
    }
}

/// The affine solution `(X_intercept, X_slope)` of `P S X = P Y`.
fn solve_permuted(
    e: &Embedding,
    method: &SolveMethod,
) -> Result<(Vec<f64>, Vec<f64>, SolveTelemetry)> {
    let p = &e.permutation;
    let rhs_int = p.apply(&e.rhs_intercepts());
    let rhs_slope = p.apply(&e.rhs_slopes());
    match method {
        SolveMethod::Lu => {
            let f = lu_factor_escalating(&e.permuted)?;
            let xi = f.solve(&rhs_int);
            let xs = f.solve(&rhs_slope);
            let tel = SolveTelemetry {
                method: lu_method(&f),
                iterations: 0,
                final_relative_residual: 0.0,
                converged: true,
            };
            Ok((xi, xs, tel))
        }
        SolveMethod::Aor(params) => {
            let x0 = vec![0.0; e.m()];
            let (xi, ti) = aor_solve(&e.permuted, &rhs_int, params, &x0)?;
            let (xs, ts) = aor_solve(&e.permuted, &rhs_slope, params, &x0)?;
            let tel = SolveTelemetry {
                method: Method::Aor,
                iterations: ti.iterations.max(ts.iterations),
                final_relative_residual: 0.0,
                converged: true,
            };
            Ok((xi, xs, tel))
        }
    }
}

/// Classifies `A`, embeds the system, solves `P S X = P Y` for the intercept
/// and slope parts of `Y`, and reports the reassembled fuzzy solution.
///
/// A solution that is not a fuzzy vector is still returned; see
/// [`SolutionReport::all_fuzzy`].
pub fn solve_fsle(
    a: &CrispMatrix,
    b: &[FuzzyNumber],
    opts: &SolveOptions,
) -> Result<SolutionReport> {
    let classification = classify(a);
    if classification.verdict == Verdict::None && !opts.force {
        return Err(Error::UnsupportedMatrixClass);
    }
    let e = build_embedding(a, b)?;
    let (xi, xs, mut telemetry) = solve_permuted(&e, &opts.method)?;

    // Residuals against the unpermuted system.
    let residual_intercept = relative_residual(&e.matrix, &xi, &e.rhs_intercepts());
    let residual_slope = relative_residual(&e.matrix, &xs, &e.rhs_slopes());
    telemetry.final_relative_residual = residual_intercept.max(residual_slope);

    let n = e.n;
    let solution: Vec<FuzzyNumber> = (0..n)
        .map(|i| FuzzyNumber {
            lower: Affine::new(xi[i], xs[i]),
            upper: Affine::new(xi[n + i], xs[n + i]),
        })
        .collect();
    let (all_fuzzy, per_component_validity) = validate_solution(&solution);
    let s_inverse_nonneg = if opts.check_inverse {
        Some(s_inverse_nonnegative(&e, INVERSE_TOL)?)
    } else {
        None
    };

    Ok(SolutionReport {
        classification,
        permutation_used: e.permutation.as_slice().to_vec(),
        solution,
        per_component_validity,
        all_fuzzy,
        s_inverse_nonneg,
        residual_intercept,
        residual_slope,
        telemetry,
    })
}
