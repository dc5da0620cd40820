//! Fuzzy systems of linear equations `Ax = b` with a crisp coefficient matrix
//! and a fuzzy right-hand side.
//!
//! The system is lifted to the `2n x 2n` crisp system `S X = Y`, where `S` is
//! assembled from the positive and nonpositive parts of `A`. When `A` is an
//! H-matrix, a row permutation `P` built from the zero pattern of `diag(S)`
//! makes `PS` an H-matrix as well, so `PS X = PY` can be solved by LU without
//! pivoting. The computed solution is then checked for being a genuine fuzzy
//! vector.
//!
//! Module map:
//!
//! - [`fuzzy`]: parametric and trapezoidal fuzzy numbers and their arithmetic.
//! - [`matrix`]: the dense square [`CrispMatrix`].
//! - [`classify`]: SDD / M-matrix / H-matrix tests and positive scaling witnesses.
//! - [`embedding`]: the block embedding and its row permutation.
//! - [`lu`], [`aor`], [`solve`]: direct and stationary solvers and the full pipeline.
//! - [`verify`]: inverse-nonnegativity, block nonsingularity and solution reports.
//! - [`problem`], [`cli`]: problem files and the command-line front end.

pub mod aor;
pub mod classify;
pub mod cli;
pub mod embedding;
pub mod error;
pub mod fuzzy;
pub mod lu;
pub mod matrix;
pub mod permutation;
pub mod problem;
pub mod solve;
pub mod verify;

pub use aor::{aor_solve, AorParams};
pub use classify::{classify, ClassFlags, Classification, Verdict};
pub use embedding::{build_embedding, build_permutation, extend_witness, Embedding};
pub use error::{Error, Result};
pub use fuzzy::{Affine, FuzzyNumber, Requirement, Trapezoid, Validity};
pub use lu::{lu_factor, lu_solve, LuFactors, Pivoting};
pub use matrix::CrispMatrix;
pub use permutation::Permutation;
pub use solve::{solve_fsle, Method, SolveMethod, SolveOptions, SolveTelemetry};
pub use verify::{
    check_block_nonsingularity, s_inverse_nonnegative, validate_solution, BlockNonsingularity,
    SolutionReport,
};
