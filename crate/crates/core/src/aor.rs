//! Accelerated overrelaxation.
//!
//! With the splitting `M = D - L - U` (diagonal, strictly lower, strictly
//! upper parts), one sweep computes
//!
//! ```text
//! x' = (D - g L)^-1 [ ((1 - w) D + (w - g) L + w U) x + w b ]
//! ```
//!
//! where `g` is the acceleration and `w` the relaxation parameter. `g = w`
//! gives SOR, `g = w = 1` Gauss-Seidel and `g = 0, w = 1` Jacobi.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::matrix::{vec_norm_inf, CrispMatrix};
use crate::solve::{Method, SolveTelemetry};

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct AorParams {
    pub gamma: f64,
    pub omega: f64,
    /// Target for `|b - M x|_inf / |b|_inf` (absolute when `b = 0`).
    pub tol: f64,
    pub max_iter: usize,
}

impl Default for AorParams {
    fn default() -> Self {
        AorParams {
            gamma: 1.0,
            omega: 1.0,
            tol: 1e-12,
            max_iter: 10_000,
        }
    }
}

impl AorParams {
    pub fn gauss_seidel() -> Self {
        Self::default()
    }

    pub fn jacobi() -> Self {
        AorParams {
            gamma: 0.0,
            ..Self::default()
        }
    }

    pub fn validate(&self) -> Result<()> {
        if !self.gamma.is_finite() || !self.omega.is_finite() {
            return Err(Error::InvalidParams(
                "gamma and omega must be finite".into(),
            ));
        }
        if self.omega == 0.0 {
            return Err(Error::InvalidParams("omega must be nonzero".into()));
        }
        #[allow(clippy::neg_cmp_op_on_partial_ord)]
        if !(self.tol > 0.0) {
            return Err(Error::InvalidParams(format!(
                "tol must be positive, got {}",
                self.tol
            )));
        }
        if self.max_iter == 0 {
            return Err(Error::InvalidParams("max_iter must be at least 1".into()));
        }
        Ok(())
    }
}

/// `|b - M x|_inf / |b|_inf`, or the absolute residual when `b = 0`.
pub fn relative_residual(m: &CrispMatrix, x: &[f64], rhs: &[f64]) -> f64 {
    let mx = m.mul_vec(x);
    let r = rhs
        .iter()
        .zip(&mx)
        .map(|(b, y)| (b - y).abs())
        .fold(0.0, f64::max);
    let scale = vec_norm_inf(rhs);
    if scale > 0.0 {
        r / scale
    } else {
        r
    }
}

fn sweep(m: &CrispMatrix, rhs: &[f64], p: &AorParams, x: &[f64], out: &mut [f64]) {
    let (g, w) = (p.gamma, p.omega);
    for i in 0..x.len() {
        let row = m.row(i);
        let d = row[i];
        let lower_old: f64 = row[..i].iter().zip(&x[..i]).map(|(a, v)| a * v).sum();
        let upper_old: f64 = row[i + 1..]
            .iter()
            .zip(&x[i + 1..])
            .map(|(a, v)| a * v)
            .sum();
        let lower_new: f64 = row[..i].iter().zip(&out[..i]).map(|(a, v)| a * v).sum();
        // L and U carry the negated off-diagonal entries of M.
        let c = (1.0 - w) * d * x[i] - (w - g) * lower_old - w * upper_old + w * rhs[i];
        out[i] = (c - g * lower_new) / d;
    }
}

/// Iterates from `x0` until the relative residual reaches `params.tol`.
///
/// Fails with [`Error::NotConverged`] (carrying the last iterate) when
/// `max_iter` sweeps are exhausted or the iterate stops being finite.
pub fn aor_solve(
    m: &CrispMatrix,
    rhs: &[f64],
    params: &AorParams,
    x0: &[f64],
) -> Result<(Vec<f64>, SolveTelemetry)> {
    params.validate()?;
    let n = m.n();
    for (what, len) in [("right-hand side", rhs.len()), ("initial guess", x0.len())] {
        if len != n {
            return Err(Error::DimensionMismatch {
                what,
                expected: n,
                found: len,
            });
        }
    }
    if let Some(row) = (0..n).find(|&i| m[(i, i)] == 0.0) {
        return Err(Error::ZeroDiagonal { row });
    }

    let mut x = x0.to_vec();
    let mut residual = relative_residual(m, &x, rhs);
    if residual <= params.tol {
        return Ok((x, telemetry(0, residual, true)));
    }
    let mut next = vec![0.0; n];
    for k in 1..=params.max_iter {
        sweep(m, rhs, params, &x, &mut next);
        std::mem::swap(&mut x, &mut next);
        residual = relative_residual(m, &x, rhs);
        if !residual.is_finite() {
            return Err(Error::NotConverged {
                iterations: k,
                residual,
                iterate: x,
            });
        }
        if residual <= params.tol {
            return Ok((x, telemetry(k, residual, true)));
        }
    }
    Err(Error::NotConverged {
        iterations: params.max_iter,
        residual,
        iterate: x,
    })
}

fn telemetry(iterations: usize, residual: f64, converged: bool) -> SolveTelemetry {
    SolveTelemetry {
        method: Method::Aor,
        iterations,
        final_relative_residual: residual,
        converged,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lu::{lu_factor, Pivoting};

    fn mat(rows: &[&[f64]]) -> CrispMatrix {
        CrispMatrix::from_rows(rows).unwrap()
    }

    #[test]
    fn identity_converges_in_one_sweep() {
        let id = CrispMatrix::identity(3);
        let rhs = [1.0, -2.0, 3.5];
        let (x, t) = aor_solve(&id, &rhs, &AorParams::gauss_seidel(), &[0.0; 3]).unwrap();
        assert_eq!(x, rhs.to_vec());
        assert_eq!(t.iterations, 1);
        assert!(t.converged);
    }

    #[test]
    fn jacobi_diverges_on_non_dominant_matrix() {
        let m = mat(&[&[1.0, 2.0], &[2.0, 1.0]]);
        let p = AorParams {
            max_iter: 500,
            ..AorParams::jacobi()
        };
        match aor_solve(&m, &[1.0, 1.0], &p, &[0.0, 0.0]) {
            Err(Error::NotConverged {
                iterations,
                iterate,
                ..
            }) => {
                assert!(iterations <= 500);
                assert_eq!(iterate.len(), 2);
            }
            other => panic!("expected divergence, got {other:?}"),
        }
    }

    #[test]
    fn family_members_agree_with_lu() {
        let m = mat(&[&[4.0, -1.0, 0.0], &[-1.0, 4.0, -1.0], &[0.0, -1.0, 4.0]]);
        let rhs = [2.0, 4.0, 10.0];
        let exact = lu_factor(&m, Pivoting::None).unwrap().solve(&rhs);
        for p in [
            AorParams::gauss_seidel(),
            AorParams::jacobi(),
            AorParams {
                gamma: 1.1,
                omega: 1.1,
                ..AorParams::default()
            },
            AorParams {
                gamma: 0.5,
                omega: 0.9,
                ..AorParams::default()
            },
        ] {
            let (x, t) = aor_solve(&m, &rhs, &p, &[0.0; 3]).unwrap();
            assert!(t.converged && t.final_relative_residual <= p.tol);
            for (a, b) in x.iter().zip(&exact) {
                assert!((a - b).abs() < 1e-8, "{p:?}: {a} vs {b}");
            }
        }
    }

    #[test]
    fn gauss_seidel_is_faster_than_jacobi() {
        let m = mat(&[&[4.0, -1.0, -1.0], &[-1.0, 4.0, -1.0], &[-1.0, -1.0, 4.0]]);
        let rhs = [1.0, 2.0, 3.0];
        let (_, gs) = aor_solve(&m, &rhs, &AorParams::gauss_seidel(), &[0.0; 3]).unwrap();
        let (_, j) = aor_solve(&m, &rhs, &AorParams::jacobi(), &[0.0; 3]).unwrap();
        assert!(gs.iterations < j.iterations);
    }

    #[test]
    fn rejects_bad_input() {
        let id = CrispMatrix::identity(2);
        let bad = AorParams {
            omega: 0.0,
            ..AorParams::default()
        };
        assert!(matches!(
            aor_solve(&id, &[1.0, 1.0], &bad, &[0.0; 2]),
            Err(Error::InvalidParams(_))
        ));
        let bad = AorParams {
            tol: 0.0,
            ..AorParams::default()
        };
        assert!(aor_solve(&id, &[1.0, 1.0], &bad, &[0.0; 2]).is_err());
        let z = mat(&[&[0.0, 1.0], &[1.0, 1.0]]);
        assert_eq!(
            aor_solve(&z, &[1.0, 1.0], &AorParams::default(), &[0.0; 2]).unwrap_err(),
            Error::ZeroDiagonal { row: 0 }
        );
    }

    #[test]
    fn zero_rhs_uses_absolute_residual() {
        let id = CrispMatrix::identity(2);
        let (x, t) = aor_solve(&id, &[0.0, 0.0], &AorParams::default(), &[0.0; 2]).unwrap();
        assert_eq!(x, vec![0.0, 0.0]);
        assert_eq!(t.iterations, 0);
    }
}
