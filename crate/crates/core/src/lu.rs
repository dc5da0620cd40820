//! Dense LU factorization, optionally with partial pivoting.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::matrix::CrispMatrix;
use crate::permutation::Permutation;

/// Pivots with `|p| <= PIVOT_FLOOR_REL * |M|_inf` count as zero.
pub const PIVOT_FLOOR_REL: f64 = 1e-13;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Pivoting {
    None,
    Partial,
}

/// `L U = P M` with `L` unit lower triangular and `U` upper triangular.
///
/// `pivot_map` is present only when factored with [`Pivoting::Partial`].
#[derive(Debug, Clone, PartialEq)]
pub struct LuFactors {
    pub l: CrispMatrix,
    pub u: CrispMatrix,
    pub pivot_map: Option<Permutation>,
    /// Smallest `|u_kk|`.
    pub min_pivot: f64,
    pub pivot_floor: f64,
}

pub fn pivot_floor(m: &CrispMatrix) -> f64 {
    PIVOT_FLOOR_REL * m.norm_inf()
}

/// Doolittle elimination. Fails at the first column whose pivot is at or
/// below the floor.
pub fn lu_factor(m: &CrispMatrix, pivoting: Pivoting) -> Result<LuFactors> {
    let n = m.n();
    let floor = pivot_floor(m);
    let mut u = m.clone();
    let mut l = CrispMatrix::identity(n);
    let mut perm = Permutation::identity(n);
    let mut min_pivot = f64::INFINITY;

    for k in 0..n {
        if pivoting == Pivoting::Partial {
            let p = (k..n)
                .max_by(|&a, &b| u[(a, k)].abs().total_cmp(&u[(b, k)].abs()))
                .unwrap_or(k);
            if p != k {
                u.swap_rows(k, p);
                perm.swap(k, p);
                for j in 0..k {
                    let t = l[(k, j)];
                    l[(k, j)] = l[(p, j)];
                    l[(p, j)] = t;
                }
            }
        }

        let pivot = u[(k, k)];
        // Negated so that a NaN pivot is rejected too.
        #[allow(clippy::neg_cmp_op_on_partial_ord)]
        if !(pivot.abs() > floor) {
            return Err(Error::SingularOrTinyPivot {
                column: k,
                magnitude: pivot.abs(),
                floor,
            });
        }
        min_pivot = min_pivot.min(pivot.abs());

        for i in k + 1..n {
            let factor = u[(i, k)] / pivot;
            if factor == 0.0 {
                continue;
            }
            l[(i, k)] = factor;
            u[(i, k)] = 0.0;
            for j in k + 1..n {
                let ukj = u[(k, j)];
                u[(i, j)] -= factor * ukj;
            }
        }
    }

    Ok(LuFactors {
        l,
        u,
        pivot_map: (pivoting == Pivoting::Partial).then_some(perm),
        min_pivot,
        pivot_floor: floor,
    })
}

/// Tries without pivoting first, then with partial pivoting.
pub fn lu_factor_escalating(m: &CrispMatrix) -> Result<LuFactors> {
    lu_factor(m, Pivoting::None).or_else(|_| lu_factor(m, Pivoting::Partial))
}

impl LuFactors {
    pub fn dim(&self) -> usize {
        self.l.n()
    }

    /// `L U`, which equals the (row-pivoted) input matrix.
    pub fn reconstruct(&self) -> CrispMatrix {
        self.l.matmul(&self.u)
    }

    pub fn solve(&self, rhs: &[f64]) -> Vec<f64> {
        let n = self.dim();
        assert_eq!(rhs.len(), n, "rhs length must match factor dimension");
        let mut x = match &self.pivot_map {
            Some(p) => p.apply(rhs),
            None => rhs.to_vec(),
        };
        forward_substitute_unit(&self.l, &mut x);
        back_substitute(&self.u, &mut x);
        x
    }
}

pub fn lu_solve(f: &LuFactors, rhs: &[f64]) -> Vec<f64> {
    f.solve(rhs)
}

/// In-place `L y = b` for unit lower triangular `L`.
fn forward_substitute_unit(l: &CrispMatrix, x: &mut [f64]) {
    for i in 0..x.len() {
        let row = l.row(i);
        let s: f64 = row[..i].iter().zip(&x[..i]).map(|(a, b)| a * b).sum();
        x[i] -= s;
    }
}

/// In-place `U x = y`.
fn back_substitute(u: &CrispMatrix, x: &mut [f64]) {
    let n = x.len();
    for i in (0..n).rev() {
        let row = u.row(i);
        let s: f64 = row[i + 1..]
            .iter()
            .zip(&x[i + 1..])
            .map(|(a, b)| a * b)
            .sum();
        x[i] = (x[i] - s) / row[i];
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mat(rows: &[&[f64]]) -> CrispMatrix {
        CrispMatrix::from_rows(rows).unwrap()
    }

    #[test]
    fn identity_factors() {
        let id = CrispMatrix::identity(4);
        let f = lu_factor(&id, Pivoting::None).unwrap();
        assert_eq!(f.l, id);
        assert_eq!(f.u, id);
        assert!(f.pivot_map.is_none());
        assert_eq!(
            lu_solve(&f, &[3.0, -1.0, 0.0, 2.0]),
            vec![3.0, -1.0, 0.0, 2.0]
        );
    }

    #[test]
    fn zero_leading_pivot_needs_pivoting() {
        let m = mat(&[&[0.0, 1.0], &[1.0, 0.0]]);
        match lu_factor(&m, Pivoting::None) {
            Err(Error::SingularOrTinyPivot { column, .. }) => assert_eq!(column, 0),
            other => panic!("expected tiny pivot, got {other:?}"),
        }
        let f = lu_factor(&m, Pivoting::Partial).unwrap();
        assert_eq!(f.pivot_map.as_ref().unwrap().as_slice(), &[1, 0]);
        assert_eq!(f.solve(&[2.0, 5.0]), vec![5.0, 2.0]);
        assert!(lu_factor_escalating(&m).unwrap().pivot_map.is_some());
    }

    #[test]
    fn singular_matrix_fails_both_ways() {
        let m = mat(&[&[1.0, 2.0], &[2.0, 4.0]]);
        assert!(lu_factor(&m, Pivoting::None).is_err());
        assert!(matches!(
            lu_factor(&m, Pivoting::Partial),
            Err(Error::SingularOrTinyPivot { column: 1, .. })
        ));
        assert!(lu_factor(&CrispMatrix::zeros(2), Pivoting::Partial).is_err());
    }

    #[test]
    fn reconstruction_with_pivoting() {
        let m = mat(&[&[1.0, 2.0, 3.0], &[4.0, 5.0, 6.0], &[7.0, 8.0, 10.0]]);
        let f = lu_factor(&m, Pivoting::Partial).unwrap();
        let pm = f.pivot_map.as_ref().unwrap().apply_rows(&m);
        assert!(f.reconstruct().max_abs_diff(&pm) < 1e-12);
        for i in 0..3 {
            assert_eq!(f.l[(i, i)], 1.0);
        }
        let x = f.solve(&[6.0, 15.0, 25.0]);
        for (xi, want) in x.iter().zip([1.0, 1.0, 1.0]) {
            assert!((xi - want).abs() < 1e-12);
        }
    }
}
