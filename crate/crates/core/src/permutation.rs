use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::matrix::CrispMatrix;

/// A row permutation stored as an index map.
///
/// For a permutation `P` represented by `sigma`, row `i` of `P * M` is row
/// `sigma[i]` of `M`. Indices are zero-based. The dense matrix form is only
/// materialized on request.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Permutation {
    sigma: Vec<usize>,
}

impl Permutation {
    pub fn identity(m: usize) -> Self {
        Permutation {
            sigma: (0..m).collect(),
        }
    }

    /// Validates that `sigma` is a bijection on `0..sigma.len()`.
    pub fn from_vec(sigma: Vec<usize>) -> Result<Self> {
        let m = sigma.len();
        let mut seen = vec![false; m];
        for &s in &sigma {
            if s >= m || seen[s] {
                return Err(Error::InvalidParams(format!(
                    "{sigma:?} is not a permutation of 0..{m}"
                )));
            }
            seen[s] = true;
        }
        Ok(Permutation { sigma })
    }

    pub fn len(&self) -> usize {
        self.sigma.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sigma.is_empty()
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.sigma
    }

    pub fn is_identity(&self) -> bool {
        self.sigma.iter().enumerate().all(|(i, &s)| i == s)
    }

    pub fn swap(&mut self, a: usize, b: usize) {
        self.sigma.swap(a, b);
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.sigma.len()];
        for (i, &s) in self.sigma.iter().enumerate() {
            inv[s] = i;
        }
        Permutation { sigma: inv }
    }

    /// `P * M`.
    pub fn apply_rows(&self, m: &CrispMatrix) -> CrispMatrix {
        assert_eq!(self.len(), m.n(), "permutation size must match matrix");
        let n = m.n();
        let mut out = Vec::with_capacity(n * n);
        for &s in &self.sigma {
            out.extend_from_slice(m.row(s));
        }
        CrispMatrix::from_row_major(n, out).expect("rows of a valid matrix")
    }

    /// `P * v`.
    pub fn apply<T: Clone>(&self, v: &[T]) -> Vec<T> {
        assert_eq!(self.len(), v.len(), "permutation size must match vector");
        self.sigma.iter().map(|&s| v[s].clone()).collect()
    }

    pub fn to_matrix(&self) -> CrispMatrix {
        let m = self.len();
        let mut p = CrispMatrix::zeros(m);
        for (i, &s) in self.sigma.iter().enumerate() {
            p[(i, s)] = 1.0;
        }
        p
    }
}

impl TryFrom<Vec<usize>> for Permutation {
    type Error = Error;

    fn try_from(sigma: Vec<usize>) -> Result<Self> {
        Permutation::from_vec(sigma)
    }
}

impl From<Permutation> for Vec<usize> {
    fn from(p: Permutation) -> Self {
        p.sigma
    }
}
