//! The `2n x 2n` crisp embedding of a fuzzy system.
//!
//! With `S1` the positive part of `A` and `S2 = A - S1`, the fuzzy system
//! `Ax = b` is equivalent to
//!
//! ```text
//! [ S1  S2 ] [ lower(x) ]   [ lower(b) ]
//! [ S2  S1 ] [ upper(x) ] = [ upper(b) ]
//! ```
//!
//! A negative `a_ii` lands in `S2`, leaving a zero on the diagonal of the
//! embedded matrix. Swapping row `i` with row `i + n` for each such index
//! moves `a_ii` back onto the diagonal; for an H-matrix `A` the permuted
//! matrix is again an H-matrix, with witness `(x, x)`.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::fuzzy::{Affine, FuzzyNumber};
use crate::matrix::CrispMatrix;
use crate::permutation::Permutation;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Embedding {
    /// Dimension of `A`; the embedded system has size `2n`.
    pub n: usize,
    /// Entries of `A` that are `> 0`, zero elsewhere.
    #[serde(rename = "S1")]
    pub positive_part: CrispMatrix,
    /// `A - S1`, entrywise `<= 0`.
    #[serde(rename = "S2")]
    pub nonpositive_part: CrispMatrix,
    #[serde(rename = "S")]
    pub matrix: CrispMatrix,
    #[serde(rename = "sigma")]
    pub permutation: Permutation,
    /// `P S`.
    #[serde(rename = "S_tilde")]
    pub permuted: CrispMatrix,
    /// `(lower(b); upper(b))` as intercept/slope pairs, length `2n`.
    #[serde(skip)]
    pub rhs: Vec<Affine>,
}

impl Embedding {
    pub fn m(&self) -> usize {
        2 * self.n
    }

    pub fn rhs_intercepts(&self) -> Vec<f64> {
        self.rhs.iter().map(|a| a.intercept).collect()
    }

    pub fn rhs_slopes(&self) -> Vec<f64> {
        self.rhs.iter().map(|a| a.slope).collect()
    }

    /// `(lower(b)(r); upper(b)(r))` at a single membership level.
    pub fn rhs_at(&self, r: f64) -> Vec<f64> {
        self.rhs.iter().map(|a| a.eval(r)).collect()
    }

    /// `S1 - S2`, which equals the entrywise absolute value of `A`.
    pub fn abs_difference(&self) -> CrispMatrix {
        let n = self.n;
        CrispMatrix::from_fn(n, |i, j| {
            self.positive_part[(i, j)] - self.nonpositive_part[(i, j)]
        })
    }

    pub fn coefficient_matrix(&self) -> CrispMatrix {
        let n = self.n;
        CrispMatrix::from_fn(n, |i, j| {
            self.positive_part[(i, j)] + self.nonpositive_part[(i, j)]
        })
    }
}

/// Splits `A` and assembles `S` and the stacked right-hand side.
pub fn build_embedding(a: &CrispMatrix, b: &[FuzzyNumber]) -> Result<Embedding> {
    let n = a.n();
    if b.len() != n {
        return Err(Error::DimensionMismatch {
            what: "right-hand side",
            expected: n,
            found: b.len(),
        });
    }
    for (index, bi) in b.iter().enumerate() {
        let v = bi.validity();
        if !v.valid {
            return Err(Error::InvalidFuzzyNumber {
                index,
                violations: v.violations,
            });
        }
    }

    let positive_part = a.map(|v| if v > 0.0 { v } else { 0.0 });
    let nonpositive_part = CrispMatrix::from_fn(n, |i, j| a[(i, j)] - positive_part[(i, j)]);
    let matrix = CrispMatrix::from_fn(2 * n, |i, j| {
        let same_half = (i < n) == (j < n);
        let (bi, bj) = (i % n, j % n);
        if same_half {
            positive_part[(bi, bj)]
        } else {
            nonpositive_part[(bi, bj)]
        }
    });
    let permutation = build_permutation(&matrix);
    let permuted = permutation.apply_rows(&matrix);
    let rhs = b
        .iter()
        .map(|u| u.lower)
        .chain(b.iter().map(|u| u.upper))
        .collect();

    Ok(Embedding {
        n,
        positive_part,
        nonpositive_part,
        matrix,
        permutation,
        permuted,
        rhs,
    })
}

/// Starting from the identity, row `i` and row `i + n` trade places
/// whenever `S_ii = 0`.
///
/// Total for any even-sized input; the result is an involution because
/// `S_ii` and `S_{i+n,i+n}` are the same entry of `S1`. If `A` has a zero
/// diagonal entry, both positions stay zero after the swap.
///
/// # Panics
///
/// If `s` has odd dimension.
pub fn build_permutation(s: &CrispMatrix) -> Permutation {
    let m = s.n();
    assert!(
        m.is_multiple_of(2),
        "embedded matrix must have even dimension, got {m}"
    );
    let n = m / 2;
    let mut sigma: Vec<usize> = (0..m).collect();
    for i in 0..n {
        if s[(i, i)] == 0.0 {
            sigma[i] = i + n;
        }
    }
    for i in n..m {
        if s[(i, i)] == 0.0 {
            sigma[i] = i - n;
        }
    }
    Permutation::from_vec(sigma).expect("block swaps form a permutation")
}

/// `(x; x)`.
pub fn extend_witness(x: &[f64]) -> Vec<f64> {
    x.iter().chain(x).copied().collect()
}
