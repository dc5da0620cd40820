#![allow(dead_code)]

pub mod oracle;

use fsle::{CrispMatrix, FuzzyNumber, Trapezoid};
use rand::Rng;

pub fn mat(rows: &[&[f64]]) -> CrispMatrix {
    CrispMatrix::from_rows(rows).unwrap()
}

pub fn fz(c0: f64, c1: f64, d0: f64, d1: f64) -> FuzzyNumber {
    FuzzyNumber::new(c0, c1, d0, d1)
}

pub fn fixture(name: &str) -> std::path::PathBuf {
    std::path::Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("fixtures")
        .join(name)
}

/// One worked problem with its published embedding and solution.
pub struct Worked {
    pub a: CrispMatrix,
    pub b: Vec<FuzzyNumber>,
    pub s: CrispMatrix,
    pub sigma: Vec<usize>,
    pub solution: Vec<FuzzyNumber>,
}

pub fn example1() -> Worked {
    Worked {
        a: mat(&[&[2.0, -3.0, 1.0], &[-1.0, -3.0, -1.0], &[-1.0, 2.0, 5.0]]),
        b: vec![
            fz(-11.0, 9.0, 7.0, -9.0),
            fz(-22.0, 8.0, -6.0, -8.0),
            fz(9.0, 10.0, 29.0, -10.0),
        ],
        s: mat(&[
            &[2.0, 0.0, 1.0, 0.0, -3.0, 0.0],
            &[0.0, 0.0, 0.0, -1.0, -3.0, -1.0],
            &[0.0, 2.0, 5.0, -1.0, 0.0, 0.0],
            &[0.0, -3.0, 0.0, 2.0, 0.0, 1.0],
            &[-1.0, -3.0, -1.0, 0.0, 0.0, 0.0],
            &[-1.0, 0.0, 0.0, 0.0, 2.0, 5.0],
        ]),
        sigma: vec![0, 4, 2, 3, 1, 5],
        solution: vec![
            fz(1.0, 1.0, 3.0, -1.0),
            fz(1.0, 2.0, 5.0, -2.0),
            fz(2.0, 1.0, 4.0, -1.0),
        ],
    }
}

/// Published `P` for the first example.
pub fn example1_p() -> CrispMatrix {
    mat(&[
        &[1.0, 0.0, 0.0, 0.0, 0.0, 0.0],
        &[0.0, 0.0, 0.0, 0.0, 1.0, 0.0],
        &[0.0, 0.0, 1.0, 0.0, 0.0, 0.0],
        &[0.0, 0.0, 0.0, 1.0, 0.0, 0.0],
        &[0.0, 1.0, 0.0, 0.0, 0.0, 0.0],
        &[0.0, 0.0, 0.0, 0.0, 0.0, 1.0],
    ])
}

/// Published `PS` for the first example.
pub fn example1_s_tilde() -> CrispMatrix {
    mat(&[
        &[2.0, 0.0, 1.0, 0.0, -3.0, 0.0],
        &[-1.0, -3.0, -1.0, 0.0, 0.0, 0.0],
        &[0.0, 2.0, 5.0, -1.0, 0.0, 0.0],
        &[0.0, -3.0, 0.0, 2.0, 0.0, 1.0],
        &[0.0, 0.0, 0.0, -1.0, -3.0, -1.0],
        &[-1.0, 0.0, 0.0, 0.0, 2.0, 5.0],
    ])
}

pub fn example2() -> Worked {
    Worked {
        a: mat(&[&[2.0, -1.0, 1.0], &[-3.0, 5.0, 1.0], &[-2.0, -3.0, 4.0]]),
        b: vec![
            fz(-2.0, 9.0, 13.0, -6.0),
            fz(-7.0, 12.0, 25.0, -20.0),
            fz(-23.0, 14.0, 4.0, -13.0),
        ],
        s: mat(&[
            &[2.0, 0.0, 1.0, 0.0, -1.0, 0.0],
            &[0.0, 5.0, 1.0, -3.0, 0.0, 0.0],
            &[0.0, 0.0, 4.0, -2.0, -3.0, 0.0],
            &[0.0, -1.0, 0.0, 2.0, 0.0, 1.0],
            &[-3.0, 0.0, 0.0, 0.0, 5.0, 1.0],
            &[-2.0, -3.0, 0.0, 0.0, 0.0, 4.0],
        ]),
        sigma: (0..6).collect(),
        solution: vec![
            fz(1.0, 3.0, 6.0, -2.0),
            fz(2.0, 1.0, 5.0, -2.0),
            fz(1.0, 1.0, 3.0, -1.0),
        ],
    }
}

pub fn example3() -> Worked {
    Worked {
        a: mat(&[&[6.0, -1.0, -1.0], &[-1.0, 2.0, -1.0], &[-1.0, -1.0, 1.0]]),
        b: vec![
            fz(-18.0, 16.0, 8.0, -10.0),
            fz(-8.0, 8.0, 6.0, -6.0),
            fz(-3.0, 4.0, 8.0, -7.0),
        ],
        s: mat(&[
            &[6.0, 0.0, 0.0, 0.0, -1.0, -1.0],
            &[0.0, 2.0, 0.0, -1.0, 0.0, -1.0],
            &[0.0, 0.0, 1.0, -1.0, -1.0, 0.0],
            &[0.0, -1.0, -1.0, 6.0, 0.0, 0.0],
            &[-1.0, 0.0, -1.0, 0.0, 2.0, 0.0],
            &[-1.0, -1.0, 0.0, 0.0, 0.0, 1.0],
        ]),
        sigma: (0..6).collect(),
        solution: vec![
            fz(-1.0, 2.0, 2.0, -1.0),
            fz(1.0, 2.0, 4.0, -1.0),
            fz(3.0, 2.0, 8.0, -3.0),
        ],
    }
}

pub fn all_examples() -> [(&'static str, Worked); 3] {
    [
        ("example1", example1()),
        ("example2", example2()),
        ("example3", example3()),
    ]
}

// ---------------------------------------------------------------- generators

/// Off-diagonal magnitudes in `[0, 1)`, about a fifth of them zero.
fn random_offdiag<R: Rng>(rng: &mut R, n: usize) -> Vec<Vec<f64>> {
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    if i == j || rng.gen_bool(0.2) {
                        0.0
                    } else {
                        rng.gen_range(0.0..1.0)
                    }
                })
                .collect()
        })
        .collect()
}

/// Diagonal magnitudes making `x` a strict dominance witness for `mags`,
/// with a relative margin in `[0.05, 1]`.
fn dominating_diagonal<R: Rng>(rng: &mut R, mags: &[Vec<f64>], x: &[f64]) -> Vec<f64> {
    let n = x.len();
    (0..n)
        .map(|i| {
            let off: f64 = (0..n).filter(|&j| j != i).map(|j| mags[i][j] * x[j]).sum();
            let margin = rng.gen_range(0.05..1.0);
            if off == 0.0 {
                rng.gen_range(0.5..2.0)
            } else {
                off / x[i] * (1.0 + margin)
            }
        })
        .collect()
}

fn random_scaling<R: Rng>(rng: &mut R, n: usize) -> Vec<f64> {
    (0..n).map(|_| rng.gen_range(0.2..5.0)).collect()
}

fn sign<R: Rng>(rng: &mut R) -> f64 {
    if rng.gen_bool(0.5) {
        1.0
    } else {
        -1.0
    }
}

/// Generalized strictly diagonally dominant matrix (hence an H-matrix) with
/// random signs everywhere, including the diagonal.
pub fn random_h_matrix<R: Rng>(rng: &mut R, n: usize) -> CrispMatrix {
    let mags = random_offdiag(rng, n);
    let x = random_scaling(rng, n);
    let d = dominating_diagonal(rng, &mags, &x);
    CrispMatrix::from_fn(n, |i, j| {
        let v = if i == j { d[i] } else { mags[i][j] };
        sign(rng) * v
    })
}

/// Z sign pattern with positive diagonal and a positive dominance witness.
pub fn random_m_matrix<R: Rng>(rng: &mut R, n: usize) -> CrispMatrix {
    let mags = random_offdiag(rng, n);
    let x = random_scaling(rng, n);
    let d = dominating_diagonal(rng, &mags, &x);
    CrispMatrix::from_fn(n, |i, j| if i == j { d[i] } else { -mags[i][j] })
}

/// Strictly diagonally dominant with positive diagonal.
pub fn random_sdd_positive<R: Rng>(rng: &mut R, n: usize) -> CrispMatrix {
    let mags = random_offdiag(rng, n);
    let d = dominating_diagonal(rng, &mags, &vec![1.0; n]);
    CrispMatrix::from_fn(n, |i, j| if i == j { d[i] } else { sign(rng) * mags[i][j] })
}

/// Strictly diagonally dominant with random diagonal signs.
pub fn random_sdd<R: Rng>(rng: &mut R, n: usize) -> CrispMatrix {
    let a = random_sdd_positive(rng, n);
    let flips: Vec<f64> = (0..n).map(|_| sign(rng)).collect();
    CrispMatrix::from_fn(n, |i, j| {
        if i == j {
            flips[i] * a[(i, j)]
        } else {
            a[(i, j)]
        }
    })
}

/// A random valid fuzzy number: trapezoid with core in `[-10, 12]` and
/// spreads in `[0, 3]`; roughly a tenth of them crisp.
pub fn random_fuzzy<R: Rng>(rng: &mut R) -> FuzzyNumber {
    let x0 = rng.gen_range(-10.0..10.0);
    if rng.gen_bool(0.1) {
        return FuzzyNumber::crisp(x0);
    }
    let width = if rng.gen_bool(0.5) {
        0.0
    } else {
        rng.gen_range(0.0..2.0)
    };
    Trapezoid::new(
        x0,
        x0 + width,
        rng.gen_range(0.0..3.0),
        rng.gen_range(0.0..3.0),
    )
    .unwrap()
    .to_parametric()
}

pub fn random_fuzzy_vec<R: Rng>(rng: &mut R, n: usize) -> Vec<FuzzyNumber> {
    (0..n).map(|_| random_fuzzy(rng)).collect()
}

pub fn max_abs_diff(a: &[f64], b: &[f64]) -> f64 {
    a.iter()
        .zip(b)
        .map(|(x, y)| (x - y).abs())
        .fold(0.0, f64::max)
}
