//! Reference solver for cross-checks: Gaussian elimination with full
//! pivoting on plain nested vectors. Shares no code with the library.

/// Solves `a x = b`. Returns `None` if a pivot is exactly zero.
pub fn full_pivot_solve(a: &[Vec<f64>], b: &[f64]) -> Option<Vec<f64>> {
    let n = b.len();
    let mut m: Vec<Vec<f64>> = a.to_vec();
    let mut rhs = b.to_vec();
    // col_of[k] = original unknown stored in column k
    let mut col_of: Vec<usize> = (0..n).collect();

    for k in 0..n {
        let (mut pr, mut pc, mut best) = (k, k, 0.0f64);
        for (i, row) in m.iter().enumerate().skip(k) {
            for (j, v) in row.iter().enumerate().skip(k) {
                if v.abs() > best {
                    best = v.abs();
                    pr = i;
                    pc = j;
                }
            }
        }
        if best == 0.0 {
            return None;
        }
        m.swap(k, pr);
        rhs.swap(k, pr);
        for row in m.iter_mut() {
            row.swap(k, pc);
        }
        col_of.swap(k, pc);

        for i in k + 1..n {
            let f = m[i][k] / m[k][k];
            let (top, bottom) = m.split_at_mut(i);
            for (v, p) in bottom[0][k..].iter_mut().zip(&top[k][k..]) {
                *v -= f * p;
            }
            rhs[i] -= f * rhs[k];
        }
    }

    let mut y = vec![0.0; n];
    for i in (0..n).rev() {
        let mut s = rhs[i];
        for j in i + 1..n {
            s -= m[i][j] * y[j];
        }
        y[i] = s / m[i][i];
    }
    let mut x = vec![0.0; n];
    for (k, &orig) in col_of.iter().enumerate() {
        x[orig] = y[k];
    }
    Some(x)
}

/// Column-by-column inverse through the same elimination.
pub fn inverse(a: &[Vec<f64>]) -> Option<Vec<Vec<f64>>> {
    let n = a.len();
    let mut cols = Vec::with_capacity(n);
    for j in 0..n {
        let mut e = vec![0.0; n];
        e[j] = 1.0;
        cols.push(full_pivot_solve(a, &e)?);
    }
    Some(
        (0..n)
            .map(|i| (0..n).map(|j| cols[j][i]).collect())
            .collect(),
    )
}

#[test]
fn oracle_solves_small_systems() {
    let a = vec![
        vec![0.0, 2.0, 1.0],
        vec![1.0, 0.0, 0.0],
        vec![3.0, 1.0, 5.0],
    ];
    let x = full_pivot_solve(&a, &[4.0, 1.0, 14.0]).unwrap();
    for (xi, want) in x.iter().zip([1.0, 1.0, 2.0]) {
        assert!((xi - want).abs() < 1e-14);
    }
    assert!(full_pivot_solve(&[vec![1.0, 2.0], vec![2.0, 4.0]], &[1.0, 2.0]).is_none());
}
