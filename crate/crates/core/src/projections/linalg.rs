//! Exact dense linear algebra over ℚ(i). Matrices are row-major.

use num_traits::{One, Zero};

use crate::poly::GaussianRational as Q;

pub type Matrix = Vec<Vec<Q>>;

/// Matrix whose columns are `cols`, each of length `rows`.
pub fn from_columns(rows: usize, cols: &[Vec<Q>]) -> Matrix {
    (0..rows)
        .map(|r| cols.iter().map(|c| c[r].clone()).collect())
        .collect()
}

pub fn identity(n: usize) -> Matrix {
    (0..n)
        .map(|r| {
            (0..n)
                .map(|c| if r == c { Q::one() } else { Q::zero() })
                .collect()
        })
        .collect()
}

/// Row echelon form in place; returns the pivot columns.
fn echelon(a: &mut Matrix) -> Vec<usize> {
    let rows = a.len();
    let cols = a.first().map_or(0, |r| r.len());
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(r, p);
        let inv = a[r][c].inv().expect("nonzero pivot");
        for x in a[r].iter_mut() {
            *x = &*x * &inv;
        }
        for i in 0..rows {
            if i != r && !a[i][c].is_zero() {
                let f = a[i][c].clone();
                let pivot_row = a[r].clone();
                for (x, p) in a[i].iter_mut().zip(&pivot_row) {
                    *x = &*x - &(&f * p);
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

pub fn rank(a: &Matrix) -> usize {
    let mut a = a.clone();
    echelon(&mut a).len()
}

/// Rank of the matrix with the given columns.
pub fn column_rank(rows: usize, cols: &[Vec<Q>]) -> usize {
    if cols.is_empty() {
        return 0;
    }
    rank(&from_columns(rows, cols))
}

/// Inverse of a square matrix, `None` if singular.
pub fn inverse(a: &Matrix) -> Option<Matrix> {
    let n = a.len();
    let mut aug: Matrix = a
        .iter()
        .zip(identity(n))
        .map(|(row, id)| row.iter().cloned().chain(id).collect())
        .collect();
    let pivots = echelon(&mut aug);
    if pivots.len() < n || pivots.iter().enumerate().any(|(i, &p)| i != p) {
        return None;
    }
    Some(aug.into_iter().map(|row| row[n..].to_vec()).collect())
}

pub fn mat_vec(a: &Matrix, x: &[Q]) -> Vec<Q> {
    a.iter()
        .map(|row| row.iter().zip(x).fold(Q::zero(), |acc, (r, v)| acc + r * v))
        .collect()
}

/// Standard basis vectors extending `cols` to a basis of ℚ(i)ⁿ, chosen
/// greedily in index order.
pub fn standard_complement(n: usize, cols: &[Vec<Q>]) -> Vec<usize> {
    let mut current: Vec<Vec<Q>> = cols.to_vec();
    let mut r = column_rank(n, &current);
    let mut out = Vec::new();
    for j in 0..n {
        if r == n {
            break;
        }
        let mut e = vec![Q::zero(); n];
        e[j] = Q::one();
        current.push(e);
        let nr = column_rank(n, &current);
        if nr > r {
            r = nr;
            out.push(j);
        } else {
            current.pop();
        }
    }
    out
}
