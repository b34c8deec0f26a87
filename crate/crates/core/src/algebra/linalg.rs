//! Small exact linear algebra: polynomial determinants and cofactors, and
//! row reduction over Q.

use num_traits::{One, Zero};

use super::{Poly, Rational};

pub type PolyMatrix = Vec<Vec<Poly>>;

/// Determinant by cofactor expansion along the first row. Matrices here are
/// at most a handful of rows.
pub fn determinant(a: &[Vec<Poly>]) -> Poly {
    let n = a.len();
    assert!(a.iter().all(|r| r.len() == n), "square matrix required");
    if n == 0 {
        // no entries to read nvars from; callers never ask for this
        panic!("determinant of an empty matrix");
    }
    let cols: Vec<usize> = (0..n).collect();
    det_rec(a, 0, &cols)
}

fn det_rec(a: &[Vec<Poly>], row: usize, cols: &[usize]) -> Poly {
    let nvars = a[0][0].nvars();
    if cols.len() == 1 {
        return a[row][cols[0]].clone();
    }
    let mut acc = Poly::zero(nvars);
    for (k, &c) in cols.iter().enumerate() {
        if a[row][c].is_zero() {
            continue;
        }
        let rest: Vec<usize> = cols.iter().copied().filter(|&x| x != c).collect();
        let minor = det_rec(a, row + 1, &rest);
        let term = &a[row][c] * &minor;
        acc = if k % 2 == 0 { &acc + &term } else { &acc - &term };
    }
    acc
}

/// Cofactor matrix: `C[k][j] = (-1)^(k+j) * det(A without row k, column j)`.
pub fn cofactor_matrix(a: &[Vec<Poly>]) -> PolyMatrix {
    let n = a.len();
    let nvars = a[0][0].nvars();
    if n == 1 {
        return vec![vec![Poly::one(nvars)]];
    }
    (0..n)
        .map(|k| {
            (0..n)
                .map(|j| {
                    let minor: PolyMatrix = (0..n)
                        .filter(|&r| r != k)
                        .map(|r| (0..n).filter(|&c| c != j).map(|c| a[r][c].clone()).collect())
                        .collect();
                    let d = determinant(&minor);
                    if (k + j) % 2 == 0 {
                        d
                    } else {
                        -d
                    }
                })
                .collect()
        })
        .collect()
}

/// Reduced row echelon form in place; returns the pivot columns.
pub fn rref(m: &mut [Vec<Rational>]) -> Vec<usize> {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let inv = m[r][c].recip();
        for x in m[r].iter_mut() {
            *x *= &inv;
        }
        let pivot_row = m[r].clone();
        for (i, row) in m.iter_mut().enumerate() {
            if i != r && !row[c].is_zero() {
                let f = row[c].clone();
                for (x, p) in row.iter_mut().zip(&pivot_row) {
                    *x -= &f * p;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

/// Basis of the right kernel `{w : M w = 0}`, one vector per free column.
pub fn kernel_basis(m: &[Vec<Rational>], cols: usize) -> Vec<Vec<Rational>> {
    let mut a: Vec<Vec<Rational>> = m.to_vec();
    let pivots = rref(&mut a);
    let free: Vec<usize> = (0..cols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![Rational::zero(); cols];
            v[f] = Rational::one();
            for (row, &pc) in pivots.iter().enumerate() {
                v[pc] = -a[row][f].clone();
            }
            v
        })
        .collect()
}
