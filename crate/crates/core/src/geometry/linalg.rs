use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use super::{integer_row, reduce_by_gcd, Rational};
use crate::error::{Error, Result};

/// Rank of an integer matrix by fraction-free (Bareiss-style) elimination.
/// Rows are consumed.
pub(crate) fn int_rank(mut rows: Vec<Vec<BigInt>>) -> usize {
    let cols = rows.first().map_or(0, Vec::len);
    let mut rank = 0;
    for c in 0..cols {
        let Some(p) = (rank..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(rank, p);
        let (head, tail) = rows.split_at_mut(rank + 1);
        let pivot = &head[rank];
        for row in tail.iter_mut() {
            if row[c].is_zero() {
                continue;
            }
            let f = row[c].clone();
            for j in c..cols {
                row[j] = &row[j] * &pivot[c] - &f * &pivot[j];
            }
            reduce_by_gcd(row);
        }
        rank += 1;
        if rank == rows.len() {
            break;
        }
    }
    rank
}

/// Rank of a rational matrix.
pub fn rank(rows: &[Vec<Rational>]) -> usize {
    int_rank(rows.iter().map(integer_row).collect())
}

/// Maximum number of affinely independent points among `points`.
pub fn affine_rank(points: &[Vec<Rational>]) -> Result<usize> {
    let first = points.first().ok_or(Error::Empty("affine_rank needs a point"))?;
    if let Some(p) = points.iter().find(|p| p.len() != first.len()) {
        return Err(Error::Dimension {
            expected: first.len(),
            actual: p.len(),
        });
    }
    let diffs: Vec<Vec<Rational>> = points[1..]
        .iter()
        .map(|p| p.iter().zip(first).map(|(a, b)| a - b).collect())
        .collect();
    Ok(rank(&diffs) + 1)
}

/// Indices of a maximal affinely independent subset, chosen greedily in order.
pub(crate) fn affinely_independent_subset(points: &[Vec<Rational>]) -> Vec<usize> {
    let Some(first) = points.first() else {
        return Vec::new();
    };
    let mut chosen = vec![0];
    // incremental echelon basis of difference vectors
    let mut basis: Vec<(usize, Vec<BigInt>)> = Vec::new();
    for (i, p) in points.iter().enumerate().skip(1) {
        let diff: Vec<Rational> = p.iter().zip(first).map(|(a, b)| a - b).collect();
        let mut v = integer_row(&diff);
        for (pc, b) in &basis {
            if v[*pc].is_zero() {
                continue;
            }
            let f = v[*pc].clone();
            for j in 0..v.len() {
                v[j] = &v[j] * &b[*pc] - &f * &b[j];
            }
            reduce_by_gcd(&mut v);
        }
        if let Some(pc) = v.iter().position(|x| !x.is_zero()) {
            if v[pc].is_negative() {
                v.iter_mut().for_each(|x| *x = -&*x);
            }
            basis.push((pc, v));
            chosen.push(i);
        }
    }
    chosen
}

/// Reduced row echelon form over the rationals. Returns the nonzero rows and
/// their pivot columns.
pub fn rref(rows: &[Vec<Rational>]) -> (Vec<Vec<Rational>>, Vec<usize>) {
    let mut m: Vec<Vec<Rational>> = rows.to_vec();
    let cols = m.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..m.len()).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let inv = m[r][c].recip();
        for x in m[r].iter_mut() {
            *x = &*x * &inv;
        }
        for i in 0..m.len() {
            if i != r && !m[i][c].is_zero() {
                let f = m[i][c].clone();
                let pivot_row = m[r].clone();
                for (x, y) in m[i].iter_mut().zip(&pivot_row[..cols]) {
                    *x -= &f * y;
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == m.len() {
            break;
        }
    }
    m.truncate(r);
    (m, pivots)
}
