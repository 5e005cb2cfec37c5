//! Exact linear algebra over the integers and rationals.
//!
//! Ranks and determinants use fraction-free (Bareiss) elimination in `i128`;
//! linear solves use `Rational64`. Nothing here is approximate.

use num_rational::Rational64;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// Bareiss elimination in place. Returns the rank and the sign-corrected
/// last pivot (the determinant when the matrix is square and of full rank).
fn bareiss(m: &mut [Vec<i128>]) -> (usize, i128) {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut rank = 0;
    let mut prev = 1i128;
    let mut sign = 1i128;
    for c in 0..cols {
        if rank == rows {
            break;
        }
        let Some(p) = (rank..rows).find(|&r| m[r][c] != 0) else {
            continue;
        };
        if p != rank {
            m.swap(p, rank);
            sign = -sign;
        }
        let pivot = m[rank][c];
        for r in rank + 1..rows {
            let factor = m[r][c];
            for k in c..cols {
                // Exact by Sylvester's identity.
                m[r][k] = (pivot * m[r][k] - factor * m[rank][k]) / prev;
            }
        }
        prev = pivot;
        rank += 1;
    }
    (rank, sign * prev)
}

/// Rank of an integer matrix given by rows.
pub fn rank(rows: &[Vec<i64>]) -> usize {
    let mut m: Vec<Vec<i128>> = rows
        .iter()
        .map(|r| r.iter().map(|&x| x as i128).collect())
        .collect();
    bareiss(&mut m).0
}

/// Determinant of a square integer matrix.
pub fn determinant(rows: &[Vec<i64>]) -> i128 {
    let n = rows.len();
    if n == 0 {
        return 1;
    }
    let mut m: Vec<Vec<i128>> = rows
        .iter()
        .map(|r| r.iter().map(|&x| x as i128).collect())
        .collect();
    let (rank, det) = bareiss(&mut m);
    if rank < n {
        0
    } else {
        det
    }
}

/// Exact inverse of a square integer matrix, or `None` if singular.
pub fn inverse(rows: &[Vec<i64>]) -> Option<Vec<Vec<Rational64>>> {
    let n = rows.len();
    let mut aug: Vec<Vec<Rational64>> = rows
        .iter()
        .enumerate()
        .map(|(i, r)| {
            let mut v: Vec<Rational64> = r.iter().map(|&x| Rational64::from_integer(x)).collect();
            v.extend((0..n).map(|j| if i == j { Rational64::one() } else { Rational64::zero() }));
            v
        })
        .collect();
    for c in 0..n {
        let p = (c..n).find(|&r| !aug[r][c].is_zero())?;
        aug.swap(p, c);
        let pivot = aug[c][c];
        for x in aug[c].iter_mut() {
            *x /= pivot;
        }
        for r in 0..n {
            if r != c && !aug[r][c].is_zero() {
                let f = aug[r][c];
                for k in 0..2 * n {
                    let sub = f * aug[c][k];
                    aug[r][k] -= sub;
                }
            }
        }
    }
    Some(aug.into_iter().map(|r| r[n..].to_vec()).collect())
}

/// Solves `sum_i q_i * columns[i] = target` over the rationals.
///
/// Returns `Ok(None)` when `target` lies outside the span and
/// [`Error::DependentSet`] when the columns are linearly dependent.
pub fn solve_in_span(columns: &[Vec<i64>], target: &[i64]) -> Result<Option<Vec<Rational64>>> {
    let k = columns.len();
    let dim = target.len();
    if columns.iter().any(|c| c.len() != dim) {
        return Err(Error::Mismatch);
    }
    // Rows of the augmented system [columns | target].
    let mut m: Vec<Vec<Rational64>> = (0..dim)
        .map(|r| {
            let mut row: Vec<Rational64> = columns.iter().map(|c| Rational64::from_integer(c[r])).collect();
            row.push(Rational64::from_integer(target[r]));
            row
        })
        .collect();
    let mut pivots = Vec::with_capacity(k);
    let mut row = 0;
    for c in 0..k {
        let Some(p) = (row..dim).find(|&r| !m[r][c].is_zero()) else {
            return Err(Error::DependentSet);
        };
        m.swap(p, row);
        let pivot = m[row][c];
        for x in m[row].iter_mut() {
            *x /= pivot;
        }
        for r in 0..dim {
            if r != row && !m[r][c].is_zero() {
                let f = m[r][c];
                for j in c..=k {
                    let sub = f * m[row][j];
                    m[r][j] -= sub;
                }
            }
        }
        pivots.push(row);
        row += 1;
    }
    if m[row..].iter().any(|r| !r[k].is_zero()) {
        return Ok(None);
    }
    Ok(Some(pivots.iter().map(|&r| m[r][k]).collect()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rank_of_small_matrices() {
        assert_eq!(rank(&[]), 0);
        assert_eq!(rank(&[vec![0, 0], vec![0, 0]]), 0);
        assert_eq!(rank(&[vec![1, 2], vec![2, 4]]), 1);
        assert_eq!(rank(&[vec![1, 2, 3], vec![4, 5, 6], vec![7, 8, 10]]), 3);
        assert_eq!(rank(&[vec![1, 2, 3], vec![4, 5, 6], vec![7, 8, 9]]), 2);
    }

    #[test]
    fn determinant_and_inverse() {
        let a2 = vec![vec![2, -1], vec![-1, 2]];
        assert_eq!(determinant(&a2), 3);
        let inv = inverse(&a2).unwrap();
        assert_eq!(inv[0][0], Rational64::new(2, 3));
        assert_eq!(inv[0][1], Rational64::new(1, 3));
        assert!(inverse(&[vec![1, 2], vec![2, 4]]).is_none());
        assert_eq!(determinant(&[vec![0, 1], vec![1, 0]]), -1);
    }

    #[test]
    fn span_solve() {
        let cols = vec![vec![1, 0, 1], vec![0, 1, 1]];
        let q = solve_in_span(&cols, &[2, 3, 5]).unwrap().unwrap();
        assert_eq!(q, vec![Rational64::from_integer(2), Rational64::from_integer(3)]);
        assert_eq!(solve_in_span(&cols, &[1, 1, 0]).unwrap(), None);
        assert_eq!(
            solve_in_span(&[vec![1, 1], vec![2, 2]], &[1, 1]),
            Err(Error::DependentSet)
        );
    }
}
