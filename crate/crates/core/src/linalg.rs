//! Exact dense linear algebra on row-major `Vec<Vec<T>>` matrices.

use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// Solve `L·y = rhs` by forward substitution for a unit lower-triangular `L`.
///
/// Row `i` of `l` must hold at least `i + 1` entries; anything stored to the
/// right of the diagonal must be zero.
pub fn lower_triangular_solve<T: Scalar>(l: &[Vec<T>], rhs: &[T]) -> Result<Vec<T>> {
    if l.len() != rhs.len() {
        return Err(Error::LengthMismatch {
            left: rhs.len(),
            right: l.len(),
        });
    }
    check_unit_lower(l)?;
    let mut y: Vec<T> = Vec::with_capacity(rhs.len());
    for (i, row) in l.iter().enumerate() {
        let mut acc = rhs[i].clone();
        for (a, yj) in row[..i].iter().zip(&y) {
            if !a.is_zero() {
                acc = acc - a.clone() * yj.clone();
            }
        }
        y.push(acc);
    }
    Ok(y)
}

fn check_unit_lower<T: Scalar>(l: &[Vec<T>]) -> Result<()> {
    for (i, row) in l.iter().enumerate() {
        if row.len() <= i {
            return Err(Error::RowTooShort {
                row: i,
                expected: i + 1,
                found: row.len(),
            });
        }
        if !row[i].is_one() {
            return Err(Error::NonUnitDiagonal { row: i });
        }
        if row[i + 1..].iter().any(|a| !a.is_zero()) {
            return Err(Error::NotLowerTriangular { row: i });
        }
    }
    Ok(())
}

/// `M·v` for a row-major matrix whose rows may be ragged (missing entries
/// count as zero).
pub fn mat_vec<T: Scalar>(m: &[Vec<T>], v: &[T]) -> Vec<T> {
    m.iter()
        .map(|row| {
            row.iter()
                .zip(v)
                .fold(T::zero(), |acc, (a, x)| acc + a.clone() * x.clone())
        })
        .collect()
}

/// Reduced row echelon form in place; returns the pivot column of each
/// nonzero row, in order. Pivots are taken left to right, so the rightmost
/// columns are the first to end up free.
fn rref<T: Scalar>(m: &mut [Vec<T>], ncols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        let Some(p) = (r..m.len()).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let inv = T::one() / m[r][c].clone();
        for x in m[r].iter_mut() {
            *x = x.clone() * inv.clone();
        }
        for i in 0..m.len() {
            if i != r && !m[i][c].is_zero() {
                let f = m[i][c].clone();
                for j in 0..m[i].len() {
                    let v = m[r][j].clone();
                    m[i][j] = m[i][j].clone() - f.clone() * v;
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == m.len() {
            break;
        }
    }
    pivots
}

/// Rank of a matrix with `ncols` columns.
pub fn rank<T: Scalar>(rows: &[Vec<T>], ncols: usize) -> usize {
    let mut m: Vec<Vec<T>> = rows.iter().map(|r| pad(r, ncols)).collect();
    rref(&mut m, ncols).len()
}

/// Solve `A·x = b` exactly, returning the solution and its pivot columns, or
/// `None` when the system is inconsistent. Free variables are set to zero;
/// since pivots are chosen left to right, put the unknowns you would rather
/// zero out in the rightmost columns.
pub fn solve_least_support<T: Scalar>(a: &[Vec<T>], b: &[T], ncols: usize) -> Option<(Vec<T>, Vec<usize>)> {
    let mut m: Vec<Vec<T>> = a
        .iter()
        .zip(b)
        .map(|(row, rhs)| {
            let mut r = pad(row, ncols);
            r.push(rhs.clone());
            r
        })
        .collect();
    let pivots = rref(&mut m, ncols);
    // a zero row with nonzero right-hand side means no solution
    if m[pivots.len()..].iter().any(|r| !r[ncols].is_zero()) {
        return None;
    }
    let mut x = vec![T::zero(); ncols];
    for (row, &c) in pivots.iter().enumerate() {
        x[c] = m[row][ncols].clone();
    }
    Some((x, pivots))
}

fn pad<T: Scalar>(row: &[T], ncols: usize) -> Vec<T> {
    let mut r: Vec<T> = row.iter().take(ncols).cloned().collect();
    r.resize(ncols, T::zero());
    r
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Rational;

    fn r(n: i64) -> Rational {
        Rational::from_integer(n.into())
    }

    fn mat(rows: &[&[i64]]) -> Vec<Vec<Rational>> {
        rows.iter().map(|row| row.iter().map(|&x| r(x)).collect()).collect()
    }

    #[test]
    fn identity_solve() {
        let l = mat(&[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1]]);
        let v = vec![r(4), r(-2), r(7)];
        assert_eq!(lower_triangular_solve(&l, &v).unwrap(), v);
    }

    #[test]
    fn two_by_two() {
        let l = mat(&[&[1, 0], &[1, 1]]);
        assert_eq!(
            lower_triangular_solve(&l, &[r(1), r(3)]).unwrap(),
            vec![r(1), r(2)]
        );
    }

    #[test]
    fn pascal_inverse_column() {
        // brute-force inverse of [[1,0,0],[1,1,0],[1,2,1]]: the unique X with
        // L·X = I has first column (1,-1,1), checked by multiplying back
        let l = mat(&[&[1], &[1, 1], &[1, 2, 1]]);
        let y = lower_triangular_solve(&l, &[r(1), r(0), r(0)]).unwrap();
        assert_eq!(y, vec![r(1), r(-1), r(1)]);
        assert_eq!(mat_vec(&l, &y), vec![r(1), r(0), r(0)]);
    }

    #[test]
    fn rejects_non_unit_diagonal() {
        let l = mat(&[&[1, 0], &[1, 2]]);
        assert_eq!(
            lower_triangular_solve(&l, &[r(1), r(1)]).unwrap_err(),
            Error::NonUnitDiagonal { row: 1 }
        );
    }

    #[test]
    fn rejects_upper_entries() {
        let l = mat(&[&[1, 5], &[0, 1]]);
        assert_eq!(
            lower_triangular_solve(&l, &[r(1), r(1)]).unwrap_err(),
            Error::NotLowerTriangular { row: 0 }
        );
    }

    #[test]
    fn least_support_prefers_zero_on_the_right() {
        // x + y = 2 (single equation, y free)
        let a = mat(&[&[1, 1]]);
        assert_eq!(solve_least_support(&a, &[r(2)], 2), Some((vec![r(2), r(0)], vec![0])));
        // x = 1, x = 2 inconsistent
        let a = mat(&[&[1, 0], &[1, 0]]);
        assert_eq!(solve_least_support(&a, &[r(1), r(2)], 2), None);
    }

    #[test]
    fn rank_of_dependent_rows() {
        let a = mat(&[&[1, 2, 3], &[2, 4, 6], &[0, 1, 1]]);
        assert_eq!(rank(&a, 3), 2);
    }
}
