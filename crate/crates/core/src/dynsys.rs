//! Triangles as discrete-time dynamical systems.
//!
//! Row `n` of a triangle is the state after `n` steps. When the triangle is
//! unipotent, the one-step matrix `F` defined by `C·F = E·C` (with `E` the
//! row shift) always exists, whether or not a banded recurrence does; its
//! eigen-equation `x·Φ = F·Φ` recovers the basis `Φ` with
//! `x^n = Σ_k c_{n,k} Φ_k(x)`.

use crate::error::{Error, Result};
use crate::linalg::lower_triangular_solve;
use crate::poly::Polynomial;
use crate::scalar::Scalar;
use crate::sequences::fibonomial;
use crate::triads::{BandedRecurrence, PolynomialSequence};
use crate::triangle::{FamilyTag, Triangle};
use crate::Rational;

/// Truncated one-step transition matrix. Row `n` stores columns `0..=n+1`
/// (lower Hessenberg).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StepMatrix<T> {
    rows: Vec<Vec<T>>,
}

impl<T: Scalar> StepMatrix<T> {
    /// Rows must have length `n + 2`; shorter rows are zero-padded.
    pub fn new(rows: Vec<Vec<T>>) -> Result<Self> {
        let rows = rows
            .into_iter()
            .enumerate()
            .map(|(n, mut r)| {
                if r.iter().skip(n + 2).any(|x| !x.is_zero()) {
                    return Err(Error::Precondition(format!(
                        "step matrix row {n} has entries beyond column {}",
                        n + 1
                    )));
                }
                r.resize(n + 2, T::zero());
                Ok(r)
            })
            .collect::<Result<_>>()?;
        Ok(StepMatrix { rows })
    }

    pub fn rows(&self) -> &[Vec<T>] {
        &self.rows
    }

    pub fn len(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    /// `F_{n,l}`, zero outside the stored band.
    pub fn get(&self, n: usize, l: usize) -> T {
        self.rows
            .get(n)
            .and_then(|r| r.get(l))
            .cloned()
            .unwrap_or_else(T::zero)
    }
}

/// Something that advances a state row by one step.
pub trait Transition<T> {
    fn apply(&self, state: &[T]) -> Result<Vec<T>>;
}

impl<T: Scalar> Transition<T> for StepMatrix<T> {
    /// Row vector times matrix: `next_j = Σ_k state_k · F_{k,j}`.
    fn apply(&self, state: &[T]) -> Result<Vec<T>> {
        let mut next = vec![T::zero(); state.len() + 1];
        for (k, s) in state.iter().enumerate() {
            if s.is_zero() {
                continue;
            }
            let row = self.rows.get(k).ok_or(Error::WindowTooNarrow {
                needed: k + 1,
                available: self.rows.len(),
            })?;
            for (j, f) in row.iter().enumerate() {
                if !f.is_zero() {
                    next[j] = next[j].clone() + s.clone() * f.clone();
                }
            }
        }
        Ok(next)
    }
}

impl<T: Scalar> Transition<T> for BandedRecurrence<T> {
    fn apply(&self, state: &[T]) -> Result<Vec<T>> {
        self.step(state).map_err(|e| match e {
            Error::InsufficientLevels { needed, available, .. } => {
                Error::WindowTooNarrow { needed, available }
            }
            other => other,
        })
    }
}

/// `C_n = C_0 · X^n`. The returned state has `c0.len() + steps` entries.
/// Fails instead of truncating when the state would leave the levels the
/// transition covers.
pub fn evolve<T: Scalar, X: Transition<T> + ?Sized>(c0: &[T], x: &X, steps: usize) -> Result<Vec<T>> {
    let mut state = c0.to_vec();
    for _ in 0..steps {
        state = x.apply(&state)?;
    }
    Ok(state)
}

/// Solve `C·F = E·C` for `F` by forward substitution:
/// `F_n = C_{n+1} - Σ_{k<n} c_{n,k} F_k`.
///
/// A triangle with rows `0..=N+1` yields `F` rows `0..=N`.
pub fn solve_step_matrix<T: Scalar>(c: &Triangle<T>) -> Result<StepMatrix<T>> {
    c.check_unipotent()?;
    let mut rows: Vec<Vec<T>> = Vec::with_capacity(c.max_row());
    for n in 0..c.max_row() {
        let mut f = c.row(n + 1).to_vec();
        for (k, fk) in rows.iter().enumerate() {
            let ck = c.get(n, k);
            if ck.is_zero() {
                continue;
            }
            for (slot, v) in f.iter_mut().zip(fk) {
                *slot = slot.clone() - ck.clone() * v.clone();
            }
        }
        rows.push(f);
    }
    Ok(StepMatrix { rows })
}

/// Solve `x·Φ = F·Φ` row by row: `Φ_{n+1} = x·Φ_n - Σ_{l<=n} F_{n,l} Φ_l`.
pub fn phi_from_step_matrix<T: Scalar>(f: &StepMatrix<T>, max_index: usize) -> Result<PolynomialSequence<T>> {
    if f.len() < max_index {
        return Err(Error::InsufficientLevels {
            what: "step matrix",
            needed: max_index,
            available: f.len(),
        });
    }
    let mut polys: Vec<Polynomial<T>> = vec![Polynomial::one()];
    for n in 0..max_index {
        let row = &f.rows[n];
        if !row[n + 1].is_one() {
            return Err(Error::NonUnitSuperdiagonal { row: n });
        }
        let mut next = polys[n].shift_up();
        for (l, coef) in row[..=n].iter().enumerate() {
            if !coef.is_zero() {
                next = &next - &polys[l].scale(coef);
            }
        }
        polys.push(next);
    }
    Ok(PolynomialSequence::new(polys))
}

/// Exact inverse of a unipotent triangle, one column solve at a time.
///
/// Row `n` of the inverse holds the ascending coefficients of the basis
/// polynomial `Φ_n` dual to the triangle.
pub fn invert_unipotent<T: Scalar>(c: &Triangle<T>) -> Result<Triangle<T>> {
    c.check_unipotent()?;
    let size = c.max_row() + 1;
    let l = c.rows();
    let mut inv = vec![vec![T::zero(); size]; size];
    for j in 0..size {
        let mut e = vec![T::zero(); size];
        e[j] = T::one();
        let col = lower_triangular_solve(l, &e)?;
        for (i, v) in col.into_iter().enumerate() {
            inv[i][j] = v;
        }
    }
    Triangle::new(
        inv,
        FamilyTag::new(format!("{}-inverse", c.family().name)),
    )
}

/// `c_n = Σ_k t_{n,k} a_k b_{n-k}` for `n = 0..=max`.
pub fn convolve_with_triangle<T: Scalar>(tri: &Triangle<T>, a: &[T], b: &[T], max: usize) -> Result<Vec<T>> {
    if a.len() <= max || b.len() <= max {
        return Err(Error::Precondition(format!(
            "convolution to index {max} needs {} terms of each sequence",
            max + 1
        )));
    }
    if tri.max_row() < max {
        return Err(Error::InsufficientLevels {
            what: "triangle",
            needed: max + 1,
            available: tri.max_row() + 1,
        });
    }
    Ok((0..=max)
        .map(|n| {
            (0..=n).fold(T::zero(), |acc, k| {
                acc + tri.get(n, k) * a[k].clone() * b[n - k].clone()
            })
        })
        .collect())
}

/// Fibonomial convolution `c_n = Σ_k (n k)_F a_k b_{n-k}`.
pub fn convolve_fibonomial(a: &[Rational], b: &[Rational], max: usize) -> Result<Vec<Rational>> {
    let tri = Triangle::from_fn(max, FamilyTag::new("fibonomial"), |n, k| {
        Rational::from_integer(fibonomial(n as i64, k as i64))
    });
    convolve_with_triangle(&tri, a, b, max)
}

/// `E·C`: the triangle's rows advanced by one, as a ragged matrix.
pub fn shift_rows<T: Scalar>(c: &Triangle<T>) -> Vec<Vec<T>> {
    c.rows()[1..].to_vec()
}

/// `A·B` for ragged row-major matrices (missing entries are zero).
pub fn ragged_mul<T: Scalar>(a: &[Vec<T>], b: &[Vec<T>]) -> Vec<Vec<T>> {
    a.iter()
        .map(|row| {
            let width = row
                .iter()
                .enumerate()
                .filter(|(_, x)| !x.is_zero())
                .map(|(k, _)| b.get(k).map_or(0, |r| r.len()))
                .max()
                .unwrap_or(0);
            let mut out = vec![T::zero(); width];
            for (k, x) in row.iter().enumerate() {
                if x.is_zero() {
                    continue;
                }
                for (j, y) in b[k].iter().enumerate() {
                    out[j] = out[j].clone() + x.clone() * y.clone();
                }
            }
            trim(out)
        })
        .collect()
}

fn trim<T: Scalar>(mut v: Vec<T>) -> Vec<T> {
    while v.last().is_some_and(|x| x.is_zero()) {
        v.pop();
    }
    v
}

/// Compare two ragged rows, treating missing entries as zero.
pub fn rows_equal<T: Scalar>(a: &[T], b: &[T]) -> bool {
    let len = a.len().max(b.len());
    (0..len).all(|j| {
        let x = a.get(j).cloned().unwrap_or_else(T::zero);
        let y = b.get(j).cloned().unwrap_or_else(T::zero);
        x == y
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: i64) -> Rational {
        Rational::from_integer(n.into())
    }

    fn rv(xs: &[i64]) -> Vec<Rational> {
        xs.iter().map(|&x| r(x)).collect()
    }

    fn fib_triangle(max: usize) -> Triangle<Rational> {
        Triangle::from_fn(max, FamilyTag::new("fibonomial"), |n, k| {
            Rational::from_integer(fibonomial(n as i64, k as i64))
        })
    }

    fn fibonomial_row(n: usize) -> Vec<num_bigint::BigInt> {
        (0..=n).map(|k| fibonomial(n as i64, k as i64)).collect()
    }

    fn pascal(max: usize) -> Triangle<Rational> {
        Triangle::from_fn(max, FamilyTag::new("pascal"), |n, k| {
            Rational::from_integer(crate::sequences::binomial(n as i64, k as i64))
        })
    }

    #[test]
    fn evolve_zero_steps() {
        let x = BandedRecurrence::constant(4, r(1), r(2), r(1));
        assert_eq!(evolve(&rv(&[3, 1]), &x, 0).unwrap(), rv(&[3, 1]));
    }

    #[test]
    fn evolve_catalan_tridiagonal() {
        let x = BandedRecurrence::constant(4, r(1), r(2), r(1));
        assert_eq!(evolve(&rv(&[1]), &x, 3).unwrap(), rv(&[14, 14, 6, 1]));
        let padded = evolve(&rv(&[1, 0, 0]), &x, 3).unwrap();
        assert_eq!(padded, rv(&[14, 14, 6, 1, 0, 0]));
    }

    #[test]
    fn evolve_fibonomial_step_matrix() {
        let f = solve_step_matrix(&fib_triangle(6)).unwrap();
        assert_eq!(evolve(&rv(&[1]), &f, 5).unwrap(), rv(&[1, 5, 15, 15, 5, 1]));
    }

    #[test]
    fn evolve_refuses_narrow_window() {
        let f = solve_step_matrix(&fib_triangle(3)).unwrap();
        assert_eq!(
            evolve(&rv(&[1]), &f, 4).unwrap_err(),
            Error::WindowTooNarrow { needed: 4, available: 3 }
        );
        let x = BandedRecurrence::constant(2, r(1), r(2), r(1));
        assert!(matches!(evolve(&rv(&[1]), &x, 3), Err(Error::WindowTooNarrow { .. })));
    }

    #[test]
    fn fibonomial_step_rows() {
        let f = solve_step_matrix(&fib_triangle(7)).unwrap();
        assert_eq!(f.rows()[0], rv(&[1, 1]));
        assert_eq!(f.rows()[1], rv(&[0, 0, 1]));
        assert_eq!(f.rows()[4], rv(&[0, -2, 0, 6, 2, 1]));
        assert_eq!(f.rows()[5], rv(&[0, 2, -10, 0, 15, 3, 1]));
        assert_eq!(f.len(), 7);
    }

    #[test]
    fn pascal_step_matrix_is_banded() {
        let f = solve_step_matrix(&pascal(10)).unwrap();
        for (n, row) in f.rows().iter().enumerate() {
            let mut e = vec![r(0); n + 2];
            e[n] = r(1);
            e[n + 1] = r(1);
            assert_eq!(row, &e);
        }
    }

    #[test]
    fn step_matrix_needs_unipotent() {
        let t = Triangle::new(vec![rv(&[1]), rv(&[1, 2])], FamilyTag::default()).unwrap();
        assert_eq!(solve_step_matrix(&t).unwrap_err(), Error::NonUnitDiagonal { row: 1 });
    }

    #[test]
    fn phi_from_fibonomial() {
        let f = solve_step_matrix(&fib_triangle(4)).unwrap();
        let phis = phi_from_step_matrix(&f, 3).unwrap();
        assert_eq!(phis[1].coeffs(), rv(&[-1, 1]).as_slice());
        // x·Φ_1 - F_{1,0}Φ_0 - F_{1,1}Φ_1 with F_1 = (0,0,1)
        assert_eq!(phis[2].coeffs(), rv(&[0, -1, 1]).as_slice());
        assert_eq!(phis[3].coeffs(), rv(&[1, 0, -2, 1]).as_slice());
    }

    #[test]
    fn phi_from_pascal_is_binomial_power() {
        let f = solve_step_matrix(&pascal(9)).unwrap();
        let phis = phi_from_step_matrix(&f, 8).unwrap();
        let mut p = Polynomial::one();
        for k in 0..=8 {
            assert_eq!(phis[k], p);
            p = p.mul_linear(&r(1));
        }
    }

    #[test]
    fn phi_rejects_bad_superdiagonal() {
        let f = StepMatrix::new(vec![rv(&[1, 2])]).unwrap();
        assert_eq!(phi_from_step_matrix(&f, 1).unwrap_err(), Error::NonUnitSuperdiagonal { row: 0 });
    }

    #[test]
    fn inverse_examples() {
        let id: Triangle<Rational> = Triangle::identity(5);
        assert_eq!(invert_unipotent(&id).unwrap().rows(), id.rows());

        let inv = invert_unipotent(&pascal(8)).unwrap();
        for n in 0..=8i64 {
            for k in 0..=n {
                let sign = if (n - k) % 2 == 0 { 1 } else { -1 };
                let expect = crate::sequences::binomial(n, k) * sign;
                assert_eq!(inv.get(n as usize, k as usize), Rational::from_integer(expect));
            }
        }

        // forward substitution by hand on the 4x4 Fibonomial block
        let inv = invert_unipotent(&fib_triangle(3)).unwrap();
        assert_eq!(inv.row(3), rv(&[1, 0, -2, 1]).as_slice());
    }

    #[test]
    fn inverse_multiplies_back() {
        let c = fib_triangle(10);
        let inv = invert_unipotent(&c).unwrap();
        let prod = ragged_mul(c.rows(), inv.rows());
        for (n, row) in prod.iter().enumerate() {
            let mut e = vec![r(0); n + 1];
            e[n] = r(1);
            assert!(rows_equal(row, &e), "row {n}");
        }
    }

    #[test]
    fn convolution_examples() {
        let b = rv(&[3, 1, 4, 1, 5]);
        let delta0 = rv(&[1, 0, 0, 0, 0]);
        assert_eq!(convolve_fibonomial(&delta0, &b, 4).unwrap(), b);

        let ones = rv(&[1; 5]);
        let c = convolve_fibonomial(&ones, &ones, 4).unwrap();
        // row sums of the Fibonomial triangle: 1, 2, 3, 6, 14
        let sums: Vec<Rational> = (0..5)
            .map(|n| fibonomial_row(n).into_iter().map(Rational::from_integer).sum())
            .collect();
        assert_eq!(c, sums);
        assert_eq!(c[4], r(14));

        let delta1 = rv(&[0, 1, 0, 0, 0]);
        assert_eq!(convolve_fibonomial(&delta1, &delta1, 4).unwrap(), rv(&[0, 0, 1, 0, 0]));
    }

    #[test]
    fn convolution_length_check() {
        assert!(convolve_fibonomial(&rv(&[1, 1]), &rv(&[1, 1, 1]), 2).is_err());
    }
}
