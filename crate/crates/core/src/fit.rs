//! Detect whether a triangle obeys a time-independent banded recurrence.
//!
//! For every column `k` the entries of the triangle give one linear equation
//! per row `n`,
//!
//! ```text
//! c_{n+1,k} = up_{k-1}·c_{n,k-1} + stay_k·c_{n,k} + down_{k+1}·c_{n,k+1},
//! ```
//!
//! in the three unknowns that touch column `k`. Each unknown appears in
//! exactly one column, so the columns are solved independently. A triad
//! exists exactly when every column system is consistent; otherwise the
//! coefficients would have to depend on `n`, and the failing equations are
//! returned as a witness.

use crate::error::{Error, Result};
use crate::linalg::{rank, solve_least_support};
use crate::scalar::Scalar;
use crate::triads::BandedRecurrence;
use crate::triangle::Triangle;

/// One coefficient of a banded recurrence.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Slot {
    Up(usize),
    Stay(usize),
    Down(usize),
}

/// A consistent fit. Slots listed in `free` were left undetermined by the
/// truncation (no pivot in their column system) and set to zero: `down`
/// first, then `up`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Fitted<T> {
    pub recurrence: BandedRecurrence<T>,
    pub free: Vec<Slot>,
}

impl<T: Scalar> Fitted<T> {
    pub fn is_determined(&self, slot: Slot) -> bool {
        !self.free.contains(&slot)
    }

    pub fn value(&self, slot: Slot) -> &T {
        let rec = &self.recurrence;
        match slot {
            Slot::Up(k) => &rec.up()[k],
            Slot::Stay(k) => &rec.stay()[k],
            Slot::Down(k) => &rec.down()[k],
        }
    }
}

/// A set of equations `(n, k)` from one column that admit no common solution.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witness {
    pub column: usize,
    /// `(n, k)` pairs: the equation for `c_{n+1,k}` in terms of row `n`.
    pub equations: Vec<(usize, usize)>,
}

impl Witness {
    /// Re-derive the witness equations from `c` and confirm, by comparing
    /// ranks of the coefficient and augmented matrices, that they are
    /// inconsistent.
    pub fn is_inconsistent<T: Scalar>(&self, c: &Triangle<T>) -> bool {
        let (a, b): (Vec<_>, Vec<_>) = self
            .equations
            .iter()
            .map(|&(n, k)| column_equation(c, n, k))
            .unzip();
        let augmented: Vec<Vec<T>> = a
            .iter()
            .zip(&b)
            .map(|(row, rhs)| {
                let mut r = row.clone();
                r.push(rhs.clone());
                r
            })
            .collect();
        rank(&a, 3) < rank(&augmented, 4)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FitResult<T> {
    Fit(Fitted<T>),
    NoFit(Vec<Witness>),
}

impl<T> FitResult<T> {
    pub fn is_fit(&self) -> bool {
        matches!(self, FitResult::Fit(_))
    }
}

/// Coefficients `[c_{n,k}, c_{n,k-1}, c_{n,k+1}]` and right-hand side
/// `c_{n+1,k}`. The column order (stay, up, down) makes `down` the first
/// unknown to be left free, then `up`.
fn column_equation<T: Scalar>(c: &Triangle<T>, n: usize, k: usize) -> (Vec<T>, T) {
    let (n, k) = (n as i64, k as i64);
    (
        vec![c.get_signed(n, k), c.get_signed(n, k - 1), c.get_signed(n, k + 1)],
        c.get_signed(n + 1, k),
    )
}

const STAY: usize = 0;
const UP: usize = 1;
const DOWN: usize = 2;

/// Fit a banded recurrence to `c`, which must have at least rows `0..=4`.
pub fn fit_banded<T: Scalar>(c: &Triangle<T>) -> Result<FitResult<T>> {
    let max = c.max_row();
    if max < 4 {
        return Err(Error::Precondition(format!(
            "fitting needs rows 0..=4 at least, triangle has rows 0..={max}"
        )));
    }
    let levels = max + 1;
    let mut up = vec![T::zero(); levels];
    let mut stay = vec![T::zero(); levels];
    let mut down = vec![T::zero(); levels];
    let mut pinned = Vec::new();
    let mut witnesses = Vec::new();

    for k in 0..=max {
        // rows n < k - 1 give 0 = 0
        let rows: Vec<usize> = (k.saturating_sub(1)..max).collect();
        match solve_column(c, k, &rows) {
            Ok((x, pivots)) => {
                for p in pivots {
                    pinned.push(match p {
                        STAY => Slot::Stay(k),
                        UP => Slot::Up(k - 1),
                        _ => Slot::Down(k + 1),
                    });
                }
                stay[k] = x[STAY].clone();
                if k > 0 {
                    up[k - 1] = x[UP].clone();
                }
                if k < max {
                    down[k + 1] = x[DOWN].clone();
                }
            }
            Err(equations) => witnesses.push(Witness {
                column: k,
                equations: equations.into_iter().map(|n| (n, k)).collect(),
            }),
        }
    }
    if !witnesses.is_empty() {
        return Ok(FitResult::NoFit(witnesses));
    }

    let recurrence = BandedRecurrence::new(up, stay, down)?;
    // every entry below row 0 is one of the solved equations, so this can
    // only fail on a bug; keep it as the final arbiter anyway
    let mut row = c.row(0).to_vec();
    for n in 0..max {
        row = recurrence.step(&row)?;
        if row.as_slice() != c.row(n + 1) {
            return Err(Error::Precondition(format!(
                "fitted recurrence does not regenerate row {}",
                n + 1
            )));
        }
    }

    let mut free = Vec::new();
    for k in 0..levels {
        for slot in [Slot::Up(k), Slot::Stay(k), Slot::Down(k)] {
            if !pinned.contains(&slot) {
                free.push(slot);
            }
        }
    }
    Ok(FitResult::Fit(Fitted { recurrence, free }))
}

/// Solve one column. On inconsistency returns the row indices of an
/// independent basis plus the first equation that contradicts it.
fn solve_column<T: Scalar>(
    c: &Triangle<T>,
    k: usize,
    rows: &[usize],
) -> std::result::Result<(Vec<T>, Vec<usize>), Vec<usize>> {
    let mut basis: Vec<usize> = Vec::new();
    let mut a: Vec<Vec<T>> = Vec::new();
    let mut b: Vec<T> = Vec::new();
    for &n in rows {
        let (coef, rhs) = column_equation(c, n, k);
        let before = rank(&a, 3);
        a.push(coef);
        b.push(rhs);
        if rank(&a, 3) > before {
            basis.push(n);
            continue;
        }
        // dependent on the basis: its value is forced, check it
        if solve_least_support(&a, &b, 3).is_none() {
            basis.push(n);
            return Err(basis);
        }
        a.pop();
        b.pop();
    }
    Ok(solve_least_support(&a, &b, 3).expect("independent rows are consistent"))
}
