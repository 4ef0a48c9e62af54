//! Duality triads: a triangle recurrence for connection constants `c_{n,k}`,
//! the dual recurrence for a polynomial sequence `Φ_k`, and the identity
//! `x^n = Σ_k c_{n,k} Φ_k(x)` tying them together.
//!
//! The banded recurrence
//!
//! ```text
//! c_{n+1,k} = up_{k-1}·c_{n,k-1} + stay_k·c_{n,k} + down_{k+1}·c_{n,k+1},   c_{0,0} = 1
//! ```
//!
//! with coefficients that do not depend on `n` is dual to
//!
//! ```text
//! x·Φ_k = down_k·Φ_{k-1} + stay_k·Φ_k + up_k·Φ_{k+1},   Φ_0 = 1, Φ_{-1} = 0
//! ```
//!
//! and the two always complete to a triad (see [`verify_triad`]).

use std::ops::Index;

use crate::error::{Error, Result};
use crate::poly::{poly_linear_combination, Polynomial};
use crate::scalar::Scalar;
use crate::sequences::RootSequence;
use crate::triangle::{FamilyTag, Triangle};

/// Level-indexed coefficients of a time-independent banded recurrence.
///
/// `up_k` moves mass from level `k` to `k + 1`, `stay_k` keeps it at `k`,
/// and `down_k` moves it from `k` to `k - 1`. All three sequences are
/// stored for levels `0..levels`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BandedRecurrence<T> {
    up: Vec<T>,
    stay: Vec<T>,
    down: Vec<T>,
}

impl<T: Scalar> BandedRecurrence<T> {
    pub fn new(up: Vec<T>, stay: Vec<T>, down: Vec<T>) -> Result<Self> {
        if up.len() != stay.len() || up.len() != down.len() {
            return Err(Error::Precondition(format!(
                "banded recurrence sequences differ in length: {}, {}, {}",
                up.len(),
                stay.len(),
                down.len()
            )));
        }
        Ok(BandedRecurrence { up, stay, down })
    }

    /// Coefficients `(up_k, stay_k, down_k)` for `k < levels`.
    pub fn from_fn(levels: usize, mut f: impl FnMut(usize) -> (T, T, T)) -> Self {
        let mut rec = BandedRecurrence {
            up: Vec::with_capacity(levels),
            stay: Vec::with_capacity(levels),
            down: Vec::with_capacity(levels),
        };
        for k in 0..levels {
            let (i, q, d) = f(k);
            rec.up.push(i);
            rec.stay.push(q);
            rec.down.push(d);
        }
        rec
    }

    pub fn constant(levels: usize, up: T, stay: T, down: T) -> Self {
        Self::from_fn(levels, |_| (up.clone(), stay.clone(), down.clone()))
    }

    pub fn levels(&self) -> usize {
        self.up.len()
    }

    pub fn up(&self) -> &[T] {
        &self.up
    }

    pub fn stay(&self) -> &[T] {
        &self.stay
    }

    pub fn down(&self) -> &[T] {
        &self.down
    }

    fn require(&self, levels: usize, what: &'static str) -> Result<()> {
        if self.levels() < levels {
            return Err(Error::InsufficientLevels {
                what,
                needed: levels,
                available: self.levels(),
            });
        }
        Ok(())
    }

    /// One application of the recurrence to a state row. The output is one
    /// entry longer than the input.
    pub fn step(&self, row: &[T]) -> Result<Vec<T>> {
        let top = row.iter().rposition(|c| !c.is_zero());
        if let Some(h) = top {
            self.require(h + 1, "banded recurrence")?;
        }
        let mut next = vec![T::zero(); row.len() + 1];
        for (j, c) in row.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            next[j + 1] = next[j + 1].clone() + self.up[j].clone() * c.clone();
            next[j] = next[j].clone() + self.stay[j].clone() * c.clone();
            if j > 0 {
                next[j - 1] = next[j - 1].clone() + self.down[j].clone() * c.clone();
            }
        }
        Ok(next)
    }
}

/// `Φ_0, …, Φ_N`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolynomialSequence<T>(Vec<Polynomial<T>>);

impl<T: Scalar> PolynomialSequence<T> {
    pub fn new(polys: Vec<Polynomial<T>>) -> Self {
        PolynomialSequence(polys)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn polys(&self) -> &[Polynomial<T>] {
        &self.0
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Polynomial<T>> {
        self.0.iter()
    }

    /// Ascending coefficient rows, row `k` zero-padded to `k + 1` entries.
    pub fn coefficient_rows(&self) -> Vec<Vec<T>> {
        self.0
            .iter()
            .enumerate()
            .map(|(k, p)| {
                let mut c = p.coeffs().to_vec();
                if c.len() < k + 1 {
                    c.resize(k + 1, T::zero());
                }
                c
            })
            .collect()
    }

    /// Every `Φ_k` has degree exactly `k`.
    pub fn has_exact_degrees(&self) -> bool {
        self.0.iter().enumerate().all(|(k, p)| p.degree() == k as isize)
    }
}

impl<T> Index<usize> for PolynomialSequence<T> {
    type Output = Polynomial<T>;
    fn index(&self, k: usize) -> &Polynomial<T> {
        &self.0[k]
    }
}

/// Outcome of checking `Σ_k c_{n,k} Φ_k(x) = x^n` for `n = 0..=verified_up_to`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TriadReport<T> {
    pub verified_up_to: usize,
    pub holds: bool,
    /// First failing row and its residual `Σ_k c_{n,k}Φ_k - x^n`.
    pub first_failure: Option<(usize, Polynomial<T>)>,
}

/// Iterate the banded recurrence from `c_{0,0} = 1` to rows `0..=max_row`.
///
/// With nonnegative coefficients, `c_{n,k}` counts the weighted ways to reach
/// level `k` in `n` steps from level 0.
pub fn generate_from_banded<T: Scalar>(
    rec: &BandedRecurrence<T>,
    max_row: usize,
) -> Result<Triangle<T>> {
    let mut rows = vec![vec![T::one()]];
    for n in 0..max_row {
        let next = rec.step(&rows[n])?;
        rows.push(next);
    }
    Triangle::new(rows, FamilyTag::new("banded"))
}

/// Solve the dual recurrence for `Φ_0..=Φ_N`:
/// `Φ_{k+1} = (x·Φ_k - stay_k·Φ_k - down_k·Φ_{k-1}) / up_k`.
pub fn dual_polynomials<T: Scalar>(
    rec: &BandedRecurrence<T>,
    max_index: usize,
) -> Result<PolynomialSequence<T>> {
    rec.require(max_index, "banded recurrence")?;
    let mut polys = vec![Polynomial::one()];
    let mut prev = Polynomial::zero();
    for k in 0..max_index {
        let up = &rec.up[k];
        if up.is_zero() {
            return Err(Error::DualNotSolvable { level: k });
        }
        let cur = &polys[k];
        let numer = &(&cur.shift_up() - &cur.scale(&rec.stay[k])) - &prev.scale(&rec.down[k]);
        let next = numer.scale(&(T::one() / up.clone()));
        prev = cur.clone();
        polys.push(next);
    }
    Ok(PolynomialSequence(polys))
}

/// Check `Σ_k c_{n,k} Φ_k(x) = x^n` exactly for every row both inputs cover.
pub fn verify_triad<T: Scalar>(tri: &Triangle<T>, phis: &PolynomialSequence<T>) -> TriadReport<T> {
    let top = tri.max_row().min(phis.len().saturating_sub(1));
    let mut first_failure = None;
    for n in 0..=top {
        let residual = triad_residual(tri, phis, n);
        if !residual.is_zero() {
            first_failure = Some((n, residual));
            break;
        }
    }
    TriadReport {
        verified_up_to: top,
        holds: first_failure.is_none(),
        first_failure,
    }
}

/// `Σ_{k<=n} c_{n,k} Φ_k(x) - x^n`.
pub fn triad_residual<T: Scalar>(tri: &Triangle<T>, phis: &PolynomialSequence<T>, n: usize) -> Polynomial<T> {
    let row = tri.row(n);
    let combo = poly_linear_combination(row, &phis.polys()[..=n])
        .expect("row n has n + 1 entries");
    &combo - &Polynomial::monomial(n)
}

/// Coefficients `a_k` with `p = Σ a_k Φ_k`, by back-substitution from the
/// top degree. Needs `deg Φ_k = k` for `k <= deg p`. The zero polynomial
/// expands to an empty list.
pub fn expand_in_basis<T: Scalar>(p: &Polynomial<T>, phis: &PolynomialSequence<T>) -> Result<Vec<T>> {
    let deg = p.degree();
    let needed = (deg + 1) as usize;
    if phis.len() < needed {
        return Err(Error::BasisTooShort {
            degree: deg,
            needed,
            available: phis.len(),
        });
    }
    for (k, phi) in phis.polys()[..needed].iter().enumerate() {
        if phi.degree() != k as isize {
            return Err(Error::DegreeCondition {
                index: k,
                degree: phi.degree(),
            });
        }
    }
    let mut rest = p.clone();
    let mut out = vec![T::zero(); needed];
    for k in (0..needed).rev() {
        let phi = &phis[k];
        let a = rest.coeff(k) / phi.leading().expect("degree k >= 0").clone();
        if !a.is_zero() {
            rest = &rest - &phi.scale(&a);
        }
        out[k] = a;
    }
    debug_assert!(rest.is_zero());
    Ok(out)
}

/// Generalized Lah numbers of a root sequence:
/// `L_{n+1,k} = L_{n,k-1} + r_{k+1}·L_{n,k}`, `L_{0,0} = 1`.
pub fn lah_from_roots<T: Scalar>(roots: &RootSequence<T>, max_row: usize) -> Result<Triangle<T>> {
    let r = roots.take(max_row)?;
    let mut rows = vec![vec![T::one()]];
    for n in 0..max_row {
        let prev = &rows[n];
        let next = (0..=n + 1)
            .map(|k| {
                let shift = if k > 0 { prev[k - 1].clone() } else { T::zero() };
                let stay = if k <= n {
                    r[k].clone() * prev[k].clone()
                } else {
                    T::zero()
                };
                shift + stay
            })
            .collect();
        rows.push(next);
    }
    Triangle::new(rows, FamilyTag::new("lah"))
}

/// Monic persistent-root polynomials `Φ_k(x) = Π_{s=1..k} (x - r_s)`.
pub fn persistent_root_polys<T: Scalar>(
    roots: &RootSequence<T>,
    max_index: usize,
) -> Result<PolynomialSequence<T>> {
    let r = roots.take(max_index)?;
    let mut polys = vec![Polynomial::one()];
    for root in &r {
        let next = polys.last().expect("nonempty").mul_linear(root);
        polys.push(next);
    }
    Ok(PolynomialSequence(polys))
}

/// The banded recurrence whose triangle is `lah_from_roots(roots)`:
/// `up ≡ 1`, `stay_k = r_{k+1}`, `down ≡ 0`.
pub fn lah_recurrence<T: Scalar>(roots: &RootSequence<T>, levels: usize) -> Result<BandedRecurrence<T>> {
    let stay = roots.take(levels)?;
    Ok(BandedRecurrence {
        up: vec![T::one(); levels],
        stay,
        down: vec![T::zero(); levels],
    })
}
