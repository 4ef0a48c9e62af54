use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// Name and parameters of the family a triangle was generated from.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct FamilyTag {
    pub name: String,
    pub params: BTreeMap<String, String>,
}

impl FamilyTag {
    pub fn new(name: impl Into<String>) -> Self {
        FamilyTag {
            name: name.into(),
            params: BTreeMap::new(),
        }
    }

    pub fn with(mut self, key: impl Into<String>, value: impl ToString) -> Self {
        self.params.insert(key.into(), value.to_string());
        self
    }
}

/// A finite lower-triangular array `c_{n,k}`, `0 <= k <= n <= N`.
///
/// Row `n` always stores exactly `n + 1` entries; everything outside the
/// triangle reads as zero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Triangle<T> {
    rows: Vec<Vec<T>>,
    family: FamilyTag,
}

impl<T: Scalar> Triangle<T> {
    /// Build from explicit rows. Short rows are zero-padded; a row `n` with
    /// a nonzero entry beyond column `n` is rejected.
    pub fn new(rows: Vec<Vec<T>>, family: FamilyTag) -> Result<Self> {
        if rows.is_empty() {
            return Err(Error::Precondition("a triangle needs at least row 0".into()));
        }
        let rows = rows
            .into_iter()
            .enumerate()
            .map(|(n, mut row)| {
                if row[n.min(row.len())..].iter().skip(1).any(|x| !x.is_zero()) {
                    return Err(Error::NotLowerTriangular { row: n });
                }
                row.resize(n + 1, T::zero());
                Ok(row)
            })
            .collect::<Result<_>>()?;
        Ok(Triangle { rows, family })
    }

    pub fn from_fn(max_row: usize, family: FamilyTag, mut f: impl FnMut(usize, usize) -> T) -> Self {
        let rows = (0..=max_row)
            .map(|n| (0..=n).map(|k| f(n, k)).collect())
            .collect();
        Triangle { rows, family }
    }

    /// `c_{n,k} = δ_{n,k}`.
    pub fn identity(max_row: usize) -> Self {
        Self::from_fn(max_row, FamilyTag::new("identity"), |n, k| {
            if n == k {
                T::one()
            } else {
                T::zero()
            }
        })
    }

    /// Largest row index `N`.
    pub fn max_row(&self) -> usize {
        self.rows.len() - 1
    }

    pub fn rows(&self) -> &[Vec<T>] {
        &self.rows
    }

    pub fn row(&self, n: usize) -> &[T] {
        &self.rows[n]
    }

    pub fn family(&self) -> &FamilyTag {
        &self.family
    }

    pub fn with_family(mut self, family: FamilyTag) -> Self {
        self.family = family;
        self
    }

    /// `c_{n,k}`, zero outside the stored triangle.
    pub fn get(&self, n: usize, k: usize) -> T {
        self.rows
            .get(n)
            .and_then(|r| r.get(k))
            .cloned()
            .unwrap_or_else(T::zero)
    }

    /// Same as [`get`](Self::get) but accepts negative indices.
    pub fn get_signed(&self, n: i64, k: i64) -> T {
        if n < 0 || k < 0 {
            return T::zero();
        }
        self.get(n as usize, k as usize)
    }

    /// Every diagonal entry is 1.
    pub fn is_unipotent(&self) -> bool {
        self.rows.iter().enumerate().all(|(n, r)| r[n].is_one())
    }

    /// First row whose diagonal entry is not 1.
    pub fn check_unipotent(&self) -> Result<()> {
        match self.rows.iter().enumerate().find(|(n, r)| !r[*n].is_one()) {
            Some((row, _)) => Err(Error::NonUnitDiagonal { row }),
            None => Ok(()),
        }
    }

    /// Keep rows `0..=max_row`.
    pub fn truncate(&self, max_row: usize) -> Self {
        Triangle {
            rows: self.rows[..=max_row.min(self.max_row())].to_vec(),
            family: self.family.clone(),
        }
    }

    /// Drop the apex and the zero column: `c'_{n,k} = c_{n+1,k+1}`.
    ///
    /// Turns the printed Catalan triangle (column 0 zero below the apex)
    /// into the triad-normalized one with `c'_{0,0} = 1`.
    pub fn strip_apex(&self) -> Self {
        let max = self.max_row().saturating_sub(1);
        Self::from_fn(max, self.family.clone(), |n, k| self.get(n + 1, k + 1))
    }

    /// Inverse of [`strip_apex`](Self::strip_apex): prepend a unit apex and a
    /// zero column, `c'_{n,k} = c_{n-1,k-1}`.
    pub fn with_apex(&self) -> Self {
        Self::from_fn(self.max_row() + 1, self.family.clone(), |n, k| match (n, k) {
            (0, 0) => T::one(),
            (_, 0) => T::zero(),
            _ => self.get(n - 1, k - 1),
        })
    }

    pub fn map<U: Scalar>(&self, f: impl Fn(&T) -> U) -> Triangle<U> {
        Triangle {
            rows: self.rows.iter().map(|r| r.iter().map(&f).collect()).collect(),
            family: self.family.clone(),
        }
    }

    /// Rows as a square `(N+1)×(N+1)` zero-padded matrix.
    pub fn to_square(&self) -> Vec<Vec<T>> {
        let size = self.rows.len();
        self.rows
            .iter()
            .map(|r| {
                let mut r = r.clone();
                r.resize(size, T::zero());
                r
            })
            .collect()
    }
}
