//! Named triangle families and the choice of dual construction for each.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::dynsys::{phi_from_step_matrix, solve_step_matrix};
use crate::error::{Error, Result};
use crate::fit::{fit_banded, FitResult};
use crate::scalar::Scalar;
use crate::sequences::{eulerian_rows, fib, fib_extended, stirling1_rows, QParam, RootSequence};
use crate::triads::{
    dual_polynomials, generate_from_banded, lah_from_roots, lah_recurrence, persistent_root_polys,
    BandedRecurrence, PolynomialSequence,
};
use crate::triangle::{FamilyTag, Triangle};
use crate::{RatTriangle, Rational};

/// Family names accepted on the command line.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FamilyKind {
    Pascal,
    QGaussian,
    CatalanShifted,
    CatalanTriad,
    Fibonomial,
    Stirling1,
    Eulerian,
    Lah,
}

impl FamilyKind {
    pub const ALL: [FamilyKind; 8] = [
        FamilyKind::Pascal,
        FamilyKind::QGaussian,
        FamilyKind::CatalanShifted,
        FamilyKind::CatalanTriad,
        FamilyKind::Fibonomial,
        FamilyKind::Stirling1,
        FamilyKind::Eulerian,
        FamilyKind::Lah,
    ];

    pub fn name(self) -> &'static str {
        match self {
            FamilyKind::Pascal => "pascal",
            FamilyKind::QGaussian => "q-gaussian",
            FamilyKind::CatalanShifted => "catalan-shifted",
            FamilyKind::CatalanTriad => "catalan-triad",
            FamilyKind::Fibonomial => "fibonomial",
            FamilyKind::Stirling1 => "stirling1",
            FamilyKind::Eulerian => "eulerian",
            FamilyKind::Lah => "lah",
        }
    }
}

impl fmt::Display for FamilyKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for FamilyKind {
    type Err = Error;

    /// Accepts hyphens or underscores (`q-gaussian`, `q_gaussian`).
    fn from_str(s: &str) -> Result<Self> {
        let norm = s.trim().to_ascii_lowercase().replace('_', "-");
        FamilyKind::ALL
            .into_iter()
            .find(|k| k.name() == norm)
            .ok_or_else(|| Error::UnknownFamily(s.to_string()))
    }
}

/// A fully parameterized family.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Family {
    Pascal,
    QGaussian(QParam<Rational>),
    /// The printed Catalan triangle: apex 1, column 0 zero below it.
    CatalanShifted,
    /// The triad-normalized Catalan triangle, rows (1), (2,1), (5,4,1), …
    CatalanTriad,
    Fibonomial,
    Stirling1,
    Eulerian,
    Lah(RootSequence<Rational>),
}

impl Family {
    pub fn from_parts(
        kind: FamilyKind,
        q: Option<Rational>,
        roots: Option<RootSequence<Rational>>,
    ) -> Result<Family> {
        Ok(match kind {
            FamilyKind::Pascal => Family::Pascal,
            FamilyKind::QGaussian => {
                let q = q.ok_or(Error::MissingParameter {
                    family: kind.name().into(),
                    param: "q",
                })?;
                Family::QGaussian(QParam::new(q)?)
            }
            FamilyKind::CatalanShifted => Family::CatalanShifted,
            FamilyKind::CatalanTriad => Family::CatalanTriad,
            FamilyKind::Fibonomial => Family::Fibonomial,
            FamilyKind::Stirling1 => Family::Stirling1,
            FamilyKind::Eulerian => Family::Eulerian,
            FamilyKind::Lah => Family::Lah(roots.ok_or(Error::MissingParameter {
                family: kind.name().into(),
                param: "roots",
            })?),
        })
    }

    pub fn kind(&self) -> FamilyKind {
        match self {
            Family::Pascal => FamilyKind::Pascal,
            Family::QGaussian(_) => FamilyKind::QGaussian,
            Family::CatalanShifted => FamilyKind::CatalanShifted,
            Family::CatalanTriad => FamilyKind::CatalanTriad,
            Family::Fibonomial => FamilyKind::Fibonomial,
            Family::Stirling1 => FamilyKind::Stirling1,
            Family::Eulerian => FamilyKind::Eulerian,
            Family::Lah(_) => FamilyKind::Lah,
        }
    }

    pub fn tag(&self) -> FamilyTag {
        let tag = FamilyTag::new(self.kind().name());
        match self {
            Family::QGaussian(q) => tag.with("q", q.value()),
            Family::Lah(roots) => tag.with("roots", describe_roots(roots)),
            _ => tag,
        }
    }

    /// The time-independent banded recurrence the family is known to obey,
    /// if any.
    pub fn known_recurrence(&self, levels: usize) -> Option<BandedRecurrence<Rational>> {
        let one = Rational::one();
        let zero = Rational::zero();
        match self {
            Family::Pascal => Some(BandedRecurrence::constant(levels, one.clone(), one, zero)),
            Family::QGaussian(q) => Some(BandedRecurrence::from_fn(levels, |k| {
                (one.clone(), q.value().powu(k as u32), zero.clone())
            })),
            Family::CatalanTriad => Some(BandedRecurrence::constant(
                levels,
                one,
                Rational::from_integer(2.into()),
                Rational::one(),
            )),
            Family::Lah(roots) => lah_recurrence(roots, levels).ok(),
            _ => None,
        }
    }
}

/// Compact description of a root sequence, as used in family parameters.
pub fn describe_roots(roots: &RootSequence<Rational>) -> String {
    match roots {
        RootSequence::Constant(c) => format!("constant:{c}"),
        RootSequence::Geometric(q) => format!("geometric:{q}"),
        RootSequence::Arithmetic { first, step } => format!("arithmetic:{first}:{step}"),
        RootSequence::Explicit(list) => list
            .iter()
            .map(|r| r.to_string())
            .collect::<Vec<_>>()
            .join(","),
    }
}

fn int_triangle(rows: Vec<Vec<BigInt>>, tag: FamilyTag) -> RatTriangle {
    let rows = rows
        .into_iter()
        .map(|r| r.into_iter().map(Rational::from_integer).collect())
        .collect();
    Triangle::new(rows, tag).expect("generated rows are lower triangular")
}

/// Rows `0..=max_row` of a named family.
pub fn generate_named(family: &Family, max_row: usize) -> Result<RatTriangle> {
    let tag = family.tag();
    let tri = match family {
        Family::Pascal | Family::QGaussian(_) | Family::CatalanTriad => {
            let rec = family
                .known_recurrence(max_row)
                .expect("family has a banded recurrence");
            generate_from_banded(&rec, max_row)?
        }
        Family::CatalanShifted => {
            if max_row == 0 {
                Triangle::new(vec![vec![Rational::one()]], tag.clone())?
            } else {
                generate_named(&Family::CatalanTriad, max_row - 1)?.with_apex()
            }
        }
        Family::Fibonomial => int_triangle(fibonomial_rows(max_row), tag.clone()),
        Family::Stirling1 => int_triangle(stirling1_rows(max_row), tag.clone()),
        Family::Eulerian => int_triangle(eulerian_rows(max_row), tag.clone()),
        Family::Lah(roots) => lah_from_roots(roots, max_row)?,
    };
    Ok(tri.with_family(tag))
}

/// Fibonomial rows by `(n+1 k)_F = F_{k+1}(n k)_F + F_{n-k}(n k-1)_F`.
///
/// On the diagonal `k = n+1` this reads `1 = F_{-1}·1`, so the Fibonacci
/// numbers are taken on all of ℤ.
pub fn fibonomial_rows(max_row: usize) -> Vec<Vec<BigInt>> {
    let f: Vec<BigInt> = (0..=max_row + 1).map(fib).collect();
    let f_at = |i: i64| {
        if i >= 0 {
            f[i as usize].clone()
        } else {
            fib_extended(i)
        }
    };
    let mut rows = vec![vec![BigInt::one()]];
    for n in 0..max_row {
        let prev = &rows[n];
        let next = (0..=n + 1)
            .map(|k| {
                let stay = prev.get(k).map_or_else(BigInt::zero, |c| c * &f[k + 1]);
                let up = if k > 0 {
                    &prev[k - 1] * f_at(n as i64 - k as i64)
                } else {
                    BigInt::zero()
                };
                stay + up
            })
            .collect();
        rows.push(next);
    }
    rows
}

/// Fibonomial rows by `(n+1 k)_F = F_{k-1}(n k)_F + F_{n-k+2}(n k-1)_F`,
/// which needs no negative indices.
pub fn fibonomial_rows_alt(max_row: usize) -> Vec<Vec<BigInt>> {
    let f: Vec<BigInt> = (0..=max_row + 2).map(fib).collect();
    let mut rows = vec![vec![BigInt::one()]];
    for n in 0..max_row {
        let prev = &rows[n];
        let next = (0..=n + 1)
            .map(|k| {
                // column 0 is pinned to 1; F_{k-1} would need F_{-1} there
                if k == 0 {
                    return BigInt::one();
                }
                let stay = prev.get(k).map_or_else(BigInt::zero, |c| c * &f[k - 1]);
                stay + &prev[k - 1] * &f[n + 2 - k]
            })
            .collect();
        rows.push(next);
    }
    rows
}

/// Gaussian rows by `(n+1 k)_q = (n k)_q + q^(n+1-k)(n k-1)_q`.
pub fn q_gaussian_rows_alt<T: Scalar>(q: &QParam<T>, max_row: usize) -> Vec<Vec<T>> {
    let mut rows = vec![vec![T::one()]];
    for n in 0..max_row {
        let prev = &rows[n];
        let next = (0..=n + 1)
            .map(|k| {
                let stay = prev.get(k).cloned().unwrap_or_else(T::zero);
                let up = if k > 0 {
                    q.value().powu((n + 1 - k) as u32) * prev[k - 1].clone()
                } else {
                    T::zero()
                };
                stay + up
            })
            .collect();
        rows.push(next);
    }
    rows
}

/// How a dual basis was obtained.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DualRoute {
    /// Known time-independent banded recurrence.
    Banded,
    /// Banded recurrence recovered by [`fit_banded`].
    FittedBanded,
    /// Persistent-root product basis.
    PersistentRoots,
    /// `x·Φ = F·Φ` with `F` solving `C·F = E·C`.
    StepMatrix,
}

impl DualRoute {
    pub fn name(self) -> &'static str {
        match self {
            DualRoute::Banded => "banded",
            DualRoute::FittedBanded => "fitted-banded",
            DualRoute::PersistentRoots => "persistent-roots",
            DualRoute::StepMatrix => "step-matrix",
        }
    }
}

/// Dual basis `Φ_0..=Φ_N` for a family's triangle `tri` (rows `0..=N`),
/// preferring a banded recurrence and falling back to the step matrix.
pub fn dual_basis(family: &Family, tri: &RatTriangle) -> Result<(DualRoute, PolynomialSequence<Rational>)> {
    let max = tri.max_row();
    if let Family::Lah(roots) = family {
        return Ok((DualRoute::PersistentRoots, persistent_root_polys(roots, max)?));
    }
    if let Some(rec) = family.known_recurrence(max) {
        return Ok((DualRoute::Banded, dual_polynomials(&rec, max)?));
    }
    if max >= 4 {
        if let FitResult::Fit(fit) = fit_banded(tri)? {
            if let Ok(phis) = dual_polynomials(&fit.recurrence, max) {
                return Ok((DualRoute::FittedBanded, phis));
            }
        }
    }
    if tri.is_unipotent() {
        let f = solve_step_matrix(tri)?;
        return Ok((DualRoute::StepMatrix, phi_from_step_matrix(&f, max)?));
    }
    Err(Error::Precondition(format!(
        "{} admits no dual construction: no banded recurrence fits and the triangle is not unipotent",
        family.kind()
    )))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sequences::{catalan_closed, fibonomial};

    fn r(n: i64) -> Rational {
        Rational::from_integer(n.into())
    }

    fn last_row(f: &Family, n: usize) -> Vec<Rational> {
        generate_named(f, n).unwrap().row(n).to_vec()
    }

    fn rv(xs: &[i64]) -> Vec<Rational> {
        xs.iter().map(|&x| r(x)).collect()
    }

    #[test]
    fn named_examples() {
        assert_eq!(last_row(&Family::Fibonomial, 6), rv(&[1, 8, 40, 60, 40, 8, 1]));
        let q3 = Family::QGaussian(QParam::new(r(3)).unwrap());
        assert_eq!(last_row(&q3, 4), rv(&[1, 40, 130, 40, 1]));
        assert_eq!(last_row(&Family::CatalanShifted, 5), rv(&[0, 42, 48, 27, 8, 1]));
        assert_eq!(last_row(&Family::Pascal, 0), rv(&[1]));
    }

    #[test]
    fn parse_names() {
        assert_eq!("q_gaussian".parse::<FamilyKind>().unwrap(), FamilyKind::QGaussian);
        assert_eq!("Catalan-Triad".parse::<FamilyKind>().unwrap(), FamilyKind::CatalanTriad);
        assert_eq!(
            "hermite".parse::<FamilyKind>().unwrap_err(),
            Error::UnknownFamily("hermite".into())
        );
    }

    #[test]
    fn missing_parameters() {
        assert!(matches!(
            Family::from_parts(FamilyKind::QGaussian, None, None),
            Err(Error::MissingParameter { param: "q", .. })
        ));
        assert!(matches!(
            Family::from_parts(FamilyKind::Lah, None, None),
            Err(Error::MissingParameter { param: "roots", .. })
        ));
        assert!(Family::from_parts(FamilyKind::QGaussian, Some(r(0)), None).is_err());
    }

    #[test]
    fn both_fibonomial_forms_match_factorials() {
        let a = fibonomial_rows(20);
        let b = fibonomial_rows_alt(20);
        for n in 0..=20usize {
            for k in 0..=n {
                let expect = fibonomial(n as i64, k as i64);
                assert_eq!(a[n][k], expect);
                assert_eq!(b[n][k], expect);
            }
        }
    }

    #[test]
    fn catalan_shifted_matches_closed_form() {
        let t = generate_named(&Family::CatalanShifted, 12).unwrap();
        for n in 0..=12usize {
            for k in 0..=n {
                assert_eq!(t.get(n, k), Rational::from_integer(catalan_closed(n as i64, k as i64)));
            }
        }
    }

    #[test]
    fn dual_routes() {
        let fam = Family::CatalanShifted;
        let t = generate_named(&fam, 6).unwrap();
        assert_eq!(dual_basis(&fam, &t).unwrap().0, DualRoute::FittedBanded);
        let t = generate_named(&Family::Fibonomial, 6).unwrap();
        assert_eq!(dual_basis(&Family::Fibonomial, &t).unwrap().0, DualRoute::StepMatrix);
        let t = generate_named(&Family::Eulerian, 6).unwrap();
        assert!(matches!(dual_basis(&Family::Eulerian, &t), Err(Error::Precondition(_))));
    }
}
