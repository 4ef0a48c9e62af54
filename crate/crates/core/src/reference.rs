//! Published tables reproduced verbatim, misprints included, and the
//! misprint ledger comparing them with exact computation.
//!
//! Nothing in the library reads these values; they exist so that tests and
//! the `--ledger` report can compare printed and computed values side by side.

use crate::dynsys::{phi_from_step_matrix, solve_step_matrix};
use crate::families::{generate_named, Family};
use crate::poly::Polynomial;
use crate::sequences::{binomial, q_binomial, QParam};
use crate::triads::{dual_polynomials, PolynomialSequence};
use crate::{Poly, Rational};

/// Gaussian triangle rows 0..=6 for q = 2.
pub const Q2_ROWS: [&[i64]; 7] = [
    &[1],
    &[1, 1],
    &[1, 3, 1],
    &[1, 7, 7, 1],
    &[1, 15, 35, 15, 1],
    &[1, 31, 155, 155, 31, 1],
    &[1, 63, 651, 1395, 651, 63, 1],
];

/// Gaussian triangle rows 0..=6 for q = 3, as printed (row 6 middle entry
/// is a misprint).
pub const Q3_ROWS: [&[i64]; 7] = [
    &[1],
    &[1, 1],
    &[1, 4, 1],
    &[1, 13, 13, 1],
    &[1, 40, 130, 40, 1],
    &[1, 121, 1210, 1210, 121, 1],
    &[1, 364, 11011, 3388, 11011, 364, 1],
];

/// Gaussian triangle rows 0..=6 for q = 5, as printed (row 6 middle entry
/// is a misprint).
pub const Q5_ROWS: [&[i64]; 7] = [
    &[1],
    &[1, 1],
    &[1, 6, 1],
    &[1, 31, 31, 1],
    &[1, 156, 806, 156, 1],
    &[1, 781, 20306, 20306, 781, 1],
    &[1, 3906, 508431, 16401, 508431, 3906, 1],
];

/// Positions `(q, n, k)` of known misprints in the Gaussian tables.
pub const GAUSSIAN_MISPRINTS: [(i64, usize, usize); 2] = [(3, 6, 3), (5, 6, 3)];

/// The Catalan triangle with apex 1 and zero column 0.
pub const CATALAN_ROWS: [&[i64]; 6] = [
    &[1],
    &[0, 1],
    &[0, 2, 1],
    &[0, 5, 4, 1],
    &[0, 14, 14, 6, 1],
    &[0, 42, 48, 27, 8, 1],
];

/// Fibonomial triangle rows 0..=6.
pub const FIBONOMIAL_ROWS: [&[i64]; 7] = [
    &[1],
    &[1, 1],
    &[1, 1, 1],
    &[1, 2, 2, 1],
    &[1, 3, 6, 3, 1],
    &[1, 5, 15, 15, 5, 1],
    &[1, 8, 40, 60, 40, 8, 1],
];

/// Rows 0..=6 of the Fibonomial one-step matrix, as printed (row 6,
/// column 4 is a misprint).
pub const FIBONOMIAL_STEP_ROWS: [&[i64]; 7] = [
    &[1, 1],
    &[0, 0, 1],
    &[0, 1, 1, 1],
    &[0, 0, 2, 1, 1],
    &[0, -2, 0, 6, 2, 1],
    &[0, 2, -10, 0, 15, 3, 1],
    &[0, 36, 16, -80, -100, 40, 5, 1],
];

/// The printed `Φ` list for the Fibonomial step matrix, ascending
/// coefficients. Not the monic solution of `x·Φ = F·Φ`; reference only.
pub const FIBONOMIAL_PHI_PRINTED: [&[i64]; 6] = [
    &[1],
    &[-1, 1],
    &[],
    &[1, -1],
    &[-1, 2, -1],
    &[-6, 3, 4, -1],
];

/// One disagreement between a printed value and the exact computation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LedgerEntry {
    pub location: String,
    pub printed: String,
    pub exact: String,
    pub note: String,
}

fn r(n: i64) -> Rational {
    Rational::from_integer(n.into())
}

fn entry(location: impl Into<String>, printed: impl Into<String>, exact: impl Into<String>, note: &str) -> LedgerEntry {
    LedgerEntry {
        location: location.into(),
        printed: printed.into(),
        exact: exact.into(),
        note: note.into(),
    }
}

/// Every known print discrepancy, with the exact value recomputed now.
pub fn misprint_ledger() -> Vec<LedgerEntry> {
    let mut out = Vec::new();

    for (q, n, k) in GAUSSIAN_MISPRINTS {
        let table = if q == 3 { &Q3_ROWS } else { &Q5_ROWS };
        let exact = q_binomial(n as i64, k as i64, &QParam::new(r(q)).expect("q != 0"));
        out.push(entry(
            format!("Gaussian triangle q={q}, row {n}, k={k}"),
            table[n][k].to_string(),
            exact.to_string(),
            "q-factorial formula; the printed row is not symmetric",
        ));
    }

    // second form of the Gaussian recurrence: the printed exponent n-k fails
    // already at n = k = 1
    let q2 = QParam::new(r(2)).expect("q != 0");
    let printed_form = q_binomial(1, 1, &q2) + r(1) * q_binomial(1, 0, &q2); // q^0 = 1
    out.push(entry(
        "Gaussian recurrence, alternative form",
        format!("(n+1 k)_q = (n k)_q + q^(n-k) (n k-1)_q; at q=2, n=k=1 gives {printed_form}"),
        format!("exponent n-k+1; (2 1)_2 = {}", q_binomial(2, 1, &q2)),
        "corrected form used in tests",
    ));

    out.push(entry(
        "Gaussian dual recurrence",
        "n Φ_n(x) = q^n Φ_n(x) + Φ_{n+1}(x)",
        "x Φ_n(x) = q^n Φ_n(x) + Φ_{n+1}(x)",
        "only x on the left reproduces Φ_{n+1} = (x - q^n) Φ_n",
    ));

    // Catalan completion as printed: x^n = Σ_{1<=k<=n} binom(2n,n-k)(k/n) C_k(x)
    let cat = dual_polynomials(
        &Family::CatalanTriad.known_recurrence(2).expect("banded"),
        2,
    )
    .expect("up coefficients are 1");
    out.push(entry(
        "Catalan triad completion, n=1",
        format!("residual {}", printed_catalan_residual(&cat, 1)),
        "residual 0 with c_{n,k} = C_{n+1,k+1} (shifted triangle)",
        "index convention: use the triad-normalized triangle",
    ));

    let fib = generate_named(&Family::Fibonomial, 8).expect("fibonomial");
    let f = solve_step_matrix(&fib).expect("unipotent");
    let printed6 = FIBONOMIAL_STEP_ROWS[6];
    for (l, &p) in printed6.iter().enumerate() {
        let exact = &f.rows()[6][l];
        if r(p) != *exact {
            out.push(entry(
                format!("Fibonomial step matrix, row 6, column {l}"),
                p.to_string(),
                exact.to_string(),
                "forward substitution of C·F = E·C",
            ));
        }
    }

    let phis = phi_from_step_matrix(&f, 5).expect("unit superdiagonal");
    for (k, printed) in FIBONOMIAL_PHI_PRINTED.iter().enumerate() {
        let printed = Poly::new(printed.iter().map(|&c| r(c)).collect());
        if printed != phis[k] {
            out.push(entry(
                format!("Fibonomial Φ_{k} from x·Φ = F·Φ"),
                printed.to_string(),
                phis[k].to_string(),
                "unique monic solution given the step matrix",
            ));
        }
    }
    out
}

/// `Σ_{1<=k<=n} binom(2n, n-k)·(k/n)·C_k(x) - x^n` with the triad-normalized
/// Catalan polynomials, i.e. the completion identity read literally.
pub fn printed_catalan_residual(cat: &PolynomialSequence<Rational>, n: usize) -> Polynomial<Rational> {
    let mut sum = Polynomial::zero();
    for k in 1..=n {
        let coef = Rational::from_integer(binomial(2 * n as i64, (n - k) as i64))
            * Rational::new((k as i64).into(), (n as i64).into());
        sum = &sum + &cat[k].scale(&coef);
    }
    &sum - &Polynomial::monomial(n)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ledger_lists_expected_discrepancies() {
        let ledger = misprint_ledger();
        let find = |loc: &str| ledger.iter().find(|e| e.location.starts_with(loc)).cloned();
        let q3 = find("Gaussian triangle q=3").unwrap();
        assert_eq!((q3.printed.as_str(), q3.exact.as_str()), ("3388", "33880"));
        let q5 = find("Gaussian triangle q=5").unwrap();
        assert_eq!((q5.printed.as_str(), q5.exact.as_str()), ("16401", "2558556"));
        let f6 = find("Fibonomial step matrix, row 6").unwrap();
        assert_eq!(f6.location, "Fibonomial step matrix, row 6, column 4");
        assert_eq!((f6.printed.as_str(), f6.exact.as_str()), ("-100", "0"));
        let phi2 = find("Fibonomial Φ_2").unwrap();
        assert_eq!((phi2.printed.as_str(), phi2.exact.as_str()), ("0", "x^2 - x"));
        // Φ_0 and Φ_1 agree with the computation
        assert!(find("Fibonomial Φ_1").is_none());
    }

    #[test]
    fn printed_catalan_identity_fails_at_one() {
        let cat = dual_polynomials(&Family::CatalanTriad.known_recurrence(3).unwrap(), 3).unwrap();
        assert_eq!(printed_catalan_residual(&cat, 1), Poly::constant(r(-2)));
    }
}
