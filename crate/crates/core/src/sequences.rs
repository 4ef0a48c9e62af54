//! Scalar sequences and closed-form coefficients: Fibonacci numbers,
//! q-integers and Gaussian binomials, Fibonomials, the Catalan triangle,
//! Stirling and Eulerian numbers.
//!
//! All integer families return [`BigInt`]. Indices outside `0 <= k <= n`
//! give zero, so callers can run recurrences without boundary branches.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// The deformation parameter `q` of q-integers. Any nonzero value is
/// accepted; `q = 1` gives the classical integers as a limit.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QParam<T>(T);

impl<T: Scalar> QParam<T> {
    pub fn new(q: T) -> Result<Self> {
        if q.is_zero() {
            return Err(Error::InvalidParameter("q must be nonzero".into()));
        }
        Ok(QParam(q))
    }

    pub fn value(&self) -> &T {
        &self.0
    }
}

/// A root sequence `r_1, r_2, …` indexed from 1.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RootSequence<T> {
    /// `r_s = c` for every `s`.
    Constant(T),
    /// `r_s = ratio^(s-1)`; the q-Gaussian roots `1, q, q², …`.
    Geometric(T),
    /// `r_s = first + (s-1)·step`; `first = 0, step = 1` gives `0, 1, 2, …`.
    Arithmetic { first: T, step: T },
    /// Finitely many roots, `list[0] = r_1`.
    Explicit(Vec<T>),
}

impl<T: Scalar> RootSequence<T> {
    /// `r_s` for `s >= 1`.
    pub fn get(&self, s: usize) -> Result<T> {
        assert!(s >= 1, "root sequences are indexed from 1");
        Ok(match self {
            RootSequence::Constant(c) => c.clone(),
            RootSequence::Geometric(q) => q.powu((s - 1) as u32),
            RootSequence::Arithmetic { first, step } => {
                first.clone() + T::from_int((s - 1) as i64) * step.clone()
            }
            RootSequence::Explicit(list) => {
                list.get(s - 1).cloned().ok_or(Error::RootsTooShort {
                    needed: s,
                    available: list.len(),
                })?
            }
        })
    }

    /// `r_1 ..= r_n`.
    pub fn take(&self, n: usize) -> Result<Vec<T>> {
        (1..=n).map(|s| self.get(s)).collect()
    }
}

/// Fibonacci numbers with `F_0 = 0`, `F_1 = F_2 = 1`.
pub fn fib(n: usize) -> BigInt {
    let (mut a, mut b) = (BigInt::zero(), BigInt::one());
    for _ in 0..n {
        let next = &a + &b;
        a = std::mem::replace(&mut b, next);
    }
    a
}

/// Fibonacci numbers extended to negative indices by
/// `F_{-m} = (-1)^(m+1) F_m`, so that `F_{n+1} = F_n + F_{n-1}` holds on all
/// of ℤ. In particular `F_{-1} = 1`.
pub fn fib_extended(n: i64) -> BigInt {
    let f = fib(n.unsigned_abs() as usize);
    if n < 0 && n % 2 == 0 {
        -f
    } else {
        f
    }
}

/// The q-integer `(1 - q^n)/(1 - q)`, or `n` when `q = 1`.
pub fn q_int<T: Scalar>(n: usize, q: &QParam<T>) -> T {
    let q = q.value();
    if q.is_one() {
        return T::from_int(n as i64);
    }
    (T::one() - q.powu(n as u32)) / (T::one() - q.clone())
}

/// Gaussian binomial coefficient: falling q-factorial over q-factorial,
/// zero outside `0 <= k <= n`.
pub fn q_binomial<T: Scalar>(n: i64, k: i64, q: &QParam<T>) -> T {
    if k < 0 || k > n {
        return T::zero();
    }
    let k = k.min(n - k) as usize;
    let n = n as usize;
    let mut num = T::one();
    let mut den = T::one();
    for j in 0..k {
        num = num * q_int(n - j, q);
        den = den * q_int(j + 1, q);
    }
    if den.is_zero() {
        // q is a root of unity (q = -1 over the rationals): the quotient is
        // still a polynomial in q, evaluate it through the recurrence
        return q_binomial_by_recurrence(n, k, q);
    }
    num / den
}

fn q_binomial_by_recurrence<T: Scalar>(n: usize, k: usize, q: &QParam<T>) -> T {
    let mut row = vec![T::one()];
    for _ in 0..n {
        let mut next = Vec::with_capacity(row.len() + 1);
        let mut qk = T::one();
        for j in 0..=row.len() {
            let stay = row.get(j).cloned().unwrap_or_else(T::zero) * qk.clone();
            let up = if j > 0 { row[j - 1].clone() } else { T::zero() };
            next.push(stay + up);
            qk = qk * q.value().clone();
        }
        row = next;
    }
    row[k].clone()
}

/// Ordinary binomial coefficient, zero outside `0 <= k <= n`.
pub fn binomial(n: i64, k: i64) -> BigInt {
    if k < 0 || k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for j in 0..k {
        acc = acc * BigInt::from(n - j) / BigInt::from(j + 1);
    }
    acc
}

/// Fibonomial coefficient `F_n! / (F_k! F_{n-k}!)`, computed as the falling
/// F-factorial over `F_k!`.
pub fn fibonomial(n: i64, k: i64) -> BigInt {
    if k < 0 || k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for j in 0..k {
        num *= fib((n - j) as usize);
        den *= fib((j + 1) as usize);
    }
    let (quo, rem) = num.div_rem(&den);
    debug_assert!(rem.is_zero());
    quo
}

/// Entry of the Catalan triangle, `binom(2n, n-k)·k/n`, with column 0 zero
/// for `n >= 1` and the apex `C_{0,0} = 1`.
pub fn catalan_closed(n: i64, k: i64) -> BigInt {
    if n == 0 {
        return if k == 0 { BigInt::one() } else { BigInt::zero() };
    }
    if k <= 0 || k > n {
        return BigInt::zero();
    }
    let (quo, rem) = (binomial(2 * n, n - k) * BigInt::from(k)).div_rem(&BigInt::from(n));
    debug_assert!(rem.is_zero());
    quo
}

/// Unsigned Stirling numbers of the first kind,
/// `[n+1, k] = [n, k-1] + n·[n, k]`.
pub fn stirling1(n: i64, k: i64) -> BigInt {
    if n < 0 || k < 0 || k > n {
        return BigInt::zero();
    }
    stirling1_rows(n as usize)[n as usize][k as usize].clone()
}

pub(crate) fn stirling1_rows(max: usize) -> Vec<Vec<BigInt>> {
    let mut rows = vec![vec![BigInt::one()]];
    for n in 0..max {
        let prev = &rows[n];
        let next = (0..=n + 1)
            .map(|k| {
                let up = if k > 0 { prev[k - 1].clone() } else { BigInt::zero() };
                let stay = prev.get(k).map_or_else(BigInt::zero, |v| v * BigInt::from(n));
                up + stay
            })
            .collect();
        rows.push(next);
    }
    rows
}

/// Stirling numbers of the second kind, `{n+1, k} = {n, k-1} + k·{n, k}`.
pub fn stirling2(n: i64, k: i64) -> BigInt {
    if n < 0 || k < 0 || k > n {
        return BigInt::zero();
    }
    let mut row = vec![BigInt::one()];
    for _ in 0..n {
        row = (0..=row.len())
            .map(|j| {
                let up = if j > 0 { row[j - 1].clone() } else { BigInt::zero() };
                let stay = row.get(j).map_or_else(BigInt::zero, |v| v * BigInt::from(j));
                up + stay
            })
            .collect();
    }
    row[k as usize].clone()
}

/// Eulerian numbers, `<n+1, k> = (k+1)<n, k> + (n+1-k)<n, k-1>`, with
/// `<0, 0> = 1`.
pub fn eulerian(n: i64, k: i64) -> BigInt {
    if n < 0 || k < 0 || k > n {
        return BigInt::zero();
    }
    eulerian_rows(n as usize)[n as usize][k as usize].clone()
}

pub(crate) fn eulerian_rows(max: usize) -> Vec<Vec<BigInt>> {
    let mut rows = vec![vec![BigInt::one()]];
    for n in 0..max {
        let prev = &rows[n];
        let next = (0..=n + 1)
            .map(|k| {
                let stay = prev
                    .get(k)
                    .map_or_else(BigInt::zero, |v| v * BigInt::from(k + 1));
                let up = if k > 0 {
                    &prev[k - 1] * BigInt::from(n + 1 - k)
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

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Rational;
    use proptest::prelude::*;

    fn rq(q: i64) -> QParam<Rational> {
        QParam::new(Rational::from_integer(q.into())).unwrap()
    }

    fn int(n: i64) -> Rational {
        Rational::from_integer(n.into())
    }

    #[test]
    fn fibonacci_values() {
        assert_eq!(fib(0), BigInt::zero());
        assert_eq!(fib(1), BigInt::one());
        assert_eq!(fib(2), BigInt::one());
        // iterate F_{n+1} = F_n + F_{n-1}: 1 1 2 3 5 8 13 21 34 55
        assert_eq!(fib(7), BigInt::from(13));
        assert_eq!(fib(10), BigInt::from(55));
    }

    #[test]
    fn extended_fibonacci() {
        let expect = [(-1, 1), (-2, -1), (-3, 2), (-4, -3), (-5, 5)];
        for (n, f) in expect {
            assert_eq!(fib_extended(n), BigInt::from(f), "F_{n}");
        }
        for n in -20..20 {
            assert_eq!(fib_extended(n + 1), fib_extended(n) + fib_extended(n - 1));
        }
    }

    #[test]
    fn cassini() {
        for n in 0..=64usize {
            let lhs = fib(n) * fib(n + 2) - fib(n + 1) * fib(n + 1);
            let sign = if n % 2 == 0 { -1 } else { 1 };
            assert_eq!(lhs, BigInt::from(sign), "n = {n}");
        }
    }

    #[test]
    fn q_integers() {
        assert_eq!(q_int(0, &rq(7)), int(0));
        // 1 + 2 + 4 + 8
        assert_eq!(q_int(4, &rq(2)), int(15));
        assert_eq!(q_int(3, &rq(1)), int(3));
        let half = QParam::new(Rational::new(1.into(), 2.into())).unwrap();
        assert_eq!(q_int(3, &half), Rational::new(7.into(), 4.into()));
    }

    #[test]
    fn zero_q_rejected() {
        assert!(QParam::new(int(0)).is_err());
    }

    #[test]
    fn gaussian_binomials() {
        assert_eq!(q_binomial(4, 2, &rq(2)), int(35));
        assert_eq!(q_binomial(3, 1, &rq(5)), int(31));
        // [6]_3[5]_3[4]_3 / ([1]_3[2]_3[3]_3) = 364·121·40 / (1·4·13)
        assert_eq!(q_binomial(6, 3, &rq(3)), int(33880));
        assert_eq!(q_binomial(6, 3, &rq(5)), int(2558556));
        for n in 0..8 {
            assert_eq!(q_binomial(n, n, &rq(3)), int(1));
            assert_eq!(q_binomial(n, 0, &rq(3)), int(1));
        }
        assert_eq!(q_binomial(3, 4, &rq(2)), int(0));
        assert_eq!(q_binomial(3, -1, &rq(2)), int(0));
    }

    #[test]
    fn gaussian_binomial_at_minus_one() {
        // at q = -1: binom(n div 2, k div 2) unless n even and k odd
        let q = rq(-1);
        for n in 0..12i64 {
            for k in 0..=n {
                let expect = if n % 2 == 0 && k % 2 == 1 {
                    BigInt::zero()
                } else {
                    binomial(n / 2, k / 2)
                };
                assert_eq!(q_binomial(n, k, &q), Rational::from_integer(expect), "({n},{k})");
            }
        }
    }

    #[test]
    fn fibonomials() {
        assert_eq!(fibonomial(6, 2), BigInt::from(40));
        assert_eq!(fibonomial(6, 3), BigInt::from(60));
        // F_7 F_6 F_5 / (F_1 F_2 F_3) = 13·8·5 / 2
        assert_eq!(fibonomial(7, 3), BigInt::from(260));
        for n in 0..10 {
            assert_eq!(fibonomial(n, 0), BigInt::one());
        }
        assert_eq!(fibonomial(2, 3), BigInt::zero());
    }

    #[test]
    fn catalan_entries() {
        assert_eq!(catalan_closed(5, 2), BigInt::from(48));
        assert_eq!(catalan_closed(4, 1), BigInt::from(14));
        for n in 1..10 {
            assert_eq!(catalan_closed(n, n), BigInt::one());
            assert_eq!(catalan_closed(n, 0), BigInt::zero());
        }
    }

    #[test]
    fn catalan_satisfies_tridiagonal_recurrence() {
        for n in 1..=32i64 {
            for k in 1..=n + 1 {
                let rhs = catalan_closed(n, k - 1)
                    + BigInt::from(2) * catalan_closed(n, k)
                    + catalan_closed(n, k + 1);
                assert_eq!(catalan_closed(n + 1, k), rhs, "n={n} k={k}");
            }
        }
    }

    /// Coefficients of the rising factorial x(x+1)…(x+n-1) are the unsigned
    /// Stirling numbers of the first kind.
    fn rising_factorial_coeffs(n: usize) -> Vec<BigInt> {
        let mut c = vec![BigInt::one()];
        for m in 0..n {
            let mut next = vec![BigInt::zero(); c.len() + 1];
            for (j, a) in c.iter().enumerate() {
                next[j + 1] += a;
                next[j] += a * BigInt::from(m);
            }
            c = next;
        }
        c
    }

    #[test]
    fn stirling_first_kind() {
        assert_eq!(stirling1(3, 1), BigInt::from(2));
        assert_eq!(stirling1(4, 2), BigInt::from(11));
        for n in 0..15i64 {
            assert_eq!(stirling1(n, n), BigInt::one());
            let c = rising_factorial_coeffs(n as usize);
            for k in 0..=n {
                assert_eq!(stirling1(n, k), c[k as usize]);
            }
        }
    }

    #[test]
    fn eulerian_numbers() {
        assert_eq!(eulerian(3, 1), BigInt::from(4));
        assert_eq!(eulerian(4, 2), BigInt::from(11));
        for n in 0..15i64 {
            assert_eq!(eulerian(n, 0), BigInt::one());
            // explicit alternating sum, independent of the recurrence
            for k in 0..n {
                let mut s = BigInt::zero();
                for j in 0..=k + 1 {
                    let term = binomial(n + 1, j) * BigInt::from(k + 1 - j).pow(n as u32);
                    if j % 2 == 0 {
                        s += term
                    } else {
                        s -= term
                    }
                }
                assert_eq!(eulerian(n, k), s, "<{n},{k}>");
            }
        }
    }

    #[test]
    fn root_sequences() {
        let g = RootSequence::Geometric(int(2));
        assert_eq!(g.take(4).unwrap(), vec![int(1), int(2), int(4), int(8)]);
        let a = RootSequence::Arithmetic { first: int(0), step: int(1) };
        assert_eq!(a.take(3).unwrap(), vec![int(0), int(1), int(2)]);
        let e = RootSequence::Explicit(vec![int(5)]);
        assert_eq!(
            e.get(2).unwrap_err(),
            Error::RootsTooShort { needed: 2, available: 1 }
        );
    }

    proptest! {
        #[test]
        fn q_binomial_symmetry(n in 0i64..=24, kk in 0i64..=24, qi in prop::sample::select(vec![-3i64, -1, 2, 3, 5, 7])) {
            let k = kk % (n + 1);
            prop_assert_eq!(q_binomial(n, k, &rq(qi)), q_binomial(n, n - k, &rq(qi)));
        }

        #[test]
        fn q_binomial_specializes(n in 0i64..=24, kk in 0i64..=24) {
            let k = kk % (n + 1);
            prop_assert_eq!(q_binomial(n, k, &rq(1)), Rational::from_integer(binomial(n, k)));
        }

        #[test]
        fn fibonomial_symmetric_and_integral(n in 0i64..=32, kk in 0i64..=32) {
            let k = kk % (n + 1);
            prop_assert_eq!(fibonomial(n, k), fibonomial(n, n - k));
            // integrality: the product of F_{n-j} is divisible by F_k!
            let mut num = BigInt::one();
            let mut den = BigInt::one();
            for j in 0..k {
                num *= fib((n - j) as usize);
                den *= fib((j + 1) as usize);
            }
            prop_assert!((num % den).is_zero());
        }
    }
}
