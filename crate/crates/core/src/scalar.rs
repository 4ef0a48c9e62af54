//! The scalar abstraction shared by polynomials, triangles and matrices.
//!
//! Everything in this crate that only needs field operations is generic over
//! [`Scalar`]. Exact results require an exact field such as
//! [`crate::Rational`]; `f64` satisfies the bound too and is occasionally
//! handy for quick numerical sanity checks.

use std::fmt::Debug;

use num_traits::Signed;

/// A signed field-like number type.
pub trait Scalar: Clone + Debug + PartialEq + Signed {
    /// Lift a machine integer into the scalar type.
    fn from_int(n: i64) -> Self {
        let mut acc = Self::zero();
        let one = Self::one();
        let mut unit = if n < 0 { -one } else { one };
        let mut m = n.unsigned_abs();
        // binary expansion keeps this O(log n)
        while m > 0 {
            if m & 1 == 1 {
                acc = acc + unit.clone();
            }
            unit = unit.clone() + unit;
            m >>= 1;
        }
        acc
    }

    /// `self^e` by repeated squaring.
    fn powu(&self, e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base.clone();
            }
            base = base.clone() * base;
            e >>= 1;
        }
        acc
    }
}

impl<T> Scalar for T where T: Clone + Debug + PartialEq + Signed {}
