//! Exact Pascal-like triangles, duality triads, and detection of banded
//! (time-independent) recurrences.
//!
//! A duality triad is a triangle `c_{n,k}` obeying a banded recurrence, a
//! polynomial sequence `Φ_k` obeying the dual recurrence, and the identity
//! `x^n = Σ_k c_{n,k} Φ_k(x)`. The q-Gaussian, Catalan, Pascal and generalized
//! Lah triangles all complete to triads; the Fibonomial, Stirling and Eulerian
//! triangles obey no time-independent banded recurrence, which
//! [`fit_banded`] detects and certifies with an inconsistent set of equations.
//!
//! Most of the crate is generic over [`Scalar`]; the aliases below fix the
//! exact rational field used by the named families and the CLI.

pub mod dynsys;
pub mod error;
pub mod families;
pub mod fit;
pub mod linalg;
pub mod poly;
pub mod reference;
pub mod scalar;
pub mod sequences;
pub mod triads;
pub mod triangle;

pub use dynsys::{
    convolve_fibonomial, convolve_with_triangle, evolve, invert_unipotent, phi_from_step_matrix,
    solve_step_matrix, StepMatrix, Transition,
};
pub use error::{Error, Result};
pub use families::{dual_basis, generate_named, DualRoute, Family, FamilyKind};
pub use fit::{fit_banded, FitResult, Fitted, Slot, Witness};
pub use linalg::lower_triangular_solve;
pub use poly::{poly_linear_combination, poly_mul, Polynomial};
pub use scalar::Scalar;
pub use sequences::{
    catalan_closed, eulerian, fib, fibonomial, q_binomial, q_int, stirling1, stirling2, QParam,
    RootSequence,
};
pub use triads::{
    dual_polynomials, expand_in_basis, generate_from_banded, lah_from_roots,
    persistent_root_polys, verify_triad, BandedRecurrence, PolynomialSequence, TriadReport,
};
pub use triangle::{FamilyTag, Triangle};

/// Arbitrary-precision integer.
pub type Integer = num_bigint::BigInt;
/// Arbitrary-precision rational, always in lowest terms.
pub type Rational = num_rational::BigRational;
/// Polynomial with exact rational coefficients.
pub type Poly = Polynomial<Rational>;
/// Triangle with exact rational entries.
pub type RatTriangle = Triangle<Rational>;
/// Lah triangles are ordinary triangles produced by [`lah_from_roots`].
pub type LahTriangle<T> = Triangle<T>;
