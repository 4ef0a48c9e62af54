use thiserror::Error;

/// Errors raised by triangle, polynomial and matrix operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("length mismatch: {left} coefficients for {right} polynomials")]
    LengthMismatch { left: usize, right: usize },

    #[error("row {row}: diagonal entry is not 1 (only unipotent systems are supported)")]
    NonUnitDiagonal { row: usize },

    #[error("row {row}: entry above the diagonal is nonzero")]
    NotLowerTriangular { row: usize },

    #[error("row {row}: expected at least {expected} entries, found {found}")]
    RowTooShort { row: usize, expected: usize, found: usize },

    #[error("dual recurrence not solvable at level {level}: up-coefficient is zero")]
    DualNotSolvable { level: usize },

    #[error("basis polynomial {index} has degree {degree}, expected {index}")]
    DegreeCondition { index: usize, degree: isize },

    #[error("polynomial of degree {degree} needs {needed} basis polynomials, only {available} given")]
    BasisTooShort { degree: isize, needed: usize, available: usize },

    #[error("step matrix row {row}: superdiagonal entry is not 1")]
    NonUnitSuperdiagonal { row: usize },

    #[error("transition window too narrow: state reaches level {needed}, matrix covers {available} levels")]
    WindowTooNarrow { needed: usize, available: usize },

    #[error("{what} defined on {available} levels, {needed} required")]
    InsufficientLevels { what: &'static str, needed: usize, available: usize },

    #[error("root sequence has {available} explicit roots, {needed} required")]
    RootsTooShort { needed: usize, available: usize },

    #[error("unknown family `{0}`")]
    UnknownFamily(String),

    #[error("family `{family}` requires parameter `{param}`")]
    MissingParameter { family: String, param: &'static str },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("{0}")]
    Precondition(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

impl Error {
    /// True for errors caused by malformed input rather than a failed
    /// mathematical precondition.
    pub fn is_usage(&self) -> bool {
        matches!(
            self,
            Error::UnknownFamily(_) | Error::MissingParameter { .. } | Error::InvalidParameter(_)
        )
    }
}
