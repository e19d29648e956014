//! Error type shared by all modules of the crate.

use std::fmt;

/// Crate-wide error enum. Variants name the violated precondition or the
/// resource bound that was hit; none of them wrap other errors.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// `p` is not a prime number.
    NotPrime(u64),
    /// `p = 2`; every construction here assumes odd characteristic.
    EvenCharacteristic,
    /// The supplied extension modulus is not irreducible over F_p.
    ReducibleModulus,
    /// The supplied modulus is not monic of the stated degree, or has
    /// out-of-range coefficients.
    BadModulus(String),
    /// Extension degree outside the supported range (k >= 1).
    DegreeOutOfRange(usize),
    /// Division or inversion by zero in a field or polynomial ring.
    DivisionByZero,
    /// Two operands belong to different field contexts.
    MixedFields,
    /// Source field does not embed into the target (degree not a divisor,
    /// or different characteristic).
    IncompatibleDegrees,
    /// Operation requires a nonzero polynomial.
    ZeroPolynomial,
    /// Exhaustive enumeration over a field larger than the configured bound.
    FieldTooLarge { size_log2: u32, bound_log2: u32 },
    /// No extension of admissible degree satisfies the request.
    BoundExceeded(String),
    /// Curve right-hand side has a repeated root.
    NotSquarefree,
    /// Curve right-hand side has degree < 3.
    DegreeTooSmall(usize),
    /// A branch point is fixed by the involution; the lift has order 4 and
    /// yields no decomposition witness.
    FixedBranchPoint,
    /// A branch point appears twice in a Howe input.
    DuplicatePoints,
    /// Both covers have identical branch sets; the fiber product is reducible.
    IdenticalBranchSets,
    /// Howe input violates a structural convention (e.g. a cover of genus 0).
    ConventionViolation(String),
    /// Parameter triple (g1, g2, r) outside the admissible range.
    RangeViolation(String),
    /// Cartier-Manin powering budget exceeded for this prime/degree.
    BudgetExceeded { degree: usize, p: u64 },
    /// Operation restricted to a specific genus.
    WrongGenus { expected: usize, got: usize },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::NotPrime(p) => write!(f, "{p} is not prime"),
            Error::EvenCharacteristic => write!(f, "characteristic 2 is not supported"),
            Error::ReducibleModulus => write!(f, "modulus is reducible over F_p"),
            Error::BadModulus(msg) => write!(f, "bad modulus: {msg}"),
            Error::DegreeOutOfRange(k) => write!(f, "extension degree {k} out of range"),
            Error::DivisionByZero => write!(f, "division by zero"),
            Error::MixedFields => write!(f, "operands belong to different fields"),
            Error::IncompatibleDegrees => write!(f, "no embedding between these fields"),
            Error::ZeroPolynomial => write!(f, "zero polynomial not allowed here"),
            Error::FieldTooLarge { size_log2, bound_log2 } => write!(
                f,
                "field of ~2^{size_log2} elements exceeds exhaustion bound 2^{bound_log2}"
            ),
            Error::BoundExceeded(msg) => write!(f, "extension bound exceeded: {msg}"),
            Error::NotSquarefree => write!(f, "polynomial has a repeated root"),
            Error::DegreeTooSmall(d) => write!(f, "degree {d} too small for a curve (need >= 3)"),
            Error::FixedBranchPoint => {
                write!(f, "involution fixes a branch point (lift has order 4)")
            }
            Error::DuplicatePoints => write!(f, "branch points are not pairwise distinct"),
            Error::IdenticalBranchSets => {
                write!(f, "identical branch sets: fiber product is reducible")
            }
            Error::ConventionViolation(msg) => write!(f, "convention violation: {msg}"),
            Error::RangeViolation(msg) => write!(f, "parameter out of range: {msg}"),
            Error::BudgetExceeded { degree, p } => {
                write!(f, "Cartier powering budget exceeded (deg {degree}, p = {p})")
            }
            Error::WrongGenus { expected, got } => {
                write!(f, "operation needs genus {expected}, curve has genus {got}")
            }
        }
    }
}

impl std::error::Error for Error {}

pub type Result<T> = std::result::Result<T, Error>;
