//! Exact computational algebra for hyperelliptic curves over small finite
//! fields: decide whether a Jacobian admits a decomposed Richelot isogeny,
//! construct generalized Howe curves with their three-factor decompositions,
//! and verify superspeciality through Cartier-Manin matrices.
//!
//! The crate is organized bottom-up:
//!
//! - [`ff`]: arithmetic in F_p and explicit extensions F_{p^k};
//! - [`upoly`]: dense univariate polynomials over those fields;
//! - [`curves`]: hyperelliptic models y^2 = f(x) and their branch divisors;
//! - [`involution`]: branch-set-preserving involutions of the projective
//!   line, normal forms, and decomposition witnesses;
//! - [`howe`]: generalized Howe curves from pairs of hyperelliptic covers;
//! - [`cartier`]: Cartier-Manin matrices and superspeciality verdicts;
//! - [`report`]: plain serializable records for all of the above.
//!
//! Everything is exact integer arithmetic with deterministic canonical
//! choices, so identical inputs always produce identical outputs.

pub mod cartier;
pub mod curves;
pub mod error;
pub mod ff;
pub mod howe;
pub mod involution;
pub mod report;
pub mod upoly;

pub use error::{Error, Result};

/// Resource limits for searches and exhaustive enumerations.
#[derive(Clone, Debug)]
pub struct SearchOptions {
    /// Cap on the total extension degree over F_p that any operation may
    /// reach (splitting contexts plus the quadratic step of involution
    /// normalization).
    pub max_ext: usize,
    /// Largest field order over which exhaustive element enumeration is
    /// permitted.
    pub exhaustion_bound: u64,
    /// Cap on deg(f) * (p - 1) / 2 for Cartier-Manin powering.
    pub cartier_budget: u64,
}

impl Default for SearchOptions {
    fn default() -> Self {
        SearchOptions {
            max_ext: 8,
            exhaustion_bound: 1 << 20,
            cartier_budget: 14 * (1 << 13) / 2,
        }
    }
}
