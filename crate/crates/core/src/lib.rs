//! Exact counts of rational curves on toric surfaces by floor diagrams, the
//! binomial combination sums relating counts on the quadric to relative counts
//! on the second Hirzebruch surface, checkers for vanishing, divisibility and
//! sign statements on tables of Welschinger invariants, and GF(2) models of
//! the groups that control them.

pub mod arith;
pub mod cache;
pub mod checks;
pub mod floors;
pub mod lattice;
pub mod mod2homology;
pub mod sumformula;
pub mod table;

use thiserror::Error;

/// Any failure of the library, for callers that do not care which module
/// raised it.
#[derive(Debug, Error)]
pub enum Error {
    #[error(transparent)]
    Lattice(#[from] lattice::LatticeError),
    #[error(transparent)]
    Floors(#[from] floors::FloorError),
    #[error(transparent)]
    Sum(#[from] sumformula::SumError),
    #[error(transparent)]
    Table(#[from] table::TableError),
    #[error(transparent)]
    Check(#[from] checks::CheckError),
    #[error(transparent)]
    Homology(#[from] mod2homology::HomologyError),
    #[error(transparent)]
    Cache(#[from] cache::CacheError),
}

impl Error {
    /// Whether the error signals a bug or broken invariant rather than bad
    /// input.
    pub fn is_internal(&self) -> bool {
        use floors::FloorError as F;
        match self {
            Error::Floors(F::InternalConsistency(_) | F::InvalidDiagram(_) | F::MarkCountMismatch { .. }) => true,
            Error::Sum(sumformula::SumError::Floors(
                F::InternalConsistency(_) | F::InvalidDiagram(_) | F::MarkCountMismatch { .. },
            )) => true,
            Error::Cache(cache::CacheError::Io { .. }) => true,
            _ => false,
        }
    }
}
