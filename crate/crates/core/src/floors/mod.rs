//! Genus-0 floor diagrams of h-transverse toric polygons and the complex and
//! real curve counts obtained from them.

mod counts;
mod diagram;
mod enumerate;
mod kontsevich;
mod marking;
mod multiplicity;

use thiserror::Error;

use crate::lattice::LatticeError;

pub use counts::{
    gw_toric, relative_complex_counts_f2, relative_real_counts_f2, toric_counts, welschinger_toric,
    StratifiedCounts, StratumKey, ToricCounts,
};
pub use diagram::{DiagramKey, Edge, Elevator, Endpoint, FloorDiagram, FloorProfile};
pub use enumerate::{enumerate_floor_diagrams, enumerate_floor_diagrams_with};
pub use kontsevich::kontsevich_cp2;
pub use marking::{count_markings, linear_extensions, MarkElement, MarkedFloorDiagram};
pub use multiplicity::{complex_multiplicity, real_multiplicity};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FloorError {
    #[error("empty class: the polygon has no floors")]
    EmptyClass,
    #[error("unsupported polygon: {0}")]
    Unsupported(String),
    #[error("expected {expected} marked points, got {found}")]
    MarkCountMismatch { expected: usize, found: usize },
    #[error("invalid floor diagram: {0}")]
    InvalidDiagram(String),
    #[error("internal consistency error: {0}")]
    InternalConsistency(String),
    #[error(transparent)]
    Lattice(#[from] LatticeError),
}

/// How the enumeration work is scheduled.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Execution {
    Sequential,
    /// Splits the search on the ends carried by the first floor. Falls back
    /// to sequential execution when the `parallel` feature is disabled.
    Parallel,
}

impl Default for Execution {
    fn default() -> Self {
        if cfg!(feature = "parallel") {
            Execution::Parallel
        } else {
            Execution::Sequential
        }
    }
}

#[cfg(feature = "parallel")]
pub(crate) fn parallel_map<T, R, F>(items: &[T], f: F) -> Vec<R>
where
    T: Sync,
    R: Send,
    F: Fn(&T) -> R + Sync + Send,
{
    use rayon::prelude::*;
    items.par_iter().map(f).collect()
}

#[cfg(not(feature = "parallel"))]
pub(crate) fn parallel_map<T, R, F>(items: &[T], f: F) -> Vec<R>
where
    F: Fn(&T) -> R,
{
    items.iter().map(f).collect()
}
