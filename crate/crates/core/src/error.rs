use thiserror::Error;

/// Errors surfaced by the exact-arithmetic pipeline.
#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected} variables, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("the zero ideal has no Newton polyhedron")]
    ZeroIdeal,

    #[error("power index must be >= 1, got {0}")]
    NonPositivePower(i64),

    #[error("ideal is not m-primary (variable x{missing} has no pure power), length is infinite")]
    NotMPrimary { missing: usize },

    #[error("table too short / not yet polynomial: fit windows disagree first at n = {first_mismatch}; increase the table length")]
    FitWindowDisagreement { first_mismatch: usize },

    #[error("table has {got} entries but fitting in dimension {dim} needs at least {needed}")]
    TableTooShort { dim: usize, got: usize, needed: usize },

    #[error("reduction ideal is not contained in the base ideal")]
    ReductionNotContained,

    #[error("complex is not pure: facets {first:?} and {second:?} have different sizes")]
    NotPure { first: Vec<usize>, second: Vec<usize> },

    #[error("simplicial complex has no facets")]
    EmptyComplex,

    #[error("facet vertex {vertex} is outside 1..={vertex_count}")]
    VertexOutOfRange { vertex: usize, vertex_count: usize },

    #[error("series numerator is identically zero")]
    ZeroSeries,

    #[error("{0}")]
    Scope(String),

    #[error("internal invariant violated: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn check_dims(expected: usize, got: usize) -> Result<()> {
        if expected == got {
            Ok(())
        } else {
            Err(Error::DimensionMismatch { expected, got })
        }
    }
}
