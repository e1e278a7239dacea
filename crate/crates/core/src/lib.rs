//! Exact computation with the normal filtration of monomial ideals.
//!
//! The crate computes integral closures of powers of a monomial ideal
//! through its Newton polyhedron (exact rational feasibility, no floating
//! point), tabulates normal Hilbert functions and fits the normal Hilbert
//! polynomial in the binomial basis, certifies normal reduction numbers and
//! intersection conditions on finite windows, and evaluates the coefficient
//! and vanishing criteria that tie them together. A separate module handles
//! graded instances given by simplicial complexes or diagonal hypersurfaces,
//! where the filtration is read off a rational Hilbert series.
//!
//! Everything is exact; every windowed certification says so in its report.
//! With the default `parallel` feature the lattice sweeps run on rayon;
//! disabling it gives a sequential build with identical results.

pub mod binom;
pub mod closure;
pub mod error;
mod exec;
pub mod exponent;
pub mod filtration;
pub mod graded;
pub mod hilbert;
pub mod ideal;
pub mod lattice;
mod lp;
pub mod newton;
pub mod random;
pub mod theorems;

pub use closure::{oracle_membership, ClosureCache, DEFAULT_ORACLE_K_MAX};
pub use error::{Error, Result};
pub use exponent::ExponentVector;
pub use filtration::{
    graded_quotient_lengths, hi_check, reduction_number, HiReport, ReductionReport,
};
pub use graded::{h_vector, HilbertSeries, SimplicialComplex};
pub use hilbert::{colength, fit, multiplicity_check, normal_table, BinomialPolynomial, HilbertTable};
pub use ideal::MonomialIdeal;
pub use newton::NewtonPolyhedron;
pub use theorems::{theorem_suite, AlphaCoefficients, TheoremReport};
