//! Enumerative results: distribution tables, classical numbers, chamber
//! walks, transfer matrices on L(k, j) and power series.

use thiserror::Error;

pub mod chamber;
pub mod distribution;
pub mod numbers;
pub mod series;
pub mod spectral;
pub mod transfer;

pub use chamber::{chamber_walk_count, Stepping};
pub use distribution::{distribution, distribution_sharded, grouped_distributions, DistributionTable, ObjectKind, SetFilter, Statistic, TableSpec};
pub use numbers::{bell, binomial, bnk, catalan, factorial, matching_count, ncn, stirling2};
pub use series::{bessel_series, fk_counts, fk_series, gk1_reflection, gkj_count, gkj_series, ExactPoly, ExactSeries};
pub use spectral::{eigenvalue_form_check, EigenReport};
pub use transfer::{bipartite_balance, box_shapes, char_poly, is_invertible, rank_corank, rect_lattice, IntMatrix};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CountingError {
    #[error("{object} of size {n} exceed the brute-force bound {limit}; use the sharded mode for larger sweeps")]
    BoundExceeded { object: &'static str, n: usize, limit: usize },
    #[error("complete matchings need an even ground set, got {0}")]
    OddMatchingSize(usize),
    #[error("invalid filter: {0}")]
    Filter(String),
    #[error("table is not symmetric at ({0}, {1})")]
    Asymmetric(usize, usize),
    #[error("matrix is not square")]
    NonSquare,
    #[error("dimension {dim} exceeds the bound {limit}")]
    DimensionTooLarge { dim: usize, limit: usize },
    #[error("free stepping needs an even length, got {0}")]
    OddLength(usize),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("series pivot has no invertible constant term")]
    SingularSeries,
}
