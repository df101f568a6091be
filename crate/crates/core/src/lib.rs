//! Universal point sets for integer-valued polynomials over the Gaussian
//! integers.
//!
//! A finite set `M ⊂ Z[i]` is `n`-universal when every polynomial of degree
//! at most `n` that maps `M` into `Z[i]` maps all of `Z[i]` into `Z[i]`.
//! This crate provides exact arithmetic in Z[i] and Q(i), a certifier that
//! decides universality of `(n + 1)`-point sets from their residue
//! distribution, a sufficient-condition certifier for larger sets, an
//! independent Lagrange-interpolation oracle, an `O(n)`-size disk
//! construction and a pruned exhaustive search for small universal sets.
//!
//! No floating point is used on any decision path.

pub mod constructor;
pub mod distribution;
mod error;
pub mod extract;
pub mod gauss;
mod json;
pub mod point_set;
pub mod poly;
pub mod primes;
pub mod rational;
pub mod residue;
pub mod search;
pub mod universality;

pub use constructor::{
    choose_level_and_a, disk, minimal_disk_radius, square_set, universal_disk_set, DiskConstruction, DiskSet,
    PrimeSquare, SquareSetSpec,
};
pub use distribution::{
    histogram, is_almost_equal, is_almost_uniform, relevant_prime_powers, split_almost_equal, ResidueHistogram,
};
pub use error::{Error, Result};
pub use extract::extract_balanced_subset;
pub use gauss::GaussInt;
pub use point_set::PointSet;
pub use poly::{interpolate, lagrange_basis, GaussPoly, IntegerValuedness, DEFAULT_ORACLE_BUDGET};
pub use primes::{enumerate_primes, factor, valuation, Factorization, GaussPrime, PrimePower};
pub use rational::GaussRat;
pub use residue::{reduce_mod, residue_system, Modulus};
pub use search::{
    centered_segment, compress_columns, compress_rows, count_close_pairs, growth_table, normalize, search_minimal,
    GrowthRow, SearchBox, SearchConfig, SearchOutcome,
};
pub use universality::{
    check_universal_exact, check_universal_superset, find_witness, oracle_check_universal, volume, Failure,
    UniversalityCertificate, Verdict, Volume, Witness,
};
