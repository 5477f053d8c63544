//! Exact q-series machinery for multi-colored Sylvester-type partition
//! identities.
//!
//! The crate is layered bottom-up:
//!
//! - [`polyring`]: sparse multivariate polynomials over `a1..ar`, `z1..zr`, `y`
//!   with arbitrary-precision integer coefficients.
//! - [`qseries`]: power series in `q` truncated at an exclusive order, with
//!   q-Pochhammer products and unit inversion.
//! - [`identities`]: both sides of every identity in the catalog, as series.
//! - [`combinatorics`]: brute-force enumeration of colored strict partitions
//!   and overpartitions, and the Durfee-square block decomposition.
//! - [`harness`]: verification runner and report rendering used by the CLI.

pub mod combinatorics;
pub mod harness;
pub mod identities;
pub mod polyring;
pub mod qseries;

pub use combinatorics::{BlockDecomposition, ColoredPart, ColoredPartition, PartitionKind};
pub use identities::{IdentityName, IdentitySides, IdentitySpec};
pub use polyring::{Monomial, MultiPoly, Symbol};
pub use qseries::QSeries;
