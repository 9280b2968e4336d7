//! Exact-arithmetic engine for theta decompositions of powers of the
//! Jacobi theta function and for k-colored generalized Frobenius
//! partitions.
//!
//! The crate is organized around five layers:
//! - [`qseries`]: truncated formal series in `q` over big integers, with
//!   Pochhammer, eta, Klein, and theta-nullwert builders
//! - [`jacobi`]: two-variable Fourier-Jacobi expansions in `(q, zeta)`
//! - [`decomp`]: the recursion producing the theta-decomposition
//!   coefficients `h_{l,c}` as symbolic theta expressions, plus the
//!   verification of the identities it rests on
//! - [`render`]: rendering theta expressions as sums of q-Pochhammer
//!   products, with a parser for the round trip
//! - [`frobenius`]: generating functions `CPhi_k` by enumeration,
//!   constant-term extraction, and the recursion, plus the formula
//!   catalog and congruence scans
//!
//! All values are immutable and all operations are pure; with the
//! default `parallel` feature the heavy inner loops use rayon, and
//! without it every code path falls back to sequential execution.

pub mod decomp;
pub mod error;
pub mod exprat;
pub mod frobenius;
pub mod jacobi;
pub mod qseries;
pub mod render;
pub mod report;
pub mod suites;

pub use error::{Error, Result};
pub use exprat::ExpRat;
pub use qseries::QSeries;
