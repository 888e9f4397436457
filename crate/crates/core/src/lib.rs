//! Finite-truncation experiments with operators on the Bergman space of the unit disk.
//!
//! The crate builds Toeplitz, Hankel-product and Moebius-unitary operators as
//! matrices in the orthonormal basis `e_n(w) = sqrt(n + 1) w^n`, evaluates the
//! Berezin transform by independent routes and samples boundary-decay
//! quantities along approach paths to the circle.

pub mod berezin;
pub mod cli;
pub mod disk;
pub mod error;
pub mod operator;
pub mod quadrature;
pub mod report;
pub mod suite;
pub mod symbol;

pub use num_complex::Complex64;

pub use disk::DiskPoint;
pub use error::{Error, Result};
pub use operator::TruncatedOperator;
pub use quadrature::DiskQuadrature;
pub use symbol::MonomialSymbol;
