//! Exact polynomial algebra over the Gaussian rationals.
//!
//! Everything here is exact: relative primality, distinct-zero counts, and
//! Wronskians must not carry floating-point noise, or the theorem checks
//! built on top of them are meaningless.

mod gaussian;
mod mason;
mod poly;

pub use gaussian::{parse_gaussian, parse_rational, GaussianRational};
pub use mason::{mason_check, n_theorem_check, MasonReport, NTheoremReport};
pub use poly::{
    distinct_zero_count, poly_gcd, squarefree_decomposition, squarefree_part,
    wronskian_derivative_poly, wronskian_poly, Polynomial,
};
