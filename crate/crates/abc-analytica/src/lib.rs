//! abc-analytica: exact and numerical verification of local abc-type
//! inequalities for analytic functions on disks.
//!
//! The crate has two halves. The exact half ([`exact`]) works over the
//! Gaussian rationals and checks the Mason--Stothers abc theorem and its
//! n-term generalization verbatim. The analytic half builds finite Blaschke
//! products from zero sets ([`blaschke`]), computes Dirichlet / Hardy /
//! D_alpha norm functionals of Wronskians ([`functionals`]) by quadrature
//! ([`numeric`]), and mechanically verifies each inequality, identity, and
//! equality case at desk scale ([`verify`]).
//!
//! All values are immutable and all operations are pure functions, so
//! everything here may be called concurrently. Quadrature sums are reduced
//! with a fixed pairwise order, which keeps reports byte-stable from run
//! to run.

pub mod blaschke;
pub mod corpus;
pub mod domain;
pub mod error;
pub mod exact;
pub mod func;
pub mod functionals;
pub mod io;
pub mod numeric;
pub mod verify;

pub use error::{Error, Result};
