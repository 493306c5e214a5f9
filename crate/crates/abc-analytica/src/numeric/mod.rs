//! Complex floating-point kernel: truncated power series, polynomial root
//! finding, winding counts, and boundary/area quadrature.

mod roots;
mod series;
pub mod quadrature;
mod winding;

pub use quadrature::{
    area_integral_disk, area_integral_real, boundary_extrema, boundary_integral, boundary_mean,
    gauss_legendre_unit, pairwise_sum, BoundaryKind, QuadratureSpec,
};
pub use roots::{cluster, cluster_indices, poly_roots, CLUSTER_RADIUS};
pub use series::PowerSeries;
pub use winding::winding_count;
