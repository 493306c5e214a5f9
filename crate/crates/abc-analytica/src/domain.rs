//! Disk domains and the conformal map onto the unit disk.
//!
//! Only disks ship: the general rectifiable-Jordan case needs a numerical
//! Riemann mapping, which is out of scope here. The [`ConformalMap`] trait
//! isolates that decision, so a user-supplied map for another domain shape
//! slots in without touching the rest of the crate. Boundary continuity of
//! user-supplied maps is the user's responsibility.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Relative width of the guard band around the boundary circle. Zeros this
/// close to the boundary are rejected rather than silently mis-classified.
pub const BOUNDARY_GUARD: f64 = 1e-8;

/// An open disk `|z - center| < radius`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Domain {
    center: Complex64,
    radius: f64,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct DomainRepr {
    center: [f64; 2],
    radius: f64,
}

impl Serialize for Domain {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        DomainRepr {
            center: [self.center.re, self.center.im],
            radius: self.radius,
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for Domain {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let repr = DomainRepr::deserialize(d)?;
        Domain::new(Complex64::new(repr.center[0], repr.center[1]), repr.radius)
            .map_err(serde::de::Error::custom)
    }
}

/// Inside / guard band / outside classification for a point.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Containment {
    Inside,
    BoundaryBand,
    Outside,
}

impl Domain {
    pub fn new(center: Complex64, radius: f64) -> Result<Self> {
        if !(radius > 0.0) || !radius.is_finite() || !center.is_finite() {
            return Err(Error::InvalidParameter(format!(
                "domain needs a finite center and radius > 0, got center {center}, radius {radius}"
            )));
        }
        Ok(Self { center, radius })
    }

    pub fn unit_disk() -> Self {
        Self {
            center: Complex64::ZERO,
            radius: 1.0,
        }
    }

    /// Disk of radius r about the origin.
    pub fn centered(radius: f64) -> Result<Self> {
        Self::new(Complex64::ZERO, radius)
    }

    pub fn center(&self) -> Complex64 {
        self.center
    }

    pub fn radius(&self) -> f64 {
        self.radius
    }

    pub fn is_unit_disk(&self) -> bool {
        self.center == Complex64::ZERO && self.radius == 1.0
    }

    pub fn diameter(&self) -> f64 {
        2.0 * self.radius
    }

    pub fn boundary_point(&self, theta: f64) -> Complex64 {
        self.center + self.radius * Complex64::new(theta.cos(), theta.sin())
    }

    pub fn contains(&self, z: Complex64) -> Containment {
        let d = (z - self.center).norm();
        if d < self.radius * (1.0 - BOUNDARY_GUARD) {
            Containment::Inside
        } else if d > self.radius * (1.0 + BOUNDARY_GUARD) {
            Containment::Outside
        } else {
            Containment::BoundaryBand
        }
    }

    pub fn in_closure(&self, z: Complex64) -> bool {
        self.contains(z) != Containment::Outside
    }

    pub fn map(&self) -> AffineMap {
        affine_map(self)
    }
}

/// The conformal-map contract: forward map onto the unit disk, its inverse,
/// and its derivative, each extending continuously to the boundary.
pub trait ConformalMap {
    fn forward(&self, z: Complex64) -> Complex64;
    fn inverse(&self, u: Complex64) -> Complex64;
    fn derivative(&self, z: Complex64) -> Complex64;
}

/// The shipped instance for disks: phi(z) = (z - center) / radius, which
/// sends the center to 0 with phi' > 0.
#[derive(Debug, Clone, Copy)]
pub struct AffineMap {
    center: Complex64,
    radius: f64,
}

pub fn affine_map(domain: &Domain) -> AffineMap {
    AffineMap {
        center: domain.center,
        radius: domain.radius,
    }
}

impl ConformalMap for AffineMap {
    fn forward(&self, z: Complex64) -> Complex64 {
        (z - self.center) / self.radius
    }

    fn inverse(&self, u: Complex64) -> Complex64 {
        self.center + self.radius * u
    }

    fn derivative(&self, _z: Complex64) -> Complex64 {
        Complex64::new(1.0 / self.radius, 0.0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn affine_map_examples() {
        let unit = Domain::unit_disk();
        let m = unit.map();
        let z = Complex64::new(0.3, -0.2);
        assert_eq!(m.forward(z), z); // identity on the unit disk

        let r5 = Domain::centered(5.0).unwrap();
        assert_eq!(r5.map().forward(Complex64::new(2.5, 0.0)), Complex64::new(0.5, 0.0));

        let d = Domain::new(Complex64::new(1.0, 0.0), 2.0).unwrap();
        // boundary to boundary: z = 3 maps to 1
        assert_eq!(d.map().forward(Complex64::new(3.0, 0.0)), Complex64::new(1.0, 0.0));
    }

    #[test]
    fn inverse_composes_to_identity() {
        let d = Domain::new(Complex64::new(-0.4, 1.7), 3.2).unwrap();
        let m = d.map();
        for k in 0..32 {
            let theta = 0.19 * k as f64;
            let z = d.center() + 0.83 * d.radius() * Complex64::new(theta.cos(), theta.sin());
            assert!((m.inverse(m.forward(z)) - z).norm() < 1e-10);
        }
    }

    #[test]
    fn boundary_maps_to_unit_circle() {
        let d = Domain::new(Complex64::new(2.0, -1.0), 0.7).unwrap();
        let m = d.map();
        for k in 0..256 {
            let theta = 2.0 * std::f64::consts::PI * k as f64 / 256.0;
            let u = m.forward(d.boundary_point(theta));
            assert!((u.norm() - 1.0).abs() < 1e-12);
        }
    }

    #[test]
    fn containment_classification() {
        let unit = Domain::unit_disk();
        assert_eq!(unit.contains(Complex64::ZERO), Containment::Inside);
        assert_eq!(unit.contains(Complex64::new(1.0, 0.0)), Containment::BoundaryBand);
        assert_eq!(unit.contains(Complex64::new(2.0, 0.0)), Containment::Outside);
        assert_eq!(
            unit.contains(Complex64::new(1.0 - 2.0 * BOUNDARY_GUARD, 0.0)),
            Containment::Inside
        );
    }

    #[test]
    fn invalid_domains_rejected() {
        assert!(Domain::new(Complex64::ZERO, 0.0).is_err());
        assert!(Domain::new(Complex64::ZERO, -1.0).is_err());
        assert!(Domain::new(Complex64::new(f64::NAN, 0.0), 1.0).is_err());
    }

    #[test]
    fn serde_shape() {
        let d = Domain::new(Complex64::new(1.5, -0.5), 2.0).unwrap();
        let json = serde_json::to_string(&d).unwrap();
        assert_eq!(json, r#"{"center":[1.5,-0.5],"radius":2.0}"#);
        let back: Domain = serde_json::from_str(&json).unwrap();
        assert_eq!(back, d);
    }
}
