//! Finite Blaschke products: construction from zero sets, LCM and radical,
//! evaluation, boundary derivative modulus, zero counts, and
//! Dirichlet / D_alpha norms.
//!
//! Zeros are stored in unit-disk coordinates (after the conformal map of
//! the domain); the construction formula composes with that map, and LCM,
//! radical, and counts are coordinate-free. Each off-origin factor carries
//! the unimodular normalizer `conj(w)/|w|`, so that a product on the unit
//! disk with a single zero at `a > 0` takes the value `a` at the origin.
//! Dropping the normalizers would change nothing measurable here (no norm,
//! count, or modulus sees a unimodular constant).

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::domain::{ConformalMap, Containment, Domain};
use crate::error::{Error, Result};
use crate::numeric::quadrature::{boundary_mean, QuadratureSpec};
use crate::numeric::{area_integral_disk, cluster, pairwise_sum, PowerSeries};

/// Cluster tolerance for merging zero locations handed to a constructor.
pub const ZERO_MERGE_RADIUS: f64 = 1e-6;

#[derive(Debug, Clone, PartialEq)]
pub struct BlaschkeProduct {
    domain: Domain,
    /// (location in unit-disk coordinates, multiplicity), locations
    /// pairwise distinct. Empty list = the constant 1.
    zeros: Vec<(Complex64, u32)>,
}

/// Zero counts of a product: total with multiplicity and distinct.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ZeroCounts {
    pub total: usize,
    pub distinct: usize,
}

/// The two independent routes to the Dirichlet norm of a finite product;
/// both equal the zero count.
#[derive(Debug, Clone, Copy, Serialize)]
pub struct DirichletNormSq {
    pub area_route: f64,
    pub boundary_route: f64,
}

impl DirichletNormSq {
    pub fn value(&self) -> f64 {
        self.boundary_route
    }
}

/// Serialization shape for zero lists: `{"zeros":[{"z":[re,im],"m":k},..]}`
/// with locations in domain coordinates.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ZeroListRepr {
    pub zeros: Vec<ZeroRepr>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ZeroRepr {
    pub z: [f64; 2],
    pub m: u32,
}

impl BlaschkeProduct {
    /// The empty product, the constant 1.
    pub fn one(domain: Domain) -> Self {
        Self {
            domain,
            zeros: Vec::new(),
        }
    }

    /// Build from zeros given in domain coordinates. Zeros in the boundary
    /// guard band or outside the domain are rejected; coincident locations
    /// (within `ZERO_MERGE_RADIUS` after mapping) are merged.
    pub fn from_zeros(domain: Domain, zeros: &[(Complex64, u32)]) -> Result<Self> {
        let map = domain.map();
        let mut unit_zeros = Vec::with_capacity(zeros.len());
        for &(z, m) in zeros {
            match domain.contains(z) {
                Containment::Inside => {}
                Containment::BoundaryBand => return Err(Error::ZeroInGuardBand { z }),
                Containment::Outside => return Err(Error::ZeroOutsideDomain { z }),
            }
            if m == 0 {
                return Err(Error::InvalidParameter(format!(
                    "zero at {z} has multiplicity 0"
                )));
            }
            unit_zeros.push((map.forward(z), m));
        }
        Ok(Self::from_unit_zeros_unchecked(domain, unit_zeros))
    }

    /// Internal constructor from unit-disk coordinates that only merges.
    fn from_unit_zeros_unchecked(domain: Domain, zeros: Vec<(Complex64, u32)>) -> Self {
        let locations: Vec<Complex64> = zeros.iter().map(|&(w, _)| w).collect();
        let clusters = cluster(&locations, ZERO_MERGE_RADIUS);
        let mut merged = Vec::with_capacity(clusters.len());
        for (centroid, _) in clusters {
            let mult: u32 = zeros
                .iter()
                .filter(|&&(w, _)| (w - centroid).norm() <= ZERO_MERGE_RADIUS * (1.0 + 1e-9))
                .map(|&(_, m)| m)
                .sum();
            if mult > 0 {
                merged.push((centroid, mult));
            }
        }
        Self {
            domain,
            zeros: merged,
        }
    }

    pub fn domain(&self) -> &Domain {
        &self.domain
    }

    /// Zero locations in unit-disk coordinates.
    pub fn zeros_unit(&self) -> &[(Complex64, u32)] {
        &self.zeros
    }

    /// Zero locations mapped back to domain coordinates.
    pub fn zeros_in_domain(&self) -> Vec<(Complex64, u32)> {
        let map = self.domain.map();
        self.zeros.iter().map(|&(w, m)| (map.inverse(w), m)).collect()
    }

    pub fn counts(&self) -> ZeroCounts {
        ZeroCounts {
            total: self.zeros.iter().map(|&(_, m)| m as usize).sum(),
            distinct: self.zeros.len(),
        }
    }

    /// All multiplicities reduced to one.
    pub fn radical(&self) -> Self {
        Self {
            domain: self.domain,
            zeros: self.zeros.iter().map(|&(w, _)| (w, 1)).collect(),
        }
    }

    /// Largest modulus of a zero location in unit coordinates; 0 for the
    /// empty product.
    pub fn zero_radius(&self) -> f64 {
        self.zeros.iter().map(|&(w, _)| w.norm()).fold(0.0, f64::max)
    }

    /// Evaluate at a point of the closed domain.
    pub fn eval(&self, z: Complex64) -> Result<Complex64> {
        if self.domain.contains(z) == Containment::Outside {
            return Err(Error::PointOutsideClosure { z });
        }
        Ok(self.eval_unit(self.domain.map().forward(z)))
    }

    /// Evaluate in unit-disk coordinates, no domain check.
    pub fn eval_unit(&self, u: Complex64) -> Complex64 {
        let mut acc = Complex64::new(1.0, 0.0);
        for &(w, m) in &self.zeros {
            let f = factor(w, u);
            for _ in 0..m {
                acc *= f;
            }
        }
        acc
    }

    /// Value and z-derivative at an interior or boundary point, by
    /// forward-mode accumulation over the factors (no division, so zeros
    /// of any multiplicity are handled).
    pub fn eval_with_derivative(&self, z: Complex64) -> (Complex64, Complex64) {
        let map = self.domain.map();
        let u = map.forward(z);
        let mut value = Complex64::new(1.0, 0.0);
        let mut deriv = Complex64::ZERO;
        for &(w, m) in &self.zeros {
            let f = factor(w, u);
            let df = factor_derivative(w, u);
            for _ in 0..m {
                deriv = deriv * f + value * df;
                value *= f;
            }
        }
        (value, deriv * map.derivative(z))
    }

    /// |B'| at a boundary point, in closed form through the map:
    /// |phi'| * sum_k m_k (1 - |w_k|^2) / |u - w_k|^2 with u = phi(zeta).
    pub fn boundary_derivative_modulus(&self, zeta: Complex64) -> f64 {
        let map = self.domain.map();
        let u0 = map.forward(zeta);
        // project onto the unit circle; the closed form lives there
        let u = if u0.norm() > 0.0 { u0 / u0.norm() } else { u0 };
        let terms: Vec<f64> = self
            .zeros
            .iter()
            .map(|&(w, m)| m as f64 * (1.0 - w.norm_sqr()) / (u - w).norm_sqr())
            .collect();
        map.derivative(zeta).norm() * pairwise_sum(&terms)
    }

    /// Stable (1 - |B(z)|^2) / (1 - |phi(z)|^2) for interior points; the
    /// direct subtraction cancels catastrophically near the boundary.
    pub fn one_minus_sq_ratio(&self, z: Complex64) -> f64 {
        let u = self.domain.map().forward(z);
        let one_minus_usq = 1.0 - u.norm_sqr();
        if one_minus_usq <= 0.0 {
            return 0.0;
        }
        let mut log_prod = 0.0f64;
        for &(w, m) in &self.zeros {
            let g = (1.0 - w.norm_sqr()) / (Complex64::new(1.0, 0.0) - w.conj() * u).norm_sqr();
            let x = one_minus_usq * g;
            if x >= 1.0 {
                // u is a zero location: |B(z)| = 0 exactly
                return 1.0 / one_minus_usq;
            }
            log_prod += m as f64 * (-x).ln_1p();
        }
        -log_prod.exp_m1() / one_minus_usq
    }

    /// Dirichlet norm squared, computed along both routes: the area
    /// integral of |B'|^2 and the boundary integral of |B'|. Both equal
    /// the zero count for a finite product; a disagreement beyond 10x the
    /// quadrature tolerance scale is reported as an inconsistency.
    pub fn dirichlet_norm_sq(&self, spec: &QuadratureSpec) -> Result<DirichletNormSq> {
        if self.zeros.is_empty() {
            return Ok(DirichletNormSq {
                area_route: 0.0,
                boundary_route: 0.0,
            });
        }
        let area = area_integral_disk(
            |z| self.eval_with_derivative(z).1,
            &self.domain,
            0.0,
            spec,
        )?;
        let boundary = boundary_mean(|zeta| self.boundary_derivative_modulus(zeta), &self.domain, spec)?;
        let scale = boundary.abs().max(1.0);
        if (area - boundary).abs() > 10.0 * spec.tol * scale {
            return Err(Error::QuadratureInconsistency {
                a: area,
                b: boundary,
            });
        }
        Ok(DirichletNormSq {
            area_route: area,
            boundary_route: boundary,
        })
    }

    /// Taylor expansion in unit-disk coordinates to the given order, with
    /// a geometric tail estimate. For the unit disk this is the expansion
    /// in z itself. The product is rational, so the coefficients come from
    /// an exact numerator/denominator expansion and one series division.
    pub fn taylor(&self, order: usize) -> TaylorExpansion {
        let mut num = vec![Complex64::new(1.0, 0.0)];
        let mut den = vec![Complex64::new(1.0, 0.0)];
        for &(w, m) in &self.zeros {
            for _ in 0..m {
                if w.norm() == 0.0 {
                    // factor u
                    num = poly_mul(&num, &[Complex64::ZERO, Complex64::new(1.0, 0.0)]);
                } else {
                    let c = w.conj() / w.norm();
                    // c (w - u)
                    num = poly_mul(&num, &[c * w, -c]);
                    // 1 - conj(w) u
                    den = poly_mul(&den, &[Complex64::new(1.0, 0.0), -w.conj()]);
                }
            }
        }
        let num_series = PowerSeries::from_coeffs(pad(num, order));
        let den_series = PowerSeries::from_coeffs(pad(den, order));
        // den(0) = 1, so the division cannot fail
        let series = num_series.div(&den_series).expect("denominator is 1 at 0");

        let rho = self.zero_radius();
        let tail_coeff = if rho == 0.0 {
            0.0
        } else {
            // fit |b_k| <= C rho^k over the tail window, in log space
            let window = (order / 2).max(1);
            let mut log_c = f64::NEG_INFINITY;
            for k in (order + 1 - window)..=order {
                let a = series.coeff(k).norm();
                if a > 0.0 {
                    log_c = log_c.max(a.ln() - k as f64 * rho.ln());
                }
            }
            if log_c.is_finite() {
                log_c.exp()
            } else {
                0.0
            }
        };
        TaylorExpansion {
            series,
            rho,
            tail_coeff,
        }
    }
}

/// A truncated expansion together with the data for tail estimates:
/// coefficients decay like `tail_coeff * rho^k`.
#[derive(Debug, Clone)]
pub struct TaylorExpansion {
    pub series: PowerSeries,
    pub rho: f64,
    pub tail_coeff: f64,
}

impl TaylorExpansion {
    /// Upper estimate for the dropped D_alpha mass
    /// sum_{k > M} k^alpha |b_k|^2 under the geometric coefficient model.
    pub fn d_alpha_tail_bound(&self, alpha: f64) -> f64 {
        if self.rho == 0.0 || self.tail_coeff == 0.0 {
            return 0.0;
        }
        let x = self.rho * self.rho;
        let c2 = self.tail_coeff * self.tail_coeff;
        let m = self.series.truncation_order();
        let mut acc = 0.0f64;
        let mut k = m + 1;
        let mut pow = x.powi(k as i32);
        if pow == 0.0 {
            return 0.0;
        }
        loop {
            let term = c2 * (k as f64).powf(alpha) * pow;
            acc += term;
            if term <= 1e-18 * acc.max(1e-300) || k > m + 20_000_000 {
                break;
            }
            k += 1;
            pow *= x;
        }
        acc
    }
}

fn pad(mut v: Vec<Complex64>, order: usize) -> Vec<Complex64> {
    v.resize(v.len().max(order + 1), Complex64::ZERO);
    v.truncate(order + 1);
    // keep at least the constant term
    if v.is_empty() {
        v.push(Complex64::ZERO);
    }
    v
}

fn poly_mul(a: &[Complex64], b: &[Complex64]) -> Vec<Complex64> {
    let mut out = vec![Complex64::ZERO; a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

/// One normalized factor: u for a zero at the origin, otherwise
/// (conj(w)/|w|) (w - u) / (1 - conj(w) u).
fn factor(w: Complex64, u: Complex64) -> Complex64 {
    if w.norm() == 0.0 {
        u
    } else {
        (w.conj() / w.norm()) * (w - u) / (Complex64::new(1.0, 0.0) - w.conj() * u)
    }
}

fn factor_derivative(w: Complex64, u: Complex64) -> Complex64 {
    if w.norm() == 0.0 {
        Complex64::new(1.0, 0.0)
    } else {
        let d = Complex64::new(1.0, 0.0) - w.conj() * u;
        (w.conj() / w.norm()) * (w.norm_sqr() - 1.0) / (d * d)
    }
}

/// Least common multiple: the product whose zero set is the union, each
/// location carrying the maximum multiplicity over the inputs.
pub fn blaschke_lcm(products: &[BlaschkeProduct]) -> Result<BlaschkeProduct> {
    combine(products, |mults| mults.iter().copied().max().unwrap_or(0))
}

/// Product of the inputs: union of zero sets with summed multiplicities.
pub fn blaschke_mul(products: &[BlaschkeProduct]) -> Result<BlaschkeProduct> {
    combine(products, |mults| mults.iter().copied().sum())
}

/// Radical of the product of the inputs: union of zero sets, every
/// multiplicity reduced to one.
pub fn radical_of_product(products: &[BlaschkeProduct]) -> Result<BlaschkeProduct> {
    Ok(blaschke_mul(products)?.radical())
}

fn combine(
    products: &[BlaschkeProduct],
    merge: impl Fn(&[u32]) -> u32,
) -> Result<BlaschkeProduct> {
    assert!(!products.is_empty(), "combine of an empty product list");
    let domain = products[0].domain;
    if products.iter().any(|p| p.domain != domain) {
        return Err(Error::MixedDomains);
    }
    let all: Vec<Complex64> = products
        .iter()
        .flat_map(|p| p.zeros.iter().map(|&(w, _)| w))
        .collect();
    let clusters = cluster(&all, ZERO_MERGE_RADIUS);
    let mut zeros = Vec::with_capacity(clusters.len());
    for (centroid, _) in clusters {
        let per_product: Vec<u32> = products
            .iter()
            .map(|p| {
                p.zeros
                    .iter()
                    .filter(|&&(w, _)| (w - centroid).norm() <= ZERO_MERGE_RADIUS * (1.0 + 1e-9))
                    .map(|&(_, m)| m)
                    .sum()
            })
            .collect();
        let m = merge(&per_product);
        if m > 0 {
            zeros.push((centroid, m));
        }
    }
    Ok(BlaschkeProduct { domain, zeros })
}

/// D_alpha norm squared of a truncated series: sum_{k>=1} k^alpha |f(k)|^2
/// up to the truncation order. Requires 0 < alpha <= 1; alpha = 1 is the
/// Dirichlet space.
pub fn d_alpha_norm_sq(f: &PowerSeries, alpha: f64) -> Result<f64> {
    if !(alpha > 0.0 && alpha <= 1.0) {
        return Err(Error::AlphaOutOfRange(alpha));
    }
    let terms: Vec<f64> = f
        .coeffs()
        .iter()
        .enumerate()
        .skip(1)
        .map(|(k, c)| (k as f64).powf(alpha) * c.norm_sqr())
        .collect();
    Ok(pairwise_sum(&terms))
}

impl From<&BlaschkeProduct> for ZeroListRepr {
    fn from(b: &BlaschkeProduct) -> Self {
        ZeroListRepr {
            zeros: b
                .zeros_in_domain()
                .iter()
                .map(|&(z, m)| ZeroRepr { z: [z.re, z.im], m })
                .collect(),
        }
    }
}

impl ZeroListRepr {
    pub fn into_product(&self, domain: Domain) -> Result<BlaschkeProduct> {
        let zeros: Vec<(Complex64, u32)> = self
            .zeros
            .iter()
            .map(|zr| (Complex64::new(zr.z[0], zr.z[1]), zr.m))
            .collect();
        BlaschkeProduct::from_zeros(domain, &zeros)
    }
}
