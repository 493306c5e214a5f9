//! Boundary and area quadrature on disks.
//!
//! Boundary integrals use the periodic trapezoid rule, which is spectrally
//! accurate for the smooth integrands that arise here (|B'| of a finite
//! Blaschke product is smooth on the circle). Area integrals use a tensor
//! rule: Gauss--Legendre in radius (with a power substitution when an
//! algebraic endpoint weight is present) times the trapezoid in angle.
//! Node counts double until two successive estimates agree to tolerance.
//!
//! All reductions run through fixed-order pairwise summation, so a
//! parallel evaluation of the nodes would reduce to the same bits and
//! results are run-to-run identical.

use std::collections::HashMap;
use std::sync::{Mutex, OnceLock};

use num_complex::Complex64;

use crate::domain::Domain;
use crate::error::{Error, Result};

/// Quadrature budgets. `boundary_nodes` is the starting angular grid
/// (a power of two, at least 64); `radial_nodes` the starting
/// Gauss--Legendre order; `refine_limit` bounds the number of doublings;
/// `tol` is the convergence target for successive estimates.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadratureSpec {
    pub boundary_nodes: usize,
    pub radial_nodes: usize,
    pub refine_limit: usize,
    pub tol: f64,
}

impl QuadratureSpec {
    pub fn new(boundary_nodes: usize, radial_nodes: usize, refine_limit: usize, tol: f64) -> Result<Self> {
        if boundary_nodes < 64 || !boundary_nodes.is_power_of_two() {
            return Err(Error::InvalidParameter(format!(
                "boundary_nodes must be a power of two >= 64, got {boundary_nodes}"
            )));
        }
        if radial_nodes < 4 {
            return Err(Error::InvalidParameter(format!(
                "radial_nodes must be at least 4, got {radial_nodes}"
            )));
        }
        if !(tol > 0.0) {
            return Err(Error::InvalidParameter(format!("tol must be positive, got {tol}")));
        }
        Ok(Self {
            boundary_nodes,
            radial_nodes,
            refine_limit,
            tol,
        })
    }
}

impl Default for QuadratureSpec {
    fn default() -> Self {
        Self {
            boundary_nodes: 256,
            radial_nodes: 64,
            refine_limit: 12,
            tol: 1e-10,
        }
    }
}

/// Fixed-order pairwise summation.
pub fn pairwise_sum(xs: &[f64]) -> f64 {
    match xs.len() {
        0 => 0.0,
        1 => xs[0],
        2 => xs[0] + xs[1],
        n => {
            let mid = n / 2;
            pairwise_sum(&xs[..mid]) + pairwise_sum(&xs[mid..])
        }
    }
}

/// Gauss--Legendre nodes and weights on [0, 1], cached per order.
pub fn gauss_legendre_unit(n: usize) -> (Vec<f64>, Vec<f64>) {
    static CACHE: OnceLock<Mutex<HashMap<usize, (Vec<f64>, Vec<f64>)>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(hit) = cache.lock().unwrap().get(&n) {
        return hit.clone();
    }
    let computed = compute_gauss_legendre_unit(n);
    cache.lock().unwrap().insert(n, computed.clone());
    computed
}

fn compute_gauss_legendre_unit(n: usize) -> (Vec<f64>, Vec<f64>) {
    // Newton iteration on P_n with Chebyshev-like initial guesses,
    // exploiting the symmetry of the nodes about 0.
    let mut nodes = vec![0.0f64; n];
    let mut weights = vec![0.0f64; n];
    let m = n.div_ceil(2);
    for i in 0..m {
        let mut x = (std::f64::consts::PI * (i as f64 + 0.75) / (n as f64 + 0.5)).cos();
        let mut dp = 0.0;
        for _ in 0..100 {
            // Evaluate P_n(x) and P_n'(x) by the three-term recurrence.
            let mut p0 = 1.0;
            let mut p1 = x;
            for k in 2..=n {
                let p2 = ((2 * k - 1) as f64 * x * p1 - (k - 1) as f64 * p0) / k as f64;
                p0 = p1;
                p1 = p2;
            }
            dp = n as f64 * (x * p1 - p0) / (x * x - 1.0);
            let dx = p1 / dp;
            x -= dx;
            if dx.abs() < 1e-15 {
                break;
            }
        }
        let w = 2.0 / ((1.0 - x * x) * dp * dp);
        nodes[i] = -x;
        nodes[n - 1 - i] = x;
        weights[i] = w;
        weights[n - 1 - i] = w;
    }
    // map [-1, 1] -> [0, 1]
    let nodes = nodes.iter().map(|x| 0.5 * (x + 1.0)).collect();
    let weights = weights.iter().map(|w| 0.5 * w).collect();
    (nodes, weights)
}

fn check_finite(v: f64, what: &str) -> Result<f64> {
    if v.is_finite() {
        Ok(v)
    } else {
        Err(Error::NonFinite(what.to_string()))
    }
}

/// (1/2pi) * integral of h over the boundary circle with respect to arc
/// length, by the periodic trapezoid rule with node doubling. On the
/// boundary of a radius-R disk this measure has total mass R.
pub fn boundary_mean<F: Fn(Complex64) -> f64>(
    h: F,
    domain: &Domain,
    spec: &QuadratureSpec,
) -> Result<f64> {
    let eval = |n: usize| -> Result<f64> {
        let terms: Vec<f64> = (0..n)
            .map(|j| {
                let theta = 2.0 * std::f64::consts::PI * j as f64 / n as f64;
                h(domain.boundary_point(theta))
            })
            .collect();
        check_finite(
            domain.radius() * pairwise_sum(&terms) / n as f64,
            "boundary integral",
        )
    };
    let mut prev = eval(spec.boundary_nodes)?;
    for level in 1..=spec.refine_limit {
        let cur = eval(spec.boundary_nodes << level)?;
        if (cur - prev).abs() <= spec.tol * cur.abs().max(1.0) {
            return Ok(cur);
        }
        prev = cur;
    }
    let latest = prev;
    Err(Error::QuadratureDiverged {
        previous: latest,
        latest,
    })
}

/// Which boundary norm to compute.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BoundaryKind {
    /// (1/2pi) * integral of |g| ds
    L1,
    /// sup of |g| over the boundary
    Sup,
}

/// L1 (with measure ds/2pi) or sup norm of g on the boundary circle.
pub fn boundary_integral<F: Fn(Complex64) -> Complex64>(
    g: F,
    domain: &Domain,
    kind: BoundaryKind,
    spec: &QuadratureSpec,
) -> Result<f64> {
    match kind {
        BoundaryKind::L1 => boundary_mean(|z| g(z).norm(), domain, spec),
        BoundaryKind::Sup => Ok(boundary_extrema(|z| g(z).norm(), domain, spec)?.1),
    }
}

/// (min, max) of a continuous nonnegative boundary function, by dense
/// sampling plus golden-section refinement around the three best nodes at
/// each end. The values are sampled estimates: a lower bound for the max
/// and an upper bound for the min, refined to roughly 1e-9 relative.
pub fn boundary_extrema<F: Fn(Complex64) -> f64>(
    h: F,
    domain: &Domain,
    spec: &QuadratureSpec,
) -> Result<(f64, f64)> {
    let n = spec.boundary_nodes.max(4096);
    let tau = 2.0 * std::f64::consts::PI;
    let sample = |theta: f64| h(domain.boundary_point(theta));
    let values: Vec<f64> = (0..n).map(|j| sample(tau * j as f64 / n as f64)).collect();
    for v in &values {
        check_finite(*v, "boundary extremum sampling")?;
    }

    let refine = |indices: &[usize], maximize: bool| -> f64 {
        let mut best = if maximize { f64::MIN } else { f64::MAX };
        for &j in indices {
            let center = tau * j as f64 / n as f64;
            let half = tau / n as f64;
            let v = golden_section(&sample, center - half, center + half, maximize);
            best = if maximize { best.max(v) } else { best.min(v) };
        }
        best
    };

    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&a, &b| values[a].partial_cmp(&values[b]).unwrap());
    let min_candidates: Vec<usize> = order[..3.min(n)].to_vec();
    let max_candidates: Vec<usize> = order[n.saturating_sub(3)..].to_vec();

    let grid_min = values[order[0]];
    let grid_max = values[order[n - 1]];
    let min = refine(&min_candidates, false).min(grid_min);
    let max = refine(&max_candidates, true).max(grid_max);
    Ok((min, max))
}

fn golden_section<F: Fn(f64) -> f64>(f: &F, mut a: f64, mut b: f64, maximize: bool) -> f64 {
    const INV_PHI: f64 = 0.618_033_988_749_894_9;
    let sign = if maximize { 1.0 } else { -1.0 };
    let mut c = b - INV_PHI * (b - a);
    let mut d = a + INV_PHI * (b - a);
    let mut fc = sign * f(c);
    let mut fd = sign * f(d);
    for _ in 0..80 {
        if fc > fd {
            b = d;
            d = c;
            fd = fc;
            c = b - INV_PHI * (b - a);
            fc = sign * f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + INV_PHI * (b - a);
            fd = sign * f(d);
        }
        if (b - a).abs() < 1e-14 {
            break;
        }
    }
    f(0.5 * (a + b))
}

/// (1/pi) * integral over the disk of |g|^2 (1 - |z|)^weight dA.
/// `weight == 0` works on any disk; a nonzero weight is only meaningful on
/// the unit disk and is rejected elsewhere.
pub fn area_integral_disk<F: Fn(Complex64) -> Complex64>(
    g: F,
    domain: &Domain,
    weight_exponent: f64,
    spec: &QuadratureSpec,
) -> Result<f64> {
    area_integral_real(|z| g(z).norm_sqr(), domain, weight_exponent, spec)
}

/// Same tensor rule for a general real integrand:
/// (1/pi) * integral of h(z) (1 - |z|)^weight dA, weight > -1.
pub fn area_integral_real<F: Fn(Complex64) -> f64>(
    h: F,
    domain: &Domain,
    weight_exponent: f64,
    spec: &QuadratureSpec,
) -> Result<f64> {
    if weight_exponent != 0.0 && !domain.is_unit_disk() {
        return Err(Error::InvalidParameter(
            "weighted area integrals are defined on the unit disk".into(),
        ));
    }
    if weight_exponent <= -1.0 {
        return Err(Error::InvalidParameter(format!(
            "weight exponent must exceed -1 for integrability, got {weight_exponent}"
        )));
    }

    let eval = |n_r: usize, n_t: usize| -> Result<f64> {
        let (xs, ws) = gauss_legendre_unit(n_r);
        let radius = domain.radius();
        // Radial profile: radius values plus the full radial weight factor
        // (Jacobian, endpoint substitution, measure normalization).
        let mut radii = Vec::with_capacity(n_r);
        let mut factors = Vec::with_capacity(n_r);
        if weight_exponent == 0.0 {
            for (&x, &w) in xs.iter().zip(&ws) {
                let r = radius * x;
                radii.push(r);
                factors.push(w * r * radius);
            }
        } else {
            // substitute 1 - r = u^q so the endpoint factor u^{q(w+1)-1}
            // is at least quadratically smooth at u = 0
            let q = (3.0 / (weight_exponent + 1.0)).ceil().max(2.0);
            for (&u, &w) in xs.iter().zip(&ws) {
                let uq = u.powf(q);
                let r = 1.0 - uq;
                radii.push(r);
                factors.push(w * q * u.powf(q * (weight_exponent + 1.0) - 1.0) * r);
            }
        }
        let mut col_sums = Vec::with_capacity(n_t);
        let tau = 2.0 * std::f64::consts::PI;
        for j in 0..n_t {
            let theta = tau * j as f64 / n_t as f64;
            let dir = Complex64::new(theta.cos(), theta.sin());
            let col: Vec<f64> = radii
                .iter()
                .zip(&factors)
                .map(|(&r, &f)| f * h(domain.center() + r * dir))
                .collect();
            col_sums.push(pairwise_sum(&col));
        }
        check_finite(2.0 * pairwise_sum(&col_sums) / n_t as f64, "area integral")
    };

    // Converge the radial rule at the base angular grid, then the angular
    // grid at the converged radial order.
    let radial_cap = 8192usize;
    let mut n_r = spec.radial_nodes;
    let mut prev = eval(n_r, spec.boundary_nodes)?;
    let mut converged = false;
    for _ in 0..spec.refine_limit {
        if n_r * 2 > radial_cap {
            break;
        }
        n_r *= 2;
        let cur = eval(n_r, spec.boundary_nodes)?;
        let done = (cur - prev).abs() <= 0.5 * spec.tol * cur.abs().max(1.0);
        prev = cur;
        if done {
            converged = true;
            break;
        }
    }
    if !converged && n_r * 2 <= radial_cap {
        return Err(Error::QuadratureDiverged {
            previous: prev,
            latest: prev,
        });
    }

    let mut value = prev;
    for level in 1..=spec.refine_limit {
        let cur = eval(n_r, spec.boundary_nodes << level)?;
        if (cur - value).abs() <= spec.tol * cur.abs().max(1.0) {
            return Ok(cur);
        }
        value = cur;
    }
    Err(Error::QuadratureDiverged {
        previous: value,
        latest: value,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn spec() -> QuadratureSpec {
        QuadratureSpec::default()
    }

    #[test]
    fn spec_validation() {
        assert!(QuadratureSpec::new(64, 16, 8, 1e-9).is_ok());
        assert!(QuadratureSpec::new(63, 16, 8, 1e-9).is_err());
        assert!(QuadratureSpec::new(100, 16, 8, 1e-9).is_err());
        assert!(QuadratureSpec::new(64, 16, 8, 0.0).is_err());
    }

    #[test]
    fn pairwise_sum_matches_naive() {
        let xs: Vec<f64> = (0..1001).map(|k| (k as f64).sin()).collect();
        let naive: f64 = xs.iter().sum();
        assert!((pairwise_sum(&xs) - naive).abs() < 1e-9);
    }

    #[test]
    fn gauss_legendre_integrates_polynomials_exactly() {
        let (xs, ws) = gauss_legendre_unit(8);
        // integral of x^k on [0,1] = 1/(k+1), exact up to degree 15
        for k in 0..=15usize {
            let v: f64 = xs.iter().zip(&ws).map(|(x, w)| w * x.powi(k as i32)).sum();
            assert!((v - 1.0 / (k as f64 + 1.0)).abs() < 1e-13, "degree {k}");
        }
    }

    #[test]
    fn boundary_l1_examples() {
        let unit = Domain::unit_disk();
        // |1| on the unit circle: unit mass normalization gives 1
        let v = boundary_integral(|_| Complex64::new(1.0, 0.0), &unit, BoundaryKind::L1, &spec()).unwrap();
        assert!((v - 1.0).abs() < 1e-12);

        // 3 z^2 on the unit circle: (1/2pi) * 3 * 2pi = 3
        let v = boundary_integral(|z| 3.0 * z * z, &unit, BoundaryKind::L1, &spec()).unwrap();
        assert!((v - 3.0).abs() < 1e-12);

        // |c z^k| on an R-circle has mass |c| R^k * R
        let d = Domain::centered(2.0).unwrap();
        let v = boundary_integral(|z| 0.5 * z * z * z, &d, BoundaryKind::L1, &spec()).unwrap();
        assert!((v - 0.5 * 8.0 * 2.0).abs() < 1e-11);
    }

    #[test]
    fn boundary_sup_examples() {
        let d = Domain::centered(2.0).unwrap();
        let v = boundary_integral(|z| z, &d, BoundaryKind::Sup, &spec()).unwrap();
        assert!((v - 2.0).abs() < 1e-12);

        // max of |z + 2| on the unit circle is 3 at z = 1
        let unit = Domain::unit_disk();
        let v = boundary_integral(|z| z + 2.0, &unit, BoundaryKind::Sup, &spec()).unwrap();
        assert!((v - 3.0).abs() < 1e-9);
        let (min, _) = boundary_extrema(|z| (z + 2.0).norm(), &unit, &spec()).unwrap();
        assert!((min - 1.0).abs() < 1e-9);
    }

    #[test]
    fn area_examples() {
        let unit = Domain::unit_disk();
        // |1|^2 over the unit disk with weight 0: normalized area 1
        let v = area_integral_disk(|_| Complex64::new(1.0, 0.0), &unit, 0.0, &spec()).unwrap();
        assert!((v - 1.0).abs() < 1e-12);

        // g = (z^5)' = 5 z^4: (1/pi) * 25 * 2pi/10 = 5
        let v = area_integral_disk(|z| 5.0 * z.powu(4), &unit, 0.0, &spec()).unwrap();
        assert!((v - 5.0).abs() < 1e-11);
    }

    #[test]
    fn weighted_area_matches_beta_oracle() {
        // (1/pi) * int |k z^{k-1}|^2 (1-|z|)^w dA = 2 k^2 * B(2k, w + 1)
        // with B(a, b) = (a-1)! / prod_{i=0}^{a-1} (b + i) for integer a.
        let unit = Domain::unit_disk();
        for (k, w) in [(1usize, 0.5f64), (2, 0.25), (3, 0.75)] {
            let g = move |z: Complex64| k as f64 * z.powu(k as u32 - 1);
            let v = area_integral_disk(g, &unit, w, &spec()).unwrap();
            let a = 2 * k;
            let mut beta = 1.0f64;
            for j in 1..a {
                beta *= j as f64;
            }
            for i in 0..a {
                beta /= w + 1.0 + i as f64;
            }
            let expected = 2.0 * (k * k) as f64 * beta;
            assert!(
                (v - expected).abs() < 1e-9 * expected.max(1.0),
                "k={k} w={w}: got {v}, want {expected}"
            );
        }
    }

    #[test]
    fn weighted_area_requires_unit_disk() {
        let d = Domain::centered(2.0).unwrap();
        assert!(area_integral_disk(|_| Complex64::new(1.0, 0.0), &d, 0.5, &spec()).is_err());
    }

    #[test]
    fn parseval_for_polynomial_derivative() {
        // f = z + 2 z^3: (1/pi) int |f'|^2 dA = sum k |c_k|^2 = 1 + 3*4
        let unit = Domain::unit_disk();
        let f_prime = |z: Complex64| 1.0 + 6.0 * z * z;
        let v = area_integral_disk(f_prime, &unit, 0.0, &spec()).unwrap();
        assert!((v - 13.0).abs() < 1e-10);
    }
}
