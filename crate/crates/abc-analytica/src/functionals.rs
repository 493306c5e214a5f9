//! The norm functionals attached to a Wronskian W:
//!
//! - lambda^2 = ||W'||^2_{L2(Omega)} * ||1/W||^2_{Linf(boundary)}
//! - mu       = ||W||_{Linf(boundary)} * ||1/W||_{Linf(boundary)}
//! - kappa    = ||W'||_{L1(boundary)} * ||1/W||_{Linf(boundary)}
//! - lambda_alpha^2 = ||W||^2_{D_alpha} * ||1/W||^2_{Linf(T)}
//!
//! ||1/W||_{Linf(boundary)} is computed as the reciprocal of the boundary
//! infimum of |W|; for the continuous |W| handled here that equals the
//! essential supremum of 1/|W|. For non-polynomial inputs the infimum is a
//! sampled estimate and the diagnostics say so.

use serde::Serialize;

use crate::blaschke::d_alpha_norm_sq;
use crate::domain::Domain;
use crate::error::{Error, Result};
use crate::func::AnalyticFn;
use crate::numeric::quadrature::QuadratureSpec;
use crate::numeric::{area_integral_disk, boundary_extrema, boundary_mean, PowerSeries};

/// Hypothesis threshold: the boundary infimum of |W| must exceed this
/// fraction of the boundary supremum, or the functionals are declared
/// infinite and the hypotheses violated.
pub const INVERTIBILITY_THRESHOLD: f64 = 1e-10;

/// Boundary modulus profile of W.
#[derive(Debug, Clone, Copy, Serialize)]
pub struct BoundaryProfile {
    pub min_modulus: f64,
    pub max_modulus: f64,
}

#[derive(Debug, Clone, Serialize)]
pub struct FunctionalDiagnostics {
    pub boundary_min: f64,
    pub boundary_max: f64,
    /// true when the boundary extrema come from sampling a non-polynomial
    /// evaluator; the infimum is then only a sampled estimate
    pub sampled_estimate: bool,
}

/// The functional values entering the right-hand sides of the inequality
/// checks. `mu >= 1` always (it is a max/min ratio).
#[derive(Debug, Clone, Serialize)]
pub struct FunctionalValues {
    pub lambda_sq: f64,
    pub mu: f64,
    pub kappa: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub lambda_alpha_sq: Option<f64>,
    pub diagnostics: FunctionalDiagnostics,
}

/// Estimate the boundary modulus profile of W and enforce the
/// invertibility hypothesis `1/W` bounded on the boundary.
pub fn check_boundary_invertibility(
    w: &AnalyticFn,
    domain: &Domain,
    spec: &QuadratureSpec,
) -> Result<BoundaryProfile> {
    let (min_modulus, max_modulus) = boundary_extrema(|z| w.eval(z).norm(), domain, spec)?;
    if !(min_modulus > INVERTIBILITY_THRESHOLD * max_modulus.max(f64::MIN_POSITIVE)) {
        return Err(Error::BoundaryVanishing { min_modulus });
    }
    Ok(BoundaryProfile {
        min_modulus,
        max_modulus,
    })
}

/// lambda^2: area Dirichlet integral of W times the squared sup of 1/W.
pub fn lambda_functional(
    w: &AnalyticFn,
    domain: &Domain,
    spec: &QuadratureSpec,
) -> Result<f64> {
    let profile = check_boundary_invertibility(w, domain, spec)?;
    lambda_with_profile(w, domain, spec, &profile)
}

fn lambda_with_profile(
    w: &AnalyticFn,
    domain: &Domain,
    spec: &QuadratureSpec,
    profile: &BoundaryProfile,
) -> Result<f64> {
    let dw = w.derivative();
    if dw.coeffs().iter().all(|c| c.norm() == 0.0) {
        return Ok(0.0);
    }
    let dirichlet = area_integral_disk(|z| dw.eval(z), domain, 0.0, spec)?;
    Ok(dirichlet / (profile.min_modulus * profile.min_modulus))
}

/// mu: boundary sup of |W| over boundary inf of |W|.
pub fn mu_functional(w: &AnalyticFn, domain: &Domain, spec: &QuadratureSpec) -> Result<f64> {
    let profile = check_boundary_invertibility(w, domain, spec)?;
    Ok(profile.max_modulus / profile.min_modulus)
}

/// kappa: boundary L1 norm of W' (measure ds/2pi) over boundary inf of |W|.
/// W' comes from exact coefficient differentiation, never differencing.
pub fn kappa_functional(w: &AnalyticFn, domain: &Domain, spec: &QuadratureSpec) -> Result<f64> {
    let profile = check_boundary_invertibility(w, domain, spec)?;
    kappa_with_profile(w, domain, spec, &profile)
}

fn kappa_with_profile(
    w: &AnalyticFn,
    domain: &Domain,
    spec: &QuadratureSpec,
    profile: &BoundaryProfile,
) -> Result<f64> {
    let dw = w.derivative();
    if dw.coeffs().iter().all(|c| c.norm() == 0.0) {
        return Ok(0.0);
    }
    let l1 = boundary_mean(|z| dw.eval(z).norm(), domain, spec)?;
    Ok(l1 / profile.min_modulus)
}

/// lambda_alpha^2 on the unit circle: D_alpha norm of the series times the
/// squared sup of 1/W. Requires 0 < alpha < 1.
pub fn lambda_alpha_functional(
    w: &PowerSeries,
    alpha: f64,
    spec: &QuadratureSpec,
) -> Result<f64> {
    if !(alpha > 0.0 && alpha < 1.0) {
        return Err(Error::AlphaOutOfRange(alpha));
    }
    let unit = Domain::unit_disk();
    let w_fn = AnalyticFn::Series(w.clone());
    let profile = check_boundary_invertibility(&w_fn, &unit, spec)?;
    let norm = d_alpha_norm_sq(w, alpha)?;
    Ok(norm / (profile.min_modulus * profile.min_modulus))
}

/// All functionals of one W in a single pass over the boundary profile.
/// `alpha` adds lambda_alpha^2 (unit disk only).
pub fn compute_functionals(
    w: &AnalyticFn,
    domain: &Domain,
    spec: &QuadratureSpec,
    alpha: Option<f64>,
) -> Result<FunctionalValues> {
    let profile = check_boundary_invertibility(w, domain, spec)?;
    let lambda_sq = lambda_with_profile(w, domain, spec, &profile)?;
    let kappa = kappa_with_profile(w, domain, spec, &profile)?;
    let mu = profile.max_modulus / profile.min_modulus;
    let lambda_alpha_sq = match alpha {
        None => None,
        Some(a) => {
            if !domain.is_unit_disk() {
                return Err(Error::InvalidParameter(
                    "lambda_alpha is defined on the unit disk".into(),
                ));
            }
            if !(a > 0.0 && a < 1.0) {
                return Err(Error::AlphaOutOfRange(a));
            }
            let order = w.coeffs().len().max(2) - 1;
            let series = w.to_series(order);
            Some(d_alpha_norm_sq(&series, a)? / (profile.min_modulus * profile.min_modulus))
        }
    };
    Ok(FunctionalValues {
        lambda_sq,
        mu,
        kappa,
        lambda_alpha_sq,
        diagnostics: FunctionalDiagnostics {
            boundary_min: profile.min_modulus,
            boundary_max: profile.max_modulus,
            sampled_estimate: !w.is_polynomial(),
        },
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_complex::Complex64;

    fn c(re: f64) -> Complex64 {
        Complex64::new(re, 0.0)
    }

    fn spec() -> QuadratureSpec {
        QuadratureSpec::default()
    }

    fn unit() -> Domain {
        Domain::unit_disk()
    }

    #[test]
    fn invertibility_check_examples() {
        let one = AnalyticFn::Poly(vec![c(1.0)]);
        let p = check_boundary_invertibility(&one, &unit(), &spec()).unwrap();
        assert!((p.min_modulus - 1.0).abs() < 1e-12);

        let z = AnalyticFn::Poly(vec![c(0.0), c(1.0)]);
        let p = check_boundary_invertibility(&z, &unit(), &spec()).unwrap();
        assert!((p.min_modulus - 1.0).abs() < 1e-12);

        // W = z - 1 vanishes at the boundary point 1
        let zm1 = AnalyticFn::Poly(vec![c(-1.0), c(1.0)]);
        assert!(matches!(
            check_boundary_invertibility(&zm1, &unit(), &spec()),
            Err(Error::BoundaryVanishing { .. })
        ));
    }

    #[test]
    fn lambda_examples() {
        // constants have lambda = 0
        let w = AnalyticFn::Poly(vec![c(0.01)]);
        assert_eq!(lambda_functional(&w, &unit(), &spec()).unwrap(), 0.0);

        // W = c z^k has lambda^2 = k
        for (coeff, k) in [(3.0, 1usize), (0.5, 3), (2.0, 5)] {
            let mut coeffs = vec![c(0.0); k + 1];
            coeffs[k] = c(coeff);
            let w = AnalyticFn::Poly(coeffs);
            let v = lambda_functional(&w, &unit(), &spec()).unwrap();
            assert!((v - k as f64).abs() < 1e-9, "k={k}: {v}");
        }

        // W = 2z: ||W'||^2 = 4, min |W| = 2, lambda^2 = 1
        let w = AnalyticFn::Poly(vec![c(0.0), c(2.0)]);
        assert!((lambda_functional(&w, &unit(), &spec()).unwrap() - 1.0).abs() < 1e-10);
    }

    #[test]
    fn mu_examples() {
        let w = AnalyticFn::Poly(vec![c(7.0)]);
        assert!((mu_functional(&w, &unit(), &spec()).unwrap() - 1.0).abs() < 1e-12);

        let w = AnalyticFn::Poly(vec![c(0.0), c(0.0), c(-2.5)]);
        assert!((mu_functional(&w, &unit(), &spec()).unwrap() - 1.0).abs() < 1e-9);

        // W = z + 2: max 3 at z = 1, min 1 at z = -1
        let w = AnalyticFn::Poly(vec![c(2.0), c(1.0)]);
        assert!((mu_functional(&w, &unit(), &spec()).unwrap() - 3.0).abs() < 1e-9);
    }

    #[test]
    fn kappa_examples() {
        let w = AnalyticFn::Poly(vec![c(0.3)]);
        assert_eq!(kappa_functional(&w, &unit(), &spec()).unwrap(), 0.0);

        // W = c z^k on the unit disk: kappa = k
        let w = AnalyticFn::Poly(vec![c(0.0), c(0.0), c(0.0), c(4.0)]);
        assert!((kappa_functional(&w, &unit(), &spec()).unwrap() - 3.0).abs() < 1e-10);

        // W = z^3 + 1 on the disk of radius 10: kappa = 3000/999
        let w = AnalyticFn::Poly(vec![c(1.0), c(0.0), c(0.0), c(1.0)]);
        let d = Domain::centered(10.0).unwrap();
        let v = kappa_functional(&w, &d, &spec()).unwrap();
        assert!((v - 3000.0 / 999.0).abs() < 1e-6, "kappa {v}");
    }

    #[test]
    fn lambda_alpha_examples() {
        // constants: 0
        let w = PowerSeries::constant(c(5.0), 8);
        assert_eq!(lambda_alpha_functional(&w, 0.5, &spec()).unwrap(), 0.0);

        // W = z^k: k^alpha
        let w = PowerSeries::monomial(c(1.0), 4, 8);
        let v = lambda_alpha_functional(&w, 0.5, &spec()).unwrap();
        assert!((v - 2.0).abs() < 1e-9);

        // scale invariance: W = 2 z^k gives the same value
        let w = PowerSeries::monomial(c(2.0), 4, 8);
        let v = lambda_alpha_functional(&w, 0.5, &spec()).unwrap();
        assert!((v - 2.0).abs() < 1e-9);

        assert!(lambda_alpha_functional(&w, 1.0, &spec()).is_err());
    }

    #[test]
    fn scale_invariance() {
        let base = vec![c(1.0), c(-0.5), c(2.0)];
        let w1 = AnalyticFn::Poly(base.clone());
        let w2 = AnalyticFn::Poly(base.iter().map(|v| v * Complex64::new(-3.0, 4.0)).collect());
        let f1 = compute_functionals(&w1, &unit(), &spec(), Some(0.5)).unwrap();
        let f2 = compute_functionals(&w2, &unit(), &spec(), Some(0.5)).unwrap();
        assert!((f1.lambda_sq - f2.lambda_sq).abs() < 1e-9 * f1.lambda_sq.max(1.0));
        assert!((f1.mu - f2.mu).abs() < 1e-9 * f1.mu);
        assert!((f1.kappa - f2.kappa).abs() < 1e-9 * f1.kappa.max(1.0));
        let (a1, a2) = (f1.lambda_alpha_sq.unwrap(), f2.lambda_alpha_sq.unwrap());
        assert!((a1 - a2).abs() < 1e-9 * a1.max(1.0));
    }

    #[test]
    fn mu_at_least_one() {
        for coeffs in [vec![c(1.0), c(0.3)], vec![c(2.0), c(0.0), c(1.0)], vec![c(5.0)]] {
            let w = AnalyticFn::Poly(coeffs);
            assert!(mu_functional(&w, &unit(), &spec()).unwrap() >= 1.0 - 1e-12);
        }
    }

    #[test]
    fn lambda_alpha_tends_to_lambda_at_alpha_one() {
        // polynomial W: sum k^alpha |c_k|^2 -> sum k |c_k|^2 = ||W'||^2_{L2}
        let coeffs = vec![c(2.0), c(1.0), c(-0.5), c(0.25)];
        let w = AnalyticFn::Poly(coeffs.clone());
        let lambda_sq = lambda_functional(&w, &unit(), &spec()).unwrap();
        let series = PowerSeries::from_coeffs(coeffs);
        let near_one = lambda_alpha_functional(&series, 1.0 - 1e-9, &spec()).unwrap();
        assert!((near_one - lambda_sq).abs() < 1e-6 * lambda_sq.max(1.0));
    }
}
