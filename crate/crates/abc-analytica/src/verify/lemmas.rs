//! The analytic lemmas behind the bounds: the Carleson norm identity for
//! inner multipliers, the Vinogradov--Shirokov boundary inequality, and
//! the D_alpha comparability of coefficient sums with weighted area
//! integrals.

use num_complex::Complex64;
use serde::Serialize;

use crate::blaschke::{d_alpha_norm_sq, BlaschkeProduct};
use crate::error::{Error, Result};
use crate::func::AnalyticFn;
use crate::numeric::quadrature::QuadratureSpec;
use crate::numeric::{area_integral_disk, area_integral_real, boundary_mean, PowerSeries};

#[derive(Debug, Clone, Serialize)]
pub struct CarlesonReport {
    /// ||f theta||^2_D
    pub lhs: f64,
    /// ||f||^2_D + (1/2pi) boundary integral of |f|^2 |theta'|
    pub rhs: f64,
    pub f_dirichlet: f64,
    pub boundary_term: f64,
    pub difference: f64,
}

/// Carleson's formula for a finite Blaschke multiplier:
/// ||f theta||^2_D = ||f||^2_D + (1/2pi) * int |f|^2 |theta'| ds.
/// Both sides go through independent quadrature routes; a mismatch beyond
/// ten times the quadrature tolerance scale is an error.
pub fn verify_carleson_formula(
    f: &AnalyticFn,
    theta: &BlaschkeProduct,
    spec: &QuadratureSpec,
) -> Result<CarlesonReport> {
    let domain = *theta.domain();
    let df = f.derivative();
    let lhs = area_integral_disk(
        |z| {
            let (t, dt) = theta.eval_with_derivative(z);
            df.eval(z) * t + f.eval(z) * dt
        },
        &domain,
        0.0,
        spec,
    )?;
    let f_dirichlet = area_integral_disk(|z| df.eval(z), &domain, 0.0, spec)?;
    let boundary_term = boundary_mean(
        |zeta| f.eval(zeta).norm_sqr() * theta.boundary_derivative_modulus(zeta),
        &domain,
        spec,
    )?;
    let rhs = f_dirichlet + boundary_term;
    let difference = lhs - rhs;
    if difference.abs() > 10.0 * spec.tol * (1.0 + rhs.abs()) {
        return Err(Error::QuadratureInconsistency { a: lhs, b: rhs });
    }
    Ok(CarlesonReport {
        lhs,
        rhs,
        f_dirichlet,
        boundary_term,
        difference,
    })
}

#[derive(Debug, Clone, Serialize)]
pub struct VsReport {
    /// ||(f theta)'||_{L1(boundary)}
    pub lhs: f64,
    /// (1/2pi) * int |f| |theta'| ds
    pub rhs: f64,
    /// lhs - rhs, nonnegative up to quadrature noise
    pub slack: f64,
}

/// The boundary derivative inequality
/// ||(f theta)'||_{L1} >= (1/2pi) * int |f| |theta'| ds
/// for bounded f and a finite Blaschke theta.
pub fn verify_vs_inequality(
    f: &AnalyticFn,
    theta: &BlaschkeProduct,
    spec: &QuadratureSpec,
) -> Result<VsReport> {
    let domain = *theta.domain();
    let df = f.derivative();
    let lhs = boundary_mean(
        |zeta| {
            let (t, dt) = theta.eval_with_derivative(zeta);
            (df.eval(zeta) * t + f.eval(zeta) * dt).norm()
        },
        &domain,
        spec,
    )?;
    let rhs = boundary_mean(
        |zeta| f.eval(zeta).norm() * theta.boundary_derivative_modulus(zeta),
        &domain,
        spec,
    )?;
    let slack = lhs - rhs;
    if slack < -10.0 * spec.tol * (1.0 + rhs.abs()) {
        return Err(Error::UnexpectedFailure(format!(
            "boundary derivative inequality violated: lhs {lhs}, rhs {rhs}"
        )));
    }
    Ok(VsReport { lhs, rhs, slack })
}

/// R_alpha(f, theta) = ||f theta||^2_{D_alpha} - ||f||^2_{D_alpha},
/// from truncated coefficient sums. Nonnegative for inner theta (division
/// by inner factors only shrinks the norm).
pub fn r_alpha(f: &PowerSeries, theta_series: &PowerSeries, alpha: f64) -> Result<f64> {
    let product = f.mul(theta_series);
    Ok(d_alpha_norm_sq(&product, alpha)? - d_alpha_norm_sq(&f.resized(product.truncation_order()), alpha)?)
}

#[derive(Debug, Clone, Serialize)]
pub struct ComparabilityReport {
    pub alpha: f64,
    pub truncation_order: usize,
    /// sum_k k^alpha |theta(k)|^2
    pub coeff_norm_sq: f64,
    /// (1/pi) * int (1 - |theta|^2) / (1 - |z|^2)^{1+alpha} dA
    pub area_form: f64,
    /// coeff_norm_sq / area_form; bracketed by constants depending only
    /// on alpha
    pub ratio: f64,
    /// min of R_alpha(f, theta) over the built-in sample functions
    pub min_r_alpha_sample: f64,
}

/// Empirical cap for the comparability ratio bracket. The true constants
/// are nonconstructive; observed ratios on the test families stay well
/// inside this bracket for alpha in (0, 1).
pub const COMPARABILITY_CAP: f64 = 100.0;

/// Compare the coefficient-sum D_alpha norm of theta with the weighted
/// area integral it is equivalent to, and spot-check the monotonicity
/// R_alpha(f, theta) >= 0 on a small family of sample polynomials.
pub fn verify_dalpha_comparability(
    theta: &BlaschkeProduct,
    alpha: f64,
    spec: &QuadratureSpec,
) -> Result<ComparabilityReport> {
    if !(alpha > 0.0 && alpha < 1.0) {
        return Err(Error::AlphaOutOfRange(alpha));
    }
    if !theta.domain().is_unit_disk() {
        return Err(Error::InvalidParameter(
            "the comparability check is stated on the unit disk".into(),
        ));
    }
    let rho = theta.zero_radius();
    let order = if rho > 0.0 {
        ((1e-12f64.ln() / (2.0 * rho.ln())).ceil() as usize).clamp(256, 1 << 17)
    } else {
        256
    };
    let taylor = theta.taylor(order);
    let coeff_norm_sq = d_alpha_norm_sq(&taylor.series, alpha)?;

    let area_form = area_integral_real(
        |z| theta.one_minus_sq_ratio(z) * (1.0 + z.norm()).powf(-alpha),
        theta.domain(),
        -alpha,
        spec,
    )?;
    if !area_form.is_finite() || area_form <= 0.0 {
        return Err(Error::NonFinite("comparability area integral".into()));
    }
    let ratio = coeff_norm_sq / area_form;

    let samples = [
        PowerSeries::from_coeffs(vec![Complex64::new(1.0, 0.0)]),
        PowerSeries::from_coeffs(vec![Complex64::new(2.0, 0.0), Complex64::new(1.0, 0.0)]),
        PowerSeries::from_coeffs(vec![
            Complex64::new(-1.0 / 3.0, 0.0),
            Complex64::new(0.5, -0.25),
            Complex64::new(1.0, 0.5),
        ]),
    ];
    let mut min_r = f64::INFINITY;
    for f in &samples {
        let f = f.resized(order);
        min_r = min_r.min(r_alpha(&f, &taylor.series, alpha)?);
    }

    Ok(ComparabilityReport {
        alpha,
        truncation_order: order,
        coeff_norm_sq,
        area_form,
        ratio,
        min_r_alpha_sample: min_r,
    })
}
