//! Zero counting by the argument principle: the winding number of f along
//! the boundary circle equals the number of enclosed zeros.

use num_complex::Complex64;

use crate::domain::Domain;
use crate::error::{Error, Result};
use crate::numeric::quadrature::QuadratureSpec;

/// Relative floor on |f| along the contour; values below it mean a zero
/// sits too close to the boundary for the count to be trustworthy.
const MODULUS_GUARD: f64 = 1e-8;

const MAX_BISECTION_DEPTH: usize = 48;

/// Winding number of f along the boundary of the domain. Adjacent sample
/// arguments are tracked with adaptive arc bisection until every increment
/// is below pi/2, which pins the continuous branch of the argument.
pub fn winding_count<F: Fn(Complex64) -> Complex64>(
    f: F,
    domain: &Domain,
    spec: &QuadratureSpec,
) -> Result<i64> {
    let tau = 2.0 * std::f64::consts::PI;
    let n = spec.boundary_nodes;
    let samples: Vec<Complex64> = (0..=n)
        .map(|j| f(domain.boundary_point(tau * j as f64 / n as f64)))
        .collect();

    let max_mod = samples.iter().map(|v| v.norm()).fold(0.0, f64::max);
    let min_mod = samples.iter().map(|v| v.norm()).fold(f64::INFINITY, f64::min);
    if !(max_mod.is_finite() && max_mod > 0.0) {
        return Err(Error::NonFinite("winding count samples".into()));
    }
    let floor = MODULUS_GUARD * max_mod;
    if min_mod <= floor {
        return Err(Error::ZeroTooCloseToBoundary { min_modulus: min_mod });
    }

    let eval = |theta: f64| -> Result<Complex64> {
        let v = f(domain.boundary_point(theta));
        if v.norm() <= floor {
            return Err(Error::ZeroTooCloseToBoundary { min_modulus: v.norm() });
        }
        Ok(v)
    };

    let mut increments = Vec::with_capacity(n);
    for j in 0..n {
        let t0 = tau * j as f64 / n as f64;
        let t1 = tau * (j + 1) as f64 / n as f64;
        increments.push(arc_increment(&eval, t0, t1, samples[j], samples[j + 1], 0)?);
    }
    let total: f64 = crate::numeric::quadrature::pairwise_sum(&increments);
    let turns = total / tau;
    let rounded = turns.round();
    if (turns - rounded).abs() > 1e-6 {
        return Err(Error::WindingInconsistent(turns));
    }
    Ok(rounded as i64)
}

fn arc_increment<E: Fn(f64) -> Result<Complex64>>(
    eval: &E,
    t0: f64,
    t1: f64,
    v0: Complex64,
    v1: Complex64,
    depth: usize,
) -> Result<f64> {
    let delta = (v1 / v0).arg();
    if delta.abs() < std::f64::consts::FRAC_PI_2 {
        return Ok(delta);
    }
    if depth >= MAX_BISECTION_DEPTH {
        return Err(Error::WindingInconsistent(delta / (2.0 * std::f64::consts::PI)));
    }
    let tm = 0.5 * (t0 + t1);
    let vm = eval(tm)?;
    Ok(arc_increment(eval, t0, tm, v0, vm, depth + 1)?
        + arc_increment(eval, tm, t1, vm, v1, depth + 1)?)
}
