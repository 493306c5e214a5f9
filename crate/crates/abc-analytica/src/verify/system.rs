//! Building the analytic system and checking the divisibility identity
//! W * calB^n = F * bigB that drives both inequality proofs.

use num_complex::Complex64;

use crate::blaschke::{blaschke_lcm, radical_of_product, BlaschkeProduct};
use crate::domain::{ConformalMap, Containment, Domain};
use crate::error::{Error, Result};
use crate::exact::{squarefree_decomposition, wronskian_poly, Polynomial};
use crate::func::AnalyticFn;
use crate::functionals::{check_boundary_invertibility, BoundaryProfile};
use crate::numeric::quadrature::QuadratureSpec;
use crate::numeric::{cluster, poly_roots, winding_count, PowerSeries, CLUSTER_RADIUS};

/// Sweep budget for the root finder.
pub const ROOT_SWEEPS: usize = 600;

/// One input function: an exact polynomial or a truncated power series
/// about 0 (evaluated as its polynomial truncation).
#[derive(Debug, Clone)]
pub enum SystemFunction {
    Exact(Polynomial),
    Series(PowerSeries),
}

/// The assembled system. `fs` has length n + 2: the inputs f_0..f_n plus
/// the recomputed sum f_{n+1} (the sum is never user-supplied).
#[derive(Debug, Clone)]
pub struct AnalyticSystem {
    pub domain: Domain,
    pub n: usize,
    pub fs: Vec<AnalyticFn>,
    /// Exact copies when every input was exact; enables the exact
    /// Wronskian and divisibility-order paths.
    pub exact_fs: Option<Vec<Polynomial>>,
    /// Blaschke product of each function's zeros in the domain.
    pub blaschke: Vec<BlaschkeProduct>,
    pub w: AnalyticFn,
    pub w_exact: Option<Polynomial>,
    pub big_b: BlaschkeProduct,
    pub cal_b: BlaschkeProduct,
    pub w_boundary: BoundaryProfile,
}

impl AnalyticSystem {
    /// F = W * calB^n / bigB, the analytic cofactor of the divisibility
    /// identity, evaluated pointwise. Meaningful wherever bigB does not
    /// vanish; on the boundary |F| = |W| because both Blaschke factors are
    /// unimodular there.
    pub fn f_quotient(&self, z: Complex64) -> Complex64 {
        let w = self.w.eval(z);
        let cal = self.cal_b.eval_unit(self.domain.map().forward(z));
        let big = self.big_b.eval_unit(self.domain.map().forward(z));
        w * cal.powu(self.n as u32) / big
    }
}

/// Find the zeros of one function inside the domain, with multiplicities.
/// Exact inputs go through the squarefree decomposition (multiplicities
/// are exact; the roots of each squarefree factor are simple and
/// well-conditioned); series inputs are rooted as truncated polynomials
/// and the inside count is validated against the winding number of the
/// evaluator along the boundary.
fn zeros_inside(
    f: &SystemFunction,
    domain: &Domain,
    spec: &QuadratureSpec,
) -> Result<Vec<(Complex64, u32)>> {
    match f {
        SystemFunction::Exact(p) => {
            if p.is_zero() {
                return Err(Error::ZeroPolynomial);
            }
            let mut zeros = Vec::new();
            for (factor, mult) in squarefree_decomposition(p)? {
                for root in poly_roots(&factor.to_complex_coeffs(), ROOT_SWEEPS)? {
                    match domain.contains(root) {
                        Containment::Inside => zeros.push((root, mult as u32)),
                        Containment::BoundaryBand => {
                            return Err(Error::ZeroInGuardBand { z: root })
                        }
                        Containment::Outside => {}
                    }
                }
            }
            Ok(zeros)
        }
        SystemFunction::Series(s) => {
            let mut coeffs = s.coeffs().to_vec();
            while coeffs.last().is_some_and(|c| c.norm() == 0.0) {
                coeffs.pop();
            }
            if coeffs.is_empty() {
                return Err(Error::ZeroPolynomial);
            }
            let mut zeros = Vec::new();
            if coeffs.len() > 1 {
                let roots = poly_roots(&coeffs, ROOT_SWEEPS)?;
                let scale = roots.iter().map(|r| r.norm()).fold(1.0, f64::max);
                for (root, mult) in cluster(&roots, CLUSTER_RADIUS * scale) {
                    match domain.contains(root) {
                        Containment::Inside => zeros.push((root, mult as u32)),
                        Containment::BoundaryBand => {
                            return Err(Error::ZeroInGuardBand { z: root })
                        }
                        Containment::Outside => {}
                    }
                }
            }
            // the count, not the locations, is authoritative
            let f_eval = AnalyticFn::Series(s.clone());
            let winding = winding_count(|z| f_eval.eval(z), domain, spec)?;
            let counted: i64 = zeros.iter().map(|&(_, m)| m as i64).sum();
            if winding != counted {
                return Err(Error::ZeroCountMismatch {
                    winding,
                    clustered: counted,
                });
            }
            Ok(zeros)
        }
    }
}

/// Assemble the full system from f_0..f_n. The sum f_{n+1} is recomputed
/// here; zeros are located, per-function Blaschke products built, the
/// Wronskian formed (exactly when all inputs are exact), and the boundary
/// invertibility hypothesis for W checked.
pub fn build_system(
    fs: &[SystemFunction],
    domain: Domain,
    spec: &QuadratureSpec,
) -> Result<AnalyticSystem> {
    if fs.len() < 2 {
        return Err(Error::InvalidParameter(
            "a system needs f_0..f_n with n >= 1".into(),
        ));
    }
    let n = fs.len() - 1;

    let all_exact = fs.iter().all(|f| matches!(f, SystemFunction::Exact(_)));
    let (full, exact_fs, w, w_exact) = if all_exact {
        let inputs: Vec<Polynomial> = fs
            .iter()
            .map(|f| match f {
                SystemFunction::Exact(p) => p.clone(),
                SystemFunction::Series(_) => unreachable!(),
            })
            .collect();
        let sum = inputs.iter().fold(Polynomial::zero(), |acc, p| acc.add(p));
        let w_poly = wronskian_poly(&inputs);
        if w_poly.is_zero() {
            return Err(Error::LinearlyDependent);
        }
        let mut full: Vec<SystemFunction> = inputs.iter().cloned().map(SystemFunction::Exact).collect();
        full.push(SystemFunction::Exact(sum.clone()));
        let mut exact_all = inputs;
        exact_all.push(sum);
        let w_fn = AnalyticFn::from_exact(&w_poly);
        (full, Some(exact_all), w_fn, Some(w_poly))
    } else {
        let order = fs
            .iter()
            .map(|f| match f {
                SystemFunction::Exact(p) => p.coeffs().len().max(1) - 1,
                SystemFunction::Series(s) => s.truncation_order(),
            })
            .max()
            .unwrap();
        let to_series = |f: &SystemFunction| -> PowerSeries {
            match f {
                SystemFunction::Exact(p) => {
                    AnalyticFn::from_exact(p).to_series(order)
                }
                SystemFunction::Series(s) => s.resized(order),
            }
        };
        let inputs: Vec<PowerSeries> = fs.iter().map(to_series).collect();
        let sum = inputs
            .iter()
            .skip(1)
            .fold(inputs[0].clone(), |acc, s| acc.add(s));
        let w_series = series_wronskian(&inputs);
        let w_scale: f64 = inputs.iter().map(|s| s.max_coeff_norm().max(1e-300)).product();
        if w_series.max_coeff_norm() <= 1e-10 * w_scale {
            return Err(Error::LinearlyDependent);
        }
        let mut full: Vec<SystemFunction> =
            inputs.iter().cloned().map(SystemFunction::Series).collect();
        full.push(SystemFunction::Series(sum));
        (full, None, AnalyticFn::Series(w_series), None)
    };

    let mut blaschke = Vec::with_capacity(n + 2);
    for f in &full {
        let zeros = zeros_inside(f, &domain, spec)?;
        blaschke.push(BlaschkeProduct::from_zeros(domain, &zeros)?);
    }

    let big_b = blaschke_lcm(&blaschke)?;
    let cal_b = radical_of_product(&blaschke)?;
    let w_boundary = check_boundary_invertibility(&w, &domain, spec)?;

    let fs_analytic: Vec<AnalyticFn> = full
        .iter()
        .map(|f| match f {
            SystemFunction::Exact(p) => AnalyticFn::from_exact(p),
            SystemFunction::Series(s) => AnalyticFn::Series(s.clone()),
        })
        .collect();

    Ok(AnalyticSystem {
        domain,
        n,
        fs: fs_analytic,
        exact_fs,
        blaschke,
        w,
        w_exact,
        big_b,
        cal_b,
        w_boundary,
    })
}

/// Wronskian determinant over truncated series, by cofactor expansion
/// (systems are small: n <= 6).
fn series_wronskian(fs: &[PowerSeries]) -> PowerSeries {
    let k = fs.len();
    let mut matrix: Vec<Vec<PowerSeries>> = Vec::with_capacity(k);
    let mut row: Vec<PowerSeries> = fs.to_vec();
    matrix.push(row.clone());
    for _ in 1..k {
        row = row.iter().map(PowerSeries::derivative).collect();
        matrix.push(row.clone());
    }
    series_det(&matrix)
}

fn series_det(m: &[Vec<PowerSeries>]) -> PowerSeries {
    let k = m.len();
    if k == 1 {
        return m[0][0].clone();
    }
    let mut acc: Option<PowerSeries> = None;
    for j in 0..k {
        let minor: Vec<Vec<PowerSeries>> = m[1..]
            .iter()
            .map(|row| {
                row.iter()
                    .enumerate()
                    .filter(|(c, _)| *c != j)
                    .map(|(_, v)| v.clone())
                    .collect()
            })
            .collect();
        let term = m[0][j].mul(&series_det(&minor));
        acc = Some(match acc {
            None => term,
            Some(a) => {
                if j % 2 == 0 {
                    a.add(&term)
                } else {
                    a.sub(&term)
                }
            }
        });
    }
    acc.unwrap()
}

/// One vanishing-order comparison at a zero of bigB (exact path).
#[derive(Debug, Clone, serde::Serialize)]
pub struct OrderCheck {
    pub location: [f64; 2],
    pub big_b_mult: u32,
    pub w_order: usize,
    pub satisfied: bool,
}

#[derive(Debug, Clone, serde::Serialize)]
pub struct DivisibilityReport {
    pub ok: bool,
    /// exact path: per-zero order comparisons
    pub order_checks: Vec<OrderCheck>,
    /// series path: coefficient-norm of W * calB^n - Q * bigB
    #[serde(skip_serializing_if = "Option::is_none")]
    pub series_residual: Option<f64>,
    /// max of ||F| - |W|| over boundary samples, relative to max |W|
    pub boundary_f_deviation: f64,
}

/// Verify that bigB divides W * calB^n. On the exact path this compares
/// vanishing orders at every zero of bigB (the multiplicities are exact
/// integers from the squarefree structure); on the series path it divides
/// truncated expansions and bounds the remainder. Failure signals a bug:
/// the identity is proved under the system hypotheses.
pub fn check_divisibility(sys: &AnalyticSystem, spec: &QuadratureSpec) -> Result<DivisibilityReport> {
    let mut order_checks = Vec::new();
    let mut series_residual = None;

    if let Some(w_exact) = &sys.w_exact {
        let factors = squarefree_decomposition(w_exact)?;
        let map = sys.domain.map();
        for &(w_loc, mult) in sys.big_b.zeros_unit() {
            let z0 = map.inverse(w_loc);
            let w_order = exact_order_at(&factors, z0);
            let needed = mult as i64 - sys.n as i64;
            let satisfied = (w_order as i64) >= needed;
            order_checks.push(OrderCheck {
                location: [z0.re, z0.im],
                big_b_mult: mult,
                w_order,
                satisfied,
            });
            if !satisfied {
                return Err(Error::DivisibilityFailure(format!(
                    "at {z0}: bigB multiplicity {mult}, W order {w_order}, n = {}",
                    sys.n
                )));
            }
        }
    } else {
        // series route: divide truncated expansions with valuation shift
        let order = 256usize;
        let w_series = sys.w.to_series(order);
        let cal_t = sys.cal_b.taylor(order).series;
        let big_t = sys.big_b.taylor(order).series;
        let mut lhs = w_series;
        for _ in 0..sys.n {
            lhs = lhs.mul(&cal_t);
        }
        let scale = lhs.max_coeff_norm().max(1.0);
        let vtol = 1e-12 * big_t.max_coeff_norm().max(1e-300);
        let v = big_t.valuation(vtol).unwrap_or(0);
        let shift = |s: &PowerSeries, v: usize| -> Result<PowerSeries> {
            let coeffs = s.coeffs();
            for c in &coeffs[..v.min(coeffs.len())] {
                if c.norm() > 1e-8 * scale {
                    return Err(Error::DivisibilityFailure(format!(
                        "valuation mismatch: lhs has mass {} below the bigB valuation {v}",
                        c.norm()
                    )));
                }
            }
            Ok(PowerSeries::from_coeffs(coeffs[v.min(coeffs.len() - 1)..].to_vec()))
        };
        let lhs_s = shift(&lhs, v)?;
        let big_s = PowerSeries::from_coeffs(big_t.coeffs()[v..].to_vec());
        let q = lhs_s.div(&big_s)?;
        let recomposed = q.mul(&big_s);
        let residual = lhs_s
            .sub(&recomposed)
            .coeffs()
            .iter()
            .map(|c| c.norm())
            .fold(0.0, f64::max)
            / scale;
        if residual > 1e-8 {
            return Err(Error::DivisibilityFailure(format!(
                "series remainder norm {residual:.3e} exceeds 1e-8"
            )));
        }
        series_residual = Some(residual);
    }

    // |F| = |W| on the boundary, sampled
    let samples = 1024usize;
    let mut dev: f64 = 0.0;
    let mut w_max: f64 = 0.0;
    for j in 0..samples {
        let theta = 2.0 * std::f64::consts::PI * j as f64 / samples as f64;
        let zeta = sys.domain.boundary_point(theta);
        let f_mod = sys.f_quotient(zeta).norm();
        let w_mod = sys.w.eval(zeta).norm();
        dev = dev.max((f_mod - w_mod).abs());
        w_max = w_max.max(w_mod);
    }
    let boundary_f_deviation = dev / w_max.max(f64::MIN_POSITIVE);
    let _ = spec;

    Ok(DivisibilityReport {
        ok: true,
        order_checks,
        series_residual,
        boundary_f_deviation,
    })
}

/// Vanishing order of the polynomial with the given squarefree structure
/// at a numerically known point: the multiplicity of the unique factor
/// with a (relative) residual below the match threshold, or 0.
fn exact_order_at(factors: &[(Polynomial, usize)], z0: Complex64) -> usize {
    for (factor, mult) in factors {
        let coeffs = factor.to_complex_coeffs();
        let mut value = Complex64::ZERO;
        let mut majorant = 0.0f64;
        for c in coeffs.iter().rev() {
            value = value * z0 + c;
            majorant = majorant * z0.norm() + c.norm();
        }
        if value.norm() <= 1e-6 * majorant.max(f64::MIN_POSITIVE) {
            return *mult;
        }
    }
    0
}
