//! The two built-in equality systems: a constant-Wronskian family on any
//! disk containing the origin, and the monomial-tail variant on the unit
//! disk whose Wronskian is a constant times z^(m-n). Both attain equality
//! in the Dirichlet and Hardy bounds.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;

use crate::domain::{Containment, Domain};
use crate::error::{Error, Result};
use crate::exact::{GaussianRational, Polynomial};
use crate::numeric::quadrature::QuadratureSpec;
use crate::verify::system::{build_system, AnalyticSystem, SystemFunction};
use crate::verify::theorems::{verify_theorem1, verify_theorem2, Status, VerificationReport};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExampleId {
    One,
    Two,
}

#[derive(Debug, Clone, serde::Serialize)]
pub struct ExamplePair {
    pub theorem1: VerificationReport,
    pub theorem2: VerificationReport,
}

fn eps_exact(eps: f64) -> Result<GaussianRational> {
    GaussianRational::from_f64_exact(eps)
        .ok_or_else(|| Error::InvalidParameter(format!("epsilon {eps} is not finite")))
}

fn factorial(k: usize) -> BigRational {
    let mut acc = BigInt::one();
    for j in 2..=k {
        acc *= BigInt::from(j);
    }
    BigRational::from_integer(acc)
}

/// eps * z^k / k! as an exact polynomial.
fn scaled_monomial(eps: &GaussianRational, k: usize) -> Polynomial {
    let coeff = GaussianRational::new(
        &eps.re / &factorial(k),
        &eps.im / &factorial(k),
    );
    Polynomial::monomial(coeff, k)
}

/// f_0 = 1, f_j = eps z^j / j! for j = 1..n on a disk containing 0.
/// The sum is zero-free there as long as 0 < eps < e^(-diameter), which is
/// exactly the admissible range.
pub fn example1_system(n: usize, eps: f64, domain: Domain, spec: &QuadratureSpec) -> Result<AnalyticSystem> {
    if n < 1 {
        return Err(Error::InvalidParameter("example 1 needs n >= 1".into()));
    }
    if domain.contains(num_complex::Complex64::ZERO) != Containment::Inside {
        return Err(Error::InvalidParameter(
            "example 1 needs the origin strictly inside the domain".into(),
        ));
    }
    let bound = (-domain.diameter()).exp();
    if !(eps > 0.0 && eps < bound) {
        return Err(Error::InvalidParameter(format!(
            "epsilon must satisfy 0 < epsilon < e^(-diameter) = {bound:.6}; got {eps}"
        )));
    }
    let eps = eps_exact(eps)?;
    let mut fs = vec![SystemFunction::Exact(Polynomial::one())];
    for j in 1..=n {
        fs.push(SystemFunction::Exact(scaled_monomial(&eps, j)));
    }
    build_system(&fs, domain, spec)
}

/// f_0 = 1, f_j = eps z^j / j! for j = 1..n-1, and f_n = eps z^m / m! with
/// m > n, on the unit disk. Needs 0 < eps < 1/e.
pub fn example2_system(n: usize, m: usize, eps: f64, spec: &QuadratureSpec) -> Result<AnalyticSystem> {
    if n < 1 {
        return Err(Error::InvalidParameter("example 2 needs n >= 1".into()));
    }
    if m <= n {
        return Err(Error::InvalidParameter(format!(
            "example 2 needs m > n; got m = {m}, n = {n}"
        )));
    }
    if !(eps > 0.0 && eps < 1.0 / std::f64::consts::E) {
        return Err(Error::InvalidParameter(format!(
            "epsilon must satisfy 0 < epsilon < 1/e; got {eps}"
        )));
    }
    let eps = eps_exact(eps)?;
    let mut fs = vec![SystemFunction::Exact(Polynomial::one())];
    for j in 1..n {
        fs.push(SystemFunction::Exact(scaled_monomial(&eps, j)));
    }
    fs.push(SystemFunction::Exact(scaled_monomial(&eps, m)));
    build_system(&fs, Domain::unit_disk(), spec)
}

/// Build the requested example system and run both inequality checks.
/// Equality is the proved outcome for these systems; anything else is an
/// internal error.
pub fn run_example(
    which: ExampleId,
    n: usize,
    m: Option<usize>,
    eps: f64,
    domain: Domain,
    spec: &QuadratureSpec,
) -> Result<ExamplePair> {
    let sys = match which {
        ExampleId::One => example1_system(n, eps, domain, spec)?,
        ExampleId::Two => {
            let m = m.ok_or_else(|| {
                Error::InvalidParameter("example 2 needs the monomial degree m".into())
            })?;
            example2_system(n, m, eps, spec)?
        }
    };
    let theorem1 = verify_theorem1(&sys, spec)?;
    let theorem2 = verify_theorem2(&sys, spec)?;
    for r in [&theorem1, &theorem2] {
        if r.status != Status::Equality {
            return Err(Error::EqualityNotAttained {
                slack: r.slack,
                tol: r.equality_tol,
            });
        }
    }
    Ok(ExamplePair { theorem1, theorem2 })
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_complex::Complex64;

    fn spec() -> QuadratureSpec {
        QuadratureSpec::default()
    }

    #[test]
    fn example1_equality_unit_disk() {
        let pair = run_example(ExampleId::One, 2, None, 0.1, Domain::unit_disk(), &spec()).unwrap();
        assert_eq!(pair.theorem1.status, Status::Equality);
        assert_eq!(pair.theorem1.lhs, 2.0);
        assert_eq!(pair.theorem2.status, Status::Equality);
        let fv = pair.theorem1.functionals.as_ref().unwrap();
        assert!(fv.lambda_sq.abs() < 1e-9);
        assert!((fv.mu - 1.0).abs() < 1e-9);
    }

    #[test]
    fn example1_epsilon_range_enforced() {
        // on the unit disk the bound is e^{-2} ~ 0.1353
        let err = run_example(ExampleId::One, 2, None, 0.5, Domain::unit_disk(), &spec()).unwrap_err();
        assert!(matches!(err, Error::InvalidParameter(_)));
        assert!(err.to_string().contains("epsilon"));
    }

    #[test]
    fn example1_on_shifted_disk() {
        // domain of radius 1/2 about 0.2: diameter 1, eps < e^{-1}
        let d = Domain::new(Complex64::new(0.2, 0.0), 0.5).unwrap();
        let pair = run_example(ExampleId::One, 1, None, 0.2, d, &spec()).unwrap();
        assert_eq!(pair.theorem1.status, Status::Equality);
        assert_eq!(pair.theorem1.lhs, 1.0);
    }

    #[test]
    fn example2_equality() {
        let pair = run_example(
            ExampleId::Two,
            2,
            Some(5),
            0.25,
            Domain::unit_disk(),
            &spec(),
        )
        .unwrap();
        assert_eq!(pair.theorem1.status, Status::Equality);
        assert_eq!(pair.theorem1.lhs, 5.0);
        let fv = pair.theorem1.functionals.as_ref().unwrap();
        assert!((fv.lambda_sq - 3.0).abs() < 1e-6, "lambda^2 {}", fv.lambda_sq);
        assert!((fv.kappa - 3.0).abs() < 1e-6, "kappa {}", fv.kappa);
        assert!((fv.mu - 1.0).abs() < 1e-9);
        assert_eq!(pair.theorem2.status, Status::Equality);
    }

    #[test]
    fn example2_parameter_checks() {
        assert!(example2_system(2, 2, 0.25, &spec()).is_err());
        assert!(example2_system(2, 5, 0.5, &spec()).is_err());
        assert!(example2_system(0, 5, 0.25, &spec()).is_err());
    }
}
