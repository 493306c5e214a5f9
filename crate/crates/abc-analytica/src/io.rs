//! Problem-file schema, polynomial serialization, and the command API
//! shared by the CLI and the C bindings.
//!
//! Problem files are JSON with a version tag; unknown fields are rejected
//! before any computation. Polynomials appear either as a list of
//! coefficient strings `re_num/re_den+im_num/im_den·i` (index = power) or,
//! for demos, as a small `z^k` expression sugar.

use num_complex::Complex64;
use serde::Deserialize;
use serde_json::json;

use crate::domain::Domain;
use crate::error::{Error, Result};
use crate::exact::{mason_check, n_theorem_check, parse_gaussian, GaussianRational, Polynomial};
use crate::numeric::quadrature::QuadratureSpec;
use crate::numeric::PowerSeries;
use crate::verify::{
    build_system, limit_demo, run_example, verify_carleson_formula, verify_dalpha_comparability,
    verify_prop3, verify_theorem1, verify_theorem2, verify_theorem4, verify_vs_inequality,
    ExampleId, Prop3Variant, Status, SystemFunction, VerificationReport,
};
use crate::{corpus, func::AnalyticFn};

pub const SCHEMA_VERSION: &str = "1";

/// One input polynomial: either the expression sugar or a coefficient
/// string list.
#[derive(Debug, Clone, Deserialize)]
#[serde(untagged)]
pub enum PolyInput {
    Expr(String),
    Coeffs(Vec<String>),
}

impl PolyInput {
    pub fn to_polynomial(&self) -> Result<Polynomial> {
        match self {
            PolyInput::Expr(s) => parse_poly_expr(s),
            PolyInput::Coeffs(list) => {
                let coeffs: Result<Vec<GaussianRational>> = list
                    .iter()
                    .map(|s| parse_gaussian(s).ok_or_else(|| Error::BadCoefficient(s.clone())))
                    .collect();
                Ok(Polynomial::from_coeffs(coeffs?))
            }
        }
    }
}

#[derive(Debug, Clone, Deserialize)]
#[serde(tag = "type", rename_all = "lowercase", deny_unknown_fields)]
pub enum FunctionInput {
    Polynomial {
        #[serde(default)]
        coeffs: Option<Vec<String>>,
        #[serde(default)]
        expr: Option<String>,
    },
    Series {
        coeffs: Vec<[f64; 2]>,
    },
}

impl FunctionInput {
    pub fn to_system_function(&self) -> Result<SystemFunction> {
        match self {
            FunctionInput::Polynomial { coeffs, expr } => {
                let poly = match (coeffs, expr) {
                    (Some(list), None) => PolyInput::Coeffs(list.clone()).to_polynomial()?,
                    (None, Some(e)) => parse_poly_expr(e)?,
                    _ => {
                        return Err(Error::Schema(
                            "polynomial function needs exactly one of `coeffs` or `expr`".into(),
                        ))
                    }
                };
                Ok(SystemFunction::Exact(poly))
            }
            FunctionInput::Series { coeffs } => {
                if coeffs.is_empty() {
                    return Err(Error::Schema("series needs at least one coefficient".into()));
                }
                Ok(SystemFunction::Series(PowerSeries::from_coeffs(
                    coeffs.iter().map(|&[re, im]| Complex64::new(re, im)).collect(),
                )))
            }
        }
    }
}

#[derive(Debug, Clone, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct QuadratureOverrides {
    pub boundary_nodes: Option<usize>,
    pub radial_nodes: Option<usize>,
    pub refine_limit: Option<usize>,
    pub tol: Option<f64>,
}

/// The validated problem file.
#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ProblemFile {
    pub version: String,
    #[serde(default)]
    pub domain: Option<Domain>,
    /// two-term check payload
    #[serde(default)]
    pub a: Option<PolyInput>,
    #[serde(default)]
    pub b: Option<PolyInput>,
    /// n-term check payload
    #[serde(default)]
    pub ps: Option<Vec<PolyInput>>,
    /// verify payload
    #[serde(default)]
    pub functions: Option<Vec<FunctionInput>>,
    #[serde(default)]
    pub alpha: Option<f64>,
    #[serde(default)]
    pub quadrature: Option<QuadratureOverrides>,
}

pub fn load_problem(text: &str) -> Result<ProblemFile> {
    let problem: ProblemFile = serde_json::from_str(text)?;
    if problem.version != SCHEMA_VERSION {
        return Err(Error::Schema(format!(
            "unsupported schema version `{}` (expected `{SCHEMA_VERSION}`)",
            problem.version
        )));
    }
    Ok(problem)
}

/// Merge spec defaults with problem-file overrides and CLI flags
/// (flags win).
pub fn resolve_spec(
    file: Option<&QuadratureOverrides>,
    boundary_nodes_flag: Option<usize>,
    tol_flag: Option<f64>,
) -> Result<QuadratureSpec> {
    let d = QuadratureSpec::default();
    let file = file.cloned().unwrap_or_default();
    QuadratureSpec::new(
        boundary_nodes_flag
            .or(file.boundary_nodes)
            .unwrap_or(d.boundary_nodes),
        file.radial_nodes.unwrap_or(d.radial_nodes),
        file.refine_limit.unwrap_or(d.refine_limit),
        tol_flag.or(file.tol).unwrap_or(d.tol),
    )
}

/// Tiny `z^k` sugar for demo inputs: signed terms of the form
/// `[coeff][*][z[^k]]`, with rational or Gaussian-rational coefficients
/// (`2z^3`, `-z`, `1/2`, `3i*z^2`).
pub fn parse_poly_expr(s: &str) -> Result<Polynomial> {
    let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    if compact.is_empty() {
        return Err(Error::BadExpression(s.to_string()));
    }
    // split into signed terms at top level
    let mut terms: Vec<String> = Vec::new();
    let mut cur = String::new();
    for (idx, ch) in compact.char_indices() {
        if (ch == '+' || ch == '-') && idx > 0 {
            let prev = compact[..idx].chars().last().unwrap();
            if prev != '+' && prev != '-' && prev != '/' && prev != '^' {
                terms.push(std::mem::take(&mut cur));
            }
        }
        cur.push(ch);
    }
    terms.push(cur);

    let mut acc = Polynomial::zero();
    for term in &terms {
        let (coeff_str, power) = match term.find('z') {
            None => (term.as_str(), 0usize),
            Some(pos) => {
                let coeff = term[..pos].trim_end_matches('*');
                let rest = &term[pos + 1..];
                let power = if rest.is_empty() {
                    1
                } else if let Some(exp) = rest.strip_prefix('^') {
                    exp.parse::<usize>()
                        .map_err(|_| Error::BadExpression(s.to_string()))?
                } else {
                    return Err(Error::BadExpression(s.to_string()));
                };
                (coeff, power)
            }
        };
        let coeff = match coeff_str {
            "" | "+" => GaussianRational::one(),
            "-" => -GaussianRational::one(),
            other => parse_gaussian(other).ok_or_else(|| Error::BadExpression(s.to_string()))?,
        };
        acc = acc.add(&Polynomial::monomial(coeff, power));
    }
    Ok(acc)
}

/// Coefficient-string serialization of an exact polynomial.
pub fn poly_to_strings(p: &Polynomial) -> Vec<String> {
    p.coeffs().iter().map(|c| c.to_string()).collect()
}

#[derive(Debug)]
pub struct MasonOutcome {
    pub holds: bool,
    pub report: serde_json::Value,
}

/// Run the two-term or n-term exact check, depending on the payload.
pub fn run_mason_problem(problem: &ProblemFile) -> Result<MasonOutcome> {
    match (&problem.a, &problem.b, &problem.ps) {
        (Some(a), Some(b), None) => {
            let a = a.to_polynomial()?;
            let b = b.to_polynomial()?;
            let r = mason_check(&a, &b)?;
            Ok(MasonOutcome {
                holds: r.holds,
                report: json!({
                    "kind": "mason",
                    "holds": r.holds,
                    "lhs": r.lhs,
                    "rhs": r.rhs,
                    "a": poly_to_strings(&a),
                    "b": poly_to_strings(&b),
                }),
            })
        }
        (None, None, Some(ps)) => {
            let ps: Result<Vec<Polynomial>> = ps.iter().map(PolyInput::to_polynomial).collect();
            let ps = ps?;
            let r = n_theorem_check(&ps)?;
            Ok(MasonOutcome {
                holds: r.holds,
                report: json!({
                    "kind": "n_theorem",
                    "holds": r.holds,
                    "lhs": r.lhs,
                    "rhs": r.rhs,
                    "n": r.n,
                }),
            })
        }
        _ => Err(Error::Schema(
            "mason problems need either `a` and `b`, or `ps`".into(),
        )),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TheoremId {
    T1,
    T2,
    Prop3A,
    Prop3B,
    T4,
}

impl std::str::FromStr for TheoremId {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "1" | "theorem1" => Ok(TheoremId::T1),
            "2" | "theorem2" => Ok(TheoremId::T2),
            "prop3a" => Ok(TheoremId::Prop3A),
            "prop3b" => Ok(TheoremId::Prop3B),
            "4" | "theorem4" => Ok(TheoremId::T4),
            other => Err(Error::InvalidParameter(format!(
                "unknown theorem `{other}` (expected 1, 2, prop3a, prop3b, or 4)"
            ))),
        }
    }
}

#[derive(Debug)]
pub struct VerifyOutcome {
    pub status: Status,
    pub report: serde_json::Value,
}

/// Build the system from the problem file and run the named verifier.
pub fn run_verify_problem(
    problem: &ProblemFile,
    theorem: TheoremId,
    alpha_flag: Option<f64>,
    spec: &QuadratureSpec,
) -> Result<VerifyOutcome> {
    let functions = problem
        .functions
        .as_ref()
        .ok_or_else(|| Error::Schema("verify problems need `functions`".into()))?;
    if functions.len() < 2 {
        return Err(Error::Schema("verify problems need at least two functions".into()));
    }
    let fs: Result<Vec<SystemFunction>> = functions
        .iter()
        .map(FunctionInput::to_system_function)
        .collect();
    let domain = problem.domain.unwrap_or_else(Domain::unit_disk);
    let sys = build_system(&fs?, domain, spec)?;

    let to_outcome = |r: VerificationReport| -> Result<VerifyOutcome> {
        let status = r.status;
        let report = serde_json::to_value(&r)?;
        Ok(VerifyOutcome { status, report })
    };
    match theorem {
        TheoremId::T1 => to_outcome(verify_theorem1(&sys, spec)?),
        TheoremId::T2 => to_outcome(verify_theorem2(&sys, spec)?),
        TheoremId::Prop3A => to_outcome(verify_prop3(&sys, spec, Prop3Variant::A)?),
        TheoremId::Prop3B => to_outcome(verify_prop3(&sys, spec, Prop3Variant::B)?),
        TheoremId::T4 => {
            let alpha = alpha_flag.or(problem.alpha).ok_or_else(|| {
                Error::Schema("theorem 4 needs `alpha` (file field or --alpha flag)".into())
            })?;
            let r = verify_theorem4(&sys, alpha, spec)?;
            Ok(VerifyOutcome {
                status: Status::Holds,
                report: serde_json::to_value(&r)?,
            })
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DemoId {
    Example1,
    Example2,
    Limit,
    Lemmas,
}

impl std::str::FromStr for DemoId {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "example1" => Ok(DemoId::Example1),
            "example2" => Ok(DemoId::Example2),
            "limit" => Ok(DemoId::Limit),
            "lemmas" => Ok(DemoId::Lemmas),
            other => Err(Error::InvalidParameter(format!(
                "unknown demo `{other}` (expected example1, example2, limit, or lemmas)"
            ))),
        }
    }
}

pub enum DemoOutput {
    Reports(serde_json::Value),
    Table(crate::verify::LimitTable),
}

/// The built-in demonstrations. Defaults: example 1 with n = 2 and
/// eps = 0.1; example 2 with n = 2, m = 5, eps = 0.25; the limit table for
/// W = z^3 + 1 over R in {2, 5, 10, 50, 100}; and a seeded corpus run over
/// the lemma verifiers.
pub fn run_demo(which: DemoId, alpha: Option<f64>, spec: &QuadratureSpec) -> Result<DemoOutput> {
    match which {
        DemoId::Example1 | DemoId::Example2 => {
            let (id, n, m, eps) = match which {
                DemoId::Example1 => (ExampleId::One, 2usize, None, 0.1),
                _ => (ExampleId::Two, 2, Some(5), 0.25),
            };
            let domain = Domain::unit_disk();
            let pair = run_example(id, n, m, eps, domain, spec)?;
            // the disk variants of both bounds on the same system
            let sys = match id {
                ExampleId::One => crate::verify::example1_system(n, eps, domain, spec)?,
                ExampleId::Two => crate::verify::example2_system(n, m.unwrap(), eps, spec)?,
            };
            let prop3a = verify_prop3(&sys, spec, Prop3Variant::A)?;
            let prop3b = verify_prop3(&sys, spec, Prop3Variant::B)?;
            Ok(DemoOutput::Reports(json!({
                "reports": [pair.theorem1, pair.theorem2, prop3a, prop3b],
            })))
        }
        DemoId::Limit => {
            let w = parse_poly_expr("z^3+1")?;
            let table = limit_demo(&w, &[2.0, 5.0, 10.0, 50.0, 100.0], spec)?;
            Ok(DemoOutput::Table(table))
        }
        DemoId::Lemmas => {
            let seed = corpus::seed_from_env();
            let mut rng = corpus::rng(seed);
            let alpha = alpha.unwrap_or(0.5);
            let domain = Domain::unit_disk();
            let mut carleson = Vec::new();
            let mut vs = Vec::new();
            for _ in 0..10 {
                use rand::Rng as _;
                let deg = rng.gen_range(0..=4);
                let f = AnalyticFn::Poly(corpus::random_complex_poly(&mut rng, deg, 1.0));
                let theta = corpus::random_blaschke(&mut rng, domain, 5, 0.9);
                carleson.push(verify_carleson_formula(&f, &theta, spec)?);
                vs.push(verify_vs_inequality(&f, &theta, spec)?);
            }
            let mut comparability = Vec::new();
            for theta in [
                crate::blaschke::BlaschkeProduct::from_zeros(domain, &[(Complex64::ZERO, 1)])?,
                crate::blaschke::BlaschkeProduct::from_zeros(domain, &[(Complex64::ZERO, 2)])?,
                corpus::random_blaschke(&mut rng, domain, 4, 0.8),
            ] {
                comparability.push(verify_dalpha_comparability(&theta, alpha, spec)?);
            }
            Ok(DemoOutput::Reports(json!({
                "seed": seed,
                "alpha": alpha,
                "carleson": carleson,
                "vinogradov_shirokov": vs,
                "dalpha_comparability": comparability,
            })))
        }
    }
}

/// Serialize any report value deterministically.
pub fn to_json_string(value: &serde_json::Value) -> String {
    serde_json::to_string_pretty(value).expect("report serialization cannot fail")
}

/// Error envelope emitted on failures, with the exit-code class.
pub fn error_report(err: &Error) -> serde_json::Value {
    let status = match err.exit_code() {
        2 => "input_error",
        3 => "hypothesis_violated",
        _ => "internal_inconsistency",
    };
    json!({
        "status": status,
        "error": err.to_string(),
        "exit_code": err.exit_code(),
    })
}
