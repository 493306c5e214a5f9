//! Acceptance suite: one test per criterion, each printing a PASS line
//! (visible with `cargo test --test acceptance -- --nocapture`). Every
//! tolerance is pinned here, in code.

use std::time::Instant;

use num_complex::Complex64;
use rand::Rng as _;

use abc_analytica::blaschke::d_alpha_norm_sq;
use abc_analytica::corpus;
use abc_analytica::domain::Domain;
use abc_analytica::exact::{mason_check, n_theorem_check, Polynomial};
use abc_analytica::func::AnalyticFn;
use abc_analytica::io::parse_poly_expr;
use abc_analytica::numeric::quadrature::QuadratureSpec;
use abc_analytica::numeric::area_integral_disk;
use abc_analytica::verify::{
    build_system, check_divisibility, limit_demo, r_alpha, run_example, verify_carleson_formula,
    verify_theorem4, verify_vs_inequality, ExampleId, SystemFunction,
};

fn spec() -> QuadratureSpec {
    QuadratureSpec::default()
}

fn pass(n: usize, what: &str) {
    println!("ACCEPTANCE {n:2} PASS - {what}");
}

/// 1. Mason exactness: 1000 random relatively prime pairs (deg <= 8,
/// numerators/denominators <= 20) all satisfy the strict inequality, in
/// under 10 seconds; the tight case a = z^4, b = 1 gives lhs 4, rhs 5.
#[test]
fn criterion_01_mason_exactness() {
    let start = Instant::now();
    let mut rng = corpus::rng(corpus::seed_from_env());
    for trial in 0..1000 {
        let (a, b) = corpus::random_coprime_pair(&mut rng, 8, 20);
        let r = mason_check(&a, &b).unwrap();
        assert!(r.holds, "trial {trial}: lhs {} >= rhs {}", r.lhs, r.rhs);
        assert!(r.lhs < r.rhs);
    }
    let elapsed = start.elapsed();
    assert!(
        elapsed.as_secs_f64() < 10.0,
        "1000 trials took {elapsed:?}, budget is 10 s"
    );

    let tight = mason_check(&parse_poly_expr("z^4").unwrap(), &parse_poly_expr("1").unwrap()).unwrap();
    assert!(tight.holds);
    assert_eq!((tight.lhs, tight.rhs), (4, 5));
    pass(1, &format!("1000 coprime pairs hold exactly in {elapsed:.2?}; tight case (4, 5)"));
}

/// 2. n-theorem: 200 random admissible triples/quadruples (n = 2, 3) all
/// hold; the n = 1 specialization reproduces the two-term results exactly.
#[test]
fn criterion_02_n_theorem() {
    let mut rng = corpus::rng(corpus::seed_from_env() ^ 0x2);
    for trial in 0..200 {
        let n = 2 + trial % 2;
        let ps = corpus::random_disjoint_tuple(&mut rng, n, 5, 10);
        let r = n_theoren_guard(&ps);
        assert!(r.holds, "trial {trial}: lhs {} > rhs {}", r.lhs, r.rhs);
    }
    // n = 1 specialization against the two-term report
    for _ in 0..200 {
        let (a, b) = corpus::random_coprime_pair(&mut rng, 8, 20);
        let two = mason_check(&a, &b).unwrap();
        let one = n_theorem_check(&[a, b]).unwrap();
        assert_eq!(one.holds, two.holds);
        assert_eq!(one.lhs, two.lhs);
        assert_eq!(one.rhs, two.rhs as i64 - 1);
    }
    pass(2, "200 admissible tuples hold; n = 1 matches the two-term check exactly");
}

fn n_theoren_guard(ps: &[Polynomial]) -> abc_analytica::exact::NTheoremReport {
    n_theorem_check(ps).expect("generator enforces the hypotheses")
}

/// 3. The norm identity: both Dirichlet routes of 50 random finite
/// Blaschke products (N <= 10) return the zero count within 1e-6 and
/// agree with each other within 1e-8.
#[test]
fn criterion_03_dirichlet_identity() {
    let mut rng = corpus::rng(corpus::seed_from_env() ^ 0x3);
    let unit = Domain::unit_disk();
    let mut worst_route = 0.0f64;
    let mut worst_agree = 0.0f64;
    for _ in 0..50 {
        let b = corpus::random_blaschke(&mut rng, unit, 10, 0.9);
        let n = b.counts().total as f64;
        let norm = b.dirichlet_norm_sq(&spec()).unwrap();
        worst_route = worst_route
            .max((norm.area_route - n).abs())
            .max((norm.boundary_route - n).abs());
        worst_agree = worst_agree.max((norm.area_route - norm.boundary_route).abs());
        assert!((norm.area_route - n).abs() <= 1e-6, "area route vs N = {n}");
        assert!((norm.boundary_route - n).abs() <= 1e-6, "boundary route vs N = {n}");
        assert!((norm.area_route - norm.boundary_route).abs() <= 1e-8);
    }
    pass(3, &format!("50 products: worst |route - N| = {worst_route:.2e}, worst route gap = {worst_agree:.2e}"));
}

/// 4. Equality case of the constant-Wronskian family: n in {1, 2, 3},
/// eps = 0.1 on the unit disk. lambda^2 = kappa = 0 and mu = 1 within
/// 1e-9; counts are (n, 1); both slacks within 1e-6.
#[test]
fn criterion_04_example1_equality() {
    for n in [1usize, 2, 3] {
        let pair = run_example(ExampleId::One, n, None, 0.1, Domain::unit_disk(), &spec()).unwrap();
        for r in [&pair.theorem1, &pair.theorem2] {
            assert_eq!(r.lhs, n as f64, "N(bigB) must be n");
            assert_eq!(r.counts.n_cal_b, 1, "N(calB) must be 1");
            assert!(r.slack.abs() <= 1e-6, "n = {n}: slack {}", r.slack);
        }
        let fv = pair.theorem1.functionals.as_ref().unwrap();
        assert!(fv.lambda_sq.abs() <= 1e-9);
        assert!((fv.mu - 1.0).abs() <= 1e-9);
        let fv2 = pair.theorem2.functionals.as_ref().unwrap();
        assert!(fv2.kappa.abs() <= 1e-9);
    }
    pass(4, "equalities attained for n in {1, 2, 3} with lambda = kappa = 0, mu = 1");
}

/// 5. Equality case of the monomial-tail family: n = 2, m = 5,
/// eps = 0.25. lambda^2 = kappa = 3 within 1e-6, mu = 1 within 1e-9, both
/// inequalities are equalities within 1e-6.
#[test]
fn criterion_05_example2_equality() {
    let pair = run_example(ExampleId::Two, 2, Some(5), 0.25, Domain::unit_disk(), &spec()).unwrap();
    let fv = pair.theorem1.functionals.as_ref().unwrap();
    assert!((fv.lambda_sq - 3.0).abs() <= 1e-6, "lambda^2 = {}", fv.lambda_sq);
    assert!((fv.kappa - 3.0).abs() <= 1e-6, "kappa = {}", fv.kappa);
    assert!((fv.mu - 1.0).abs() <= 1e-9, "mu = {}", fv.mu);
    assert_eq!(pair.theorem1.lhs, 5.0);
    assert!(pair.theorem1.slack.abs() <= 1e-6);
    assert!(pair.theorem2.slack.abs() <= 1e-6);
    pass(5, "lambda^2 = kappa = 3, mu = 1; both bounds are equalities at lhs = 5");
}

/// 6. The limiting argument: for W = z^3 + 1 at R = 100, kappa lies in
/// [2.99, 3.01] (closed form 3 * 10^6 / (10^6 - 1)) and mu <= 1.00001;
/// the approach over R in {2, 5, 10, 50, 100} is monotone.
#[test]
fn criterion_06_limiting_argument() {
    let w = parse_poly_expr("z^3+1").unwrap();
    let table = limit_demo(&w, &[2.0, 5.0, 10.0, 50.0, 100.0], &spec()).unwrap();
    let rows = &table.rows;
    assert!(rows.iter().all(|r| !r.skipped));
    let kappa_last = rows.last().unwrap().kappa.unwrap();
    let mu_last = rows.last().unwrap().mu.unwrap();
    assert!((2.99..=3.01).contains(&kappa_last), "kappa(100) = {kappa_last}");
    let closed_form = 3.0 * 1e6 / (1e6 - 1.0);
    assert!((kappa_last - closed_form).abs() <= 1e-6);
    assert!(mu_last <= 1.00001, "mu(100) = {mu_last}");
    for w in rows.windows(2) {
        assert!(w[1].kappa.unwrap() <= w[0].kappa.unwrap() + 1e-12);
        assert!(w[1].mu.unwrap() <= w[0].mu.unwrap() + 1e-12);
    }
    pass(6, &format!("kappa(100) = {kappa_last:.8}, mu(100) = {mu_last:.8}, monotone schedule"));
}

fn lemma_corpus(seed: u64) -> Vec<(AnalyticFn, abc_analytica::blaschke::BlaschkeProduct)> {
    let mut rng = corpus::rng(seed);
    let unit = Domain::unit_disk();
    let mut cases = Vec::with_capacity(30);
    for k in 0..30 {
        let f = if k < 5 {
            AnalyticFn::constant(Complex64::new(1.0, 0.0))
        } else {
            let deg = rng.gen_range(0..=4);
            AnalyticFn::Poly(corpus::random_complex_poly(&mut rng, deg, 1.0))
        };
        let theta = corpus::random_blaschke(&mut rng, unit, 5, 0.85);
        cases.push((f, theta));
    }
    cases
}

/// 7. Carleson's formula holds to equality within 1e-6 on the 30-case
/// corpus (f of degree <= 4, theta with N <= 5); the f = 1 cases
/// reproduce the zero-count identity.
#[test]
fn criterion_07_carleson_formula() {
    let mut worst = 0.0f64;
    for (i, (f, theta)) in lemma_corpus(corpus::seed_from_env() ^ 0x7).iter().enumerate() {
        let r = verify_carleson_formula(f, theta, &spec()).unwrap();
        let tol = 1e-6 * (1.0 + r.rhs.abs());
        assert!(r.difference.abs() <= tol, "case {i}: diff {}", r.difference);
        worst = worst.max(r.difference.abs() / (1.0 + r.rhs.abs()));
        if i < 5 {
            // f = 1: both sides are the zero count
            let n = theta.counts().total as f64;
            assert!((r.lhs - n).abs() <= 1e-6);
            assert!((r.boundary_term - n).abs() <= 1e-6);
        }
    }
    pass(7, &format!("30 cases at equality; worst relative difference {worst:.2e}"));
}

/// 8. The boundary derivative inequality holds with slack above -1e-8 on
/// the same corpus; the f = 1 cases are equalities.
#[test]
fn criterion_08_vinogradov_shirokov() {
    let mut min_slack = f64::INFINITY;
    for (i, (f, theta)) in lemma_corpus(corpus::seed_from_env() ^ 0x7).iter().enumerate() {
        let r = verify_vs_inequality(f, theta, &spec()).unwrap();
        assert!(r.slack >= -1e-8, "case {i}: slack {}", r.slack);
        min_slack = min_slack.min(r.slack);
        if i < 5 {
            assert!(r.slack.abs() <= 1e-8, "case {i} should be an equality");
        }
    }
    pass(8, &format!("30 cases hold; minimum slack {min_slack:.2e}"));
}

/// 9. The divisibility identity W * calB^n = F * bigB: exact vanishing
/// orders on every polynomial-path system, series remainder below 1e-8,
/// and |F| = |W| on 1024 boundary samples within 1e-8.
#[test]
fn criterion_09_divisibility_identity() {
    let mut rng = corpus::rng(corpus::seed_from_env() ^ 0x9);
    let mut series_checked = 0usize;
    for k in 0..15 {
        let n = 1 + k % 2;
        let sys = corpus::random_system(&mut rng, n, 4, &spec()).unwrap();
        let report = check_divisibility(&sys, &spec()).unwrap();
        assert!(report.ok);
        assert!(report.order_checks.iter().all(|c| c.satisfied));
        assert!(
            report.boundary_f_deviation <= 1e-8,
            "case {k}: |F| vs |W| deviation {}",
            report.boundary_f_deviation
        );

        // the same functions through the series path
        let series_fs: Vec<SystemFunction> = sys.fs[..=n]
            .iter()
            .map(|f| {
                SystemFunction::Series(abc_analytica::numeric::PowerSeries::from_coeffs(
                    f.coeffs().to_vec(),
                ))
            })
            .collect();
        if let Ok(series_sys) = build_system(&series_fs, Domain::unit_disk(), &spec()) {
            let sr = check_divisibility(&series_sys, &spec()).unwrap();
            assert!(sr.series_residual.unwrap() <= 1e-8);
            assert!(sr.boundary_f_deviation <= 1e-8);
            series_checked += 1;
        }
    }
    assert!(series_checked >= 10, "series path exercised {series_checked} times");
    pass(9, &format!("15 exact systems exact; {series_checked} series twins with remainder <= 1e-8"));
}

/// 10. The D_alpha bound, property-based (its constant is
/// nonconstructive): over the corpus plus the radial family
/// a_k = 1 - 2^-k (K <= 15), the implied constant is finite and positive
/// for alpha in {0.25, 0.5, 0.75}, its corpus minimum moves by less than
/// 2x when the truncation order doubles, and R_alpha(f, theta) >= -1e-8
/// on all samples.
#[test]
fn criterion_10_d_alpha_bound() {
    let mut rng = corpus::rng(corpus::seed_from_env() ^ 0x10);
    let mut systems = Vec::new();
    for k in 0..6 {
        let n = 1 + k % 2;
        systems.push(corpus::random_system(&mut rng, n, 3, &spec()).unwrap());
    }
    for k_max in [5usize, 10, 15] {
        systems.push(corpus::radial_system(k_max, &spec()).unwrap());
    }

    let sample_fs = [
        vec![Complex64::new(1.0, 0.0)],
        vec![Complex64::new(2.0, 0.0), Complex64::new(1.0, 0.0)],
        vec![
            Complex64::new(-0.5, 0.25),
            Complex64::new(1.0, 0.0),
            Complex64::new(0.0, 0.5),
        ],
    ];

    for alpha in [0.25f64, 0.5, 0.75] {
        let mut min_c = f64::INFINITY;
        let mut min_c_refined = f64::INFINITY;
        for sys in &systems {
            let r = verify_theorem4(sys, alpha, &spec()).unwrap();
            assert!(r.implied_c.is_finite() && r.implied_c > 0.0);
            assert!(r.implied_c_refined.is_finite() && r.implied_c_refined > 0.0);
            min_c = min_c.min(r.implied_c);
            min_c_refined = min_c_refined.min(r.implied_c_refined);

            // monotonicity of multiplication by the inner factor
            let order = r.truncation_order;
            let theta = sys.cal_b.taylor(order);
            for coeffs in &sample_fs {
                let f = abc_analytica::numeric::PowerSeries::from_coeffs(coeffs.clone())
                    .resized(order);
                let v = r_alpha(&f, &theta.series, alpha).unwrap();
                assert!(v >= -1e-8, "alpha {alpha}: R_alpha = {v}");
            }
        }
        let stability = min_c_refined / min_c;
        assert!(
            stability > 0.5 && stability < 2.0,
            "alpha {alpha}: corpus minimum moved by {stability}x under doubling"
        );
    }
    pass(10, "implied constants positive and stable under truncation doubling; R_alpha >= -1e-8");
}

/// 11. Parseval cross-check: the area Dirichlet integral equals the
/// coefficient sum within 1e-9 for 50 random polynomials.
#[test]
fn criterion_11_parseval() {
    let mut rng = corpus::rng(corpus::seed_from_env() ^ 0x11);
    let unit = Domain::unit_disk();
    let tight = QuadratureSpec::new(256, 64, 12, 1e-12).unwrap();
    let mut worst = 0.0f64;
    for _ in 0..50 {
        let deg = rng.gen_range(1..=8);
        let coeffs = corpus::random_complex_poly(&mut rng, deg, 0.7);
        let f = AnalyticFn::Poly(coeffs.clone());
        let df = f.derivative();
        let area = area_integral_disk(|z| df.eval(z), &unit, 0.0, &tight).unwrap();
        let coeff_sum: f64 = coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(k, c)| k as f64 * c.norm_sqr())
            .sum();
        let diff = (area - coeff_sum).abs();
        worst = worst.max(diff);
        assert!(diff <= 1e-9, "area {area} vs coefficient sum {coeff_sum}");
    }
    pass(11, &format!("50 polynomials; worst |area - sum k|c_k|^2| = {worst:.2e}"));
}
