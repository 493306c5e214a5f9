//! Cross-module invariants: the exact and numeric halves check each
//! other, and structural identities hold on randomized inputs.

use num_complex::Complex64;
use proptest::prelude::*;

use abc_analytica::blaschke::d_alpha_norm_sq;
use abc_analytica::corpus;
use abc_analytica::domain::{ConformalMap, Domain};
use abc_analytica::exact::{
    distinct_zero_count, squarefree_part, wronskian_derivative_poly, wronskian_poly,
    GaussianRational, Polynomial,
};
use abc_analytica::func::AnalyticFn;
use abc_analytica::numeric::quadrature::QuadratureSpec;
use abc_analytica::numeric::{area_integral_disk, cluster, poly_roots, winding_count};
use abc_analytica::verify::{build_system, SystemFunction};

fn spec() -> QuadratureSpec {
    QuadratureSpec::default()
}

/// Distinct-root counts from the exact squarefree degree and from the
/// numeric root finder agree for moderate degrees.
#[test]
fn squarefree_degree_matches_numeric_distinct_roots() {
    let mut rng = corpus::rng(1001);
    for _ in 0..40 {
        // build with known root structure, degree <= 12
        let mut p = Polynomial::constant(GaussianRational::from_int(2));
        let n_roots = 1 + (corpus::random_gaussian_rational(&mut rng, 5)
            .to_complex64()
            .norm()
            * 3.0) as usize
            % 5;
        let mut deg = 0usize;
        for _ in 0..n_roots {
            let r = corpus::random_rational_point(&mut rng, 2.0);
            let mult = 1 + (deg % 3);
            for _ in 0..mult {
                p = p.mul(&Polynomial::linear_from_root(&r));
                deg += 1;
                if deg >= 12 {
                    break;
                }
            }
            if deg >= 12 {
                break;
            }
        }
        let exact_count = distinct_zero_count(&p).unwrap();
        let roots = poly_roots(&p.to_complex_coeffs(), 600).unwrap();
        let clusters = cluster(&roots, 1e-8 * roots.iter().map(|r| r.norm()).fold(1.0, f64::max));
        assert_eq!(clusters.len(), exact_count, "polynomial {p:?}");
    }
}

/// Winding counts agree with strict-membership root counts for random
/// polynomials of degree <= 10.
#[test]
fn winding_agrees_with_root_membership() {
    let mut rng = corpus::rng(1002);
    let unit = Domain::unit_disk();
    let guard = 1e-8;
    let mut checked = 0;
    'outer: while checked < 25 {
        use rand::Rng as _;
        let deg = rng.gen_range(1..=10);
        let coeffs = corpus::random_complex_poly(&mut rng, deg, 1.0);
        let roots = poly_roots(&coeffs, 600).unwrap();
        let mut inside = 0i64;
        for r in &roots {
            let d = r.norm();
            if (d - 1.0).abs() <= guard {
                continue 'outer; // too close to the contour, resample
            }
            if d < 1.0 {
                inside += 1;
            }
        }
        let f = AnalyticFn::Poly(coeffs);
        match winding_count(|z| f.eval(z), &unit, &spec()) {
            Ok(w) => assert_eq!(w, inside),
            Err(_) => continue, // guard rejection is acceptable
        }
        checked += 1;
    }
}

/// The two exact routes to W': differentiate the Wronskian, or expand the
/// bumped-last-row determinant. They agree coefficient for coefficient.
#[test]
fn wronskian_derivative_routes_agree_exactly() {
    let mut rng = corpus::rng(1003);
    for n in 1..=3usize {
        for _ in 0..10 {
            use rand::Rng as _;
            let fs: Vec<Polynomial> = (0..=n)
                .map(|_| {
                    let d = rng.gen_range(1..=4);
                    corpus::random_exact_poly(&mut rng, d, 6)
                })
                .collect();
            let direct = wronskian_poly(&fs).derivative();
            let bumped = wronskian_derivative_poly(&fs);
            assert_eq!(direct, bumped);
        }
    }
}

/// Replacing any column of the Wronskian matrix by the sum column leaves
/// the determinant unchanged (multilinearity; duplicate columns die).
#[test]
fn sum_column_replacement_is_invisible() {
    let mut rng = corpus::rng(1004);
    for _ in 0..10 {
        use rand::Rng as _;
        let n = 2usize;
        let fs: Vec<Polynomial> = (0..=n)
            .map(|_| {
                let d = rng.gen_range(1..=3);
                corpus::random_exact_poly(&mut rng, d, 5)
            })
            .collect();
        let sum = fs.iter().fold(Polynomial::zero(), |acc, p| acc.add(p));
        let w = wronskian_poly(&fs);
        for j in 0..=n {
            let mut replaced = fs.clone();
            replaced[j] = sum.clone();
            assert_eq!(wronskian_poly(&replaced), w, "column {j}");
        }
    }
}

/// The Dirichlet integral is invariant under the affine disk map.
#[test]
fn dirichlet_integral_is_conformally_invariant() {
    let domain = Domain::new(Complex64::new(1.0, -0.5), 2.0).unwrap();
    let map = domain.map();
    // f(z) = z^2 + 3z on the domain; g = f o inverse on the unit disk
    let f = AnalyticFn::Poly(vec![
        Complex64::ZERO,
        Complex64::new(3.0, 0.0),
        Complex64::new(1.0, 0.0),
    ]);
    let df = f.derivative();
    let on_domain = area_integral_disk(|z| df.eval(z), &domain, 0.0, &spec()).unwrap();
    // (f o phi^{-1})'(u) = f'(phi^{-1}(u)) * R
    let r = domain.radius();
    let on_unit = area_integral_disk(
        |u| df.eval(map.inverse(u)) * r,
        &Domain::unit_disk(),
        0.0,
        &spec(),
    )
    .unwrap();
    assert!(
        (on_domain - on_unit).abs() < 1e-9 * on_domain.max(1.0),
        "{on_domain} vs {on_unit}"
    );
}

/// Blaschke winding count equals the total zero count.
#[test]
fn blaschke_winding_matches_zero_count() {
    let mut rng = corpus::rng(1005);
    let unit = Domain::unit_disk();
    for _ in 0..10 {
        let b = corpus::random_blaschke(&mut rng, unit, 8, 0.85);
        let w = winding_count(|z| b.eval_unit(z), &unit, &spec()).unwrap();
        assert_eq!(w as usize, b.counts().total);
    }
}

/// Truncated D_alpha partial sums at alpha = 1 increase monotonically to
/// the zero count as the order doubles.
#[test]
fn d_alpha_partial_sums_climb_to_the_count() {
    let mut rng = corpus::rng(1006);
    let unit = Domain::unit_disk();
    for _ in 0..5 {
        let b = corpus::random_blaschke(&mut rng, unit, 6, 0.8);
        let n = b.counts().total as f64;
        let mut prev = -1.0;
        for order in [64usize, 128, 256, 512, 1024] {
            let t = b.taylor(order);
            let v = d_alpha_norm_sq(&t.series, 1.0).unwrap();
            assert!(v >= prev - 1e-12, "partial sums must be nondecreasing");
            assert!(v <= n + 1e-9, "partial sum cannot exceed the count");
            prev = v;
        }
        assert!((prev - n).abs() < 1e-6, "converged to {prev}, count {n}");
    }
}

/// Randomized systems never produce a failing report; slack is always
/// nonnegative up to the equality tolerance.
#[test]
fn random_systems_never_fail_the_bounds() {
    use abc_analytica::verify::{verify_theorem1, verify_theorem2, Status};
    let mut rng = corpus::rng(1007);
    for k in 0..12 {
        let n = 1 + k % 3;
        let sys = corpus::random_system(&mut rng, n, 4, &spec()).unwrap();
        for report in [
            verify_theorem1(&sys, &spec()).unwrap(),
            verify_theorem2(&sys, &spec()).unwrap(),
        ] {
            assert_ne!(report.status, Status::Fails, "slack {}", report.slack);
        }
    }
}

/// Systems built from truncated series with exponential-style tails pass
/// the disk bounds: a degree-40 truncation of eps * z^j e^{z/2} / j!.
#[test]
fn truncated_series_system_holds() {
    use abc_analytica::verify::{verify_prop3, Prop3Variant, Status};
    let order = 40usize;
    let eps = 0.05f64;
    let series_fn = |j: usize| {
        // eps * z^j / j! * e^{z/2} truncated
        let mut coeffs = vec![Complex64::ZERO; order + 1];
        let mut jfact = 1.0f64;
        for t in 2..=j {
            jfact *= t as f64;
        }
        let mut kfact = 1.0f64;
        for k in 0..=(order - j) {
            if k > 0 {
                kfact *= k as f64;
            }
            coeffs[j + k] = Complex64::new(eps / jfact * 0.5f64.powi(k as i32) / kfact, 0.0);
        }
        SystemFunction::Series(abc_analytica::numeric::PowerSeries::from_coeffs(coeffs))
    };
    let one = SystemFunction::Series(abc_analytica::numeric::PowerSeries::constant(
        Complex64::new(1.0, 0.0),
        order,
    ));
    let fs = [one, series_fn(1), series_fn(2)];
    let sys = build_system(&fs, Domain::unit_disk(), &spec()).unwrap();
    assert_eq!(sys.big_b.counts().total, 2);
    for variant in [Prop3Variant::A, Prop3Variant::B] {
        let r = verify_prop3(&sys, &spec(), variant).unwrap();
        assert!(matches!(r.status, Status::Holds | Status::Equality));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    /// Swapping two Wronskian inputs negates the determinant exactly.
    #[test]
    fn wronskian_alternating(seed in 0u64..10_000) {
        let mut rng = corpus::rng(seed);
        use rand::Rng as _;
        let fs: Vec<Polynomial> = (0..3)
            .map(|_| {
                let d = rng.gen_range(0..=3);
                corpus::random_exact_poly(&mut rng, d, 5)
            })
            .collect();
        let w = wronskian_poly(&fs);
        let swapped = vec![fs[1].clone(), fs[0].clone(), fs[2].clone()];
        prop_assert_eq!(wronskian_poly(&swapped), w.neg());
    }

    /// deg W <= sum deg f_j - n(n+1)/2 when all inputs are nonzero.
    #[test]
    fn wronskian_degree_bound(seed in 0u64..10_000) {
        let mut rng = corpus::rng(seed.wrapping_add(77));
        use rand::Rng as _;
        let n = rng.gen_range(1..=3usize);
        let fs: Vec<Polynomial> = (0..=n)
            .map(|_| {
                let d = rng.gen_range(0..=4);
                corpus::random_exact_poly(&mut rng, d, 5)
            })
            .collect();
        let w = wronskian_poly(&fs);
        if let Some(deg) = w.degree() {
            let sum: usize = fs.iter().map(|f| f.degree().unwrap()).sum();
            prop_assert!(deg + n * (n + 1) / 2 <= sum);
        }
    }

    /// squarefree_part never carries a repeated factor.
    #[test]
    fn squarefree_part_is_squarefree(seed in 0u64..10_000) {
        let mut rng = corpus::rng(seed.wrapping_add(991));
        use rand::Rng as _;
        let d = rng.gen_range(1..=3);
        let base = corpus::random_exact_poly(&mut rng, d, 4);
        let p = base.mul(&base); // definitely not squarefree
        let s = squarefree_part(&p).unwrap();
        let g = abc_analytica::exact::poly_gcd(&s, &s.derivative()).unwrap();
        prop_assert_eq!(g.degree(), Some(0));
    }

    /// Blaschke products stay unimodular on the boundary and contractive
    /// inside, whatever the zero configuration.
    #[test]
    fn blaschke_modulus_bounds(seed in 0u64..10_000) {
        let mut rng = corpus::rng(seed.wrapping_add(40_000));
        let b = corpus::random_blaschke(&mut rng, Domain::unit_disk(), 6, 0.9);
        let inner = corpus::random_unit_point(&mut rng, 0.95);
        prop_assert!(b.eval(inner).unwrap().norm() < 1.0 + 1e-12);
        let theta = corpus::random_unit_point(&mut rng, 1.0).arg();
        let boundary = Domain::unit_disk().boundary_point(theta);
        prop_assert!((b.eval(boundary).unwrap().norm() - 1.0).abs() < 1e-10);
    }
}
