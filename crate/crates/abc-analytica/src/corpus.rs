//! Seeded random test families: coprime polynomial pairs over the
//! Gaussian rationals, finite Blaschke products, and full analytic
//! systems. Everything is driven by a ChaCha stream so corpus runs are
//! reproducible; the CLI seeds it from ABC_ANALYTICA_SEED.

use num_complex::Complex64;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::blaschke::BlaschkeProduct;
use crate::domain::{ConformalMap, Domain};
use crate::error::{Error, Result};
use crate::exact::{poly_gcd, GaussianRational, Polynomial};
use crate::numeric::quadrature::QuadratureSpec;
use crate::verify::{build_system, AnalyticSystem, SystemFunction};

pub const DEFAULT_SEED: u64 = 271828;

/// Seed for randomized corpus generation: the decimal unsigned integer in
/// ABC_ANALYTICA_SEED, or the default.
pub fn seed_from_env() -> u64 {
    std::env::var("ABC_ANALYTICA_SEED")
        .ok()
        .and_then(|s| s.trim().parse().ok())
        .unwrap_or(DEFAULT_SEED)
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// A Gaussian rational with numerators and denominators bounded by
/// `bound` in absolute value.
pub fn random_gaussian_rational(rng: &mut ChaCha8Rng, bound: i64) -> GaussianRational {
    let part = |rng: &mut ChaCha8Rng| {
        let num = rng.gen_range(-bound..=bound);
        let den = rng.gen_range(1..=bound);
        (num, den)
    };
    let (a, b) = part(rng);
    let (c, d) = part(rng);
    GaussianRational::from_ratios(a, b, c, d)
}

/// Random polynomial of exactly the given degree with small coefficients.
pub fn random_exact_poly(rng: &mut ChaCha8Rng, degree: usize, bound: i64) -> Polynomial {
    loop {
        let mut coeffs: Vec<GaussianRational> = (0..=degree)
            .map(|_| random_gaussian_rational(rng, bound))
            .collect();
        if coeffs[degree].is_zero() {
            coeffs[degree] = GaussianRational::one();
        }
        let p = Polynomial::from_coeffs(coeffs);
        if !p.is_zero() {
            return p;
        }
    }
}

/// A relatively prime pair, not both constant, with degrees up to
/// `max_degree` and coefficient data bounded by `bound`.
pub fn random_coprime_pair(
    rng: &mut ChaCha8Rng,
    max_degree: usize,
    bound: i64,
) -> (Polynomial, Polynomial) {
    loop {
        let da = rng.gen_range(0..=max_degree);
        let db = rng.gen_range(0..=max_degree);
        if da == 0 && db == 0 {
            continue;
        }
        let a = random_exact_poly(rng, da, bound);
        let b = random_exact_poly(rng, db, bound);
        let g = poly_gcd(&a, &b).expect("inputs nonzero");
        if g.degree() == Some(0) {
            // reject sum zero (cannot happen for coprime nonconstant, but
            // the constant+constant edge is cheap to guard)
            if !a.add(&b).is_zero() {
                return (a, b);
            }
        }
    }
}

/// Polynomials p_0..p_n with pairwise disjoint zero sets (including the
/// sum) and nonvanishing Wronskian, for the n-term inequality.
pub fn random_disjoint_tuple(
    rng: &mut ChaCha8Rng,
    n: usize,
    max_degree: usize,
    bound: i64,
) -> Vec<Polynomial> {
    'outer: loop {
        let mut ps = Vec::with_capacity(n + 1);
        for _ in 0..=n {
            let d = rng.gen_range(0..=max_degree);
            ps.push(random_exact_poly(rng, d, bound));
        }
        if ps.iter().all(|p| p.is_constant()) {
            continue;
        }
        let sum = ps.iter().fold(Polynomial::zero(), |acc, p| acc.add(p));
        if sum.is_zero() {
            continue;
        }
        let mut all: Vec<&Polynomial> = ps.iter().collect();
        all.push(&sum);
        for i in 0..all.len() {
            for j in i + 1..all.len() {
                match poly_gcd(all[i], all[j]) {
                    Ok(g) if g.degree() == Some(0) => {}
                    _ => continue 'outer,
                }
            }
        }
        if crate::exact::wronskian_poly(&ps).is_zero() {
            continue;
        }
        return ps;
    }
}

/// Uniform point in the disk |w| <= max_radius.
pub fn random_unit_point(rng: &mut ChaCha8Rng, max_radius: f64) -> Complex64 {
    let r = max_radius * rng.gen::<f64>().sqrt();
    let theta = rng.gen::<f64>() * 2.0 * std::f64::consts::PI;
    r * Complex64::new(theta.cos(), theta.sin())
}

/// Finite Blaschke product with total zero count in 1..=max_total and
/// zeros within |w| <= max_radius of the domain's unit coordinates.
pub fn random_blaschke(
    rng: &mut ChaCha8Rng,
    domain: Domain,
    max_total: usize,
    max_radius: f64,
) -> BlaschkeProduct {
    let total = rng.gen_range(1..=max_total);
    let map = domain.map();
    let mut zeros: Vec<(Complex64, u32)> = Vec::new();
    let mut used = 0usize;
    while used < total {
        let mult = rng.gen_range(1..=(total - used).min(3)) as u32;
        let w = random_unit_point(rng, max_radius);
        zeros.push((map.inverse(w), mult));
        used += mult as usize;
    }
    BlaschkeProduct::from_zeros(domain, &zeros).expect("zeros sampled strictly inside")
}

/// Random complex polynomial (f64 coefficients) of exact degree `degree`.
pub fn random_complex_poly(rng: &mut ChaCha8Rng, degree: usize, scale: f64) -> Vec<Complex64> {
    let mut coeffs: Vec<Complex64> = (0..=degree)
        .map(|_| Complex64::new(rng.gen_range(-scale..scale), rng.gen_range(-scale..scale)))
        .collect();
    if coeffs[degree].norm() < 0.1 * scale {
        coeffs[degree] = Complex64::new(scale, 0.0);
    }
    coeffs
}

/// Exact polynomial with prescribed zeros (in domain coordinates), built
/// as lc * prod (z - root). Multiplicity via repeated roots.
pub fn poly_from_roots(lc: GaussianRational, roots: &[GaussianRational]) -> Polynomial {
    let mut p = Polynomial::constant(lc);
    for r in roots {
        p = p.mul(&Polynomial::linear_from_root(r));
    }
    p
}

/// Random Gaussian-rational point with |z| <= max_radius (rejection
/// sampled on a small grid of rationals).
pub fn random_rational_point(rng: &mut ChaCha8Rng, max_radius: f64) -> GaussianRational {
    loop {
        let den = rng.gen_range(8..=24i64);
        let a = rng.gen_range(-den..=den);
        let b = rng.gen_range(-den..=den);
        let z = GaussianRational::from_ratios(a, den, b, den);
        let c = z.to_complex64();
        if c.norm() <= max_radius {
            return z;
        }
    }
}

/// A random admissible analytic system on the unit disk: f_j built from
/// exact roots inside |z| <= 0.9, occasionally repeated for multiplicity.
/// Resamples on hypothesis violations (guard-band zeros of the sum,
/// boundary-vanishing Wronskian).
pub fn random_system(
    rng: &mut ChaCha8Rng,
    n: usize,
    max_degree: usize,
    spec: &QuadratureSpec,
) -> Result<AnalyticSystem> {
    let domain = Domain::unit_disk();
    for _attempt in 0..50 {
        let mut fs = Vec::with_capacity(n + 1);
        for _ in 0..=n {
            let deg = rng.gen_range(0..=max_degree);
            let mut roots = Vec::with_capacity(deg);
            while roots.len() < deg {
                let r = random_rational_point(rng, 0.9);
                roots.push(r.clone());
                // occasional double root
                if roots.len() < deg && rng.gen_bool(0.2) {
                    roots.push(r);
                }
            }
            let lc = loop {
                let c = random_gaussian_rational(rng, 6);
                if !c.is_zero() {
                    break c;
                }
            };
            fs.push(SystemFunction::Exact(poly_from_roots(lc, &roots)));
        }
        match build_system(&fs, domain, spec) {
            Ok(sys) => return Ok(sys),
            Err(
                Error::ZeroInGuardBand { .. }
                | Error::LinearlyDependent
                | Error::BoundaryVanishing { .. }
                | Error::ZeroPolynomial,
            ) => continue,
            Err(e) => return Err(e),
        }
    }
    Err(Error::InvalidParameter(
        "could not sample an admissible system in 50 attempts".into(),
    ))
}

/// The radial truncation family: simple zeros at a_k = 1 - 2^{-k} for
/// k = 1..=k_max, packaged as a system (n = 1) whose second function is a
/// small multiple of prod (z - a_k), so bigB = calB = the radial product.
pub fn radial_system(k_max: usize, spec: &QuadratureSpec) -> Result<AnalyticSystem> {
    let mut roots = Vec::with_capacity(k_max);
    for k in 1..=k_max {
        // 1 - 2^{-k} exactly
        let denom = 1i64 << k;
        roots.push(GaussianRational::from_ratios(denom - 1, denom, 0, 1));
    }
    // eps = 2^{-(k_max + 2)} keeps |f_1| < 1/2 on the closed disk
    let eps = GaussianRational::from_ratios(1, 1i64 << (k_max + 2).min(62), 0, 1);
    let f1 = poly_from_roots(eps, &roots);
    let fs = [
        SystemFunction::Exact(Polynomial::one()),
        SystemFunction::Exact(f1),
    ];
    build_system(&fs, Domain::unit_disk(), spec)
}
