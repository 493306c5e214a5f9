//! The polynomial abc theorem (Mason--Stothers) and its n-term
//! generalization, checked with exact arithmetic.

use serde::Serialize;

use super::poly::{distinct_zero_count, poly_gcd, wronskian_poly, Polynomial};
use crate::error::{Error, Result};

/// Outcome of the two-term check `max deg < distinct zeros of abc`.
#[derive(Debug, Clone, Serialize)]
pub struct MasonReport {
    pub holds: bool,
    pub lhs: usize,
    pub rhs: usize,
}

/// Check the abc inequality for a relatively prime pair (a, b) with
/// c = a + b: max(deg a, deg b, deg c) < N~(abc). The inequality is a
/// theorem, so `holds == false` on admissible input indicates a bug here,
/// not a counterexample.
pub fn mason_check(a: &Polynomial, b: &Polynomial) -> Result<MasonReport> {
    if a.is_zero() && b.is_zero() {
        return Err(Error::GcdOfZeros);
    }
    let c = a.add(b);
    if a.is_constant() && b.is_constant() && c.is_constant() {
        return Err(Error::TrivialInput);
    }
    let g = poly_gcd(a, b)?;
    if let Some(d) = g.degree() {
        if d > 0 {
            return Err(Error::NotRelativelyPrime { gcd_degree: d });
        }
    }
    // a, b coprime and not both constant forces c = a + b nonzero.
    debug_assert!(!c.is_zero());
    let lhs = [a, b, &c]
        .iter()
        .filter_map(|p| p.degree())
        .max()
        .unwrap_or(0);
    // gcd(a, b) constant makes all three pairwise coprime (a divisor of a
    // and c divides b), so the distinct zeros of abc split as a sum; this
    // keeps every gcd at the factor degrees instead of their sum.
    let rhs =
        distinct_zero_count(a)? + distinct_zero_count(b)? + distinct_zero_count(&c)?;
    Ok(MasonReport {
        holds: lhs < rhs,
        lhs,
        rhs,
    })
}

#[derive(Debug, Clone, Serialize)]
pub struct NTheoremReport {
    pub holds: bool,
    pub lhs: usize,
    pub rhs: i64,
    pub n: usize,
}

/// Check the n-term inequality for linearly independent p_0..p_n with
/// pairwise disjoint zero sets (p_{n+1} = sum included):
/// max_j deg p_j <= n * N~(p_0 ... p_{n+1}) - n(n+1)/2.
pub fn n_theorem_check(ps: &[Polynomial]) -> Result<NTheoremReport> {
    if ps.len() < 2 {
        return Err(Error::InvalidParameter(
            "n-theorem needs at least two polynomials (n >= 1)".into(),
        ));
    }
    if ps.iter().any(Polynomial::is_zero) {
        return Err(Error::ZeroPolynomial);
    }
    let n = ps.len() - 1;
    let w = wronskian_poly(ps);
    if w.is_zero() {
        return Err(Error::LinearlyDependent);
    }
    let p_last = ps.iter().fold(Polynomial::zero(), |acc, p| acc.add(p));
    if p_last.is_zero() {
        return Err(Error::LinearlyDependent);
    }
    let mut all: Vec<&Polynomial> = ps.iter().collect();
    all.push(&p_last);
    for i in 0..all.len() {
        for j in i + 1..all.len() {
            let g = poly_gcd(all[i], all[j])?;
            if g.degree().unwrap_or(0) > 0 {
                return Err(Error::ZeroSetsOverlap { i, j });
            }
        }
    }
    let lhs = all.iter().filter_map(|p| p.degree()).max().unwrap_or(0);
    // pairwise disjoint zero sets split the distinct count of the product
    let mut distinct: i64 = 0;
    for p in &all {
        distinct += distinct_zero_count(p)? as i64;
    }
    let rhs = n as i64 * distinct - (n as i64 * (n as i64 + 1)) / 2;
    Ok(NTheoremReport {
        holds: (lhs as i64) <= rhs,
        lhs,
        rhs,
        n,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::gaussian::GaussianRational;

    fn p(expr: &[i64]) -> Polynomial {
        Polynomial::from_coeffs(expr.iter().map(|&n| GaussianRational::from_int(n)).collect())
    }

    #[test]
    fn mason_examples() {
        // a = 1, b = z^2 - 1, c = z^2: lhs 2, rhs 3
        let r = mason_check(&p(&[1]), &p(&[-1, 0, 1])).unwrap();
        assert!(r.holds);
        assert_eq!((r.lhs, r.rhs), (2, 3));

        // a = z^4, b = 1: tight case, lhs 4, rhs 5
        let r = mason_check(&p(&[0, 0, 0, 0, 1]), &p(&[1])).unwrap();
        assert!(r.holds);
        assert_eq!((r.lhs, r.rhs), (4, 5));

        // a = z, b = -z: not relatively prime
        assert!(matches!(
            mason_check(&p(&[0, 1]), &p(&[0, -1])),
            Err(Error::NotRelativelyPrime { .. })
        ));

        // all-constant input
        assert!(matches!(mason_check(&p(&[1]), &p(&[2])), Err(Error::TrivialInput)));
    }

    #[test]
    fn n_theorem_examples() {
        // n = 1 reduces to the two-term case with rhs shifted by one:
        // (1, z^2 - 1): lhs = 2 <= 1 * 3 - 1 = 2, equality.
        let r = n_theorem_check(&[p(&[1]), p(&[-1, 0, 1])]).unwrap();
        assert!(r.holds);
        assert_eq!((r.lhs, r.rhs), (2, 2));

        // linear dependence is rejected
        assert!(matches!(
            n_theorem_check(&[p(&[1, 1]), p(&[1, 1]), p(&[0, 0, 1])]),
            Err(Error::LinearlyDependent)
        ));
    }

    #[test]
    fn n_theorem_overlap_is_rejected() {
        // (1, z/10, z^2/200): the last two share the zero 0, which violates
        // the pairwise-disjointness hypothesis.
        let f1 = Polynomial::monomial(GaussianRational::from_ratios(1, 10, 0, 1), 1);
        let f2 = Polynomial::monomial(GaussianRational::from_ratios(1, 200, 0, 1), 2);
        assert!(matches!(
            n_theorem_check(&[p(&[1]), f1, f2]),
            Err(Error::ZeroSetsOverlap { i: 1, j: 2 })
        ));
    }

    #[test]
    fn n_theorem_disjoint_triple() {
        // (1, z/10, (z - 1/2)^2 / 200): zero sets {}, {0}, {1/2} are
        // pairwise disjoint and p_3 has two fresh complex zeros, so
        // rhs = 2 * (1 + 2 + 2) - 3 = 5 >= lhs = 2.
        let f1 = Polynomial::monomial(GaussianRational::from_ratios(1, 10, 0, 1), 1);
        let shift = Polynomial::from_coeffs(vec![
            GaussianRational::from_ratios(-1, 2, 0, 1),
            GaussianRational::from_int(1),
        ]);
        let f2 = shift
            .mul(&shift)
            .scale(&GaussianRational::from_ratios(1, 200, 0, 1));
        let r = n_theorem_check(&[p(&[1]), f1, f2]).unwrap();
        assert!(r.holds);
        assert_eq!(r.lhs, 2);
        assert_eq!(r.rhs, 5);
    }

    #[test]
    fn split_count_matches_product_count() {
        // the per-factor sum used in the reports equals the distinct-zero
        // count of the full product for coprime factors
        use crate::exact::poly::distinct_zero_count;
        let a = p(&[1, 0, 0, 0, 1]); // z^4 + 1
        let b = p(&[0, 2, 1]); // z^2 + 2z
        let c = a.add(&b);
        let split = distinct_zero_count(&a).unwrap()
            + distinct_zero_count(&b).unwrap()
            + distinct_zero_count(&c).unwrap();
        let product = distinct_zero_count(&a.mul(&b).mul(&c)).unwrap();
        assert_eq!(split, product);
        let r = mason_check(&a, &b).unwrap();
        assert_eq!(r.rhs, product);
    }

    #[test]
    fn mason_agrees_with_n1_specialization() {
        let a = p(&[1, 0, 0, 1]); // z^3 + 1
        let b = p(&[0, 3, 1]); // z^2 + 3z
        let m = mason_check(&a, &b).unwrap();
        let r = n_theorem_check(&[a, b]).unwrap();
        assert_eq!(m.holds, r.holds);
        assert_eq!(m.lhs, r.lhs);
        assert_eq!(m.rhs as i64 - 1, r.rhs);
    }
}
