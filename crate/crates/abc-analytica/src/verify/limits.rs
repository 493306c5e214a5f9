//! The limiting argument that recovers the global polynomial bounds:
//! kappa over growing disks tends to deg W, mu tends to 1.

use serde::Serialize;

use crate::domain::Domain;
use crate::error::{Error, Result};
use crate::exact::Polynomial;
use crate::func::AnalyticFn;
use crate::functionals::{kappa_functional, mu_functional};
use crate::numeric::quadrature::QuadratureSpec;
use crate::numeric::poly_roots;
use crate::verify::system::ROOT_SWEEPS;

#[derive(Debug, Clone, Serialize)]
pub struct LimitRow {
    pub r: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub kappa: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub mu: Option<f64>,
    pub skipped: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

#[derive(Debug, Clone, Serialize)]
pub struct LimitTable {
    pub degree: usize,
    pub rows: Vec<LimitRow>,
}

impl LimitTable {
    pub fn to_csv(&self) -> String {
        let mut out = String::from("R,kappa,mu,skipped\n");
        for row in &self.rows {
            out.push_str(&format!(
                "{},{},{},{}\n",
                row.r,
                row.kappa.map_or(String::new(), |v| format!("{v:.12}")),
                row.mu.map_or(String::new(), |v| format!("{v:.12}")),
                row.skipped
            ));
        }
        out
    }
}

/// Evaluate kappa and mu of the polynomial W on the disks R*D over the
/// given radius schedule. Radii with a zero of W on the circle are skipped
/// with a note. The largest non-skipped radius must be consistent with the
/// limits kappa -> deg W and mu -> 1 at the O(1/R) scale.
pub fn limit_demo(
    w: &Polynomial,
    radii: &[f64],
    spec: &QuadratureSpec,
) -> Result<LimitTable> {
    if w.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if radii.is_empty() {
        return Err(Error::InvalidParameter("empty radius schedule".into()));
    }
    let degree = w.degree().unwrap();
    let w_fn = AnalyticFn::from_exact(w);

    let root_moduli: Vec<f64> = if degree == 0 {
        Vec::new()
    } else {
        poly_roots(&w.to_complex_coeffs(), ROOT_SWEEPS)?
            .iter()
            .map(|r| r.norm())
            .collect()
    };

    let mut rows = Vec::with_capacity(radii.len());
    for &r in radii {
        if !(r > 0.0) || !r.is_finite() {
            return Err(Error::InvalidParameter(format!("invalid radius {r}")));
        }
        if root_moduli.iter().any(|&m| (m - r).abs() <= 1e-8 * r) {
            rows.push(LimitRow {
                r,
                kappa: None,
                mu: None,
                skipped: true,
                note: Some("W has a zero on this circle; radius skipped".into()),
            });
            continue;
        }
        let domain = Domain::centered(r)?;
        let kappa = kappa_functional(&w_fn, &domain, spec)?;
        let mu = mu_functional(&w_fn, &domain, spec)?;
        rows.push(LimitRow {
            r,
            kappa: Some(kappa),
            mu: Some(mu),
            skipped: false,
            note: None,
        });
    }

    let last = rows
        .iter()
        .rev()
        .find(|row| !row.skipped)
        .ok_or_else(|| Error::InvalidParameter("every scheduled radius was skipped".into()))?;
    let r_max = last.r;
    let kappa_last = last.kappa.unwrap();
    let mu_last = last.mu.unwrap();
    let m = degree as f64;
    if (kappa_last - m).abs() > 5.0 * m / r_max + 1e-9 {
        return Err(Error::AsymptoticsViolation(format!(
            "kappa({r_max}) = {kappa_last} is not within {} of {m}",
            5.0 * m / r_max
        )));
    }
    let coeff_scale = if degree == 0 {
        0.0
    } else {
        let lead = w.leading().unwrap().to_complex64().norm();
        (0..degree)
            .map(|k| w.coeff(k).to_complex64().norm() / lead)
            .fold(0.0, f64::max)
    };
    if mu_last > 1.0 + 5.0 * coeff_scale / r_max + 1e-9 {
        return Err(Error::AsymptoticsViolation(format!(
            "mu({r_max}) = {mu_last} exceeds 1 + {}",
            5.0 * coeff_scale / r_max
        )));
    }

    Ok(LimitTable { degree, rows })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::GaussianRational;

    fn p(coeffs: &[i64]) -> Polynomial {
        Polynomial::from_coeffs(coeffs.iter().map(|&n| GaussianRational::from_int(n)).collect())
    }

    fn spec() -> QuadratureSpec {
        QuadratureSpec::default()
    }

    #[test]
    fn cubic_limit_values() {
        // W = z^3 + 1 at R = 10: kappa = 3R^3/(R^3 - 1), mu = (R^3+1)/(R^3-1)
        let t = limit_demo(&p(&[1, 0, 0, 1]), &[10.0], &spec()).unwrap();
        let row = &t.rows[0];
        assert!((row.kappa.unwrap() - 3000.0 / 999.0).abs() < 1e-6);
        assert!((row.mu.unwrap() - 1001.0 / 999.0).abs() < 1e-9);
    }

    #[test]
    fn constant_w() {
        let t = limit_demo(&p(&[5]), &[2.0, 10.0], &spec()).unwrap();
        for row in &t.rows {
            assert_eq!(row.kappa.unwrap(), 0.0);
            assert!((row.mu.unwrap() - 1.0).abs() < 1e-12);
        }
    }

    #[test]
    fn monomial_is_exact_at_every_radius() {
        // W = 5 z^2: kappa = 2, mu = 1 for all R
        let t = limit_demo(&p(&[0, 0, 5]), &[2.0, 5.0, 10.0], &spec()).unwrap();
        for row in &t.rows {
            assert!((row.kappa.unwrap() - 2.0).abs() < 1e-10);
            assert!((row.mu.unwrap() - 1.0).abs() < 1e-12);
        }
    }

    #[test]
    fn zero_on_circle_is_skipped() {
        // z^3 + 1 has roots on |z| = 1
        let t = limit_demo(&p(&[1, 0, 0, 1]), &[1.0, 10.0], &spec()).unwrap();
        assert!(t.rows[0].skipped);
        assert!(!t.rows[1].skipped);
    }

    #[test]
    fn monotone_approach_on_schedule() {
        let radii = [2.0, 5.0, 10.0, 50.0, 100.0];
        let t = limit_demo(&p(&[1, 0, 0, 1]), &radii, &spec()).unwrap();
        let kappas: Vec<f64> = t.rows.iter().map(|r| r.kappa.unwrap()).collect();
        let mus: Vec<f64> = t.rows.iter().map(|r| r.mu.unwrap()).collect();
        for w in kappas.windows(2) {
            assert!(w[1] <= w[0] + 1e-12);
        }
        for w in mus.windows(2) {
            assert!(w[1] <= w[0] + 1e-12);
        }
        // tail consistency: |kappa(R) - m| * R stays bounded
        for row in &t.rows {
            let dev = (row.kappa.unwrap() - 3.0).abs() * row.r;
            assert!(dev < 5.0, "deviation * R = {dev}");
        }
    }
}
