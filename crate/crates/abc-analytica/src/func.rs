//! Evaluators for the analytic functions the functionals act on: exact
//! polynomials pushed to f64 coefficients, or truncated power series.
//! Derivatives are always taken analytically on the coefficients, never by
//! finite differences.

use num_complex::Complex64;

use crate::exact::Polynomial;
use crate::numeric::PowerSeries;

#[derive(Debug, Clone)]
pub enum AnalyticFn {
    /// Polynomial in the global coordinate, coefficients indexed by power.
    Poly(Vec<Complex64>),
    /// Truncated power series about 0, evaluated as its polynomial
    /// truncation.
    Series(PowerSeries),
}

impl AnalyticFn {
    pub fn from_exact(p: &Polynomial) -> Self {
        AnalyticFn::Poly(p.to_complex_coeffs())
    }

    pub fn constant(c: Complex64) -> Self {
        AnalyticFn::Poly(vec![c])
    }

    pub fn coeffs(&self) -> &[Complex64] {
        match self {
            AnalyticFn::Poly(c) => c,
            AnalyticFn::Series(s) => s.coeffs(),
        }
    }

    pub fn eval(&self, z: Complex64) -> Complex64 {
        let mut acc = Complex64::ZERO;
        for c in self.coeffs().iter().rev() {
            acc = acc * z + c;
        }
        acc
    }

    pub fn derivative(&self) -> AnalyticFn {
        let d: Vec<Complex64> = self
            .coeffs()
            .iter()
            .enumerate()
            .skip(1)
            .map(|(k, c)| c * k as f64)
            .collect();
        let d = if d.is_empty() { vec![Complex64::ZERO] } else { d };
        match self {
            AnalyticFn::Poly(_) => AnalyticFn::Poly(d),
            AnalyticFn::Series(_) => AnalyticFn::Series(PowerSeries::from_coeffs(d)),
        }
    }

    pub fn is_polynomial(&self) -> bool {
        matches!(self, AnalyticFn::Poly(_))
    }

    /// Coefficients as a power series of at least the requested order.
    pub fn to_series(&self, order: usize) -> PowerSeries {
        let mut coeffs = self.coeffs().to_vec();
        if coeffs.len() < order + 1 {
            coeffs.resize(order + 1, Complex64::ZERO);
        }
        PowerSeries::from_coeffs(coeffs)
    }
}
