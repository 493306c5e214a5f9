//! Truncated power series over Complex64.
//!
//! Arithmetic is closed at the truncation order: coefficients beyond the
//! order are dropped. That drop is the one systematic error source in the
//! series path; callers that need a tail estimate derive it from the
//! geometric decay of the coefficients (see `blaschke::TaylorExpansion`).

use num_complex::Complex64;

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq)]
pub struct PowerSeries {
    coeffs: Vec<Complex64>,
}

impl PowerSeries {
    /// Build from coefficients; `coeffs[k]` multiplies z^k. The truncation
    /// order is `coeffs.len() - 1`.
    pub fn from_coeffs(coeffs: Vec<Complex64>) -> Self {
        assert!(!coeffs.is_empty(), "series needs at least a constant term");
        Self { coeffs }
    }

    pub fn constant(c: Complex64, order: usize) -> Self {
        let mut coeffs = vec![Complex64::ZERO; order + 1];
        coeffs[0] = c;
        Self { coeffs }
    }

    pub fn monomial(c: Complex64, k: usize, order: usize) -> Self {
        assert!(k <= order);
        let mut coeffs = vec![Complex64::ZERO; order + 1];
        coeffs[k] = c;
        Self { coeffs }
    }

    /// Zero-pad or drop coefficients to reach the given order.
    pub fn resized(&self, order: usize) -> Self {
        let mut coeffs = self.coeffs.clone();
        coeffs.resize(order + 1, Complex64::ZERO);
        Self { coeffs }
    }

    pub fn truncation_order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[Complex64] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> Complex64 {
        self.coeffs.get(k).copied().unwrap_or(Complex64::ZERO)
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let order = self.truncation_order().min(rhs.truncation_order());
        let coeffs = (0..=order).map(|k| self.coeffs[k] + rhs.coeffs[k]).collect();
        Self { coeffs }
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        let order = self.truncation_order().min(rhs.truncation_order());
        let coeffs = (0..=order).map(|k| self.coeffs[k] - rhs.coeffs[k]).collect();
        Self { coeffs }
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        let order = self.truncation_order().min(rhs.truncation_order());
        let mut coeffs = vec![Complex64::ZERO; order + 1];
        for (i, a) in self.coeffs.iter().enumerate().take(order + 1) {
            if a.norm_sqr() == 0.0 {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate().take(order + 1 - i) {
                coeffs[i + j] += a * b;
            }
        }
        Self { coeffs }
    }

    /// Series division; the divisor must be invertible at 0.
    pub fn div(&self, rhs: &Self) -> Result<Self> {
        if rhs.coeffs[0].norm() == 0.0 {
            return Err(Error::NonInvertibleAt0);
        }
        let order = self.truncation_order().min(rhs.truncation_order());
        let inv0 = 1.0 / rhs.coeffs[0];
        let mut coeffs = vec![Complex64::ZERO; order + 1];
        for k in 0..=order {
            let mut acc = self.coeff(k);
            for j in 0..k {
                acc -= coeffs[j] * rhs.coeff(k - j);
            }
            coeffs[k] = acc * inv0;
        }
        Ok(Self { coeffs })
    }

    /// Termwise derivative; the order drops by one.
    pub fn derivative(&self) -> Self {
        if self.coeffs.len() == 1 {
            return Self::constant(Complex64::ZERO, 0);
        }
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(k, c)| c * k as f64)
            .collect();
        Self { coeffs }
    }

    pub fn eval(&self, z: Complex64) -> Complex64 {
        let mut acc = Complex64::ZERO;
        for c in self.coeffs.iter().rev() {
            acc = acc * z + c;
        }
        acc
    }

    pub fn max_coeff_norm(&self) -> f64 {
        self.coeffs.iter().map(|c| c.norm()).fold(0.0, f64::max)
    }

    /// Lowest index with |coefficient| above `tol`, if any.
    pub fn valuation(&self, tol: f64) -> Option<usize> {
        self.coeffs.iter().position(|c| c.norm() > tol)
    }
}
