//! Exact univariate polynomials over Q(i): ring arithmetic, subresultant
//! gcd, squarefree structure, and Wronskian determinants.

use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::gaussian::GaussianRational;
use crate::error::{Error, Result};

/// Coefficients indexed by power; the invariant is that `coeffs` is empty
/// (the zero polynomial) or ends with a nonzero leading coefficient.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Polynomial {
    coeffs: Vec<GaussianRational>,
}

impl Polynomial {
    pub fn from_coeffs(mut coeffs: Vec<GaussianRational>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(GaussianRational::one())
    }

    pub fn constant(c: GaussianRational) -> Self {
        Self::from_coeffs(vec![c])
    }

    /// c * z^k
    pub fn monomial(c: GaussianRational, k: usize) -> Self {
        let mut coeffs = vec![GaussianRational::zero(); k + 1];
        coeffs[k] = c;
        Self::from_coeffs(coeffs)
    }

    /// z - r
    pub fn linear_from_root(r: &GaussianRational) -> Self {
        Self::from_coeffs(vec![-r, GaussianRational::one()])
    }

    pub fn coeffs(&self) -> &[GaussianRational] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> GaussianRational {
        self.coeffs.get(k).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    /// None for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&GaussianRational> {
        self.coeffs.last()
    }

    pub fn eval(&self, z: &GaussianRational) -> GaussianRational {
        let mut acc = GaussianRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * z) + c;
        }
        acc
    }

    pub fn derivative(&self) -> Self {
        if self.coeffs.len() <= 1 {
            return Self::zero();
        }
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(k, c)| &GaussianRational::from_int(k as i64) * c)
            .collect();
        Self::from_coeffs(coeffs)
    }

    pub fn scale(&self, c: &GaussianRational) -> Self {
        Self::from_coeffs(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn neg(&self) -> Self {
        Self {
            coeffs: self.coeffs.iter().map(|a| -a).collect(),
        }
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n).map(|k| &self.coeff(k) + &rhs.coeff(k)).collect();
        Self::from_coeffs(coeffs)
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.neg())
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        if self.is_zero() || rhs.is_zero() {
            return Self::zero();
        }
        let mut coeffs =
            vec![GaussianRational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] = &coeffs[i + j] + &(a * b);
            }
        }
        Self::from_coeffs(coeffs)
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    /// Euclidean division: self = q * d + r with deg r < deg d.
    pub fn divrem(&self, d: &Self) -> (Self, Self) {
        assert!(!d.is_zero(), "division by the zero polynomial");
        let dd = d.degree().unwrap();
        if self.degree().map_or(true, |n| n < dd) {
            return (Self::zero(), self.clone());
        }
        let lead_inv = d.leading().unwrap().inv();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![GaussianRational::zero(); rem.len() - dd];
        for k in (dd..rem.len()).rev() {
            if rem[k].is_zero() {
                continue;
            }
            let q = &rem[k] * &lead_inv;
            for j in 0..dd {
                rem[k - dd + j] = &rem[k - dd + j] - &(&q * &d.coeffs[j]);
            }
            rem[k] = GaussianRational::zero();
            quot[k - dd] = q;
        }
        (Self::from_coeffs(quot), Self::from_coeffs(rem))
    }

    /// Division that must be exact; the nonzero remainder case is a logic
    /// error in the caller.
    pub fn exact_div(&self, d: &Self) -> Self {
        let (q, r) = self.divrem(d);
        assert!(r.is_zero(), "inexact polynomial division");
        q
    }

    pub fn monic(&self) -> Self {
        match self.leading() {
            None => Self::zero(),
            Some(lc) => self.scale(&lc.inv()),
        }
    }

    pub fn to_complex_coeffs(&self) -> Vec<Complex64> {
        self.coeffs.iter().map(|c| c.to_complex64()).collect()
    }

    /// Clear denominators: returns `self * s` with integer (Gaussian-integer)
    /// coefficients, where `s` is the lcm of all coefficient denominators.
    fn cleared(&self) -> Self {
        let mut l = BigInt::one();
        for c in &self.coeffs {
            l = lcm(&l, c.re.denom());
            l = lcm(&l, c.im.denom());
        }
        self.scale(&GaussianRational::new(
            BigRational::from_integer(l),
            BigRational::zero(),
        ))
    }
}

fn lcm(a: &BigInt, b: &BigInt) -> BigInt {
    if a.is_zero() || b.is_zero() {
        return BigInt::one();
    }
    (a * b / gcd_int(a, b)).abs()
}

fn gcd_int(a: &BigInt, b: &BigInt) -> BigInt {
    let mut a = a.abs();
    let mut b = b.abs();
    while !b.is_zero() {
        let r = &a % &b;
        a = b;
        b = r;
    }
    a
}

/// Monic greatest common divisor over Q(i). Denominators are cleared once
/// and the remainder sequence runs fraction-free over the Gaussian
/// integers, stripping the Gaussian-integer content of every
/// pseudo-remainder (the primitive PRS); that keeps coefficients near
/// their minimal size instead of exploding.
pub fn poly_gcd(p: &Polynomial, q: &Polynomial) -> Result<Polynomial> {
    if p.is_zero() && q.is_zero() {
        return Err(Error::GcdOfZeros);
    }
    if p.is_zero() {
        return Ok(q.monic());
    }
    if q.is_zero() {
        return Ok(p.monic());
    }
    if p.is_constant() || q.is_constant() {
        return Ok(Polynomial::one());
    }

    let (a, b) = if p.degree() >= q.degree() {
        (p, q)
    } else {
        (q, p)
    };
    let mut a = zi::from_cleared(&a.cleared());
    let mut b = zi::from_cleared(&b.cleared());
    zi::strip_content(&mut a);
    zi::strip_content(&mut b);
    loop {
        let mut r = zi::pseudo_rem(&a, &b);
        if r.is_empty() {
            return Ok(zi::to_monic_polynomial(&b));
        }
        zi::strip_content(&mut r);
        a = b;
        b = r;
        if b.len() == 1 {
            return Ok(Polynomial::one());
        }
    }
}

/// Scratch arithmetic over Z[i] for the gcd kernel: plain BigInt pairs,
/// no per-operation rational normalization.
mod zi {
    use num_bigint::BigInt;
    use num_integer::Integer;
    use num_rational::BigRational;
    use num_traits::{One, Zero};

    use super::Polynomial;
    use crate::exact::gaussian::GaussianRational;

    pub type Gint = (BigInt, BigInt);

    fn is_zero(a: &Gint) -> bool {
        a.0.is_zero() && a.1.is_zero()
    }

    fn mul(a: &Gint, b: &Gint) -> Gint {
        (&a.0 * &b.0 - &a.1 * &b.1, &a.0 * &b.1 + &a.1 * &b.0)
    }

    fn sub(a: &Gint, b: &Gint) -> Gint {
        (&a.0 - &b.0, &a.1 - &b.1)
    }

    fn norm(a: &Gint) -> BigInt {
        &a.0 * &a.0 + &a.1 * &a.1
    }

    /// Nearest-integer rounding of x / n for n > 0.
    fn round_div(x: &BigInt, n: &BigInt) -> BigInt {
        let doubled: BigInt = x * 2 + n;
        doubled.div_floor(&(n * 2))
    }

    /// Rounded Gaussian division: the quotient whose remainder has norm
    /// strictly below |b|^2, which drives the Euclidean algorithm.
    fn div_round(a: &Gint, b: &Gint) -> Gint {
        let n = norm(b);
        let re = &a.0 * &b.0 + &a.1 * &b.1;
        let im = &a.1 * &b.0 - &a.0 * &b.1;
        (round_div(&re, &n), round_div(&im, &n))
    }

    /// Exact Gaussian division (caller guarantees divisibility).
    fn div_exact(a: &Gint, b: &Gint) -> Gint {
        let n = norm(b);
        let re = &a.0 * &b.0 + &a.1 * &b.1;
        let im = &a.1 * &b.0 - &a.0 * &b.1;
        debug_assert!((&re % &n).is_zero() && (&im % &n).is_zero());
        (re / &n, im / &n)
    }

    fn gcd(a: &Gint, b: &Gint) -> Gint {
        let mut a = a.clone();
        let mut b = b.clone();
        while !is_zero(&b) {
            let q = div_round(&a, &b);
            let r = sub(&a, &mul(&q, &b));
            a = b;
            b = r;
        }
        a
    }

    /// Coefficients indexed by power, trailing zeros trimmed; the empty
    /// vector is the zero polynomial.
    pub type ZiPoly = Vec<Gint>;

    /// Convert a denominator-cleared polynomial (integer-valued rational
    /// coefficients) into the scratch representation.
    pub fn from_cleared(p: &Polynomial) -> ZiPoly {
        p.coeffs()
            .iter()
            .map(|c| {
                debug_assert!(c.re.denom().is_one() && c.im.denom().is_one());
                (c.re.numer().clone(), c.im.numer().clone())
            })
            .collect()
    }

    fn trim(p: &mut ZiPoly) {
        while p.last().is_some_and(is_zero) {
            p.pop();
        }
    }

    /// Divide out the Gaussian-integer content.
    pub fn strip_content(p: &mut ZiPoly) {
        trim(p);
        let mut c: Option<Gint> = None;
        for coeff in p.iter() {
            if is_zero(coeff) {
                continue;
            }
            c = Some(match c {
                None => coeff.clone(),
                Some(acc) => gcd(&acc, coeff),
            });
            if let Some(acc) = &c {
                if norm(acc).is_one() {
                    return;
                }
            }
        }
        if let Some(content) = c {
            for coeff in p.iter_mut() {
                *coeff = div_exact(coeff, &content);
            }
        }
    }

    /// prem(f, g) = lc(g)^(deg f - deg g + 1) * f mod g, trailing-trimmed.
    pub fn pseudo_rem(f: &ZiPoly, g: &ZiPoly) -> ZiPoly {
        let dg = g.len() - 1;
        let lc = g.last().unwrap().clone();
        let mut r = f.clone();
        while r.len() > dg {
            let k = r.len() - 1;
            let top = r.last().unwrap().clone();
            for coeff in r.iter_mut() {
                *coeff = mul(coeff, &lc);
            }
            for j in 0..dg {
                r[k - dg + j] = sub(&r[k - dg + j], &mul(&top, &g[j]));
            }
            r.pop();
            trim(&mut r);
            if r.is_empty() {
                break;
            }
        }
        r
    }

    pub fn to_monic_polynomial(p: &ZiPoly) -> Polynomial {
        let coeffs = p
            .iter()
            .map(|(re, im)| {
                GaussianRational::new(
                    BigRational::from_integer(re.clone()),
                    BigRational::from_integer(im.clone()),
                )
            })
            .collect();
        Polynomial::from_coeffs(coeffs).monic()
    }
}

/// rad(p) = p / gcd(p, p'), normalized monic; its degree equals the number
/// of distinct complex zeros of p.
pub fn squarefree_part(p: &Polynomial) -> Result<Polynomial> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if p.is_constant() {
        return Ok(Polynomial::one());
    }
    let g = poly_gcd(p, &p.derivative())?;
    Ok(p.exact_div(&g).monic())
}

/// Number of distinct complex zeros of p.
pub fn distinct_zero_count(p: &Polynomial) -> Result<usize> {
    Ok(squarefree_part(p)?.degree().unwrap_or(0))
}

/// Yun's squarefree decomposition: returns pairs `(factor, multiplicity)`
/// with the factors squarefree, pairwise coprime, monic, and
/// `p = lc * prod factor^multiplicity`.
pub fn squarefree_decomposition(p: &Polynomial) -> Result<Vec<(Polynomial, usize)>> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if p.is_constant() {
        return Ok(Vec::new());
    }
    let p = p.monic();
    let dp = p.derivative();
    let g = poly_gcd(&p, &dp)?;
    let mut c = p.exact_div(&g);
    let mut d = dp.exact_div(&g).sub(&c.derivative());
    let mut out = Vec::new();
    let mut i = 1usize;
    while !c.is_constant() {
        let a = poly_gcd(&c, &d)?;
        if a.degree().unwrap_or(0) > 0 {
            out.push((a.clone(), i));
        }
        c = c.exact_div(&a);
        d = d.exact_div(&a).sub(&c.derivative());
        i += 1;
    }
    Ok(out)
}

/// Exact Wronskian of the given polynomials: the determinant of the
/// (n+1) x (n+1) matrix whose rows are successive derivatives. Cofactor
/// expansion for small systems, Bareiss fraction-free elimination above.
pub fn wronskian_poly(fs: &[Polynomial]) -> Polynomial {
    assert!(!fs.is_empty(), "wronskian of an empty list");
    let k = fs.len();
    let mut matrix: Vec<Vec<Polynomial>> = Vec::with_capacity(k);
    let mut row: Vec<Polynomial> = fs.to_vec();
    matrix.push(row.clone());
    for _ in 1..k {
        row = row.iter().map(|f| f.derivative()).collect();
        matrix.push(row.clone());
    }
    determinant(matrix)
}

/// Derivative of the Wronskian by the bumped-last-row determinant: rows
/// are the derivative orders 0..n-1 and then n+1. Agrees exactly with
/// `wronskian_poly(fs).derivative()`; the two routes cross-check each
/// other in the test suite.
pub fn wronskian_derivative_poly(fs: &[Polynomial]) -> Polynomial {
    assert!(!fs.is_empty(), "wronskian of an empty list");
    let k = fs.len();
    if k == 1 {
        return fs[0].derivative();
    }
    let mut matrix: Vec<Vec<Polynomial>> = Vec::with_capacity(k);
    let mut row: Vec<Polynomial> = fs.to_vec();
    for r in 0..k {
        if r < k - 1 {
            matrix.push(row.clone());
        }
        row = row.iter().map(|f| f.derivative()).collect();
    }
    // row is now the k-th derivative (order n+1 with n = k-1)
    matrix.push(row);
    determinant(matrix)
}

fn determinant(m: Vec<Vec<Polynomial>>) -> Polynomial {
    let k = m.len();
    if k <= 5 {
        cofactor_det(&m)
    } else {
        bareiss_det(m)
    }
}

fn cofactor_det(m: &[Vec<Polynomial>]) -> Polynomial {
    let k = m.len();
    if k == 1 {
        return m[0][0].clone();
    }
    let mut acc = Polynomial::zero();
    for j in 0..k {
        if m[0][j].is_zero() {
            continue;
        }
        let minor: Vec<Vec<Polynomial>> = m[1..]
            .iter()
            .map(|row| {
                row.iter()
                    .enumerate()
                    .filter(|(c, _)| *c != j)
                    .map(|(_, v)| v.clone())
                    .collect()
            })
            .collect();
        let term = m[0][j].mul(&cofactor_det(&minor));
        acc = if j % 2 == 0 { acc.add(&term) } else { acc.sub(&term) };
    }
    acc
}

/// Bareiss elimination over the polynomial ring; every division is exact.
fn bareiss_det(mut m: Vec<Vec<Polynomial>>) -> Polynomial {
    let k = m.len();
    let mut sign = false;
    let mut prev = Polynomial::one();
    for col in 0..k - 1 {
        if m[col][col].is_zero() {
            let Some(pivot) = (col + 1..k).find(|&r| !m[r][col].is_zero()) else {
                return Polynomial::zero();
            };
            m.swap(col, pivot);
            sign = !sign;
        }
        for i in col + 1..k {
            for j in col + 1..k {
                let num = m[col][col].mul(&m[i][j]).sub(&m[i][col].mul(&m[col][j]));
                m[i][j] = num.exact_div(&prev);
            }
            m[i][col] = Polynomial::zero();
        }
        prev = m[col][col].clone();
    }
    let det = m[k - 1][k - 1].clone();
    if sign {
        det.neg()
    } else {
        det
    }
}
