//! Dense univariate polynomials over arbitrary-precision integers, plus the
//! coefficient-shape predicates (unimodality, log-concavity, modes).

use std::fmt;
use std::ops::{Add, Mul, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::sturm;

/// `coeffs[k]` is the coefficient of `x^k`. The highest stored coefficient is
/// nonzero; the zero polynomial has no coefficients at all.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Polynomial {
    coeffs: Vec<BigInt>,
}

impl Polynomial {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Polynomial { coeffs }
    }

    pub fn from_i64s(cs: &[i64]) -> Self {
        Polynomial::new(cs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        Polynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Polynomial::constant(BigInt::one())
    }

    pub fn constant(c: BigInt) -> Self {
        Polynomial::new(vec![c])
    }

    /// `1 + c·x`.
    pub fn linear(c: impl Into<BigInt>) -> Self {
        Polynomial::new(vec![BigInt::one(), c.into()])
    }

    /// `(1 + x)^n`, built directly from binomial coefficients.
    pub fn one_plus_x_pow(n: usize) -> Self {
        let mut coeffs = Vec::with_capacity(n + 1);
        let mut c = BigInt::one();
        coeffs.push(c.clone());
        for k in 1..=n {
            c = c * (n - k + 1) / k;
            coeffs.push(c.clone());
        }
        Polynomial { coeffs }
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<BigInt> {
        self.coeffs
    }

    /// Coefficient of `x^k`, zero past the degree.
    pub fn coeff(&self, k: usize) -> BigInt {
        self.coeffs.get(k).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn add(&self, other: &Polynomial) -> Polynomial {
        let (long, short) = if self.coeffs.len() >= other.coeffs.len() {
            (self, other)
        } else {
            (other, self)
        };
        let mut coeffs = long.coeffs.clone();
        for (c, d) in coeffs.iter_mut().zip(&short.coeffs) {
            *c += d;
        }
        Polynomial::new(coeffs)
    }

    pub fn sub(&self, other: &Polynomial) -> Polynomial {
        self.add(&other.scale(&BigInt::from(-1)))
    }

    pub fn mul(&self, other: &Polynomial) -> Polynomial {
        if self.is_zero() || other.is_zero() {
            return Polynomial::zero();
        }
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        Polynomial::new(coeffs)
    }

    /// `x · p`.
    pub fn shift_mul_x(&self) -> Polynomial {
        if self.is_zero() {
            return Polynomial::zero();
        }
        let mut coeffs = Vec::with_capacity(self.coeffs.len() + 1);
        coeffs.push(BigInt::zero());
        coeffs.extend(self.coeffs.iter().cloned());
        Polynomial { coeffs }
    }

    /// `p^k` by repeated squaring.
    pub fn pow(&self, mut k: u32) -> Polynomial {
        let mut base = self.clone();
        let mut acc = Polynomial::one();
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.mul(&base);
            }
            k >>= 1;
            if k > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    pub fn scale(&self, c: &BigInt) -> Polynomial {
        Polynomial::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn add_constant(&self, c: &BigInt) -> Polynomial {
        let mut coeffs = self.coeffs.clone();
        if coeffs.is_empty() {
            coeffs.push(BigInt::zero());
        }
        coeffs[0] += c;
        Polynomial::new(coeffs)
    }

    pub fn derivative(&self) -> Polynomial {
        Polynomial::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c * k)
                .collect(),
        )
    }

    /// Value at an integer point.
    pub fn eval(&self, x: &BigInt) -> BigInt {
        self.coeffs
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * x + c)
    }

    fn check_nonnegative(&self) -> Result<()> {
        match self.coeffs.iter().position(Signed::is_negative) {
            Some(k) => Err(Error::NegativeCoefficient(k)),
            None => Ok(()),
        }
    }

    /// Indices attaining the maximum coefficient. Empty for the zero
    /// polynomial.
    pub fn modes(&self) -> Vec<usize> {
        let Some(max) = self.coeffs.iter().max() else {
            return Vec::new();
        };
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| *c == max)
            .map(|(k, _)| k)
            .collect()
    }

    /// Weakly rises to a peak, then weakly falls.
    pub fn is_unimodal(&self) -> Result<bool> {
        self.check_nonnegative()?;
        let c = &self.coeffs;
        let mut k = 0;
        while k + 1 < c.len() && c[k] <= c[k + 1] {
            k += 1;
        }
        while k + 1 < c.len() && c[k] >= c[k + 1] {
            k += 1;
        }
        Ok(k + 1 >= c.len())
    }

    /// `a_i² ≥ a_{i-1}·a_{i+1}` at every internal index, applied literally
    /// (internal zeros are not skipped).
    pub fn is_log_concave(&self) -> Result<bool> {
        self.check_nonnegative()?;
        Ok(self
            .coeffs
            .windows(3)
            .all(|w| &w[1] * &w[1] >= &w[0] * &w[2]))
    }

    /// Real roots counted with multiplicity.
    pub fn real_root_count(&self) -> Result<usize> {
        sturm::real_root_count(self)
    }

    pub fn all_roots_real(&self) -> Result<bool> {
        Ok(self.real_root_count()? == self.degree().ok_or(Error::ZeroPolynomial)?)
    }

    /// Full shape analysis. Requires a nonzero polynomial with nonnegative
    /// coefficients.
    pub fn shape(&self) -> Result<ShapeReport> {
        let degree = self.degree().ok_or(Error::ZeroPolynomial)?;
        let real_root_count = self.real_root_count()?;
        Ok(ShapeReport {
            degree,
            is_unimodal: self.is_unimodal()?,
            modes: self.modes(),
            is_log_concave: self.is_log_concave()?,
            real_root_count,
            all_roots_real: real_root_count == degree,
        })
    }

    /// Decimal coefficient strings, low to high.
    pub fn to_decimal_strings(&self) -> Vec<String> {
        self.coeffs.iter().map(ToString::to_string).collect()
    }

    /// Human-readable form such as `1 + 4x + 3x^2`.
    pub fn to_pretty(&self) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut out = String::new();
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if out.is_empty() {
                if c.is_negative() {
                    out.push('-');
                }
            } else {
                out.push_str(if c.is_negative() { " - " } else { " + " });
            }
            let show_coeff = k == 0 || !mag.is_one();
            if show_coeff {
                out.push_str(&mag.to_string());
            }
            match k {
                0 => {}
                1 => out.push('x'),
                _ => out.push_str(&format!("x^{k}")),
            }
        }
        out
    }
}

/// `C(n, k)`, zero when `k > n`.
pub fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut c = BigInt::one();
    for i in 0..k {
        c = c * (n - i) / (i + 1);
    }
    c
}

/// Per-polynomial shape summary.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ShapeReport {
    pub degree: usize,
    pub is_unimodal: bool,
    pub modes: Vec<usize>,
    pub is_log_concave: bool,
    pub real_root_count: usize,
    pub all_roots_real: bool,
}

/// Coefficient-list text form: `[1, 390, 660, 1120]`.
impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, c) in self.coeffs.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{c}")?;
        }
        f.write_str("]")
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Polynomial{self}")
    }
}

impl FromStr for Polynomial {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = |message: String| Error::Parse {
            line: 1,
            column: 1,
            message,
        };
        let inner = s
            .trim()
            .strip_prefix('[')
            .and_then(|t| t.strip_suffix(']'))
            .ok_or_else(|| bad("expected `[c0, c1, ...]`".into()))?;
        if inner.trim().is_empty() {
            return Ok(Polynomial::zero());
        }
        inner
            .split(',')
            .map(|tok| {
                tok.trim()
                    .parse::<BigInt>()
                    .map_err(|_| bad(format!("bad coefficient `{}`", tok.trim())))
            })
            .collect::<Result<Vec<_>>>()
            .map(Polynomial::new)
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        Polynomial::add(self, rhs)
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        Polynomial::sub(self, rhs)
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        Polynomial::mul(self, rhs)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(cs: &[i64]) -> Polynomial {
        Polynomial::from_i64s(cs)
    }

    #[test]
    fn product_display_example() {
        let a = p(&[1, 61, 147, 343]);
        let b = p(&[1, 131, 147, 343]);
        assert_eq!(
            a.mul(&b),
            p(&[1, 192, 8285, 28910, 87465, 100842, 117649])
        );
    }

    #[test]
    fn pow_and_binomials() {
        assert_eq!(p(&[1, 1]).pow(2), p(&[1, 2, 1]));
        assert_eq!(p(&[1, 1]).pow(0), Polynomial::one());
        for n in 0..20 {
            assert_eq!(Polynomial::one_plus_x_pow(n), p(&[1, 1]).pow(n as u32));
        }
    }

    #[test]
    fn zykov_arithmetic_example() {
        let sum = p(&[1, 30, 300, 1000]).add(&p(&[1, 360, 360, 120]));
        assert_eq!(
            sum.add_constant(&BigInt::from(-1)),
            p(&[1, 390, 660, 1120])
        );
    }

    #[test]
    fn normalization() {
        assert_eq!(p(&[1, 2, 0, 0]).degree(), Some(1));
        assert!(p(&[0, 0]).is_zero());
        assert_eq!(p(&[1, 2]).sub(&p(&[1, 2])), Polynomial::zero());
        assert_eq!(Polynomial::zero().shift_mul_x(), Polynomial::zero());
        assert_eq!(p(&[3, 1]).shift_mul_x(), p(&[0, 3, 1]));
        assert_eq!(p(&[1, 2, 3]).scale(&BigInt::from(0)), Polynomial::zero());
        assert_eq!(Polynomial::zero().add_constant(&BigInt::from(5)), p(&[5]));
    }

    #[test]
    fn unimodal_examples() {
        assert!(!p(&[1, 148, 147, 343]).is_unimodal().unwrap());
        assert!(p(&[1, 64, 147, 343]).is_unimodal().unwrap());
        let seven = p(&[7]);
        assert!(seven.is_unimodal().unwrap());
        assert_eq!(seven.modes(), vec![0]);
        let flat = p(&[1, 1, 1]);
        assert!(flat.is_unimodal().unwrap());
        assert_eq!(flat.modes(), vec![0, 1, 2]);
        assert!(!p(&[2, 1, 2]).is_unimodal().unwrap());
        assert!(p(&[]).is_unimodal().unwrap());
        assert_eq!(
            p(&[1, -1]).is_unimodal(),
            Err(Error::NegativeCoefficient(1))
        );
    }

    #[test]
    fn log_concave_examples() {
        assert!(p(&[1, 63, 147, 343]).is_log_concave().unwrap());
        assert!(!p(&[1, 64, 147, 343]).is_log_concave().unwrap());
        assert!(!p(&[1, 390, 660, 1120]).is_log_concave().unwrap());
        // internal zero between positives fails literally
        assert!(!p(&[1, 0, 1]).is_log_concave().unwrap());
        assert_eq!(
            p(&[1, -2, 1]).is_log_concave(),
            Err(Error::NegativeCoefficient(1))
        );
    }

    #[test]
    fn text_forms() {
        let h = p(&[1, 390, 660, 1120]);
        assert_eq!(h.to_string(), "[1, 390, 660, 1120]");
        assert_eq!("[1, 390, 660, 1120]".parse::<Polynomial>().unwrap(), h);
        assert_eq!("[]".parse::<Polynomial>().unwrap(), Polynomial::zero());
        assert!("1, 2".parse::<Polynomial>().is_err());
        assert_eq!(p(&[1, 4, 3]).to_pretty(), "1 + 4x + 3x^2");
        assert_eq!(p(&[0, -1, 0, 1]).to_pretty(), "-x + x^3");
    }

    #[test]
    fn shape_report_for_s3() {
        let s3 = p(&[1, 8, 21, 23, 9]);
        let r = s3.shape().unwrap();
        assert_eq!(r.degree, 4);
        assert!(r.is_unimodal && r.is_log_concave);
        assert_eq!(r.modes, vec![3]);
        assert!(!r.all_roots_real);
        assert_eq!(Polynomial::zero().shape(), Err(Error::ZeroPolynomial));
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial(5, 2), BigInt::from(10));
        assert_eq!(binomial(3, 4), BigInt::zero());
        assert_eq!(binomial(0, 0), BigInt::one());
        assert_eq!(binomial(64, 32), "1832624140942590534".parse::<BigInt>().unwrap());
    }

    #[test]
    fn derivative_and_eval() {
        let q = p(&[1, 4, 3]);
        assert_eq!(q.derivative(), p(&[4, 6]));
        assert_eq!(q.eval(&BigInt::from(-1)), BigInt::from(0));
        assert_eq!(q.eval(&BigInt::from(2)), BigInt::from(21));
    }
}
