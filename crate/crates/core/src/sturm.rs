//! Exact real-root counting over the rationals.
//!
//! A polynomial is split into square-free factors by Yun's algorithm, then
//! the distinct real roots of each factor are counted with a Sturm chain.
//! The count with multiplicity is `Σ i · roots(f_i)` over `p = Π f_i^i`.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::poly::Polynomial;

/// Rational polynomial stored low-to-high without trailing zeros.
#[derive(Clone, Debug, PartialEq, Eq)]
struct QPoly(Vec<BigRational>);

impl QPoly {
    fn from_int(p: &Polynomial) -> Self {
        QPoly(p.coeffs().iter().cloned().map(BigRational::from_integer).collect()).trimmed()
    }

    fn trimmed(mut self) -> Self {
        while self.0.last().is_some_and(Zero::is_zero) {
            self.0.pop();
        }
        self
    }

    fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    fn degree(&self) -> usize {
        self.0.len().saturating_sub(1)
    }

    fn lead(&self) -> &BigRational {
        self.0.last().expect("nonzero polynomial")
    }

    fn derivative(&self) -> Self {
        QPoly(
            self.0
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c * BigRational::from_integer(BigInt::from(k)))
                .collect(),
        )
        .trimmed()
    }

    fn scale(&self, c: &BigRational) -> Self {
        QPoly(self.0.iter().map(|a| a * c).collect()).trimmed()
    }

    fn sub(&self, other: &Self) -> Self {
        let n = self.0.len().max(other.0.len());
        let zero = BigRational::zero();
        QPoly(
            (0..n)
                .map(|i| self.0.get(i).unwrap_or(&zero) - other.0.get(i).unwrap_or(&zero))
                .collect(),
        )
        .trimmed()
    }

    /// Quotient and remainder of `self / d`.
    fn div_rem(&self, d: &Self) -> (Self, Self) {
        assert!(!d.is_zero(), "division by zero polynomial");
        let mut rem = self.0.clone();
        let dd = d.degree();
        if self.is_zero() || self.degree() < dd {
            return (QPoly(Vec::new()), self.clone());
        }
        let mut quot = vec![BigRational::zero(); self.degree() - dd + 1];
        let lead = d.lead().clone();
        for k in (0..quot.len()).rev() {
            let c = &rem[k + dd] / &lead;
            if !c.is_zero() {
                for (i, dc) in d.0.iter().enumerate() {
                    rem[k + i] -= &c * dc;
                }
            }
            quot[k] = c;
        }
        rem.truncate(dd);
        (QPoly(quot).trimmed(), QPoly(rem).trimmed())
    }

    /// Rescaled so the leading coefficient is `+1`.
    fn monic(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        self.scale(&self.lead().recip())
    }

    fn gcd(&self, other: &Self) -> Self {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.div_rem(&b).1;
            a = b;
            b = r;
        }
        a.monic()
    }

    fn exact_div(&self, d: &Self) -> Self {
        let (q, r) = self.div_rem(d);
        debug_assert!(r.is_zero(), "inexact division");
        q
    }
}

/// Square-free factors `f_i` with multiplicities `i`, each of positive
/// degree (Yun's algorithm).
fn square_free_decomposition(p: &QPoly) -> Vec<(QPoly, usize)> {
    let mut out = Vec::new();
    if p.degree() == 0 {
        return out;
    }
    let dp = p.derivative();
    let a0 = p.gcd(&dp);
    let mut b = p.exact_div(&a0);
    let mut c = dp.exact_div(&a0);
    let mut d = c.sub(&b.derivative());
    let mut i = 1;
    while b.degree() > 0 {
        let a = b.gcd(&d);
        b = b.exact_div(&a);
        c = d.exact_div(&a);
        d = c.sub(&b.derivative());
        if a.degree() > 0 {
            out.push((a, i));
        }
        i += 1;
    }
    out
}

fn sign_changes(signs: impl Iterator<Item = i8>) -> usize {
    let mut last = 0i8;
    let mut changes = 0;
    for s in signs.filter(|&s| s != 0) {
        if last != 0 && s != last {
            changes += 1;
        }
        last = s;
    }
    changes
}

/// Distinct real roots of a square-free polynomial, `V(-∞) - V(+∞)` over its
/// Sturm chain.
fn distinct_real_roots(f: &QPoly) -> usize {
    let mut chain = vec![f.monic(), f.derivative().monic()];
    loop {
        let n = chain.len();
        let r = chain[n - 2].div_rem(&chain[n - 1]).1;
        if r.is_zero() {
            break;
        }
        // -rem, rescaled by a positive factor to keep entries small.
        let neg = r.scale(&(-r.lead().abs().recip()));
        chain.push(neg);
    }
    let sign = |c: &BigRational| if c.is_positive() { 1i8 } else { -1 };
    let at_pos_inf = chain.iter().map(|q| sign(q.lead()));
    let at_neg_inf = chain.iter().map(|q| {
        let s = sign(q.lead());
        if q.degree() % 2 == 1 {
            -s
        } else {
            s
        }
    });
    sign_changes(at_neg_inf) - sign_changes(at_pos_inf)
}

/// Number of real roots of `p`, counted with multiplicity.
pub fn real_root_count(p: &Polynomial) -> Result<usize> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let q = QPoly::from_int(p);
    Ok(square_free_decomposition(&q)
        .iter()
        .map(|(f, mult)| mult * distinct_real_roots(f))
        .sum())
}

/// Square-free factorization of an integer polynomial as monic rational
/// factors, exposed for diagnostics.
pub fn square_free_factors(p: &Polynomial) -> Result<Vec<(Vec<BigRational>, usize)>> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    Ok(square_free_decomposition(&QPoly::from_int(p))
        .into_iter()
        .map(|(f, m)| (f.0, m))
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(cs: &[i64]) -> Polynomial {
        Polynomial::from_i64s(cs)
    }

    #[test]
    fn double_root() {
        assert_eq!(real_root_count(&p(&[1, 2, 1])).unwrap(), 2);
        let f = square_free_factors(&p(&[1, 2, 1])).unwrap();
        assert_eq!(f.len(), 1);
        assert_eq!(f[0].1, 2);
    }

    #[test]
    fn named_examples() {
        // S_3 = T_2
        assert!(!p(&[1, 8, 21, 23, 9]).all_roots_real().unwrap());
        // K_{1,3}
        assert_eq!(real_root_count(&p(&[1, 4, 3, 1])).unwrap(), 1);
        // T_1 = (1+x)^2 (1+2x) (1+6x+7x^2)
        let t1 = p(&[1, 1])
            .pow(2)
            .mul(&p(&[1, 2]))
            .mul(&p(&[1, 6, 7]));
        assert!(t1.all_roots_real().unwrap());
        assert_eq!(real_root_count(&t1).unwrap(), 5);
    }

    #[test]
    fn no_real_roots_and_constants() {
        assert_eq!(real_root_count(&p(&[1, 0, 1])).unwrap(), 0);
        assert_eq!(real_root_count(&p(&[5])).unwrap(), 0);
        assert!(p(&[5]).all_roots_real().unwrap());
        assert_eq!(real_root_count(&Polynomial::zero()), Err(Error::ZeroPolynomial));
    }

    #[test]
    fn high_multiplicity_mix() {
        // (x-1)^3 (x+2)^2 (x^2+1)
        let f = p(&[-1, 1])
            .pow(3)
            .mul(&p(&[2, 1]).pow(2))
            .mul(&p(&[1, 0, 1]));
        assert_eq!(real_root_count(&f).unwrap(), 5);
        let mut mults: Vec<usize> = square_free_factors(&f)
            .unwrap()
            .iter()
            .map(|(_, m)| *m)
            .collect();
        mults.sort();
        assert_eq!(mults, vec![1, 2, 3]);
    }

    #[test]
    fn root_at_zero() {
        assert_eq!(real_root_count(&p(&[0, 0, 1, 1])).unwrap(), 3);
    }
}
