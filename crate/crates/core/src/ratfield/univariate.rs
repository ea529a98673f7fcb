//! Dense univariate polynomials over Q, used only to cancel common factors
//! when a denominator depends on a single variable.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

/// Coefficients from degree 0 upward, no trailing zeros.
#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) struct UniPoly(pub(crate) Vec<BigRational>);

impl UniPoly {
    pub(crate) fn from_coeffs(mut c: Vec<BigRational>) -> Self {
        while c.last().is_some_and(|x| x.is_zero()) {
            c.pop();
        }
        UniPoly(c)
    }

    pub(crate) fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub(crate) fn degree(&self) -> usize {
        self.0.len().saturating_sub(1)
    }

    fn lead(&self) -> &BigRational {
        self.0.last().expect("leading coefficient of zero polynomial")
    }

    fn monic(mut self) -> Self {
        if let Some(l) = self.0.last().cloned() {
            for c in &mut self.0 {
                *c /= &l;
            }
        }
        self
    }

    /// Quotient and remainder of Euclidean division.
    pub(crate) fn div_rem(&self, d: &UniPoly) -> (UniPoly, UniPoly) {
        assert!(!d.is_zero(), "division by zero polynomial");
        let mut rem = self.0.clone();
        if rem.len() < d.0.len() {
            return (UniPoly(Vec::new()), UniPoly::from_coeffs(rem));
        }
        let dl = d.lead();
        let mut quot = vec![BigRational::zero(); rem.len() - d.0.len() + 1];
        for k in (0..quot.len()).rev() {
            let c = &rem[k + d.0.len() - 1] / dl;
            if c.is_zero() {
                continue;
            }
            for (j, dc) in d.0.iter().enumerate() {
                rem[k + j] -= &c * dc;
            }
            quot[k] = c;
        }
        rem.truncate(d.0.len() - 1);
        (UniPoly::from_coeffs(quot), UniPoly::from_coeffs(rem))
    }

    /// Monic greatest common divisor.
    pub(crate) fn gcd(&self, other: &UniPoly) -> UniPoly {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b);
            // keep coefficients small
            a = b.monic();
            b = primitive(r);
        }
        a.monic()
    }
}

/// Scale to integer coefficients with unit content (up to sign).
fn primitive(p: UniPoly) -> UniPoly {
    if p.is_zero() {
        return p;
    }
    let mut den = BigInt::one();
    for c in &p.0 {
        den = num_integer::lcm(den, c.denom().clone());
    }
    let ints: Vec<BigInt> = p.0.iter().map(|c| (c * &den).to_integer()).collect();
    let mut g = BigInt::zero();
    for i in &ints {
        g = num_integer::gcd(g, i.clone());
    }
    UniPoly(ints.into_iter().map(|i| BigRational::from_integer(i / &g)).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> UniPoly {
        UniPoly::from_coeffs(c.iter().map(|&x| BigRational::from_integer(x.into())).collect())
    }

    #[test]
    fn gcd_of_shared_factor() {
        // (x-1)(x+2) and (x-1)(x-3)
        let a = p(&[-2, 1, 1]);
        let b = p(&[3, -4, 1]);
        assert_eq!(a.gcd(&b), p(&[-1, 1]));
    }

    #[test]
    fn gcd_coprime_is_one() {
        assert_eq!(p(&[1, 0, 1]).gcd(&p(&[-1, 1])), p(&[1]));
    }

    #[test]
    fn exact_division() {
        let (q, r) = p(&[-1, 0, 0, 1]).div_rem(&p(&[-1, 1]));
        assert_eq!(q, p(&[1, 1, 1]));
        assert!(r.is_zero());
    }
}
