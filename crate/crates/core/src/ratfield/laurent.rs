use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::{BigRational, Ratio};
use num_traits::{One, Signed, Zero};

use super::RatError;

/// Rational exponent.
pub type Exp = Ratio<i64>;
/// Exact rational coefficient.
pub type Coeff = BigRational;

/// Exponents of `v` and `t` in a monomial `v^v * t^t`.
///
/// Ordered lexicographically by `(v, t)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ExpPair {
    pub v: Exp,
    pub t: Exp,
}

impl ExpPair {
    pub const ZERO: ExpPair = ExpPair { v: Ratio::new_raw(0, 1), t: Ratio::new_raw(0, 1) };

    pub fn new(v: Exp, t: Exp) -> Self {
        ExpPair { v, t }
    }

    pub fn is_zero(&self) -> bool {
        self.v.is_zero() && self.t.is_zero()
    }
}

impl Add for ExpPair {
    type Output = ExpPair;
    fn add(self, o: ExpPair) -> ExpPair {
        ExpPair { v: self.v + o.v, t: self.t + o.t }
    }
}

impl Sub for ExpPair {
    type Output = ExpPair;
    fn sub(self, o: ExpPair) -> ExpPair {
        ExpPair { v: self.v - o.v, t: self.t - o.t }
    }
}

impl Neg for ExpPair {
    type Output = ExpPair;
    fn neg(self) -> ExpPair {
        ExpPair { v: -self.v, t: -self.t }
    }
}

/// Finite sum of `c * v^a * t^b` with rational `a`, `b` and nonzero rational `c`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct LaurentPoly {
    terms: BTreeMap<ExpPair, Coeff>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        LaurentPoly { terms: BTreeMap::new() }
    }

    pub fn one() -> Self {
        Self::constant(Coeff::one())
    }

    pub fn constant(c: Coeff) -> Self {
        Self::monomial(c, ExpPair::ZERO)
    }

    pub fn monomial(c: Coeff, e: ExpPair) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(e, c);
        }
        LaurentPoly { terms }
    }

    pub fn from_terms<I: IntoIterator<Item = (ExpPair, Coeff)>>(it: I) -> Self {
        let mut p = Self::zero();
        for (e, c) in it {
            p.add_term(e, c);
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&ExpPair::ZERO).is_some_and(|c| c.is_one())
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in ascending lexicographic order of exponents.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&ExpPair, &Coeff)> {
        self.terms.iter()
    }

    pub fn coeff(&self, e: &ExpPair) -> Coeff {
        self.terms.get(e).cloned().unwrap_or_else(Coeff::zero)
    }

    /// `Some((c, e))` when the polynomial is the single term `c * v^e.v * t^e.t`.
    pub fn as_monomial(&self) -> Option<(&Coeff, &ExpPair)> {
        if self.terms.len() == 1 {
            self.terms.iter().next().map(|(e, c)| (c, e))
        } else {
            None
        }
    }

    pub fn max_term(&self) -> Option<(&ExpPair, &Coeff)> {
        self.terms.iter().next_back()
    }

    pub fn min_term(&self) -> Option<(&ExpPair, &Coeff)> {
        self.terms.iter().next()
    }

    pub(crate) fn add_term(&mut self, e: ExpPair, c: Coeff) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(e) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn scale(&self, c: &Coeff) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        LaurentPoly { terms: self.terms.iter().map(|(e, x)| (*e, x * c)).collect() }
    }

    /// Multiply by the monomial `v^e.v * t^e.t`.
    pub fn shift(&self, e: ExpPair) -> Self {
        LaurentPoly { terms: self.terms.iter().map(|(k, x)| (*k + e, x.clone())).collect() }
    }

    /// `v -> v^-1`, `t` fixed.
    pub fn bar(&self) -> Self {
        LaurentPoly { terms: self.terms.iter().map(|(e, c)| (ExpPair::new(-e.v, e.t), c.clone())).collect() }
    }

    /// `t ↦ t⁻¹`, fixing `v`.
    pub fn invert_t(&self) -> Self {
        LaurentPoly { terms: self.terms.iter().map(|(e, c)| (ExpPair::new(e.v, -e.t), c.clone())).collect() }
    }

    /// Range of `v` exponents, `None` for the zero polynomial.
    pub fn v_range(&self) -> Option<(Exp, Exp)> {
        range(self.terms.keys().map(|e| e.v))
    }

    /// Range of `t` exponents, `None` for the zero polynomial.
    pub fn t_range(&self) -> Option<(Exp, Exp)> {
        range(self.terms.keys().map(|e| e.t))
    }

    /// Exact quotient `self / d`, or `None` when `d` does not divide `self`.
    pub fn div_exact(&self, d: &LaurentPoly) -> Option<LaurentPoly> {
        if d.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(Self::zero());
        }
        if let Some((c, e)) = d.as_monomial() {
            return Some(self.scale(&c.recip()).shift(-*e));
        }
        let (nv0, nv1) = self.v_range()?;
        let (dv0, dv1) = d.v_range()?;
        let (nt0, nt1) = self.t_range()?;
        let (dt0, dt1) = d.t_range()?;
        let (qv0, qv1, qt0, qt1) = (nv0 - dv0, nv1 - dv1, nt0 - dt0, nt1 - dt1);
        if qv0 > qv1 || qt0 > qt1 {
            return None;
        }
        let (de, dc) = d.max_term().map(|(e, c)| (*e, c.clone()))?;
        let mut rem = self.clone();
        let mut quot = Self::zero();
        while let Some((re, rc)) = rem.max_term().map(|(e, c)| (*e, c.clone())) {
            let qe = re - de;
            if qe.v < qv0 || qe.v > qv1 || qe.t < qt0 || qe.t > qt1 {
                return None;
            }
            let qc = rc / &dc;
            rem = &rem - &d.scale(&qc).shift(qe);
            quot.add_term(qe, qc);
        }
        Some(quot)
    }

    /// Substitute rational values for `v` and/or `t`.
    pub fn specialize(&self, v: Option<&Coeff>, t: Option<&Coeff>) -> Result<LaurentPoly, RatError> {
        let mut out = Self::zero();
        for (e, c) in &self.terms {
            let mut c = c.clone();
            let mut ne = *e;
            if let Some(x) = v {
                c *= rational_power(x, e.v)?;
                ne.v = Exp::zero();
            }
            if let Some(x) = t {
                c *= rational_power(x, e.t)?;
                ne.t = Exp::zero();
            }
            out.add_term(ne, c);
        }
        Ok(out)
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }
}

fn range<I: Iterator<Item = Exp>>(mut it: I) -> Option<(Exp, Exp)> {
    let first = it.next()?;
    Some(it.fold((first, first), |(lo, hi), x| (lo.min(x), hi.max(x))))
}

/// `x^e` for rational `e`, requiring an exact root.
pub fn rational_power(x: &Coeff, e: Exp) -> Result<Coeff, RatError> {
    let (p, q) = (*e.numer(), *e.denom());
    if x.is_zero() {
        return match p.signum() {
            1 => Ok(Coeff::zero()),
            0 => Ok(Coeff::one()),
            _ => Err(RatError::DenominatorVanishes),
        };
    }
    let root = if q == 1 {
        x.clone()
    } else {
        let not_root = || RatError::NotPerfectPower { value: x.to_string(), exponent: e.to_string() };
        if x.is_negative() && q % 2 == 0 {
            return Err(not_root());
        }
        let qq = u32::try_from(q).map_err(|_| not_root())?;
        let n = exact_root(x.numer(), qq).ok_or_else(not_root)?;
        let d = exact_root(x.denom(), qq).ok_or_else(not_root)?;
        Coeff::new(n, d)
    };
    let mag = num_traits::pow(root, p.unsigned_abs() as usize);
    Ok(if p < 0 { mag.recip() } else { mag })
}

fn exact_root(n: &BigInt, q: u32) -> Option<BigInt> {
    let r = if n.is_negative() { -(-n).nth_root(q) } else { n.nth_root(q) };
    (num_traits::pow(r.clone(), q as usize) == *n).then_some(r)
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, o: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (e, c) in &o.terms {
            out.add_term(*e, c.clone());
        }
        out
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, o: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (e, c) in &o.terms {
            out.add_term(*e, -c.clone());
        }
        out
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, o: &LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &o.terms {
                out.add_term(*e1 + *e2, c1 * c2);
            }
        }
        out
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly { terms: self.terms.iter().map(|(e, c)| (*e, -c.clone())).collect() }
    }
}

fn fmt_exp(f: &mut fmt::Formatter<'_>, var: &str, e: Exp) -> fmt::Result {
    if e.is_one() {
        write!(f, "{var}")
    } else if e.is_integer() {
        write!(f, "{var}^{}", e.numer())
    } else {
        write!(f, "{var}^({}/{})", e.numer(), e.denom())
    }
}

/// Terms are printed from the largest exponent pair down, e.g. `v + v^-1`.
impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (e, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            match (k, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let mag = c.abs();
            let mut parts = 0;
            if !mag.is_one() || e.is_zero() {
                write!(f, "{mag}")?;
                parts += 1;
            }
            for (var, x) in [("v", e.v), ("t", e.t)] {
                if x.is_zero() {
                    continue;
                }
                if parts > 0 {
                    write!(f, " * ")?;
                }
                fmt_exp(f, var, x)?;
                parts += 1;
            }
        }
        Ok(())
    }
}
