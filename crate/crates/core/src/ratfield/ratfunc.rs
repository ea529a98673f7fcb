use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};

use num_integer::Integer;
use num_traits::{One, Zero};

use super::laurent::{Coeff, Exp, ExpPair, LaurentPoly};
use super::univariate::UniPoly;
use super::RatError;

/// Element of Q(v, t) with rational exponents, stored as a fraction of
/// Laurent polynomials.
///
/// Fractions are cancelled when the denominator involves only one of the
/// variables (up to a monomial) or divides the numerator exactly; otherwise
/// they stay unreduced. Equality is decided by cross-multiplication.
#[derive(Clone, Debug)]
pub struct RatFunc {
    num: LaurentPoly,
    den: LaurentPoly,
}

impl RatFunc {
    pub fn zero() -> Self {
        RatFunc { num: LaurentPoly::zero(), den: LaurentPoly::one() }
    }

    pub fn one() -> Self {
        RatFunc { num: LaurentPoly::one(), den: LaurentPoly::one() }
    }

    pub fn from_int(n: i64) -> Self {
        Self::constant(Coeff::from_integer(n.into()))
    }

    pub fn constant(c: Coeff) -> Self {
        Self::from_poly(LaurentPoly::constant(c))
    }

    pub fn from_poly(p: LaurentPoly) -> Self {
        RatFunc { num: p, den: LaurentPoly::one() }
    }

    /// `v^a * t^b`.
    pub fn mono(a: Exp, b: Exp) -> Self {
        Self::from_poly(LaurentPoly::monomial(Coeff::one(), ExpPair::new(a, b)))
    }

    /// `v^a` for an integer `a`.
    pub fn v_pow(a: i64) -> Self {
        Self::mono(Exp::from_integer(a), Exp::zero())
    }

    /// `t^b` for an integer `b`.
    pub fn t_pow(b: i64) -> Self {
        Self::mono(Exp::zero(), Exp::from_integer(b))
    }

    pub fn v() -> Self {
        Self::v_pow(1)
    }

    pub fn t() -> Self {
        Self::t_pow(1)
    }

    pub fn new(num: LaurentPoly, den: LaurentPoly) -> Result<Self, RatError> {
        if den.is_zero() {
            return Err(RatError::DivisionByZero);
        }
        Ok(normalize(num, den))
    }

    pub fn numer(&self) -> &LaurentPoly {
        &self.num
    }

    pub fn denom(&self) -> &LaurentPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        *self == Self::one()
    }

    /// True when the stored denominator is a nonzero constant, i.e. the
    /// value is a Laurent polynomial.
    pub fn is_laurent(&self) -> bool {
        self.den.as_monomial().is_some()
    }

    pub fn inv(&self) -> Result<Self, RatError> {
        if self.is_zero() {
            return Err(RatError::DivisionByZero);
        }
        Ok(normalize(self.den.clone(), self.num.clone()))
    }

    pub fn checked_div(&self, o: &RatFunc) -> Result<Self, RatError> {
        if o.is_zero() {
            return Err(RatError::DivisionByZero);
        }
        Ok(normalize(&self.num * &o.den, &self.den * &o.num))
    }

    /// Integer power; negative exponents require a nonzero base.
    pub fn pow(&self, n: i64) -> Self {
        let base = if n < 0 { self.inv().expect("negative power of zero") } else { self.clone() };
        let k = n.unsigned_abs() as u32;
        RatFunc { num: base.num.pow(k), den: base.den.pow(k) }
    }

    /// `v -> v^-1`, `t` fixed.
    pub fn bar(&self) -> Self {
        normalize(self.num.bar(), self.den.bar())
    }

    /// `t ↦ t⁻¹`, fixing `v`.
    pub fn invert_t(&self) -> Self {
        normalize(self.num.invert_t(), self.den.invert_t())
    }

    /// Substitute rational values for `v` and/or `t`.
    pub fn specialize(&self, v: Option<&Coeff>, t: Option<&Coeff>) -> Result<Self, RatError> {
        let n = self.num.specialize(v, t)?;
        let d = self.den.specialize(v, t)?;
        if d.is_zero() {
            return Err(RatError::DenominatorVanishes);
        }
        Ok(normalize(n, d))
    }

    /// The value as a rational number, if it is constant.
    pub fn as_constant(&self) -> Option<Coeff> {
        if self.num.is_zero() {
            return Some(Coeff::zero());
        }
        let (nc, ne) = self.num.as_monomial()?;
        let (dc, de) = self.den.as_monomial()?;
        (ne == de).then(|| nc / dc)
    }

    /// Range of `t` exponents of the numerator when the value is a Laurent
    /// polynomial.
    pub fn t_range(&self) -> Option<(Exp, Exp)> {
        let (_, de) = self.den.as_monomial()?;
        self.num.t_range().map(|(a, b)| (a - de.t, b - de.t))
    }
}

/// Bring `num/den` to the stored form: zero is `0/1`, monomial denominators are
/// absorbed, single-variable denominators are cancelled against the numerator,
/// and any remaining denominator has leading term 1.
fn normalize(num: LaurentPoly, den: LaurentPoly) -> RatFunc {
    debug_assert!(!den.is_zero());
    if num.is_zero() {
        return RatFunc::zero();
    }
    if let Some((c, e)) = den.as_monomial() {
        return RatFunc { num: num.scale(&c.recip()).shift(-*e), den: LaurentPoly::one() };
    }
    if let Some(q) = num.div_exact(&den) {
        return RatFunc::from_poly(q);
    }
    let (num, den) = cancel_univariate(num, den);
    if let Some((c, e)) = den.as_monomial() {
        return RatFunc { num: num.scale(&c.recip()).shift(-*e), den: LaurentPoly::one() };
    }
    let (e, c) = den.max_term().map(|(e, c)| (*e, c.recip())).expect("nonzero denominator");
    RatFunc { num: num.scale(&c).shift(-e), den: den.scale(&c).shift(-e) }
}

#[derive(Clone, Copy)]
enum Var {
    V,
    T,
}

impl Var {
    fn main(self, e: &ExpPair) -> Exp {
        match self {
            Var::V => e.v,
            Var::T => e.t,
        }
    }

    fn other(self, e: &ExpPair) -> Exp {
        match self {
            Var::V => e.t,
            Var::T => e.v,
        }
    }

    fn pair(self, main: Exp, other: Exp) -> ExpPair {
        match self {
            Var::V => ExpPair::new(main, other),
            Var::T => ExpPair::new(other, main),
        }
    }
}

/// If `den` is a monomial times a polynomial in one variable, divide both
/// sides by their gcd.
fn cancel_univariate(num: LaurentPoly, den: LaurentPoly) -> (LaurentPoly, LaurentPoly) {
    let var = {
        let (t0, t1) = den.t_range().expect("nonzero");
        let (v0, v1) = den.v_range().expect("nonzero");
        if t0 == t1 {
            Var::V
        } else if v0 == v1 {
            Var::T
        } else {
            return (num, den);
        }
    };
    // Common exponent grid for the chosen variable.
    let mut scale: i64 = 1;
    for e in num.terms().map(|(e, _)| e).chain(den.terms().map(|(e, _)| e)) {
        scale = scale.lcm(var.main(e).denom());
    }
    let dense = |terms: Vec<(Exp, Coeff)>| -> (UniPoly, Exp) {
        let lo = terms.iter().map(|(x, _)| *x).min().expect("nonempty slice");
        let mut c: Vec<Coeff> = Vec::new();
        for (x, k) in terms {
            let idx = ((x - lo) * scale).to_integer() as usize;
            if c.len() <= idx {
                c.resize(idx + 1, Coeff::zero());
            }
            c[idx] += k;
        }
        (UniPoly::from_coeffs(c), lo)
    };
    let den_other = var.other(den.min_term().expect("nonzero").0);
    let (den_u, den_lo) = dense(den.terms().map(|(e, c)| (var.main(e), c.clone())).collect());

    let mut slices: BTreeMap<Exp, Vec<(Exp, Coeff)>> = BTreeMap::new();
    for (e, c) in num.terms() {
        slices.entry(var.other(e)).or_default().push((var.main(e), c.clone()));
    }
    let slices: Vec<(Exp, UniPoly, Exp)> = slices
        .into_iter()
        .map(|(o, ts)| {
            let (u, lo) = dense(ts);
            (o, u, lo)
        })
        .collect();

    let mut g = den_u.clone();
    for (_, u, _) in &slices {
        if g.degree() == 0 {
            break;
        }
        g = g.gcd(u);
    }
    if g.degree() == 0 {
        return (num, den);
    }
    let back = |u: &UniPoly, lo: Exp, other: Exp| -> LaurentPoly {
        LaurentPoly::from_terms(
            u.0.iter().enumerate().map(|(i, c)| (var.pair(lo + Exp::new(i as i64, scale), other), c.clone())),
        )
    };
    let quot = |u: &UniPoly| {
        let (q, r) = u.div_rem(&g);
        debug_assert!(r.is_zero());
        q
    };
    let new_den = back(&quot(&den_u), den_lo, den_other);
    let mut new_num = LaurentPoly::zero();
    for (o, u, lo) in &slices {
        new_num = &new_num + &back(&quot(u), *lo, *o);
    }
    (new_num, new_den)
}

impl PartialEq for RatFunc {
    fn eq(&self, o: &RatFunc) -> bool {
        if self.den == o.den {
            return self.num == o.num;
        }
        &self.num * &o.den == &o.num * &self.den
    }
}

impl Eq for RatFunc {}

impl Default for RatFunc {
    fn default() -> Self {
        Self::zero()
    }
}

impl From<i64> for RatFunc {
    fn from(n: i64) -> Self {
        Self::from_int(n)
    }
}

impl From<LaurentPoly> for RatFunc {
    fn from(p: LaurentPoly) -> Self {
        Self::from_poly(p)
    }
}

impl Add for &RatFunc {
    type Output = RatFunc;
    fn add(self, o: &RatFunc) -> RatFunc {
        if o.is_zero() {
            return self.clone();
        }
        if self.is_zero() {
            return o.clone();
        }
        if self.den == o.den {
            if self.den.is_one() {
                return RatFunc::from_poly(&self.num + &o.num);
            }
            return normalize(&self.num + &o.num, self.den.clone());
        }
        normalize(&(&self.num * &o.den) + &(&o.num * &self.den), &self.den * &o.den)
    }
}

impl Sub for &RatFunc {
    type Output = RatFunc;
    fn sub(self, o: &RatFunc) -> RatFunc {
        self + &(-o)
    }
}

impl Mul for &RatFunc {
    type Output = RatFunc;
    fn mul(self, o: &RatFunc) -> RatFunc {
        if self.is_zero() || o.is_zero() {
            return RatFunc::zero();
        }
        if self.den.is_one() && o.den.is_one() {
            return RatFunc::from_poly(&self.num * &o.num);
        }
        normalize(&self.num * &o.num, &self.den * &o.den)
    }
}

impl Div for &RatFunc {
    type Output = RatFunc;
    fn div(self, o: &RatFunc) -> RatFunc {
        self.checked_div(o).expect("division by zero in Q(v,t)")
    }
}

impl Neg for &RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        RatFunc { num: -&self.num, den: self.den.clone() }
    }
}

impl Neg for RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        -&self
    }
}

macro_rules! forward_binop {
    ($tr:ident, $m:ident) => {
        impl $tr<RatFunc> for RatFunc {
            type Output = RatFunc;
            fn $m(self, o: RatFunc) -> RatFunc {
                (&self).$m(&o)
            }
        }
        impl $tr<&RatFunc> for RatFunc {
            type Output = RatFunc;
            fn $m(self, o: &RatFunc) -> RatFunc {
                (&self).$m(o)
            }
        }
        impl $tr<RatFunc> for &RatFunc {
            type Output = RatFunc;
            fn $m(self, o: RatFunc) -> RatFunc {
                self.$m(&o)
            }
        }
    };
}

forward_binop!(Add, add);
forward_binop!(Sub, sub);
forward_binop!(Mul, mul);
forward_binop!(Div, div);

impl AddAssign<&RatFunc> for RatFunc {
    fn add_assign(&mut self, o: &RatFunc) {
        *self = &*self + o;
    }
}

impl AddAssign for RatFunc {
    fn add_assign(&mut self, o: RatFunc) {
        *self = &*self + &o;
    }
}

impl SubAssign<&RatFunc> for RatFunc {
    fn sub_assign(&mut self, o: &RatFunc) {
        *self = &*self - o;
    }
}

impl MulAssign<&RatFunc> for RatFunc {
    fn mul_assign(&mut self, o: &RatFunc) {
        *self = &*self * o;
    }
}

impl std::iter::Sum for RatFunc {
    fn sum<I: Iterator<Item = RatFunc>>(it: I) -> RatFunc {
        it.fold(RatFunc::zero(), |a, b| a + b)
    }
}

impl std::iter::Product for RatFunc {
    fn product<I: Iterator<Item = RatFunc>>(it: I) -> RatFunc {
        it.fold(RatFunc::one(), |a, b| a * b)
    }
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({}) / ({})", self.num, self.den)
        }
    }
}
