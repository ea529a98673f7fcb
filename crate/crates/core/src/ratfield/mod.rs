//! Exact arithmetic in Q(v, t), allowing rational exponents of `v` and `t`.

mod laurent;
mod parse;
mod ratfunc;
mod univariate;

pub use laurent::{rational_power, Coeff, Exp, ExpPair, LaurentPoly};
pub use parse::{parse_ratfunc, parse_rational};
pub use ratfunc::RatFunc;

use num_traits::{One, Zero};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RatError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("{value} has no exact rational power {exponent}")]
    NotPerfectPower { value: String, exponent: String },
    #[error("denominator vanishes at the requested point")]
    DenominatorVanishes,
    #[error("parse error at {pos}: {msg}")]
    Parse { pos: usize, msg: String },
}

/// The two-parameter quantum integer `[n]` in the variables `v^d`, `t^d`:
/// `((vt)^n - (v t^-1)^-n) / (vt - (v t^-1)^-1)` after substitution,
/// which equals `t^(d(n-1)) * (v^(dn) - v^(-dn)) / (v^d - v^(-d))`.
pub fn qint(n: u32, d: i64) -> RatFunc {
    if n == 0 {
        return RatFunc::zero();
    }
    let n = i64::from(n);
    let terms = (0..n)
        .map(|k| (ExpPair::new(Exp::from_integer(d * (n - 1 - 2 * k)), Exp::from_integer(d * (n - 1))), Coeff::one()));
    RatFunc::from_poly(LaurentPoly::from_terms(terms))
}

/// `[n]! = [1][2]...[n]` in the variables `v^d`, `t^d`.
pub fn qfact(n: u32, d: i64) -> RatFunc {
    (1..=n).map(|k| qint(k, d)).product()
}

/// Convenience: a rational constant `p/q`.
pub fn rat(p: i64, q: i64) -> RatFunc {
    RatFunc::constant(Coeff::new(p.into(), q.into()))
}

/// Whether `x` is a Laurent polynomial whose `t` exponents are all zero.
pub fn is_t_free(x: &RatFunc) -> bool {
    match x.t_range() {
        Some((a, b)) => a.is_zero() && b.is_zero(),
        None => x.is_zero(),
    }
}
