//! Cartan data `(I, ·, Ω)` and the scalar monomials built from them.
//!
//! Weights carry rational coordinates in the basis of simple roots; every
//! twist factor used elsewhere in the crate is produced here.

use std::fmt;
use std::ops::{Add, Neg, Sub};

use num_integer::Integer;
use num_traits::Zero;
use thiserror::Error;

use crate::ratfield::{Coeff, Exp, RatFunc};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CartanError {
    #[error("rank must be positive")]
    EmptyRank,
    #[error("matrix `{name}` must be {rank}x{rank}")]
    Shape { name: &'static str, rank: usize },
    #[error("dot matrix is not symmetric at ({0}, {1})")]
    DotNotSymmetric(usize, usize),
    #[error("dot[{0}][{1}] differs from omega[{0}][{1}] + omega[{1}][{0}]")]
    DotMismatch(usize, usize),
    #[error("condition (a) fails: omega[{0}][{0}] must be positive")]
    DiagonalNotPositive(usize),
    #[error("condition (a) fails: omega[{0}][{1}] must be <= 0")]
    OffDiagonalPositive(usize, usize),
    #[error("condition (b) fails: (omega[{0}][{1}] + omega[{1}][{0}]) / omega[{0}][{0}] is not a nonpositive integer")]
    RatioNotIntegral(usize, usize),
    #[error("condition (c) fails: gcd of the diagonal of omega is {0}, not 1")]
    DiagonalGcd(i64),
}

/// Element of `N[I]`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Degree(pub Vec<u32>);

impl Degree {
    pub fn zero(rank: usize) -> Self {
        Degree(vec![0; rank])
    }

    pub fn simple(rank: usize, i: usize) -> Self {
        let mut d = vec![0; rank];
        d[i] = 1;
        Degree(d)
    }

    pub fn tr(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&x| x == 0)
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    pub fn checked_sub(&self, o: &Degree) -> Option<Degree> {
        self.0.iter().zip(&o.0).map(|(a, b)| a.checked_sub(*b)).collect::<Option<Vec<_>>>().map(Degree)
    }

    pub fn plus(&self, o: &Degree) -> Degree {
        Degree(self.0.iter().zip(&o.0).map(|(a, b)| a + b).collect())
    }

    /// All degrees of the given rank with `1 <= tr <= max_tr`, ordered by
    /// trace and then lexicographically.
    pub fn all_up_to(rank: usize, max_tr: u32) -> Vec<Degree> {
        let mut out = Vec::new();
        for tr in 1..=max_tr {
            let mut cur = vec![0; rank];
            compositions(rank, tr, 0, &mut cur, &mut out);
        }
        out
    }

    pub fn weight(&self) -> Weight {
        Weight(self.0.iter().map(|&x| Exp::from_integer(i64::from(x))).collect())
    }
}

fn compositions(rank: usize, left: u32, pos: usize, cur: &mut Vec<u32>, out: &mut Vec<Degree>) {
    if pos + 1 == rank {
        cur[pos] = left;
        out.push(Degree(cur.clone()));
        return;
    }
    for k in (0..=left).rev() {
        cur[pos] = k;
        compositions(rank, left - k, pos + 1, cur, out);
    }
}

impl fmt::Display for Degree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|x| x.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// Element of `Q[I]`, coordinates in the simple-root basis.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Weight(pub Vec<Exp>);

impl Weight {
    pub fn zero(rank: usize) -> Self {
        Weight(vec![Exp::zero(); rank])
    }

    pub fn simple(rank: usize, i: usize) -> Self {
        Degree::simple(rank, i).weight()
    }

    pub fn from_ints(c: &[i64]) -> Self {
        Weight(c.iter().map(|&x| Exp::from_integer(x)).collect())
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|x| x.is_zero())
    }

    /// The weight as an element of `N[I]`, if it is one.
    pub fn as_degree(&self) -> Option<Degree> {
        self.0
            .iter()
            .map(|x| (x.is_integer() && *x.numer() >= 0).then(|| *x.numer() as u32))
            .collect::<Option<Vec<_>>>()
            .map(Degree)
    }

    pub fn scaled(&self, k: Exp) -> Weight {
        Weight(self.0.iter().map(|x| x * k).collect())
    }
}

impl Add for &Weight {
    type Output = Weight;
    fn add(self, o: &Weight) -> Weight {
        Weight(self.0.iter().zip(&o.0).map(|(a, b)| a + b).collect())
    }
}

impl Sub for &Weight {
    type Output = Weight;
    fn sub(self, o: &Weight) -> Weight {
        Weight(self.0.iter().zip(&o.0).map(|(a, b)| a - b).collect())
    }
}

impl Neg for &Weight {
    type Output = Weight;
    fn neg(self) -> Weight {
        Weight(self.0.iter().map(|a| -a).collect())
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|x| x.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// A validated Cartan datum.
///
/// `t_one` marks the one-parameter specialization: every `t`-power produced
/// by this datum is replaced by 1.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CartanSpec {
    rank: usize,
    dot: Vec<Vec<i64>>,
    omega: Vec<Vec<i64>>,
    t_one: bool,
}

impl CartanSpec {
    pub fn new(dot: Vec<Vec<i64>>, omega: Vec<Vec<i64>>) -> Result<Self, CartanError> {
        let spec = CartanSpec { rank: omega.len(), dot, omega, t_one: false };
        spec.validate()?;
        Ok(spec)
    }

    /// The datum with `dot` determined by `omega`.
    pub fn from_omega(omega: Vec<Vec<i64>>) -> Result<Self, CartanError> {
        let n = omega.len();
        if omega.iter().any(|r| r.len() != n) {
            return Err(CartanError::Shape { name: "omega", rank: n });
        }
        let dot = (0..n).map(|i| (0..n).map(|j| omega[i][j] + omega[j][i]).collect()).collect();
        Self::new(dot, omega)
    }

    pub fn sl2() -> Self {
        Self::new(vec![vec![2]], vec![vec![1]]).expect("valid datum")
    }

    pub fn sl3() -> Self {
        Self::new(vec![vec![2, -1], vec![-1, 2]], vec![vec![1, -1], vec![0, 1]]).expect("valid datum")
    }

    fn validate(&self) -> Result<(), CartanError> {
        let n = self.rank;
        if n == 0 {
            return Err(CartanError::EmptyRank);
        }
        if self.omega.iter().any(|r| r.len() != n) {
            return Err(CartanError::Shape { name: "omega", rank: n });
        }
        if self.dot.len() != n || self.dot.iter().any(|r| r.len() != n) {
            return Err(CartanError::Shape { name: "dot", rank: n });
        }
        for i in 0..n {
            for j in 0..n {
                if self.dot[i][j] != self.dot[j][i] {
                    return Err(CartanError::DotNotSymmetric(i, j));
                }
                if self.dot[i][j] != self.omega[i][j] + self.omega[j][i] {
                    return Err(CartanError::DotMismatch(i, j));
                }
            }
        }
        for i in 0..n {
            if self.omega[i][i] <= 0 {
                return Err(CartanError::DiagonalNotPositive(i));
            }
        }
        for i in 0..n {
            for j in 0..n {
                if i == j {
                    continue;
                }
                if self.omega[i][j] > 0 {
                    return Err(CartanError::OffDiagonalPositive(i, j));
                }
                let s = self.omega[i][j] + self.omega[j][i];
                if s % self.omega[i][i] != 0 {
                    return Err(CartanError::RatioNotIntegral(i, j));
                }
            }
        }
        let g = (0..n).fold(0i64, |g, i| g.gcd(&self.omega[i][i]));
        if g != 1 {
            return Err(CartanError::DiagonalGcd(g));
        }
        Ok(())
    }

    /// The same datum with all `t`-powers specialized to 1.
    pub fn with_t_one(&self) -> Self {
        CartanSpec { t_one: true, ..self.clone() }
    }

    pub fn is_t_one(&self) -> bool {
        self.t_one
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn dot_matrix(&self) -> &[Vec<i64>] {
        &self.dot
    }

    pub fn omega_matrix(&self) -> &[Vec<i64>] {
        &self.omega
    }

    /// `i·i / 2 = Ω_ii`.
    pub fn half_norm(&self, i: usize) -> i64 {
        self.omega[i][i]
    }

    pub fn dot_ij(&self, i: usize, j: usize) -> i64 {
        self.dot[i][j]
    }

    pub fn angle_ij(&self, i: usize, j: usize) -> i64 {
        self.omega[i][j]
    }

    pub fn bracket_ij(&self, i: usize, j: usize) -> i64 {
        let d = if i == j { 2 * self.omega[i][i] } else { 0 };
        d - self.omega[i][j]
    }

    fn bilinear(&self, m: impl Fn(usize, usize) -> i64, a: &Weight, b: &Weight) -> Exp {
        let mut s = Exp::zero();
        for (i, x) in a.0.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.0.iter().enumerate() {
                let k = m(i, j);
                if k != 0 && !y.is_zero() {
                    s += x * y * k;
                }
            }
        }
        s
    }

    /// `λ·μ`.
    pub fn dot(&self, a: &Weight, b: &Weight) -> Exp {
        self.bilinear(|i, j| self.dot[i][j], a, b)
    }

    /// `⟨λ,μ⟩`.
    pub fn angle(&self, a: &Weight, b: &Weight) -> Exp {
        self.bilinear(|i, j| self.omega[i][j], a, b)
    }

    /// `[λ,μ]`.
    pub fn bracket(&self, a: &Weight, b: &Weight) -> Exp {
        self.bilinear(|i, j| self.bracket_ij(i, j), a, b)
    }

    pub fn alpha(&self, i: usize) -> Weight {
        Weight::simple(self.rank, i)
    }

    /// `v^a t^b`, or `v^a` for the one-parameter specialization.
    pub fn mono(&self, a: Exp, b: Exp) -> RatFunc {
        RatFunc::mono(a, if self.t_one { Exp::zero() } else { b })
    }

    /// Apply the specialization of this datum to an arbitrary scalar.
    pub fn scalar(&self, x: &RatFunc) -> RatFunc {
        if self.t_one {
            x.specialize(None, Some(&Coeff::from_integer(1.into()))).expect("t = 1 is never a pole here")
        } else {
            x.clone()
        }
    }

    /// `{λ,μ} = v^{λ·μ} t^{⟨μ,λ⟩−⟨λ,μ⟩}`.
    pub fn brace(&self, a: &Weight, b: &Weight) -> RatFunc {
        self.mono(self.dot(a, b), self.angle(b, a) - self.angle(a, b))
    }

    /// `f(λ,μ) = {λ,μ}^{-1}`.
    pub fn f(&self, a: &Weight, b: &Weight) -> RatFunc {
        self.mono(-self.dot(a, b), self.angle(a, b) - self.angle(b, a))
    }

    /// `c_{ν,λ} = t^{⟨λ,ν⟩−⟨ν,λ⟩}`.
    pub fn c(&self, nu: &Weight, lambda: &Weight) -> RatFunc {
        self.mono(Exp::zero(), self.angle(lambda, nu) - self.angle(nu, lambda))
    }

    /// `v_i = v^{i·i/2}`.
    pub fn v_i(&self, i: usize) -> RatFunc {
        RatFunc::v_pow(self.omega[i][i])
    }

    /// `t_i = t^{i·i/2}`.
    pub fn t_i(&self, i: usize) -> RatFunc {
        self.mono(Exp::zero(), Exp::from_integer(self.omega[i][i]))
    }

    /// `v_λ = Π v_i^{λ_i}`.
    pub fn v_deg(&self, a: &Weight) -> RatFunc {
        RatFunc::mono(self.norm_exp(a), Exp::zero())
    }

    /// `t_λ = Π t_i^{λ_i}`.
    pub fn t_deg(&self, a: &Weight) -> RatFunc {
        self.mono(Exp::zero(), self.norm_exp(a))
    }

    fn norm_exp(&self, a: &Weight) -> Exp {
        a.0.iter().enumerate().map(|(i, x)| x * self.omega[i][i]).fold(Exp::zero(), |s, x| s + x)
    }

    /// Eigenvalue of `K_ν` on a vector of weight `λ`: `v^{ν·λ} c_{ν,λ}`.
    pub fn k_eigen(&self, nu: &Weight, lambda: &Weight) -> RatFunc {
        self.mono(self.dot(nu, lambda), self.angle(lambda, nu) - self.angle(nu, lambda))
    }

    /// Eigenvalue of `K'_ν` on a vector of weight `λ`: `v^{−ν·λ} c_{ν,λ}`.
    pub fn kprime_eigen(&self, nu: &Weight, lambda: &Weight) -> RatFunc {
        self.mono(-self.dot(nu, lambda), self.angle(lambda, nu) - self.angle(nu, lambda))
    }

    /// `[n]_{v_i,t_i}`, specialized with the datum.
    pub fn qint_i(&self, n: u32, i: usize) -> RatFunc {
        self.scalar(&crate::ratfield::qint(n, self.omega[i][i]))
    }

    /// `[n]!_{v_i,t_i}`, specialized with the datum.
    pub fn qfact_i(&self, n: u32, i: usize) -> RatFunc {
        self.scalar(&crate::ratfield::qfact(n, self.omega[i][i]))
    }
}

/// `tr(ν) = Σ ν_i` for a rational weight.
pub fn tr(w: &Weight) -> Exp {
    w.0.iter().fold(Exp::zero(), |s, x| s + x)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn e(n: i64) -> Exp {
        Exp::from_integer(n)
    }

    #[test]
    fn validation() {
        assert!(CartanSpec::new(vec![vec![2]], vec![vec![1]]).is_ok());
        assert!(CartanSpec::new(vec![vec![2, -1], vec![-1, 2]], vec![vec![1, -1], vec![0, 1]]).is_ok());
        assert_eq!(
            CartanSpec::new(vec![vec![4, 0], vec![0, 4]], vec![vec![2, 0], vec![0, 2]]),
            Err(CartanError::DiagonalGcd(2))
        );
        assert_eq!(
            CartanSpec::new(vec![vec![2, 1], vec![1, 2]], vec![vec![1, 1], vec![0, 1]]),
            Err(CartanError::OffDiagonalPositive(0, 1))
        );
        assert_eq!(
            CartanSpec::new(vec![vec![2, -1], vec![-1, 2]], vec![vec![1, 0], vec![0, 1]]),
            Err(CartanError::DotMismatch(0, 1))
        );
        // B2-like datum with (b) failing for the short root ratio
        assert_eq!(CartanSpec::from_omega(vec![vec![2, -1], vec![0, 1]]), Err(CartanError::RatioNotIntegral(0, 1)));
        assert!(CartanSpec::from_omega(vec![vec![2, -2], vec![0, 1]]).is_ok());
    }

    #[test]
    fn forms_on_simple_roots() {
        let c = CartanSpec::sl3();
        let (a1, a2) = (c.alpha(0), c.alpha(1));
        assert_eq!(c.angle(&a1, &a2), e(-1));
        assert_eq!(c.angle(&a2, &a1), e(0));
        assert_eq!(c.dot(&a1, &a2), e(-1));
        assert_eq!(c.bracket(&a1, &a1), e(1));
        assert_eq!(c.bracket(&a1, &a2), e(1));
        assert_eq!(c.brace(&a1, &a2), RatFunc::v_pow(-1) * RatFunc::t());
        assert_eq!(c.c(&a1, &a2), RatFunc::t());
        let s = CartanSpec::sl2();
        let i = s.alpha(0);
        assert_eq!(s.brace(&i, &i), RatFunc::v_pow(2));
        assert_eq!(s.f(&i, &i), RatFunc::v_pow(-2));
        assert_eq!(s.angle(&i, &i), e(1));
        assert_eq!(tr(&Weight::from_ints(&[2, 1])), e(3));
    }

    #[test]
    fn t_one_drops_twists() {
        let c = CartanSpec::sl3().with_t_one();
        assert_eq!(c.brace(&c.alpha(0), &c.alpha(1)), RatFunc::v_pow(-1));
        assert_eq!(c.qint_i(2, 0), RatFunc::v() + RatFunc::v_pow(-1));
    }

    fn weight() -> impl Strategy<Value = Weight> {
        prop::collection::vec((-6i64..=6, 1i64..=3), 2)
            .prop_map(|v| Weight(v.into_iter().map(|(a, b)| Exp::new(a, b)).collect()))
    }

    proptest! {
        #[test]
        fn f_properties(l in weight(), m in weight(), n in weight(), i in 0usize..2) {
            let c = CartanSpec::sl3();
            let ai = c.alpha(i);
            prop_assert_eq!(c.f(&(&l + &m), &n), c.f(&l, &n) * c.f(&m, &n));
            prop_assert_eq!(c.f(&l, &(&m + &n)), c.f(&l, &m) * c.f(&l, &n));
            prop_assert_eq!(c.f(&l, &m), c.f(&-&l, &-&m));
            prop_assert_eq!(c.f(&ai, &m), RatFunc::mono(-c.dot(&ai, &m), Exp::zero()) * c.c(&m, &ai));
            prop_assert_eq!(c.f(&l, &ai), RatFunc::mono(-c.dot(&ai, &l), Exp::zero()) * c.c(&ai, &l));
            prop_assert_eq!(c.f(&l, &m), c.brace(&l, &m).inv().unwrap());
            prop_assert_eq!(c.brace(&l, &m) * c.brace(&m, &l), RatFunc::mono(c.dot(&l, &m) * 2, Exp::zero()));
            prop_assert_eq!(c.c(&ai, &-&l), c.c(&ai, &l).inv().unwrap());
        }

        #[test]
        fn forms_are_bilinear(l in weight(), m in weight(), n in weight()) {
            let c = CartanSpec::sl3();
            let lm = &l + &m;
            prop_assert_eq!(c.angle(&lm, &n), c.angle(&l, &n) + c.angle(&m, &n));
            prop_assert_eq!(c.bracket(&n, &lm), c.bracket(&n, &l) + c.bracket(&n, &m));
            prop_assert_eq!(c.dot(&l, &m), c.angle(&l, &m) + c.angle(&m, &l));
        }

        /// Moving K_μ and K'_ν to the right of x and y turns the scalar
        /// {μ,ν}{μ,|y|}{|x|,ν} into {μ,ν}.
        #[test]
        fn k_factor_rule(mu in weight(), nu in weight(), a in 0u32..3, b in 0u32..3) {
            let c = CartanSpec::sl3();
            let lam = Degree(vec![a, b]).weight();
            let left = c.brace(&mu, &nu) * c.brace(&mu, &lam) * c.brace(&lam, &nu);
            // K_μ x = {μ,|x|} x K_μ and K'_ν y = {|y|,ν} y K'_ν
            let moved = c.brace(&mu, &lam).inv().unwrap() * c.brace(&lam, &nu).inv().unwrap();
            prop_assert_eq!(left * moved, c.brace(&mu, &nu));
        }
    }
}
