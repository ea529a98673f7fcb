//! The skew-Hopf pairing between the positive and negative halves.
//!
//! E-words and F-words are plain [`Word`]s; which half a combination lives in
//! is carried by the API (`UPlusElem` vs `UMinusElem`). K-factors never appear
//! in words; the module layer turns them into diagonal matrices.

use std::collections::HashMap;
use std::sync::Mutex;

use crate::cartan::{CartanSpec, Degree, Weight};
use crate::freealg::{words_of_degree, Word};
use crate::lincomb::LinComb;
use crate::matrix::DenseMatrix;
use crate::ratfield::{Exp, RatFunc};

/// A combination of E-words.
pub type UPlusElem = LinComb<Word>;
/// A combination of F-words.
pub type UMinusElem = LinComb<Word>;

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum PairingError {
    #[error("word {word} has degree {found}, expected {expected}")]
    DegreeMismatch { word: String, found: Degree, expected: Degree },
}

/// Which recursion evaluates the pairing.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PeelRoute {
    /// Strip the first F-letter: `(x, F_i y) = g_i (_i r⁺ x, y)`.
    FirstF,
    /// Strip the last F-letter: `(x, y F_i) = g_i (r_i⁺ x, y)`.
    LastF,
    /// Strip the first E-letter: `(E_i x, y) = g_i (x, _i r⁻ y)`.
    FirstE,
    /// Strip the last E-letter: `(x E_i, y) = g_i (x, r_i⁻ y)`.
    LastE,
}

pub struct Pairing {
    cartan: CartanSpec,
    memo: Mutex<HashMap<(Word, Word), RatFunc>>,
}

impl Pairing {
    pub fn new(cartan: CartanSpec) -> Self {
        Pairing { cartan, memo: Mutex::new(HashMap::new()) }
    }

    pub fn cartan(&self) -> &CartanSpec {
        &self.cartan
    }

    fn wt(&self, w: &Word) -> Weight {
        w.weight(self.cartan.rank())
    }

    /// Remove one `i` letter at each position, weighting by `coef(before, after)`.
    fn strip(&self, i: usize, w: &Word, coef: impl Fn(&Weight, &Weight) -> RatFunc) -> LinComb<Word> {
        let mut out = LinComb::zero();
        for (k, &l) in w.0.iter().enumerate() {
            if l as usize != i {
                continue;
            }
            let before = self.wt(&Word(w.0[..k].to_vec()));
            let after = self.wt(&Word(w.0[k + 1..].to_vec()));
            out.add_term(Word([&w.0[..k], &w.0[k + 1..]].concat()), coef(&before, &after));
        }
        out
    }

    fn rplus_r_word(&self, i: usize, w: &Word) -> UPlusElem {
        let ai = self.cartan.alpha(i);
        self.strip(i, w, |_, a| self.cartan.brace(&ai, a))
    }

    fn rplus_l_word(&self, i: usize, w: &Word) -> UPlusElem {
        let ai = self.cartan.alpha(i);
        self.strip(i, w, |b, _| self.cartan.brace(b, &ai))
    }

    fn rminus_r_word(&self, i: usize, w: &Word) -> UMinusElem {
        let ai = self.cartan.alpha(i);
        self.strip(i, w, |_, a| self.cartan.brace(a, &ai))
    }

    fn rminus_l_word(&self, i: usize, w: &Word) -> UMinusElem {
        let ai = self.cartan.alpha(i);
        self.strip(i, w, |b, _| self.cartan.brace(&ai, b))
    }

    /// `r_i⁺`.
    pub fn rplus_r(&self, i: usize, x: &UPlusElem) -> UPlusElem {
        x.apply(|w| self.rplus_r_word(i, w))
    }

    /// `_i r⁺`.
    pub fn rplus_l(&self, i: usize, x: &UPlusElem) -> UPlusElem {
        x.apply(|w| self.rplus_l_word(i, w))
    }

    /// `r_i⁻`; its t-exponents are those of `r_i⁺` with `t ↦ t⁻¹`.
    pub fn rminus_r(&self, i: usize, y: &UMinusElem) -> UMinusElem {
        y.apply(|w| self.rminus_r_word(i, w))
    }

    /// `_i r⁻`.
    pub fn rminus_l(&self, i: usize, y: &UMinusElem) -> UMinusElem {
        y.apply(|w| self.rminus_l_word(i, w))
    }

    /// `g_i = (v_i⁻¹ − v_i)⁻¹`.
    pub fn generator_value(&self, i: usize) -> RatFunc {
        let vi = self.cartan.v_i(i);
        (&vi.pow(-1) - &vi).inv().expect("v_i is never ±1")
    }

    /// `(x, y)_φ` on an E-word and an F-word, by stripping the first F-letter.
    pub fn phi_words(&self, x: &Word, y: &Word) -> RatFunc {
        let rank = self.cartan.rank();
        if x.degree(rank) != y.degree(rank) {
            return RatFunc::zero();
        }
        if y.is_empty() {
            return RatFunc::one();
        }
        let key = (x.clone(), y.clone());
        if let Some(r) = self.memo.lock().expect("memo lock").get(&key) {
            return r.clone();
        }
        let i = y.0[0] as usize;
        let tail = Word(y.0[1..].to_vec());
        let inner: RatFunc = self.rplus_l_word(i, x).iter().map(|(w, c)| c * &self.phi_words(w, &tail)).sum();
        let r = &self.generator_value(i) * &inner;
        self.memo.lock().expect("memo lock").insert(key, r.clone());
        r
    }

    pub fn phi(&self, x: &UPlusElem, y: &UMinusElem) -> RatFunc {
        x.eval(|a| y.eval(|b| self.phi_words(a, b)))
    }

    /// `(x, y)_φ` by an explicitly chosen recursion, without memoization.
    pub fn phi_words_by(&self, route: PeelRoute, x: &Word, y: &Word) -> RatFunc {
        let rank = self.cartan.rank();
        if x.degree(rank) != y.degree(rank) {
            return RatFunc::zero();
        }
        if x.is_empty() {
            return RatFunc::one();
        }
        let (i, reduced, other_is_x) = match route {
            PeelRoute::FirstF => {
                let i = y.0[0] as usize;
                (i, Word(y.0[1..].to_vec()), false)
            }
            PeelRoute::LastF => {
                let i = *y.0.last().expect("nonempty") as usize;
                (i, Word(y.0[..y.len() - 1].to_vec()), false)
            }
            PeelRoute::FirstE => {
                let i = x.0[0] as usize;
                (i, Word(x.0[1..].to_vec()), true)
            }
            PeelRoute::LastE => {
                let i = *x.0.last().expect("nonempty") as usize;
                (i, Word(x.0[..x.len() - 1].to_vec()), true)
            }
        };
        let inner: RatFunc = if other_is_x {
            let d = match route {
                PeelRoute::FirstE => self.rminus_l_word(i, y),
                _ => self.rminus_r_word(i, y),
            };
            d.iter().map(|(w, c)| c * &self.phi_words_by(route, &reduced, w)).sum()
        } else {
            let d = match route {
                PeelRoute::FirstF => self.rplus_l_word(i, x),
                _ => self.rplus_r_word(i, x),
            };
            d.iter().map(|(w, c)| c * &self.phi_words_by(route, w, &reduced)).sum()
        };
        &self.generator_value(i) * &inner
    }

    /// `(x, y)_φ̄ = overline((x̄, ȳ)_φ)`.
    pub fn phi_bar(&self, x: &UPlusElem, y: &UMinusElem) -> RatFunc {
        self.phi(&x.map_coeffs(RatFunc::bar), &y.map_coeffs(RatFunc::bar)).bar()
    }

    /// The exponent `s` with `σ(w) = t^s reverse(w)` on the free algebra.
    fn sigma_exponent(&self, w: &Word) -> Exp {
        let c = &self.cartan;
        let mut prefix = Weight::zero(c.rank());
        let mut s = Exp::from_integer(0);
        for &l in &w.0 {
            let a = c.alpha(l as usize);
            s += c.angle(&a, &prefix) - c.angle(&prefix, &a);
            prefix = &prefix + &a;
        }
        s
    }

    /// `σ⁺`: reversal of E-words with the free-algebra t-twist.
    pub fn sigma_plus(&self, x: &UPlusElem) -> UPlusElem {
        x.apply(|w| LinComb::single(w.reversed(), self.cartan.mono(Exp::from_integer(0), self.sigma_exponent(w))))
    }

    /// `σ⁻`: reversal of F-words with the t-twist inverted.
    pub fn sigma_minus(&self, y: &UMinusElem) -> UMinusElem {
        y.apply(|w| LinComb::single(w.reversed(), self.cartan.mono(Exp::from_integer(0), -self.sigma_exponent(w))))
    }

    /// The prefactor `(−1)^{tr ν} v^{−ν·ν/2} v_ν` relating `(,)_φ̄` to `(, σ⁻(·))_φ` in degree `ν`.
    pub fn barred_prefactor(&self, nu: &Degree) -> RatFunc {
        let c = &self.cartan;
        let w = nu.weight();
        let sign = if nu.tr().is_multiple_of(2) { RatFunc::one() } else { RatFunc::from_int(-1) };
        let half = c.mono(-c.dot(&w, &w) / Exp::from_integer(2), Exp::from_integer(0));
        &(&sign * &half) * &c.v_deg(&w)
    }

    /// `[phi(e, f)]` over the given words, which must all have degree `mu`.
    pub fn gram(&self, mu: &Degree, ewords: &[Word], fwords: &[Word]) -> Result<DenseMatrix, PairingError> {
        let rank = self.cartan.rank();
        for w in ewords.iter().chain(fwords) {
            let d = w.degree(rank);
            if &d != mu {
                return Err(PairingError::DegreeMismatch { word: w.to_string(), found: d, expected: mu.clone() });
            }
        }
        Ok(DenseMatrix::from_rows(
            ewords.iter().map(|e| fwords.iter().map(|f| self.phi_words(e, f)).collect()).collect(),
        ))
    }

    /// Gram matrix over all words of degree `mu`, in lexicographic order.
    pub fn gram_all(&self, mu: &Degree) -> DenseMatrix {
        let ws = words_of_degree(mu);
        self.gram(mu, &ws, &ws).expect("words have the requested degree")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(ix: &[usize]) -> Word {
        Word::from_indices(ix)
    }

    fn one(ix: &[usize]) -> LinComb<Word> {
        LinComb::basis(w(ix))
    }

    #[test]
    fn derivation_examples() {
        let p = Pairing::new(CartanSpec::sl3());
        let v2 = RatFunc::v_pow(2);
        assert_eq!(p.rplus_l(0, &one(&[0])), one(&[]));
        assert_eq!(p.rplus_l(0, &one(&[0, 0])), one(&[0]).scale(&(RatFunc::one() + v2.clone())));
        assert_eq!(p.rplus_r(0, &one(&[1, 0])), one(&[1]));
        assert_eq!(p.rminus_l(0, &one(&[0])), one(&[]));
        assert_eq!(p.rminus_l(0, &one(&[0, 0])), one(&[0]).scale(&(RatFunc::one() + v2)));
        assert_eq!(p.rminus_r(0, &one(&[1, 0])), one(&[1]));
    }

    #[test]
    fn phi_examples() {
        let p = Pairing::new(CartanSpec::sl3());
        let v = RatFunc::v();
        let g = (&v.pow(-1) - &v).inv().unwrap();
        assert_eq!(p.phi_words(&w(&[0]), &w(&[0])), g);
        assert_eq!(p.phi_words(&w(&[0]), &w(&[1])), RatFunc::zero());
        assert_eq!(p.phi_words(&w(&[]), &w(&[])), RatFunc::one());
        let expect = &(RatFunc::one() + RatFunc::v_pow(2)) * &g.pow(2);
        assert_eq!(p.phi_words(&w(&[0, 0]), &w(&[0, 0])), expect);
        assert_eq!(p.phi_words_by(PeelRoute::LastF, &w(&[0, 0]), &w(&[0, 0])), expect);
    }

    #[test]
    fn barred_generator_value() {
        let p = Pairing::new(CartanSpec::sl3());
        let v = RatFunc::v();
        let expect = (&v - &v.pow(-1)).inv().unwrap();
        assert_eq!(p.phi_bar(&one(&[1]), &one(&[1])), expect);
    }

    #[test]
    fn gram_shapes_and_ranks() {
        let p = Pairing::new(CartanSpec::sl3());
        assert_eq!(p.gram_all(&Degree(vec![1, 1])).rank(), 2);
        let g = p.gram_all(&Degree(vec![2, 1]));
        assert_eq!((g.rows(), g.rank()), (3, 2));
        assert!(p.gram(&Degree(vec![1, 1]), &[w(&[0])], &[w(&[0, 1])]).is_err());
    }
}
