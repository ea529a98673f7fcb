//! The free algebra `'f` on generators `θ_i`: twisted tensor products, the
//! coproduct `r` and its bar version, the derivations `r_i` and `_i r`, the
//! anti-involution `σ`, the symmetric bilinear form and Serre elements.

use std::collections::HashMap;
use std::fmt;
use std::sync::Mutex;

use thiserror::Error;

use crate::cartan::{CartanSpec, Degree, Weight};
use crate::lincomb::LinComb;
use crate::ratfield::{Exp, RatFunc};

/// A monomial `θ_{i1} ⋯ θ_{il}`; letters are 0-based generator indices.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Word(pub Vec<u8>);

impl Word {
    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn letter(i: usize) -> Self {
        Word(vec![i as u8])
    }

    pub fn from_indices(ix: &[usize]) -> Self {
        Word(ix.iter().map(|&i| i as u8).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn concat(&self, o: &Word) -> Word {
        let mut v = self.0.clone();
        v.extend_from_slice(&o.0);
        Word(v)
    }

    pub fn reversed(&self) -> Word {
        Word(self.0.iter().rev().copied().collect())
    }

    pub fn degree(&self, rank: usize) -> Degree {
        let mut d = vec![0u32; rank];
        for &l in &self.0 {
            d[l as usize] += 1;
        }
        Degree(d)
    }

    pub fn weight(&self, rank: usize) -> Weight {
        self.degree(rank).weight()
    }

    /// Letters written 1-based after `prefix`, e.g. `F1F2`; the empty word is `1`.
    pub fn render(&self, prefix: &str) -> String {
        if self.0.is_empty() {
            return "1".to_string();
        }
        self.0.iter().map(|l| format!("{prefix}{}", l + 1)).collect()
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.render("θ"))
    }
}

/// All words of the given degree, in lexicographic order.
pub fn words_of_degree(deg: &Degree) -> Vec<Word> {
    fn go(left: &mut [u32], cur: &mut Vec<u8>, out: &mut Vec<Word>) {
        if left.iter().all(|&x| x == 0) {
            out.push(Word(cur.clone()));
            return;
        }
        for i in 0..left.len() {
            if left[i] > 0 {
                left[i] -= 1;
                cur.push(i as u8);
                go(left, cur, out);
                cur.pop();
                left[i] += 1;
            }
        }
    }
    let mut out = Vec::new();
    go(&mut deg.0.clone(), &mut Vec::new(), &mut out);
    out
}

/// All words of length at most `max_len` over `rank` letters, shortest first.
pub fn words_up_to(rank: usize, max_len: usize) -> Vec<Word> {
    let mut out = vec![Word::empty()];
    let mut layer = vec![Word::empty()];
    for _ in 0..max_len {
        let mut next = Vec::new();
        for w in &layer {
            for i in 0..rank {
                next.push(w.concat(&Word::letter(i)));
            }
        }
        out.extend(next.iter().cloned());
        layer = next;
    }
    out
}

pub type FElem = LinComb<Word>;
pub type FTensor = LinComb<(Word, Word)>;
pub type FTensor3 = LinComb<(Word, Word, Word)>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FreeAlgError {
    #[error("Serre element needs distinct indices, got {0} twice")]
    SameIndex(usize),
    #[error("generator index {0} out of range")]
    BadIndex(usize),
}

/// Concatenation product, extended bilinearly.
pub fn mul(x: &FElem, y: &FElem) -> FElem {
    let mut out = FElem::zero();
    for (a, c) in x.iter() {
        for (b, d) in y.iter() {
            out.add_term(a.concat(b), c * d);
        }
    }
    out
}

/// Coefficient-wise bar involution.
pub fn bar(x: &FElem) -> FElem {
    x.map_coeffs(RatFunc::bar)
}

pub fn bar_tensor(x: &FTensor) -> FTensor {
    x.map_coeffs(RatFunc::bar)
}

/// Context for computations in `'f` over a fixed Cartan datum.
#[derive(Debug)]
pub struct FreeAlgebra {
    cartan: CartanSpec,
    form_memo: Mutex<HashMap<(Word, Word), RatFunc>>,
}

impl FreeAlgebra {
    pub fn new(cartan: CartanSpec) -> Self {
        FreeAlgebra { cartan, form_memo: Mutex::new(HashMap::new()) }
    }

    pub fn cartan(&self) -> &CartanSpec {
        &self.cartan
    }

    fn wt(&self, w: &Word) -> Weight {
        w.weight(self.cartan.rank())
    }

    pub fn theta(&self, i: usize) -> FElem {
        FElem::basis(Word::letter(i))
    }

    /// `(x1⊗x2)(y1⊗y2) = v^{|y1|·|x2|} t^{⟨|y1|,|x2|⟩−⟨|x2|,|y1|⟩} x1y1⊗x2y2`.
    pub fn tensor_mul(&self, a: &FTensor, b: &FTensor) -> FTensor {
        self.twisted_product(a, b, 1)
    }

    /// The product of `'f ⊗̄ 'f`, with `v^{−|y1|·|x2|}` in place of `v^{|y1|·|x2|}`.
    pub fn tensor_mul_bar(&self, a: &FTensor, b: &FTensor) -> FTensor {
        self.twisted_product(a, b, -1)
    }

    fn twisted_product(&self, a: &FTensor, b: &FTensor, sign: i64) -> FTensor {
        let c = &self.cartan;
        let mut out = FTensor::zero();
        for ((x1, x2), p) in a.iter() {
            let w2 = self.wt(x2);
            for ((y1, y2), q) in b.iter() {
                let w1 = self.wt(y1);
                let tw = c.mono(c.dot(&w1, &w2) * sign, c.angle(&w1, &w2) - c.angle(&w2, &w1));
                out.add_term((x1.concat(y1), x2.concat(y2)), &(p * q) * &tw);
            }
        }
        out
    }

    /// `r` on a single word: the sum over splittings of the letters into a left
    /// and a right subword, each letter moved left past right-going letters
    /// contributing a twist.
    pub fn coproduct_word(&self, w: &Word) -> FTensor {
        let c = &self.cartan;
        let n = w.len();
        let letters: Vec<Weight> = w.0.iter().map(|&l| c.alpha(l as usize)).collect();
        let mut out = FTensor::zero();
        for mask in 0u32..(1u32 << n) {
            let mut left = Vec::new();
            let mut right = Vec::new();
            let mut passed = Weight::zero(c.rank());
            let mut coef = RatFunc::one();
            for (k, &l) in w.0.iter().enumerate() {
                if mask & (1 << k) != 0 {
                    if !passed.is_zero() {
                        coef *= &c.brace(&passed, &letters[k]);
                    }
                    left.push(l);
                } else {
                    passed = &passed + &letters[k];
                    right.push(l);
                }
            }
            out.add_term((Word(left), Word(right)), coef);
        }
        out
    }

    pub fn coproduct(&self, x: &FElem) -> FTensor {
        x.apply(|w| self.coproduct_word(w))
    }

    /// `r` computed as the product of `r(θ_i) = θ_i⊗1 + 1⊗θ_i` over the letters.
    pub fn coproduct_by_products(&self, x: &FElem) -> FTensor {
        x.apply(|w| {
            let mut acc = FTensor::basis((Word::empty(), Word::empty()));
            for &l in &w.0 {
                let g: FTensor = [
                    ((Word(vec![l]), Word::empty()), RatFunc::one()),
                    ((Word::empty(), Word(vec![l])), RatFunc::one()),
                ]
                .into_iter()
                .collect();
                acc = self.tensor_mul(&acc, &g);
            }
            acc
        })
    }

    /// `r̄(x) = Σ v^{−|x1|·|x2|} t^{⟨|x2|,|x1|⟩−⟨|x1|,|x2|⟩} x2⊗x1` where `r(x) = Σ x1⊗x2`.
    pub fn coproduct_bar(&self, x: &FElem) -> FTensor {
        let c = &self.cartan;
        self.coproduct(x).apply(|(x1, x2)| {
            let (a, b) = (self.wt(x1), self.wt(x2));
            let s = c.mono(-c.dot(&a, &b), c.angle(&b, &a) - c.angle(&a, &b));
            FTensor::single((x2.clone(), x1.clone()), s)
        })
    }

    /// `r̄(x) = overline(r(x̄))`.
    pub fn coproduct_bar_conj(&self, x: &FElem) -> FTensor {
        bar_tensor(&self.coproduct(&bar(x)))
    }

    /// `(r⊗1)` applied to a tensor.
    pub fn coproduct_left(&self, t: &FTensor) -> FTensor3 {
        t.apply(|(a, b)| self.coproduct_word(a).apply(|(x, y)| FTensor3::basis((x.clone(), y.clone(), b.clone()))))
    }

    /// `(1⊗r)` applied to a tensor.
    pub fn coproduct_right(&self, t: &FTensor) -> FTensor3 {
        t.apply(|(a, b)| self.coproduct_word(b).apply(|(x, y)| FTensor3::basis((a.clone(), x.clone(), y.clone()))))
    }

    /// Same as [`Self::coproduct_left`] but with `r̄`.
    pub fn coproduct_bar_left(&self, t: &FTensor) -> FTensor3 {
        t.apply(|(a, b)| {
            self.coproduct_bar(&FElem::basis(a.clone()))
                .apply(|(x, y)| FTensor3::basis((x.clone(), y.clone(), b.clone())))
        })
    }

    pub fn coproduct_bar_right(&self, t: &FTensor) -> FTensor3 {
        t.apply(|(a, b)| {
            self.coproduct_bar(&FElem::basis(b.clone()))
                .apply(|(x, y)| FTensor3::basis((a.clone(), x.clone(), y.clone())))
        })
    }

    /// `r_i`: removes an `i` letter, twisting by the part of the word after it.
    pub fn deriv_r(&self, i: usize, x: &FElem) -> FElem {
        x.apply(|w| self.deriv_word(i, w, false))
    }

    /// `_i r`: removes an `i` letter, twisting by the part of the word before it.
    pub fn deriv_l(&self, i: usize, x: &FElem) -> FElem {
        x.apply(|w| self.deriv_word(i, w, true))
    }

    fn deriv_word(&self, i: usize, w: &Word, from_left: bool) -> FElem {
        let c = &self.cartan;
        let ai = c.alpha(i);
        let mut out = FElem::zero();
        for (k, &l) in w.0.iter().enumerate() {
            if l as usize != i {
                continue;
            }
            let rest = Word([&w.0[..k], &w.0[k + 1..]].concat());
            let coef = if from_left {
                c.brace(&self.wt(&Word(w.0[..k].to_vec())), &ai)
            } else {
                c.brace(&ai, &self.wt(&Word(w.0[k + 1..].to_vec())))
            };
            out.add_term(rest, coef);
        }
        out
    }

    /// Exponent `s` with `σ(w) = t^s · reverse(w)`.
    pub fn sigma_exponent(&self, w: &Word) -> Exp {
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

    pub fn sigma(&self, x: &FElem) -> FElem {
        x.apply(|w| FElem::single(w.reversed(), self.cartan.mono(Exp::from_integer(0), self.sigma_exponent(w))))
    }

    pub fn sigma_tensor(&self, t: &FTensor) -> FTensor {
        t.apply(|(a, b)| {
            let s = self.sigma_exponent(a) + self.sigma_exponent(b);
            FTensor::single((a.reversed(), b.reversed()), self.cartan.mono(Exp::from_integer(0), s))
        })
    }

    /// `ρ(x⊗y) = t^{⟨|y|,|x|⟩−⟨|x|,|y|⟩} y⊗x`.
    pub fn rho(&self, t: &FTensor) -> FTensor {
        let c = &self.cartan;
        t.apply(|(a, b)| {
            let (x, y) = (self.wt(a), self.wt(b));
            FTensor::single((b.clone(), a.clone()), c.mono(Exp::from_integer(0), c.angle(&y, &x) - c.angle(&x, &y)))
        })
    }

    /// `(1 − v_i^{-2})^{-1}`.
    fn form_generator(&self, i: usize) -> RatFunc {
        (RatFunc::one() - self.cartan.v_i(i).pow(-2)).inv().expect("nonzero")
    }

    /// Twist `t^{2[i, ν−i]}` for peeling a letter `i` off a word of degree `ν`.
    fn form_twist(&self, i: usize, nu: &Weight) -> RatFunc {
        let c = &self.cartan;
        let ai = c.alpha(i);
        c.mono(Exp::from_integer(0), c.bracket(&ai, &(nu - &ai)) * 2)
    }

    /// The symmetric bilinear form on words, by peeling the first letter of `y`.
    pub fn form_words(&self, x: &Word, y: &Word) -> RatFunc {
        let rank = self.cartan.rank();
        if x.degree(rank) != y.degree(rank) {
            return RatFunc::zero();
        }
        if y.is_empty() {
            return RatFunc::one();
        }
        let key = (x.clone(), y.clone());
        if let Some(r) = self.form_memo.lock().expect("memo lock").get(&key) {
            return r.clone();
        }
        let i = y.0[0] as usize;
        let tail = Word(y.0[1..].to_vec());
        let d = self.deriv_word(i, x, true);
        let inner: RatFunc = d.iter().map(|(w, c)| c * &self.form_words(w, &tail)).sum();
        let r = &(&self.form_generator(i) * &self.form_twist(i, &self.wt(x))) * &inner;
        self.form_memo.lock().expect("memo lock").insert(key, r.clone());
        r
    }

    pub fn form(&self, x: &FElem, y: &FElem) -> RatFunc {
        x.eval(|a| y.eval(|b| self.form_words(a, b)))
    }

    /// The same form computed by peeling the first letter of `x` through
    /// `(x'x'', y) = (x'⊗x'', r(y))`.
    pub fn form_words_peel_left(&self, x: &Word, y: &Word) -> RatFunc {
        let rank = self.cartan.rank();
        if x.degree(rank) != y.degree(rank) {
            return RatFunc::zero();
        }
        if x.is_empty() {
            return RatFunc::one();
        }
        let i = x.0[0] as usize;
        let tail = Word(x.0[1..].to_vec());
        let d = self.deriv_word(i, y, true);
        let inner: RatFunc = d.iter().map(|(w, c)| c * &self.form_words_peel_left(&tail, w)).sum();
        &(&self.form_generator(i) * &self.form_twist(i, &self.wt(y))) * &inner
    }

    /// `(x1⊗x2, y1⊗y2) = t^{2[|x1|,|x2|]} (x1,y1)(x2,y2)`.
    pub fn form_tensor(&self, a: &FTensor, b: &FTensor) -> RatFunc {
        let c = &self.cartan;
        a.eval(|(x1, x2)| {
            let tw = c.mono(Exp::from_integer(0), c.bracket(&self.wt(x1), &self.wt(x2)) * 2);
            &tw * &b.eval(|(y1, y2)| &self.form_words(x1, y1) * &self.form_words(x2, y2))
        })
    }

    /// `θ_i^{(n)} = θ_i^n / [n]!_{v_i,t_i}`.
    pub fn divided_power(&self, i: usize, n: u32) -> FElem {
        let w = Word(vec![i as u8; n as usize]);
        FElem::single(w, self.cartan.qfact_i(n, i).inv().expect("nonzero"))
    }

    /// `Σ_{p+p'=N} (−1)^p t_i^{−p(p' − 2⟨i,j⟩/i·i + 2⟨j,i⟩/i·i)} θ_i^{(p)} θ_j θ_i^{(p')}`
    /// with `N = 1 − 2 i·j / i·i`.
    pub fn serre_element(&self, i: usize, j: usize) -> Result<FElem, FreeAlgError> {
        let c = &self.cartan;
        let n = c.rank();
        if i >= n {
            return Err(FreeAlgError::BadIndex(i));
        }
        if j >= n {
            return Err(FreeAlgError::BadIndex(j));
        }
        if i == j {
            return Err(FreeAlgError::SameIndex(i));
        }
        let dii = c.half_norm(i);
        let top = (1 - c.dot_ij(i, j) / dii) as u32;
        let mut out = FElem::zero();
        for p in 0..=top {
            let q = top - p;
            // t_i^{x} = t^{Ω_ii x}; the exponent is an integer
            let e = -i64::from(p) * (i64::from(q) * dii - c.angle_ij(i, j) + c.angle_ij(j, i));
            let sign = if p % 2 == 0 { 1 } else { -1 };
            let coef = RatFunc::from_int(sign) * c.mono(Exp::from_integer(0), Exp::from_integer(e));
            let term = mul(&mul(&self.divided_power(i, p), &self.theta(j)), &self.divided_power(i, q));
            out = &out + &term.scale(&coef);
        }
        Ok(out)
    }
}
