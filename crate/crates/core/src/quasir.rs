//! Dual bases of paired weight spaces and the components of the quasi-R-matrix.
//!
//! For each degree `μ` a basis `B_μ` of F-words is chosen, together with the
//! dual E-combinations `b*` satisfying `(b*, b')_φ = δ`. Both are cached.

use std::collections::HashMap;
use std::sync::{Arc, Mutex};

use crate::cartan::{CartanSpec, Degree};
use crate::freealg::{words_of_degree, Word};
use crate::lincomb::LinComb;
use crate::matrix::DenseMatrix;
use crate::pairing::{Pairing, UMinusElem, UPlusElem};
use crate::ratfield::{Exp, RatFunc};

/// Order in which candidate F-words are offered to the basis selection.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub enum BasisOrder {
    #[default]
    Lex,
    ReverseLex,
}

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum QuasiRError {
    #[error("element is not homogeneous of degree {0}")]
    NotHomogeneous(Degree),
}

#[derive(Clone, Debug)]
pub struct WeightBasis {
    pub mu: Degree,
    /// The chosen F-words `b`.
    pub basis: Vec<Word>,
    /// E-words spanning the duals; the mirror of `basis` unless that pairs singularly.
    pub ewords: Vec<Word>,
    /// Row `k` expresses `b*_k` in `ewords`.
    pub dual_matrix: DenseMatrix,
}

impl WeightBasis {
    pub fn len(&self) -> usize {
        self.basis.len()
    }

    pub fn is_empty(&self) -> bool {
        self.basis.is_empty()
    }

    pub fn dual(&self, k: usize) -> UPlusElem {
        self.ewords.iter().enumerate().map(|(l, w)| (w.clone(), self.dual_matrix.get(k, l).clone())).collect()
    }
}

/// `Σ` of F-word ⊗ E-word terms in a single degree.
#[derive(Clone, Debug, PartialEq)]
pub struct ThetaComponent {
    pub mu: Degree,
    pub terms: LinComb<(Word, Word)>,
}

pub struct QuasiR {
    pairing: Pairing,
    bases: Mutex<HashMap<(Degree, BasisOrder), Arc<WeightBasis>>>,
}

impl QuasiR {
    pub fn new(cartan: CartanSpec) -> Self {
        QuasiR { pairing: Pairing::new(cartan), bases: Mutex::new(HashMap::new()) }
    }

    pub fn pairing(&self) -> &Pairing {
        &self.pairing
    }

    pub fn cartan(&self) -> &CartanSpec {
        self.pairing.cartan()
    }

    /// Greedy selection of independent F-words, then inversion of their Gram block.
    pub fn select_basis(&self, mu: &Degree, order: BasisOrder) -> Arc<WeightBasis> {
        let key = (mu.clone(), order);
        if let Some(b) = self.bases.lock().expect("basis cache").get(&key) {
            return b.clone();
        }
        let mut words = words_of_degree(mu);
        if order == BasisOrder::ReverseLex {
            words.reverse();
        }
        let gram = self.pairing.gram(mu, &words, &words).expect("words of degree mu");
        let cols = gram.independent_columns();
        let basis: Vec<Word> = cols.iter().map(|&c| words[c].clone()).collect();
        let mirror = gram.select(&cols, &cols);
        let (ewords, block) = match mirror.inverse() {
            Ok(_) => (basis.clone(), mirror),
            Err(_) => {
                let all: Vec<usize> = (0..words.len()).collect();
                let rows = gram.select(&all, &cols).transpose().independent_columns();
                (rows.iter().map(|&r| words[r].clone()).collect(), gram.select(&rows, &cols))
            }
        };
        // With G[l][m] = (e_l, b_m)_φ, duality Σ_l D[k][l] G[l][m] = δ_km means D = G⁻¹.
        let dual_matrix = block.inverse().expect("selected block is invertible");
        let wb = Arc::new(WeightBasis { mu: mu.clone(), basis, ewords, dual_matrix });
        self.bases.lock().expect("basis cache").insert(key, wb.clone());
        wb
    }

    /// `Θ_μ = Σ_b b ⊗ b*`; degree zero gives `1 ⊗ 1`.
    pub fn theta(&self, mu: &Degree, order: BasisOrder) -> ThetaComponent {
        let wb = self.select_basis(mu, order);
        let mut terms = LinComb::zero();
        for (k, b) in wb.basis.iter().enumerate() {
            for (e, c) in wb.dual(k).iter() {
                terms.add_term((b.clone(), e.clone()), c.clone());
            }
        }
        ThetaComponent { mu: mu.clone(), terms }
    }

    /// `Θ̄_ν = (−1)^{tr ν} v^{ν·ν/2} v_{−ν} Σ_b b ⊗ σ⁺(b*)`.
    pub fn theta_bar(&self, nu: &Degree, order: BasisOrder) -> ThetaComponent {
        let c = self.cartan();
        let w = nu.weight();
        let sign = if nu.tr().is_multiple_of(2) { RatFunc::one() } else { RatFunc::from_int(-1) };
        let pref = &(&sign * &c.mono(c.dot(&w, &w) / Exp::from_integer(2), Exp::from_integer(0))) * &c.v_deg(&-&w);
        let wb = self.select_basis(nu, order);
        let mut terms = LinComb::zero();
        for (k, b) in wb.basis.iter().enumerate() {
            for (e, x) in self.pairing.sigma_plus(&wb.dual(k)).iter() {
                terms.add_term((b.clone(), e.clone()), x * &pref);
            }
        }
        ThetaComponent { mu: nu.clone(), terms }
    }

    /// `Θ̄_ν` as the bar of `Θ_ν`: F-words are bar-invariant, so only the dual
    /// coefficients are conjugated.
    pub fn theta_bar_by_conjugation(&self, nu: &Degree, order: BasisOrder) -> ThetaComponent {
        let th = self.theta(nu, order);
        ThetaComponent { mu: th.mu, terms: th.terms.map_coeffs(RatFunc::bar) }
    }

    fn check_degree(&self, x: &LinComb<Word>, mu: &Degree) -> Result<(), QuasiRError> {
        let rank = self.cartan().rank();
        if x.iter().any(|(w, _)| &w.degree(rank) != mu) {
            return Err(QuasiRError::NotHomogeneous(mu.clone()));
        }
        Ok(())
    }

    /// Coefficients `(x, b)_φ` of `x = Σ_b (x, b)_φ b*`.
    pub fn expand(&self, x: &UPlusElem, mu: &Degree) -> Result<Vec<RatFunc>, QuasiRError> {
        self.check_degree(x, mu)?;
        let wb = self.select_basis(mu, BasisOrder::Lex);
        Ok(wb.basis.iter().map(|b| self.pairing.phi(x, &LinComb::basis(b.clone()))).collect())
    }

    /// `Σ_b c_b b*`.
    pub fn reconstruct(&self, coeffs: &[RatFunc], mu: &Degree) -> UPlusElem {
        let wb = self.select_basis(mu, BasisOrder::Lex);
        let mut out = UPlusElem::zero();
        for (k, c) in coeffs.iter().enumerate() {
            out = &out + &wb.dual(k).scale(c);
        }
        out
    }

    /// Coefficients `(b*, y)_φ` of `y = Σ_b (b*, y)_φ b`.
    pub fn expand_minus(&self, y: &UMinusElem, mu: &Degree) -> Result<Vec<RatFunc>, QuasiRError> {
        self.check_degree(y, mu)?;
        let wb = self.select_basis(mu, BasisOrder::Lex);
        Ok((0..wb.len()).map(|k| self.pairing.phi(&wb.dual(k), y)).collect())
    }

    /// One line `mu | fword | eword | coefficient` per term of `Θ_μ`.
    pub fn dump(&self, mu: &Degree) -> Vec<String> {
        self.theta(mu, BasisOrder::Lex)
            .terms
            .iter()
            .map(|((f, e), c)| format!("{} | {} | {} | {}", mu, f.render("F"), e.render("E"), c))
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rank_one_components() {
        let q = QuasiR::new(CartanSpec::sl2());
        let v = RatFunc::v();
        let d = Degree(vec![1]);
        let th = q.theta(&d, BasisOrder::Lex);
        let e = (Word::letter(0), Word::letter(0));
        assert_eq!(th.terms, LinComb::single(e.clone(), &v.pow(-1) - &v));
        assert_eq!(q.theta_bar(&d, BasisOrder::Lex).terms, LinComb::single(e, &v - &v.pow(-1)));
        assert_eq!(q.theta(&Degree(vec![0]), BasisOrder::Lex).terms.len(), 1);
    }

    #[test]
    fn sl3_basis_sizes() {
        let q = QuasiR::new(CartanSpec::sl3());
        assert_eq!(q.select_basis(&Degree(vec![1, 1]), BasisOrder::Lex).len(), 2);
        assert_eq!(q.select_basis(&Degree(vec![2, 1]), BasisOrder::Lex).len(), 2);
        assert_eq!(q.select_basis(&Degree(vec![0, 0]), BasisOrder::Lex).basis, vec![Word::empty()]);
    }

    #[test]
    fn duals_are_dual() {
        let q = QuasiR::new(CartanSpec::sl3());
        for mu in Degree::all_up_to(2, 4) {
            for order in [BasisOrder::Lex, BasisOrder::ReverseLex] {
                let wb = q.select_basis(&mu, order);
                for k in 0..wb.len() {
                    for (m, b) in wb.basis.iter().enumerate() {
                        let expect = if k == m { RatFunc::one() } else { RatFunc::zero() };
                        assert_eq!(q.pairing().phi(&wb.dual(k), &LinComb::basis(b.clone())), expect);
                    }
                }
            }
        }
    }

    #[test]
    fn expansion_roundtrip() {
        let q = QuasiR::new(CartanSpec::sl2());
        let d = Degree(vec![2]);
        let x = LinComb::basis(Word::from_indices(&[0, 0]));
        let c = q.expand(&x, &d).unwrap();
        assert_eq!(c, vec![q.pairing().phi_words(&Word::from_indices(&[0, 0]), &Word::from_indices(&[0, 0]))]);
        assert_eq!(q.reconstruct(&c, &d), x);
        assert!(q.expand(&x, &Degree(vec![1])).is_err());
    }
}
