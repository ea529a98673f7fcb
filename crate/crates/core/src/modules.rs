//! Finite-dimensional weight modules, tensor products and duals, the
//! structural maps used by the tangle functor, and the R-matrix.
//!
//! Matrices act on column vectors: entry `(r, c)` of `E_i` is the coefficient
//! of basis vector `r` in `E_i` applied to basis vector `c`. A tensor basis
//! vector `(a, b)` has index `a * dim(N) + b`.

use std::collections::BTreeSet;
use std::fmt;

use crate::cartan::{CartanSpec, Degree, Weight};
use crate::freealg::{FreeAlgebra, Word};
use crate::matrix::SparseMatrix;
use crate::pairing::{UMinusElem, UPlusElem};
use crate::quasir::{BasisOrder, QuasiR, ThetaComponent};
use crate::ratfield::{Exp, RatFunc};

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum ModuleError {
    #[error("this construction needs {0}")]
    WrongDatum(&'static str),
    #[error("shape mismatch: {0}")]
    Shape(String),
    #[error("{generator} entry ({row}, {col}) does not shift weights by the right root")]
    WeightShift { generator: String, row: usize, col: usize },
    #[error("no unique highest weight")]
    NoHighestWeight,
    #[error("defining relations fail: {}", .0.iter().map(|v| v.to_string()).collect::<Vec<_>>().join("; "))]
    Relations(Vec<Violation>),
}

/// A defining relation that fails on a module.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation {
    pub relation: &'static str,
    pub detail: String,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {}", self.relation, self.detail)
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct WeightModule {
    cartan: CartanSpec,
    labels: Vec<String>,
    weights: Vec<Weight>,
    e: Vec<SparseMatrix>,
    f: Vec<SparseMatrix>,
}

impl WeightModule {
    /// Checks shapes and weight shifts; the relations are checked by [`Self::validate`].
    pub fn new(
        cartan: CartanSpec,
        labels: Vec<String>,
        weights: Vec<Weight>,
        e: Vec<SparseMatrix>,
        f: Vec<SparseMatrix>,
    ) -> Result<Self, ModuleError> {
        let n = cartan.rank();
        let dim = weights.len();
        if labels.len() != dim {
            return Err(ModuleError::Shape(format!("{} labels for {dim} basis vectors", labels.len())));
        }
        if let Some(w) = weights.iter().find(|w| w.rank() != n) {
            return Err(ModuleError::Shape(format!("weight {w} has {} coordinates, rank is {n}", w.rank())));
        }
        if e.len() != n || f.len() != n {
            return Err(ModuleError::Shape(format!("need {n} E and F matrices, got {} and {}", e.len(), f.len())));
        }
        for (name, mats, sign) in [("E", &e, 1), ("F", &f, -1)] {
            for (i, m) in mats.iter().enumerate() {
                if m.rows() != dim || m.cols() != dim {
                    return Err(ModuleError::Shape(format!(
                        "{name}{} is {}x{}, dimension is {dim}",
                        i + 1,
                        m.rows(),
                        m.cols()
                    )));
                }
                let shift = cartan.alpha(i).scaled(Exp::from_integer(sign));
                for (r, c, _) in m.entries() {
                    if weights[r] != &weights[c] + &shift {
                        return Err(ModuleError::WeightShift { generator: format!("{name}{}", i + 1), row: r, col: c });
                    }
                }
            }
        }
        Ok(WeightModule { cartan, labels, weights, e, f })
    }

    /// The one-dimensional module of weight zero.
    pub fn trivial(cartan: &CartanSpec) -> Self {
        let n = cartan.rank();
        WeightModule {
            cartan: cartan.clone(),
            labels: vec!["1".into()],
            weights: vec![Weight::zero(n)],
            e: vec![SparseMatrix::zeros(1, 1); n],
            f: vec![SparseMatrix::zeros(1, 1); n],
        }
    }

    /// The simple module of dimension `n + 1` over a rank-one datum, with
    /// weights `(n/2 − k) i`.
    pub fn rank1_simple(cartan: &CartanSpec, n: u32) -> Result<Self, ModuleError> {
        if cartan.rank() != 1 {
            return Err(ModuleError::WrongDatum("a rank-one datum"));
        }
        let dim = n as usize + 1;
        let alpha = cartan.alpha(0);
        let top = alpha.scaled(Exp::new(n as i64, 2));
        let weights: Vec<Weight> = (0..dim).map(|k| &top - &alpha.scaled(Exp::from_integer(k as i64))).collect();
        let mut e = SparseMatrix::zeros(dim, dim);
        let mut f = SparseMatrix::zeros(dim, dim);
        let mut a = RatFunc::zero();
        for k in 1..=dim {
            a = &a + &kappa(cartan, 0, &weights[k - 1]);
            if k < dim {
                e.add_entry(k - 1, k, a.clone());
                f.add_entry(k, k - 1, RatFunc::one());
            }
        }
        assert!(a.is_zero(), "E-coefficients of the rank-one module fail to truncate");
        let labels = (0..dim).map(|k| format!("w{k}")).collect();
        let m = WeightModule::new(cartan.clone(), labels, weights, vec![e], vec![f])?;
        m.check()?;
        Ok(m)
    }

    /// The three-dimensional module over an `sl_3`-type datum with weights
    /// `ω₁`, `ω₁ − α₁`, `ω₁ − α₁ − α₂`; `E₁ = e₁₂`, `E₂ = e₂₃`, and the F's
    /// scaled so that `[E_i, F_i]` acts correctly.
    pub fn sl3_natural(cartan: &CartanSpec) -> Result<Self, ModuleError> {
        if cartan.rank() != 2 || cartan.dot_matrix() != [vec![2, -1], vec![-1, 2]] {
            return Err(ModuleError::WrongDatum("the sl_3 dot product"));
        }
        let w = |a: i64, b: i64| Weight(vec![Exp::new(a, 3), Exp::new(b, 3)]);
        let weights = vec![w(2, 1), w(-1, 1), w(-1, -2)];
        let mut e = vec![SparseMatrix::zeros(3, 3), SparseMatrix::zeros(3, 3)];
        let mut f = e.clone();
        for i in 0..2 {
            e[i].add_entry(i, i + 1, RatFunc::one());
            f[i].add_entry(i + 1, i, kappa(cartan, i, &weights[i]));
        }
        let labels = (1..=3).map(|k| format!("e{k}")).collect();
        let m = WeightModule::new(cartan.clone(), labels, weights, e, f)?;
        m.check()?;
        Ok(m)
    }

    /// Fails with every violated relation.
    pub fn check(&self) -> Result<(), ModuleError> {
        let v = self.validate();
        if v.is_empty() {
            Ok(())
        } else {
            Err(ModuleError::Relations(v))
        }
    }

    pub fn cartan(&self) -> &CartanSpec {
        &self.cartan
    }

    pub fn dim(&self) -> usize {
        self.weights.len()
    }

    pub fn weights(&self) -> &[Weight] {
        &self.weights
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn e(&self, i: usize) -> &SparseMatrix {
        &self.e[i]
    }

    pub fn f(&self, i: usize) -> &SparseMatrix {
        &self.f[i]
    }

    pub fn identity(&self) -> SparseMatrix {
        SparseMatrix::identity(self.dim())
    }

    /// `K_ν`, diagonal with entries `v^{ν·λ} c_{ν,λ}`.
    pub fn k(&self, nu: &Weight) -> SparseMatrix {
        SparseMatrix::diagonal(self.weights.iter().map(|l| self.cartan.k_eigen(nu, l)).collect())
    }

    /// `K'_ν`, diagonal with entries `v^{−ν·λ} c_{ν,λ}`.
    pub fn kprime(&self, nu: &Weight) -> SparseMatrix {
        SparseMatrix::diagonal(self.weights.iter().map(|l| self.cartan.kprime_eigen(nu, l)).collect())
    }

    /// The action of an E-word, leftmost letter applied last.
    pub fn e_word(&self, w: &Word) -> SparseMatrix {
        w.0.iter().fold(self.identity(), |acc, &l| acc.mul(&self.e[l as usize]))
    }

    pub fn f_word(&self, w: &Word) -> SparseMatrix {
        w.0.iter().fold(self.identity(), |acc, &l| acc.mul(&self.f[l as usize]))
    }

    pub fn plus(&self, x: &UPlusElem) -> SparseMatrix {
        x.iter().fold(SparseMatrix::zeros(self.dim(), self.dim()), |acc, (w, c)| acc.add(&self.e_word(w).scale(c)))
    }

    pub fn minus(&self, y: &UMinusElem) -> SparseMatrix {
        y.iter().fold(SparseMatrix::zeros(self.dim(), self.dim()), |acc, (w, c)| acc.add(&self.f_word(w).scale(c)))
    }

    /// Every violated defining relation. The K's act diagonally by
    /// construction, so the inverse relations hold automatically.
    pub fn validate(&self) -> Vec<Violation> {
        let c = &self.cartan;
        let n = c.rank();
        let mut out = Vec::new();
        let mut fail = |relation, detail: String| out.push(Violation { relation, detail });
        for i in 0..n {
            let ai = c.alpha(i);
            let (k, kinv) = (self.k(&ai), self.k(&-&ai));
            let (kp, kpinv) = (self.kprime(&ai), self.kprime(&-&ai));
            for j in 0..n {
                let aj = c.alpha(j);
                let tw = c.angle(&aj, &ai) - c.angle(&ai, &aj);
                let d = c.dot(&ai, &aj);
                let checks = [
                    (&k, &kinv, &self.e[j], c.mono(d, tw), "K E"),
                    (&kp, &kpinv, &self.e[j], c.mono(-d, tw), "K' E"),
                    (&kp, &kpinv, &self.f[j], c.mono(d, -tw), "K' F"),
                    (&k, &kinv, &self.f[j], c.mono(-d, -tw), "K F"),
                ];
                for (a, ainv, x, s, what) in checks {
                    if a.mul(x).mul(ainv) != x.scale(&s) {
                        fail("R2", format!("{what} conjugation for i={}, j={}", i + 1, j + 1));
                    }
                }
                let comm = self.e[i].mul(&self.f[j]).sub(&self.f[j].mul(&self.e[i]));
                let rhs = if i == j {
                    let vi = c.v_i(i);
                    k.sub(&kp).scale(&(&vi - &vi.pow(-1)).inv().expect("v_i is not ±1"))
                } else {
                    SparseMatrix::zeros(self.dim(), self.dim())
                };
                if comm != rhs {
                    fail("R3", format!("[E{}, F{}]", i + 1, j + 1));
                }
                if i != j {
                    let serre = FreeAlgebra::new(c.clone()).serre_element(i, j).expect("i != j");
                    if !self.plus(&serre).is_zero() {
                        fail("R4", format!("E-Serre relation for ({}, {})", i + 1, j + 1));
                    }
                    // The negative half carries t-inverted coefficients.
                    let serre_f = serre.map_coeffs(|x| c.scalar(&x.invert_t()));
                    if !self.minus(&serre_f).is_zero() {
                        fail("R4", format!("F-Serre relation for ({}, {})", i + 1, j + 1));
                    }
                }
            }
        }
        out
    }

    /// The module `M ⊗ N` with `Δ(E_i) = E_i⊗1 + K_i⊗E_i`, `Δ(F_i) = 1⊗F_i + F_i⊗K'_i`.
    pub fn tensor(&self, o: &WeightModule) -> WeightModule {
        assert_eq!(self.cartan, o.cartan, "tensor product over different data");
        let n = self.cartan.rank();
        let (ia, ib) = (self.identity(), o.identity());
        let mut e = Vec::with_capacity(n);
        let mut f = Vec::with_capacity(n);
        for i in 0..n {
            let ai = self.cartan.alpha(i);
            e.push(self.e[i].kron(&ib).add(&self.k(&ai).kron(&o.e[i])));
            f.push(ia.kron(&o.f[i]).add(&self.f[i].kron(&o.kprime(&ai))));
        }
        let mut labels = Vec::with_capacity(self.dim() * o.dim());
        let mut weights = Vec::with_capacity(self.dim() * o.dim());
        for (la, wa) in self.labels.iter().zip(&self.weights) {
            for (lb, wb) in o.labels.iter().zip(&o.weights) {
                labels.push(format!("{la}⊗{lb}"));
                weights.push(wa + wb);
            }
        }
        WeightModule { cartan: self.cartan.clone(), labels, weights, e, f }
    }

    /// `S(E_i) = −K_i⁻¹E_i` on this module.
    pub fn antipode_e(&self, i: usize) -> SparseMatrix {
        self.k(&-&self.cartan.alpha(i)).mul(&self.e[i]).scale(&RatFunc::from_int(-1))
    }

    /// `S(F_i) = −F_iK'_i⁻¹` on this module.
    pub fn antipode_f(&self, i: usize) -> SparseMatrix {
        self.f[i].mul(&self.kprime(&-&self.cartan.alpha(i))).scale(&RatFunc::from_int(-1))
    }

    /// The dual module: `u·n*(m) = n*(S(u)·m)`, in the dual basis.
    pub fn dual(&self) -> WeightModule {
        let n = self.cartan.rank();
        WeightModule {
            cartan: self.cartan.clone(),
            labels: self.labels.iter().map(|l| format!("{l}*")).collect(),
            weights: self.weights.iter().map(|w| -w).collect(),
            e: (0..n).map(|i| self.antipode_e(i).transpose()).collect(),
            f: (0..n).map(|i| self.antipode_f(i).transpose()).collect(),
        }
    }

    /// Every scalar specialized at `t = 1`, over the specialized datum.
    pub fn with_t_one(&self) -> WeightModule {
        let c = self.cartan.with_t_one();
        let sp = |m: &SparseMatrix| m.map(|x| c.scalar(x));
        WeightModule {
            labels: self.labels.clone(),
            weights: self.weights.clone(),
            e: self.e.iter().map(sp).collect(),
            f: self.f.iter().map(sp).collect(),
            cartan: c,
        }
    }

    /// The unique weight `λ` with no other weight in `λ + N[I]`.
    pub fn highest_weight(&self) -> Result<Weight, ModuleError> {
        let maximal: BTreeSet<&Weight> = self
            .weights
            .iter()
            .filter(|l| !self.weights.iter().any(|m| m != *l && (m - *l).as_degree().is_some()))
            .collect();
        match maximal.len() {
            1 => Ok((*maximal.iter().next().expect("one element")).clone()),
            _ => Err(ModuleError::NoHighestWeight),
        }
    }

    /// Nonzero degrees `λ − λ'` between weights of this module.
    pub fn degree_differences(&self) -> BTreeSet<Degree> {
        let mut out = BTreeSet::new();
        for a in &self.weights {
            for b in &self.weights {
                if let Some(d) = (a - b).as_degree() {
                    if !d.is_zero() {
                        out.insert(d);
                    }
                }
            }
        }
        out
    }
}

/// `κ(μ) = (v^{i·μ} − v^{−i·μ}) c_{i,μ} / (v_i − v_i⁻¹)`, the scalar by which
/// `E_iF_i − F_iE_i` acts on weight `μ`.
pub fn kappa(cartan: &CartanSpec, i: usize, mu: &Weight) -> RatFunc {
    let ai = cartan.alpha(i);
    let vi = cartan.v_i(i);
    let num = &cartan.k_eigen(&ai, mu) - &cartan.kprime_eigen(&ai, mu);
    &num * &(&vi - &vi.pow(-1)).inv().expect("v_i is not ±1")
}

/// `v_λ²` for each basis weight, with `λ` negated when `negate` is set.
fn v_squares(m: &WeightModule, negate: bool) -> Vec<RatFunc> {
    m.weights()
        .iter()
        .map(|w| {
            let w = if negate { -w } else { w.clone() };
            m.cartan().v_deg(&w).pow(2)
        })
        .collect()
}

/// `ev: M* ⊗ M → 1`, `m* ⊗ n ↦ m*(n)`.
pub fn ev(m: &WeightModule) -> SparseMatrix {
    let d = m.dim();
    let mut out = SparseMatrix::zeros(1, d * d);
    for a in 0..d {
        out.add_entry(0, a * d + a, RatFunc::one());
    }
    out
}

/// `qtr: M ⊗ M* → 1`, `m ⊗ n* ↦ v²_{−|m|} n*(m)`.
pub fn qtr(m: &WeightModule) -> SparseMatrix {
    let d = m.dim();
    let mut out = SparseMatrix::zeros(1, d * d);
    for (a, s) in v_squares(m, true).into_iter().enumerate() {
        out.add_entry(0, a * d + a, s);
    }
    out
}

/// `coev: 1 → M* ⊗ M`, `1 ↦ Σ v²_{|w|} w* ⊗ w`.
pub fn coev(m: &WeightModule) -> SparseMatrix {
    let d = m.dim();
    let mut out = SparseMatrix::zeros(d * d, 1);
    for (a, s) in v_squares(m, false).into_iter().enumerate() {
        out.add_entry(a * d + a, 0, s);
    }
    out
}

/// `coqtr: 1 → M ⊗ M*`, `1 ↦ Σ w ⊗ w*`.
pub fn coqtr(m: &WeightModule) -> SparseMatrix {
    ev(m).transpose()
}

/// `f̃` on `M ⊗ N`: `m ⊗ n ↦ f(|m|, |n|) m ⊗ n`.
pub fn ftilde(m: &WeightModule, n: &WeightModule) -> SparseMatrix {
    let c = m.cartan();
    let mut d = Vec::with_capacity(m.dim() * n.dim());
    for a in m.weights() {
        for b in n.weights() {
            d.push(c.f(a, b));
        }
    }
    SparseMatrix::diagonal(d)
}

/// The flip `M ⊗ N → N ⊗ M`.
pub fn perm(m: &WeightModule, n: &WeightModule) -> SparseMatrix {
    let (dm, dn) = (m.dim(), n.dim());
    let mut out = SparseMatrix::zeros(dm * dn, dm * dn);
    for a in 0..dm {
        for b in 0..dn {
            out.add_entry(b * dm + a, a * dn + b, RatFunc::one());
        }
    }
    out
}

/// `Δ̄(E_i) = E_i⊗1 + K'_i⊗E_i` on `M ⊗ N`.
pub fn delta_bar_e(m: &WeightModule, n: &WeightModule, i: usize) -> SparseMatrix {
    let ai = m.cartan().alpha(i);
    m.e(i).kron(&n.identity()).add(&m.kprime(&ai).kron(n.e(i)))
}

/// `Δ̄(F_i) = 1⊗F_i + F_i⊗K_i` on `M ⊗ N`.
pub fn delta_bar_f(m: &WeightModule, n: &WeightModule, i: usize) -> SparseMatrix {
    let ai = m.cartan().alpha(i);
    m.identity().kron(n.f(i)).add(&m.f(i).kron(&n.k(&ai)))
}

/// Degrees `μ ≠ 0` at which `Θ_μ` can act nontrivially on `M ⊗ N`.
pub fn theta_degrees(m: &WeightModule, n: &WeightModule) -> Vec<Degree> {
    m.degree_differences().intersection(&n.degree_differences()).cloned().collect()
}

/// `Σ c ρ_M(F-word) ⊗ ρ_N(E-word)` over the terms of a component.
pub fn component_matrix(comp: &ThetaComponent, m: &WeightModule, n: &WeightModule) -> SparseMatrix {
    comp.terms.iter().fold(SparseMatrix::zeros(m.dim() * n.dim(), m.dim() * n.dim()), |acc, ((fw, ew), c)| {
        acc.add(&m.f_word(fw).kron(&n.e_word(ew)).scale(c))
    })
}

/// `Σ c ρ_M(E-word) ⊗ ρ_N(F-word)`: the component with its factors swapped.
pub fn component_matrix_op(comp: &ThetaComponent, m: &WeightModule, n: &WeightModule) -> SparseMatrix {
    comp.terms.iter().fold(SparseMatrix::zeros(m.dim() * n.dim(), m.dim() * n.dim()), |acc, ((fw, ew), c)| {
        acc.add(&m.e_word(ew).kron(&n.f_word(fw)).scale(c))
    })
}

/// Which description of `Θ̄` to evaluate.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ThetaBarRoute {
    ClosedFormula,
    Conjugation,
}

/// `Θ = Σ_μ Θ_μ` on `M ⊗ N`; the sum is finite on finite-dimensional modules.
pub fn theta_matrix(qr: &QuasiR, m: &WeightModule, n: &WeightModule, order: BasisOrder) -> SparseMatrix {
    theta_degrees(m, n)
        .iter()
        .fold(m.identity().kron(&n.identity()), |acc, mu| acc.add(&component_matrix(&qr.theta(mu, order), m, n)))
}

/// `Θ̄ = Σ_ν Θ̄_ν` on `M ⊗ N`.
pub fn theta_bar_matrix(qr: &QuasiR, m: &WeightModule, n: &WeightModule, route: ThetaBarRoute) -> SparseMatrix {
    theta_degrees(m, n).iter().fold(m.identity().kron(&n.identity()), |acc, nu| {
        let comp = match route {
            ThetaBarRoute::ClosedFormula => qr.theta_bar(nu, BasisOrder::Lex),
            ThetaBarRoute::Conjugation => qr.theta_bar_by_conjugation(nu, BasisOrder::Lex),
        };
        acc.add(&component_matrix(&comp, m, n))
    })
}

/// `R = Θ ∘ f̃ ∘ P : M ⊗ N → N ⊗ M`.
pub fn rmat(qr: &QuasiR, m: &WeightModule, n: &WeightModule) -> SparseMatrix {
    theta_matrix(qr, n, m, BasisOrder::Lex).mul(&ftilde(n, m)).mul(&perm(m, n))
}

/// `R⁻¹ = P ∘ f̃⁻¹ ∘ Θ̄ : N ⊗ M → M ⊗ N`.
pub fn rmat_inv(qr: &QuasiR, m: &WeightModule, n: &WeightModule) -> SparseMatrix {
    let finv = ftilde(n, m).map(|x| x.inv().expect("f is a unit"));
    perm(n, m).mul(&finv).mul(&theta_bar_matrix(qr, n, m, ThetaBarRoute::ClosedFormula))
}

/// Each generator acting on `M ⊗ N` through `Δ`, paired with its action
/// through `Δ̄`; the `K`'s are group-like for both.
pub fn generator_actions(m: &WeightModule, n: &WeightModule) -> Vec<(String, SparseMatrix, SparseMatrix)> {
    let t = m.tensor(n);
    let mut out = Vec::new();
    for i in 0..m.cartan().rank() {
        let a = m.cartan().alpha(i);
        out.push((format!("E{}", i + 1), t.e(i).clone(), delta_bar_e(m, n, i)));
        out.push((format!("F{}", i + 1), t.f(i).clone(), delta_bar_f(m, n, i)));
        out.push((format!("K{}", i + 1), t.k(&a), t.k(&a)));
        out.push((format!("K'{}", i + 1), t.kprime(&a), t.kprime(&a)));
    }
    out
}

/// `Θ_μ` on `M ⊗ N`, with `Θ_0 = 1 ⊗ 1`.
pub fn theta_component(qr: &QuasiR, m: &WeightModule, n: &WeightModule, mu: &Degree) -> SparseMatrix {
    component_matrix(&qr.theta(mu, BasisOrder::Lex), m, n)
}

/// `Θ^f_{sl}` without the twist: a Θ-type sum on a triple tensor with the
/// F-words on factor `fpos` and the E-words on factor `epos`.
pub fn placed_theta(qr: &QuasiR, ms: [&WeightModule; 3], fpos: usize, epos: usize) -> SparseMatrix {
    let dim: usize = ms.iter().map(|m| m.dim()).product();
    let mut out = SparseMatrix::identity(dim);
    for mu in theta_degrees(ms[fpos], ms[epos]) {
        for ((fw, ew), c) in qr.theta(&mu, BasisOrder::Lex).terms.iter() {
            let mut ops: Vec<SparseMatrix> = ms.iter().map(|m| m.identity()).collect();
            ops[fpos] = ms[fpos].f_word(fw);
            ops[epos] = ms[epos].e_word(ew);
            out = out.add(&ops[0].kron(&ops[1]).kron(&ops[2]).scale(c));
        }
    }
    out
}

/// `f̃_{sl}`: the diagonal twist `f(|x_s|, |x_l|)` on a triple tensor.
pub fn placed_ftilde(ms: [&WeightModule; 3], s: usize, l: usize) -> SparseMatrix {
    let c = ms[0].cartan();
    let mut d = Vec::new();
    for a in ms[0].weights() {
        for b in ms[1].weights() {
            for e in ms[2].weights() {
                let w = [a, b, e];
                d.push(c.f(w[s], w[l]));
            }
        }
    }
    SparseMatrix::diagonal(d)
}

/// `(Δ ⊗ 1)(Θ^{op})` on `(A ⊗ B) ⊗ C`, given `ab = A ⊗ B`.
pub fn theta_op_matrix(qr: &QuasiR, ab: &WeightModule, c: &WeightModule) -> SparseMatrix {
    theta_degrees(ab, c).iter().fold(ab.identity().kron(&c.identity()), |acc, mu| {
        acc.add(&component_matrix_op(&qr.theta(mu, BasisOrder::Lex), ab, c))
    })
}
