//! Named verification suites. Every check is an exact equality; each one
//! yields a single pass/fail line, and the order of lines is fixed.

use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::cartan::{CartanSpec, Degree};
use crate::freealg::{words_of_degree, words_up_to, FElem, FreeAlgebra, Word};
use crate::lincomb::LinComb;
use crate::matrix::SparseMatrix;
use crate::modules::{
    self, component_matrix, generator_actions, placed_ftilde, placed_theta, rmat, rmat_inv, theta_bar_matrix,
    theta_component, theta_matrix, theta_op_matrix, ThetaBarRoute, WeightModule,
};
use crate::pairing::PeelRoute;
use crate::quasir::{BasisOrder, QuasiR};
use crate::ratfield::{Exp, RatFunc};
use crate::tangle::{self, Crossings, Functor, Sign, SignSeq, TangleWord};

pub const SUITES: [&str; 6] = ["forms", "pairing", "quasiR", "rmatrix", "ybe", "tangle-relations"];

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum VerifyError {
    #[error("unknown suite `{0}`; expected one of forms, pairing, quasiR, rmatrix, ybe, tangle-relations, all")]
    UnknownSuite(String),
    #[error("{0}")]
    Setup(String),
}

/// Outcome of one identity over all its instances.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub suite: &'static str,
    pub name: String,
    /// Number of instances tested.
    pub cases: usize,
    /// The first failing instance, if any.
    pub failure: Option<String>,
    /// Extra information reported alongside a pass.
    pub note: Option<String>,
}

impl Check {
    pub fn passed(&self) -> bool {
        self.failure.is_none()
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.passed() { "PASS" } else { "FAIL" };
        let plural = if self.cases == 1 { "" } else { "s" };
        write!(f, "{status} {}/{} ({} case{plural})", self.suite, self.name, self.cases)?;
        if let Some(x) = &self.failure {
            write!(f, ": first failure at {x}")?;
        }
        if let Some(x) = &self.note {
            write!(f, " [{x}]")?;
        }
        Ok(())
    }
}

/// Collects instances of one identity.
struct Tally {
    suite: &'static str,
    name: String,
    cases: usize,
    failure: Option<String>,
    note: Option<String>,
}

impl Tally {
    fn new(suite: &'static str, name: impl Into<String>) -> Self {
        Tally { suite, name: name.into(), cases: 0, failure: None, note: None }
    }

    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.cases += 1;
        if !ok && self.failure.is_none() {
            self.failure = Some(what());
        }
    }

    fn done(self) -> Check {
        Check { suite: self.suite, name: self.name, cases: self.cases, failure: self.failure, note: self.note }
    }
}

/// Everything a suite needs: the datum, the module for `+`, and the depth.
pub struct Context {
    pub qr: QuasiR,
    pub module: WeightModule,
    pub depth: usize,
}

impl Context {
    pub fn new(cartan: CartanSpec, module: WeightModule, depth: usize) -> Self {
        Context { qr: QuasiR::new(cartan), module, depth }
    }

    pub fn cartan(&self) -> &CartanSpec {
        self.qr.cartan()
    }

    fn rank(&self) -> usize {
        self.cartan().rank()
    }

    /// The module, its dual, and at rank one the two smallest simple modules.
    fn family(&self) -> Vec<WeightModule> {
        let mut out = vec![self.module.clone(), self.module.dual()];
        if self.rank() == 1 {
            for n in [1, 2] {
                if let Ok(m) = WeightModule::rank1_simple(self.cartan(), n) {
                    out.push(m);
                }
            }
        }
        let mut uniq: Vec<WeightModule> = Vec::new();
        for m in out {
            if !uniq.contains(&m) {
                uniq.push(m);
            }
        }
        uniq
    }
}

pub fn run(name: &str, ctx: &Context) -> Result<Vec<Check>, VerifyError> {
    match name {
        "forms" => Ok(forms(ctx)),
        "pairing" => Ok(pairing(ctx)),
        "quasiR" => Ok(quasi_r(ctx)),
        "rmatrix" => rmatrix(ctx),
        "ybe" => Ok(ybe(ctx)),
        "tangle-relations" => tangle_relations(ctx),
        "all" => {
            let mut out = Vec::new();
            for s in SUITES {
                out.extend(run(s, ctx)?);
            }
            Ok(out)
        }
        other => Err(VerifyError::UnknownSuite(other.into())),
    }
}

fn same_degree_pairs(rank: usize, len: usize) -> Vec<(Word, Word)> {
    let mut out = Vec::new();
    for x in words_up_to(rank, len) {
        for y in words_of_degree(&x.degree(rank)) {
            out.push((x.clone(), y));
        }
    }
    out
}

/// Ordered pairs `i ≠ j` with the degree of their Serre element.
fn serre_degrees(c: &CartanSpec) -> Vec<(usize, usize, Degree)> {
    let n = c.rank();
    let mut out = Vec::new();
    for i in 0..n {
        for j in 0..n {
            if i != j {
                let mut d = vec![0u32; n];
                d[i] = (1 - c.dot_ij(i, j) / c.half_norm(i)) as u32;
                d[j] = 1;
                out.push((i, j, Degree(d)));
            }
        }
    }
    out
}

pub fn forms(ctx: &Context) -> Vec<Check> {
    const S: &str = "forms";
    let f = FreeAlgebra::new(ctx.cartan().clone());
    let rank = ctx.rank();
    let words = words_up_to(rank, ctx.depth);
    let mut coassoc = Tally::new(S, "r is coassociative");
    let mut coassoc_bar = Tally::new(S, "rbar is coassociative");
    let mut mult = Tally::new(S, "r is multiplicative");
    let mut sigma = Tally::new(S, "r(sigma x) = (sigma x sigma)(r x) flipped");
    let mut rbar = Tally::new(S, "rbar closed formula = conjugated r");
    for w in &words {
        let x = FElem::basis(w.clone());
        let r = f.coproduct(&x);
        coassoc.check(f.coproduct_left(&r) == f.coproduct_right(&r), || w.to_string());
        let rb = f.coproduct_bar(&x);
        coassoc_bar.check(f.coproduct_bar_left(&rb) == f.coproduct_bar_right(&rb), || w.to_string());
        mult.check(r == f.coproduct_by_products(&x), || w.to_string());
        sigma.check(f.coproduct(&f.sigma(&x)) == f.sigma_tensor(&f.rho(&r)), || w.to_string());
        // A non-bar-invariant coefficient makes the conjugation visible.
        let xs = x.scale(&(&RatFunc::v_pow(3) + &RatFunc::t()));
        rbar.check(f.coproduct_bar(&xs) == f.coproduct_bar_conj(&xs), || w.to_string());
    }
    let mut sym = Tally::new(S, "form is symmetric");
    let mut peel = Tally::new(S, "form by left and right peeling agree");
    for (x, y) in same_degree_pairs(rank, ctx.depth) {
        let a = f.form_words(&x, &y);
        sym.check(a == f.form_words(&y, &x), || format!("({x}, {y})"));
        peel.check(a == f.form_words_peel_left(&x, &y), || format!("({x}, {y})"));
    }
    let mut serre = Tally::new(S, "Serre elements pair to zero");
    for (i, j, d) in serre_degrees(ctx.cartan()) {
        let Ok(s) = f.serre_element(i, j) else {
            serre.check(false, || format!("serre({i}, {j}) unavailable"));
            continue;
        };
        for y in words_of_degree(&d) {
            serre.check(f.form(&s, &FElem::basis(y.clone())).is_zero(), || format!("serre({i}, {j}) with {y}"));
        }
    }
    // Rank one has no Serre relations.
    let serre = (serre.cases > 0).then_some(serre);
    [coassoc, coassoc_bar, mult, sigma, rbar, sym, peel].into_iter().chain(serre).map(Tally::done).collect()
}

pub fn pairing(ctx: &Context) -> Vec<Check> {
    const S: &str = "pairing";
    let p = ctx.qr.pairing();
    let rank = ctx.rank();
    let mut routes = Tally::new(S, "all peel routes agree");
    let mut sigma = Tally::new(S, "pairing is sigma-invariant");
    let mut barred = Tally::new(S, "barred pairing closed formula");
    let coef = &RatFunc::v() + &RatFunc::t();
    for (x, y) in same_degree_pairs(rank, ctx.depth) {
        let base = p.phi_words(&x, &y);
        let ok = [PeelRoute::FirstF, PeelRoute::LastF, PeelRoute::FirstE, PeelRoute::LastE]
            .into_iter()
            .all(|r| p.phi_words_by(r, &x, &y) == base);
        routes.check(ok, || format!("({x}, {y})"));
        let (bx, by) = (LinComb::basis(x.clone()), LinComb::basis(y.clone()));
        sigma.check(base == p.phi(&p.sigma_plus(&bx), &p.sigma_minus(&by)), || format!("({x}, {y})"));
        let bx = bx.scale(&coef);
        let rhs = &p.barred_prefactor(&x.degree(rank)) * &p.phi(&bx, &p.sigma_minus(&by));
        barred.check(p.phi_bar(&bx, &by) == rhs, || format!("({x}, {y})"));
    }
    let f = FreeAlgebra::new(ctx.cartan().clone());
    let mut kernel = Tally::new(S, "Serre elements span the Gram kernel");
    let mut ranks = Vec::new();
    for (i, j, d) in serre_degrees(ctx.cartan()) {
        let words = words_of_degree(&d);
        let r = p.gram_all(&d).rank();
        ranks.push(format!("{d}: {r}"));
        kernel.check(r + 1 == words.len(), || format!("rank {r} of {} at {d}", words.len()));
        if let Ok(s) = f.serre_element(i, j) {
            let sf = s.map_coeffs(RatFunc::invert_t);
            for y in words {
                let by = LinComb::basis(y.clone());
                kernel.check(p.phi(&s, &by).is_zero() && p.phi(&by, &sf).is_zero(), || format!("{y} at {d}"));
            }
        }
    }
    if !ranks.is_empty() {
        kernel.note = Some(format!("Gram ranks {}", ranks.join(", ")));
    }
    let kernel = (kernel.cases > 0).then_some(kernel);
    [routes, sigma, barred].into_iter().chain(kernel).map(Tally::done).collect()
}

fn degrees(rank: usize, max_tr: usize) -> Vec<Degree> {
    std::iter::once(Degree::zero(rank)).chain(Degree::all_up_to(rank, max_tr as u32)).collect()
}

pub fn quasi_r(ctx: &Context) -> Vec<Check> {
    const S: &str = "quasiR";
    let (qr, m) = (&ctx.qr, &ctx.module);
    let c = ctx.cartan();
    let rank = c.rank();
    let p = qr.pairing();

    let mut duality = Tally::new(S, "dual bases are dual");
    for mu in degrees(rank, ctx.depth) {
        for order in [BasisOrder::Lex, BasisOrder::ReverseLex] {
            let wb = qr.select_basis(&mu, order);
            for k in 0..wb.len() {
                for (l, b) in wb.basis.iter().enumerate() {
                    let want = if k == l { RatFunc::one() } else { RatFunc::zero() };
                    duality.check(p.phi(&wb.dual(k), &LinComb::basis(b.clone())) == want, || format!("{mu}, {k}, {l}"));
                }
            }
        }
    }

    let id = m.identity();
    let mut comps = [
        Tally::new(S, "(i) K x K commutes with Theta_mu"),
        Tally::new(S, "(ii) K' x K' commutes with Theta_mu"),
        Tally::new(S, "(iii) E-recursion for Theta_mu"),
        Tally::new(S, "(iv) F-recursion for Theta_mu"),
    ];
    for mu in Degree::all_up_to(rank, ctx.depth as u32) {
        let th = theta_component(qr, m, m, &mu);
        for i in 0..rank {
            let a = c.alpha(i);
            let (k, kp) = (m.k(&a), m.kprime(&a));
            let kk = k.kron(&k);
            comps[0].check(kk.mul(&th) == th.mul(&kk), || format!("{mu}, i={}", i + 1));
            let kpkp = kp.kron(&kp);
            comps[1].check(kpkp.mul(&th) == th.mul(&kpkp), || format!("{mu}, i={}", i + 1));
            let lower = match mu.checked_sub(&Degree::simple(rank, i)) {
                Some(d) => theta_component(qr, m, m, &d),
                None => SparseMatrix::zeros(th.rows(), th.cols()),
            };
            let e1 = m.e(i).kron(&id);
            let lhs = e1.mul(&th).add(&k.kron(m.e(i)).mul(&lower));
            let rhs = th.mul(&e1).add(&lower.mul(&kp.kron(m.e(i))));
            comps[2].check(lhs == rhs, || format!("{mu}, i={}", i + 1));
            let f2 = id.kron(m.f(i));
            let lhs = f2.mul(&th).add(&m.f(i).kron(&kp).mul(&lower));
            let rhs = th.mul(&f2).add(&lower.mul(&m.f(i).kron(&k)));
            comps[3].check(lhs == rhs, || format!("{mu}, i={}", i + 1));
        }
    }

    let th = theta_matrix(qr, m, m, BasisOrder::Lex);
    let tb = theta_bar_matrix(qr, m, m, ThetaBarRoute::ClosedFormula);
    let mut inter = Tally::new(S, "Delta(u) Theta = Theta Deltabar(u)");
    for (name, d, dbar) in generator_actions(m, m) {
        inter.check(d.mul(&th) == th.mul(&dbar), || name);
    }
    let mut inverse = Tally::new(S, "Theta Thetabar = Thetabar Theta = 1");
    let one = SparseMatrix::identity(m.dim() * m.dim());
    inverse.check(th.mul(&tb) == one, || "Theta Thetabar".into());
    inverse.check(tb.mul(&th) == one, || "Thetabar Theta".into());
    let mut routes = Tally::new(S, "Thetabar closed formula = conjugated Theta");
    for mu in Degree::all_up_to(rank, ctx.depth as u32) {
        let closed = qr.theta_bar(&mu, BasisOrder::Lex);
        let conj = qr.theta_bar_by_conjugation(&mu, BasisOrder::Lex);
        routes.check(component_matrix(&closed, m, m) == component_matrix(&conj, m, m), || mu.to_string());
    }
    let mut order = Tally::new(S, "Theta action ignores basis order");
    order.check(th == theta_matrix(qr, m, m, BasisOrder::ReverseLex), || "M x M".into());

    let mut coprod = Tally::new(S, "coproduct in dual bases");
    let t = m.tensor(m);
    for lambda in Degree::all_up_to(rank, ctx.depth.min(3) as u32) {
        for x in words_of_degree(&lambda) {
            let mut sum = SparseMatrix::zeros(t.dim(), t.dim());
            for mu in degrees(rank, lambda.tr() as usize) {
                let Some(rest) = lambda.checked_sub(&mu) else { continue };
                let bm = qr.select_basis(&mu, BasisOrder::Lex);
                let br = qr.select_basis(&rest, BasisOrder::Lex);
                for (k, b) in bm.basis.iter().enumerate() {
                    for (l, bp) in br.basis.iter().enumerate() {
                        let coef = p.phi_words(&x, &bp.concat(b));
                        if coef.is_zero() {
                            continue;
                        }
                        let left = m.plus(&br.dual(l)).mul(&m.k(&mu.weight()));
                        sum = sum.add(&left.kron(&m.plus(&bm.dual(k))).scale(&coef));
                    }
                }
            }
            coprod.check(t.e_word(&x) == sum, || x.to_string());
        }
    }
    let [c0, c1, c2, c3] = comps;
    [duality, c0, c1, c2, c3, inter, inverse, routes, order, coprod].into_iter().map(Tally::done).collect()
}

fn dims(ms: &[&WeightModule]) -> String {
    ms.iter().map(|m| m.dim().to_string()).collect::<Vec<_>>().join("x")
}

pub fn rmatrix(ctx: &Context) -> Result<Vec<Check>, VerifyError> {
    const S: &str = "rmatrix";
    let qr = &ctx.qr;
    let c = ctx.cartan();
    let ms = [ctx.module.clone(), ctx.module.dual()];
    let mut inter = Tally::new(S, "R is an intertwiner");
    let mut inv = Tally::new(S, "R^-1 R = R R^-1 = 1");
    let mut special = Tally::new(S, "R at t=1 = R over the t=1 datum");
    let qr1 = QuasiR::new(c.with_t_one());
    for (a, m) in ms.iter().enumerate() {
        for (b, n) in ms.iter().enumerate() {
            let label = || format!("pair ({a}, {b})");
            let r = rmat(qr, m, n);
            let ri = rmat_inv(qr, m, n);
            let id = SparseMatrix::identity(m.dim() * n.dim());
            inv.check(ri.mul(&r) == id && r.mul(&ri) == id, label);
            for ((name, x, _), (_, y, _)) in generator_actions(m, n).iter().zip(&generator_actions(n, m)) {
                inter.check(r.mul(x) == y.mul(&r), || format!("{name} on pair ({a}, {b})"));
            }
            let rerun = rmat(&qr1, &m.with_t_one(), &n.with_t_one());
            special.check(r.map(|x| c.with_t_one().scalar(x)) == rerun, label);
        }
    }
    let mut op1 = Tally::new(S, "(Delta x 1)(Theta^op) f31 f32 = Theta^f31 Theta^f32");
    let mut op2 = Tally::new(S, "f31 f32 Theta12 = Theta12 f31 f32");
    for a in &ms {
        for b in &ms {
            for cc in &ms {
                let t = [a, b, cc];
                let f31 = placed_ftilde(t, 2, 0);
                let f32 = placed_ftilde(t, 2, 1);
                let lhs = theta_op_matrix(qr, &a.tensor(b), cc).mul(&f31).mul(&f32);
                let rhs = placed_theta(qr, t, 2, 0).mul(&f31).mul(&placed_theta(qr, t, 2, 1).mul(&f32));
                op1.check(lhs == rhs, || dims(&t));
                let th12 = placed_theta(qr, t, 0, 1);
                op2.check(f31.mul(&f32).mul(&th12) == th12.mul(&f31).mul(&f32), || dims(&t));
            }
        }
    }

    let m = &ctx.module;
    let mut morph = Tally::new(S, "ev, qtr, coev, coqtr are module maps");
    let d = m.dual();
    let (dm, md) = (d.tensor(m), m.tensor(&d));
    for i in 0..c.rank() {
        let a = c.alpha(i);
        let maps = [
            ("ev", &dm, modules::ev(m), true),
            ("qtr", &md, modules::qtr(m), true),
            ("coev", &dm, modules::coev(m), false),
            ("coqtr", &md, modules::coqtr(m), false),
        ];
        for (name, src, mat, into_trivial) in maps {
            let gens = [
                ("E", src.e(i).clone(), RatFunc::zero()),
                ("F", src.f(i).clone(), RatFunc::zero()),
                ("K", src.k(&a), RatFunc::one()),
                ("K'", src.kprime(&a), RatFunc::one()),
            ];
            for (g, u, eps) in gens {
                let ok = if into_trivial { mat.mul(&u) == mat.scale(&eps) } else { u.mul(&mat) == mat.scale(&eps) };
                morph.check(ok, || format!("{name} with {g}{}", i + 1));
            }
        }
    }

    let mut antipode = Tally::new(S, "antipode of E- and F-words");
    let p = qr.pairing();
    for x in words_up_to(c.rank(), ctx.depth.min(3)) {
        let nu = x.weight(c.rank());
        let half = c.mono(c.dot(&nu, &nu) / Exp::from_integer(2), Exp::from_integer(0));
        let sign = RatFunc::from_int(if x.len() % 2 == 0 { 1 } else { -1 });
        let bx = LinComb::basis(x.clone());
        let se = x.0.iter().rev().fold(m.identity(), |acc, &l| acc.mul(&m.antipode_e(l as usize)));
        let vinv = c.v_deg(&nu).inv().expect("monomial");
        let rhs = m.k(&-&nu).mul(&m.plus(&p.sigma_plus(&bx))).scale(&(&(&sign * &half) * &vinv));
        antipode.check(se == rhs, || format!("E-word {x}"));
        let sf = x.0.iter().rev().fold(m.identity(), |acc, &l| acc.mul(&m.antipode_f(l as usize)));
        let scal = &(&sign * &half.inv().expect("monomial")) * &c.v_deg(&nu);
        let rhs = m.minus(&p.sigma_minus(&bx)).mul(&m.kprime(&-&nu)).scale(&scal);
        antipode.check(sf == rhs, || format!("F-word {x}"));
    }

    let raw = Functor::with_crossings(qr, m, Crossings::Raw).map_err(|e| VerifyError::Setup(e.to_string()))?;
    let ev = |w: &str| raw.eval(&tangle::parse(w).expect("fixed word"));
    let mut twist = Tally::new(S, "curls equal the twist scalar");
    let s = raw.twist_scalar();
    twist.check(ev("up*coqtr ; xp*dn ; up*qtr") == m.identity().scale(&s), || "positive curl".into());
    twist.check(ev("up*coqtr ; xm*dn ; up*qtr") == m.identity().scale(&s.inv().expect("monomial")), || {
        "negative curl".into()
    });
    twist.note = Some(format!("twist scalar {s}"));
    let mut mixed = Tally::new(S, "mixed crossings are R-matrices");
    let sideways = |x: &str| format!("coev*up*dn ; dn*{x}*dn ; dn*up*qtr");
    let back = |x: &str| format!("dn*up*coqtr ; dn*{x}*dn ; ev*up*dn");
    let reversed = |x: &str| format!("dn*dn*coqtr ; dn*dn*up*coqtr*dn ; dn*dn*{x}*dn*dn ; dn*ev*up*dn*dn ; ev*dn*dn");
    let cases = [
        ("R(M, M*)", sideways("xm"), rmat(qr, m, &d)),
        ("R^-1(M*, M)", sideways("xp"), rmat_inv(qr, &d, m)),
        ("R(M*, M)", back("xm"), rmat(qr, &d, m)),
        ("R^-1(M, M*)", back("xp"), rmat_inv(qr, m, &d)),
        ("R(M*, M*)", reversed("xp"), rmat(qr, &d, &d)),
        ("R^-1(M*, M*)", reversed("xm"), rmat_inv(qr, &d, &d)),
    ];
    for (name, w, r) in cases {
        mixed.check(ev(&w) == r, || name.into());
    }
    Ok([inter, inv, special, op1, op2, morph, antipode, twist, mixed].into_iter().map(Tally::done).collect())
}

pub fn ybe(ctx: &Context) -> Vec<Check> {
    let qr = &ctx.qr;
    let ms = ctx.family();
    let mut t = Tally::new("ybe", "R12 R23 R12 = R23 R12 R23");
    for a in &ms {
        for b in &ms {
            for c in &ms {
                let (ia, ib, ic) = (a.identity(), b.identity(), c.identity());
                let lhs = rmat(qr, b, c).kron(&ia).mul(&ib.kron(&rmat(qr, a, c))).mul(&rmat(qr, a, b).kron(&ic));
                let rhs = ic.kron(&rmat(qr, a, b)).mul(&rmat(qr, a, c).kron(&ib)).mul(&ia.kron(&rmat(qr, b, c)));
                t.check(lhs == rhs, || dims(&[a, b, c]));
            }
        }
    }
    t.note = Some(format!("{} modules", ms.len()));
    vec![t.done()]
}

/// Seeded pairs of composable words and pairs of arbitrary words.
pub fn strictness_cases(seed: u64, n: usize) -> Vec<(TangleWord, TangleWord, TangleWord, TangleWord)> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let signs = |rng: &mut ChaCha8Rng| {
        let k = rng.gen_range(0..3);
        SignSeq((0..k).map(|_| if rng.gen_bool(0.5) { Sign::Plus } else { Sign::Minus }).collect())
    };
    let word = |rng: &mut ChaCha8Rng, s: SignSeq, max_rows: usize, width: usize| {
        let rows = rng.gen_range(1..=max_rows);
        tangle::random_word(rng, &s, rows, width)
    };
    (0..n)
        .map(|_| {
            let s = signs(&mut rng);
            let b = word(&mut rng, s, 2, 4);
            let a = word(&mut rng, b.target().clone(), 2, 4);
            let (s1, s2) = (signs(&mut rng), signs(&mut rng));
            let x = word(&mut rng, s1, 4, 2);
            let y = word(&mut rng, s2, 4, 2);
            (a, b, x, y)
        })
        .collect()
}

/// The monic minimal polynomial of the normalized crossing on `M ⊗ M`, with
/// its roots when they can be read off the diagonal.
pub struct CrossingPolynomial {
    pub coefficients: Vec<RatFunc>,
    pub roots: Option<Vec<RatFunc>>,
}

impl fmt::Display for CrossingPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<String> = self
            .coefficients
            .iter()
            .enumerate()
            .rev()
            .filter(|(_, c)| !c.is_zero())
            .map(|(k, c)| match k {
                _ if c.is_one() && k > 0 => format!("X^{k}"),
                0 => format!("({c})"),
                _ => format!("({c}) X^{k}"),
            })
            .collect();
        write!(f, "{}", terms.join(" + "))?;
        if let Some(r) = &self.roots {
            let r: Vec<String> = r.iter().map(|x| x.to_string()).collect();
            write!(f, "; roots {}", r.join(", "))?;
        }
        Ok(())
    }
}

pub fn crossing_polynomial(f: &Functor) -> CrossingPolynomial {
    let x = f.gen_matrix(tangle::TangleGen::Xp);
    let coefficients = x.minimal_polynomial();
    let eval = |r: &RatFunc| coefficients.iter().rev().fold(RatFunc::zero(), |acc, c| &(&acc * r) + c);
    let mut roots = None;
    if coefficients.len() == 3 {
        let mut diag: Vec<RatFunc> = (0..x.rows()).map(|i| x.get(i, i)).collect();
        diag.dedup();
        if let Some(r1) = diag.into_iter().find(|d| eval(d).is_zero()) {
            let r2 = -(&coefficients[1] + &r1);
            roots = Some(vec![r1, r2]);
        }
    }
    CrossingPolynomial { coefficients, roots }
}

pub fn tangle_relations(ctx: &Context) -> Result<Vec<Check>, VerifyError> {
    const S: &str = "tangle-relations";
    let f = Functor::new(&ctx.qr, &ctx.module).map_err(|e| VerifyError::Setup(e.to_string()))?;
    let mut out = Vec::new();
    for r in tangle::relations() {
        let mut t = Tally::new(S, format!("relation {}", r.name));
        let (l, rhs) = (tangle::parse(&r.lhs).expect("fixed word"), tangle::parse(&r.rhs).expect("fixed word"));
        t.check(l.source() == rhs.source() && l.target() == rhs.target() && f.eval(&l) == f.eval(&rhs), || {
            format!("{} = {}", r.lhs, r.rhs)
        });
        out.push(t.done());
    }
    let mut comp = Tally::new(S, "T(a o b) = T(a) T(b)");
    let mut tens = Tally::new(S, "T(a x b) = T(a) x T(b)");
    for (a, b, x, y) in strictness_cases(2024, 50) {
        let ab = tangle::compose(&a, &b).expect("composable by construction");
        comp.check(f.eval(&ab) == f.eval(&a).mul(&f.eval(&b)), || format!("{a} o {b}"));
        tens.check(f.eval(&tangle::tensorw(&x, &y)) == f.eval(&x).kron(&f.eval(&y)), || format!("{x} x {y}"));
    }
    out.push(comp.done());
    out.push(tens.done());
    let mut poly = Tally::new(S, "crossing has a quadratic minimal polynomial");
    let cp = crossing_polynomial(&f);
    poly.check(cp.coefficients.len() == 3, || cp.to_string());
    poly.note = Some(cp.to_string());
    out.push(poly.done());
    Ok(out)
}

/// Renders checks one per line; `lines` format is tab-separated.
pub fn render(checks: &[Check], lines: bool) -> String {
    let mut s = String::new();
    for c in checks {
        if lines {
            let status = if c.passed() { "pass" } else { "fail" };
            let detail = c.failure.as_deref().or(c.note.as_deref()).unwrap_or("");
            s.push_str(&format!("{}\t{}\t{}\t{}\t{}\n", c.suite, c.name, status, c.cases, detail));
        } else {
            s.push_str(&format!("{c}\n"));
        }
    }
    let failed = checks.iter().filter(|c| !c.passed()).count();
    if !lines {
        s.push_str(&format!("{} checks, {} failed\n", checks.len(), failed));
    }
    s
}
