//! Oriented tangle words and their evaluation.
//!
//! A word is a stack of rows read bottom to top; each row is a horizontal
//! product of generators. Rows must match: the top boundary of row `k` is the
//! bottom boundary of row `k + 1`. The functor sends `+` to `M`, `−` to `M*`
//! and each generator to the corresponding module map.

use std::fmt;

use rand::Rng;

use crate::cartan::Weight;
use crate::matrix::SparseMatrix;
use crate::modules::{self, ModuleError, WeightModule};
use crate::quasir::QuasiR;
use crate::ratfield::{Exp, RatFunc};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Plus,
    Minus,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct SignSeq(pub Vec<Sign>);

impl SignSeq {
    pub fn empty() -> Self {
        SignSeq(Vec::new())
    }

    pub fn plus(n: usize) -> Self {
        SignSeq(vec![Sign::Plus; n])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn concat(&self, o: &SignSeq) -> SignSeq {
        SignSeq(self.0.iter().chain(&o.0).copied().collect())
    }

    /// The identity row on this boundary (empty for `∅`).
    pub fn identity_row(&self) -> Vec<TangleGen> {
        self.0.iter().map(|s| if *s == Sign::Plus { TangleGen::Up } else { TangleGen::Dn }).collect()
    }
}

impl fmt::Display for SignSeq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "∅");
        }
        let s: Vec<&str> = self.0.iter().map(|s| if *s == Sign::Plus { "+" } else { "−" }).collect();
        write!(f, "({})", s.join(","))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum TangleGen {
    Up,
    Dn,
    Ev,
    Qtr,
    Coev,
    Coqtr,
    Xp,
    Xm,
}

impl TangleGen {
    pub const ALL: [TangleGen; 8] = [
        TangleGen::Up,
        TangleGen::Dn,
        TangleGen::Ev,
        TangleGen::Qtr,
        TangleGen::Coev,
        TangleGen::Coqtr,
        TangleGen::Xp,
        TangleGen::Xm,
    ];

    pub fn name(self) -> &'static str {
        match self {
            TangleGen::Up => "up",
            TangleGen::Dn => "dn",
            TangleGen::Ev => "ev",
            TangleGen::Qtr => "qtr",
            TangleGen::Coev => "coev",
            TangleGen::Coqtr => "coqtr",
            TangleGen::Xp => "xp",
            TangleGen::Xm => "xm",
        }
    }

    pub fn from_name(s: &str) -> Option<TangleGen> {
        TangleGen::ALL.into_iter().find(|g| g.name() == s)
    }

    /// `(source, target)` boundary pair.
    pub fn boundary(self) -> (SignSeq, SignSeq) {
        use Sign::*;
        let (s, t): (&[Sign], &[Sign]) = match self {
            TangleGen::Up => (&[Plus], &[Plus]),
            TangleGen::Dn => (&[Minus], &[Minus]),
            TangleGen::Ev => (&[Minus, Plus], &[]),
            TangleGen::Qtr => (&[Plus, Minus], &[]),
            TangleGen::Coev => (&[], &[Minus, Plus]),
            TangleGen::Coqtr => (&[], &[Plus, Minus]),
            TangleGen::Xp | TangleGen::Xm => (&[Plus, Plus], &[Plus, Plus]),
        };
        (SignSeq(s.to_vec()), SignSeq(t.to_vec()))
    }
}

impl fmt::Display for TangleGen {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, thiserror::Error, PartialEq)]
pub enum TangleError {
    #[error("lexical error at position {pos}: unknown token '{token}'")]
    Lexical { pos: usize, token: String },
    #[error("syntax error at position {pos}: {msg}")]
    Syntax { pos: usize, msg: String },
    /// Row `row` (1-based) ends on `below`, row `row + 1` starts on `above`.
    #[error("type error between rows {row} and {}: row {row} has target {below}, row {} has source {above}", row + 1, row + 1)]
    Type { row: usize, below: SignSeq, above: SignSeq },
    #[error("boundary mismatch: {0} vs {1}")]
    Boundary(SignSeq, SignSeq),
    #[error("closure needs an all-plus square tangle, got {0} → {1}")]
    NotClosable(SignSeq, SignSeq),
    #[error(transparent)]
    Module(#[from] ModuleError),
}

fn row_boundary(row: &[TangleGen]) -> (SignSeq, SignSeq) {
    row.iter().fold((SignSeq::empty(), SignSeq::empty()), |(s, t), g| {
        let (gs, gt) = g.boundary();
        (s.concat(&gs), t.concat(&gt))
    })
}

/// A typechecked stack of rows, bottom row first.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TangleWord {
    rows: Vec<Vec<TangleGen>>,
    source: SignSeq,
    target: SignSeq,
}

impl TangleWord {
    pub fn from_rows(rows: Vec<Vec<TangleGen>>) -> Result<Self, TangleError> {
        if rows.is_empty() || rows.iter().any(Vec::is_empty) {
            return Err(TangleError::Syntax { pos: 0, msg: "empty row".into() });
        }
        let bounds: Vec<_> = rows.iter().map(|r| row_boundary(r)).collect();
        for k in 1..bounds.len() {
            if bounds[k - 1].1 != bounds[k].0 {
                return Err(TangleError::Type { row: k, below: bounds[k - 1].1.clone(), above: bounds[k].0.clone() });
            }
        }
        let source = bounds[0].0.clone();
        let target = bounds[bounds.len() - 1].1.clone();
        Ok(TangleWord { rows, source, target })
    }

    pub fn rows(&self) -> &[Vec<TangleGen>] {
        &self.rows
    }

    pub fn source(&self) -> &SignSeq {
        &self.source
    }

    pub fn target(&self) -> &SignSeq {
        &self.target
    }

    pub fn generators(&self) -> impl Iterator<Item = TangleGen> + '_ {
        self.rows.iter().flatten().copied()
    }
}

impl fmt::Display for TangleWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> =
            self.rows.iter().map(|r| r.iter().map(|g| g.name()).collect::<Vec<_>>().join(" * ")).collect();
        f.write_str(&rows.join(" ; "))
    }
}

#[derive(Debug, PartialEq)]
enum Tok {
    Gen(TangleGen),
    Star,
    Semi,
}

fn lex(text: &str) -> Result<Vec<(usize, Tok)>, TangleError> {
    let mut out = Vec::new();
    let mut it = text.char_indices().peekable();
    while let Some(&(pos, c)) = it.peek() {
        if c.is_whitespace() {
            it.next();
        } else if c == '*' {
            out.push((pos, Tok::Star));
            it.next();
        } else if c == ';' {
            out.push((pos, Tok::Semi));
            it.next();
        } else if c.is_ascii_alphanumeric() || c == '_' {
            let mut end = pos;
            while let Some(&(p, c)) = it.peek() {
                if !(c.is_ascii_alphanumeric() || c == '_') {
                    break;
                }
                end = p + c.len_utf8();
                it.next();
            }
            let token = &text[pos..end];
            let g = TangleGen::from_name(token).ok_or_else(|| TangleError::Lexical { pos, token: token.into() })?;
            out.push((pos, Tok::Gen(g)));
        } else {
            return Err(TangleError::Lexical { pos, token: c.to_string() });
        }
    }
    Ok(out)
}

/// Parses `row (';' row)*` with `row := gen ('*' gen)*`.
pub fn parse(text: &str) -> Result<TangleWord, TangleError> {
    let toks = lex(text)?;
    let mut rows = vec![Vec::new()];
    let mut expect_gen = true;
    for (pos, t) in &toks {
        match (t, expect_gen) {
            (Tok::Gen(g), true) => {
                rows.last_mut().expect("nonempty").push(*g);
                expect_gen = false;
            }
            (Tok::Star, false) => expect_gen = true,
            (Tok::Semi, false) => {
                rows.push(Vec::new());
                expect_gen = true;
            }
            (Tok::Gen(_), false) => {
                return Err(TangleError::Syntax { pos: *pos, msg: "expected '*' or ';' between generators".into() })
            }
            (_, true) => return Err(TangleError::Syntax { pos: *pos, msg: "expected a generator".into() }),
        }
    }
    if expect_gen {
        return Err(TangleError::Syntax { pos: text.len(), msg: "expected a generator".into() });
    }
    TangleWord::from_rows(rows)
}

/// `a ∘ b`: the rows of `b` followed by those of `a`.
pub fn compose(a: &TangleWord, b: &TangleWord) -> Result<TangleWord, TangleError> {
    if a.source != b.target {
        return Err(TangleError::Boundary(b.target.clone(), a.source.clone()));
    }
    Ok(TangleWord {
        rows: b.rows.iter().chain(&a.rows).cloned().collect(),
        source: b.source.clone(),
        target: a.target.clone(),
    })
}

/// `a ⊗ b`, padding the shorter word with identity rows on its top boundary.
pub fn tensorw(a: &TangleWord, b: &TangleWord) -> TangleWord {
    let n = a.rows.len().max(b.rows.len());
    let row = |w: &TangleWord, k: usize| w.rows.get(k).cloned().unwrap_or_else(|| w.target.identity_row());
    let rows = (0..n).map(|k| [row(a, k), row(b, k)].concat()).collect();
    TangleWord { rows, source: a.source.concat(&b.source), target: a.target.concat(&b.target) }
}

fn repeat(g: TangleGen, n: usize) -> Vec<TangleGen> {
    vec![g; n]
}

/// Joins each bottom endpoint of an all-plus `(n,n)` tangle to the matching
/// top endpoint, with cups nested innermost-first on the right.
pub fn closure(w: &TangleWord) -> Result<TangleWord, TangleError> {
    let n = w.source.len();
    if w.source != SignSeq::plus(n) || w.target != w.source {
        return Err(TangleError::NotClosable(w.source.clone(), w.target.clone()));
    }
    use TangleGen::*;
    let mut rows = Vec::new();
    for k in 1..=n {
        rows.push([repeat(Up, k - 1), vec![Coqtr], repeat(Dn, k - 1)].concat());
    }
    for r in &w.rows {
        rows.push([r.clone(), repeat(Dn, n)].concat());
    }
    for k in (1..=n).rev() {
        rows.push([repeat(Up, k - 1), vec![Qtr], repeat(Dn, k - 1)].concat());
    }
    TangleWord::from_rows(rows)
}

/// Named knots and links accepted in place of a tangle word.
pub const BUILTINS: [(&str, &str); 6] = [
    ("unknot", "up"),
    ("trefoil", "xp;xp;xp"),
    ("mirror-trefoil", "xm;xm;xm"),
    ("hopf", "xp;xp"),
    ("figure8", "xp*up ; up*xm ; xp*up ; up*xm"),
    ("twist", "xp"),
];

/// A built-in name or a literal word.
pub fn resolve(name_or_text: &str) -> Result<TangleWord, TangleError> {
    let key = name_or_text.trim();
    let text = BUILTINS.iter().find(|(n, _)| *n == key).map_or(key, |(_, w)| w);
    parse(text)
}

/// Which matrices the crossings are sent to.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Crossings {
    /// `(f(λ,λ) v_{−λ}²)^{∓1} R^{±1}`, the invariant normalization.
    Normalized,
    /// `R` and `R⁻¹` as they come.
    Raw,
}

/// The tensor functor attached to one module `M`.
pub struct Functor {
    plus: WeightModule,
    minus: WeightModule,
    lambda: Weight,
    gens: [SparseMatrix; 8],
}

impl Functor {
    pub fn new(qr: &QuasiR, m: &WeightModule) -> Result<Self, TangleError> {
        Self::with_crossings(qr, m, Crossings::Normalized)
    }

    pub fn with_crossings(qr: &QuasiR, m: &WeightModule, mode: Crossings) -> Result<Self, TangleError> {
        let lambda = m.highest_weight()?;
        let minus = m.dual();
        let r = modules::rmat(qr, m, m);
        let rinv = modules::rmat_inv(qr, m, m);
        let (xp, xm) = match mode {
            Crossings::Raw => (r, rinv),
            Crossings::Normalized => {
                let s = twist_scalar(m, &lambda);
                (r.scale(&s.inv().expect("nonzero monomial")), rinv.scale(&s))
            }
        };
        let gens = [
            m.identity(),
            minus.identity(),
            modules::ev(m),
            modules::qtr(m),
            modules::coev(m),
            modules::coqtr(m),
            xp,
            xm,
        ];
        Ok(Functor { plus: m.clone(), minus, lambda, gens })
    }

    pub fn module(&self) -> &WeightModule {
        &self.plus
    }

    pub fn dual_module(&self) -> &WeightModule {
        &self.minus
    }

    pub fn highest_weight(&self) -> &Weight {
        &self.lambda
    }

    pub fn twist_scalar(&self) -> RatFunc {
        twist_scalar(&self.plus, &self.lambda)
    }

    pub fn gen_matrix(&self, g: TangleGen) -> &SparseMatrix {
        &self.gens[g as usize]
    }

    /// Dimension of the object attached to a boundary.
    pub fn object_dim(&self, s: &SignSeq) -> usize {
        s.0.iter().map(|x| if *x == Sign::Plus { self.plus.dim() } else { self.minus.dim() }).product()
    }

    pub fn row(&self, row: &[TangleGen]) -> SparseMatrix {
        row.iter().fold(SparseMatrix::identity(1), |acc, g| acc.kron(self.gen_matrix(*g)))
    }

    /// `T(row_n) ⋯ T(row_1)`.
    pub fn eval(&self, w: &TangleWord) -> SparseMatrix {
        w.rows.iter().fold(SparseMatrix::identity(self.object_dim(&w.source)), |acc, r| self.row(r).mul(&acc))
    }

    /// The scalar of the closed tangle.
    pub fn invariant(&self, w: &TangleWord) -> Result<RatFunc, TangleError> {
        Ok(self.eval(&closure(w)?).get(0, 0))
    }
}

/// `f(λ,λ) v_{−λ}²`.
pub fn twist_scalar(m: &WeightModule, lambda: &Weight) -> RatFunc {
    let c = m.cartan();
    &c.f(lambda, lambda) * &c.v_deg(&lambda.scaled(Exp::from_integer(-1))).pow(2)
}

/// A defining relation of the oriented tangle category as an equation of words.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Relation {
    pub name: String,
    pub lhs: String,
    pub rhs: String,
}

fn rel(name: &str, lhs: &str, rhs: &str) -> Relation {
    Relation { name: name.into(), lhs: lhs.into(), rhs: rhs.into() }
}

/// Zig-zags, the mixed cap/crossing moves, invertibility, braid, curl and the
/// oppositely oriented second Reidemeister move.
pub fn relations() -> Vec<Relation> {
    let mut out = vec![
        rel("i.a", "up*coev ; qtr*up", "up"),
        rel("i.b", "coqtr*up ; up*ev", "up"),
        rel("ii.a", "dn*coqtr ; ev*dn", "dn"),
        rel("ii.b", "coev*dn ; dn*qtr", "dn"),
    ];
    for x in ["xp", "xm"] {
        out.push(rel(
            &format!("iii.{x}"),
            &format!("coev*dn*dn ; dn*coev*up*dn*dn ; dn*dn*{x}*dn*dn ; dn*dn*up*qtr*dn ; dn*dn*qtr"),
            &format!("dn*dn*coqtr ; dn*dn*up*coqtr*dn ; dn*dn*{x}*dn*dn ; dn*ev*up*dn*dn ; ev*dn*dn"),
        ));
    }
    out.push(rel("iv.a", "xm ; xp", "up*up"));
    out.push(rel("iv.b", "xp ; xm", "up*up"));
    out.push(rel("v", "xp*up ; up*xp ; xp*up", "up*xp ; xp*up ; up*xp"));
    for x in ["xp", "xm"] {
        out.push(rel(&format!("vi.{x}"), &format!("up*coqtr ; {x}*dn ; up*qtr"), "up"));
    }
    let y = "coev*up*dn ; dn*xp*dn ; dn*up*qtr";
    let t = "dn*up*coqtr ; dn*xm*dn ; ev*up*dn";
    out.push(rel("vii.a", &format!("{t} ; {y}"), "dn*up"));
    out.push(rel("vii.b", &format!("{y} ; {t}"), "up*dn"));
    out
}

/// A random well-typed word with `rows` rows starting from `source`. Cups are
/// only inserted while the boundary stays at most `max_width` wide.
pub fn random_word<R: Rng>(rng: &mut R, source: &SignSeq, rows: usize, max_width: usize) -> TangleWord {
    use Sign::*;
    use TangleGen::*;
    let mut cur = source.clone();
    let mut out = Vec::new();
    for _ in 0..rows.max(1) {
        let mut row = Vec::new();
        let mut width = cur.len();
        let mut i = 0;
        loop {
            let cup_ok = width + 2 <= max_width;
            if cup_ok && (i == cur.len() && row.is_empty() || rng.gen_bool(0.15)) {
                row.push(if rng.gen_bool(0.5) { Coev } else { Coqtr });
                width += 2;
                continue;
            }
            if i == cur.len() {
                break;
            }
            let pair = cur.0.get(i + 1).map(|n| (cur.0[i], *n));
            let g = match (cur.0[i], pair) {
                (_, Some((Plus, Plus))) if rng.gen_bool(0.5) => [Xp, Xm][rng.gen_range(0..2)],
                (_, Some((Minus, Plus))) if rng.gen_bool(0.3) => Ev,
                (_, Some((Plus, Minus))) if rng.gen_bool(0.3) => Qtr,
                (Plus, _) => Up,
                (Minus, _) => Dn,
            };
            i += g.boundary().0.len();
            width -= g.boundary().0.len() - g.boundary().1.len();
            row.push(g);
        }
        if row.is_empty() {
            // Empty boundary and no room for a cup.
            row.push(Coqtr);
        }
        cur = row_boundary(&row).1;
        out.push(row);
    }
    TangleWord::from_rows(out).expect("generated rows typecheck")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cartan::CartanSpec;
    use rand::SeedableRng;

    #[test]
    fn parse_and_types() {
        let w = parse("up * coev ; qtr * up").unwrap();
        assert_eq!(w.source(), &SignSeq::plus(1));
        assert_eq!(w.target(), &SignSeq::plus(1));
        assert_eq!(w.to_string(), "up * coev ; qtr * up");
        let x = parse("xp").unwrap();
        assert_eq!(x.source().to_string(), "(+,+)");
        match parse("qtr ; up") {
            Err(TangleError::Type { row: 1, below, above }) => {
                assert_eq!(below, SignSeq::empty());
                assert_eq!(above, SignSeq::plus(1));
            }
            other => panic!("{other:?}"),
        }
        assert!(matches!(parse("up * cap"), Err(TangleError::Lexical { pos: 5, .. })));
        assert!(matches!(parse("up * ; dn"), Err(TangleError::Syntax { .. })));
        assert!(matches!(parse(""), Err(TangleError::Syntax { .. })));
        assert!(matches!(parse("up dn"), Err(TangleError::Syntax { .. })));
    }

    #[test]
    fn compose_and_tensor() {
        let a = parse("qtr * up").unwrap();
        let b = parse("up * coev").unwrap();
        assert_eq!(compose(&a, &b).unwrap(), parse("up * coev ; qtr * up").unwrap());
        let t = tensorw(&parse("up").unwrap(), &parse("dn").unwrap());
        assert_eq!(t.source().to_string(), "(+,−)");
        assert!(compose(&parse("up").unwrap(), &parse("qtr").unwrap()).is_err());
        let padded = tensorw(&parse("xp ; xp").unwrap(), &parse("coqtr").unwrap());
        assert_eq!(padded.to_string(), "xp * coqtr ; xp * up * dn");
    }

    #[test]
    fn closure_shape() {
        assert_eq!(closure(&parse("up").unwrap()).unwrap(), parse("coqtr ; up * dn ; qtr").unwrap());
        let c = closure(&parse("xp").unwrap()).unwrap();
        assert_eq!(c.to_string(), "coqtr ; up * coqtr * dn ; xp * dn * dn ; up * qtr * dn ; qtr");
        assert!(closure(&parse("coqtr").unwrap()).is_err());
    }

    #[test]
    fn rank_one_values() {
        let c = CartanSpec::sl2();
        let qr = QuasiR::new(c.clone());
        let m = WeightModule::rank1_simple(&c, 1).unwrap();
        let f = Functor::new(&qr, &m).unwrap();
        let v = RatFunc::v();
        let qdim = &v + &v.pow(-1);
        assert_eq!(f.eval(&parse("coqtr ; qtr").unwrap()).get(0, 0), qdim);
        assert_eq!(f.eval(&parse("up * coev ; qtr * up").unwrap()), m.identity());
        assert_eq!(f.gen_matrix(TangleGen::Xp).get(0, 0), v);
        assert_eq!(f.invariant(&parse("up").unwrap()).unwrap(), qdim);
    }

    #[test]
    fn random_words_typecheck() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for _ in 0..200 {
            let s = SignSeq(vec![Sign::Plus, Sign::Minus]);
            let w = random_word(&mut rng, &s, 4, 4);
            assert_eq!(w.source(), &s);
            assert!(w.rows().len() == 4);
            assert!(w.rows().iter().all(|r| row_boundary(r).1.len() <= 4));
        }
    }
}
