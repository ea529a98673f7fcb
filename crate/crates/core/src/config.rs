//! Line-oriented `key = value` configuration for a run: the Cartan datum and
//! the module attached to `+`.
//!
//! ```text
//! rank = 2
//! dot.row.1 = 2, -1
//! dot.row.2 = -1, 2
//! omega.row.1 = 1, -1
//! omega.row.2 = 0, 1
//! module = file:sl3_natural.module
//! ```
//!
//! Matrix rows are numbered from 1. `dot` may be omitted, in which case it is
//! `Ω + Ωᵀ`. Module files use the same syntax:
//!
//! ```text
//! dim = 2
//! weight.1 = 1/2
//! weight.2 = -1/2
//! E.1 = 1,2 : 1
//! F.1 = 2,1 : 1
//! ```
//!
//! where `E.i = r,c : x` sets entry `(r, c)` of `E_i` (both 1-based) to the
//! rational function `x`. Lines starting with `#` are comments.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use crate::cartan::{CartanError, CartanSpec, Weight};
use crate::matrix::SparseMatrix;
use crate::modules::{ModuleError, WeightModule};
use crate::quasir::BasisOrder;
use crate::ratfield::{parse_ratfunc, parse_rational, Exp};

#[derive(Debug, thiserror::Error, PartialEq)]
pub enum ConfigError {
    #[error("{path}: {msg}")]
    Io { path: String, msg: String },
    #[error("line {line}: expected `key = value`")]
    Syntax { line: usize },
    #[error("line {line}: duplicate key `{key}`")]
    Duplicate { line: usize, key: String },
    #[error("unknown key `{0}`")]
    UnknownKey(String),
    #[error("missing key `{0}`")]
    Missing(String),
    #[error("`{key}`: `{value}` is not an integer")]
    NotInteger { key: String, value: String },
    #[error("`{key}`: `{value}` is not a rational number")]
    NotRational { key: String, value: String },
    #[error("`{key}`: {msg}")]
    BadValue { key: String, msg: String },
    #[error("invalid Cartan datum: {0}")]
    Cartan(#[from] CartanError),
    #[error("invalid module: {0}")]
    Module(#[from] ModuleError),
}

/// `key → (line, value)` in file order of keys.
fn read_pairs(text: &str) -> Result<BTreeMap<String, (usize, String)>, ConfigError> {
    let mut out = BTreeMap::new();
    for (k, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let (key, value) = line.split_once('=').ok_or(ConfigError::Syntax { line: k + 1 })?;
        let key = key.trim().to_string();
        if key.is_empty() {
            return Err(ConfigError::Syntax { line: k + 1 });
        }
        if out.insert(key.clone(), (k + 1, value.trim().to_string())).is_some() {
            return Err(ConfigError::Duplicate { line: k + 1, key });
        }
    }
    Ok(out)
}

fn read_file(path: &Path) -> Result<String, ConfigError> {
    std::fs::read_to_string(path).map_err(|e| ConfigError::Io { path: path.display().to_string(), msg: e.to_string() })
}

/// Parses a decimal integer exactly; `2.0`, `1e3` and out-of-range values are rejected.
fn parse_int(key: &str, s: &str) -> Result<i64, ConfigError> {
    s.trim().parse::<i64>().map_err(|_| ConfigError::NotInteger { key: key.into(), value: s.trim().into() })
}

fn int_list(key: &str, s: &str) -> Result<Vec<i64>, ConfigError> {
    s.split(',').map(|x| parse_int(key, x)).collect()
}

fn rational_list(key: &str, s: &str) -> Result<Vec<Exp>, ConfigError> {
    s.split(',')
        .map(|x| {
            let q = parse_rational(x.trim())
                .map_err(|_| ConfigError::NotRational { key: key.into(), value: x.trim().into() })?;
            let small = |n: &num_bigint::BigInt| i64::try_from(n.clone()).ok();
            match (small(q.numer()), small(q.denom())) {
                (Some(n), Some(d)) => Ok(Exp::new(n, d)),
                _ => Err(ConfigError::NotRational { key: key.into(), value: x.trim().into() }),
            }
        })
        .collect()
}

/// Where the `+` module comes from.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ModuleSource {
    Rank1(u32),
    File(PathBuf),
}

impl ModuleSource {
    pub fn parse(s: &str, base: &Path) -> Result<Self, ConfigError> {
        let bad = |msg: &str| ConfigError::BadValue { key: "module".into(), msg: msg.into() };
        if let Some(n) = s.strip_prefix("rank1:") {
            let n = n.trim().parse::<u32>().map_err(|_| bad("rank1:<n> needs a nonnegative integer"))?;
            Ok(ModuleSource::Rank1(n))
        } else if let Some(p) = s.strip_prefix("file:") {
            Ok(ModuleSource::File(base.join(p.trim())))
        } else {
            Err(bad("expected rank1:<n> or file:<path>"))
        }
    }

    pub fn load(&self, cartan: &CartanSpec) -> Result<WeightModule, ConfigError> {
        match self {
            ModuleSource::Rank1(n) => Ok(WeightModule::rank1_simple(cartan, *n)?),
            ModuleSource::File(p) => parse_module(&read_file(p)?, cartan),
        }
    }
}

/// A validated run configuration.
#[derive(Clone, Debug)]
pub struct RunConfig {
    pub cartan: CartanSpec,
    pub module: WeightModule,
    pub module_source: ModuleSource,
    pub basis_order: BasisOrder,
}

impl RunConfig {
    pub fn load(path: &Path) -> Result<Self, ConfigError> {
        let base = path.parent().unwrap_or(Path::new("."));
        Self::parse(&read_file(path)?, base)
    }

    /// Parses a config; relative module paths are resolved against `base`.
    pub fn parse(text: &str, base: &Path) -> Result<Self, ConfigError> {
        let pairs = read_pairs(text)?;
        let get = |k: &str| pairs.get(k).map(|(_, v)| v.as_str());
        let rank_s = get("rank").ok_or_else(|| ConfigError::Missing("rank".into()))?;
        let rank = parse_int("rank", rank_s)?;
        if rank <= 0 {
            return Err(ConfigError::Cartan(CartanError::EmptyRank));
        }
        let rank = rank as usize;
        for key in pairs.keys() {
            let known = matches!(key.as_str(), "rank" | "module" | "basis.order")
                || ["dot.row.", "omega.row."].iter().any(|p| {
                    key.strip_prefix(p).and_then(|k| k.parse::<usize>().ok()).is_some_and(|k| (1..=rank).contains(&k))
                });
            if !known {
                return Err(ConfigError::UnknownKey(key.clone()));
            }
        }
        let matrix = |name: &str| -> Result<Option<Vec<Vec<i64>>>, ConfigError> {
            let rows: Vec<Option<&str>> = (1..=rank).map(|k| get(&format!("{name}.row.{k}"))).collect();
            if rows.iter().all(Option::is_none) {
                return Ok(None);
            }
            let mut out = Vec::new();
            for (k, r) in rows.into_iter().enumerate() {
                let key = format!("{name}.row.{}", k + 1);
                let r = r.ok_or_else(|| ConfigError::Missing(key.clone()))?;
                let row = int_list(&key, r)?;
                if row.len() != rank {
                    return Err(ConfigError::BadValue {
                        key,
                        msg: format!("expected {rank} entries, got {}", row.len()),
                    });
                }
                out.push(row);
            }
            Ok(Some(out))
        };
        let omega = matrix("omega")?.ok_or_else(|| ConfigError::Missing("omega.row.1".into()))?;
        let cartan = match matrix("dot")? {
            Some(dot) => CartanSpec::new(dot, omega)?,
            None => CartanSpec::from_omega(omega)?,
        };
        let module_source = match get("module") {
            Some(s) => ModuleSource::parse(s, base)?,
            None if rank == 1 => ModuleSource::Rank1(1),
            None => return Err(ConfigError::Missing("module".into())),
        };
        let module = module_source.load(&cartan)?;
        let basis_order = match get("basis.order") {
            None | Some("lex") => BasisOrder::Lex,
            Some("reverse-lex") => BasisOrder::ReverseLex,
            Some(_) => {
                return Err(ConfigError::BadValue {
                    key: "basis.order".into(),
                    msg: "expected lex or reverse-lex".into(),
                })
            }
        };
        Ok(RunConfig { cartan, module, module_source, basis_order })
    }
}

/// Reads a module file over `cartan` and checks every defining relation.
pub fn parse_module(text: &str, cartan: &CartanSpec) -> Result<WeightModule, ConfigError> {
    let pairs = read_pairs(text)?;
    let dim_s = pairs.get("dim").ok_or_else(|| ConfigError::Missing("dim".into()))?;
    let dim = parse_int("dim", &dim_s.1)?;
    if dim <= 0 {
        return Err(ConfigError::BadValue { key: "dim".into(), msg: "must be positive".into() });
    }
    let dim = dim as usize;
    let rank = cartan.rank();
    let mut weights = Vec::new();
    let mut labels = Vec::new();
    for k in 1..=dim {
        let key = format!("weight.{k}");
        let (_, w) = pairs.get(&key).ok_or_else(|| ConfigError::Missing(key.clone()))?;
        let w = rational_list(&key, w)?;
        if w.len() != rank {
            return Err(ConfigError::BadValue { key, msg: format!("expected {rank} coordinates") });
        }
        weights.push(Weight(w));
        labels.push(pairs.get(&format!("label.{k}")).map_or_else(|| format!("b{k}"), |(_, l)| l.clone()));
    }
    let mut e = vec![SparseMatrix::zeros(dim, dim); rank];
    let mut f = e.clone();
    for (key, (_, value)) in &pairs {
        if key == "dim" || key.starts_with("weight.") || key.starts_with("label.") {
            continue;
        }
        // Repeated entries of one generator are written `E.1 = …` and `E.1.2 = …`
        // alike; only the generator index matters.
        let mut parts = key.split('.');
        let (target, i) = match (parts.next(), parts.next().and_then(|i| i.parse::<usize>().ok())) {
            (Some("E"), Some(i)) if (1..=rank).contains(&i) => (&mut e, i),
            (Some("F"), Some(i)) if (1..=rank).contains(&i) => (&mut f, i),
            _ => return Err(ConfigError::UnknownKey(key.clone())),
        };
        let bad = |msg: String| ConfigError::BadValue { key: key.clone(), msg };
        for entry in value.split(';').map(str::trim).filter(|s| !s.is_empty()) {
            let (pos, x) = entry.split_once(':').ok_or_else(|| bad("expected `row,col : value`".into()))?;
            let (r, c) = pos.split_once(',').ok_or_else(|| bad("expected `row,col : value`".into()))?;
            let (r, c) = (parse_int(key, r)?, parse_int(key, c)?);
            if r < 1 || c < 1 || r as usize > dim || c as usize > dim {
                return Err(bad(format!("entry ({r}, {c}) outside 1..{dim}")));
            }
            let x = parse_ratfunc(x.trim()).map_err(|e| bad(e.to_string()))?;
            target[i - 1].add_entry(r as usize - 1, c as usize - 1, x);
        }
    }
    let m = WeightModule::new(cartan.clone(), labels, weights, e, f)?;
    m.check()?;
    Ok(m)
}

/// Writes a module in the format read by [`parse_module`].
pub fn render_module(m: &WeightModule) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "dim = {}", m.dim());
    for (k, (w, l)) in m.weights().iter().zip(m.labels()).enumerate() {
        let coords: Vec<String> = w.0.iter().map(|x| x.to_string()).collect();
        let _ = writeln!(s, "label.{} = {l}", k + 1);
        let _ = writeln!(s, "weight.{} = {}", k + 1, coords.join(", "));
    }
    for (name, mats) in [
        ("E", (0..m.cartan().rank()).map(|i| m.e(i)).collect::<Vec<_>>()),
        ("F", (0..m.cartan().rank()).map(|i| m.f(i)).collect()),
    ] {
        for (i, mat) in mats.iter().enumerate() {
            let entries: Vec<String> = mat.entries().map(|(r, c, x)| format!("{},{} : {x}", r + 1, c + 1)).collect();
            if !entries.is_empty() {
                let _ = writeln!(s, "{name}.{} = {}", i + 1, entries.join(" ; "));
            }
        }
    }
    s
}
