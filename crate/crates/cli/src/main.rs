//! `uvt`: knot invariants and identity checks for two-parameter quantum groups.
//!
//! Exit codes: 0 on success, 1 on input errors or failed checks, 2 on
//! configuration errors.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use uvt_core::cartan::Degree;
use uvt_core::config::{ConfigError, RunConfig};
use uvt_core::modules;
use uvt_core::quasir::QuasiR;
use uvt_core::ratfield::{parse_rational, Coeff, Exp, RatFunc};
use uvt_core::tangle::{self, Functor};
use uvt_core::verify;

#[derive(Parser)]
#[command(name = "uvt", version, about = "Exact two-parameter quantum group invariants")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, Default, ValueEnum)]
enum Format {
    #[default]
    Plain,
    Lines,
}

#[derive(clap::Args)]
struct Common {
    /// Run configuration (Cartan datum and module).
    #[arg(long)]
    config: PathBuf,
    /// Specialize a variable before printing, e.g. `t=1`; repeatable.
    #[arg(long = "spec", value_name = "VAR=RATIONAL")]
    spec: Vec<String>,
    #[arg(long, value_enum, default_value_t)]
    format: Format,
}

#[derive(Subcommand)]
enum Cmd {
    /// Invariant of the closure of an all-plus (n,n) tangle.
    Invariant {
        #[command(flatten)]
        common: Common,
        /// A built-in name (unknot, trefoil, mirror-trefoil, hopf, figure8, twist) or a tangle word.
        #[arg(long, conflicts_with = "tangle_file", required_unless_present = "tangle_file")]
        tangle: Option<String>,
        #[arg(long)]
        tangle_file: Option<PathBuf>,
    },
    /// Run a verification suite.
    Verify {
        #[arg(long)]
        config: Option<PathBuf>,
        #[arg(long, default_value = "all")]
        suite: String,
        #[arg(long, default_value_t = 4)]
        depth: usize,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Quantum dimension `qtr ∘ coqtr` of the configured module.
    Qdim {
        #[command(flatten)]
        common: Common,
    },
    /// Nonzero entries of `R` on `M ⊗ M`.
    Rmatrix {
        #[command(flatten)]
        common: Common,
    },
    /// Components of the quasi-R-matrix up to the given height.
    Theta {
        #[command(flatten)]
        common: Common,
        #[arg(long, default_value_t = 4)]
        depth: usize,
    },
}

enum Failure {
    Input(String),
    Config(ConfigError),
    Checks,
}

impl From<ConfigError> for Failure {
    fn from(e: ConfigError) -> Self {
        Failure::Config(e)
    }
}

fn input<E: std::fmt::Display>(e: E) -> Failure {
    Failure::Input(e.to_string())
}

/// Parsed `--spec` assignments.
struct Spec {
    v: Option<Coeff>,
    t: Option<Coeff>,
}

impl Spec {
    fn parse(items: &[String]) -> Result<Self, Failure> {
        let mut s = Spec { v: None, t: None };
        for it in items {
            let (var, val) =
                it.split_once('=').ok_or_else(|| Failure::Input(format!("--spec `{it}`: expected VAR=RATIONAL")))?;
            let q = parse_rational(val.trim()).map_err(|e| Failure::Input(format!("--spec `{it}`: {e}")))?;
            match var.trim() {
                "v" => s.v = Some(q),
                "t" => s.t = Some(q),
                other => return Err(Failure::Input(format!("--spec: unknown variable `{other}`"))),
            }
        }
        Ok(s)
    }

    fn apply(&self, x: &RatFunc) -> Result<RatFunc, Failure> {
        if self.v.is_none() && self.t.is_none() {
            return Ok(x.clone());
        }
        x.specialize(self.v.as_ref(), self.t.as_ref()).map_err(input)
    }
}

fn load(common: &Common) -> Result<(RunConfig, Spec), Failure> {
    let spec = Spec::parse(&common.spec)?;
    Ok((RunConfig::load(&common.config)?, spec))
}

fn t_degree(x: &RatFunc) -> String {
    let lo_hi = |r: Option<(Exp, Exp)>| r.map_or_else(|| "0 0".to_string(), |(a, b)| format!("{a} {b}"));
    format!("numerator {}, denominator {}", lo_hi(x.numer().t_range()), lo_hi(x.denom().t_range()))
}

fn invariant(common: &Common, text: &str) -> Result<(), Failure> {
    let (cfg, spec) = load(common)?;
    let w = tangle::resolve(text).map_err(input)?;
    let qr = QuasiR::new(cfg.cartan.clone());
    let f = Functor::new(&qr, &cfg.module).map_err(input)?;
    let x = spec.apply(&f.invariant(&w).map_err(input)?)?;
    match common.format {
        Format::Plain => println!("{x}"),
        Format::Lines => {
            println!("invariant\t{x}");
            println!("laurent\t{}", if x.is_laurent() { "yes" } else { "no" });
            println!("t-degree\t{}", t_degree(&x));
        }
    }
    Ok(())
}

fn run_verify(config: Option<&PathBuf>, suite: &str, depth: usize, format: Format) -> Result<(), Failure> {
    if suite != "all" && !verify::SUITES.contains(&suite) {
        return Err(input(verify::VerifyError::UnknownSuite(suite.into())));
    }
    let path = config.ok_or_else(|| Failure::Input("verify needs --config".into()))?;
    let cfg = RunConfig::load(path)?;
    let ctx = verify::Context::new(cfg.cartan, cfg.module, depth);
    let checks = verify::run(suite, &ctx).map_err(input)?;
    print!("{}", verify::render(&checks, matches!(format, Format::Lines)));
    if checks.iter().all(verify::Check::passed) {
        Ok(())
    } else {
        Err(Failure::Checks)
    }
}

fn qdim(common: &Common) -> Result<(), Failure> {
    let (cfg, spec) = load(common)?;
    let m = &cfg.module;
    let x = spec.apply(&modules::qtr(m).mul(&modules::coqtr(m)).get(0, 0))?;
    match common.format {
        Format::Plain => println!("{x}"),
        Format::Lines => println!("qdim\t{x}"),
    }
    Ok(())
}

fn rmatrix(common: &Common) -> Result<(), Failure> {
    let (cfg, spec) = load(common)?;
    let m = &cfg.module;
    let qr = QuasiR::new(cfg.cartan.clone());
    let r = modules::rmat(&qr, m, m);
    let labels: Vec<String> =
        m.labels().iter().flat_map(|a| m.labels().iter().map(move |b| format!("{a}⊗{b}"))).collect();
    for (i, j, x) in r.entries() {
        let x = spec.apply(x)?;
        match common.format {
            Format::Plain => println!("{} {} | {} -> {} | {x}", i + 1, j + 1, labels[j], labels[i]),
            Format::Lines => println!("{}\t{}\t{x}", i + 1, j + 1),
        }
    }
    Ok(())
}

fn theta(common: &Common, depth: usize) -> Result<(), Failure> {
    let (cfg, spec) = load(common)?;
    let qr = QuasiR::new(cfg.cartan.clone());
    let rank = cfg.cartan.rank();
    let degrees = std::iter::once(Degree::zero(rank)).chain(Degree::all_up_to(rank, depth as u32));
    for mu in degrees {
        for ((fw, ew), c) in qr.theta(&mu, cfg.basis_order).terms.iter() {
            let c = spec.apply(c)?;
            match common.format {
                Format::Plain => println!("{mu} | {} | {} | {c}", fw.render("F"), ew.render("E")),
                Format::Lines => println!("{mu}\t{}\t{}\t{c}", fw.render("F"), ew.render("E")),
            }
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.cmd {
        Cmd::Invariant { common, tangle, tangle_file } => {
            let text = match (tangle, tangle_file) {
                (Some(t), _) => Ok(t.clone()),
                (None, Some(p)) => {
                    std::fs::read_to_string(p).map_err(|e| Failure::Input(format!("{}: {e}", p.display())))
                }
                (None, None) => Err(Failure::Input("need --tangle or --tangle-file".into())),
            };
            text.and_then(|t| invariant(common, &t))
        }
        Cmd::Verify { config, suite, depth, format } => run_verify(config.as_ref(), suite, *depth, *format),
        Cmd::Qdim { common } => qdim(common),
        Cmd::Rmatrix { common } => rmatrix(common),
        Cmd::Theta { common, depth } => theta(common, *depth),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Config(e)) => {
            eprintln!("config error: {e}");
            ExitCode::from(2)
        }
        Err(Failure::Checks) => ExitCode::from(1),
    }
}
