use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use coxmat::formats::{group_summary, interval_export, polytope_export, polytope_off, roots_json};
use coxmat::load::load_bruhat;
use coxmat::suite::{run_suite, SuiteConfig};
use coxmat::verify::{check, CheckOptions, Theorem};
use coxmat::words::{parse_element, parse_generator_set};
use coxmat::{CliError, Result};
use coxmat_core::coxroot::GeneratorSet;
use coxmat_core::moxpoly::{base_point, degenerate_base_point, interval_polytope, parabolic_polytope};
use coxmat_core::Tolerances;

#[derive(Parser)]
#[command(name = "coxmat", version, about = "Bruhat interval polytopes and Coxeter matroids of finite Coxeter groups")]
struct Cli {
    #[command(flatten)]
    global: Global,
    #[command(subcommand)]
    cmd: Command,
}

#[derive(Args)]
struct Global {
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    #[arg(long, global = true, default_value_t = 1e-9)]
    eps_root: f64,
    #[arg(long, global = true, default_value_t = 1e-7)]
    eps_lp: f64,
    #[arg(long, global = true, default_value_t = 1e-7)]
    eps_geom: f64,
    /// Worker threads (default: all cores).
    #[arg(long, global = true)]
    jobs: Option<usize>,
    /// Output file (group, interval, polytope, check) or directory (suite).
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Random coset subsets for the matroid check.
    #[arg(long, global = true)]
    random_subsets: Option<usize>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Off,
}

#[derive(Subcommand)]
enum Command {
    /// Summarize a group given by preset name or diagram JSON file.
    Group {
        group: String,
        /// Also print the positive roots.
        #[arg(long)]
        roots: bool,
    },
    /// Export the Bruhat interval [u, v].
    Interval { group: String, u: String, v: String },
    /// Export the polytope of [u, v], or of [uW_J, vW_J] with --j.
    Polytope {
        group: String,
        u: String,
        v: String,
        /// Parabolic generators, e.g. "s1 s2" or "12".
        #[arg(long, default_value = "")]
        j: String,
        /// Accept J = S, where every orbit point is the origin.
        #[arg(long)]
        allow_degenerate: bool,
    },
    /// Verify one theorem on one group.
    Check {
        group: String,
        /// weak-lifting, glp, chains, matroid, faces, spans, parabolic,
        /// parabolic-faces, diamonds, lemmas or bv-stability.
        theorem: String,
        #[arg(long)]
        max_cases: Option<usize>,
        #[arg(long)]
        max_polytopes: Option<usize>,
        /// Parabolic set for the random subsets of the matroid check.
        #[arg(long, default_value = "")]
        subset_j: String,
    },
    /// Run a suite config (default: every default theorem on A2, A3, B2,
    /// B3, H3 and I2(5)).
    Suite { config: Option<PathBuf> },
}

fn emit(out: Option<&Path>, text: &str) -> Result<()> {
    match out {
        Some(p) => std::fs::write(p, text).map_err(|e| CliError::io(p, e)),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn pretty<T: serde::Serialize>(v: &T) -> Result<String> {
    Ok(serde_json::to_string_pretty(v)? + "\n")
}

fn run(cli: Cli) -> Result<ExitCode> {
    let g = &cli.global;
    let tol = Tolerances {
        root: g.eps_root,
        lp: g.eps_lp,
        geom: g.eps_geom,
        ..Tolerances::default()
    };
    tol.validate()?;
    if g.jobs == Some(0) {
        return Err(CliError::Usage("--jobs must be at least 1".into()));
    }
    let out = g.out.as_deref();
    match cli.cmd {
        Command::Group { group, roots } => {
            let b = load_bruhat(&group, tol.root)?;
            let s = group_summary(b.group());
            let text = if roots {
                pretty(&serde_json::json!({"summary": s, "roots": roots_json(b.group())}))?
            } else {
                pretty(&s)?
            };
            emit(out, &text)?;
            if out.is_some() {
                println!(
                    "{}: order {}, {} positive roots, longest length {}, {} reflections",
                    s.diagram, s.order, s.positive_roots, s.longest_length, s.reflections
                );
            }
        }
        Command::Interval { group, u, v } => {
            let b = load_bruhat(&group, tol.root)?;
            let (u, v) = (parse_element(b.group(), &u)?, parse_element(b.group(), &v)?);
            let iv = b.interval(u, v)?;
            emit(out, &pretty(&interval_export(&b, &iv))?)?;
        }
        Command::Polytope {
            group,
            u,
            v,
            j,
            allow_degenerate,
        } => {
            let b = load_bruhat(&group, tol.root)?;
            let grp = b.group();
            let j = parse_generator_set(&j, grp.rank())?;
            let (u, v) = (parse_element(grp, &u)?, parse_element(grp, &v)?);
            let p = if allow_degenerate && j == GeneratorSet::all(grp.rank()) {
                degenerate_base_point(grp.system())
            } else {
                base_point(grp.system(), j, g.seed)?
            };
            let poly = if j.is_empty() {
                interval_polytope(&b, u, v, &p, tol.geom)?
            } else {
                let (a, c) = (b.coset_of(u, j), b.coset_of(v, j));
                parabolic_polytope(&b, &a, &c, &p, tol.geom)?
            };
            let text = match g.format {
                Format::Json => pretty(&polytope_export(grp, &poly))?,
                Format::Off => polytope_off(&poly)?,
            };
            emit(out, &text)?;
            let f = poly.f_vector();
            let line = format!(
                "{} vertices, {} edges, {} faces, dim {}",
                f[0],
                f.get(1).filter(|_| poly.dim() >= 1).copied().unwrap_or(0),
                poly.faces().len(),
                poly.dim()
            );
            if out.is_some() {
                println!("{line}");
            } else {
                eprintln!("{line}");
            }
        }
        Command::Check {
            group,
            theorem,
            max_cases,
            max_polytopes,
            subset_j,
        } => {
            let theorem: Theorem = theorem.parse()?;
            let b = load_bruhat(&group, tol.root)?;
            let mut opts = CheckOptions {
                seed: g.seed,
                tol,
                subset_j: parse_generator_set(&subset_j, b.group().rank())?,
                ..CheckOptions::default()
            };
            if let Some(n) = g.random_subsets {
                opts.random_subsets = n;
            }
            if let Some(n) = max_cases {
                opts.max_cases = n;
            }
            if let Some(n) = max_polytopes {
                opts.max_polytopes = n;
            }
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(g.jobs.unwrap_or(0))
                .build()
                .map_err(|e| CliError::Usage(e.to_string()))?;
            let report = pool.install(|| check(&b, &group, theorem, &opts))?;
            if let Some(p) = out {
                let path = if p.is_dir() { p.join(format!("{theorem}.json")) } else { p.to_path_buf() };
                emit(Some(&path), &pretty(&report)?)?;
            }
            println!("{}", report.summary_line());
            if !report.passed() {
                return Ok(ExitCode::from(1));
            }
        }
        Command::Suite { config } => {
            let mut cfg = match &config {
                Some(p) => SuiteConfig::from_file(p)?,
                None => SuiteConfig::default(),
            };
            cfg.seed = if config.is_some() && g.seed == 0 { cfg.seed } else { g.seed };
            if g.jobs.is_some() {
                cfg.jobs = g.jobs;
            }
            if g.random_subsets.is_some() {
                cfg.random_subsets = g.random_subsets;
            }
            let dir = out
                .map(Path::to_path_buf)
                .or_else(|| cfg.out.clone())
                .unwrap_or_else(|| PathBuf::from("coxmat-reports"));
            let outcome = run_suite(&cfg, tol.root, Some(&dir))?;
            for r in &outcome.reports {
                println!("{}", r.summary_line());
            }
            println!("index: {}", dir.join("index.json").display());
            if !outcome.index.passed {
                return Ok(ExitCode::from(1));
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
