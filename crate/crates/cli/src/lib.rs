//! The `motzkin` command line.
//!
//! [`run`] takes the argument list and the two output streams so the whole
//! command flow can be driven from tests without spawning a process.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use motzkin_core::bijection::Bijection;
use motzkin_core::oeis::{oeis_check, parse_bfile};
use motzkin_core::oracle::{distribution_with, run_suite_with, DistOptions, StatSpec, Suite};
use motzkin_core::path::MotzkinPath;
use motzkin_core::perm::{ClassId, Permutation};
use motzkin_core::qpoly::{h_tableau, q_motzkin, q_motzkin_tilde, Preset};
use motzkin_core::{Error, Exec};
use serde_json::json;

/// Setting this variable to `1` lifts the size guard on full `S_n` scans.
pub const ALLOW_LARGE_ENV: &str = "MOTZKIN_ALLOW_LARGE";

#[derive(Parser, Debug)]
#[command(name = "motzkin", version, about = "Crossings and nestings of Motzkin objects")]
struct Cli {
    /// Run enumerations on the current thread only.
    #[arg(long, global = true)]
    sequential: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Statistics of a permutation ("3 1 2" or 3 1 2) or a path word.
    Stats {
        #[arg(value_enum)]
        kind: ObjectKind,
        #[arg(required = true, num_args = 1.., allow_hyphen_values = true)]
        object: Vec<String>,
        #[arg(long)]
        json: bool,
    },
    /// Apply a bijection to a path, or its inverse to a permutation.
    Map {
        #[arg(value_enum)]
        map: MapName,
        #[arg(long)]
        inverse: bool,
        #[arg(required = true, num_args = 1..)]
        object: Vec<String>,
    },
    /// Distribution of a statistic over a permutation class.
    Dist {
        #[arg(long)]
        class: String,
        #[arg(long)]
        stat: String,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        json: bool,
    },
    /// q-Motzkin polynomial M_n(q) or M̃_n(q).
    Poly {
        #[arg(value_enum)]
        which: PolyName,
        #[arg(long)]
        n: usize,
    },
    /// Rows 0..=n of the q-tableau H(n,i).
    Tableau {
        #[arg(long)]
        n: usize,
    },
    /// Truncated power series of a named generating function.
    Series(SeriesArgs),
    /// Run a verification suite.
    Verify {
        #[arg(long)]
        suite: String,
        #[arg(long)]
        max_n: usize,
        #[arg(long)]
        json: bool,
    },
    /// Compare Motzkin numbers with a local OEIS b-file.
    OeisCheck {
        #[arg(long)]
        bfile: PathBuf,
        #[arg(long)]
        max_n: usize,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Args, Debug)]
struct SeriesArgs {
    #[arg(long)]
    preset: String,
    #[arg(long)]
    order: usize,
    #[arg(long)]
    json: bool,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum ObjectKind {
    Perm,
    Path,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum MapName {
    Phi1,
    Phi2,
    Phi3,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum PolyName {
    #[value(name = "M")]
    M,
    #[value(name = "Mtilde")]
    Mtilde,
}

// Failures that end the command: bad objects and runtime errors exit 1.
enum Failure {
    Invalid(String),
    Verification(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Invalid(e.to_string())
    }
}

/// Parses `args` (program name first), runs the command and returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) if !e.use_stderr() => {
            let _ = write!(out, "{e}");
            return 0;
        }
        Err(e) => {
            let rendered = e.to_string();
            let line = rendered.lines().find(|l| !l.trim().is_empty()).unwrap_or("usage error");
            let _ = writeln!(err, "{line}");
            return 2;
        }
    };
    let exec = if cli.sequential { Exec::Sequential } else { Exec::default() };
    match dispatch(cli.command, exec, out) {
        Ok(()) => 0,
        Err(Failure::Invalid(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            1
        }
        Err(Failure::Verification(msg)) => {
            let _ = writeln!(err, "verification failed: {msg}");
            1
        }
    }
}

fn allow_large() -> bool {
    std::env::var(ALLOW_LARGE_ENV).is_ok_and(|v| v == "1")
}

fn io(e: std::io::Error) -> Failure {
    Failure::Invalid(e.to_string())
}

fn set(v: &[usize]) -> String {
    let parts: Vec<String> = v.iter().map(|x| x.to_string()).collect();
    format!("{{{}}}", parts.join(","))
}

fn dispatch(command: Command, exec: Exec, out: &mut dyn Write) -> Result<(), Failure> {
    match command {
        Command::Stats { kind: ObjectKind::Perm, object, json } => {
            let sigma: Permutation = object.join(" ").parse()?;
            let s = sigma.statistics();
            if json {
                writeln!(out, "{}", serde_json::to_string(&s).expect("serializable")).map_err(io)?;
            } else {
                writeln!(
                    out,
                    "exc={} fp={} crs={} nes={} inv={} exc_set={} des_set={} involution={}",
                    s.exc,
                    s.fp,
                    s.crs,
                    s.nes,
                    s.inv,
                    set(&s.exc_set),
                    set(&s.des_set),
                    s.is_involution
                )
                .map_err(io)?;
            }
        }
        Command::Stats { kind: ObjectKind::Path, object, json } => {
            let path: MotzkinPath = object.concat().parse()?;
            let s = path.statistics();
            if json {
                writeln!(out, "{}", serde_json::to_string(&s).expect("serializable")).map_err(io)?;
            } else {
                writeln!(
                    out,
                    "hor={} up={} down={} sh_u={} sh_h={} sh_d={} area={}",
                    s.hor, s.up, s.down, s.sh_u, s.sh_h, s.sh_d, s.area
                )
                .map_err(io)?;
            }
        }
        Command::Map { map, inverse, object } => {
            let map = match map {
                MapName::Phi1 => Bijection::Phi1,
                MapName::Phi2 => Bijection::Phi2,
                MapName::Phi3 => Bijection::Phi3,
            };
            if inverse {
                let sigma: Permutation = object.join(" ").parse()?;
                writeln!(out, "{}", map.invert(&sigma)?).map_err(io)?;
            } else {
                let path: MotzkinPath = object.concat().parse()?;
                writeln!(out, "{}", map.apply(&path)).map_err(io)?;
            }
        }
        Command::Dist { class, stat, n, json } => {
            let class: ClassId = class.parse()?;
            let spec: StatSpec = stat.parse()?;
            let poly = distribution_with(class, n, spec, DistOptions { exec, allow_large: allow_large() }).map_err(
                |e| match e {
                    Error::SizeGuard { .. } => Failure::Invalid(format!("{e} ({ALLOW_LARGE_ENV}=1)")),
                    e => e.into(),
                },
            )?;
            if json {
                let v = json!({
                    "class": class.name(),
                    "stat": spec.name(),
                    "n": n,
                    "vars": spec.vars(),
                    "polynomial": poly.to_string(),
                });
                writeln!(out, "{v}").map_err(io)?;
            } else {
                writeln!(out, "{poly}").map_err(io)?;
            }
        }
        Command::Poly { which, n } => {
            let p = match which {
                PolyName::M => q_motzkin(n),
                PolyName::Mtilde => q_motzkin_tilde(n),
            };
            writeln!(out, "{p}").map_err(io)?;
        }
        Command::Tableau { n } => {
            let t = h_tableau(n);
            for row in 0..=n {
                for i in 0..=row {
                    writeln!(out, "H({row},{i}) = {}", t.get(row, i)).map_err(io)?;
                }
            }
        }
        Command::Series(args) => {
            let preset: Preset = args.preset.parse()?;
            let series = preset.series(args.order);
            if args.json {
                writeln!(out, "{}", series.to_json()).map_err(io)?;
            } else {
                for (k, c) in series.coeffs().iter().enumerate() {
                    writeln!(out, "t^{k}: {c}").map_err(io)?;
                }
            }
        }
        Command::Verify { suite, max_n, json } => {
            let suite: Suite = suite.parse()?;
            let report = run_suite_with(suite, max_n, exec);
            if json {
                writeln!(out, "{}", report.to_json()).map_err(io)?;
            } else {
                for c in &report.checks {
                    let verdict = if c.pass { "PASS" } else { "FAIL" };
                    write!(out, "{verdict} {} {} ({} ms)", c.name, c.range, c.elapsed_ms).map_err(io)?;
                    match &c.counterexample {
                        Some(ce) => writeln!(out, ": {ce}"),
                        None => writeln!(out),
                    }
                    .map_err(io)?;
                }
                let passed = report.checks.iter().filter(|c| c.pass).count();
                writeln!(out, "{passed}/{} checks passed", report.checks.len()).map_err(io)?;
            }
            if let Some(bad) = report.checks.iter().find(|c| !c.pass) {
                return Err(Failure::Verification(format!(
                    "{} ({})",
                    bad.name,
                    bad.counterexample.as_deref().unwrap_or("no counterexample")
                )));
            }
        }
        Command::OeisCheck { bfile, max_n, json } => {
            let text =
                std::fs::read_to_string(&bfile).map_err(|e| Failure::Invalid(format!("{}: {e}", bfile.display())))?;
            let report = oeis_check(&parse_bfile(&text)?, max_n);
            if json {
                writeln!(out, "{}", serde_json::to_string(&report).expect("serializable")).map_err(io)?;
            } else {
                writeln!(out, "matched {} of n=0..{max_n}", report.matched.len()).map_err(io)?;
                if !report.gaps.is_empty() {
                    writeln!(out, "gaps: {}", set(&report.gaps)).map_err(io)?;
                }
                if let Some(m) = &report.mismatch {
                    writeln!(out, "mismatch at n={}: expected {}, found {}", m.n, m.expected, m.found).map_err(io)?;
                }
            }
            if let Some(m) = &report.mismatch {
                return Err(Failure::Verification(format!("b-file disagrees at n={}", m.n)));
            }
        }
    }
    Ok(())
}
