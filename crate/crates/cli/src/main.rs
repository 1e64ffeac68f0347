//! `chu`: load, check, enumerate, collapse, and reduce Chu spaces from the
//! command line, plus self-contained demos of the value-set reductions.
//!
//! Exit codes: 0 = success / all checks pass, 1 = a verification failed,
//! 2 = usage or input error. All reports are JSON with canonical key
//! order, so identical inputs produce byte-identical outputs.

use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use serde::de::DeserializeOwned;
use serde::Serialize;
use serde_json::json;

use chukit::chu::{set_embedding, ChuMorphism, ChuSpace, MorphismData};
use chukit::demo;
use chukit::hilbert::SemilinearMap;
use chukit::quantum::{lemma_suite, SampledQuantumChu};
use chukit::reduction::{apply_functor, TwoValuedCase, ValueMap};
use chukit::solver::{enumerate_morphisms, SearchConstraints};

#[derive(Parser)]
#[command(
    name = "chu",
    about = "Chu space toolkit: exact construction, verification, enumeration, and reduction"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ConstraintsArg {
    None,
    Injective,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum CaseArg {
    V0,
    V1,
}

#[derive(Subcommand)]
enum Command {
    /// Build a Chu space: from a sampled quantum system, or the power-set
    /// embedding of a finite set.
    Build {
        /// Sampled quantum system (JSON) to turn into a Chu space.
        #[arg(long, conflicts_with = "set")]
        source: Option<PathBuf>,
        /// Comma-separated point ids for a power-set embedding.
        #[arg(long)]
        set: Option<String>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Verify a morphism between two spaces; prints the first violating
    /// cell on failure.
    Check {
        #[arg(long)]
        source: PathBuf,
        #[arg(long)]
        target: PathBuf,
        #[arg(long)]
        morphism: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Enumerate all morphisms between two spaces as JSON lines, followed
    /// by a summary record.
    Enumerate {
        #[arg(long)]
        source: PathBuf,
        #[arg(long)]
        target: PathBuf,
        #[arg(long, value_enum, default_value = "none")]
        constraints: ConstraintsArg,
        #[arg(long)]
        max_results: Option<usize>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Biextensional collapse of a space; writes the collapsed space and
    /// the quotient morphism.
    Collapse {
        #[arg(long)]
        source: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run the evaluation-law suite on a sampled quantum system.
    QuantumLemmas {
        /// Sampled quantum system (JSON).
        #[arg(long)]
        source: PathBuf,
        /// JSON array of semilinear maps to use as symmetry witnesses.
        #[arg(long)]
        witnesses: Option<PathBuf>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Apply a value-set reduction functor to a space.
    Reduce {
        #[arg(long)]
        source: PathBuf,
        /// Built-in map name (v0|v1|v3) or a path to a custom map.
        #[arg(long)]
        map: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Two-valued fullness failure, end to end, on bundled fixtures.
    DemoTwoValued {
        /// Restrict to one case; both run by default.
        #[arg(long, value_enum)]
        case: Option<CaseArg>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Three-valued fidelity check on bundled fixtures.
    DemoThreeValued {
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

/// Input or schema problem: exit code 2, message qualified by path.
struct InputError(String);

impl std::fmt::Display for InputError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.0)
    }
}

impl From<chukit::Error> for InputError {
    fn from(e: chukit::Error) -> Self {
        InputError(e.to_string())
    }
}

type CliResult<T> = Result<T, InputError>;

fn load_json<T: DeserializeOwned>(path: &Path) -> CliResult<T> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| InputError(format!("{}: {e}", path.display())))?;
    serde_json::from_str(&text).map_err(|e| InputError(format!("{}: {e}", path.display())))
}

fn emit(out: Option<&Path>, text: &str) -> CliResult<()> {
    match out {
        Some(path) => {
            std::fs::write(path, text).map_err(|e| InputError(format!("{}: {e}", path.display())))
        }
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn emit_json<T: Serialize>(out: Option<&Path>, value: &T) -> CliResult<()> {
    let mut text = serde_json::to_string_pretty(value)
        .map_err(|e| InputError(format!("serialization failed: {e}")))?;
    text.push('\n');
    emit(out, &text)
}

fn run(command: Command) -> CliResult<ExitCode> {
    match command {
        Command::Build { source, set, out } => {
            let space = match (source, set) {
                (Some(path), None) => {
                    let sample: SampledQuantumChu = load_json(&path)?;
                    sample.build_space()
                }
                (None, Some(ids)) => {
                    let points: Vec<&str> = ids.split(',').map(str::trim).collect();
                    set_embedding(&points)?
                }
                _ => {
                    return Err(InputError(
                        "build requires exactly one of --source or --set".into(),
                    ))
                }
            };
            emit_json(out.as_deref(), &space)?;
            Ok(ExitCode::SUCCESS)
        }

        Command::Check {
            source,
            target,
            morphism,
            out,
        } => {
            let c: ChuSpace = load_json(&source)?;
            let d: ChuSpace = load_json(&target)?;
            let data: MorphismData = load_json(&morphism)?;
            match ChuMorphism::from_data(c, d, &data) {
                Ok(_) => {
                    emit_json(out.as_deref(), &json!({ "valid": true }))?;
                    Ok(ExitCode::SUCCESS)
                }
                Err(chukit::Error::MorphismCondition(violation)) => {
                    println!(
                        "first violating cell: point {:?}, attribute {:?}: {} != {}",
                        violation.point,
                        violation.attribute,
                        violation.source_value,
                        violation.target_value
                    );
                    emit_json(
                        out.as_deref(),
                        &json!({ "valid": false, "violation": violation }),
                    )?;
                    Ok(ExitCode::from(1))
                }
                Err(e) => Err(e.into()),
            }
        }

        Command::Enumerate {
            source,
            target,
            constraints,
            max_results,
            out,
        } => {
            let c: ChuSpace = load_json(&source)?;
            let d: ChuSpace = load_json(&target)?;
            let cons = SearchConstraints {
                injective_fwd: constraints == ConstraintsArg::Injective,
                max_results,
            };
            let started = Instant::now();
            let found = enumerate_morphisms(&c, &d, &cons)?;
            let elapsed_ms = started.elapsed().as_millis() as u64;
            let mut stream = String::new();
            for m in &found {
                let line = serde_json::to_string(&m.to_data())
                    .map_err(|e| InputError(format!("serialization failed: {e}")))?;
                let _ = writeln!(stream, "{line}");
            }
            let _ = writeln!(
                stream,
                "{}",
                json!({ "count": found.len(), "elapsed_ms": elapsed_ms })
            );
            emit(out.as_deref(), &stream)?;
            Ok(ExitCode::SUCCESS)
        }

        Command::Collapse { source, out } => {
            let c: ChuSpace = load_json(&source)?;
            let (collapsed, unit) = c.biextensional_collapse();
            emit_json(
                out.as_deref(),
                &json!({ "space": collapsed, "morphism": unit.to_data() }),
            )?;
            Ok(ExitCode::SUCCESS)
        }

        Command::QuantumLemmas {
            source,
            witnesses,
            out,
        } => {
            let sample: SampledQuantumChu = load_json(&source)?;
            let maps: Vec<SemilinearMap> = match witnesses {
                Some(path) => load_json(&path)?,
                None => Vec::new(),
            };
            let report = lemma_suite(&sample, &maps)?;
            emit_json(out.as_deref(), &report)?;
            Ok(if report.all_pass() {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            })
        }

        Command::Reduce { source, map, out } => {
            let space: ChuSpace = load_json(&source)?;
            let value_map = match ValueMap::builtin(&map) {
                Some(v) => v,
                None => load_json(Path::new(&map))?,
            };
            let reduced = apply_functor(&value_map, &space)?;
            emit_json(out.as_deref(), &reduced)?;
            Ok(ExitCode::SUCCESS)
        }

        Command::DemoTwoValued { case, out } => {
            let cases: Vec<TwoValuedCase> = match case {
                Some(CaseArg::V0) => vec![TwoValuedCase::V0],
                Some(CaseArg::V1) => vec![TwoValuedCase::V1],
                None => vec![TwoValuedCase::V0, TwoValuedCase::V1],
            };
            let mut reports = Vec::new();
            let mut all_confirmed = true;
            for c in cases {
                let report = demo::run_two_valued(c)?;
                all_confirmed &= report.confirmed();
                reports.push(report);
            }
            emit_json(out.as_deref(), &reports)?;
            Ok(if all_confirmed {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            })
        }

        Command::DemoThreeValued { out } => {
            let report = demo::run_three_valued()?;
            emit_json(out.as_deref(), &report)?;
            Ok(if report.all_pass() {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            })
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
