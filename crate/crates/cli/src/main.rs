use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use lorentz_cli::family::parse_vector;
use lorentz_cli::{check, generate, paper_suite, run_sweep, Family, Mode, Params, SweepSpec, UsageError};
use lorentz_core::poly::text::{format_file, parse_polynomial};
use lorentz_core::{corpus, lorentzian_certify};
use serde_json::json;

#[derive(Parser, Debug)]
#[command(name = "lorentz", version, about = "Generate and certify Lorentzian polynomials")]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, global = true, default_value_t = Out::Text)]
    out: Out,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Out {
    Json,
    Text,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print a family member as a polynomial file.
    Gen(GenArgs),
    /// Certify a polynomial file (standard input when no path is given).
    Certify {
        path: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = Mode::Certify)]
        mode: Mode,
    },
    /// Check every member of a family within bounds.
    Sweep(SweepArgs),
    /// Run the fixed reference computations.
    PaperSuite,
    /// Shipped reference polynomials.
    Corpus {
        #[command(subcommand)]
        command: CorpusCommand,
    },
}

#[derive(Subcommand, Debug)]
enum CorpusCommand {
    /// Re-parse every file and compare against its recorded hash.
    Verify,
    List,
    /// Print one corpus file in canonical form.
    Show {
        name: String,
    },
}

#[derive(Args, Debug)]
struct GenArgs {
    #[arg(long, value_enum)]
    family: Family,
    /// Partition, e.g. `3,1,1` (outer shape for skew).
    #[arg(long)]
    lambda: Option<String>,
    /// Weak composition for key polynomials.
    #[arg(long)]
    mu: Option<String>,
    /// Inner shape for skew.
    #[arg(long)]
    inner: Option<String>,
    /// Permutation in one-line notation, e.g. `1432`.
    #[arg(long)]
    w: Option<String>,
    #[arg(long)]
    delta: Option<String>,
    /// Number of variables for schur, skew and schur_p.
    #[arg(long)]
    vars: Option<usize>,
    /// Grothendieck only: emit `(-1)^k G^k_w`.
    #[arg(long)]
    component: Option<u32>,
    /// Apply `x^a -> x^a / a!`.
    #[arg(long)]
    normalize: bool,
}

#[derive(Args, Debug)]
struct SweepArgs {
    #[arg(long, value_enum)]
    family: Family,
    #[arg(long, value_enum, default_value_t = Mode::Certify)]
    mode: Mode,
    /// Permutation size, number of variables, or composition length.
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    boxes: Option<u32>,
    #[arg(long)]
    parts: Option<usize>,
    /// Componentwise bound for verma, e.g. `2,2,2`.
    #[arg(long)]
    delta: Option<String>,
    #[arg(long)]
    normalize: bool,
    /// Worker threads; defaults to the available parallelism.
    #[arg(long)]
    jobs: Option<usize>,
}

enum Failure {
    Usage(String),
    Refuted,
}

impl From<UsageError> for Failure {
    fn from(e: UsageError) -> Self {
        Failure::Usage(e.0)
    }
}

fn print_json(v: &impl serde::Serialize) {
    println!("{}", serde_json::to_string_pretty(v).expect("serializable"));
}

fn verdict(passed: bool) -> Result<(), Failure> {
    if passed {
        Ok(())
    } else {
        Err(Failure::Refuted)
    }
}

fn run(cli: Cli) -> Result<(), Failure> {
    match cli.command {
        Command::Gen(a) => {
            let params = Params {
                lambda: a.lambda,
                mu: a.mu,
                inner: a.inner,
                w: a.w,
                delta: a.delta,
                vars: a.vars,
                component: a.component,
                normalize: a.normalize,
            };
            let p = generate(a.family, &params)?;
            match cli.out {
                Out::Text => print!("{}", format_file(&p)),
                Out::Json => print_json(&json!({
                    "family": a.family,
                    "arity": p.arity(),
                    "polynomial": lorentz_core::poly::text::format_polynomial(&p),
                })),
            }
            Ok(())
        }
        Command::Certify { path, mode } => {
            let input = match &path {
                Some(p) => std::fs::read_to_string(p).map_err(|e| Failure::Usage(format!("{}: {e}", p.display())))?,
                None => {
                    let mut s = String::new();
                    std::io::stdin()
                        .read_to_string(&mut s)
                        .map_err(|e| Failure::Usage(format!("stdin: {e}")))?;
                    s
                }
            };
            let p = parse_polynomial(&input).map_err(|e| Failure::Usage(e.to_string()))?;
            if mode == Mode::Certify {
                let cert = lorentzian_certify(&p);
                match cli.out {
                    Out::Json => println!("{}", cert.to_json()),
                    Out::Text => {
                        println!(
                            "verdict: {}",
                            if cert.is_lorentzian() {
                                "lorentzian"
                            } else {
                                "not_lorentzian"
                            }
                        );
                        for c in &cert.checks {
                            let status = serde_json::to_value(c.status).expect("status serializes");
                            let status = status.as_str().unwrap_or_default();
                            match c.count {
                                Some(n) => println!("  {}: {status} ({n} forms)", c.name),
                                None => println!("  {}: {status}", c.name),
                            }
                        }
                        if let Some(f) = &cert.failure {
                            println!("failure: {f}");
                        }
                    }
                }
                return verdict(cert.is_lorentzian());
            }
            let outcome = check(&p, mode);
            match cli.out {
                Out::Json => print_json(&json!({
                    "mode": mode,
                    "passed": outcome.passed,
                    "summary": outcome.summary,
                    "witness": outcome.detail,
                })),
                Out::Text => println!("{}: {}", if outcome.passed { "pass" } else { "fail" }, outcome.summary),
            }
            verdict(outcome.passed)
        }
        Command::Sweep(a) => {
            let spec = SweepSpec {
                family: a.family,
                mode: a.mode,
                n: a.n,
                boxes: a.boxes,
                parts: a.parts,
                delta: a.delta.as_deref().map(|d| parse_vector(d, "delta")).transpose()?,
                normalize: a.normalize,
            };
            if a.jobs == Some(0) {
                return Err(Failure::Usage("--jobs must be positive".into()));
            }
            let report = run_sweep(&spec, a.jobs)?;
            match cli.out {
                Out::Text => print!("{}", report.to_text()),
                Out::Json => print_json(&report),
            }
            verdict(report.passed())
        }
        Command::PaperSuite => {
            let report = paper_suite();
            match cli.out {
                Out::Text => print!("{}", report.to_text()),
                Out::Json => print_json(&report),
            }
            verdict(report.passed())
        }
        Command::Corpus { command } => match command {
            CorpusCommand::Verify => {
                let checks = corpus::verify();
                match cli.out {
                    Out::Text => {
                        for c in &checks {
                            let tag = if c.ok() { "ok" } else { "MISMATCH" };
                            let detail = c.error.clone().or_else(|| c.actual.clone()).unwrap_or_default();
                            println!("{tag} {} {detail}", c.name);
                        }
                    }
                    Out::Json => print_json(
                        &checks
                            .iter()
                            .map(|c| {
                                json!({"name": c.name, "ok": c.ok(), "expected": c.expected,
                                       "actual": c.actual, "error": c.error})
                            })
                            .collect::<Vec<_>>(),
                    ),
                }
                verdict(checks.iter().all(|c| c.ok()))
            }
            CorpusCommand::List => {
                for e in corpus::ENTRIES {
                    println!("{}  {}", e.name, e.description());
                }
                Ok(())
            }
            CorpusCommand::Show { name } => {
                let p = corpus::load(&name).map_err(|e| Failure::Usage(e.to_string()))?;
                print!("{}", format_file(&p));
                Ok(())
            }
        },
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Refuted) => ExitCode::from(1),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
