use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use serde_json::{json, Value};

use inddom_core::duality::{
    build_domination_certificate, parse_certificate_json, verify_certificate, verify_raw,
};
use inddom_core::params::{evaluate, nu_star_w, ParamKind};
use inddom_core::rational;
use inddom_core::search::{run_search, SearchConfig, SearchMode};
use inddom_core::{Error, Instance, Rational, DEFAULT_COLUMN_CAP};

const EXIT_VERIFY_FAILED: u8 = 1;
const EXIT_INPUT: u8 = 2;
const EXIT_CAP: u8 = 3;
const EXIT_INTERNAL: u8 = 4;
const EXIT_VIOLATIONS: u8 = 5;

#[derive(Parser)]
#[command(
    name = "inddom",
    version,
    about = "Exact independence/domination parameters and certificates"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute one parameter of an instance.
    Compute {
        #[arg(long, value_parser = parse_kind)]
        kind: ParamKind,
        file: PathBuf,
    },
    /// Build and check a collective domination certificate for a partitioned instance.
    Certify { file: PathBuf },
    /// Check a certificate file against an instance.
    Verify { file: PathBuf, certificate: PathBuf },
    /// Seeded random search for inequality violations.
    Search {
        #[arg(long)]
        seed: u64,
        #[arg(long)]
        count: usize,
        #[arg(long)]
        max_n: usize,
        #[arg(long, value_parser = parse_prob)]
        edge_prob: Rational,
        #[arg(long)]
        max_weight: u64,
        #[arg(long)]
        mode: SearchMode,
    },
}

fn parse_kind(s: &str) -> Result<ParamKind, String> {
    s.parse::<ParamKind>().map_err(|e| e.to_string())
}

fn parse_prob(s: &str) -> Result<Rational, String> {
    rational::parse(s).ok_or_else(|| format!("{s:?} is not a rational p/q"))
}

struct Failure {
    code: u8,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Failure {
        let code = match e {
            Error::CapExceeded { .. } => EXIT_CAP,
            Error::InternalCheckFailed { .. } => EXIT_INTERNAL,
            _ => EXIT_INPUT,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

fn input_error(message: impl Into<String>) -> Failure {
    Failure {
        code: EXIT_INPUT,
        message: message.into(),
    }
}

fn column_cap() -> Result<usize, Failure> {
    match std::env::var("INDDOM_COLUMN_CAP") {
        Ok(v) => v
            .trim()
            .parse::<usize>()
            .ok()
            .filter(|&c| c > 0)
            .ok_or_else(|| {
                input_error(format!(
                    "INDDOM_COLUMN_CAP: {v:?} is not a positive integer"
                ))
            }),
        Err(_) => Ok(DEFAULT_COLUMN_CAP),
    }
}

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| input_error(format!("{}: {e}", path.display())))
}

fn load_instance(path: &Path) -> Result<Instance, Failure> {
    Instance::from_json(&read(path)?).map_err(|e| input_error(format!("{}: {e}", path.display())))
}

fn emit(value: &Value) {
    let text = serde_json::to_string_pretty(value).expect("JSON values serialise");
    // A closed pipe downstream is not an error worth reporting.
    let _ = writeln!(std::io::stdout().lock(), "{text}");
}

fn run(cli: Cli) -> Result<u8, Failure> {
    let cap = column_cap()?;
    match cli.command {
        Command::Compute { kind, file } => {
            let inst = load_instance(&file)?;
            emit(&evaluate(kind, &inst, cap)?.to_json());
            Ok(0)
        }
        Command::Certify { file } => {
            let inst = load_instance(&file)?;
            let p = inst.partition()?;
            let cert = build_domination_certificate(&inst.graph, p, &inst.weights, cap)?;
            let violations = verify_certificate(&inst.graph, p, &inst.weights, &cert, &cert.bound);
            emit(&cert.to_json());
            if violations.is_empty() {
                Ok(0)
            } else {
                for v in &violations {
                    eprintln!("certificate check failed: {v}");
                }
                Ok(EXIT_INTERNAL)
            }
        }
        Command::Verify { file, certificate } => {
            let inst = load_instance(&file)?;
            let p = inst.partition()?;
            let text = read(&certificate)?;
            let value: Value = serde_json::from_str(&text)
                .map_err(|e| input_error(format!("{}: {e}", certificate.display())))?;
            let (g, h, claimed) = parse_certificate_json(&value)
                .map_err(|e| input_error(format!("{}: {e}", certificate.display())))?;
            let nu = nu_star_w(&inst.graph, p, &inst.weights, cap)?.result.value;
            let mut problems: Vec<String> = verify_raw(&inst.graph, p, &inst.weights, &g, &h, &nu)
                .iter()
                .map(ToString::to_string)
                .collect();
            if claimed != nu {
                problems.push(format!(
                    "claimed bound {} differs from the computed optimum {}",
                    rational::render(&claimed),
                    rational::render(&nu)
                ));
            }
            let size = rational::sum(&g) + rational::sum(&h);
            emit(&json!({
                "valid": problems.is_empty(),
                "size": rational::render(&size),
                "bound": rational::render(&nu),
                "violations": problems,
            }));
            Ok(if problems.is_empty() {
                0
            } else {
                EXIT_VERIFY_FAILED
            })
        }
        Command::Search {
            seed,
            count,
            max_n,
            edge_prob,
            max_weight,
            mode,
        } => {
            let config = SearchConfig {
                seed,
                count,
                max_n,
                edge_prob,
                max_weight,
                mode,
            };
            config.validate().map_err(|e| input_error(e.to_string()))?;
            let report = run_search(&config, cap)?;
            emit(&report.to_json());
            if report.violations.is_empty() {
                Ok(0)
            } else {
                for v in &report.violations {
                    eprintln!(
                        "violation: instance {} check {}: {} < {}",
                        v.index,
                        v.kind.name(),
                        rational::render(&v.lhs),
                        rational::render(&v.rhs)
                    );
                }
                Ok(EXIT_VIOLATIONS)
            }
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
