//! `mlat` — inspect, validate, and verify finite multiplicative lattices.
//!
//! Exit codes: 0 on success (all checks pass, nothing found), 1 on a failed
//! check, an axiom violation, or a found counterexample, 2 on usage or parse
//! errors.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use mlat::baer::{baer_closure, baer_elements, baer_frame, d_closure, is_b_multiplicative};
use mlat::corpus::LatticeSpecifier;
use mlat::elements::{annihilator, double_annihilator, is_domain, is_semisimple, radical_checked};
use mlat::enumerate::EnumerationConfig;
use mlat::io::{emit_dot, emit_mlat, parse_mlat, MlatError};
use mlat::lattice::Elt;
use mlat::suite::{run_checks, run_suite, search, CheckId, SearchOutcome, SEARCH_PREDICATES};
use mlat::MultLattice;

#[derive(Parser)]
#[command(name = "mlat", version, about = "Finite multiplicative lattice toolkit")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct FileArg {
    /// Path to an MLAT file
    file: PathBuf,
}

#[derive(Args)]
struct FileEltArgs {
    /// Path to an MLAT file
    file: PathBuf,
    /// Element index or name
    elt: String,
}

#[derive(Subcommand)]
enum Command {
    /// Parse a file and check every axiom
    Validate(FileArg),
    /// Summarize a structure: size, bounds, and the main predicates
    Info(FileArg),
    /// List the Baer elements
    Baer(FileArg),
    /// Baer closure and join-of-double-annihilators value of an element
    Closure(FileEltArgs),
    /// Radical of an element
    Radical(FileEltArgs),
    /// Annihilator of an element
    Annihilator(FileEltArgs),
    /// Emit the lattice of Baer elements as an MLAT file
    Frame(FileArg),
    /// Run the theorem-check suite
    Check {
        #[command(flatten)]
        file: FileArg,
        /// Run only these checks (comma-separated ids, e.g. T3,T11)
        #[arg(long, value_delimiter = ',')]
        only: Vec<String>,
        /// Emit the report as JSON
        #[arg(long)]
        json: bool,
    },
    /// Generate a structure and emit it as an MLAT file
    Gen {
        /// chain K | boolean K | zn N | fixture NAME | product SPEC SPEC
        kind: String,
        params: Vec<String>,
    },
    /// Search enumerated structures for a counterexample predicate
    Search {
        /// Largest structure size to enumerate (at most 6)
        #[arg(long = "max-n", default_value_t = 4)]
        max_n: usize,
        /// Predicate name; see --list-predicates
        #[arg(long, required_unless_present = "list_predicates")]
        predicate: Option<String>,
        /// Restrict the scan to reduced structures
        #[arg(long)]
        reduced: bool,
        /// Keep isomorphic duplicates
        #[arg(long)]
        no_dedup: bool,
        /// List the available predicates and exit
        #[arg(long)]
        list_predicates: bool,
    },
    /// Emit the Hasse diagram as DOT
    ExportDot(FileArg),
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(err.exit_code())
        }
    }
}

enum CliError {
    Parse(MlatError),
    Invalid(MlatError),
    Usage(String),
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            CliError::Parse(_) | CliError::Usage(_) => 2,
            CliError::Invalid(_) => 1,
        }
    }
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Parse(e) | CliError::Invalid(e) => write!(f, "{e}"),
            CliError::Usage(msg) => write!(f, "{msg}"),
        }
    }
}

fn load(path: &PathBuf) -> Result<MultLattice, CliError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::Usage(format!("{}: {e}", path.display())))?;
    parse_mlat(&text).map_err(|e| match e {
        MlatError::Parse { .. } => CliError::Parse(e),
        other => CliError::Invalid(other),
    })
}

fn resolve_elt(m: &MultLattice, token: &str) -> Result<Elt, CliError> {
    if let Ok(idx) = token.parse::<usize>() {
        if idx < m.n() {
            return Ok(Elt(idx));
        }
    }
    if let Some(e) = m.elements().find(|&e| m.lattice().name(e) == Some(token)) {
        return Ok(e);
    }
    Err(CliError::Usage(format!(
        "no element `{token}` in a lattice of size {}",
        m.n()
    )))
}

fn run(cli: Cli) -> Result<ExitCode, CliError> {
    match cli.command {
        Command::Validate(arg) => {
            let m = load(&arg.file)?;
            println!(
                "OK: {} elements, bottom {}, top {}",
                m.n(),
                m.display_elt(m.bottom()),
                m.display_elt(m.top())
            );
            Ok(ExitCode::SUCCESS)
        }
        Command::Info(arg) => {
            let m = load(&arg.file)?;
            println!("elements:         {}", m.n());
            println!("bottom:           {}", m.display_elt(m.bottom()));
            println!("top:              {}", m.display_elt(m.top()));
            println!("reduced:          {}", m.is_reduced());
            println!("semisimple:       {}", is_semisimple(&m));
            println!("domain:           {}", is_domain(&m));
            println!("b-multiplicative: {}", is_b_multiplicative(&m));
            Ok(ExitCode::SUCCESS)
        }
        Command::Baer(arg) => {
            let m = load(&arg.file)?;
            let labels: Vec<String> = baer_elements(&m)
                .into_iter()
                .map(|e| m.display_elt(e))
                .collect();
            println!("{}", labels.join(" "));
            Ok(ExitCode::SUCCESS)
        }
        Command::Closure(args) => {
            let m = load(&args.file)?;
            let e = resolve_elt(&m, &args.elt)?;
            let closure = baer_closure(&m);
            let d = d_closure(&m);
            println!("closure: {}", m.display_elt(closure.apply(e)));
            println!("d-map:   {}", m.display_elt(d.apply(e)));
            Ok(ExitCode::SUCCESS)
        }
        Command::Radical(args) => {
            let m = load(&args.file)?;
            let e = resolve_elt(&m, &args.elt)?;
            match radical_checked(&m, e) {
                Ok(r) => {
                    println!("{}", m.display_elt(r));
                    Ok(ExitCode::SUCCESS)
                }
                Err(err) => {
                    eprintln!("{err}");
                    Ok(ExitCode::FAILURE)
                }
            }
        }
        Command::Annihilator(args) => {
            let m = load(&args.file)?;
            let e = resolve_elt(&m, &args.elt)?;
            println!("{}", m.display_elt(annihilator(&m, e)));
            println!("double: {}", m.display_elt(double_annihilator(&m, e)));
            Ok(ExitCode::SUCCESS)
        }
        Command::Frame(arg) => {
            let m = load(&arg.file)?;
            match baer_frame(&m) {
                Ok(frame) => {
                    print!("{}", emit_mlat(frame.mult_lattice()));
                    Ok(ExitCode::SUCCESS)
                }
                Err(err) => {
                    eprintln!("{err}");
                    Ok(ExitCode::FAILURE)
                }
            }
        }
        Command::Check { file, only, json } => {
            let m = load(&file.file)?;
            let label = file.file.display().to_string();
            let report = if only.is_empty() {
                run_suite(&m, &label)
            } else {
                let mut ids = Vec::new();
                for token in &only {
                    ids.push(
                        CheckId::parse(token)
                            .map_err(|e| CliError::Usage(e.to_string()))?,
                    );
                }
                let results = run_checks(&m, &ids);
                mlat::suite::TheoremReport {
                    lattice: label,
                    results,
                    wall: std::time::Duration::ZERO,
                }
            };
            if json {
                println!("{}", report.to_json());
            } else {
                for r in &report.results {
                    let mut line = format!("{:4} {:9} {}", r.id.code(), r.status.label(), r.id.slug());
                    if let mlat::suite::CheckStatus::Fail { witness } = &r.status {
                        line.push_str(&format!("  witness={witness:?}"));
                    }
                    println!("{line}");
                }
                let failed = report.results.iter().filter(|r| r.status.is_fail()).count();
                println!(
                    "{} checks, {} failed ({} ms)",
                    report.results.len(),
                    failed,
                    report.wall.as_millis()
                );
            }
            if report.passed() {
                Ok(ExitCode::SUCCESS)
            } else {
                Ok(ExitCode::FAILURE)
            }
        }
        Command::Gen { kind, params } => {
            let spec = specifier_from_args(&kind, &params)?;
            let m = spec
                .build()
                .map_err(|e| CliError::Usage(e.to_string()))?;
            print!("{}", emit_mlat(&m));
            Ok(ExitCode::SUCCESS)
        }
        Command::Search { max_n, predicate, reduced, no_dedup, list_predicates } => {
            if list_predicates {
                for (name, desc) in SEARCH_PREDICATES {
                    println!("{name}: {desc}");
                }
                return Ok(ExitCode::SUCCESS);
            }
            let predicate = predicate.expect("clap enforces the predicate");
            if !(1..=mlat::enumerate::MAX_ENUMERABLE_N).contains(&max_n) {
                return Err(CliError::Usage(format!(
                    "--max-n must be between 1 and {}",
                    mlat::enumerate::MAX_ENUMERABLE_N
                )));
            }
            let config = EnumerationConfig {
                max_n,
                dedup: !no_dedup,
                require_reduced: reduced,
            };
            match search(&config, &predicate).map_err(|e| CliError::Usage(e.to_string()))? {
                SearchOutcome::Found { lattice, witness } => {
                    println!("found: witness {witness:?}");
                    print!("{}", emit_mlat(&lattice));
                    Ok(ExitCode::FAILURE)
                }
                SearchOutcome::Exhausted { examined } => {
                    println!(
                        "none-found: examined {examined} structures (n <= {max_n}, reduced={reduced})"
                    );
                    Ok(ExitCode::SUCCESS)
                }
            }
        }
        Command::ExportDot(arg) => {
            let m = load(&arg.file)?;
            print!("{}", emit_dot(&m));
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn specifier_from_args(kind: &str, params: &[String]) -> Result<LatticeSpecifier, CliError> {
    let usage = |msg: &str| CliError::Usage(msg.to_string());
    match kind {
        "chain" | "boolean" | "zn" | "fixture" => {
            let [param] = params else {
                return Err(usage(&format!("gen {kind} takes exactly one parameter")));
            };
            LatticeSpecifier::parse(&format!("{kind}:{param}"))
                .map_err(|e| usage(&e.to_string()))
        }
        "product" => {
            let [a, b] = params else {
                return Err(usage("gen product takes exactly two specifiers, e.g. chain:1 zn:6"));
            };
            LatticeSpecifier::parse(&format!("product:({a},{b})"))
                .map_err(|e| usage(&e.to_string()))
        }
        other => Err(usage(&format!(
            "unknown kind `{other}`; expected chain, boolean, zn, fixture, or product"
        ))),
    }
}
