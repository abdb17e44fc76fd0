use std::collections::BTreeMap;
use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use bihom::catalog::{catalog_names, catalog_text, load_catalog};
use bihom::format::{parse_algebra_file, print_algebra_file, AlgebraFile};
use bihom::suite::{run_construction, run_structure, run_suite, Construction, Options, StructureOp, Suite, SuiteError};
use bihom::{CheckReport, Rational};
use clap::{Args, Parser, Subcommand};

const EXIT_FAIL: u8 = 1;
const EXIT_INPUT: u8 = 2;
const EXIT_REFUSED: u8 = 3;

#[derive(Parser)]
#[command(name = "bihom", version, about = "Exact checks for Hopf module algebras and generalized BiHom-Lie algebras")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Input {
    /// Algebra file (JSON).
    #[arg(conflicts_with = "catalog", required_unless_present = "catalog")]
    file: Option<PathBuf>,
    /// Use a built-in catalog entry instead of a file.
    #[arg(long, short)]
    catalog: Option<String>,
    /// Substitute a rational value for a parameter, e.g. `--set b=3`.
    #[arg(long = "set", value_name = "NAME=RATIONAL")]
    set: Vec<String>,
}

#[derive(Args)]
struct Output {
    /// Emit machine-readable JSON.
    #[arg(long)]
    json: bool,
    /// Write to a file instead of stdout.
    #[arg(long, value_name = "PATH")]
    output: Option<PathBuf>,
}

#[derive(Args)]
struct Tuning {
    /// Restrict to one named object.
    #[arg(long)]
    object: Option<String>,
    #[arg(long, default_value_t = bihom::structure::DEFAULT_MAX_STEPS)]
    max_steps: usize,
    #[arg(long, default_value_t = 0)]
    probe_seed: u64,
    /// Number of pseudo-random probe vectors for certificates.
    #[arg(long, default_value_t = bihom::structure::DEFAULT_PROBES)]
    probes: usize,
}

#[derive(Subcommand)]
enum Command {
    /// Run a verification suite.
    Check {
        #[command(flatten)]
        input: Input,
        #[arg(long, default_value = "all", value_parser = parse_named::<Suite>)]
        suite: Suite,
        #[command(flatten)]
        tuning: Tuning,
        #[command(flatten)]
        out: Output,
    },
    /// Build a derived bracket (commutator or twist) and write it as a new file.
    Construct {
        #[arg(value_parser = parse_named::<Construction>)]
        what: Construction,
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        object: Option<String>,
        #[arg(long, value_name = "PATH")]
        output: Option<PathBuf>,
    },
    /// Structure theory: center, series, ideals, closures, certificates.
    Structure {
        #[arg(value_parser = parse_named::<StructureOp>)]
        what: StructureOp,
        #[command(flatten)]
        input: Input,
        /// A vector as comma-separated scalars, e.g. `0,0,1` (repeatable).
        #[arg(long)]
        vector: Vec<String>,
        /// A basis vector by name (repeatable).
        #[arg(long)]
        basis: Vec<String>,
        #[command(flatten)]
        tuning: Tuning,
        #[command(flatten)]
        out: Output,
    },
    /// List the built-in catalog, or print one entry.
    Catalog { name: Option<String> },
    /// Print a file in canonical form.
    Print {
        #[command(flatten)]
        input: Input,
        #[arg(long, value_name = "PATH")]
        output: Option<PathBuf>,
    },
}

fn parse_named<T: std::str::FromStr<Err = String>>(s: &str) -> Result<T, String> {
    s.parse()
}

enum Failure {
    Input(String),
    Refused(String),
}

impl From<SuiteError> for Failure {
    fn from(e: SuiteError) -> Self {
        match e {
            SuiteError::Precondition(_) => Failure::Refused(e.to_string()),
            _ => Failure::Input(e.to_string()),
        }
    }
}

fn load(input: &Input) -> Result<AlgebraFile, Failure> {
    let file = match (&input.file, &input.catalog) {
        (_, Some(name)) => load_catalog(name).map_err(|_| {
            Failure::Input(format!("unknown catalog entry `{name}`; available: {}", catalog_names().join(", ")))
        })?,
        (Some(path), None) => {
            let text = fs::read_to_string(path).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?;
            parse_algebra_file(&text).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?
        }
        (None, None) => return Err(Failure::Input("no input given".into())),
    };
    if input.set.is_empty() {
        return Ok(file);
    }
    let mut bindings = BTreeMap::new();
    for item in &input.set {
        let (name, value) = item
            .split_once('=')
            .ok_or_else(|| Failure::Input(format!("--set expects NAME=RATIONAL, got `{item}`")))?;
        let value: Rational = value
            .trim()
            .parse()
            .map_err(|_| Failure::Input(format!("`{value}` is not a rational number")))?;
        bindings.insert(name.trim().to_string(), value);
    }
    file.substitute(&bindings).map_err(|e| Failure::Input(e.to_string()))
}

fn emit(text: &str, output: Option<&PathBuf>) -> Result<(), Failure> {
    match output {
        Some(path) => fs::write(path, text).map_err(|e| Failure::Input(format!("{}: {e}", path.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn emit_report(report: &CheckReport, out: &Output) -> Result<ExitCode, Failure> {
    let text = if out.json {
        format!("{}\n", report.to_json())
    } else {
        format!("{report}\n")
    };
    emit(&text, out.output.as_ref())?;
    Ok(if report.passed() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(EXIT_FAIL)
    })
}

fn options(tuning: &Tuning, vectors: Vec<Vec<String>>) -> Options {
    Options {
        object: tuning.object.clone(),
        max_steps: tuning.max_steps,
        probe_seed: tuning.probe_seed,
        probes: tuning.probes,
        vectors,
    }
}

fn run(cli: Cli) -> Result<ExitCode, Failure> {
    match cli.command {
        Command::Check {
            input,
            suite,
            tuning,
            out,
        } => {
            let file = load(&input)?;
            let report = run_suite(&file, suite, &options(&tuning, vec![]))?;
            emit_report(&report, &out)
        }
        Command::Construct {
            what,
            input,
            object,
            output,
        } => {
            let file = load(&input)?;
            let built = run_construction(&file, what, object.as_deref())?;
            emit(&print_algebra_file(&built), output.as_ref())?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Structure {
            what,
            input,
            vector,
            basis,
            tuning,
            out,
        } => {
            let file = load(&input)?;
            let mut vectors: Vec<Vec<String>> = vector
                .iter()
                .map(|v| v.split(',').map(|s| s.trim().to_string()).collect())
                .collect();
            vectors.extend(basis.into_iter().map(|b| vec![b]));
            let report = run_structure(&file, what, &options(&tuning, vectors))?;
            emit_report(&report, &out)
        }
        Command::Catalog { name } => {
            match name {
                Some(n) => {
                    let text = catalog_text(&n).ok_or_else(|| Failure::Input(format!("unknown catalog entry `{n}`")))?;
                    print!("{text}");
                }
                None => {
                    for n in catalog_names() {
                        println!("{n}");
                    }
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Print { input, output } => {
            let file = load(&input)?;
            emit(&print_algebra_file(&file), output.as_ref())?;
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(Failure::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(EXIT_INPUT)
        }
        Err(Failure::Refused(msg)) => {
            eprintln!("{msg}");
            ExitCode::from(EXIT_REFUSED)
        }
    }
}
