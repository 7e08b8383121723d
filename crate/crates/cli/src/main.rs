//! Command-line front end: `check`, `cross-validate`, `explain`, `corpus`.
//!
//! Exit status: 0 when every agreement holds, 1 on any disagreement, 2 on
//! input errors.

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use pfusion::harness::{
    builtin_corpus, cmd_check, cmd_cross_validate, cmd_explain, parse_group_spec, GroupSpec, Limits, Report,
};
use pfusion::nilpotency::CriterionId;

#[derive(Parser)]
#[command(name = "pfusion", version, about = "Nilpotency criteria for fusion systems of finite groups")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run criteria and the oracle on one group at one prime.
    Check {
        /// Group spec JSON file, or `builtin:NAME`.
        file: String,
        /// The prime p.
        #[arg(long)]
        prime: u64,
        /// Comma-separated criterion ids (default: all): definition, element-fusion,
        /// tuple-fusion, frobenius-all, frobenius-centric, focal, abelian, quillen,
        /// quillen-category, control-fusion, suff-central-elements, suff-omega-center.
        #[arg(long, value_delimiter = ',')]
        criteria: Option<Vec<String>>,
        #[command(flatten)]
        limits: LimitArgs,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Run everything on every (group, prime) pair and compare.
    CrossValidate {
        /// Group spec JSON files.
        files: Vec<String>,
        /// Include the built-in corpus.
        #[arg(long)]
        builtin: bool,
        /// Write the JSON report here.
        #[arg(long)]
        out: Option<PathBuf>,
        #[command(flatten)]
        limits: LimitArgs,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Show one criterion's verdict, witness and the condition it tests.
    Explain {
        /// Group spec JSON file, or `builtin:NAME`.
        file: String,
        /// The prime p.
        #[arg(long)]
        prime: u64,
        /// Criterion id, see `check --help`.
        #[arg(long)]
        criterion: String,
        #[command(flatten)]
        limits: LimitArgs,
    },
    /// Inspect the built-in corpus.
    Corpus {
        /// List names, degrees and primes.
        #[arg(long)]
        list: bool,
        /// Print the spec of one member as JSON.
        #[arg(long)]
        show: Option<String>,
    },
}

#[derive(Args)]
struct LimitArgs {
    /// Refuse groups larger than this (default 5000).
    #[arg(long)]
    max_order: Option<usize>,
    /// Largest Sylow subgroup whose lattice is enumerated (default 256).
    #[arg(long)]
    max_sylow: Option<usize>,
    /// Tuple length for tuple-fusion (default 2).
    #[arg(long)]
    tuple_n: Option<usize>,
    /// Cap on morphisms built while closing a fusion system (default 500000).
    #[arg(long)]
    morphism_budget: Option<usize>,
}

impl LimitArgs {
    fn limits(&self) -> Limits {
        let d = Limits::default();
        Limits {
            max_order: self.max_order.unwrap_or(d.max_order),
            max_sylow: self.max_sylow.unwrap_or(d.max_sylow),
            morphism_budget: self.morphism_budget.unwrap_or(d.morphism_budget),
            tuple_n: self.tuple_n.unwrap_or(d.tuple_n),
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
}

struct InputError(String);

impl<E: std::fmt::Display> From<E> for InputError {
    fn from(e: E) -> Self {
        InputError(e.to_string())
    }
}

fn load(file: &str) -> Result<GroupSpec, InputError> {
    if let Some(name) = file.strip_prefix("builtin:") {
        return builtin_corpus()
            .into_iter()
            .find(|s| s.name == name)
            .ok_or_else(|| InputError(format!("no built-in group named {name:?}")));
    }
    let text = std::fs::read_to_string(Path::new(file)).map_err(|e| InputError(format!("{file}: {e}")))?;
    parse_group_spec(&text).map_err(|e| InputError(format!("{file}: {e}")))
}

fn parse_criteria(list: &[String]) -> Result<Vec<CriterionId>, InputError> {
    list.iter().map(|s| s.trim().parse::<CriterionId>().map_err(InputError::from)).collect()
}

fn run(cli: Cli) -> Result<u8, InputError> {
    match cli.command {
        Command::Check { file, prime, criteria, limits, format } => {
            let spec = load(&file)?;
            let selection = criteria.as_deref().map(parse_criteria).transpose()?;
            let report = cmd_check(&spec, prime, selection.as_deref(), &limits.limits())?;
            match format {
                Format::Json => println!("{}", serde_json::to_string_pretty(&report)?),
                Format::Text => print!("{}", report.to_text()),
            }
            Ok(if report.agreed && report.witnesses_valid() { 0 } else { 1 })
        }
        Command::CrossValidate { files, builtin, out, limits, format } => {
            let mut specs = Vec::new();
            if builtin {
                specs.extend(builtin_corpus());
            }
            for file in &files {
                specs.push(load(file)?);
            }
            if specs.is_empty() {
                return Err(InputError("give spec files or --builtin".into()));
            }
            let report: Report = cmd_cross_validate(&specs, &limits.limits())?;
            if let Some(path) = out {
                std::fs::write(&path, report.to_json()).map_err(|e| InputError(format!("{}: {e}", path.display())))?;
            }
            match format {
                Format::Json => println!("{}", report.to_json()),
                Format::Text => print!("{}", report.to_text()),
            }
            Ok(report.exit_code() as u8)
        }
        Command::Explain { file, prime, criterion, limits } => {
            let spec = load(&file)?;
            let id: CriterionId = criterion.parse()?;
            print!("{}", cmd_explain(&spec, prime, id, &limits.limits())?);
            Ok(0)
        }
        Command::Corpus { list, show } => {
            let corpus = builtin_corpus();
            if let Some(name) = show {
                let spec = load(&format!("builtin:{name}"))?;
                println!("{}", serde_json::to_string_pretty(&spec)?);
            } else if list {
                for s in &corpus {
                    let primes: Vec<String> = s.primes.iter().map(u64::to_string).collect();
                    println!("{:<10} degree {:<3} primes {}", s.name, s.degree, primes.join(","));
                }
            } else {
                return Err(InputError("use --list or --show NAME".into()));
            }
            Ok(0)
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => ExitCode::from(code),
        Err(InputError(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
