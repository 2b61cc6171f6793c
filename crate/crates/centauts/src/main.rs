use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context};
use centauts::{
    analyze_group, emit_report, parse_group_file, scan_corpus, Cache, OutputFormat, RunConfig,
};
use centauts_core::catalog::{self, catalog};
use centauts_core::group::DEFAULT_ELEMENT_CAP;
use centauts_core::theory::{verify_lemma4_sweep, Check, TheoremReport, Verdict};
use clap::{Parser, Subcommand};

#[derive(Parser)]
#[command(
    name = "centauts",
    version,
    about = "Central automorphisms of finite p-groups, checked exhaustively"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

fn parse_check(s: &str) -> Result<Check, String> {
    Check::from_name(s).ok_or_else(|| {
        let names: Vec<&str> = Check::ALL.iter().map(|c| c.name()).collect();
        format!("unknown check {s:?} (expected one of {})", names.join(", "))
    })
}

#[derive(Subcommand)]
enum Command {
    /// Run checks on one catalog group or group file
    Analyze {
        /// catalog name or path to a JSON group file
        target: String,
        #[arg(long = "check", value_parser = parse_check)]
        checks: Vec<Check>,
        #[arg(long, default_value = "json")]
        format: OutputFormat,
        #[arg(long)]
        budget: Option<u64>,
    },
    /// Run checks over the catalog and any extra group files
    Scan {
        #[arg(long, default_value_t = 128)]
        max_order: usize,
        #[arg(long = "prime")]
        primes: Vec<u64>,
        #[arg(long = "check", value_parser = parse_check)]
        checks: Vec<Check>,
        #[arg(long, default_value = "json")]
        format: OutputFormat,
        #[arg(long)]
        cache_dir: Option<PathBuf>,
        #[arg(long)]
        budget: Option<u64>,
        #[arg(long = "group-file")]
        group_files: Vec<PathBuf>,
        /// write the report here instead of stdout
        #[arg(long, short)]
        output: Option<PathBuf>,
    },
    /// Exhaustive sweep of the Hom-order threshold over abelian type triples
    SweepLemma4 {
        #[arg(long)]
        prime: u64,
        #[arg(long)]
        max_exp: u32,
    },
    /// Print the builtin catalog
    ListCatalog,
}

fn checks_or_all(checks: Vec<Check>) -> Vec<Check> {
    if checks.is_empty() {
        Check::ALL.to_vec()
    } else {
        checks
    }
}

fn failed(reports: &[TheoremReport]) -> bool {
    reports
        .iter()
        .any(|r| matches!(r.verdict, Verdict::Counterexample | Verdict::Error))
}

fn write_out(text: &str, output: Option<&Path>) -> anyhow::Result<()> {
    match output {
        Some(path) => {
            std::fs::write(path, text).with_context(|| format!("writing {}", path.display()))
        }
        None => {
            let mut out = std::io::stdout().lock();
            match out.write_all(text.as_bytes()).and_then(|_| out.flush()) {
                Err(e) if e.kind() == std::io::ErrorKind::BrokenPipe => Ok(()),
                other => other.context("writing to stdout"),
            }
        }
    }
}

fn run(cli: Cli) -> anyhow::Result<bool> {
    match cli.command {
        Command::Analyze {
            target,
            checks,
            format,
            budget,
        } => {
            let cfg = RunConfig {
                max_order: DEFAULT_ELEMENT_CAP,
                checks: checks_or_all(checks),
                budget: budget.unwrap_or(RunConfig::default().budget),
                ..RunConfig::default()
            };
            cfg.validate()?;
            let (id, g) = match catalog::build(&target) {
                Ok(g) => (target, g),
                Err(_) if Path::new(&target).exists() => {
                    parse_group_file(Path::new(&target), DEFAULT_ELEMENT_CAP)?
                }
                Err(_) => bail!("{target:?} is neither a catalog group nor a readable file"),
            };
            let cache = cfg.effective_cache_dir().map(Cache::open).transpose()?;
            let report = analyze_group(
                &id,
                &g,
                &cfg.normalized_checks(),
                cfg.limits(),
                cache.as_ref(),
            );
            let reports = [report];
            write_out(&emit_report(&reports, format)?, None)?;
            Ok(!failed(&reports))
        }
        Command::Scan {
            max_order,
            primes,
            checks,
            format,
            cache_dir,
            budget,
            group_files,
            output,
        } => {
            let cfg = RunConfig {
                max_order,
                primes,
                checks: checks_or_all(checks),
                output_format: format,
                cache_dir,
                budget: budget.unwrap_or(RunConfig::default().budget),
                group_files,
            };
            let reports = scan_corpus(&cfg)?;
            write_out(
                &emit_report(&reports, cfg.output_format)?,
                output.as_deref(),
            )?;
            Ok(!failed(&reports))
        }
        Command::SweepLemma4 { prime, max_exp } => {
            let sweep = verify_lemma4_sweep(prime, max_exp)?;
            write_out(&(serde_json::to_string_pretty(&sweep)? + "\n"), None)?;
            Ok(sweep.passes())
        }
        Command::ListCatalog => {
            let listing: String = catalog()
                .iter()
                .map(|e| format!("{:<12} {:>4}  {}\n", e.name, e.order, e.description))
                .collect();
            write_out(&listing, None)?;
            Ok(true)
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
