use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::Context;
use clap::{ArgGroup, Parser, Subcommand, ValueEnum};

use qsum::combinatorics::{durfee_decompose, verify_over_lemmas, ColoredPartition, PartitionKind};
use qsum::harness::render::{self, Format};
use qsum::harness::{run_all, run_oracle, run_verify, DEFAULT_COLORS, DEFAULT_ORDER};
use qsum::identities::{IdentityName, IdentitySpec};

#[derive(Parser)]
#[command(name = "qsum", version, about = "Verify multi-colored partition identities coefficient by coefficient")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Side {
    Lhs,
    Rhs,
}

#[derive(Subcommand)]
enum Command {
    /// Build both sides of an identity and compare them up to the order.
    #[command(group(ArgGroup::new("which").required(true).args(["identity", "all"])))]
    Verify {
        #[arg(long)]
        identity: Option<IdentityName>,
        /// Run the whole catalog, stopping at the first mismatch.
        #[arg(long)]
        all: bool,
        #[arg(long, default_value_t = DEFAULT_COLORS)]
        colors: usize,
        #[arg(long, default_value_t = DEFAULT_ORDER)]
        order: usize,
        #[arg(long, default_value = "table")]
        format: Format,
        /// Omit timings so output is byte-identical across runs.
        #[arg(long)]
        deterministic: bool,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Compare brute-force enumeration with the product-side coefficients.
    Oracle {
        #[arg(long)]
        kind: PartitionKind,
        #[arg(long, default_value_t = DEFAULT_COLORS)]
        colors: usize,
        #[arg(long)]
        max_n: u32,
        #[arg(long, default_value = "table")]
        format: Format,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Check the three single-color overpartition counting lemmas.
    Lemmas {
        #[arg(long, default_value_t = 6)]
        max_parts: u32,
        #[arg(long, default_value_t = 15)]
        order: usize,
        #[arg(long, default_value = "table")]
        format: Format,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Split a colored partition into its Durfee-square blocks.
    Decompose {
        /// Comma-separated parts `size[color]`, `~` marks an overline.
        #[arg(long, allow_hyphen_values = true)]
        partition: String,
        #[arg(long, default_value = "over")]
        kind: PartitionKind,
        #[arg(long, default_value = "table")]
        format: Format,
    },
    /// Dump the coefficient table of one side of an identity.
    Series {
        #[arg(long)]
        identity: IdentityName,
        #[arg(long, value_enum, default_value = "lhs")]
        side: Side,
        #[arg(long, default_value_t = DEFAULT_COLORS)]
        colors: usize,
        #[arg(long, default_value_t = DEFAULT_ORDER)]
        order: usize,
        #[arg(long, default_value = "csv")]
        format: Format,
        #[arg(long)]
        output: Option<PathBuf>,
    },
}

fn emit(text: &str, output: Option<&PathBuf>) -> anyhow::Result<()> {
    match output {
        Some(path) => std::fs::write(path, text).with_context(|| format!("writing {}", path.display())),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn usage_error(msg: impl std::fmt::Display) -> ExitCode {
    eprintln!("error: {msg}");
    ExitCode::from(2)
}

fn run(cli: Cli) -> anyhow::Result<ExitCode> {
    let ok = |pass: bool| if pass { ExitCode::SUCCESS } else { ExitCode::from(1) };
    match cli.command {
        Command::Verify { identity, all, colors, order, format, deterministic, output } => {
            let reports = if all {
                run_all(colors, order)
            } else {
                let name = identity.expect("clap enforces --identity or --all");
                let spec = match IdentitySpec::new(name, colors, order) {
                    Ok(s) => s,
                    Err(e) => return Ok(usage_error(e)),
                };
                vec![run_verify(&spec)]
            };
            emit(&render::verify_reports(&reports, format, deterministic), output.as_ref())?;
            Ok(ok(reports.iter().all(|r| r.is_match())))
        }
        Command::Oracle { kind, colors, max_n, format, output } => {
            if colors == 0 {
                return Ok(usage_error("number of colors must be at least 1"));
            }
            let report = run_oracle(kind, colors, max_n);
            emit(&render::oracle_report(&report, format), output.as_ref())?;
            Ok(ok(report.passed()))
        }
        Command::Lemmas { max_parts, order, format, output } => {
            if max_parts == 0 || order < 2 {
                return Ok(usage_error("lemmas need --max-parts >= 1 and --order >= 2"));
            }
            let report = verify_over_lemmas(max_parts, order);
            emit(&render::lemma_report(&report, format), output.as_ref())?;
            Ok(ok(report.passed()))
        }
        Command::Decompose { partition, kind, format } => {
            let p = match ColoredPartition::parse(kind, &partition) {
                Ok(p) => p,
                Err(e) => return Ok(usage_error(e)),
            };
            let d = match durfee_decompose(&p) {
                Ok(d) => d,
                Err(e) => return Ok(usage_error(e)),
            };
            emit(&render::decomposition(&p, &d, format), None)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Series { identity, side, colors, order, format, output } => {
            let spec = match IdentitySpec::new(identity, colors, order) {
                Ok(s) => s,
                Err(e) => return Ok(usage_error(e)),
            };
            let sides = spec.build();
            let series = match side {
                Side::Lhs => &sides.lhs,
                Side::Rhs => &sides.rhs,
            };
            emit(&render::series_table(series, format), output.as_ref())?;
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
