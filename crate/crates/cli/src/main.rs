use std::fs;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Parser, Subcommand};

use krank_core::assembly::rank_table;
use krank_core::catalog::{catalog_rank_minus1, expand_example, NamedExample};
use krank_core::model::load_model;
use krank_core::render::{render_invariants, render_table, Format};
use krank_core::verify::run_verify;
use krank_core::{k_rank_function, GroupLiteral};

/// Ranks of the algebraic K-theory groups K_n(Z[G]).
#[derive(Debug, Parser)]
#[command(name = "krank", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print (k, m, r, c, q) and the K-rank pattern of a finite group.
    Invariants {
        /// trivial, cyclic:n, symmetric:n, dihedral:n or product:(a,b,...)
        #[arg(long)]
        group: GroupLiteral,
        /// rank K_-1(Z[G]), if known
        #[arg(long)]
        rank_minus1: Option<u64>,
        #[arg(long, default_value = "text")]
        format: Format,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Tabulate rank K_n over a degree range for a model file.
    RankTable {
        #[arg(long)]
        model: PathBuf,
        #[command(flatten)]
        table: TableArgs,
    },
    /// Tabulate a named example: free_group, free_product, psl2z, surface, fn_sn, finite.
    Example {
        name: String,
        /// example parameter as key=value, e.g. m=3 or factors=cyclic:2,cyclic:3
        #[arg(long = "param", value_parser = parse_param)]
        params: Vec<(String, String)>,
        #[command(flatten)]
        table: TableArgs,
    },
    /// Run the internal oracles and the published-table regressions.
    Verify {
        /// only run checks whose name contains this string
        #[arg(long)]
        filter: Option<String>,
    },
}

#[derive(Debug, clap::Args)]
struct TableArgs {
    /// degree range lo..hi, inclusive
    #[arg(long, allow_hyphen_values = true, value_parser = parse_range, default_value = "-2..13")]
    range: (i64, i64),
    #[arg(long, default_value = "text")]
    format: Format,
    #[arg(long)]
    output: Option<PathBuf>,
}

fn parse_range(s: &str) -> Result<(i64, i64), String> {
    let (lo, hi) = s
        .split_once("..")
        .ok_or_else(|| format!("expected lo..hi, got {s:?}"))?;
    let lo: i64 = lo.trim().parse().map_err(|_| format!("bad lower bound in {s:?}"))?;
    let hi: i64 = hi.trim().parse().map_err(|_| format!("bad upper bound in {s:?}"))?;
    if lo > hi {
        return Err(format!("empty range {s:?}"));
    }
    Ok((lo, hi))
}

fn parse_param(s: &str) -> Result<(String, String), String> {
    s.split_once('=')
        .map(|(k, v)| (k.trim().to_string(), v.trim().to_string()))
        .ok_or_else(|| format!("expected key=value, got {s:?}"))
}

fn emit(text: &str, output: Option<&PathBuf>) -> Result<()> {
    match output {
        Some(path) => fs::write(path, text).with_context(|| format!("writing {}", path.display())),
        None => {
            let mut out = std::io::stdout().lock();
            out.write_all(text.as_bytes())?;
            out.flush()?;
            Ok(())
        }
    }
}

fn run(cli: Cli) -> Result<bool> {
    match cli.command {
        Command::Invariants {
            group,
            rank_minus1,
            format,
            output,
        } => {
            let g = group.build()?;
            let f = k_rank_function(&g, rank_minus1.or_else(|| catalog_rank_minus1(&group)));
            emit(&render_invariants(&f, format), output.as_ref())?;
            Ok(true)
        }
        Command::RankTable { model, table } => {
            let text = fs::read_to_string(&model).with_context(|| format!("reading {}", model.display()))?;
            let (spec, built) = load_model(&text).with_context(|| format!("loading {}", model.display()))?;
            let (lo, hi) = table.range;
            let t = rank_table(&built, spec.name(), lo, hi)?;
            emit(&render_table(&t, table.format), table.output.as_ref())?;
            Ok(true)
        }
        Command::Example { name, params, table } => {
            let example = NamedExample::from_params(&name, &params)?;
            let models = expand_example(&example)?;
            let (lo, hi) = table.range;
            let label = example.to_string();
            let tables = models
                .iter()
                .map(|m| rank_table(m, &label, lo, hi))
                .collect::<Result<Vec<_>, _>>()?;
            if let Some(other) = tables.iter().find(|t| t.ranks != tables[0].ranks) {
                bail!(
                    "equivalent models of {label} disagree: {:?} vs {:?}",
                    tables[0].ranks,
                    other.ranks
                );
            }
            emit(&render_table(&tables[0], table.format), table.output.as_ref())?;
            Ok(true)
        }
        Command::Verify { filter } => {
            let report = run_verify(filter.as_deref());
            if report.results.is_empty() {
                return Err(anyhow!("no check matches the filter"));
            }
            emit(&report.render(), None)?;
            Ok(report.passed())
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
