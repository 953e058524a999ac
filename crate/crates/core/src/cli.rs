//! `ifn-rank` command line: `eval`, `rank`, `dist`, `tables` and `check`.
//!
//! Everything writes to a caller-supplied sink so the commands can be driven
//! from tests; `main.rs` only parses arguments and maps errors to exit codes
//! (1 for bad input, 2 for numeric failures).

use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;
use thiserror::Error;

use crate::dataset::{self, Entry};
use crate::indices::{components, Lambda};
use crate::metric::{trifn_distance, PNorm};
use crate::ranking::{rank, RankConfig, RankError, DEFAULT_TIE_EPSILON};
use crate::{report, sweep};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Tsv,
    Json,
}

#[derive(Debug, Parser)]
#[command(name = "ifn-rank", version, about = "Rank trapezoidal intuitionistic fuzzy numbers by L_p distance")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    /// Exponent of the L_p norm (> 1).
    #[arg(long = "p", global = true, default_value_t = 2.0)]
    pub p: f64,
    /// Preference weight in [0, 1].
    #[arg(long, global = true, default_value_t = 0.5)]
    pub lambda: f64,
    /// Scores closer than this are reported as ties.
    #[arg(long = "tie-eps", global = true, default_value_t = DEFAULT_TIE_EPSILON)]
    pub tie_eps: f64,
    #[arg(long, global = true, value_enum, default_value_t = Format::Tsv)]
    pub format: Format,
    /// Decimal places in tsv output.
    #[arg(long, global = true, default_value_t = 4)]
    pub precision: usize,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Values, ambiguities and indices of every record.
    Eval { file: PathBuf },
    /// Rank the records by signed distance to the origin.
    Rank { file: PathBuf },
    /// Pairwise distance matrix.
    Dist { file: PathBuf },
    /// Regenerate the published tables with a discrepancy report.
    Tables,
    /// Closed forms vs numerical quadrature on random inputs.
    Check {
        #[arg(long, default_value_t = 1000)]
        samples: usize,
        #[arg(long, default_value_t = 42)]
        seed: u64,
    },
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Input(String),
    #[error("{0}")]
    Numeric(String),
    #[error("write failed: {0}")]
    Io(#[from] std::io::Error),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Input(_) => 1,
            CliError::Numeric(_) => 2,
            CliError::Io(_) => 1,
        }
    }
}

/// Validated numeric settings shared by all subcommands.
#[derive(Debug, Clone, Copy)]
pub struct RunConfig {
    pub rank: RankConfig,
    pub format: Format,
    pub precision: usize,
}

impl RunConfig {
    pub fn from_cli(cli: &Cli) -> Result<Self, CliError> {
        let p = PNorm::new(cli.p).map_err(|e| CliError::Input(e.to_string()))?;
        let lambda = Lambda::new(cli.lambda).map_err(|e| CliError::Input(e.to_string()))?;
        if !(cli.tie_eps >= 0.0) {
            return Err(CliError::Input(format!("--tie-eps {} must be non-negative", cli.tie_eps)));
        }
        Ok(RunConfig {
            rank: RankConfig {
                p,
                lambda,
                tie_epsilon: cli.tie_eps,
            },
            format: cli.format,
            precision: cli.precision,
        })
    }

    fn json(&self) -> serde_json::Value {
        json!({
            "p": self.rank.p.get(),
            "lambda": self.rank.lambda.get(),
            "tie_epsilon": self.rank.tie_epsilon,
            "precision": self.precision,
        })
    }

    fn round(&self, x: f64) -> String {
        format!("{x:.*}", self.precision)
    }
}

fn load(path: &PathBuf) -> Result<Vec<Entry>, CliError> {
    let content = std::fs::read_to_string(path)
        .map_err(|e| CliError::Input(format!("{}: {e}", path.display())))?;
    dataset::parse(&content).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))
}

fn ensure_finite<'a>(id: &str, values: impl IntoIterator<Item = &'a f64>) -> Result<(), CliError> {
    match values.into_iter().find(|x| !x.is_finite()) {
        Some(x) => Err(CliError::Numeric(format!("{id}: result {x} is not finite (input too large?)"))),
        None => Ok(()),
    }
}

fn write_json(out: &mut dyn Write, value: &serde_json::Value) -> Result<(), CliError> {
    serde_json::to_writer_pretty(&mut *out, value).map_err(|e| CliError::Io(e.into()))?;
    writeln!(out)?;
    Ok(())
}

pub fn execute(cli: &Cli, out: &mut dyn Write) -> Result<(), CliError> {
    let config = RunConfig::from_cli(cli)?;
    match &cli.command {
        Command::Eval { file } => eval(&load(file)?, &config, out),
        Command::Rank { file } => rank_cmd(&load(file)?, &config, out),
        Command::Dist { file } => dist(&load(file)?, &config, out),
        Command::Tables => tables(&config, out),
        Command::Check { samples, seed } => check(*samples, *seed, &config, out),
    }
}

pub fn eval(entries: &[Entry], config: &RunConfig, out: &mut dyn Write) -> Result<(), CliError> {
    let rows: Vec<(&str, [f64; 6])> = entries
        .iter()
        .map(|e| {
            let c = components(&e.trifn);
            let idx = c.blend(config.rank.lambda);
            (
                e.record.id.as_str(),
                [c.v_mu, c.v_nu, c.a_mu, c.a_nu, idx.value, idx.ambiguity],
            )
        })
        .collect();
    for (id, values) in &rows {
        ensure_finite(id, values)?;
    }
    match config.format {
        Format::Tsv => {
            writeln!(out, "id\tV_mu\tV_nu\tA_mu\tA_nu\tV\tA")?;
            for (id, values) in &rows {
                let cells: Vec<String> = values.iter().map(|&x| config.round(x)).collect();
                writeln!(out, "{id}\t{}", cells.join("\t"))?;
            }
            Ok(())
        }
        Format::Json => {
            let rows: Vec<_> = rows
                .iter()
                .map(|(id, v)| {
                    json!({"id": id, "v_mu": v[0], "v_nu": v[1], "a_mu": v[2], "a_nu": v[3], "value": v[4], "ambiguity": v[5]})
                })
                .collect();
            write_json(out, &json!({"config": config.json(), "rows": rows}))
        }
    }
}

pub fn rank_cmd(entries: &[Entry], config: &RunConfig, out: &mut dyn Write) -> Result<(), CliError> {
    let items: Vec<(String, crate::Trifn)> = entries.iter().map(|e| (e.record.id.clone(), e.trifn)).collect();
    let outcome = rank(&items, config.rank).map_err(|e| match e {
        RankError::NonFinite { index, .. } => CliError::Numeric(format!("{}: {e}", items[index].0)),
        other => CliError::Input(other.to_string()),
    })?;
    let order = outcome.render_descending();
    match config.format {
        Format::Tsv => {
            writeln!(out, "rank\tid\tV\tA\trho")?;
            for (group_no, group) in outcome.tie_groups.iter().enumerate() {
                for entry in &outcome.entries[group.clone()] {
                    writeln!(
                        out,
                        "{}\t{}\t{}\t{}\t{}",
                        group_no + 1,
                        entry.id,
                        config.round(entry.value),
                        config.round(entry.ambiguity),
                        config.round(entry.rho)
                    )?;
                }
            }
            writeln!(out, "order\t{order}")?;
            Ok(())
        }
        Format::Json => {
            let groups: Vec<Vec<&str>> = outcome
                .tie_groups
                .iter()
                .map(|g| outcome.entries[g.clone()].iter().map(|e| e.id.as_str()).collect())
                .collect();
            write_json(
                out,
                &json!({
                    "config": config.json(),
                    "entries": outcome.entries,
                    "tie_groups": groups,
                    "order": order,
                }),
            )
        }
    }
}

pub fn dist(entries: &[Entry], config: &RunConfig, out: &mut dyn Write) -> Result<(), CliError> {
    let matrix: Vec<Vec<f64>> = entries
        .iter()
        .map(|x| {
            entries
                .iter()
                .map(|y| trifn_distance(config.rank.p, &x.trifn, &y.trifn, config.rank.lambda))
                .collect()
        })
        .collect();
    let ids: Vec<&str> = entries.iter().map(|e| e.record.id.as_str()).collect();
    for (id, row) in ids.iter().zip(&matrix) {
        ensure_finite(id, row)?;
    }
    match config.format {
        Format::Tsv => {
            writeln!(out, "\t{}", ids.join("\t"))?;
            for (id, row) in ids.iter().zip(&matrix) {
                let cells: Vec<String> = row.iter().map(|&d| config.round(d)).collect();
                writeln!(out, "{id}\t{}", cells.join("\t"))?;
            }
            Ok(())
        }
        Format::Json => write_json(out, &json!({"config": config.json(), "ids": ids, "matrix": matrix})),
    }
}

pub fn tables(config: &RunConfig, out: &mut dyn Write) -> Result<(), CliError> {
    let report = report::tables();
    match config.format {
        Format::Tsv => {
            out.write_all(report::render_text(&report, config.precision).as_bytes())?;
            Ok(())
        }
        Format::Json => {
            let (cells, orders) = report.discrepancies();
            write_json(
                out,
                &json!({
                    "report": report,
                    "discrepancies": {"cells": cells, "orders": orders},
                }),
            )
        }
    }
}

pub fn check(samples: usize, seed: u64, config: &RunConfig, out: &mut dyn Write) -> Result<(), CliError> {
    let report = sweep::run(samples, seed, config.rank.lambda).map_err(|e| CliError::Numeric(e.to_string()))?;
    match config.format {
        Format::Tsv => {
            writeln!(out, "quantity\tmax_abs_diff\tsamples")?;
            for d in &report.deviations {
                writeln!(out, "{}\t{:.3e}\t{}", d.quantity, d.max_abs_diff, d.samples)?;
            }
            writeln!(
                out,
                "max\t{:.3e}\ttolerance {:.0e}\t{}",
                report.max_deviation(),
                report.tolerance,
                if report.passed() { "ok" } else { "FAIL" }
            )?;
        }
        Format::Json => write_json(out, &json!({"report": report, "passed": report.passed()}))?,
    }
    if report.passed() {
        Ok(())
    } else {
        Err(CliError::Numeric(format!(
            "closed forms and quadrature disagree by {:.3e} (> {:.0e})",
            report.max_deviation(),
            report.tolerance
        )))
    }
}
