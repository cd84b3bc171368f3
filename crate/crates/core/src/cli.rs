//! Command surface of the `fqcss` binary.
//!
//! Every command is deterministic and returns its full output as a string;
//! the binary only handles printing and the exit code.

use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use crate::bounds::{optimality_factor, Branch};
use crate::correlation::{delta_max, Backend};
use crate::error::{Error, Result};
use crate::florentine::{
    best_florentine, check_tuscan, max_florentine_search, parse_rect, plan_florentine, SearchStatus,
};
use crate::seqgen::{build_ccc, build_qcss, SequenceSet};
use crate::tables::{
    even_asymptotic_table, even_near_optimal_table, factor_three_table, row_count_table,
    TableConfig, TableReport,
};
use crate::verify::verify_family;

/// Default order cap for exhaustive exact-arithmetic scans.
pub const EXACT_CAP: usize = 24;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, ValueEnum)]
pub enum OutputFormat {
    Json,
    Csv,
    #[default]
    Text,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, ValueEnum)]
pub enum Mode {
    #[default]
    Float,
    Exact,
}

impl From<Mode> for Backend {
    fn from(m: Mode) -> Self {
        match m {
            Mode::Float => Backend::Float,
            Mode::Exact => Backend::Exact,
        }
    }
}

/// Florentine rectangles, complete complementary codes and
/// quasi-complementary sequence sets over Z_N.
#[derive(Debug, Parser)]
#[command(name = "fqcss", version)]
pub struct RunConfig {
    #[command(subcommand)]
    pub command: Command,

    /// Correlation backend.
    #[arg(long, global = true, value_enum, default_value_t = Mode::Float)]
    pub mode: Mode,

    #[arg(long, global = true, value_enum, default_value_t = OutputFormat::Text)]
    pub format: OutputFormat,

    /// Write output to this file instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Construct, check or search for Florentine rectangles.
    Florentine {
        #[command(subcommand)]
        action: FlorentineAction,
    },
    /// Generate or verify complete complementary codes.
    Ccc {
        #[command(subcommand)]
        action: CccAction,
    },
    /// Generate or analyze the merged collection of all codes.
    Qcss {
        #[command(subcommand)]
        action: QcssAction,
    },
    /// Reproduce a published parameter table.
    Tables {
        #[command(subcommand)]
        which: TableId,
    },
}

#[derive(Debug, Subcommand)]
pub enum FlorentineAction {
    /// Emit the largest systematic rectangle of order n.
    Generate {
        #[arg(long)]
        n: usize,
    },
    /// Check a rectangle file (JSON or whitespace grid).
    Check {
        #[arg(long)]
        input: PathBuf,
        /// Largest displacement to check; defaults to n-1.
        #[arg(long)]
        k: Option<usize>,
    },
    /// Exhaustive search for small orders.
    Search {
        #[arg(long)]
        n: usize,
        /// Stop once this many rows are found (default n).
        #[arg(long)]
        rows: Option<usize>,
        /// Maximum number of branch nodes.
        #[arg(long)]
        budget: Option<u64>,
    },
}

#[derive(Debug, Subcommand)]
pub enum CccAction {
    /// Emit the code generated by permutation k of the order-n family.
    Generate {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
    },
    /// Audit every set correlation of all codes of order n.
    Verify {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = EXACT_CAP)]
        exact_cap: usize,
    },
}

#[derive(Debug, Subcommand)]
pub enum QcssAction {
    /// Emit the full collection for order n.
    Generate {
        #[arg(long)]
        n: usize,
    },
    /// Compute delta_max and the optimality factor.
    Analyze {
        #[arg(long)]
        n: usize,
        /// Refuse exact scans above this order.
        #[arg(long, default_value_t = EXACT_CAP)]
        exact_cap: usize,
        /// Orders above this use delta_max = N instead of a scan.
        #[arg(long, default_value_t = 32)]
        scan_cap: usize,
    },
}

#[derive(Debug, Clone, Copy, Subcommand)]
pub enum TableId {
    /// Row counts for N <= 32.
    Iii,
    /// Asymptotically optimal collections, even N.
    Iv {
        #[arg(long, default_value_t = 24)]
        scan_cap: usize,
    },
    /// Near-optimal collections with four generators.
    V {
        #[arg(long, default_value_t = 24)]
        scan_cap: usize,
    },
    /// Smallest prime factor 3, beside the earlier construction.
    Vi {
        #[arg(long, default_value_t = 24)]
        scan_cap: usize,
    },
}

/// Output of one command; `success` maps to the exit code.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub output: String,
    pub success: bool,
}

impl Outcome {
    fn ok(output: String) -> Self {
        Self {
            output,
            success: true,
        }
    }
}

pub fn run(cfg: &RunConfig) -> Result<Outcome> {
    match &cfg.command {
        Command::Florentine { action } => florentine(cfg, action),
        Command::Ccc { action } => ccc(cfg, action),
        Command::Qcss { action } => qcss(cfg, action),
        Command::Tables { which } => tables(cfg, *which),
    }
}

fn need_order(n: usize) -> Result<()> {
    if n < 2 {
        return Err(Error::param(format!("order must be at least 2, got {n}")));
    }
    Ok(())
}

fn csv_rows(rows: impl IntoIterator<Item = Vec<String>>) -> Result<String> {
    let mut w = csv::WriterBuilder::new()
        .flexible(true)
        .from_writer(Vec::new());
    for r in rows {
        w.write_record(&r)?;
    }
    Ok(String::from_utf8(w.into_inner().map_err(|e| e.into_error())?).expect("utf8 csv"))
}

fn grid_csv(rows: &[Vec<usize>]) -> Result<String> {
    csv_rows(
        rows.iter()
            .map(|r| r.iter().map(ToString::to_string).collect()),
    )
}

fn florentine(cfg: &RunConfig, action: &FlorentineAction) -> Result<Outcome> {
    match *action {
        FlorentineAction::Generate { n } => {
            need_order(n)?;
            let (rect, family) = best_florentine(n)?;
            let plan = plan_florentine(n)?;
            let output = match cfg.format {
                OutputFormat::Json => rect.to_json() + "\n",
                OutputFormat::Csv => grid_csv(rect.rows())?,
                OutputFormat::Text => format!(
                    "# n={n} F={} construction={} source_modulus={} rule={}\n{}",
                    family.f_value(),
                    rect.construction(),
                    rect.source_modulus(),
                    serde_json::to_value(plan.rule)?
                        .as_str()
                        .unwrap_or_default(),
                    rect.to_text()
                ),
            };
            Ok(Outcome::ok(output))
        }
        FlorentineAction::Check { ref input, k } => {
            let text = std::fs::read_to_string(input)?;
            let rect = parse_rect(&text)?;
            let k = k.unwrap_or(rect.n().saturating_sub(1));
            let result = check_tuscan(&rect, k);
            let witness = result.as_ref().err().map(ToString::to_string);
            let pass = result.is_ok();
            let output = match cfg.format {
                OutputFormat::Json => {
                    serde_json::to_string_pretty(&json!({
                        "pass": pass,
                        "n": rect.n(),
                        "rows": rect.row_count(),
                        "k": k,
                        "witness": witness,
                    }))? + "\n"
                }
                OutputFormat::Csv => csv_rows([
                    vec![
                        "pass".into(),
                        "n".into(),
                        "rows".into(),
                        "k".into(),
                        "witness".into(),
                    ],
                    vec![
                        pass.to_string(),
                        rect.n().to_string(),
                        rect.row_count().to_string(),
                        k.to_string(),
                        witness.clone().unwrap_or_default(),
                    ],
                ])?,
                OutputFormat::Text => match &witness {
                    None => format!(
                        "PASS: {}x{} rectangle is Tuscan-{k}\n",
                        rect.row_count(),
                        rect.n()
                    ),
                    Some(w) => format!(
                        "FAIL: {}x{} rectangle is not Tuscan-{k}: {w}\n",
                        rect.row_count(),
                        rect.n()
                    ),
                },
            };
            Ok(Outcome {
                output,
                success: pass,
            })
        }
        FlorentineAction::Search { n, rows, budget } => {
            let found = max_florentine_search(n, rows.unwrap_or(n), budget)?;
            let status = match found.status {
                SearchStatus::ProvenMaximum => "proven_maximum",
                SearchStatus::ReachedRowLimit => "reached_row_limit",
                SearchStatus::BudgetExhausted => "budget_exhausted",
            };
            let output = match cfg.format {
                OutputFormat::Json => {
                    serde_json::to_string_pretty(&json!({
                        "n": n,
                        "rows": found.rows,
                        "status": status,
                        "nodes": found.nodes,
                        "rectangle": found.rect,
                    }))? + "\n"
                }
                OutputFormat::Csv => grid_csv(found.rect.rows())?,
                OutputFormat::Text => format!(
                    "# n={n} rows={} status={status} nodes={}\n{}",
                    found.rows,
                    found.nodes,
                    found.rect.to_text()
                ),
            };
            Ok(Outcome::ok(output))
        }
    }
}

fn sets_output(
    format: OutputFormat,
    sets: &[SequenceSet],
    header: serde_json::Value,
) -> Result<String> {
    Ok(match format {
        OutputFormat::Json => {
            let mut value = header;
            value["sets"] = serde_json::to_value(sets)?;
            serde_json::to_string(&value)? + "\n"
        }
        OutputFormat::Csv => {
            let mut records = vec![vec!["k".into(), "m".into(), "s".into(), "exponents".into()]];
            for set in sets {
                for (s, row) in set.exponents.iter().enumerate() {
                    let seq: Vec<String> = row.iter().map(ToString::to_string).collect();
                    records.push(vec![
                        set.k.to_string(),
                        set.m.to_string(),
                        s.to_string(),
                        seq.join(" "),
                    ]);
                }
            }
            csv_rows(records)?
        }
        OutputFormat::Text => {
            let mut out = String::new();
            for set in sets {
                out.push_str(&format!("C^({},{})\n{}\n", set.k, set.m, set.render()));
            }
            out
        }
    })
}

fn ccc(cfg: &RunConfig, action: &CccAction) -> Result<Outcome> {
    match *action {
        CccAction::Generate { n, k } => {
            need_order(n)?;
            let (_, family) = best_florentine(n)?;
            let code = build_ccc(&family, k)?;
            let header = json!({ "n": n, "k": k, "F": family.f_value() });
            Ok(Outcome::ok(sets_output(cfg.format, &code.sets, header)?))
        }
        CccAction::Verify { n, exact_cap } => {
            need_order(n)?;
            if n > exact_cap {
                return Err(Error::param(format!(
                    "exact verification is limited to n <= {exact_cap} (got {n})"
                )));
            }
            let (_, family) = best_florentine(n)?;
            let v = verify_family(&family);
            let output = match cfg.format {
                OutputFormat::Json => serde_json::to_string_pretty(&v)? + "\n",
                OutputFormat::Csv => csv_rows([
                    vec![
                        "n".into(),
                        "F".into(),
                        "complete_complementary".into(),
                        "inter_bounded".into(),
                        "backends_agree".into(),
                        "delta_max".into(),
                    ],
                    vec![
                        n.to_string(),
                        v.f_value.to_string(),
                        v.complete_complementary().to_string(),
                        v.inter_bounded().to_string(),
                        v.backends_agree().to_string(),
                        v.delta_max.to_string(),
                    ],
                ])?,
                OutputFormat::Text => format!(
                    "n={n} F={f}\n\
                     within-code correlations: {wc} checked, {wp} peaks of N^2, {wf} failures\n\
                     cross-code correlations: {ic} checked, {iz} zero, {in_} of magnitude N, {ifl} failures\n\
                     backend agreement: {bd} disagreements, max magnitude error {me:.3e}\n\
                     delta_max = {dm}\n{verdict}\n",
                    f = v.f_value,
                    wc = v.within_checked,
                    wp = v.within_peaks,
                    wf = v.within_failure_count,
                    ic = v.inter_checked,
                    iz = v.inter_zero,
                    in_ = v.inter_at_n,
                    ifl = v.inter_failure_count,
                    bd = v.backend_disagreement_count,
                    me = v.max_magnitude_error,
                    dm = v.delta_max,
                    verdict = if v.passed() { "PASS" } else { "FAIL" },
                ),
            };
            Ok(Outcome {
                output,
                success: v.passed(),
            })
        }
    }
}

fn qcss(cfg: &RunConfig, action: &QcssAction) -> Result<Outcome> {
    match *action {
        QcssAction::Generate { n } => {
            need_order(n)?;
            let (_, family) = best_florentine(n)?;
            let q = build_qcss(&family);
            let (k, m, len) = q.params();
            let header = json!({ "n": n, "F": family.f_value(), "K": k, "M": m, "N": len });
            Ok(Outcome::ok(sets_output(cfg.format, &q.sets, header)?))
        }
        QcssAction::Analyze {
            n,
            exact_cap,
            scan_cap,
        } => {
            need_order(n)?;
            if cfg.mode == Mode::Exact && n > exact_cap {
                return Err(Error::param(format!(
                    "exact mode is limited to n <= {exact_cap} (got {n}); use --mode float"
                )));
            }
            let (_, family) = best_florentine(n)?;
            let f = family.f_value();
            let (delta, source, argmax) = if n <= scan_cap {
                let report = delta_max(&build_qcss(&family), cfg.mode.into());
                let source = match cfg.mode {
                    Mode::Float => "scan (float)",
                    Mode::Exact => "scan (exact)",
                };
                (report.delta_max, source, report.argmax)
            } else {
                (if f >= 2 { n as f64 } else { 0.0 }, "analytic", None)
            };
            let bounds = optimality_factor(n * f, n, n, delta)?;
            let line = format!(
                "Z_{n}, {}, {}, {}, {:.4}",
                bounds.k, bounds.m, bounds.n, bounds.rho
            );
            let branch = match bounds.branch {
                Branch::Liu => "liu",
                Branch::Welch => "welch",
            };
            let output = match cfg.format {
                OutputFormat::Json => {
                    serde_json::to_string_pretty(&json!({
                        "bounds": bounds,
                        "F": f,
                        "delta_source": source,
                        "argmax": argmax,
                    }))? + "\n"
                }
                OutputFormat::Csv => csv_rows([
                    vec![
                        "Alphabet".into(),
                        "K".into(),
                        "M".into(),
                        "N".into(),
                        "delta_max".into(),
                        "rho".into(),
                        "branch".into(),
                    ],
                    vec![
                        format!("Z_{n}"),
                        bounds.k.to_string(),
                        bounds.m.to_string(),
                        bounds.n.to_string(),
                        delta.to_string(),
                        format!("{:.4}", bounds.rho),
                        branch.into(),
                    ],
                ])?,
                OutputFormat::Text => format!(
                    "{line}\n# delta_max={delta} ({source}) branch={branch} class={}\n",
                    serde_json::to_value(bounds.classification)?
                        .as_str()
                        .unwrap_or_default()
                ),
            };
            Ok(Outcome::ok(output))
        }
    }
}

fn render_table(format: OutputFormat, t: &TableReport) -> Result<String> {
    Ok(match format {
        OutputFormat::Json => t.to_json() + "\n",
        OutputFormat::Csv => t.to_csv()?,
        OutputFormat::Text => {
            let mut out = t.to_text();
            let bad = t.mismatches();
            if !bad.is_empty() {
                let names: Vec<&str> = bad.iter().map(|r| r.alphabet.as_str()).collect();
                out.push_str(&format!("# mismatched rows: {}\n", names.join(", ")));
            }
            out
        }
    })
}

fn tables(cfg: &RunConfig, which: TableId) -> Result<Outcome> {
    let table_cfg = |scan_cap| TableConfig {
        scan_cap,
        backend: cfg.mode.into(),
    };
    let report = match which {
        TableId::Iii => {
            let t = row_count_table()?;
            let output = match cfg.format {
                OutputFormat::Json => t.to_json() + "\n",
                OutputFormat::Csv => t.to_csv()?,
                OutputFormat::Text => t.to_text(),
            };
            return Ok(Outcome {
                output,
                success: t.passed(),
            });
        }
        TableId::Iv { scan_cap } => even_asymptotic_table(&table_cfg(scan_cap))?,
        TableId::V { scan_cap } => even_near_optimal_table(&table_cfg(scan_cap))?,
        TableId::Vi { scan_cap } => factor_three_table(&table_cfg(scan_cap))?,
    };
    Ok(Outcome {
        output: render_table(cfg.format, &report)?,
        success: report.passed(),
    })
}
