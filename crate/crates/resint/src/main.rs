use std::fs::File;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use resint::analysis::{evaluate_set, evaluate_set_labeled, generate_sweep, SetReport};
use resint::calculus::{
    actual_completion_numeric, resource_intensity_numeric_with, DifMode, Tolerances,
};
use resint::io::{emit_report, load_signal_op_with_step, load_simple_ops, OutputFormat, RunConfig};
use resint::{
    actual_completion_simple, bd_height, cycle_profit, resource_intensity_simple, thread_series,
    Error, SimpleOperation, SweepSpec, VariedField,
};

/// Resource-intensity analytics for target operations.
#[derive(Parser)]
#[command(name = "resint", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Vary {
    Time,
    Re,
    Pe,
}

impl From<Vary> for VariedField {
    fn from(v: Vary) -> Self {
        match v {
            Vary::Time => VariedField::OpTime,
            Vary::Re => VariedField::ReValue,
            Vary::Pe => VariedField::PeValue,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Analytic and numeric metrics of a single operation, as JSON.
    Analyze {
        /// Input value (signed readings accepted).
        #[arg(long, allow_negative_numbers = true)]
        re: f64,
        /// Output value.
        #[arg(long)]
        pe: f64,
        /// Input registration instant.
        #[arg(long, allow_negative_numbers = true)]
        tr: f64,
        /// Output registration instant.
        #[arg(long, allow_negative_numbers = true)]
        tp: f64,
        /// Quadrature step for the numeric cross-check.
        #[arg(long, default_value_t = 1e-3)]
        step: f64,
        /// Profit horizon (defaults to 1150 time units).
        #[arg(long)]
        horizon: Option<f64>,
    },
    /// Evaluate an operation set from a CSV file.
    Table {
        /// CSV file with header id,re,pe,tr,tp.
        #[arg(long)]
        input: PathBuf,
        /// Enable profit analysis over this horizon.
        #[arg(long)]
        horizon: Option<f64>,
        #[arg(long, default_value = "csv")]
        format: OutputFormat,
        /// Decimal places for emitted values (half-up).
        #[arg(long, default_value_t = 2)]
        rounding: u32,
    },
    /// Generate a parameter sweep and evaluate it.
    Sweep {
        /// Base operation as RE,PE or RE,PE,TR,TP.
        #[arg(long)]
        base: String,
        /// Which field the sweep varies.
        #[arg(long, value_enum)]
        vary: Vary,
        /// First value of the varied field.
        #[arg(long, allow_negative_numbers = true)]
        start: f64,
        /// Increment of the varied field.
        #[arg(long, allow_negative_numbers = true)]
        step: f64,
        /// Number of operations to generate.
        #[arg(long)]
        count: usize,
        /// Enable profit analysis over this horizon.
        #[arg(long)]
        horizon: Option<f64>,
        #[arg(long, default_value = "csv")]
        format: OutputFormat,
        #[arg(long, default_value_t = 2)]
        rounding: u32,
    },
    /// Export the thread curves of one operation as a plot-ready CSV.
    Trace {
        #[arg(long, allow_negative_numbers = true)]
        re: f64,
        #[arg(long)]
        pe: f64,
        #[arg(long, allow_negative_numbers = true)]
        tr: f64,
        #[arg(long, allow_negative_numbers = true)]
        tp: f64,
        /// Grid step of the exported series.
        #[arg(long)]
        step: f64,
        /// Output CSV path.
        #[arg(long)]
        out: PathBuf,
    },
    /// Numeric metrics of a distributed operation given two signal files.
    Signals {
        /// CSV file (t,value) with the resource consumption channel.
        #[arg(long = "re-file")]
        re_file: PathBuf,
        /// CSV file (t,value) with the resource return channel.
        #[arg(long = "pe-file")]
        pe_file: PathBuf,
        /// Resample both channels to this step instead of the finer of the
        /// two inferred ones.
        #[arg(long)]
        step: Option<f64>,
        /// Integrate the mismatch as a magnitude instead of signed.
        #[arg(long)]
        magnitude_dif: bool,
    },
}

#[derive(Serialize)]
struct AnalyzeOutput {
    re: f64,
    pe: f64,
    t_r: f64,
    t_p: f64,
    op_time: f64,
    step: f64,
    t_a_analytic: f64,
    t_a_numeric: f64,
    t_a_abs_diff: f64,
    bd_height: f64,
    r_analytic: f64,
    r_numeric: f64,
    r_rel_diff: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    profit_rate: Option<f64>,
    horizon: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    horizon_profit: Option<f64>,
}

#[derive(Serialize)]
struct SignalsOutput {
    re_total: f64,
    pe_total: f64,
    step: f64,
    t_f: f64,
    t_a: f64,
    r_numeric: f64,
    dif_mode: &'static str,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(exit_code(&err))
        }
    }
}

/// 2 = parse/domain error, 3 = non-effective operation, 4 = horizon
/// exhausted.
fn exit_code(err: &Error) -> u8 {
    match err {
        Error::NotEffective(_) => 3,
        Error::HorizonExhausted(_) => 4,
        _ => 2,
    }
}

fn run(command: Command) -> Result<(), Error> {
    match command {
        Command::Analyze {
            re,
            pe,
            tr,
            tp,
            step,
            horizon,
        } => analyze(re, pe, tr, tp, step, horizon),
        Command::Table {
            input,
            horizon,
            format,
            rounding,
        } => {
            let cfg = RunConfig {
                output_format: format,
                rounding,
                ..RunConfig::default()
            };
            let ops = load_simple_ops(&input)?;
            let report = if ops.is_empty() {
                eprintln!("warning: {} contains no operations", input.display());
                SetReport::empty(horizon)
            } else {
                evaluate_set_labeled(&ops, horizon)?
            };
            emit_report(&report, &cfg, &mut std::io::stdout().lock())
        }
        Command::Sweep {
            base,
            vary,
            start,
            step,
            count,
            horizon,
            format,
            rounding,
        } => {
            let cfg = RunConfig {
                output_format: format,
                rounding,
                ..RunConfig::default()
            };
            let spec = SweepSpec {
                base: parse_base(&base)?,
                varied_field: vary.into(),
                start,
                step,
                count,
                horizon,
            };
            let ops = generate_sweep(&spec)?;
            let report = evaluate_set(&ops, spec.horizon)?;
            emit_report(&report, &cfg, &mut std::io::stdout().lock())
        }
        Command::Trace {
            re,
            pe,
            tr,
            tp,
            step,
            out,
        } => {
            let op = SimpleOperation::new(re, pe, tr, tp)?;
            let profile = thread_series(&op, step)?;
            let mut file = File::create(&out)?;
            writeln!(file, "v,ire,ipe,vre,vpe,dif,r")?;
            for i in 0..profile.len() {
                writeln!(
                    file,
                    "{},{},{},{},{},{},{}",
                    profile.grid[i],
                    profile.ire[i],
                    profile.ipe[i],
                    profile.vre[i],
                    profile.vpe[i],
                    profile.dif[i],
                    profile.r[i],
                )?;
            }
            Ok(())
        }
        Command::Signals {
            re_file,
            pe_file,
            step,
            magnitude_dif,
        } => {
            let cfg = RunConfig {
                signed_dif: !magnitude_dif,
                ..RunConfig::default()
            };
            let op = load_signal_op_with_step(&re_file, &pe_file, step)?;
            let tol = Tolerances::default();
            let mode = if cfg.signed_dif {
                DifMode::Signed
            } else {
                DifMode::Magnitude
            };
            let t_a = actual_completion_numeric(&op, &tol)?;
            let out = SignalsOutput {
                re_total: op.re_total(),
                pe_total: op.pe_total(),
                step: op.step(),
                t_f: op.physical_completion(),
                t_a,
                r_numeric: resource_intensity_numeric_with(&op, &tol, mode)?,
                dif_mode: if cfg.signed_dif {
                    "signed"
                } else {
                    "magnitude"
                },
            };
            println!("{}", serde_json::to_string_pretty(&out).expect("serialize"));
            Ok(())
        }
    }
}

fn analyze(
    re: f64,
    pe: f64,
    tr: f64,
    tp: f64,
    step: f64,
    horizon: Option<f64>,
) -> Result<(), Error> {
    let cfg = RunConfig::default();
    let op = SimpleOperation::new(re, pe, tr, tp)?;
    let t_a_analytic = actual_completion_simple(&op)?;
    let r_analytic = resource_intensity_simple(&op)?;
    let signals = op.to_signals(step)?;
    let tol = Tolerances::default();
    let t_a_numeric = actual_completion_numeric(&signals, &tol)?;
    let r_numeric = resource_intensity_numeric_with(&signals, &tol, DifMode::Signed)?;
    let horizon = horizon.unwrap_or(cfg.horizon);
    let t = op.op_time();
    let out = AnalyzeOutput {
        re: op.re_value(),
        pe: op.pe_value(),
        t_r: op.t_r(),
        t_p: op.t_p(),
        op_time: t,
        step,
        t_a_analytic,
        t_a_numeric,
        t_a_abs_diff: (t_a_numeric - t_a_analytic).abs(),
        bd_height: bd_height(&op)?,
        r_analytic,
        r_numeric,
        r_rel_diff: (r_numeric - r_analytic).abs() / r_analytic.max(f64::MIN_POSITIVE),
        profit_rate: (t > 0.0).then(|| (op.pe_value() - op.re_value()) / t),
        horizon,
        horizon_profit: (t > 0.0).then(|| cycle_profit(&op, horizon)).transpose()?,
    };
    println!("{}", serde_json::to_string_pretty(&out).expect("serialize"));
    Ok(())
}

/// Parses `RE,PE` or `RE,PE,TR,TP` (times default to 0). For time sweeps
/// the base RE/PE are what matters; for re/pe sweeps the base supplies the
/// fixed times and the swept field is overwritten.
fn parse_base(s: &str) -> Result<SimpleOperation, Error> {
    let cells: Vec<&str> = s.split(',').collect();
    if cells.len() != 2 && cells.len() != 4 {
        return Err(Error::InvalidOperation(format!(
            "--base expects RE,PE or RE,PE,TR,TP, got '{s}'"
        )));
    }
    let mut nums = Vec::with_capacity(4);
    for cell in &cells {
        nums.push(cell.trim().parse::<f64>().map_err(|_| {
            Error::InvalidOperation(format!("--base component '{cell}' is not a number"))
        })?);
    }
    let (tr, tp) = if nums.len() == 4 {
        (nums[2], nums[3])
    } else {
        (0.0, 0.0)
    };
    SimpleOperation::new(nums[0], nums[1], tr, tp)
}
