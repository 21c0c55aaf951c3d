//! CSV ingestion of operation sets and sampled signals, and table/series
//! emission.
//!
//! Formats:
//! * operation sets: header `id,re,pe,tr,tp`, one operation per row
//!   (signed `re` accepted and normalized);
//! * signal files: header `t,value`, uniformly spaced `t` (bin starts) and
//!   nonnegative rate samples;
//! * reports: a `id,re,pe,t,r_intensity[,prof]` table rounded half-up to
//!   the configured precision, followed by a summary block, or the same
//!   content as JSON.
//!
//! Decimal commas sometimes seen in source tables are not accepted: all
//! artifact I/O uses decimal points. LF and CRLF are both fine.

use std::fmt::Write as _;
use std::fs;
use std::path::Path;

use serde::Serialize;

use crate::analysis::SetReport;
use crate::error::{Error, Result};
use crate::op_model::{SampledSignal, SignalOperation, SimpleOperation};

/// Relative jitter allowed in the spacing of a signal file's time column.
const SPACING_REL_TOL: f64 = 1e-9;

/// Output format of report emission.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum OutputFormat {
    #[default]
    Csv,
    Json,
}

impl std::str::FromStr for OutputFormat {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s.to_ascii_lowercase().as_str() {
            "csv" => Ok(Self::Csv),
            "json" => Ok(Self::Json),
            other => Err(format!("unknown format '{other}': expected csv or json")),
        }
    }
}

/// Run-wide configuration shared by the CLI commands.
#[derive(Debug, Clone, Copy)]
pub struct RunConfig {
    /// Quadrature step for numeric paths.
    pub step: f64,
    /// Default profit horizon when profit analysis is requested without an
    /// explicit horizon.
    pub horizon: f64,
    pub output_format: OutputFormat,
    /// Decimal places for table emission and comparison (half-up).
    pub rounding: u32,
    /// Integrate the mismatch with its sign (default) or as a magnitude.
    pub signed_dif: bool,
}

impl Default for RunConfig {
    fn default() -> Self {
        Self {
            step: 1e-3,
            horizon: 1150.0,
            output_format: OutputFormat::Csv,
            rounding: 2,
            signed_dif: true,
        }
    }
}

/// Rounds half-up (ties away from zero) at `places` decimals.
pub fn round_half_up(value: f64, places: u32) -> f64 {
    let scale = 10f64.powi(places as i32);
    (value * scale).round() / scale
}

/// Fixed-point rendering of [`round_half_up`].
pub fn format_rounded(value: f64, places: u32) -> String {
    format!("{:.*}", places as usize, round_half_up(value, places))
}

/// Loads a labeled operation set from a CSV file.
pub fn load_simple_ops(path: &Path) -> Result<Vec<(String, SimpleOperation)>> {
    parse_simple_ops(&fs::read_to_string(path)?)
}

/// Parses a `id,re,pe,tr,tp` table. Row order is preserved; ids are kept
/// verbatim for reporting.
pub fn parse_simple_ops(text: &str) -> Result<Vec<(String, SimpleOperation)>> {
    let mut lines = numbered_lines(text);
    let (header_no, header) = lines.next().ok_or(Error::Parse {
        line: 1,
        reason: "missing header 'id,re,pe,tr,tp'".into(),
    })?;
    if header != "id,re,pe,tr,tp" {
        return Err(Error::Parse {
            line: header_no,
            reason: format!("expected header 'id,re,pe,tr,tp', got '{header}'"),
        });
    }
    let mut ops = Vec::new();
    for (line_no, line) in lines {
        let cells: Vec<&str> = line.split(',').collect();
        if cells.len() != 5 {
            return Err(Error::Parse {
                line: line_no,
                reason: format!("expected 5 columns, got {}", cells.len()),
            });
        }
        let num = |cell: &str, name: &str| -> Result<f64> {
            cell.trim().parse::<f64>().map_err(|_| Error::Parse {
                line: line_no,
                reason: format!("column {name}: '{cell}' is not a number"),
            })
        };
        let re = num(cells[1], "re")?;
        let pe = num(cells[2], "pe")?;
        let tr = num(cells[3], "tr")?;
        let tp = num(cells[4], "tp")?;
        let op = SimpleOperation::new(re, pe, tr, tp).map_err(|e| Error::Parse {
            line: line_no,
            reason: e.to_string(),
        })?;
        ops.push((cells[0].trim().to_string(), op));
    }
    Ok(ops)
}

/// Loads one distributed operation from a pair of `t,value` signal files,
/// resampling both channels onto a common grid at the finer of the two
/// steps.
pub fn load_signal_op(path_re: &Path, path_pe: &Path) -> Result<SignalOperation> {
    load_signal_op_with_step(path_re, path_pe, None)
}

/// [`load_signal_op`] with an explicit target step overriding the inferred
/// one. A single-row file has no spacing of its own and adopts the resolved
/// step.
pub fn load_signal_op_with_step(
    path_re: &Path,
    path_pe: &Path,
    step_override: Option<f64>,
) -> Result<SignalOperation> {
    let re = parse_signal_file(&fs::read_to_string(path_re)?)?;
    let pe = parse_signal_file(&fs::read_to_string(path_pe)?)?;
    if let Some(step) = step_override {
        if step <= 0.0 || !step.is_finite() {
            return Err(Error::InvalidSignal(format!(
                "step override must be positive and finite, got {step}"
            )));
        }
    }
    let step = step_override
        .or_else(|| match (re.step, pe.step) {
            (Some(a), Some(b)) => Some(a.min(b)),
            (a, b) => a.or(b),
        })
        .ok_or_else(|| {
            Error::GridMismatch(
                "cannot infer sample spacing from single-row files: pass an explicit step".into(),
            )
        })?;
    let t0 = re.t0.min(pe.t0);
    let end = re.end(step).max(pe.end(step));
    let len = ((end - t0) / step).ceil() as usize;
    SignalOperation::new(
        SampledSignal::new(t0, step, re.resample(step, t0, len))?,
        SampledSignal::new(t0, step, pe.resample(step, t0, len))?,
    )
}

/// One parsed signal file: origin, inferred spacing (None for a single
/// row), and rate samples.
struct RawSignal {
    t0: f64,
    step: Option<f64>,
    values: Vec<f64>,
}

impl RawSignal {
    fn end(&self, fallback_step: f64) -> f64 {
        self.t0 + self.step.unwrap_or(fallback_step) * self.values.len() as f64
    }

    /// Rectangle redistribution onto the target grid: each source bin's
    /// value mass is split over the target bins it overlaps, conserving
    /// channel totals.
    fn resample(&self, step: f64, t0: f64, len: usize) -> Vec<f64> {
        let src_step = self.step.unwrap_or(step);
        let mut out = vec![0.0; len];
        for (i, &rate) in self.values.iter().enumerate() {
            if rate == 0.0 {
                continue;
            }
            let lo = self.t0 + src_step * i as f64;
            let hi = lo + src_step;
            let k_lo = (((lo - t0) / step).floor().max(0.0)) as usize;
            for (k, slot) in out.iter_mut().enumerate().skip(k_lo) {
                let bin_lo = t0 + step * k as f64;
                if bin_lo >= hi {
                    break;
                }
                let overlap = (hi.min(bin_lo + step) - lo.max(bin_lo)).max(0.0);
                *slot += rate * overlap / step;
            }
        }
        out
    }
}

fn parse_signal_file(text: &str) -> Result<RawSignal> {
    let mut lines = numbered_lines(text);
    let (header_no, header) = lines.next().ok_or(Error::Parse {
        line: 1,
        reason: "missing header 't,value'".into(),
    })?;
    if header != "t,value" {
        return Err(Error::Parse {
            line: header_no,
            reason: format!("expected header 't,value', got '{header}'"),
        });
    }
    let mut times = Vec::new();
    let mut values = Vec::new();
    for (line_no, line) in lines {
        let cells: Vec<&str> = line.split(',').collect();
        if cells.len() != 2 {
            return Err(Error::Parse {
                line: line_no,
                reason: format!("expected 2 columns, got {}", cells.len()),
            });
        }
        let num = |cell: &str| -> Result<f64> {
            cell.trim().parse::<f64>().map_err(|_| Error::Parse {
                line: line_no,
                reason: format!("'{cell}' is not a number"),
            })
        };
        let t = num(cells[0])?;
        let v = num(cells[1])?;
        if !v.is_finite() || v < 0.0 {
            return Err(Error::InvalidSignal(format!(
                "line {line_no}: rate {v} must be finite and nonnegative"
            )));
        }
        if let Some(&prev) = times.last() {
            if t <= prev {
                return Err(Error::GridMismatch(format!(
                    "line {line_no}: t = {t} does not increase past {prev}"
                )));
            }
        }
        times.push(t);
        values.push(v);
    }
    if times.is_empty() {
        return Err(Error::Parse {
            line: header_no + 1,
            reason: "signal file has no samples".into(),
        });
    }
    let step = if times.len() >= 2 {
        let step = times[1] - times[0];
        for (i, w) in times.windows(2).enumerate() {
            if ((w[1] - w[0]) - step).abs() > SPACING_REL_TOL * step {
                return Err(Error::GridMismatch(format!(
                    "nonuniform spacing at row {}: {} vs step {}",
                    i + 2,
                    w[1] - w[0],
                    step
                )));
            }
        }
        Some(step)
    } else {
        None
    };
    Ok(RawSignal {
        t0: times[0],
        step,
        values,
    })
}

/// Lines with 1-based numbers, CRLF-tolerant, blanks skipped.
fn numbered_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim_end_matches('\r').trim()))
        .filter(|(_, l)| !l.is_empty())
}

#[derive(Serialize)]
struct RowOut {
    id: String,
    re: f64,
    pe: f64,
    t: f64,
    r_intensity: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    prof: Option<f64>,
}

#[derive(Serialize)]
struct SummaryOut {
    #[serde(skip_serializing_if = "Option::is_none")]
    min_cost_id: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    min_r_id: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    max_prof_id: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    mirror_rank_stat: Option<f64>,
    min_cost_tied: bool,
    min_r_tied: bool,
    max_prof_tied: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    horizon: Option<f64>,
}

#[derive(Serialize)]
struct ReportOut {
    rows: Vec<RowOut>,
    summary: SummaryOut,
}

fn rounded_view(report: &SetReport, cfg: &RunConfig) -> ReportOut {
    let p = cfg.rounding;
    let rows = report
        .ids
        .iter()
        .zip(&report.rows)
        .map(|(id, m)| RowOut {
            id: id.clone(),
            re: round_half_up(m.re_total, p),
            pe: round_half_up(m.pe_total, p),
            t: round_half_up(m.op_time, p),
            r_intensity: round_half_up(m.resource_intensity, p),
            prof: m.horizon_profit.map(|v| round_half_up(v, p)),
        })
        .collect();
    let id_at = |i: Option<usize>| i.map(|i| report.ids[i].clone());
    ReportOut {
        rows,
        summary: SummaryOut {
            min_cost_id: id_at(report.argmin_cost),
            min_r_id: id_at(report.argmin_r),
            max_prof_id: id_at(report.argmax_profit),
            mirror_rank_stat: report.mirror_rank_stat.map(|v| round_half_up(v, p)),
            min_cost_tied: report.argmin_cost_tied,
            min_r_tied: report.argmin_r_tied,
            max_prof_tied: report.argmax_profit_tied,
            horizon: report.horizon,
        },
    }
}

/// Writes a set report to `sink` in the configured format: values rounded
/// half-up to `cfg.rounding` places, table first, then a summary block with
/// the extremum ids and the mirror rank statistic.
pub fn emit_report<W: std::io::Write>(
    report: &SetReport,
    cfg: &RunConfig,
    sink: &mut W,
) -> Result<()> {
    let out = rounded_view(report, cfg);
    match cfg.output_format {
        OutputFormat::Csv => {
            let text = render_csv(&out, cfg.rounding, report.horizon.is_some());
            sink.write_all(text.as_bytes())?;
        }
        OutputFormat::Json => {
            serde_json::to_writer_pretty(&mut *sink, &out)
                .map_err(|e| Error::Io(std::io::Error::other(e)))?;
            sink.write_all(b"\n")?;
        }
    }
    Ok(())
}

fn render_csv(out: &ReportOut, places: u32, with_profit: bool) -> String {
    let mut s = String::new();
    s.push_str("id,re,pe,t,r_intensity");
    if with_profit {
        s.push_str(",prof");
    }
    s.push('\n');
    for row in &out.rows {
        let _ = write!(
            s,
            "{},{:.p$},{:.p$},{:.p$},{:.p$}",
            row.id,
            row.re,
            row.pe,
            row.t,
            row.r_intensity,
            p = places as usize
        );
        if let Some(prof) = row.prof {
            let _ = write!(s, ",{:.p$}", prof, p = places as usize);
        }
        s.push('\n');
    }
    s.push('\n');
    s.push_str("# summary\n");
    let summary = &out.summary;
    if let Some(id) = &summary.min_cost_id {
        let _ = writeln!(s, "min_cost_id,{id}");
    }
    if let Some(id) = &summary.min_r_id {
        let _ = writeln!(s, "min_r_id,{id}");
    }
    if let Some(id) = &summary.max_prof_id {
        let _ = writeln!(s, "max_prof_id,{id}");
    }
    if let Some(rho) = summary.mirror_rank_stat {
        let _ = writeln!(s, "mirror_rank_stat,{:.p$}", rho, p = places as usize);
    }
    if summary.min_cost_tied {
        s.push_str("min_cost_tied,true\n");
    }
    if summary.min_r_tied {
        s.push_str("min_r_tied,true\n");
    }
    if summary.max_prof_tied {
        s.push_str("max_prof_tied,true\n");
    }
    s
}
