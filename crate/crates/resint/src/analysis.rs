//! Operation-set analytics: sweep generation, per-row metrics, extremum
//! identification, and the mirror-relation diagnostic between resource
//! intensity and accumulated profit.
//!
//! The headline use: evaluate a family of operations and observe that the
//! row with minimum resource intensity — not the row with minimum costs —
//! is the one generating the most value over a fixed horizon.

use serde::Serialize;

use crate::analytic;
use crate::calculus::{actual_completion_numeric, mismatch_thread, Tolerances};
use crate::error::{Error, Result};
use crate::op_model::{OperationMetrics, SimpleOperation, SweepSpec, ThreadProfile, VariedField};

/// Evaluation of an operation set: one metrics row per operation (input
/// order preserved) plus extremum indices and the rank diagnostic.
///
/// Extremum indices are `None` only for an empty report; ties resolve to the
/// lowest index and raise the matching `*_tied` flag. `argmax_profit` and
/// `mirror_rank_stat` are present only when a horizon was supplied, and the
/// rank statistic additionally needs at least two rows with distinct values
/// in both columns.
#[derive(Debug, Clone, Serialize)]
pub struct SetReport {
    pub ids: Vec<String>,
    pub rows: Vec<OperationMetrics>,
    pub horizon: Option<f64>,
    pub argmin_cost: Option<usize>,
    pub argmin_r: Option<usize>,
    pub argmax_profit: Option<usize>,
    pub argmin_cost_tied: bool,
    pub argmin_r_tied: bool,
    pub argmax_profit_tied: bool,
    /// Spearman rank correlation between the `R` and profit columns.
    pub mirror_rank_stat: Option<f64>,
}

impl SetReport {
    /// Report over zero operations (header-only emission).
    pub fn empty(horizon: Option<f64>) -> Self {
        Self {
            ids: Vec::new(),
            rows: Vec::new(),
            horizon,
            argmin_cost: None,
            argmin_r: None,
            argmax_profit: None,
            argmin_cost_tied: false,
            argmin_r_tied: false,
            argmax_profit_tied: false,
            mirror_rank_stat: None,
        }
    }

    pub fn len(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }
}

/// Expands a sweep into its operation set.
///
/// The varied field takes `start + i * step`; an operation-time sweep pins
/// `t_r = 0` and sets `t_p = T` (the closed forms only see `t_p - t_r`).
/// Every generated operation must be valid and effective (`pe > re`);
/// offenders are reported with their index.
pub fn generate_sweep(spec: &SweepSpec) -> Result<Vec<SimpleOperation>> {
    if spec.count == 0 {
        return Err(Error::InvalidOperation(
            "sweep count must be at least 1".into(),
        ));
    }
    if !spec.start.is_finite() || !spec.step.is_finite() {
        return Err(Error::InvalidOperation(format!(
            "sweep start/step must be finite, got {}/{}",
            spec.start, spec.step
        )));
    }
    let mut ops = Vec::with_capacity(spec.count);
    for i in 0..spec.count {
        let x = spec.start + i as f64 * spec.step;
        let op = match spec.varied_field {
            VariedField::ReValue => {
                SimpleOperation::new(x, spec.base.pe_value(), spec.base.t_r(), spec.base.t_p())
            }
            VariedField::PeValue => {
                SimpleOperation::new(spec.base.re_value(), x, spec.base.t_r(), spec.base.t_p())
            }
            VariedField::OpTime => {
                SimpleOperation::new(spec.base.re_value(), spec.base.pe_value(), 0.0, x)
            }
        }
        .map_err(|e| Error::SweepDomain {
            index: i,
            reason: e.to_string(),
        })?;
        if !op.is_effective() {
            return Err(Error::SweepDomain {
                index: i,
                reason: format!("pe = {} must exceed re = {}", op.pe_value(), op.re_value()),
            });
        }
        ops.push(op);
    }
    Ok(ops)
}

/// Closed-form metric record for one operation. With a horizon the profit
/// fields are filled (erroring on instant operations, whose cycle rate is
/// undefined); without one they stay `None`.
pub fn operation_metrics(op: &SimpleOperation, horizon: Option<f64>) -> Result<OperationMetrics> {
    let t = op.op_time();
    Ok(OperationMetrics {
        re_total: op.re_value(),
        pe_total: op.pe_value(),
        t_r: op.t_r(),
        t_p: op.t_p(),
        t_f: op.t_p(),
        t_a: analytic::actual_completion_simple(op)?,
        op_time: t,
        resource_intensity: analytic::resource_intensity_simple(op)?,
        profit_rate: (t > 0.0).then(|| (op.pe_value() - op.re_value()) / t),
        horizon_profit: horizon.map(|h| analytic::cycle_profit(op, h)).transpose()?,
    })
}

/// Evaluates an operation set with 1-based row numbers as ids.
pub fn evaluate_set(ops: &[SimpleOperation], horizon: Option<f64>) -> Result<SetReport> {
    let ids: Vec<String> = (1..=ops.len()).map(|i| i.to_string()).collect();
    let labeled: Vec<(String, SimpleOperation)> =
        ids.into_iter().zip(ops.iter().copied()).collect();
    evaluate_set_labeled(&labeled, horizon)
}

/// Evaluates a labeled operation set.
pub fn evaluate_set_labeled(
    ops: &[(String, SimpleOperation)],
    horizon: Option<f64>,
) -> Result<SetReport> {
    if ops.is_empty() {
        return Err(Error::EmptyInput("operation set is empty".into()));
    }
    let rows: Vec<OperationMetrics> = ops
        .iter()
        .map(|(_, op)| operation_metrics(op, horizon))
        .collect::<Result<_>>()?;

    let cost: Vec<f64> = rows.iter().map(|m| m.re_total).collect();
    let r: Vec<f64> = rows.iter().map(|m| m.resource_intensity).collect();
    let (argmin_cost, argmin_cost_tied) = argmin_with_ties(&cost);
    let (argmin_r, argmin_r_tied) = argmin_with_ties(&r);

    let profit: Option<Vec<f64>> = horizon
        .is_some()
        .then(|| rows.iter().map(|m| m.horizon_profit.unwrap()).collect());
    let (argmax_profit, argmax_profit_tied) = match &profit {
        Some(p) => {
            let neg: Vec<f64> = p.iter().map(|v| -v).collect();
            let (idx, tied) = argmin_with_ties(&neg);
            (Some(idx), tied)
        }
        None => (None, false),
    };
    let mirror_rank_stat = profit.as_ref().and_then(|p| spearman(&r, p));

    Ok(SetReport {
        ids: ops.iter().map(|(id, _)| id.clone()).collect(),
        rows,
        horizon,
        argmin_cost: Some(argmin_cost),
        argmin_r: Some(argmin_r),
        argmax_profit,
        argmin_cost_tied,
        argmin_r_tied,
        argmax_profit_tied,
        mirror_rank_stat,
    })
}

/// Thread curves of a simple operation, for plotting/export. The returned
/// profile ends at the numerically detected completion time, so its final
/// `r` value is the (numeric) resource intensity.
pub fn thread_series(op: &SimpleOperation, step: f64) -> Result<ThreadProfile> {
    if !op.is_effective() {
        return Err(Error::NotEffective(format!(
            "PE = {} does not exceed |RE| = {}",
            op.pe_value(),
            op.re_value()
        )));
    }
    let signals = op.to_signals(step)?;
    let t_a = actual_completion_numeric(&signals, &Tolerances::default())?;
    mismatch_thread(&signals, t_a)
}

/// Index of the smallest value; ties go to the lowest index and are
/// reported. The slice must be nonempty.
fn argmin_with_ties(values: &[f64]) -> (usize, bool) {
    let mut best = 0;
    for (i, v) in values.iter().enumerate().skip(1) {
        if *v < values[best] {
            best = i;
        }
    }
    let tied = values
        .iter()
        .enumerate()
        .any(|(i, v)| i != best && *v == values[best]);
    (best, tied)
}

/// Spearman rank correlation with average ranks for ties.
///
/// `None` when fewer than two pairs or when either column has zero rank
/// variance.
pub fn spearman(xs: &[f64], ys: &[f64]) -> Option<f64> {
    if xs.len() != ys.len() || xs.len() < 2 {
        return None;
    }
    let rx = average_ranks(xs);
    let ry = average_ranks(ys);
    pearson(&rx, &ry)
}

fn average_ranks(values: &[f64]) -> Vec<f64> {
    let n = values.len();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&a, &b| {
        values[a]
            .partial_cmp(&values[b])
            .unwrap_or(std::cmp::Ordering::Equal)
    });
    let mut ranks = vec![0.0; n];
    let mut i = 0;
    while i < n {
        let mut j = i;
        while j + 1 < n && values[order[j + 1]] == values[order[i]] {
            j += 1;
        }
        // average 1-based rank over the tied run [i, j]
        let rank = (i + j) as f64 / 2.0 + 1.0;
        for &idx in &order[i..=j] {
            ranks[idx] = rank;
        }
        i = j + 1;
    }
    ranks
}

fn pearson(xs: &[f64], ys: &[f64]) -> Option<f64> {
    let n = xs.len() as f64;
    let mx = xs.iter().sum::<f64>() / n;
    let my = ys.iter().sum::<f64>() / n;
    let mut sxy = 0.0;
    let mut sxx = 0.0;
    let mut syy = 0.0;
    for (x, y) in xs.iter().zip(ys) {
        sxy += (x - mx) * (y - my);
        sxx += (x - mx) * (x - mx);
        syy += (y - my) * (y - my);
    }
    if sxx == 0.0 || syy == 0.0 {
        return None;
    }
    Some(sxy / (sxx * syy).sqrt())
}
