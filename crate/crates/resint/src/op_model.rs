//! Domain types shared by the whole crate: lumped operations, sampled
//! registration signals, derived thread profiles, and metric records.
//!
//! An operation consumes input products (the `re` channel, "resource
//! consumption") and releases output products (the `pe` channel, "resource
//! return"), both expressed in comparable value units. A *simple* operation
//! registers each channel as a single impulse: the whole input value at
//! `t_r`, the whole output value at `t_p`.

use serde::Serialize;

use crate::error::{Error, Result};

/// Relative jitter allowed when deciding that two grids coincide.
const GRID_REL_TOL: f64 = 1e-9;

/// A lumped operation: input/output value magnitudes and their registration
/// instants.
///
/// The input cost estimate is stored as a magnitude; signed readings are
/// accepted and normalized on construction since every downstream formula
/// uses `|RE|`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SimpleOperation {
    re_value: f64,
    pe_value: f64,
    t_r: f64,
    t_p: f64,
}

impl SimpleOperation {
    /// Builds an operation from a (possibly signed) input cost reading.
    ///
    /// Requires nonzero finite magnitudes and `t_p >= t_r`.
    pub fn new(raw_re: f64, pe_value: f64, t_r: f64, t_p: f64) -> Result<Self> {
        for (name, v) in [("re", raw_re), ("pe", pe_value), ("tr", t_r), ("tp", t_p)] {
            if !v.is_finite() {
                return Err(Error::InvalidOperation(format!(
                    "parameter {name} must be finite, got {v}"
                )));
            }
        }
        let re_value = raw_re.abs();
        if re_value == 0.0 {
            return Err(Error::InvalidOperation(
                "input value magnitude |RE| must be nonzero".into(),
            ));
        }
        if pe_value <= 0.0 {
            return Err(Error::InvalidOperation(format!(
                "output value PE must be positive, got {pe_value}"
            )));
        }
        if t_p < t_r {
            return Err(Error::InvalidOperation(format!(
                "output registration t_p = {t_p} precedes input registration t_r = {t_r}"
            )));
        }
        Ok(Self {
            re_value,
            pe_value,
            t_r,
            t_p,
        })
    }

    /// Input value magnitude `|RE|`.
    pub fn re_value(&self) -> f64 {
        self.re_value
    }

    /// Output value `PE`.
    pub fn pe_value(&self) -> f64 {
        self.pe_value
    }

    /// Input registration instant.
    pub fn t_r(&self) -> f64 {
        self.t_r
    }

    /// Output registration instant.
    pub fn t_p(&self) -> f64 {
        self.t_p
    }

    /// Operation time `T = t_p - t_r`.
    pub fn op_time(&self) -> f64 {
        self.t_p - self.t_r
    }

    /// True when the operation adds value (`PE > |RE|`), i.e. the return
    /// thread eventually compensates the consumption thread.
    pub fn is_effective(&self) -> bool {
        self.pe_value > self.re_value
    }

    /// Renders the operation as a pair of single-impulse registration
    /// signals on a uniform grid of spacing `step`.
    ///
    /// Each channel holds one rectangle of height `value / step` in the bin
    /// containing the registration instant, so the channel total is
    /// preserved for any step. The grid starts at 0 (or at the grid-aligned
    /// floor of `t_r` when `t_r < 0`) and covers through the bin of `t_p`.
    ///
    /// `step` must be positive and, when `t_p > t_r`, at most a tenth of the
    /// operation time so the two impulses stay resolved.
    pub fn to_signals(&self, step: f64) -> Result<SignalOperation> {
        if step <= 0.0 || !step.is_finite() {
            return Err(Error::InvalidSignal(format!(
                "step must be positive and finite, got {step}"
            )));
        }
        let op_time = self.op_time();
        if op_time > 0.0 && step > op_time / 10.0 {
            return Err(Error::InvalidSignal(format!(
                "step {step} too coarse for operation time {op_time}: need step <= T/10"
            )));
        }
        let t0 = if self.t_r < 0.0 {
            (self.t_r / step).floor() * step
        } else {
            0.0
        };
        // guarded floor: an instant a few ulps below a bin boundary (from
        // the division rounding) still lands in the bin it designates
        let bin_of = |t: f64| {
            let x = (t - t0) / step;
            (x + x.abs() * 4e-15 + 1e-15).floor() as usize
        };
        let len = bin_of(self.t_p) + 1;
        let mut re = vec![0.0; len];
        let mut pe = vec![0.0; len];
        re[bin_of(self.t_r).min(len - 1)] = self.re_value / step;
        pe[len - 1] = self.pe_value / step;
        SignalOperation::new(
            SampledSignal::new(t0, step, re)?,
            SampledSignal::new(t0, step, pe)?,
        )
    }
}

/// A uniformly sampled nonnegative value-rate series for one channel.
///
/// Sample `i` is the constant rate over the bin `[t0 + i*step, t0 + (i+1)*step)`,
/// so the channel total is `step * sum(values)` (rectangle rule, exact).
#[derive(Debug, Clone, PartialEq)]
pub struct SampledSignal {
    t0: f64,
    step: f64,
    values: Vec<f64>,
}

impl SampledSignal {
    /// Validates and wraps a rate series.
    pub fn new(t0: f64, step: f64, values: Vec<f64>) -> Result<Self> {
        if !t0.is_finite() {
            return Err(Error::InvalidSignal(format!("t0 must be finite, got {t0}")));
        }
        if step <= 0.0 || !step.is_finite() {
            return Err(Error::InvalidSignal(format!(
                "step must be positive and finite, got {step}"
            )));
        }
        for (i, v) in values.iter().enumerate() {
            if !v.is_finite() || *v < 0.0 {
                return Err(Error::InvalidSignal(format!(
                    "sample {i} must be finite and nonnegative, got {v}"
                )));
            }
        }
        let signal = Self { t0, step, values };
        if !signal.total().is_finite() {
            return Err(Error::InvalidSignal("signal total overflows f64".into()));
        }
        Ok(signal)
    }

    /// Internal constructor for series already known to satisfy the
    /// invariants (e.g. cumulative integrals of valid signals).
    pub(crate) fn from_validated(t0: f64, step: f64, values: Vec<f64>) -> Self {
        debug_assert!(values.iter().all(|v| v.is_finite() && *v >= 0.0));
        Self { t0, step, values }
    }

    pub fn t0(&self) -> f64 {
        self.t0
    }

    pub fn step(&self) -> f64 {
        self.step
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// Instant at which bin `i` starts.
    pub fn time_at(&self, i: usize) -> f64 {
        self.t0 + self.step * i as f64
    }

    /// End of the sampled span.
    pub fn end_time(&self) -> f64 {
        self.time_at(self.values.len())
    }

    /// Total value carried by the channel: `step * sum(values)`.
    pub fn total(&self) -> f64 {
        self.step * self.values.iter().sum::<f64>()
    }

    /// Index of the last nonzero sample, if any.
    pub fn last_active_index(&self) -> Option<usize> {
        self.values.iter().rposition(|&v| v != 0.0)
    }
}

/// An operation given by distributed registration signals: one resource
/// consumption channel and one resource return channel on a shared grid.
///
/// Construction aligns the two channels onto a common grid (same `t0`,
/// `step`, and length, padding with zero bins); the inputs must already
/// share the step and be offset by a whole number of bins. Both channels
/// must carry positive total value.
#[derive(Debug, Clone, PartialEq)]
pub struct SignalOperation {
    re_signal: SampledSignal,
    pe_signal: SampledSignal,
}

impl SignalOperation {
    pub fn new(re_signal: SampledSignal, pe_signal: SampledSignal) -> Result<Self> {
        let step = re_signal.step();
        if (pe_signal.step() - step).abs() > GRID_REL_TOL * step {
            return Err(Error::GridMismatch(format!(
                "channel steps differ: re {} vs pe {}",
                step,
                pe_signal.step()
            )));
        }
        let offset = (pe_signal.t0() - re_signal.t0()) / step;
        if (offset - offset.round()).abs() > 1e-6 {
            return Err(Error::GridMismatch(format!(
                "channel origins are offset by {offset} bins: need a whole number"
            )));
        }
        if re_signal.total() <= 0.0 {
            return Err(Error::InvalidOperation(
                "resource consumption channel carries no value".into(),
            ));
        }
        if pe_signal.total() <= 0.0 {
            return Err(Error::InvalidOperation(
                "resource return channel carries no value".into(),
            ));
        }

        let t0 = re_signal.t0().min(pe_signal.t0());
        let end = re_signal.end_time().max(pe_signal.end_time());
        let len = ((end - t0) / step).round() as usize;
        let align = |s: &SampledSignal| {
            let lead = ((s.t0() - t0) / step).round() as usize;
            let mut values = vec![0.0; len];
            values[lead..lead + s.len()].copy_from_slice(s.values());
            SampledSignal::from_validated(t0, step, values)
        };
        Ok(Self {
            re_signal: align(&re_signal),
            pe_signal: align(&pe_signal),
        })
    }

    pub fn re_signal(&self) -> &SampledSignal {
        &self.re_signal
    }

    pub fn pe_signal(&self) -> &SampledSignal {
        &self.pe_signal
    }

    pub fn t0(&self) -> f64 {
        self.re_signal.t0()
    }

    pub fn step(&self) -> f64 {
        self.re_signal.step()
    }

    /// Number of bins on the shared grid.
    pub fn len(&self) -> usize {
        self.re_signal.len()
    }

    pub fn is_empty(&self) -> bool {
        self.re_signal.is_empty()
    }

    pub fn re_total(&self) -> f64 {
        self.re_signal.total()
    }

    pub fn pe_total(&self) -> f64 {
        self.pe_signal.total()
    }

    /// Rates of both channels in bin `j`; zero beyond the sampled span.
    pub(crate) fn rates_at(&self, j: usize) -> (f64, f64) {
        (
            self.re_signal.values().get(j).copied().unwrap_or(0.0),
            self.pe_signal.values().get(j).copied().unwrap_or(0.0),
        )
    }

    /// Physical completion time: instant of the last nonzero sample across
    /// both channels. Always defined since both totals are positive.
    pub fn physical_completion(&self) -> f64 {
        let idx = self
            .re_signal
            .last_active_index()
            .into_iter()
            .chain(self.pe_signal.last_active_index())
            .max()
            .expect("channels carry positive totals");
        self.re_signal.time_at(idx)
    }
}

/// Derived thread curves of one operation on `[grid start, t_a]`.
///
/// `grid[m]` is the sample instant; `ire`/`ipe` are the running integrals of
/// the rate channels, `vre`/`vpe` their running integrals in turn, `dif` the
/// mismatch `vre - vpe`, and `r` the running integral of `dif`. For an
/// effective simple operation `dif` is a closed curve: zero at the start and
/// again at the actual completion time.
#[derive(Debug, Clone, Serialize)]
pub struct ThreadProfile {
    pub grid: Vec<f64>,
    pub ire: Vec<f64>,
    pub ipe: Vec<f64>,
    pub vre: Vec<f64>,
    pub vpe: Vec<f64>,
    pub dif: Vec<f64>,
    pub r: Vec<f64>,
}

impl ThreadProfile {
    pub fn len(&self) -> usize {
        self.grid.len()
    }

    pub fn is_empty(&self) -> bool {
        self.grid.is_empty()
    }

    /// Value of `r` at the end of the profile, i.e. the resource intensity
    /// when the profile ends at the actual completion time.
    pub fn resource_intensity(&self) -> f64 {
        self.r.last().copied().unwrap_or(0.0)
    }
}

/// Full metric record of one operation.
#[derive(Debug, Clone, Serialize)]
pub struct OperationMetrics {
    /// Costs `|RE|`: total input value.
    pub re_total: f64,
    /// Total output value `PE`.
    pub pe_total: f64,
    pub t_r: f64,
    pub t_p: f64,
    /// Physical completion time (last registration instant).
    pub t_f: f64,
    /// Actual completion time (compensation of consumption by return).
    pub t_a: f64,
    /// Operation time `T = t_p - t_r`.
    pub op_time: f64,
    /// Resource intensity `R` in CTT units (value x time^2).
    pub resource_intensity: f64,
    /// Value added per time unit, `(PE - |RE|) / T`; `None` for instant
    /// operations.
    pub profit_rate: Option<f64>,
    /// Value added over the analysis horizon; `None` when no horizon was
    /// requested.
    pub horizon_profit: Option<f64>,
}

/// Which scalar a parameter sweep varies.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum VariedField {
    /// Input value magnitude `|RE|`, keeping `pe`, `t_r`, `t_p` from the base.
    ReValue,
    /// Output value `PE`, keeping `re`, `t_r`, `t_p` from the base.
    PeValue,
    /// Operation time `T`: generated operations use `t_r = 0`, `t_p = T`.
    OpTime,
}

/// Declarative generator for an operation set: the varied field takes
/// `start + i * step` for `i = 0..count`.
#[derive(Debug, Clone, Serialize)]
pub struct SweepSpec {
    pub base: SimpleOperation,
    pub varied_field: VariedField,
    pub start: f64,
    pub step: f64,
    pub count: usize,
    /// Horizon for profit analysis of the generated set, if requested.
    pub horizon: Option<f64>,
}
