//! Resource-intensity analytics for target operations.
//!
//! A *target operation* consumes input products and produces output
//! products, both valued in comparable units and recorded as time-stamped
//! registration signals. Costs alone do not rank such operations: two
//! operations with equal costs but different durations bind value for
//! different spans of time. This crate computes the *resource intensity*
//! `R` — the integral, up to the actual completion time, of the mismatch
//! between the twice-integrated consumption and return threads — which
//! folds costs, output value, and timing into a single indicator (unit:
//! value x time^2, written CTT). Across a family of operations the minimum
//! of `R` marks the most efficient one, which in general is *not* the one
//! with minimum costs.
//!
//! Modules:
//! * [`op_model`] — domain types: operations, sampled signals, profiles;
//! * [`calculus`] — numeric engine for distributed registration signals;
//! * [`analytic`] — closed forms for simple (impulse) operations;
//! * [`analysis`] — operation-set evaluation, sweeps, extremum reports;
//! * [`io`] — CSV/JSON ingestion and emission.
//!
//! The `resint` binary wraps all of this into `analyze`, `table`, `sweep`,
//! `trace`, and `signals` subcommands.

pub mod analysis;
pub mod analytic;
pub mod calculus;
pub mod error;
pub mod io;
pub mod op_model;

pub use analysis::{evaluate_set, evaluate_set_labeled, generate_sweep, thread_series, SetReport};
pub use analytic::{actual_completion_simple, bd_height, cycle_profit, resource_intensity_simple};
pub use calculus::{
    actual_completion_numeric, cumulative_integral, mismatch_thread, resource_intensity_numeric,
    second_integral, DifMode, Tolerances,
};
pub use error::{Error, Result};
pub use op_model::{
    OperationMetrics, SampledSignal, SignalOperation, SimpleOperation, SweepSpec, ThreadProfile,
    VariedField,
};
