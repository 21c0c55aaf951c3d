//! Python bindings for the resint library.
//!
//! Exposes the `SimpleOperation` class with its analytic and numeric
//! metrics, plus set-level helpers (`evaluate_set`, `generate_sweep`) and a
//! raw-sample entry point for distributed operations.

use pyo3::exceptions::{PyRuntimeError, PyValueError};
use pyo3::prelude::*;
use pyo3::types::{PyDict, PyList};

use resint::calculus::{
    actual_completion_numeric, resource_intensity_numeric_with, DifMode, Tolerances,
};
use resint::op_model::{SampledSignal, SignalOperation, ThreadProfile};

fn to_py_err(err: resint::Error) -> PyErr {
    match err {
        resint::Error::NotEffective(_) | resint::Error::HorizonExhausted(_) => {
            PyRuntimeError::new_err(err.to_string())
        }
        _ => PyValueError::new_err(err.to_string()),
    }
}

fn profile_to_dict<'py>(py: Python<'py>, profile: &ThreadProfile) -> PyResult<Bound<'py, PyDict>> {
    let dict = PyDict::new(py);
    dict.set_item("grid", &profile.grid)?;
    dict.set_item("ire", &profile.ire)?;
    dict.set_item("ipe", &profile.ipe)?;
    dict.set_item("vre", &profile.vre)?;
    dict.set_item("vpe", &profile.vpe)?;
    dict.set_item("dif", &profile.dif)?;
    dict.set_item("r", &profile.r)?;
    Ok(dict)
}

/// A lumped operation: input value `|re|` registered at `t_r`, output value
/// `pe` registered at `t_p`. Signed `re` readings are normalized to their
/// magnitude.
#[pyclass(frozen)]
#[derive(Clone, Copy)]
struct SimpleOperation {
    inner: resint::SimpleOperation,
}

#[pymethods]
impl SimpleOperation {
    #[new]
    #[pyo3(signature = (re, pe, t_r = 0.0, t_p = 0.0))]
    fn new(re: f64, pe: f64, t_r: f64, t_p: f64) -> PyResult<Self> {
        Ok(Self {
            inner: resint::SimpleOperation::new(re, pe, t_r, t_p).map_err(to_py_err)?,
        })
    }

    #[getter]
    fn re_value(&self) -> f64 {
        self.inner.re_value()
    }

    #[getter]
    fn pe_value(&self) -> f64 {
        self.inner.pe_value()
    }

    #[getter]
    fn t_r(&self) -> f64 {
        self.inner.t_r()
    }

    #[getter]
    fn t_p(&self) -> f64 {
        self.inner.t_p()
    }

    #[getter]
    fn op_time(&self) -> f64 {
        self.inner.op_time()
    }

    /// Actual completion time (closed form).
    fn actual_completion(&self) -> PyResult<f64> {
        resint::actual_completion_simple(&self.inner).map_err(to_py_err)
    }

    /// Height of the mismatch triangle at `t_p` (closed form).
    fn bd_height(&self) -> PyResult<f64> {
        resint::bd_height(&self.inner).map_err(to_py_err)
    }

    /// Resource intensity in CTT units (closed form).
    fn resource_intensity(&self) -> PyResult<f64> {
        resint::resource_intensity_simple(&self.inner).map_err(to_py_err)
    }

    /// Value added over a horizon of back-to-back cycles.
    fn cycle_profit(&self, horizon: f64) -> PyResult<f64> {
        resint::cycle_profit(&self.inner, horizon).map_err(to_py_err)
    }

    /// Actual completion time via the sampled-signal route.
    #[pyo3(signature = (step = 1e-3))]
    fn numeric_actual_completion(&self, step: f64) -> PyResult<f64> {
        let signals = self.inner.to_signals(step).map_err(to_py_err)?;
        actual_completion_numeric(&signals, &Tolerances::default()).map_err(to_py_err)
    }

    /// Resource intensity via the sampled-signal route.
    #[pyo3(signature = (step = 1e-3))]
    fn numeric_resource_intensity(&self, step: f64) -> PyResult<f64> {
        let signals = self.inner.to_signals(step).map_err(to_py_err)?;
        resource_intensity_numeric_with(&signals, &Tolerances::default(), DifMode::Signed)
            .map_err(to_py_err)
    }

    /// Thread curves on [0, t_a] as a dict of lists
    /// (grid, ire, ipe, vre, vpe, dif, r), ready for plotting.
    #[pyo3(signature = (step = 1e-3))]
    fn thread_series<'py>(&self, py: Python<'py>, step: f64) -> PyResult<Bound<'py, PyDict>> {
        let profile = resint::thread_series(&self.inner, step).map_err(to_py_err)?;
        profile_to_dict(py, &profile)
    }

    fn __repr__(&self) -> String {
        format!(
            "SimpleOperation(re={}, pe={}, t_r={}, t_p={})",
            self.inner.re_value(),
            self.inner.pe_value(),
            self.inner.t_r(),
            self.inner.t_p()
        )
    }
}

/// Evaluates an operation set; returns rows plus extremum indices and the
/// mirror rank statistic as a dict.
#[pyfunction]
#[pyo3(signature = (ops, horizon = None))]
fn evaluate_set<'py>(
    py: Python<'py>,
    ops: Vec<SimpleOperation>,
    horizon: Option<f64>,
) -> PyResult<Bound<'py, PyDict>> {
    let inner: Vec<resint::SimpleOperation> = ops.iter().map(|o| o.inner).collect();
    let report = resint::evaluate_set(&inner, horizon).map_err(to_py_err)?;
    let rows = PyList::empty(py);
    for (id, m) in report.ids.iter().zip(&report.rows) {
        let row = PyDict::new(py);
        row.set_item("id", id)?;
        row.set_item("re", m.re_total)?;
        row.set_item("pe", m.pe_total)?;
        row.set_item("t", m.op_time)?;
        row.set_item("t_a", m.t_a)?;
        row.set_item("r_intensity", m.resource_intensity)?;
        row.set_item("prof", m.horizon_profit)?;
        rows.append(row)?;
    }
    let out = PyDict::new(py);
    out.set_item("rows", rows)?;
    out.set_item("argmin_cost", report.argmin_cost)?;
    out.set_item("argmin_r", report.argmin_r)?;
    out.set_item("argmax_profit", report.argmax_profit)?;
    out.set_item("mirror_rank_stat", report.mirror_rank_stat)?;
    Ok(out)
}

/// Generates a parameter sweep: `vary` is one of "time", "re", "pe"; the
/// varied field takes `start + i * step` for `i in 0..count`.
#[pyfunction]
#[pyo3(signature = (base, vary, start, step, count))]
fn generate_sweep(
    base: SimpleOperation,
    vary: &str,
    start: f64,
    step: f64,
    count: usize,
) -> PyResult<Vec<SimpleOperation>> {
    let varied_field = match vary {
        "time" => resint::VariedField::OpTime,
        "re" => resint::VariedField::ReValue,
        "pe" => resint::VariedField::PeValue,
        other => {
            return Err(PyValueError::new_err(format!(
                "vary must be time, re, or pe, got '{other}'"
            )))
        }
    };
    let spec = resint::SweepSpec {
        base: base.inner,
        varied_field,
        start,
        step,
        count,
        horizon: None,
    };
    Ok(resint::generate_sweep(&spec)
        .map_err(to_py_err)?
        .into_iter()
        .map(|inner| SimpleOperation { inner })
        .collect())
}

/// Numeric metrics of a distributed operation given raw rate samples of
/// both channels on a shared grid.
#[pyfunction]
#[pyo3(signature = (t0, step, re_values, pe_values, magnitude_dif = false))]
fn signal_metrics<'py>(
    py: Python<'py>,
    t0: f64,
    step: f64,
    re_values: Vec<f64>,
    pe_values: Vec<f64>,
    magnitude_dif: bool,
) -> PyResult<Bound<'py, PyDict>> {
    let op = SignalOperation::new(
        SampledSignal::new(t0, step, re_values).map_err(to_py_err)?,
        SampledSignal::new(t0, step, pe_values).map_err(to_py_err)?,
    )
    .map_err(to_py_err)?;
    let tol = Tolerances::default();
    let mode = if magnitude_dif {
        DifMode::Magnitude
    } else {
        DifMode::Signed
    };
    let out = PyDict::new(py);
    out.set_item("re_total", op.re_total())?;
    out.set_item("pe_total", op.pe_total())?;
    out.set_item("t_f", op.physical_completion())?;
    out.set_item(
        "t_a",
        actual_completion_numeric(&op, &tol).map_err(to_py_err)?,
    )?;
    out.set_item(
        "r_numeric",
        resource_intensity_numeric_with(&op, &tol, mode).map_err(to_py_err)?,
    )?;
    Ok(out)
}

#[pymodule]
fn resint_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<SimpleOperation>()?;
    m.add_function(wrap_pyfunction!(evaluate_set, m)?)?;
    m.add_function(wrap_pyfunction!(generate_sweep, m)?)?;
    m.add_function(wrap_pyfunction!(signal_metrics, m)?)?;
    Ok(())
}
