//! Closed forms for simple operations.
//!
//! A simple operation registers its whole input value `|RE|` at `t_r` and its
//! whole output value `PE` at `t_p`. Its bound-value curves are then straight
//! rays and everything has a closed form:
//!
//! * actual completion `t_a = (PE*t_p - |RE|*t_r) / (PE - |RE|)`
//! * mismatch-triangle height `BD = |RE|*PE*(t_p - t_r) / (PE - |RE|)`
//! * resource intensity `R = PE*|RE|*(t_p - t_r)^2 / (2*(PE - |RE|))`,
//!   equivalently the difference of the two right triangles,
//!   `R = BD*((t_a - t_r) - (t_a - t_p))/2 = BD*(t_p - t_r)/2`.
//!
//! All of these require `PE > |RE|`; at `PE = |RE|` the compensation instant
//! runs off to infinity, so the functions report a typed "not effective"
//! error instead of dividing by zero.

use crate::error::{Error, Result};
use crate::op_model::SimpleOperation;

fn require_effective(op: &SimpleOperation) -> Result<()> {
    if op.is_effective() {
        Ok(())
    } else {
        Err(Error::NotEffective(format!(
            "PE = {} does not exceed |RE| = {}: compensation never arrives",
            op.pe_value(),
            op.re_value()
        )))
    }
}

/// Actual completion time `t_a` of a simple operation.
///
/// Always `>= t_p`, with equality exactly for the degenerate instant
/// operation `t_r = t_p`.
pub fn actual_completion_simple(op: &SimpleOperation) -> Result<f64> {
    require_effective(op)?;
    Ok((op.pe_value() * op.t_p() - op.re_value() * op.t_r()) / (op.pe_value() - op.re_value()))
}

/// Height of the mismatch triangle at `t_p`.
pub fn bd_height(op: &SimpleOperation) -> Result<f64> {
    require_effective(op)?;
    Ok(op.re_value() * op.pe_value() * op.op_time() / (op.pe_value() - op.re_value()))
}

/// Resource intensity `R` of a simple operation, in CTT units.
///
/// Zero exactly for instant operations; grows quadratically in the
/// operation time.
pub fn resource_intensity_simple(op: &SimpleOperation) -> Result<f64> {
    require_effective(op)?;
    let t = op.op_time();
    Ok(op.pe_value() * op.re_value() * t * t / (2.0 * (op.pe_value() - op.re_value())))
}

/// Value added by running the operation back to back over `horizon`:
/// `(horizon / T) * (PE - |RE|)`, with fractional cycles counted at rate.
pub fn cycle_profit(op: &SimpleOperation, horizon: f64) -> Result<f64> {
    let t = op.op_time();
    if t <= 0.0 {
        return Err(Error::InvalidOperation(
            "cycle profit is undefined for an instant operation (zero operation time)".into(),
        ));
    }
    if horizon <= 0.0 || !horizon.is_finite() {
        return Err(Error::InvalidOperation(format!(
            "horizon must be positive and finite, got {horizon}"
        )));
    }
    Ok(horizon / t * (op.pe_value() - op.re_value()))
}
