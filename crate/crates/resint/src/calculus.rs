//! Numerical engine for general (distributed) operations.
//!
//! Everything is rectangle-rule quadrature over a uniform grid: a sampled
//! rate series integrates to a running sum times the step. Applied twice it
//! turns each registration channel into its bound-value curve (`vre`, `vpe`);
//! their mismatch `dif = vre - vpe` closes back to zero at the actual
//! completion time `t_a`, and the running integral of `dif` evaluated at
//! `t_a` is the resource intensity `R` (unit: value x time^2, "CTT").
//!
//! Between grid points all cumulative curves are treated as linear, which is
//! exact for the first integrals and first-order accurate for the rest; the
//! completion time is therefore refined by linear interpolation between the
//! bracketing samples of `vre - vpe`.

use crate::error::{Error, Result};
use crate::op_model::{SampledSignal, SignalOperation, ThreadProfile};

/// Hard cap on grid cells a single scan or profile may allocate/visit.
const MAX_SCAN_BINS: u64 = 1_000_000_000;
const MAX_PROFILE_BINS: u64 = 100_000_000;

/// Numeric tolerances and search bounds.
#[derive(Debug, Clone, Copy)]
pub struct Tolerances {
    /// Relative tolerance for mismatch checks.
    pub rel_tol: f64,
    /// Absolute tolerance (value units) for mismatch checks.
    pub abs_tol: f64,
    /// The compensation search gives up past
    /// `grid start + max_horizon_factor * (t_f - grid start)`.
    pub max_horizon_factor: f64,
}

impl Default for Tolerances {
    fn default() -> Self {
        Self {
            rel_tol: 1e-6,
            abs_tol: 1e-9,
            max_horizon_factor: 100.0,
        }
    }
}

/// How negative mismatch is folded into the resource-intensity integral.
///
/// For effective simple operations the mismatch never goes negative and both
/// modes coincide; for overlapping distributed signals they can differ.
/// Signed integration is the default.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum DifMode {
    #[default]
    Signed,
    Magnitude,
}

/// Running integral of a sampled rate series on the same grid.
///
/// `out[i] = step * (values[0] + ... + values[i])`: sample `i` of the output
/// is the accumulated integral through bin `i`, i.e. the integral value at
/// the end of that bin. The final sample equals `step * sum(values)` exactly
/// as computed.
pub fn cumulative_integral(s: &SampledSignal) -> SampledSignal {
    let mut acc = 0.0;
    let values = s
        .values()
        .iter()
        .map(|&v| {
            acc += v;
            acc * s.step()
        })
        .collect();
    SampledSignal::from_validated(s.t0(), s.step(), values)
}

/// [`cumulative_integral`] applied twice.
///
/// For an impulse of magnitude `M` in the bin starting at `t*`, sample `i`
/// equals `M * (end_of_bin_i - t*)`: the bound-value ramp, exact at bin
/// boundaries for bin-aligned impulses and first-order accurate otherwise.
pub fn second_integral(s: &SampledSignal) -> SampledSignal {
    cumulative_integral(&cumulative_integral(s))
}

/// State of the thread curves at one grid point.
#[derive(Debug, Clone, Copy, Default)]
struct ThreadState {
    ire: f64,
    ipe: f64,
    vre: f64,
    vpe: f64,
    r: f64,
    r_abs: f64,
}

impl ThreadState {
    /// Advances one bin with the given channel rates (running-sum rectangle
    /// rule; the second integrals and `r` accumulate the freshly updated
    /// inner values, matching repeated [`cumulative_integral`]).
    fn advance(&mut self, step: f64, re_rate: f64, pe_rate: f64) {
        self.ire += step * re_rate;
        self.ipe += step * pe_rate;
        self.vre += step * self.ire;
        self.vpe += step * self.ipe;
        let dif = self.vre - self.vpe;
        self.r += step * dif;
        self.r_abs += step * dif.abs();
    }

    fn dif(&self) -> f64 {
        self.vre - self.vpe
    }

    fn lerp(a: &ThreadState, b: &ThreadState, frac: f64) -> ThreadState {
        let at = |x: f64, y: f64| x + frac * (y - x);
        ThreadState {
            ire: at(a.ire, b.ire),
            ipe: at(a.ipe, b.ipe),
            vre: at(a.vre, b.vre),
            vpe: at(a.vpe, b.vpe),
            r: at(a.r, b.r),
            r_abs: at(a.r_abs, b.r_abs),
        }
    }
}

/// Result of the compensation scan: completion time plus the thread state
/// interpolated at it.
struct CompletionScan {
    t_a: f64,
    state: ThreadState,
}

/// Walks the grid from the start of the operation looking for the first
/// instant `v >= t_f` with `vpe(v) >= vre(v)`. The sampled span is always
/// scanned in full; past it the channels are zero-extended until the horizon
/// cap.
fn scan_completion(op: &SignalOperation, tol: &Tolerances) -> Result<CompletionScan> {
    debug_assert!(tol.rel_tol > 0.0 && tol.abs_tol > 0.0 && tol.max_horizon_factor > 0.0);
    let step = op.step();
    let t0 = op.t0();
    let re_total = op.re_total();
    let pe_total = op.pe_total();
    if pe_total < re_total {
        return Err(Error::NotEffective(format!(
            "output value {pe_total} is below input value {re_total}: consumption is never compensated"
        )));
    }
    let t_f = op.physical_completion();
    let m_f = ((t_f - t0) / step).round() as u64;
    if m_f == 0 {
        // All registration happens in the first bin: vpe(t0) = vre(t0) = 0,
        // so compensation holds at the start instant itself.
        return Ok(CompletionScan {
            t_a: t_f,
            state: ThreadState::default(),
        });
    }
    let cap = t0 + tol.max_horizon_factor * (t_f - t0).max(step);
    let data_bins = op.len() as u64;

    let mut state = ThreadState::default();
    let mut m: u64 = 0;
    loop {
        let prev = state;
        let (re_rate, pe_rate) = op.rates_at(m as usize);
        state.advance(step, re_rate, pe_rate);
        m += 1;
        let v = t0 + step * m as f64;
        if m >= m_f {
            let g = -state.dif(); // vpe - vre
            if g >= 0.0 {
                if m == m_f {
                    return Ok(CompletionScan { t_a: t_f, state });
                }
                let g_prev = -prev.dif();
                let frac = if g == g_prev {
                    1.0
                } else {
                    -g_prev / (g - g_prev)
                };
                return Ok(CompletionScan {
                    t_a: v - step + frac * step,
                    state: ThreadState::lerp(&prev, &state, frac),
                });
            }
        }
        if m >= data_bins {
            if pe_total <= re_total {
                return Err(Error::NotEffective(format!(
                    "output value {pe_total} only matches input value {re_total}: the mismatch never closes"
                )));
            }
            if v > cap {
                return Err(Error::HorizonExhausted(format!(
                    "no compensation up to {v} (cap {cap}, physical completion {t_f})"
                )));
            }
        }
        if m >= MAX_SCAN_BINS {
            return Err(Error::HorizonExhausted(format!(
                "compensation search exceeded {MAX_SCAN_BINS} grid cells"
            )));
        }
    }
}

/// Actual completion time of a distributed operation: the first instant at
/// or after the physical completion where the twice-integrated return
/// thread compensates the consumption thread, refined by linear
/// interpolation between the bracketing grid points.
pub fn actual_completion_numeric(op: &SignalOperation, tol: &Tolerances) -> Result<f64> {
    scan_completion(op, tol).map(|scan| scan.t_a)
}

/// Resource intensity of a distributed operation: the rectangle-rule
/// integral of the mismatch `vre - vpe` from the grid start to the actual
/// completion time. Equals the final `r` value of the corresponding
/// [`mismatch_thread`] profile.
pub fn resource_intensity_numeric(op: &SignalOperation, tol: &Tolerances) -> Result<f64> {
    resource_intensity_numeric_with(op, tol, DifMode::Signed)
}

/// [`resource_intensity_numeric`] with an explicit treatment of negative
/// mismatch.
pub fn resource_intensity_numeric_with(
    op: &SignalOperation,
    tol: &Tolerances,
    mode: DifMode,
) -> Result<f64> {
    let scan = scan_completion(op, tol)?;
    Ok(match mode {
        DifMode::Signed => scan.state.r,
        DifMode::Magnitude => scan.state.r_abs,
    })
}

/// Builds the full thread profile of an operation on `[grid start, t_a]`,
/// zero-extending the channels as needed. The final grid point sits at
/// exactly `t_a` (linearly interpolated inside its bin).
pub fn mismatch_thread(op: &SignalOperation, t_a: f64) -> Result<ThreadProfile> {
    let step = op.step();
    let t0 = op.t0();
    if !t_a.is_finite() || t_a < t0 {
        return Err(Error::HorizonExhausted(format!(
            "t_a = {t_a} lies outside the extendable grid starting at {t0}"
        )));
    }
    let span_bins = (t_a - t0) / step;
    if span_bins > MAX_PROFILE_BINS as f64 {
        return Err(Error::HorizonExhausted(format!(
            "profile to t_a = {t_a} would need {span_bins:.0} bins (cap {MAX_PROFILE_BINS})"
        )));
    }
    // Snap to the grid when t_a is within jitter of a bin boundary.
    let mut full_bins = span_bins.floor() as u64;
    let mut frac = span_bins - full_bins as f64;
    if frac * step <= step * 1e-9 {
        frac = 0.0;
    } else if (1.0 - frac) * step <= step * 1e-9 {
        full_bins += 1;
        frac = 0.0;
    }

    let points = full_bins as usize + 1 + usize::from(frac > 0.0);
    let mut profile = ThreadProfile {
        grid: Vec::with_capacity(points),
        ire: Vec::with_capacity(points),
        ipe: Vec::with_capacity(points),
        vre: Vec::with_capacity(points),
        vpe: Vec::with_capacity(points),
        dif: Vec::with_capacity(points),
        r: Vec::with_capacity(points),
    };
    let mut push = |v: f64, s: &ThreadState| {
        profile.grid.push(v);
        profile.ire.push(s.ire);
        profile.ipe.push(s.ipe);
        profile.vre.push(s.vre);
        profile.vpe.push(s.vpe);
        profile.dif.push(s.dif());
        profile.r.push(s.r);
    };

    let mut state = ThreadState::default();
    push(t0, &state);
    for m in 0..full_bins {
        let (re_rate, pe_rate) = op.rates_at(m as usize);
        state.advance(step, re_rate, pe_rate);
        push(t0 + step * (m + 1) as f64, &state);
    }
    if frac > 0.0 {
        let mut next = state;
        let (re_rate, pe_rate) = op.rates_at(full_bins as usize);
        next.advance(step, re_rate, pe_rate);
        push(t_a, &ThreadState::lerp(&state, &next, frac));
    }
    Ok(profile)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::op_model::SimpleOperation;

    fn worked_op() -> SimpleOperation {
        SimpleOperation::new(-2.0, 3.0, 2.0, 8.0).unwrap()
    }

    #[test]
    fn cumulative_integral_of_impulse_is_step_curve() {
        let s = SampledSignal::new(0.0, 0.5, vec![0.0, 0.0, 0.0, 0.0, 4.0, 0.0, 0.0]).unwrap();
        // impulse of total 2 in the bin starting at t = 2
        let ci = cumulative_integral(&s);
        assert_eq!(ci.values(), &[0.0, 0.0, 0.0, 0.0, 2.0, 2.0, 2.0]);
    }

    #[test]
    fn cumulative_integral_of_zero_is_zero() {
        let s = SampledSignal::new(0.0, 0.1, vec![0.0; 8]).unwrap();
        assert!(cumulative_integral(&s).values().iter().all(|&v| v == 0.0));
    }

    #[test]
    fn cumulative_integral_of_constant_rate_is_ramp() {
        // rate 1 on [0, 4] at step 0.5: running sum reaches 4 at t = 4
        let s = SampledSignal::new(0.0, 0.5, vec![1.0; 8]).unwrap();
        let ci = cumulative_integral(&s);
        let expected = [0.5, 1.0, 1.5, 2.0, 2.5, 3.0, 3.5, 4.0];
        for (got, want) in ci.values().iter().zip(expected) {
            assert!((got - want).abs() < 1e-12);
        }
    }

    #[test]
    fn cumulative_integral_total_matches_running_sum() {
        let s = SampledSignal::new(0.0, 0.013, vec![0.4, 1.7, 0.0, 2.2, 0.9]).unwrap();
        let ci = cumulative_integral(&s);
        let total = s.total();
        assert!((ci.values().last().unwrap() - total).abs() <= 1e-12 * total);
    }

    #[test]
    fn second_integral_of_impulse_is_bound_value_ramp() {
        // magnitude 2 at t_r = 2 evaluated at v = 20 gives 2 * 18 = 36;
        // magnitude 3 at t_p = 8 evaluated at v = 20 gives 3 * 12 = 36.
        let step = 0.001;
        let n = (20.0 / step) as usize;
        for (mag, t_at) in [(2.0, 2.0), (3.0, 8.0)] {
            let mut values = vec![0.0; n];
            values[(t_at / step) as usize] = mag / step;
            let s = SampledSignal::new(0.0, step, values).unwrap();
            let si = second_integral(&s);
            // sample n-1 carries the integral value at the end of the last
            // bin, i.e. at v = 20
            let got = si.values()[n - 1];
            let want = mag * (20.0 - t_at);
            assert!(
                (got - want).abs() < 1e-9,
                "impulse {mag}@{t_at}: got {got}, want {want}"
            );
        }
    }

    #[test]
    fn second_integral_of_zero_is_zero() {
        let s = SampledSignal::new(0.0, 0.25, vec![0.0; 10]).unwrap();
        assert!(second_integral(&s).values().iter().all(|&v| v == 0.0));
    }

    #[test]
    fn worked_example_completion_time() {
        let signals = worked_op().to_signals(1e-3).unwrap();
        let t_a = actual_completion_numeric(&signals, &Tolerances::default()).unwrap();
        assert!((t_a - 20.0).abs() <= 5e-3, "t_a = {t_a}");
    }

    #[test]
    fn worked_example_resource_intensity() {
        let tol = Tolerances::default();
        let signals = worked_op().to_signals(1e-3).unwrap();
        let r = resource_intensity_numeric(&signals, &tol).unwrap();
        assert!((r - 108.0).abs() <= 0.01, "R = {r}");
        let signals = worked_op().to_signals(1e-4).unwrap();
        let r = resource_intensity_numeric(&signals, &tol).unwrap();
        assert!((r - 108.0).abs() <= 0.001, "R = {r}");
    }

    #[test]
    fn equal_impulses_complete_immediately() {
        let re = SampledSignal::new(0.0, 0.01, impulse(300, 150, 5.0)).unwrap();
        let pe = SampledSignal::new(0.0, 0.01, impulse(300, 150, 5.0)).unwrap();
        let op = SignalOperation::new(re, pe).unwrap();
        let t_a = actual_completion_numeric(&op, &Tolerances::default()).unwrap();
        assert_eq!(t_a, 1.5);
        let r = resource_intensity_numeric(&op, &Tolerances::default()).unwrap();
        assert_eq!(r, 0.0);
    }

    #[test]
    fn identical_channels_have_zero_mismatch_everywhere() {
        let values = vec![0.3, 1.2, 0.0, 0.7, 0.1];
        let re = SampledSignal::new(0.0, 0.2, values.clone()).unwrap();
        let pe = SampledSignal::new(0.0, 0.2, values).unwrap();
        let op = SignalOperation::new(re, pe).unwrap();
        let t_a = actual_completion_numeric(&op, &Tolerances::default()).unwrap();
        assert_eq!(t_a, op.physical_completion());
        let profile = mismatch_thread(&op, t_a).unwrap();
        assert!(profile.dif.iter().all(|&d| d == 0.0));
        assert_eq!(profile.resource_intensity(), 0.0);
    }

    #[test]
    fn non_effective_operation_is_rejected() {
        let op = SimpleOperation::new(3.0, 2.0, 0.0, 1.0)
            .unwrap()
            .to_signals(0.01)
            .unwrap();
        assert!(matches!(
            actual_completion_numeric(&op, &Tolerances::default()),
            Err(Error::NotEffective(_))
        ));
    }

    #[test]
    fn equal_totals_registered_later_never_compensate() {
        let re = SampledSignal::new(0.0, 0.1, impulse(30, 0, 20.0)).unwrap();
        let pe = SampledSignal::new(0.0, 0.1, impulse(30, 20, 20.0)).unwrap();
        let op = SignalOperation::new(re, pe).unwrap();
        assert!(matches!(
            actual_completion_numeric(&op, &Tolerances::default()),
            Err(Error::NotEffective(_))
        ));
    }

    #[test]
    fn horizon_cap_is_enforced() {
        // pe/re = 1.005 with t_r = 0 completes at 201 * T, past the cap.
        let op = SimpleOperation::new(2.0, 2.01, 0.0, 1.0)
            .unwrap()
            .to_signals(1e-3)
            .unwrap();
        let tol = Tolerances {
            max_horizon_factor: 100.0,
            ..Tolerances::default()
        };
        assert!(matches!(
            actual_completion_numeric(&op, &tol),
            Err(Error::HorizonExhausted(_))
        ));
        let relaxed = Tolerances {
            max_horizon_factor: 300.0,
            ..Tolerances::default()
        };
        let t_a = actual_completion_numeric(&op, &relaxed).unwrap();
        assert!((t_a - 201.0).abs() < 2e-3, "t_a = {t_a}");
    }

    #[test]
    fn mismatch_thread_reproduces_worked_example_shape() {
        let signals = worked_op().to_signals(1e-3).unwrap();
        let t_a = actual_completion_numeric(&signals, &Tolerances::default()).unwrap();
        let profile = mismatch_thread(&signals, t_a).unwrap();

        assert_eq!(profile.dif[0], 0.0);
        // zero until t = 2
        let at = |t: f64| ((t - signals.t0()) / signals.step()).round() as usize;
        assert_eq!(profile.dif[at(1.999)], 0.0);
        // rising with slope |RE| = 2 on (2, 8): peak 12 at t_p = 8
        let peak = profile.dif[at(8.0)];
        assert!((peak - 12.0).abs() < 1e-9, "peak = {peak}");
        assert!((profile.dif[at(5.0)] - 6.0).abs() < 1e-9);
        // falling with slope PE - |RE| = 1 after t_p
        assert!((profile.dif[at(14.0)] - 6.0).abs() < 1e-9);
        // closed at t_a
        let end = profile.dif.last().unwrap();
        assert!(end.abs() <= 1e-9 + 1e-6 * 36.0, "dif(t_a) = {end}");
        // the peak sits at t_p
        let argmax = profile
            .dif
            .iter()
            .enumerate()
            .max_by(|a, b| a.1.partial_cmp(b.1).unwrap())
            .unwrap()
            .0;
        assert!((profile.grid[argmax] - 8.0).abs() <= signals.step());
    }

    #[test]
    fn profile_curves_are_nondecreasing_for_simple_ops() {
        let signals = worked_op().to_signals(1e-2).unwrap();
        let t_a = actual_completion_numeric(&signals, &Tolerances::default()).unwrap();
        let profile = mismatch_thread(&signals, t_a).unwrap();
        for curve in [
            &profile.ire,
            &profile.ipe,
            &profile.vre,
            &profile.vpe,
            &profile.r,
        ] {
            assert!(curve.windows(2).all(|w| w[1] >= w[0] - 1e-12));
        }
        assert!(profile.dif.iter().all(|&d| d >= -1e-12));
    }

    #[test]
    fn resource_intensity_equals_profile_endpoint() {
        let signals = worked_op().to_signals(0.0217).unwrap();
        let tol = Tolerances::default();
        let t_a = actual_completion_numeric(&signals, &tol).unwrap();
        let r = resource_intensity_numeric(&signals, &tol).unwrap();
        let profile = mismatch_thread(&signals, t_a).unwrap();
        assert!((r - profile.resource_intensity()).abs() <= 1e-12 * r.max(1.0));
    }

    #[test]
    fn mismatch_thread_rejects_t_a_outside_span() {
        let signals = worked_op().to_signals(0.1).unwrap();
        assert!(matches!(
            mismatch_thread(&signals, -1.0),
            Err(Error::HorizonExhausted(_))
        ));
        assert!(matches!(
            mismatch_thread(&signals, f64::INFINITY),
            Err(Error::HorizonExhausted(_))
        ));
    }

    #[test]
    fn magnitude_mode_counts_negative_mismatch_positively() {
        // pe registered before re: dif goes negative first.
        let re = SampledSignal::new(0.0, 0.01, impulse(600, 400, 200.0)).unwrap();
        let pe = SampledSignal::new(0.0, 0.01, impulse(600, 100, 300.0)).unwrap();
        let op = SignalOperation::new(re, pe).unwrap();
        let tol = Tolerances::default();
        let signed = resource_intensity_numeric_with(&op, &tol, DifMode::Signed).unwrap();
        let magnitude = resource_intensity_numeric_with(&op, &tol, DifMode::Magnitude).unwrap();
        assert!(signed < 0.0, "signed = {signed}");
        assert!(magnitude > 0.0 && magnitude >= signed.abs());
    }

    /// Independent oracle for distributed operations: a plain running-sum
    /// scan at a fine fixed step, written directly against the integral
    /// definitions (no shared code with the implementation above).
    fn brute_force_oracle(
        re_rate: impl Fn(f64) -> f64,
        pe_rate: impl Fn(f64) -> f64,
        t_f: f64,
        step: f64,
    ) -> (f64, f64) {
        let (mut ire, mut ipe, mut vre, mut vpe, mut r) = (0.0, 0.0, 0.0, 0.0, 0.0);
        let mut m: u64 = 0;
        loop {
            let t_left = step * m as f64;
            ire += step * re_rate(t_left);
            ipe += step * pe_rate(t_left);
            vre += step * ire;
            vpe += step * ipe;
            r += step * (vre - vpe);
            m += 1;
            let v = step * m as f64;
            if v >= t_f && vpe >= vre {
                return (v, r);
            }
            assert!(m < 100_000_000, "oracle ran away");
        }
    }

    #[test]
    fn distributed_operation_matches_brute_force_oracle() {
        // re: rate 1 on [0, 2] (total 2); pe: rate 1.5 on [6, 8] (total 3).
        // Exact continuous values: t_a = 19, R = 647/6.
        let (oracle_t_a, oracle_r) = brute_force_oracle(
            |t| if t < 2.0 { 1.0 } else { 0.0 },
            |t| if (6.0..8.0).contains(&t) { 1.5 } else { 0.0 },
            8.0,
            1e-5,
        );
        assert!(
            (oracle_t_a - 19.0).abs() < 1e-3,
            "oracle t_a = {oracle_t_a}"
        );
        let exact_r = 647.0 / 6.0;
        assert!(
            (oracle_r - exact_r).abs() < 1e-3,
            "oracle R = {oracle_r}, exact {exact_r}"
        );

        let step = 1e-4;
        let n = (10.0 / step) as usize;
        let mut re = vec![0.0; n];
        let mut pe = vec![0.0; n];
        for j in 0..n {
            let t = step * j as f64;
            if t < 2.0 {
                re[j] = 1.0;
            }
            if (6.0..8.0).contains(&t) {
                pe[j] = 1.5;
            }
        }
        let op = SignalOperation::new(
            SampledSignal::new(0.0, step, re).unwrap(),
            SampledSignal::new(0.0, step, pe).unwrap(),
        )
        .unwrap();
        let tol = Tolerances::default();
        let t_a = actual_completion_numeric(&op, &tol).unwrap();
        let r = resource_intensity_numeric(&op, &tol).unwrap();
        assert!((t_a - 19.0).abs() <= 2.0 * step, "t_a = {t_a}");
        assert!((r - exact_r).abs() / exact_r <= 1e-4, "R = {r}");
    }

    #[test]
    fn halving_the_step_shrinks_the_error_first_order() {
        // off-grid output registration so bin quantization dominates; the
        // remainder t_p mod step shrinks with the step (0.0017, 0.0007,
        // 0.0002), making the first-order trend observable
        let op = SimpleOperation::new(2.0, 3.0, 0.0, 6.2837).unwrap();
        let exact = 3.0 * 2.0 * op.op_time().powi(2) / 2.0;
        let tol = Tolerances::default();
        let err_at = |step: f64| {
            let signals = op.to_signals(step).unwrap();
            (resource_intensity_numeric(&signals, &tol).unwrap() - exact).abs()
        };
        let e1 = err_at(0.002);
        let e2 = err_at(0.001);
        let e4 = err_at(0.0005);
        assert!(e2 <= 0.75 * e1 + 1e-9, "e1 = {e1}, e2 = {e2}");
        assert!(e4 <= 0.75 * e2 + 1e-9, "e2 = {e2}, e4 = {e4}");
    }

    fn impulse(len: usize, at: usize, height: f64) -> Vec<f64> {
        let mut v = vec![0.0; len];
        v[at] = height;
        v
    }
}
