//! Adaptive Gauss–Kronrod quadrature used as the independent oracle for the
//! integral definitions
//!
//! ```text
//! Fi(x) = ∫₀^x (f(t) − f(0))/t dt,   fi(x) = ∫ₓ^∞ f(t)/t dt,
//! F(s)  = ∫₀^∞ e^{−st} f(t) dt.
//! ```
//!
//! Refinement is global: the panel with the largest error estimate is bisected
//! until the summed estimate meets the tolerance. The refinement schedule is a
//! pure function of the integrand values, so results are reproducible.

use std::cmp::Ordering;
use std::collections::BinaryHeap;

use crate::error::{invalid, Error, Result};
use crate::eval::EvalResult;

/// Adaptive quadrature policy.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadControl {
    pub abs_tol: f64,
    pub rel_tol: f64,
    /// Maximum bisection depth of any single panel.
    pub max_depth: u32,
    /// Natural-log level below which an integrand tail is treated as zero.
    pub tail_log_threshold: f64,
}

impl Default for QuadControl {
    fn default() -> Self {
        QuadControl {
            abs_tol: 1e-12,
            rel_tol: 1e-10,
            max_depth: 50,
            tail_log_threshold: -35.0,
        }
    }
}

impl QuadControl {
    pub fn validate(&self) -> Result<()> {
        if !(self.abs_tol > 0.0) || !(self.rel_tol > 0.0) || self.max_depth < 1 {
            return Err(invalid(format!("bad quadrature control {self:?}")));
        }
        Ok(())
    }

    pub fn with_tolerances(abs_tol: f64, rel_tol: f64) -> Self {
        QuadControl {
            abs_tol,
            rel_tol,
            ..Default::default()
        }
    }

    fn tolerance(&self, value: f64) -> f64 {
        self.abs_tol.max(self.rel_tol * value.abs())
    }
}

const XGK: [f64; 8] = [
    0.991_455_371_120_812_6,
    0.949_107_912_342_758_5,
    0.864_864_423_359_769_1,
    0.741_531_185_599_394_4,
    0.586_087_235_467_691_1,
    0.405_845_151_377_397_2,
    0.207_784_955_007_898_5,
    0.0,
];

const WGK: [f64; 8] = [
    0.022_935_322_010_529_225,
    0.063_092_092_629_978_55,
    0.104_790_010_322_250_18,
    0.140_653_259_715_525_92,
    0.169_004_726_639_267_9,
    0.190_350_578_064_785_4,
    0.204_432_940_075_298_9,
    0.209_482_141_084_727_83,
];

const WG: [f64; 4] = [
    0.129_484_966_168_869_7,
    0.279_705_391_489_276_7,
    0.381_830_050_505_118_9,
    0.417_959_183_673_469_4,
];

/// One 15-point Kronrod panel with its embedded 7-point Gauss estimate.
#[derive(Debug, Clone, Copy)]
pub struct Panel {
    pub a: f64,
    pub b: f64,
    pub value: f64,
    pub error: f64,
    depth: u32,
    /// The error estimate is the rounding floor; bisection cannot lower it.
    at_floor: bool,
}

/// Apply the 15-point Gauss–Kronrod rule on `[a, b]`.
///
/// The error estimate follows the QUADPACK rescaling of `|K15 − G7|`.
pub fn gauss_kronrod_15<F: Fn(f64) -> f64>(f: &F, a: f64, b: f64) -> Panel {
    let center = 0.5 * (a + b);
    let half = 0.5 * (b - a);
    let fc = f(center);
    let mut kronrod = fc * WGK[7];
    let mut gauss = fc * WG[3];
    let mut res_abs = kronrod.abs();
    let mut fv1 = [0.0; 7];
    let mut fv2 = [0.0; 7];
    for j in 0..7 {
        let dx = half * XGK[j];
        let f1 = f(center - dx);
        let f2 = f(center + dx);
        fv1[j] = f1;
        fv2[j] = f2;
        kronrod += WGK[j] * (f1 + f2);
        res_abs += WGK[j] * (f1.abs() + f2.abs());
        if j % 2 == 1 {
            gauss += WG[j / 2] * (f1 + f2);
        }
    }
    let mean = 0.5 * kronrod;
    let mut res_asc = WGK[7] * (fc - mean).abs();
    for j in 0..7 {
        res_asc += WGK[j] * ((fv1[j] - mean).abs() + (fv2[j] - mean).abs());
    }
    let scale = half.abs();
    let value = kronrod * half;
    res_abs *= scale;
    res_asc *= scale;
    let mut err = ((kronrod - gauss) * half).abs();
    if res_asc != 0.0 && err != 0.0 {
        err = res_asc * (200.0 * err / res_asc).powf(1.5).min(1.0);
    }
    let mut at_floor = false;
    if res_abs > f64::MIN_POSITIVE / (50.0 * f64::EPSILON) {
        let floor = 50.0 * f64::EPSILON * res_abs;
        at_floor = err <= floor;
        err = err.max(floor);
    }
    if !value.is_finite() {
        err = f64::INFINITY;
    }
    Panel {
        a,
        b,
        value,
        error: err,
        depth: 0,
        at_floor,
    }
}

struct Ranked(Panel);

impl PartialEq for Ranked {
    fn eq(&self, other: &Self) -> bool {
        self.cmp(other) == Ordering::Equal
    }
}
impl Eq for Ranked {}
impl PartialOrd for Ranked {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}
impl Ord for Ranked {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0
            .error
            .total_cmp(&other.0.error)
            .then_with(|| other.0.a.total_cmp(&self.0.a))
    }
}

const MAX_PANELS: usize = 20_000;

/// Adaptive integration over the union of consecutive panels given by
/// `breaks` (at least two increasing points).
fn adaptive<F: Fn(f64) -> f64>(f: &F, breaks: &[f64], ctrl: &QuadControl) -> Result<EvalResult> {
    ctrl.validate()?;
    let mut heap = BinaryHeap::new();
    let mut frozen = Vec::new();
    let mut total = 0.0;
    let mut total_err = 0.0;
    for w in breaks.windows(2) {
        let p = gauss_kronrod_15(f, w[0], w[1]);
        total += p.value;
        total_err += p.error;
        heap.push(Ranked(p));
    }
    let mut panels = heap.len();
    let mut best = (total, total_err, panels);
    while total_err > ctrl.tolerance(total) && panels < MAX_PANELS {
        let Some(Ranked(worst)) = heap.pop() else {
            break;
        };
        let mid = 0.5 * (worst.a + worst.b);
        if worst.at_floor || worst.depth >= ctrl.max_depth || mid <= worst.a || mid >= worst.b {
            frozen.push(worst);
            continue;
        }
        let mut left = gauss_kronrod_15(f, worst.a, mid);
        let mut right = gauss_kronrod_15(f, mid, worst.b);
        left.depth = worst.depth + 1;
        right.depth = worst.depth + 1;
        total += left.value + right.value - worst.value;
        total_err += left.error + right.error - worst.error;
        heap.push(Ranked(left));
        heap.push(Ranked(right));
        panels += 1;
        // Re-sum occasionally so the running totals do not drift.
        if panels % 64 == 0 {
            let (v, e) = resum(&heap, &frozen);
            total = v;
            total_err = e;
        }
        if total_err < best.1 {
            best = (total, total_err, panels);
        }
    }
    let (v, e) = resum(&heap, &frozen);
    if e <= best.1 {
        best = (v, e, panels);
    }
    let (value, est_error, work) = best;
    if !value.is_finite() {
        return Err(Error::Overflow("integral is not finite".into()));
    }
    if est_error > ctrl.tolerance(value) {
        return Err(Error::ToleranceNotMet { value, est_error });
    }
    Ok(EvalResult::new(value, est_error, work))
}

fn resum(heap: &BinaryHeap<Ranked>, frozen: &[Panel]) -> (f64, f64) {
    let mut parts: Vec<&Panel> = heap.iter().map(|r| &r.0).chain(frozen.iter()).collect();
    parts.sort_by(|x, y| x.a.total_cmp(&y.a));
    parts
        .iter()
        .fold((0.0, 0.0), |(v, e), p| (v + p.value, e + p.error))
}

/// `∫_a^b f(t) dt` by adaptive Gauss–Kronrod quadrature.
pub fn integrate<F: Fn(f64) -> f64>(f: F, a: f64, b: f64, ctrl: &QuadControl) -> Result<EvalResult> {
    if a == b {
        return Ok(EvalResult::exact(0.0));
    }
    if !(a.is_finite() && b.is_finite()) {
        return Err(invalid("integration limits must be finite"));
    }
    if a > b {
        return integrate(f, b, a, ctrl).map(|r| r.scale(-1.0));
    }
    adaptive(&f, &[a, b], ctrl)
}

/// `∫₀^x (f(t) − f(0))/t dt`.
///
/// Below `t = x·2⁻⁴⁰` the integrand is replaced by its value at that point;
/// all integrands handled here are analytic at the origin.
pub fn integrate_fi<F: Fn(f64) -> f64>(
    f: F,
    f_at_zero: f64,
    x: f64,
    ctrl: &QuadControl,
) -> Result<EvalResult> {
    if !(x > 0.0) {
        return Err(crate::error::domain(format!("integrate_fi needs x > 0, got {x}")));
    }
    let g = |t: f64| (f(t) - f_at_zero) / t;
    let eps = x * (-40.0f64).exp2();
    let head = eps * g(eps);
    let body = adaptive(&g, &[eps, x], ctrl)?;
    Ok(EvalResult::new(
        body.value + head,
        body.est_error + head.abs() * (-40.0f64).exp2(),
        body.work + 1,
    ))
}

/// Panels of doubling width starting at `x`, covering `[x, end]`.
fn geometric_breaks(x: f64, end: f64) -> Vec<f64> {
    let mut width = (x.abs() * 0.25).clamp(0.25, 1.0);
    let mut breaks = vec![x];
    let mut t = x;
    while t < end {
        t = (t + width).min(end);
        breaks.push(t);
        width *= 2.0;
    }
    breaks
}

const MAX_TRUNCATION: f64 = 1e6;

/// `∫ₓ^∞ f(t)/t dt` for integrands with a known decay envelope.
///
/// `decay_log_bound(t)` must bound `ln|f(t)/t|` from above for `t ≥ x` and
/// be non-increasing. The integral is truncated where the envelope drops
/// below `ctrl.tail_log_threshold`; the envelope tail is added to the error.
pub fn integrate_tail<F, B>(f: F, x: f64, decay_log_bound: B, ctrl: &QuadControl) -> Result<EvalResult>
where
    F: Fn(f64) -> f64,
    B: Fn(f64) -> f64,
{
    if !(x > 0.0) {
        return Err(crate::error::domain(format!("integrate_tail needs x > 0, got {x}")));
    }
    let mut step = x.max(1.0);
    let mut end = x + step;
    while decay_log_bound(end) >= ctrl.tail_log_threshold {
        step *= 2.0;
        end = x + step;
        if end > MAX_TRUNCATION {
            return Err(Error::DivergentIntegral(format!(
                "decay envelope stays above e^{} up to t = {MAX_TRUNCATION:e}",
                ctrl.tail_log_threshold
            )));
        }
    }
    // Tighten the cut to the first point where the envelope is below threshold.
    let (mut lo, mut hi) = (x, end);
    for _ in 0..60 {
        let mid = 0.5 * (lo + hi);
        if decay_log_bound(mid) < ctrl.tail_log_threshold {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    let end = hi;
    let g = |t: f64| f(t) / t;
    let body = adaptive(&g, &geometric_breaks(x, end), ctrl)?;
    let at_end = decay_log_bound(end);
    let slope = at_end - decay_log_bound(end + 1.0);
    let tail = if slope > 1e-3 {
        at_end.exp() / slope
    } else {
        at_end.exp() * end
    };
    Ok(EvalResult::new(body.value, body.est_error + tail, body.work))
}

/// Numerical Laplace transform `∫₀^∞ e^{−st} f(t) dt`.
///
/// The half-line is covered by panels of doubling width; marching stops
/// once a panel and the integrand at its right end are both below
/// `e^{tail_log_threshold}` relative to the accumulated value.
pub fn laplace_quad<F: Fn(f64) -> f64>(f: F, s: f64, ctrl: &QuadControl) -> Result<EvalResult> {
    if !(s > 0.0) {
        return Err(crate::error::domain(format!("laplace_quad needs s > 0, got {s}")));
    }
    let g = |t: f64| (-s * t).exp() * f(t);
    let cutoff = ctrl.tail_log_threshold.exp();
    let mut acc = EvalResult::exact(0.0);
    let (mut a, mut width) = (0.0, 1.0 / s);
    let mut quiet = 0;
    loop {
        let b = a + width;
        let panel = adaptive(&g, &[a, b], ctrl)?;
        acc += panel;
        let edge = g(b).abs() * width;
        if panel.value.abs() <= cutoff * acc.value.abs() && edge <= cutoff * acc.value.abs() {
            quiet += 1;
            if quiet >= 2 {
                return Ok(EvalResult::new(acc.value, acc.est_error + panel.value.abs() + edge, acc.work));
            }
        } else {
            quiet = 0;
        }
        if !acc.value.is_finite() {
            return Err(Error::DivergentIntegral(format!(
                "Laplace integrand grows without bound at s = {s}"
            )));
        }
        a = b;
        width *= 2.0;
        if a > MAX_TRUNCATION {
            return Err(Error::DivergentIntegral(format!(
                "Laplace integrand has not decayed by t = {MAX_TRUNCATION:e} at s = {s}"
            )));
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rel(a: f64, b: f64) -> f64 {
        ((a - b) / b).abs()
    }

    #[test]
    fn unreachable_tolerance_stops_at_rounding_floor() {
        let q = QuadControl::with_tolerances(1e-300, 1e-16);
        let want = 0.5 * (3f64.exp() * (3f64.sin() - 3f64.cos()) + 1.0);
        match integrate(|t: f64| t.exp() * t.sin(), 0.0, 3.0, &q) {
            Err(Error::ToleranceNotMet { value, est_error }) => {
                assert!(((value - want) / want).abs() < 1e-14);
                assert!(est_error < 1e-12);
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn single_panel_is_exact_for_degree_22() {
        // ∫_{-1}^{2} t^22 dt
        let exact = (2f64.powi(23) + 1.0) / 23.0;
        let p = gauss_kronrod_15(&|t: f64| t.powi(22), -1.0, 2.0);
        assert!(rel(p.value, exact) < 1e-14, "{}", rel(p.value, exact));
    }

    #[test]
    fn smooth_integral() {
        let r = integrate(|t: f64| t.sin(), 0.0, std::f64::consts::PI, &QuadControl::default()).unwrap();
        assert!((r.value - 2.0).abs() < 1e-13);
        assert!(r.est_error < 1e-10);
    }

    #[test]
    fn reversed_limits_flip_sign() {
        let c = QuadControl::default();
        let r = integrate(|t: f64| t * t, 1.0, 0.0, &c).unwrap();
        assert!((r.value + 1.0 / 3.0).abs() < 1e-15);
    }

    #[test]
    fn sqrt_endpoint_behaviour() {
        let r = integrate(f64::sqrt, 0.0, 1.0, &QuadControl::default()).unwrap();
        assert!((r.value - 2.0 / 3.0).abs() < 1e-10);
    }

    #[test]
    fn fi_of_exponential() {
        // ∫₀^1 (e^t − 1)/t dt = Ein(1) = 1.3179021514544038...
        let r = integrate_fi(f64::exp, 1.0, 1.0, &QuadControl::default()).unwrap();
        assert!(rel(r.value, 1.317_902_151_454_403_9) < 1e-13);
    }

    #[test]
    fn tail_of_decaying_exponential() {
        // ∫_2^∞ e^{-t}/t dt = E1(2) = 0.04890051070806112
        let r = integrate_tail(|t: f64| (-t).exp(), 2.0, |t| -t - t.ln(), &QuadControl::default()).unwrap();
        assert!(rel(r.value, 0.048_900_510_708_061_12) < 1e-12);
    }

    #[test]
    fn tail_with_flat_envelope_is_divergent() {
        let r = integrate_tail(f64::sin, 1.0, |_| 0.0, &QuadControl::default());
        assert!(matches!(r, Err(Error::DivergentIntegral(_))));
    }

    #[test]
    fn laplace_of_constant_and_exponential() {
        let c = QuadControl::default();
        let r = laplace_quad(|_| 1.0, 3.0, &c).unwrap();
        assert!(rel(r.value, 1.0 / 3.0) < 1e-13);
        let r = laplace_quad(f64::exp, 2.0, &c).unwrap();
        assert!(rel(r.value, 1.0) < 1e-12);
    }

    #[test]
    fn laplace_of_growing_function_fails() {
        let r = laplace_quad(|t: f64| (2.0 * t).exp(), 1.0, &QuadControl::default());
        assert!(r.is_err());
    }
}
