//! Shared summation loop for power series whose coefficients involve
//! Γ(αk+β).

use crate::elementary::{ln_gamma_signed, power_over_gamma, rgamma_raw};
use crate::error::{Error, Result};
use crate::eval::{EvalResult, KahanSum, QuietCounter, SeriesControl};

const EPS: f64 = f64::EPSILON;

/// Extra factorial and index weights applied to x^k/Γ(αk+β).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum Weight {
    /// 1
    One,
    /// 1/k
    InvK,
    /// 1/k!
    InvFact,
    /// 1/(k·k!)
    InvKFact,
}

/// x^k/(k! Γ(a)) without intermediate overflow.
fn power_over_gamma_fact(x: f64, k: usize, a: f64) -> f64 {
    let kf = k as f64;
    let direct = power_over_gamma(x, kf, a) * rgamma_raw(kf + 1.0);
    if direct.is_finite() && (direct != 0.0 || x == 0.0) && direct.abs() > 1e-290 {
        return direct;
    }
    if rgamma_raw(a) == 0.0 {
        return 0.0;
    }
    let (lg, sign_g) = ln_gamma_signed(a);
    let (lf, _) = ln_gamma_signed(kf + 1.0);
    let sign_x = if x < 0.0 && k % 2 == 1 { -1.0 } else { 1.0 };
    sign_x * sign_g * (kf * x.abs().ln() - lg - lf).exp()
}

pub(crate) fn term(x: f64, k: usize, alpha: f64, beta: f64, weight: Weight) -> f64 {
    let kf = k as f64;
    let a = alpha * kf + beta;
    match weight {
        Weight::One => power_over_gamma(x, kf, a),
        Weight::InvK => power_over_gamma(x, kf, a) / kf,
        Weight::InvFact => power_over_gamma_fact(x, k, a),
        Weight::InvKFact => power_over_gamma_fact(x, k, a) / kf,
    }
}

/// Σ_{k ≥ start} w(k) x^k / Γ(αk + β).
///
/// Stops once `quiet_terms` consecutive terms are negligible and the
/// magnitudes have started to fall, so a slow initial rise (small α, or
/// poles of 1/Γ zeroing alternate terms) does not end the sum early.
pub(crate) fn gamma_series(
    x: f64,
    alpha: f64,
    beta: f64,
    weight: Weight,
    start: usize,
    ctrl: &SeriesControl,
) -> Result<EvalResult> {
    ctrl.validate()?;
    let mut sum = KahanSum::new();
    let mut quiet = QuietCounter::new(ctrl);
    let mut prev = f64::INFINITY;
    let mut k = start;
    let factorial_decay = matches!(weight, Weight::InvFact | Weight::InvKFact);
    loop {
        let t = term(x, k, alpha, beta, weight);
        sum.add(t);
        if !sum.value().is_finite() {
            return Err(Error::Overflow(format!(
                "series in x = {x} with α = {alpha}, β = {beta} exceeds the double range"
            )));
        }
        let settled = quiet.settled(t, sum.value());
        // Once Γ(αk+β) (or k!) is past its minimum the terms fall for good.
        let growing_denominator = alpha * k as f64 + beta > 2.0 || (factorial_decay && k as f64 > x.abs());
        if settled && growing_denominator && t.abs() <= prev.abs().max(f64::MIN_POSITIVE) {
            let n = k + 1 - start;
            let est = t.abs() + 4.0 * EPS * sum.magnitude() * (1.0 + (n as f64).log10());
            return Ok(EvalResult::new(sum.value(), est, n));
        }
        if t != 0.0 {
            prev = t;
        }
        k += 1;
        if k - start >= ctrl.max_terms {
            return Err(Error::NoConvergence { terms: k - start });
        }
    }
}
