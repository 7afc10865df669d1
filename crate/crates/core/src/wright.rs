//! Wright functions W_{α,β}, the Mainardi pair F_α and M_α, and their
//! integral counterparts
//!
//! ```text
//! W_{α,β}(x)  = Σ_{k≥0} x^k/(k! Γ(αk+β))
//! Wi_{α,β}(x) = ∫₀^x (W_{α,β}(t) − 1/Γ(β))/t dt = Σ_{k≥1} x^k/(k k! Γ(αk+β))
//! F_α(x) = W_{−α,0}(−x),  M_α(x) = W_{−α,1−α}(−x),  F_α(x) = α x M_α(x)
//! Fi_α(x) = ∫₀^x F_α(t)/t dt,  Mi_α(x) = ∫₀^x (M_α(t) − M_α(0))/t dt
//! ```
//!
//! The Mainardi functions are summed in the reflected form, where
//! 1/Γ(−αk) is replaced by −Γ(αk+1) sin(παk)/π, so no term ever sits next
//! to a pole of Γ. When that series loses too many digits to cancellation
//! M_α is taken from the Kanter–Zolotarev integral over (0, π) instead.

use std::f64::consts::PI;

use crate::elementary::{ein, is_nonpositive_integer, ln_gamma_signed, rgamma_raw, sin_pi};
use crate::error::{domain, invalid, Error, Result};
use crate::eval::{EvalResult, KahanSum, QuietCounter, RationalAlpha, SeriesControl};
use crate::hypergeometric::reduced_pfq;
use crate::mittag_leffler::b_list;
use crate::quadrature::{integrate, QuadControl};
use crate::series::{gamma_series, Weight};

const EPS: f64 = f64::EPSILON;

/// Largest |x| accepted by the second-kind (−1 < α < 0) series.
pub const SECOND_KIND_RADIUS: f64 = 10.0;

/// Relative cancellation (ε Σ|t| / |Σ t|) above which the reflected
/// Mainardi series hands over to the integral representation.
const CANCELLATION_LIMIT: f64 = 1e-14;

/// Parameters (α, β) of a Wright function.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct WrightParams {
    pub alpha: f64,
    pub beta: f64,
}

impl WrightParams {
    pub fn new(alpha: f64, beta: f64) -> Result<Self> {
        let p = WrightParams { alpha, beta };
        p.validate()?;
        Ok(p)
    }

    /// α = −1 is accepted here; only [`wright_w`] can evaluate it.
    pub fn validate(&self) -> Result<()> {
        if !self.alpha.is_finite() || !self.beta.is_finite() {
            return Err(invalid(format!(
                "Wright parameters must be finite, got α = {}, β = {}",
                self.alpha, self.beta
            )));
        }
        if self.alpha < -1.0 {
            return Err(domain(format!("Wright functions need α ≥ −1, got α = {}", self.alpha)));
        }
        Ok(())
    }

    fn second_kind(&self) -> bool {
        self.alpha < 0.0
    }
}

/// Which member of the Mainardi pair.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MainardiKind {
    F,
    M,
}

/// Which integral Mainardi function.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum IntegralMainardiKind {
    Fi,
    Mi,
}

fn check_finite_x(x: f64) -> Result<()> {
    if !x.is_finite() {
        return Err(domain(format!("x must be finite, got {x}")));
    }
    Ok(())
}

fn check_nonnegative_x(x: f64) -> Result<()> {
    if !(x >= 0.0) || !x.is_finite() {
        return Err(domain(format!("x must be finite and non-negative, got {x}")));
    }
    Ok(())
}

fn check_radius(params: &WrightParams, x: f64) -> Result<()> {
    if params.second_kind() && x.abs() > SECOND_KIND_RADIUS {
        return Err(domain(format!(
            "second-kind Wright series is limited to |x| ≤ {SECOND_KIND_RADIUS}, got x = {x}"
        )));
    }
    Ok(())
}

fn check_mainardi_alpha(alpha: f64) -> Result<()> {
    if !(alpha > 0.0 && alpha < 1.0) {
        return Err(domain(format!("Mainardi functions need 0 < α < 1, got α = {alpha}")));
    }
    Ok(())
}

fn check_mainardi_ratio(pq: RationalAlpha) -> Result<()> {
    if pq.p() >= pq.q() {
        return Err(domain(format!("Mainardi functions need p < q, got α = {pq}")));
    }
    Ok(())
}

/// W_{α,β}(x) = Σ x^k/(k! Γ(αk+β)).
pub fn wright_w(params: &WrightParams, x: f64, ctrl: &SeriesControl) -> Result<EvalResult> {
    params.validate()?;
    check_finite_x(x)?;
    if params.alpha == -1.0 {
        if !(x > -1.0) {
            return Err(domain(format!("W_{{−1,β}}(x) needs x > −1, got x = {x}")));
        }
        let v = (1.0 + x).powf(params.beta - 1.0) * rgamma_raw(params.beta);
        return EvalResult::rounded(v).check_finite("W_{−1,β}");
    }
    check_radius(params, x)?;
    if x == 0.0 {
        return Ok(EvalResult::rounded(rgamma_raw(params.beta)));
    }
    gamma_series(x, params.alpha, params.beta, Weight::InvFact, 0, ctrl)
}

/// c_j = (k+1+j)/q for j = 0..q−1.
fn c_list(q: u32, k: u32) -> Vec<f64> {
    (0..q).map(|j| (k + 1 + j) as f64 / q as f64).collect()
}

fn factorial(k: u32) -> f64 {
    (1..=k).fold(1.0, |acc, j| acc * j as f64)
}

fn padded(total: EvalResult) -> EvalResult {
    EvalResult::new(total.value, total.est_error + 2.0 * EPS * total.value.abs(), total.work)
}

/// W_{p/q,β}(x) as a sum of q hypergeometric functions in x^q/(p^p q^q).
pub fn wright_rational(pq: RationalAlpha, beta: f64, x: f64, ctrl: &SeriesControl) -> Result<EvalResult> {
    let params = WrightParams::new(pq.value(), beta)?;
    check_finite_x(x)?;
    if x == 0.0 {
        return wright_w(&params, x, ctrl);
    }
    let (p, q) = (pq.p(), pq.q());
    let z = x.powi(q as i32) / ((p as f64).powi(p as i32) * (q as f64).powi(q as i32));
    let mut total = EvalResult::exact(0.0);
    for k in 0..q {
        let mut lower = b_list(pq, k, beta);
        if lower.iter().any(|&v| is_nonpositive_integer(v)) {
            return wright_w(&params, x, ctrl);
        }
        lower.extend(c_list(q, k));
        let pre = x.powi(k as i32) / factorial(k) * rgamma_raw(pq.value() * k as f64 + beta);
        let f = reduced_pfq(&[], &lower, z, ctrl)?;
        total += f.scale(pre);
    }
    padded(total).check_finite("W_{p/q,β}")
}

/// Wi_{α,β}(x) = Σ_{k≥1} x^k/(k k! Γ(αk+β)).
pub fn integral_wright(params: &WrightParams, x: f64, ctrl: &SeriesControl) -> Result<EvalResult> {
    params.validate()?;
    if params.alpha <= -1.0 {
        return Err(domain(format!("integral Wright functions need α > −1, got α = {}", params.alpha)));
    }
    check_nonnegative_x(x)?;
    check_radius(params, x)?;
    if x == 0.0 {
        return Ok(EvalResult::exact(0.0));
    }
    if params.alpha == 0.0 {
        let v = ein(x)? * rgamma_raw(params.beta);
        return Ok(EvalResult::new(v, 8.0 * EPS * v.abs(), 1));
    }
    gamma_series(x, params.alpha, params.beta, Weight::InvKFact, 1, ctrl)
}

/// Wi_{p/q,β}(x) as a sum of q hypergeometric functions in x^q/(p^p q^q).
pub fn integral_wright_rational(
    pq: RationalAlpha,
    beta: f64,
    x: f64,
    ctrl: &SeriesControl,
) -> Result<EvalResult> {
    let params = WrightParams::new(pq.value(), beta)?;
    check_nonnegative_x(x)?;
    if x == 0.0 {
        return Ok(EvalResult::exact(0.0));
    }
    let (p, q) = (pq.p(), pq.q());
    let z = x.powi(q as i32) / ((p as f64).powi(p as i32) * (q as f64).powi(q as i32));
    let mut total = EvalResult::exact(0.0);
    for k in 1..=q {
        let b = b_list(pq, k, beta);
        if b.iter().any(|&v| is_nonpositive_integer(v)) {
            return integral_wright(&params, x, ctrl);
        }
        let kq = k as f64 / q as f64;
        let mut lower = vec![kq + 1.0];
        lower.extend(b);
        lower.extend(c_list(q, k));
        let pre = x.powi(k as i32) / (k as f64 * factorial(k)) * rgamma_raw(pq.value() * k as f64 + beta);
        let f = reduced_pfq(&[kq], &lower, z, ctrl)?;
        total += f.scale(pre);
    }
    padded(total).check_finite("Wi_{p/q,β}")
}

struct Reflected {
    sum: f64,
    abs_sum: f64,
    terms: usize,
}

/// Σ_{k≥start} (−x)^k/(k! [k]) Γ(αk+g) sin(π(αk+s)), where the bracketed
/// 1/k is present when `integral` is set.
fn reflected_series(
    alpha: f64,
    g: f64,
    s: f64,
    start: usize,
    integral: bool,
    x: f64,
    ctrl: &SeriesControl,
) -> Result<Reflected> {
    ctrl.validate()?;
    let mut sum = KahanSum::new();
    let mut abs_sum = 0.0;
    let mut quiet = QuietCounter::new(ctrl);
    let mut prev_log = f64::INFINITY;
    let lnx = x.ln();
    let mut k = start;
    let mut ln_fact = ln_gamma_signed(start as f64 + 1.0).0;
    loop {
        let kf = k as f64;
        let lg = ln_gamma_signed(alpha * kf + g).0;
        let sn = sin_pi(alpha * kf + s);
        let mut log_mag = kf * lnx + lg - ln_fact;
        if integral {
            log_mag -= kf.ln();
        }
        if log_mag > 700.0 {
            return Err(Error::Overflow(format!("reflected Mainardi series at x = {x} with α = {alpha}")));
        }
        let sign = if k % 2 == 1 { -1.0 } else { 1.0 };
        let t = sign * sn * log_mag.exp();
        sum.add(t);
        abs_sum += t.abs();
        let settled = quiet.settled(t, sum.value());
        // The magnitude envelope is unimodal in k; once it falls it keeps falling.
        if settled && log_mag < prev_log && k > start + 2 {
            return Ok(Reflected {
                sum: sum.value(),
                abs_sum,
                terms: k + 1 - start,
            });
        }
        prev_log = log_mag;
        k += 1;
        ln_fact += kf.ln_1p();
        if k - start >= ctrl.max_terms {
            return Err(Error::NoConvergence { terms: k - start });
        }
    }
}

fn reflected_result(r: &Reflected, scale: f64) -> EvalResult {
    let value = r.sum * scale;
    let est = 4.0 * EPS * r.abs_sum * scale.abs() * (1.0 + (r.terms as f64).log10()) + EPS * value.abs();
    EvalResult::new(value, est, r.terms)
}

fn cancels(r: &Reflected) -> bool {
    EPS * r.abs_sum > CANCELLATION_LIMIT * r.sum.abs()
}

/// M_α(x) from the Kanter–Zolotarev representation
///
/// ```text
/// M_α(x) = x^{α/(1−α)}/(π(1−α)) ∫₀^π a(φ) exp(−x^{1/(1−α)} a(φ)) dφ,
/// a(φ) = (sin αφ / sin φ)^{1/(1−α)} sin((1−α)φ)/sin αφ.
/// ```
fn mainardi_m_integral(alpha: f64, x: f64) -> Result<EvalResult> {
    let inv = 1.0 / (1.0 - alpha);
    let scale = x.powf(inv);
    let a = |phi: f64| -> f64 {
        let sa = (alpha * phi).sin();
        let s = phi.sin();
        (sa / s).powf(inv) * ((1.0 - alpha) * phi).sin() / sa
    };
    let f = |phi: f64| -> f64 {
        if phi <= 0.0 {
            let a0 = alpha.powf(inv) * (1.0 - alpha) / alpha;
            return a0 * (-scale * a0).exp();
        }
        if phi >= PI {
            return 0.0;
        }
        let v = a(phi);
        if !v.is_finite() {
            return 0.0;
        }
        v * (-scale * v).exp()
    };
    let ctrl = QuadControl::with_tolerances(1e-300, 1e-13);
    let r = match integrate(f, 0.0, PI, &ctrl) {
        Err(Error::ToleranceNotMet { value, est_error }) => EvalResult::new(value, est_error, 0),
        other => other?,
    };
    let pre = x.powf(alpha * inv) * inv / PI;
    Ok(r.scale(pre))
}

/// F_α(x) or M_α(x) for 0 < α < 1 and x ≥ 0.
pub fn mainardi(kind: MainardiKind, alpha: f64, x: f64, ctrl: &SeriesControl) -> Result<EvalResult> {
    check_mainardi_alpha(alpha)?;
    check_nonnegative_x(x)?;
    if x == 0.0 {
        return Ok(match kind {
            MainardiKind::F => EvalResult::exact(0.0),
            MainardiKind::M => EvalResult::rounded(rgamma_raw(1.0 - alpha)),
        });
    }
    let series = match kind {
        MainardiKind::F => reflected_series(alpha, 1.0, 0.0, 1, false, x, ctrl),
        MainardiKind::M => reflected_series(alpha, alpha, alpha, 0, false, x, ctrl),
    };
    let sign = match kind {
        MainardiKind::F => -1.0 / PI,
        MainardiKind::M => 1.0 / PI,
    };
    match series {
        Ok(r) if !cancels(&r) => Ok(reflected_result(&r, sign)),
        Ok(_) | Err(Error::Overflow(_)) | Err(Error::NoConvergence { .. }) => {
            let m = mainardi_m_integral(alpha, x)?;
            Ok(match kind {
                MainardiKind::F => m.scale(alpha * x),
                MainardiKind::M => m,
            })
        }
        Err(e) => Err(e),
    }
}

/// F_{p/q}(x) or M_{p/q}(x) as a sum of q hypergeometric functions in
/// (−1)^{p+q} x^q p^p/q^q.
pub fn mainardi_rational(
    kind: MainardiKind,
    pq: RationalAlpha,
    x: f64,
    ctrl: &SeriesControl,
) -> Result<EvalResult> {
    check_mainardi_ratio(pq)?;
    check_nonnegative_x(x)?;
    let alpha = pq.value();
    if x == 0.0 {
        return mainardi(kind, alpha, x, ctrl);
    }
    let (p, q) = (pq.p(), pq.q());
    let (pf, qf) = (p as f64, q as f64);
    let sign_z = if (p + q) % 2 == 1 { -1.0 } else { 1.0 };
    let z = sign_z * x.powi(q as i32) * pf.powi(p as i32) / qf.powi(q as i32);
    let mut total = EvalResult::exact(0.0);
    for k in 1..=q {
        let kq = k as f64 / qf;
        let sn = sin_pi(pf * kq);
        if sn == 0.0 {
            continue;
        }
        let upper: Vec<f64> = (0..p).map(|j| kq + (j + 1) as f64 / pf).collect();
        let f = reduced_pfq(&upper, &c_list(q, k), z, ctrl)?;
        let (lg, _) = ln_gamma_signed(pf * kq + 1.0);
        let pre = (-x).powi(k as i32) / factorial(k) * lg.exp() * sn;
        total += f.scale(pre);
    }
    let f = padded(total.scale(-1.0 / PI));
    let r = match kind {
        MainardiKind::F => f,
        MainardiKind::M => f.scale(qf / (pf * x)),
    };
    r.check_finite("Mainardi p/q")
}

/// Fi_α or Mi_α for any 0 < α < 1 by the reflected power series.
pub fn integral_mainardi_series(
    kind: IntegralMainardiKind,
    alpha: f64,
    x: f64,
    ctrl: &SeriesControl,
) -> Result<EvalResult> {
    check_mainardi_alpha(alpha)?;
    check_nonnegative_x(x)?;
    if x == 0.0 {
        return Ok(EvalResult::exact(0.0));
    }
    let (r, sign) = match kind {
        IntegralMainardiKind::Fi => (reflected_series(alpha, 1.0, 0.0, 1, true, x, ctrl)?, -1.0 / PI),
        IntegralMainardiKind::Mi => (reflected_series(alpha, alpha, alpha, 1, true, x, ctrl)?, 1.0 / PI),
    };
    Ok(reflected_result(&r, sign))
}

/// Fi_{p/q}(x) or Mi_{p/q}(x) as a sum of q hypergeometric functions in
/// (−1)^{p+q} x^q p^p/q^q.
pub fn integral_mainardi(
    kind: IntegralMainardiKind,
    pq: RationalAlpha,
    x: f64,
    ctrl: &SeriesControl,
) -> Result<EvalResult> {
    check_mainardi_ratio(pq)?;
    check_nonnegative_x(x)?;
    if x == 0.0 {
        return Ok(EvalResult::exact(0.0));
    }
    let (p, q) = (pq.p(), pq.q());
    let (pf, qf) = (p as f64, q as f64);
    let sign_z = if (p + q) % 2 == 1 { -1.0 } else { 1.0 };
    let z = sign_z * x.powi(q as i32) * pf.powi(p as i32) / qf.powi(q as i32);
    let mut total = EvalResult::exact(0.0);
    for k in 1..=q {
        let kq = k as f64 / qf;
        // Γ and sin arguments, and the offset of the upper parameters.
        let (arg, offset) = match kind {
            IntegralMainardiKind::Fi => (pf * kq, kq + 1.0 / pf),
            IntegralMainardiKind::Mi => (pf * (k + 1) as f64 / qf, (k + 1) as f64 / qf),
        };
        let sn = sin_pi(arg);
        if sn == 0.0 {
            continue;
        }
        let mut upper = vec![kq];
        upper.extend((0..p).map(|j| offset + j as f64 / pf));
        let mut lower = vec![kq + 1.0];
        lower.extend(c_list(q, k));
        let f = reduced_pfq(&upper, &lower, z, ctrl)?;
        let g = match kind {
            IntegralMainardiKind::Fi => ln_gamma_signed(arg + 1.0).0,
            IntegralMainardiKind::Mi => ln_gamma_signed(arg).0,
        };
        let pre = (-x).powi(k as i32) / (k as f64 * factorial(k)) * g.exp() * sn;
        total += f.scale(pre);
    }
    let sign = match kind {
        IntegralMainardiKind::Fi => -1.0 / PI,
        IntegralMainardiKind::Mi => 1.0 / PI,
    };
    padded(total.scale(sign)).check_finite("integral Mainardi p/q")
}
