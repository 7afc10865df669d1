//! Whittaker functions M_{κ,μ}, W_{κ,μ} and the integral Whittaker functions
//!
//! ```text
//! Mi(x) = ∫₀^x M(t)/t dt    mi(x) = ∫ₓ^∞ M(t)/t dt
//! Wi(x) = ∫₀^x W(t)/t dt    wi(x) = ∫ₓ^∞ W(t)/t dt
//! ```

use std::f64::consts::PI;

use crate::elementary::{bessel_k, incomplete_gamma, is_nonpositive_integer, rgamma_raw, IncGammaKind};
use crate::error::{domain, invalid, Error, Result};
use crate::eval::{EvalResult, SeriesControl};
use crate::hypergeometric::{gauss_2f1_terminating, hyp};
use crate::quadrature::{integrate, integrate_tail, QuadControl};

const EPS: f64 = f64::EPSILON;
/// Beyond this abscissa `integral_mi` continues the series value by quadrature.
const MI_SERIES_LIMIT: f64 = 20.0;
const MI_MAX_TERMS: usize = 400;
/// Half-width of the symmetric μ-perturbation used for integer 2μ in Wi.
const DELTA: f64 = 1e-6;

/// Parameters (κ, μ) of the Whittaker functions.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct WhittakerParams {
    pub kappa: f64,
    pub mu: f64,
}

impl WhittakerParams {
    pub fn new(kappa: f64, mu: f64) -> Result<Self> {
        if !kappa.is_finite() || !mu.is_finite() {
            return Err(invalid(format!("non-finite Whittaker parameters κ = {kappa}, μ = {mu}")));
        }
        Ok(WhittakerParams { kappa, mu })
    }

    fn with_mu(self, mu: f64) -> Self {
        WhittakerParams { mu, ..self }
    }
}

fn check_x(x: f64) -> Result<()> {
    if !(x > 0.0) || !x.is_finite() {
        return Err(domain(format!("x must be finite and positive, got {x}")));
    }
    Ok(())
}

fn is_int(v: f64) -> bool {
    v == v.round()
}

fn close(a: f64, b: f64) -> bool {
    (a - b).abs() < 1e-14
}

fn m_pole(mu: f64) -> Result<()> {
    if is_nonpositive_integer(1.0 + 2.0 * mu) {
        return Err(invalid(format!("1 + 2μ is a non-positive integer for μ = {mu}")));
    }
    Ok(())
}

fn quad_accept<F: Fn(f64) -> f64>(f: F, a: f64, b: f64, ctrl: &QuadControl) -> Result<EvalResult> {
    match integrate(f, a, b, ctrl) {
        Ok(r) => Ok(r),
        Err(Error::ToleranceNotMet { value, est_error }) => Ok(EvalResult::new(value, est_error, 0)),
        Err(e) => Err(e),
    }
}

/// M_{κ,μ}(x) = x^{μ+1/2} e^{−x/2} ₁F₁(μ−κ+1/2; 1+2μ; x).
pub fn whittaker_m(params: &WhittakerParams, x: f64, ctrl: &SeriesControl) -> Result<EvalResult> {
    check_x(x)?;
    let (k, m) = (params.kappa, params.mu);
    m_pole(m)?;
    let f = hyp(&[m - k + 0.5], &[1.0 + 2.0 * m], x, ctrl)?;
    let pre = ((m + 0.5) * x.ln() - 0.5 * x).exp();
    let r = f.scale(pre);
    EvalResult::new(r.value, r.est_error + 4.0 * EPS * r.value.abs() * (1.0 + x), r.work).check_finite("M_{κ,μ}")
}

/// If W_{κ,μ} is x^{μ'+1/2}e^{−x/2} times a polynomial for μ' = ±μ, return
/// (n, μ') with U(−n, 1+2μ', x) the polynomial factor.
fn polynomial_case(k: f64, m: f64) -> Option<(u32, f64)> {
    [m, -m].into_iter().find_map(|mu| {
        let a = 0.5 + mu - k;
        if is_nonpositive_integer(a) && a > -1e6 {
            Some(((-a) as u32, mu))
        } else {
            None
        }
    })
}

/// (b)_n ₁F₁(−n; b; x) coefficients (−1)^n (b)_n (−n)_j/((b)_j j!) of x^j.
fn polynomial_coefficients(n: u32, b: f64) -> Vec<f64> {
    let mut lead = 1.0;
    for i in 0..n {
        lead *= b + i as f64;
    }
    if n % 2 == 1 {
        lead = -lead;
    }
    let mut c = Vec::with_capacity(n as usize + 1);
    let mut t = lead;
    for j in 0..=n {
        c.push(t);
        let jf = j as f64;
        t *= (jf - n as f64) / ((b + jf) * (jf + 1.0));
    }
    c
}

/// U(a, b, x) for a > 0 from ∫₀^∞ e^{−xt} t^{a−1} (1+t)^{b−a−1} dt / Γ(a).
fn kummer_u_integral(a: f64, b: f64, x: f64) -> Result<EvalResult> {
    let c = b - a - 1.0;
    let ctrl = QuadControl::with_tolerances(1e-300, 1e-13);
    let t1 = (1.0 / x).min(1.0);
    // Near the origin t = u^{1/a} removes the t^{a−1} singularity.
    let head = |u: f64| {
        let t = u.powf(1.0 / a);
        (-x * t + c * t.ln_1p()).exp() / a
    };
    let mut total = quad_accept(head, 0.0, t1.powf(a), &ctrl)?;
    let log_f = |t: f64| -x * t + (a - 1.0) * t.ln() + c * t.ln_1p();
    let f = |t: f64| log_f(t).exp();
    let mut peak = log_f(t1);
    let (mut lo, mut width) = (t1, t1);
    loop {
        let hi = lo + width;
        total += quad_accept(f, lo, hi, &ctrl)?;
        let here = log_f(hi);
        peak = peak.max(here);
        if here < peak - 40.0 && here < log_f(hi * 0.99) {
            break;
        }
        lo = hi;
        width *= 2.0;
        if hi > 1e8 {
            return Err(Error::NoConvergence { terms: total.work });
        }
    }
    let g = rgamma_raw(a);
    Ok(EvalResult::new(total.value * g, (total.est_error + 4.0 * EPS * total.value.abs()) * g, total.work))
}

/// U(a, b, x) for any real a: the integral for a > 0, otherwise the
/// downward three-term recurrence in a, which is stable for U.
fn kummer_u(a: f64, b: f64, x: f64) -> Result<EvalResult> {
    if a > 0.0 {
        return kummer_u_integral(a, b, x);
    }
    let steps = (-a).floor() as usize + 1;
    let top = a + steps as f64;
    let mut upper = kummer_u_integral(top + 1.0, b, x)?;
    let mut cur = kummer_u_integral(top, b, x)?;
    let mut aa = top;
    for _ in 0..steps {
        // U(a−1) = (2a − b + x) U(a) − a(a − b + 1) U(a+1)
        let next = (2.0 * aa - b + x) * cur.value - aa * (aa - b + 1.0) * upper.value;
        let est = (2.0 * aa - b + x).abs() * cur.est_error
            + (aa * (aa - b + 1.0)).abs() * upper.est_error
            + 4.0 * EPS * next.abs();
        upper = cur;
        cur = EvalResult::new(next, est, cur.work + upper.work);
        aa -= 1.0;
    }
    Ok(cur)
}

/// Γ(−2μ)/Γ(1/2−κ−μ) and Γ(2μ)/Γ(1/2−κ+μ).
fn w_weights(k: f64, m: f64) -> (f64, f64) {
    let g = |v: f64| 1.0 / rgamma_raw(v);
    (g(-2.0 * m) * rgamma_raw(0.5 - k - m), g(2.0 * m) * rgamma_raw(0.5 - k + m))
}

/// W_{κ,μ}(x), the solution recessive at infinity.
///
/// Elementary and polynomial cases are taken exactly and κ = 0 goes through
/// K_μ. Otherwise small x with 2μ ∉ ℤ uses the M-combination and everything
/// else the integral representation of Tricomi's U.
pub fn whittaker_w(params: &WhittakerParams, x: f64, ctrl: &SeriesControl) -> Result<EvalResult> {
    check_x(x)?;
    let (k, m) = (params.kappa, params.mu.abs());
    if close(k - 0.5, m) {
        let v = (k * x.ln() - 0.5 * x).exp();
        return EvalResult::rounded(v).check_finite("W_{κ,μ}");
    }
    let lnpre = |mu: f64| (mu + 0.5) * x.ln() - 0.5 * x;
    if let Some((n, mu)) = polynomial_case(k, m) {
        let coef = polynomial_coefficients(n, 1.0 + 2.0 * mu);
        let (mut s, mut mag) = (0.0, 0.0);
        for c in coef.iter().rev() {
            s = s * x + c;
            mag = mag * x + c.abs();
        }
        let pre = lnpre(mu).exp();
        return EvalResult::new(s * pre, 4.0 * EPS * (n as f64 + 1.0) * mag * pre, n as usize + 1)
            .check_finite("W_{κ,μ}");
    }
    if k == 0.0 {
        let r = bessel_k(m, 0.5 * x)?;
        return Ok(r.scale((x / PI).sqrt()));
    }
    if !is_int(2.0 * m) && x <= 5.0 {
        let (w1, w2) = w_weights(k, m);
        let m1 = whittaker_m(&params.with_mu(m), x, ctrl)?;
        let m2 = whittaker_m(&params.with_mu(-m), x, ctrl)?;
        let a = m1.scale(w1);
        let b = m2.scale(w2);
        let v = a.value + b.value;
        let est = a.est_error + b.est_error + 4.0 * EPS * (a.value.abs() + b.value.abs());
        return EvalResult::new(v, est, a.work + b.work).check_finite("W_{κ,μ}");
    }
    let u = kummer_u(0.5 + m - k, 1.0 + 2.0 * m, x)?;
    let pre = lnpre(m).exp();
    EvalResult::new(u.value * pre, (u.est_error + 4.0 * EPS * u.value.abs()) * pre, u.work).check_finite("W_{κ,μ}")
}

/// Mi_{κ,μ}(x) by the alternating series with ₂F₁(−n, μ−κ+1/2; 1+2μ; 2)
/// coefficients.
fn mi_series(k: f64, m: f64, x: f64) -> Result<EvalResult> {
    let b = m - k + 0.5;
    let c = 1.0 + 2.0 * m;
    let h = -0.5 * x;
    let mut sum = 0.0;
    let mut mag: f64 = 0.0;
    let mut power = 1.0; // (−x/2)^n/n!
    let mut small = 0;
    for n in 0..MI_MAX_TERMS {
        let coef = gauss_2f1_terminating(n as u32, b, c, 2.0)?.value;
        let t = coef * power / (0.5 + m + n as f64);
        sum += t;
        mag = mag.max(t.abs());
        if (n as f64) > x.abs() && (t.abs() <= 1e-17 * sum.abs() || t == 0.0) {
            small += 1;
            if small >= 3 {
                let pre = ((m + 0.5) * x.ln()).exp();
                let est = (t.abs() + 4.0 * EPS * mag * (n as f64).sqrt()) * pre;
                return Ok(EvalResult::new(sum * pre, est, n + 1));
            }
        } else {
            small = 0;
        }
        power *= h / (n as f64 + 1.0);
    }
    Err(Error::NoConvergence { terms: MI_MAX_TERMS })
}

fn mi_precondition(m: f64) -> Result<()> {
    if !(m > -0.5) {
        return Err(invalid(format!("Mi needs μ > −1/2 for t^(μ−1/2) to be integrable at 0, got μ = {m}")));
    }
    Ok(())
}

/// Mi_{κ,μ}(x) = ∫₀^x M_{κ,μ}(t)/t dt.
///
/// For x beyond 20 the series value at 20 is continued by quadrature, since
/// the alternating series loses digits as x grows.
pub fn integral_mi(params: &WhittakerParams, x: f64, ctrl: &SeriesControl) -> Result<EvalResult> {
    check_x(x)?;
    let (k, m) = (params.kappa, params.mu);
    mi_precondition(m)?;
    if close(k - 0.5, m) {
        return lower_gamma_form(k, x);
    }
    if x <= MI_SERIES_LIMIT {
        return mi_series(k, m, x);
    }
    let head = mi_series(k, m, MI_SERIES_LIMIT)?;
    let f = |t: f64| whittaker_m(params, t, ctrl).map_or(f64::NAN, |r| r.value) / t;
    let qc = QuadControl::with_tolerances(1e-300, 1e-13);
    let body = quad_accept(f, MI_SERIES_LIMIT, x, &qc)?;
    Ok(head + body)
}

/// 2^κ γ(κ, x/2)
fn lower_gamma_form(k: f64, x: f64) -> Result<EvalResult> {
    if !(k > 0.0) {
        return Err(Error::DivergentIntegral(format!("t^(κ−1) is not integrable at 0 for κ = {k}")));
    }
    Ok(incomplete_gamma(IncGammaKind::Lower, k, 0.5 * x)?.scale(k.exp2()))
}

/// x^{μ+1/2}/(μ+1/2) · [₁F₂(μ/2+1/4; μ+1/2, μ/2+5/4; x²/16) ∓ (x/2)/(2μ+3) ₁F₂(μ/2+3/4; μ+3/2, μ/2+7/4; x²/16)]
fn mi_half_kappa(sign: f64, m: f64, x: f64) -> Result<EvalResult> {
    let c = SeriesControl::default();
    let z = x * x / 16.0;
    let f1 = hyp(&[0.5 * m + 0.25], &[m + 0.5, 0.5 * m + 1.25], z, &c)?;
    let f2 = hyp(&[0.5 * m + 0.75], &[m + 1.5, 0.5 * m + 1.75], z, &c)?.scale(-sign * 0.5 * x / (2.0 * m + 3.0));
    let pre = ((m + 0.5) * x.ln()).exp() / (m + 0.5);
    let v = (f1.value + f2.value) * pre;
    let est = (f1.est_error + f2.est_error + 4.0 * EPS * (f1.value.abs() + f2.value.abs())) * pre.abs();
    Ok(EvalResult::new(v, est, f1.work + f2.work))
}

/// x^{μ+1/2}/(μ+1/2) ₁F₂((2μ+1)/4; μ+1, (2μ+5)/4; x²/16)
fn mi_zero_kappa(m: f64, x: f64) -> Result<EvalResult> {
    let c = SeriesControl::default();
    let f = hyp(&[(2.0 * m + 1.0) / 4.0], &[m + 1.0, (2.0 * m + 5.0) / 4.0], x * x / 16.0, &c)?;
    let pre = ((m + 0.5) * x.ln()).exp() / (m + 0.5);
    Ok(EvalResult::new(f.value * pre, (f.est_error + 2.0 * EPS * f.value.abs()) * pre.abs(), f.work))
}

/// Closed forms of Mi_{κ,μ}: the ₁F₂ forms for κ ∈ {0, ±1/2} and the
/// incomplete-gamma form for κ = μ + 1/2.
pub fn integral_mi_reference(params: &WhittakerParams, x: f64) -> Result<EvalResult> {
    check_x(x)?;
    let (k, m) = (params.kappa, params.mu);
    mi_precondition(m)?;
    if close(k - 0.5, m) {
        lower_gamma_form(k, x)
    } else if k == 0.0 {
        mi_zero_kappa(m, x)
    } else if close(k.abs(), 0.5) {
        mi_half_kappa(k.signum(), m, x)
    } else {
        Err(Error::Unsupported(format!("no closed form registered for Mi_{{{k},{m}}}")))
    }
}

fn mi_best(k: f64, m: f64, x: f64, ctrl: &SeriesControl) -> Result<EvalResult> {
    let p = WhittakerParams { kappa: k, mu: m };
    if k == 0.0 || close(k.abs(), 0.5) {
        integral_mi_reference(&p, x)
    } else {
        integral_mi(&p, x, ctrl)
    }
}

fn wi_combination(k: f64, m: f64, x: f64, ctrl: &SeriesControl) -> Result<EvalResult> {
    let (w1, w2) = w_weights(k, m);
    let a = mi_best(k, m, x, ctrl)?.scale(w1);
    let b = mi_best(k, -m, x, ctrl)?.scale(w2);
    let v = a.value + b.value;
    Ok(EvalResult::new(v, a.est_error + b.est_error + 4.0 * EPS * (a.value.abs() + b.value.abs()), a.work + b.work))
}

/// Wi_{κ,μ}(x) = ∫₀^x W_{κ,μ}(t)/t dt.
///
/// The integral exists when |μ| < 1/2, or when W reduces to t^{μ'+1/2}e^{−t/2}
/// times a polynomial with μ' > −1/2. For μ = 0 the combination is averaged
/// over μ = ±10⁻⁶.
pub fn integral_wi(params: &WhittakerParams, x: f64, ctrl: &SeriesControl) -> Result<EvalResult> {
    check_x(x)?;
    let (k, m) = (params.kappa, params.mu.abs());
    if close(k - 0.5, m) {
        return lower_gamma_form(k, x);
    }
    if let Some((n, mu)) = polynomial_case(k, m).filter(|&(_, mu)| mu > -0.5).or_else(|| {
        // the other sign may also give a polynomial
        polynomial_case(k, -m).filter(|&(_, mu)| mu > -0.5)
    }) {
        let coef = polynomial_coefficients(n, 1.0 + 2.0 * mu);
        let mut total = EvalResult::exact(0.0);
        for (j, c) in coef.iter().enumerate() {
            let s = mu + 0.5 + j as f64;
            let g = incomplete_gamma(IncGammaKind::Lower, s, 0.5 * x)?;
            total += g.scale(c * s.exp2());
        }
        return Ok(total);
    }
    if m >= 0.5 {
        return Err(Error::DivergentIntegral(format!(
            "W_{{{k},{m}}}(t)/t behaves like t^(−1/2−|μ|) at 0 and is not integrable"
        )));
    }
    if m == 0.0 {
        let a = wi_combination(k, DELTA, x, ctrl)?;
        let b = wi_combination(k, -DELTA, x, ctrl)?;
        let v = 0.5 * (a.value + b.value);
        let est = 0.5 * (a.est_error + b.est_error) + (a.value - b.value).abs() * DELTA + DELTA * DELTA * v.abs();
        return Ok(EvalResult::new(v, est, a.work + b.work));
    }
    wi_combination(k, m, x, ctrl)
}

/// Coefficients of the polynomial P with M_{κ,μ}(t) = t^{μ+1/2}e^{−t/2}P(t)
/// when μ − κ + 1/2 = −n.
fn m_polynomial(k: f64, m: f64) -> Option<Vec<f64>> {
    let a = m - k + 0.5;
    if !is_nonpositive_integer(a) {
        return None;
    }
    let n = (-a) as u32;
    let b = 1.0 + 2.0 * m;
    let mut c = Vec::with_capacity(n as usize + 1);
    let mut t = 1.0;
    for j in 0..=n {
        c.push(t);
        let jf = j as f64;
        t *= (jf - n as f64) / ((b + jf) * (jf + 1.0));
    }
    Some(c)
}

/// Upper bound for ln|t^{p} e^{−t/2} Σ c_j t^j| that is non-increasing.
fn envelope(p: f64, coef_abs_sum: f64, degree: f64) -> impl Fn(f64) -> f64 {
    let a = p + degree;
    move |t: f64| {
        let te = t.max(2.0 * a).max(1.0);
        coef_abs_sum.max(1.0).ln() + a * te.ln() - 0.5 * te
    }
}

/// mi_{κ,μ}(x) = ∫ₓ^∞ M_{κ,μ}(t)/t dt.
///
/// Converges only when M decays, which needs κ − μ − 1/2 ∈ {0, 1, 2, ...}.
pub fn integral_mi_tail(params: &WhittakerParams, x: f64, qctrl: &QuadControl) -> Result<EvalResult> {
    check_x(x)?;
    qctrl.validate()?;
    let (k, m) = (params.kappa, params.mu);
    m_pole(m)?;
    let coef = m_polynomial(k, m).ok_or_else(|| {
        Error::DivergentIntegral(format!(
            "M_{{{k},{m}}} grows like e^(t/2); the tail integral needs κ − μ − 1/2 to be a non-negative integer"
        ))
    })?;
    let p = m - 0.5;
    let deg = (coef.len() - 1) as f64;
    let s: f64 = coef.iter().map(|c| c.abs()).sum();
    let f = |t: f64| {
        let poly = coef.iter().rev().fold(0.0, |acc, c| acc * t + c);
        ((m + 0.5) * t.ln() - 0.5 * t).exp() * poly
    };
    integrate_tail(f, x, envelope(p, s, deg), qctrl)
}

/// wi_{κ,μ}(x) = ∫ₓ^∞ W_{κ,μ}(t)/t dt.
pub fn integral_wi_tail(params: &WhittakerParams, x: f64, qctrl: &QuadControl) -> Result<EvalResult> {
    check_x(x)?;
    qctrl.validate()?;
    let (k, m) = (params.kappa, params.mu);
    let ctrl = SeriesControl::default();
    // W ~ t^κ e^{−t/2}(1 + O(1/t)); the constant leaves room for the correction.
    let c = 10.0 * (1.0 + ((0.5 + m - k) * (0.5 - m - k)).abs());
    let f = |t: f64| whittaker_w(params, t, &ctrl).map_or(f64::NAN, |r| r.value);
    integrate_tail(f, x, envelope(k - 1.0, c, 0.0), qctrl)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::elementary::{bessel_i, e1, erf, erfc, shi};
    use proptest::prelude::*;

    fn rel(a: f64, b: f64) -> f64 {
        ((a - b) / b).abs()
    }

    fn p(k: f64, m: f64) -> WhittakerParams {
        WhittakerParams::new(k, m).unwrap()
    }

    fn c() -> SeriesControl {
        SeriesControl::default()
    }

    fn wm(k: f64, m: f64, x: f64) -> f64 {
        whittaker_m(&p(k, m), x, &c()).unwrap().value
    }

    fn ww(k: f64, m: f64, x: f64) -> f64 {
        whittaker_w(&p(k, m), x, &c()).unwrap().value
    }

    const XS: [f64; 4] = [0.5, 1.3, 2.7, 5.5];

    #[test]
    fn m_closed_forms() {
        for &x in &XS {
            let i0 = bessel_i(0.0, x / 2.0).unwrap().value;
            let i1 = bessel_i(1.0, x / 2.0).unwrap().value;
            assert!(rel(wm(0.0, 0.5, x), 2.0 * (x / 2.0).sinh()) < 1e-13);
            assert!(rel(wm(0.5, 0.0, x), x.sqrt() * (-x / 2.0).exp()) < 1e-13);
            assert!(rel(wm(-0.5, 0.5, x), x * (i0 + i1)) < 1e-12);
            assert!(rel(wm(0.5, 0.5, x), x * (i0 - i1)) < 1e-12);
            assert!(rel(wm(0.0, 1.5, x), 12.0 * ((x / 2.0).cosh() - 2.0 / x * (x / 2.0).sinh())) < 1e-12);
            assert!(rel(wm(1.5, 0.0, x), -x.sqrt() * (-x / 2.0).exp() * (x - 1.0)) < 1e-13);
            assert!(rel(wm(0.25, -1.25, x), x.powf(-0.75) * (-x / 2.0).exp() * (2.0 * x / 3.0 + 1.0)) < 1e-13);
        }
        // leading behaviour x^{μ+1/2}
        let x = 1e-9;
        assert!(rel(wm(0.7, 0.3, x) / x.powf(0.8), 1.0) < 1e-8);
        assert!(matches!(whittaker_m(&p(0.0, -1.0), 1.0, &c()), Err(Error::InvalidParams(_))));
    }

    #[test]
    fn w_closed_forms() {
        for &x in &XS {
            let e = (-x / 2.0).exp();
            assert!(rel(ww(0.0, 0.5, x), e) < 1e-13);
            assert!(rel(ww(0.0, 1.5, x), e * (1.0 + 2.0 / x)) < 1e-12);
            assert!(rel(ww(0.0, 2.5, x), e * (1.0 + 6.0 / x + 12.0 / (x * x))) < 1e-12);
            assert!(rel(ww(-0.5, 0.0, x), x.sqrt() * (x / 2.0).exp() * e1(x).unwrap().value) < 1e-11);
            assert!(rel(ww(2.0, 0.5, x), x * (x - 2.0) * e) < 1e-13);
            assert!(rel(ww(4.0, 1.5, x), e * x * x * (x * x - 10.0 * x + 20.0)) < 1e-12);
            assert!(rel(ww(-0.5, 2.0, x), x.powf(-1.5) * e * (x + 3.0)) < 1e-11);
            assert!(rel(ww(0.75, 0.75, x), x.powf(-0.25) * e * (2.0 * x + 1.0) / 2.0) < 1e-11);
            let g = incomplete_gamma(IncGammaKind::Upper, 2.0, x).unwrap().value;
            assert!(rel(ww(0.5, 1.0, x), x.powf(-0.5) * (x / 2.0).exp() * g) < 1e-11);
            let g = incomplete_gamma(IncGammaKind::Upper, 0.5, x).unwrap().value;
            assert!(rel(ww(-0.25, 0.25, x), x.powf(0.25) * (x / 2.0).exp() * g) < 1e-11);
        }
    }

    #[test]
    fn w_paths_agree() {
        // combination (x ≤ 5) against the U integral for the same point
        for &(k, m) in &[(0.3, 0.2), (-1.2, 0.7), (2.3, 0.3), (1.1, 1.35)] {
            for &x in &[0.7, 3.0, 4.9] {
                let comb = ww(k, m, x);
                let u = kummer_u(0.5 + m - k, 1.0 + 2.0 * m, x).unwrap().value
                    * ((m + 0.5) * x.ln() - 0.5 * x).exp();
                assert!(rel(comb, u) < 1e-10, "κ={k} μ={m} x={x}: {comb} vs {u}");
            }
        }
    }

    #[test]
    fn recurrences() {
        let mut worst: f64 = 0.0;
        for &(k, m) in &[(0.3, 0.7), (-0.4, 1.3), (1.7, 0.9), (0.0, 2.2), (2.2, 0.55)] {
            for &t in &[0.4, 1.5, 3.0, 7.5] {
                let lhs = 2.0 * m * (wm(k - 0.5, m - 0.5, t) - wm(k + 0.5, m - 0.5, t));
                let rhs = t.sqrt() * wm(k, m, t);
                worst = worst.max(rel(lhs, rhs));
            }
        }
        assert!(worst < 1e-10, "{worst}");
        let mut worst: f64 = 0.0;
        for &(k, m) in &[(0.3, 0.2), (-0.4, 0.65), (1.7, 0.15), (0.9, 1.3)] {
            for &t in &[0.4, 1.5, 3.0, 7.5] {
                let lhs = (k + m) * ww(k - 0.5, m, t) + ww(k + 0.5, m, t);
                let rhs = t.sqrt() * ww(k, m + 0.5, t);
                worst = worst.max(rel(lhs, rhs));
            }
        }
        assert!(worst < 1e-10, "{worst}");
    }

    #[test]
    fn mi_against_quadrature() {
        let q = QuadControl::with_tolerances(1e-300, 1e-13);
        for &(k, m) in &[(0.0, 0.5), (1.5, 1.0), (-0.5, 1.0), (1.0, 0.5), (0.3, 0.8)] {
            for &x in &[0.5, 2.0, 5.0, 12.0, 20.0] {
                let oracle = integrate(|t| wm(k, m, t) / t, 0.0, x, &q).unwrap().value;
                let v = integral_mi(&p(k, m), x, &c()).unwrap().value;
                assert!(rel(v, oracle) < 1e-8, "κ={k} μ={m} x={x}");
            }
        }
    }

    #[test]
    fn mi_beyond_series_limit() {
        let x: f64 = 35.0;
        let v = integral_mi(&p(0.0, 0.5), x, &c()).unwrap().value;
        assert!(rel(v, 2.0 * shi(x / 2.0).unwrap().value) < 1e-10);
        let v = integral_mi(&p(2.0, 1.5), x, &c()).unwrap().value;
        assert!(rel(v, 4.0 - 2.0 * (2.0 + x) * (-x / 2.0).exp()) < 1e-10);
    }

    #[test]
    fn reduction_chain() {
        for &k in &[0.5f64, 1.0, 1.5, 2.0] {
            for &x in &[0.5, 2.0, 6.0] {
                let want = k.exp2() * incomplete_gamma(IncGammaKind::Lower, k, x / 2.0).unwrap().value;
                let prm = p(k, k - 0.5);
                let m = whittaker_m(&prm, x, &c()).unwrap().value;
                let w = whittaker_w(&prm, x, &c()).unwrap().value;
                let w2 = whittaker_w(&p(k, 0.5 - k), x, &c()).unwrap().value;
                let e = x.powf(k) * (-x / 2.0).exp();
                assert!(rel(m, e) < 1e-11 && rel(w, e) < 1e-11 && rel(w2, e) < 1e-11);
                let mi = integral_mi(&prm, x, &c()).unwrap().value;
                let wi = integral_wi(&prm, x, &c()).unwrap().value;
                let wi2 = integral_wi(&p(k, 0.5 - k), x, &c()).unwrap().value;
                assert!(rel(mi, want) < 1e-11 && rel(wi, want) < 1e-11 && rel(wi2, want) < 1e-11);
                // the alternating series reaches the same value
                let s = mi_series(k, k - 0.5, x).unwrap().value;
                assert!(rel(s, want) < 1e-11, "κ={k} x={x}");
            }
        }
    }

    #[test]
    fn closed_form_mi() {
        for &m in &[0.3, 1.25, 2.0, -0.2] {
            for &x in &[0.5, 3.0, 8.0] {
                for &k in &[0.0, 0.5, -0.5] {
                    let r = integral_mi_reference(&p(k, m), x).unwrap().value;
                    let s = integral_mi(&p(k, m), x, &c()).unwrap().value;
                    assert!(rel(r, s) < 1e-10, "κ={k} μ={m} x={x}: {r} vs {s}");
                }
            }
        }
        assert!(matches!(integral_mi_reference(&p(0.7, 0.1), 1.0), Err(Error::Unsupported(_))));
    }

    #[test]
    fn wi_table_values() {
        let s2p = (2.0 * PI).sqrt();
        for &x in &[0.5f64, 1.0, 2.0, 5.0] {
            let e = (-x / 2.0).exp();
            let r = (x / 2.0).sqrt();
            let wi = |k, m| integral_wi(&p(k, m), x, &c()).unwrap().value;
            assert!(rel(wi(0.5, 0.0), s2p * erf(r).value) < 1e-9);
            assert!(rel(wi(1.0, 0.5), 2.0 * (1.0 - e)) < 1e-13);
            assert!(rel(wi(1.0, -0.5), 2.0 * (1.0 - e)) < 1e-13);
            assert!(rel(wi(2.0, 1.5), 4.0 - 2.0 * (2.0 + x) * e) < 1e-12);
            assert!(rel(wi(1.5, 0.0), -2.0 * x.sqrt() * e) < 1e-12);
            assert!(rel(wi(2.0, 0.5), -2.0 * x * e) < 1e-12);
            assert!(rel(wi(4.0, 1.5), 16.0 - 2.0 * (8.0 + x * (x - 2.0).powi(2)) * e) < 1e-12);
            assert!(rel(wi(2.5, 0.0), s2p * erf(r).value - 2.0 * x.sqrt() * (x - 1.0) * e) < 1e-11);
        }
        assert!(matches!(integral_wi(&p(0.3, 1.2), 1.0, &c()), Err(Error::DivergentIntegral(_))));
    }

    #[test]
    fn wi_against_quadrature() {
        // |μ| < 1/2: t = u^{1/(1/2−|μ|)} removes the t^{−1/2−|μ|} singularity of W(t)/t
        let q = QuadControl::with_tolerances(1e-300, 1e-11);
        for &(k, m) in &[(0.3, 0.2), (-0.7, 0.35), (1.2, 0.1), (0.0, 0.25)] {
            for &x in &[0.5f64, 2.0, 5.0] {
                let pw = 1.0 / (0.5 - m);
                let f = |u: f64| pw * ww(k, m, u.powf(pw)) / u;
                let oracle = quad_accept(f, 0.0, x.powf(1.0 / pw), &q).unwrap().value;
                let v = integral_wi(&p(k, m), x, &c()).unwrap().value;
                assert!(rel(v, oracle) < 1e-7, "κ={k} μ={m} x={x}: {v} vs {oracle}");
            }
        }
    }

    #[test]
    fn tails() {
        let q = QuadControl::default();
        let s2p = (2.0 * PI).sqrt();
        for &x in &[0.5f64, 1.0, 2.0, 5.0] {
            let e = (-x / 2.0).exp();
            let r = (x / 2.0).sqrt();
            let mi = |k, m| integral_mi_tail(&p(k, m), x, &q).unwrap().value;
            assert!(rel(mi(1.0, 0.5), 2.0 * e) < 1e-9);
            assert!(rel(mi(2.0, 0.5), -x * e) < 1e-9);
            assert!(rel(mi(0.5, 0.0), s2p * erfc(r).value) < 1e-9);
            assert!(rel(mi(4.0, 1.5), (8.0 + (x - 2.0).powi(2) * x) * e / 10.0) < 1e-9);
            let wi = |k, m| integral_wi_tail(&p(k, m), x, &q).unwrap().value;
            assert!(rel(wi(0.5, 0.0), s2p * erfc(r).value) < 1e-9);
            assert!(rel(wi(0.0, -0.5), e1(x / 2.0).unwrap().value) < 1e-9);
            assert!(rel(wi(-0.5, 2.0), 2.0 * x.powf(-1.5) * e) < 1e-9);
            assert!(rel(wi(1.0, 2.5), 2.0 / (x * x) * (6.0 + x * (6.0 + x)) * e) < 1e-9);
        }
        assert!(matches!(integral_mi_tail(&p(0.0, 0.5), 1.0, &q), Err(Error::DivergentIntegral(_))));
        let far = integral_wi_tail(&p(0.7, 0.3), 50.0, &q).unwrap().value;
        assert!(far.abs() < (-20.0f64).exp());
    }

    #[test]
    fn integrated_recurrence() {
        let q = QuadControl::with_tolerances(1e-300, 1e-13);
        for &(k, m) in &[(0.3, 1.2), (-0.5, 1.0), (1.0, 0.75)] {
            for &x in &[0.5, 2.0, 6.0] {
                let lhs = integrate(|t| wm(k, m, t) / t.sqrt(), 0.0, x, &q).unwrap().value;
                let rhs = 2.0
                    * m
                    * (integral_mi(&p(k - 0.5, m - 0.5), x, &c()).unwrap().value
                        - integral_mi(&p(k + 0.5, m - 0.5), x, &c()).unwrap().value);
                assert!(rel(lhs, rhs) < 1e-7, "κ={k} μ={m} x={x}");
            }
        }
    }

    proptest! {
        #[test]
        fn w_is_even_in_mu(k in -1.5f64..2.5, m in 0.05f64..2.0, x in 0.2f64..12.0) {
            prop_assume!((2.0 * m - (2.0 * m).round()).abs() > 0.02);
            let a = ww(k, m, x);
            let b = ww(k, -m, x);
            prop_assert!(rel(a, b) < 1e-9 || (a - b).abs() < 1e-280);
        }

        #[test]
        fn wi_is_even_in_mu(k in -1.0f64..1.5, m in 0.05f64..0.45, x in 0.2f64..8.0) {
            let a = integral_wi(&p(k, m), x, &c()).unwrap().value;
            let b = integral_wi(&p(k, -m), x, &c()).unwrap().value;
            prop_assert!(rel(a, b) < 1e-9);
        }
    }
}
