//! Exponential, sine/cosine and hyperbolic sine/cosine integrals.

use std::f64::consts::FRAC_PI_2;

use num_complex::Complex64;

use crate::error::{domain, Error, Result};
use crate::eval::EvalResult;
use crate::EULER_GAMMA;

const EPS: f64 = f64::EPSILON;
const MAX_ITER: usize = 5_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExpIntKind {
    E1,
    Ei,
}

pub fn exp_integrals(which: ExpIntKind, x: f64) -> Result<EvalResult> {
    match which {
        ExpIntKind::E1 => e1(x),
        ExpIntKind::Ei => ei(x),
    }
}

/// E₁(x) = ∫ₓ^∞ e^{−t}/t dt.
pub fn e1(x: f64) -> Result<EvalResult> {
    if !(x > 0.0) {
        return Err(domain(format!("E1 needs x > 0, got {x}")));
    }
    if x <= 1.0 {
        // −γ − ln x − Σ (−x)^k/(k·k!)
        let mut term = 1.0;
        let mut sum = 0.0;
        let mut mag = 0.0;
        for k in 1..MAX_ITER {
            term *= -x / k as f64;
            let t = term / k as f64;
            sum += t;
            mag += t.abs();
            if t.abs() < EPS * sum.abs() * 0.1 {
                let v = -EULER_GAMMA - x.ln() - sum;
                let err = EPS * (mag + EULER_GAMMA + x.ln().abs() + v.abs());
                return Ok(EvalResult::new(v, err, k));
            }
        }
        return Err(Error::NoConvergence { terms: MAX_ITER });
    }
    let tiny = 1e-300;
    let mut b = x + 1.0;
    let mut c = 1.0 / tiny;
    let mut d = 1.0 / b;
    let mut h = d;
    for i in 1..MAX_ITER {
        let an = -((i * i) as f64);
        b += 2.0;
        d = 1.0 / (an * d + b);
        c = b + an / c;
        let del = c * d;
        h *= del;
        if (del - 1.0).abs() < 2.0 * EPS {
            let v = h * (-x).exp();
            return Ok(EvalResult::new(v, 4.0 * EPS * v.abs() * (1.0 + x.ln()), i));
        }
    }
    Err(Error::NoConvergence { terms: MAX_ITER })
}

/// Ei(x) for x > 0 (principal value).
pub fn ei(x: f64) -> Result<EvalResult> {
    if !(x > 0.0) {
        return Err(domain(format!("Ei needs x > 0, got {x}")));
    }
    if x > 709.0 {
        return Err(Error::Overflow(format!("Ei({x}) exceeds the double range")));
    }
    if x > 50.0 {
        // e^x/x Σ k!/x^k, truncated at the smallest term
        let mut term = 1.0;
        let mut sum = 1.0;
        let mut k = 1;
        loop {
            let next = term * k as f64 / x;
            if next >= term || next < EPS * sum * 0.1 {
                break;
            }
            term = next;
            sum += term;
            k += 1;
        }
        let v = x.exp() / x * sum;
        return Ok(EvalResult::new(v, 4.0 * EPS * v, k));
    }
    let (s, n) = ein_series(x, 1)?;
    let v = EULER_GAMMA + x.ln() + s;
    Ok(EvalResult::new(v, EPS * (4.0 * s.abs() + 1.0 + x.ln().abs()), n))
}

/// Σ_{k ≥ start, step 2 if parity-split} x^k/(k·k!) with positive terms.
/// `step` 1 sums every k ≥ 1; `step` 2 sums k ≡ start (mod 2).
fn ein_series(x: f64, step: usize) -> Result<(f64, usize)> {
    ein_series_from(x, 1, step)
}

fn ein_series_from(x: f64, start: usize, step: usize) -> Result<(f64, usize)> {
    // term_k = x^k/k!; keep it in a running product.
    let mut pow_fact = 1.0;
    let mut sum = 0.0;
    let mut k = 0usize;
    let mut n = 0;
    while k < MAX_ITER {
        k += 1;
        pow_fact *= x / k as f64;
        if k < start || !(k - start).is_multiple_of(step) {
            continue;
        }
        let t = pow_fact / k as f64;
        sum += t;
        n += 1;
        if k as f64 > x && t < EPS * sum * 0.05 {
            return Ok((sum, n));
        }
    }
    Err(Error::NoConvergence { terms: MAX_ITER })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TrigIntKind {
    Si,
    /// si(x) = Si(x) − π/2.
    SiShifted,
    Ci,
}

pub fn trig_integrals(which: TrigIntKind, x: f64) -> Result<EvalResult> {
    match which {
        TrigIntKind::Si => si(x),
        TrigIntKind::SiShifted => si(x).map(|r| EvalResult::new(r.value - FRAC_PI_2, r.est_error + EPS, r.work)),
        TrigIntKind::Ci => ci(x),
    }
}

/// Sine integral Si(x) for x ≥ 0.
pub fn si(x: f64) -> Result<EvalResult> {
    if !(x >= 0.0) {
        return Err(domain(format!("Si needs x >= 0, got {x}")));
    }
    if x == 0.0 {
        return Ok(EvalResult::exact(0.0));
    }
    if x <= 2.0 {
        let (s, _, n) = sici_series(x);
        return Ok(EvalResult::new(s, 4.0 * EPS * s.abs(), n));
    }
    let (s, _, n) = sici_fraction(x)?;
    Ok(EvalResult::new(s, 8.0 * EPS * s.abs(), n))
}

/// Cosine integral Ci(x) for x > 0.
pub fn ci(x: f64) -> Result<EvalResult> {
    if !(x > 0.0) {
        return Err(domain(format!("Ci needs x > 0, got {x}")));
    }
    if x <= 2.0 {
        let (_, c, n) = sici_series(x);
        let err = EPS * (4.0 + x.ln().abs() + c.abs());
        return Ok(EvalResult::new(c, err, n));
    }
    let (_, c, n) = sici_fraction(x)?;
    Ok(EvalResult::new(c, 8.0 * EPS * (c.abs() + 1.0 / x), n))
}

/// Maclaurin series for Si and Ci, small x.
fn sici_series(x: f64) -> (f64, f64, usize) {
    let x2 = x * x;
    let mut s = 0.0;
    let mut c = 0.0;
    // term = (−1)^k x^{n}/n!, n running over 1, 2, 3, ...
    let mut term = 1.0;
    let mut n = 0;
    loop {
        n += 1;
        term *= x / n as f64;
        if n % 2 == 1 {
            let sign = if (n / 2) % 2 == 0 { 1.0 } else { -1.0 };
            s += sign * term / n as f64;
        } else {
            let sign = if (n / 2) % 2 == 1 { -1.0 } else { 1.0 };
            c += sign * term / n as f64;
        }
        if n > 4 && term < EPS * 1e-2 * x2.min(1.0) {
            break;
        }
    }
    (s, EULER_GAMMA + x.ln() + c, n)
}

/// Complex continued fraction for E₁(ix), giving Si and Ci for x > 2.
fn sici_fraction(x: f64) -> Result<(f64, f64, usize)> {
    let mut b = Complex64::new(1.0, x);
    let mut c = Complex64::new(1e300, 0.0);
    let mut d = Complex64::new(1.0, 0.0) / b;
    let mut h = d;
    for i in 2..MAX_ITER {
        let a = -(((i - 1) * (i - 1)) as f64);
        b += 2.0;
        d = Complex64::new(1.0, 0.0) / (d * a + b);
        c = b + c.inv() * a;
        let del = c * d;
        h *= del;
        if (del.re - 1.0).abs() + del.im.abs() < 4.0 * EPS {
            let h = Complex64::new(x.cos(), -x.sin()) * h;
            return Ok((FRAC_PI_2 + h.im, -h.re, i));
        }
    }
    Err(Error::NoConvergence { terms: MAX_ITER })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum HypIntKind {
    Shi,
    Chi,
}

pub fn hyp_integrals(which: HypIntKind, x: f64) -> Result<EvalResult> {
    match which {
        HypIntKind::Shi => shi(x),
        HypIntKind::Chi => chi(x),
    }
}

/// Hyperbolic sine integral Shi(x) for x ≥ 0.
pub fn shi(x: f64) -> Result<EvalResult> {
    if !(x >= 0.0) {
        return Err(domain(format!("Shi needs x >= 0, got {x}")));
    }
    if x == 0.0 {
        return Ok(EvalResult::exact(0.0));
    }
    if x > 709.0 {
        return Err(Error::Overflow(format!("Shi({x}) exceeds the double range")));
    }
    let (s, n) = ein_series_from(x, 1, 2)?;
    Ok(EvalResult::new(s, 4.0 * EPS * s, n))
}

/// Hyperbolic cosine integral Chi(x) for x > 0.
pub fn chi(x: f64) -> Result<EvalResult> {
    if !(x > 0.0) {
        return Err(domain(format!("Chi needs x > 0, got {x}")));
    }
    if x > 709.0 {
        return Err(Error::Overflow(format!("Chi({x}) exceeds the double range")));
    }
    let (s, n) = ein_series_from(x, 2, 2)?;
    let v = EULER_GAMMA + x.ln() + s;
    Ok(EvalResult::new(v, EPS * (4.0 * s + 1.0 + x.ln().abs()), n))
}

/// Ein(x) = Σ_{k≥1} x^k/(k·k!) = ∫₀^x (e^t − 1)/t dt, for x ≥ 0.
pub(crate) fn ein(x: f64) -> Result<f64> {
    if x == 0.0 {
        return Ok(0.0);
    }
    ein_series(x, 1).map(|(s, _)| s)
}
