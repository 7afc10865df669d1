//! Error function family and Dawson's integral.

use std::f64::consts::PI;

use crate::error::{Error, Result};
use crate::eval::EvalResult;

const EPS: f64 = f64::EPSILON;
const TWO_OVER_SQRT_PI: f64 = std::f64::consts::FRAC_2_SQRT_PI;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ErfKind {
    Erf,
    Erfc,
    Erfi,
    Dawson,
}

pub fn error_family(which: ErfKind, x: f64) -> Result<EvalResult> {
    match which {
        ErfKind::Erf => Ok(erf(x)),
        ErfKind::Erfc => Ok(erfc(x)),
        ErfKind::Erfi => erfi(x),
        ErfKind::Dawson => Ok(dawson(x)),
    }
}

/// Crossover between the series for erf and the continued fraction for erfc.
const ERF_SPLIT: f64 = 2.0;

pub fn erf(x: f64) -> EvalResult {
    if x < 0.0 {
        return erf(-x).scale(-1.0);
    }
    if x < ERF_SPLIT {
        let (v, n) = erf_series(x);
        return EvalResult::new(v, 2.0 * EPS * v, n);
    }
    let (c, n) = erfc_fraction(x);
    EvalResult::new(1.0 - c, EPS * (1.0 + 4.0 * c), n)
}

pub fn erfc(x: f64) -> EvalResult {
    if x < 0.0 {
        let r = erfc(-x);
        return EvalResult::new(2.0 - r.value, r.est_error + EPS, r.work);
    }
    if x < ERF_SPLIT {
        let (v, n) = erf_series(x);
        return EvalResult::new(1.0 - v, EPS * (1.0 + 2.0 * v), n);
    }
    let (c, n) = erfc_fraction(x);
    EvalResult::new(c, 8.0 * EPS * c, n)
}

/// erf(x) = (2/√π) e^{−x²} Σ 2^k x^{2k+1}/(2k+1)!!, all terms positive.
fn erf_series(x: f64) -> (f64, usize) {
    let x2 = x * x;
    let mut term = x;
    let mut sum = x;
    let mut k = 0;
    while term > EPS * sum * 0.1 {
        term *= 2.0 * x2 / (2 * k + 3) as f64;
        sum += term;
        k += 1;
    }
    (TWO_OVER_SQRT_PI * (-x2).exp() * sum, k + 1)
}

/// erfc(x) = e^{−x²}/√π · 1/(x + (1/2)/(x + 1/(x + (3/2)/(x + …)))), x > 0.
fn erfc_fraction(x: f64) -> (f64, usize) {
    let tiny = 1e-300;
    let mut f = x;
    let mut c = f;
    let mut d = 0.0;
    let mut n = 1;
    while n < 10_000 {
        let a = n as f64 * 0.5;
        d = x + a * d;
        if d.abs() < tiny {
            d = tiny;
        }
        c = x + a / c;
        if c.abs() < tiny {
            c = tiny;
        }
        d = 1.0 / d;
        let del = c * d;
        f *= del;
        if (del - 1.0).abs() < EPS {
            break;
        }
        n += 1;
    }
    ((-x * x).exp() / (PI.sqrt() * f), n)
}

/// Dawson's integral F(x) = e^{−x²} ∫₀^x e^{t²} dt.
pub fn dawson(x: f64) -> EvalResult {
    if x < 0.0 {
        return dawson(-x).scale(-1.0);
    }
    if x <= 6.0 {
        // e^{−x²} Σ x^{2k+1}/(k!(2k+1))
        let x2 = x * x;
        let mut pw = x;
        let mut sum = x;
        let mut k = 0;
        loop {
            k += 1;
            pw *= x2 / k as f64;
            let t = pw / (2 * k + 1) as f64;
            sum += t;
            if k as f64 > x2 && t < EPS * sum * 0.1 {
                break;
            }
        }
        let v = (-x2).exp() * sum;
        return EvalResult::new(v, 4.0 * EPS * v * (1.0 + x2 * 0.1), k + 1);
    }
    // Σ (2k−1)!!/(2^{k+1} x^{2k+1}), truncated at the smallest term.
    let inv2 = 1.0 / (x * x);
    let mut term = 0.5 / x;
    let mut sum = term;
    let mut k = 0;
    loop {
        let next = term * (2 * k + 1) as f64 * 0.5 * inv2;
        if next >= term || next < EPS * sum * 0.1 {
            break;
        }
        term = next;
        sum += term;
        k += 1;
    }
    EvalResult::new(sum, 4.0 * EPS * sum, k + 1)
}

/// Imaginary error function erfi(x) = (2/√π) e^{x²} F(x).
pub fn erfi(x: f64) -> Result<EvalResult> {
    let f = dawson(x);
    let v = TWO_OVER_SQRT_PI * (x * x).exp() * f.value;
    if !v.is_finite() {
        return Err(Error::Overflow(format!("erfi({x}) exceeds the double range")));
    }
    Ok(EvalResult::new(v, (f.est_error / f.value.abs().max(f64::MIN_POSITIVE) + 2.0 * EPS * (1.0 + x * x)) * v.abs(), f.work))
}
