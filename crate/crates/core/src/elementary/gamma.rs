//! Gamma function family (Lanczos, g = 7) and the incomplete gamma pair.

use std::f64::consts::PI;

use crate::error::{domain, Error, Result};
use crate::eval::EvalResult;

const LANCZOS_G: f64 = 7.0;
const LANCZOS: [f64; 9] = [
    0.999_999_999_999_809_9,
    676.520_368_121_885_1,
    -1_259.139_216_722_402_8,
    771.323_428_777_653_1,
    -176.615_029_162_140_6,
    12.507_343_278_686_905,
    -0.138_571_095_265_720_12,
    9.984_369_578_019_572e-6,
    1.505_632_735_149_311_6e-7,
];

const LN_SQRT_2PI: f64 = 0.918_938_533_204_672_8;

/// Relative accuracy of the Lanczos backbone on the positive axis.
const GAMMA_REL_ERR: f64 = 2e-15;

/// `sin(πx)` with exact argument reduction, so integers give exact zeros.
pub fn sin_pi(x: f64) -> f64 {
    if x < 0.0 {
        return -sin_pi(-x);
    }
    let r = x % 2.0;
    let (r, sign) = if r >= 1.0 { (r - 1.0, -1.0) } else { (r, 1.0) };
    let v = if r <= 0.25 {
        (PI * r).sin()
    } else if r <= 0.75 {
        (PI * (0.5 - r)).cos()
    } else {
        (PI * (1.0 - r)).sin()
    };
    sign * v
}

/// `cos(πx)` with exact argument reduction.
pub fn cos_pi(x: f64) -> f64 {
    sin_pi(x.abs() + 0.5)
}

pub(crate) fn is_nonpositive_integer(x: f64) -> bool {
    x <= 0.0 && x == x.floor()
}

/// Lanczos sum and shifted argument for `x ≥ 0.5`.
fn lanczos(x: f64) -> (f64, f64) {
    let z = x - 1.0;
    let mut a = LANCZOS[0];
    for (i, c) in LANCZOS.iter().enumerate().skip(1) {
        a += c / (z + i as f64);
    }
    (a, z + LANCZOS_G + 0.5)
}

fn gamma_pos(x: f64) -> f64 {
    let (a, t) = lanczos(x);
    let e = 0.5 * (x - 0.5);
    // Split the power so t^(x-1/2) does not overflow before e^{-t} applies.
    let half = t.powf(e);
    (2.0 * PI).sqrt() * a * half * (half * (-t).exp())
}

fn ln_gamma_pos(x: f64) -> f64 {
    if x < 0.5 {
        return (PI / sin_pi(x)).ln() - ln_gamma_pos(1.0 - x);
    }
    if x == 1.0 || x == 2.0 {
        return 0.0;
    }
    let (a, t) = lanczos(x);
    LN_SQRT_2PI + (x - 0.5) * t.ln() - t + a.ln()
}

pub(crate) fn gamma_raw(x: f64) -> f64 {
    if x >= 0.5 {
        gamma_pos(x)
    } else {
        PI / (sin_pi(x) * gamma_pos(1.0 - x))
    }
}

/// ln|Γ(x)| and the sign of Γ(x) for any x that is not a pole.
pub(crate) fn ln_gamma_signed(x: f64) -> (f64, f64) {
    if x > 0.0 {
        return (ln_gamma_pos(x), 1.0);
    }
    let s = sin_pi(x);
    let sign = if s < 0.0 { -1.0 } else { 1.0 };
    // Γ(x) = π / (sin(πx) Γ(1−x))
    ((PI / s.abs()).ln() - ln_gamma_pos(1.0 - x), sign)
}

pub(crate) fn rgamma_raw(x: f64) -> f64 {
    if is_nonpositive_integer(x) {
        return 0.0;
    }
    if x > 170.0 {
        return (-ln_gamma_pos(x)).exp();
    }
    if x >= 0.5 {
        return 1.0 / gamma_pos(x);
    }
    if x > -169.0 {
        return sin_pi(x) * gamma_pos(1.0 - x) / PI;
    }
    let (lg, sign) = ln_gamma_signed(x);
    sign * (-lg).exp()
}

/// `x^k / Γ(a)`, robust against overflow of either factor separately.
pub(crate) fn power_over_gamma(x: f64, k: f64, a: f64) -> f64 {
    if is_nonpositive_integer(a) {
        return 0.0;
    }
    if k == 0.0 {
        return rgamma_raw(a);
    }
    if x == 0.0 {
        return 0.0;
    }
    let pw = x.abs().powf(k);
    let sign_x = if x < 0.0 && (k % 2.0) != 0.0 { -1.0 } else { 1.0 };
    if pw.is_finite() && pw > 1e-300 && a <= 170.0 {
        return sign_x * pw * rgamma_raw(a);
    }
    let (lg, sign_g) = ln_gamma_signed(a);
    sign_x * sign_g * (k * x.abs().ln() - lg).exp()
}

/// Which member of the gamma family to evaluate.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GammaKind {
    Gamma,
    LnGamma,
    RGamma,
}

/// Γ(x), ln Γ(x) (x > 0) or 1/Γ(x).
pub fn gamma_family(which: GammaKind, x: f64) -> Result<EvalResult> {
    match which {
        GammaKind::Gamma => gamma(x),
        GammaKind::LnGamma => ln_gamma(x),
        GammaKind::RGamma => rgamma(x),
    }
}

pub fn gamma(x: f64) -> Result<EvalResult> {
    if is_nonpositive_integer(x) {
        return Err(Error::Pole(x));
    }
    let v = gamma_raw(x);
    if !v.is_finite() {
        return Err(Error::Overflow(format!("Γ({x}) exceeds the double range")));
    }
    Ok(EvalResult::new(v, GAMMA_REL_ERR * (1.0 + x.abs()).ln().max(1.0) * v.abs(), 1))
}

/// ln Γ(x) for x > 0, where Γ is positive.
pub fn ln_gamma(x: f64) -> Result<EvalResult> {
    if is_nonpositive_integer(x) {
        return Err(Error::Pole(x));
    }
    if x <= 0.0 {
        return Err(domain(format!("ln_gamma is defined here for x > 0 only, got {x}")));
    }
    let v = ln_gamma_pos(x);
    Ok(EvalResult::new(v, GAMMA_REL_ERR * (1.0 + v.abs()), 1))
}

/// 1/Γ(x); exactly zero at the poles of Γ.
pub fn rgamma(x: f64) -> Result<EvalResult> {
    let v = rgamma_raw(x);
    if !v.is_finite() {
        return Err(Error::Overflow(format!("1/Γ({x}) exceeds the double range")));
    }
    Ok(EvalResult::new(v, GAMMA_REL_ERR * (1.0 + x.abs()).ln().max(1.0) * v.abs(), 1))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum IncGammaKind {
    Lower,
    Upper,
}

/// Lower γ(a,x) or upper Γ(a,x) incomplete gamma function.
pub fn incomplete_gamma(which: IncGammaKind, a: f64, x: f64) -> Result<EvalResult> {
    if !(a > 0.0) {
        return Err(domain(format!("incomplete gamma needs a > 0, got {a}")));
    }
    if !(x >= 0.0) {
        return Err(domain(format!("incomplete gamma needs x >= 0, got {x}")));
    }
    let g = gamma(a)?;
    if x == 0.0 {
        return Ok(match which {
            IncGammaKind::Lower => EvalResult::exact(0.0),
            IncGammaKind::Upper => g,
        });
    }
    let direct_lower = x <= a + 1.0;
    let part = if direct_lower {
        lower_series(a, x)?
    } else {
        upper_fraction(a, x)?
    };
    let want_direct = matches!(
        (which, direct_lower),
        (IncGammaKind::Lower, true) | (IncGammaKind::Upper, false)
    );
    let r = if want_direct {
        part
    } else {
        EvalResult::new(
            g.value - part.value,
            g.est_error + part.est_error + f64::EPSILON * g.value.abs(),
            part.work,
        )
    };
    r.check_finite("incomplete gamma")
}

fn prefactor(a: f64, x: f64) -> f64 {
    (a * x.ln() - x).exp()
}

/// γ(a,x) = x^a e^{−x} Σ x^n / (a(a+1)…(a+n)).
fn lower_series(a: f64, x: f64) -> Result<EvalResult> {
    let mut term = 1.0 / a;
    let mut sum = term;
    for n in 1..2000 {
        term *= x / (a + n as f64);
        sum += term;
        if term.abs() < f64::EPSILON * sum.abs() * 0.1 {
            let v = prefactor(a, x) * sum;
            return Ok(EvalResult::new(v, 4.0 * f64::EPSILON * v.abs() * (1.0 + x.ln().abs()), n + 1));
        }
    }
    Err(Error::NoConvergence { terms: 2000 })
}

/// Γ(a,x) by the Legendre continued fraction (modified Lentz).
fn upper_fraction(a: f64, x: f64) -> Result<EvalResult> {
    let tiny = 1e-300;
    let mut b = x + 1.0 - a;
    let mut c = 1.0 / tiny;
    let mut d = 1.0 / b;
    let mut h = d;
    for i in 1..2000 {
        let an = -(i as f64) * (i as f64 - a);
        b += 2.0;
        d = an * d + b;
        if d.abs() < tiny {
            d = tiny;
        }
        c = b + an / c;
        if c.abs() < tiny {
            c = tiny;
        }
        d = 1.0 / d;
        let del = d * c;
        h *= del;
        if (del - 1.0).abs() < f64::EPSILON {
            let v = prefactor(a, x) * h;
            return Ok(EvalResult::new(v, 8.0 * f64::EPSILON * v.abs() * (1.0 + x.ln().abs()), i));
        }
    }
    Err(Error::NoConvergence { terms: 2000 })
}
