//! Modified Bessel functions I and K, modified Struve functions and Airy Ai.

use std::f64::consts::PI;

use crate::error::{domain, Error, Result};
use crate::eval::EvalResult;
use crate::quadrature::{integrate, QuadControl};

use super::gamma::{gamma_raw, power_over_gamma};

const EPS: f64 = f64::EPSILON;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BesselKind {
    I,
    K,
}

pub fn bessel_mod(which: BesselKind, nu: f64, x: f64) -> Result<EvalResult> {
    match which {
        BesselKind::I => bessel_i(nu, x),
        BesselKind::K => bessel_k(nu, x),
    }
}

/// I_ν(x) = Σ (x/2)^{2k+ν}/(k! Γ(k+ν+1)).
pub fn bessel_i(nu: f64, x: f64) -> Result<EvalResult> {
    if !(x > 0.0) {
        return Err(domain(format!("I_nu needs x > 0, got {x}")));
    }
    // I_{−n} = I_n for integer n.
    let nu = if nu < 0.0 && nu == nu.floor() { -nu } else { nu };
    let h = 0.5 * x;
    let h2 = h * h;
    let mut term = power_over_gamma(h, nu, nu + 1.0);
    let mut sum = term;
    let mut mag = term.abs();
    let mut k = 0usize;
    loop {
        k += 1;
        term *= h2 / (k as f64 * (k as f64 + nu));
        sum += term;
        mag += term.abs();
        if k as f64 > h && term.abs() <= EPS * 0.1 * sum.abs() {
            break;
        }
        if k > 10_000 {
            return Err(Error::NoConvergence { terms: k });
        }
    }
    EvalResult::new(sum, 4.0 * EPS * mag, k + 1).check_finite("I_nu")
}

/// K_ν(x) = ∫₀^∞ e^{−x cosh t} cosh(νt) dt.
///
/// The integral is taken with the factor e^{−x} pulled out, truncated where
/// the scaled integrand drops below e^{−40}.
pub fn bessel_k(nu: f64, x: f64) -> Result<EvalResult> {
    if !(x > 0.0) {
        return Err(domain(format!("K_nu needs x > 0, got {x}")));
    }
    let nu = nu.abs();
    let exponent = |t: f64| -x * (t.cosh() - 1.0) + nu * t;
    let f = |t: f64| (exponent(t)).exp() * 0.5 * (1.0 + (-2.0 * nu * t).exp());
    // Past the maximum of the exponent, march until it is below −40.
    let mut end = 1.0;
    while exponent(end) > -40.0 || exponent(end) > exponent(end * 0.5) {
        end *= 1.5;
        if end > 1e3 {
            return Err(Error::Overflow(format!("K_{nu}({x}) outside the supported range")));
        }
    }
    let peak = if nu > x { (nu / x).asinh() } else { 0.0 };
    let mut breaks = vec![0.0];
    if peak > 0.0 && peak < end {
        breaks.push(peak);
    }
    breaks.push(end);
    let ctrl = QuadControl::with_tolerances(1e-300, 1e-13);
    let mut total = EvalResult::exact(0.0);
    for w in breaks.windows(2) {
        let r = match integrate(f, w[0], w[1], &ctrl) {
            Ok(r) => r,
            Err(Error::ToleranceNotMet { value, est_error }) => EvalResult::new(value, est_error, 0),
            Err(e) => return Err(e),
        };
        total += r;
    }
    let scale = (-x).exp();
    let est = total.est_error + 1e-17 * total.value.abs();
    EvalResult::new(total.value * scale, est * scale, total.work).check_finite("K_nu")
}

/// Modified Struve function L_n for n ∈ {0, 1}.
pub fn struve_l(n: u32, x: f64) -> Result<EvalResult> {
    if n > 1 {
        return Err(domain(format!("struve_l supports orders 0 and 1, got {n}")));
    }
    if !(x >= 0.0) {
        return Err(domain(format!("struve_l needs x >= 0, got {x}")));
    }
    if x == 0.0 {
        return Ok(EvalResult::exact(0.0));
    }
    let nf = n as f64;
    let h = 0.5 * x;
    let h2 = h * h;
    let mut term = h.powf(nf + 1.0) / (gamma_raw(1.5) * gamma_raw(nf + 1.5));
    let mut sum = term;
    let mut k = 0usize;
    loop {
        let kf = k as f64;
        term *= h2 / ((kf + 1.5) * (kf + nf + 1.5));
        sum += term;
        k += 1;
        if kf > h && term <= EPS * 0.1 * sum {
            break;
        }
        if k > 10_000 {
            return Err(Error::NoConvergence { terms: k });
        }
    }
    EvalResult::new(sum, 4.0 * EPS * sum, k + 1).check_finite("L_n")
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AiryKind {
    Ai,
    AiPrime,
}

/// Ai(0) and −Ai'(0).
fn airy_constants() -> (f64, f64) {
    let c1 = 1.0 / (3f64.powf(2.0 / 3.0) * gamma_raw(2.0 / 3.0));
    let c2 = 1.0 / (3f64.powf(1.0 / 3.0) * gamma_raw(1.0 / 3.0));
    (c1, c2)
}

/// Airy Ai or Ai'. Uses the Maclaurin pair for −8 ≤ x ≤ 2 and the
/// K_{1/3}, K_{2/3} representation for x > 2.
pub fn airy_ai(which: AiryKind, x: f64) -> Result<EvalResult> {
    if x > 2.0 && x.is_finite() {
        let zeta = 2.0 / 3.0 * x.powf(1.5);
        let r = match which {
            AiryKind::Ai => bessel_k(1.0 / 3.0, zeta)?.scale((x / 3.0).sqrt() / PI),
            AiryKind::AiPrime => bessel_k(2.0 / 3.0, zeta)?.scale(-x / (PI * 3f64.sqrt())),
        };
        return Ok(EvalResult::new(r.value, r.est_error + 4.0 * EPS * r.value.abs(), r.work));
    }
    if !(x >= -8.0) {
        return Err(domain(format!("airy_ai is supported for x >= -8, got {x}")));
    }
    let (c1, c2) = airy_constants();
    let x3 = x * x * x;
    // f, g and their derivatives as term recurrences in x³.
    let (mut f, mut g) = match which {
        AiryKind::Ai => (1.0, x),
        AiryKind::AiPrime => (0.5 * x * x, 1.0),
    };
    let (mut sf, mut sg) = (f, g);
    let (mut mf, mut mg) = (f.abs(), g.abs());
    let mut k = 0usize;
    loop {
        let kf = 3.0 * k as f64;
        let (df, dg) = match which {
            AiryKind::Ai => ((kf + 2.0) * (kf + 3.0), (kf + 3.0) * (kf + 4.0)),
            AiryKind::AiPrime => ((kf + 3.0) * (kf + 5.0), (kf + 1.0) * (kf + 3.0)),
        };
        f *= x3 / df;
        g *= x3 / dg;
        sf += f;
        sg += g;
        mf += f.abs();
        mg += g.abs();
        k += 1;
        if f.abs() + g.abs() <= EPS * 1e-3 * (sf.abs() + sg.abs()).max(1e-300) || (f == 0.0 && g == 0.0) {
            break;
        }
    }
    let v = c1 * sf - c2 * sg;
    let err = 4.0 * EPS * (c1 * mf + c2 * mg);
    Ok(EvalResult::new(v, err, k + 1))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn rel(a: f64, b: f64) -> f64 {
        ((a - b) / b).abs()
    }

    #[test]
    fn bessel_i_values() {
        assert!(rel(bessel_i(0.0, 1e-8).unwrap().value, 1.0) < 1e-15);
        assert!(rel(bessel_i(0.0, 1.0).unwrap().value, 1.266_065_877_752_008_4) < 1e-15);
        assert!(rel(bessel_i(1.0, 2.5).unwrap().value, 2.516_716_245_288_698) < 1e-14);
        assert!(rel(bessel_i(-1.0, 2.5).unwrap().value, 2.516_716_245_288_698) < 1e-14);
        // I_{1/2}(x) = √(2/(πx)) sinh x
        let x = 3.0f64;
        let v = bessel_i(0.5, x).unwrap().value;
        assert!(rel(v, (2.0 / (PI * x)).sqrt() * x.sinh()) < 1e-14);
        let v = bessel_i(-0.5, x).unwrap().value;
        assert!(rel(v, (2.0 / (PI * x)).sqrt() * x.cosh()) < 1e-14);
    }

    #[test]
    fn bessel_k_values() {
        for &x in &[0.05, 0.5, 1.0, 4.0, 30.0] {
            let v = bessel_k(0.5, x).unwrap().value;
            assert!(rel(v, (PI / (2.0 * x)).sqrt() * (-x).exp()) < 1e-12, "x={x}");
        }
        assert!(rel(bessel_k(0.0, 1.0).unwrap().value, 0.421_024_438_240_708_3) < 1e-12);
        assert!(rel(bessel_k(1.0, 0.1).unwrap().value, 9.853_844_780_870_606) < 1e-12);
        assert!(rel(bessel_k(2.5, 0.3).unwrap().value, 75.152_140_164_374_89) < 1e-10);
        assert!(bessel_k(1.0, 0.0).is_err());
    }

    #[test]
    fn struve_values() {
        assert_eq!(struve_l(0, 0.0).unwrap().value, 0.0);
        assert_eq!(struve_l(1, 0.0).unwrap().value, 0.0);
        let q = integrate(
            |t: f64| t.cos().sinh(),
            0.0,
            PI / 2.0,
            &QuadControl::with_tolerances(1e-300, 1e-13),
        )
        .unwrap();
        assert!(rel(struve_l(0, 1.0).unwrap().value, 2.0 / PI * q.value) < 1e-13);
        assert!(rel(struve_l(1, 2.0).unwrap().value, 1.102_759_787_367_815_8) < 1e-13);
    }

    #[test]
    fn airy_values() {
        let (c1, c2) = airy_constants();
        assert_eq!(airy_ai(AiryKind::Ai, 0.0).unwrap().value, c1);
        assert_eq!(airy_ai(AiryKind::AiPrime, 0.0).unwrap().value, -c2);
        assert!(rel(c1, 0.355_028_053_887_817_2) < 1e-15);
        assert!(rel(c2, 0.258_819_403_792_806_8) < 1e-15);
        assert!(rel(airy_ai(AiryKind::Ai, 1.0).unwrap().value, 0.135_292_416_312_881_4) < 1e-14);
        assert!(rel(airy_ai(AiryKind::Ai, -3.0).unwrap().value, -0.378_814_293_677_658) < 1e-13);
        assert!(rel(airy_ai(AiryKind::AiPrime, 2.0).unwrap().value, -0.053_090_384_433_653_63) < 1e-12);
        assert!(airy_ai(AiryKind::Ai, -9.0).is_err());
        let table = [
            (1.9, 0.040_594_420_031_529_5, -0.060_436_781_785_756_5),
            (2.1, 0.029_952_602_115_866_5, -0.046_455_994_032_674_6),
            (5.0, 1.083_444_281_360_74e-4, -2.474_138_908_684_62e-4),
            (8.0, 4.692_207_616_099_23e-8, -1.341_439_297_906_79e-7),
            (15.0, 2.164_962_520_737_99e-18, -8.420_567_954_017_77e-18),
        ];
        for (x, ai, aip) in table {
            assert!(rel(airy_ai(AiryKind::Ai, x).unwrap().value, ai) < 1e-12, "Ai({x})");
            assert!(rel(airy_ai(AiryKind::AiPrime, x).unwrap().value, aip) < 1e-12, "Ai'({x})");
        }
    }

    proptest! {
        #[test]
        fn k_wronskian(nu in 0.0f64..3.0, x in 0.1f64..20.0) {
            // I_ν K_{ν+1} + I_{ν+1} K_ν = 1/x
            let w = bessel_i(nu, x).unwrap().value * bessel_k(nu + 1.0, x).unwrap().value
                + bessel_i(nu + 1.0, x).unwrap().value * bessel_k(nu, x).unwrap().value;
            prop_assert!(rel(w, 1.0 / x) < 1e-11);
        }
    }
}
