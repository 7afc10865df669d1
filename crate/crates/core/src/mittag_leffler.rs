//! Mittag-Leffler functions E_{α,β} and their integral counterparts
//!
//! ```text
//! Ei_{α,β}(x) = ∫₀^x (E_{α,β}(t) − 1/Γ(β))/t dt = Σ_{k≥1} x^k/(k Γ(αk+β)).
//! ```
//!
//! For rational α = p/q both are also available as finite sums of
//! generalized hypergeometric functions obtained by splitting the series
//! modulo q and applying Gauss's multiplication formula.

use std::f64::consts::PI;

use crate::elementary::{chi, dawson, ei, is_nonpositive_integer, rgamma_raw, shi};
use crate::error::{domain, invalid, Error, Result};
use crate::eval::{EvalResult, RationalAlpha, SeriesControl};
use crate::hypergeometric::{hyp, reduced_pfq};
use crate::series::{gamma_series, Weight};
use crate::EULER_GAMMA;

const EPS: f64 = f64::EPSILON;

/// Parameters (α, β) of a two-parameter Mittag-Leffler function.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MLParams {
    pub alpha: f64,
    pub beta: f64,
}

impl MLParams {
    pub fn new(alpha: f64, beta: f64) -> Result<Self> {
        let p = MLParams { alpha, beta };
        p.validate()?;
        Ok(p)
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.alpha > 0.0) || !(self.beta > 0.0) {
            return Err(invalid(format!(
                "Mittag-Leffler parameters need α > 0 and β > 0, got α = {}, β = {}",
                self.alpha, self.beta
            )));
        }
        Ok(())
    }
}

fn check_x(x: f64) -> Result<()> {
    if !(x >= 0.0) || !x.is_finite() {
        return Err(domain(format!("x must be finite and non-negative, got {x}")));
    }
    Ok(())
}

/// E_{α,β}(x) = Σ x^k/Γ(αk+β).
pub fn ml(params: &MLParams, x: f64, ctrl: &SeriesControl) -> Result<EvalResult> {
    params.validate()?;
    check_x(x)?;
    if x == 0.0 {
        return Ok(EvalResult::rounded(rgamma_raw(params.beta)));
    }
    gamma_series(x, params.alpha, params.beta, Weight::One, 0, ctrl)
}

/// Ei_{α,β}(x) = Σ_{k≥1} x^k/(k Γ(αk+β)).
pub fn iml(params: &MLParams, x: f64, ctrl: &SeriesControl) -> Result<EvalResult> {
    params.validate()?;
    check_x(x)?;
    if x == 0.0 {
        return Ok(EvalResult::exact(0.0));
    }
    gamma_series(x, params.alpha, params.beta, Weight::InvK, 1, ctrl)
}

/// b_j = k/q + (β + j)/p for j = 0..p−1.
pub(crate) fn b_list(pq: RationalAlpha, k: u32, beta: f64) -> Vec<f64> {
    let (p, q) = (pq.p() as f64, pq.q() as f64);
    (0..pq.p()).map(|j| k as f64 / q + (beta + j as f64) / p).collect()
}

/// E_{p/q,β}(x) as a sum of q hypergeometric functions in x^q/p^p.
pub fn ml_rational(pq: RationalAlpha, beta: f64, x: f64, ctrl: &SeriesControl) -> Result<EvalResult> {
    let params = MLParams::new(pq.value(), beta)?;
    check_x(x)?;
    if x == 0.0 {
        return ml(&params, x, ctrl);
    }
    let (p, q) = (pq.p(), pq.q());
    let z = x.powi(q as i32) / (p as f64).powi(p as i32);
    let mut total = EvalResult::exact(0.0);
    for k in 0..q {
        let b = b_list(pq, k, beta);
        if b.iter().any(|&v| is_nonpositive_integer(v)) {
            return ml(&params, x, ctrl);
        }
        let pre = x.powi(k as i32) * rgamma_raw(pq.value() * k as f64 + beta);
        let f = reduced_pfq(&[], &b, z, ctrl)?;
        total += f.scale(pre);
    }
    let r = EvalResult::new(total.value, total.est_error + 2.0 * EPS * total.value.abs(), total.work);
    r.check_finite("E_{p/q,β}")
}

/// Ei_{p/q,β}(x) as a sum of q hypergeometric functions in x^q/p^p.
pub fn iml_rational(pq: RationalAlpha, beta: f64, x: f64, ctrl: &SeriesControl) -> Result<EvalResult> {
    let params = MLParams::new(pq.value(), beta)?;
    check_x(x)?;
    if x == 0.0 {
        return Ok(EvalResult::exact(0.0));
    }
    let (p, q) = (pq.p(), pq.q());
    let qf = q as f64;
    let z = x.powi(q as i32) / (p as f64).powi(p as i32);
    let mut total = EvalResult::exact(0.0);
    for k in 1..=q {
        let mut lower = b_list(pq, k, beta);
        if lower.iter().any(|&v| is_nonpositive_integer(v)) {
            return iml(&params, x, ctrl);
        }
        let kq = k as f64 / qf;
        lower.push(kq + 1.0);
        let pre = x.powi(k as i32) * rgamma_raw(pq.value() * k as f64 + beta) / k as f64;
        let f = reduced_pfq(&[kq], &lower, z, ctrl)?;
        total += f.scale(pre);
    }
    let r = EvalResult::new(total.value, total.est_error + 2.0 * EPS * total.value.abs(), total.work);
    r.check_finite("Ei_{p/q,β}")
}

fn close(a: f64, b: f64) -> bool {
    (a - b).abs() < 1e-12
}

fn ctrl() -> SeriesControl {
    SeriesControl::default()
}

fn h(upper: &[f64], lower: &[f64], z: f64) -> Result<f64> {
    hyp(upper, lower, z, &ctrl()).map(|r| r.value)
}

/// Closed forms of Ei_{α,β} for a catalogue of parameter pairs, built from
/// elementary functions and low-order hypergeometric functions.
///
/// Generic-β forms are used for α ∈ {1/2, 1, 2, 3, 4, 5}; other pairs are
/// listed individually. Anything else is `Unsupported`.
pub fn iml_reference(params: &MLParams, x: f64) -> Result<EvalResult> {
    params.validate()?;
    if !(x > 0.0) {
        return Err(domain(format!("iml_reference needs x > 0, got {x}")));
    }
    let (a, b) = (params.alpha, params.beta);
    let sp = PI.sqrt();
    let x2 = x * x;
    let v = if close(a, 0.5) && close(b, 0.5) {
        x2 / sp * h(&[1.0, 1.0], &[1.5, 2.0], x2)? + x2.exp() * dawson(x).value
    } else if close(a, 0.5) && close(b, 1.0) {
        -EULER_GAMMA / 2.0 - x.ln() + ei(x2)?.value / 2.0 + 2.0 * x / sp * h(&[0.5, 1.0], &[1.5, 1.5], x2)?
    } else if close(a, 0.5) && close(b, 3.0) {
        let x4 = x2 * x2;
        let ex = x2.exp();
        let g = EULER_GAMMA;
        (2.0 + 4.0 * x2 + (3.0 - 2.0 * g) * x4 - 2.0 * ex * (1.0 + x2) + 2.0 * x4 * (ei(x2)?.value - 2.0 * x.ln()))
            / (8.0 * x4)
            + 8.0 * x / (15.0 * sp) * h(&[0.5, 1.0], &[1.5, 3.5], x2)?
    } else if close(a, 0.5) {
        x2 / 2.0 * rgamma_raw(b + 1.0) * h(&[1.0, 1.0], &[2.0, b + 1.0], x2)?
            + x * rgamma_raw(b + 0.5) * h(&[0.5, 1.0], &[1.5, b + 0.5], x2)?
    } else if close(a, 1.0 / 3.0) && close(b, 0.2) {
        let x3 = x2 * x;
        x * rgamma_raw(8.0 / 15.0) * h(&[1.0, 1.0 / 3.0], &[8.0 / 15.0, 4.0 / 3.0], x3)?
            + x2 / 2.0 * rgamma_raw(13.0 / 15.0) * h(&[1.0, 2.0 / 3.0], &[13.0 / 15.0, 5.0 / 3.0], x3)?
            + 5.0 * x3 / 3.0 * rgamma_raw(0.2) * h(&[1.0, 1.0], &[1.2, 2.0], x3)?
    } else if close(a, 1.0 / 3.0) && close(b, 0.25) {
        let x3 = x2 * x;
        x * rgamma_raw(7.0 / 12.0) * h(&[1.0, 1.0 / 3.0], &[7.0 / 12.0, 4.0 / 3.0], x3)?
            + x2 / 2.0 * rgamma_raw(11.0 / 12.0) * h(&[1.0, 2.0 / 3.0], &[11.0 / 12.0, 5.0 / 3.0], x3)?
            + 4.0 * x3 / 3.0 * rgamma_raw(0.25) * h(&[1.0, 1.0], &[1.25, 2.0], x3)?
    } else if close(a, 1.0 / 3.0) && close(b, 0.5) {
        let x3 = x2 * x;
        2.0 * x3 / (3.0 * sp) * h(&[1.0, 1.0], &[1.5, 2.0], x3)?
            + x * rgamma_raw(5.0 / 6.0) * h(&[1.0, 1.0 / 3.0], &[5.0 / 6.0, 4.0 / 3.0], x3)?
            + 3.0 * x2 * rgamma_raw(1.0 / 6.0) * h(&[1.0, 2.0 / 3.0], &[7.0 / 6.0, 5.0 / 3.0], x3)?
    } else if close(a, 1.0 / 3.0) && close(b, 1.5) {
        let x3 = x2 * x;
        x * rgamma_raw(11.0 / 6.0) * h(&[1.0, 1.0 / 3.0], &[4.0 / 3.0, 11.0 / 6.0], x3)?
            + 18.0 * x2 / 7.0 * rgamma_raw(1.0 / 6.0) * h(&[1.0, 2.0 / 3.0], &[5.0 / 3.0, 13.0 / 6.0], x3)?
            + 4.0 * x3 / (9.0 * sp) * h(&[1.0, 1.0], &[2.0, 2.5], x3)?
    } else if close(a, 1.0) && close(b, 1.0) {
        -EULER_GAMMA - x.ln() + chi(x)?.value + shi(x)?.value
    } else if close(a, 1.0) && close(b, 0.5) {
        2.0 * x / sp * h(&[1.0, 1.0], &[1.5, 2.0], x)?
    } else if close(a, 1.0) {
        x * rgamma_raw(b + 1.0) * h(&[1.0, 1.0], &[2.0, 1.0 + b], x)?
    } else if close(a, 1.5) && close(b, 1.0) {
        let z = x2 / 27.0;
        4.0 * x / (3.0 * sp) * h(&[0.5, 1.0], &[5.0 / 6.0, 7.0 / 6.0, 1.5, 1.5], z)?
            + x2 / 12.0 * h(&[1.0, 1.0], &[4.0 / 3.0, 5.0 / 3.0, 2.0, 2.0], z)?
    } else if close(a, 1.5) && close(b, 1.5) {
        let z = x2 / 27.0;
        x / 2.0 * h(&[0.5], &[4.0 / 3.0, 1.5, 5.0 / 3.0], z)?
            + 8.0 * x2 / (105.0 * sp) * h(&[1.0, 1.0], &[1.5, 11.0 / 6.0, 2.0, 13.0 / 6.0], z)?
    } else if close(a, 1.5) && close(b, 2.0) {
        let z = x2 / 27.0;
        8.0 * x / (15.0 * sp) * h(&[0.5, 1.0], &[7.0 / 6.0, 1.5, 1.5, 11.0 / 6.0], z)?
            + x2 / 48.0 * h(&[1.0, 1.0], &[5.0 / 3.0, 2.0, 2.0, 7.0 / 3.0], z)?
    } else if close(a, 2.0) && close(b, 1.0) {
        -2.0 * EULER_GAMMA - x.ln() + 2.0 * chi(x.sqrt())?.value
    } else if close(a, 2.0) && close(b, 2.0) {
        let r = x.sqrt();
        2.0 - 2.0 * EULER_GAMMA - x.ln() - 2.0 * r.sinh() / r + 2.0 * chi(r)?.value
    } else if [2.0, 3.0, 4.0, 5.0].iter().any(|&n| close(a, n)) {
        // x/Γ(β+n) ₂F_{n+1}(1,1; 2, (β+1+j)/n for j = 0..n−1 shifted by one; x/nⁿ)
        let n = a.round();
        let mut lower = vec![2.0];
        for j in 0..n as u32 {
            lower.push((b + n + j as f64) / n);
        }
        x * rgamma_raw(b + n) * h(&[1.0, 1.0], &lower, x / n.powf(n))?
    } else {
        return Err(Error::Unsupported(format!("no closed form registered for Ei_{{{a},{b}}}")));
    };
    if !v.is_finite() {
        return Err(Error::Overflow(format!("Ei_{{{a},{b}}}({x}) closed form is not finite")));
    }
    Ok(EvalResult::new(v, 64.0 * EPS * v.abs().max(1.0), 1))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::elementary::{erf, gamma_raw};
    use crate::quadrature::{integrate_fi, QuadControl};
    use proptest::prelude::*;

    fn rel(a: f64, b: f64) -> f64 {
        ((a - b) / b).abs()
    }

    fn p(a: f64, b: f64) -> MLParams {
        MLParams::new(a, b).unwrap()
    }

    #[test]
    fn elementary_special_cases() {
        for &x in &[0.1, 1.0, 3.0, 10.0] {
            assert!(rel(ml(&p(1.0, 1.0), x, &ctrl()).unwrap().value, x.exp()) < 1e-14);
            assert!(rel(ml(&p(2.0, 1.0), x, &ctrl()).unwrap().value, x.sqrt().cosh()) < 1e-14);
            let e = x * x;
            let want = e.exp() * (erf(x).value + 1.0);
            assert!(rel(ml(&p(0.5, 1.0), x, &ctrl()).unwrap().value, want) < 1e-12, "x={x}");
            assert!(rel(ml_rational(RationalAlpha::new(1, 2).unwrap(), 1.0, x, &ctrl()).unwrap().value, want) < 1e-12);
        }
        assert!(rel(ml(&p(0.7, 2.5), 0.0, &ctrl()).unwrap().value, 1.0 / gamma_raw(2.5)) < 1e-15);
        assert_eq!(iml(&p(0.7, 2.5), 0.0, &ctrl()).unwrap().value, 0.0);
    }

    #[test]
    fn parameter_and_argument_checks() {
        assert!(MLParams::new(0.0, 1.0).is_err());
        assert!(MLParams::new(1.0, -1.0).is_err());
        assert!(matches!(ml(&p(1.0, 1.0), -1.0, &ctrl()), Err(Error::Domain(_))));
        assert!(matches!(ml(&p(1.0, 1.0), 800.0, &ctrl()), Err(Error::Overflow(_))));
        assert!(matches!(iml_reference(&p(0.3, 0.3), 1.0), Err(Error::Unsupported(_))));
    }

    #[test]
    fn integral_reductions_to_chi_shi() {
        for &x in &[0.1, 0.5, 1.0, 2.0, 4.0] {
            let v = iml(&p(2.0, 1.0), x, &ctrl()).unwrap().value;
            let want = -2.0 * EULER_GAMMA - x.ln() + 2.0 * chi(x.sqrt()).unwrap().value;
            assert!(rel(v, want) < 1e-12, "x={x}");
            let v = iml(&p(1.0, 1.0), x, &ctrl()).unwrap().value;
            let want = -EULER_GAMMA - x.ln() + chi(x).unwrap().value + shi(x).unwrap().value;
            assert!(rel(v, want) < 1e-12, "x={x}");
        }
    }

    #[test]
    fn reference_rows_match_series() {
        let rows = [
            (0.5, 0.5), (0.5, 1.0), (0.5, 3.0), (0.5, 0.7), (1.0 / 3.0, 0.2), (1.0 / 3.0, 0.25),
            (1.0 / 3.0, 0.5), (1.0 / 3.0, 1.5), (1.0, 1.0), (1.0, 0.5), (1.0, 2.5), (1.5, 1.0),
            (1.5, 1.5), (1.5, 2.0), (2.0, 1.0), (2.0, 2.0), (2.0, 0.7), (3.0, 1.0), (3.0, 0.7),
            (4.0, 1.0), (5.0, 1.0), (5.0, 0.7),
        ];
        for &(a, b) in &rows {
            for &x in &[0.1, 0.5, 1.0, 2.0, 4.0] {
                let s = iml(&p(a, b), x, &ctrl()).unwrap().value;
                let c = iml_reference(&p(a, b), x).unwrap().value;
                assert!(rel(c, s) < 1e-9, "α={a} β={b} x={x}: {c} vs {s}");
            }
        }
    }

    #[test]
    fn integral_definition_by_quadrature() {
        let q = QuadControl::with_tolerances(1e-14, 1e-12);
        for &(a, b) in &[(1.0, 1.0), (2.0, 1.0), (0.5, 1.0), (1.5, 2.0)] {
            let params = p(a, b);
            for &x in &[0.5, 1.0, 2.0] {
                let f = |t: f64| ml(&params, t, &ctrl()).unwrap().value;
                let oracle = integrate_fi(f, 1.0 / gamma_raw(b), x, &q).unwrap().value;
                let v = iml(&params, x, &ctrl()).unwrap().value;
                assert!(rel(v, oracle) < 1e-7, "α={a} β={b} x={x}");
            }
        }
    }

    #[test]
    fn rational_forms_match_direct_series() {
        for &(pp, qq) in &[(1, 2), (1, 3), (2, 3), (3, 2), (2, 1), (3, 1), (1, 4)] {
            let pq = RationalAlpha::new(pp, qq).unwrap();
            for &b in &[0.5, 1.0, 2.0] {
                for &x in &[0.25, 1.0, 2.5] {
                    let params = p(pq.value(), b);
                    let d = ml(&params, x, &ctrl()).unwrap().value;
                    let r = ml_rational(pq, b, x, &ctrl()).unwrap().value;
                    assert!(rel(r, d) < 1e-10, "ml {pq} β={b} x={x}");
                    let d = iml(&params, x, &ctrl()).unwrap().value;
                    let r = iml_rational(pq, b, x, &ctrl()).unwrap().value;
                    assert!(rel(r, d) < 1e-10, "iml {pq} β={b} x={x}");
                }
            }
        }
    }

    #[test]
    fn derivative_link() {
        for &(a, b) in &[(0.5, 1.0), (1.0, 2.0), (2.0, 0.5)] {
            let params = p(a, b);
            for &x in &[0.5, 1.5, 3.0] {
                let h = 1e-5 * x;
                let d = (iml(&params, x + h, &ctrl()).unwrap().value - iml(&params, x - h, &ctrl()).unwrap().value)
                    / (2.0 * h);
                let want = (ml(&params, x, &ctrl()).unwrap().value - 1.0 / gamma_raw(b)) / x;
                assert!(rel(d, want) < 1e-6, "α={a} β={b} x={x}");
            }
        }
    }

    proptest! {
        #[test]
        fn iml_increasing_in_x(i in 0usize..4, x in 0.01f64..3.9, dx in 1e-3f64..0.1) {
            let a = [0.25, 0.5, 1.0, 2.0][i];
            let params = p(a, 1.0);
            let lo = iml(&params, x, &ctrl()).unwrap().value;
            let hi = iml(&params, (x + dx).min(4.0), &ctrl()).unwrap().value;
            prop_assert!(hi > lo);
        }

        #[test]
        fn rational_and_direct_agree(i in 0usize..7, b in 0.2f64..3.0, x in 0.0f64..3.0) {
            let (pp, qq) = [(1, 2), (1, 3), (2, 3), (3, 2), (2, 1), (3, 1), (1, 4)][i];
            let pq = RationalAlpha::new(pp, qq).unwrap();
            let params = p(pq.value(), b);
            let d = ml(&params, x, &ctrl()).unwrap().value;
            let r = ml_rational(pq, b, x, &ctrl()).unwrap().value;
            prop_assert!(rel(r, d) < 1e-10);
        }
    }
}
