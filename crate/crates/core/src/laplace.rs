//! Laplace transforms of E_{α,β} and Ei_{α,β} as series in 1/s
//!
//! ```text
//! L[E_{α,β}](s)  = Σ_{k≥0} k!/Γ(αk+β) s^{−k−1}
//! L[Ei_{α,β}](s) = Σ_{k≥0} k!/Γ(α(k+1)+β) s^{−k−2}
//! ```
//!
//! Both need α ≥ 1: for α < 1 the coefficients grow faster than any power
//! and the series has zero radius of convergence. Use
//! [`crate::quadrature::laplace_quad`] for those.

use crate::elementary::{gamma_raw, ln_gamma_signed};
use crate::error::{domain, Error, Result};
use crate::eval::{EvalResult, KahanSum, QuietCounter, RationalAlpha, SeriesControl};
use crate::hypergeometric::reduced_pfq;
use crate::mittag_leffler::MLParams;

const EPS: f64 = f64::EPSILON;

/// A transform abscissa s > 1.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd)]
pub struct LTPoint(f64);

impl LTPoint {
    pub fn new(s: f64) -> Result<Self> {
        if !(s > 1.0) || !s.is_finite() {
            return Err(domain(format!("transform abscissa must satisfy s > 1, got {s}")));
        }
        Ok(LTPoint(s))
    }

    pub fn value(self) -> f64 {
        self.0
    }
}

fn require_alpha(alpha: f64) -> Result<()> {
    if alpha < 1.0 {
        return Err(Error::Divergent(format!(
            "the 1/s series of the transform has zero radius for α = {alpha} < 1"
        )));
    }
    Ok(())
}

/// k!/Γ(a) · s^{−n}
fn fact_over_gamma(k: usize, a: f64, s: f64, n: usize) -> f64 {
    let kf = k as f64;
    if k < 170 && a < 170.0 {
        let v = gamma_raw(kf + 1.0) / gamma_raw(a) * s.powi(-(n as i32));
        if v.is_finite() && v.abs() > 1e-280 {
            return v;
        }
    }
    let (lf, _) = ln_gamma_signed(kf + 1.0);
    let (lg, sg) = ln_gamma_signed(a);
    sg * (lf - lg - n as f64 * s.ln()).exp()
}

/// Σ_{k≥0} k!/Γ(αk + shift) s^{−k−lead}.
fn inverse_power_series(alpha: f64, shift: f64, lead: usize, s: f64, ctrl: &SeriesControl) -> Result<EvalResult> {
    ctrl.validate()?;
    let mut sum = KahanSum::new();
    let mut quiet = QuietCounter::new(ctrl);
    let mut prev = f64::INFINITY;
    for k in 0..ctrl.max_terms {
        let t = fact_over_gamma(k, alpha * k as f64 + shift, s, k + lead);
        sum.add(t);
        let settled = quiet.settled(t, sum.value());
        let ratio = (t / prev).abs();
        if settled && k > 0 && ratio < 1.0 {
            let tail = t.abs() * ratio / (1.0 - ratio);
            let est = tail + 4.0 * EPS * sum.magnitude() * (1.0 + ((k + 1) as f64).log10());
            return EvalResult::new(sum.value(), est, k + 1).check_finite("Laplace series");
        }
        prev = t;
    }
    Err(Error::NoConvergence { terms: ctrl.max_terms })
}

/// L[E_{α,β}](s) by its 1/s series.
pub fn lt_ml(params: &MLParams, s: LTPoint, ctrl: &SeriesControl) -> Result<EvalResult> {
    params.validate()?;
    require_alpha(params.alpha)?;
    inverse_power_series(params.alpha, params.beta, 1, s.0, ctrl)
}

/// L[Ei_{α,β}](s) by its 1/s series.
pub fn lt_iml(params: &MLParams, s: LTPoint, ctrl: &SeriesControl) -> Result<EvalResult> {
    params.validate()?;
    require_alpha(params.alpha)?;
    inverse_power_series(params.alpha, params.alpha + params.beta, 2, s.0, ctrl)
}

/// Σ_{k=0}^{q−1} k! s^{−k−lead}/Γ(p(k+off)/q+β) · Σ_n Π(a_j)_n/Π(b_j)_n z^n
/// with a_j = (k+1+j)/q, b_j = (k+off)/q + (β+j)/p and z = (q/s)^q/p^p.
fn rational_sum(pq: RationalAlpha, beta: f64, s: f64, off: u32, lead: usize, ctrl: &SeriesControl) -> Result<EvalResult> {
    let (p, q) = (pq.p(), pq.q());
    let (pf, qf) = (p as f64, q as f64);
    let z = (qf / s).powi(q as i32) / pf.powi(p as i32);
    let mut total = EvalResult::exact(0.0);
    for k in 0..q {
        let upper: Vec<f64> = (0..q).map(|j| (k + 1 + j) as f64 / qf).collect();
        let lower: Vec<f64> = (0..p).map(|j| (k + off) as f64 / qf + (beta + j as f64) / pf).collect();
        let pre = fact_over_gamma(k as usize, pf * (k + off) as f64 / qf + beta, s, k as usize + lead);
        let f = reduced_pfq(&upper, &lower, z, ctrl)?;
        total += f.scale(pre);
    }
    EvalResult::new(total.value, total.est_error + 2.0 * EPS * total.value.abs(), total.work).check_finite("Laplace sum")
}

/// L[E_{p/q,β}](s) as a sum of q hypergeometric functions in (q/s)^q/p^p.
pub fn lt_ml_rational(pq: RationalAlpha, beta: f64, s: LTPoint, ctrl: &SeriesControl) -> Result<EvalResult> {
    let params = MLParams::new(pq.value(), beta)?;
    require_alpha(params.alpha)?;
    rational_sum(pq, beta, s.0, 0, 1, ctrl)
}

/// L[Ei_{p/q,β}](s) as a sum of q hypergeometric functions in (q/s)^q/p^p.
pub fn lt_iml_rational(pq: RationalAlpha, beta: f64, s: LTPoint, ctrl: &SeriesControl) -> Result<EvalResult> {
    let params = MLParams::new(pq.value(), beta)?;
    require_alpha(params.alpha)?;
    rational_sum(pq, beta, s.0, 1, 2, ctrl)
}

/// L[Ei_{p/q,β}](s) − L[E_{p/q,β}](s)/(p^{p/q} s).
///
/// A diagnostic only. The two sides do not agree for generic parameters.
pub fn lt_relation_residual(pq: RationalAlpha, beta: f64, s: LTPoint, ctrl: &SeriesControl) -> Result<f64> {
    let lhs = lt_iml_rational(pq, beta, s, ctrl)?.value;
    let rhs = lt_ml_rational(pq, beta, s, ctrl)?.value;
    let p = pq.p() as f64;
    Ok(lhs - rhs / (p.powf(pq.value()) * s.0))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::elementary::{ci, erf, si};
    use crate::hypergeometric::hyp;
    use crate::mittag_leffler::{iml, ml};
    use crate::quadrature::{laplace_quad, QuadControl};

    fn rel(a: f64, b: f64) -> f64 {
        ((a - b) / b).abs()
    }

    fn c() -> SeriesControl {
        SeriesControl::default()
    }

    fn pt(s: f64) -> LTPoint {
        LTPoint::new(s).unwrap()
    }

    #[test]
    fn elementary_transforms() {
        for &s in &[1.5, 2.0, 5.0] {
            let p = MLParams::new(1.0, 1.0).unwrap();
            assert!(rel(lt_ml(&p, pt(s), &c()).unwrap().value, 1.0 / (s - 1.0)) < 1e-13);
            let want = -(1.0 - 1.0 / s).ln() / s;
            assert!(rel(lt_iml(&p, pt(s), &c()).unwrap().value, want) < 1e-13);
            let p = MLParams::new(2.0, 2.0).unwrap();
            let u = 1.0 / (2.0 * s.sqrt());
            let want = std::f64::consts::PI.sqrt() / s.sqrt() * (1.0 / (4.0 * s)).exp() * erf(u).value;
            assert!(rel(lt_ml(&p, pt(s), &c()).unwrap().value, want) < 1e-13);
        }
    }

    #[test]
    fn rejects_small_alpha_and_s() {
        let p = MLParams::new(0.5, 1.0).unwrap();
        assert!(matches!(lt_ml(&p, pt(2.0), &c()), Err(Error::Divergent(_))));
        assert!(LTPoint::new(1.0).is_err());
    }

    #[test]
    fn matches_numerical_transform() {
        let q = QuadControl::with_tolerances(1e-15, 1e-11);
        for &(a, b) in &[(1.0, 1.0), (2.0, 1.0), (2.0, 2.0), (3.0, 1.0)] {
            let p = MLParams::new(a, b).unwrap();
            for &s in &[2.0, 3.0, 5.0] {
                let num = laplace_quad(|t| ml(&p, t, &c()).map_or(f64::NAN, |r| r.value), s, &q).unwrap().value;
                assert!(rel(lt_ml(&p, pt(s), &c()).unwrap().value, num) < 1e-6, "ml {a} {b} {s}");
                let num = laplace_quad(|t| iml(&p, t, &c()).map_or(f64::NAN, |r| r.value), s, &q).unwrap().value;
                assert!(rel(lt_iml(&p, pt(s), &c()).unwrap().value, num) < 1e-6, "iml {a} {b} {s}");
            }
        }
    }

    #[test]
    fn sine_and_cosine_integral_transforms() {
        let q = QuadControl::with_tolerances(1e-15, 1e-11);
        for &s in &[1.5, 2.0, 4.0] {
            let v = laplace_quad(|t| si(t).unwrap().value, s, &q).unwrap().value;
            assert!(rel(v, (1.0 / s).atan() / s) < 1e-6);
            let v = laplace_quad(|t| if t == 0.0 { 0.0 } else { ci(t).unwrap().value }, s, &q).unwrap().value;
            assert!(rel(v, -(1.0 + s * s).ln() / (2.0 * s)) < 1e-6);
        }
    }

    #[test]
    fn rational_forms_match_series() {
        for &(pp, qq) in &[(2, 1), (3, 1), (3, 2), (1, 1), (5, 3)] {
            let pq = RationalAlpha::new(pp, qq).unwrap();
            for &b in &[0.5, 1.0, 2.0] {
                let p = MLParams::new(pq.value(), b).unwrap();
                for &s in &[2.0, 5.0] {
                    let d = lt_ml(&p, pt(s), &c()).unwrap().value;
                    assert!(rel(lt_ml_rational(pq, b, pt(s), &c()).unwrap().value, d) < 1e-9, "{pq} {b} {s}");
                    let d = lt_iml(&p, pt(s), &c()).unwrap().value;
                    assert!(rel(lt_iml_rational(pq, b, pt(s), &c()).unwrap().value, d) < 1e-9, "{pq} {b} {s}");
                }
            }
        }
    }

    #[test]
    fn closed_forms_of_integral_transform() {
        let sp = std::f64::consts::PI.sqrt();
        for &s in &[2.0, 3.0, 5.0] {
            let acsc = (1.0 / f64::sqrt(s)).asin();
            let p = MLParams::new(1.0, 0.5).unwrap();
            let want = 2.0 * acsc / (sp * s * (s - 1.0).sqrt());
            assert!(rel(lt_iml(&p, pt(s), &c()).unwrap().value, want) < 1e-9);
            for &b in &[0.3, 0.7, 2.5] {
                let p = MLParams::new(2.0, b).unwrap();
                let want = hyp(&[1.0, 1.0], &[1.0 + b / 2.0, (b + 3.0) / 2.0], 1.0 / (4.0 * s), &c()).unwrap().value
                    / (gamma_raw(b + 2.0) * s * s);
                assert!(rel(lt_iml(&p, pt(s), &c()).unwrap().value, want) < 1e-9);
            }
        }
    }

    #[test]
    fn relation_residual_is_computed_from_both_sides() {
        let pq = RationalAlpha::new(1, 1).unwrap();
        let r = lt_relation_residual(pq, 1.0, pt(3.0), &c()).unwrap();
        let want = -(2.0f64 / 3.0).ln() / 3.0 - 1.0 / (3.0 * 2.0);
        assert!((r - want).abs() < 1e-13);
        assert!(lt_relation_residual(RationalAlpha::new(2, 1).unwrap(), 1.0, pt(4.0), &c()).unwrap().is_finite());
    }
}
