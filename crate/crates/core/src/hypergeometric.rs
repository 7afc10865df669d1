//! Generalized hypergeometric series
//!
//! ```text
//! pFq(a; b; z) = Σ_k (a₁)_k…(a_p)_k / ((b₁)_k…(b_q)_k) · z^k / k!
//! ```
//!
//! summed by term recurrence with compensated accumulation.

use crate::elementary::is_nonpositive_integer;
use crate::error::{invalid, Error, Result};
use crate::eval::{EvalResult, KahanSum, QuietCounter, SeriesControl};

const EPS: f64 = f64::EPSILON;

/// Parameters of a pFq evaluation.
#[derive(Debug, Clone, PartialEq)]
pub struct PFQParams {
    pub upper: Vec<f64>,
    pub lower: Vec<f64>,
    pub z: f64,
}

impl PFQParams {
    pub fn new(upper: &[f64], lower: &[f64], z: f64) -> Self {
        PFQParams {
            upper: upper.to_vec(),
            lower: lower.to_vec(),
            z,
        }
    }

    /// Number of terms after which the series terminates, if it does.
    fn terminates_after(&self) -> Option<usize> {
        self.upper
            .iter()
            .filter(|a| is_nonpositive_integer(**a))
            .map(|a| (-a) as usize)
            .min()
    }

    fn check(&self) -> Result<Option<usize>> {
        let stop = self.terminates_after();
        for &b in &self.lower {
            if is_nonpositive_integer(b) {
                let m = (-b) as usize;
                if stop.is_none_or(|n| n > m) {
                    return Err(invalid(format!("lower parameter {b} is a pole of the series")));
                }
            }
        }
        if stop.is_none() && self.z != 0.0 {
            let (p, q) = (self.upper.len(), self.lower.len());
            if p > q + 1 {
                return Err(Error::Divergent(format!("{p}F{q} diverges for z = {}", self.z)));
            }
            if p == q + 1 && self.z.abs() >= 1.0 {
                return Err(Error::Divergent(format!(
                    "{p}F{q} needs |z| < 1, got z = {}",
                    self.z
                )));
            }
        }
        Ok(stop)
    }

    /// Ratio t_{k+1}/t_k.
    fn ratio(&self, k: usize) -> f64 {
        let kf = k as f64;
        let num: f64 = self.upper.iter().map(|a| a + kf).product();
        let den: f64 = self.lower.iter().map(|b| b + kf).product();
        num / den * self.z / (kf + 1.0)
    }
}

/// Evaluate pFq by its defining series.
///
/// Non-terminating ₀F₀ and ₁F₁ at negative argument go through Kummer's
/// transformation, which turns the alternating sum into a positive one.
pub fn pfq(params: &PFQParams, ctrl: &SeriesControl) -> Result<EvalResult> {
    ctrl.validate()?;
    let stop = params.check()?;
    if params.z == 0.0 {
        return Ok(EvalResult::exact(1.0));
    }
    if stop.is_none() && params.z < 0.0 && params.upper.len() == params.lower.len() && params.lower.len() <= 1 {
        let flipped = match params.lower.first() {
            None => PFQParams::new(&[], &[], -params.z),
            Some(&b) => PFQParams::new(&[b - params.upper[0]], &[b], -params.z),
        };
        let scale = params.z.exp();
        let r = if flipped.upper.is_empty() {
            // e^z·₀F₀(−z) is identically one; use e^z directly.
            EvalResult::new(scale, EPS * scale, 1)
        } else {
            pfq(&flipped, ctrl)?.scale(scale)
        };
        return Ok(EvalResult::new(r.value, r.est_error + EPS * r.value.abs(), r.work));
    }
    let mut sum = KahanSum::new();
    let mut quiet = QuietCounter::new(ctrl);
    let mut term = 1.0;
    let mut k = 0usize;
    loop {
        sum.add(term);
        if stop == Some(k) {
            let r = EvalResult::new(sum.value(), 2.0 * EPS * sum.magnitude(), k + 1);
            return r.check_finite("hypergeometric sum");
        }
        let ratio = params.ratio(k);
        let settled = quiet.settled(term, sum.value());
        if stop.is_none() && settled && ratio.abs() < 1.0 {
            let next = (term * ratio).abs();
            let tail = next / (1.0 - ratio.abs());
            let r = EvalResult::new(sum.value(), tail + 2.0 * EPS * sum.magnitude(), k + 1);
            return r.check_finite("hypergeometric sum");
        }
        term *= ratio;
        k += 1;
        if k >= ctrl.max_terms {
            return Err(Error::NoConvergence { terms: k });
        }
        if !sum.value().is_finite() || !term.is_finite() {
            return Err(Error::Overflow("hypergeometric sum is not finite".into()));
        }
    }
}

/// Shorthand for [`pfq`] on slices.
pub fn hyp(upper: &[f64], lower: &[f64], z: f64, ctrl: &SeriesControl) -> Result<EvalResult> {
    pfq(&PFQParams::new(upper, lower, z), ctrl)
}

fn same(a: f64, b: f64) -> bool {
    (a - b).abs() <= 1e-14 * a.abs().max(1.0)
}

/// Σ_k Π(nᵢ)_k / Π(dⱼ)_k · z^k, i.e. a Pochhammer-ratio series without the
/// implicit 1/k!, rewritten as a pFq with identical upper/lower pairs
/// cancelled.
pub fn reduced_pfq(numer: &[f64], denom: &[f64], z: f64, ctrl: &SeriesControl) -> Result<EvalResult> {
    let (upper, lower) = reduced_lists(numer, denom);
    hyp(&upper, &lower, z, ctrl)
}

pub(crate) fn reduced_lists(numer: &[f64], denom: &[f64]) -> (Vec<f64>, Vec<f64>) {
    let mut upper = numer.to_vec();
    let mut lower = denom.to_vec();
    // (1)_k = k! absorbs the factorial of the pFq convention.
    if let Some(i) = lower.iter().position(|&b| same(b, 1.0)) {
        lower.remove(i);
    } else {
        upper.push(1.0);
    }
    let mut i = 0;
    while i < upper.len() {
        if let Some(j) = lower.iter().position(|&b| same(b, upper[i])) {
            lower.remove(j);
            upper.remove(i);
        } else {
            i += 1;
        }
    }
    (upper, lower)
}

/// ₂F₁(−n, b; c; z) as an exact finite sum.
///
/// At z = 2 the explicit sum cancels badly (terms of size ~3ⁿ around a
/// result of order one), so that case runs the three-term recurrence in n
/// instead: (c+n)F_{n+1} = (c−2b)F_n + n F_{n−1}.
pub fn gauss_2f1_terminating(n: u32, b: f64, c: f64, z: f64) -> Result<EvalResult> {
    if n == 0 {
        return Ok(EvalResult::exact(1.0));
    }
    if is_nonpositive_integer(c) && ((-c) as u32) < n {
        return Err(invalid(format!("(c)_k vanishes for c = {c} before the series ends at k = {n}")));
    }
    if z != 2.0 {
        let ctrl = SeriesControl {
            max_terms: n as usize + 2,
            ..SeriesControl::default()
        };
        return hyp(&[-(n as f64), b], &[c], z, &ctrl);
    }
    let mut prev: f64 = 1.0;
    let mut cur = (c - 2.0 * b) / c;
    let mut peak = prev.max(cur.abs());
    for j in 1..n {
        let jf = j as f64;
        let next = ((c - 2.0 * b) * cur + jf * prev) / (c + jf);
        prev = cur;
        cur = next;
        peak = peak.max(cur.abs());
    }
    Ok(EvalResult::new(cur, 4.0 * EPS * (n as f64 + 1.0) * peak, n as usize))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::elementary::gamma_raw;
    use proptest::prelude::*;
    use std::f64::consts::PI;

    fn rel(a: f64, b: f64) -> f64 {
        ((a - b) / b).abs()
    }

    fn ctrl() -> SeriesControl {
        SeriesControl::default()
    }

    #[test]
    fn exponential_and_logarithm() {
        for &x in &[-5.0, -0.5, 0.3, 2.0, 10.0] {
            let v = hyp(&[], &[], x, &ctrl()).unwrap().value;
            assert!(rel(v, f64::exp(x)) < 1e-13, "x={x}");
        }
        for &x in &[0.1, 0.5, 0.9] {
            let v = hyp(&[1.0, 1.0], &[2.0], x, &ctrl()).unwrap().value;
            assert!(rel(v, -(1.0 - x).ln() / x) < 1e-13, "x={x}");
        }
    }

    #[test]
    fn ml_two_half_via_1f2() {
        // E_{2,1/2}(x) = (1/√π) ₁F₂(1; 1/4, 3/4; x/4); direct series oracle
        let x = 1.7f64;
        let v = hyp(&[1.0], &[0.25, 0.75], x / 4.0, &ctrl()).unwrap().value / PI.sqrt();
        let direct: f64 = (0..60).map(|k| x.powi(k) / gamma_raw(2.0 * k as f64 + 0.5)).sum();
        assert!(rel(v, direct) < 1e-14);
    }

    #[test]
    fn error_contract() {
        assert!(matches!(hyp(&[1.0], &[-2.0], 0.5, &ctrl()), Err(Error::InvalidParams(_))));
        // terminating before the pole is fine
        assert!(hyp(&[-1.0], &[-2.0], 0.5, &ctrl()).is_ok());
        assert!(matches!(hyp(&[1.0, 1.0, 1.0], &[2.0], 0.5, &ctrl()), Err(Error::Divergent(_))));
        assert!(matches!(hyp(&[1.0, 1.0], &[2.0], 1.0, &ctrl()), Err(Error::Divergent(_))));
        let tight = SeriesControl::new(1e-15, 5, 3).unwrap();
        assert!(matches!(hyp(&[], &[], 30.0, &tight), Err(Error::NoConvergence { .. })));
        assert!(matches!(hyp(&[], &[], 800.0, &ctrl()), Err(Error::Overflow(_))));
        assert_eq!(hyp(&[1.0, 1.0, 1.0], &[2.0], 0.0, &ctrl()).unwrap().value, 1.0);
    }

    #[test]
    fn reduced_lists_absorb_factorial() {
        assert_eq!(reduced_lists(&[0.5], &[1.0, 2.0]), (vec![0.5], vec![2.0]));
        assert_eq!(reduced_lists(&[0.5], &[2.0]), (vec![0.5, 1.0], vec![2.0]));
        assert_eq!(reduced_lists(&[2.0, 0.5], &[2.0, 1.5]), (vec![0.5, 1.0], vec![1.5]));
        // Σ z^k = 1/(1−z)
        let v = reduced_pfq(&[], &[], 0.25, &ctrl()).unwrap().value;
        assert!(rel(v, 4.0 / 3.0) < 1e-15);
    }

    #[test]
    fn terminating_small_cases() {
        assert_eq!(gauss_2f1_terminating(0, 3.0, 4.0, 2.0).unwrap().value, 1.0);
        // ₂F₁(−2, b; c; z) = 1 − 2bz/c + b(b+1)z²/(c(c+1))
        let (b, c) = (0.7f64, 2.3f64);
        for &z in &[0.5, 2.0, -1.5] {
            let v = gauss_2f1_terminating(2, b, c, z).unwrap().value;
            let e = 1.0 - 2.0 * b * z / c + b * (b + 1.0) * z * z / (c * (c + 1.0));
            assert!(rel(v, e) < 1e-14, "z={z}");
        }
        assert!(gauss_2f1_terminating(3, 1.0, -1.0, 2.0).is_err());
    }

    /// Parity closed form for ₂F₁(−n, λ; 2λ+1; 2).
    fn plus_form(n: u32, l: f64) -> f64 {
        let nf = n as f64;
        let pre = gamma_raw(l + 0.5) / PI.sqrt();
        if n.is_multiple_of(2) {
            pre * gamma_raw((nf + 1.0) / 2.0) / gamma_raw(l + (nf + 1.0) / 2.0)
        } else {
            pre * gamma_raw(nf / 2.0 + 1.0) / gamma_raw(l + nf / 2.0 + 1.0)
        }
    }

    /// Parity closed form for ₂F₁(−n, λ; 2λ−1; 2).
    fn minus_form(n: u32, l: f64) -> f64 {
        let nf = n as f64;
        let pre = gamma_raw(l - 0.5) / PI.sqrt();
        if n.is_multiple_of(2) {
            pre * gamma_raw((nf + 1.0) / 2.0) / gamma_raw(l + (nf - 1.0) / 2.0)
        } else {
            -pre * gamma_raw(nf / 2.0 + 1.0) / gamma_raw(l + nf / 2.0)
        }
    }

    #[test]
    fn parity_closed_forms() {
        for &l in &[0.6, 1.5, 2.25] {
            for n in 0..=30u32 {
                let v = gauss_2f1_terminating(n, l, 2.0 * l + 1.0, 2.0).unwrap().value;
                assert!(rel(v, plus_form(n, l)) <= 1e-12, "plus n={n} l={l}");
                let v = gauss_2f1_terminating(n, l, 2.0 * l - 1.0, 2.0).unwrap().value;
                assert!(rel(v, minus_form(n, l)) <= 1e-12, "minus n={n} l={l}");
            }
        }
    }

    proptest! {
        #[test]
        fn kummer_with_equal_parameters(z in -10.0f64..10.0, i in 0usize..3) {
            let a = [0.3, 1.7, 4.0][i];
            let v = hyp(&[a], &[a], z, &ctrl()).unwrap().value;
            prop_assert!(rel(v, z.exp()) <= 1e-13);
        }

        #[test]
        fn terminating_sum_is_bitwise_explicit(
            n in 0u32..=12, b in -3.0f64..3.0, c in 0.1f64..5.0, z in -3.0f64..3.0,
        ) {
            let params = PFQParams::new(&[-(n as f64), b], &[c], z);
            let v = pfq(&params, &ctrl()).unwrap().value;
            let mut sum = KahanSum::new();
            let mut t = 1.0;
            for k in 0..=n as usize {
                sum.add(t);
                t *= params.ratio(k);
            }
            let explicit = if z == 0.0 { 1.0 } else { sum.value() };
            prop_assert_eq!(v.to_bits(), explicit.to_bits());
        }
    }
}
