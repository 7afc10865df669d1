use std::fmt;

use crate::error::{invalid, Error, Result};

/// A computed value together with an absolute error estimate and a work
/// counter (series terms summed or quadrature panels used).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EvalResult {
    pub value: f64,
    pub est_error: f64,
    pub work: usize,
}

impl EvalResult {
    pub fn new(value: f64, est_error: f64, work: usize) -> Self {
        EvalResult {
            value,
            est_error: est_error.abs(),
            work,
        }
    }

    /// An exactly known value.
    pub fn exact(value: f64) -> Self {
        EvalResult::new(value, 0.0, 0)
    }

    /// A value from a closed-form evaluation of a few rounded operations.
    pub(crate) fn rounded(value: f64) -> Self {
        EvalResult::new(value, 4.0 * f64::EPSILON * value.abs(), 1)
    }

    pub fn scale(self, factor: f64) -> Self {
        EvalResult::new(self.value * factor, self.est_error * factor.abs(), self.work)
    }

    pub(crate) fn check_finite(self, what: &str) -> Result<Self> {
        if self.value.is_finite() {
            Ok(self)
        } else {
            Err(Error::Overflow(format!("{what} is not representable")))
        }
    }
}

/// Errors add, work adds.
impl std::ops::Add for EvalResult {
    type Output = EvalResult;

    fn add(self, other: EvalResult) -> EvalResult {
        EvalResult::new(
            self.value + other.value,
            self.est_error + other.est_error,
            self.work + other.work,
        )
    }
}

impl std::ops::AddAssign for EvalResult {
    fn add_assign(&mut self, other: EvalResult) {
        *self = *self + other;
    }
}

impl fmt::Display for EvalResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (± {:e}, work {})", self.value, self.est_error, self.work)
    }
}

/// Stopping policy for infinite series.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SeriesControl {
    /// A term counts as negligible once `|term| <= rel_tol * |sum|`.
    pub rel_tol: f64,
    /// Hard cap on the number of terms.
    pub max_terms: usize,
    /// Number of consecutive negligible terms required before stopping.
    pub quiet_terms: usize,
}

impl Default for SeriesControl {
    fn default() -> Self {
        SeriesControl {
            rel_tol: 1e-15,
            max_terms: 10_000,
            quiet_terms: 3,
        }
    }
}

impl SeriesControl {
    pub fn new(rel_tol: f64, max_terms: usize, quiet_terms: usize) -> Result<Self> {
        let ctrl = SeriesControl {
            rel_tol,
            max_terms,
            quiet_terms,
        };
        ctrl.validate()?;
        Ok(ctrl)
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.rel_tol > 0.0) || self.max_terms < 1 || self.quiet_terms < 1 {
            return Err(invalid(format!("bad series control {self:?}")));
        }
        Ok(())
    }
}

/// Tracks the consecutive-small-terms stopping rule.
#[derive(Debug)]
pub(crate) struct QuietCounter {
    rel_tol: f64,
    needed: usize,
    run: usize,
}

impl QuietCounter {
    pub(crate) fn new(ctrl: &SeriesControl) -> Self {
        QuietCounter {
            rel_tol: ctrl.rel_tol,
            needed: ctrl.quiet_terms,
            run: 0,
        }
    }

    /// Feed the latest term and the running sum; true once the series may stop.
    pub(crate) fn settled(&mut self, term: f64, sum: f64) -> bool {
        if term == 0.0 || term.abs() <= self.rel_tol * sum.abs() {
            self.run += 1;
        } else {
            self.run = 0;
        }
        self.run >= self.needed
    }
}

/// Kahan-compensated accumulator.
#[derive(Debug, Default, Clone, Copy)]
pub(crate) struct KahanSum {
    sum: f64,
    comp: f64,
    abs_sum: f64,
}

impl KahanSum {
    pub(crate) fn new() -> Self {
        Self::default()
    }

    pub(crate) fn add(&mut self, x: f64) {
        let y = x - self.comp;
        let t = self.sum + y;
        self.comp = (t - self.sum) - y;
        self.sum = t;
        self.abs_sum += x.abs();
    }

    pub(crate) fn value(&self) -> f64 {
        self.sum
    }

    /// Sum of absolute values of everything added; the rounding error of the
    /// individual terms scales with it.
    pub(crate) fn magnitude(&self) -> f64 {
        self.abs_sum
    }
}

/// A positive rational `p/q` in lowest terms.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct RationalAlpha {
    p: u32,
    q: u32,
}

impl RationalAlpha {
    pub fn new(p: u32, q: u32) -> Result<Self> {
        if p == 0 || q == 0 {
            return Err(invalid(format!("p/q = {p}/{q} must be positive")));
        }
        if gcd(p, q) != 1 {
            return Err(invalid(format!("p/q = {p}/{q} is not in lowest terms")));
        }
        Ok(RationalAlpha { p, q })
    }

    /// Reduce an arbitrary positive fraction.
    pub fn reduced(p: u32, q: u32) -> Result<Self> {
        if p == 0 || q == 0 {
            return Err(invalid(format!("p/q = {p}/{q} must be positive")));
        }
        let g = gcd(p, q);
        Self::new(p / g, q / g)
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn q(&self) -> u32 {
        self.q
    }

    pub fn value(&self) -> f64 {
        self.p as f64 / self.q as f64
    }
}

impl fmt::Display for RationalAlpha {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.p, self.q)
    }
}

fn gcd(mut a: u32, mut b: u32) -> u32 {
    while b != 0 {
        let r = a % b;
        a = b;
        b = r;
    }
    a
}
