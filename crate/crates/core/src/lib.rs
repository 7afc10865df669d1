//! Real-valued special functions built around integral transforms of the
//! Mittag-Leffler, Whittaker and Wright families.
//!
//! Every evaluator returns an [`EvalResult`] carrying an absolute error
//! estimate and a work counter. Series evaluators take a [`SeriesControl`],
//! quadrature-based ones a [`QuadControl`].

#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod elementary;
pub mod error;
pub mod eval;
pub mod fixtures;
pub mod hypergeometric;
pub mod laplace;
pub mod mittag_leffler;
pub mod quadrature;
mod series;
pub mod whittaker;
pub mod wright;

pub use error::{Error, Result};
pub use eval::{EvalResult, RationalAlpha, SeriesControl};
pub use quadrature::QuadControl;

/// Euler–Mascheroni constant.
pub const EULER_GAMMA: f64 = 0.577_215_664_901_532_9;
