//! Real-valued building blocks: gamma, incomplete gamma, exponential and
//! trigonometric integrals, the error function family, modified Bessel and
//! Struve functions, Airy Ai and Laguerre functions of real degree.

mod bessel;
mod erf;
mod gamma;
mod integrals;

pub use bessel::{airy_ai, bessel_i, bessel_k, bessel_mod, struve_l, AiryKind, BesselKind};
pub use erf::{dawson, erf, erfc, erfi, error_family, ErfKind};
pub use gamma::{
    cos_pi, gamma, gamma_family, incomplete_gamma, ln_gamma, rgamma, sin_pi, GammaKind, IncGammaKind,
};
pub use integrals::{
    chi, ci, e1, ei, exp_integrals, hyp_integrals, shi, si, trig_integrals, ExpIntKind, HypIntKind,
    TrigIntKind,
};

pub(crate) use gamma::{gamma_raw, is_nonpositive_integer, ln_gamma_signed, power_over_gamma, rgamma_raw};
pub(crate) use integrals::ein;

use crate::error::Result;
use crate::eval::{EvalResult, SeriesControl};
use crate::hypergeometric::hyp;

/// Laguerre function L_ν(x) = ₁F₁(−ν; 1; x).
pub fn laguerre_nu(nu: f64, x: f64) -> Result<EvalResult> {
    hyp(&[-nu], &[1.0], x, &SeriesControl::default())
}
