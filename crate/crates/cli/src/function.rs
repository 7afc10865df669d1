//! Maps `--fn` names and parameter flags onto core evaluators.

use std::str::FromStr;

use specint_core::elementary::{
    airy_ai, bessel_i, bessel_k, chi, ci, dawson, e1, ei, erf, erfc, erfi, gamma, laguerre_nu, ln_gamma, rgamma, shi,
    si, AiryKind,
};
use specint_core::mittag_leffler::{iml, iml_rational, ml, ml_rational, MLParams};
use specint_core::whittaker::{
    integral_mi, integral_mi_tail, integral_wi, integral_wi_tail, whittaker_m, whittaker_w, WhittakerParams,
};
use specint_core::wright::{
    integral_mainardi, integral_mainardi_series, integral_wright, integral_wright_rational, mainardi,
    mainardi_rational, wright_rational, wright_w, IntegralMainardiKind, MainardiKind, WrightParams,
};
use specint_core::{Error, EvalResult, QuadControl, RationalAlpha, Result, SeriesControl};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    Ml,
    Iml,
    WhittakerM,
    WhittakerW,
    Mi,
    Wi,
    MiTail,
    WiTail,
    Wright,
    Iwright,
    MainardiF,
    MainardiM,
    ImainardiF,
    ImainardiM,
    Elementary(Elementary),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Elementary {
    Gamma,
    Rgamma,
    LnGamma,
    Erf,
    Erfc,
    Erfi,
    Dawson,
    E1,
    Ei,
    Si,
    Ci,
    Shi,
    Chi,
    AiryAi,
    AiryAiPrime,
    BesselI,
    BesselK,
    Laguerre,
}

const ELEMENTARY: [(&str, Elementary); 18] = [
    ("gamma", Elementary::Gamma),
    ("rgamma", Elementary::Rgamma),
    ("lngamma", Elementary::LnGamma),
    ("erf", Elementary::Erf),
    ("erfc", Elementary::Erfc),
    ("erfi", Elementary::Erfi),
    ("dawson", Elementary::Dawson),
    ("e1", Elementary::E1),
    ("ei", Elementary::Ei),
    ("si", Elementary::Si),
    ("ci", Elementary::Ci),
    ("shi", Elementary::Shi),
    ("chi", Elementary::Chi),
    ("airy_ai", Elementary::AiryAi),
    ("airy_ai_prime", Elementary::AiryAiPrime),
    ("bessel_i", Elementary::BesselI),
    ("bessel_k", Elementary::BesselK),
    ("laguerre", Elementary::Laguerre),
];

impl FromStr for Family {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        let f = match s {
            "ml" => Family::Ml,
            "iml" => Family::Iml,
            "whittaker_m" => Family::WhittakerM,
            "whittaker_w" => Family::WhittakerW,
            "mi" => Family::Mi,
            "wi" => Family::Wi,
            "mi_tail" => Family::MiTail,
            "wi_tail" => Family::WiTail,
            "wright" => Family::Wright,
            "iwright" => Family::Iwright,
            "mainardi_f" => Family::MainardiF,
            "mainardi_m" => Family::MainardiM,
            "imainardi_f" => Family::ImainardiF,
            "imainardi_m" => Family::ImainardiM,
            other => {
                let name = other
                    .strip_prefix("elementary:")
                    .ok_or_else(|| format!("unknown function `{other}`"))?;
                let (_, e) = ELEMENTARY
                    .iter()
                    .find(|(n, _)| *n == name)
                    .ok_or_else(|| format!("unknown elementary function `{name}`"))?;
                Family::Elementary(*e)
            }
        };
        Ok(f)
    }
}

/// Named parameters as given on the command line.
#[derive(Debug, Clone, Copy, Default)]
pub struct ParamSet {
    pub alpha: Option<f64>,
    pub beta: Option<f64>,
    pub kappa: Option<f64>,
    pub mu: Option<f64>,
    pub p: Option<u32>,
    pub q: Option<u32>,
}

/// A fully resolved function of one real variable.
#[derive(Debug, Clone, Copy)]
pub struct FunctionId {
    pub family: Family,
    pub params: ParamSet,
}

fn usage(msg: impl Into<String>) -> Error {
    Error::InvalidParams(msg.into())
}

fn need(v: Option<f64>, name: &str, family: &str) -> Result<f64> {
    v.ok_or_else(|| usage(format!("{family} needs --{name}")))
}

impl FunctionId {
    pub fn new(family: Family, params: ParamSet) -> Result<Self> {
        let id = FunctionId { family, params };
        id.check_arity()?;
        Ok(id)
    }

    fn rational(&self) -> Result<Option<RationalAlpha>> {
        match (self.params.p, self.params.q) {
            (Some(p), Some(q)) => RationalAlpha::new(p, q).map(Some),
            (None, None) => Ok(None),
            _ => Err(usage("--p and --q must be given together")),
        }
    }

    fn check_arity(&self) -> Result<()> {
        let ps = &self.params;
        let has_ratio = ps.p.is_some() || ps.q.is_some();
        let uses_alpha = matches!(
            self.family,
            Family::Ml | Family::Iml | Family::Wright | Family::Iwright | Family::MainardiF | Family::MainardiM
        );
        let uses_beta = matches!(self.family, Family::Ml | Family::Iml | Family::Wright | Family::Iwright);
        let whittaker = matches!(
            self.family,
            Family::WhittakerM | Family::WhittakerW | Family::Mi | Family::Wi | Family::MiTail | Family::WiTail
        );
        let imainardi = matches!(self.family, Family::ImainardiF | Family::ImainardiM);
        let nu = matches!(
            self.family,
            Family::Elementary(Elementary::BesselI | Elementary::BesselK | Elementary::Laguerre)
        );
        if has_ratio && !(uses_alpha || imainardi) {
            return Err(usage("--p/--q only apply to rational-order families"));
        }
        if has_ratio && ps.alpha.is_some() {
            return Err(usage("give either --alpha or --p/--q, not both"));
        }
        if ps.alpha.is_some() && !(uses_alpha || nu || imainardi) {
            return Err(usage("--alpha does not apply to this function"));
        }
        if ps.beta.is_some() && !uses_beta {
            return Err(usage("--beta does not apply to this function"));
        }
        if (ps.kappa.is_some() || ps.mu.is_some()) && !whittaker {
            return Err(usage("--kappa/--mu only apply to Whittaker families"));
        }
        self.rational()?;
        Ok(())
    }

    fn alpha_or_ratio(&self, family: &str) -> Result<(f64, Option<RationalAlpha>)> {
        match self.rational()? {
            Some(pq) => Ok((pq.value(), Some(pq))),
            None => Ok((need(self.params.alpha, "alpha", family)?, None)),
        }
    }

    pub fn eval(&self, x: f64, ctrl: &SeriesControl) -> Result<EvalResult> {
        let ps = &self.params;
        let whittaker = || WhittakerParams::new(need(ps.kappa, "kappa", "whittaker")?, need(ps.mu, "mu", "whittaker")?);
        let quad = QuadControl::default();
        match self.family {
            Family::Ml | Family::Iml => {
                let (alpha, pq) = self.alpha_or_ratio("ml")?;
                let beta = need(ps.beta, "beta", "ml")?;
                match (self.family, pq) {
                    (Family::Ml, Some(pq)) => ml_rational(pq, beta, x, ctrl),
                    (Family::Ml, None) => ml(&MLParams::new(alpha, beta)?, x, ctrl),
                    (_, Some(pq)) => iml_rational(pq, beta, x, ctrl),
                    (_, None) => iml(&MLParams::new(alpha, beta)?, x, ctrl),
                }
            }
            Family::WhittakerM => whittaker_m(&whittaker()?, x, ctrl),
            Family::WhittakerW => whittaker_w(&whittaker()?, x, ctrl),
            Family::Mi => integral_mi(&whittaker()?, x, ctrl),
            Family::Wi => integral_wi(&whittaker()?, x, ctrl),
            Family::MiTail => integral_mi_tail(&whittaker()?, x, &quad),
            Family::WiTail => integral_wi_tail(&whittaker()?, x, &quad),
            Family::Wright | Family::Iwright => {
                let (alpha, pq) = self.alpha_or_ratio("wright")?;
                let beta = need(ps.beta, "beta", "wright")?;
                match (self.family, pq) {
                    (Family::Wright, Some(pq)) => wright_rational(pq, beta, x, ctrl),
                    (Family::Wright, None) => wright_w(&WrightParams::new(alpha, beta)?, x, ctrl),
                    (_, Some(pq)) => integral_wright_rational(pq, beta, x, ctrl),
                    (_, None) => integral_wright(&WrightParams::new(alpha, beta)?, x, ctrl),
                }
            }
            Family::MainardiF | Family::MainardiM => {
                let kind = if self.family == Family::MainardiF { MainardiKind::F } else { MainardiKind::M };
                match self.alpha_or_ratio("mainardi")? {
                    (_, Some(pq)) => mainardi_rational(kind, pq, x, ctrl),
                    (alpha, None) => mainardi(kind, alpha, x, ctrl),
                }
            }
            Family::ImainardiF | Family::ImainardiM => {
                let kind = if self.family == Family::ImainardiF {
                    IntegralMainardiKind::Fi
                } else {
                    IntegralMainardiKind::Mi
                };
                match self.alpha_or_ratio("imainardi")? {
                    (_, Some(pq)) => integral_mainardi(kind, pq, x, ctrl),
                    (alpha, None) => integral_mainardi_series(kind, alpha, x, ctrl),
                }
            }
            Family::Elementary(e) => {
                let nu = || need(ps.alpha, "alpha", "bessel/laguerre order");
                match e {
                    Elementary::Gamma => gamma(x),
                    Elementary::Rgamma => rgamma(x),
                    Elementary::LnGamma => ln_gamma(x),
                    Elementary::Erf => Ok(erf(x)),
                    Elementary::Erfc => Ok(erfc(x)),
                    Elementary::Erfi => erfi(x),
                    Elementary::Dawson => Ok(dawson(x)),
                    Elementary::E1 => e1(x),
                    Elementary::Ei => ei(x),
                    Elementary::Si => si(x),
                    Elementary::Ci => ci(x),
                    Elementary::Shi => shi(x),
                    Elementary::Chi => chi(x),
                    Elementary::AiryAi => airy_ai(AiryKind::Ai, x),
                    Elementary::AiryAiPrime => airy_ai(AiryKind::AiPrime, x),
                    Elementary::BesselI => bessel_i(nu()?, x),
                    Elementary::BesselK => bessel_k(nu()?, x),
                    Elementary::Laguerre => laguerre_nu(nu()?, x),
                }
            }
        }
    }
}
