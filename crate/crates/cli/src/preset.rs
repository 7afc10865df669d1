//! Curve families behind `grid --fig`.

use crate::function::{Family, FunctionId, ParamSet};
use specint_core::Result;

pub struct Curve {
    pub label: String,
    pub function: FunctionId,
}

pub struct Preset {
    pub curves: Vec<Curve>,
    pub x_min: f64,
    pub x_max: f64,
}

pub const NAMES: [&str; 6] = ["ei-alpha", "ei-beta", "mi", "mi-tail", "wi", "wi-tail"];

fn ml_curve(alpha: f64, beta: f64, label: String) -> Result<Curve> {
    let params = ParamSet { alpha: Some(alpha), beta: Some(beta), ..Default::default() };
    Ok(Curve { label, function: FunctionId::new(Family::Iml, params)? })
}

fn whittaker_curves(family: Family, set: &[(f64, f64)]) -> Result<Vec<Curve>> {
    set.iter()
        .map(|&(k, m)| {
            let params = ParamSet { kappa: Some(k), mu: Some(m), ..Default::default() };
            Ok(Curve {
                label: format!("kappa={k};mu={m}"),
                function: FunctionId::new(family, params)?,
            })
        })
        .collect()
}

pub fn lookup(name: &str) -> Option<Result<Preset>> {
    let built = match name {
        // Ei_{1/4,1} grows like exp(x^4) and leaves f64 range just past 2.6.
        "ei-alpha" => [0.25, 0.5, 1.0, 1.5, 2.0]
            .iter()
            .map(|&a| ml_curve(a, 1.0, format!("alpha={a}")))
            .collect::<Result<Vec<_>>>()
            .map(|curves| Preset { curves, x_min: 0.0, x_max: 2.5 }),
        "ei-beta" => [0.5, 1.0, 1.5, 2.0, 3.0]
            .iter()
            .map(|&b| ml_curve(1.0, b, format!("beta={b}")))
            .collect::<Result<Vec<_>>>()
            .map(|curves| Preset { curves, x_min: 0.0, x_max: 5.0 }),
        "mi" => whittaker_curves(Family::Mi, &[(0.0, 0.5), (0.5, 0.0), (1.0, 0.5), (1.5, 1.0), (2.0, 1.5)])
            .map(|curves| Preset { curves, x_min: 0.05, x_max: 10.0 }),
        "mi-tail" => whittaker_curves(Family::MiTail, &[(0.5, 0.0), (1.0, 0.5), (1.5, 1.0), (2.0, 1.5), (3.0, 0.5)])
            .map(|curves| Preset { curves, x_min: 0.1, x_max: 10.0 }),
        "wi" => whittaker_curves(Family::Wi, &[(0.25, 0.25), (0.5, 0.0), (1.0, 0.5), (1.5, 1.0), (2.0, 1.5)])
            .map(|curves| Preset { curves, x_min: 0.05, x_max: 10.0 }),
        "wi-tail" => whittaker_curves(Family::WiTail, &[(0.5, 0.0), (1.0, 0.5), (1.5, 0.0), (2.0, 0.5), (3.0, 1.5)])
            .map(|curves| Preset { curves, x_min: 0.1, x_max: 10.0 }),
        _ => return None,
    };
    Some(built)
}
