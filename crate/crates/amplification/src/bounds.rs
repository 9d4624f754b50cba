//! Proved bounds, checked against computed amplification factors.

use std::f64::consts::PI;

use methods_catalog::{is_canonical_ssp, Family, Method};
use num::complex::Complex64;
use rk_core::Scalar;
use stab_poly::{FormEvaluator, PointEvaluator};

use crate::factor::AmplificationReport;
use crate::ssp3::ssp3_analytic;

#[derive(Debug, Clone, PartialEq)]
pub struct BoundCheck {
    pub name: String,
    /// `None` when the bound does not apply; `note` says why.
    pub satisfied: Option<bool>,
    /// `bound - value` for upper bounds, `value - bound` for lower bounds.
    pub margin: f64,
    pub note: String,
}

fn upper(name: &str, value: f64, bound: f64) -> BoundCheck {
    BoundCheck {
        name: name.into(),
        satisfied: Some(value <= bound),
        margin: bound - value,
        note: String::new(),
    }
}

fn lower(name: &str, value: f64, bound: f64) -> BoundCheck {
    BoundCheck {
        name: name.into(),
        satisfied: Some(value >= bound),
        margin: value - bound,
        note: String::new(),
    }
}

fn skipped(name: &str, why: &str) -> BoundCheck {
    BoundCheck {
        name: name.into(),
        satisfied: None,
        margin: f64::NAN,
        note: why.into(),
    }
}

/// Largest `|Q_j|`, `j ≥ 2`, over a polar grid of `{|z + C| ≤ C}` (about 1000 points).
fn disk_max(method: &Method, c: f64) -> f64 {
    let eval = FormEvaluator::new(&method.shu_osher());
    let mut best = 0.0f64;
    for ri in 0..=20 {
        let r = c * ri as f64 / 20.0;
        let m = if ri == 0 { 1 } else { 50 };
        for k in 0..m {
            let z = Complex64::new(-c, 0.0)
                + Complex64::from_polar(r, std::f64::consts::TAU * k as f64 / m as f64);
            let (_, q) = eval.eval(z);
            best = q.iter().skip(1).map(|v| v.norm()).fold(best, f64::max);
        }
    }
    best
}

/// Evaluate every proved bound that applies to `method`.
pub fn verify_bounds(report: &AmplificationReport, method: &Method) -> Vec<BoundCheck> {
    let p = method.spec.param;
    let pf = p as f64;
    let mut out = Vec::new();
    let ssp_c = match method.spec.family {
        Family::Ssp2 => Some(pf - 1.0),
        Family::Ssp3 => Some(pf * pf - pf),
        _ => None,
    };
    match (ssp_c, method.exact()) {
        (Some(c), Some(so)) if is_canonical_ssp(so, &Scalar::from_int(c as i64)).is_ok() => {
            out.push(upper(
                "ssp disk: M(D_C) <= 1",
                disk_max(method, c),
                1.0 + 1e-9,
            ));
        }
        _ => out.push(skipped(
            "ssp disk: M(D_C) <= 1",
            "not a canonical SSP implementation",
        )),
    }
    match method.spec.family {
        Family::Ssp2 => out.push(upper("ssp2: M <= (s+1)/s", report.m_full, (pf + 1.0) / pf)),
        Family::Ssp3 => {
            let a = ssp3_analytic(p);
            if p >= 4 {
                out.push(upper("ssp3: M < sqrt(n)", report.m_full, pf.sqrt()));
            } else {
                out.push(skipped("ssp3: M < sqrt(n)", "only holds for n >= 4"));
            }
            if let Some([l2, l1, u1, u2]) = a.bound_check {
                let v = report.m_full;
                out.push(lower("ssp3: M > 0.9 sqrt(n/ln n)", v, l2));
                out.push(lower(
                    "ssp3: M > (1 + ln n/n² - ln ln n/n²)^((n²-n)/2)",
                    v,
                    l1,
                ));
                out.push(upper(
                    "ssp3: M < (1 + ln n/n² - ln ln n/(8n²))^((n²-n)/2)",
                    v,
                    u1,
                ));
                out.push(upper("ssp3: M < sqrt(n)/ln(n)^(1/16)", v, u2));
            } else {
                out.push(skipped("ssp3: sandwich", "only proved for n >= 9"));
            }
        }
        Family::EeExtrap if method.spec.form == methods_catalog::FormPreference::Natural => {
            let sq = (pf - 1.0).sqrt();
            if p == 2 {
                out.push(upper(
                    "ee: M(S_2) <= 13e²/(10 sqrt(pi))",
                    report.m_full,
                    13.0 * 1f64.exp().powi(2) / (10.0 * PI.sqrt()),
                ));
            }
            if p >= 3 {
                out.push(upper(
                    "ee: M(S_p) < 9.34^p/(5.2 pi sqrt(p-1))",
                    report.m_full,
                    9.34f64.powf(pf) / (5.2 * PI * sq),
                ));
                out.push(upper(
                    "ee: M(S_p ∩ C-) < 7.01^p/(3.9 pi sqrt(p-1))",
                    report.m_half,
                    7.01f64.powf(pf) / (3.9 * PI * sq),
                ));
                out.push(upper(
                    "ee: M({0}) < 3.592^p/(2 pi sqrt(p-1))",
                    report.m_zero,
                    3.592f64.powf(pf) / (2.0 * PI * sq),
                ));
            }
            if p >= 4 {
                out.push(lower(
                    "ee: M({0}) > 0.117 * 3.577^p/p",
                    report.m_zero,
                    0.117 * 3.577f64.powf(pf) / pf,
                ));
            }
        }
        Family::EmExtrap if method.spec.form == methods_catalog::FormPreference::Natural => {
            let r = p / 2;
            if (1..=8).contains(&r) {
                out.push(upper(
                    "em: M(S_p) < sqrt(2/pi) 4.74^p/sqrt(p)",
                    report.m_full,
                    (2.0 / PI).sqrt() * 4.74f64.powf(pf) / pf.sqrt(),
                ));
            } else {
                out.push(upper(
                    "em: M(S_p) < 4.986^p/(pi sqrt(p-1))",
                    report.m_full,
                    4.986f64.powf(pf) / (PI * (pf - 1.0).sqrt()),
                ));
            }
            if p >= 12 {
                out.push(upper(
                    "em: M(S_p ∩ C-) < 3.423^p/(pi sqrt(p-1))",
                    report.m_half,
                    3.423f64.powf(pf) / (PI * (pf - 1.0).sqrt()),
                ));
            }
        }
        Family::EeExtrap | Family::EmExtrap => out.push(skipped(
            "extrapolation bounds",
            "proved for the natural implementation only",
        )),
        Family::Classic(_) => {
            out.push(skipped("family bounds", "no proved bound for this tableau"))
        }
    }
    out
}
