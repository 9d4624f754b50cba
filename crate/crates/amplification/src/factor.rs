use std::cell::RefCell;

use methods_catalog::{Family, Method};
use num::complex::Complex64;
use region::{trace_region, trace_region_scaled, StabilityRegion};
use rk_core::{Rational, Scalar};
use serde_json::{json, Value};
use stab_poly::{FormEvaluator, PointEvaluator};

use crate::error::AmpError;

/// A maximum of `|Q_j|` with its location; `stage` is 1-based.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Amplification {
    pub value: f64,
    pub stage: usize,
    pub z: Complex64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct AmplificationReport {
    pub method_id: String,
    pub m_full: f64,
    pub m_half: f64,
    pub m_zero: f64,
    /// `M` over the connected component of `S` containing the origin.
    pub m_origin: f64,
    pub argmax_full: (usize, Complex64),
    pub argmax_half: (usize, Complex64),
}

impl AmplificationReport {
    pub fn to_json(&self) -> Value {
        let at = |(j, z): (usize, Complex64)| json!({ "stage": j, "re": z.re, "im": z.im });
        json!({
            "method": self.method_id,
            "M": self.m_full,
            "M_half_plane": self.m_half,
            "M0": self.m_zero,
            "M_origin_component": self.m_origin,
            "argmax": at(self.argmax_full),
            "argmax_half_plane": at(self.argmax_half),
        })
    }
}

/// `max_{j≥2} max_{z∈Ω} |Q_j(z)|` over the traced region or its left half.
pub fn amplification_factor<E: PointEvaluator>(
    eval: &E,
    region: &StabilityRegion,
    half_plane: bool,
) -> Result<Amplification, AmpError> {
    let s = eval.stages();
    if s < 2 {
        return Err(AmpError::NoStages);
    }
    for line in &region.boundary {
        let z = line.z[0];
        let (p, _) = eval.eval(z);
        if (p.norm() - 1.0).abs() > 1e-6 + 1e3 * region.noise_at(z) {
            return Err(AmpError::UntracedRegion);
        }
    }
    let q = RefCell::new(vec![Complex64::new(0.0, 0.0); s]);
    let best = region.maximize(
        s - 1,
        |z, out| {
            let mut q = q.borrow_mut();
            eval.eval_into(z, &mut q);
            for (o, v) in out.iter_mut().zip(&q[1..]) {
                *o = v.norm();
            }
        },
        half_plane,
    );
    let mut out = Amplification {
        value: f64::NEG_INFINITY,
        stage: 0,
        z: Complex64::new(0.0, 0.0),
    };
    for (j, c) in best.iter().enumerate() {
        // Strict comparison keeps the smallest stage on ties.
        if c.value > out.value * (1.0 + 1e-12) || out.stage == 0 {
            out = Amplification {
                value: c.value,
                stage: j + 2,
                z: c.z,
            };
        }
    }
    Ok(out)
}

/// `M_0 = max_{j≥2} |Q_j(0)|`.
pub fn amplification_at_zero<E: PointEvaluator>(eval: &E) -> f64 {
    let (_, q) = eval.eval(Complex64::new(0.0, 0.0));
    q.iter().skip(1).map(|v| v.norm()).fold(0.0, f64::max)
}

/// Tracing variable `z = c + h·w` that keeps the monomial basis tame.
fn natural_variable(method: &Method) -> (i64, i64) {
    let p = method.spec.param as i64;
    match method.spec.family {
        Family::Ssp2 => (-(p - 1), p - 1),
        Family::Ssp3 => (-(p * p - p), p * p - p),
        _ => (0, 1),
    }
}

/// Region of absolute stability for a catalog method.
pub fn method_region(method: &Method, resolution: usize) -> Result<StabilityRegion, AmpError> {
    let (c, h) = natural_variable(method);
    Ok(match method.exact_internal_stability() {
        Some(set) if (c, h) != (0, 1) => {
            let pw = set
                .p
                .compose_affine(&Rational::from_int(c), &Rational::from_int(h));
            trace_region_scaled(&pw.to_f64(), c as f64, h as f64, resolution)?
        }
        Some(set) => trace_region(&set.p.to_f64(), resolution)?,
        None => trace_region(&method.internal_stability().p, resolution)?,
    })
}

/// All three amplification factors of a catalog method.
pub fn analyze(method: &Method, resolution: usize) -> Result<AmplificationReport, AmpError> {
    let region = method_region(method, resolution)?;
    let eval = FormEvaluator::new(&method.shu_osher());
    let full = amplification_factor(&eval, &region, false)?;
    let half = amplification_factor(&eval, &region, true)?;
    let main = region.origin_component();
    let m_origin = if main.len() == region.boundary.len() {
        full.value
    } else {
        amplification_factor(&eval, &region.restricted(&main), false)?.value
    };
    Ok(AmplificationReport {
        method_id: method.id(),
        m_full: full.value,
        m_half: half.value,
        m_zero: amplification_at_zero(&eval),
        m_origin,
        argmax_full: (full.stage, full.z),
        argmax_half: (half.stage, half.z),
    })
}
