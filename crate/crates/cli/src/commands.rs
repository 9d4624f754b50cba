//! Subcommand bodies; each returns the text to print.

use std::fmt::{Display, Write};

use amplification::{analyze, method_region, verify_bounds, AmplificationReport};
use methods_catalog::{build, taylor_polynomial, Family, FormPreference, Method, MethodSpec};
use num::complex::Complex64;
use region::{trace_region, StabilityRegion};
use rk_core::{shu_osher_to_butcher, ButcherTableau, Mat, Scalar, ShuOsherForm};
use serde_json::json;
use sim::{kepler_d2, sweep, PerturbationPolicy};
use stab_poly::{InternalStabilitySet, Poly};

use crate::error::CliError;
use crate::parse::RegionTarget;

/// Form and embedded-row choices layered on a parsed spec.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct MethodOptions {
    pub form: FormPreference,
    /// `None` keeps the family default.
    pub embedded: Option<bool>,
}

impl MethodOptions {
    pub fn apply(&self, spec: MethodSpec) -> MethodSpec {
        let spec = spec.with_form(self.form);
        match self.embedded {
            Some(e) => spec.with_embedded(e),
            None => spec,
        }
    }
}

/// Compact float formatting shared by all outputs.
pub fn fmt_f(x: f64) -> String {
    if x == 0.0 || (1e-4..1e6).contains(&x.abs()) {
        format!("{x:.6}")
    } else {
        format!("{x:.6e}")
    }
}

fn write_mat<T: Scalar + Display>(out: &mut String, name: &str, m: &Mat<T>) {
    let _ = writeln!(out, "{name}:");
    for i in 0..m.rows() {
        let row: Vec<String> = (0..m.cols()).map(|j| m[(i, j)].to_string()).collect();
        let _ = writeln!(out, "  {}", row.join(" "));
    }
}

fn write_vec<T: Display>(out: &mut String, name: &str, v: &[T]) {
    let row: Vec<String> = v.iter().map(T::to_string).collect();
    let _ = writeln!(out, "{name}: {}", row.join(" "));
}

fn describe<T: Scalar + Display>(out: &mut String, so: &ShuOsherForm<T>, bt: &ButcherTableau<T>) {
    write_mat(out, "alpha", &so.alpha);
    write_mat(out, "beta", &so.beta);
    if let Some(e) = &so.embedded {
        write_vec(out, "alpha_hat", &e.alpha);
        write_vec(out, "beta_hat", &e.beta);
    }
    write_mat(out, "A", &bt.a);
    write_vec(out, "b", &bt.b);
    write_vec(out, "c", &bt.c);
    if let Some(bh) = &bt.b_embedded {
        write_vec(out, "b_hat", bh);
    }
}

pub fn method_cmd(spec: MethodSpec, json: bool) -> Result<String, CliError> {
    let m = build(&spec)?;
    if json {
        return Ok(format!("{:#}\n", m.to_json()));
    }
    let mut out = String::new();
    let _ = writeln!(out, "method: {}", m.id());
    let _ = writeln!(out, "stages: {}", m.s());
    let _ = writeln!(out, "order: {}", m.order());
    let so = m.shu_osher();
    if let Some(e) = &so.embedded {
        let _ = writeln!(out, "embedded order: {}", e.order);
    }
    match m.exact() {
        Some(exact) => describe(&mut out, exact, &shu_osher_to_butcher(exact)),
        None => describe(&mut out, &so, &m.butcher()),
    }
    Ok(out)
}

fn poly_text<T: Scalar + Display>(set: &InternalStabilitySet<T>, id: &str, json: bool) -> String {
    let coeffs = |p: &Poly<T>| p.coeffs().iter().map(T::to_string).collect::<Vec<_>>();
    if json {
        let q: Vec<_> = set.q.iter().map(coeffs).collect();
        return format!(
            "{:#}\n",
            json!({ "method": id, "P": coeffs(&set.p), "Q": q })
        );
    }
    let mut out = format!("method: {id}\nP(z) = {}\n", set.p);
    for (j, q) in set.q.iter().enumerate() {
        let _ = writeln!(out, "Q_{}(z) = {q}", j + 1);
    }
    out
}

pub fn poly_cmd(spec: MethodSpec, json: bool) -> Result<String, CliError> {
    let m = build(&spec)?;
    Ok(match m.exact_internal_stability() {
        Some(set) => poly_text(&set, &m.id(), json),
        None => poly_text(&m.internal_stability(), &m.id(), json),
    })
}

pub fn target_region(target: RegionTarget, resolution: usize) -> Result<StabilityRegion, CliError> {
    Ok(match target {
        RegionTarget::Method(spec) => method_region(&build(&spec)?, resolution)?,
        RegionTarget::Taylor(p) => trace_region(&taylor_polynomial(p).to_f64(), resolution)?,
    })
}

/// Boundary polylines as `re,im` rows, each curve closed by repeating its
/// first point. The half-plane variant keeps points with `Re z ≤ 0`.
pub fn region_cmd(
    target: RegionTarget,
    half_plane: bool,
    resolution: usize,
) -> Result<String, CliError> {
    let region = target_region(target, resolution)?;
    let mut out = String::from("re,im\n");
    for line in &region.boundary {
        for z in line.z.iter().chain(line.z.first()) {
            if !half_plane || z.re <= 0.0 {
                let _ = writeln!(out, "{:.12e},{:.12e}", z.re, z.im);
            }
        }
    }
    Ok(out)
}

pub fn report(
    spec: MethodSpec,
    resolution: usize,
) -> Result<(Method, AmplificationReport), CliError> {
    let m = build(&spec)?;
    let r = analyze(&m, resolution)?;
    Ok((m, r))
}

/// Prints the amplification report; with `check_bounds`, a violated proved
/// bound turns into a numerical-contract error carrying the full text.
pub fn amp_cmd(
    spec: MethodSpec,
    half_plane: bool,
    check_bounds: bool,
    json: bool,
    resolution: usize,
) -> Result<String, CliError> {
    let (m, r) = report(spec, resolution)?;
    let checks = if check_bounds {
        verify_bounds(&r, &m)
    } else {
        Vec::new()
    };
    let mut out = String::new();
    if json {
        let mut v = r.to_json();
        if check_bounds {
            v["bounds"] = checks
                .iter()
                .map(|c| json!({ "name": c.name, "satisfied": c.satisfied, "margin": c.margin, "note": c.note }))
                .collect();
        }
        out = format!("{v:#}\n");
    } else {
        let at = |(j, z): (usize, Complex64)| {
            format!(
                "stage {j} at z = {} {} {}i",
                fmt_f(z.re),
                if z.im < 0.0 { "-" } else { "+" },
                fmt_f(z.im.abs())
            )
        };
        let _ = writeln!(out, "method: {}", r.method_id);
        if !half_plane {
            let _ = writeln!(out, "M: {} ({})", fmt_f(r.m_full), at(r.argmax_full));
            let _ = writeln!(out, "M_origin_component: {}", fmt_f(r.m_origin));
        }
        let _ = writeln!(
            out,
            "M_half_plane: {} ({})",
            fmt_f(r.m_half),
            at(r.argmax_half)
        );
        let _ = writeln!(out, "M0: {}", fmt_f(r.m_zero));
        for c in &checks {
            let state = match c.satisfied {
                Some(true) => format!("ok (margin {})", fmt_f(c.margin)),
                Some(false) => format!("VIOLATED (margin {})", fmt_f(c.margin)),
                None => format!("skipped: {}", c.note),
            };
            let _ = writeln!(out, "bound {}: {state}", c.name);
        }
    }
    if checks.iter().any(|c| c.satisfied == Some(false)) {
        return Err(CliError::Numerical(format!("a proved bound failed\n{out}")));
    }
    Ok(out)
}

/// `a..b` walks decades from `a` to `b`; otherwise a comma list.
pub fn parse_tols(text: &str) -> Result<Vec<f64>, CliError> {
    let bad = || {
        CliError::Usage(format!(
            "invalid tolerance list {text:?}; use e.g. 1e-4..1e-12 or 1e-4,1e-6"
        ))
    };
    let value = |s: &str| {
        s.trim()
            .parse::<f64>()
            .ok()
            .filter(|v| *v > 0.0 && v.is_finite())
    };
    if let Some((a, b)) = text.split_once("..") {
        let (a, b) = (value(a).ok_or_else(bad)?, value(b).ok_or_else(bad)?);
        let (la, lb) = (a.log10().round() as i32, b.log10().round() as i32);
        let step = if lb <= la { -1 } else { 1 };
        let mut k = la;
        let mut out = vec![];
        loop {
            out.push(10f64.powi(k));
            if k == lb {
                break;
            }
            k += step;
        }
        return Ok(out);
    }
    text.split(',').map(|s| value(s).ok_or_else(bad)).collect()
}

/// Tolerance sweep on the Kepler orbit as `tol,steps,rejections,global_error,failed`.
pub fn experiment_cmd(
    problem: &str,
    spec: MethodSpec,
    tols: &[f64],
    seed: u64,
    roundoff: bool,
    json: bool,
) -> Result<String, CliError> {
    if problem != "d2" {
        return Err(CliError::Usage(format!(
            "unknown problem {problem:?}; available: d2"
        )));
    }
    let spec = match spec.family {
        Family::EeExtrap | Family::EmExtrap => spec.with_embedded(true),
        _ => spec,
    };
    let m = build(&spec)?;
    let so = m.shu_osher();
    if so.embedded.is_none() {
        return Err(CliError::Usage(format!("{} has no embedded pair", m.id())));
    }
    let policy = if roundoff {
        PerturbationPolicy::roundoff(seed)
    } else {
        PerturbationPolicy::none()
    };
    let rows = sweep(&so, &kepler_d2(), tols, policy)?;
    if json {
        let v: Vec<_> = rows
            .iter()
            .map(|r| {
                json!({ "tol": r.tol, "steps": r.steps, "rejections": r.rejections,
                        "global_error": r.global_error, "failed": r.failed })
            })
            .collect();
        return Ok(format!(
            "{:#}\n",
            json!({ "method": m.id(), "seed": seed, "runs": v })
        ));
    }
    let mut out = String::from("tol,steps,rejections,global_error,failed\n");
    for r in rows {
        let e = r
            .global_error
            .map(|e| format!("{e:.6e}"))
            .unwrap_or_default();
        let _ = writeln!(
            out,
            "{:e},{},{},{e},{}",
            r.tol, r.steps, r.rejections, r.failed
        );
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tolerance_ranges_walk_decades() {
        assert_eq!(parse_tols("1e-4..1e-6").unwrap(), vec![1e-4, 1e-5, 1e-6]);
        assert_eq!(parse_tols("1e-3, 1e-5").unwrap(), vec![1e-3, 1e-5]);
        assert!(parse_tols("1e-4..x").is_err());
        assert!(parse_tols("-1").is_err());
    }

    #[test]
    fn float_formatting() {
        assert_eq!(fmt_f(1.5), "1.500000");
        assert_eq!(fmt_f(3.4e5), "340000.000000");
        assert_eq!(fmt_f(1.02e7), "1.020000e7");
    }
}
