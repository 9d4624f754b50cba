use std::f64::consts::TAU;

use num::complex::Complex64;
use stab_poly::Poly;

use crate::axis::AxisScan;
use crate::dd::horner_dd;
use crate::error::RegionError;
use crate::roots::{aberth, all_roots, fujiwara_bound, horner};

/// Number of `θ` samples per root track when the caller has no preference.
pub const DEFAULT_RESOLUTION: usize = 2048;
/// Curves whose evaluation error `ε·Σ|p_k||w|^k` exceeds this are dropped.
pub const NOISE_LIMIT: f64 = 1e-6;
const MAX_DEPTH: u32 = 24;

/// One closed boundary curve. Point `k` solves `P = e^{iθ_k}`; `θ` is
/// unwrapped, and the curve closes after `winding` turns.
#[derive(Debug, Clone, PartialEq)]
pub struct Polyline {
    pub z: Vec<Complex64>,
    pub w: Vec<Complex64>,
    pub theta: Vec<f64>,
    pub winding: usize,
}

impl Polyline {
    pub fn len(&self) -> usize {
        self.z.len()
    }

    pub fn is_empty(&self) -> bool {
        self.z.is_empty()
    }
}

#[derive(Debug, Clone)]
pub struct StabilityRegion {
    /// `P` in the tracing variable `w`.
    pub poly: Poly<f64>,
    pub center: f64,
    pub scale: f64,
    pub boundary: Vec<Polyline>,
    /// `S ⊆ {|z| ≤ bbox_radius}`.
    pub bbox_radius: f64,
    pub axis: AxisScan,
    /// Curves discarded as numerically unresolvable.
    pub dropped: usize,
    pub resolution: usize,
    coeffs: Vec<Complex64>,
}

/// Trace `S` for `P` given in `z`.
pub fn trace_region(p: &Poly<f64>, resolution: usize) -> Result<StabilityRegion, RegionError> {
    trace_region_scaled(p, 0.0, 1.0, resolution)
}

/// Trace `S` for `P(c + h·w)` given as a polynomial in `w`.
pub fn trace_region_scaled(
    p_w: &Poly<f64>,
    center: f64,
    scale: f64,
    resolution: usize,
) -> Result<StabilityRegion, RegionError> {
    if resolution < 64 {
        return Err(RegionError::Resolution(resolution));
    }
    let poly = p_w.trimmed(0.0);
    let d = match poly.degree() {
        Some(d) if d >= 1 => d,
        _ => return Err(RegionError::DegenerateP),
    };
    let w0 = -center / scale;
    let at_zero = poly.eval(&w0);
    let noise0 = 8.0 * f64::EPSILON * poly.abs_eval(w0.abs());
    if (at_zero - 1.0).abs() > 1e-12 + noise0 {
        return Err(RegionError::Inconsistent(at_zero));
    }
    let coeffs: Vec<Complex64> = poly
        .coeffs()
        .iter()
        .map(|&c| Complex64::new(c, 0.0))
        .collect();

    let shifted = |theta: f64| {
        let mut c = coeffs.clone();
        c[0] -= Complex64::from_polar(1.0, theta);
        c
    };
    let start = all_roots(&shifted(0.0));
    let mut tracks: Vec<Vec<Complex64>> = vec![Vec::with_capacity(resolution); d];
    let mut current = start.clone();
    for k in 0..resolution {
        for (t, r) in tracks.iter_mut().zip(&current) {
            t.push(*r);
        }
        let (a, b) = (
            TAU * k as f64 / resolution as f64,
            TAU * (k + 1) as f64 / resolution as f64,
        );
        current = continue_roots(&shifted, &current, a, b, 0);
    }
    let perm = nearest_permutation(&current, &start);

    let mut visited = vec![false; d];
    let mut boundary = Vec::new();
    let mut dropped = 0;
    for first in 0..d {
        if visited[first] {
            continue;
        }
        let mut cycle = Vec::new();
        let mut i = first;
        while !visited[i] {
            visited[i] = true;
            cycle.push(i);
            i = perm[i];
        }
        let mut line = Polyline {
            z: vec![],
            w: vec![],
            theta: vec![],
            winding: cycle.len(),
        };
        for (turn, &idx) in cycle.iter().enumerate() {
            for (k, &w) in tracks[idx].iter().enumerate() {
                let w = polish(&shifted(TAU * k as f64 / resolution as f64), w);
                line.w.push(w);
                line.z.push(Complex64::new(center, 0.0) + w * scale);
                line.theta
                    .push(TAU * (k as f64 / resolution as f64 + turn as f64));
            }
        }
        let noise = line
            .w
            .iter()
            .map(|w| f64::EPSILON * poly.abs_eval(w.norm()))
            .fold(0.0, f64::max);
        if noise > NOISE_LIMIT {
            dropped += 1;
        } else {
            boundary.push(line);
        }
    }
    if boundary.is_empty() {
        return Err(RegionError::Unresolvable);
    }

    let bbox_radius = if center == 0.0 && scale == 1.0 && d >= 2 && is_taylor(&poly) {
        1.6 * d as f64
    } else {
        let mut mags: Vec<Complex64> = coeffs
            .iter()
            .map(|c| Complex64::new(c.norm(), 0.0))
            .collect();
        mags[0] += 1.0;
        center.abs() + scale.abs() * fujiwara_bound(&mags)
    };
    let reach = boundary
        .iter()
        .flat_map(|l| l.z.iter())
        .map(|z| z.norm())
        .fold(0.0, f64::max);
    let mut region = StabilityRegion {
        poly,
        center,
        scale,
        boundary,
        bbox_radius,
        axis: AxisScan::default(),
        dropped,
        resolution,
        coeffs,
    };
    region.axis = AxisScan::scan(
        |y| region.eval_p(Complex64::new(0.0, y)).norm(),
        1.01 * reach + 1e-12,
    );
    Ok(region)
}

fn area(poly: &[Complex64]) -> f64 {
    let n = poly.len();
    (0..n)
        .map(|i| (poly[i].conj() * poly[(i + 1) % n]).im)
        .sum::<f64>()
        / 2.0
}

fn on_curve(poly: &[Complex64], z: Complex64) -> bool {
    poly.iter().any(|p| (p - z).norm() < 1e-12)
}

/// Crossing-number winding of a closed polygon around `z`.
fn winding_number(poly: &[Complex64], z: Complex64) -> i32 {
    let n = poly.len();
    let mut wn = 0;
    for i in 0..n {
        let (a, b) = (poly[i] - z, poly[(i + 1) % n] - z);
        let cross = a.re * b.im - a.im * b.re;
        if a.im <= 0.0 {
            if b.im > 0.0 && cross > 0.0 {
                wn += 1;
            }
        } else if b.im <= 0.0 && cross < 0.0 {
            wn -= 1;
        }
    }
    wn
}

/// Two Newton steps with an extended-precision residual.
fn polish(c: &[Complex64], mut w: Complex64) -> Complex64 {
    for _ in 0..2 {
        let f = horner_dd(c, w);
        let df = horner(c, w).1;
        let step = f / df;
        if step.re.is_finite() && step.im.is_finite() {
            w -= step;
        }
    }
    w
}

fn is_taylor(p: &Poly<f64>) -> bool {
    let mut fact = 1.0;
    p.coeffs().iter().enumerate().all(|(k, &c)| {
        if k > 0 {
            fact *= k as f64;
        }
        (c * fact - 1.0).abs() <= 1e-12
    })
}

/// Follow every root from `θ = a` to `θ = b`, halving the step until each
/// root moves less than a third of its distance to the nearest other root.
fn continue_roots(
    shifted: &impl Fn(f64) -> Vec<Complex64>,
    roots: &[Complex64],
    a: f64,
    b: f64,
    depth: u32,
) -> Vec<Complex64> {
    let c = shifted(b);
    let mut next = roots.to_vec();
    // Stalling at rounding level is harmless; losing track of a root is not.
    let converged = aberth(&c, &mut next, 60) || next.iter().all(|w| at_noise_level(&c, *w));
    if converged && tracks_are_separated(roots, &next) {
        return next;
    }
    if depth < MAX_DEPTH {
        let mid = 0.5 * (a + b);
        let half = continue_roots(shifted, roots, a, mid, depth + 1);
        return continue_roots(shifted, &half, mid, b, depth + 1);
    }
    if converged {
        return next;
    }
    let fresh = all_roots(&c);
    let perm = nearest_permutation(roots, &fresh);
    perm.iter().map(|&j| fresh[j]).collect()
}

fn at_noise_level(c: &[Complex64], w: Complex64) -> bool {
    let f = horner(c, w).0;
    let mags = c.iter().rev().fold(0.0, |acc, a| acc * w.norm() + a.norm());
    f.norm() <= 100.0 * c.len() as f64 * f64::EPSILON * mags
}

fn tracks_are_separated(old: &[Complex64], new: &[Complex64]) -> bool {
    new.iter().enumerate().all(|(k, nk)| {
        let sep = new
            .iter()
            .enumerate()
            .filter(|&(j, _)| j != k)
            .map(|(_, nj)| (nk - nj).norm())
            .fold(f64::INFINITY, f64::min);
        (nk - old[k]).norm() <= sep / 3.0
    })
}

/// Greedy bijection `from[i] ↦ to[perm[i]]` by increasing distance.
fn nearest_permutation(from: &[Complex64], to: &[Complex64]) -> Vec<usize> {
    let n = from.len();
    let mut pairs: Vec<(f64, usize, usize)> = (0..n)
        .flat_map(|i| (0..n).map(move |j| (i, j)))
        .map(|(i, j)| ((from[i] - to[j]).norm(), i, j))
        .collect();
    pairs.sort_by(|x, y| x.0.total_cmp(&y.0).then(x.1.cmp(&y.1)).then(x.2.cmp(&y.2)));
    let mut perm = vec![usize::MAX; n];
    let mut taken = vec![false; n];
    for (_, i, j) in pairs {
        if perm[i] == usize::MAX && !taken[j] {
            perm[i] = j;
            taken[j] = true;
        }
    }
    perm
}

impl StabilityRegion {
    pub fn to_w(&self, z: Complex64) -> Complex64 {
        (z - self.center) / self.scale
    }

    /// `P(z)`, evaluated in extended precision.
    pub fn eval_p(&self, z: Complex64) -> Complex64 {
        horner_dd(&self.coeffs, self.to_w(z))
    }

    /// `|P(z)| ≤ 1 + 1e-12`.
    pub fn contains(&self, z: Complex64) -> bool {
        self.eval_p(z).norm() <= 1.0 + 1e-12
    }

    /// Rounding error bound of evaluating `P` at `z`.
    pub fn noise_at(&self, z: Complex64) -> f64 {
        f64::EPSILON * self.poly.abs_eval(self.to_w(z).norm())
    }

    /// Curves bounding the connected component of `S` that contains `0`:
    /// the largest curve around the origin and every curve inside it.
    pub fn origin_component(&self) -> Vec<usize> {
        let zero = Complex64::new(0.0, 0.0);
        let outer = (0..self.boundary.len())
            .filter(|&i| {
                winding_number(&self.boundary[i].z, zero) != 0
                    || on_curve(&self.boundary[i].z, zero)
            })
            .max_by(|&a, &b| {
                area(&self.boundary[a].z)
                    .abs()
                    .total_cmp(&area(&self.boundary[b].z).abs())
            });
        let Some(outer) = outer else {
            return Vec::new();
        };
        (0..self.boundary.len())
            .filter(|&i| {
                i == outer || winding_number(&self.boundary[outer].z, self.boundary[i].z[0]) != 0
            })
            .collect()
    }

    /// The same region with only the listed boundary curves.
    pub fn restricted(&self, curves: &[usize]) -> StabilityRegion {
        let mut r = self.clone();
        r.boundary = curves.iter().map(|&i| self.boundary[i].clone()).collect();
        r
    }

    pub fn points(&self) -> impl Iterator<Item = Complex64> + '_ {
        self.boundary.iter().flat_map(|l| l.z.iter().copied())
    }

    /// Newton solve of `P(w) = e^{iθ}` from `w`.
    pub(crate) fn project(&self, w: Complex64, theta: f64) -> Option<Complex64> {
        let mut c = self.coeffs.clone();
        c[0] -= Complex64::from_polar(1.0, theta);
        let mut w = w;
        for _ in 0..40 {
            let (f, df) = horner(&c, w);
            let step = f / df;
            if !step.re.is_finite() || !step.im.is_finite() {
                return None;
            }
            w -= step;
            if step.norm() <= 4.0 * f64::EPSILON * (1.0 + w.norm()) {
                return Some(w);
            }
        }
        None
    }

    /// Boundary point at fractional sample position `t` along curve `line`.
    pub fn point_at(&self, line: usize, t: f64) -> Option<Complex64> {
        let l = &self.boundary[line];
        let n = l.len();
        let k = t.floor();
        let frac = t - k;
        let k = (k as i64).rem_euclid(n as i64) as usize;
        let next = (k + 1) % n;
        let th_next = if next == 0 {
            l.theta[0] + TAU * l.winding as f64
        } else {
            l.theta[next]
        };
        let theta = l.theta[k] + frac * (th_next - l.theta[k]);
        let guess = l.w[k] + (l.w[next] - l.w[k]) * frac;
        let w = self.project(guess, theta)?;
        let span = (l.w[next] - l.w[k]).norm();
        if (w - guess).norm() > 2.0 * span + 1e-9 * (1.0 + guess.norm()) {
            return None;
        }
        Some(Complex64::new(self.center, 0.0) + w * self.scale)
    }
}
