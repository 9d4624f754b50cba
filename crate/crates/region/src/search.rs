//! Maximisation of functions of `z` over `S` or `S ∩ {Re z ≤ 0}`.
//!
//! Samples on every boundary curve (and, for the half plane, on the part of
//! the imaginary axis inside `S`) are evaluated; the best local maxima are
//! refined by golden-section search in the curve parameter.

use num::complex::Complex64;

use crate::trace::StabilityRegion;

/// Local maxima refined per objective.
const TOP: usize = 5;
const GOLDEN_ITERS: usize = 60;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Candidate {
    pub value: f64,
    pub z: Complex64,
}

impl Candidate {
    const NONE: Candidate = Candidate {
        value: f64::NEG_INFINITY,
        z: Complex64 { re: 0.0, im: 0.0 },
    };

    /// Larger value wins; near ties go to the smaller argument.
    fn beats(&self, other: &Candidate) -> bool {
        let tol = 1e-12 * self.value.abs().max(other.value.abs());
        if (self.value - other.value).abs() <= tol {
            self.z.arg() < other.z.arg()
        } else {
            self.value > other.value
        }
    }

    fn offer(&mut self, c: Candidate) {
        if c.value.is_finite() && c.beats(self) {
            *self = c;
        }
    }
}

/// Maximise `g` on `[a, b]`, returning `(t, g(t))`.
fn golden(mut g: impl FnMut(f64) -> f64, a: f64, b: f64) -> (f64, f64) {
    let r = 0.5 * (5f64.sqrt() - 1.0);
    let (mut a, mut b) = (a, b);
    let mut x1 = b - r * (b - a);
    let mut x2 = a + r * (b - a);
    let (mut f1, mut f2) = (g(x1), g(x2));
    for _ in 0..GOLDEN_ITERS {
        if f1 >= f2 {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - r * (b - a);
            f1 = g(x1);
        } else {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + r * (b - a);
            f2 = g(x2);
        }
    }
    if f1 >= f2 {
        (x1, f1)
    } else {
        (x2, f2)
    }
}

impl StabilityRegion {
    /// Maximise each of `k` objectives `f(z, out)` over the region.
    pub fn maximize(
        &self,
        k: usize,
        f: impl Fn(Complex64, &mut [f64]),
        half_plane: bool,
    ) -> Vec<Candidate> {
        let mut best = vec![Candidate::NONE; k];
        let mut buf = vec![0.0; k];
        let allowed = |z: Complex64| !half_plane || z.re <= 0.0;
        let eval = |z: Complex64, j: usize, buf: &mut Vec<f64>| -> f64 {
            if !allowed(z) {
                return f64::NEG_INFINITY;
            }
            f(z, buf);
            buf[j]
        };

        // Boundary samples: per objective, the best local maxima over all curves.
        let mut local: Vec<Vec<(f64, usize, usize)>> = vec![Vec::new(); k];
        for (li, line) in self.boundary.iter().enumerate() {
            let n = line.len();
            let vals: Vec<Vec<f64>> = line
                .z
                .iter()
                .map(|&z| {
                    if allowed(z) {
                        f(z, &mut buf);
                        buf.clone()
                    } else {
                        vec![f64::NEG_INFINITY; k]
                    }
                })
                .collect();
            for j in 0..k {
                for i in 0..n {
                    let v = vals[i][j];
                    if v.is_finite() && v >= vals[(i + n - 1) % n][j] && v >= vals[(i + 1) % n][j] {
                        local[j].push((v, li, i));
                    }
                    best[j].offer(Candidate {
                        value: v,
                        z: line.z[i],
                    });
                }
            }
        }
        for (j, cands) in local.iter_mut().enumerate() {
            cands.sort_by(|a, b| b.0.total_cmp(&a.0).then(a.1.cmp(&b.1)).then(a.2.cmp(&b.2)));
            for &(_, li, i) in cands.iter().take(TOP) {
                let mut at = |t: f64| match self.point_at(li, t) {
                    Some(z) => (eval(z, j, &mut buf), z),
                    None => (f64::NEG_INFINITY, Complex64::new(0.0, 0.0)),
                };
                let (t, v) = golden(|t| at(t).0, i as f64 - 1.0, i as f64 + 1.0);
                if v.is_finite() {
                    let z = at(t).1;
                    best[j].offer(Candidate { value: v, z });
                }
            }
        }

        if half_plane {
            let axis = &self.axis;
            for j in 0..k {
                let mut top: Option<(f64, usize)> = None;
                for (i, &y) in axis.y.iter().enumerate() {
                    if !axis.inside[i] {
                        continue;
                    }
                    let v = eval(Complex64::new(0.0, y), j, &mut buf);
                    best[j].offer(Candidate {
                        value: v,
                        z: Complex64::new(0.0, y),
                    });
                    if top.is_none_or(|(tv, _)| v > tv) {
                        top = Some((v, i));
                    }
                }
                for &(lo, hi) in &axis.segments {
                    for y in [lo, hi] {
                        let z = Complex64::new(0.0, y);
                        let v = eval(z, j, &mut buf);
                        best[j].offer(Candidate { value: v, z });
                    }
                }
                if let Some((_, i)) = top {
                    let (lo, hi) = axis.segment_of(i).unwrap_or((axis.y[i], axis.y[i]));
                    let a = axis.y[i.saturating_sub(1)].max(lo);
                    let b = axis.y[(i + 1).min(axis.y.len() - 1)].min(hi);
                    let (y, v) = golden(|y| eval(Complex64::new(0.0, y), j, &mut buf), a, b);
                    best[j].offer(Candidate {
                        value: v,
                        z: Complex64::new(0.0, y),
                    });
                }
            }
        }
        best
    }

    /// `max |z|` over the region, with its location.
    pub fn max_abs_z(&self, half_plane: bool) -> (f64, Complex64) {
        let c = self.maximize(1, |z, out| out[0] = z.norm(), half_plane)[0];
        (c.value, c.z)
    }
}
