//! One-dimensional scan of `S ∩ iℝ`.

/// Samples on `[-y_max, y_max]`, symmetric and including `0`.
pub const AXIS_SAMPLES: usize = 4097;

#[derive(Debug, Clone, Default, PartialEq)]
pub struct AxisScan {
    pub y: Vec<f64>,
    pub inside: Vec<bool>,
    /// Maximal intervals `[lo, hi]` of `y` with `iy ∈ S`, ends refined by bisection.
    pub segments: Vec<(f64, f64)>,
}

impl AxisScan {
    pub fn scan(abs_p: impl Fn(f64) -> f64, y_max: f64) -> Self {
        let half = (AXIS_SAMPLES / 2) as f64;
        let y: Vec<f64> = (0..AXIS_SAMPLES)
            .map(|i| y_max * (i as f64 - half) / half)
            .collect();
        let inside: Vec<bool> = y.iter().map(|&t| abs_p(t) <= 1.0 + 1e-12).collect();
        let edge = |y_in: f64, y_out: f64| {
            let (mut a, mut b) = (y_in, y_out);
            for _ in 0..80 {
                let m = 0.5 * (a + b);
                if abs_p(m) <= 1.0 + 1e-12 {
                    a = m;
                } else {
                    b = m;
                }
            }
            a
        };
        let mut segments = Vec::new();
        let mut i = 0;
        while i < y.len() {
            if !inside[i] {
                i += 1;
                continue;
            }
            let start = i;
            while i + 1 < y.len() && inside[i + 1] {
                i += 1;
            }
            let lo = if start == 0 {
                y[0]
            } else {
                edge(y[start], y[start - 1])
            };
            let hi = if i + 1 == y.len() {
                y[i]
            } else {
                edge(y[i], y[i + 1])
            };
            segments.push((lo, hi));
            i += 1;
        }
        AxisScan {
            y,
            inside,
            segments,
        }
    }

    /// Segment containing sample `i`, if it is inside.
    pub fn segment_of(&self, i: usize) -> Option<(f64, f64)> {
        if !self.inside[i] {
            return None;
        }
        self.segments
            .iter()
            .copied()
            .find(|&(lo, hi)| lo <= self.y[i] && self.y[i] <= hi)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn interval_ends_are_refined() {
        let scan = AxisScan::scan(|y| y.abs() / 1.5, 3.0);
        assert_eq!(scan.segments.len(), 1);
        let (lo, hi) = scan.segments[0];
        assert!((lo + 1.5).abs() < 1e-11 && (hi - 1.5).abs() < 1e-11);
        assert!(scan.inside[AXIS_SAMPLES / 2]);
        assert_eq!(scan.y[AXIS_SAMPLES / 2], 0.0);
    }
}
