use std::fmt;
use std::sync::Arc;

type Rhs = dyn Fn(f64, &[f64], &mut [f64]) + Send + Sync;
type Exact = dyn Fn(f64) -> Vec<f64> + Send + Sync;

/// `U' = F(t, U)`, `U(t0) = U0`, integrated to `t_end`.
#[derive(Clone)]
pub struct IvpProblem {
    pub name: String,
    pub u0: Vec<f64>,
    pub t0: f64,
    pub t_end: f64,
    rhs: Arc<Rhs>,
    reference: Option<Arc<Exact>>,
}

impl fmt::Debug for IvpProblem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("IvpProblem")
            .field("name", &self.name)
            .field("u0", &self.u0)
            .field("t0", &self.t0)
            .field("t_end", &self.t_end)
            .field("reference", &self.reference.is_some())
            .finish()
    }
}

impl IvpProblem {
    pub fn new(
        name: &str,
        u0: Vec<f64>,
        t0: f64,
        t_end: f64,
        rhs: impl Fn(f64, &[f64], &mut [f64]) + Send + Sync + 'static,
    ) -> Self {
        IvpProblem {
            name: name.into(),
            u0,
            t0,
            t_end,
            rhs: Arc::new(rhs),
            reference: None,
        }
    }

    pub fn with_reference(
        mut self,
        exact: impl Fn(f64) -> Vec<f64> + Send + Sync + 'static,
    ) -> Self {
        self.reference = Some(Arc::new(exact));
        self
    }

    /// `U' = LU` with `L` given row-major; the reference is `exp(tL)U0`.
    pub fn linear(l: Vec<Vec<f64>>, u0: Vec<f64>, t_end: f64) -> Self {
        let m = u0.len();
        let mat = nalgebra::DMatrix::from_fn(m, m, |i, j| l[i][j]);
        let start = nalgebra::DVector::from_vec(u0.clone());
        let exact = move |t: f64| ((&mat * t).exp() * &start).as_slice().to_vec();
        IvpProblem::new("linear", u0, 0.0, t_end, move |_, u, out| {
            for (i, o) in out.iter_mut().enumerate() {
                *o = l[i].iter().zip(u).map(|(a, b)| a * b).sum();
            }
        })
        .with_reference(exact)
    }

    pub fn dim(&self) -> usize {
        self.u0.len()
    }

    pub fn rhs(&self, t: f64, u: &[f64], out: &mut [f64]) {
        (self.rhs)(t, u, out)
    }

    pub fn reference(&self, t: f64) -> Option<Vec<f64>> {
        self.reference.as_ref().map(|r| r(t))
    }
}

const ECC: f64 = 0.3;

/// Two-body orbit `x'' = -x/r³`, `y'' = -y/r³` on `[0, 20]` with state
/// `(x, y, x', y')`, starting at the pericentre `(0.7, 0)` with `y' = √(13/7)`.
pub fn kepler_d2() -> IvpProblem {
    let u0 = vec![1.0 - ECC, 0.0, 0.0, (13.0f64 / 7.0).sqrt()];
    IvpProblem::new("kepler_d2", u0, 0.0, 20.0, |_, u, out| {
        let r2 = u[0] * u[0] + u[1] * u[1];
        let r3 = r2 * r2.sqrt();
        out[0] = u[2];
        out[1] = u[3];
        out[2] = -u[0] / r3;
        out[3] = -u[1] / r3;
    })
    .with_reference(kepler_d2_exact)
}

/// Closed-form orbit: semi-major axis 1, eccentricity 0.3, period `2π`.
/// The eccentric anomaly solves `E - e sin E = t` by Newton's method.
pub fn kepler_d2_exact(t: f64) -> Vec<f64> {
    let mut e = t + ECC * t.sin();
    for _ in 0..50 {
        let d = (e - ECC * e.sin() - t) / (1.0 - ECC * e.cos());
        e -= d;
        if d.abs() < 1e-16 * (1.0 + e.abs()) {
            break;
        }
    }
    let (s, c) = e.sin_cos();
    let b = (1.0 - ECC * ECC).sqrt();
    let k = 1.0 - ECC * c;
    vec![c - ECC, b * s, -s / k, b * c / k]
}

#[cfg(test)]
mod tests {
    use super::*;

    fn energy(u: &[f64]) -> f64 {
        0.5 * (u[2] * u[2] + u[3] * u[3]) - 1.0 / (u[0] * u[0] + u[1] * u[1]).sqrt()
    }

    #[test]
    fn initial_energy_and_eccentricity() {
        let p = kepler_d2();
        assert!((energy(&p.u0) - (13.0 / 14.0 - 10.0 / 7.0)).abs() < 1e-15);
        // Laplace-Runge-Lenz vector: e = v × h - r/|r|.
        let u = &p.u0;
        let h = u[0] * u[3] - u[1] * u[2];
        let r = (u[0] * u[0] + u[1] * u[1]).sqrt();
        let ex = u[3] * h - u[0] / r;
        let ey = -u[2] * h - u[1] / r;
        assert!(((ex * ex + ey * ey).sqrt() - 0.3).abs() < 1e-14);
    }

    #[test]
    fn exact_orbit_matches_initial_data_and_dynamics() {
        let p = kepler_d2();
        let u = kepler_d2_exact(0.0);
        for (a, b) in u.iter().zip(&p.u0) {
            assert!((a - b).abs() < 1e-15);
        }
        // Central differences of the exact orbit reproduce F.
        let h = 1e-4;
        for &t in &[0.3, 2.0, 7.7, 19.9] {
            let (a, b) = (kepler_d2_exact(t + h), kepler_d2_exact(t - h));
            let mut f = vec![0.0; 4];
            p.rhs(t, &kepler_d2_exact(t), &mut f);
            for i in 0..4 {
                assert!(((a[i] - b[i]) / (2.0 * h) - f[i]).abs() < 1e-7);
            }
            assert!((energy(&kepler_d2_exact(t)) + 0.5).abs() < 1e-14);
        }
        let period = kepler_d2_exact(2.0 * std::f64::consts::PI);
        assert!((period[0] - 0.7).abs() < 1e-14 && period[1].abs() < 1e-14);
    }

    #[test]
    fn linear_reference_is_the_exponential() {
        let p = IvpProblem::linear(vec![vec![0.0, 1.0], vec![-1.0, 0.0]], vec![1.0, 0.0], 1.0);
        let u = p.reference(1.0).unwrap();
        assert!((u[0] - 1f64.cos()).abs() < 1e-14 && (u[1] + 1f64.sin()).abs() < 1e-14);
    }
}
