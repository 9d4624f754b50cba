//! Analytic maximum internal amplification of the optimal third-order SSP
//! methods with `n²` stages.

#[derive(Debug, Clone, PartialEq)]
pub struct Ssp3Analysis {
    pub n: u32,
    /// Root of `μ_n^-` in `[1, ∞)`.
    pub nu_star: f64,
    /// `(1 + 1/(n-1))^{1/(2n-1)}`, where `μ_n^- = -1`.
    pub rho: f64,
    pub m_value: f64,
    /// The sandwich `l2 < l1 < M < u1 < u2`, evaluated for `n ≥ 9`.
    pub bound_check: Option<[f64; 4]>,
}

impl Ssp3Analysis {
    pub fn sandwich_holds(&self) -> Option<bool> {
        self.bound_check
            .map(|[l2, l1, u1, u2]| l2 < l1 && l1 < self.m_value && self.m_value < u1 && u1 < u2)
    }
}

/// `μ_n^-(ρ) = -1 - nρ^{(n-1)²}(1 - (1 - 1/n)ρ^{2n-1})/(2n-1)`.
pub fn mu_minus(n: u32, rho: f64) -> f64 {
    let nf = n as f64;
    let a = rho.powf((nf - 1.0) * (nf - 1.0));
    -1.0 - nf * a * (1.0 - (1.0 - 1.0 / nf) * rho.powf(2.0 * nf - 1.0)) / (2.0 * nf - 1.0)
}

/// Powers are taken through logarithms so large `n` cannot overflow.
fn pow(x: f64, e: f64) -> f64 {
    (e * x.ln()).exp()
}

pub fn ssp3_analytic(n: u32) -> Ssp3Analysis {
    assert!(n >= 2, "ssp3 needs n >= 2");
    let nf = n as f64;
    let rho = pow(1.0 + 1.0 / (nf - 1.0), 1.0 / (2.0 * nf - 1.0));
    // μ_n^-(ρ_n) = -1 < 0; grow the bracket until the sign changes.
    let mut step = 1.0 / (nf * nf);
    let mut lo = rho;
    let mut hi = rho + step;
    while mu_minus(n, hi) <= 0.0 {
        lo = hi;
        step *= 2.0;
        hi = rho + step;
    }
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        if mu_minus(n, mid) <= 0.0 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    let nu = 0.5 * (lo + hi);
    let first = (nf - 1.0) / (2.0 * nf - 1.0) * pow(nu, (nf * nf + 3.0 * nf - 4.0) / 2.0);
    let second = pow(nu, (nf * nf - nf) / 2.0);
    let bound_check = (n >= 9).then(|| {
        let ln = nf.ln();
        let e = (nf * nf - nf) / 2.0;
        [
            0.9 * (nf / ln).sqrt(),
            pow(1.0 + ln / (nf * nf) - ln.ln() / (nf * nf), e),
            pow(1.0 + ln / (nf * nf) - ln.ln() / (8.0 * nf * nf), e),
            nf.sqrt() / ln.powf(1.0 / 16.0),
        ]
    });
    Ssp3Analysis {
        n,
        nu_star: nu,
        rho,
        m_value: first.max(second),
        bound_check,
    }
}
