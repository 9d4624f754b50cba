//! Local defect vectors `θ_k` of a Shu-Osher implementation.
//!
//! The update row is treated as stage `s+1` with abscissa `c_{s+1} = 1` and
//! Butcher row `bᵀ`, so every `θ_k` has `s+1` entries.

use rk_core::{shu_osher_to_butcher, Scalar, ShuOsherForm};

use crate::poly::Poly;

#[derive(Debug, Clone, PartialEq)]
pub struct DefectCoefficients<T> {
    /// `theta[k]` is `θ_k`, for `k = 0..=p`.
    pub theta: Vec<Vec<T>>,
}

fn factorial<T: Scalar>(k: usize) -> T {
    (1..=k as i64).fold(T::one(), |acc, i| acc * T::from_int(i))
}

/// `θ_0 = 1 - v - α1`, `θ_k = (1/k!)(I - α)(c^k - kAc^{k-1})`.
pub fn defect_coefficients<T: Scalar>(so: &ShuOsherForm<T>, p: u32) -> DefectCoefficients<T> {
    let s = so.s();
    let bt = shu_osher_to_butcher(so);
    let mut c = bt.c.clone();
    c.push(T::one());
    let v = so.v();
    let alpha_sums = so.alpha.row_sums();
    let theta0 = (0..=s)
        .map(|i| T::one() - v[i].clone() - alpha_sums[i].clone())
        .collect();
    let mut theta = vec![theta0];
    for k in 1..=p as usize {
        let kk = T::from_int(k as i64);
        let pow = |x: &T, e: usize| (0..e).fold(T::one(), |acc, _| acc * x.clone());
        let ck: Vec<T> = c.iter().map(|x| pow(x, k)).collect();
        let ckm1: Vec<T> = c[..s].iter().map(|x| pow(x, k - 1)).collect();
        let row_dot = |row: &[T]| {
            row.iter()
                .zip(&ckm1)
                .fold(T::zero(), |acc, (a, x)| acc + a.clone() * x.clone())
        };
        let d: Vec<T> = (0..=s)
            .map(|i| {
                let ac = if i < s {
                    row_dot(bt.a.row(i))
                } else {
                    row_dot(&bt.b)
                };
                ck[i].clone() - kk.clone() * ac
            })
            .collect();
        let fact = factorial::<T>(k);
        let th = (0..=s)
            .map(|i| {
                let mix = so
                    .alpha
                    .row(i)
                    .iter()
                    .zip(&d)
                    .fold(T::zero(), |acc, (a, x)| acc + a.clone() * x.clone());
                (d[i].clone() - mix) / fact.clone()
            })
            .collect();
        theta.push(th);
    }
    DefectCoefficients { theta }
}

/// `Σ_{k=1}^{p} z^k (Q(z)·θ_k[1:s] + θ_k[s+1])`: the local error of one step
/// on `u' = λu` expressed through the defects. A method of order `p` makes
/// every coefficient through `z^p` vanish.
pub fn defect_expansion<T: Scalar>(q: &[Poly<T>], defects: &DefectCoefficients<T>) -> Poly<T> {
    let s = q.len();
    let mut total = Poly::zero();
    for (k, th) in defects.theta.iter().enumerate().skip(1) {
        let mut term = Poly::constant(th[s].clone());
        for (qj, tj) in q.iter().zip(th) {
            if !tj.is_zero() {
                term = term.add_scaled(qj, tj);
            }
        }
        total = &total + &(&term * &Poly::monomial(T::one(), k));
    }
    total
}
