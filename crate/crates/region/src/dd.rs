//! Double-double complex Horner evaluation for residuals near rounding level.

use num::complex::Complex64;

#[derive(Clone, Copy)]
struct Dd(f64, f64);

fn two_sum(a: f64, b: f64) -> Dd {
    let s = a + b;
    let bb = s - a;
    Dd(s, (a - (s - bb)) + (b - bb))
}

impl Dd {
    fn add(self, o: Dd) -> Dd {
        let s = two_sum(self.0, o.0);
        let lo = s.1 + self.1 + o.1;
        let hi = s.0 + lo;
        Dd(hi, lo - (hi - s.0))
    }

    fn mul_f(self, b: f64) -> Dd {
        let p = self.0 * b;
        let e = self.0.mul_add(b, -p);
        let lo = e + self.1 * b;
        let hi = p + lo;
        Dd(hi, lo - (hi - p))
    }

    fn neg(self) -> Dd {
        Dd(-self.0, -self.1)
    }
}

/// `Σ c_k w^k` with a doubled working precision.
pub(crate) fn horner_dd(c: &[Complex64], w: Complex64) -> Complex64 {
    let (mut re, mut im) = (Dd(0.0, 0.0), Dd(0.0, 0.0));
    for a in c.iter().rev() {
        let nre = re.mul_f(w.re).add(im.mul_f(w.im).neg());
        let nim = re.mul_f(w.im).add(im.mul_f(w.re));
        re = nre.add(Dd(a.re, 0.0));
        im = nim.add(Dd(a.im, 0.0));
    }
    Complex64::new(re.0 + re.1, im.0 + im.1)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cancellation_is_resolved() {
        // (w - 1)^2 expanded, evaluated next to its double root
        let c = [
            Complex64::new(1.0, 0.0),
            Complex64::new(-2.0, 0.0),
            Complex64::new(1.0, 0.0),
        ];
        let w = Complex64::new(1.0 + 1e-9, 0.0);
        let v = horner_dd(&c, w);
        assert!((v.re - 1e-18).abs() < 1e-24);
    }
}
