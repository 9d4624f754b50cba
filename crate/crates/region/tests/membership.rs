use num::complex::Complex64;
use proptest::prelude::*;
use region::trace_region;
use stab_poly::Poly;

fn taylor(p: usize) -> Vec<f64> {
    let mut c = vec![1.0];
    for k in 1..=p {
        c.push(c[k - 1] / k as f64);
    }
    c
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    /// Winding-based membership agrees with direct evaluation away from the boundary.
    #[test]
    fn contains_agrees_with_modulus(p in 1usize..=12, re in -1.7f64..1.0, im in -1.7f64..1.7) {
        let c = taylor(p);
        let r = trace_region(&Poly::new(c.clone()), 1024).unwrap();
        let z = Complex64::new(re, im) * p as f64;
        let v: Complex64 = c.iter().rev().fold(Complex64::new(0.0, 0.0), |acc, a| acc * z + a);
        prop_assume!((v.norm() - 1.0).abs() > 1e-3);
        prop_assert_eq!(r.contains(z), v.norm() < 1.0);
    }

    /// Every stored boundary point sits on `|P| = 1`.
    #[test]
    fn boundary_points_are_on_the_level_set(p in 1usize..=12) {
        let r = trace_region(&Poly::new(taylor(p)), 1024).unwrap();
        for z in r.points() {
            prop_assert!((r.eval_p(z).norm() - 1.0).abs() < 1e-11);
        }
    }
}
