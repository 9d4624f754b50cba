use amplification::{amplification_at_zero, amplification_factor, method_region};
use methods_catalog::{build, Family, MethodSpec};
use region::DEFAULT_RESOLUTION;
use rk_core::{shu_osher_to_butcher, Rational, Scalar};
use stab_poly::{
    derive_internal_stability, derive_internal_stability_butcher, retarget_implementation,
    FormEvaluator, Poly,
};

/// `w·d!·Σ_{k=1}^{d} z^k/k!`: truncated `exp(z) - 1` rescaled to leading coefficient `w`.
fn target(w: &Rational, d: usize) -> Poly<Rational> {
    let mut fact = Rational::from_int(1);
    let mut c = vec![Rational::from_int(0)];
    for k in 1..=d {
        fact = fact * Rational::from_int(k as i64);
        c.push(Rational::from_int(1) / fact.clone());
    }
    Poly::new(c).scale(&(w.clone() * fact))
}

#[test]
fn twelfth_order_euler_retarget_removes_zero_amplification() {
    let m = build(&MethodSpec::new(Family::EeExtrap, 12)).unwrap();
    let bt = shu_osher_to_butcher(m.exact().unwrap());
    let qb = derive_internal_stability_butcher(&bt);
    let targets: Vec<Poly<Rational>> =
        qb.q.iter()
            .map(|q| match (q.degree(), q.leading()) {
                (Some(d), Some(w)) if !q.is_zero() => target(w, d),
                _ => Poly::zero(),
            })
            .collect();
    let so = retarget_implementation(&bt, &targets).unwrap();
    let got = derive_internal_stability(&so);
    for (j, (a, b)) in got.q.iter().zip(&targets).enumerate() {
        assert_eq!(a, b, "stage {}", j + 1);
    }
    let eval = FormEvaluator::new(&so.to_f64());
    assert_eq!(amplification_at_zero(&eval), 0.0);
    let region = method_region(&m, DEFAULT_RESOLUTION).unwrap();
    let full = amplification_factor(&eval, &region, false).unwrap().value;
    let half = amplification_factor(&eval, &region, true).unwrap().value;
    let origin = amplification_factor(&eval, &region.restricted(&region.origin_component()), false)
        .unwrap()
        .value;
    eprintln!("retargeted ee:12 M={full} origin={origin} half={half}");
    assert!((origin - 8.3e4).abs() / 8.3e4 < 0.1);
}
