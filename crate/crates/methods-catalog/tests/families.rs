use methods_catalog::{
    build, em_auxiliary, internal_stability_closed_form, taylor_polynomial, Family, FormPreference,
    MethodSpec,
};
use num::complex::Complex64;
use proptest::prelude::*;
use rk_core::{shu_osher_to_butcher, validate_shu_osher, Rational, Scalar};
use stab_poly::{derive_internal_stability_butcher, Poly};

fn specs() -> Vec<MethodSpec> {
    let mut out = Vec::new();
    for s in 2..=12 {
        out.push(MethodSpec::new(Family::Ssp2, s));
    }
    for n in 2..=6 {
        out.push(MethodSpec::new(Family::Ssp3, n));
    }
    for p in 1..=12 {
        out.push(MethodSpec::new(Family::EeExtrap, p));
    }
    for p in (2..=12).step_by(2) {
        out.push(MethodSpec::new(Family::EmExtrap, p));
    }
    out
}

#[test]
fn closed_forms_match_elimination() {
    for spec in specs() {
        let derived = build(&spec).unwrap().exact_internal_stability().unwrap();
        let closed = internal_stability_closed_form(&spec).unwrap();
        assert_eq!(derived, closed, "{spec}");
    }
}

#[test]
fn natural_forms_are_valid() {
    for spec in specs() {
        let m = build(&spec.with_embedded(true)).unwrap();
        assert!(validate_shu_osher(m.exact().unwrap()).is_empty(), "{spec}");
    }
}

#[test]
fn extrapolation_reproduces_the_taylor_polynomial() {
    for p in 1..=12 {
        let set = build(&MethodSpec::new(Family::EeExtrap, p))
            .unwrap()
            .exact_internal_stability()
            .unwrap();
        assert_eq!(set.p, taylor_polynomial(p), "ee:{p}");
    }
    for p in (2..=12).step_by(2) {
        let set = build(&MethodSpec::new(Family::EmExtrap, p))
            .unwrap()
            .exact_internal_stability()
            .unwrap();
        assert_eq!(set.p, taylor_polynomial(p), "em:{p}");
    }
}

fn embedded_polynomial(spec: MethodSpec) -> Poly<Rational> {
    let mut bt = shu_osher_to_butcher(build(&spec.with_embedded(true)).unwrap().exact().unwrap());
    bt.b = bt.b_embedded.take().unwrap();
    derive_internal_stability_butcher(&bt).p
}

#[test]
fn embedded_rows_are_lower_order_diagonal_entries() {
    assert_eq!(
        embedded_polynomial(MethodSpec::new(Family::EeExtrap, 12)),
        taylor_polynomial(11)
    );
    assert_eq!(
        embedded_polynomial(MethodSpec::new(Family::EmExtrap, 8)),
        taylor_polynomial(6)
    );
    assert!(
        build(&MethodSpec::new(Family::EmExtrap, 2).with_embedded(true))
            .unwrap()
            .exact()
            .unwrap()
            .embedded
            .is_none()
    );
}

#[test]
fn euler_extrapolation_twelve_has_67_stages() {
    let m = build(&MethodSpec::new(Family::EeExtrap, 12).with_embedded(true)).unwrap();
    assert_eq!(m.s(), 67);
    assert_eq!(m.order(), 12);
}

#[test]
fn butcher_form_polynomials_sum_to_p_minus_one() {
    let spec = MethodSpec::new(Family::EeExtrap, 6).with_form(FormPreference::Butcher);
    let set = build(&spec).unwrap().exact_internal_stability().unwrap();
    let sum = set
        .q
        .iter()
        .fold(Poly::constant(Rational::from_int(1)), |acc, q| &acc + q);
    assert_eq!(sum, set.p);
}

proptest! {
    #[test]
    fn midpoint_auxiliary_is_bounded_on_the_imaginary_segment(m in 1u32..6, theta in 0.01f64..3.13) {
        // q_j(2im cos θ) = i^{j-1} sin(jθ)/sin θ
        let z = Complex64::new(0.0, 2.0 * m as f64 * theta.cos());
        for (j, q) in em_auxiliary(m, 12).iter().enumerate().skip(1) {
            let got = q.to_f64().eval_complex(z);
            let want = Complex64::i().powu(j as u32 - 1) * ((j as f64 * theta).sin() / theta.sin());
            prop_assert!((got - want).norm() < 1e-9 * (1.0 + want.norm()));
        }
    }

    #[test]
    fn ssp2_stability_polynomial_is_convex_euler(s in 2usize..20, x in -3.0f64..1.0) {
        let set = build(&MethodSpec::new(Family::Ssp2, s as u32)).unwrap().internal_stability();
        let h = s as f64 - 1.0;
        let nu = 1.0 + x / h;
        let want = 1.0 / s as f64 + (h / s as f64) * nu.powi(s as i32);
        prop_assert!((set.p.eval(&x) - want).abs() < 1e-12 * (1.0 + want.abs()));
    }

    #[test]
    fn butcher_and_natural_forms_share_p(p in 1u32..9) {
        let nat = build(&MethodSpec::new(Family::EeExtrap, p)).unwrap().exact_internal_stability().unwrap();
        let but = build(&MethodSpec::new(Family::EeExtrap, p).with_form(FormPreference::Butcher))
            .unwrap()
            .exact_internal_stability()
            .unwrap();
        prop_assert_eq!(nat.p, but.p);
    }
}
