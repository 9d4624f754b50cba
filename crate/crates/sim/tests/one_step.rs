use methods_catalog::{build, Classic, Family, MethodSpec};
use num::complex::Complex64;
use proptest::prelude::*;
use sim::{contractivity_experiment, step_shu_osher, FixedResiduals, IvpProblem};
use stab_poly::derive_internal_stability;

fn horner(c: &[f64], z: Complex64) -> Complex64 {
    c.iter()
        .rev()
        .fold(Complex64::new(0.0, 0.0), |acc, a| acc * z + a)
}

fn spec() -> impl Strategy<Value = MethodSpec> {
    prop_oneof![
        (2u32..=8).prop_map(|s| MethodSpec::new(Family::Ssp2, s)),
        (2u32..=3).prop_map(|n| MethodSpec::new(Family::Ssp3, n)),
        (1u32..=6).prop_map(|p| MethodSpec::new(Family::EeExtrap, p)),
        (1u32..=3).prop_map(|r| MethodSpec::new(Family::EmExtrap, 2 * r)),
        prop::sample::select(Classic::ALL.to_vec())
            .prop_map(|c| MethodSpec::classic(c).with_embedded(false)),
    ]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(50))]

    /// `U_{n+1} = P(z)U_n + Σ Q_j(z) r_j + r_{s+1}` on `U' = λU`, with complex
    /// `λ` realised as a 2x2 rotation-scaling system.
    #[test]
    fn perturbed_step_matches_polynomials(
        spec in spec(),
        re in -3.0f64..0.5,
        im in -3.0f64..3.0,
        tau in 0.05f64..1.0,
        seed in prop::collection::vec(-1.0f64..1.0, 2 * 70),
    ) {
        let so = build(&spec).unwrap().shu_osher();
        let s = so.s();
        let (lr, li) = (re / tau.max(1.0), im / tau.max(1.0));
        let problem = IvpProblem::new("rot", vec![1.0, 0.5], 0.0, 1.0, move |_, u, out| {
            out[0] = lr * u[0] - li * u[1];
            out[1] = li * u[0] + lr * u[1];
        });
        let mut rows = vec![vec![0.0, 0.0]];
        for j in 1..=s {
            rows.push(vec![1e-6 * seed[2 * j % seed.len()], 1e-6 * seed[(2 * j + 1) % seed.len()]]);
        }
        let out = step_shu_osher(&so, &problem, 0.0, &[1.0, 0.5], tau, &mut FixedResiduals(rows.clone())).unwrap();
        let iss = derive_internal_stability(&so);
        let z = Complex64::new(lr, li) * tau;
        let u = Complex64::new(1.0, 0.5);
        let mut expect = horner(iss.p.coeffs(), z) * u;
        let mut scale = expect.norm();
        for j in 0..s {
            let term = horner(iss.q[j].coeffs(), z) * Complex64::new(rows[j][0], rows[j][1]);
            expect += term;
            scale += term.norm();
        }
        expect += Complex64::new(rows[s][0], rows[s][1]);
        let got = Complex64::new(out.u[0], out.u[1]);
        prop_assert!((got - expect).norm() <= 1e-12 * scale.max(1.0), "{got} vs {expect}");
    }
}

#[test]
fn ssp3_contractivity_over_random_residuals() {
    use rand::{Rng, SeedableRng};
    // F(u) = -u - tanh(u): forward Euler contracts for τ ≤ 1 since F' ∈ [-2, -1].
    let problem = IvpProblem::new("decay", vec![1.0], 0.0, 1.0, |_, u, out| {
        out[0] = -u[0] - u[0].tanh()
    });
    let m = build(&MethodSpec::new(Family::Ssp3, 3)).unwrap();
    let so = m.shu_osher();
    let c = 6.0;
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
    for _ in 0..100 {
        let u = rng.gen_range(-2.0..2.0);
        let e = rng.gen_range(-1e-2..1e-2);
        let r = FixedResiduals(
            (0..=so.s())
                .map(|j| {
                    vec![if j == 0 {
                        0.0
                    } else {
                        rng.gen_range(-1e-3..1e-3)
                    }]
                })
                .collect(),
        );
        let tau = rng.gen_range(0.0..c);
        let chk = contractivity_experiment(&so, c, &problem, 0.0, &[u], &[u + e], tau, &r).unwrap();
        assert!(chk.holds(), "{chk:?}");
    }
}
