use proptest::prelude::*;
use rk_core::{
    butcher_to_shu_osher, residual_butcher_from_shu_osher, shu_osher_to_butcher, ButcherTableau,
    FromJson, Mat, Rational, Scalar, ShuOsherForm, ToJson,
};

fn ratio() -> impl Strategy<Value = Rational> {
    (-4i64..=4, 1i64..=4).prop_map(|(n, d)| Rational::from_ratio(n, d))
}

fn tableau() -> impl Strategy<Value = ButcherTableau<Rational>> {
    (1usize..=6).prop_flat_map(|s| {
        (
            prop::collection::vec(ratio(), s * s),
            prop::collection::vec(ratio(), s),
        )
            .prop_map(move |(a, b)| {
                let mut m = Mat::zeros(s, s);
                for i in 0..s {
                    for j in 0..i {
                        m[(i, j)] = a[i * s + j].clone();
                    }
                }
                ButcherTableau::new(m, b, 1).unwrap()
            })
    })
}

/// Lower-triangular `α ≥ 0` with row sums at most one, arbitrary `β`.
fn shu_osher() -> impl Strategy<Value = ShuOsherForm<Rational>> {
    (1usize..=6).prop_flat_map(|s| {
        (
            prop::collection::vec(0i64..=2, (s + 1) * s),
            prop::collection::vec(ratio(), (s + 1) * s),
        )
            .prop_map(move |(a, b)| {
                let mut alpha = Mat::zeros(s + 1, s);
                let mut beta = Mat::zeros(s + 1, s);
                for i in 1..=s {
                    for j in 0..i.min(s) {
                        // Each row shares at most one unit among its i entries.
                        alpha[(i, j)] = Rational::from_ratio(a[i * s + j], 2 * i as i64);
                        beta[(i, j)] = b[i * s + j].clone();
                    }
                }
                ShuOsherForm::new(alpha, beta, 1).unwrap()
            })
    })
}

proptest! {
    #[test]
    fn butcher_round_trips_through_shu_osher(bt in tableau()) {
        let back = shu_osher_to_butcher(&butcher_to_shu_osher(&bt));
        prop_assert_eq!(back, bt);
    }

    #[test]
    fn butcher_form_is_canonical(so in shu_osher()) {
        let bt = shu_osher_to_butcher(&so);
        prop_assert_eq!(shu_osher_to_butcher(&butcher_to_shu_osher(&bt)), bt);
    }

    #[test]
    fn abscissae_are_row_sums(so in shu_osher()) {
        let bt = shu_osher_to_butcher(&so);
        prop_assert_eq!(bt.c.clone(), bt.a.row_sums());
    }

    #[test]
    fn residual_map_is_linear(so in shu_osher(), x in prop::collection::vec(ratio(), 7), y in prop::collection::vec(ratio(), 7), k in ratio()) {
        let n = so.s() + 1;
        let (x, y) = (&x[..n], &y[..n]);
        let sum: Vec<Rational> = x.iter().zip(y).map(|(a, b)| a.clone() + k.clone() * b.clone()).collect();
        let lhs = residual_butcher_from_shu_osher(&so, &sum);
        let (rx, ry) = (residual_butcher_from_shu_osher(&so, x), residual_butcher_from_shu_osher(&so, y));
        let rhs: Vec<Rational> = rx.iter().zip(&ry).map(|(a, b)| a.clone() + k.clone() * b.clone()).collect();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn json_round_trips(so in shu_osher()) {
        prop_assert_eq!(ShuOsherForm::<Rational>::from_json(&so.to_json()).unwrap(), so.clone());
        let bt = shu_osher_to_butcher(&so);
        prop_assert_eq!(ButcherTableau::<Rational>::from_json(&bt.to_json()).unwrap(), bt);
    }
}
