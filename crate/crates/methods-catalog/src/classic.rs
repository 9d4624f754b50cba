//! Fixed literature tableaus used for comparison.
//!
//! All tableaus except the eighth-order Prince-Dormand pair are exact
//! rationals. The ten-stage SSP method is stored in its natural low-storage
//! Shu-Osher form.

use rk_core::{butcher_to_shu_osher, ButcherTableau, Mat, Rational, Scalar, ShuOsherForm};

use crate::spec::Classic;

const SSP33_A: &[&[&str]] = &[&[], &["1"], &["1/4", "1/4"]];
const SSP33_B: &[&str] = &["1/6", "1/6", "2/3"];

const HEUN3_A: &[&[&str]] = &[&[], &["1/3"], &["0", "2/3"]];
const HEUN3_B: &[&str] = &["1/4", "0", "3/4"];

const RK4_A: &[&[&str]] = &[&[], &["1/2"], &["0", "1/2"], &["0", "0", "1"]];
const RK4_B: &[&str] = &["1/6", "1/3", "1/3", "1/6"];

const MERSON43_A: &[&[&str]] = &[
    &[],
    &["1/3"],
    &["1/6", "1/6"],
    &["1/8", "0", "3/8"],
    &["1/2", "0", "-3/2", "2"],
];
const MERSON43_B: &[&str] = &["1/6", "0", "0", "2/3", "1/6"];
const MERSON43_BHAT: &[&str] = &["1/10", "0", "3/10", "2/5", "1/5"];

const FEHLBERG54_A: &[&[&str]] = &[
    &[],
    &["1/4"],
    &["3/32", "9/32"],
    &["1932/2197", "-7200/2197", "7296/2197"],
    &["439/216", "-8", "3680/513", "-845/4104"],
    &["-8/27", "2", "-3544/2565", "1859/4104", "-11/40"],
];
const FEHLBERG54_B: &[&str] = &["16/135", "0", "6656/12825", "28561/56430", "-9/50", "2/55"];
const FEHLBERG54_BHAT: &[&str] = &["25/216", "0", "1408/2565", "2197/4104", "-1/5", "0"];

const BS54_A: &[&[&str]] = &[
    &[],
    &["1/6"],
    &["2/27", "4/27"],
    &["183/1372", "-162/343", "1053/1372"],
    &["68/297", "-4/11", "42/143", "1960/3861"],
    &[
        "597/22528",
        "81/352",
        "63099/585728",
        "58653/366080",
        "4617/20480",
    ],
    &[
        "174197/959244",
        "-30942/79937",
        "8152137/19744439",
        "666106/1039181",
        "-29421/29068",
        "482048/414219",
    ],
    &[
        "587/8064",
        "0",
        "4440339/15491840",
        "24353/124800",
        "387/44800",
        "2152/5985",
        "7267/94080",
    ],
];
const BS54_B: &[&str] = &[
    "587/8064",
    "0",
    "4440339/15491840",
    "24353/124800",
    "387/44800",
    "2152/5985",
    "7267/94080",
    "0",
];
const BS54_BHAT: &[&str] = &[
    "2479/34992",
    "0",
    "123/416",
    "612941/3411720",
    "43/1440",
    "2272/6561",
    "79937/1113912",
    "3293/556956",
];

const SSP104_BHAT: &[&str] = &["0", "2/9", "0", "0", "5/18", "1/3", "0", "0", "0", "1/6"];

const PD8_A: [[f64; 13]; 13] = [
    [
        0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0,
    ],
    [
        0.05555555555555555,
        0.0,
        0.0,
        0.0,
        0.0,
        0.0,
        0.0,
        0.0,
        0.0,
        0.0,
        0.0,
        0.0,
        0.0,
    ],
    [
        0.020833333333333332,
        0.0625,
        0.0,
        0.0,
        0.0,
        0.0,
        0.0,
        0.0,
        0.0,
        0.0,
        0.0,
        0.0,
        0.0,
    ],
    [
        0.03125, 0.0, 0.09375, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0,
    ],
    [
        0.3125, 0.0, -1.171875, 1.171875, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0,
    ],
    [
        0.0375, 0.0, 0.0, 0.1875, 0.15, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0,
    ],
    [
        0.04791013711111111,
        0.0,
        0.0,
        0.11224871277777777,
        -0.02550567377777778,
        0.012846823888888888,
        0.0,
        0.0,
        0.0,
        0.0,
        0.0,
        0.0,
        0.0,
    ],
    [
        0.01691798978729228,
        0.0,
        0.0,
        0.3878482784860432,
        0.03597736985150033,
        0.19697021421566607,
        -0.17271385234050185,
        0.0,
        0.0,
        0.0,
        0.0,
        0.0,
        0.0,
    ],
    [
        0.0690957533591923,
        0.0,
        0.0,
        -0.6342479767288541,
        -0.16119757522460407,
        0.13865030945882525,
        0.9409286140357562,
        0.21163632648194397,
        0.0,
        0.0,
        0.0,
        0.0,
        0.0,
    ],
    [
        0.1835569968390454,
        0.0,
        0.0,
        -2.4687680843155926,
        -0.29128688781630047,
        -0.026473020233117376,
        2.8478387641928005,
        0.2813873314698498,
        0.12374489986331466,
        0.0,
        0.0,
        0.0,
        0.0,
    ],
    [
        -1.2154248173958881,
        0.0,
        0.0,
        16.672608665945774,
        0.915741828416818,
        -6.056605804357471,
        -16.00357359415618,
        14.849303086297663,
        -13.371575735289849,
        5.134182648179638,
        0.0,
        0.0,
        0.0,
    ],
    [
        0.25886091643826425,
        0.0,
        0.0,
        -4.774485785489205,
        -0.4350930137770325,
        -3.0494833320722416,
        5.5779200399360995,
        6.15583158986104,
        -5.062104586736939,
        2.193926173180679,
        0.13462799865933495,
        0.0,
        0.0,
    ],
    [
        0.8224275996265075,
        0.0,
        0.0,
        -11.658673257277664,
        -0.7576221166909362,
        0.7139735881595816,
        12.075774986890057,
        -2.127659113920403,
        1.9901662070489554,
        -0.23428647154404028,
        0.17589857770794226,
        0.0,
        0.0,
    ],
];
const PD8_B: [f64; 13] = [
    0.041747491141530244,
    0.0,
    0.0,
    0.0,
    0.0,
    -0.05545232861123931,
    0.2393128072011801,
    0.703510669403443,
    -0.7597596138144609,
    0.6605630309222863,
    0.15818748251012332,
    -0.2381095387528628,
    0.25,
];
const PD8_BHAT: [f64; 13] = [
    0.0295532136763535,
    0.0,
    0.0,
    0.0,
    0.0,
    -0.828606276487797,
    0.3112409000511183,
    2.467345190599887,
    -2.546941651841909,
    1.4435485836767752,
    0.07941559588112729,
    0.044444444444444446,
    0.0,
];

fn parse_vec(v: &[&str]) -> Vec<Rational> {
    v.iter()
        .map(|x| Rational::parse(x).expect("literal coefficient"))
        .collect()
}

fn exact_tableau(
    a: &[&[&str]],
    b: &[&str],
    order: u32,
    bhat: Option<(&[&str], u32)>,
) -> ButcherTableau<Rational> {
    let s = b.len();
    let mut m = Mat::zeros(s, s);
    for (i, row) in a.iter().enumerate() {
        for (j, x) in parse_vec(row).into_iter().enumerate() {
            m[(i, j)] = x;
        }
    }
    let bt = ButcherTableau::new(m, parse_vec(b), order).expect("square tableau");
    match bhat {
        Some((bh, o)) => bt.with_embedded(parse_vec(bh), o).expect("embedded length"),
        None => bt,
    }
}

/// Natural low-storage form: Euler chain with `τ/6`, one restart at stage 6.
fn ssp104_shu_osher() -> ShuOsherForm<Rational> {
    let q = Rational::from_ratio;
    let mut alpha = Mat::zeros(11, 10);
    let mut beta = Mat::zeros(11, 10);
    for i in 1..10 {
        alpha[(i, i - 1)] = q(1, 1);
        beta[(i, i - 1)] = q(1, 6);
    }
    alpha[(5, 4)] = q(2, 5);
    beta[(5, 4)] = q(1, 15);
    alpha[(10, 4)] = q(9, 25);
    alpha[(10, 9)] = q(3, 5);
    beta[(10, 4)] = q(3, 50);
    beta[(10, 9)] = q(1, 10);
    let zeros = vec![q(0, 1); 10];
    ShuOsherForm::new(alpha, beta, 4)
        .and_then(|so| so.with_embedded(zeros, parse_vec(SSP104_BHAT), 3))
        .expect("consistent shapes")
}

/// Exact natural form, `None` for the floating-point tableau.
pub(crate) fn classic_exact(c: Classic) -> Option<ShuOsherForm<Rational>> {
    let bt = match c {
        Classic::Ssp33 => exact_tableau(SSP33_A, SSP33_B, 3, None),
        Classic::Heun3 => exact_tableau(HEUN3_A, HEUN3_B, 3, None),
        Classic::Rk4 => exact_tableau(RK4_A, RK4_B, 4, None),
        Classic::Merson43 => exact_tableau(MERSON43_A, MERSON43_B, 4, Some((MERSON43_BHAT, 3))),
        Classic::Fehlberg54 => {
            exact_tableau(FEHLBERG54_A, FEHLBERG54_B, 5, Some((FEHLBERG54_BHAT, 4)))
        }
        Classic::BogackiShampine54 => exact_tableau(BS54_A, BS54_B, 5, Some((BS54_BHAT, 4))),
        Classic::Ssp104 => return Some(ssp104_shu_osher()),
        Classic::PrinceDormand8 => return None,
    };
    Some(butcher_to_shu_osher(&bt))
}

fn prince_dormand8() -> ButcherTableau<f64> {
    let a = Mat::from_rows(PD8_A.iter().map(|r| r.to_vec()).collect()).expect("square");
    ButcherTableau::new(a, PD8_B.to_vec(), 8)
        .and_then(|bt| bt.with_embedded(PD8_BHAT.to_vec(), 7))
        .expect("consistent shapes")
}

/// Natural form in floating point.
pub(crate) fn classic_float(c: Classic) -> ShuOsherForm<f64> {
    match classic_exact(c) {
        Some(so) => so.to_f64(),
        None => butcher_to_shu_osher(&prince_dormand8()),
    }
}

/// Butcher tableau of a literature method (abscissae are the row sums).
pub fn classic_tableau(c: Classic) -> ButcherTableau<f64> {
    match classic_exact(c) {
        Some(so) => rk_core::shu_osher_to_butcher(&so).to_f64(),
        None => prince_dormand8(),
    }
}
