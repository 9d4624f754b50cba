//! Invariant checks that report every violation instead of failing fast.

use std::fmt;

use crate::butcher::ButcherTableau;
use crate::scalar::Scalar;
use crate::shu_osher::ShuOsherForm;

/// Absolute tolerance used by all structural checks.
pub const VALIDATION_TOL: f64 = 1e-13;

#[derive(Debug, Clone, PartialEq)]
pub struct Violation {
    /// 1-based location such as `A[2][3]` or `c[2]`.
    pub location: String,
    pub message: String,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {}", self.location, self.message)
    }
}

fn push(out: &mut Vec<Violation>, location: String, message: impl Into<String>) {
    out.push(Violation {
        location,
        message: message.into(),
    });
}

fn check_finite<T: Scalar>(out: &mut Vec<Violation>, name: &str, row: usize, vals: &[T]) {
    for (j, x) in vals.iter().enumerate() {
        if !x.to_f64().is_finite() {
            push(
                out,
                format!("{name}[{}][{}]", row + 1, j + 1),
                "entry is not finite",
            );
        }
    }
}

pub fn validate_butcher<T: Scalar>(bt: &ButcherTableau<T>) -> Vec<Violation> {
    let mut out = Vec::new();
    let s = bt.s();
    if bt.a.rows() != s || bt.a.cols() != s || bt.c.len() != s {
        push(
            &mut out,
            "A".into(),
            format!("expected {s}x{s} matrix and length-{s} c"),
        );
        return out;
    }
    for i in 0..s {
        check_finite(&mut out, "A", i, bt.a.row(i));
        for j in i..s {
            if bt.a[(i, j)].to_f64().abs() > VALIDATION_TOL {
                push(
                    &mut out,
                    format!("A[{}][{}]", i + 1, j + 1),
                    "explicit methods need strictly lower triangular A",
                );
            }
        }
        let sum = bt.a.row(i).iter().fold(0.0, |acc, x| acc + x.to_f64());
        let gap = (sum - bt.c[i].to_f64()).abs();
        if gap > VALIDATION_TOL {
            push(
                &mut out,
                format!("c[{}]", i + 1),
                format!("row {} sum of A differs from c by {gap:.3e}", i + 1),
            );
        }
    }
    check_finite(&mut out, "b", 0, &bt.b);
    if let Some(bh) = &bt.b_embedded {
        if bh.len() != s {
            push(
                &mut out,
                "b_embedded".into(),
                format!("length {} but s = {s}", bh.len()),
            );
        }
        if bt.order_embedded.is_none() {
            push(
                &mut out,
                "order_embedded".into(),
                "embedded weights without an embedded order",
            );
        }
    }
    out
}

pub fn validate_shu_osher<T: Scalar>(so: &ShuOsherForm<T>) -> Vec<Violation> {
    let mut out = Vec::new();
    let s = so.s();
    for (name, m) in [("alpha", &so.alpha), ("beta", &so.beta)] {
        if m.rows() != s + 1 || m.cols() != s {
            push(
                &mut out,
                name.into(),
                format!("expected {}x{s} array", s + 1),
            );
            continue;
        }
        for i in 0..=s {
            check_finite(&mut out, name, i, m.row(i));
        }
        for i in 0..s {
            for j in i..s {
                if m[(i, j)].to_f64().abs() > VALIDATION_TOL {
                    push(
                        &mut out,
                        format!("{name}[{}][{}]", i + 1, j + 1),
                        "stage rows must be strictly lower triangular",
                    );
                }
            }
        }
    }
    if let Some(e) = &so.embedded {
        if e.alpha.len() != s || e.beta.len() != s {
            push(
                &mut out,
                "embedded".into(),
                format!("embedded row must have length {s}"),
            );
        }
    }
    out
}
