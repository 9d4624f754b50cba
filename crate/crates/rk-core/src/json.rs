//! JSON encoding of both forms. Exact rationals are written as `"num/den"`.

use serde_json::{json, Map, Value};

use crate::butcher::ButcherTableau;
use crate::convert::shu_osher_to_butcher;
use crate::error::CoreError;
use crate::matrix::Mat;
use crate::scalar::Scalar;
use crate::shu_osher::ShuOsherForm;

pub trait ToJson {
    fn to_json(&self) -> Value;
}

pub trait FromJson: Sized {
    fn from_json(v: &Value) -> Result<Self, CoreError>;
}

fn num<T: Scalar>(x: &T) -> Value {
    match x.exact_string() {
        Some(s) => Value::String(s),
        None => json!(x.to_f64()),
    }
}

fn vector<T: Scalar>(v: &[T]) -> Value {
    Value::Array(v.iter().map(num).collect())
}

fn matrix<T: Scalar>(m: &Mat<T>) -> Value {
    Value::Array((0..m.rows()).map(|i| vector(m.row(i))).collect())
}

fn parse_num<T: Scalar>(v: &Value) -> Result<T, CoreError> {
    let text = match v {
        Value::String(s) => s.clone(),
        Value::Number(n) => n.to_string(),
        other => return Err(CoreError::Number(other.to_string())),
    };
    T::parse(&text).ok_or(CoreError::Number(text))
}

fn parse_vec<T: Scalar>(v: &Value, key: &str) -> Result<Vec<T>, CoreError> {
    v.as_array()
        .ok_or_else(|| CoreError::Json(format!("{key} must be an array")))?
        .iter()
        .map(parse_num)
        .collect()
}

fn parse_mat<T: Scalar>(v: &Value, key: &str) -> Result<Mat<T>, CoreError> {
    let rows = v
        .as_array()
        .ok_or_else(|| CoreError::Json(format!("{key} must be an array of rows")))?
        .iter()
        .map(|r| parse_vec(r, key))
        .collect::<Result<Vec<_>, _>>()?;
    Mat::from_rows(rows).ok_or_else(|| CoreError::Json(format!("{key} rows differ in length")))
}

fn field<'a>(obj: &'a Map<String, Value>, key: &str) -> Result<&'a Value, CoreError> {
    obj.get(key)
        .ok_or_else(|| CoreError::Json(format!("missing key {key:?}")))
}

fn order(obj: &Map<String, Value>, key: &str) -> Option<u32> {
    obj.get(key).and_then(Value::as_u64).map(|o| o as u32)
}

impl<T: Scalar> ToJson for ButcherTableau<T> {
    fn to_json(&self) -> Value {
        let mut obj = Map::new();
        obj.insert("s".into(), json!(self.s()));
        obj.insert("A".into(), matrix(&self.a));
        obj.insert("b".into(), vector(&self.b));
        obj.insert("c".into(), vector(&self.c));
        obj.insert("order".into(), json!(self.order));
        if let Some(bh) = &self.b_embedded {
            obj.insert("b_embedded".into(), vector(bh));
        }
        if let Some(o) = self.order_embedded {
            obj.insert("order_embedded".into(), json!(o));
        }
        Value::Object(obj)
    }
}

impl<T: Scalar> FromJson for ButcherTableau<T> {
    fn from_json(v: &Value) -> Result<Self, CoreError> {
        let obj = v
            .as_object()
            .ok_or_else(|| CoreError::Json("expected an object".into()))?;
        let a = parse_mat(field(obj, "A")?, "A")?;
        let b = parse_vec(field(obj, "b")?, "b")?;
        let mut bt = ButcherTableau::new(a, b, order(obj, "order").unwrap_or(1))?;
        if let Some(c) = obj.get("c") {
            bt.c = parse_vec(c, "c")?;
        }
        if let Some(bh) = obj.get("b_embedded") {
            let o = order(obj, "order_embedded").unwrap_or(bt.order.saturating_sub(1));
            bt = bt.with_embedded(parse_vec(bh, "b_embedded")?, o)?;
        }
        Ok(bt)
    }
}

impl<T: Scalar> ToJson for ShuOsherForm<T> {
    fn to_json(&self) -> Value {
        let mut obj = Map::new();
        obj.insert("s".into(), json!(self.s()));
        obj.insert("alpha".into(), matrix(&self.alpha));
        obj.insert("beta".into(), matrix(&self.beta));
        obj.insert("v".into(), vector(&self.v()));
        obj.insert("c".into(), vector(&shu_osher_to_butcher(self).c));
        obj.insert("order".into(), json!(self.order));
        if let Some(e) = &self.embedded {
            obj.insert("alpha_embedded".into(), vector(&e.alpha));
            obj.insert("beta_embedded".into(), vector(&e.beta));
            obj.insert("order_embedded".into(), json!(e.order));
        }
        Value::Object(obj)
    }
}

impl<T: Scalar> FromJson for ShuOsherForm<T> {
    fn from_json(v: &Value) -> Result<Self, CoreError> {
        let obj = v
            .as_object()
            .ok_or_else(|| CoreError::Json("expected an object".into()))?;
        let alpha = parse_mat(field(obj, "alpha")?, "alpha")?;
        let beta = parse_mat(field(obj, "beta")?, "beta")?;
        let mut so = ShuOsherForm::new(alpha, beta, order(obj, "order").unwrap_or(1))?;
        if let (Some(a), Some(b)) = (obj.get("alpha_embedded"), obj.get("beta_embedded")) {
            let o = order(obj, "order_embedded").unwrap_or(so.order.saturating_sub(1));
            so = so.with_embedded(
                parse_vec(a, "alpha_embedded")?,
                parse_vec(b, "beta_embedded")?,
                o,
            )?;
        }
        Ok(so)
    }
}
