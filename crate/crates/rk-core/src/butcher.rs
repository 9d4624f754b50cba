use crate::error::CoreError;
use crate::matrix::Mat;
use crate::scalar::Scalar;

/// Butcher coefficients `(A, b, c)` of an explicit method, with optional
/// embedded weights for error estimation.
#[derive(Debug, Clone, PartialEq)]
pub struct ButcherTableau<T> {
    pub a: Mat<T>,
    pub b: Vec<T>,
    pub c: Vec<T>,
    pub b_embedded: Option<Vec<T>>,
    pub order: u32,
    pub order_embedded: Option<u32>,
}

impl<T: Scalar> ButcherTableau<T> {
    /// Build a tableau with `c = A·1`.
    pub fn new(a: Mat<T>, b: Vec<T>, order: u32) -> Result<Self, CoreError> {
        if a.rows() != a.cols() || b.len() != a.rows() {
            return Err(CoreError::Shape(format!(
                "A is {}x{} but b has length {}",
                a.rows(),
                a.cols(),
                b.len()
            )));
        }
        let c = a.row_sums();
        Ok(ButcherTableau {
            a,
            b,
            c,
            b_embedded: None,
            order,
            order_embedded: None,
        })
    }

    pub fn with_embedded(mut self, b_hat: Vec<T>, order: u32) -> Result<Self, CoreError> {
        if b_hat.len() != self.s() {
            return Err(CoreError::Shape(format!(
                "embedded weights have length {}",
                b_hat.len()
            )));
        }
        self.b_embedded = Some(b_hat);
        self.order_embedded = Some(order);
        Ok(self)
    }

    pub fn s(&self) -> usize {
        self.b.len()
    }

    pub fn to_f64(&self) -> ButcherTableau<f64> {
        let lower = |v: &Vec<T>| v.iter().map(Scalar::to_f64).collect::<Vec<_>>();
        ButcherTableau {
            a: self.a.to_f64(),
            b: lower(&self.b),
            c: lower(&self.c),
            b_embedded: self.b_embedded.as_ref().map(lower),
            order: self.order,
            order_embedded: self.order_embedded,
        }
    }
}
