use crate::error::CoreError;
use crate::matrix::Mat;
use crate::scalar::Scalar;

/// Extra update row `(α̂, β̂)` producing the embedded solution.
#[derive(Debug, Clone, PartialEq)]
pub struct EmbeddedRow<T> {
    pub alpha: Vec<T>,
    pub beta: Vec<T>,
    pub order: u32,
}

/// Shu-Osher coefficients: `Y = vU + αY + τβF(Y)` with `(s+1)×s` arrays
/// whose last row is the update. `v = (I - α)·1` is derived on demand.
#[derive(Debug, Clone, PartialEq)]
pub struct ShuOsherForm<T> {
    pub alpha: Mat<T>,
    pub beta: Mat<T>,
    pub order: u32,
    pub embedded: Option<EmbeddedRow<T>>,
}

impl<T: Scalar> ShuOsherForm<T> {
    pub fn new(alpha: Mat<T>, beta: Mat<T>, order: u32) -> Result<Self, CoreError> {
        if alpha.rows() != beta.rows() || alpha.cols() != beta.cols() {
            return Err(CoreError::Shape("alpha and beta differ in shape".into()));
        }
        if alpha.rows() != alpha.cols() + 1 {
            return Err(CoreError::Shape(format!(
                "expected (s+1)xs arrays, got {}x{}",
                alpha.rows(),
                alpha.cols()
            )));
        }
        Ok(ShuOsherForm {
            alpha,
            beta,
            order,
            embedded: None,
        })
    }

    pub fn with_embedded(
        mut self,
        alpha: Vec<T>,
        beta: Vec<T>,
        order: u32,
    ) -> Result<Self, CoreError> {
        if alpha.len() != self.s() || beta.len() != self.s() {
            return Err(CoreError::Shape("embedded row has wrong length".into()));
        }
        self.embedded = Some(EmbeddedRow { alpha, beta, order });
        Ok(self)
    }

    pub fn s(&self) -> usize {
        self.alpha.cols()
    }

    /// `v_i = 1 - Σ_j α_ij` for all `s+1` rows.
    pub fn v(&self) -> Vec<T> {
        self.alpha
            .row_sums()
            .into_iter()
            .map(|r| T::one() - r)
            .collect()
    }

    /// `v` for the embedded update row.
    pub fn v_embedded(&self) -> Option<T> {
        self.embedded
            .as_ref()
            .map(|e| T::one() - e.alpha.iter().cloned().fold(T::zero(), |a, x| a + x))
    }

    pub fn to_f64(&self) -> ShuOsherForm<f64> {
        ShuOsherForm {
            alpha: self.alpha.to_f64(),
            beta: self.beta.to_f64(),
            order: self.order,
            embedded: self.embedded.as_ref().map(|e| EmbeddedRow {
                alpha: e.alpha.iter().map(Scalar::to_f64).collect(),
                beta: e.beta.iter().map(Scalar::to_f64).collect(),
                order: e.order,
            }),
        }
    }
}
