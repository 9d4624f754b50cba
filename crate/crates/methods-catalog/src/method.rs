//! A constructed method: its spec plus coefficients in the requested form.

use rk_core::{
    butcher_to_shu_osher, shu_osher_to_butcher, ButcherTableau, Rational, ShuOsherForm, ToJson,
};
use serde_json::{json, Value};
use stab_poly::{derive_internal_stability, InternalStabilitySet};

use crate::classic::{classic_exact, classic_float};
use crate::error::CatalogError;
use crate::extrapolation::{build_ee_extrapolation, build_em_extrapolation};
use crate::spec::{Family, FormPreference, MethodSpec};
use crate::ssp::{build_ssp2, build_ssp3};

#[derive(Debug, Clone, PartialEq)]
pub enum Coefficients {
    Exact(ShuOsherForm<Rational>),
    Float(ShuOsherForm<f64>),
}

#[derive(Debug, Clone, PartialEq)]
pub struct Method {
    pub spec: MethodSpec,
    pub coefficients: Coefficients,
}

fn strip<T>(mut so: ShuOsherForm<T>, keep: bool) -> ShuOsherForm<T> {
    if !keep {
        so.embedded = None;
    }
    so
}

/// Build the method described by `spec` in the preferred implementation.
pub fn build(spec: &MethodSpec) -> Result<Method, CatalogError> {
    spec.check()?;
    let p = spec.param;
    let exact = match spec.family {
        Family::Ssp2 => Some(build_ssp2(p as usize)?),
        Family::Ssp3 => Some(build_ssp3(p as usize)?),
        Family::EeExtrap => Some(build_ee_extrapolation(p, spec.embedded)?),
        Family::EmExtrap => Some(build_em_extrapolation(p, spec.embedded)?),
        Family::Classic(c) => classic_exact(c).map(|so| strip(so, spec.embedded)),
    };
    let butcher = spec.form == FormPreference::Butcher;
    let coefficients = match exact {
        Some(so) if butcher => {
            Coefficients::Exact(butcher_to_shu_osher(&shu_osher_to_butcher(&so)))
        }
        Some(so) => Coefficients::Exact(so),
        None => {
            let Family::Classic(c) = spec.family else {
                unreachable!("only classic tableaus are inexact")
            };
            Coefficients::Float(strip(classic_float(c), spec.embedded))
        }
    };
    Ok(Method {
        spec: *spec,
        coefficients,
    })
}

impl Method {
    /// Spec string, suffixed with `/butcher` for the Butcher implementation.
    pub fn id(&self) -> String {
        match self.spec.form {
            FormPreference::Natural => self.spec.to_string(),
            FormPreference::Butcher => format!("{}/butcher", self.spec),
        }
    }

    pub fn exact(&self) -> Option<&ShuOsherForm<Rational>> {
        match &self.coefficients {
            Coefficients::Exact(so) => Some(so),
            Coefficients::Float(_) => None,
        }
    }

    pub fn shu_osher(&self) -> ShuOsherForm<f64> {
        match &self.coefficients {
            Coefficients::Exact(so) => so.to_f64(),
            Coefficients::Float(so) => so.clone(),
        }
    }

    pub fn butcher(&self) -> ButcherTableau<f64> {
        match &self.coefficients {
            Coefficients::Exact(so) => shu_osher_to_butcher(so).to_f64(),
            Coefficients::Float(so) => shu_osher_to_butcher(so),
        }
    }

    pub fn s(&self) -> usize {
        match &self.coefficients {
            Coefficients::Exact(so) => so.s(),
            Coefficients::Float(so) => so.s(),
        }
    }

    pub fn order(&self) -> u32 {
        match &self.coefficients {
            Coefficients::Exact(so) => so.order,
            Coefficients::Float(so) => so.order,
        }
    }

    /// Internal stability set, derived exactly where possible.
    pub fn internal_stability(&self) -> InternalStabilitySet<f64> {
        match &self.coefficients {
            Coefficients::Exact(so) => derive_internal_stability(so).to_f64(),
            Coefficients::Float(so) => derive_internal_stability(so),
        }
    }

    pub fn exact_internal_stability(&self) -> Option<InternalStabilitySet<Rational>> {
        self.exact().map(derive_internal_stability)
    }

    pub fn to_json(&self) -> Value {
        let (so, bt) = match &self.coefficients {
            Coefficients::Exact(so) => (so.to_json(), shu_osher_to_butcher(so).to_json()),
            Coefficients::Float(so) => (so.to_json(), shu_osher_to_butcher(so).to_json()),
        };
        json!({ "id": self.id(), "shu_osher": so, "butcher": bt })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::spec::Classic;

    #[test]
    fn butcher_preference_has_zero_alpha() {
        let spec = MethodSpec::new(Family::Ssp2, 4).with_form(FormPreference::Butcher);
        let m = build(&spec).unwrap();
        assert!(m.exact().unwrap().alpha.is_zero());
        assert_eq!(m.id(), "ssp2:4/butcher");
    }

    #[test]
    fn both_forms_share_the_tableau() {
        let nat = build(&MethodSpec::new(Family::EeExtrap, 5)).unwrap();
        let but = build(&MethodSpec::new(Family::EeExtrap, 5).with_form(FormPreference::Butcher))
            .unwrap();
        assert_eq!(nat.butcher(), but.butcher());
        assert_eq!(nat.internal_stability().p, but.internal_stability().p);
    }

    #[test]
    fn embedded_flag_controls_classic_pairs() {
        let with = build(&MethodSpec::classic(Classic::Fehlberg54)).unwrap();
        let without =
            build(&MethodSpec::classic(Classic::Fehlberg54).with_embedded(false)).unwrap();
        assert!(with.butcher().b_embedded.is_some());
        assert!(without.butcher().b_embedded.is_none());
        assert!(build(&MethodSpec::classic(Classic::PrinceDormand8))
            .unwrap()
            .exact()
            .is_none());
    }

    #[test]
    fn json_carries_both_forms() {
        let v = build(&MethodSpec::new(Family::Ssp3, 2)).unwrap().to_json();
        assert_eq!(v["shu_osher"]["s"], 4);
        assert_eq!(v["butcher"]["b"][3], "1/2");
    }
}
