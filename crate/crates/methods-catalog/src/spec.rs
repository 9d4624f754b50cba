use std::fmt;
use std::str::FromStr;

use crate::error::CatalogError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Classic {
    Ssp33,
    Heun3,
    Rk4,
    Merson43,
    Fehlberg54,
    BogackiShampine54,
    PrinceDormand8,
    Ssp104,
}

impl Classic {
    pub const ALL: [Classic; 8] = [
        Classic::Ssp33,
        Classic::Heun3,
        Classic::Rk4,
        Classic::Merson43,
        Classic::Fehlberg54,
        Classic::BogackiShampine54,
        Classic::PrinceDormand8,
        Classic::Ssp104,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Classic::Ssp33 => "ssp33",
            Classic::Heun3 => "heun3",
            Classic::Rk4 => "rk4",
            Classic::Merson43 => "merson43",
            Classic::Fehlberg54 => "fehlberg54",
            Classic::BogackiShampine54 => "bogacki_shampine54",
            Classic::PrinceDormand8 => "prince_dormand8",
            Classic::Ssp104 => "ssp104",
        }
    }
}

impl FromStr for Classic {
    type Err = CatalogError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Classic::ALL
            .into_iter()
            .find(|c| c.name() == s)
            .ok_or_else(|| CatalogError::UnknownMethod(s.to_string()))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Family {
    /// Optimal second-order SSP with `s` stages.
    Ssp2,
    /// Optimal third-order SSP with `n²` stages.
    Ssp3,
    /// Explicit Euler extrapolation of order `p`.
    EeExtrap,
    /// Explicit midpoint extrapolation of even order `p`.
    EmExtrap,
    Classic(Classic),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum FormPreference {
    #[default]
    Natural,
    Butcher,
}

impl FromStr for FormPreference {
    type Err = CatalogError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "natural" | "shu-osher" => Ok(FormPreference::Natural),
            "butcher" => Ok(FormPreference::Butcher),
            other => Err(CatalogError::InvalidParameter(format!(
                "unknown form {other:?}"
            ))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct MethodSpec {
    pub family: Family,
    /// `s` for SSP2, `n` for SSP3, `p` for extrapolation, unused for classic.
    pub param: u32,
    pub embedded: bool,
    pub form: FormPreference,
}

impl MethodSpec {
    pub fn new(family: Family, param: u32) -> Self {
        MethodSpec {
            family,
            param,
            embedded: false,
            form: FormPreference::Natural,
        }
    }

    pub fn classic(c: Classic) -> Self {
        MethodSpec {
            family: Family::Classic(c),
            param: 0,
            embedded: true,
            form: FormPreference::Natural,
        }
    }

    pub fn with_embedded(mut self, embedded: bool) -> Self {
        self.embedded = embedded;
        self
    }

    pub fn with_form(mut self, form: FormPreference) -> Self {
        self.form = form;
        self
    }

    /// Check the family constraints on the parameter.
    pub fn check(&self) -> Result<(), CatalogError> {
        let p = self.param;
        match self.family {
            Family::Ssp2 if p < 2 => Err(CatalogError::InvalidParameter(format!(
                "ssp2 needs s >= 2, got {p}"
            ))),
            Family::Ssp3 if p < 2 => Err(CatalogError::InvalidParameter(format!(
                "ssp3 needs n >= 2, got {p}"
            ))),
            Family::EeExtrap if p < 1 => {
                Err(CatalogError::InvalidParameter("ee needs p >= 1".into()))
            }
            Family::EmExtrap if p % 2 == 1 => Err(CatalogError::OddOrder(p)),
            Family::EmExtrap if p < 2 => {
                Err(CatalogError::InvalidParameter("em needs p >= 2".into()))
            }
            _ => Ok(()),
        }
    }
}

impl fmt::Display for MethodSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.family {
            Family::Ssp2 => write!(f, "ssp2:{}", self.param),
            Family::Ssp3 => write!(f, "ssp3:n={}", self.param),
            Family::EeExtrap => write!(f, "ee:{}", self.param),
            Family::EmExtrap => write!(f, "em:{}", self.param),
            Family::Classic(c) => write!(f, "classic:{}", c.name()),
        }
    }
}
