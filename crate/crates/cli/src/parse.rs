//! Method spec grammar: `family[:param[=value]]`.
//!
//! `ssp2:8`, `ssp2:s=8`, `ssp3:n=4`, `ee:12`, `em:p=8`, `classic:rk4`.
//! Region targets additionally accept `taylor:p`.

use std::fmt;

use methods_catalog::{Classic, Family, MethodSpec};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    pub input: String,
    /// 0-based character offset of the offending token.
    pub pos: usize,
    pub message: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "invalid method spec at column {}: {}",
            self.pos + 1,
            self.message
        )?;
        writeln!(f, "  {}", self.input)?;
        write!(f, "  {}^", " ".repeat(self.pos))
    }
}

impl std::error::Error for ParseError {}

fn err(input: &str, pos: usize, message: impl Into<String>) -> ParseError {
    ParseError {
        input: input.to_string(),
        pos,
        message: message.into(),
    }
}

/// What a region command should trace.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RegionTarget {
    Method(MethodSpec),
    /// Degree-`p` Taylor polynomial of `exp`.
    Taylor(u32),
}

struct Parts<'a> {
    family: &'a str,
    key: Option<(&'a str, usize)>,
    value: Option<(&'a str, usize)>,
}

fn split(text: &str) -> Result<Parts<'_>, ParseError> {
    let (family, rest) = match text.find(':') {
        Some(i) => (&text[..i], Some((&text[i + 1..], i + 1))),
        None => (text, None),
    };
    if family.is_empty() {
        return Err(err(text, 0, "missing family name"));
    }
    let Some((rest, at)) = rest else {
        return Ok(Parts {
            family,
            key: None,
            value: None,
        });
    };
    if rest.is_empty() {
        return Err(err(text, at, "missing parameter after ':'"));
    }
    Ok(match rest.find('=') {
        Some(i) => {
            if i == 0 {
                return Err(err(text, at, "missing parameter name before '='"));
            }
            Parts {
                family,
                key: Some((&rest[..i], at)),
                value: Some((&rest[i + 1..], at + i + 1)),
            }
        }
        None => Parts {
            family,
            key: None,
            value: Some((rest, at)),
        },
    })
}

fn number(text: &str, value: Option<(&str, usize)>, what: &str) -> Result<u32, ParseError> {
    let Some((v, at)) = value else {
        return Err(err(text, text.len(), format!("missing {what}")));
    };
    if v.is_empty() {
        return Err(err(text, at, format!("missing {what}")));
    }
    if let Some(bad) = v.find(|c: char| !c.is_ascii_digit()) {
        return Err(err(
            text,
            at + bad,
            format!("{what} must be a non-negative integer"),
        ));
    }
    v.parse()
        .map_err(|_| err(text, at, format!("{what} is too large")))
}

fn check_key(text: &str, key: Option<(&str, usize)>, allowed: &str) -> Result<(), ParseError> {
    match key {
        Some((k, at)) if k != allowed => Err(err(
            text,
            at,
            format!("unknown parameter {k:?}, expected {allowed:?}"),
        )),
        _ => Ok(()),
    }
}

/// Parse and validate a catalog method spec.
pub fn parse_method_spec(text: &str) -> Result<MethodSpec, ParseError> {
    let parts = split(text)?;
    let (family, key) = match parts.family {
        "ssp2" => (Family::Ssp2, "s"),
        "ssp3" => (Family::Ssp3, "n"),
        "ee" => (Family::EeExtrap, "p"),
        "em" => (Family::EmExtrap, "p"),
        "classic" => {
            check_key(text, parts.key, "name")?;
            let Some((name, at)) = parts.value else {
                return Err(err(text, text.len(), "missing classic method name"));
            };
            let c: Classic = name.parse().map_err(|_| {
                let names: Vec<&str> = Classic::ALL.iter().map(|c| c.name()).collect();
                err(
                    text,
                    at,
                    format!(
                        "unknown classic method {name:?}; known: {}",
                        names.join(", ")
                    ),
                )
            })?;
            return Ok(MethodSpec::classic(c));
        }
        other => {
            return Err(err(
                text,
                0,
                format!("unknown family {other:?}; expected ssp2, ssp3, ee, em or classic"),
            ));
        }
    };
    check_key(text, parts.key, key)?;
    let param = number(text, parts.value, &format!("parameter {key}"))?;
    let spec = MethodSpec::new(family, param);
    let at = parts.value.map_or(text.len(), |(_, at)| at);
    spec.check().map_err(|e| err(text, at, e.to_string()))?;
    Ok(spec)
}

/// A method spec, or `taylor:p`.
pub fn parse_region_target(text: &str) -> Result<RegionTarget, ParseError> {
    let parts = split(text)?;
    if parts.family == "taylor" {
        check_key(text, parts.key, "p")?;
        let p = number(text, parts.value, "degree p")?;
        if p == 0 {
            return Err(err(
                text,
                parts.value.map_or(0, |v| v.1),
                "degree must be at least 1",
            ));
        }
        return Ok(RegionTarget::Taylor(p));
    }
    parse_method_spec(text).map(RegionTarget::Method)
}
