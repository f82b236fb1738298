//! JSON plant files.
//!
//! ```json
//! {
//!   "ring": {"kind": "quadratic", "m": 5},
//!   "plant": {"num": {"re": "1", "im": "1"}, "den": {"re": "2", "im": "0"}},
//!   "controller": {"num": ..., "den": ...},
//!   "config": {"omega_max": 32, "bound": 8, "box": 50, "r1": "0", "r2": "0"}
//! }
//! ```
//!
//! A delay-ring element is `{"coeffs": ["1", "0", "-1"]}`, ascending.

use anyhow::{anyhow, bail, Context};
use serde::{Deserialize, Serialize};
use stabring::arith::{parse_rat, rat_to_string, BigRat, Poly, QuadElem};
use stabring::rings::{RingDescriptor, TransferFunction};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RingSpec {
    pub kind: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub m: Option<u64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum ElemSpec {
    Quadratic { re: String, im: String },
    Delay { coeffs: Vec<String> },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FractionSpec {
    pub num: ElemSpec,
    pub den: ElemSpec,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ConfigSpec {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub omega_max: Option<u32>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub bound: Option<usize>,
    #[serde(default, rename = "box", skip_serializing_if = "Option::is_none")]
    pub search_box: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub r1: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub r2: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PlantFile {
    pub ring: RingSpec,
    pub plant: FractionSpec,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub controller: Option<FractionSpec>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub config: Option<ConfigSpec>,
}

/// A parse failure with a 1-based position, if one is known.
#[derive(Debug)]
pub struct ParseError {
    pub line: Option<usize>,
    pub column: Option<usize>,
    pub message: String,
}

impl std::fmt::Display for ParseError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match (self.line, self.column) {
            (Some(l), Some(c)) => write!(f, "line {l}, column {c}: {}", self.message),
            (None, Some(c)) => write!(f, "column {c}: {}", self.message),
            _ => f.write_str(&self.message),
        }
    }
}

impl std::error::Error for ParseError {}

impl ParseError {
    pub fn plain(message: impl Into<String>) -> Self {
        ParseError { line: None, column: None, message: message.into() }
    }
}

impl From<stabring::Error> for ParseError {
    fn from(e: stabring::Error) -> Self {
        match e {
            stabring::Error::Parse { column, message } => ParseError { line: None, column: Some(column), message },
            other => ParseError::plain(other.to_string()),
        }
    }
}

fn rat(s: &str) -> anyhow::Result<BigRat> {
    parse_rat(s).ok_or_else(|| anyhow!("not an exact rational: {s:?}"))
}

impl RingSpec {
    pub fn descriptor(&self) -> anyhow::Result<RingDescriptor> {
        match (self.kind.as_str(), self.m) {
            ("quadratic", Some(m)) => Ok(RingDescriptor::quadratic(m)?),
            ("quadratic", None) => bail!("quadratic ring needs \"m\""),
            ("delay", None) => Ok(RingDescriptor::Delay),
            ("delay", Some(_)) => bail!("delay ring takes no \"m\""),
            (k, _) => bail!("unknown ring kind {k:?}"),
        }
    }

    pub fn from_descriptor(ring: RingDescriptor) -> Self {
        match ring {
            RingDescriptor::Quadratic { m } => RingSpec { kind: "quadratic".into(), m: Some(m) },
            RingDescriptor::Delay => RingSpec { kind: "delay".into(), m: None },
        }
    }
}

impl ElemSpec {
    pub fn to_field(&self, ring: RingDescriptor) -> anyhow::Result<TransferFunction> {
        match (self, ring) {
            (ElemSpec::Quadratic { re, im }, RingDescriptor::Quadratic { m }) => {
                Ok(TransferFunction::from_quad(QuadElem::new(rat(re)?, rat(im)?, m)))
            }
            (ElemSpec::Delay { coeffs }, RingDescriptor::Delay) => {
                let cs = coeffs.iter().map(|c| rat(c)).collect::<anyhow::Result<Vec<_>>>()?;
                Ok(TransferFunction::from_poly(Poly::new(cs)))
            }
            _ => bail!("element literal does not match the ring kind"),
        }
    }
}

impl FractionSpec {
    pub fn to_transfer_function(&self, ring: RingDescriptor) -> anyhow::Result<TransferFunction> {
        let num = self.num.to_field(ring).context("numerator")?;
        let den = self.den.to_field(ring).context("denominator")?;
        num.checked_div(&den).ok_or_else(|| anyhow!("denominator is zero"))
    }

    /// Canonical literal: the reduced quadratic fraction
    /// `(α₁ + α₂√m·i)/β`, or the reduced delay fraction.
    pub fn from_transfer_function(p: &TransferFunction) -> Self {
        match p {
            TransferFunction::Quadratic(_) => {
                let (a1, a2, b) = p.quad_parts().expect("quadratic");
                let s = |z: &stabring::arith::BigInt| z.to_string();
                FractionSpec {
                    num: ElemSpec::Quadratic { re: s(&a1), im: s(&a2) },
                    den: ElemSpec::Quadratic { re: s(&b), im: "0".into() },
                }
            }
            TransferFunction::Delay { num, den } => {
                let cs = |q: &Poly| ElemSpec::Delay { coeffs: q.coeffs().iter().map(rat_to_string).collect() };
                FractionSpec { num: cs(num), den: cs(den) }
            }
        }
    }
}

/// A plant file after validation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Loaded {
    pub ring: RingDescriptor,
    pub plant: TransferFunction,
    pub controller: Option<TransferFunction>,
    pub config: ConfigSpec,
}

impl PlantFile {
    pub fn parse(text: &str) -> Result<PlantFile, ParseError> {
        serde_json::from_str(text).map_err(|e| ParseError {
            line: Some(e.line()),
            column: Some(e.column()),
            message: e.to_string().split(" at line ").next().unwrap_or_default().to_string(),
        })
    }

    pub fn load(&self) -> Result<Loaded, ParseError> {
        let wrap = |e: anyhow::Error| ParseError::plain(format!("{e:#}"));
        let ring = self.ring.descriptor().map_err(wrap)?;
        let plant = self.plant.to_transfer_function(ring).context("plant").map_err(wrap)?;
        let controller = self
            .controller
            .as_ref()
            .map(|c| c.to_transfer_function(ring).context("controller"))
            .transpose()
            .map_err(wrap)?;
        Ok(Loaded { ring, plant, controller, config: self.config.clone().unwrap_or_default() })
    }

    pub fn from_loaded(l: &Loaded) -> PlantFile {
        let config = (l.config != ConfigSpec::default()).then(|| l.config.clone());
        PlantFile {
            ring: RingSpec::from_descriptor(l.ring),
            plant: FractionSpec::from_transfer_function(&l.plant),
            controller: l.controller.as_ref().map(FractionSpec::from_transfer_function),
            config,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("plant files serialize")
    }
}
