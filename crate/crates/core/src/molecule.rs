//! Molecule descriptions and their TOML config files.

use std::fmt;
use std::fs;
use std::path::Path;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::symmetry_classifier::{NuclearSpin, PointGroup};

#[derive(Debug, Error, Clone, PartialEq)]
pub enum MoleculeError {
    #[error("malformed config: {0}")]
    Parse(String),
    #[error("invalid config field `{field}`: {reason}")]
    InvalidField { field: &'static str, reason: String },
    #[error("unknown molecule `{0}` (see `molecules` for the shipped list)")]
    UnknownMolecule(String),
    #[error("cannot read config `{path}`: {reason}")]
    Io { path: String, reason: String },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum BandType {
    /// Transition moment along the symmetry axis; `dK = 0`.
    Parallel,
    /// Transition moment in the plane; `dK = +-1`.
    Perpendicular,
}

impl fmt::Display for BandType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            BandType::Parallel => "parallel",
            BandType::Perpendicular => "perpendicular",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Band {
    pub name: String,
    #[serde(rename = "origin_cm1")]
    pub origin: f64,
    #[serde(rename = "type")]
    pub band_type: BandType,
}

/// A symmetric-top molecule with three identical nuclei.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MoleculeSpec {
    pub name: String,
    pub point_group: PointGroup,
    pub nuclear_spin: NuclearSpin,
    /// Rotational constant B in cm^-1.
    #[serde(rename = "B_cm1")]
    pub b: f64,
    /// Rotational constant C (about the symmetry axis) in cm^-1.
    #[serde(rename = "C_cm1")]
    pub c: f64,
    /// Full s/a splitting in cm^-1; C3v only.
    #[serde(rename = "inversion_splitting_cm1", default, skip_serializing_if = "Option::is_none")]
    pub inversion_splitting: Option<f64>,
    #[serde(default)]
    pub bands: Vec<Band>,
}

const SHIPPED: [(&str, &str); 4] = [
    ("so3", include_str!("../molecules/so3.toml")),
    ("bh3", include_str!("../molecules/bh3.toml")),
    ("nh3", include_str!("../molecules/nh3.toml")),
    ("fixture", include_str!("../molecules/fixture.toml")),
];

fn invalid(field: &'static str, reason: impl Into<String>) -> MoleculeError {
    MoleculeError::InvalidField { field, reason: reason.into() }
}

impl MoleculeSpec {
    pub fn from_toml_str(text: &str) -> Result<Self, MoleculeError> {
        let spec: MoleculeSpec =
            toml::from_str(text).map_err(|e| MoleculeError::Parse(e.message().replace('\n', " ")))?;
        spec.validate()?;
        Ok(spec)
    }

    pub fn load(path: &Path) -> Result<Self, MoleculeError> {
        let text = fs::read_to_string(path)
            .map_err(|e| MoleculeError::Io { path: path.display().to_string(), reason: e.to_string() })?;
        Self::from_toml_str(&text)
    }

    pub fn to_toml_string(&self) -> String {
        toml::to_string(self).expect("MoleculeSpec always serializes")
    }

    pub fn validate(&self) -> Result<(), MoleculeError> {
        if self.name.trim().is_empty() {
            return Err(invalid("name", "must not be empty"));
        }
        if !(self.b.is_finite() && self.b > 0.0) {
            return Err(invalid("B_cm1", format!("must be a positive number, got {}", self.b)));
        }
        if !(self.c.is_finite() && self.c > 0.0) {
            return Err(invalid("C_cm1", format!("must be a positive number, got {}", self.c)));
        }
        match (self.point_group, self.inversion_splitting) {
            (PointGroup::C3v, None) => return Err(invalid("inversion_splitting_cm1", "required for point_group C3v")),
            (PointGroup::C3v, Some(x)) if !(x.is_finite() && x >= 0.0) => {
                return Err(invalid("inversion_splitting_cm1", format!("must be >= 0, got {x}")))
            }
            (PointGroup::D3h, Some(_)) => {
                return Err(invalid("inversion_splitting_cm1", "only allowed for point_group C3v"))
            }
            _ => {}
        }
        for (i, band) in self.bands.iter().enumerate() {
            if band.name.trim().is_empty() {
                return Err(invalid("bands.name", format!("band #{} has an empty name", i + 1)));
            }
            if !(band.origin.is_finite() && band.origin > 0.0) {
                return Err(invalid(
                    "bands.origin_cm1",
                    format!("band `{}` must have a positive origin, got {}", band.name, band.origin),
                ));
            }
            if self.bands[..i].iter().any(|b| b.name == band.name) {
                return Err(invalid("bands.name", format!("duplicate band `{}`", band.name)));
            }
        }
        Ok(())
    }

    pub fn band(&self, name: &str) -> Option<&Band> {
        self.bands.iter().find(|b| b.name == name)
    }

    /// Half of the inversion splitting; zero for planar molecules.
    pub fn half_splitting(&self) -> f64 {
        self.inversion_splitting.unwrap_or(0.0) / 2.0
    }
}

pub fn shipped_names() -> Vec<&'static str> {
    SHIPPED.iter().map(|(n, _)| *n).collect()
}

pub fn shipped_config_text(name: &str) -> Option<&'static str> {
    SHIPPED.iter().find(|(n, _)| *n == name).map(|(_, t)| *t)
}

pub fn shipped(name: &str) -> Result<MoleculeSpec, MoleculeError> {
    let text = shipped_config_text(name).ok_or_else(|| MoleculeError::UnknownMolecule(name.to_string()))?;
    MoleculeSpec::from_toml_str(text)
}

pub fn shipped_molecules() -> Vec<MoleculeSpec> {
    SHIPPED.iter().map(|(_, text)| MoleculeSpec::from_toml_str(text).expect("shipped configs are valid")).collect()
}

/// A shipped molecule by name, or a config file if `name_or_path` ends in
/// `.toml` or names an existing file.
pub fn resolve(name_or_path: &str) -> Result<MoleculeSpec, MoleculeError> {
    if let Some(text) = shipped_config_text(name_or_path) {
        return MoleculeSpec::from_toml_str(text);
    }
    let path = Path::new(name_or_path);
    if name_or_path.ends_with(".toml") || path.is_file() {
        return MoleculeSpec::load(path);
    }
    Err(MoleculeError::UnknownMolecule(name_or_path.to_string()))
}
