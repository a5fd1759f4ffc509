//! Tables of invariants and their JSON and CSV forms.

use std::collections::BTreeSet;
use std::fmt::Write as _;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::lattice::{DivisorClass, LatticeError, SurfaceModel};

pub const SCHEMA_VERSION: u32 = 1;

/// Sign of a curve is `(-1)^(m(C) + C.F)`.
pub const CONVENTION_F_MASS: &str = "f-mass";
/// Sign of a curve is `(-1)^(m(C) + C.(F + [RX \ L]))`.
pub const CONVENTION_F_MASS_COMPLEMENT: &str = "f-mass-complement";
/// Label of the class `F = [RX \ L]`.
pub const F_STANDARD: &str = "standard";

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum TableError {
    #[error("malformed table: {0}")]
    Malformed(String),
    #[error("unsupported schema version {0}")]
    Schema(u32),
    #[error("duplicate entry for class {class:?} and s = {s}")]
    Duplicate { class: Vec<i64>, s: u64 },
    #[error(
        "missing sign convention tag: published tables use either the F-mass sign \
         (-1)^(m + C.F) or the variant (-1)^(m + C.(F + [RX \\ L])); declare \
         \"convention\": \"{CONVENTION_F_MASS}\" or \"{CONVENTION_F_MASS_COMPLEMENT}\""
    )]
    MissingConvention,
    #[error("unknown sign convention `{0}`")]
    UnknownConvention(String),
    #[error("missing source string")]
    MissingSource,
    #[error("entry {class:?}, s = {s}: {source}")]
    Entry {
        class: Vec<i64>,
        s: u64,
        source: LatticeError,
    },
    #[error(transparent)]
    Lattice(#[from] LatticeError),
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Flags {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub chain_of_spheres: Option<bool>,
    #[serde(rename = "F_nontrivial", default, skip_serializing_if = "Option::is_none")]
    pub f_nontrivial: Option<bool>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableMeta {
    pub surface: String,
    pub real_structure: String,
    #[serde(rename = "L")]
    pub l: String,
    #[serde(rename = "F")]
    pub f: String,
    #[serde(default)]
    pub flags: Flags,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub convention: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub kind: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub source: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableEntry {
    pub class: Vec<i64>,
    pub s: u64,
    #[serde(with = "decimal")]
    pub value: BigInt,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct InvariantTable {
    pub schema: u32,
    pub meta: TableMeta,
    pub entries: Vec<TableEntry>,
}

mod decimal {
    use num_bigint::BigInt;
    use serde::{de::Error, Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(v: &BigInt, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&v.to_string())
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BigInt, D::Error> {
        let text = String::deserialize(d)?;
        text.parse()
            .map_err(|_| D::Error::custom(format!("`{text}` is not a decimal integer")))
    }
}

impl InvariantTable {
    pub fn new(meta: TableMeta) -> Self {
        InvariantTable {
            schema: SCHEMA_VERSION,
            meta,
            entries: Vec::new(),
        }
    }

    pub fn from_json(text: &str) -> Result<Self, TableError> {
        let table: InvariantTable =
            serde_json::from_str(text).map_err(|e| TableError::Malformed(e.to_string()))?;
        if table.schema != SCHEMA_VERSION {
            return Err(TableError::Schema(table.schema));
        }
        Ok(table)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("tables always serialize")
    }

    pub fn surface_model(&self) -> Result<SurfaceModel, TableError> {
        Ok(SurfaceModel::builtin(&self.meta.surface)?)
    }

    pub fn class_of(&self, entry: &TableEntry) -> Result<DivisorClass, TableError> {
        Ok(self.surface_model()?.class(entry.class.clone())?)
    }

    /// Known surface, classes of the right rank, `r >= 0` and no duplicate keys.
    pub fn validate(&self) -> Result<(), TableError> {
        let model = self.surface_model()?;
        if let Some(c) = &self.meta.convention {
            if c != CONVENTION_F_MASS && c != CONVENTION_F_MASS_COMPLEMENT {
                return Err(TableError::UnknownConvention(c.clone()));
            }
        }
        let mut seen = BTreeSet::new();
        for e in &self.entries {
            let wrap = |source| TableError::Entry {
                class: e.class.clone(),
                s: e.s,
                source,
            };
            let class = model.class(e.class.clone()).map_err(wrap)?;
            model.constraint_split(&class, e.s).map_err(wrap)?;
            if !seen.insert((e.class.clone(), e.s)) {
                return Err(TableError::Duplicate {
                    class: e.class.clone(),
                    s: e.s,
                });
            }
        }
        Ok(())
    }

    /// Validation plus the provenance an external table must carry.
    pub fn validate_for_ingest(&self) -> Result<(), TableError> {
        if self.meta.convention.is_none() {
            return Err(TableError::MissingConvention);
        }
        if self.meta.source.as_deref().is_none_or(|s| s.trim().is_empty()) {
            return Err(TableError::MissingSource);
        }
        self.validate()
    }

    pub fn to_csv(&self) -> String {
        let kind = self.meta.kind.as_deref().unwrap_or("");
        let mut out = String::from("surface,class,s,kind,value\n");
        for e in &self.entries {
            let class: Vec<String> = e.class.iter().map(|c| c.to_string()).collect();
            let class = class.join(",");
            let class = if e.class.len() > 1 {
                format!("\"{class}\"")
            } else {
                class
            };
            writeln!(out, "{},{},{},{},{}", self.meta.surface, class, e.s, kind, e.value)
                .expect("writing to a string");
        }
        out
    }

    pub fn to_text(&self) -> String {
        let mut out = format!(
            "{} ({}, L = {}, F = {})\n",
            self.meta.surface, self.meta.real_structure, self.meta.l, self.meta.f
        );
        for e in &self.entries {
            writeln!(
                out,
                "  {} class {:?} s = {}: {}",
                self.meta.kind.as_deref().unwrap_or("value"),
                e.class,
                e.s,
                e.value
            )
            .expect("writing to a string");
        }
        out
    }
}
