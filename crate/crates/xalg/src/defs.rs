//! Structured definition files: TOML documents declaring algebras by
//! structure constants, plus named morphisms, ideals, elements, actions and
//! crossed modules built from them. Every object is validated on load;
//! failures carry the object's name and the underlying witness.

use std::collections::BTreeMap;
use std::path::Path;

use serde::Deserialize;
use thiserror::Error;
use xalg_core::algebra::{Algebra, AlgebraMorphism, Ideal};
use xalg_core::linalg::{FpMatrix, Prime};
use xalg_core::xmod::{AlgebraAction, CrossedModule};

#[derive(Debug, Error)]
pub enum ParseError {
    #[error("syntax error: {0}")]
    Syntax(Box<toml::de::Error>),
    #[error("modulus {0} is not usable: {1}")]
    Modulus(u64, String),
    #[error("{kind} '{name}': {message}")]
    Validation {
        kind: &'static str,
        name: String,
        message: String,
    },
    #[error("{kind} '{name}' references missing {missing_kind} '{reference}'")]
    DanglingReference {
        kind: &'static str,
        name: String,
        missing_kind: &'static str,
        reference: String,
    },
    #[error("cannot read '{path}': {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawFile {
    #[serde(default = "default_modulus")]
    modulus: u64,
    #[serde(default)]
    algebras: BTreeMap<String, RawAlgebra>,
    #[serde(default)]
    morphisms: BTreeMap<String, RawMorphism>,
    #[serde(default)]
    ideals: BTreeMap<String, RawIdeal>,
    #[serde(default)]
    elements: BTreeMap<String, RawElement>,
    #[serde(default)]
    actions: BTreeMap<String, RawAction>,
    #[serde(default)]
    xmods: BTreeMap<String, RawXMod>,
}

fn default_modulus() -> u64 {
    2
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawAlgebra {
    dim: usize,
    /// `mul[i][j]` is the coordinate vector of `e_i * e_j`.
    mul: Vec<Vec<Vec<u64>>>,
    unit: Option<Vec<u64>>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawMorphism {
    source: String,
    target: String,
    /// Row-major, `target.dim` rows of length `source.dim`.
    matrix: Vec<Vec<u64>>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawIdeal {
    parent: String,
    generators: Vec<Vec<u64>>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawElement {
    parent: String,
    coords: Vec<u64>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawAction {
    base: String,
    top: String,
    /// `table[i][p]` is the coordinate vector of `e_i . c_p`.
    table: Vec<Vec<Vec<u64>>>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawXMod {
    top: String,
    base: String,
    boundary: String,
    action: String,
}

/// A named element of a named algebra.
#[derive(Debug, Clone)]
pub struct Element {
    pub parent: String,
    pub coords: Vec<u64>,
}

/// Fully linked and validated object graph of a definition file.
#[derive(Debug, Clone, Default)]
pub struct DefinitionFile {
    pub modulus: Option<Prime>,
    pub algebras: BTreeMap<String, Algebra>,
    pub morphisms: BTreeMap<String, AlgebraMorphism>,
    pub ideals: BTreeMap<String, Ideal>,
    pub elements: BTreeMap<String, Element>,
    pub actions: BTreeMap<String, AlgebraAction>,
    pub xmods: BTreeMap<String, CrossedModule>,
}

impl DefinitionFile {
    pub fn is_empty(&self) -> bool {
        self.algebras.is_empty()
            && self.morphisms.is_empty()
            && self.ideals.is_empty()
            && self.elements.is_empty()
            && self.actions.is_empty()
            && self.xmods.is_empty()
    }
}

pub fn parse_file(path: &Path) -> Result<DefinitionFile, ParseError> {
    let text = std::fs::read_to_string(path).map_err(|source| ParseError::Io {
        path: path.display().to_string(),
        source,
    })?;
    parse_str(&text)
}

pub fn parse_str(text: &str) -> Result<DefinitionFile, ParseError> {
    let raw: RawFile = toml::from_str(text).map_err(|e| ParseError::Syntax(Box::new(e)))?;
    link(raw)
}

fn validation(kind: &'static str, name: &str, message: impl ToString) -> ParseError {
    ParseError::Validation {
        kind,
        name: name.to_string(),
        message: message.to_string(),
    }
}

fn dangling(
    kind: &'static str,
    name: &str,
    missing_kind: &'static str,
    reference: &str,
) -> ParseError {
    ParseError::DanglingReference {
        kind,
        name: name.to_string(),
        missing_kind,
        reference: reference.to_string(),
    }
}

fn link(raw: RawFile) -> Result<DefinitionFile, ParseError> {
    let p = Prime::new(raw.modulus).map_err(|e| ParseError::Modulus(raw.modulus, e.to_string()))?;
    let mut out = DefinitionFile {
        modulus: Some(p),
        ..DefinitionFile::default()
    };

    for (name, a) in &raw.algebras {
        let n = a.dim;
        if a.mul.len() != n || a.mul.iter().any(|row| row.len() != n) {
            return Err(validation("algebra", name, "mul must be a dim x dim grid"));
        }
        let mut flat = Vec::with_capacity(n * n * n);
        for row in &a.mul {
            for cell in row {
                if cell.len() != n {
                    return Err(validation(
                        "algebra",
                        name,
                        "every product vector must have length dim",
                    ));
                }
                flat.extend_from_slice(cell);
            }
        }
        if let Some(u) = &a.unit {
            if u.len() != n {
                return Err(validation("algebra", name, "unit must have length dim"));
            }
        }
        let algebra = Algebra::new(p, n, flat, a.unit.clone(), name.clone())
            .map_err(|e| validation("algebra", name, e))?;
        out.algebras.insert(name.clone(), algebra);
    }

    for (name, i) in &raw.ideals {
        let parent = out
            .algebras
            .get(&i.parent)
            .ok_or_else(|| dangling("ideal", name, "algebra", &i.parent))?;
        for g in &i.generators {
            if g.len() != parent.dim() {
                return Err(validation(
                    "ideal",
                    name,
                    "generator length must match parent dim",
                ));
            }
        }
        out.ideals
            .insert(name.clone(), Ideal::closure(parent, &i.generators));
    }

    for (name, m) in &raw.morphisms {
        let source = out
            .algebras
            .get(&m.source)
            .ok_or_else(|| dangling("morphism", name, "algebra", &m.source))?;
        let target = out
            .algebras
            .get(&m.target)
            .ok_or_else(|| dangling("morphism", name, "algebra", &m.target))?;
        if m.matrix.len() != target.dim() || m.matrix.iter().any(|r| r.len() != source.dim()) {
            return Err(validation(
                "morphism",
                name,
                "matrix must have target.dim rows of length source.dim",
            ));
        }
        let matrix = FpMatrix::from_rows(p, source.dim(), &m.matrix);
        let morphism = AlgebraMorphism::new(source.clone(), target.clone(), matrix)
            .map_err(|e| validation("morphism", name, e))?;
        out.morphisms.insert(name.clone(), morphism);
    }

    for (name, e) in &raw.elements {
        let parent = out
            .algebras
            .get(&e.parent)
            .ok_or_else(|| dangling("element", name, "algebra", &e.parent))?;
        if e.coords.len() != parent.dim() {
            return Err(validation(
                "element",
                name,
                "coords length must match parent dim",
            ));
        }
        out.elements.insert(
            name.clone(),
            Element {
                parent: e.parent.clone(),
                coords: e.coords.iter().map(|&x| p.reduce(x)).collect(),
            },
        );
    }

    for (name, a) in &raw.actions {
        let base = out
            .algebras
            .get(&a.base)
            .ok_or_else(|| dangling("action", name, "algebra", &a.base))?;
        let top = out
            .algebras
            .get(&a.top)
            .ok_or_else(|| dangling("action", name, "algebra", &a.top))?;
        if a.table.len() != base.dim()
            || a.table.iter().any(|row| row.len() != top.dim())
            || a.table
                .iter()
                .any(|row| row.iter().any(|cell| cell.len() != top.dim()))
        {
            return Err(validation(
                "action",
                name,
                "table must be base.dim x top.dim vectors of length top.dim",
            ));
        }
        let mut flat = Vec::with_capacity(base.dim() * top.dim() * top.dim());
        for row in &a.table {
            for cell in row {
                flat.extend_from_slice(cell);
            }
        }
        let action = AlgebraAction::new(base.clone(), top.clone(), flat)
            .map_err(|e| validation("action", name, e))?;
        out.actions.insert(name.clone(), action);
    }

    for (name, x) in &raw.xmods {
        let top = out
            .algebras
            .get(&x.top)
            .ok_or_else(|| dangling("xmod", name, "algebra", &x.top))?;
        let base = out
            .algebras
            .get(&x.base)
            .ok_or_else(|| dangling("xmod", name, "algebra", &x.base))?;
        let boundary = out
            .morphisms
            .get(&x.boundary)
            .ok_or_else(|| dangling("xmod", name, "morphism", &x.boundary))?;
        let action = out
            .actions
            .get(&x.action)
            .ok_or_else(|| dangling("xmod", name, "action", &x.action))?;
        if boundary.source() != top || boundary.target() != base {
            return Err(validation("xmod", name, "boundary must map top into base"));
        }
        if action.base() != base || action.top() != top {
            return Err(validation("xmod", name, "action must let base act on top"));
        }
        let xm = CrossedModule::new(name.clone(), boundary.clone(), action.clone())
            .map_err(|e| validation("xmod", name, e))?;
        out.xmods.insert(name.clone(), xm);
    }

    Ok(out)
}
