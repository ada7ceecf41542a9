//! The JSON monoid file.

use std::path::Path;

use semiexp::{FiniteMonoid, MonoidError};
use serde::{Deserialize, Serialize};
use serde_json::Value;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum InputError {
    #[error("{path}: {source}")]
    Read {
        path: String,
        source: std::io::Error,
    },
    #[error("{path}: line {line}, column {column}: {message}")]
    Syntax {
        path: String,
        line: usize,
        column: usize,
        message: String,
    },
    #[error("generator `{label}`: images must be a list of non-negative integers")]
    Images { label: String },
    #[error("{0}")]
    Monoid(#[from] MonoidError),
    #[error("p and q must be declared together, with q >= 1")]
    Burnside,
    #[error("names: expected {expected}, found {found}")]
    Names { expected: usize, found: usize },
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct TransformationGenerator {
    pub label: String,
    pub images: Value,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct TableGenerator {
    pub label: String,
    pub element: usize,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum MonoidSpec {
    Transformations {
        domain_size: usize,
        generators: Vec<TransformationGenerator>,
    },
    Table {
        table: Vec<Vec<usize>>,
        identity: usize,
        #[serde(default)]
        generators: Vec<TableGenerator>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        names: Option<Vec<String>>,
    },
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct MonoidFile {
    #[serde(flatten)]
    pub spec: MonoidSpec,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub p: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub q: Option<usize>,
}

pub struct Loaded {
    pub monoid: FiniteMonoid,
    /// Declared `x^(p+q) = x^p`.
    pub burnside: Option<(usize, usize)>,
}

pub fn load(path: &Path) -> Result<Loaded, InputError> {
    let shown = path.display().to_string();
    let text = std::fs::read_to_string(path).map_err(|source| InputError::Read {
        path: shown.clone(),
        source,
    })?;
    parse(&text, &shown)
}

pub fn parse(text: &str, path: &str) -> Result<Loaded, InputError> {
    let file: MonoidFile = serde_json::from_str(text).map_err(|e| InputError::Syntax {
        path: path.to_string(),
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    })?;
    let burnside = match (file.p, file.q) {
        (None, None) => None,
        (Some(p), Some(q)) if q >= 1 => Some((p, q)),
        _ => return Err(InputError::Burnside),
    };
    Ok(Loaded {
        monoid: build(file.spec)?,
        burnside,
    })
}

fn images(g: &TransformationGenerator) -> Result<Vec<usize>, InputError> {
    let bad = || InputError::Images {
        label: g.label.clone(),
    };
    let Value::Array(items) = &g.images else {
        return Err(bad());
    };
    items
        .iter()
        .map(|v| v.as_u64().map(|x| x as usize).ok_or_else(bad))
        .collect()
}

fn build(spec: MonoidSpec) -> Result<FiniteMonoid, InputError> {
    match spec {
        MonoidSpec::Transformations {
            domain_size,
            generators,
        } => {
            let gens = generators
                .iter()
                .map(|g| Ok((g.label.clone(), images(g)?)))
                .collect::<Result<Vec<_>, InputError>>()?;
            Ok(FiniteMonoid::from_generators(domain_size, &gens)?)
        }
        MonoidSpec::Table {
            table,
            identity,
            generators,
            names,
        } => {
            let size = table.len();
            let gens = generators.into_iter().map(|g| (g.label, g.element)).collect();
            let m = FiniteMonoid::from_table(table, identity, gens)?;
            match names {
                None => Ok(m),
                Some(n) if n.len() == size => Ok(m.with_names(n)),
                Some(n) => Err(InputError::Names {
                    expected: size,
                    found: n.len(),
                }),
            }
        }
    }
}

/// The table form of `m`, names included.
pub fn dump(m: &FiniteMonoid) -> MonoidFile {
    MonoidFile {
        spec: MonoidSpec::Table {
            table: m.rows(),
            identity: m.identity(),
            generators: m
                .generators()
                .iter()
                .map(|g| TableGenerator {
                    label: g.label.clone(),
                    element: g.element,
                })
                .collect(),
            names: Some(m.names().to_vec()),
        },
        p: None,
        q: None,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bad_images_name_the_generator() {
        let text = r#"{"kind":"transformations","domain_size":2,
            "generators":[{"label":"ok","images":[0,0]},{"label":"broken","images":[0,"x"]}]}"#;
        let err = parse(text, "f").err().unwrap();
        assert!(err.to_string().contains("broken"), "{err}");
        let text = r#"{"kind":"transformations","domain_size":2,
            "generators":[{"label":"far","images":[0,5]}]}"#;
        assert!(parse(text, "f").err().unwrap().to_string().contains("far"));
    }

    #[test]
    fn syntax_errors_carry_a_position() {
        let err = parse("{\n \"kind\": ", "f").err().unwrap();
        assert!(matches!(err, InputError::Syntax { line: 2, .. }), "{err}");
    }

    #[test]
    fn burnside_needs_both_exponents() {
        let text = r#"{"kind":"table","table":[[0]],"identity":0,"p":1}"#;
        assert!(matches!(parse(text, "f"), Err(InputError::Burnside)));
        let text = r#"{"kind":"table","table":[[0]],"identity":0,"p":1,"q":1}"#;
        assert_eq!(parse(text, "f").unwrap().burnside, Some((1, 1)));
    }

    #[test]
    fn dump_round_trips() {
        let m = semiexp::fixtures::t2();
        let text = serde_json::to_string(&dump(&m)).unwrap();
        assert_eq!(parse(&text, "f").unwrap().monoid, m);
    }
}
