//! `.lyat` model files: JSON with 1-based basis indices.

use std::collections::BTreeMap;
use std::path::Path;
use std::sync::Arc;

use lyrb_core::linalg::{Matrix, Rational};
use lyrb_core::rbo::{RelRbo, Wedge2};
use lyrb_core::structures::{adjoint_rep, LyAlgebra, Representation};
use serde::{Deserialize, Serialize};

use crate::fixtures;

#[derive(Debug, thiserror::Error)]
pub enum ModelError {
    #[error("cannot read {path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },

    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("invalid entry {field}: {message}")]
    Invariant { field: String, message: String },

    #[error("model has no {0} block")]
    Missing(&'static str),

    #[error(transparent)]
    Core(#[from] lyrb_core::Error),
}

fn invariant(field: impl Into<String>, message: impl Into<String>) -> ModelError {
    ModelError::Invariant {
        field: field.into(),
        message: message.into(),
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ModelFile {
    pub scalar: String,
    pub algebra: AlgebraSpec,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub representation: Option<RepresentationSpec>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub operator: Option<OperatorSpec>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub deformation: Option<DeformationSpec>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub elements: Vec<ElementSpec>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlgebraSpec {
    pub dim: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub basis: Option<Vec<String>>,
    #[serde(default)]
    pub binary: Vec<Entry>,
    #[serde(default)]
    pub ternary: Vec<Entry>,
}

/// A structure constant: the bracket of the listed basis elements, as a
/// combination keyed by basis name.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Entry {
    pub args: Vec<usize>,
    pub value: BTreeMap<String, Rational>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum RepresentationSpec {
    Adjoint {
        adjoint: bool,
    },
    Explicit {
        dim: usize,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        basis: Option<Vec<String>>,
        rho: Vec<Vec<Vec<Rational>>>,
        mu: Vec<Vec<Vec<Vec<Rational>>>>,
    },
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct OperatorSpec {
    pub matrix: Vec<Vec<Rational>>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DeformationSpec {
    pub order: usize,
    pub terms: Vec<Vec<Vec<Rational>>>,
}

/// A named element of the wedge square, by its coefficients on `e_i ∧ e_j`,
/// `i < j`, in lexicographic order.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ElementSpec {
    pub name: String,
    pub coefficients: Vec<Rational>,
}

/// Reads a model from disk. A path of the form `examples/NAME.lyat` that does
/// not exist falls back to the bundled fixture of that name.
pub fn load_model(path: &str) -> Result<ModelFile, ModelError> {
    let text = match std::fs::read_to_string(path) {
        Ok(t) => t,
        Err(e) => {
            let bundled = Path::new(path)
                .file_stem()
                .and_then(|s| s.to_str())
                .and_then(fixtures::get)
                .filter(|_| path.starts_with("examples/"));
            match bundled {
                Some(f) => f.source.to_string(),
                None => {
                    return Err(ModelError::Io {
                        path: path.to_string(),
                        source: e,
                    })
                }
            }
        }
    };
    parse_model(&text)
}

/// Parses and validates model text.
pub fn parse_model(text: &str) -> Result<ModelFile, ModelError> {
    let model: ModelFile = serde_json::from_str(text).map_err(|e| ModelError::Parse {
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    })?;
    model.validate()?;
    Ok(model)
}

fn parse_matrix(field: &str, rows: &[Vec<Rational>], shape: (usize, usize)) -> Result<Matrix, ModelError> {
    if rows.len() != shape.0 || rows.iter().any(|r| r.len() != shape.1) {
        return Err(invariant(field, format!("expected a {}x{} matrix", shape.0, shape.1)));
    }
    Ok(Matrix::from_rows(rows.to_vec())?)
}

impl ModelFile {
    fn validate(&self) -> Result<(), ModelError> {
        if self.scalar != "rational" {
            return Err(invariant("scalar", format!("unsupported scalar field {:?}", self.scalar)));
        }
        let names = self.basis_names();
        let mut seen = std::collections::BTreeSet::new();
        for (n, e) in self.algebra.binary.iter().enumerate() {
            let field = format!("algebra.binary[{n}]");
            let [i, j] = e.args[..] else {
                return Err(invariant(field, "binary entries take two indices"));
            };
            self.check_indices(&field, &e.args)?;
            if i >= j {
                return Err(invariant(field, format!("args [{i},{j}] must satisfy i < j")));
            }
            if !seen.insert(("b", i, j, 0)) {
                return Err(invariant(field, format!("duplicate entry for [{i},{j}]")));
            }
            self.check_value(&field, &e.value, &names)?;
        }
        for (n, e) in self.algebra.ternary.iter().enumerate() {
            let field = format!("algebra.ternary[{n}]");
            let [i, j, k] = e.args[..] else {
                return Err(invariant(field, "ternary entries take three indices"));
            };
            self.check_indices(&field, &e.args)?;
            if i >= j {
                return Err(invariant(field, format!("args [{i},{j},{k}] must satisfy i < j")));
            }
            if !seen.insert(("t", i, j, k)) {
                return Err(invariant(field, format!("duplicate entry for [{i},{j},{k}]")));
            }
            self.check_value(&field, &e.value, &names)?;
        }
        let m = self.algebra.dim;
        for (n, el) in self.elements.iter().enumerate() {
            if el.coefficients.len() != m * m.saturating_sub(1) / 2 {
                return Err(invariant(
                    format!("elements[{n}]"),
                    format!("{} needs {} wedge coefficients", el.name, m * m.saturating_sub(1) / 2),
                ));
            }
        }
        if let Some(d) = &self.deformation {
            if d.terms.len() != d.order + 1 {
                return Err(invariant(
                    "deformation",
                    format!("order {} needs {} terms, got {}", d.order, d.order + 1, d.terms.len()),
                ));
            }
        }
        Ok(())
    }

    fn check_indices(&self, field: &str, args: &[usize]) -> Result<(), ModelError> {
        if let Some(bad) = args.iter().find(|&&a| a == 0 || a > self.algebra.dim) {
            return Err(invariant(
                field,
                format!("index {bad} outside 1..={}", self.algebra.dim),
            ));
        }
        Ok(())
    }

    fn check_value(&self, field: &str, value: &BTreeMap<String, Rational>, names: &[String]) -> Result<(), ModelError> {
        if let Some(k) = value.keys().find(|k| !names.contains(k)) {
            return Err(invariant(field, format!("unknown basis element {k:?}")));
        }
        Ok(())
    }

    pub fn basis_names(&self) -> Vec<String> {
        self.algebra
            .basis
            .clone()
            .unwrap_or_else(|| (1..=self.algebra.dim).map(|i| format!("e{i}")).collect())
    }

    pub fn algebra(&self) -> Result<LyAlgebra, ModelError> {
        let names = self.basis_names();
        if names.len() != self.algebra.dim {
            return Err(invariant("algebra.basis", format!("expected {} names", self.algebra.dim)));
        }
        let vector = |value: &BTreeMap<String, Rational>| {
            let mut v = vec![Rational::zero(); names.len()];
            for (k, c) in value {
                let i = names.iter().position(|n| n == k).expect("validated");
                v[i] = c.clone();
            }
            v
        };
        let mut b = LyAlgebra::builder(self.algebra.dim);
        for e in &self.algebra.binary {
            b = b.bracket(e.args[0] - 1, e.args[1] - 1, vector(&e.value));
        }
        for e in &self.algebra.ternary {
            b = b.ternary(e.args[0] - 1, e.args[1] - 1, e.args[2] - 1, vector(&e.value));
        }
        Ok(b.build()?.with_names(names)?)
    }

    /// The representation without checking its identities; adjoint needs a
    /// valid algebra.
    pub fn representation(&self, algebra: Arc<LyAlgebra>) -> Result<Representation, ModelError> {
        let spec = self.representation.as_ref().ok_or(ModelError::Missing("representation"))?;
        match spec {
            RepresentationSpec::Adjoint { adjoint: true } => Ok(adjoint_rep(algebra)?),
            RepresentationSpec::Adjoint { adjoint: false } => Err(invariant(
                "representation",
                "give either \"adjoint\": true or explicit rho and mu",
            )),
            RepresentationSpec::Explicit { dim, basis, rho, mu } => {
                let m = algebra.dim();
                if rho.len() != m {
                    return Err(invariant("representation.rho", format!("expected {m} matrices")));
                }
                if mu.len() != m || mu.iter().any(|row| row.len() != m) {
                    return Err(invariant("representation.mu", format!("expected a {m}x{m} array of matrices")));
                }
                let rho = rho
                    .iter()
                    .enumerate()
                    .map(|(i, r)| parse_matrix(&format!("representation.rho[{}]", i + 1), r, (*dim, *dim)))
                    .collect::<Result<Vec<_>, _>>()?;
                let mut mus = Vec::with_capacity(m * m);
                for (i, row) in mu.iter().enumerate() {
                    for (j, r) in row.iter().enumerate() {
                        let field = format!("representation.mu[{}][{}]", i + 1, j + 1);
                        mus.push(parse_matrix(&field, r, (*dim, *dim))?);
                    }
                }
                let rep = Representation::new(algebra, rho, mus)?;
                Ok(match basis {
                    Some(b) => rep.with_names(b.clone())?,
                    None => rep,
                })
            }
        }
    }

    pub fn operator_matrix(&self, rep: &Representation) -> Result<Matrix, ModelError> {
        let spec = self.operator.as_ref().ok_or(ModelError::Missing("operator"))?;
        parse_matrix("operator.matrix", &spec.matrix, (rep.algebra().dim(), rep.dim_v()))
    }

    pub fn deformation_terms(&self, rep: &Representation) -> Result<Vec<Matrix>, ModelError> {
        let spec = self.deformation.as_ref().ok_or(ModelError::Missing("deformation"))?;
        spec.terms
            .iter()
            .enumerate()
            .map(|(i, t)| parse_matrix(&format!("deformation.terms[{i}]"), t, (rep.algebra().dim(), rep.dim_v())))
            .collect()
    }

    pub fn element(&self, name: &str) -> Result<Wedge2, ModelError> {
        let el = self
            .elements
            .iter()
            .find(|e| e.name == name)
            .ok_or_else(|| invariant("elements", format!("no element named {name:?}")))?;
        Ok(Wedge2::from_coefficients(self.algebra.dim, el.coefficients.clone())?)
    }
}

/// An operator from a model, verified.
pub fn verified_operator(model: &ModelFile) -> Result<RelRbo, ModelError> {
    let algebra = Arc::new(model.algebra()?);
    let rep = model.representation(algebra)?;
    let t = model.operator_matrix(&rep)?;
    Ok(RelRbo::new(rep, t)?)
}
