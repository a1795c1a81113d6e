//! Model files: JSON descriptions of finite groups, cell complexes and graphs
//! of groups.
//!
//! ```json
//! {
//!   "name": "psl2z",
//!   "kind": "graph_of_groups",
//!   "vertices": [
//!     {"name": "a", "group": {"kind": "cyclic", "n": 2}, "rank_minus1": 0},
//!     {"name": "b", "group": {"kind": "cyclic", "n": 3}, "rank_minus1": 0}
//!   ],
//!   "edges": [
//!     {"name": "e", "group": {"kind": "trivial"}, "head": "a", "tail": "b",
//!      "head_map": [0], "tail_map": [0]}
//!   ],
//!   "boundary_model": "unit_inclusion"
//! }
//! ```
//!
//! Edge endpoints refer to vertices by name. Unknown fields are rejected.

use std::collections::{BTreeMap, HashMap};

use serde::{Deserialize, Serialize};

use crate::assembly::{BoundaryModel, CellComplex, Edge, GraphOfGroups, Model, Vertex};
use crate::catalog::{expand_example, NamedExample};
use crate::error::{Error, Result};
use crate::invariants::KRankFunction;
use crate::linalg::IntMatrix;
use crate::literal::GroupLiteral;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum ModelSpec {
    FiniteGroup(FiniteGroupSpec),
    CellComplex(CellComplexSpec),
    GraphOfGroups(GraphSpec),
    NamedExample(NamedExampleSpec),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FiniteGroupSpec {
    pub name: String,
    pub group: GroupLiteral,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub rank_minus1: Option<u64>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CellComplexSpec {
    pub name: String,
    pub dims: Vec<usize>,
    /// `boundaries[p-1]` lists the rows of `d_p`.
    pub boundaries: Vec<Vec<Vec<i64>>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GraphSpec {
    pub name: String,
    pub vertices: Vec<VertexSpec>,
    pub edges: Vec<EdgeSpec>,
    pub boundary_model: BoundaryModelSpec,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct NamedExampleSpec {
    pub name: String,
    pub example: NamedExample,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct VertexSpec {
    pub name: String,
    pub group: GroupLiteral,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub rank_minus1: Option<u64>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct EdgeSpec {
    pub name: String,
    pub group: GroupLiteral,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub rank_minus1: Option<u64>,
    pub head: String,
    pub tail: String,
    pub head_map: Vec<usize>,
    pub tail_map: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", deny_unknown_fields)]
pub enum BoundaryModelSpec {
    Zero,
    UnitInclusion,
    UserSupplied {
        pairs: Vec<(i64, u64)>,
        /// Ranks for `n = 1, 2, 3, 0 mod 4` at degrees `n >= 2` not in `pairs`.
        tail_pattern: [u64; 4],
    },
}

impl ModelSpec {
    pub fn name(&self) -> &str {
        match self {
            Self::FiniteGroup(s) => &s.name,
            Self::CellComplex(s) => &s.name,
            Self::GraphOfGroups(s) => &s.name,
            Self::NamedExample(s) => &s.name,
        }
    }

    /// Constructs and validates the core model. A named example builds its
    /// first expansion.
    pub fn build(&self) -> Result<Model> {
        match self {
            Self::FiniteGroup(FiniteGroupSpec {
                group, rank_minus1, ..
            }) => Ok(Model::Finite(KRankFunction::new(&group.build()?, *rank_minus1))),
            Self::CellComplex(CellComplexSpec {
                dims, boundaries, ..
            }) => {
                if boundaries.len() + 1 != dims.len() {
                    return Err(Error::MalformedComplex(format!(
                        "{} cell counts need {} boundary matrices, got {}",
                        dims.len(),
                        dims.len().saturating_sub(1),
                        boundaries.len()
                    )));
                }
                let matrices = boundaries
                    .iter()
                    .enumerate()
                    .map(|(i, rows)| {
                        IntMatrix::from_rows_with_shape(rows, dims[i], dims[i + 1]).ok_or_else(|| {
                            Error::MalformedComplex(format!(
                                "d{} must be {}x{}",
                                i + 1,
                                dims[i],
                                dims[i + 1]
                            ))
                        })
                    })
                    .collect::<Result<Vec<_>>>()?;
                Ok(Model::Complex(CellComplex::new(dims.clone(), matrices)?))
            }
            Self::GraphOfGroups(GraphSpec {
                vertices,
                edges,
                boundary_model,
                ..
            }) => build_graph(vertices, edges, boundary_model).map(Model::Graph),
            Self::NamedExample(NamedExampleSpec { example, .. }) => Ok(expand_example(example)?.remove(0)),
        }
    }
}

fn build_graph(
    vertices: &[VertexSpec],
    edges: &[EdgeSpec],
    boundary_model: &BoundaryModelSpec,
) -> Result<GraphOfGroups> {
    let mut index = HashMap::new();
    let mut built = Vec::with_capacity(vertices.len());
    for (i, v) in vertices.iter().enumerate() {
        if index.insert(v.name.as_str(), i).is_some() {
            return Err(Error::MalformedGraph(format!("duplicate vertex name {:?}", v.name)));
        }
        built.push(Vertex::new(v.name.clone(), v.group.build()?, v.rank_minus1));
    }
    let lookup = |edge: &str, end: &str| -> Result<usize> {
        index
            .get(end)
            .copied()
            .ok_or_else(|| Error::MalformedGraph(format!("edge {edge}: unknown vertex {end:?}")))
    };
    let built_edges = edges
        .iter()
        .map(|e| {
            Ok(Edge::new(
                e.name.clone(),
                e.group.build()?,
                e.rank_minus1,
                (lookup(&e.name, &e.head)?, e.head_map.clone()),
                (lookup(&e.name, &e.tail)?, e.tail_map.clone()),
            ))
        })
        .collect::<Result<Vec<_>>>()?;
    let model = match boundary_model {
        BoundaryModelSpec::Zero => BoundaryModel::ZeroMap,
        BoundaryModelSpec::UnitInclusion => BoundaryModel::UnitInclusion,
        BoundaryModelSpec::UserSupplied {
            pairs,
            tail_pattern,
        } => {
            let mut map = BTreeMap::new();
            for &(n, r) in pairs {
                if map.insert(n, r).is_some() {
                    return Err(Error::MalformedGraph(format!(
                        "boundary rank for degree {n} given twice"
                    )));
                }
            }
            BoundaryModel::UserSupplied {
                pairs: map,
                tail_pattern: *tail_pattern,
            }
        }
    };
    GraphOfGroups::new(built, built_edges, model)
}

/// Deserializes the body for the declared `kind` directly, so that errors
/// report the path to the offending field.
fn deserialize_spec(text: &str) -> Result<ModelSpec> {
    let de = &mut serde_json::Deserializer::from_str(text);
    let mut value: serde_json::Value = serde_path_to_error::deserialize(de).map_err(schema_error)?;
    let root = value.as_object_mut().ok_or_else(|| Error::SchemaError {
        path: ".".into(),
        message: "a model must be a JSON object".into(),
    })?;
    let kind = match root.remove("kind") {
        Some(serde_json::Value::String(k)) => k,
        _ => {
            return Err(Error::SchemaError {
                path: "kind".into(),
                message: "expected one of finite_group, cell_complex, graph_of_groups, named_example"
                    .into(),
            })
        }
    };
    fn body<T: serde::de::DeserializeOwned>(value: serde_json::Value) -> Result<T> {
        serde_path_to_error::deserialize(value).map_err(schema_error)
    }
    match kind.as_str() {
        "finite_group" => body(value).map(ModelSpec::FiniteGroup),
        "cell_complex" => body(value).map(ModelSpec::CellComplex),
        "graph_of_groups" => body(value).map(ModelSpec::GraphOfGroups),
        "named_example" => body(value).map(ModelSpec::NamedExample),
        other => Err(Error::SchemaError {
            path: "kind".into(),
            message: format!("unknown model kind {other:?}"),
        }),
    }
}

fn schema_error<E: std::fmt::Display>(err: serde_path_to_error::Error<E>) -> Error {
    let path = err.path().to_string();
    Error::SchemaError {
        path,
        message: err.into_inner().to_string(),
    }
}

/// Parses and validates a model file, returning both its description and
/// the core model it builds.
pub fn load_model(text: &str) -> Result<(ModelSpec, Model)> {
    let spec = deserialize_spec(text)?;
    let model = spec.build()?;
    Ok((spec, model))
}

pub fn parse_model(text: &str) -> Result<ModelSpec> {
    load_model(text).map(|(spec, _)| spec)
}

pub fn render_model(spec: &ModelSpec) -> String {
    serde_json::to_string_pretty(spec).expect("model specs always serialize")
}
