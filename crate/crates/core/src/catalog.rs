//! Named example models and the catalog of small finite groups.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::assembly::Model;
use crate::error::{Error, Result};
use crate::group::{symmetric_elements, DEFAULT_ORDER_CAP};
use crate::literal::{split_top_level, GroupLiteral};
use crate::model::{
    BoundaryModelSpec, CellComplexSpec, EdgeSpec, FiniteGroupSpec, GraphSpec, ModelSpec, VertexSpec,
};

/// Known values of `rank K_-1(Z[H])` shipped with the catalog.
///
/// Only the trivial group, `Z/2`, `Z/3` and the symmetric groups are listed:
/// every other finite group needs an explicit datum.
pub fn catalog_rank_minus1(group: &GroupLiteral) -> Option<u64> {
    match group {
        GroupLiteral::Trivial
        | GroupLiteral::Cyclic { n: 1..=3 }
        | GroupLiteral::Symmetric { .. } => Some(0),
        _ => None,
    }
}

/// The quaternion group of order 8 as an explicit table. Index `4s + u`
/// stands for `(-1)^s * u` with `u` running over `1, i, j, k`.
pub fn quaternion_literal() -> GroupLiteral {
    // unit products: (sign, unit) for 1, i, j, k
    const UNIT: [[(usize, usize); 4]; 4] = [
        [(0, 0), (0, 1), (0, 2), (0, 3)],
        [(0, 1), (1, 0), (0, 3), (1, 2)],
        [(0, 2), (1, 3), (1, 0), (0, 1)],
        [(0, 3), (0, 2), (1, 1), (1, 0)],
    ];
    let table = (0..8)
        .map(|a| {
            (0..8)
                .map(|b| {
                    let (s, u) = UNIT[a % 4][b % 4];
                    4 * ((s + a / 4 + b / 4) % 2) + u
                })
                .collect()
        })
        .collect();
    GroupLiteral::Table { table }
}

/// Small finite groups (order at most 48) used by the invariant checks.
pub fn catalog_groups() -> Vec<(String, GroupLiteral)> {
    use GroupLiteral::*;
    let mut groups = vec![Trivial];
    groups.extend((1..=24).map(|n| Cyclic { n }));
    groups.extend((2..=24).map(|n| Dihedral { n }));
    groups.extend((1..=4).map(|n| Symmetric { n }));
    let product = |fs: &[GroupLiteral]| Product { factors: fs.to_vec() };
    let c = |n| Cyclic { n };
    groups.extend([
        product(&[c(2), c(2)]),
        product(&[c(2), c(2), c(2)]),
        product(&[c(2), c(4)]),
        product(&[c(3), c(3)]),
        product(&[c(4), c(4)]),
        product(&[c(2), Symmetric { n: 3 }]),
        product(&[c(3), Symmetric { n: 3 }]),
        product(&[Symmetric { n: 3 }, Symmetric { n: 3 }]),
        product(&[c(2), Dihedral { n: 4 }]),
        product(&[c(2), Symmetric { n: 4 }]),
        product(&[c(3), quaternion_literal()]),
    ]);
    let mut out: Vec<(String, GroupLiteral)> = groups.into_iter().map(|g| (g.to_string(), g)).collect();
    out.push(("quaternion:8".into(), quaternion_literal()));
    out
}

/// The worked examples, each expanding to one or more equivalent models.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "name", rename_all = "snake_case", deny_unknown_fields)]
pub enum NamedExample {
    /// Free group of rank `m`.
    FreeGroup { m: usize },
    /// Free product of finite groups, joined in a path by trivial edges.
    FreeProduct { factors: Vec<GroupLiteral> },
    Psl2z,
    /// Fundamental group of the closed orientable surface of genus `g`.
    Surface { g: usize },
    /// `F_n` semidirect `S_n`, with `S_n` permuting the free generators.
    FnSn { n: usize },
    Finite { group: GroupLiteral },
}

pub const EXAMPLE_NAMES: [&str; 6] = ["free_group", "free_product", "psl2z", "surface", "fn_sn", "finite"];

impl NamedExample {
    /// Builds an example from its name and `key=value` parameters.
    /// Defaults: `m=2`, `g=2`, `n=4`, `factors=cyclic:2,cyclic:3`, `group=trivial`.
    pub fn from_params(name: &str, params: &[(String, String)]) -> Result<Self> {
        let allowed: &[&str] = match name {
            "free_group" => &["m"],
            "free_product" => &["factors"],
            "psl2z" => &[],
            "surface" => &["g"],
            "fn_sn" => &["n"],
            "finite" => &["group"],
            other => {
                return Err(Error::ParameterOutOfRange(format!(
                    "unknown example {other:?}; expected one of {}",
                    EXAMPLE_NAMES.join(", ")
                )))
            }
        };
        if let Some((k, _)) = params.iter().find(|(k, _)| !allowed.contains(&k.as_str())) {
            return Err(Error::ParameterOutOfRange(format!(
                "example {name} takes no parameter {k:?}"
            )));
        }
        let get = |key: &str| params.iter().rev().find(|(k, _)| k == key).map(|(_, v)| v.as_str());
        let number = |key: &str, default: usize| -> Result<usize> {
            get(key).map_or(Ok(default), |v| {
                v.trim()
                    .parse()
                    .map_err(|_| Error::ParameterOutOfRange(format!("{key}={v} is not a nonnegative integer")))
            })
        };
        Ok(match name {
            "free_group" => Self::FreeGroup { m: number("m", 2)? },
            "free_product" => {
                let raw = get("factors").unwrap_or("cyclic:2,cyclic:3");
                let factors = split_top_level(raw)
                    .ok_or_else(|| Error::ParameterOutOfRange(format!("unbalanced factors {raw:?}")))?
                    .into_iter()
                    .map(str::parse)
                    .collect::<Result<Vec<_>>>()?;
                Self::FreeProduct { factors }
            }
            "psl2z" => Self::Psl2z,
            "surface" => Self::Surface { g: number("g", 2)? },
            "fn_sn" => Self::FnSn { n: number("n", 4)? },
            "finite" => Self::Finite {
                group: get("group").unwrap_or("trivial").parse()?,
            },
            _ => unreachable!(),
        })
    }

    /// The model descriptions this example expands to. The first one is the
    /// canonical model; later ones are equivalent constructions.
    pub fn model_specs(&self) -> Result<Vec<ModelSpec>> {
        let name = self.to_string();
        match self {
            Self::FreeGroup { m } => {
                if *m < 1 {
                    return Err(Error::ParameterOutOfRange("free_group needs m >= 1".into()));
                }
                let complex = ModelSpec::CellComplex(CellComplexSpec {
                    name: name.clone(),
                    dims: vec![1, *m],
                    boundaries: vec![vec![vec![0; *m]]],
                });
                let edges = (1..=*m)
                    .map(|i| EdgeSpec {
                        name: format!("e{i}"),
                        group: GroupLiteral::Trivial,
                        rank_minus1: None,
                        head: "v".into(),
                        tail: "v".into(),
                        head_map: vec![0],
                        tail_map: vec![0],
                    })
                    .collect();
                let graph = ModelSpec::GraphOfGroups(GraphSpec {
                    name,
                    vertices: vec![VertexSpec {
                        name: "v".into(),
                        group: GroupLiteral::Trivial,
                        rank_minus1: None,
                    }],
                    edges,
                    boundary_model: BoundaryModelSpec::UnitInclusion,
                });
                Ok(vec![complex, graph])
            }
            Self::FreeProduct { factors } => free_product(name, factors).map(|s| vec![s]),
            Self::Psl2z => free_product(
                name,
                &[GroupLiteral::Cyclic { n: 2 }, GroupLiteral::Cyclic { n: 3 }],
            )
            .map(|s| vec![s]),
            Self::Surface { g } => {
                if *g < 2 {
                    return Err(Error::ParameterOutOfRange("surface needs genus g >= 2".into()));
                }
                Ok(vec![ModelSpec::CellComplex(CellComplexSpec {
                    name,
                    dims: vec![1, 2 * g, 1],
                    boundaries: vec![vec![vec![0; 2 * g]], vec![vec![0]; 2 * g]],
                })])
            }
            Self::FnSn { n } => fn_sn(name, *n).map(|s| vec![s]),
            Self::Finite { group } => Ok(vec![ModelSpec::FiniteGroup(FiniteGroupSpec {
                name,
                group: group.clone(),
                rank_minus1: catalog_rank_minus1(group),
            })]),
        }
    }
}

impl fmt::Display for NamedExample {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::FreeGroup { m } => write!(f, "free_group(m={m})"),
            Self::FreeProduct { factors } => {
                let names: Vec<String> = factors.iter().map(ToString::to_string).collect();
                write!(f, "free_product({})", names.join(" * "))
            }
            Self::Psl2z => write!(f, "psl2z"),
            Self::Surface { g } => write!(f, "surface(g={g})"),
            Self::FnSn { n } => write!(f, "fn_sn(n={n})"),
            Self::Finite { group } => write!(f, "finite({group})"),
        }
    }
}

fn free_product(name: String, factors: &[GroupLiteral]) -> Result<ModelSpec> {
    if factors.len() < 2 {
        return Err(Error::ParameterOutOfRange(
            "free_product needs at least two factors".into(),
        ));
    }
    let identities = factors
        .iter()
        .map(|g| g.build().map(|g| g.identity()))
        .collect::<Result<Vec<_>>>()?;
    let vertices = factors
        .iter()
        .enumerate()
        .map(|(i, g)| VertexSpec {
            name: format!("v{}", i + 1),
            group: g.clone(),
            rank_minus1: catalog_rank_minus1(g),
        })
        .collect();
    let edges = (1..factors.len())
        .map(|i| EdgeSpec {
            name: format!("e{i}"),
            group: GroupLiteral::Trivial,
            rank_minus1: None,
            head: format!("v{i}"),
            tail: format!("v{}", i + 1),
            head_map: vec![identities[i - 1]],
            tail_map: vec![identities[i]],
        })
        .collect();
    Ok(ModelSpec::GraphOfGroups(GraphSpec {
        name,
        vertices,
        edges,
        boundary_model: BoundaryModelSpec::UnitInclusion,
    }))
}

/// A single loop: vertex group `S_n`, edge group `S_{n-1}` included as the
/// stabilizer of the last point at the head and of the first point at the
/// tail. The edge-to-vertex maps are rationally zero.
fn fn_sn(name: String, n: usize) -> Result<ModelSpec> {
    if n < 2 {
        return Err(Error::ParameterOutOfRange("fn_sn needs n >= 2".into()));
    }
    if (2..=n).try_fold(1usize, |acc, k| acc.checked_mul(k).filter(|&o| o <= DEFAULT_ORDER_CAP)).is_none() {
        return Err(Error::OrderBound { cap: DEFAULT_ORDER_CAP });
    }
    let big = symmetric_elements(n);
    let index_of = |p: &Vec<usize>| big.binary_search(p).expect("a permutation of 0..n");
    let small = symmetric_elements(n - 1);
    let fix_last: Vec<usize> = small
        .iter()
        .map(|p| {
            let mut q = p.clone();
            q.push(n - 1);
            index_of(&q)
        })
        .collect();
    let fix_first: Vec<usize> = small
        .iter()
        .map(|p| {
            let q: Vec<usize> = std::iter::once(0).chain(p.iter().map(|x| x + 1)).collect();
            index_of(&q)
        })
        .collect();
    Ok(ModelSpec::GraphOfGroups(GraphSpec {
        name,
        vertices: vec![VertexSpec {
            name: "v".into(),
            group: GroupLiteral::Symmetric { n },
            rank_minus1: Some(0),
        }],
        edges: vec![EdgeSpec {
            name: "e".into(),
            group: GroupLiteral::Symmetric { n: n - 1 },
            rank_minus1: Some(0),
            head: "v".into(),
            tail: "v".into(),
            head_map: fix_last,
            tail_map: fix_first,
        }],
        boundary_model: BoundaryModelSpec::Zero,
    }))
}

/// Builds every model an example expands to; the first is canonical.
pub fn expand_example(example: &NamedExample) -> Result<Vec<Model>> {
    example.model_specs()?.iter().map(ModelSpec::build).collect()
}

/// The examples exercised by `verify` and the totality checks.
pub fn catalog_examples() -> Vec<NamedExample> {
    use GroupLiteral::*;
    let mut out = vec![NamedExample::Psl2z];
    out.extend((1..=3).map(|m| NamedExample::FreeGroup { m }));
    out.extend((2..=3).map(|g| NamedExample::Surface { g }));
    out.extend((2..=5).map(|n| NamedExample::FnSn { n }));
    out.extend([
        NamedExample::FreeProduct {
            factors: vec![Cyclic { n: 2 }, Cyclic { n: 2 }],
        },
        NamedExample::FreeProduct {
            factors: vec![Cyclic { n: 3 }, Symmetric { n: 3 }, Cyclic { n: 2 }],
        },
        NamedExample::Finite { group: Trivial },
        NamedExample::Finite { group: Cyclic { n: 3 } },
        NamedExample::Finite { group: Symmetric { n: 4 } },
    ]);
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::assembly::Model;

    #[test]
    fn quaternion_table_is_q8() {
        let q8 = quaternion_literal().build().unwrap();
        assert_eq!(q8.order(), 8);
        assert!(!q8.is_abelian());
        let involutions = q8.elements().filter(|&a| a != q8.identity() && q8.mul(a, a) == q8.identity());
        assert_eq!(involutions.count(), 1);
        assert_eq!(q8.cyclic_subgroup_classes().q(), 5);
    }

    #[test]
    fn catalog_groups_stay_small() {
        for (name, lit) in catalog_groups() {
            let g = lit.build().unwrap();
            assert!(g.order() <= 48, "{name}");
        }
    }

    #[test]
    fn psl2z_expands_to_an_interval() {
        let Model::Graph(g) = expand_example(&NamedExample::Psl2z).unwrap().remove(0) else {
            panic!("expected a graph");
        };
        let mut orders: Vec<usize> = g.vertices().iter().map(|v| v.group.order()).collect();
        orders.sort_unstable();
        assert_eq!(orders, vec![2, 3]);
        assert_eq!(g.edges().len(), 1);
        assert_eq!(g.edges()[0].group.order(), 1);
        assert!(!g.edges()[0].is_loop());
    }

    #[test]
    fn surface_and_circle() {
        let Model::Complex(x) = expand_example(&NamedExample::Surface { g: 2 }).unwrap().remove(0) else {
            panic!();
        };
        assert_eq!(x.dims(), &[1, 4, 1]);
        assert!(x.boundaries().iter().all(|d| d.is_zero()));

        let models = expand_example(&NamedExample::FreeGroup { m: 1 }).unwrap();
        let Model::Graph(g) = &models[1] else { panic!() };
        assert_eq!((g.vertices().len(), g.edges().len()), (1, 1));
        assert!(g.edges()[0].is_loop() && g.edges()[0].group.order() == 1);
    }

    #[test]
    fn fn_sn_maps_are_injective_homomorphisms() {
        for n in 2..=5 {
            let Model::Graph(g) = expand_example(&NamedExample::FnSn { n }).unwrap().remove(0) else {
                panic!();
            };
            assert_eq!(g.vertices()[0].group.label(), format!("symmetric:{n}"));
            assert_eq!(g.edges()[0].group.label(), format!("symmetric:{}", n - 1));
        }
    }

    #[test]
    fn parameter_errors() {
        for e in [
            NamedExample::FreeGroup { m: 0 },
            NamedExample::Surface { g: 1 },
            NamedExample::FnSn { n: 1 },
            NamedExample::FreeProduct {
                factors: vec![GroupLiteral::Trivial],
            },
        ] {
            assert!(matches!(expand_example(&e), Err(Error::ParameterOutOfRange(_))), "{e}");
        }
        assert!(NamedExample::from_params("nope", &[]).is_err());
        assert!(NamedExample::from_params("surface", &[("m".into(), "2".into())]).is_err());
        assert!(NamedExample::from_params("surface", &[("g".into(), "x".into())]).is_err());
    }

    #[test]
    fn params() {
        let p = |k: &str, v: &str| vec![(k.to_string(), v.to_string())];
        assert_eq!(
            NamedExample::from_params("free_group", &p("m", "3")).unwrap(),
            NamedExample::FreeGroup { m: 3 }
        );
        assert_eq!(
            NamedExample::from_params("free_product", &p("factors", "cyclic:2, product:(cyclic:2,cyclic:3)")).unwrap(),
            NamedExample::FreeProduct {
                factors: vec![
                    GroupLiteral::Cyclic { n: 2 },
                    GroupLiteral::Product {
                        factors: vec![GroupLiteral::Cyclic { n: 2 }, GroupLiteral::Cyclic { n: 3 }]
                    }
                ]
            }
        );
        assert_eq!(NamedExample::from_params("fn_sn", &[]).unwrap(), NamedExample::FnSn { n: 4 });
    }

    #[test]
    fn k_minus1_catalog() {
        assert_eq!(catalog_rank_minus1(&GroupLiteral::Cyclic { n: 2 }), Some(0));
        assert_eq!(catalog_rank_minus1(&GroupLiteral::Symmetric { n: 5 }), Some(0));
        assert_eq!(catalog_rank_minus1(&GroupLiteral::Cyclic { n: 6 }), None);
    }
}
