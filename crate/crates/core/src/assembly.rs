//! Rank assembly from the E2 page of the equivariant Atiyah-Hirzebruch
//! spectral sequence.
//!
//! Two situations are supported:
//!
//! * cell complexes with trivial isotropy of dimension at most 2, where the
//!   page is homology with constant coefficients `K_q(Z)` and collapses
//!   rationally, so `rank K_n = sum_p b_p * rank K_{n-p}(Z)`;
//! * one-dimensional models given as finite graphs of finite groups, where
//!   `rank K_n = rank coker(E_n -> V_n) + rank ker(E_{n-1} -> V_{n-1})`.
//!
//! Only ranks are computed; torsion never enters.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::group::FiniteGroup;
use crate::invariants::{rank_k_integers, KRankFunction};
use crate::linalg::{rational_rank, IntMatrix};

/// A finite CW complex with trivial isotropy, given by its cellular boundary
/// matrices. `boundaries[p - 1]` is `d_p`, of shape `dims[p-1] x dims[p]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CellComplex {
    dims: Vec<usize>,
    boundaries: Vec<IntMatrix>,
}

impl CellComplex {
    pub fn new(dims: Vec<usize>, boundaries: Vec<IntMatrix>) -> Result<Self> {
        if dims.is_empty() {
            return Err(Error::MalformedComplex("no cell counts given".into()));
        }
        if boundaries.len() + 1 != dims.len() {
            return Err(Error::MalformedComplex(format!(
                "{} cell counts need {} boundary matrices, got {}",
                dims.len(),
                dims.len() - 1,
                boundaries.len()
            )));
        }
        for (i, d) in boundaries.iter().enumerate() {
            let p = i + 1;
            if (d.rows(), d.cols()) != (dims[p - 1], dims[p]) {
                return Err(Error::MalformedComplex(format!(
                    "d{p} has shape {}x{}, expected {}x{}",
                    d.rows(),
                    d.cols(),
                    dims[p - 1],
                    dims[p]
                )));
            }
        }
        for (i, pair) in boundaries.windows(2).enumerate() {
            let product = pair[0].mul_exact(&pair[1]).expect("shapes checked above");
            if !product.iter().flatten().all(Zero::is_zero) {
                return Err(Error::ChainComplexViolation { p: i + 1 });
            }
        }
        Ok(Self { dims, boundaries })
    }

    pub fn point() -> Self {
        Self::new(vec![1], vec![]).expect("a point is a valid complex")
    }

    /// One 0-cell and `m` 1-cells.
    pub fn wedge_of_circles(m: usize) -> Self {
        Self::new(vec![1, m], vec![IntMatrix::zeros(1, m)]).expect("valid complex")
    }

    /// The closed orientable surface of genus `g` from the `4g`-gon: one
    /// 0-cell, `2g` 1-cells, one 2-cell, all boundary maps zero.
    pub fn orientable_surface(g: usize) -> Self {
        Self::new(
            vec![1, 2 * g, 1],
            vec![IntMatrix::zeros(1, 2 * g), IntMatrix::zeros(2 * g, 1)],
        )
        .expect("valid complex")
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn boundaries(&self) -> &[IntMatrix] {
        &self.boundaries
    }

    pub fn dimension(&self) -> usize {
        self.dims.len() - 1
    }

    pub fn euler_characteristic(&self) -> i64 {
        alternating_sum(&self.dims)
    }
}

fn alternating_sum(values: &[usize]) -> i64 {
    values
        .iter()
        .enumerate()
        .map(|(p, &v)| if p % 2 == 0 { v as i64 } else { -(v as i64) })
        .sum()
}

/// Rational Betti numbers `b_p = dims[p] - rank d_p - rank d_{p+1}`.
pub fn betti_numbers(complex: &CellComplex) -> Vec<usize> {
    let ranks: Vec<usize> = complex.boundaries.iter().map(rational_rank).collect();
    let rank_of = |p: usize| -> usize {
        if p == 0 {
            0
        } else {
            ranks.get(p - 1).copied().unwrap_or(0)
        }
    };
    complex
        .dims
        .iter()
        .enumerate()
        .map(|(p, &cells)| cells - rank_of(p) - rank_of(p + 1))
        .collect()
}

pub fn rank_trivial_isotropy(complex: &CellComplex, n: i64) -> Result<u64> {
    Ok(trivial_isotropy_terms(complex, n)?.iter().sum())
}

/// The summands `b_p * rank K_{n-p}(Z)` for `p = 0..=dim`.
fn trivial_isotropy_terms(complex: &CellComplex, n: i64) -> Result<Vec<u64>> {
    if complex.dimension() > 2 {
        return Err(Error::UnsupportedDimension(complex.dimension()));
    }
    Ok(betti_numbers(complex)
        .into_iter()
        .enumerate()
        .map(|(p, b)| b as u64 * rank_k_integers(n - p as i64))
        .collect())
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Vertex {
    pub name: String,
    pub group: FiniteGroup,
    pub k_ranks: KRankFunction,
}

impl Vertex {
    pub fn new(name: impl Into<String>, group: FiniteGroup, rank_minus1: Option<u64>) -> Self {
        let name = name.into();
        let k_ranks = KRankFunction::new(&group, rank_minus1);
        Self {
            name,
            group,
            k_ranks,
        }
    }
}

/// An edge of a graph of groups. `head_map` and `tail_map` send each element
/// index of the edge group to an element index of the endpoint group.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Edge {
    pub name: String,
    pub group: FiniteGroup,
    pub k_ranks: KRankFunction,
    pub head: usize,
    pub tail: usize,
    pub head_map: Vec<usize>,
    pub tail_map: Vec<usize>,
}

impl Edge {
    pub fn new(
        name: impl Into<String>,
        group: FiniteGroup,
        rank_minus1: Option<u64>,
        (head, head_map): (usize, Vec<usize>),
        (tail, tail_map): (usize, Vec<usize>),
    ) -> Self {
        let k_ranks = KRankFunction::new(&group, rank_minus1);
        Self {
            name: name.into(),
            group,
            k_ranks,
            head,
            tail,
            head_map,
            tail_map,
        }
    }

    /// An edge with trivial group; the maps pick out the endpoint identities.
    pub fn trivial(name: impl Into<String>, head: (usize, &FiniteGroup), tail: (usize, &FiniteGroup)) -> Self {
        Self::new(
            name,
            FiniteGroup::trivial(),
            None,
            (head.0, vec![head.1.identity()]),
            (tail.0, vec![tail.1.identity()]),
        )
    }

    pub fn is_loop(&self) -> bool {
        self.head == self.tail
    }
}

/// How the edge-to-vertex map `E_n -> V_n` acts rationally.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum BoundaryModel {
    ZeroMap,
    /// Only for trivial edge groups: each edge's `K_n(Z)` maps by the unit
    /// into the head and tail vertex groups with opposite signs.
    UnitInclusion,
    /// Explicit ranks per degree. Degrees not listed use `tail_pattern`
    /// (indexed by `n = 1, 2, 3, 0 mod 4`) when `n >= 2`, and 0 otherwise.
    UserSupplied {
        pairs: BTreeMap<i64, u64>,
        tail_pattern: [u64; 4],
    },
}

impl BoundaryModel {
    fn user_rank(pairs: &BTreeMap<i64, u64>, tail_pattern: &[u64; 4], n: i64) -> u64 {
        match pairs.get(&n) {
            Some(&r) => r,
            None if n >= 2 => tail_pattern[(n - 1).rem_euclid(4) as usize],
            None => 0,
        }
    }
}

impl fmt::Display for BoundaryModel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::ZeroMap => write!(f, "zero"),
            Self::UnitInclusion => write!(f, "unit_inclusion"),
            Self::UserSupplied { .. } => write!(f, "user_supplied"),
        }
    }
}

/// A finite graph of finite groups with a rational model of its boundary map.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GraphOfGroups {
    vertices: Vec<Vertex>,
    edges: Vec<Edge>,
    boundary_model: BoundaryModel,
    incidence_rank: usize,
}

impl GraphOfGroups {
    /// Checks edge endpoints and that every edge map is an injective
    /// homomorphism.
    pub fn new(vertices: Vec<Vertex>, edges: Vec<Edge>, boundary_model: BoundaryModel) -> Result<Self> {
        if vertices.is_empty() {
            return Err(Error::MalformedGraph("a graph of groups needs a vertex".into()));
        }
        for e in &edges {
            for (end, v, map) in [("head", e.head, &e.head_map), ("tail", e.tail, &e.tail_map)] {
                let vertex = vertices.get(v).ok_or_else(|| {
                    Error::MalformedGraph(format!("edge {}: {end} vertex {v} does not exist", e.name))
                })?;
                check_injective_homomorphism(&e.name, &vertex.name, &e.group, &vertex.group, map)?;
            }
        }
        let mut incidence = IntMatrix::zeros(vertices.len(), edges.len());
        for (j, e) in edges.iter().enumerate() {
            if !e.is_loop() {
                incidence[(e.head, j)] += 1;
                incidence[(e.tail, j)] -= 1;
            }
        }
        let incidence_rank = rational_rank(&incidence);
        Ok(Self {
            vertices,
            edges,
            boundary_model,
            incidence_rank,
        })
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.vertices
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn boundary_model(&self) -> &BoundaryModel {
        &self.boundary_model
    }

    /// Rank of the vertex-edge incidence matrix, i.e. `|V|` minus the number
    /// of connected components.
    pub fn incidence_rank(&self) -> usize {
        self.incidence_rank
    }

    /// `(rank E_n, rank V_n)`.
    pub fn dims_e_v(&self, n: i64) -> Result<(u64, u64)> {
        let mut e = 0;
        for edge in &self.edges {
            e += edge.k_ranks.evaluate(n).map_err(|err| self.name_group(err, &edge.name))?;
        }
        let mut v = 0;
        for vertex in &self.vertices {
            v += vertex.k_ranks.evaluate(n).map_err(|err| self.name_group(err, &vertex.name))?;
        }
        Ok((e, v))
    }

    fn name_group(&self, err: Error, owner: &str) -> Error {
        match err {
            Error::MissingKMinus1Datum { group } => Error::MissingKMinus1Datum {
                group: format!("{group} (at {owner})"),
            },
            other => other,
        }
    }

    /// Rank of `E_n -> V_n` under the boundary model.
    pub fn boundary_rank(&self, n: i64) -> Result<u64> {
        let (dim_e, dim_v) = self.dims_e_v(n)?;
        let rank = match &self.boundary_model {
            BoundaryModel::ZeroMap => 0,
            BoundaryModel::UnitInclusion => {
                if let Some(e) = self.edges.iter().find(|e| e.group.order() != 1) {
                    return Err(Error::ModelMismatch(format!(
                        "unit_inclusion needs trivial edge groups, but edge {} carries {}",
                        e.name,
                        e.group.label()
                    )));
                }
                self.incidence_rank as u64 * rank_k_integers(n)
            }
            BoundaryModel::UserSupplied { pairs, tail_pattern } => {
                BoundaryModel::user_rank(pairs, tail_pattern, n)
            }
        };
        let bound = dim_e.min(dim_v);
        if rank > bound {
            return Err(Error::RankOutOfBounds {
                degree: n,
                rank,
                bound,
            });
        }
        Ok(rank)
    }

    /// `(rank Cok_n, rank Ker_{n-1})`.
    pub fn rank_parts(&self, n: i64) -> Result<(u64, u64)> {
        let (_, dim_v) = self.dims_e_v(n)?;
        let cok = dim_v - self.boundary_rank(n)?;
        let (dim_e_prev, _) = self.dims_e_v(n - 1)?;
        let ker = dim_e_prev - self.boundary_rank(n - 1)?;
        Ok((cok, ker))
    }
}

fn check_injective_homomorphism(
    edge: &str,
    vertex: &str,
    from: &FiniteGroup,
    to: &FiniteGroup,
    map: &[usize],
) -> Result<()> {
    if map.len() != from.order() {
        return Err(Error::MalformedGraph(format!(
            "edge {edge}: map into {vertex} has {} entries, the edge group has order {}",
            map.len(),
            from.order()
        )));
    }
    if let Some(&bad) = map.iter().find(|&&x| x >= to.order()) {
        return Err(Error::MalformedGraph(format!(
            "edge {edge}: map into {vertex} hits index {bad}, but {} has order {}",
            to.label(),
            to.order()
        )));
    }
    for a in from.elements() {
        for b in from.elements() {
            if map[from.mul(a, b)] != to.mul(map[a], map[b]) {
                return Err(Error::NotAHomomorphism {
                    edge: edge.into(),
                    vertex: vertex.into(),
                    a,
                    b,
                });
            }
        }
    }
    let mut preimage = vec![None; to.order()];
    for a in from.elements() {
        if let Some(b) = preimage[map[a]].replace(a) {
            return Err(Error::NotInjective {
                edge: edge.into(),
                vertex: vertex.into(),
                a: b,
                b: a,
                image: map[a],
            });
        }
    }
    Ok(())
}

pub fn dims_e_v(graph: &GraphOfGroups, n: i64) -> Result<(u64, u64)> {
    graph.dims_e_v(n)
}

pub fn boundary_rank(graph: &GraphOfGroups, n: i64) -> Result<u64> {
    graph.boundary_rank(n)
}

pub fn rank_graph_of_groups(graph: &GraphOfGroups, n: i64) -> Result<u64> {
    let (cok, ker) = graph.rank_parts(n)?;
    Ok(cok + ker)
}

/// Anything whose K-theory ranks can be assembled.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Model {
    Finite(KRankFunction),
    Complex(CellComplex),
    Graph(GraphOfGroups),
}

impl Model {
    pub fn rank(&self, n: i64) -> Result<u64> {
        self.rank_with_note(n).map(|(r, _)| r)
    }

    /// The rank together with a short account of how it was assembled.
    pub fn rank_with_note(&self, n: i64) -> Result<(u64, String)> {
        match self {
            Model::Finite(f) => {
                let r = f.evaluate(n)?;
                let case = match n {
                    i64::MIN..=-2 => "vanishes below -1".to_string(),
                    -1 => "K_-1 datum".to_string(),
                    0 => "K_0 has rank 1".to_string(),
                    1 => format!("r - q = {} - {}", f.invariants.r, f.invariants.q),
                    _ => match n.rem_euclid(4) {
                        1 => format!("r = {}", f.invariants.r),
                        3 => format!("c = {}", f.invariants.c),
                        _ => "even degree".to_string(),
                    },
                };
                Ok((r, format!("finite group: {case}")))
            }
            Model::Complex(x) => {
                let terms = trivial_isotropy_terms(x, n)?;
                let betti = betti_numbers(x);
                let shown: Vec<String> = betti
                    .iter()
                    .enumerate()
                    .map(|(p, b)| format!("{b}*rkK{}(Z)", n - p as i64))
                    .collect();
                Ok((terms.iter().sum(), format!("trivial isotropy: {}", shown.join(" + "))))
            }
            Model::Graph(g) => {
                let (cok, ker) = g.rank_parts(n)?;
                Ok((cok + ker, format!("coker_{n} = {cok}, ker_{} = {ker}", n - 1)))
            }
        }
    }
}

/// Ranks of `K_n` over a contiguous range of degrees.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RankTable {
    pub label: String,
    pub n_lo: i64,
    pub n_hi: i64,
    pub ranks: Vec<u64>,
    pub notes: Vec<String>,
}

impl RankTable {
    pub fn degrees(&self) -> impl Iterator<Item = i64> {
        self.n_lo..=self.n_hi
    }

    pub fn get(&self, n: i64) -> Option<u64> {
        if n < self.n_lo || n > self.n_hi {
            return None;
        }
        self.ranks.get((n - self.n_lo) as usize).copied()
    }

    pub fn rows(&self) -> impl Iterator<Item = (i64, u64, &str)> {
        self.degrees()
            .zip(&self.ranks)
            .zip(&self.notes)
            .map(|((n, &r), note)| (n, r, note.as_str()))
    }
}

/// Default degree range: one full period of every 4-periodic pattern past
/// the special low degrees.
pub const DEFAULT_RANGE: (i64, i64) = (-2, 13);

pub fn rank_table(model: &Model, label: &str, n_lo: i64, n_hi: i64) -> Result<RankTable> {
    if n_lo > n_hi {
        return Err(Error::ParameterOutOfRange(format!(
            "empty degree range {n_lo}..{n_hi}"
        )));
    }
    let (ranks, notes) = (n_lo..=n_hi)
        .map(|n| model.rank_with_note(n))
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .unzip();
    Ok(RankTable {
        label: label.to_string(),
        n_lo,
        n_hi,
        ranks,
        notes,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z(n: usize) -> FiniteGroup {
        FiniteGroup::cyclic(n).unwrap()
    }

    fn psl2z() -> GraphOfGroups {
        let (a, b) = (z(2), z(3));
        let edge = Edge::trivial("e", (0, &a), (1, &b));
        GraphOfGroups::new(
            vec![Vertex::new("a", a, Some(0)), Vertex::new("b", b, Some(0))],
            vec![edge],
            BoundaryModel::UnitInclusion,
        )
        .unwrap()
    }

    fn trivial_loops(m: usize) -> GraphOfGroups {
        let t = FiniteGroup::trivial();
        let edges = (0..m).map(|i| Edge::trivial(format!("e{i}"), (0, &t), (0, &t))).collect();
        GraphOfGroups::new(vec![Vertex::new("v", t.clone(), None)], edges, BoundaryModel::UnitInclusion)
            .unwrap()
    }

    fn fn_sn(n: usize) -> GraphOfGroups {
        // Only ranks matter here; the two maps are both the last-point stabilizer.
        let big = FiniteGroup::symmetric(n).unwrap();
        let small = FiniteGroup::symmetric(n - 1).unwrap();
        let elems = crate::group::symmetric_elements(n);
        let map: Vec<usize> = crate::group::symmetric_elements(n - 1)
            .into_iter()
            .map(|mut p| {
                p.push(n - 1);
                elems.binary_search(&p).unwrap()
            })
            .collect();
        GraphOfGroups::new(
            vec![Vertex::new("v", big, Some(0))],
            vec![Edge::new("e", small, Some(0), (0, map.clone()), (0, map))],
            BoundaryModel::ZeroMap,
        )
        .unwrap()
    }

    #[test]
    fn betti_examples() {
        assert_eq!(betti_numbers(&CellComplex::wedge_of_circles(3)), vec![1, 3]);
        assert_eq!(betti_numbers(&CellComplex::orientable_surface(2)), vec![1, 4, 1]);
        assert_eq!(betti_numbers(&CellComplex::point()), vec![1]);
    }

    #[test]
    fn betti_of_a_triangle_boundary() {
        // three vertices, three edges forming a circle
        let d1 = IntMatrix::from_rows(&[vec![-1, 0, 1], vec![1, -1, 0], vec![0, 1, -1]]).unwrap();
        let x = CellComplex::new(vec![3, 3], vec![d1]).unwrap();
        assert_eq!(betti_numbers(&x), vec![1, 1]);
    }

    #[test]
    fn complex_validation() {
        let d1 = IntMatrix::from_rows(&[vec![1, -1], vec![-1, 1]]).unwrap();
        let d2 = IntMatrix::from_rows(&[vec![1], vec![0]]).unwrap();
        assert_eq!(
            CellComplex::new(vec![2, 2, 1], vec![d1.clone(), d2]),
            Err(Error::ChainComplexViolation { p: 1 })
        );
        assert!(matches!(
            CellComplex::new(vec![2, 2], vec![]),
            Err(Error::MalformedComplex(_))
        ));
        assert!(matches!(
            CellComplex::new(vec![3, 2], vec![d1]),
            Err(Error::MalformedComplex(_))
        ));
        assert!(matches!(CellComplex::new(vec![], vec![]), Err(Error::MalformedComplex(_))));
    }

    #[test]
    fn trivial_isotropy_examples() {
        let w2 = CellComplex::wedge_of_circles(2);
        assert_eq!(rank_trivial_isotropy(&w2, 1), Ok(2));
        assert_eq!(rank_trivial_isotropy(&w2, 6), Ok(2));
        assert_eq!(rank_trivial_isotropy(&w2, 5), Ok(1));
        let s2 = CellComplex::orientable_surface(2);
        assert_eq!(rank_trivial_isotropy(&s2, 2), Ok(1));
        assert_eq!(rank_trivial_isotropy(&s2, 6), Ok(4));
        assert_eq!(rank_trivial_isotropy(&s2, 1), Ok(4));
        for x in [&w2, &s2, &CellComplex::point()] {
            assert_eq!(rank_trivial_isotropy(x, -1), Ok(0));
        }
    }

    #[test]
    fn three_dimensional_complexes_are_rejected() {
        let x = CellComplex::new(
            vec![1, 0, 0, 1],
            vec![IntMatrix::zeros(1, 0), IntMatrix::zeros(0, 0), IntMatrix::zeros(0, 1)],
        )
        .unwrap();
        assert_eq!(rank_trivial_isotropy(&x, 0), Err(Error::UnsupportedDimension(3)));
        assert_eq!(betti_numbers(&x), vec![1, 0, 0, 1]);
    }

    #[test]
    fn dims_examples() {
        assert_eq!(psl2z().dims_e_v(5), Ok((1, 4)));
        let loop1 = trivial_loops(1);
        assert_eq!(loop1.dims_e_v(0), Ok((1, 1)));
        assert_eq!(loop1.dims_e_v(3), Ok((0, 0)));
    }

    #[test]
    fn boundary_rank_examples() {
        assert_eq!(psl2z().boundary_rank(0), Ok(1));
        let loop1 = trivial_loops(1);
        for n in -3..10 {
            assert_eq!(loop1.boundary_rank(n), Ok(0));
        }
        let g = fn_sn(4);
        for n in 0..10 {
            assert_eq!(g.boundary_rank(n), Ok(0));
        }
    }

    #[test]
    fn graph_rank_examples() {
        let g = psl2z();
        let r = |n| rank_graph_of_groups(&g, n).unwrap();
        assert_eq!((r(5), r(7), r(1), r(0), r(-1)), (3, 1, 0, 1, 0));
        assert_eq!(r(3), 1);

        let g = fn_sn(4);
        let r = |n| rank_graph_of_groups(&g, n).unwrap();
        assert_eq!((r(5), r(6), r(1)), (5, 3, 1));

        for m in 1..4 {
            assert_eq!(rank_graph_of_groups(&trivial_loops(m), 1), Ok(m as u64));
        }
    }

    #[test]
    fn unit_inclusion_rejects_nontrivial_edges() {
        let a = z(2);
        let edge = Edge::new("e", a.clone(), Some(0), (0, vec![0, 1]), (0, vec![0, 1]));
        let g = GraphOfGroups::new(vec![Vertex::new("v", a, Some(0))], vec![edge], BoundaryModel::UnitInclusion)
            .unwrap();
        assert!(matches!(g.boundary_rank(0), Err(Error::ModelMismatch(_))));
    }

    #[test]
    fn user_supplied_ranks_are_bounded() {
        let a = z(2);
        let edge = Edge::new("e", a.clone(), Some(0), (0, vec![0, 1]), (0, vec![0, 1]));
        let model = BoundaryModel::UserSupplied {
            pairs: BTreeMap::from([(0, 1), (1, 1)]),
            tail_pattern: [2, 0, 0, 0],
        };
        let g = GraphOfGroups::new(vec![Vertex::new("v", a, Some(0))], vec![edge], model).unwrap();
        assert_eq!(g.boundary_rank(0), Ok(1));
        assert_eq!(g.boundary_rank(5), Ok(2));
        assert_eq!(g.boundary_rank(6), Ok(0));
        assert_eq!(
            g.boundary_rank(1),
            Err(Error::RankOutOfBounds { degree: 1, rank: 1, bound: 0 })
        );
    }

    #[test]
    fn injection_checks() {
        let (a, b) = (z(2), z(4));
        let bad = Edge::new("e", a.clone(), None, (0, vec![0, 0]), (0, vec![0, 2]));
        let err = GraphOfGroups::new(vec![Vertex::new("v", b.clone(), None)], vec![bad], BoundaryModel::ZeroMap)
            .unwrap_err();
        assert!(matches!(err, Error::NotInjective { a: 0, b: 1, image: 0, .. }), "{err:?}");

        let bad = Edge::new("e", a.clone(), None, (0, vec![0, 1]), (0, vec![0, 2]));
        let err = GraphOfGroups::new(vec![Vertex::new("v", b.clone(), None)], vec![bad], BoundaryModel::ZeroMap)
            .unwrap_err();
        assert!(matches!(err, Error::NotAHomomorphism { a: 1, b: 1, .. }), "{err:?}");

        let bad = Edge::new("e", a.clone(), None, (0, vec![0, 2]), (3, vec![0, 2]));
        assert!(matches!(
            GraphOfGroups::new(vec![Vertex::new("v", b.clone(), None)], vec![bad], BoundaryModel::ZeroMap),
            Err(Error::MalformedGraph(_))
        ));
        let bad = Edge::new("e", a, None, (0, vec![0]), (0, vec![0, 2]));
        assert!(matches!(
            GraphOfGroups::new(vec![Vertex::new("v", b, None)], vec![bad], BoundaryModel::ZeroMap),
            Err(Error::MalformedGraph(_))
        ));
    }

    #[test]
    fn missing_datum_names_the_vertex() {
        let a = z(5);
        let g = GraphOfGroups::new(vec![Vertex::new("v0", a, None)], vec![], BoundaryModel::ZeroMap).unwrap();
        assert_eq!(g.dims_e_v(0), Ok((0, 1)));
        let Err(Error::MissingKMinus1Datum { group }) = g.dims_e_v(-1) else {
            panic!()
        };
        assert!(group.contains("cyclic:5") && group.contains("v0"));
    }

    #[test]
    fn tables() {
        let t = rank_table(&Model::Graph(psl2z()), "psl2z", -2, 9).unwrap();
        assert_eq!(t.ranks, vec![0, 0, 1, 0, 0, 1, 0, 3, 0, 1, 0, 3]);
        let t = rank_table(&Model::Complex(CellComplex::orientable_surface(2)), "s2", 0, 2).unwrap();
        assert_eq!(t.ranks, vec![1, 4, 1]);
        let t = rank_table(&Model::Complex(CellComplex::point()), "pt", 2, 4).unwrap();
        assert_eq!(t.ranks, vec![0, 0, 0]);
        assert_eq!(t.get(3), Some(0));
        assert_eq!(t.get(5), None);
        assert!(rank_table(&Model::Complex(CellComplex::point()), "pt", 3, 2).is_err());
    }
}
