//! Exact ranks of the algebraic K-theory groups `K_n(Z[G])`.
//!
//! Finite groups are handled through conjugacy data alone; infinite groups
//! with a finite model for proper actions are assembled from the ranks of
//! their finite isotropy groups, either over a trivial-isotropy cell complex
//! or over a finite graph of finite groups.

pub mod assembly;
pub mod catalog;
pub mod error;
pub mod group;
pub mod invariants;
pub mod linalg;
pub mod literal;
pub mod model;
pub mod oracle;
pub mod render;
pub mod verify;

pub use assembly::{
    betti_numbers, boundary_rank, dims_e_v, rank_graph_of_groups, rank_table, rank_trivial_isotropy,
    BoundaryModel, CellComplex, Edge, GraphOfGroups, Model, RankTable, Vertex,
};
pub use error::{Error, GroupViolation, Result};
pub use group::{ConjugacyData, CyclicSubgroupClasses, FiniteGroup};
pub use invariants::{k_rank_function, partition_count, rank_k_integers, rep_invariants, KRankFunction, RepInvariants};
pub use linalg::{rational_rank, IntMatrix};
pub use literal::GroupLiteral;
