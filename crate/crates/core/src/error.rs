use thiserror::Error;

/// The group axiom a Cayley table failed, with its witness.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GroupViolation {
    #[error("({a}*{b})*{c} != {a}*({b}*{c})")]
    NotAssociative { a: usize, b: usize, c: usize },
    #[error("no two-sided identity element")]
    NoIdentity,
    #[error("element {0} has no two-sided inverse")]
    NoInverse(usize),
}

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid Cayley table: {0}")]
    InvalidTable(String),

    #[error("not a group: {0}")]
    NotAGroup(GroupViolation),

    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),

    #[error("group order exceeds the configured cap of {cap}")]
    OrderBound { cap: usize },

    #[error("invalid parameter: {0}")]
    ParameterOutOfRange(String),

    #[error(
        "rank K_-1(Z[{group}]) is unknown; supply it with \"rank_minus1\" for this group \
         or restrict the degree range to n >= 0"
    )]
    MissingKMinus1Datum { group: String },

    #[error("boundary maps do not compose to zero: d{p} * d{} != 0", p + 1)]
    ChainComplexViolation { p: usize },

    #[error("malformed cell complex: {0}")]
    MalformedComplex(String),

    #[error("rank is only assembled for complexes of dimension <= 2, got {0}")]
    UnsupportedDimension(usize),

    #[error("model mismatch: {0}")]
    ModelMismatch(String),

    #[error(
        "supplied boundary rank {rank} at degree {degree} is outside [0, {bound}]"
    )]
    RankOutOfBounds { degree: i64, rank: u64, bound: u64 },

    #[error("edge {edge}: map into {vertex} is not a homomorphism: f({a}*{b}) != f({a})*f({b})")]
    NotAHomomorphism {
        edge: String,
        vertex: String,
        a: usize,
        b: usize,
    },

    #[error("edge {edge}: map into {vertex} is not injective: elements {a} and {b} both map to {image}")]
    NotInjective {
        edge: String,
        vertex: String,
        a: usize,
        b: usize,
        image: usize,
    },

    #[error("malformed graph of groups: {0}")]
    MalformedGraph(String),

    #[error("schema error at {path}: {message}")]
    SchemaError { path: String, message: String },

    #[error("invalid group literal {literal:?}: {message}")]
    BadLiteral { literal: String, message: String },
}
