//! Conjugacy-derived invariants of a finite group and the rank function
//! `n -> rank K_n(Z[H])` they determine.

use num_bigint::BigUint;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::group::FiniteGroup;

/// Counts read off the conjugacy structure of a finite group.
///
/// `r` counts real conjugacy classes (a class fused with the class of the
/// inverses), `c` those real classes that fuse two distinct ordinary classes,
/// and `q` the conjugacy classes of cyclic subgroups.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct RepInvariants {
    pub k: u64,
    pub m: u64,
    pub r: u64,
    pub c: u64,
    pub q: u64,
}

impl RepInvariants {
    pub fn of(group: &FiniteGroup) -> Self {
        let conj = group.conjugacy_data();
        let k = conj.k() as u64;
        let m = conj.m() as u64;
        debug_assert_eq!((k - m) % 2, 0);
        let c = (k - m) / 2;
        Self {
            k,
            m,
            r: m + c,
            c,
            q: group.cyclic_subgroup_classes().q() as u64,
        }
    }
}

pub fn rep_invariants(group: &FiniteGroup) -> RepInvariants {
    RepInvariants::of(group)
}

/// `n -> rank K_n(Z[H])` for a finite group `H`.
///
/// Degree -1 depends on a datum that is not determined by conjugacy data; it
/// is carried alongside and evaluating there without it is an error.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KRankFunction {
    pub invariants: RepInvariants,
    pub rank_minus1: Option<u64>,
    pub label: String,
}

impl KRankFunction {
    /// For the trivial group an absent `rank_minus1` defaults to 0.
    pub fn new(group: &FiniteGroup, rank_minus1: Option<u64>) -> Self {
        let rank_minus1 = rank_minus1.or((group.order() == 1).then_some(0));
        Self {
            invariants: RepInvariants::of(group),
            rank_minus1,
            label: group.label().to_string(),
        }
    }

    pub fn evaluate(&self, n: i64) -> Result<u64> {
        let inv = &self.invariants;
        Ok(match n {
            i64::MIN..=-2 => 0,
            -1 => self.rank_minus1.ok_or_else(|| Error::MissingKMinus1Datum {
                group: self.label.clone(),
            })?,
            0 => 1,
            1 => inv.r - inv.q,
            _ => match n.rem_euclid(4) {
                1 => inv.r,
                3 => inv.c,
                _ => 0,
            },
        })
    }
}

pub fn k_rank_function(group: &FiniteGroup, rank_minus1: Option<u64>) -> KRankFunction {
    KRankFunction::new(group, rank_minus1)
}

/// `rank K_n(Z)`: 1 at `n = 0` and at `n = 5, 9, 13, ...`, otherwise 0.
pub fn rank_k_integers(n: i64) -> u64 {
    u64::from(n == 0 || (n > 1 && n.rem_euclid(4) == 1))
}

/// Number of partitions of `n`, by the coin-change recurrence over part sizes.
pub fn partition_count(n: usize) -> BigUint {
    let mut ways = vec![BigUint::from(0u32); n + 1];
    ways[0] = BigUint::from(1u32);
    for part in 1..=n {
        for total in part..=n {
            let (lo, hi) = ways.split_at_mut(total);
            hi[0] += &lo[total - part];
        }
    }
    ways.swap_remove(n)
}
