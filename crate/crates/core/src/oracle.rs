//! Slow, deliberately naive reference computations.
//!
//! Nothing here calls into the optimized paths it is used to check: the
//! group oracles work from a raw Cayley table, the rank oracle does Gaussian
//! elimination over exact fractions, and partitions are listed one by one.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

/// Conjugacy counts from a raw Cayley table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BruteConjugacy {
    pub k: usize,
    pub m: usize,
    /// Class sizes, sorted ascending.
    pub sizes: Vec<usize>,
}

fn identity_of(table: &[Vec<usize>]) -> usize {
    let n = table.len();
    (0..n)
        .find(|&e| (0..n).all(|a| table[e][a] == a && table[a][e] == a))
        .expect("table has an identity")
}

fn inverses_of(table: &[Vec<usize>]) -> Vec<usize> {
    let e = identity_of(table);
    (0..table.len())
        .map(|a| (0..table.len()).find(|&b| table[a][b] == e).expect("inverse exists"))
        .collect()
}

/// `x ~ y` iff some `g` has `g x g^-1 = y`, tested for every triple.
pub fn brute_conjugacy(table: &[Vec<usize>]) -> BruteConjugacy {
    let n = table.len();
    let inv = inverses_of(table);
    let conjugate = |x: usize, y: usize| (0..n).any(|g| table[table[g][x]][inv[g]] == y);
    let mut class_id: Vec<Option<usize>> = vec![None; n];
    let mut sizes = Vec::new();
    for x in 0..n {
        if class_id[x].is_some() {
            continue;
        }
        let id = sizes.len();
        let mut size = 0;
        for y in 0..n {
            if conjugate(x, y) {
                class_id[y] = Some(id);
                size += 1;
            }
        }
        sizes.push(size);
    }
    let class_id: Vec<usize> = class_id.into_iter().map(Option::unwrap).collect();
    let mut self_paired = vec![false; sizes.len()];
    for x in 0..n {
        if class_id[x] == class_id[inv[x]] {
            self_paired[class_id[x]] = true;
        }
    }
    let k = sizes.len();
    sizes.sort_unstable();
    BruteConjugacy {
        k,
        m: self_paired.iter().filter(|&&b| b).count(),
        sizes,
    }
}

/// Number of conjugacy classes of cyclic subgroups, by comparing every pair
/// of cyclic subgroups under every conjugation.
pub fn brute_cyclic_subgroup_classes(table: &[Vec<usize>]) -> usize {
    let n = table.len();
    let e = identity_of(table);
    let inv = inverses_of(table);
    let mut subgroups: Vec<Vec<bool>> = Vec::new();
    for g in 0..n {
        let mut member = vec![false; n];
        let mut x = e;
        loop {
            member[x] = true;
            x = table[x][g];
            if x == e {
                break;
            }
        }
        if !subgroups.contains(&member) {
            subgroups.push(member);
        }
    }
    let conjugate = |h: &Vec<bool>, k: &Vec<bool>| {
        (0..n).any(|g| (0..n).filter(|&x| h[x]).all(|x| k[table[table[g][x]][inv[g]]]))
            && h.iter().filter(|&&b| b).count() == k.iter().filter(|&&b| b).count()
    };
    let mut reps: Vec<&Vec<bool>> = Vec::new();
    for h in &subgroups {
        if !reps.iter().any(|r| conjugate(r, h)) {
            reps.push(h);
        }
    }
    reps.len()
}

/// Every partition of `n`, as non-increasing part lists.
pub fn enumerate_partitions(n: usize) -> Vec<Vec<usize>> {
    fn go(remaining: usize, max_part: usize, prefix: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if remaining == 0 {
            out.push(prefix.clone());
            return;
        }
        for part in (1..=max_part.min(remaining)).rev() {
            prefix.push(part);
            go(remaining - part, part, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out
}

/// Rank by Gaussian elimination over exact rationals.
pub fn fraction_rank(rows: &[Vec<i64>]) -> usize {
    let mut a: Vec<Vec<BigRational>> = rows
        .iter()
        .map(|r| r.iter().map(|&x| BigRational::from_integer(BigInt::from(x))).collect())
        .collect();
    let cols = a.first().map_or(0, Vec::len);
    let mut rank = 0;
    for col in 0..cols {
        let Some(p) = (rank..a.len()).find(|&i| !a[i][col].is_zero()) else {
            continue;
        };
        a.swap(rank, p);
        let pivot_row = a[rank].clone();
        for (i, row) in a.iter_mut().enumerate() {
            if i == rank || row[col].is_zero() {
                continue;
            }
            let factor = &row[col] / &pivot_row[col];
            for (x, y) in row.iter_mut().zip(&pivot_row) {
                *x -= &factor * y;
            }
        }
        rank += 1;
    }
    rank
}
