//! Finite groups stored as dense Cayley tables.
//!
//! Elements are the indices `0..order`. Every builder fixes its element
//! ordering so that index maps written into model files stay valid:
//!
//! * `cyclic(n)`: index `k` is the `k`-th power of the generator.
//! * `dihedral(n)`: indices `0..n` are the rotations `r^k`, indices `n..2n`
//!   are the reflections `s r^k`.
//! * `symmetric(n)` and permutation closures: permutations in lexicographic
//!   order of their one-line notation, so the identity is index 0.
//! * `direct_product(g, h)`: the pair `(a, b)` has index `a * |h| + b`.
//!
//! Permutations compose left to right: `(a * b)(x) = b(a(x))`.

use std::collections::{BTreeSet, HashMap, VecDeque};

use crate::error::{Error, GroupViolation, Result};

/// Largest group order a builder will generate unless told otherwise.
pub const DEFAULT_ORDER_CAP: usize = 10_000;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteGroup {
    order: usize,
    table: Vec<u32>,
    identity: usize,
    inverse: Vec<usize>,
    label: String,
}

impl FiniteGroup {
    /// Validates a Cayley table (`table[a][b]` is the index of `a * b`) and
    /// discovers the identity and inverses.
    pub fn from_cayley_table(table: &[Vec<usize>], label: impl Into<String>) -> Result<Self> {
        let order = table.len();
        if order == 0 {
            return Err(Error::InvalidTable("table is empty".into()));
        }
        if order > u32::MAX as usize {
            return Err(Error::InvalidTable("table is too large".into()));
        }
        let mut flat = Vec::with_capacity(order * order);
        for (a, row) in table.iter().enumerate() {
            if row.len() != order {
                return Err(Error::InvalidTable(format!(
                    "row {a} has {} entries, expected {order}",
                    row.len()
                )));
            }
            for (b, &x) in row.iter().enumerate() {
                if x >= order {
                    return Err(Error::InvalidTable(format!(
                        "entry [{a}][{b}] = {x} is out of range"
                    )));
                }
                flat.push(x as u32);
            }
        }
        let at = |a: usize, b: usize| flat[a * order + b] as usize;

        for a in 0..order {
            for b in 0..order {
                let ab = at(a, b);
                for c in 0..order {
                    if at(ab, c) != at(a, at(b, c)) {
                        return Err(Error::NotAGroup(GroupViolation::NotAssociative { a, b, c }));
                    }
                }
            }
        }

        let identity = (0..order)
            .find(|&e| (0..order).all(|a| at(e, a) == a && at(a, e) == a))
            .ok_or(Error::NotAGroup(GroupViolation::NoIdentity))?;

        let inverse = (0..order)
            .map(|a| {
                (0..order)
                    .find(|&b| at(a, b) == identity && at(b, a) == identity)
                    .ok_or(Error::NotAGroup(GroupViolation::NoInverse(a)))
            })
            .collect::<Result<Vec<_>>>()?;

        Ok(Self {
            order,
            table: flat,
            identity,
            inverse,
            label: label.into(),
        })
    }

    /// The group generated by `generators`, each a permutation of `0..degree`
    /// in one-line notation.
    pub fn from_permutations(degree: usize, generators: &[Vec<usize>]) -> Result<Self> {
        Self::from_permutations_with_cap(degree, generators, DEFAULT_ORDER_CAP)
    }

    pub fn from_permutations_with_cap(
        degree: usize,
        generators: &[Vec<usize>],
        cap: usize,
    ) -> Result<Self> {
        let elements = permutation_closure(degree, generators, cap)?;
        let label = format!("perm({degree}; {} generators)", generators.len());
        Ok(Self::from_sorted_permutations(&elements, label))
    }

    /// Builds the table for a set of permutations already closed under
    /// composition and sorted lexicographically.
    fn from_sorted_permutations(elements: &[Vec<usize>], label: String) -> Self {
        let order = elements.len();
        let index: HashMap<&[usize], usize> = elements
            .iter()
            .enumerate()
            .map(|(i, p)| (p.as_slice(), i))
            .collect();
        let degree = elements[0].len();
        let mut table = Vec::with_capacity(order * order);
        let mut product = vec![0; degree];
        for a in elements {
            for b in elements {
                for (x, slot) in product.iter_mut().enumerate() {
                    *slot = b[a[x]];
                }
                table.push(index[product.as_slice()] as u32);
            }
        }
        Self::from_trusted_table(order, table, label)
    }

    /// Builds from a table known to be a group whose identity is index 0.
    fn from_trusted_table(order: usize, table: Vec<u32>, label: String) -> Self {
        let identity = 0;
        let mut inverse = vec![usize::MAX; order];
        for a in 0..order {
            let row = &table[a * order..(a + 1) * order];
            inverse[a] = row
                .iter()
                .position(|&x| x as usize == identity)
                .expect("every element of a group has an inverse");
        }
        Self {
            order,
            table,
            identity,
            inverse,
            label,
        }
    }

    pub fn trivial() -> Self {
        Self::from_trusted_table(1, vec![0], "trivial".into())
    }

    pub fn cyclic(n: usize) -> Result<Self> {
        Self::cyclic_with_cap(n, DEFAULT_ORDER_CAP)
    }

    pub fn cyclic_with_cap(n: usize, cap: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::ParameterOutOfRange("cyclic group needs n >= 1".into()));
        }
        if n > cap {
            return Err(Error::OrderBound { cap });
        }
        let table = (0..n)
            .flat_map(|a| (0..n).map(move |b| ((a + b) % n) as u32))
            .collect();
        Ok(Self::from_trusted_table(n, table, format!("cyclic:{n}")))
    }

    /// The symmetric group on `n` letters, elements in lexicographic order.
    pub fn symmetric(n: usize) -> Result<Self> {
        Self::symmetric_with_cap(n, DEFAULT_ORDER_CAP)
    }

    pub fn symmetric_with_cap(n: usize, cap: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::ParameterOutOfRange("symmetric group needs n >= 1".into()));
        }
        let mut order = 1usize;
        for k in 2..=n {
            order = order.checked_mul(k).ok_or(Error::OrderBound { cap })?;
            if order > cap {
                return Err(Error::OrderBound { cap });
            }
        }
        Ok(Self::from_sorted_permutations(
            &symmetric_elements(n),
            format!("symmetric:{n}"),
        ))
    }

    /// The dihedral group of order `2n`.
    pub fn dihedral(n: usize) -> Result<Self> {
        Self::dihedral_with_cap(n, DEFAULT_ORDER_CAP)
    }

    pub fn dihedral_with_cap(n: usize, cap: usize) -> Result<Self> {
        if n < 2 {
            return Err(Error::ParameterOutOfRange("dihedral group needs n >= 2".into()));
        }
        if 2 * n > cap {
            return Err(Error::OrderBound { cap });
        }
        // r^a r^b = r^(a+b), r^a s r^b = s r^(b-a), s r^a r^b = s r^(a+b), s r^a s r^b = r^(b-a)
        let mul = |x: usize, y: usize| -> usize {
            let (xs, xa) = (x >= n, x % n);
            let (ys, yb) = (y >= n, y % n);
            let exp = if ys { (yb + n - xa) % n } else { (xa + yb) % n };
            if xs != ys {
                n + exp
            } else {
                exp
            }
        };
        let table = (0..2 * n)
            .flat_map(|x| (0..2 * n).map(move |y| mul(x, y) as u32))
            .collect();
        Ok(Self::from_trusted_table(2 * n, table, format!("dihedral:{n}")))
    }

    pub fn direct_product(g: &Self, h: &Self) -> Result<Self> {
        Self::direct_product_with_cap(g, h, DEFAULT_ORDER_CAP)
    }

    pub fn direct_product_with_cap(g: &Self, h: &Self, cap: usize) -> Result<Self> {
        let order = g
            .order
            .checked_mul(h.order)
            .filter(|&o| o <= cap)
            .ok_or(Error::OrderBound { cap })?;
        let m = h.order;
        let mut table = Vec::with_capacity(order * order);
        for x in 0..order {
            for y in 0..order {
                let a = g.mul(x / m, y / m);
                let b = h.mul(x % m, y % m);
                table.push((a * m + b) as u32);
            }
        }
        let identity = g.identity * m + h.identity;
        let inverse = (0..order)
            .map(|x| g.inverse[x / m] * m + h.inverse[x % m])
            .collect();
        Ok(Self {
            order,
            table,
            identity,
            inverse,
            label: format!("product:({},{})", g.label, h.label),
        })
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn inverse(&self, a: usize) -> usize {
        self.inverse[a]
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a * self.order + b] as usize
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn with_label(mut self, label: impl Into<String>) -> Self {
        self.label = label.into();
        self
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.order
    }

    pub fn cayley_table(&self) -> Vec<Vec<usize>> {
        self.table
            .chunks(self.order)
            .map(|row| row.iter().map(|&x| x as usize).collect())
            .collect()
    }

    pub fn is_abelian(&self) -> bool {
        self.elements()
            .all(|a| (a + 1..self.order).all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    /// `g a g^-1`
    pub fn conjugate(&self, g: usize, a: usize) -> usize {
        self.mul(self.mul(g, a), self.inverse[g])
    }

    /// Elements of the cyclic subgroup generated by `a`, sorted.
    pub fn cyclic_subgroup(&self, a: usize) -> Vec<usize> {
        let mut members = vec![self.identity];
        let mut x = a;
        while x != self.identity {
            members.push(x);
            x = self.mul(x, a);
        }
        members.sort_unstable();
        members
    }

    pub fn element_order(&self, a: usize) -> usize {
        self.cyclic_subgroup(a).len()
    }

    /// Partitions the elements into conjugacy classes and records how
    /// inversion permutes the classes.
    pub fn conjugacy_data(&self) -> ConjugacyData {
        let mut class_of = vec![usize::MAX; self.order];
        let mut classes = Vec::new();
        // Start from the identity so it lands in class 0.
        let seeds = std::iter::once(self.identity).chain(self.elements());
        for x in seeds {
            if class_of[x] != usize::MAX {
                continue;
            }
            let id = classes.len();
            let mut members = Vec::new();
            for g in self.elements() {
                let y = self.conjugate(g, x);
                if class_of[y] == usize::MAX {
                    class_of[y] = id;
                    members.push(y);
                }
            }
            members.sort_unstable();
            classes.push(members);
        }
        let inversion_pairing = classes
            .iter()
            .map(|members| class_of[self.inverse[members[0]]])
            .collect();
        ConjugacyData {
            classes,
            class_of,
            inversion_pairing,
        }
    }

    /// One representative of every conjugacy class of cyclic subgroups.
    pub fn cyclic_subgroup_classes(&self) -> CyclicSubgroupClasses {
        let subgroups: BTreeSet<Vec<usize>> =
            self.elements().map(|a| self.cyclic_subgroup(a)).collect();
        let mut seen: BTreeSet<&Vec<usize>> = BTreeSet::new();
        let mut representatives = Vec::new();
        for sub in &subgroups {
            if seen.contains(sub) {
                continue;
            }
            for g in self.elements() {
                let mut image: Vec<usize> = sub.iter().map(|&a| self.conjugate(g, a)).collect();
                image.sort_unstable();
                if let Some(known) = subgroups.get(&image) {
                    seen.insert(known);
                }
            }
            representatives.push(sub.clone());
        }
        representatives.sort_by_key(|s| (s.len(), s.clone()));
        CyclicSubgroupClasses { representatives }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConjugacyData {
    /// Sorted members of each class; class 0 is the identity.
    pub classes: Vec<Vec<usize>>,
    pub class_of: Vec<usize>,
    /// Class index of the inverses of each class's members.
    pub inversion_pairing: Vec<usize>,
}

impl ConjugacyData {
    /// Number of conjugacy classes.
    pub fn k(&self) -> usize {
        self.classes.len()
    }

    /// Number of classes closed under inversion.
    pub fn m(&self) -> usize {
        self.inversion_pairing
            .iter()
            .enumerate()
            .filter(|&(c, &d)| c == d)
            .count()
    }

    pub fn class_sizes(&self) -> Vec<usize> {
        self.classes.iter().map(Vec::len).collect()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CyclicSubgroupClasses {
    pub representatives: Vec<Vec<usize>>,
}

impl CyclicSubgroupClasses {
    pub fn q(&self) -> usize {
        self.representatives.len()
    }
}

/// All permutations of `0..n` in lexicographic order.
pub fn symmetric_elements(n: usize) -> Vec<Vec<usize>> {
    let mut current: Vec<usize> = (0..n).collect();
    let mut all = vec![current.clone()];
    // next lexicographic permutation
    loop {
        let Some(i) = (1..n).rev().find(|&i| current[i - 1] < current[i]) else {
            return all;
        };
        let j = (i..n).rev().find(|&j| current[j] > current[i - 1]).unwrap();
        current.swap(i - 1, j);
        current[i..].reverse();
        all.push(current.clone());
    }
}

fn permutation_closure(degree: usize, generators: &[Vec<usize>], cap: usize) -> Result<Vec<Vec<usize>>> {
    for (i, g) in generators.iter().enumerate() {
        if g.len() != degree {
            return Err(Error::InvalidPermutation(format!(
                "generator {i} has length {}, expected {degree}",
                g.len()
            )));
        }
        let mut hit = vec![false; degree];
        for &x in g {
            if x >= degree || std::mem::replace(&mut hit[x], true) {
                return Err(Error::InvalidPermutation(format!(
                    "generator {i} is not a bijection on 0..{degree}"
                )));
            }
        }
    }
    let identity: Vec<usize> = (0..degree).collect();
    let mut found: BTreeSet<Vec<usize>> = BTreeSet::new();
    let mut queue = VecDeque::new();
    found.insert(identity.clone());
    queue.push_back(identity);
    while let Some(x) = queue.pop_front() {
        for g in generators {
            let y: Vec<usize> = x.iter().map(|&i| g[i]).collect();
            if !found.contains(&y) {
                if found.len() == cap {
                    return Err(Error::OrderBound { cap });
                }
                found.insert(y.clone());
                queue.push_back(y);
            }
        }
    }
    Ok(found.into_iter().collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn one_by_one_table_is_trivial() {
        let g = FiniteGroup::from_cayley_table(&[vec![0]], "t").unwrap();
        assert_eq!(g.order(), 1);
        assert_eq!(g.identity(), 0);
    }

    #[test]
    fn two_by_two_table_is_z2() {
        let g = FiniteGroup::from_cayley_table(&[vec![0, 1], vec![1, 0]], "z2").unwrap();
        assert_eq!(g.order(), 2);
        assert_eq!(g.inverse(1), 1);
    }

    #[test]
    fn non_associative_magma_is_rejected_with_triple() {
        // Z4 table with two entries swapped: 1*1 = 3 and 1*3 = 2.
        let mut t: Vec<Vec<usize>> = (0..4).map(|a| (0..4).map(|b| (a + b) % 4).collect()).collect();
        t[1][1] = 3;
        t[1][3] = 2;
        let err = FiniteGroup::from_cayley_table(&t, "bad").unwrap_err();
        let Error::NotAGroup(GroupViolation::NotAssociative { a, b, c }) = err else {
            panic!("unexpected error {err:?}");
        };
        assert_ne!(t[t[a][b]][c], t[a][t[b][c]]);
    }

    #[test]
    fn missing_identity_and_inverse() {
        // constant magma x*y = 0 is associative, but has no identity
        let t = vec![vec![0, 0], vec![0, 0]];
        assert_eq!(
            FiniteGroup::from_cayley_table(&t, "c").unwrap_err(),
            Error::NotAGroup(GroupViolation::NoIdentity)
        );
        // multiplicative monoid {1, 0}: identity 0 (the "1"), element 1 (the "0") has no inverse
        let t = vec![vec![0, 1], vec![1, 1]];
        assert_eq!(
            FiniteGroup::from_cayley_table(&t, "m").unwrap_err(),
            Error::NotAGroup(GroupViolation::NoInverse(1))
        );
    }

    #[test]
    fn malformed_tables() {
        assert!(matches!(
            FiniteGroup::from_cayley_table(&[], "e"),
            Err(Error::InvalidTable(_))
        ));
        assert!(matches!(
            FiniteGroup::from_cayley_table(&[vec![0, 1], vec![1]], "e"),
            Err(Error::InvalidTable(_))
        ));
        assert!(matches!(
            FiniteGroup::from_cayley_table(&[vec![0, 2], vec![1, 0]], "e"),
            Err(Error::InvalidTable(_))
        ));
    }

    #[test]
    fn permutation_closures() {
        let s3 = FiniteGroup::from_permutations(3, &[vec![1, 0, 2], vec![1, 2, 0]]).unwrap();
        assert_eq!(s3.order(), 6);
        assert!(!s3.is_abelian());
        assert_eq!(s3.cayley_table(), FiniteGroup::symmetric(3).unwrap().cayley_table());

        let triv = FiniteGroup::from_permutations(1, &[]).unwrap();
        assert_eq!(triv.order(), 1);

        let c4 = FiniteGroup::from_permutations(4, &[vec![1, 2, 3, 0]]).unwrap();
        assert_eq!(c4.order(), 4);
        assert!(c4.is_abelian());
        assert!(c4.elements().any(|a| c4.element_order(a) == 4));
    }

    #[test]
    fn permutation_errors() {
        assert!(matches!(
            FiniteGroup::from_permutations(3, &[vec![0, 0, 1]]),
            Err(Error::InvalidPermutation(_))
        ));
        assert!(matches!(
            FiniteGroup::from_permutations(3, &[vec![0, 1]]),
            Err(Error::InvalidPermutation(_))
        ));
        let s5_gens = [vec![1, 0, 2, 3, 4], vec![1, 2, 3, 4, 0]];
        assert_eq!(
            FiniteGroup::from_permutations_with_cap(5, &s5_gens, 100),
            Err(Error::OrderBound { cap: 100 })
        );
        assert_eq!(
            FiniteGroup::from_permutations_with_cap(5, &s5_gens, 120).unwrap().order(),
            120
        );
    }

    #[test]
    fn builders() {
        let c3 = FiniteGroup::cyclic(3).unwrap();
        assert_eq!(c3.order(), 3);
        assert!((1..3).all(|a| c3.element_order(a) == 3));
        assert_eq!(FiniteGroup::symmetric(4).unwrap().order(), 24);
        assert_eq!(FiniteGroup::dihedral(5).unwrap().order(), 10);
        assert!(FiniteGroup::symmetric(8).is_err());
        assert!(FiniteGroup::cyclic(0).is_err());
        assert!(FiniteGroup::dihedral(1).is_err());

        let c2 = FiniteGroup::cyclic(2).unwrap();
        let v4 = FiniteGroup::direct_product(&c2, &c2).unwrap();
        assert_eq!(v4.order(), 4);
        assert!(v4.elements().all(|a| v4.mul(a, a) == v4.identity()));
    }

    #[test]
    fn trusted_builders_pass_full_validation() {
        let groups = [
            FiniteGroup::trivial(),
            FiniteGroup::cyclic(6).unwrap(),
            FiniteGroup::dihedral(4).unwrap(),
            FiniteGroup::dihedral(2).unwrap(),
            FiniteGroup::symmetric(4).unwrap(),
            FiniteGroup::direct_product(
                &FiniteGroup::cyclic(3).unwrap(),
                &FiniteGroup::symmetric(3).unwrap(),
            )
            .unwrap(),
        ];
        for g in groups {
            let checked = FiniteGroup::from_cayley_table(&g.cayley_table(), g.label()).unwrap();
            assert_eq!(checked, g, "{}", g.label());
        }
    }

    #[test]
    fn dihedral_is_nonabelian_for_n_at_least_3() {
        assert!(FiniteGroup::dihedral(2).unwrap().is_abelian());
        assert!(!FiniteGroup::dihedral(3).unwrap().is_abelian());
    }

    #[test]
    fn conjugacy_examples() {
        let s3 = FiniteGroup::symmetric(3).unwrap().conjugacy_data();
        assert_eq!(s3.k(), 3);
        let mut sizes = s3.class_sizes();
        sizes.sort_unstable();
        assert_eq!(sizes, vec![1, 2, 3]);
        assert_eq!(s3.m(), 3);

        let z3 = FiniteGroup::cyclic(3).unwrap().conjugacy_data();
        assert_eq!((z3.k(), z3.m()), (3, 1));

        let t = FiniteGroup::trivial().conjugacy_data();
        assert_eq!((t.k(), t.m()), (1, 1));
    }

    #[test]
    fn identity_class_comes_first() {
        let g = FiniteGroup::symmetric(4).unwrap();
        let data = g.conjugacy_data();
        assert_eq!(data.classes[0], vec![g.identity()]);
    }

    #[test]
    fn cyclic_subgroup_class_counts() {
        assert_eq!(FiniteGroup::cyclic(2).unwrap().cyclic_subgroup_classes().q(), 2);
        assert_eq!(FiniteGroup::cyclic(3).unwrap().cyclic_subgroup_classes().q(), 2);
        assert_eq!(FiniteGroup::cyclic(12).unwrap().cyclic_subgroup_classes().q(), 6);
        assert_eq!(FiniteGroup::symmetric(3).unwrap().cyclic_subgroup_classes().q(), 3);
    }

    #[test]
    fn lexicographic_symmetric_elements() {
        let s3 = symmetric_elements(3);
        assert_eq!(s3.len(), 6);
        assert_eq!(s3[0], vec![0, 1, 2]);
        assert_eq!(s3[5], vec![2, 1, 0]);
        assert!(s3.windows(2).all(|w| w[0] < w[1]));
        assert_eq!(symmetric_elements(1), vec![vec![0]]);
    }
}
