use std::collections::{HashMap, VecDeque};

use crate::error::{Error, Result};
use crate::numtheory::lcm;

use super::perm::Permutation;

/// Default limit on the number of group elements materialized.
pub const DEFAULT_ORDER_BOUND: usize = 2500;

/// A finite permutation group with all of its elements enumerated.
///
/// Elements are numbered in breadth-first word order over the generators,
/// starting from the identity at index 0. A full multiplication table is kept,
/// so every group-theoretic routine in this crate works on element indices.
#[derive(Clone)]
pub struct PermGroup {
    degree: usize,
    generators: Vec<Permutation>,
    elements: Vec<Permutation>,
    index: HashMap<Permutation, usize>,
    table: Vec<u32>,
    inverses: Vec<usize>,
    orders: Vec<usize>,
}

impl std::fmt::Debug for PermGroup {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("PermGroup")
            .field("degree", &self.degree)
            .field("order", &self.order())
            .field("generators", &self.generators)
            .finish()
    }
}

impl PermGroup {
    pub fn from_generators(generators: Vec<Permutation>, bound: usize) -> Result<Self> {
        let degree = match generators.first() {
            Some(g) => g.degree(),
            None => 1,
        };
        Self::with_degree(degree, generators, bound)
    }

    /// Like [`from_generators`](Self::from_generators) but with an explicit
    /// degree, so an empty generator list yields the trivial group on
    /// `degree` points.
    pub fn with_degree(degree: usize, generators: Vec<Permutation>, bound: usize) -> Result<Self> {
        for g in &generators {
            if g.degree() != degree {
                return Err(Error::DegreeMismatch(degree, g.degree()));
            }
        }
        let identity = Permutation::identity(degree);
        let mut elements = vec![identity.clone()];
        let mut index = HashMap::new();
        index.insert(identity, 0usize);
        // right multiplication by each generator, filled during the BFS
        let ngens = generators.len();
        let mut rmul: Vec<u32> = Vec::new();
        let mut parent: Vec<(usize, usize)> = vec![(0, usize::MAX)];
        let mut queue = VecDeque::from([0usize]);
        while let Some(i) = queue.pop_front() {
            for (k, g) in generators.iter().enumerate() {
                let prod = elements[i].compose(g);
                let j = match index.get(&prod) {
                    Some(&j) => j,
                    None => {
                        let j = elements.len();
                        if j >= bound {
                            return Err(Error::OrderBoundExceeded(bound));
                        }
                        index.insert(prod.clone(), j);
                        elements.push(prod);
                        parent.push((i, k));
                        queue.push_back(j);
                        j
                    }
                };
                if rmul.len() < (i + 1) * ngens {
                    rmul.resize((i + 1) * ngens, 0);
                }
                rmul[i * ngens + k] = j as u32;
            }
        }
        let n = elements.len();
        let mut table = vec![0u32; n * n];
        for i in 0..n {
            table[i * n] = i as u32;
            for j in 1..n {
                let (pj, k) = parent[j];
                let left = table[i * n + pj] as usize;
                table[i * n + j] = rmul[left * ngens + k];
            }
        }
        let mut group = Self {
            degree,
            generators,
            elements,
            index,
            table,
            inverses: Vec::new(),
            orders: Vec::new(),
        };
        group.fill_orders_and_inverses();
        Ok(group)
    }

    fn fill_orders_and_inverses(&mut self) {
        let n = self.order();
        self.orders = vec![0; n];
        self.inverses = vec![0; n];
        for i in 0..n {
            let mut x = i;
            let mut k = 1;
            let mut prev = 0;
            while x != 0 {
                prev = x;
                x = self.mul(x, i);
                k += 1;
            }
            // loop exits with x = a^k = 1, so prev = a^(k-1) is the inverse
            self.orders[i] = k;
            self.inverses[i] = prev;
        }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    pub fn elements(&self) -> &[Permutation] {
        &self.elements
    }

    pub fn element(&self, i: usize) -> &Permutation {
        &self.elements[i]
    }

    pub fn index_of(&self, p: &Permutation) -> Option<usize> {
        self.index.get(p).copied()
    }

    pub fn identity(&self) -> usize {
        0
    }

    /// Index of `e_a * e_b`.
    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a * self.order() + b] as usize
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.inverses[a]
    }

    pub fn element_order(&self, a: usize) -> usize {
        self.orders[a]
    }

    pub fn pow(&self, a: usize, e: i64) -> usize {
        let ord = self.orders[a] as i64;
        let e = e.rem_euclid(ord);
        let mut acc = 0;
        for _ in 0..e {
            acc = self.mul(acc, a);
        }
        acc
    }

    /// `g x g^-1`.
    pub fn conjugate(&self, g: usize, x: usize) -> usize {
        self.mul(self.mul(g, x), self.inv(g))
    }

    /// `a^-1 b^-1 a b`.
    pub fn commutator(&self, a: usize, b: usize) -> usize {
        let ab = self.mul(a, b);
        let ba = self.mul(b, a);
        self.mul(self.inv(ba), ab)
    }

    pub fn exponent(&self) -> usize {
        self.orders.iter().fold(1u64, |acc, &o| lcm(acc, o as u64)) as usize
    }

    pub fn generator_indices(&self) -> Vec<usize> {
        self.generators
            .iter()
            .map(|g| self.index[g])
            .collect()
    }

    pub fn is_abelian(&self) -> bool {
        let gens = self.generator_indices();
        gens.iter()
            .all(|&a| gens.iter().all(|&b| self.mul(a, b) == self.mul(b, a)))
    }

    /// Subgroup generated by the given elements, as a sorted index set.
    pub fn closure(&self, gens: &[usize]) -> Vec<usize> {
        let n = self.order();
        let mut member = vec![false; n];
        member[0] = true;
        let mut out = vec![0usize];
        let mut head = 0;
        let gens: Vec<usize> = gens.iter().copied().filter(|&g| g != 0).collect();
        while head < out.len() {
            let x = out[head];
            head += 1;
            for &g in &gens {
                let y = self.mul(x, g);
                if !member[y] {
                    member[y] = true;
                    out.push(y);
                }
            }
        }
        out.sort_unstable();
        out
    }

    /// Whether a sorted index set is closed under products (finite, so a subgroup).
    pub fn is_subgroup(&self, set: &[usize]) -> bool {
        if set.first() != Some(&0) {
            return false;
        }
        let member = self.membership(set);
        set.iter()
            .all(|&a| set.iter().all(|&b| member[self.mul(a, b)]))
    }

    pub fn membership(&self, set: &[usize]) -> Vec<bool> {
        let mut member = vec![false; self.order()];
        for &x in set {
            member[x] = true;
        }
        member
    }

    /// A small generating set for a subgroup given by its elements.
    pub fn generators_of(&self, set: &[usize]) -> Vec<usize> {
        let mut gens = Vec::new();
        let mut current = vec![0usize];
        let mut member = self.membership(&current);
        for &x in set {
            if !member[x] {
                gens.push(x);
                current = self.closure(&gens);
                member = self.membership(&current);
                if current.len() == set.len() {
                    break;
                }
            }
        }
        gens
    }

    /// The subgroup on `set` as a standalone permutation group on the same points.
    pub fn subgroup(&self, set: &[usize]) -> Result<PermGroup> {
        let gens = self
            .generators_of(set)
            .into_iter()
            .map(|i| self.elements[i].clone())
            .collect();
        PermGroup::with_degree(self.degree, gens, set.len().max(1) + 1)
    }
}

pub fn group_from_generators(gens: Vec<Permutation>, bound: usize) -> Result<PermGroup> {
    PermGroup::from_generators(gens, bound)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::permcore::perm::perm_from_cycles;

    fn perm(cycles: &[&[usize]], degree: usize) -> Permutation {
        let cycles: Vec<Vec<usize>> = cycles.iter().map(|c| c.to_vec()).collect();
        perm_from_cycles(&cycles, degree).unwrap()
    }

    #[test]
    fn s4_order() {
        let g = group_from_generators(
            vec![perm(&[&[0, 1, 2, 3]], 4), perm(&[&[0, 1]], 4)],
            DEFAULT_ORDER_BOUND,
        )
        .unwrap();
        assert_eq!(g.order(), 24);
        assert_eq!(g.exponent(), 12);
    }

    #[test]
    fn a5_order() {
        let g = group_from_generators(
            vec![perm(&[&[0, 1, 2, 3, 4]], 5), perm(&[&[0, 1, 2]], 5)],
            DEFAULT_ORDER_BOUND,
        )
        .unwrap();
        assert_eq!(g.order(), 60);
    }

    #[test]
    fn metacyclic_21_relation() {
        let a = perm(&[&[0, 1, 2, 3, 4, 5, 6]], 7);
        let b = perm(&[&[1, 2, 4], &[3, 6, 5]], 7);
        let g = group_from_generators(vec![a.clone(), b.clone()], DEFAULT_ORDER_BOUND).unwrap();
        assert_eq!(g.order(), 21);
        let lhs = b.compose(&a).compose(&b.inverse());
        assert_eq!(lhs, a.compose(&a));
    }

    #[test]
    fn bound_is_enforced() {
        let r = group_from_generators(
            vec![perm(&[&[0, 1, 2, 3, 4]], 5), perm(&[&[0, 1]], 5)],
            100,
        );
        assert_eq!(r.unwrap_err(), Error::OrderBoundExceeded(100));
    }

    #[test]
    fn table_agrees_with_composition() {
        let g = group_from_generators(
            vec![perm(&[&[0, 1, 2, 3]], 4), perm(&[&[0, 1]], 4)],
            DEFAULT_ORDER_BOUND,
        )
        .unwrap();
        for a in 0..g.order() {
            assert_eq!(g.mul(a, g.inv(a)), 0);
            for b in 0..g.order() {
                let p = g.element(a).compose(g.element(b));
                assert_eq!(g.index_of(&p), Some(g.mul(a, b)));
            }
        }
    }

    #[test]
    fn trivial_group() {
        let g = PermGroup::with_degree(3, vec![], DEFAULT_ORDER_BOUND).unwrap();
        assert_eq!(g.order(), 1);
        assert_eq!(g.exponent(), 1);
    }
}
