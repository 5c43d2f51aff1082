//! Subgroup, quotient and structure computations on enumerated groups.
//!
//! Subgroups are represented as sorted vectors of element indices of the
//! ambient [`PermGroup`].

use std::collections::HashSet;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::numtheory::{prime_divisors, prime_power_base};

use super::classes::ClassData;
use super::group::PermGroup;
use super::perm::Permutation;

/// Class-count limit for [`normal_subgroups`].
pub const NORMAL_SUBGROUP_CLASS_LIMIT: usize = 64;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum DerivedLength {
    Solvable(usize),
    Unsolvable,
}

impl DerivedLength {
    pub fn is_solvable(self) -> bool {
        matches!(self, DerivedLength::Solvable(_))
    }

    pub fn value(self) -> Option<usize> {
        match self {
            DerivedLength::Solvable(d) => Some(d),
            DerivedLength::Unsolvable => None,
        }
    }
}

impl std::fmt::Display for DerivedLength {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            DerivedLength::Solvable(d) => write!(f, "{d}"),
            DerivedLength::Unsolvable => write!(f, "unsolvable"),
        }
    }
}

impl Serialize for DerivedLength {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            DerivedLength::Solvable(d) => s.serialize_u64(*d as u64),
            DerivedLength::Unsolvable => s.serialize_str("unsolvable"),
        }
    }
}

#[derive(Debug, Clone)]
pub struct DerivedSeries {
    /// `G ⊇ G' ⊇ G'' ⊇ ...`, ending at the first repeated term.
    pub terms: Vec<Vec<usize>>,
    pub length: DerivedLength,
}

/// Commutator subgroup of the subgroup `h` of `group`.
pub fn derived_subgroup(group: &PermGroup, h: &[usize]) -> Vec<usize> {
    let mut seen = vec![false; group.order()];
    let mut comms = Vec::new();
    for &a in h {
        for &b in h {
            let c = group.commutator(a, b);
            if !seen[c] {
                seen[c] = true;
                comms.push(c);
            }
        }
    }
    group.closure(&comms)
}

pub fn derived_series(group: &PermGroup) -> DerivedSeries {
    let mut terms = vec![(0..group.order()).collect::<Vec<_>>()];
    loop {
        let last = terms.last().unwrap();
        if last.len() == 1 {
            let length = DerivedLength::Solvable(terms.len() - 1);
            return DerivedSeries { terms, length };
        }
        let next = derived_subgroup(group, last);
        if next.len() == last.len() {
            return DerivedSeries {
                terms,
                length: DerivedLength::Unsolvable,
            };
        }
        terms.push(next);
    }
}

pub fn centralizer(group: &PermGroup, x: usize) -> Vec<usize> {
    (0..group.order())
        .filter(|&g| group.mul(g, x) == group.mul(x, g))
        .collect()
}

pub fn center(group: &PermGroup) -> Vec<usize> {
    let gens = group.generator_indices();
    (0..group.order())
        .filter(|&z| gens.iter().all(|&g| group.mul(g, z) == group.mul(z, g)))
        .collect()
}

pub fn is_abelian_set(group: &PermGroup, set: &[usize]) -> bool {
    set.iter()
        .all(|&a| set.iter().all(|&b| group.mul(a, b) == group.mul(b, a)))
}

pub fn is_cyclic_set(group: &PermGroup, set: &[usize]) -> bool {
    set.iter().any(|&x| group.element_order(x) == set.len())
}

pub fn is_normal(group: &PermGroup, set: &[usize]) -> bool {
    if !group.is_subgroup(set) {
        return false;
    }
    let member = group.membership(set);
    let gens = group.generator_indices();
    set.iter()
        .all(|&x| gens.iter().all(|&g| member[group.conjugate(g, x)]))
}

/// Smallest normal subgroup containing `set`.
pub fn normal_closure(group: &PermGroup, set: &[usize]) -> Vec<usize> {
    let gens = group.generator_indices();
    let mut current = group.closure(set);
    loop {
        let member = group.membership(&current);
        let extra: Vec<usize> = current
            .iter()
            .flat_map(|&x| gens.iter().map(move |&g| (g, x)))
            .map(|(g, x)| group.conjugate(g, x))
            .filter(|&y| !member[y])
            .collect();
        if extra.is_empty() {
            return current;
        }
        let mut seeds = current.clone();
        seeds.extend(extra);
        current = group.closure(&seeds);
    }
}

/// Product `AB` of two normal subgroups.
fn join_normal(group: &PermGroup, a: &[usize], b: &[usize]) -> Vec<usize> {
    let mut member = vec![false; group.order()];
    let mut out = Vec::with_capacity(a.len() * b.len());
    for &x in a {
        for &y in b {
            let z = group.mul(x, y);
            if !member[z] {
                member[z] = true;
                out.push(z);
            }
        }
    }
    out.sort_unstable();
    out
}

/// Every normal subgroup, sorted by order and then by element indices.
///
/// Each normal subgroup is the join of the normal closures of the classes it
/// contains, so the set is generated by closing `{1}` under joins with the
/// class closures.
pub fn normal_subgroups(group: &PermGroup, classes: &ClassData) -> Result<Vec<Vec<usize>>> {
    normal_subgroups_with_limit(group, classes, NORMAL_SUBGROUP_CLASS_LIMIT)
}

pub fn normal_subgroups_with_limit(
    group: &PermGroup,
    classes: &ClassData,
    limit: usize,
) -> Result<Vec<Vec<usize>>> {
    if classes.len() > limit {
        return Err(Error::TooManyClasses {
            count: classes.len(),
            limit,
        });
    }
    let mut closures: Vec<Vec<usize>> = (1..classes.len())
        .map(|c| group.closure(&classes.classes[c]))
        .collect();
    closures.sort();
    closures.dedup();
    let trivial = vec![0usize];
    let mut found: HashSet<Vec<usize>> = HashSet::from([trivial.clone()]);
    let mut frontier = vec![trivial];
    while let Some(n) = frontier.pop() {
        let member = group.membership(&n);
        for c in &closures {
            if c.iter().all(|&x| member[x]) {
                continue;
            }
            let joined = join_normal(group, &n, c);
            if found.insert(joined.clone()) {
                frontier.push(joined);
            }
        }
    }
    let mut out: Vec<Vec<usize>> = found.into_iter().collect();
    out.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    Ok(out)
}

/// Nontrivial normal subgroups containing no smaller nontrivial normal subgroup.
pub fn minimal_normal_subgroups(normals: &[Vec<usize>]) -> Vec<Vec<usize>> {
    let nontrivial: Vec<&Vec<usize>> = normals.iter().filter(|n| n.len() > 1).collect();
    nontrivial
        .iter()
        .filter(|n| {
            !nontrivial
                .iter()
                .any(|m| m.len() < n.len() && m.iter().all(|x| n.binary_search(x).is_ok()))
        })
        .map(|n| (*n).clone())
        .collect()
}

/// Subgroup generated by all minimal normal subgroups.
pub fn socle(group: &PermGroup, normals: &[Vec<usize>]) -> Vec<usize> {
    minimal_normal_subgroups(normals)
        .iter()
        .fold(vec![0usize], |acc, m| join_normal(group, &acc, m))
}

/// A quotient realized as the action on cosets, with the projection map.
#[derive(Debug, Clone)]
pub struct Quotient {
    pub group: PermGroup,
    /// Element index in `G` to element index in `G/N`.
    pub projection: Vec<usize>,
}

pub fn quotient(group: &PermGroup, normal: &[usize]) -> Result<Quotient> {
    if !is_normal(group, normal) {
        return Err(Error::NotNormal);
    }
    let n = group.order();
    let mut coset_of = vec![usize::MAX; n];
    let mut reps = Vec::new();
    for x in 0..n {
        if coset_of[x] != usize::MAX {
            continue;
        }
        for &m in normal {
            coset_of[group.mul(x, m)] = reps.len();
        }
        reps.push(x);
    }
    let degree = reps.len();
    let action = |g: usize| -> Permutation {
        let images = reps.iter().map(|&r| coset_of[group.mul(g, r)]).collect();
        Permutation::from_images(images).expect("coset action is a bijection")
    };
    let gens: Vec<Permutation> = group
        .generator_indices()
        .into_iter()
        .map(action)
        .filter(|p| !p.is_identity())
        .collect();
    let q = PermGroup::with_degree(degree, gens, degree + 1)?;
    let projection = (0..n)
        .map(|g| q.index_of(&action(g)).expect("image lies in the quotient"))
        .collect();
    Ok(Quotient {
        group: q,
        projection,
    })
}

pub fn quotient_group(group: &PermGroup, normal: &[usize]) -> Result<PermGroup> {
    quotient(group, normal).map(|q| q.group)
}

/// `H × K` acting on the disjoint union of the two point sets.
pub fn direct_product(h: &PermGroup, k: &PermGroup, bound: usize) -> Result<PermGroup> {
    let degree = h.degree() + k.degree();
    if h.order().saturating_mul(k.order()) > bound {
        return Err(Error::OrderBoundExceeded(bound));
    }
    let gens = h
        .generators()
        .iter()
        .map(|g| g.shifted(0, degree))
        .chain(k.generators().iter().map(|g| g.shifted(h.degree(), degree)))
        .collect();
    PermGroup::with_degree(degree, gens, bound)
}

/// Ascending central series reaches the whole group.
pub fn is_nilpotent(group: &PermGroup) -> bool {
    let gens = group.generator_indices();
    let mut current = vec![0usize];
    loop {
        let member = group.membership(&current);
        let next: Vec<usize> = (0..group.order())
            .filter(|&x| gens.iter().all(|&g| member[group.commutator(x, g)]))
            .collect();
        if next.len() == group.order() {
            return true;
        }
        if next.len() == current.len() {
            return false;
        }
        current = next;
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FrobeniusDecomposition {
    pub kernel: Vec<usize>,
    pub complement: Vec<usize>,
}

#[derive(Debug, Clone)]
pub struct StructureFlags {
    pub is_abelian: bool,
    pub elementary_abelian_prime: Option<u64>,
    pub is_nilpotent: bool,
    pub p_group_prime: Option<u64>,
    pub is_extraspecial: bool,
    /// `O_p(G)` for each prime dividing the order.
    pub largest_normal_p_subgroups: Vec<(u64, Vec<usize>)>,
    pub frobenius: Option<FrobeniusDecomposition>,
}

impl StructureFlags {
    pub fn o_p(&self, p: u64) -> Option<&[usize]> {
        self.largest_normal_p_subgroups
            .iter()
            .find(|(q, _)| *q == p)
            .map(|(_, s)| s.as_slice())
    }
}

/// Serializable digest of [`StructureFlags`].
#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct FlagsSummary {
    pub is_abelian: bool,
    pub elementary_abelian_prime: Option<u64>,
    pub is_nilpotent: bool,
    pub p_group_prime: Option<u64>,
    pub is_extraspecial: bool,
    pub o_p_orders: Vec<(u64, usize)>,
    pub frobenius_kernel_order: Option<usize>,
    pub frobenius_complement_order: Option<usize>,
}

impl From<&StructureFlags> for FlagsSummary {
    fn from(f: &StructureFlags) -> Self {
        Self {
            is_abelian: f.is_abelian,
            elementary_abelian_prime: f.elementary_abelian_prime,
            is_nilpotent: f.is_nilpotent,
            p_group_prime: f.p_group_prime,
            is_extraspecial: f.is_extraspecial,
            o_p_orders: f
                .largest_normal_p_subgroups
                .iter()
                .map(|(p, s)| (*p, s.len()))
                .collect(),
            frobenius_kernel_order: f.frobenius.as_ref().map(|d| d.kernel.len()),
            frobenius_complement_order: f.frobenius.as_ref().map(|d| d.complement.len()),
        }
    }
}

/// `Some(p)` when the subgroup is elementary abelian of exponent `p`.
pub fn elementary_abelian_prime(group: &PermGroup, set: &[usize]) -> Option<u64> {
    if set.len() < 2 || !is_abelian_set(group, set) {
        return None;
    }
    let p = prime_power_base(set.len() as u64)?;
    set.iter()
        .all(|&x| x == 0 || group.element_order(x) as u64 == p)
        .then_some(p)
}

pub fn is_extraspecial(group: &PermGroup) -> bool {
    let Some(p) = prime_power_base(group.order() as u64) else {
        return false;
    };
    let z = center(group);
    if z.len() as u64 != p {
        return false;
    }
    let all: Vec<usize> = (0..group.order()).collect();
    if derived_subgroup(group, &all) != z {
        return false;
    }
    let member = group.membership(&z);
    (0..group.order()).all(|x| member[group.pow(x, p as i64)])
}

fn frobenius_complement(group: &PermGroup, kernel: &[usize]) -> Option<Vec<usize>> {
    let m = group.order() / kernel.len();
    let in_kernel = group.membership(kernel);
    let mut gens: Vec<usize> = Vec::new();
    let mut h = vec![0usize];
    for x in 0..group.order() {
        if h.len() == m {
            break;
        }
        if in_kernel[x] || m % group.element_order(x) != 0 || h.binary_search(&x).is_ok() {
            continue;
        }
        gens.push(x);
        let candidate = group.closure(&gens);
        if candidate.len() <= m && candidate.iter().all(|&y| y == 0 || !in_kernel[y]) {
            h = candidate;
        } else {
            gens.pop();
        }
    }
    (h.len() == m).then_some(h)
}

/// First proper nontrivial normal subgroup (largest first) that is a
/// Frobenius kernel with a complement.
pub fn frobenius_decomposition(
    group: &PermGroup,
    normals: &[Vec<usize>],
) -> Option<FrobeniusDecomposition> {
    let n = group.order();
    for kernel in normals.iter().rev() {
        if kernel.len() == n || kernel.len() == 1 {
            continue;
        }
        let in_kernel = group.membership(kernel);
        let centralizers_inside = kernel[1..].iter().all(|&k| {
            (0..n)
                .filter(|&g| group.mul(g, k) == group.mul(k, g))
                .all(|g| in_kernel[g])
        });
        if !centralizers_inside {
            continue;
        }
        if let Some(complement) = frobenius_complement(group, kernel) {
            return Some(FrobeniusDecomposition {
                kernel: kernel.clone(),
                complement,
            });
        }
    }
    None
}

pub fn structure_flags(group: &PermGroup, classes: &ClassData) -> Result<StructureFlags> {
    let normals = normal_subgroups(group, classes)?;
    Ok(structure_flags_with(group, &normals))
}

pub fn structure_flags_with(group: &PermGroup, normals: &[Vec<usize>]) -> StructureFlags {
    let order = group.order() as u64;
    let all: Vec<usize> = (0..group.order()).collect();
    let is_abelian = group.is_abelian();
    let largest_normal_p_subgroups = prime_divisors(order)
        .into_iter()
        .map(|p| {
            let best = normals
                .iter()
                .filter(|s| s.len() == 1 || prime_power_base(s.len() as u64) == Some(p))
                .max_by_key(|s| s.len())
                .cloned()
                .unwrap_or_else(|| vec![0]);
            (p, best)
        })
        .collect();
    StructureFlags {
        is_abelian,
        elementary_abelian_prime: elementary_abelian_prime(group, &all),
        is_nilpotent: is_abelian || is_nilpotent(group),
        p_group_prime: prime_power_base(order),
        is_extraspecial: !is_abelian && is_extraspecial(group),
        largest_normal_p_subgroups,
        frobenius: frobenius_decomposition(group, normals),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::permcore::classes::conjugacy_classes;
    use crate::permcore::group::{group_from_generators, DEFAULT_ORDER_BOUND};
    use crate::permcore::perm::perm_from_cycles;

    fn grp(gens: &[&[&[usize]]], degree: usize) -> PermGroup {
        let gens = gens
            .iter()
            .map(|cs| {
                let cs: Vec<Vec<usize>> = cs.iter().map(|c| c.to_vec()).collect();
                perm_from_cycles(&cs, degree).unwrap()
            })
            .collect();
        group_from_generators(gens, DEFAULT_ORDER_BOUND).unwrap()
    }

    fn s4() -> PermGroup {
        grp(&[&[&[0, 1, 2, 3]], &[&[0, 1]]], 4)
    }

    fn a5() -> PermGroup {
        grp(&[&[&[0, 1, 2, 3, 4]], &[&[0, 1, 2]]], 5)
    }

    fn q8() -> PermGroup {
        grp(
            &[&[&[0, 1, 2, 3], &[4, 5, 6, 7]], &[&[0, 4, 2, 6], &[1, 7, 3, 5]]],
            8,
        )
    }

    fn brute_classes(g: &PermGroup) -> Vec<usize> {
        let mut seen = vec![false; g.order()];
        let mut sizes = Vec::new();
        for x in 0..g.order() {
            if seen[x] {
                continue;
            }
            let mut orbit: Vec<usize> = (0..g.order())
                .map(|h| {
                    let p = g.element(h).compose(g.element(x)).compose(&g.element(h).inverse());
                    g.index_of(&p).unwrap()
                })
                .collect();
            orbit.sort_unstable();
            orbit.dedup();
            for &y in &orbit {
                seen[y] = true;
            }
            sizes.push(orbit.len());
        }
        sizes
    }

    #[test]
    fn s4_classes_match_brute_force() {
        let g = s4();
        let c = conjugacy_classes(&g);
        let mut sizes = c.class_sizes.clone();
        sizes.sort_unstable();
        assert_eq!(sizes, vec![1, 3, 6, 6, 8]);
        let mut brute = brute_classes(&g);
        brute.sort_unstable();
        assert_eq!(sizes, brute);
        assert_eq!(c.class_sizes.iter().sum::<usize>(), 24);
        for i in 0..c.len() {
            assert_eq!(c.inverse_class[c.inverse_class[i]], i);
            assert_eq!(c.power_class(i, 1), i);
        }
    }

    #[test]
    fn a5_classes() {
        let g = a5();
        let c = conjugacy_classes(&g);
        assert_eq!(c.len(), 5);
        let twelve = c
            .class_sizes
            .iter()
            .zip(&c.element_orders)
            .filter(|&(&s, &o)| s == 12 && o == 5)
            .count();
        assert_eq!(twelve, 2);
    }

    #[test]
    fn abelian_classes_are_singletons() {
        let g = grp(&[&[&[0, 1, 2, 3, 4, 5]]], 6);
        let c = conjugacy_classes(&g);
        assert_eq!(c.len(), 6);
    }

    #[test]
    fn derived_series_examples() {
        let s = derived_series(&s4());
        let sizes: Vec<usize> = s.terms.iter().map(Vec::len).collect();
        assert_eq!(sizes, vec![24, 12, 4, 1]);
        assert_eq!(s.length, DerivedLength::Solvable(3));
        assert_eq!(derived_series(&a5()).length, DerivedLength::Unsolvable);
        let c6 = grp(&[&[&[0, 1, 2, 3, 4, 5]]], 6);
        assert_eq!(derived_series(&c6).length, DerivedLength::Solvable(1));
    }

    #[test]
    fn centers() {
        assert_eq!(center(&q8()).len(), 2);
        assert_eq!(center(&s4()), vec![0]);
        let c6 = grp(&[&[&[0, 1, 2, 3, 4, 5]]], 6);
        assert_eq!(center(&c6).len(), 6);
    }

    #[test]
    fn normal_subgroups_examples() {
        let g = s4();
        let c = conjugacy_classes(&g);
        let ns = normal_subgroups(&g, &c).unwrap();
        let sizes: Vec<usize> = ns.iter().map(Vec::len).collect();
        assert_eq!(sizes, vec![1, 4, 12, 24]);

        let g = a5();
        let c = conjugacy_classes(&g);
        assert_eq!(normal_subgroups(&g, &c).unwrap().len(), 2);

        let v4 = grp(&[&[&[0, 1]], &[&[2, 3]]], 4);
        let c = conjugacy_classes(&v4);
        assert_eq!(normal_subgroups(&v4, &c).unwrap().len(), 5);
    }

    #[test]
    fn normal_subgroups_match_class_union_search() {
        // exhaustive class-union oracle on S4 and Q8
        for g in [s4(), q8()] {
            let c = conjugacy_classes(&g);
            let k = c.len();
            let mut oracle = Vec::new();
            for mask in 0u32..(1 << (k - 1)) {
                let mut ids = vec![0];
                ids.extend((1..k).filter(|i| mask & (1 << (i - 1)) != 0));
                let set = c.union_elements(&ids);
                if g.order() % set.len() == 0 && g.is_subgroup(&set) {
                    oracle.push(set);
                }
            }
            oracle.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
            assert_eq!(normal_subgroups(&g, &c).unwrap(), oracle);
        }
    }

    #[test]
    fn too_many_classes_guard() {
        let g = s4();
        let c = conjugacy_classes(&g);
        assert_eq!(
            normal_subgroups_with_limit(&g, &c, 4),
            Err(Error::TooManyClasses { count: 5, limit: 4 })
        );
    }

    #[test]
    fn quotient_examples() {
        let g = s4();
        let c = conjugacy_classes(&g);
        let ns = normal_subgroups(&g, &c).unwrap();
        let v4 = &ns[1];
        let q = quotient_group(&g, v4).unwrap();
        assert_eq!(q.order(), 6);
        assert_eq!(conjugacy_classes(&q).len(), 3);
        let whole: Vec<usize> = (0..24).collect();
        assert_eq!(quotient_group(&g, &whole).unwrap().order(), 1);
        let trivial = quotient_group(&g, &[0]).unwrap();
        assert_eq!(trivial.order(), 24);
        let mut a = conjugacy_classes(&trivial).class_sizes;
        let mut b = c.class_sizes.clone();
        a.sort_unstable();
        b.sort_unstable();
        assert_eq!(a, b);
        // a point stabilizer S3 is not normal
        let stab: Vec<usize> = (0..24).filter(|&x| g.element(x).image(3) == 3).collect();
        assert_eq!(quotient_group(&g, &stab).unwrap_err(), Error::NotNormal);
    }

    #[test]
    fn quotient_projection_is_homomorphism() {
        let g = s4();
        let c = conjugacy_classes(&g);
        let ns = normal_subgroups(&g, &c).unwrap();
        let q = quotient(&g, &ns[2]).unwrap();
        for a in 0..24 {
            for b in 0..24 {
                assert_eq!(
                    q.projection[g.mul(a, b)],
                    q.group.mul(q.projection[a], q.projection[b])
                );
            }
        }
    }

    #[test]
    fn direct_products() {
        let c2 = grp(&[&[&[0, 1]]], 2);
        let c3 = grp(&[&[&[0, 1, 2]]], 3);
        let p = direct_product(&c2, &c3, DEFAULT_ORDER_BOUND).unwrap();
        assert_eq!(p.order(), 6);
        assert!(p.is_abelian());

        let d8 = grp(&[&[&[0, 1, 2, 3]], &[&[1, 3]]], 4);
        let p = direct_product(&d8, &c2, DEFAULT_ORDER_BOUND).unwrap();
        assert_eq!(p.order(), 16);
        assert_eq!(conjugacy_classes(&p).len(), 10);

        let trivial = PermGroup::with_degree(1, vec![], 10).unwrap();
        let p = direct_product(&d8, &trivial, DEFAULT_ORDER_BOUND).unwrap();
        assert_eq!(p.order(), 8);
        assert_eq!(
            direct_product(&d8, &d8, 10).unwrap_err(),
            Error::OrderBoundExceeded(10)
        );
    }

    #[test]
    fn flags_examples() {
        let s3 = grp(&[&[&[0, 1, 2]], &[&[0, 1]]], 3);
        let f = structure_flags(&s3, &conjugacy_classes(&s3)).unwrap();
        let frob = f.frobenius.unwrap();
        assert_eq!(frob.kernel.len(), 3);
        assert_eq!(frob.complement.len(), 2);
        assert!(!f.is_nilpotent);

        let d8 = grp(&[&[&[0, 1, 2, 3]], &[&[1, 3]]], 4);
        let f = structure_flags(&d8, &conjugacy_classes(&d8)).unwrap();
        assert!(f.is_extraspecial && f.is_nilpotent);
        assert_eq!(f.o_p(2).unwrap().len(), 8);
        assert_eq!(f.p_group_prime, Some(2));

        let c6 = grp(&[&[&[0, 1, 2, 3, 4, 5]]], 6);
        let f = structure_flags(&c6, &conjugacy_classes(&c6)).unwrap();
        assert!(f.is_abelian && f.is_nilpotent && f.frobenius.is_none());
        assert_eq!(f.elementary_abelian_prime, None);
        assert!(!is_extraspecial(&q8()) || center(&q8()).len() == 2);
        assert!(is_extraspecial(&q8()));
    }

    #[test]
    fn frobenius_centralizer_condition_holds() {
        let a4 = grp(&[&[&[0, 1, 2]], &[&[1, 2, 3]]], 4);
        let f = structure_flags(&a4, &conjugacy_classes(&a4)).unwrap();
        let d = f.frobenius.expect("A4 is Frobenius with kernel V4");
        assert_eq!(d.kernel.len(), 4);
        for &k in &d.kernel[1..] {
            for g in centralizer(&a4, k) {
                assert!(d.kernel.contains(&g));
            }
        }
        assert!(!is_nilpotent(&a4));
    }
}
