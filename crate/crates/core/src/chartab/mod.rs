//! Exact irreducible character tables by the Burnside–Dixon–Schneider method.

pub mod fp;

use num_rational::BigRational;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::cyclo::{cyclotomic_polynomial, Cyc};
use crate::error::{Error, Result};
use crate::numtheory::{is_prime, primitive_root};
use crate::permcore::{conjugacy_classes, ClassData, PermGroup};

use fp::Fp;

/// Largest class count accepted by [`character_table`].
pub const MAX_CLASSES: usize = 100;

/// Seed for the equal-degree splitting PRNG.
pub const DEFAULT_SEED: u64 = 0x5eed;

const PRIME_SEARCH_LIMIT: u64 = 10_000_000;

/// Class multiplication coefficients `a[i][j][k]`, flattened.
#[derive(Debug, Clone)]
pub struct ClassCoefficients {
    k: usize,
    data: Vec<u32>,
}

impl ClassCoefficients {
    pub fn get(&self, i: usize, j: usize, k: usize) -> u32 {
        self.data[(i * self.k + j) * self.k + k]
    }

    pub fn class_count(&self) -> usize {
        self.k
    }
}

/// `a[i][j][k] = #{(x, y) : x ∈ C_i, y ∈ C_j, xy = z_k}` for the class
/// representatives `z_k`.
pub fn class_mult_coeffs(group: &PermGroup, classes: &ClassData) -> ClassCoefficients {
    let k = classes.len();
    let mut data = vec![0u32; k * k * k];
    for (kk, &z) in classes.representatives.iter().enumerate() {
        for x in 0..group.order() {
            let y = group.mul(group.inv(x), z);
            let (i, j) = (classes.class_of(x), classes.class_of(y));
            data[(i * k + j) * k + kk] += 1;
        }
    }
    ClassCoefficients { k, data }
}

/// Smallest prime `p ≡ 1 (mod exponent)` with `p > 2√order`.
pub fn choose_dixon_prime_for(order: u64, exponent: u64) -> Result<u64> {
    (1..)
        .map(|t| 1 + t * exponent)
        .take_while(|&p| p <= PRIME_SEARCH_LIMIT)
        .find(|&p| p * p > 4 * order && is_prime(p))
        .ok_or(Error::PrimeSearchExhausted)
}

pub fn choose_dixon_prime(group: &PermGroup) -> Result<u64> {
    choose_dixon_prime_for(group.order() as u64, group.exponent() as u64)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Character {
    pub values: Vec<Cyc>,
    pub degree: u64,
    /// Classes on which the value equals the degree.
    pub kernel: Vec<usize>,
    /// Classes on which the value has modulus equal to the degree.
    pub center: Vec<usize>,
}

#[derive(Debug, Clone)]
pub struct CharTable {
    pub group: PermGroup,
    pub classes: ClassData,
    pub rows: Vec<Character>,
    pub dixon_prime: u64,
}

/// A character value as a sum `Σ μ_j ζ_m^j`, before conversion to [`Cyc`].
#[derive(Debug, Clone)]
struct Lifted {
    order: usize,
    mults: Vec<u64>,
}

pub fn character_table(group: &PermGroup) -> Result<CharTable> {
    character_table_with_seed(group, DEFAULT_SEED)
}

pub fn character_table_with_seed(group: &PermGroup, seed: u64) -> Result<CharTable> {
    let classes = conjugacy_classes(group);
    character_table_from_classes(group, classes, seed)
}

pub fn character_table_from_classes(
    group: &PermGroup,
    classes: ClassData,
    seed: u64,
) -> Result<CharTable> {
    let k = classes.len();
    if k > MAX_CLASSES {
        return Err(Error::TooManyClasses {
            count: k,
            limit: MAX_CLASSES,
        });
    }
    let order = group.order() as u64;
    let exponent = group.exponent() as u64;
    let p = choose_dixon_prime_for(order, exponent)?;
    let f = Fp::new(p);
    let coeffs = class_mult_coeffs(group, &classes);
    let omegas = central_characters(f, &coeffs, seed)?;

    let sizes: Vec<u64> = classes.class_sizes.iter().map(|&s| s as u64).collect();
    let w = f.pow(primitive_root(p), (p - 1) / exponent);
    let mut lifted_rows: Vec<(u64, Vec<Lifted>)> = Vec::with_capacity(k);
    for omega in &omegas {
        let degree = recover_degree(f, omega, &classes, order)?;
        let theta: Vec<u64> = (0..k)
            .map(|i| f.mul(f.mul(degree, omega[i]), f.inv(sizes[i])))
            .collect();
        let row = (0..k)
            .map(|i| lift_value(f, &classes, &theta, i, exponent, w, degree))
            .collect::<Result<Vec<_>>>()?;
        lifted_rows.push((degree, row));
    }
    check_orthogonality(&lifted_rows, &classes, order, exponent)?;

    let mut rows: Vec<Character> = lifted_rows
        .into_iter()
        .map(|(degree, row)| {
            let kernel = (0..k)
                .filter(|&i| row[i].mults[0] == degree)
                .collect();
            let center = (0..k)
                .filter(|&i| row[i].mults.iter().filter(|&&m| m != 0).count() == 1)
                .collect();
            let values = row
                .iter()
                .map(|l| {
                    let terms: Vec<(i64, BigRational)> = l
                        .mults
                        .iter()
                        .enumerate()
                        .filter(|&(_, &m)| m != 0)
                        .map(|(j, &m)| (j as i64, BigRational::from_integer(m.into())))
                        .collect();
                    Cyc::from_exponents(l.order as u32, &terms)
                })
                .collect();
            Character {
                values,
                degree,
                kernel,
                center,
            }
        })
        .collect();
    let key = |c: &Character| -> (u64, Vec<String>) {
        (c.degree, c.values.iter().map(ToString::to_string).collect())
    };
    rows.sort_by_cached_key(key);
    Ok(CharTable {
        group: group.clone(),
        classes,
        rows,
        dixon_prime: p,
    })
}

/// A subspace of `F_p^k` whose basis vectors are the identity on `pivots`.
struct Space {
    basis: Vec<Vec<u64>>,
    pivots: Vec<usize>,
}

impl Space {
    fn from_rows(f: Fp, rows: Vec<Vec<u64>>) -> Self {
        let (basis, pivots) = f.rref(rows);
        Self { basis, pivots }
    }

    fn dim(&self) -> usize {
        self.basis.len()
    }
}

/// The `k` common eigenvectors of the class matrices, each scaled so its
/// identity-class entry is 1; entry `i` is the central character value on
/// the class sum `K_i`.
fn central_characters(f: Fp, a: &ClassCoefficients, seed: u64) -> Result<Vec<Vec<u64>>> {
    let k = a.class_count();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let whole = (0..k)
        .map(|i| (0..k).map(|j| u64::from(i == j)).collect())
        .collect();
    let mut pending = vec![(Space::from_rows(f, whole), 1usize)];
    let mut done: Vec<Vec<u64>> = Vec::with_capacity(k);
    while let Some((space, start)) = pending.pop() {
        if space.dim() == 1 {
            done.push(space.basis.into_iter().next().unwrap());
            continue;
        }
        let mut split = None;
        for i in start..k {
            // M_i v, restricted to the subspace through its pivot rows
            let images: Vec<Vec<u64>> = space
                .basis
                .iter()
                .map(|v| {
                    (0..k)
                        .map(|j| {
                            (0..k).fold(0u64, |acc, l| {
                                let c = a.get(i, j, l) as u64 % f.p;
                                if c == 0 || v[l] == 0 {
                                    acc
                                } else {
                                    f.add(acc, f.mul(c, v[l]))
                                }
                            })
                        })
                        .collect()
                })
                .collect();
            let d = space.dim();
            let r: Vec<Vec<u64>> = (0..d)
                .map(|row| (0..d).map(|col| images[col][space.pivots[row]]).collect())
                .collect();
            let roots = f.roots(&f.charpoly(&r), &mut rng);
            if roots.len() == 1 {
                continue;
            }
            let mut parts = Vec::with_capacity(roots.len());
            let mut total = 0;
            for &lambda in &roots {
                let shifted: Vec<Vec<u64>> = (0..d)
                    .map(|x| {
                        (0..d)
                            .map(|y| if x == y { f.sub(r[x][y], lambda) } else { r[x][y] })
                            .collect()
                    })
                    .collect();
                let vecs: Vec<Vec<u64>> = f
                    .nullspace(&shifted, d)
                    .into_iter()
                    .map(|y| {
                        (0..k)
                            .map(|c| {
                                y.iter().zip(&space.basis).fold(0, |acc, (&t, v)| {
                                    f.add(acc, f.mul(t, v[c]))
                                })
                            })
                            .collect()
                    })
                    .collect();
                total += vecs.len();
                parts.push(Space::from_rows(f, vecs));
            }
            if total != d {
                return Err(Error::EigensplitFailure(format!(
                    "class matrix {i} is not diagonalizable on a subspace of dimension {d}"
                )));
            }
            split = Some((parts, i + 1));
            break;
        }
        match split {
            Some((parts, next)) => pending.extend(parts.into_iter().map(|s| (s, next))),
            None => {
                return Err(Error::EigensplitFailure(format!(
                    "common eigenspace of dimension {} does not split",
                    space.dim()
                )))
            }
        }
    }
    done.into_iter()
        .map(|v| {
            if v[0] == 0 {
                return Err(Error::EigensplitFailure(
                    "eigenvector vanishes on the identity class".into(),
                ));
            }
            let inv = f.inv(v[0]);
            Ok(v.into_iter().map(|x| f.mul(x, inv)).collect())
        })
        .collect()
}

/// `d` with `d² ≡ |G| / Σ ω_i ω_{i'} / |C_i|` and `0 < d ≤ √|G|`.
fn recover_degree(f: Fp, omega: &[u64], classes: &ClassData, order: u64) -> Result<u64> {
    let s = (0..classes.len()).fold(0, |acc, i| {
        let t = f.mul(omega[i], omega[classes.inverse_class[i]]);
        f.add(acc, f.mul(t, f.inv(classes.class_sizes[i] as u64)))
    });
    if s == 0 {
        return Err(Error::EigensplitFailure("degenerate degree equation".into()));
    }
    let target = f.mul(order % f.p, f.inv(s));
    (1..)
        .take_while(|d| d * d <= order)
        .find(|&d| f.mul(d, d) == target)
        .ok_or_else(|| Error::EigensplitFailure("no admissible degree".into()))
}

/// Eigenvalue multiplicities of `ρ(g_i)`, read off from the mod-p values on
/// the powers of `g_i`.
fn lift_value(
    f: Fp,
    classes: &ClassData,
    theta: &[u64],
    i: usize,
    exponent: u64,
    w: u64,
    degree: u64,
) -> Result<Lifted> {
    let m = classes.element_orders[i] as u64;
    let step = exponent / m;
    let m_inv = f.inv(m % f.p);
    let mut mults = Vec::with_capacity(m as usize);
    for j in 0..m {
        let sum = (0..m).fold(0, |acc, t| {
            let e = (exponent - (step * j * t) % exponent) % exponent;
            let term = f.mul(theta[classes.power_class(i, t as i64)], f.pow(w, e));
            f.add(acc, term)
        });
        let mu = f.mul(sum, m_inv);
        if 2 * mu >= f.p {
            return Err(Error::EigensplitFailure(format!(
                "multiplicity {mu} on class {i} is not liftable"
            )));
        }
        mults.push(mu);
    }
    if mults.iter().sum::<u64>() != degree {
        return Err(Error::EigensplitFailure(format!(
            "multiplicities on class {i} do not sum to the degree"
        )));
    }
    Ok(Lifted {
        order: m as usize,
        mults,
    })
}

/// Integer polynomials modulo `x^e - 1`, reduced modulo `Φ_e` for comparison.
struct ExpAccumulator {
    e: usize,
    acc: Vec<i128>,
}

impl ExpAccumulator {
    fn new(e: usize) -> Self {
        Self {
            e,
            acc: vec![0; e],
        }
    }

    /// Adds `w · a · conj(b)`.
    fn add_product(&mut self, w: i128, a: &Lifted, b: &Lifted) {
        let sa = self.e / a.order;
        let sb = self.e / b.order;
        for (ja, &ma) in a.mults.iter().enumerate() {
            if ma == 0 {
                continue;
            }
            for (jb, &mb) in b.mults.iter().enumerate() {
                if mb == 0 {
                    continue;
                }
                let idx = (ja * sa + self.e - (jb * sb) % self.e) % self.e;
                self.acc[idx] += w * ma as i128 * mb as i128;
            }
        }
    }

    fn equals_integer(mut self, c: i128) -> bool {
        let phi = cyclotomic_polynomial(self.e as u32);
        let d = phi.len() - 1;
        for i in (d..self.e).rev() {
            let top = std::mem::take(&mut self.acc[i]);
            if top != 0 {
                for (j, &fj) in phi[..d].iter().enumerate() {
                    self.acc[i - d + j] -= top * fj as i128;
                }
            }
        }
        self.acc[0] == c && self.acc[1..d.max(1)].iter().all(|&x| x == 0)
    }
}

fn check_orthogonality(
    rows: &[(u64, Vec<Lifted>)],
    classes: &ClassData,
    order: u64,
    exponent: u64,
) -> Result<()> {
    let k = classes.len();
    let e = exponent as usize;
    for a in 0..k {
        for b in a..k {
            let mut acc = ExpAccumulator::new(e);
            for c in 0..k {
                acc.add_product(classes.class_sizes[c] as i128, &rows[a].1[c], &rows[b].1[c]);
            }
            let expect = if a == b { order as i128 } else { 0 };
            if !acc.equals_integer(expect) {
                return Err(Error::OrthogonalityFailure(format!("rows {a} and {b}")));
            }
        }
    }
    for c in 0..k {
        for d in c..k {
            let mut acc = ExpAccumulator::new(e);
            for row in rows {
                acc.add_product(1, &row.1[c], &row.1[d]);
            }
            let expect = if c == d {
                classes.centralizer_order(c) as i128
            } else {
                0
            };
            if !acc.equals_integer(expect) {
                return Err(Error::OrthogonalityFailure(format!("columns {c} and {d}")));
            }
        }
    }
    let sum_sq: u64 = rows.iter().map(|(d, _)| d * d).sum();
    if sum_sq != order {
        return Err(Error::OrthogonalityFailure(format!(
            "sum of squared degrees is {sum_sq}, expected {order}"
        )));
    }
    Ok(())
}

impl CharTable {
    pub fn order(&self) -> usize {
        self.group.order()
    }

    pub fn class_count(&self) -> usize {
        self.classes.len()
    }

    pub fn value(&self, row: usize, class: usize) -> &Cyc {
        &self.rows[row].values[class]
    }

    pub fn degrees(&self) -> Vec<u64> {
        self.rows.iter().map(|r| r.degree).collect()
    }

    /// Element set of `ker χ`.
    pub fn kernel_elements(&self, row: usize) -> Vec<usize> {
        self.classes.union_elements(&self.rows[row].kernel)
    }

    /// Element set of `Z(χ)`.
    pub fn center_elements(&self, row: usize) -> Vec<usize> {
        self.classes.union_elements(&self.rows[row].center)
    }

    pub fn codegree(&self, row: usize) -> Result<u64> {
        codegree(self, row)
    }

    pub fn is_linear(&self, row: usize) -> bool {
        self.rows[row].degree == 1
    }

    pub fn to_json(&self) -> TableJson {
        TableJson {
            order: self.order(),
            dixon_prime: self.dixon_prime,
            classes: (0..self.class_count())
                .map(|i| ClassJson {
                    size: self.classes.class_sizes[i],
                    representative: self
                        .group
                        .element(self.classes.representatives[i])
                        .to_cycle_string(),
                    element_order: self.classes.element_orders[i],
                })
                .collect(),
            rows: self
                .rows
                .iter()
                .map(|r| RowJson {
                    degree: r.degree,
                    values: r.values.iter().map(ToString::to_string).collect(),
                })
                .collect(),
        }
    }
}

/// `|G : ker χ| / χ(1)`.
pub fn codegree(table: &CharTable, row: usize) -> Result<u64> {
    let index = (table.order() / table.kernel_elements(row).len()) as u64;
    let d = table.rows[row].degree;
    if index % d != 0 {
        return Err(Error::NonIntegralCodegree(row));
    }
    Ok(index / d)
}

#[derive(Debug, Clone, Serialize)]
pub struct ClassJson {
    pub size: usize,
    pub representative: String,
    pub element_order: usize,
}

#[derive(Debug, Clone, Serialize)]
pub struct RowJson {
    pub degree: u64,
    pub values: Vec<String>,
}

#[derive(Debug, Clone, Serialize)]
pub struct TableJson {
    pub order: usize,
    pub dixon_prime: u64,
    pub classes: Vec<ClassJson>,
    pub rows: Vec<RowJson>,
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::permcore::{group_from_generators, perm_from_cycles, DEFAULT_ORDER_BOUND};

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

    fn value_set(t: &CharTable) -> Vec<Cyc> {
        let mut v: Vec<Cyc> = t.rows.iter().flat_map(|r| r.values.clone()).collect();
        v.sort();
        v.dedup();
        v
    }

    fn ints(v: &[i64]) -> Vec<Cyc> {
        let mut out: Vec<Cyc> = v.iter().map(|&x| Cyc::from_integer(x)).collect();
        out.sort();
        out
    }

    #[test]
    fn dixon_primes() {
        assert_eq!(choose_dixon_prime_for(60, 30).unwrap(), 31);
        assert_eq!(choose_dixon_prime_for(136, 136).unwrap(), 137);
        assert_eq!(choose_dixon_prime_for(1, 1).unwrap(), 3);
        // 2√16 = 8 exactly: p must exceed it strictly
        assert_eq!(choose_dixon_prime_for(16, 2).unwrap(), 11);
    }

    #[test]
    fn class_coefficients_s3() {
        let s3 = grp(&[&[&[0, 1, 2]], &[&[0, 1]]], 3);
        let c = conjugacy_classes(&s3);
        let a = class_mult_coeffs(&s3, &c);
        let t = (0..c.len()).find(|&i| c.element_orders[i] == 2).unwrap();
        assert_eq!(a.get(t, t, 0), 3);
        for j in 0..c.len() {
            for k in 0..c.len() {
                assert_eq!(a.get(0, j, k), u32::from(j == k));
            }
        }
    }

    #[test]
    fn class_coefficients_independent_of_representative() {
        let s4 = grp(&[&[&[0, 1, 2, 3]], &[&[0, 1]]], 4);
        let c = conjugacy_classes(&s4);
        let a = class_mult_coeffs(&s4, &c);
        for kk in 0..c.len() {
            for &z in &c.classes[kk] {
                for i in 0..c.len() {
                    for j in 0..c.len() {
                        let count = c.classes[i]
                            .iter()
                            .filter(|&&x| c.class_of(s4.mul(s4.inv(x), z)) == j)
                            .count() as u32;
                        assert_eq!(count, a.get(i, j, kk));
                    }
                }
            }
        }
    }

    #[test]
    fn cyclic_table_is_fourier_matrix() {
        let c6 = grp(&[&[&[0, 1, 2, 3, 4, 5]]], 6);
        let t = character_table(&c6).unwrap();
        assert_eq!(t.rows.len(), 6);
        let gen = (0..6).find(|&i| t.classes.element_orders[i] == 6).unwrap();
        let mut col: Vec<Cyc> = t.rows.iter().map(|r| r.values[gen].clone()).collect();
        col.sort();
        col.dedup();
        assert_eq!(col.len(), 6);
        for r in &t.rows {
            for v in &r.values {
                assert_eq!(v.abs_squared(), Cyc::one());
            }
        }
    }

    #[test]
    fn s4_and_d8_value_sets() {
        let s4 = grp(&[&[&[0, 1, 2, 3]], &[&[0, 1]]], 4);
        let t = character_table(&s4).unwrap();
        assert_eq!(t.degrees(), vec![1, 1, 2, 3, 3]);
        assert_eq!(value_set(&t), ints(&[1, 2, 3, 0, -1]));

        let d8 = grp(&[&[&[0, 1, 2, 3]], &[&[1, 3]]], 4);
        let t = character_table(&d8).unwrap();
        assert_eq!(value_set(&t), ints(&[1, 2, 0, -1, -2]));
        let faithful = t.rows.iter().position(|r| r.degree == 2).unwrap();
        assert_eq!(codegree(&t, faithful).unwrap(), 4);
        let trivial = t
            .rows
            .iter()
            .position(|r| r.values.iter().all(|v| *v == Cyc::one()))
            .unwrap();
        assert_eq!(codegree(&t, trivial).unwrap(), 1);
    }

    #[test]
    fn faithful_linear_character_of_cyclic_group() {
        let c5 = grp(&[&[&[0, 1, 2, 3, 4]]], 5);
        let t = character_table(&c5).unwrap();
        let faithful = (0..5).filter(|&r| t.codegree(r).unwrap() == 5).count();
        assert_eq!(faithful, 4);
    }

    #[test]
    fn trivial_group_table() {
        let g = PermGroup::with_degree(1, vec![], 10).unwrap();
        let t = character_table(&g).unwrap();
        assert_eq!(t.dixon_prime, 3);
        assert_eq!(t.rows.len(), 1);
        assert_eq!(t.rows[0].values, vec![Cyc::one()]);
    }

    #[test]
    fn a5_has_golden_ratio_values() {
        let a5 = grp(&[&[&[0, 1, 2, 3, 4]], &[&[0, 1, 2]]], 5);
        let t = character_table(&a5).unwrap();
        assert_eq!(t.dixon_prime, 31);
        assert_eq!(t.degrees(), vec![1, 3, 3, 4, 5]);
        let irrational = value_set(&t).iter().filter(|v| !v.is_rational()).count();
        assert_eq!(irrational, 2);
    }

    #[test]
    fn seed_does_not_change_table() {
        let a5 = grp(&[&[&[0, 1, 2, 3, 4]], &[&[0, 1, 2]]], 5);
        let a = character_table_with_seed(&a5, 1).unwrap();
        let b = character_table_with_seed(&a5, 99).unwrap();
        assert_eq!(a.rows, b.rows);
    }

    #[test]
    fn elementary_abelian_with_small_prime() {
        // C2^4: 16 classes but the Dixon prime is 11
        let g = grp(&[&[&[0, 1]], &[&[2, 3]], &[&[4, 5]], &[&[6, 7]]], 8);
        let t = character_table(&g).unwrap();
        assert_eq!(t.dixon_prime, 11);
        assert_eq!(t.rows.len(), 16);
    }

    #[test]
    fn json_shape() {
        let s3 = grp(&[&[&[0, 1, 2]], &[&[0, 1]]], 3);
        let t = character_table(&s3).unwrap();
        let j = serde_json::to_string(&t.to_json()).unwrap();
        assert!(j.starts_with("{\"order\":6,\"dixon_prime\":7,\"classes\":[{\"size\":1,\"representative\":\"()\""));
    }
}
