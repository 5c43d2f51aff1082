//! Named groups with their expected properties.
//!
//! Every registered entry carries a list of [`Claim`]s that [`check_entry`]
//! evaluates against a freshly computed [`Analysis`].

use std::collections::BTreeSet;

use crate::cyclo::Cyc;
use crate::error::{Error, Result};
use crate::invariants::{analyze, per_char_values, Analysis};
use crate::numtheory::{is_prime, prime_power_base};
use crate::permcore::subgroups::{minimal_normal_subgroups, socle};
use crate::permcore::{
    derived_series, direct_product, quotient_group, PermGroup, Permutation, DEFAULT_ORDER_BOUND,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Tier {
    Core,
    Optional,
}

/// A property an entry is expected to have.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Claim {
    Order(usize),
    ClassCount(usize),
    /// Degree multiset, ascending.
    Degrees(Vec<u64>),
    /// `cv(G)` consists of exactly these integers.
    IntegerValues(Vec<i64>),
    CdcSize(usize),
    NcvSize(usize),
    /// Every nonlinear row takes exactly four values.
    NonlinearFourValues,
    /// Every row takes at most `k` values.
    AllRowsAtMost(usize),
    /// Some row takes exactly `k` values.
    SomeRowWith(usize),
    /// Exactly `count` rows of `degree`, each with `values` distinct values.
    RowsOfDegree {
        degree: u64,
        count: usize,
        values: usize,
    },
    Rational(bool),
    Solvable(bool),
    DerivedLength(usize),
    DerivedSubgroupOrder(usize),
    SocleOrder(usize),
    /// The socle is elementary abelian of this order.
    ElementaryAbelianSocle(usize),
    UniqueMinimalNormal(usize),
    Frobenius {
        kernel: usize,
        complement: usize,
        cyclic_complement: bool,
    },
    Extraspecial,
    NormalSubgroupCount(usize),
    /// Number of normal subgroups whose quotient has this order and is
    /// Frobenius; a lower bound unless `exact`.
    FrobeniusQuotients {
        order: usize,
        count: usize,
        exact: bool,
    },
}

#[derive(Debug, Clone)]
pub struct CatalogEntry {
    pub name: String,
    pub source: &'static str,
    pub tier: Tier,
    /// Set when the entry is another registered entry under a second name.
    pub alias_of: Option<&'static str>,
    /// Nonabelian simple composition factors, by name.
    pub nonabelian_factors: &'static [&'static str],
    /// Buildable names of the two factors when the entry is a direct product.
    pub product_of: Option<(&'static str, &'static str)>,
    pub claims: Vec<Claim>,
}

impl CatalogEntry {
    pub fn order(&self) -> usize {
        self.claims
            .iter()
            .find_map(|c| match c {
                Claim::Order(n) => Some(*n),
                _ => None,
            })
            .unwrap_or(0)
    }

    pub fn build(&self) -> Result<PermGroup> {
        build(&self.name)
    }
}

// ---------------------------------------------------------------------------
// small linear algebra over prime fields

/// Points of `F_p^k` are indexed by `Σ v_i p^i`.
fn vec_of(mut index: usize, p: usize, k: usize) -> Vec<usize> {
    let mut v = vec![0; k];
    for x in v.iter_mut() {
        *x = index % p;
        index /= p;
    }
    v
}

fn index_of(v: &[usize], p: usize) -> usize {
    v.iter().rev().fold(0, |acc, &x| acc * p + x)
}

fn perm(images: Vec<usize>) -> Permutation {
    Permutation::from_images(images)
        .expect("constructed map is a bijection")
}

/// `v ↦ v + t` on `F_p^k`.
fn translation(p: usize, k: usize, t: &[usize]) -> Permutation {
    let n = p.pow(k as u32);
    perm(
        (0..n)
            .map(|i| {
                let v = vec_of(i, p, k);
                let w: Vec<usize> = v.iter().zip(t).map(|(a, b)| (a + b) % p).collect();
                index_of(&w, p)
            })
            .collect(),
    )
}

/// `v ↦ M v` on `F_p^k`; `m` is row-major.
fn linear(p: usize, k: usize, m: &[&[usize]]) -> Permutation {
    let n = p.pow(k as u32);
    perm(
        (0..n)
            .map(|i| {
                let v = vec_of(i, p, k);
                let w: Vec<usize> = m
                    .iter()
                    .map(|row| row.iter().zip(&v).map(|(a, b)| a * b).sum::<usize>() % p)
                    .collect();
                index_of(&w, p)
            })
            .collect(),
    )
}

fn unit_vectors(p: usize, k: usize) -> Vec<Permutation> {
    (0..k)
        .map(|i| {
            let mut t = vec![0; k];
            t[i] = 1;
            translation(p, k, &t)
        })
        .collect()
}

/// `F_q` for `q = p^k`, elements indexed as polynomials in the basis `1, α, …`.
struct FiniteField {
    p: usize,
    k: usize,
    /// Low-to-high coefficients of the monic defining polynomial without the leading term.
    modulus: Vec<usize>,
}

impl FiniteField {
    fn new(q: usize) -> Result<Self> {
        let p = prime_power_base(q as u64)
            .ok_or_else(|| Error::Invalid(format!("{q} is not a prime power")))?
            as usize;
        let k = (1..).find(|&k| p.pow(k) >= q).unwrap_or(1) as usize;
        let modulus = match (p, k) {
            (_, 1) => vec![0],
            (2, 2) => vec![1, 1],
            (2, 3) => vec![1, 1, 0],
            (3, 2) => vec![1, 0],
            (2, 4) => vec![1, 1, 0, 0],
            _ => return Err(Error::Invalid(format!("no field table for q = {q}"))),
        };
        Ok(Self { p, k, modulus })
    }

    fn q(&self) -> usize {
        self.p.pow(self.k as u32)
    }

    fn add(&self, a: usize, b: usize) -> usize {
        let (x, y) = (vec_of(a, self.p, self.k), vec_of(b, self.p, self.k));
        let s: Vec<usize> = x.iter().zip(&y).map(|(u, v)| (u + v) % self.p).collect();
        index_of(&s, self.p)
    }

    fn mul(&self, a: usize, b: usize) -> usize {
        let (p, k) = (self.p, self.k);
        if k == 1 {
            return a * b % p;
        }
        let (x, y) = (vec_of(a, p, k), vec_of(b, p, k));
        let mut prod = vec![0; 2 * k - 1];
        for (i, u) in x.iter().enumerate() {
            for (j, v) in y.iter().enumerate() {
                prod[i + j] = (prod[i + j] + u * v) % p;
            }
        }
        // α^k = −Σ modulus_i α^i
        for d in (k..prod.len()).rev() {
            let c = prod[d];
            if c == 0 {
                continue;
            }
            prod[d] = 0;
            for (i, m) in self.modulus.iter().enumerate() {
                prod[d - k + i] = (prod[d - k + i] + (p - m) * c) % p;
            }
        }
        index_of(&prod[..k], p)
    }

    fn multiplicative_order(&self, a: usize) -> usize {
        let mut x = a;
        for n in 1..self.q() {
            if x == 1 {
                return n;
            }
            x = self.mul(x, a);
        }
        0
    }

    fn primitive_element(&self) -> usize {
        (2..self.q())
            .find(|&a| self.multiplicative_order(a) == self.q() - 1)
            .unwrap_or(1)
    }

    fn mul_by(&self, a: usize) -> Permutation {
        perm((0..self.q()).map(|x| self.mul(a, x)).collect())
    }

    fn translations(&self) -> Vec<Permutation> {
        (0..self.k)
            .map(|i| {
                let e = self.p.pow(i as u32);
                perm((0..self.q()).map(|x| self.add(x, e)).collect())
            })
            .collect()
    }
}

// ---------------------------------------------------------------------------
// builders

fn group(gens: Vec<Permutation>) -> Result<PermGroup> {
    PermGroup::from_generators(gens, DEFAULT_ORDER_BOUND)
}

fn cycle(n: usize) -> Permutation {
    perm((0..n).map(|i| (i + 1) % n).collect())
}

pub fn cyclic(n: usize) -> Result<PermGroup> {
    if n == 0 {
        return Err(Error::Invalid("cyclic(0)".into()));
    }
    group(vec![cycle(n)])
}

pub fn elem_abelian(p: usize, k: usize) -> Result<PermGroup> {
    if !is_prime(p as u64) {
        return Err(Error::Invalid(format!("{p} is not prime")));
    }
    let gens = (0..k)
        .map(|i| cycle(p).shifted(i * p, p * k.max(1)))
        .collect();
    PermGroup::with_degree(p * k.max(1), gens, DEFAULT_ORDER_BOUND)
}

/// Dihedral group of order `order` on `Z_{order/2}`.
pub fn dihedral(order: usize) -> Result<PermGroup> {
    if order < 6 || order % 2 != 0 {
        return Err(Error::Invalid(format!("dihedral({order}) needs an even order ≥ 6")));
    }
    let t = order / 2;
    group(vec![cycle(t), perm((0..t).map(|x| (t - x) % t).collect())])
}

pub fn sym(n: usize) -> Result<PermGroup> {
    if !(1..=7).contains(&n) {
        return Err(Error::Invalid(format!("sym({n}) outside 1..=7")));
    }
    if n < 2 {
        return group(vec![Permutation::identity(1)]);
    }
    let swap = Permutation::from_cycles(&[vec![0, 1]], n)?;
    group(vec![cycle(n), swap])
}

pub fn alt(n: usize) -> Result<PermGroup> {
    if !(1..=7).contains(&n) {
        return Err(Error::Invalid(format!("alt({n}) outside 1..=7")));
    }
    if n < 3 {
        return group(vec![Permutation::identity(n)]);
    }
    let gens = (2..n)
        .map(|k| Permutation::from_cycles(&[vec![0, 1, k]], n))
        .collect::<Result<Vec<_>>>()?;
    group(gens)
}

/// Left regular representation of a group given by its multiplication on `0..n`.
fn regular(n: usize, mul: impl Fn(usize, usize) -> usize, gens: &[usize]) -> Result<PermGroup> {
    group(
        gens.iter()
            .map(|&g| perm((0..n).map(|x| mul(g, x)).collect()))
            .collect(),
    )
}

pub fn quaternion() -> Result<PermGroup> {
    // ±1, ±i, ±j, ±k as (sign, unit) = 4 * sign + unit
    const UNIT: [[(usize, usize); 4]; 4] = [
        [(0, 0), (0, 1), (0, 2), (0, 3)],
        [(0, 1), (1, 0), (0, 3), (1, 2)],
        [(0, 2), (1, 3), (1, 0), (0, 1)],
        [(0, 3), (0, 2), (1, 1), (1, 0)],
    ];
    let mul = |a: usize, b: usize| {
        let (s, u) = UNIT[a % 4][b % 4];
        4 * ((a / 4 + b / 4 + s) % 2) + u
    };
    regular(8, mul, &[1, 2])
}

/// `F_3^k` with translations and `v ↦ −v`.
pub fn frob_3k_2(k: usize) -> Result<PermGroup> {
    if k == 0 {
        return Err(Error::Invalid("frob_3k_2(0)".into()));
    }
    generalized_dihedral(3, k)
}

/// Affine group `x ↦ ax + b` of `F_q`.
pub fn gamma(q: usize) -> Result<PermGroup> {
    if q < 3 {
        return Err(Error::Invalid(format!("gamma({q}) needs q > 2")));
    }
    let f = FiniteField::new(q)?;
    let mut gens = f.translations();
    gens.push(f.mul_by(f.primitive_element()));
    group(gens)
}

/// `x ↦ m^k x + b` on `Z_n`.
fn affine_mod(n: usize, m: usize) -> Result<PermGroup> {
    group(vec![cycle(n), perm((0..n).map(|x| m * x % n).collect())])
}

fn heisenberg3() -> Result<PermGroup> {
    group(vec![
        linear(3, 3, &[&[1, 1, 0], &[0, 1, 0], &[0, 0, 1]]),
        linear(3, 3, &[&[1, 0, 0], &[0, 1, 1], &[0, 0, 1]]),
    ])
}

fn product(a: &PermGroup, b: &PermGroup) -> Result<PermGroup> {
    direct_product(a, b, DEFAULT_ORDER_BOUND)
}

/// Central product of two groups with centres of order 2, as a quotient of
/// the direct product by the diagonal of the centres.
fn central_product(a: &PermGroup, b: &PermGroup) -> Result<PermGroup> {
    let g = product(a, b)?;
    let da = a.degree();
    let central_involution = |h: &PermGroup| {
        crate::permcore::center(h)
            .into_iter()
            .find(|&x| x != h.identity())
            .map(|x| h.element(x).clone())
    };
    let (Some(za), Some(zb)) = (central_involution(a), central_involution(b)) else {
        return Err(Error::Invalid("central product needs nontrivial centres".into()));
    };
    let mut images: Vec<usize> = za.images().collect();
    images.extend(zb.images().map(|x| x + da));
    let z = g
        .index_of(&Permutation::from_images(images)?)
        .ok_or_else(|| Error::Invalid("diagonal centre not in product".into()))?;
    quotient_group(&g, &g.closure(&[z]))
}

/// `F_p^k` with translations and `v ↦ −v`.
fn generalized_dihedral(p: usize, k: usize) -> Result<PermGroup> {
    let mut gens = unit_vectors(p, k);
    let n = p.pow(k as u32);
    gens.push(perm(
        (0..n)
            .map(|i| index_of(&vec_of(i, p, k).iter().map(|x| (p - x) % p).collect::<Vec<_>>(), p))
            .collect(),
    ));
    group(gens)
}

/// Regular representation of `{(v, s) : v ∈ F_3², s ∈ Z_9}` with
/// `(v, s)(w, t) = (v + U^s w, s + t)`, `U = [[1,1],[0,1]]`.
fn order_81_3() -> Result<PermGroup> {
    let enc = |v0: usize, v1: usize, s: usize| v0 + 3 * v1 + 9 * s;
    let mul = |a: usize, b: usize| {
        let (v0, v1, s) = (a % 3, a / 3 % 3, a / 9);
        let (w0, w1, t) = (b % 3, b / 3 % 3, b / 9);
        // U^s w = (w0 + s w1, w1)
        enc((v0 + w0 + s * w1) % 3, (v1 + w1) % 3, (s + t) % 9)
    };
    regular(81, mul, &[enc(1, 0, 0), enc(0, 1, 0), enc(0, 0, 1)])
}

/// Regular representation of `C_9 ⋊ C_9`, `(a, b)(c, d) = (a + 4^b c, b + d)`.
fn order_81_4() -> Result<PermGroup> {
    let pow4 = [1usize, 4, 7];
    let mul = |x: usize, y: usize| {
        let (a, b, c, d) = (x % 9, x / 9, y % 9, y / 9);
        (a + pow4[b % 3] * c) % 9 + 9 * ((b + d) % 9)
    };
    regular(81, mul, &[1, 9])
}

fn parse_call(name: &str) -> Option<(&str, Vec<usize>)> {
    let open = name.find('(')?;
    let inner = name[open + 1..].strip_suffix(')')?;
    let args = inner
        .split(',')
        .map(|a| a.trim().parse().ok())
        .collect::<Option<Vec<usize>>>()?;
    Some((&name[..open], args))
}

fn unknown(name: &str) -> Error {
    Error::UnknownName(name.to_string())
}

/// Builds a named group: a registered entry or any member of a parameterized family.
pub fn build(name: &str) -> Result<PermGroup> {
    if let Some((family, args)) = parse_call(name) {
        return match (family, args.as_slice()) {
            ("cyclic", &[n]) => cyclic(n),
            ("elem_abelian", &[p, k]) => elem_abelian(p, k),
            ("dihedral", &[n]) => dihedral(n),
            ("sym", &[n]) => sym(n),
            ("alt", &[n]) => alt(n),
            ("frob_3k_2", &[k]) => frob_3k_2(k),
            ("gamma", &[q]) => gamma(q),
            _ => Err(unknown(name)),
        };
    }
    match name {
        "S4" => sym(4),
        "S5" => sym(5),
        "S6" => sym(6),
        "A4" => alt(4),
        "A5" => alt(5),
        "A6" => alt(6),
        "D8" => dihedral(8),
        "Q8" => quaternion(),
        "sg_10_1" => dihedral(10),
        "sg_136_12" => affine_mod(17, 2),
        "sg_50_4" => generalized_dihedral(5, 2),
        "sg_250_14" => generalized_dihedral(5, 3),
        "sg_21_1" => affine_mod(7, 2),
        "sg_27_3" => heisenberg3(),
        "sg_27_4" => affine_mod(9, 4),
        "sg_36_9" => {
            let mut gens = unit_vectors(3, 2);
            gens.push(linear(3, 2, &[&[0, 2], &[1, 0]]));
            group(gens)
        }
        "sg_55_1" => affine_mod(11, 3),
        "sg_78_1" => affine_mod(13, 4),
        "sg_80_49" => {
            let f = FiniteField::new(16)?;
            let a = f.primitive_element();
            let a3 = f.mul(a, f.mul(a, a));
            let mut gens = f.translations();
            gens.push(f.mul_by(a3));
            group(gens)
        }
        "sg_81_3" => order_81_3(),
        "sg_81_4" => order_81_4(),
        "sg_81_12" => product(&cyclic(3)?, &heisenberg3()?),
        "sg_81_13" => product(&cyclic(3)?, &affine_mod(9, 4)?),
        "sg_147_4" => {
            let mut gens = unit_vectors(7, 2);
            gens.push(linear(7, 2, &[&[2, 0], &[0, 2]]));
            group(gens)
        }
        "C2xS3" => product(&cyclic(2)?, &sym(3)?),
        "D8xC2" => product(&dihedral(8)?, &cyclic(2)?),
        "D8xC2xC2" => product(&dihedral(8)?, &elem_abelian(2, 2)?),
        "Q8xC2" => product(&quaternion()?, &cyclic(2)?),
        "extraspecial_32_plus" => central_product(&dihedral(8)?, &dihedral(8)?),
        "extraspecial_32_minus" => central_product(&dihedral(8)?, &quaternion()?),
        _ => Err(unknown(name)),
    }
}

// ---------------------------------------------------------------------------
// registry

fn entry(name: &str, source: &'static str, claims: Vec<Claim>) -> CatalogEntry {
    CatalogEntry {
        name: name.to_string(),
        source,
        tier: Tier::Core,
        alias_of: None,
        nonabelian_factors: &[],
        product_of: None,
        claims,
    }
}

fn alias(mut e: CatalogEntry, of: &'static str) -> CatalogEntry {
    e.alias_of = Some(of);
    e
}

fn optional(mut e: CatalogEntry) -> CatalogEntry {
    e.tier = Tier::Optional;
    e
}

fn factors(mut e: CatalogEntry, f: &'static [&'static str]) -> CatalogEntry {
    e.nonabelian_factors = f;
    e
}

fn product_of(mut e: CatalogEntry, h: &'static str, k: &'static str) -> CatalogEntry {
    e.product_of = Some((h, k));
    e
}

fn frob(kernel: usize, complement: usize) -> Claim {
    Claim::Frobenius {
        kernel,
        complement,
        cyclic_complement: true,
    }
}

/// All registered entries, sorted by name.
pub fn entries() -> Vec<CatalogEntry> {
    use Claim::*;
    let mut out = Vec::new();

    for n in [2usize, 3, 4, 5, 6, 7, 8, 12] {
        let mut claims = vec![Order(n), ClassCount(n), Degrees(vec![1; n])];
        if n == 2 {
            claims.push(IntegerValues(vec![-1, 1]));
            claims.push(CdcSize(1));
        }
        out.push(entry(&format!("cyclic({n})"), "cyclic group Z_n", claims));
    }
    for (p, k) in [(2usize, 2usize), (2, 3), (2, 4), (3, 2)] {
        let n = p.pow(k as u32);
        let mut claims = vec![Order(n), ClassCount(n), Degrees(vec![1; n])];
        if p == 2 {
            claims.push(IntegerValues(vec![-1, 1]));
            claims.push(CdcSize(1));
            claims.push(Rational(true));
        }
        out.push(entry(
            &format!("elem_abelian({p},{k})"),
            "elementary abelian group on disjoint p-cycles",
            claims,
        ));
    }
    for t in [4usize, 5, 6, 7, 9, 11] {
        let order = 2 * t;
        let linear = if t % 2 == 0 { 4 } else { 2 };
        let mut degrees = vec![1u64; linear];
        degrees.extend(vec![2u64; (order - linear) / 4]);
        let mut claims = vec![Order(order), Degrees(degrees), Solvable(true)];
        if t % 2 == 1 {
            claims.push(frob(t, 2));
            claims.push(DerivedSubgroupOrder(t));
        }
        if t == 4 {
            claims.push(IntegerValues(vec![-2, -1, 0, 1, 2]));
            claims.push(Extraspecial);
        }
        if t == 5 {
            claims.push(NonlinearFourValues);
        }
        out.push(entry(
            &format!("dihedral({order})"),
            "dihedral group of the given order on Z_t",
            claims,
        ));
    }
    for k in 1..=3usize {
        let n = 3usize.pow(k as u32);
        let mut claims = vec![
            Order(2 * n),
            frob(n, 2),
            IntegerValues(vec![-1, 0, 1, 2]),
            CdcSize(2),
            DerivedLength(2),
        ];
        claims.push(ElementaryAbelianSocle(n));
        out.push(entry(
            &format!("frob_3k_2({k})"),
            "elementary abelian 3-group extended by inversion",
            claims,
        ));
    }
    for q in [3usize, 4, 5, 7, 8, 9] {
        let claims = vec![Order(q * (q - 1)), ClassCount(q), frob(q, q - 1), UniqueMinimalNormal(q)];
        let e = entry(&format!("gamma({q})"), "affine group of the line over F_q", claims);
        out.push(if q == 3 { alias(e, "frob_3k_2(1)") } else { e });
    }

    out.push(alias(
        entry(
            "D8",
            "dihedral group of order 8",
            vec![Order(8), IntegerValues(vec![-2, -1, 0, 1, 2]), CdcSize(3)],
        ),
        "dihedral(8)",
    ));
    out.push(entry(
        "Q8",
        "quaternion group, regular representation",
        vec![
            Order(8),
            Degrees(vec![1, 1, 1, 1, 2]),
            IntegerValues(vec![-2, -1, 0, 1, 2]),
            CdcSize(3),
            Extraspecial,
        ],
    ));
    out.push(alias(
        entry(
            "A4",
            "alternating group of degree 4",
            vec![Order(12), Degrees(vec![1, 1, 1, 3])],
        ),
        "gamma(4)",
    ));
    out.push(entry(
            "S4",
            "symmetric group of degree 4",
            vec![
                Order(24),
                Degrees(vec![1, 1, 2, 3, 3]),
                IntegerValues(vec![-1, 0, 1, 2, 3]),
                AllRowsAtMost(4),
                Rational(true),
                CdcSize(2),
                DerivedLength(3),
            ],
        ));
    out.push(factors(
        entry(
            "A5",
            "alternating group of degree 5",
            vec![Order(60), ClassCount(5), SomeRowWith(5), Rational(false), Solvable(false)],
        ),
        &["A5"],
    ));
    out.push(factors(
        entry(
            "S5",
            "symmetric group of degree 5",
            vec![Order(120), ClassCount(7), NcvSize(3), Rational(true), Solvable(false)],
        ),
        &["A5"],
    ));
    out.push(factors(
        entry(
            "A6",
            "alternating group of degree 6",
            vec![Order(360), ClassCount(7), Solvable(false)],
        ),
        &["A6"],
    ));
    out.push(factors(
        entry(
            "S6",
            "symmetric group of degree 6",
            vec![Order(720), ClassCount(11), Rational(true), Solvable(false)],
        ),
        &["A6"],
    ));

    out.push(alias(
        entry(
            "sg_10_1",
            "SmallGroup(10,1): dihedral group of order 10",
            vec![Order(10), DerivedSubgroupOrder(5), NonlinearFourValues, frob(5, 2)],
        ),
        "dihedral(10)",
    ));
    out.push(entry(
        "sg_136_12",
        "SmallGroup(136,12): C17:C8 as x -> 2x + b mod 17",
        vec![
            Order(136),
            Degrees([vec![1; 8], vec![8; 2]].concat()),
            NonlinearFourValues,
            frob(17, 8),
        ],
    ));
    out.push(entry(
        "sg_50_4",
        "SmallGroup(50,4): C5^2 extended by inversion",
        vec![
            Order(50),
            RowsOfDegree {
                degree: 2,
                count: 12,
                values: 4,
            },
            NonlinearFourValues,
            FrobeniusQuotients {
                order: 10,
                count: 6,
                exact: true,
            },
            NormalSubgroupCount(9),
        ],
    ));
    out.push(optional(entry(
        "sg_250_14",
        "SmallGroup(250,14): C5^3 extended by inversion",
        vec![
            Order(250),
            NonlinearFourValues,
            FrobeniusQuotients {
                order: 10,
                count: 1,
                exact: false,
            },
        ],
    )));
    out.push(entry(
        "sg_21_1",
        "SmallGroup(21,1): C7:C3 as x -> 2x + b mod 7",
        vec![
            Order(21),
            RowsOfDegree {
                degree: 3,
                count: 2,
                values: 4,
            },
            NonlinearFourValues,
            frob(7, 3),
        ],
    ));
    out.push(entry(
        "sg_27_3",
        "SmallGroup(27,3): Heisenberg group, unitriangular matrices over F3",
        vec![Order(27), NonlinearFourValues, SocleOrder(3), Extraspecial],
    ));
    out.push(entry(
        "sg_27_4",
        "SmallGroup(27,4): C9:C3 as x -> 4x + c mod 9",
        vec![
            Order(27),
            RowsOfDegree {
                degree: 3,
                count: 2,
                values: 4,
            },
            NonlinearFourValues,
            UniqueMinimalNormal(3),
            SocleOrder(3),
        ],
    ));
    out.push(entry(
        "sg_36_9",
        "SmallGroup(36,9): F3^2 extended by [[0,-1],[1,0]]",
        vec![
            Order(36),
            RowsOfDegree {
                degree: 4,
                count: 2,
                values: 4,
            },
            NonlinearFourValues,
            UniqueMinimalNormal(9),
        ],
    ));
    out.push(entry(
        "sg_55_1",
        "SmallGroup(55,1): C11:C5 as x -> 3x + b mod 11",
        vec![Order(55), NonlinearFourValues, frob(11, 5)],
    ));
    out.push(entry(
        "sg_78_1",
        "SmallGroup(78,1): C13:C6 as x -> 4x + b mod 13",
        vec![Order(78), NonlinearFourValues, frob(13, 6)],
    ));
    out.push(entry(
        "sg_80_49",
        "SmallGroup(80,49): F16 extended by an element of order 5",
        vec![
            Order(80),
            NonlinearFourValues,
            UniqueMinimalNormal(16),
            SocleOrder(16),
            frob(16, 5),
        ],
    ));
    for (name, source, factors) in [
        ("sg_81_3", "SmallGroup(81,3): C3^2:C9, regular representation", None),
        ("sg_81_4", "SmallGroup(81,4): C9:C9, regular representation", None),
        ("sg_81_12", "SmallGroup(81,12): C3 x He3", Some(("cyclic(3)", "sg_27_3"))),
        ("sg_81_13", "SmallGroup(81,13): C3 x (C9:C3)", Some(("cyclic(3)", "sg_27_4"))),
    ] {
        let mut e = entry(
            name,
            source,
            vec![Order(81), NonlinearFourValues, ElementaryAbelianSocle(9)],
        );
        e.product_of = factors;
        out.push(e);
    }
    out.push(entry(
        "sg_147_4",
        "SmallGroup(147,4): F7^2 extended by the scalar 2",
        vec![
            Order(147),
            NonlinearFourValues,
            ElementaryAbelianSocle(49),
            frob(49, 3),
        ],
    ));

    out.push(product_of(
        entry(
        "C2xS3",
        "direct product C2 x S3",
        vec![Order(12), IntegerValues(vec![-2, -1, 0, 1, 2]), CdcSize(3), DerivedLength(2)],
    ),
        "cyclic(2)",
        "sym(3)",
    ));
    out.push(product_of(
        entry(
        "D8xC2",
        "direct product D8 x C2",
        vec![Order(16), IntegerValues(vec![-2, -1, 0, 1, 2]), CdcSize(3)],
    ),
        "dihedral(8)",
        "cyclic(2)",
    ));
    out.push(product_of(
        entry(
        "D8xC2xC2",
        "direct product D8 x C2 x C2",
        vec![Order(32), IntegerValues(vec![-2, -1, 0, 1, 2]), CdcSize(3)],
    ),
        "dihedral(8)",
        "elem_abelian(2,2)",
    ));
    out.push(product_of(
        entry(
        "Q8xC2",
        "direct product Q8 x C2",
        vec![Order(16), IntegerValues(vec![-2, -1, 0, 1, 2]), CdcSize(3)],
    ),
        "Q8",
        "cyclic(2)",
    ));
    for (name, source) in [
        ("extraspecial_32_plus", "central product D8 o D8"),
        ("extraspecial_32_minus", "central product D8 o Q8"),
    ] {
        out.push(optional(entry(
            name,
            source,
            vec![Order(32), Degrees([vec![1; 16], vec![4]].concat()), Extraspecial, CdcSize(3)],
        )));
    }

    out.sort_by(|a, b| a.name.cmp(&b.name));
    out
}

/// Registered names, sorted.
pub fn names() -> Vec<String> {
    entries().into_iter().map(|e| e.name).collect()
}

pub fn lookup(name: &str) -> Option<CatalogEntry> {
    entries().into_iter().find(|e| e.name == name)
}

/// Non-alias entries, optionally including the optional tier.
pub fn scan_entries(include_optional: bool) -> Vec<CatalogEntry> {
    entries()
        .into_iter()
        .filter(|e| e.alias_of.is_none() && (include_optional || e.tier == Tier::Core))
        .collect()
}

// ---------------------------------------------------------------------------
// claim evaluation

fn ints(values: &[i64]) -> Vec<Cyc> {
    let mut v: Vec<Cyc> = values.iter().map(|&x| Cyc::from_integer(x)).collect();
    v.sort();
    v
}

fn elementary_abelian(a: &Analysis, set: &[usize]) -> bool {
    set.len() == 1 || crate::permcore::subgroups::elementary_abelian_prime(a.group(), set).is_some()
}

/// Checks one claim; `Err` carries a description of the mismatch.
pub fn check_claim(claim: &Claim, a: &Analysis) -> std::result::Result<(), String> {
    let r = &a.report;
    let t = &a.table;
    let fail = |what: String| Err(what);
    match claim {
        Claim::Order(n) => {
            if r.order != *n {
                return fail(format!("order {} ≠ {n}", r.order));
            }
        }
        Claim::ClassCount(n) => {
            if r.class_count != *n {
                return fail(format!("class count {} ≠ {n}", r.class_count));
            }
        }
        Claim::Degrees(d) => {
            if t.degrees() != *d {
                return fail(format!("degrees {:?} ≠ {d:?}", t.degrees()));
            }
        }
        Claim::IntegerValues(v) => {
            if r.cv != ints(v) {
                return fail(format!("cv {:?} ≠ {v:?}", display(&r.cv)));
            }
        }
        Claim::CdcSize(n) => {
            if r.cdc.len() != *n {
                return fail(format!("|cdc| = {} ≠ {n}", r.cdc.len()));
            }
        }
        Claim::NcvSize(n) => {
            if r.ncv.len() != *n {
                return fail(format!("|ncv| = {} ≠ {n}", r.ncv.len()));
            }
        }
        Claim::NonlinearFourValues => {
            if let Some(row) = a.nonlinear_rows().find(|&i| r.per_char_cv_sizes[i] != 4) {
                return fail(format!(
                    "row {row} (degree {}) takes {} values",
                    t.rows[row].degree, r.per_char_cv_sizes[row]
                ));
            }
        }
        Claim::AllRowsAtMost(k) => {
            if let Some(m) = r.per_char_cv_sizes.iter().max().filter(|&&m| m > *k) {
                return fail(format!("a row takes {m} > {k} values"));
            }
        }
        Claim::SomeRowWith(k) => {
            if !r.per_char_cv_sizes.contains(k) {
                return fail(format!("no row takes exactly {k} values"));
            }
        }
        Claim::RowsOfDegree {
            degree,
            count,
            values,
        } => {
            let rows: Vec<usize> = (0..t.rows.len())
                .filter(|&i| t.rows[i].degree == *degree)
                .collect();
            if rows.len() != *count {
                return fail(format!("{} rows of degree {degree}, expected {count}", rows.len()));
            }
            if let Some(&row) = rows.iter().find(|&&i| per_char_values(t, i).len() != *values) {
                return fail(format!(
                    "row {row} of degree {degree} takes {} values",
                    r.per_char_cv_sizes[row]
                ));
            }
        }
        Claim::Rational(b) => {
            if r.is_rational_group != *b {
                return fail(format!("rational = {}", r.is_rational_group));
            }
        }
        Claim::Solvable(b) => {
            if r.dl.is_solvable() != *b {
                return fail(format!("derived length {}", r.dl));
            }
        }
        Claim::DerivedLength(n) => {
            if r.dl.value() != Some(*n) {
                return fail(format!("derived length {} ≠ {n}", r.dl));
            }
        }
        Claim::DerivedSubgroupOrder(n) => {
            let d = derived_series(a.group());
            let len = d.terms.get(1).map_or(1, Vec::len);
            if len != *n {
                return fail(format!("|G'| = {len} ≠ {n}"));
            }
        }
        Claim::SocleOrder(n) => {
            let s = socle(a.group(), &a.normals);
            if s.len() != *n {
                return fail(format!("socle order {} ≠ {n}", s.len()));
            }
        }
        Claim::ElementaryAbelianSocle(n) => {
            let s = socle(a.group(), &a.normals);
            if s.len() != *n || !elementary_abelian(a, &s) {
                return fail(format!("socle of order {} is not elementary abelian of order {n}", s.len()));
            }
        }
        Claim::UniqueMinimalNormal(n) => {
            let mins = minimal_normal_subgroups(&a.normals);
            let sizes: Vec<usize> = mins.iter().map(Vec::len).collect();
            if sizes != [*n] {
                return fail(format!("minimal normal subgroup orders {sizes:?}, expected [{n}]"));
            }
        }
        Claim::Frobenius {
            kernel,
            complement,
            cyclic_complement,
        } => {
            let Some(f) = &a.flags.frobenius else {
                return fail("not a Frobenius group".into());
            };
            if f.kernel.len() != *kernel || f.complement.len() != *complement {
                return fail(format!(
                    "Frobenius kernel/complement orders {}/{}",
                    f.kernel.len(),
                    f.complement.len()
                ));
            }
            if *cyclic_complement && !crate::permcore::subgroups::is_cyclic_set(a.group(), &f.complement)
            {
                return fail("complement is not cyclic".into());
            }
        }
        Claim::Extraspecial => {
            if !a.flags.is_extraspecial {
                return fail("not extraspecial".into());
            }
        }
        Claim::NormalSubgroupCount(n) => {
            if a.normals.len() != *n {
                return fail(format!("{} normal subgroups ≠ {n}", a.normals.len()));
            }
        }
        Claim::FrobeniusQuotients {
            order,
            count,
            exact,
        } => {
            let g = a.group();
            let mut found = 0;
            for n in a.normals.iter().filter(|n| n.len() * order == g.order()) {
                let q = quotient_group(g, n).map_err(|e| e.to_string())?;
                let classes = crate::permcore::conjugacy_classes(&q);
                let flags =
                    crate::permcore::structure_flags(&q, &classes).map_err(|e| e.to_string())?;
                if flags.frobenius.is_some() {
                    found += 1;
                }
            }
            if found < *count || (*exact && found != *count) {
                return fail(format!("{found} Frobenius quotients of order {order}, expected {count}"));
            }
        }
    }
    Ok(())
}

fn display(v: &[Cyc]) -> Vec<String> {
    v.iter().map(ToString::to_string).collect()
}

/// Outcome of checking one entry.
#[derive(Debug, Clone, serde::Serialize)]
pub struct EntryCheck {
    pub name: String,
    pub tier: Tier,
    pub failures: Vec<String>,
}

impl EntryCheck {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

pub fn check_entry_with(entry: &CatalogEntry, a: &Analysis) -> EntryCheck {
    EntryCheck {
        name: entry.name.clone(),
        tier: entry.tier,
        failures: entry
            .claims
            .iter()
            .filter_map(|c| check_claim(c, a).err())
            .collect(),
    }
}

pub fn check_entry(entry: &CatalogEntry, seed: u64) -> Result<EntryCheck> {
    let g = entry.build()?;
    let a = analyze(&g, seed)?;
    Ok(check_entry_with(entry, &a))
}

/// Builds the entry and fails with `ConstructionMismatch` if any claim fails.
pub fn build_checked(name: &str, seed: u64) -> Result<(PermGroup, Analysis)> {
    let entry = lookup(name).ok_or_else(|| unknown(name))?;
    let g = entry.build()?;
    let a = analyze(&g, seed)?;
    let check = check_entry_with(&entry, &a);
    if !check.passed() {
        return Err(Error::ConstructionMismatch {
            name: name.to_string(),
            detail: check.failures.join("; "),
        });
    }
    Ok((g, a))
}

/// Distinct names of the registered families, used for help text.
pub fn families() -> BTreeSet<&'static str> {
    ["cyclic", "elem_abelian", "dihedral", "sym", "alt", "frob_3k_2", "gamma"]
        .into_iter()
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chartab::DEFAULT_SEED;

    #[test]
    fn declared_orders_match() {
        for e in entries() {
            let g = e.build().unwrap();
            assert_eq!(g.order(), e.order(), "{}", e.name);
        }
    }

    #[test]
    fn field_tables_are_fields() {
        for q in [4usize, 8, 9, 16] {
            let f = FiniteField::new(q).unwrap();
            // every nonzero element has an inverse
            for a in 1..q {
                assert!((1..q).any(|b| f.mul(a, b) == 1), "q = {q}, a = {a}");
            }
            assert_eq!(f.multiplicative_order(f.primitive_element()), q - 1);
        }
    }

    #[test]
    fn aliases_agree_on_order() {
        for e in entries() {
            if let Some(of) = e.alias_of {
                assert_eq!(build(of).unwrap().order(), e.order(), "{}", e.name);
            }
        }
    }

    #[test]
    fn quaternion_relations() {
        let q = quaternion().unwrap();
        let gens = q.generator_indices();
        let (i, j) = (gens[0], gens[1]);
        assert_eq!(q.element_order(i), 4);
        assert_eq!(q.pow(i, 2), q.pow(j, 2));
        assert_eq!(q.conjugate(q.inv(j), i), q.inv(i));
    }

    #[test]
    fn order_81_semidirect_relations() {
        let g = order_81_4().unwrap();
        assert_eq!(g.exponent(), 9);
        assert!(!g.is_abelian());
        let g = order_81_3().unwrap();
        assert_eq!(g.exponent(), 9);
    }

    #[test]
    fn unknown_names() {
        assert_eq!(build("nope").unwrap_err(), Error::UnknownName("nope".into()));
        assert!(matches!(build("cyclic(x)"), Err(Error::UnknownName(_))));
        assert!(matches!(build("gamma(6)"), Err(Error::Invalid(_))));
    }

    #[test]
    fn small_entries_pass_their_claims() {
        for name in ["cyclic(4)", "dihedral(8)", "Q8", "frob_3k_2(1)", "gamma(4)", "sg_21_1"] {
            let check = check_entry(&lookup(name).unwrap(), DEFAULT_SEED).unwrap();
            assert!(check.passed(), "{name}: {:?}", check.failures);
        }
    }

    #[test]
    fn mismatched_claim_is_reported() {
        let mut e = lookup("cyclic(4)").unwrap();
        e.claims.push(Claim::ClassCount(3));
        let check = check_entry(&e, DEFAULT_SEED).unwrap();
        assert_eq!(check.failures.len(), 1);
    }
}
