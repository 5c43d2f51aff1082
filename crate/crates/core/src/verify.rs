//! Theorem checkers and the catalog scanner.
//!
//! Each checker turns a theorem into hypothesis ⇒ conclusion on one group.
//! A verdict fails only when the hypothesis holds and the conclusion does not.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use rayon::prelude::*;
use serde::Serialize;

use crate::catalog::{self, CatalogEntry};
use crate::chartab::character_table_with_seed;
use crate::cyclo::Cyc;
use crate::error::{Error, Result};
use crate::invariants::{analyze, character_values, per_char_values, Analysis};
use crate::numtheory::{lcm, prime_power_base};
use crate::permcore::subgroups::{
    derived_subgroup, elementary_abelian_prime, is_abelian_set, is_extraspecial,
    structure_flags_with,
};
use crate::permcore::{
    center, conjugacy_classes, normal_subgroups, quotient_group, PermGroup, StructureFlags,
};
use crate::symchar::{exterior_square_standard, mn_value, partitions, Partition};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Status {
    #[serde(rename = "pass")]
    Pass,
    #[serde(rename = "vacuous")]
    Vacuous,
    #[serde(rename = "FAIL")]
    Fail,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "pass",
            Status::Vacuous => "vacuous",
            Status::Fail => "FAIL",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Verdict {
    pub group: String,
    pub theorem: String,
    pub hypothesis_met: bool,
    pub conclusion_holds: bool,
    pub details: String,
    pub status: Status,
}

impl Verdict {
    pub fn new(
        group: &str,
        theorem: &str,
        hypothesis_met: bool,
        conclusion_holds: bool,
        details: impl Into<String>,
    ) -> Self {
        let status = match (hypothesis_met, conclusion_holds) {
            (false, _) => Status::Vacuous,
            (true, true) => Status::Pass,
            (true, false) => Status::Fail,
        };
        Self {
            group: group.to_string(),
            theorem: theorem.to_string(),
            hypothesis_met,
            conclusion_holds,
            details: details.into(),
            status,
        }
    }

    fn vacuous(group: &str, theorem: &str, details: impl Into<String>) -> Self {
        Self::new(group, theorem, false, false, details)
    }

    /// A check with no hypothesis beyond the group being in scope.
    fn outcome(group: &str, theorem: &str, failure: Option<String>) -> Self {
        match failure {
            None => Self::new(group, theorem, true, true, "holds"),
            Some(why) => Self::new(group, theorem, true, false, why),
        }
    }

    pub fn is_fail(&self) -> bool {
        self.status == Status::Fail
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{:<8} {:<24} {:<7} {}",
            self.theorem, self.group, self.status, self.details
        )
    }
}

/// Which checker to run.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Theorem {
    A,
    B,
    C,
    D,
    E,
    /// Degree sets of the form `{1, m}`.
    CdTwo,
    /// The lemma suite.
    Lemmas,
    All,
}

impl FromStr for Theorem {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s.to_ascii_lowercase().as_str() {
            "a" => Theorem::A,
            "b" => Theorem::B,
            "c" => Theorem::C,
            "d" => Theorem::D,
            "e" => Theorem::E,
            "cd2" => Theorem::CdTwo,
            "lemmas" => Theorem::Lemmas,
            "all" => Theorem::All,
            _ => return Err(Error::Invalid(format!("unknown theorem `{s}`"))),
        })
    }
}

// ---------------------------------------------------------------------------
// helpers

fn nonlinear_value_counts(a: &Analysis) -> Vec<usize> {
    a.nonlinear_rows()
        .map(|r| a.report.per_char_cv_sizes[r])
        .collect()
}

fn is_root_of_unity(x: &Cyc) -> bool {
    let n = lcm(2, x.conductor() as u64) as u32;
    x.pow(n) == Cyc::one()
}

fn identity_only(g: &PermGroup) -> Vec<usize> {
    vec![g.identity()]
}

fn o_p(g: &PermGroup, flags: &StructureFlags, p: u64) -> Vec<usize> {
    flags
        .o_p(p)
        .map(<[usize]>::to_vec)
        .unwrap_or_else(|| identity_only(g))
}

fn contains_all(haystack: &[usize], needles: &[usize]) -> bool {
    needles.iter().all(|x| haystack.binary_search(x).is_ok())
}

fn intersect(a: &[usize], b: &[usize]) -> Vec<usize> {
    a.iter().filter(|x| b.binary_search(x).is_ok()).copied().collect()
}

/// Order 24, class sizes {1,3,6,6,8}, degrees {1,1,2,3,3}, derived length 3.
pub fn s4_fingerprint(a: &Analysis) -> bool {
    let mut sizes = a.table.classes.class_sizes.clone();
    sizes.sort_unstable();
    a.report.order == 24
        && sizes == [1, 3, 6, 6, 8]
        && a.table.degrees() == [1, 1, 2, 3, 3]
        && a.report.dl.value() == Some(3)
}

/// Frobenius with elementary abelian 3-kernel and complement of order 2.
fn frobenius_3_by_2(g: &PermGroup, flags: &StructureFlags) -> bool {
    flags.frobenius.as_ref().is_some_and(|f| {
        f.complement.len() == 2 && elementary_abelian_prime(g, &f.kernel) == Some(3)
    })
}

/// Whether `g ≅ C_2^k × (C_3^m ⋊ C_2)` with the second factor Frobenius.
fn split_c2_times_frobenius(g: &PermGroup, flags: &StructureFlags) -> std::result::Result<(), String> {
    let o2 = o_p(g, flags, 2);
    let o3 = o_p(g, flags, 3);
    if o3.len() == 1 || elementary_abelian_prime(g, &o3) != Some(3) {
        return Err(format!("O_3 of order {} is not a nontrivial elementary abelian 3-group", o3.len()));
    }
    if o2.len() > 1 && elementary_abelian_prime(g, &o2) != Some(2) {
        return Err("O_2 is not elementary abelian".into());
    }
    if !contains_all(&center(g), &o2) {
        return Err("O_2 is not central".into());
    }
    if o2.len() * o3.len() * 2 != g.order() {
        return Err(format!("|O_2||O_3|·2 ≠ {}", g.order()));
    }
    let inverts = |t: usize| o3.iter().all(|&x| g.conjugate(t, x) == g.inv(x));
    let complement = (0..g.order()).find(|&t| {
        g.element_order(t) == 2 && o2.binary_search(&t).is_err() && inverts(t) && {
            let h = g.closure(&[o3.clone(), vec![t]].concat());
            h.len() == 2 * o3.len() && intersect(&h, &o2).len() == 1
        }
    });
    match complement {
        Some(_) => Ok(()),
        None => Err("no involution inverting O_3 splits off O_2".into()),
    }
}

// ---------------------------------------------------------------------------
// theorem checkers

/// At most four values on every nonlinear row ⇒ solvable.
pub fn check_a(name: &str, a: &Analysis) -> Verdict {
    let counts = nonlinear_value_counts(a);
    let max = counts.iter().max().copied().unwrap_or(0);
    let hyp = max <= 4;
    Verdict::new(
        name,
        "A",
        hyp,
        a.report.dl.is_solvable(),
        format!("max values on a nonlinear row = {max}, dl = {}", a.report.dl),
    )
}

/// No A5/A6 composition factor and `|cdc| ≤ 3` ⇒ solvable.
///
/// `factors` lists the nonabelian composition factors when known.
pub fn check_b(name: &str, a: &Analysis, factors: Option<&[&str]>) -> Verdict {
    let solvable = a.report.dl.is_solvable();
    let cdc = a.report.cdc.len();
    let factors_ok = match factors {
        _ if solvable => true,
        Some(f) => !f.iter().any(|s| *s == "A5" || *s == "A6"),
        None => false,
    };
    let details = match factors {
        Some(f) if !f.is_empty() => format!("|cdc| = {cdc}, factors {f:?}, dl = {}", a.report.dl),
        None if !solvable => format!("|cdc| = {cdc}, composition factors unknown"),
        _ => format!("|cdc| = {cdc}, dl = {}", a.report.dl),
    };
    Verdict::new(name, "B", factors_ok && cdc <= 3, solvable, details)
}

/// For nonabelian `G` with `|cd| ≤ 4` or `dl ≤ 3`:
/// `|cdc| = 2` iff `G` is a 3-by-2 Frobenius group with `cd = {1,2}` or `G ≅ S4`.
pub fn check_c(name: &str, a: &Analysis) -> Verdict {
    let r = &a.report;
    if r.flags.is_abelian {
        return Verdict::vacuous(name, "C", format!("abelian, |cdc| = {}", r.cdc.len()));
    }
    let dl_ok = r.dl.value().is_some_and(|d| d <= 3);
    let hyp = r.cd.len() <= 4 || dl_ok;
    let case_a = r.cd == [1, 2] && frobenius_3_by_2(a.group(), &a.flags);
    let case_b = s4_fingerprint(a);
    let cdc_two = r.cdc.len() == 2;
    let shape = match (case_a, case_b) {
        (true, _) => "case (a)",
        (_, true) => "case (b)",
        _ => "neither shape",
    };
    Verdict::new(
        name,
        "C",
        hyp,
        cdc_two == (case_a || case_b),
        format!("|cdc| = {}, |cd| = {}, dl = {}, {shape}", r.cdc.len(), r.cd.len(), r.dl),
    )
}

/// Nilpotent nonabelian `G`: `|cdc| = 3` ⇔ (`|cd| = 2`, rows take ≤ 3 values)
/// ⇔ (`|cd| = 2`, 2-group, `cod χ = 2χ(1)` on nonlinear rows); then some
/// quotient is extraspecial.
pub fn check_d(name: &str, a: &Analysis) -> Verdict {
    let r = &a.report;
    if !r.flags.is_nilpotent || r.flags.is_abelian {
        return Verdict::vacuous(name, "D", "not nilpotent nonabelian");
    }
    let pa = r.cdc.len() == 3;
    let pb = r.cd.len() == 2 && r.per_char_cv_sizes.iter().all(|&k| k <= 3);
    let pc = r.cd.len() == 2
        && r.flags.p_group_prime == Some(2)
        && a.nonlinear_rows()
            .all(|i| r.cod[i] == 2 * a.table.rows[i].degree);
    let mut details = format!("(a) {pa}, (b) {pb}, (c) {pc}");
    let mut holds = pa == pb && pb == pc;
    if holds && pa {
        let g = a.group();
        let found = a.normals.iter().find(|n| {
            n.len() < g.order()
                && quotient_group(g, n).is_ok_and(|q| {
                    is_extraspecial(&q) && prime_power_base(q.order() as u64) == Some(2)
                })
        });
        match found {
            Some(n) => details.push_str(&format!(", extraspecial quotient by N of order {}", n.len())),
            None => {
                holds = false;
                details.push_str(", no extraspecial quotient");
            }
        }
    }
    Verdict::new(name, "D", true, holds, details)
}

/// Non-nilpotent `G` with `|cdc| = 3` and `dl = 2` ⇒ `G = (C3^* × O_2) ⋊ C2`
/// with `O_2` abelian; a nonabelian Sylow 2-subgroup has five values and
/// `G/P' ≅ (C3^* ⋊ C2) × C2^*`.
pub fn check_e(name: &str, a: &Analysis, seed: u64) -> Verdict {
    let r = &a.report;
    if r.flags.is_nilpotent {
        return Verdict::vacuous(name, "E", "nilpotent");
    }
    let hyp = r.cdc.len() == 3 && r.dl.value() == Some(2);
    if !hyp {
        return Verdict::vacuous(
            name,
            "E",
            format!("|cdc| = {}, dl = {}", r.cdc.len(), r.dl),
        );
    }
    let g = a.group();
    let o2 = o_p(g, &a.flags, 2);
    let conclusion = || -> std::result::Result<String, String> {
        if !is_abelian_set(g, &o2) {
            return Err("O_2 is not abelian".into());
        }
        let base = a
            .normals
            .iter()
            .find(|n| {
                if 2 * n.len() != g.order() || !is_abelian_set(g, n) {
                    return false;
                }
                let odd: Vec<usize> =
                    n.iter().copied().filter(|&x| g.element_order(x) % 2 == 1).collect();
                let two: Vec<usize> =
                    n.iter().copied().filter(|&x| g.element_order(x).is_power_of_two()).collect();
                odd.len() > 1 && elementary_abelian_prime(g, &odd) == Some(3) && two == o2
            })
            .ok_or("no abelian normal C3^* × O_2 of index 2")?;
        let x = (0..g.order())
            .find(|&x| g.element_order(x).is_power_of_two() && base.binary_search(&x).is_err())
            .ok_or("no 2-element outside the index-2 subgroup")?;
        let sylow = g.closure(&[o2.clone(), vec![x]].concat());
        if sylow.len() != 2 * o2.len() {
            return Err(format!("⟨O_2, x⟩ has order {}, not a Sylow 2-subgroup", sylow.len()));
        }
        if is_abelian_set(g, &sylow) {
            split_c2_times_frobenius(g, &a.flags)?;
            return Ok(format!("O_2 of order {}, Sylow 2 abelian, C2^* × (C3^*:C2)", o2.len()));
        }
        let p = g.subgroup(&sylow).map_err(|e| e.to_string())?;
        let pt = character_table_with_seed(&p, seed).map_err(|e| e.to_string())?;
        let cv_p = character_values(&pt).len();
        if cv_p != 5 {
            return Err(format!("|cv(P)| = {cv_p} ≠ 5"));
        }
        let q = quotient_group(g, &derived_subgroup(g, &sylow)).map_err(|e| e.to_string())?;
        let classes = conjugacy_classes(&q);
        let normals = normal_subgroups(&q, &classes).map_err(|e| e.to_string())?;
        split_c2_times_frobenius(&q, &structure_flags_with(&q, &normals))?;
        Ok(format!("O_2 of order {}, Sylow 2 nonabelian with |cv(P)| = 5", o2.len()))
    };
    match conclusion() {
        Ok(d) => Verdict::new(name, "E", true, true, d),
        Err(d) => Verdict::new(name, "E", true, false, d),
    }
}

/// `cd = {1, m}` ⇒ an abelian normal subgroup of index `m`, or `m = p^e` and
/// `G` is a `p`-group times an abelian group.
pub fn check_cd_two(name: &str, a: &Analysis) -> Verdict {
    const ID: &str = "cd2";
    let r = &a.report;
    if r.cd.len() != 2 {
        return Verdict::vacuous(name, ID, format!("cd = {:?}", r.cd));
    }
    let m = r.cd[1] as usize;
    let g = a.group();
    if let Some(n) = a
        .normals
        .iter()
        .find(|n| n.len() * m == g.order() && is_abelian_set(g, n))
    {
        return Verdict::new(
            name,
            ID,
            true,
            true,
            format!("m = {m}, abelian normal subgroup of order {}", n.len()),
        );
    }
    let holds = prime_power_base(m as u64).is_some_and(|p| {
        let sylow = o_p(g, &a.flags, p);
        let p_part = {
            let mut n = g.order();
            let mut part = 1;
            while n % p as usize == 0 {
                n /= p as usize;
                part *= p as usize;
            }
            part
        };
        let rest: Vec<usize> = (0..g.order())
            .filter(|&x| g.element_order(x) % p as usize != 0)
            .collect();
        let k = g.closure(&rest);
        sylow.len() == p_part
            && k.len() * p_part == g.order()
            && is_abelian_set(g, &k)
            && a.normals.contains(&k)
    });
    Verdict::new(
        name,
        ID,
        true,
        holds,
        format!("m = {m}, {}", if holds { "p-group × abelian" } else { "neither case" }),
    )
}

// ---------------------------------------------------------------------------
// lemma suite

/// Quotients never have more values: `|cv(G/N)| ≤ |cv(G)|`, same for `ncv`.
/// The quotient tables are computed independently and also compared with
/// the rows of `G` whose kernel contains `N`.
pub fn lemma_quotient_values(name: &str, a: &Analysis, seed: u64) -> Verdict {
    let g = a.group();
    let (cv, ncv) = (a.report.cv.len(), a.report.ncv.len());
    for n in a.normals.iter().filter(|n| n.len() > 1 && n.len() < g.order()) {
        let q = match quotient_group(g, n).and_then(|q| analyze(&q, seed)) {
            Ok(q) => q,
            Err(e) => return Verdict::outcome(name, "quotient-values", Some(e.to_string())),
        };
        let (qcv, qncv) = (q.report.cv.len(), q.report.ncv.len());
        if qcv > cv || qncv > ncv {
            return Verdict::outcome(
                name,
                "quotient-values",
                Some(format!("|N| = {}: quotient has {qcv}/{qncv} values vs {cv}/{ncv}", n.len())),
            );
        }
        let mut inflated: Vec<Cyc> = (0..a.table.rows.len())
            .filter(|&r| contains_all(&a.table.kernel_elements(r), n))
            .flat_map(|r| a.table.rows[r].values.iter().cloned())
            .collect();
        inflated.sort();
        inflated.dedup();
        if inflated != q.report.cv {
            return Verdict::outcome(
                name,
                "quotient-values",
                Some(format!("|N| = {}: quotient values differ from inflated rows", n.len())),
            );
        }
    }
    Verdict::outcome(name, "quotient-values", None)
}

/// Nonabelian ⇒ `0 ∈ ncv`.
pub fn lemma_zero_value(name: &str, a: &Analysis) -> Verdict {
    if a.report.flags.is_abelian {
        return Verdict::vacuous(name, "zero-value", "abelian");
    }
    let holds = a.report.ncv.contains(&Cyc::zero());
    Verdict::new(name, "zero-value", true, holds, if holds { "0 ∈ ncv" } else { "0 ∉ ncv" })
}

/// A nontrivial rational-valued row takes a negative value.
pub fn lemma_negative_value(name: &str, a: &Analysis) -> Verdict {
    let t = &a.table;
    let rows: Vec<usize> = (0..t.rows.len())
        .filter(|&r| {
            t.rows[r].values.iter().all(Cyc::is_rational)
                && t.rows[r].values.iter().any(|v| *v != Cyc::one())
        })
        .collect();
    if rows.is_empty() {
        return Verdict::vacuous(name, "negative-value", "no nontrivial rational row");
    }
    let zero = Cyc::zero();
    let bad = rows
        .iter()
        .find(|&&r| !t.rows[r].values.iter().any(|v| *v < zero));
    Verdict::outcome(name, "negative-value", bad.map(|r| format!("row {r} has no negative value")))
}

/// In `H × K`, `n ∈ cv(H)`, `m ∈ cv(K)` ⇒ `n, m, nm ∈ cv(G)`.
pub fn lemma_product_values(
    name: &str,
    a: &Analysis,
    factors: Option<(&PermGroup, &PermGroup)>,
    seed: u64,
) -> Verdict {
    let Some((h, k)) = factors else {
        return Verdict::vacuous(name, "product-values", "not a registered direct product");
    };
    let tables = character_table_with_seed(h, seed).and_then(|th| {
        character_table_with_seed(k, seed).map(|tk| (character_values(&th), character_values(&tk)))
    });
    let (ch, ck) = match tables {
        Ok(v) => v,
        Err(e) => return Verdict::outcome(name, "product-values", Some(e.to_string())),
    };
    let cv = &a.report.cv;
    let has = |x: &Cyc| cv.binary_search(x).is_ok();
    for n in &ch {
        for m in &ck {
            if !has(n) || !has(m) || !has(&(n * m)) {
                return Verdict::outcome(name, "product-values", Some(format!("{n}, {m} or their product missing")));
            }
        }
    }
    Verdict::outcome(name, "product-values", None)
}

/// An irrational value has a distinct Galois conjugate in the same row.
pub fn lemma_galois_partner(name: &str, a: &Analysis) -> Verdict {
    let t = &a.table;
    let mut any = false;
    for r in 0..t.rows.len() {
        let values = per_char_values(t, r);
        for v in values.iter().filter(|v| !v.is_rational()) {
            any = true;
            let partner = v
                .galois_orbit()
                .into_iter()
                .any(|w| w != *v && values.binary_search(&w).is_ok());
            if !partner {
                return Verdict::outcome(name, "galois-partner", Some(format!("row {r}: {v} has no conjugate")));
            }
        }
    }
    if !any {
        return Verdict::vacuous(name, "galois-partner", "rational table");
    }
    Verdict::outcome(name, "galois-partner", None)
}

/// `Z(χ)/ker χ = Z(G/ker χ)` and it is cyclic.
pub fn lemma_character_center(name: &str, a: &Analysis) -> Verdict {
    let t = &a.table;
    let g = a.group();
    for r in 0..t.rows.len() {
        let ker = t.kernel_elements(r);
        let z = t.center_elements(r);
        let in_ker = g.membership(&ker);
        let preimage: Vec<usize> = (0..g.order())
            .filter(|&x| (0..g.order()).all(|y| in_ker[g.commutator(x, y)]))
            .collect();
        if preimage != z {
            return Verdict::outcome(name, "character-center", Some(format!("row {r}: Z(χ) ≠ preimage of the centre")));
        }
        let index = z.len() / ker.len();
        let cyclic = z.iter().any(|&x| {
            let mut y = x;
            let mut k = 1;
            while !in_ker[y] {
                y = g.mul(y, x);
                k += 1;
            }
            k == index
        });
        if !cyclic {
            return Verdict::outcome(name, "character-center", Some(format!("row {r}: Z(χ)/ker χ not cyclic")));
        }
    }
    Verdict::outcome(name, "character-center", None)
}

/// `χ(g⁻¹) = conj χ(g)`.
pub fn lemma_inverse_conjugate(name: &str, a: &Analysis) -> Verdict {
    let t = &a.table;
    let bad = (0..t.rows.len()).find_map(|r| {
        (0..t.class_count())
            .find(|&c| t.rows[r].values[t.classes.inverse_class[c]] != t.rows[r].values[c].conjugate())
            .map(|c| format!("row {r}, class {c}"))
    });
    Verdict::outcome(name, "inverse-conjugate", bad)
}

/// For a `p`-element `g` with `|χ(g)|² = a` rational, `p | χ(1)² − a`.
pub fn lemma_p_element_divisibility(name: &str, a: &Analysis) -> Verdict {
    let t = &a.table;
    for c in 0..t.class_count() {
        let order = t.classes.element_orders[c] as u64;
        let Some(p) = (order > 1).then(|| prime_power_base(order)).flatten() else {
            continue;
        };
        let p = BigInt::from(p);
        for (r, row) in t.rows.iter().enumerate() {
            let d = BigInt::from(row.degree);
            let Some(sq) = row.values[c].abs_squared().as_integer() else {
                continue;
            };
            if !(&d * &d - sq).is_multiple_of(&p) {
                return Verdict::outcome(name, "p-divisibility", Some(format!("row {r}, class {c}")));
            }
            if row.values[c].is_zero() && !d.is_multiple_of(&p) {
                return Verdict::outcome(name, "p-divisibility", Some(format!("row {r} vanishes at class {c}")));
            }
        }
    }
    Verdict::outcome(name, "p-divisibility", None)
}

/// Nonabelian nilpotent groups: every nonlinear row contains `χ(1)ε` and
/// `χ(1)ε̄` for a root of unity `ε ≠ 1`.
pub fn lemma_nilpotent_scaled_roots(name: &str, a: &Analysis) -> Verdict {
    let f = &a.report.flags;
    if !f.is_nilpotent || f.is_abelian {
        return Verdict::vacuous(name, "scaled-roots", "not nilpotent nonabelian");
    }
    let t = &a.table;
    let bad = a.nonlinear_rows().find(|&r| {
        let d = Cyc::from_integer(t.rows[r].degree);
        let values = per_char_values(t, r);
        !values.iter().any(|v| {
            *v != d && {
                let scaled = Cyc::from_rational(num_rational::BigRational::new(
                    BigInt::from(1),
                    BigInt::from(t.rows[r].degree),
                )) * v;
                is_root_of_unity(&scaled) && values.binary_search(&v.conjugate()).is_ok()
            }
        })
    });
    Verdict::outcome(name, "scaled-roots", bad.map(|r| format!("row {r}")))
}

/// Nonabelian nilpotent: `|ncv| ≥ 3`; `≥ 5` unless a 2-group; `|cd| ≥ 3 ⇒ |cdc| ≥ 4`.
pub fn lemma_nilpotent_counts(name: &str, a: &Analysis) -> Verdict {
    let r = &a.report;
    if !r.flags.is_nilpotent || r.flags.is_abelian {
        return Verdict::vacuous(name, "nilpotent-counts", "not nilpotent nonabelian");
    }
    let ncv = r.ncv.len();
    let mut fail = None;
    if ncv < 3 {
        fail = Some(format!("|ncv| = {ncv} < 3"));
    } else if r.flags.p_group_prime != Some(2) && ncv < 5 {
        fail = Some(format!("not a 2-group and |ncv| = {ncv} < 5"));
    } else if r.cd.len() >= 3 && r.cdc.len() < 4 {
        fail = Some(format!("|cd| = {} and |cdc| = {} < 4", r.cd.len(), r.cdc.len()));
    }
    Verdict::outcome(name, "nilpotent-counts", fail)
}

/// In a `p`-group, nonlinear rows never take a value of modulus 1.
pub fn lemma_p_group_modulus(name: &str, a: &Analysis) -> Verdict {
    if a.report.flags.p_group_prime.is_none() || a.report.flags.is_abelian {
        return Verdict::vacuous(name, "p-group-modulus", "not a nonabelian p-group");
    }
    let one = Cyc::one();
    let t = &a.table;
    let bad = a
        .nonlinear_rows()
        .find(|&r| t.rows[r].values.iter().any(|v| v.abs_squared() == one));
    Verdict::outcome(name, "p-group-modulus", bad.map(|r| format!("row {r} has a value of modulus 1")))
}

/// Nonabelian with a root-of-unity element ⇒ `G'` abelian and `G' ∩ Z(G) = 1`.
pub fn lemma_root_of_unity_structure(name: &str, a: &Analysis) -> Verdict {
    let r = &a.report;
    if r.flags.is_abelian || r.root_of_unity_elements.is_empty() {
        return Verdict::vacuous(name, "root-of-unity", "abelian or no root-of-unity element");
    }
    let g = a.group();
    let all: Vec<usize> = (0..g.order()).collect();
    let d = derived_subgroup(g, &all);
    let meet = intersect(&d, &center(g));
    let fail = if !is_abelian_set(g, &d) {
        Some("G' is not abelian".to_string())
    } else if meet.len() != 1 {
        Some(format!("|G' ∩ Z(G)| = {}", meet.len()))
    } else {
        None
    };
    Verdict::outcome(name, "root-of-unity", fail)
}

/// The whole lemma suite on one group.
pub fn lemma_suite(
    name: &str,
    a: &Analysis,
    factors: Option<(&PermGroup, &PermGroup)>,
    seed: u64,
) -> Vec<Verdict> {
    vec![
        lemma_quotient_values(name, a, seed),
        lemma_zero_value(name, a),
        lemma_negative_value(name, a),
        lemma_product_values(name, a, factors, seed),
        lemma_galois_partner(name, a),
        lemma_character_center(name, a),
        lemma_inverse_conjugate(name, a),
        lemma_p_element_divisibility(name, a),
        lemma_nilpotent_scaled_roots(name, a),
        lemma_nilpotent_counts(name, a),
        lemma_p_group_modulus(name, a),
        check_cd_two(name, a),
        lemma_root_of_unity_structure(name, a),
    ]
}

// ---------------------------------------------------------------------------
// corpus

/// A group under test together with its metadata.
#[derive(Debug, Clone)]
pub struct Subject {
    pub name: String,
    pub entry: Option<CatalogEntry>,
    pub analysis: Analysis,
}

impl Subject {
    pub fn new(name: &str, group: &PermGroup, seed: u64) -> Result<Self> {
        Ok(Self {
            name: name.to_string(),
            entry: catalog::lookup(name),
            analysis: analyze(group, seed)?,
        })
    }

    fn factors(&self) -> Option<&[&'static str]> {
        self.entry.as_ref().map(|e| e.nonabelian_factors)
    }
}

/// Analyses the given entries in parallel; the result keeps the input order.
pub fn analyze_entries(entries: &[CatalogEntry], seed: u64) -> Result<Vec<Subject>> {
    entries
        .par_iter()
        .map(|e| {
            let g = e.build()?;
            Ok(Subject {
                name: e.name.clone(),
                entry: Some(e.clone()),
                analysis: analyze(&g, seed)?,
            })
        })
        .collect()
}

/// Runs the selected checker(s) on one subject.
pub fn run(theorem: Theorem, s: &Subject, seed: u64) -> Result<Vec<Verdict>> {
    let (n, a) = (s.name.as_str(), &s.analysis);
    Ok(match theorem {
        Theorem::A => vec![check_a(n, a)],
        Theorem::B => vec![check_b(n, a, s.factors())],
        Theorem::C => vec![check_c(n, a)],
        Theorem::D => vec![check_d(n, a)],
        Theorem::E => vec![check_e(n, a, seed)],
        Theorem::CdTwo => vec![check_cd_two(n, a)],
        Theorem::Lemmas => {
            let built = match s.entry.as_ref().and_then(|e| e.product_of) {
                Some((h, k)) => Some((catalog::build(h)?, catalog::build(k)?)),
                None => None,
            };
            lemma_suite(n, a, built.as_ref().map(|(h, k)| (h, k)), seed)
        }
        Theorem::All => {
            let mut out = Vec::new();
            for t in [
                Theorem::A,
                Theorem::B,
                Theorem::C,
                Theorem::D,
                Theorem::E,
                Theorem::Lemmas,
            ] {
                out.extend(run(t, s, seed)?);
            }
            out
        }
    })
}

/// Runs a checker over many subjects in parallel, keeping subject order.
pub fn run_all(theorem: Theorem, subjects: &[Subject], seed: u64) -> Result<Vec<Verdict>> {
    let per: Vec<Vec<Verdict>> = subjects
        .par_iter()
        .map(|s| run(theorem, s, seed))
        .collect::<Result<_>>()?;
    Ok(per.into_iter().flatten().collect())
}

/// Scan predicates over analysed groups.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Predicate {
    CdcEq(usize),
    NcvEq(usize),
    NcvAtMost(usize),
    RowsAtMost(usize),
    DlEq(usize),
    Rational,
    Nonsolvable,
}

impl FromStr for Predicate {
    type Err = Error;

    /// `cdc=k`, `ncv=k`, `ncv<=k`, `rows<=k`, `dl=k`, `rational`, `nonsolvable`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim().replace('≤', "<=");
        let bad = || Error::Invalid(format!("unknown predicate `{s}`"));
        match s.as_str() {
            "rational" => return Ok(Predicate::Rational),
            "nonsolvable" => return Ok(Predicate::Nonsolvable),
            _ => {}
        }
        let (key, op, value) = if let Some((k, v)) = s.split_once("<=") {
            (k, "<=", v)
        } else if let Some((k, v)) = s.split_once('=') {
            (k, "=", v)
        } else {
            return Err(bad());
        };
        let v: usize = value.trim().parse().map_err(|_| bad())?;
        Ok(match (key.trim(), op) {
            ("cdc", "=") => Predicate::CdcEq(v),
            ("ncv", "=") => Predicate::NcvEq(v),
            ("ncv", "<=") => Predicate::NcvAtMost(v),
            ("rows", "<=") => Predicate::RowsAtMost(v),
            ("dl", "=") => Predicate::DlEq(v),
            _ => return Err(bad()),
        })
    }
}

impl Predicate {
    pub fn matches(&self, a: &Analysis) -> bool {
        let r = &a.report;
        match *self {
            Predicate::CdcEq(k) => r.cdc.len() == k,
            Predicate::NcvEq(k) => r.ncv.len() == k,
            Predicate::NcvAtMost(k) => r.ncv.len() <= k,
            Predicate::RowsAtMost(k) => r.per_char_cv_sizes.iter().all(|&n| n <= k),
            Predicate::DlEq(k) => r.dl.value() == Some(k),
            Predicate::Rational => r.is_rational_group,
            Predicate::Nonsolvable => !r.dl.is_solvable(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ScanReport {
    pub predicate: String,
    pub scanned: usize,
    pub matches: Vec<String>,
}

/// Names of the subjects satisfying every predicate, sorted.
pub fn scan(subjects: &[Subject], predicates: &[Predicate], label: &str) -> ScanReport {
    let mut matches: Vec<String> = subjects
        .iter()
        .filter(|s| predicates.iter().all(|p| p.matches(&s.analysis)))
        .map(|s| s.name.clone())
        .collect();
    matches.sort();
    ScanReport {
        predicate: label.to_string(),
        scanned: subjects.len(),
        matches,
    }
}

/// Parses `a & b & …` into predicates.
pub fn parse_predicates(text: &str) -> Result<Vec<Predicate>> {
    text.split('&').map(str::parse).collect()
}

// ---------------------------------------------------------------------------
// exterior square of the standard character on alternating groups

/// One tabulated value of `χ_(n−2,1,1)` on an even class.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AlternatingRow {
    pub n: usize,
    /// Cycle type as tabulated, parts possibly unsorted.
    pub listed: Vec<usize>,
    /// The cycle type actually evaluated.
    pub evaluated: Vec<usize>,
    pub expected: i64,
    pub computed: Option<i64>,
    pub even: bool,
    pub note: String,
}

impl AlternatingRow {
    pub fn passed(&self) -> bool {
        self.computed == Some(self.expected) && self.even
    }
}

/// Tabulated rows as `(parts with n subtracted from the first, value)`.
fn tabulated(n: usize) -> Vec<(Vec<usize>, i64)> {
    let t = |first: usize, rest: &[usize], v: i64| {
        let mut p = vec![n - first];
        p.extend_from_slice(rest);
        (p, v)
    };
    if n % 2 == 1 {
        vec![
            t(6, &[4, 2], 0),
            t(4, &[2, 2], -1),
            t(10, &[4, 2, 2, 2], -2),
            t(8, &[2, 2, 2, 2], -3),
        ]
    } else {
        vec![
            t(2, &[2], 0),
            t(8, &[4, 2, 2, 2], -1),
            t(6, &[2, 2, 2], -2),
            t(12, &[4, 2, 2, 2, 2], -3),
        ]
    }
}

/// Evaluates the tabulated values for `n ≥ 15`.
///
/// A listed cycle type whose parts do not sum to `n` is reported as a size
/// mismatch and then evaluated with one 2-cycle removed, the only single-part
/// correction that yields an even class.
pub fn alternating_rows(n: usize) -> Vec<AlternatingRow> {
    let lambda = Partition::new(vec![n - 2, 1, 1]).expect("valid shape");
    tabulated(n)
        .into_iter()
        .map(|(listed, expected)| {
            let literal = Partition::from_unsorted(listed.clone());
            let (evaluated, note) = match mn_value(&lambda, &literal) {
                Ok(_) => (literal, String::new()),
                Err(e) => {
                    let mut parts = listed.clone();
                    if let Some(i) = parts.iter().rposition(|&p| p == 2) {
                        parts.remove(i);
                    }
                    let fixed = Partition::from_unsorted(parts);
                    let note = format!("{e}; evaluated {fixed} instead");
                    (fixed, note)
                }
            };
            let computed = mn_value(&lambda, &evaluated)
                .ok()
                .and_then(|v| i64::try_from(v).ok());
            AlternatingRow {
                n,
                even: evaluated.is_even_class(),
                evaluated: evaluated.parts().to_vec(),
                listed,
                expected,
                computed,
                note,
            }
        })
        .collect()
}

/// Whether the closed form agrees with the recursion on every cycle type of `n`.
pub fn exterior_square_agrees(n: usize) -> bool {
    let lambda = Partition::new(vec![n - 2, 1, 1]).expect("valid shape");
    partitions(n)
        .iter()
        .all(|rho| mn_value(&lambda, rho).ok() == Some(exterior_square_standard(rho)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chartab::DEFAULT_SEED;

    fn subject(name: &str) -> Subject {
        Subject::new(name, &catalog::build(name).unwrap(), DEFAULT_SEED).unwrap()
    }

    #[test]
    fn status_follows_hypothesis_and_conclusion() {
        assert_eq!(Verdict::new("g", "A", false, false, "").status, Status::Vacuous);
        assert_eq!(Verdict::new("g", "A", true, true, "").status, Status::Pass);
        assert_eq!(Verdict::new("g", "A", true, false, "").status, Status::Fail);
    }

    #[test]
    fn theorem_a_examples() {
        let s4 = subject("S4");
        let v = check_a("S4", &s4.analysis);
        assert_eq!(v.status, Status::Pass);
        let a5 = subject("A5");
        assert_eq!(check_a("A5", &a5.analysis).status, Status::Vacuous);
    }

    #[test]
    fn theorem_c_cases() {
        for name in ["frob_3k_2(1)", "frob_3k_2(2)"] {
            let v = check_c(name, &subject(name).analysis);
            assert_eq!(v.status, Status::Pass);
            assert!(v.details.contains("case (a)"), "{}", v.details);
        }
        let v = check_c("S4", &subject("S4").analysis);
        assert!(v.details.contains("case (b)"));
        let v = check_c("Q8", &subject("Q8").analysis);
        assert_eq!(v.status, Status::Pass);
        assert!(v.details.contains("|cdc| = 3"));
    }

    #[test]
    fn theorem_c_skips_abelian_groups() {
        let v = check_c("cyclic(3)", &subject("cyclic(3)").analysis);
        assert_eq!(v.status, Status::Vacuous);
        assert!(v.details.contains("|cdc| = 2"));
    }

    #[test]
    fn theorem_d_examples() {
        let v = check_d("D8", &subject("D8").analysis);
        assert_eq!(v.details, "(a) true, (b) true, (c) true, extraspecial quotient by N of order 1");
        let v = check_d("sg_27_3", &subject("sg_27_3").analysis);
        assert_eq!(v.status, Status::Pass);
        assert!(v.details.starts_with("(a) false, (b) false, (c) false"));
        let v = check_d("D8xC2", &subject("D8xC2").analysis);
        assert!(v.details.contains("order 2"), "{}", v.details);
    }

    #[test]
    fn theorem_e_examples() {
        let v = check_e("C2xS3", &subject("C2xS3").analysis, DEFAULT_SEED);
        assert_eq!(v.status, Status::Pass, "{}", v.details);
        assert!(v.hypothesis_met);
        assert_eq!(check_e("S4", &subject("S4").analysis, DEFAULT_SEED).status, Status::Vacuous);
        assert_eq!(check_e("S4", &subject("sym(3)").analysis, DEFAULT_SEED).status, Status::Vacuous);
    }

    #[test]
    fn cd_two_examples() {
        let v = check_cd_two("sym(3)", &subject("sym(3)").analysis);
        assert!(v.details.contains("order 3"));
        let v = check_cd_two("sg_21_1", &subject("sg_21_1").analysis);
        assert!(v.details.contains("m = 3, abelian normal subgroup of order 7"));
        assert_eq!(check_cd_two("D8", &subject("D8").analysis).status, Status::Pass);
    }

    #[test]
    fn theorem_b_needs_factor_metadata() {
        let a5 = subject("A5");
        let v = check_b("A5", &a5.analysis, a5.factors());
        assert_eq!(v.status, Status::Vacuous);
        let v = check_b("A5", &a5.analysis, None);
        assert_eq!(v.status, Status::Vacuous);
        let s = subject("S4");
        assert_eq!(check_b("S4", &s.analysis, s.factors()).status, Status::Pass);
    }

    #[test]
    fn lemma_suite_on_small_groups() {
        for name in ["sym(3)", "D8", "Q8", "sg_21_1", "A5"] {
            let s = subject(name);
            for v in lemma_suite(name, &s.analysis, None, DEFAULT_SEED) {
                assert!(!v.is_fail(), "{v}");
            }
        }
    }

    #[test]
    fn predicates_parse() {
        assert_eq!("cdc=2".parse::<Predicate>().unwrap(), Predicate::CdcEq(2));
        assert_eq!("ncv<=3".parse::<Predicate>().unwrap(), Predicate::NcvAtMost(3));
        assert_eq!("rows≤4".parse::<Predicate>().unwrap(), Predicate::RowsAtMost(4));
        assert_eq!(parse_predicates("ncv=3&nonsolvable").unwrap().len(), 2);
        assert!("cdc<2".parse::<Predicate>().is_err());
    }

    #[test]
    fn alternating_table_rows() {
        for n in [15, 16, 17, 18] {
            for row in alternating_rows(n) {
                assert!(row.passed(), "{row:?}");
            }
        }
        let typo = &alternating_rows(16)[1];
        assert_eq!(typo.listed, vec![8, 4, 2, 2, 2]);
        assert_eq!(typo.evaluated, vec![8, 4, 2, 2]);
        assert!(typo.note.contains("size"), "{}", typo.note);
    }
}
