#![allow(dead_code)]

use charval::chartab::CharTable;
use charval::cyclo::Cyc;
use charval::permcore::PermGroup;

/// `|C_G(g)|` by counting commuting elements.
pub fn brute_centralizer(group: &PermGroup, g: usize) -> usize {
    (0..group.order())
        .filter(|&x| group.mul(x, g) == group.mul(g, x))
        .count()
}

/// Both orthogonality relations, `Σ d² = |G|`, and the column sums of
/// `|χ(g)|²` against brute-force centralizers. Exact; returns the first
/// discrepancy.
pub fn exactness(t: &CharTable) -> Result<(), String> {
    let n = t.order();
    let k = t.class_count();
    if t.rows.len() != k {
        return Err(format!("{} rows for {k} classes", t.rows.len()));
    }
    let sizes = &t.classes.class_sizes;
    if sizes.iter().sum::<usize>() != n {
        return Err("class sizes do not sum to |G|".into());
    }
    let deg_sq: u64 = t.rows.iter().map(|r| r.degree * r.degree).sum();
    if deg_sq != n as u64 {
        return Err(format!("sum of squared degrees is {deg_sq}, |G| = {n}"));
    }
    for (i, r) in t.rows.iter().enumerate() {
        if r.values[0] != Cyc::from_integer(r.degree) {
            return Err(format!("row {i}: value at identity is not the degree"));
        }
    }
    let conj: Vec<Vec<Cyc>> = t
        .rows
        .iter()
        .map(|r| r.values.iter().map(Cyc::conjugate).collect())
        .collect();
    for i in 0..k {
        for j in i..k {
            let s: Cyc = (0..k)
                .map(|c| Cyc::from_integer(sizes[c] as i64) * &t.rows[i].values[c] * &conj[j][c])
                .sum();
            let want = if i == j { n as i64 } else { 0 };
            if s != Cyc::from_integer(want) {
                return Err(format!("rows {i}, {j}: inner product {s}, expected {want}"));
            }
        }
    }
    for c in 0..k {
        let cent = brute_centralizer(&t.group, t.classes.representatives[c]);
        if cent * sizes[c] != n {
            return Err(format!("class {c}: size times centralizer is not |G|"));
        }
        for d in c..k {
            let s: Cyc = (0..k).map(|i| &t.rows[i].values[c] * &conj[i][d]).sum();
            let want = if c == d { cent as i64 } else { 0 };
            if s != Cyc::from_integer(want) {
                return Err(format!("classes {c}, {d}: column sum {s}, expected {want}"));
            }
        }
    }
    Ok(())
}

pub fn ints(v: &[i64]) -> Vec<Cyc> {
    let mut out: Vec<Cyc> = v.iter().map(|&x| Cyc::from_integer(x)).collect();
    out.sort();
    out.dedup();
    out
}

pub fn show(values: &[Cyc]) -> String {
    let s: Vec<String> = values.iter().map(ToString::to_string).collect();
    format!("{{{}}}", s.join(", "))
}
