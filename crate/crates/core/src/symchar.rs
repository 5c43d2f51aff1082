//! Symmetric-group characters: Murnaghan–Nakayama values and hook-length degrees.

use std::collections::HashMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::numtheory::factorial;

/// A weakly decreasing sequence of positive integers.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    parts: Vec<usize>,
}

/// Cycle type of a permutation; same shape rule as [`Partition`].
pub type CycleType = Partition;

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::InvalidPartition(format!("{parts:?} has a zero part")));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(format!(
                "{parts:?} is not weakly decreasing"
            )));
        }
        Ok(Self { parts })
    }

    /// Sorts the parts and drops zeros.
    pub fn from_unsorted(mut parts: Vec<usize>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Self { parts }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn n(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn transpose(&self) -> Self {
        let width = self.parts.first().copied().unwrap_or(0);
        let parts = (0..width)
            .map(|c| self.parts.iter().filter(|&&p| p > c).count())
            .collect();
        Self { parts }
    }

    /// Whether this cycle type is an even permutation.
    pub fn is_even_class(&self) -> bool {
        self.parts.iter().filter(|&&p| p % 2 == 0).count() % 2 == 0
    }

    /// Number of parts equal to `k`.
    pub fn multiplicity(&self, k: usize) -> usize {
        self.parts.iter().filter(|&&p| p == k).count()
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.parts.iter().map(ToString::to_string).collect();
        write!(f, "({})", s.join(","))
    }
}

impl std::str::FromStr for Partition {
    type Err = Error;

    /// Comma-separated parts, e.g. `13,1,1`.
    fn from_str(s: &str) -> Result<Self> {
        let parts = s
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::InvalidPartition(format!("`{t}` is not a part")))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(parts)
    }
}

/// All partitions of `n`, in reverse lexicographic order.
pub fn partitions(n: usize) -> Vec<Partition> {
    fn go(rest: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if rest == 0 {
            out.push(Partition { parts: cur.clone() });
            return;
        }
        for k in (1..=rest.min(max)).rev() {
            cur.push(k);
            go(rest - k, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out
}

/// Beta-set (first-column hook lengths) of `parts`, decreasing.
fn beta_set(parts: &[usize]) -> Vec<usize> {
    let r = parts.len();
    parts.iter().enumerate().map(|(i, &p)| p + r - 1 - i).collect()
}

fn from_beta(beta: &[usize]) -> Vec<usize> {
    let r = beta.len();
    let mut sorted = beta.to_vec();
    sorted.sort_unstable_by(|a, b| b.cmp(a));
    sorted
        .iter()
        .enumerate()
        .map(|(i, &b)| b - (r - 1 - i))
        .filter(|&p| p > 0)
        .collect()
}

type Memo = HashMap<(Vec<usize>, usize), BigInt>;

fn mn_rec(parts: &[usize], rho: &[usize], pos: usize, memo: &mut Memo) -> BigInt {
    if pos == rho.len() {
        return if parts.is_empty() {
            BigInt::one()
        } else {
            BigInt::zero()
        };
    }
    let key = (parts.to_vec(), pos);
    if let Some(v) = memo.get(&key) {
        return v.clone();
    }
    let h = rho[pos];
    let beta = beta_set(parts);
    let mut total = BigInt::zero();
    // a border strip of size h is a bead moved from b to b - h into a gap
    for (idx, &b) in beta.iter().enumerate() {
        if b < h || beta.contains(&(b - h)) {
            continue;
        }
        let height = beta.iter().filter(|&&x| x > b - h && x < b).count();
        let mut next = beta.clone();
        next[idx] = b - h;
        let v = mn_rec(&from_beta(&next), rho, pos + 1, memo);
        if height % 2 == 0 {
            total += v;
        } else {
            total -= v;
        }
    }
    memo.insert(key, total.clone());
    total
}

/// `χ_λ(ρ)` by the Murnaghan–Nakayama rule.
pub fn mn_value(lambda: &Partition, rho: &CycleType) -> Result<BigInt> {
    if lambda.n() != rho.n() {
        return Err(Error::SizeMismatch {
            partition: lambda.n(),
            cycle_type: rho.n(),
        });
    }
    Ok(mn_rec(&lambda.parts, &rho.parts, 0, &mut Memo::new()))
}

/// `χ_λ(1) = n! / ∏ hook lengths`.
pub fn hook_degree(lambda: &Partition) -> BigInt {
    let cols = lambda.transpose();
    let hooks = lambda
        .parts
        .iter()
        .enumerate()
        .flat_map(|(i, &row)| {
            let cols = &cols;
            (0..row).map(move |j| (row - j - 1) + (cols.parts[j] - i - 1) + 1)
        })
        .fold(BigInt::one(), |acc, h| acc * h);
    factorial(lambda.n() as u64) / hooks
}

pub fn is_self_conjugate(lambda: &Partition) -> bool {
    lambda.transpose() == *lambda
}

/// `½(f² − f(g²)) − f + 1` with `f` the fixed-point count: the exterior
/// square of the standard character, i.e. `χ_(n−2,1,1)`.
pub fn exterior_square_standard(rho: &CycleType) -> BigInt {
    let f = rho.multiplicity(1) as i64;
    let f2 = f + 2 * rho.multiplicity(2) as i64;
    BigInt::from((f * f - f2) / 2 - f + 1)
}
