//! Exact arithmetic in cyclotomic fields `Q(ζ_n)`.
//!
//! A value is stored as its residue modulo the `n`-th cyclotomic polynomial,
//! always at the least `n` whose field contains it. With that normal form,
//! structural equality is value equality.

use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::numtheory::{euler_phi, factorize, gcd, lcm, primitive_root};

type Q = BigRational;

fn cache<K, V>(cell: &'static OnceLock<Mutex<HashMap<K, V>>>) -> &'static Mutex<HashMap<K, V>> {
    cell.get_or_init(|| Mutex::new(HashMap::new()))
}

/// Coefficients of `Φ_n`, lowest degree first.
pub fn cyclotomic_polynomial(n: u32) -> Arc<Vec<i64>> {
    static PHI: OnceLock<Mutex<HashMap<u32, Arc<Vec<i64>>>>> = OnceLock::new();
    if let Some(p) = cache(&PHI).lock().unwrap().get(&n) {
        return p.clone();
    }
    // x^n - 1 divided by every Φ_d with d | n, d < n
    let mut num = vec![0i64; n as usize + 1];
    num[0] = -1;
    num[n as usize] = 1;
    for d in 1..n {
        if n % d != 0 {
            continue;
        }
        let div = cyclotomic_polynomial(d);
        let dd = div.len() - 1;
        let deg = num.len() - 1;
        let mut quot = vec![0i64; deg - dd + 1];
        for i in (0..=deg - dd).rev() {
            let c = num[i + dd];
            quot[i] = c;
            if c != 0 {
                for (j, &f) in div.iter().enumerate() {
                    num[i + j] -= c * f;
                }
            }
        }
        num = quot;
    }
    let poly = Arc::new(num);
    cache(&PHI).lock().unwrap().insert(n, poly.clone());
    poly
}

/// Reduces a polynomial (lowest degree first) modulo `Φ_n`; the result has
/// length `φ(n)`.
fn reduce(mut poly: Vec<Q>, n: u32) -> Vec<Q> {
    let phi = cyclotomic_polynomial(n);
    let d = phi.len() - 1;
    for i in (d..poly.len()).rev() {
        if poly[i].is_zero() {
            continue;
        }
        let c = std::mem::replace(&mut poly[i], Q::zero());
        for (j, &f) in phi[..d].iter().enumerate() {
            if f != 0 {
                poly[i - d + j] -= &c * Q::from_integer(BigInt::from(f));
            }
        }
    }
    poly.resize(d, Q::zero());
    poly
}

/// Applies `ζ_n ↦ ζ_n^v` to power-basis coefficients at level `n`.
fn substitute(coeffs: &[Q], n: u32, v: u64) -> Vec<Q> {
    let mut poly = vec![Q::zero(); n as usize];
    for (j, c) in coeffs.iter().enumerate() {
        if !c.is_zero() {
            poly[(j as u64 * v % n as u64) as usize] += c;
        }
    }
    reduce(poly, n)
}

/// Element `v ≡ 1 (mod n/p)` whose residue mod `p` generates `(Z/p)^×`.
fn relative_generator(n: u32, p: u32) -> u64 {
    let m = (n / p) as u64;
    let g = primitive_root(p as u64) % p as u64;
    (0..p as u64)
        .map(|t| 1 + m * t)
        .find(|v| v % p as u64 == g)
        .expect("CRT solution exists")
}

struct Descent {
    rows: Vec<usize>,
    inverse: Vec<Vec<Q>>,
}

/// Left inverse of the inclusion `Q(ζ_{n/p}) → Q(ζ_n)` for `p ∥ n`,
/// restricted to a set of rows on which it is invertible.
fn descent(n: u32, p: u32) -> Arc<Descent> {
    static DESCENT: OnceLock<Mutex<HashMap<(u32, u32), Arc<Descent>>>> = OnceLock::new();
    if let Some(d) = cache(&DESCENT).lock().unwrap().get(&(n, p)) {
        return d.clone();
    }
    let m = n / p;
    let dm = euler_phi(m as u64) as usize;
    let dn = euler_phi(n as u64) as usize;
    // columns: images of ζ_m^j = ζ_n^{pj}
    let cols: Vec<Vec<Q>> = (0..dm)
        .map(|j| {
            let mut poly = vec![Q::zero(); n as usize];
            poly[(p as usize * j) % n as usize] = Q::one();
            reduce(poly, n)
        })
        .collect();
    // choose independent rows by eliminating on the transpose
    let mut work: Vec<Vec<Q>> = cols.clone();
    let mut rows = Vec::with_capacity(dm);
    let mut r = 0;
    for i in 0..dn {
        if r == dm {
            break;
        }
        let Some(piv) = (r..dm).find(|&k| !work[k][i].is_zero()) else {
            continue;
        };
        work.swap(r, piv);
        let inv = work[r][i].recip();
        for x in work[r].iter_mut() {
            *x *= &inv;
        }
        for k in 0..dm {
            if k != r && !work[k][i].is_zero() {
                let f = work[k][i].clone();
                for c in 0..dn {
                    let t = &work[r][c] * &f;
                    work[k][c] -= t;
                }
            }
        }
        rows.push(i);
        r += 1;
    }
    assert_eq!(rows.len(), dm, "embedding has full column rank");
    // invert S = E[rows, :] by Gauss-Jordan
    let mut aug: Vec<Vec<Q>> = rows
        .iter()
        .enumerate()
        .map(|(a, &i)| {
            let mut row: Vec<Q> = cols.iter().map(|c| c[i].clone()).collect();
            row.extend((0..dm).map(|b| if a == b { Q::one() } else { Q::zero() }));
            row
        })
        .collect();
    for c in 0..dm {
        let piv = (c..dm).find(|&k| !aug[k][c].is_zero()).expect("invertible");
        aug.swap(c, piv);
        let inv = aug[c][c].recip();
        for x in aug[c].iter_mut() {
            *x *= &inv;
        }
        for k in 0..dm {
            if k != c && !aug[k][c].is_zero() {
                let f = aug[k][c].clone();
                for col in 0..2 * dm {
                    let t = &aug[c][col] * &f;
                    aug[k][col] -= t;
                }
            }
        }
    }
    let inverse = aug.into_iter().map(|row| row[dm..].to_vec()).collect();
    let d = Arc::new(Descent { rows, inverse });
    cache(&DESCENT).lock().unwrap().insert((n, p), d.clone());
    d
}

/// Coefficients of `a` at level `n` rewritten at level `n/p`, assuming `a`
/// lies in that subfield.
fn descend(coeffs: &[Q], n: u32, p: u32, squared: bool) -> Vec<Q> {
    if squared {
        // Φ_n(x) = Φ_{n/p}(x^p): the subfield is spanned by x^{pj}
        return coeffs.iter().step_by(p as usize).cloned().collect();
    }
    let d = descent(n, p);
    d.inverse
        .iter()
        .map(|row| {
            row.iter()
                .zip(&d.rows)
                .fold(Q::zero(), |acc, (w, &i)| acc + w * &coeffs[i])
        })
        .collect()
}

/// An element of a cyclotomic field, in conductor-minimal normal form.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Cyc {
    conductor: u32,
    coeffs: Vec<Q>,
}

/// Rationality data for a value.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Classification {
    pub is_rational: bool,
    pub is_rational_integer: bool,
    /// Rational integer `>= 1`; zero is not counted.
    pub is_positive_natural: bool,
    pub abs_squared: Cyc,
}

impl Cyc {
    pub fn zero() -> Self {
        Self::from_rational(Q::zero())
    }

    pub fn one() -> Self {
        Self::from_rational(Q::one())
    }

    pub fn from_integer(v: impl Into<BigInt>) -> Self {
        Self::from_rational(Q::from_integer(v.into()))
    }

    pub fn from_rational(q: Q) -> Self {
        Self {
            conductor: 1,
            coeffs: vec![q],
        }
    }

    /// Value with the given power-basis coefficients at level `conductor`;
    /// the conductor is then minimized.
    pub fn from_parts(conductor: u32, coeffs: Vec<Q>) -> Result<Self> {
        if conductor == 0 {
            return Err(Error::Invalid("conductor must be positive".into()));
        }
        let need = euler_phi(conductor as u64) as usize;
        if coeffs.len() != need {
            return Err(Error::Invalid(format!(
                "conductor {conductor} needs {need} coefficients, got {}",
                coeffs.len()
            )));
        }
        Ok(Self::canonical(conductor, coeffs))
    }

    /// `ζ_n^k`.
    pub fn root_of_unity(n: u32, k: i64) -> Self {
        assert!(n >= 1, "root of unity order must be positive");
        Self::from_exponents(n, &[(k, Q::one())])
    }

    /// `Σ c ζ_n^k` over the given `(k, c)` terms.
    pub fn from_exponents(n: u32, terms: &[(i64, Q)]) -> Self {
        assert!(n >= 1, "root of unity order must be positive");
        let mut poly = vec![Q::zero(); n as usize];
        for (k, c) in terms {
            poly[k.rem_euclid(n as i64) as usize] += c;
        }
        Self::canonical(n, reduce(poly, n))
    }

    fn canonical(mut n: u32, mut coeffs: Vec<Q>) -> Self {
        'descend: loop {
            if n == 1 {
                break;
            }
            if coeffs[1..].iter().all(Zero::is_zero) {
                n = 1;
                coeffs.truncate(1);
                break;
            }
            for (p, e) in factorize(n as u64) {
                let p = p as u32;
                let squared = e >= 2;
                let inside = if squared {
                    coeffs
                        .iter()
                        .enumerate()
                        .all(|(i, c)| i % p as usize == 0 || c.is_zero())
                } else {
                    // the relative Galois group is cyclic, so fixing a generator suffices
                    substitute(&coeffs, n, relative_generator(n, p)) == coeffs
                };
                if inside {
                    coeffs = descend(&coeffs, n, p, squared);
                    n /= p;
                    continue 'descend;
                }
            }
            break;
        }
        Self {
            conductor: n,
            coeffs,
        }
    }

    pub fn conductor(&self) -> u32 {
        self.conductor
    }

    /// Power-basis coefficients modulo `Φ_conductor`.
    pub fn coeffs(&self) -> &[Q] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.conductor == 1 && self.coeffs[0].is_zero()
    }

    pub fn is_rational(&self) -> bool {
        self.conductor == 1
    }

    pub fn as_rational(&self) -> Option<&Q> {
        self.is_rational().then(|| &self.coeffs[0])
    }

    pub fn as_integer(&self) -> Option<BigInt> {
        self.as_rational()
            .filter(|q| q.is_integer())
            .map(|q| q.to_integer())
    }

    /// Coefficients at level `n`, a multiple of the conductor.
    fn embed(&self, n: u32) -> Vec<Q> {
        if n == self.conductor {
            return self.coeffs.clone();
        }
        let step = (n / self.conductor) as usize;
        let mut poly = vec![Q::zero(); n as usize];
        for (j, c) in self.coeffs.iter().enumerate() {
            poly[j * step] = c.clone();
        }
        reduce(poly, n)
    }

    fn scale(&self, q: &Q) -> Self {
        if q.is_zero() {
            return Self::zero();
        }
        Self {
            conductor: self.conductor,
            coeffs: self.coeffs.iter().map(|c| c * q).collect(),
        }
    }

    fn add_ref(&self, other: &Self) -> Self {
        if let (Some(a), Some(b)) = (self.as_rational(), other.as_rational()) {
            return Self::from_rational(a + b);
        }
        let n = lcm(self.conductor as u64, other.conductor as u64) as u32;
        let mut a = self.embed(n);
        for (x, y) in a.iter_mut().zip(other.embed(n)) {
            *x += y;
        }
        Self::canonical(n, a)
    }

    fn mul_ref(&self, other: &Self) -> Self {
        if let Some(q) = self.as_rational() {
            return other.scale(q);
        }
        if let Some(q) = other.as_rational() {
            return self.scale(q);
        }
        let n = lcm(self.conductor as u64, other.conductor as u64) as u32;
        let a = self.embed(n);
        let b = other.embed(n);
        let mut prod = vec![Q::zero(); a.len() + b.len() - 1];
        for (i, x) in a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.iter().enumerate() {
                if !y.is_zero() {
                    prod[i + j] += x * y;
                }
            }
        }
        Self::canonical(n, reduce(prod, n))
    }

    pub fn pow(&self, e: u32) -> Self {
        (0..e).fold(Self::one(), |acc, _| &acc * self)
    }

    /// Complex conjugate, `ζ ↦ ζ^-1`.
    pub fn conjugate(&self) -> Self {
        if self.is_rational() {
            return self.clone();
        }
        let n = self.conductor;
        Self::canonical(n, substitute(&self.coeffs, n, (n - 1) as u64))
    }

    /// Galois automorphism `ζ ↦ ζ^v`; `v` must be coprime to the conductor.
    pub fn galois(&self, v: i64) -> Result<Self> {
        let n = self.conductor;
        let r = v.rem_euclid(n as i64) as u64;
        if gcd(r, n as u64) != 1 {
            return Err(Error::NotCoprime {
                value: v,
                conductor: n,
            });
        }
        if self.is_rational() {
            return Ok(self.clone());
        }
        Ok(Self::canonical(n, substitute(&self.coeffs, n, r)))
    }

    /// All distinct Galois conjugates, including the value itself.
    pub fn galois_orbit(&self) -> Vec<Cyc> {
        let n = self.conductor as i64;
        let mut out: Vec<Cyc> = (1..=n.max(1))
            .filter(|&v| gcd(v as u64, n as u64) == 1)
            .map(|v| self.galois(v).expect("coprime by construction"))
            .collect();
        out.sort();
        out.dedup();
        out
    }

    /// `a · conj(a)`.
    pub fn abs_squared(&self) -> Self {
        self * &self.conjugate()
    }

    pub fn classify(&self) -> Classification {
        let integer = self.as_integer();
        Classification {
            is_rational: self.is_rational(),
            is_rational_integer: integer.is_some(),
            is_positive_natural: integer.is_some_and(|i| i >= BigInt::one()),
            abs_squared: self.abs_squared(),
        }
    }

    /// Floating-point approximation `(re, im)`. Diagnostic only; never used
    /// to decide anything about a value.
    pub fn approx(&self) -> (f64, f64) {
        let n = self.conductor as f64;
        self.coeffs
            .iter()
            .enumerate()
            .fold((0.0, 0.0), |(re, im), (j, c)| {
                let c = c.to_f64().unwrap_or(f64::NAN);
                let t = std::f64::consts::TAU * j as f64 / n;
                (re + c * t.cos(), im + c * t.sin())
            })
    }
}

impl Default for Cyc {
    fn default() -> Self {
        Self::zero()
    }
}

impl From<i64> for Cyc {
    fn from(v: i64) -> Self {
        Self::from_integer(v)
    }
}

impl From<Q> for Cyc {
    fn from(q: Q) -> Self {
        Self::from_rational(q)
    }
}

macro_rules! binop {
    ($tr:ident, $f:ident, $body:expr) => {
        impl $tr<&Cyc> for &Cyc {
            type Output = Cyc;
            fn $f(self, rhs: &Cyc) -> Cyc {
                $body(self, rhs)
            }
        }
        impl $tr<Cyc> for Cyc {
            type Output = Cyc;
            fn $f(self, rhs: Cyc) -> Cyc {
                $body(&self, &rhs)
            }
        }
        impl $tr<&Cyc> for Cyc {
            type Output = Cyc;
            fn $f(self, rhs: &Cyc) -> Cyc {
                $body(&self, rhs)
            }
        }
        impl $tr<Cyc> for &Cyc {
            type Output = Cyc;
            fn $f(self, rhs: Cyc) -> Cyc {
                $body(self, &rhs)
            }
        }
    };
}

binop!(Add, add, |a: &Cyc, b: &Cyc| a.add_ref(b));
binop!(Sub, sub, |a: &Cyc, b: &Cyc| a.add_ref(&-b));
binop!(Mul, mul, |a: &Cyc, b: &Cyc| a.mul_ref(b));

impl Neg for &Cyc {
    type Output = Cyc;
    fn neg(self) -> Cyc {
        Cyc {
            conductor: self.conductor,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Neg for Cyc {
    type Output = Cyc;
    fn neg(self) -> Cyc {
        -&self
    }
}

impl std::iter::Sum for Cyc {
    fn sum<I: Iterator<Item = Cyc>>(iter: I) -> Cyc {
        iter.fold(Cyc::zero(), |a, b| a + b)
    }
}

impl<'a> std::iter::Sum<&'a Cyc> for Cyc {
    fn sum<I: Iterator<Item = &'a Cyc>>(iter: I) -> Cyc {
        iter.fold(Cyc::zero(), |a, b| a + b)
    }
}

/// Rationals first, by value; then irrationals by display string.
impl Ord for Cyc {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self.as_rational(), other.as_rational()) {
            (Some(a), Some(b)) => a.cmp(b),
            (Some(_), None) => Ordering::Less,
            (None, Some(_)) => Ordering::Greater,
            (None, None) => self.to_string().cmp(&other.to_string()),
        }
    }
}

impl PartialOrd for Cyc {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Cyc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(q) = self.as_rational() {
            return write!(f, "{q}");
        }
        let n = self.conductor;
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            let body = match k {
                0 => mag.to_string(),
                _ => {
                    let z = if k == 1 {
                        format!("z({n})")
                    } else {
                        format!("z({n})^{k}")
                    };
                    if mag.is_one() {
                        z
                    } else {
                        format!("{mag}*{z}")
                    }
                }
            };
            let sign = match (first, c.is_negative()) {
                (true, true) => "-",
                (true, false) => "",
                (false, true) => " - ",
                (false, false) => " + ",
            };
            write!(f, "{sign}{body}")?;
            first = false;
        }
        Ok(())
    }
}

impl fmt::Debug for Cyc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

struct Scanner<'a> {
    s: &'a [u8],
    pos: usize,
}

impl Scanner<'_> {
    fn err(&self, message: impl Into<String>) -> Error {
        Error::Parse {
            line: 1,
            column: self.pos + 1,
            message: message.into(),
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.s.len() && self.s[self.pos] == b' ' {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.s.get(self.pos).copied()
    }

    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: u8) -> Result<()> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(self.err(format!("expected `{}`", c as char)))
        }
    }

    fn integer(&mut self) -> Result<BigInt> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.err("expected a number"));
        }
        let text = std::str::from_utf8(&self.s[start..self.pos]).expect("ascii digits");
        Ok(text.parse().expect("digits parse"))
    }

    fn small(&mut self) -> Result<u32> {
        let v = self.integer()?;
        v.to_u32().ok_or_else(|| self.err("number too large"))
    }

    /// `z(n)` or `z(n)^k`, as `(n, k)`.
    fn zpow(&mut self) -> Result<(u32, u32)> {
        self.expect(b'z')?;
        self.expect(b'(')?;
        let n = self.small()?;
        if n == 0 {
            return Err(self.err("conductor must be positive"));
        }
        self.expect(b')')?;
        let k = if self.eat(b'^') { self.small()? } else { 1 };
        Ok((n, k))
    }

    fn term(&mut self) -> Result<(Q, Option<(u32, u32)>)> {
        if self.peek() == Some(b'z') {
            return Ok((Q::one(), Some(self.zpow()?)));
        }
        let num = self.integer()?;
        let den = if self.eat(b'/') {
            let d = self.integer()?;
            if d.is_zero() {
                return Err(self.err("zero denominator"));
            }
            d
        } else {
            BigInt::one()
        };
        let q = Q::new(num, den);
        if self.eat(b'*') {
            Ok((q, Some(self.zpow()?)))
        } else {
            Ok((q, None))
        }
    }
}

impl FromStr for Cyc {
    type Err = Error;

    /// Accepts the display grammar and, more generally, any signed sum of
    /// terms `q`, `q*z(n)^k`, `z(n)^k`.
    fn from_str(s: &str) -> Result<Self> {
        let mut sc = Scanner {
            s: s.as_bytes(),
            pos: 0,
        };
        let mut terms: Vec<(Q, Option<(u32, u32)>)> = Vec::new();
        let mut negative = sc.eat(b'-');
        loop {
            let (q, z) = sc.term()?;
            terms.push((if negative { -q } else { q }, z));
            match sc.peek() {
                None => break,
                Some(b'+') => negative = false,
                Some(b'-') => negative = true,
                Some(_) => return Err(sc.err("expected `+` or `-`")),
            }
            sc.pos += 1;
        }
        let n = terms
            .iter()
            .filter_map(|(_, z)| z.map(|(n, _)| n as u64))
            .fold(1u64, lcm) as u32;
        let exps: Vec<(i64, Q)> = terms
            .into_iter()
            .map(|(q, z)| match z {
                None => (0, q),
                Some((m, k)) => ((n / m) as i64 * k as i64, q),
            })
            .collect();
        Ok(Self::from_exponents(n, &exps))
    }
}

impl Serialize for Cyc {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Cyc {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

pub fn root_of_unity(n: u32, k: i64) -> Cyc {
    Cyc::root_of_unity(n, k)
}

pub fn conjugate(a: &Cyc) -> Cyc {
    a.conjugate()
}

pub fn galois(a: &Cyc, v: i64) -> Result<Cyc> {
    a.galois(v)
}

pub fn classify(a: &Cyc) -> Classification {
    a.classify()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn z(n: u32, k: i64) -> Cyc {
        root_of_unity(n, k)
    }

    fn int(v: i64) -> Cyc {
        Cyc::from_integer(v)
    }

    fn close(a: &Cyc, b: (f64, f64)) -> bool {
        let (x, y) = a.approx();
        (x - b.0).abs() < 1e-9 && (y - b.1).abs() < 1e-9
    }

    #[test]
    fn cyclotomic_polynomials() {
        assert_eq!(*cyclotomic_polynomial(1), vec![-1, 1]);
        assert_eq!(*cyclotomic_polynomial(4), vec![1, 0, 1]);
        assert_eq!(*cyclotomic_polynomial(6), vec![1, -1, 1]);
        assert_eq!(*cyclotomic_polynomial(12), vec![1, 0, -1, 0, 1]);
        let p105 = cyclotomic_polynomial(105);
        assert_eq!(p105.len() - 1, 48);
        assert_eq!(p105[7], -2);
    }

    #[test]
    fn roots_of_unity() {
        let i = z(4, 1);
        assert_eq!(i.conductor(), 4);
        assert_eq!(&i * &i, int(-1));
        assert_eq!(z(6, 3), int(-1));
        assert_eq!(z(6, 3).conductor(), 1);
        assert_eq!(z(2, 1), int(-1));
        assert_eq!(z(1, 0), int(1));
        // ζ6 = -ζ3^2 has conductor 3
        assert_eq!(z(6, 1).conductor(), 3);
        assert_eq!(z(6, 1), -z(3, 2));
        assert_eq!(z(12, 3), z(4, 1));
    }

    #[test]
    fn golden_ratio_value() {
        let a = z(5, 1) + z(5, 4);
        assert_eq!(a.conductor(), 5);
        // minimal polynomial x^2 + x - 1
        assert_eq!(&a * &a + &a - int(1), Cyc::zero());
        assert_eq!(a.to_string(), "-1 - z(5)^2 - z(5)^3");
        let (re, _) = a.approx();
        assert!((re - (5f64.sqrt() - 1.0) / 2.0).abs() < 1e-12);
    }

    #[test]
    fn arithmetic_examples() {
        assert_eq!(z(3, 1) + z(3, 2), int(-1));
        assert_eq!(z(5, 1) * z(5, 4), int(1));
        let eta = z(7, 1) + z(7, 2) + z(7, 4);
        let bar = z(7, 3) + z(7, 5) + z(7, 6);
        assert_eq!(&eta * &bar, int(2));
        assert_eq!(eta.conjugate(), bar);
        assert_eq!(eta.conductor(), 7);
        // η is a root of x^2 + x + 2
        assert_eq!(&eta * &eta + &eta + int(2), Cyc::zero());
    }

    #[test]
    fn quadratic_subfields_descend() {
        // Gauss sum over F_7 gives i√7, conductor 7
        let g: Cyc = (1..7)
            .map(|k| {
                let qr = [1, 2, 4].contains(&k);
                if qr { z(7, k) } else { -z(7, k) }
            })
            .sum();
        assert_eq!(g.conductor(), 7);
        assert_eq!(&g * &g, int(-7));
        // √2 = ζ8 + ζ8^-1 stays at conductor 8
        let r2 = z(8, 1) + z(8, 7);
        assert_eq!(r2.conductor(), 8);
        assert_eq!(&r2 * &r2, int(2));
        // √-3 = ζ3 - ζ3^2 seen inside Q(ζ12)
        let s = z(12, 4) - z(12, 8);
        assert_eq!(s.conductor(), 3);
        // ζ15 ζ15^... products landing in Q(ζ5)
        assert_eq!((z(15, 3) * z(15, 9)).conductor(), 5);
        assert_eq!(z(15, 5) * z(15, 10), int(1));
    }

    #[test]
    fn conjugate_and_galois() {
        assert_eq!(z(4, 1).conjugate(), -z(4, 1));
        let q = Cyc::from_rational(Q::new(3.into(), 7.into()));
        assert_eq!(q.conjugate(), q);
        let a = z(5, 1) + z(5, 4);
        assert_eq!(a.galois(2).unwrap(), z(5, 2) + z(5, 3));
        assert_eq!(
            a.galois(5).unwrap_err(),
            Error::NotCoprime {
                value: 5,
                conductor: 5
            }
        );
        assert_eq!(a.galois_orbit().len(), 2);
    }

    #[test]
    fn classification() {
        let c = int(-1).classify();
        assert!(c.is_rational_integer && !c.is_positive_natural);
        assert!(!Cyc::zero().classify().is_positive_natural);
        assert!(int(3).classify().is_positive_natural);
        let half = Cyc::from_rational(Q::new(1.into(), 2.into()));
        assert!(half.classify().is_rational && !half.classify().is_rational_integer);
        let a = z(5, 1) + z(5, 4);
        let c = a.classify();
        assert!(!c.is_rational);
        // a is real, so |a|^2 = a^2 = 1 - a, which is irrational
        assert_eq!(c.abs_squared, &a * &a);
        assert_eq!(c.abs_squared, int(1) - &a);
        assert!(!c.abs_squared.is_rational());
        assert_eq!(z(7, 1).classify().abs_squared, int(1));
    }

    #[test]
    fn display_and_parse() {
        let cases = [
            ("0", Cyc::zero()),
            ("-3/4", Cyc::from_rational(Q::new((-3).into(), 4.into()))),
            ("z(4)", z(4, 1)),
            ("-z(4)", z(4, 3)),
            ("z(3)", z(3, 1)),
            ("-1 - z(3)", z(3, 2)),
        ];
        for (s, v) in cases {
            assert_eq!(v.to_string(), s);
            assert_eq!(s.parse::<Cyc>().unwrap(), v);
        }
        assert_eq!("1/2*z(8) + 1/2*z(8)^7".parse::<Cyc>().unwrap().conductor(), 8);
        assert_eq!("z(6)^3".parse::<Cyc>().unwrap(), int(-1));
        assert_eq!("z(3) + z(4)".parse::<Cyc>().unwrap(), z(3, 1) + z(4, 1));
        assert!(matches!("z(0)".parse::<Cyc>(), Err(Error::Parse { .. })));
        assert!(matches!("1/0".parse::<Cyc>(), Err(Error::Parse { .. })));
        assert!(matches!("1 +".parse::<Cyc>(), Err(Error::Parse { .. })));
        assert!(matches!("2 z(3)".parse::<Cyc>(), Err(Error::Parse { .. })));
    }

    #[test]
    fn ordering() {
        let mut v = vec![z(4, 1), int(2), int(-1), Cyc::zero(), z(3, 1)];
        v.sort();
        assert_eq!(v[..3], [int(-1), Cyc::zero(), int(2)]);
        assert!(v[3] < v[4]);
    }

    #[test]
    fn serde_round_trip() {
        let a = z(5, 1) + z(5, 4);
        let json = serde_json::to_string(&a).unwrap();
        assert_eq!(json, "\"-1 - z(5)^2 - z(5)^3\"");
        let back: Cyc = serde_json::from_str(&json).unwrap();
        assert_eq!(back, a);
    }

    const CONDUCTORS: [u32; 10] = [1, 3, 4, 5, 7, 8, 9, 12, 15, 20];

    fn arb_cyc() -> impl Strategy<Value = Cyc> {
        (
            prop::sample::select(CONDUCTORS.to_vec()),
            prop::collection::vec((0i64..40, -3i64..4), 0..5),
        )
            .prop_map(|(n, terms)| {
                let terms: Vec<(i64, Q)> = terms
                    .into_iter()
                    .map(|(k, c)| (k, Q::from_integer(c.into())))
                    .collect();
                Cyc::from_exponents(n, &terms)
            })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn ring_axioms(a in arb_cyc(), b in arb_cyc(), c in arb_cyc()) {
            prop_assert_eq!(&a + &b, &b + &a);
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert_eq!((&a + &b) + &c, &a + (&b + &c));
            prop_assert_eq!((&a * &b) * &c, &a * (&b * &c));
            prop_assert_eq!(&a * (&b + &c), &a * &b + &a * &c);
            prop_assert_eq!(&a - &a, Cyc::zero());
        }

        #[test]
        fn arithmetic_matches_floating_point(a in arb_cyc(), b in arb_cyc()) {
            let (ar, ai) = a.approx();
            let (br, bi) = b.approx();
            prop_assert!(close(&(&a + &b), (ar + br, ai + bi)));
            prop_assert!(close(&(&a * &b), (ar * br - ai * bi, ar * bi + ai * br)));
            prop_assert!(close(&a.conjugate(), (ar, -ai)));
        }

        #[test]
        fn canonical_form_is_idempotent(a in arb_cyc()) {
            let again = Cyc::from_parts(a.conductor(), a.coeffs().to_vec()).unwrap();
            prop_assert_eq!(&again, &a);
            prop_assert!(a.conductor() % 4 != 2);
        }

        #[test]
        fn conjugation_is_involutive(a in arb_cyc()) {
            prop_assert_eq!(a.conjugate().conjugate(), a.clone());
            if a.is_rational() {
                prop_assert_eq!(a.conjugate(), a.clone());
            }
        }

        #[test]
        fn galois_permutes_conjugates(a in arb_cyc(), v in 1i64..60) {
            if gcd(v as u64, a.conductor() as u64) == 1 {
                let orbit = a.galois_orbit();
                let b = a.galois(v).unwrap();
                prop_assert!(orbit.contains(&b));
                prop_assert_eq!(b.galois_orbit(), orbit);
            }
        }

        #[test]
        fn roots_of_unity_have_modulus_one(n in 1u32..40, k in -50i64..50) {
            prop_assert_eq!(root_of_unity(n, k).abs_squared(), Cyc::one());
        }

        #[test]
        fn display_round_trips(a in arb_cyc()) {
            let s = a.to_string();
            prop_assert_eq!(s.parse::<Cyc>().unwrap(), a);
        }
    }
}
