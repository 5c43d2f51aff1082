//! Prime-field arithmetic, polynomials and small dense linear algebra over `F_p`.

use rand::Rng;

use crate::numtheory::{mod_inv, mod_pow};

/// Arithmetic modulo a prime below `2^32`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Fp {
    pub p: u64,
}

impl Fp {
    pub fn new(p: u64) -> Self {
        assert!(p < (1 << 32), "modulus must fit in 32 bits");
        Self { p }
    }

    #[inline]
    pub fn add(self, a: u64, b: u64) -> u64 {
        let s = a + b;
        if s >= self.p {
            s - self.p
        } else {
            s
        }
    }

    #[inline]
    pub fn sub(self, a: u64, b: u64) -> u64 {
        if a >= b {
            a - b
        } else {
            a + self.p - b
        }
    }

    #[inline]
    pub fn mul(self, a: u64, b: u64) -> u64 {
        a * b % self.p
    }

    #[inline]
    pub fn neg(self, a: u64) -> u64 {
        if a == 0 {
            0
        } else {
            self.p - a
        }
    }

    pub fn inv(self, a: u64) -> u64 {
        debug_assert!(a % self.p != 0);
        mod_inv(a % self.p, self.p)
    }

    pub fn pow(self, a: u64, e: u64) -> u64 {
        mod_pow(a, e, self.p)
    }

    pub fn from_i64(self, a: i64) -> u64 {
        a.rem_euclid(self.p as i64) as u64
    }

    // ---- polynomials, coefficients lowest degree first, no trailing zeros ----

    fn trim(mut a: Vec<u64>) -> Vec<u64> {
        while a.last() == Some(&0) {
            a.pop();
        }
        a
    }

    pub fn poly_sub(self, a: &[u64], b: &[u64]) -> Vec<u64> {
        let mut out = vec![0; a.len().max(b.len())];
        for (i, o) in out.iter_mut().enumerate() {
            let x = a.get(i).copied().unwrap_or(0);
            let y = b.get(i).copied().unwrap_or(0);
            *o = self.sub(x, y);
        }
        Self::trim(out)
    }

    pub fn poly_mul(self, a: &[u64], b: &[u64]) -> Vec<u64> {
        if a.is_empty() || b.is_empty() {
            return Vec::new();
        }
        let mut out = vec![0u64; a.len() + b.len() - 1];
        for (i, &x) in a.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in b.iter().enumerate() {
                out[i + j] = (out[i + j] + x * y) % self.p;
            }
        }
        Self::trim(out)
    }

    /// `(quotient, remainder)`; `b` must be nonzero.
    pub fn poly_divrem(self, a: &[u64], b: &[u64]) -> (Vec<u64>, Vec<u64>) {
        let b = Self::trim(b.to_vec());
        assert!(!b.is_empty(), "division by the zero polynomial");
        let mut r = Self::trim(a.to_vec());
        if r.len() < b.len() {
            return (Vec::new(), r);
        }
        let db = b.len() - 1;
        let lead_inv = self.inv(b[db]);
        let mut q = vec![0u64; r.len() - db];
        for i in (0..q.len()).rev() {
            let c = self.mul(r[i + db], lead_inv);
            q[i] = c;
            if c != 0 {
                for (j, &bj) in b.iter().enumerate() {
                    r[i + j] = self.sub(r[i + j], self.mul(c, bj));
                }
            }
        }
        r.truncate(db);
        (Self::trim(q), Self::trim(r))
    }

    pub fn poly_rem(self, a: &[u64], b: &[u64]) -> Vec<u64> {
        self.poly_divrem(a, b).1
    }

    pub fn monic(self, a: Vec<u64>) -> Vec<u64> {
        match a.last() {
            None => a,
            Some(&lead) => {
                let inv = self.inv(lead);
                a.into_iter().map(|c| self.mul(c, inv)).collect()
            }
        }
    }

    pub fn poly_gcd(self, a: &[u64], b: &[u64]) -> Vec<u64> {
        let mut a = Self::trim(a.to_vec());
        let mut b = Self::trim(b.to_vec());
        while !b.is_empty() {
            let r = self.poly_rem(&a, &b);
            a = b;
            b = r;
        }
        self.monic(a)
    }

    /// `base^e mod m`.
    pub fn poly_powmod(self, base: &[u64], mut e: u64, m: &[u64]) -> Vec<u64> {
        let mut acc = self.poly_rem(&[1], m);
        let mut b = self.poly_rem(base, m);
        while e > 0 {
            if e & 1 == 1 {
                acc = self.poly_rem(&self.poly_mul(&acc, &b), m);
            }
            b = self.poly_rem(&self.poly_mul(&b, &b), m);
            e >>= 1;
        }
        acc
    }

    /// Distinct roots in `F_p` of a nonzero polynomial, sorted.
    pub fn roots<R: Rng>(self, f: &[u64], rng: &mut R) -> Vec<u64> {
        let f = self.monic(Self::trim(f.to_vec()));
        if f.len() <= 1 {
            return Vec::new();
        }
        // product of (x - r) over the distinct roots
        let xp = self.poly_powmod(&[0, 1], self.p, &f);
        let g = self.poly_gcd(&f, &self.poly_sub(&xp, &[0, 1]));
        let mut out = Vec::new();
        self.split_linear(g, rng, &mut out);
        out.sort_unstable();
        out
    }

    /// Equal-degree splitting of a squarefree product of linear factors.
    fn split_linear<R: Rng>(self, g: Vec<u64>, rng: &mut R, out: &mut Vec<u64>) {
        match g.len() {
            0 | 1 => return,
            2 => {
                out.push(self.neg(g[0]));
                return;
            }
            _ => {}
        }
        if self.p == 2 {
            for r in 0..2 {
                if self.eval(&g, r) == 0 {
                    out.push(r);
                }
            }
            return;
        }
        loop {
            let a = rng.gen_range(0..self.p);
            let h = self.poly_powmod(&[a, 1], (self.p - 1) / 2, &g);
            let d = self.poly_gcd(&g, &self.poly_sub(&h, &[1]));
            if d.len() > 1 && d.len() < g.len() {
                let (q, _) = self.poly_divrem(&g, &d);
                let q = self.monic(q);
                self.split_linear(d, rng, out);
                self.split_linear(q, rng, out);
                return;
            }
        }
    }

    pub fn eval(self, f: &[u64], x: u64) -> u64 {
        f.iter().rev().fold(0, |acc, &c| self.add(self.mul(acc, x), c))
    }

    // ---- dense matrices, row-major Vec<Vec<u64>> ----

    /// Characteristic polynomial `det(xI - A)` via reduction to upper
    /// Hessenberg form; valid for every `p`.
    pub fn charpoly(self, a: &[Vec<u64>]) -> Vec<u64> {
        let n = a.len();
        let mut h: Vec<Vec<u64>> = a.to_vec();
        for m in 1..n.saturating_sub(1) {
            let Some(piv) = (m..n).find(|&i| h[i][m - 1] != 0) else {
                continue;
            };
            if piv != m {
                h.swap(piv, m);
                for row in h.iter_mut() {
                    row.swap(piv, m);
                }
            }
            let inv = self.inv(h[m][m - 1]);
            for i in m + 1..n {
                let u = self.mul(h[i][m - 1], inv);
                if u == 0 {
                    continue;
                }
                // row_i -= u row_m, then col_m += u col_i
                for j in 0..n {
                    let t = self.mul(u, h[m][j]);
                    h[i][j] = self.sub(h[i][j], t);
                }
                for row in h.iter_mut() {
                    let t = self.mul(u, row[i]);
                    row[m] = self.add(row[m], t);
                }
            }
        }
        // p_k = (x - h_kk) p_{k-1} - Σ_{i<k} h_ik (Π_{j=i+1..k} h_{j,j-1}) p_{i-1}
        let mut polys: Vec<Vec<u64>> = vec![vec![1]];
        for k in 0..n {
            let mut next = self.poly_mul(&polys[k], &[self.neg(h[k][k]), 1]);
            let mut prod = 1u64;
            for i in (0..k).rev() {
                prod = self.mul(prod, h[i + 1][i]);
                if prod == 0 {
                    break;
                }
                let c = self.mul(h[i][k], prod);
                if c != 0 {
                    let term: Vec<u64> = polys[i].iter().map(|&x| self.mul(x, c)).collect();
                    next = self.poly_sub(&next, &term);
                }
            }
            polys.push(next);
        }
        polys.pop().unwrap()
    }

    /// Basis of the null space of `a` (`rows × cols`), as column vectors.
    pub fn nullspace(self, a: &[Vec<u64>], cols: usize) -> Vec<Vec<u64>> {
        let mut m: Vec<Vec<u64>> = a.to_vec();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..cols {
            let Some(piv) = (r..m.len()).find(|&i| m[i][c] != 0) else {
                continue;
            };
            m.swap(r, piv);
            let inv = self.inv(m[r][c]);
            for x in m[r].iter_mut() {
                *x = self.mul(*x, inv);
            }
            for i in 0..m.len() {
                if i != r && m[i][c] != 0 {
                    let f = m[i][c];
                    for j in 0..cols {
                        let t = self.mul(f, m[r][j]);
                        m[i][j] = self.sub(m[i][j], t);
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        let free: Vec<usize> = (0..cols).filter(|c| !pivots.contains(c)).collect();
        free.iter()
            .map(|&f| {
                let mut v = vec![0u64; cols];
                v[f] = 1;
                for (row, &pc) in pivots.iter().enumerate() {
                    v[pc] = self.neg(m[row][f]);
                }
                v
            })
            .collect()
    }

    /// Reduced row echelon form of a list of row vectors, dropping zero rows;
    /// returns the rows and their pivot columns.
    pub fn rref(self, rows: Vec<Vec<u64>>) -> (Vec<Vec<u64>>, Vec<usize>) {
        let mut m = rows;
        let cols = m.first().map_or(0, Vec::len);
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..cols {
            let Some(piv) = (r..m.len()).find(|&i| m[i][c] != 0) else {
                continue;
            };
            m.swap(r, piv);
            let inv = self.inv(m[r][c]);
            for x in m[r].iter_mut() {
                *x = self.mul(*x, inv);
            }
            for i in 0..m.len() {
                if i != r && m[i][c] != 0 {
                    let f = m[i][c];
                    for j in 0..cols {
                        let t = self.mul(f, m[r][j]);
                        m[i][j] = self.sub(m[i][j], t);
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        m.truncate(r);
        (m, pivots)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn det(f: Fp, a: &[Vec<u64>]) -> u64 {
        // Laplace expansion, small sizes only
        let n = a.len();
        if n == 0 {
            return 1;
        }
        (0..n).fold(0, |acc, j| {
            let minor: Vec<Vec<u64>> = a[1..]
                .iter()
                .map(|row| row.iter().enumerate().filter(|&(c, _)| c != j).map(|(_, &x)| x).collect())
                .collect();
            let term = f.mul(a[0][j], det(f, &minor));
            if j % 2 == 0 {
                f.add(acc, term)
            } else {
                f.sub(acc, term)
            }
        })
    }

    #[test]
    fn polynomial_division() {
        let f = Fp::new(7);
        let a = f.poly_mul(&[1, 1], &[3, 0, 1]);
        let (q, r) = f.poly_divrem(&a, &[3, 0, 1]);
        assert_eq!(q, vec![1, 1]);
        assert!(r.is_empty());
        assert_eq!(f.poly_gcd(&a, &f.poly_mul(&[1, 1], &[3, 1])), vec![1, 1]);
    }

    #[test]
    fn roots_of_split_polynomial() {
        let f = Fp::new(31);
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        let poly = [3u64, 5, 5, 29]
            .iter()
            .fold(vec![1u64], |acc, &r| f.poly_mul(&acc, &[f.neg(r), 1]));
        assert_eq!(f.roots(&poly, &mut rng), vec![3, 5, 29]);
        // x^2 + 1 has no roots mod 31
        assert!(f.roots(&[1, 0, 1], &mut rng).is_empty());
    }

    #[test]
    fn charpoly_small_prime_large_matrix() {
        // p smaller than the dimension: trace-based methods would fail here
        let f = Fp::new(3);
        let n = 5;
        let id: Vec<Vec<u64>> = (0..n)
            .map(|i| (0..n).map(|j| u64::from(i == j)).collect())
            .collect();
        // char poly of the identity is (x - 1)^5
        let cp = f.charpoly(&id);
        let expect = (0..n).fold(vec![1u64], |acc, _| f.poly_mul(&acc, &[2, 1]));
        assert_eq!(cp, expect);
    }

    #[test]
    fn nullspace_and_rref() {
        let f = Fp::new(11);
        let a = vec![vec![1, 2, 3], vec![2, 4, 6]];
        let ns = f.nullspace(&a, 3);
        assert_eq!(ns.len(), 2);
        for v in ns {
            let dot = (0..3).fold(0, |acc, j| f.add(acc, f.mul(a[0][j], v[j])));
            assert_eq!(dot, 0);
        }
        let (rows, piv) = f.rref(vec![vec![0, 2, 4], vec![0, 1, 2], vec![3, 0, 0]]);
        assert_eq!(piv, vec![0, 1]);
        assert_eq!(rows, vec![vec![1, 0, 0], vec![0, 1, 2]]);
    }

    proptest! {
        #[test]
        fn charpoly_matches_determinant(
            entries in prop::collection::vec(0u64..13, 16),
            x in 0u64..13,
        ) {
            let f = Fp::new(13);
            let a: Vec<Vec<u64>> = entries.chunks(4).map(<[u64]>::to_vec).collect();
            let shifted: Vec<Vec<u64>> = (0..4)
                .map(|i| (0..4).map(|j| {
                    let d = if i == j { x } else { 0 };
                    f.sub(d, a[i][j])
                }).collect())
                .collect();
            prop_assert_eq!(f.eval(&f.charpoly(&a), x), det(f, &shifted));
        }

        #[test]
        fn roots_are_exactly_the_zeros(coeffs in prop::collection::vec(0u64..17, 1..7), seed in 0u64..100) {
            let f = Fp::new(17);
            let mut poly = coeffs.clone();
            poly.push(1);
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let roots = f.roots(&poly, &mut rng);
            let brute: Vec<u64> = (0..17).filter(|&x| f.eval(&poly, x) == 0).collect();
            prop_assert_eq!(roots, brute);
        }
    }
}
