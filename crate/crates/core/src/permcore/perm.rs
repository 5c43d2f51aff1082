use std::fmt;

use crate::error::{Error, Result};

/// A bijection of `{0, .., degree-1}`.
///
/// Products compose like functions: `(p * q)(x) = p(q(x))`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<u32>,
}

impl Permutation {
    pub fn identity(degree: usize) -> Self {
        Self {
            images: (0..degree as u32).collect(),
        }
    }

    /// Builds a permutation from an image list, checking bijectivity.
    pub fn from_images(images: Vec<usize>) -> Result<Self> {
        let degree = images.len();
        let mut seen = vec![false; degree];
        for &x in &images {
            if x >= degree {
                return Err(Error::PointOutOfRange { point: x, degree });
            }
            if std::mem::replace(&mut seen[x], true) {
                return Err(Error::RepeatedPoint(x));
            }
        }
        Ok(Self {
            images: images.into_iter().map(|x| x as u32).collect(),
        })
    }

    /// Product of disjoint cycles; points not listed are fixed.
    pub fn from_cycles(cycles: &[Vec<usize>], degree: usize) -> Result<Self> {
        let mut images: Vec<u32> = (0..degree as u32).collect();
        let mut used = vec![false; degree];
        for cycle in cycles {
            for &p in cycle {
                if p >= degree {
                    return Err(Error::PointOutOfRange { point: p, degree });
                }
                if std::mem::replace(&mut used[p], true) {
                    return Err(Error::RepeatedPoint(p));
                }
            }
            for (k, &p) in cycle.iter().enumerate() {
                images[p] = cycle[(k + 1) % cycle.len()] as u32;
            }
        }
        Ok(Self { images })
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn image(&self, point: usize) -> usize {
        self.images[point] as usize
    }

    pub fn images(&self) -> impl Iterator<Item = usize> + '_ {
        self.images.iter().map(|&x| x as usize)
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| i as u32 == x)
    }

    /// `self * other`, i.e. apply `other` first.
    pub fn compose(&self, other: &Self) -> Self {
        debug_assert_eq!(self.degree(), other.degree());
        Self {
            images: other
                .images
                .iter()
                .map(|&x| self.images[x as usize])
                .collect(),
        }
    }

    pub fn inverse(&self) -> Self {
        let mut images = vec![0u32; self.images.len()];
        for (i, &x) in self.images.iter().enumerate() {
            images[x as usize] = i as u32;
        }
        Self { images }
    }

    /// Non-trivial cycles, each starting at its least point, ordered by that point.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.degree()];
        let mut out = Vec::new();
        for start in 0..self.degree() {
            if seen[start] {
                continue;
            }
            let mut cycle = vec![start];
            seen[start] = true;
            let mut x = self.image(start);
            while x != start {
                seen[x] = true;
                cycle.push(x);
                x = self.image(x);
            }
            if cycle.len() > 1 {
                out.push(cycle);
            }
        }
        out
    }

    /// Cycle lengths including fixed points, in decreasing order.
    pub fn cycle_type(&self) -> Vec<usize> {
        let mut lens: Vec<usize> = self.cycles().iter().map(Vec::len).collect();
        let moved: usize = lens.iter().sum();
        lens.extend(std::iter::repeat_n(1, self.degree() - moved));
        lens.sort_unstable_by(|a, b| b.cmp(a));
        lens
    }

    /// Extends to a larger point set by fixing the new points, after
    /// shifting every point by `offset`.
    pub fn shifted(&self, offset: usize, degree: usize) -> Self {
        let mut images: Vec<u32> = (0..degree as u32).collect();
        for (i, &x) in self.images.iter().enumerate() {
            images[i + offset] = x + offset as u32;
        }
        Self { images }
    }

    /// Cycle notation with 1-based points, `()` for the identity.
    pub fn to_cycle_string(&self) -> String {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return "()".to_string();
        }
        cycles
            .iter()
            .map(|c| {
                let pts: Vec<String> = c.iter().map(|p| (p + 1).to_string()).collect();
                format!("({})", pts.join(" "))
            })
            .collect()
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_cycle_string())
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_cycle_string())
    }
}

pub fn perm_from_cycles(cycles: &[Vec<usize>], degree: usize) -> Result<Permutation> {
    Permutation::from_cycles(cycles, degree)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn five_cycle_images() {
        let p = perm_from_cycles(&[vec![0, 1, 2, 3, 4]], 5).unwrap();
        assert_eq!(p.images().collect::<Vec<_>>(), vec![1, 2, 3, 4, 0]);
    }

    #[test]
    fn empty_product_is_identity() {
        let p = perm_from_cycles(&[], 4).unwrap();
        assert!(p.is_identity());
        assert_eq!(p.degree(), 4);
    }

    #[test]
    fn unlisted_point_fixed() {
        let p = perm_from_cycles(&[vec![1, 2], vec![3, 4]], 7).unwrap();
        assert_eq!(p.image(0), 0);
        assert_eq!(p.image(6), 6);
        assert_eq!(p.image(1), 2);
    }

    #[test]
    fn cycle_errors() {
        assert_eq!(
            perm_from_cycles(&[vec![0, 1], vec![1, 2]], 3),
            Err(Error::RepeatedPoint(1))
        );
        assert_eq!(
            perm_from_cycles(&[vec![0, 5]], 3),
            Err(Error::PointOutOfRange {
                point: 5,
                degree: 3
            })
        );
    }

    #[test]
    fn composition_is_right_to_left() {
        let a = perm_from_cycles(&[vec![0, 1]], 3).unwrap();
        let b = perm_from_cycles(&[vec![1, 2]], 3).unwrap();
        // a(b(1)) = a(2) = 2
        assert_eq!(a.compose(&b).image(1), 2);
        assert!(a.compose(&a.inverse()).is_identity());
    }

    #[test]
    fn cycle_string_round_trip() {
        let p = perm_from_cycles(&[vec![0, 2, 1], vec![3, 4]], 6).unwrap();
        assert_eq!(p.to_cycle_string(), "(1 3 2)(4 5)");
        assert_eq!(p.cycle_type(), vec![3, 2, 1]);
    }
}
