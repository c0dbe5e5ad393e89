//! Finite permutations on `{1..n}`, stored 0-based internally.

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PermError {
    #[error("images of length {0} do not form a bijection")]
    NotABijection(usize),
    #[error("transposition indices {0}, {1} out of range for degree {2}")]
    IndexOutOfRange(usize, usize, usize),
}

/// A permutation of `{0..n-1}`. `images[x]` is the image of `x`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation { images: (0..n).collect() }
    }

    pub fn from_images(images: Vec<usize>) -> Result<Self, PermError> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &v in &images {
            if v >= n || seen[v] {
                return Err(PermError::NotABijection(n));
            }
            seen[v] = true;
        }
        Ok(Permutation { images })
    }

    /// The transposition swapping `a` and `b` (0-based) in degree `n`.
    pub fn transposition(n: usize, a: usize, b: usize) -> Result<Self, PermError> {
        if a >= n || b >= n || a == b {
            return Err(PermError::IndexOutOfRange(a, b, n));
        }
        let mut images: Vec<usize> = (0..n).collect();
        images.swap(a, b);
        Ok(Permutation { images })
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn apply(&self, x: usize) -> usize {
        self.images[x]
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    /// Group product `self * other`, acting as `x -> self(other(x))`.
    /// In a product written left to right the rightmost factor acts first.
    pub fn mul(&self, other: &Permutation) -> Permutation {
        debug_assert_eq!(self.degree(), other.degree());
        let images = (0..self.degree()).map(|x| self.images[other.images[x]]).collect();
        Permutation { images }
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0; self.degree()];
        for (x, &y) in self.images.iter().enumerate() {
            images[y] = x;
        }
        Permutation { images }
    }

    pub fn cycle_count(&self) -> usize {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut count = 0;
        for start in 0..n {
            if seen[start] {
                continue;
            }
            count += 1;
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                x = self.images[x];
            }
        }
        count
    }

    /// True when the permutation is a single cycle through all points.
    pub fn is_full_cycle(&self) -> bool {
        self.degree() == 0 || self.cycle_count() == 1
    }

    /// The cycle `x -> x + 1 (mod n)`, written `(1 2 ... n)` in 1-based terms.
    pub fn forward_cycle(n: usize) -> Self {
        Permutation { images: (0..n).map(|x| (x + 1) % n.max(1)).collect() }
    }
}

impl std::fmt::Display for Permutation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        // 1-based cycle notation, fixed points omitted.
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut wrote = false;
        for start in 0..n {
            if seen[start] || self.images[start] == start {
                seen[start] = true;
                continue;
            }
            write!(f, "(")?;
            let mut x = start;
            let mut first = true;
            while !seen[x] {
                seen[x] = true;
                if !first {
                    write!(f, " ")?;
                }
                write!(f, "{}", x + 1)?;
                first = false;
                x = self.images[x];
            }
            write!(f, ")")?;
            wrote = true;
        }
        if !wrote {
            write!(f, "()")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn product_applies_rightmost_factor_first() {
        let n = 3;
        let t13 = Permutation::transposition(n, 0, 2).unwrap();
        let t23 = Permutation::transposition(n, 1, 2).unwrap();
        // (1 3)(2 3) sends 1 -> 3, 3 -> 2, 2 -> 1.
        let p = t13.mul(&t23);
        assert_eq!(p.apply(0), 2);
        assert_eq!(p.apply(2), 1);
        assert_eq!(p.apply(1), 0);
        assert!(p.is_full_cycle());
    }

    #[test]
    fn inverse_and_cycles() {
        let p = Permutation::from_images(vec![1, 2, 0, 4, 3]).unwrap();
        assert_eq!(p.mul(&p.inverse()), Permutation::identity(5));
        assert_eq!(p.cycle_count(), 2);
        assert!(!p.is_full_cycle());
        assert_eq!(p.to_string(), "(1 2 3)(4 5)");
    }

    #[test]
    fn rejects_non_bijections() {
        assert!(Permutation::from_images(vec![0, 0, 1]).is_err());
        assert!(Permutation::from_images(vec![0, 3]).is_err());
    }
}
