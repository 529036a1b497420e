use std::fmt;
use std::ops::Mul;

use crate::error::{Error, Result};

/// A permutation of `{0, .., degree-1}` stored as its image array.
///
/// Products act on the right: `(p * q)` applies `p` first, then `q`,
/// so `i^(p*q) = (i^p)^q`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Perm {
    images: Vec<u32>,
}

impl Perm {
    pub fn identity(degree: usize) -> Perm {
        Perm { images: (0..degree as u32).collect() }
    }

    /// Builds a permutation from its image array, checking bijectivity.
    pub fn from_images(images: Vec<u32>) -> Result<Perm> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &x in &images {
            let x = x as usize;
            if x >= n {
                return Err(Error::PointOutOfRange { point: x, degree: n });
            }
            if seen[x] {
                return Err(Error::InvalidArgument(format!("image {x} appears twice; not a bijection")));
            }
            seen[x] = true;
        }
        Ok(Perm { images })
    }

    pub(crate) fn from_images_unchecked(images: Vec<u32>) -> Perm {
        debug_assert!(Perm::from_images(images.clone()).is_ok());
        Perm { images }
    }

    /// Product of the given cycles (points 0-based), applied left to right.
    pub fn from_cycles(degree: usize, cycles: &[Vec<usize>]) -> Result<Perm> {
        let mut result = Perm::identity(degree);
        for cycle in cycles {
            let mut c = Perm::identity(degree);
            for (i, &pt) in cycle.iter().enumerate() {
                if pt >= degree {
                    return Err(Error::PointOutOfRange { point: pt + 1, degree });
                }
                if cycle[..i].contains(&pt) {
                    return Err(Error::RepeatedPoint(pt + 1));
                }
                let next = cycle[(i + 1) % cycle.len()];
                c.images[pt] = next as u32;
            }
            result = &result * &c;
        }
        Ok(result)
    }

    #[inline]
    pub fn degree(&self) -> usize {
        self.images.len()
    }

    #[inline]
    pub fn images(&self) -> &[u32] {
        &self.images
    }

    #[inline]
    pub fn apply(&self, point: u32) -> u32 {
        self.images[point as usize]
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| i as u32 == x)
    }

    pub fn inverse(&self) -> Perm {
        let mut inv = vec![0u32; self.images.len()];
        for (i, &x) in self.images.iter().enumerate() {
            inv[x as usize] = i as u32;
        }
        Perm { images: inv }
    }

    /// `self^k` by repeated squaring.
    pub fn pow(&self, mut k: u64) -> Perm {
        let mut base = self.clone();
        let mut acc = Perm::identity(self.degree());
        while k > 0 {
            if k & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            k >>= 1;
        }
        acc
    }

    /// Conjugate `g^-1 * self * g`.
    pub fn conjugate_by(&self, g: &Perm) -> Perm {
        // i^(g^-1 p g): write j = i^(g^-1); result maps j^g -> j^(p g)
        let mut out = vec![0u32; self.images.len()];
        for (j, &pj) in self.images.iter().enumerate() {
            out[g.images[j] as usize] = g.images[pj as usize];
        }
        Perm { images: out }
    }

    /// Order of the permutation (lcm of cycle lengths).
    pub fn order(&self) -> u64 {
        let mut seen = vec![false; self.degree()];
        let mut ord = 1u64;
        for start in 0..self.degree() {
            if seen[start] {
                continue;
            }
            let mut len = 0u64;
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                x = self.images[x] as usize;
                len += 1;
            }
            ord = lcm(ord, len);
        }
        ord
    }

    /// Smallest point moved, if any.
    pub fn first_moved(&self) -> Option<u32> {
        self.images.iter().enumerate().find(|(i, &x)| *i as u32 != x).map(|(i, _)| i as u32)
    }

    /// Disjoint cycles of length ≥ 2, 0-based, each starting at its smallest point.
    pub fn cycles(&self) -> Vec<Vec<u32>> {
        let mut seen = vec![false; self.degree()];
        let mut out = Vec::new();
        for start in 0..self.degree() {
            if seen[start] || self.images[start] as usize == start {
                seen[start] = true;
                continue;
            }
            let mut cyc = Vec::new();
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                cyc.push(x as u32);
                x = self.images[x] as usize;
            }
            out.push(cyc);
        }
        out
    }

    /// Whether the permutation is a product of an even number of transpositions.
    pub fn is_even(&self) -> bool {
        self.cycles().iter().map(|c| c.len() - 1).sum::<usize>() % 2 == 0
    }

    /// Restriction to a set of points closed under `self`, relabelled by position.
    pub fn restrict(&self, points: &[u32], index_of: &std::collections::HashMap<u32, u32>) -> Perm {
        let images = points.iter().map(|&p| index_of[&self.apply(p)]).collect();
        Perm { images }
    }
}

impl Mul for &Perm {
    type Output = Perm;
    fn mul(self, rhs: &Perm) -> Perm {
        debug_assert_eq!(self.degree(), rhs.degree());
        Perm { images: self.images.iter().map(|&x| rhs.images[x as usize]).collect() }
    }
}

impl Mul for Perm {
    type Output = Perm;
    fn mul(self, rhs: Perm) -> Perm {
        &self * &rhs
    }
}

/// Cycle notation with 1-based points; the identity prints as `()`.
impl fmt::Display for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return write!(f, "()");
        }
        for c in cycles {
            write!(f, "(")?;
            for (i, x) in c.iter().enumerate() {
                if i > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{}", x + 1)?;
            }
            write!(f, ")")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Perm[{}]{}", self.degree(), self)
    }
}

/// Parses cycle notation such as `(1 2 3)(4 5)` or `(1,2)(3,4)` with 1-based
/// points. Cycles are multiplied left to right.
pub fn parse_perm(text: &str, degree: usize) -> Result<Perm> {
    parse_perm_at(text, degree, 1, 1)
}

pub(crate) fn parse_perm_at(text: &str, degree: usize, line: usize, col0: usize) -> Result<Perm> {
    let err = |col: usize, msg: &str| Error::Parse { line, column: col0 + col, message: msg.to_string() };
    let bytes = text.as_bytes();
    let mut i = 0;
    let mut cycles: Vec<Vec<usize>> = Vec::new();
    let mut saw_any = false;
    while i < bytes.len() {
        let c = bytes[i];
        if c.is_ascii_whitespace() || c == b'*' {
            i += 1;
            continue;
        }
        if c != b'(' {
            return Err(err(i, "expected '('"));
        }
        saw_any = true;
        i += 1;
        let mut cycle = Vec::new();
        loop {
            while i < bytes.len() && (bytes[i].is_ascii_whitespace() || bytes[i] == b',') {
                i += 1;
            }
            if i >= bytes.len() {
                return Err(err(i, "unterminated cycle"));
            }
            if bytes[i] == b')' {
                i += 1;
                break;
            }
            let start = i;
            while i < bytes.len() && bytes[i].is_ascii_digit() {
                i += 1;
            }
            if start == i {
                return Err(err(i, "expected a point number"));
            }
            let n: usize = text[start..i].parse().map_err(|_| err(start, "point number too large"))?;
            if n == 0 || n > degree {
                return Err(Error::PointOutOfRange { point: n, degree });
            }
            if cycle.contains(&(n - 1)) {
                return Err(Error::RepeatedPoint(n));
            }
            cycle.push(n - 1);
        }
        if !cycle.is_empty() {
            cycles.push(cycle);
        }
    }
    if !saw_any {
        return Err(err(0, "empty permutation text; use () for the identity"));
    }
    Perm::from_cycles(degree, &cycles)
}

pub fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

pub fn lcm(a: u64, b: u64) -> u64 {
    a / gcd(a, b) * b
}

/// Serialized as 1-based cycle notation.
impl serde::Serialize for Perm {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn three_cycle() {
        let p = parse_perm("(1 2 3)", 3).unwrap();
        assert_eq!(p.images(), &[1, 2, 0]);
    }

    #[test]
    fn empty_cycle_is_identity() {
        let p = parse_perm("()", 4).unwrap();
        assert!(p.is_identity());
        assert_eq!(p.degree(), 4);
    }

    #[test]
    fn product_applies_left_to_right() {
        // 1 -> 2 under (1 2), then 2 is fixed by (1 3)
        let p = parse_perm("(1 2)(1 3)", 3).unwrap();
        assert_eq!(p.images(), &[1, 2, 0]);
        let a = parse_perm("(1 2)", 3).unwrap();
        let b = parse_perm("(1 3)", 3).unwrap();
        assert_eq!(p, &a * &b);
    }

    #[test]
    fn parse_errors() {
        assert!(matches!(parse_perm("(1 2", 3), Err(Error::Parse { .. })));
        assert!(matches!(parse_perm("(1 4)", 3), Err(Error::PointOutOfRange { .. })));
        assert!(matches!(parse_perm("(1 2 1)", 3), Err(Error::RepeatedPoint(1))));
        assert!(matches!(parse_perm("1 2", 3), Err(Error::Parse { .. })));
        assert!(matches!(parse_perm("(0 1)", 3), Err(Error::PointOutOfRange { .. })));
    }

    #[test]
    fn commas_accepted() {
        let p = parse_perm("(1,2,3)(4,5)", 5).unwrap();
        assert_eq!(p.to_string(), "(1 2 3)(4 5)");
    }

    #[test]
    fn conjugation_and_order() {
        let p = parse_perm("(1 2 3 4 5)", 5).unwrap();
        let g = parse_perm("(1 2)", 5).unwrap();
        let c = p.conjugate_by(&g);
        assert_eq!(c, &(&g.inverse() * &p) * &g);
        assert_eq!(p.order(), 5);
        assert_eq!(parse_perm("(1 2)(3 4 5)", 5).unwrap().order(), 6);
        assert!(p.pow(5).is_identity());
    }
}
