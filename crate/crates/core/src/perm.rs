//! Permutations of `{0, .., n-1}` stored as image arrays.
//!
//! Points act on the right and products read left to right: `x^(ab) = (x^a)^b`,
//! so `a.compose(&b)` first applies `a`, then `b`. Text formats are 1-based.

use std::fmt;
use std::ops::Mul;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::One;

use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<u32>,
}

impl Permutation {
    pub fn identity(degree: usize) -> Self {
        assert!(degree >= 1, "degree must be at least 1");
        Permutation {
            images: (0..degree as u32).collect(),
        }
    }

    /// Builds a permutation from 0-based images, checking bijectivity.
    pub fn from_images(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        if n == 0 {
            return Err(Error::NotBijective("empty image list".into()));
        }
        let mut seen = vec![false; n];
        for &x in &images {
            if x >= n {
                return Err(Error::PointOutOfRange { point: x, degree: n });
            }
            if std::mem::replace(&mut seen[x], true) {
                return Err(Error::NotBijective(format!("image {x} repeated")));
            }
        }
        Ok(Permutation {
            images: images.into_iter().map(|x| x as u32).collect(),
        })
    }

    /// Callers guarantee `images` is a bijection of `0..images.len()`.
    pub(crate) fn from_raw(images: Vec<u32>) -> Self {
        debug_assert!({
            let mut s = images.clone();
            s.sort_unstable();
            s.iter().enumerate().all(|(i, &x)| i as u32 == x)
        });
        Permutation { images }
    }

    pub(crate) fn from_fn(degree: usize, f: impl Fn(usize) -> usize) -> Self {
        Self::from_raw((0..degree).map(|x| f(x) as u32).collect())
    }

    #[inline]
    pub fn degree(&self) -> usize {
        self.images.len()
    }

    #[inline]
    pub fn image(&self, x: usize) -> usize {
        self.images[x] as usize
    }

    pub fn images(&self) -> &[u32] {
        &self.images
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| i as u32 == x)
    }

    pub fn fixes(&self, x: usize) -> bool {
        self.image(x) == x
    }

    pub fn smallest_moved_point(&self) -> Option<usize> {
        self.images
            .iter()
            .enumerate()
            .find(|&(i, &x)| i as u32 != x)
            .map(|(i, _)| i)
    }

    /// `self` then `other`; errors on degree mismatch.
    pub fn compose(&self, other: &Permutation) -> Result<Permutation> {
        if self.degree() != other.degree() {
            return Err(Error::DegreeMismatch {
                left: self.degree(),
                right: other.degree(),
            });
        }
        Ok(self.mul_unchecked(other))
    }

    #[inline]
    pub(crate) fn mul_unchecked(&self, other: &Permutation) -> Permutation {
        let b = &other.images;
        Permutation {
            images: self.images.iter().map(|&x| b[x as usize]).collect(),
        }
    }

    /// In-place right multiplication: `self <- self * other`.
    #[inline]
    pub(crate) fn mul_assign_right(&mut self, other: &Permutation) {
        let b = &other.images;
        for x in self.images.iter_mut() {
            *x = b[*x as usize];
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0u32; self.degree()];
        for (i, &x) in self.images.iter().enumerate() {
            inv[x as usize] = i as u32;
        }
        Permutation { images: inv }
    }

    /// `g^-1 self g`.
    pub fn conjugate_by(&self, g: &Permutation) -> Permutation {
        let mut out = vec![0u32; self.degree()];
        for (x, &y) in self.images.iter().enumerate() {
            out[g.images[x] as usize] = g.images[y as usize];
        }
        Permutation { images: out }
    }

    /// `a^-1 b^-1 a b`.
    pub fn commutator(a: &Permutation, b: &Permutation) -> Permutation {
        a.inverse()
            .mul_unchecked(&b.inverse())
            .mul_unchecked(a)
            .mul_unchecked(b)
    }

    pub fn pow(&self, mut e: u64) -> Permutation {
        let mut base = self.clone();
        let mut acc = Permutation::identity(self.degree());
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul_unchecked(&base);
            }
            base = base.mul_unchecked(&base);
            e >>= 1;
        }
        acc
    }

    /// Cycles of length at least 2, each starting at its smallest point,
    /// sorted by that point.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] || self.fixes(start) {
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
            out.push(cycle);
        }
        out
    }

    /// Least `k >= 1` with `self^k = 1`.
    pub fn order(&self) -> BigUint {
        self.cycles()
            .iter()
            .fold(BigUint::one(), |acc, c| acc.lcm(&BigUint::from(c.len())))
    }

    /// Parses 1-based cycle notation such as `(1,2,3)(4,5)`.
    /// The empty string and `()` both denote the identity.
    pub fn parse_cycles(text: &str, degree: usize) -> Result<Permutation> {
        if degree == 0 {
            return Err(Error::InvalidParameter("degree must be at least 1".into()));
        }
        let mut images: Vec<u32> = (0..degree as u32).collect();
        let mut used = vec![false; degree];
        let bytes = text.as_bytes();
        let mut pos = 0;
        let err = |column: usize, message: &str| Error::Parse {
            column: column + 1,
            message: message.to_string(),
        };
        let skip_ws = |pos: &mut usize| {
            while *pos < bytes.len() && bytes[*pos].is_ascii_whitespace() {
                *pos += 1;
            }
        };
        loop {
            skip_ws(&mut pos);
            if pos == bytes.len() {
                break;
            }
            if bytes[pos] != b'(' {
                return Err(err(pos, "expected '('"));
            }
            pos += 1;
            skip_ws(&mut pos);
            let mut cycle: Vec<usize> = Vec::new();
            if pos < bytes.len() && bytes[pos] == b')' {
                pos += 1;
                continue;
            }
            loop {
                skip_ws(&mut pos);
                let start = pos;
                while pos < bytes.len() && bytes[pos].is_ascii_digit() {
                    pos += 1;
                }
                if start == pos {
                    return Err(err(pos, "expected a point"));
                }
                let point: usize = text[start..pos]
                    .parse()
                    .map_err(|_| err(start, "point too large"))?;
                if point == 0 || point > degree {
                    return Err(Error::PointOutOfRange {
                        point,
                        degree,
                    });
                }
                let p = point - 1;
                if std::mem::replace(&mut used[p], true) {
                    return Err(err(start, &format!("point {point} repeated")));
                }
                cycle.push(p);
                skip_ws(&mut pos);
                match bytes.get(pos) {
                    Some(b',') => pos += 1,
                    Some(b')') => {
                        pos += 1;
                        break;
                    }
                    _ => return Err(err(pos, "expected ',' or ')'")),
                }
            }
            for (i, &p) in cycle.iter().enumerate() {
                images[p] = cycle[(i + 1) % cycle.len()] as u32;
            }
        }
        Ok(Permutation { images })
    }

    /// 1-based cycle notation; the identity formats as `()`.
    pub fn format_cycles(&self) -> String {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return "()".to_string();
        }
        let mut s = String::new();
        for c in cycles {
            s.push('(');
            for (i, x) in c.iter().enumerate() {
                if i > 0 {
                    s.push(',');
                }
                s.push_str(&(x + 1).to_string());
            }
            s.push(')');
        }
        s
    }
}

impl Mul for &Permutation {
    type Output = Permutation;

    /// Panics on degree mismatch; use [`Permutation::compose`] for a checked product.
    fn mul(self, rhs: &Permutation) -> Permutation {
        assert_eq!(self.degree(), rhs.degree(), "degree mismatch");
        self.mul_unchecked(rhs)
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.format_cycles())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Permutation[{}]{}", self.degree(), self.format_cycles())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(text: &str, n: usize) -> Permutation {
        Permutation::parse_cycles(text, n).unwrap()
    }

    #[test]
    fn compose_left_to_right() {
        // (0 1 2) then (0 1): 0 -> 1 -> 0, 1 -> 2 -> 2, 2 -> 0 -> 1
        let a = p("(1,2,3)", 3);
        let b = p("(1,2)", 3);
        assert_eq!(a.compose(&b).unwrap(), p("(2,3)", 3));
    }

    #[test]
    fn compose_degree_mismatch() {
        let a = Permutation::identity(3);
        let b = Permutation::identity(4);
        assert!(matches!(
            a.compose(&b),
            Err(Error::DegreeMismatch { left: 3, right: 4 })
        ));
    }

    #[test]
    fn inverse_of_three_cycle() {
        assert_eq!(p("(1,2,3)", 3).inverse(), p("(1,3,2)", 3));
        assert!(Permutation::identity(4).inverse().is_identity());
    }

    #[test]
    fn parse_examples() {
        assert_eq!(p("(1,2)", 4).images(), &[1, 0, 2, 3]);
        assert!(p("()", 5).is_identity());
        assert!(p("", 5).is_identity());
        assert!(p("  ( ) ", 5).is_identity());
        assert_eq!(p("(1,2,3)(4,5)", 5).images(), &[1, 2, 0, 4, 3]);
        assert_eq!(p(" (1, 2,3) (4 ,5)", 5).images(), &[1, 2, 0, 4, 3]);
    }

    #[test]
    fn parse_errors() {
        assert!(matches!(
            Permutation::parse_cycles("(1,2)(2,3)", 4),
            Err(Error::Parse { .. })
        ));
        assert!(matches!(
            Permutation::parse_cycles("(1,5)", 4),
            Err(Error::PointOutOfRange { point: 5, degree: 4 })
        ));
        assert!(matches!(
            Permutation::parse_cycles("(0,1)", 4),
            Err(Error::PointOutOfRange { point: 0, .. })
        ));
        for bad in ["(1,2", "1,2)", "(1,,2)", "(1 2)", "(a)", "(1,2)x"] {
            assert!(Permutation::parse_cycles(bad, 4).is_err(), "{bad}");
        }
    }

    #[test]
    fn format_is_canonical() {
        assert_eq!(p("(5,4)(3,1,2)", 6).format_cycles(), "(1,2,3)(4,5)");
        assert_eq!(Permutation::identity(3).format_cycles(), "()");
    }

    #[test]
    fn order_is_lcm_of_cycle_lengths() {
        assert_eq!(Permutation::identity(7).order(), BigUint::from(1u32));
        assert_eq!(p("(1,2,3)(4,5)", 5).order(), BigUint::from(6u32));
    }

    #[test]
    fn from_images_rejects_non_bijections() {
        assert!(Permutation::from_images(vec![0, 0, 1]).is_err());
        assert!(Permutation::from_images(vec![0, 3, 1]).is_err());
        assert!(Permutation::from_images(vec![]).is_err());
    }

    #[test]
    fn conjugate_and_commutator() {
        let a = p("(1,2,3)", 4);
        let g = p("(3,4)", 4);
        assert_eq!(a.conjugate_by(&g), &(&g.inverse() * &a) * &g);
        let b = p("(1,2)", 4);
        let c = Permutation::commutator(&a, &b);
        assert_eq!(c, &(&(&a.inverse() * &b.inverse()) * &a) * &b);
    }
}
