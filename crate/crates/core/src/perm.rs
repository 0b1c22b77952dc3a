//! Permutations of `{1..d}` stored as image tables.
//!
//! Points are 0-based internally and 1-based in cycle notation. Products use
//! the right-action convention: `a.compose(&b)` applies `a` first, then `b`,
//! so the conjugate `x⁻¹·a·x` is the exponent notation `a^x`.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};

/// A bijection of `{0..degree}`; `images[p]` is the image of point `p`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Permutation {
    images: Vec<u32>,
}

impl Permutation {
    pub fn identity(degree: usize) -> Self {
        Permutation {
            images: (0..degree as u32).collect(),
        }
    }

    /// Builds a permutation from a 0-based image table, rejecting non-bijections.
    pub fn from_images(images: Vec<u32>) -> Result<Self> {
        let degree = images.len();
        let mut seen = alloc::vec![false; degree];
        for &p in &images {
            let p = p as usize;
            if p >= degree || seen[p] {
                return Err(Error::NotABijection);
            }
            seen[p] = true;
        }
        Ok(Permutation { images })
    }

    /// Builds a permutation from 1-based images, the way they are printed.
    pub fn from_one_based(images: &[u32]) -> Result<Self> {
        if images.contains(&0) {
            return Err(Error::NotABijection);
        }
        Self::from_images(images.iter().map(|&p| p - 1).collect())
    }

    pub(crate) fn from_images_unchecked(images: Vec<u32>) -> Self {
        debug_assert!(Self::from_images(images.clone()).is_ok());
        Permutation { images }
    }

    /// Transposition of two 1-based points.
    pub fn transposition(degree: usize, a: usize, b: usize) -> Result<Self> {
        Self::from_cycles(degree, &[&[a, b]])
    }

    /// Left-to-right product of 1-based cycles.
    pub fn from_cycles(degree: usize, cycles: &[&[usize]]) -> Result<Self> {
        let mut acc = Permutation::identity(degree);
        for cycle in cycles {
            acc = acc.compose(&cycle_perm(degree, cycle)?)?;
        }
        Ok(acc)
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[u32] {
        &self.images
    }

    /// Image of a 0-based point.
    #[inline]
    pub fn apply(&self, point: usize) -> usize {
        self.images[point] as usize
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &p)| i == p as usize)
    }

    /// "`self` then `other`".
    pub fn compose(&self, other: &Permutation) -> Result<Permutation> {
        if self.degree() != other.degree() {
            return Err(Error::DegreeMismatch {
                left: self.degree(),
                right: other.degree(),
            });
        }
        Ok(self.mul(other))
    }

    /// Unchecked composition for callers that already know the degrees agree.
    #[inline]
    pub(crate) fn mul(&self, other: &Permutation) -> Permutation {
        debug_assert_eq!(self.degree(), other.degree());
        Permutation {
            images: self
                .images
                .iter()
                .map(|&p| other.images[p as usize])
                .collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = alloc::vec![0u32; self.degree()];
        for (i, &p) in self.images.iter().enumerate() {
            images[p as usize] = i as u32;
        }
        Permutation { images }
    }

    /// `x⁻¹·self·x`.
    pub fn conjugate(&self, x: &Permutation) -> Result<Permutation> {
        if self.degree() != x.degree() {
            return Err(Error::DegreeMismatch {
                left: self.degree(),
                right: x.degree(),
            });
        }
        Ok(self.conj(x))
    }

    #[inline]
    pub(crate) fn conj(&self, x: &Permutation) -> Permutation {
        // a^x maps p^x to (p^a)^x
        let mut images = alloc::vec![0u32; self.degree()];
        for (p, &q) in self.images.iter().enumerate() {
            images[x.images[p] as usize] = x.images[q as usize];
        }
        Permutation { images }
    }

    pub fn pow(&self, mut exp: u64) -> Permutation {
        let mut base = self.clone();
        let mut acc = Permutation::identity(self.degree());
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            exp >>= 1;
        }
        acc
    }

    /// Smallest 0-based point moved, if any.
    pub fn first_moved(&self) -> Option<usize> {
        self.images
            .iter()
            .enumerate()
            .find(|(i, &p)| *i != p as usize)
            .map(|(i, _)| i)
    }

    pub fn fixed_points(&self) -> usize {
        self.images
            .iter()
            .enumerate()
            .filter(|(i, &p)| *i == p as usize)
            .count()
    }

    /// Disjoint cycles of length at least two, 0-based, each starting at its
    /// smallest point, ordered by that point.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let mut seen = alloc::vec![false; self.degree()];
        let mut out = Vec::new();
        for start in 0..self.degree() {
            if seen[start] {
                continue;
            }
            let mut cycle = Vec::new();
            let mut p = start;
            while !seen[p] {
                seen[p] = true;
                cycle.push(p);
                p = self.apply(p);
            }
            if cycle.len() > 1 {
                out.push(cycle);
            }
        }
        out
    }

    /// Order as an element, the lcm of the cycle lengths.
    pub fn order(&self) -> u64 {
        self.cycles()
            .iter()
            .fold(1u64, |acc, c| lcm(acc, c.len() as u64))
    }

    pub fn is_even(&self) -> bool {
        self.cycles().iter().map(|c| c.len() - 1).sum::<usize>() % 2 == 0
    }

    pub fn to_cycle_string(&self) -> String {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return String::from("()");
        }
        let mut s = String::new();
        for cycle in cycles {
            s.push('(');
            for (k, p) in cycle.iter().enumerate() {
                if k > 0 {
                    s.push(',');
                }
                push_decimal(&mut s, p + 1);
            }
            s.push(')');
        }
        s
    }
}

fn push_decimal(s: &mut String, mut n: usize) {
    let mut digits = [0u8; 20];
    let mut len = 0;
    loop {
        digits[len] = b'0' + (n % 10) as u8;
        len += 1;
        n /= 10;
        if n == 0 {
            break;
        }
    }
    for k in (0..len).rev() {
        s.push(digits[k] as char);
    }
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn lcm(a: u64, b: u64) -> u64 {
    a / gcd(a, b) * b
}

fn cycle_perm(degree: usize, cycle: &[usize]) -> Result<Permutation> {
    let mut images: Vec<u32> = (0..degree as u32).collect();
    for (k, &p) in cycle.iter().enumerate() {
        if p == 0 || p > degree {
            return Err(Error::PointOutOfRange { point: p, degree });
        }
        if cycle[..k].contains(&p) {
            return Err(Error::RepeatedPoint { point: p });
        }
    }
    for (k, &p) in cycle.iter().enumerate() {
        let next = cycle[(k + 1) % cycle.len()];
        images[p - 1] = (next - 1) as u32;
    }
    Ok(Permutation { images })
}

/// Parses cycle notation such as `(1,2)(3,4,5)` or the identity `()`.
///
/// The result is the left-to-right product of the listed cycles. Whitespace
/// between tokens is ignored.
pub fn parse_cycles(text: &str, degree: usize) -> Result<Permutation> {
    let malformed = |why: &'static str| Error::MalformedCycle {
        text: String::from(text),
        why,
    };
    let bytes: Vec<u8> = text.bytes().filter(|b| !b.is_ascii_whitespace()).collect();
    if bytes.is_empty() {
        return Err(malformed("empty input"));
    }
    let mut acc = Permutation::identity(degree);
    let mut pos = 0;
    while pos < bytes.len() {
        if bytes[pos] != b'(' {
            return Err(malformed("expected '('"));
        }
        pos += 1;
        let mut cycle = Vec::new();
        if bytes.get(pos) == Some(&b')') {
            pos += 1;
            continue;
        }
        loop {
            let start = pos;
            let mut value: usize = 0;
            while pos < bytes.len() && bytes[pos].is_ascii_digit() {
                value = value
                    .checked_mul(10)
                    .and_then(|v| v.checked_add((bytes[pos] - b'0') as usize))
                    .ok_or_else(|| malformed("point too large"))?;
                pos += 1;
            }
            if pos == start {
                return Err(malformed("expected a point"));
            }
            cycle.push(value);
            match bytes.get(pos) {
                Some(b',') => pos += 1,
                Some(b')') => {
                    pos += 1;
                    break;
                }
                _ => return Err(malformed("expected ',' or ')'")),
            }
        }
        acc = acc.mul(&cycle_perm(degree, &cycle)?);
    }
    Ok(acc)
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_cycle_string())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_cycle_string())
    }
}
