//! Digit sequences, bracelets and index maps.
//!
//! Positions are 1-based. Circular arithmetic maps residues into `1..=k`,
//! never to `0`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{domain, Error, Result};

/// A finite sequence over the digits `0..RADIX`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Sequence<const RADIX: u8> {
    digits: Vec<u8>,
}

pub type BinarySequence = Sequence<2>;
pub type QuaternarySequence = Sequence<4>;

/// Largest bracelet length [`enumerate_bracelets`] will enumerate (it scans
/// all `2^k` words).
pub const MAX_BRACELET_LENGTH: usize = 24;

impl<const RADIX: u8> Sequence<RADIX> {
    pub fn new(digits: Vec<u8>) -> Result<Self> {
        if let Some(d) = digits.iter().find(|&&d| d >= RADIX) {
            return Err(domain(format!("digit {d} is not below {RADIX}")));
        }
        Ok(Self { digits })
    }

    pub fn empty() -> Self {
        Self { digits: Vec::new() }
    }

    pub fn len(&self) -> usize {
        self.digits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.digits.is_empty()
    }

    pub fn digits(&self) -> &[u8] {
        &self.digits
    }

    /// Digit at 1-based position `i`.
    pub fn at(&self, i: usize) -> u8 {
        self.digits[i - 1]
    }

    /// Digit at position `i` taken modulo the length (into `1..=len`).
    pub fn at_circular(&self, i: isize) -> u8 {
        self.digits[wrap(i, self.len()) - 1]
    }

    /// Cyclic left rotation by one: `a_2 a_3 ... a_k a_1`.
    pub fn shift(&self) -> Result<Self> {
        if self.is_empty() {
            return Err(domain("cannot shift the empty sequence"));
        }
        let mut digits = self.digits.clone();
        digits.rotate_left(1);
        Ok(Self { digits })
    }

    pub fn reversed(&self) -> Self {
        let mut digits = self.digits.clone();
        digits.reverse();
        Self { digits }
    }

    /// Whether `pattern` occurs circularly in `self` starting at 1-based
    /// position `i`. A pattern longer than `self` never occurs.
    pub fn occurs_circularly(&self, pattern: &Self, i: usize) -> bool {
        let k = self.len();
        if pattern.len() > k || i == 0 || i > k {
            return false;
        }
        pattern
            .digits
            .iter()
            .enumerate()
            .all(|(off, &d)| self.digits[(i - 1 + off) % k] == d)
    }

    /// `a_ρ`: the sequence `a_{ρ(1)} ... a_{ρ(k')}`.
    pub fn apply_index_map(&self, map: &IndexMap) -> Result<Self> {
        if map.max_image() > self.len() {
            return Err(domain(format!(
                "index map {map} reaches beyond a sequence of length {}",
                self.len()
            )));
        }
        Ok(Self {
            digits: map.images().iter().map(|&p| self.digits[p - 1]).collect(),
        })
    }

    /// All sequences of length `len` in lexicographic order.
    pub fn all_of_length(len: usize) -> impl Iterator<Item = Self> {
        let total = (RADIX as u64).pow(len as u32);
        (0..total).map(move |mut code| {
            let mut digits = vec![0u8; len];
            for slot in digits.iter_mut().rev() {
                *slot = (code % RADIX as u64) as u8;
                code /= RADIX as u64;
            }
            Self { digits }
        })
    }
}

/// Maps an arbitrary integer into `1..=k` with the same residue mod `k`.
pub fn wrap(i: isize, k: usize) -> usize {
    let k = k as isize;
    ((i - 1).rem_euclid(k) + 1) as usize
}

impl BinarySequence {
    /// Interchanges 0s and 1s.
    pub fn complement(&self) -> Self {
        Self {
            digits: self.digits.iter().map(|&d| 1 - d).collect(),
        }
    }

    pub fn count_ones(&self) -> usize {
        self.digits.iter().filter(|&&d| d == 1).count()
    }

    /// Bits packed with position 1 in bit 0.
    pub fn to_bits(&self) -> u64 {
        self.digits
            .iter()
            .enumerate()
            .fold(0, |acc, (i, &d)| acc | ((d as u64) << i))
    }

    pub fn from_bits(bits: u64, len: usize) -> Self {
        Self {
            digits: (0..len).map(|i| ((bits >> i) & 1) as u8).collect(),
        }
    }

    /// Lexicographically least element of the orbit under shifts and
    /// reversal.
    pub fn canonical_bracelet(&self) -> Self {
        let k = self.len();
        let mut best = self.digits.clone();
        let rev = self.reversed();
        for base in [&self.digits, &rev.digits] {
            for start in 0..k {
                let candidate = base[start..].iter().chain(&base[..start]);
                if candidate.clone().lt(best.iter()) {
                    best = candidate.copied().collect();
                }
            }
        }
        Self { digits: best }
    }

    pub fn is_bracelet(&self) -> bool {
        self.canonical_bracelet() == *self
    }
}

/// The set `A_k` of mask sequences used by the circular-ones forbidden
/// family: `{000, 111}` for `k = 3`, every canonical binary bracelet of
/// length `k` for `k >= 4`. Sorted lexicographically.
pub fn enumerate_bracelets(k: usize) -> Result<Vec<BinarySequence>> {
    if k < 3 {
        return Err(domain(format!(
            "bracelet length must be at least 3, got {k}"
        )));
    }
    if k > MAX_BRACELET_LENGTH {
        return Err(Error::Guard {
            what: "bracelet length",
            actual: k,
            limit: MAX_BRACELET_LENGTH,
        });
    }
    if k == 3 {
        return Ok(vec![
            BinarySequence { digits: vec![0; 3] },
            BinarySequence { digits: vec![1; 3] },
        ]);
    }
    Ok(BinarySequence::all_of_length(k)
        .filter(|s| s.is_bracelet())
        .collect())
}

impl<const RADIX: u8> fmt::Display for Sequence<RADIX> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for d in &self.digits {
            write!(f, "{d}")?;
        }
        Ok(())
    }
}

impl<const RADIX: u8> FromStr for Sequence<RADIX> {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let digits = s
            .trim()
            .chars()
            .map(|c| {
                c.to_digit(10)
                    .filter(|&d| d < RADIX as u32)
                    .map(|d| d as u8)
                    .ok_or_else(|| domain(format!("'{c}' is not a digit below {RADIX} in \"{s}\"")))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Self { digits })
    }
}

impl<const RADIX: u8> Serialize for Sequence<RADIX> {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de, const RADIX: u8> Deserialize<'de> for Sequence<RADIX> {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// An injective map `[k'] -> [k]`, written `<n_1, ..., n_s>`. Images are
/// 1-based.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct IndexMap {
    images: Vec<usize>,
}

impl IndexMap {
    pub fn new(images: Vec<usize>) -> Result<Self> {
        if images.contains(&0) {
            return Err(domain("index map images are 1-based; found 0"));
        }
        let mut seen = images.clone();
        seen.sort_unstable();
        if seen.windows(2).any(|w| w[0] == w[1]) {
            return Err(domain(format!("index map {images:?} is not injective")));
        }
        Ok(Self { images })
    }

    pub fn identity(n: usize) -> Self {
        Self {
            images: (1..=n).collect(),
        }
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn len(&self) -> usize {
        self.images.len()
    }

    pub fn is_empty(&self) -> bool {
        self.images.is_empty()
    }

    /// Image of 1-based `i`.
    pub fn get(&self, i: usize) -> usize {
        self.images[i - 1]
    }

    pub fn max_image(&self) -> usize {
        self.images.iter().copied().max().unwrap_or(0)
    }

    /// The map `i -> self(inner(i))`. If `inner` indexes rows of
    /// `M_{self,_}`, the result indexes the same rows of `M`.
    pub fn chain(&self, inner: &IndexMap) -> Result<IndexMap> {
        if inner.max_image() > self.len() {
            return Err(domain(format!("{inner} does not fit inside {self}")));
        }
        Ok(IndexMap {
            images: inner.images.iter().map(|&i| self.images[i - 1]).collect(),
        })
    }
}

impl TryFrom<Vec<usize>> for IndexMap {
    type Error = Error;
    fn try_from(v: Vec<usize>) -> Result<Self> {
        Self::new(v)
    }
}

impl From<IndexMap> for Vec<usize> {
    fn from(m: IndexMap) -> Self {
        m.images
    }
}

impl fmt::Display for IndexMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "<")?;
        for (n, i) in self.images.iter().enumerate() {
            if n > 0 {
                write!(f, ",")?;
            }
            write!(f, "{i}")?;
        }
        write!(f, ">")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn b(s: &str) -> BinarySequence {
        s.parse().unwrap()
    }

    fn q(s: &str) -> QuaternarySequence {
        s.parse().unwrap()
    }

    #[test]
    fn shift_examples() {
        assert_eq!(q("013102").shift().unwrap(), q("131020"));
        assert_eq!(b("000").shift().unwrap(), b("000"));
        assert_eq!(b("0101").shift().unwrap(), b("1010"));
        assert!(b("").shift().is_err());
    }

    #[test]
    fn complement_examples() {
        assert_eq!(b("0100").complement(), b("1011"));
        assert_eq!(b("").complement(), b(""));
        assert_eq!(b("111").complement(), b("000"));
    }

    #[test]
    fn canonical_bracelet_examples() {
        assert_eq!(b("1010").canonical_bracelet(), b("0101"));
        assert_eq!(b("1000").canonical_bracelet(), b("0001"));
        assert_eq!(b("110100").canonical_bracelet(), b("001011"));
    }

    #[test]
    fn bracelet_sets() {
        let a3: Vec<String> = enumerate_bracelets(3)
            .unwrap()
            .iter()
            .map(|s| s.to_string())
            .collect();
        assert_eq!(a3, ["000", "111"]);
        let a4: Vec<String> = enumerate_bracelets(4)
            .unwrap()
            .iter()
            .map(|s| s.to_string())
            .collect();
        assert_eq!(a4, ["0000", "0001", "0011", "0101", "0111", "1111"]);
        assert_eq!(enumerate_bracelets(6).unwrap().len(), 13);
        assert!(enumerate_bracelets(2).is_err());
    }

    #[test]
    fn circular_occurrence() {
        assert!(b("0101").occurs_circularly(&b("101"), 2));
        assert!(b("0101").occurs_circularly(&b("1010"), 2));
        assert!(b("1100").occurs_circularly(&b("001"), 3));
        assert!(!b("1100").occurs_circularly(&b("001"), 2));
        assert!(!b("01").occurs_circularly(&b("010"), 1));
    }

    #[test]
    fn index_maps() {
        let rho = IndexMap::new(vec![3, 1]).unwrap();
        assert_eq!(b("0100").apply_index_map(&rho).unwrap(), b("00"));
        assert_eq!(
            q("013102").apply_index_map(&IndexMap::identity(6)).unwrap(),
            q("013102")
        );
        let id4 = IndexMap::new(vec![1, 2, 3, 4]).unwrap();
        assert_eq!(b("0111").apply_index_map(&id4).unwrap(), b("0111"));
        assert!(b("01")
            .apply_index_map(&IndexMap::new(vec![3]).unwrap())
            .is_err());
        assert!(IndexMap::new(vec![1, 1]).is_err());
        assert!(IndexMap::new(vec![0]).is_err());
    }

    #[test]
    fn wrap_is_one_based() {
        assert_eq!(wrap(0, 6), 6);
        assert_eq!(wrap(-1, 6), 5);
        assert_eq!(wrap(7, 6), 1);
        assert_eq!(wrap(6, 6), 6);
    }

    #[test]
    fn digits_are_validated() {
        assert!("0123".parse::<BinarySequence>().is_err());
        assert!("0123".parse::<QuaternarySequence>().is_ok());
        assert!("4".parse::<QuaternarySequence>().is_err());
    }
}
