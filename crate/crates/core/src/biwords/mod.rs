//! Binary words with fixed letter content and pairs of them ("bi-words").
//!
//! A word of length `L <= 63` is packed into a `u64` with position 0 stored
//! in the most significant of the `L` bits, so numeric order of the packed
//! value is lexicographic order of the word (`"01" < "10"`).

mod count;
mod kfact;

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::exact::binom_unchecked;

pub use count::{
    count_bp, count_cp, count_crossed_within, count_same_content_within, involution_check, lattice_path_count_avoiding,
    surjection_preimages, InvolutionCheck, PairFamily, SurjectionCheck,
};
pub use kfact::{k_factorize, KFact};

/// Hard limit imposed by the `u64` packing.
pub const MAX_WORD_LEN: u32 = 63;

/// Limits on brute-force enumeration.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CountBudget {
    /// Longest word any enumeration may produce.
    pub max_len: u32,
    /// Largest number of words or word pairs a single enumeration may visit.
    pub max_items: u64,
}

impl Default for CountBudget {
    fn default() -> Self {
        CountBudget { max_len: 24, max_items: 50_000_000 }
    }
}

impl CountBudget {
    pub fn new(max_len: u32, max_items: u64) -> Result<Self> {
        if max_len == 0 || max_items == 0 {
            return Err(Error::InvalidArgument("budget limits must be positive".into()));
        }
        Ok(CountBudget { max_len: max_len.min(MAX_WORD_LEN), max_items })
    }

    pub fn check_len(&self, len: u32) -> Result<()> {
        if len > self.max_len || len > MAX_WORD_LEN {
            return Err(Error::BudgetExceeded(format!(
                "word length {len} exceeds limit {}",
                self.max_len.min(MAX_WORD_LEN)
            )));
        }
        Ok(())
    }

    pub fn check_items(&self, items: &BigInt) -> Result<()> {
        if *items > BigInt::from(self.max_items) {
            return Err(Error::BudgetExceeded(format!("{items} items exceed limit {}", self.max_items)));
        }
        Ok(())
    }
}

/// A finite word over `{0, 1}`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word {
    bits: u64,
    len: u8,
}

impl Word {
    /// Builds a word from its packed form; bits above `len` must be clear.
    pub fn from_bits(bits: u64, len: u32) -> Result<Self> {
        if len > MAX_WORD_LEN || (len < 64 && bits >> len != 0) {
            return Err(Error::InvalidArgument(format!("bits {bits:#b} do not fit length {len}")));
        }
        Ok(Word { bits, len: len as u8 })
    }

    pub fn empty() -> Self {
        Word { bits: 0, len: 0 }
    }

    pub fn bits(&self) -> u64 {
        self.bits
    }

    pub fn len(&self) -> usize {
        self.len as usize
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    /// Letter at position `i` (0-based from the left).
    pub fn letter(&self, i: usize) -> u8 {
        debug_assert!(i < self.len());
        ((self.bits >> (self.len() - 1 - i)) & 1) as u8
    }

    /// `|u|_1`.
    pub fn ones(&self) -> u32 {
        self.bits.count_ones()
    }

    /// `|u|_0`.
    pub fn zeros(&self) -> u32 {
        self.len as u32 - self.ones()
    }

    pub fn letters(&self) -> impl Iterator<Item = u8> + '_ {
        (0..self.len()).map(|i| self.letter(i))
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return write!(f, "ε");
        }
        for b in self.letters() {
            write!(f, "{b}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Word({self})")
    }
}

impl FromStr for Word {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        if s == "ε" {
            return Ok(Word::empty());
        }
        if s.len() > MAX_WORD_LEN as usize {
            return Err(Error::InvalidArgument(format!("word longer than {MAX_WORD_LEN}")));
        }
        let mut bits = 0u64;
        for c in s.chars() {
            bits = (bits << 1)
                | match c {
                    '0' => 0,
                    '1' => 1,
                    _ => return Err(Error::InvalidArgument(format!("not a binary word: {s:?}"))),
                };
        }
        Ok(Word { bits, len: s.len() as u8 })
    }
}

/// Words with `m` ones and `n` zeros, in lexicographic order.
pub struct Words {
    next: Option<u64>,
    len: u32,
}

impl Iterator for Words {
    type Item = Word;

    fn next(&mut self) -> Option<Word> {
        let x = self.next?;
        self.next = next_same_popcount(x).filter(|&y| self.len == 64 || y >> self.len == 0);
        Some(Word { bits: x, len: self.len as u8 })
    }
}

/// Next larger integer with the same number of set bits.
fn next_same_popcount(x: u64) -> Option<u64> {
    if x == 0 {
        return None;
    }
    let c = x & x.wrapping_neg();
    let r = x.checked_add(c)?;
    Some((((r ^ x) >> 2) / c) | r)
}

/// Every word with `m` ones and `n` zeros, each exactly once, in
/// lexicographic order.
pub fn enumerate_words(m: u32, n: u32, budget: &CountBudget) -> Result<Words> {
    let len = m + n;
    budget.check_len(len)?;
    budget.check_items(&binom_unchecked(len as u64, m as u64))?;
    Ok(words_unchecked(m, n))
}

pub(crate) fn words_unchecked(m: u32, n: u32) -> Words {
    let first = if m == 0 { 0 } else { u64::MAX >> (64 - m) };
    Words { next: Some(first), len: m + n }
}

/// A pair of equal-length words.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BiWord {
    pub u: Word,
    pub v: Word,
}

impl BiWord {
    pub fn new(u: Word, v: Word) -> Result<Self> {
        if u.len() != v.len() {
            return Err(Error::InvalidArgument(format!("bi-word halves differ in length: {} vs {}", u.len(), v.len())));
        }
        Ok(BiWord { u, v })
    }

    pub fn parse(u: &str, v: &str) -> Result<Self> {
        BiWord::new(u.parse()?, v.parse()?)
    }

    pub fn len(&self) -> usize {
        self.u.len()
    }

    pub fn is_empty(&self) -> bool {
        self.u.is_empty()
    }

    /// Swaps the letters of `u` and `v` at every position set in `mask`
    /// (packed positions, same layout as the words).
    pub fn swap_masked(&self, mask: u64) -> BiWord {
        let (u, v) = (self.u.bits, self.v.bits);
        BiWord {
            u: Word { bits: (u & !mask) | (v & mask), len: self.u.len },
            v: Word { bits: (v & !mask) | (u & mask), len: self.v.len },
        }
    }
}

impl fmt::Display for BiWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.u, self.v)
    }
}

impl fmt::Debug for BiWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BiWord{self}")
    }
}

/// Packed mask covering positions `[start, end)`.
pub(crate) fn range_mask(len: usize, start: usize, end: usize) -> u64 {
    debug_assert!(start <= end && end <= len);
    let width = end - start;
    if width == 0 {
        return 0;
    }
    let ones = if width == 64 { u64::MAX } else { (1u64 << width) - 1 };
    ones << (len - end)
}

/// Running sums `sum_{j <= s} (u_j - v_j)` for `s = 1..=len`.
pub fn prefix_diffs(b: &BiWord) -> Vec<i32> {
    let mut acc = 0i32;
    b.u.letters()
        .zip(b.v.letters())
        .map(|(x, y)| {
            acc += x as i32 - y as i32;
            acc
        })
        .collect()
}

/// Largest `|prefix diff|` over all prefixes, without allocating.
pub(crate) fn max_abs_prefix(u: u64, v: u64, len: usize) -> i32 {
    let mut acc = 0i32;
    let mut best = 0i32;
    for s in (0..len).rev() {
        acc += ((u >> s) & 1) as i32 - ((v >> s) & 1) as i32;
        best = best.max(acc.abs());
    }
    best
}

/// Swaps the first `s` letters, where `s` is the first prefix whose
/// difference reaches `+-k`.
pub fn involution(b: &BiWord, k: u32) -> Result<BiWord> {
    let s = first_crossing(b, k).ok_or(Error::NoCrossing { k })?;
    Ok(b.swap_masked(range_mask(b.len(), 0, s)))
}

/// Length of the shortest prefix whose difference is `+-k`.
pub fn first_crossing(b: &BiWord, k: u32) -> Option<usize> {
    prefix_diffs(b).iter().position(|d| d.unsigned_abs() == k).map(|i| i + 1)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn words(m: u32, n: u32) -> Vec<String> {
        enumerate_words(m, n, &CountBudget::default()).unwrap().map(|w| w.to_string()).collect()
    }

    #[test]
    fn enumerate_examples() {
        assert_eq!(words(0, 0), vec!["ε"]);
        assert_eq!(words(1, 1), vec!["01", "10"]);
        assert_eq!(words(3, 2).len(), 10);
        assert_eq!(words(0, 3), vec!["000"]);
        assert_eq!(words(2, 0), vec!["11"]);
        assert_eq!(words(2, 2), vec!["0011", "0101", "0110", "1001", "1010", "1100"]);
    }

    #[test]
    fn enumerate_counts_and_order() {
        for m in 0..7 {
            for n in 0..7 {
                let ws: Vec<Word> = enumerate_words(m, n, &CountBudget::default()).unwrap().collect();
                assert_eq!(BigInt::from(ws.len()), binom_unchecked((m + n) as u64, m as u64));
                assert!(ws.windows(2).all(|w| w[0].to_string() < w[1].to_string()));
                assert!(ws.iter().all(|w| w.ones() == m && w.zeros() == n));
            }
        }
    }

    #[test]
    fn enumerate_full_width() {
        let w: Vec<Word> = words_unchecked(63, 0).collect();
        assert_eq!(w.len(), 1);
        assert_eq!(w[0].ones(), 63);
    }

    #[test]
    fn budget_refuses() {
        let tight = CountBudget::new(4, 100).unwrap();
        assert!(matches!(enumerate_words(3, 2, &tight), Err(Error::BudgetExceeded(_))));
        let few = CountBudget::new(10, 5).unwrap();
        assert!(matches!(enumerate_words(3, 2, &few), Err(Error::BudgetExceeded(_))));
        assert!(CountBudget::new(0, 5).is_err());
    }

    #[test]
    fn prefix_diff_examples() {
        assert_eq!(prefix_diffs(&BiWord::parse("0110", "0110").unwrap()), vec![0, 0, 0, 0]);
        assert_eq!(prefix_diffs(&BiWord::parse("10", "01").unwrap()), vec![1, 0]);
        assert_eq!(prefix_diffs(&BiWord::parse("1100", "0011").unwrap()), vec![1, 2, 1, 0]);
        let b = BiWord::parse("1100", "0011").unwrap();
        assert_eq!(max_abs_prefix(b.u.bits(), b.v.bits(), 4), 2);
    }

    #[test]
    fn involution_examples() {
        let b = BiWord::parse("10", "01").unwrap();
        let c = involution(&b, 1).unwrap();
        assert_eq!(c, BiWord::parse("00", "11").unwrap());
        assert_eq!(involution(&c, 1).unwrap(), b);
        let same = BiWord::parse("0110", "0110").unwrap();
        assert_eq!(involution(&same, 1), Err(Error::NoCrossing { k: 1 }));
    }

    #[test]
    fn word_parsing() {
        assert!("012".parse::<Word>().is_err());
        assert!(BiWord::parse("01", "1").is_err());
        assert_eq!("ε".parse::<Word>().unwrap(), Word::empty());
        assert!(Word::from_bits(0b100, 2).is_err());
    }

    #[test]
    fn masks() {
        assert_eq!(range_mask(4, 0, 2), 0b1100);
        assert_eq!(range_mask(4, 1, 4), 0b0111);
        assert_eq!(range_mask(4, 2, 2), 0);
    }
}
