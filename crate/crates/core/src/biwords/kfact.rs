use std::ops::Range;

use super::{range_mask, BiWord};

/// The k-factorization of a bi-word.
///
/// Cutting happens at the earliest position where the ones-difference
/// accumulated since the previous cut reaches `+-k`; whatever is left after
/// the last cut is the trailing remainder, whose difference stays strictly
/// inside `(-k, k)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KFact {
    pub k: u32,
    pub len: usize,
    /// End position (exclusive) of each full segment, increasing.
    pub cuts: Vec<usize>,
    /// `|u^(j)|_1 - |v^(j)|_1` of each full segment; each is `+-k`.
    pub seg_diffs: Vec<i32>,
    pub trailing_diff: i32,
    pub k_segments: usize,
    /// Number of `r` with `seg_diffs[..r]` summing to `+-k`.
    pub class_p: usize,
    /// All segment differences equal (vacuously true with no segments).
    pub good: bool,
}

impl KFact {
    /// Position ranges of the full segments followed by the (possibly empty)
    /// trailing remainder.
    pub fn segments(&self) -> Vec<Range<usize>> {
        let mut out = Vec::with_capacity(self.cuts.len() + 1);
        let mut start = 0;
        for &c in &self.cuts {
            out.push(start..c);
            start = c;
        }
        out.push(start..self.len);
        out
    }

    /// Packed mask of the full segments `j` for which `pick(j, diff)` holds.
    pub fn segment_mask(&self, mut pick: impl FnMut(usize, i32) -> bool) -> u64 {
        let mut mask = 0;
        let mut start = 0;
        for (j, (&c, &d)) in self.cuts.iter().zip(&self.seg_diffs).enumerate() {
            if pick(j, d) {
                mask |= range_mask(self.len, start, c);
            }
            start = c;
        }
        mask
    }
}

pub fn k_factorize(b: &BiWord, k: u32) -> KFact {
    assert!(k >= 1, "k must be positive");
    let k_i = k as i32;
    let mut cuts = Vec::new();
    let mut seg_diffs = Vec::new();
    let mut cur = 0i32;
    for (s, (x, y)) in b.u.letters().zip(b.v.letters()).enumerate() {
        cur += x as i32 - y as i32;
        if cur.abs() == k_i {
            cuts.push(s + 1);
            seg_diffs.push(cur);
            cur = 0;
        }
    }
    let mut cumulative = 0;
    let class_p = seg_diffs
        .iter()
        .filter(|&&d| {
            cumulative += d;
            cumulative.abs() == k_i
        })
        .count();
    let good = seg_diffs.windows(2).all(|w| w[0] == w[1]);
    KFact { k, len: b.len(), k_segments: cuts.len(), cuts, seg_diffs, trailing_diff: cur, class_p, good }
}
