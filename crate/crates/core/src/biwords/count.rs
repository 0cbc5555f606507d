//! Brute-force counting oracles over sets of bi-words.
//!
//! Every count here is an exhaustive enumeration. Work is sharded by the
//! first word of each pair across the current rayon pool and merged by
//! summation, so results do not depend on the number of workers.

use std::collections::{BTreeMap, HashMap, HashSet};

use num_bigint::BigInt;
use rayon::prelude::*;

use super::{first_crossing, involution, k_factorize, max_abs_prefix, words_unchecked, BiWord, CountBudget, Word};
use crate::error::{Error, Result};
use crate::exact::binom_unchecked;
use crate::sums::Params;

/// Letter content `(ones, zeros)` of a word.
type Content = (u32, u32);

/// Which family of bi-word sets `W_l` an alternating sum ranges over.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum PairFamily {
    /// `W_l = M_{M-kl, N+kl} x M_{N+kl, M-kl}`, sized `C(M+N, M-kl)^2`.
    Crossed,
    /// `W_l = M_{M-kl, N+kl} x M_{M+kl, N-kl}`, sized `C(M+N, M-kl) C(M+N, N-kl)`.
    SameContent,
}

impl PairFamily {
    fn halves(self, p: &Params, l: i64) -> Option<(Content, Content)> {
        let (m, n, kl) = (p.m as i64, p.n as i64, p.k as i64 * l);
        let (u, v) = match self {
            PairFamily::Crossed => ((m - kl, n + kl), (n + kl, m - kl)),
            PairFamily::SameContent => ((m - kl, n + kl), (m + kl, n - kl)),
        };
        if u.0 < 0 || u.1 < 0 || v.0 < 0 || v.1 < 0 {
            return None;
        }
        Some(((u.0 as u32, u.1 as u32), (v.0 as u32, v.1 as u32)))
    }

    fn levels(self, p: &Params) -> Vec<i64> {
        let reach = p.total() as i64;
        (-reach..=reach).filter(|&l| self.halves(p, l).is_some()).collect()
    }

    /// The `l` with `b` in `W_l`, read off from `|u|_1 = M - k l`.
    fn level_of(p: &Params, b: &BiWord) -> i64 {
        (p.m as i64 - b.u.ones() as i64) / p.k as i64
    }
}

fn pair_count(u: Content, v: Content) -> BigInt {
    binom_unchecked((u.0 + u.1) as u64, u.0 as u64) * binom_unchecked((v.0 + v.1) as u64, v.0 as u64)
}

fn check_pairs(u: Content, v: Content, budget: &CountBudget) -> Result<()> {
    budget.check_len(u.0 + u.1)?;
    budget.check_items(&pair_count(u, v))
}

/// Runs `per_u(u, vs)` for each word `u` of content `u_content`, in parallel,
/// returning the results in lexicographic order of `u`.
fn over_pairs<T, F>(u_content: Content, v_content: Content, per_u: F) -> Vec<T>
where
    T: Send,
    F: Fn(Word, &[Word]) -> T + Sync,
{
    let us: Vec<Word> = words_unchecked(u_content.0, u_content.1).collect();
    let vs: Vec<Word> = words_unchecked(v_content.0, v_content.1).collect();
    us.par_iter().map(|&u| per_u(u, &vs)).collect()
}

fn count_within(u: Content, v: Content, bound: i32) -> u64 {
    let len = (u.0 + u.1) as usize;
    over_pairs(u, v, |u, vs| vs.iter().filter(|v| max_abs_prefix(u.bits(), v.bits(), len) < bound).count() as u64)
        .into_iter()
        .sum()
}

fn crossed(p: &Params) -> (Content, Content) {
    ((p.m, p.n), (p.n, p.m))
}

fn same(p: &Params) -> (Content, Content) {
    ((p.m, p.n), (p.m, p.n))
}

/// Pairs in `M_{M,N} x M_{N,M}` whose prefix differences stay inside `(-k, k)`.
pub fn count_crossed_within(p: &Params, budget: &CountBudget) -> Result<BigInt> {
    p.require_gap()?;
    let (u, v) = crossed(p);
    check_pairs(u, v, budget)?;
    Ok(BigInt::from(count_within(u, v, p.k as i32)))
}

/// Pairs in `M_{M,N} x M_{M,N}` whose prefix differences stay inside `(-k, k)`.
pub fn count_same_content_within(p: &Params, budget: &CountBudget) -> Result<BigInt> {
    let (u, v) = same(p);
    check_pairs(u, v, budget)?;
    Ok(BigInt::from(count_within(u, v, p.k as i32)))
}

fn class_counts(u: Content, v: Content, k: u32) -> BTreeMap<usize, BigInt> {
    let len = (u.0 + u.1) as usize;
    let bound = 2 * k as i32;
    let per_u = over_pairs(u, v, |u, vs| {
        let mut counts = vec![0u64; len + 1];
        for &v in vs {
            if max_abs_prefix(u.bits(), v.bits(), len) < bound {
                counts[k_factorize(&BiWord { u, v }, k).class_p] += 1;
            }
        }
        counts
    });
    let mut total = vec![0u64; len + 1];
    for counts in per_u {
        for (t, c) in total.iter_mut().zip(counts) {
            *t += c;
        }
    }
    total.into_iter().enumerate().filter(|&(_, c)| c > 0).map(|(p, c)| (p, BigInt::from(c))).collect()
}

/// `p -> |B_p|`: class-`p` pairs of `M_{M,N} x M_{N,M}` with every prefix
/// difference inside `(-2k, 2k)`. Classes with no members are omitted.
pub fn count_bp(p: &Params, budget: &CountBudget) -> Result<BTreeMap<usize, BigInt>> {
    let (u, v) = crossed(p);
    check_pairs(u, v, budget)?;
    Ok(class_counts(u, v, p.k))
}

/// `p -> c_p`: as [`count_bp`] over `M_{M,N} x M_{M,N}`.
pub fn count_cp(p: &Params, budget: &CountBudget) -> Result<BTreeMap<usize, BigInt>> {
    let (u, v) = same(p);
    check_pairs(u, v, budget)?;
    Ok(class_counts(u, v, p.k))
}

/// Monotone lattice paths from `(0, 0)` to `(M, N)` (1 = east, 0 = north)
/// that never visit a point on `y = x + k` or `y = x - k`.
pub fn lattice_path_count_avoiding(p: &Params, budget: &CountBudget) -> Result<BigInt> {
    budget.check_len(p.total())?;
    budget.check_items(&binom_unchecked(p.total() as u64, p.m as u64))?;
    let k = p.k as i32;
    let count = words_unchecked(p.m, p.n)
        .filter(|w| {
            let mut offset = 0i32; // y - x
            w.letters().all(|step| {
                offset += if step == 1 { -1 } else { 1 };
                offset.abs() != k
            })
        })
        .count();
    Ok(BigInt::from(count))
}

/// Outcome of checking the segment-exchange map from `B_p` onto good guys.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SurjectionCheck {
    pub p: usize,
    /// `|B_p|`.
    pub domain: u64,
    /// Number of good guys the map is expected to cover.
    pub targets: u64,
    /// `2^(p-1)`.
    pub expected_preimages: u64,
    /// Images that are not among the expected good guys.
    pub outside: u64,
    /// `preimage count -> number of targets with that many preimages`.
    pub histogram: BTreeMap<u64, u64>,
    pub witnesses: Vec<String>,
}

impl SurjectionCheck {
    pub fn ok(&self) -> bool {
        self.outside == 0
            && self.histogram.keys().all(|&c| c == self.expected_preimages)
            && self.domain == self.targets * self.expected_preimages
    }
}

/// Builds the map that swaps every full segment whose difference equals that
/// of the last full segment, and checks that it sends `B_p` onto the good
/// guys of `W_{-p} u W_p` (restricted to `2p` segments on the side the
/// letter imbalance favours) with exactly `2^(p-1)` preimages each.
pub fn surjection_preimages(params: &Params, p: usize, budget: &CountBudget) -> Result<SurjectionCheck> {
    params.require_gap()?;
    if p == 0 {
        return Err(Error::Precondition("the exchange map is defined for p >= 1".into()));
    }
    let (uc, vc) = crossed(params);
    check_pairs(uc, vc, budget)?;
    let k = params.k;
    let len = params.total() as usize;
    let bound = 2 * k as i32;

    let domain: Vec<BiWord> = over_pairs(uc, vc, |u, vs| {
        vs.iter()
            .filter(|v| max_abs_prefix(u.bits(), v.bits(), len) < bound)
            .map(|&v| BiWord { u, v })
            .filter(|b| k_factorize(b, k).class_p == p)
            .collect::<Vec<_>>()
    })
    .into_iter()
    .flatten()
    .collect();

    let mut targets = HashSet::new();
    for sign in [-1i64, 1] {
        let l = sign * p as i64;
        let Some((u, v)) = PairFamily::Crossed.halves(params, l) else {
            continue;
        };
        check_pairs(u, v, budget)?;
        // the side with the surplus keeps every good guy; the other only 2p-segment ones
        let restrict = match params.m.cmp(&params.n) {
            std::cmp::Ordering::Equal => false,
            std::cmp::Ordering::Less => sign > 0,
            std::cmp::Ordering::Greater => sign < 0,
        };
        for u in words_unchecked(u.0, u.1) {
            for v in words_unchecked(v.0, v.1) {
                let b = BiWord { u, v };
                let f = k_factorize(&b, k);
                if f.good && (!restrict || f.k_segments == 2 * p) {
                    targets.insert(b);
                }
            }
        }
    }

    let mut preimages: HashMap<BiWord, u64> = HashMap::new();
    let mut outside = 0;
    let mut witnesses = Vec::new();
    for b in &domain {
        let f = k_factorize(b, k);
        let last = *f.seg_diffs.last().expect("class p >= 1 has a full segment");
        let image = b.swap_masked(f.segment_mask(|_, d| d == last));
        if !targets.contains(&image) {
            outside += 1;
            if witnesses.len() < 8 {
                witnesses.push(format!("{b} -> {image} is not a target good guy"));
            }
        }
        *preimages.entry(image).or_default() += 1;
    }

    let expected = 1u64 << (p - 1);
    let mut histogram = BTreeMap::new();
    let mut sorted: Vec<&BiWord> = targets.iter().collect();
    sorted.sort();
    for t in sorted {
        let c = preimages.get(t).copied().unwrap_or(0);
        *histogram.entry(c).or_default() += 1;
        if c != expected && witnesses.len() < 8 {
            witnesses.push(format!("{t} has {c} preimages, expected {expected}"));
        }
    }
    Ok(SurjectionCheck {
        p,
        domain: domain.len() as u64,
        targets: targets.len() as u64,
        expected_preimages: expected,
        outside,
        histogram,
        witnesses,
    })
}

/// Outcome of exercising the prefix-swap involution on every bi-word of `W`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct InvolutionCheck {
    /// Bi-words visited, over all levels `l`.
    pub pairs: u64,
    /// Bi-words with some prefix difference equal to `+-k`.
    pub moved: u64,
    /// Bi-words whose prefix differences stay inside `(-k, k)`.
    pub fixed: u64,
    /// Fixed points found outside `W_0`.
    pub fixed_off_level_zero: u64,
    /// `sum over W of (-1)^l`.
    pub signed_total: BigInt,
    pub failures: u64,
    pub witnesses: Vec<String>,
}

impl InvolutionCheck {
    pub fn ok(&self) -> bool {
        self.failures == 0
    }
}

#[derive(Default)]
struct InvolutionTally {
    pairs: u64,
    moved: u64,
    fixed: u64,
    fixed_off: u64,
    signed: i64,
    failures: u64,
    witnesses: Vec<String>,
}

impl InvolutionTally {
    fn merge(mut self, other: InvolutionTally) -> InvolutionTally {
        self.pairs += other.pairs;
        self.moved += other.moved;
        self.fixed += other.fixed;
        self.fixed_off += other.fixed_off;
        self.signed += other.signed;
        self.failures += other.failures;
        for w in other.witnesses {
            if self.witnesses.len() < 8 {
                self.witnesses.push(w);
            }
        }
        self
    }

    fn fail(&mut self, msg: String) {
        self.failures += 1;
        if self.witnesses.len() < 8 {
            self.witnesses.push(msg);
        }
    }
}

/// Checks, for every bi-word in `W = U_l W_l`, that the prefix swap is an
/// involution that moves `W_l` to `W_{l+-1}` and keeps the crossing index.
pub fn involution_check(params: &Params, family: PairFamily, budget: &CountBudget) -> Result<InvolutionCheck> {
    let levels = family.levels(params);
    let mut total = BigInt::from(0);
    for &l in &levels {
        let (u, v) = family.halves(params, l).expect("level in range");
        budget.check_len(u.0 + u.1)?;
        total += pair_count(u, v);
    }
    budget.check_items(&total)?;

    let k = params.k;
    let mut tally = InvolutionTally::default();
    for &l in &levels {
        let (uc, vc) = family.halves(params, l).expect("level in range");
        let sign = if l % 2 == 0 { 1 } else { -1 };
        let per_u = over_pairs(uc, vc, |u, vs| {
            let mut t = InvolutionTally::default();
            for &v in vs {
                let b = BiWord { u, v };
                t.pairs += 1;
                t.signed += sign;
                let Some(s) = first_crossing(&b, k) else {
                    t.fixed += 1;
                    if l != 0 {
                        t.fixed_off += 1;
                    }
                    continue;
                };
                t.moved += 1;
                let image = involution(&b, k).expect("crossing exists");
                let image_level = PairFamily::level_of(params, &image);
                if (image_level - l).abs() != 1 || family.halves(params, image_level).is_none() {
                    t.fail(format!("{b} in W_{l} maps to {image} in W_{image_level}"));
                }
                if first_crossing(&image, k) != Some(s) {
                    t.fail(format!("{b} and {image} have different crossing index"));
                }
                match involution(&image, k) {
                    Ok(back) if back == b => {}
                    _ => t.fail(format!("{b} is not restored by applying the swap twice")),
                }
            }
            t
        });
        tally = per_u.into_iter().fold(tally, InvolutionTally::merge);
    }
    Ok(InvolutionCheck {
        pairs: tally.pairs,
        moved: tally.moved,
        fixed: tally.fixed,
        fixed_off_level_zero: tally.fixed_off,
        signed_total: BigInt::from(tally.signed),
        failures: tally.failures,
        witnesses: tally.witnesses,
    })
}
