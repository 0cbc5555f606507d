//! The library's counting oracles against deliberately naive counterparts
//! that work on plain letter vectors.

use std::collections::BTreeMap;

use num_bigint::BigInt;

use trigpos::biwords::{count_bp, count_cp, count_crossed_within, count_same_content_within, CountBudget};
use trigpos::Params;

/// All words with `ones` ones and `zeros` zeros, in lexicographic order.
fn words(ones: u32, zeros: u32) -> Vec<Vec<i32>> {
    if ones + zeros == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    if zeros > 0 {
        for mut w in words(ones, zeros - 1) {
            w.insert(0, 0);
            out.push(w);
        }
    }
    if ones > 0 {
        for mut w in words(ones - 1, zeros) {
            w.insert(0, 1);
            out.push(w);
        }
    }
    out
}

fn prefixes(u: &[i32], v: &[i32]) -> Vec<i32> {
    u.iter()
        .zip(v)
        .scan(0, |acc, (a, b)| {
            *acc += a - b;
            Some(*acc)
        })
        .collect()
}

/// Cut whenever the running difference since the last cut hits `+-k`, then
/// count how many partial sums of the cut differences are `+-k`.
fn class(u: &[i32], v: &[i32], k: i32) -> usize {
    let mut since = 0;
    let mut diffs = Vec::new();
    for (a, b) in u.iter().zip(v) {
        since += a - b;
        if since.abs() == k {
            diffs.push(since);
            since = 0;
        }
    }
    let mut total = 0;
    diffs
        .iter()
        .filter(|&&d| {
            total += d;
            total.abs() == k
        })
        .count()
}

fn naive_classes(uw: &[Vec<i32>], vw: &[Vec<i32>], k: i32) -> BTreeMap<usize, BigInt> {
    let mut out: BTreeMap<usize, BigInt> = BTreeMap::new();
    for u in uw {
        for v in vw {
            if prefixes(u, v).iter().all(|d| d.abs() < 2 * k) {
                *out.entry(class(u, v, k)).or_default() += 1;
            }
        }
    }
    out
}

fn naive_inside(uw: &[Vec<i32>], vw: &[Vec<i32>], k: i32) -> BigInt {
    let n = uw.iter().flat_map(|u| vw.iter().filter(move |v| prefixes(u, v).iter().all(|d| d.abs() < k))).count();
    BigInt::from(n)
}

#[test]
fn class_counts_match_naive_enumeration() {
    let budget = CountBudget::default();
    for m in 0..=5 {
        for n in 0..=5 {
            for k in 1..=3 {
                let p = Params::new(m, n, k).unwrap();
                let ki = k as i32;
                let same = words(m, n);
                let swapped = words(n, m);
                assert_eq!(count_cp(&p, &budget).unwrap(), naive_classes(&same, &same, ki), "{p}");
                assert_eq!(count_same_content_within(&p, &budget).unwrap(), naive_inside(&same, &same, ki), "{p}");
                if p.gap_ok() {
                    assert_eq!(count_bp(&p, &budget).unwrap(), naive_classes(&same, &swapped, ki), "{p}");
                    assert_eq!(count_crossed_within(&p, &budget).unwrap(), naive_inside(&same, &swapped, ki), "{p}");
                }
            }
        }
    }
}
