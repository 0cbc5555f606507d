use num_bigint::BigInt;
use num_traits::{One, Zero};
use proptest::prelude::*;

use trigpos::biwords::{
    enumerate_words, first_crossing, involution, k_factorize, prefix_diffs, BiWord, CountBudget, Word,
};
use trigpos::exact::{fmt_rat, is_canonical, parse_rat, ratio};
use trigpos::trig::{expand_cos_series, expand_sine_series, hadamard};
use trigpos::{CosSeries, Poly, Rat};

fn small_rat() -> impl Strategy<Value = Rat> {
    (-40i64..40, 1i64..12).prop_map(|(n, d)| ratio(n, d))
}

fn poly() -> impl Strategy<Value = Poly> {
    prop::collection::vec(small_rat(), 0..6).prop_map(Poly::from_coeffs)
}

fn series() -> impl Strategy<Value = CosSeries> {
    prop::collection::vec((-6i64..=6, -50i64..50), 0..8).prop_map(CosSeries::from_pairs)
}

fn biword(max_len: u32) -> impl Strategy<Value = BiWord> {
    (0..=max_len).prop_flat_map(|len| {
        let top = 1u64 << len;
        (0..top, 0..top).prop_map(move |(u, v)| {
            BiWord::new(Word::from_bits(u, len).unwrap(), Word::from_bits(v, len).unwrap()).unwrap()
        })
    })
}

/// `T_n(x)` and `U_n(x)` at a rational point, from the three-term recurrence.
fn chebyshev_at(x: &Rat, n: usize) -> (Vec<Rat>, Vec<Rat>) {
    let two = Rat::from_integer(2.into());
    let mut t = vec![Rat::one(), x.clone()];
    let mut u = vec![Rat::one(), &two * x];
    for i in 2..=n {
        t.push(&two * x * &t[i - 1] - &t[i - 2]);
        u.push(&two * x * &u[i - 1] - &u[i - 2]);
    }
    (t, u)
}

proptest! {
    #[test]
    fn poly_ring_axioms(a in poly(), b in poly(), c in poly()) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a - &a, Poly::zero());
        prop_assert_eq!(&a * &Poly::one(), a.clone());
    }

    #[test]
    fn poly_eval_is_a_homomorphism(a in poly(), b in poly(), z in small_rat()) {
        prop_assert_eq!((&a * &b).eval(&z), a.eval(&z) * b.eval(&z));
        prop_assert_eq!((&a + &b).eval(&z), a.eval(&z) + b.eval(&z));
    }

    #[test]
    fn expansion_is_linear(s in series(), t in series(), c in -5i64..5) {
        let scaled = CosSeries::from_pairs(s.iter().map(|(l, a)| (l, a * BigInt::from(c))));
        prop_assert_eq!(expand_cos_series(&s.plus(&t)), expand_cos_series(&s) + expand_cos_series(&t));
        prop_assert_eq!(expand_cos_series(&scaled), expand_cos_series(&s).scale(&Rat::from_integer(c.into())));
        prop_assert_eq!(expand_sine_series(&s.plus(&t)), expand_sine_series(&s) + expand_sine_series(&t));
    }

    #[test]
    fn expansions_agree_with_chebyshev_values(s in series(), z in small_rat()) {
        let x = &z - Rat::one();
        let (t, u) = chebyshev_at(&x, 7);
        let mut cos_side = Rat::zero();
        let mut sin_side = Rat::zero();
        for (l, a) in s.iter() {
            let n = l.unsigned_abs() as usize;
            let a = Rat::from_integer(a.clone());
            cos_side += &a * &t[n];
            if n > 0 {
                sin_side += &a * &u[n - 1];
            }
        }
        prop_assert_eq!(expand_cos_series(&s).eval(&z), cos_side);
        prop_assert_eq!(expand_sine_series(&s).eval(&z), sin_side);
    }

    #[test]
    fn hadamard_laws(a in series(), b in series(), c in series()) {
        prop_assert_eq!(hadamard(&a, &b), hadamard(&b, &a));
        prop_assert_eq!(hadamard(&hadamard(&a, &b), &c), hadamard(&a, &hadamard(&b, &c)));
        prop_assert_eq!(hadamard(&a, &b.plus(&c)), hadamard(&a, &b).plus(&hadamard(&a, &c)));
    }

    #[test]
    fn rationals_stay_canonical(a in small_rat(), b in small_rat()) {
        for r in [&a + &b, &a - &b, &a * &b] {
            prop_assert!(is_canonical(&r));
            prop_assert_eq!(parse_rat(&fmt_rat(&r)).unwrap(), r);
        }
        if !b.is_zero() {
            prop_assert!(is_canonical(&(&a / &b)));
        }
    }

    #[test]
    fn involution_is_self_inverse(b in biword(10), k in 1u32..4) {
        match first_crossing(&b, k) {
            Some(s) => {
                let image = involution(&b, k).unwrap();
                prop_assert_eq!(first_crossing(&image, k), Some(s));
                prop_assert_eq!(involution(&image, k).unwrap(), b);
                prop_assert_eq!((b.u.ones() as i64 - image.u.ones() as i64).abs(), k as i64);
            }
            None => prop_assert!(prefix_diffs(&b).iter().all(|d| d.abs() < k as i32)),
        }
    }

    #[test]
    fn factorization_segments_tile_the_word(b in biword(12), k in 1u32..4) {
        let f = k_factorize(&b, k);
        let segments = f.segments();
        prop_assert_eq!(segments.first().map_or(0, |r| r.start), 0);
        prop_assert_eq!(segments.last().map_or(0, |r| r.end), b.len());
        prop_assert!(segments.windows(2).all(|w| w[0].end == w[1].start));
        prop_assert_eq!(f.seg_diffs.len(), f.k_segments);
        prop_assert!(f.seg_diffs.iter().all(|d| d.abs() == k as i32));
        prop_assert!(f.trailing_diff.abs() < k as i32);
        prop_assert!(f.class_p <= f.k_segments);
    }

    #[test]
    fn word_text_round_trip(bits in 0u64..(1 << 16), len in 0u32..=16) {
        let w = Word::from_bits(bits & ((1u64 << len) - 1), len).unwrap();
        let text = w.to_string();
        let back: Word = if len == 0 { Word::empty() } else { text.parse().unwrap() };
        prop_assert_eq!(back, w);
    }
}

#[test]
fn enumeration_is_sorted_and_complete() {
    let budget = CountBudget::default();
    for m in 0..7 {
        for n in 0..7 {
            let words: Vec<Word> = enumerate_words(m, n, &budget).unwrap().collect();
            let expected = trigpos::exact::binom((m + n) as i64, m as i64).unwrap();
            assert_eq!(BigInt::from(words.len()), expected);
            assert!(words.windows(2).all(|w| w[0].to_string() < w[1].to_string()));
            assert!(words.iter().all(|w| w.ones() == m && w.zeros() == n));
        }
    }
}
