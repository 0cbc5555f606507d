//! Cosine series and their exact expansion in powers of `z = 1 + cos x`.
//!
//! A [`CosSeries`] stores the unfolded coefficients `l -> a_l` over all
//! integers `l`; the mixed and product series distinguish `a_l` from
//! `a_{-l}` and the Hadamard product acts on the unfolded form. Folding into
//! `c_0 = a_0`, `c_l = a_l + a_{-l}` happens only when a series is expanded.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::exact::{factorial, pochhammer, ratio, Rat};
use crate::poly::Poly;

/// `f(x) = sum_l a_l cos(l x)` with finitely many nonzero `a_l`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct CosSeries {
    coeffs: BTreeMap<i64, BigInt>,
}

impl CosSeries {
    pub fn new() -> Self {
        CosSeries::default()
    }

    pub fn from_pairs<I, T>(pairs: I) -> Self
    where
        I: IntoIterator<Item = (i64, T)>,
        T: Into<BigInt>,
    {
        let mut s = CosSeries::new();
        for (l, a) in pairs {
            s.add_term(l, a.into());
        }
        s
    }

    /// Adds `a` to the coefficient of index `l`, dropping it if it cancels.
    pub fn add_term(&mut self, l: i64, a: BigInt) {
        if a.is_zero() {
            return;
        }
        let entry = self.coeffs.entry(l).or_insert_with(BigInt::zero);
        *entry += a;
        if entry.is_zero() {
            self.coeffs.remove(&l);
        }
    }

    pub fn get(&self, l: i64) -> BigInt {
        self.coeffs.get(&l).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn iter(&self) -> impl Iterator<Item = (i64, &BigInt)> + '_ {
        self.coeffs.iter().map(|(&l, a)| (l, a))
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Largest `|l|` in the support, `0` for the zero series.
    pub fn max_abs_index(&self) -> u64 {
        self.coeffs.keys().map(|l| l.unsigned_abs()).max().unwrap_or(0)
    }

    /// `c_0 = a_0`, `c_l = a_l + a_{-l}`, indexed by `l >= 0`.
    pub fn folded(&self) -> Vec<BigInt> {
        if self.is_zero() {
            return Vec::new();
        }
        let mut out = vec![BigInt::zero(); self.max_abs_index() as usize + 1];
        for (&l, a) in &self.coeffs {
            out[l.unsigned_abs() as usize] += a;
        }
        out
    }

    /// `sum_l (-1)^l a_l`, the value at `x = pi`.
    pub fn alt_sum(&self) -> BigInt {
        self.coeffs.iter().map(|(&l, a)| if l % 2 == 0 { a.clone() } else { -a }).sum()
    }

    /// `true` when `a_l = a_{-l}` for every `l`.
    pub fn is_symmetric(&self) -> bool {
        self.coeffs.iter().all(|(&l, a)| self.get(-l) == *a)
    }

    /// Coefficient-wise sum.
    pub fn plus(&self, other: &CosSeries) -> CosSeries {
        let mut out = self.clone();
        for (l, a) in other.iter() {
            out.add_term(l, a.clone());
        }
        out
    }
}

impl fmt::Display for CosSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, (l, a)) in self.coeffs.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{l}:{a}")?;
        }
        write!(f, "}}")
    }
}

/// `T_l(cos x)` as a polynomial in `z = 1 + cos x`.
///
/// Uses the terminating hypergeometric form of `T_l` around `x = -1`:
/// the coefficient of `z^j` is `(-1)^l (-l)_j (l)_j / (j! (1/2)_j 2^j)`.
pub fn cheb_t_shifted(l: u64) -> Poly {
    let minus_l = -Rat::from_integer(BigInt::from(l));
    let l_rat = Rat::from_integer(BigInt::from(l));
    let half = ratio(1, 2);
    let sign = if l.is_multiple_of(2) { Rat::one() } else { -Rat::one() };
    let coeffs = (0..=l)
        .map(|j| {
            let num = pochhammer(&minus_l, j) * pochhammer(&l_rat, j);
            let den = Rat::from_integer(factorial(j) * (BigInt::one() << j)) * pochhammer(&half, j);
            &sign * num / den
        })
        .collect();
    Poly::from_coeffs(coeffs)
}

/// `U_l(cos x)` in powers of `z`, from `U_l = 2(z - 1) U_{l-1} - U_{l-2}`.
pub fn cheb_u_shifted(l: u64) -> Poly {
    let two_y = Poly::from_ints(&[-2, 2]);
    let mut prev = Poly::one();
    if l == 0 {
        return prev;
    }
    let mut cur = two_y.clone();
    for _ in 1..l {
        let next = &(&two_y * &cur) - &prev;
        prev = std::mem::replace(&mut cur, next);
    }
    cur
}

/// Jacobi polynomial `P_n^{(alpha, beta)}(z - 1)` as a polynomial in `z`.
///
/// Expands `((alpha+1)_n / n!) 2F1(-n, n+alpha+beta+1; alpha+1; (2-z)/2)`
/// with the prefactor folded into each term, `(alpha+1)_n / (alpha+1)_j =
/// (alpha+j+1)_{n-j}`, so no value of `alpha` produces a pole.
pub fn jacobi_shifted(n: u64, alpha: &Rat, beta: &Rat) -> Poly {
    let minus_n = -Rat::from_integer(BigInt::from(n));
    let upper = Rat::from_integer(BigInt::from(n)) + alpha + beta + Rat::one();
    let n_fact = Rat::from_integer(factorial(n));
    // (1 - z/2)
    let base = Poly::from_coeffs(vec![Rat::one(), ratio(-1, 2)]);
    let mut acc = Poly::zero();
    let mut power = Poly::one();
    for j in 0..=n {
        let shift = alpha + Rat::from_integer(BigInt::from(j + 1));
        let c = pochhammer(&shift, n - j) * pochhammer(&minus_n, j) * pochhammer(&upper, j)
            / (&n_fact * Rat::from_integer(factorial(j)));
        acc += &power.scale(&c);
        power = &power * &base;
    }
    acc
}

/// `sum_l a_l T_{|l|}(cos x)` in powers of `z = 1 + cos x`.
pub fn expand_cos_series(s: &CosSeries) -> Poly {
    let mut out = Poly::zero();
    for (l, c) in s.folded().into_iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        out += &cheb_t_shifted(l as u64).scale(&Rat::from_integer(c));
    }
    out
}

/// `sum_l a_l sin(|l| x) / sin x = sum_l a_l U_{|l|-1}(cos x)` in powers of
/// `z`, with `U_{-1} = 0` so the `l = 0` term vanishes.
pub fn expand_sine_series(s: &CosSeries) -> Poly {
    let mut out = Poly::zero();
    for (l, c) in s.folded().into_iter().enumerate().skip(1) {
        if c.is_zero() {
            continue;
        }
        out += &cheb_u_shifted(l as u64 - 1).scale(&Rat::from_integer(c));
    }
    out
}

/// `sum_l a_l l sin(l x) / sin x` in powers of `z`.
///
/// Differentiating `f` in `x` gives `-sin x * f'(z)`, so this is the formal
/// derivative of [`expand_cos_series`].
pub fn derivative_transform(s: &CosSeries) -> Poly {
    expand_cos_series(s).derivative()
}

/// Coefficient-wise product `(s1 * s2)_l = a_l b_l` on unfolded indices.
pub fn hadamard(s1: &CosSeries, s2: &CosSeries) -> CosSeries {
    let (small, large) = if s1.len() <= s2.len() { (s1, s2) } else { (s2, s1) };
    CosSeries::from_pairs(small.iter().filter_map(|(l, a)| large.coeffs.get(&l).map(|b| (l, a * b))))
}
