//! Binomial coefficient series, the Chebyshev weights `w(l, p)` and their
//! cancellation sums, and the generic weight families `l -> p_l(z)`.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact::{binom_unchecked, factorial, fmt_rat, pochhammer, Rat};
use crate::poly::Poly;
use crate::trig::{jacobi_shifted, CosSeries};

/// The `(M, N, k)` triple of a single binomial series.
///
/// `|M - N| <= k` is not enforced here; it is a precondition only of the
/// checks that need it (see [`Params::gap_ok`]).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Params {
    #[serde(rename = "M")]
    pub m: u32,
    #[serde(rename = "N")]
    pub n: u32,
    pub k: u32,
}

impl Params {
    pub fn new(m: u32, n: u32, k: u32) -> Result<Self> {
        if k == 0 {
            return Err(Error::InvalidArgument("k must be at least 1".into()));
        }
        Ok(Params { m, n, k })
    }

    /// `|M - N| <= k`.
    pub fn gap_ok(&self) -> bool {
        self.m.abs_diff(self.n) <= self.k
    }

    pub fn total(&self) -> u32 {
        self.m + self.n
    }

    pub(crate) fn require_gap(&self) -> Result<()> {
        if self.gap_ok() {
            Ok(())
        } else {
            Err(Error::Precondition(format!("|M - N| <= k fails for {self}")))
        }
    }
}

impl fmt::Display for Params {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "M={} N={} k={}", self.m, self.n, self.k)
    }
}

/// Pairs `(M_i, N_i)` sharing one `k`, for products of binomial series.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct MultiParams {
    pub pairs: Vec<(u32, u32)>,
    pub k: u32,
}

impl MultiParams {
    pub fn new(pairs: Vec<(u32, u32)>, k: u32) -> Result<Self> {
        if pairs.is_empty() {
            return Err(Error::InvalidArgument("at least one (M, N) pair is required".into()));
        }
        if k == 0 {
            return Err(Error::InvalidArgument("k must be at least 1".into()));
        }
        Ok(MultiParams { pairs, k })
    }

    pub fn gap_ok(&self) -> bool {
        self.pairs.iter().all(|&(m, n)| m.abs_diff(n) <= self.k)
    }

    pub fn factor(&self, i: usize) -> Params {
        let (m, n) = self.pairs[i];
        Params { m, n, k: self.k }
    }
}

impl fmt::Display for MultiParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "pairs=[")?;
        for (i, (m, n)) in self.pairs.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "({m},{n})")?;
        }
        write!(f, "] k={}", self.k)
    }
}

/// `C(M + N, M - k l)`, zero out of range.
fn binom_shifted(m: u32, n: u32, k: u32, l: i64) -> BigInt {
    let lower = m as i64 - k as i64 * l;
    let top = (m + n) as i64;
    if lower < 0 || lower > top {
        BigInt::zero()
    } else {
        binom_unchecked(top as u64, lower as u64)
    }
}

/// Indices `l` with `0 <= M - k l <= M + N`.
fn single_range(m: u32, n: u32, k: u32) -> std::ops::RangeInclusive<i64> {
    -((n / k) as i64)..=(m / k) as i64
}

/// `sum_l C(M+N, M-kl) cos(lx)`.
pub fn single_series(p: &Params) -> CosSeries {
    CosSeries::from_pairs(single_range(p.m, p.n, p.k).map(|l| (l, binom_shifted(p.m, p.n, p.k, l))))
}

/// `sum_l C(M+N, M-kl)^2 cos(lx)`.
pub fn squared_series(p: &Params) -> CosSeries {
    CosSeries::from_pairs(single_range(p.m, p.n, p.k).map(|l| {
        let c = binom_shifted(p.m, p.n, p.k, l);
        (l, &c * &c)
    }))
}

/// `sum_l C(M+N, M-kl) C(M+N, N-kl) cos(lx)`.
pub fn mixed_series(p: &Params) -> CosSeries {
    let reach = (p.m.min(p.n) / p.k) as i64;
    CosSeries::from_pairs(
        (-reach..=reach).map(|l| (l, binom_shifted(p.m, p.n, p.k, l) * binom_shifted(p.n, p.m, p.k, l))),
    )
}

/// `sum_l prod_i C(M_i+N_i, M_i-kl) cos(lx)`.
pub fn product_series(mp: &MultiParams) -> CosSeries {
    let k = mp.k;
    let lo = mp.pairs.iter().map(|&(_, n)| -((n / k) as i64)).max().unwrap_or(0);
    let hi = mp.pairs.iter().map(|&(m, _)| (m / k) as i64).min().unwrap_or(0);
    CosSeries::from_pairs((lo..=hi).map(|l| {
        let a: BigInt = mp.pairs.iter().map(|&(m, n)| binom_shifted(m, n, k, l)).product();
        (l, a)
    }))
}

/// `sum_l (-1)^l a_l`.
pub fn alt_sum(s: &CosSeries) -> BigInt {
    s.alt_sum()
}

/// `w(l, p) = C(|l|+p, |l|-p) 2^p |l| / (|l|+p) (-1)^{|l|-p}`, the
/// coefficient of `z^p` in `T_{|l|}(z - 1)`.
///
/// Zero for `|l| < p`; the indeterminate `w(0, 0)` is taken as `1`.
pub fn weight_w(l: i64, p: u64) -> Rat {
    let a = l.unsigned_abs();
    if a < p {
        return Rat::zero();
    }
    if a == 0 {
        return Rat::one();
    }
    let mag = Rat::new(binom_unchecked(a + p, a - p) * (BigInt::one() << p) * BigInt::from(a), BigInt::from(a + p));
    if (a - p).is_multiple_of(2) {
        mag
    } else {
        -mag
    }
}

fn weight_sum(top: u64, l: u64, p: u64, w: impl Fn(u64, u64) -> Result<Rat>) -> Result<Rat> {
    if l < p {
        return Err(Error::Precondition(format!("weight sum needs l >= p, got l={l} p={p}")));
    }
    let mut acc = Rat::zero();
    for r in 0..=(l - p) {
        acc += Rat::from_integer(binom_unchecked(top, r)) * w(l - r, p)?;
    }
    Ok(acc)
}

/// `sum_{r=0}^{l-p} C(2l, r) w(l - r, p)`.
pub fn weight_sum_a(l: u64, p: u64) -> Result<Rat> {
    weight_sum(2 * l, l, p, |m, p| Ok(weight_w(m as i64, p)))
}

/// `sum_{r=0}^{l-p} C(2l - 1, r) w(l - r, p)`.
pub fn weight_sum_b(l: u64, p: u64) -> Result<Rat> {
    if l == 0 {
        return Err(Error::Precondition("weight_sum_b needs l >= 1".into()));
    }
    weight_sum(2 * l - 1, l, p, |m, p| Ok(weight_w(m as i64, p)))
}

/// `sum_{r=0}^{l-p} C(2l + 1, r) w(l - r, p)`.
pub fn weight_sum_c(l: u64, p: u64) -> Result<Rat> {
    weight_sum(2 * l + 1, l, p, |m, p| Ok(weight_w(m as i64, p)))
}

/// A sequence of polynomials `p_l(z) = sum_{p <= l} w(l, p) z^p`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum WeightFamily {
    /// `p_l = T_l(z - 1)`.
    ChebyshevT,
    /// `p_l = ((alpha+beta+1)_l / (beta+1)_l) P_l^{(alpha,beta)}(z - 1)`.
    Jacobi { alpha: Rat, beta: Rat },
    /// `p_0 = 0`, `p_l` = the `Jacobi` member of index `l - 1`.
    ShiftedJacobi { alpha: Rat, beta: Rat },
    /// An explicit table; `table[l]` must have degree at most `l`.
    Custom(Vec<Poly>),
}

impl WeightFamily {
    pub fn custom(table: Vec<Poly>) -> Result<Self> {
        for (l, p) in table.iter().enumerate() {
            if p.degree().is_some_and(|d| d > l) {
                return Err(Error::InvalidArgument(format!(
                    "weight polynomial {l} has degree {} > {l}",
                    p.degree().unwrap_or(0)
                )));
            }
        }
        Ok(WeightFamily::Custom(table))
    }

    pub fn label(&self) -> String {
        match self {
            WeightFamily::ChebyshevT => "chebyshev_t".into(),
            WeightFamily::Jacobi { alpha, beta } => {
                format!("jacobi({},{})", fmt_rat(alpha), fmt_rat(beta))
            }
            WeightFamily::ShiftedJacobi { alpha, beta } => {
                format!("shifted_jacobi({},{})", fmt_rat(alpha), fmt_rat(beta))
            }
            WeightFamily::Custom(t) => format!("custom[{}]", t.len()),
        }
    }
}

fn scaled_jacobi(l: u64, alpha: &Rat, beta: &Rat) -> Result<Poly> {
    let den = pochhammer(&(beta + Rat::one()), l);
    if den.is_zero() {
        return Err(Error::Pole(format!("(beta+1)_{l} with beta = {}", fmt_rat(beta))));
    }
    let scale = pochhammer(&(alpha + beta + Rat::one()), l) / den;
    Ok(jacobi_shifted(l, alpha, beta).scale(&scale))
}

/// `p_l(z)` for the family.
pub fn weight_family_poly(family: &WeightFamily, l: u64) -> Result<Poly> {
    match family {
        WeightFamily::ChebyshevT => Ok(Poly::from_coeffs((0..=l).map(|p| weight_w(l as i64, p)).collect())),
        WeightFamily::Jacobi { alpha, beta } => scaled_jacobi(l, alpha, beta),
        WeightFamily::ShiftedJacobi { alpha, beta } => match l {
            0 => Ok(Poly::zero()),
            _ => scaled_jacobi(l - 1, alpha, beta),
        },
        WeightFamily::Custom(table) => table
            .get(l as usize)
            .cloned()
            .ok_or_else(|| Error::InvalidArgument(format!("custom weight table has no entry {l}"))),
    }
}

/// `sum_{r=0}^{l-p} C(2l, r) w_F(l - r, p)` for an arbitrary family.
pub fn family_weight_sum_a(family: &WeightFamily, l: u64, p: u64) -> Result<Rat> {
    weight_sum(2 * l, l, p, |m, p| Ok(weight_family_poly(family, m)?.coeff(p as usize)))
}

/// `sum_l a_l p_{|l|}(z)`.
pub fn generic_transform(s: &CosSeries, family: &WeightFamily) -> Result<Poly> {
    let mut out = Poly::zero();
    for (l, c) in s.folded().into_iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        out += &weight_family_poly(family, l as u64)?.scale(&Rat::from_integer(c));
    }
    Ok(out)
}

fn check_closed_form_args(l: u64, p: u64, beta: &Rat) -> Result<Rat> {
    if l < p {
        return Err(Error::Precondition(format!("closed form needs l >= p, got l={l} p={p}")));
    }
    let bp = pochhammer(&(beta + Rat::one()), p);
    if bp.is_zero() {
        return Err(Error::Pole(format!("(beta+1)_{p} with beta = {}", fmt_rat(beta))));
    }
    Ok(bp)
}

/// Closed form of [`family_weight_sum_a`] for the [`WeightFamily::Jacobi`] family:
///
/// `(alpha+beta+1)_{2p} (l-p-alpha-beta)_{l-p} / ((l-p)! p! (beta+1)_p 2^p)`.
///
/// Nonnegative for `p >= 1` whenever `-1 <= alpha + beta <= 1` and `beta > -1`.
pub fn jacobi_closed_form(l: u64, p: u64, alpha: &Rat, beta: &Rat) -> Result<Rat> {
    let bp = check_closed_form_args(l, p, beta)?;
    let s = alpha + beta;
    let lp = Rat::from_integer(BigInt::from(l - p));
    let num = pochhammer(&(&s + Rat::one()), 2 * p) * pochhammer(&(&lp - &s), l - p);
    let den = Rat::from_integer(factorial(l - p) * factorial(p) * (BigInt::one() << p)) * bp;
    Ok(num / den)
}

/// Closed form of [`family_weight_sum_a`] for [`WeightFamily::ShiftedJacobi`]:
/// zero for `l = p`, otherwise
///
/// `(alpha+beta+1)_{2p} (l-p-alpha-beta+1)_{l-p-1} / ((l-p-1)! p! (beta+1)_p 2^p)`.
///
/// Nonnegative whenever `-1 <= alpha + beta <= 2` and `beta > -1`.
pub fn shifted_jacobi_closed_form(l: u64, p: u64, alpha: &Rat, beta: &Rat) -> Result<Rat> {
    let bp = check_closed_form_args(l, p, beta)?;
    if l == p {
        return Ok(Rat::zero());
    }
    let s = alpha + beta;
    let lp = Rat::from_integer(BigInt::from(l - p));
    let num = pochhammer(&(&s + Rat::one()), 2 * p) * pochhammer(&(&lp - &s + Rat::one()), l - p - 1);
    let den = Rat::from_integer(factorial(l - p - 1) * factorial(p) * (BigInt::one() << p)) * bp;
    Ok(num / den)
}
