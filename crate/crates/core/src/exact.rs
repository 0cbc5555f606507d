//! Exact scalars: binomials, rising factorials and terminating `2F1` sums.
//!
//! All arithmetic is carried out on [`BigInt`] and [`Rat`]; the rational type
//! keeps itself in lowest terms with a positive denominator after every
//! operation, so structural equality is value equality.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub use num_bigint::BigInt as Int;

/// Arbitrary precision rational, always reduced.
pub type Rat = BigRational;

/// Shorthand for the integer `n` as a rational.
pub fn rat(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// Shorthand for `num / den`, reduced. Panics on a zero denominator.
pub fn ratio(num: i64, den: i64) -> Rat {
    Rat::new(BigInt::from(num), BigInt::from(den))
}

/// Parses `"3"`, `"-1/2"` and similar into a rational.
pub fn parse_rat(s: &str) -> Result<Rat> {
    let s = s.trim();
    let bad = || Error::InvalidArgument(format!("not a rational number: {s:?}"));
    match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().map_err(|_| bad())?;
            let d: BigInt = d.trim().parse().map_err(|_| bad())?;
            if d.is_zero() {
                return Err(bad());
            }
            Ok(Rat::new(n, d))
        }
        None => Ok(Rat::from_integer(s.parse().map_err(|_| bad())?)),
    }
}

/// Renders a rational as `n` or `n/d`.
pub fn fmt_rat(r: &Rat) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// `C(n, j)`, zero whenever `j < 0` or `j > n`.
pub fn binom(n: i64, j: i64) -> Result<BigInt> {
    if n < 0 {
        return Err(Error::NegativeUpperIndex(n));
    }
    if j < 0 || j > n {
        return Ok(BigInt::zero());
    }
    Ok(binom_unchecked(n as u64, j as u64))
}

/// `C(n, j)` for `0 <= j <= n` (zero otherwise).
pub fn binom_unchecked(n: u64, j: u64) -> BigInt {
    if j > n {
        return BigInt::zero();
    }
    let j = j.min(n - j);
    let mut acc = BigInt::one();
    for i in 0..j {
        // acc = C(n, i) here, and C(n, i) * (n - i) is divisible by i + 1
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

pub fn factorial(n: u64) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, i| acc * BigInt::from(i))
}

/// Rising factorial `(a)_n = a (a + 1) ... (a + n - 1)`.
pub fn pochhammer(a: &Rat, n: u64) -> Rat {
    let mut acc = Rat::one();
    let mut term = a.clone();
    for _ in 0..n {
        acc *= &term;
        term += Rat::one();
    }
    acc
}

/// `2F1(-n, a; c; 1)` by direct summation of its `n + 1` terms.
///
/// Fails with [`Error::Pole`] when some `(c)_j`, `j <= n`, vanishes, which
/// happens exactly when `c` is an integer in `[1 - n, 0]`.
pub fn hyp2f1_terminating(n: u64, a: &Rat, c: &Rat) -> Result<Rat> {
    if c.is_integer() && !c.is_positive() && c.to_integer() > BigInt::from(-(n as i64)) {
        return Err(Error::Pole(format!("(c)_k with c = {}, n = {n}", fmt_rat(c))));
    }
    let minus_n = -Rat::from_integer(BigInt::from(n));
    let mut sum = Rat::zero();
    // term_j = (-n)_j (a)_j / ((c)_j j!)
    let mut term = Rat::one();
    for j in 0..=n {
        sum += &term;
        if j == n {
            break;
        }
        let jr = Rat::from_integer(BigInt::from(j));
        term = term * (&minus_n + &jr) * (a + &jr) / ((c + &jr) * (&jr + Rat::one()));
    }
    Ok(sum)
}

/// `true` when `r` is an integer.
pub fn is_integral(r: &Rat) -> bool {
    r.denom().is_one()
}

/// `gcd(|numerator|, denominator) == 1` and `denominator > 0`.
pub fn is_canonical(r: &Rat) -> bool {
    r.denom().is_positive() && r.numer().abs().gcd(r.denom()).is_one()
}
