//! Exact verification of positivity identities for binomial trigonometric sums.
//!
//! Sums such as `sum_l C(M+N, M-kl)^2 cos(lx)` are expanded exactly in powers
//! of `z = 1 + cos x`, and the resulting coefficients are compared against
//! brute-force counts of pairs of binary words (pairs of lattice paths).
//!
//! - [`exact`] and [`poly`]: big rationals, binomials, Pochhammer symbols,
//!   terminating `2F1` sums, dense polynomials.
//! - [`trig`]: cosine series and their change of basis through Chebyshev and
//!   Jacobi polynomials; Hadamard products.
//! - [`sums`]: the binomial series, Chebyshev weights and weight families.
//! - [`biwords`]: word enumeration, the prefix-swap involution,
//!   k-factorizations and the counting oracles.
//! - [`verify`]: checkers that tie the two sides together and produce
//!   [`verify::Report`]s.
//! - [`cli`]: the `trigpos` command line.

pub mod biwords;
pub mod cli;
pub mod error;
pub mod exact;
pub mod poly;
pub mod sums;
pub mod trig;
pub mod verify;

pub use error::{Error, Result};
pub use exact::Rat;
pub use poly::Poly;
pub use sums::{MultiParams, Params, WeightFamily};
pub use trig::CosSeries;
