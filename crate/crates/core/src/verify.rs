//! Checkers that compare exact expansions with closed forms and counting
//! oracles, each producing a [`Report`].
//!
//! A checker never panics on a mathematical mismatch: disagreements become
//! witnesses and the report is marked [`Status::Fail`]. Oracle comparisons
//! that exceed the [`CountBudget`] mark the report [`Status::Skipped`], which
//! never counts as a pass.

use std::collections::BTreeMap;
use std::time::Instant;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::biwords::{
    count_bp, count_cp, count_crossed_within, count_same_content_within, involution_check, lattice_path_count_avoiding,
    surjection_preimages, CountBudget, InvolutionCheck, PairFamily,
};
use crate::error::{Error, Result};
use crate::exact::{factorial, fmt_rat, rat, ratio, Rat};
use crate::poly::Poly;
use crate::sums::{
    alt_sum, family_weight_sum_a, generic_transform, jacobi_closed_form, mixed_series, product_series,
    shifted_jacobi_closed_form, single_series, squared_series, weight_sum_a, weight_sum_b, weight_sum_c, weight_w,
    MultiParams, Params, WeightFamily,
};
use crate::trig::{derivative_transform, expand_cos_series, expand_sine_series, hadamard, CosSeries};

const MAX_WITNESSES: usize = 16;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

/// Outcome of one check at one parameter point.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub check_id: String,
    pub params: Value,
    pub status: Status,
    /// Named exact values, each rendered as decimal strings.
    pub computed: BTreeMap<String, Vec<String>>,
    /// Counterexample descriptions; nonempty exactly when `status` is `Fail`.
    pub witnesses: Vec<String>,
    pub runtime_ms: u64,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }

    /// The named computed vector, if present.
    pub fn values(&self, key: &str) -> Option<&[String]> {
        self.computed.get(key).map(Vec::as_slice)
    }
}

struct Builder {
    check_id: &'static str,
    params: Value,
    computed: BTreeMap<String, Vec<String>>,
    witnesses: Vec<String>,
    failures: usize,
    skipped: bool,
    started: Instant,
}

impl Builder {
    fn new(check_id: &'static str, params: Value) -> Self {
        Builder {
            check_id,
            params,
            computed: BTreeMap::new(),
            witnesses: Vec::new(),
            failures: 0,
            skipped: false,
            started: Instant::now(),
        }
    }

    fn put(&mut self, key: impl Into<String>, values: Vec<String>) {
        self.computed.insert(key.into(), values);
    }

    fn put_one(&mut self, key: impl Into<String>, value: impl ToString) {
        self.put(key, vec![value.to_string()]);
    }

    fn fail(&mut self, witness: String) {
        self.failures += 1;
        if self.witnesses.len() < MAX_WITNESSES {
            self.witnesses.push(witness);
        }
    }

    fn skip(&mut self, reason: String) {
        self.skipped = true;
        self.computed.entry("skipped".into()).or_default().push(reason);
    }

    /// Records the oracle error as a skip when it is a budget refusal.
    fn oracle<T>(&mut self, r: Result<T>) -> Result<Option<T>> {
        match r {
            Ok(v) => Ok(Some(v)),
            Err(Error::BudgetExceeded(msg)) => {
                self.skip(msg);
                Ok(None)
            }
            Err(e) => Err(e),
        }
    }

    fn finish(mut self) -> Report {
        let status = if self.failures > 0 {
            Status::Fail
        } else if self.skipped {
            Status::Skipped
        } else {
            Status::Pass
        };
        if self.failures > self.witnesses.len() {
            self.put_one("failures", self.failures);
        }
        Report {
            check_id: self.check_id.to_string(),
            params: self.params,
            status,
            computed: self.computed,
            witnesses: self.witnesses,
            runtime_ms: self.started.elapsed().as_millis() as u64,
        }
    }
}

fn params_value(p: &Params) -> Value {
    serde_json::to_value(p).expect("params serialize")
}

fn multi_value(mp: &MultiParams) -> Value {
    serde_json::to_value(mp).expect("params serialize")
}

fn series_strings(s: &CosSeries) -> Vec<String> {
    s.iter().map(|(l, a)| format!("{l}:{a}")).collect()
}

fn count_vector(counts: &BTreeMap<usize, BigInt>, len: usize) -> Vec<BigInt> {
    let len = len.max(counts.keys().next_back().map_or(0, |&p| p + 1));
    (0..len).map(|p| counts.get(&p).cloned().unwrap_or_default()).collect()
}

/// Witnesses for every coefficient that is negative or not an integer.
fn require_nonnegative_integral(b: &mut Builder, label: &str, poly: &Poly, from: usize) {
    for (p, c) in poly.coeffs().iter().enumerate().skip(from) {
        if c.is_negative() {
            b.fail(format!("{label}: coefficient of z^{p} is negative ({})", fmt_rat(c)));
        } else if !c.denom().is_one() {
            b.fail(format!("{label}: coefficient of z^{p} is not an integer ({})", fmt_rat(c)));
        }
    }
}

fn require_nonnegative(b: &mut Builder, label: &str, poly: &Poly, from: usize) {
    for (p, c) in poly.coeffs().iter().enumerate().skip(from) {
        if c.is_negative() {
            b.fail(format!("{label}: coefficient of z^{p} is negative ({})", fmt_rat(c)));
        }
    }
}

fn compare_with_counts(b: &mut Builder, label: &str, poly: &Poly, counts: &BTreeMap<usize, BigInt>) {
    let counts = count_vector(counts, poly.coeffs().len());
    for (p, c) in counts.iter().enumerate() {
        let coeff = poly.coeff(p);
        if coeff != Rat::from_integer(c.clone()) {
            b.fail(format!("{label}: z^{p} coefficient {} but {c} bi-words counted", fmt_rat(&coeff)));
        }
    }
    b.put(format!("oracle_{label}"), counts.iter().map(ToString::to_string).collect());
}

/// `sum_l C(M+N, M-kl) cos(lx)` is a polynomial in `1 + cos x` with
/// nonnegative integer coefficients. Requires `|M - N| <= k`.
pub fn verify_single(p: &Params) -> Result<Report> {
    p.require_gap()?;
    let mut b = Builder::new("single_expansion", params_value(p));
    let poly = expand_cos_series(&single_series(p));
    require_nonnegative_integral(&mut b, "a", &poly, 0);
    b.put("a", poly.coeff_strings());
    Ok(b.finish())
}

/// The squared series expands with nonnegative integer coefficients `b_p`
/// equal to the class counts `|B_p|`. Requires `|M - N| <= k`.
pub fn verify_squared(p: &Params, budget: &CountBudget) -> Result<Report> {
    p.require_gap()?;
    let mut b = Builder::new("squared_expansion", params_value(p));
    let poly = expand_cos_series(&squared_series(p));
    require_nonnegative_integral(&mut b, "b", &poly, 0);
    b.put("b", poly.coeff_strings());
    if let Some(counts) = b.oracle(count_bp(p, budget))? {
        compare_with_counts(&mut b, "b", &poly, &counts);
    }
    Ok(b.finish())
}

/// The mixed series expands with nonnegative integer coefficients `c_p`
/// equal to the same-content class counts. No gap condition.
pub fn verify_mixed(p: &Params, budget: &CountBudget) -> Result<Report> {
    let mut b = Builder::new("mixed_expansion", params_value(p));
    let poly = expand_cos_series(&mixed_series(p));
    require_nonnegative_integral(&mut b, "c", &poly, 0);
    b.put("c", poly.coeff_strings());
    if let Some(counts) = b.oracle(count_cp(p, budget))? {
        compare_with_counts(&mut b, "c", &poly, &counts);
    }
    Ok(b.finish())
}

/// Factorial formulas for the `k = 1` expansions:
///
/// - `even`: `N = M`, `b_p = (2M)! 2^p / ((M-p)!^2 (2p)!)`;
/// - `odd`: `N = M + 1`, `b_p = (2M+1)! 2^(p-1) / ((M-p+1)!^2 (2p-1)!)`, `p >= 1`;
/// - `mixed_odd`: `N = M + 1`, `c_p = (2M+1)! 2^p / ((M-p)! (M-p+1)! (2p)!)`.
pub fn closed_form_coefficients(m: u32) -> [Poly; 3] {
    let m = m as u64;
    let int = |n: BigInt| Rat::from_integer(n);
    let pow2 = |e: u64| BigInt::one() << e;
    let even = (0..=m)
        .map(|p| int(factorial(2 * m) * pow2(p)) / int(factorial(m - p) * factorial(m - p) * factorial(2 * p)))
        .collect();
    let odd = (0..=m + 1)
        .map(|p| match p {
            0 => Rat::zero(),
            _ => {
                int(factorial(2 * m + 1) * pow2(p - 1))
                    / int(factorial(m + 1 - p) * factorial(m + 1 - p) * factorial(2 * p - 1))
            }
        })
        .collect();
    let mixed = (0..=m)
        .map(|p| int(factorial(2 * m + 1) * pow2(p)) / int(factorial(m - p) * factorial(m - p + 1) * factorial(2 * p)))
        .collect();
    [Poly::from_coeffs(even), Poly::from_coeffs(odd), Poly::from_coeffs(mixed)]
}

/// Checks the three `k = 1` factorial closed forms for every `M <= m_max`.
pub fn verify_closed_forms(m_max: u32) -> Report {
    let mut b = Builder::new("closed_forms", json!({ "m_max": m_max }));
    for m in 0..=m_max {
        let [even, odd, mixed] = closed_form_coefficients(m);
        let cases = [
            ("even", expand_cos_series(&squared_series(&Params { m, n: m, k: 1 })), even),
            ("odd", expand_cos_series(&squared_series(&Params { m, n: m + 1, k: 1 })), odd),
            ("mixed_odd", expand_cos_series(&mixed_series(&Params { m, n: m + 1, k: 1 })), mixed),
        ];
        for (name, expansion, formula) in cases {
            if expansion != formula {
                b.fail(format!("M={m} {name}: expansion {expansion} but formula gives {formula}"));
            }
            b.put(format!("M{m:02}.{name}"), expansion.coeff_strings());
        }
    }
    b.finish()
}

/// Vanishing and diagonal identities of the Chebyshev weight sums for
/// `1 <= p <= l <= l_max`, `p <= p_max`:
/// `A(l, p) = 0` for `l > p`, `A(p, p) = w(p, p) = 2^(p-1)`,
/// `B(l, p) + C(l-1, p) = 0` for `l - 1 >= p`.
pub fn verify_weight_identities(l_max: u64, p_max: u64) -> Result<Report> {
    let mut b = Builder::new("weight_identities", json!({ "l_max": l_max, "p_max": p_max }));
    let mut checked = 0u64;
    let mut diagonal = Vec::new();
    for l in 1..=l_max {
        for p in 1..=l.min(p_max) {
            let a = weight_sum_a(l, p)?;
            checked += 1;
            if l > p {
                if !a.is_zero() {
                    b.fail(format!("A({l},{p}) = {} is not 0", fmt_rat(&a)));
                }
                let bc = weight_sum_b(l, p)? + weight_sum_c(l - 1, p)?;
                checked += 1;
                if !bc.is_zero() {
                    b.fail(format!("B({l},{p}) + C({},{p}) = {} is not 0", l - 1, fmt_rat(&bc)));
                }
            } else {
                let expected = Rat::from_integer(BigInt::one() << (p - 1));
                let w = weight_w(p as i64, p);
                checked += 2;
                if a != expected || w != expected {
                    b.fail(format!(
                        "A({p},{p}) = {}, w({p},{p}) = {}, expected {}",
                        fmt_rat(&a),
                        fmt_rat(&w),
                        fmt_rat(&expected)
                    ));
                }
                diagonal.push(fmt_rat(&a));
            }
        }
    }
    b.put("diagonal", diagonal);
    b.put_one("identities_checked", checked);
    Ok(b.finish())
}

/// `(alpha, beta)` points used by default: twelve inside `-1 <= alpha + beta <= 1`,
/// four with `1 < alpha + beta <= 2` and one beyond both ranges.
pub fn default_jacobi_grid() -> Vec<(Rat, Rat)> {
    [
        ((0, 1), (0, 1)),
        ((1, 2), (1, 2)),
        ((-1, 2), (-1, 2)),
        ((-1, 2), (1, 2)),
        ((1, 2), (-1, 2)),
        ((1, 1), (0, 1)),
        ((0, 1), (1, 1)),
        ((-1, 3), (2, 3)),
        ((-3, 2), (1, 2)),
        ((-1, 1), (0, 1)),
        ((-3, 4), (-1, 4)),
        ((1, 3), (1, 3)),
        ((2, 1), (-1, 2)),
        ((1, 1), (1, 1)),
        ((3, 2), (1, 2)),
        ((2, 1), (0, 1)),
        ((5, 2), (1, 2)),
    ]
    .into_iter()
    .map(|((an, ad), (bn, bd))| (ratio(an, ad), ratio(bn, bd)))
    .collect()
}

fn in_closed_interval(x: &Rat, lo: i64, hi: i64) -> bool {
    *x >= rat(lo) && *x <= rat(hi)
}

/// One `(alpha, beta)` point of the Jacobi family checks:
///
/// 1. both closed forms equal their brute weight sums for `p <= l <= l_max`;
/// 2. with `-1 <= alpha + beta <= 1`, `beta > -1`: the Jacobi closed form
///    and the `p >= 1` coefficients of every transformed squared (gap
///    permitting) and mixed series are nonnegative;
/// 3. with `-1 <= alpha + beta <= 2`, `beta > -1`: the same for the shifted
///    family, constant terms included.
pub fn verify_jacobi_point(alpha: &Rat, beta: &Rat, l_max: u64, series: &[Params]) -> Result<Report> {
    let grid: Vec<[u32; 3]> = series.iter().map(|p| [p.m, p.n, p.k]).collect();
    let mut b = Builder::new(
        "jacobi",
        json!({ "alpha": fmt_rat(alpha), "beta": fmt_rat(beta), "l_max": l_max, "series": grid }),
    );
    let s = alpha + beta;
    let beta_ok = *beta > rat(-1);
    let jacobi_hyp = beta_ok && in_closed_interval(&s, -1, 1);
    let shifted_hyp = beta_ok && in_closed_interval(&s, -1, 2);
    b.put_one("jacobi_in_hypothesis", jacobi_hyp);
    b.put_one("shifted_in_hypothesis", shifted_hyp);

    let jacobi = WeightFamily::Jacobi { alpha: alpha.clone(), beta: beta.clone() };
    let shifted = WeightFamily::ShiftedJacobi { alpha: alpha.clone(), beta: beta.clone() };
    type ClosedForm = fn(u64, u64, &Rat, &Rat) -> Result<Rat>;
    let forms: [(&str, &WeightFamily, ClosedForm, bool); 2] = [
        ("jacobi", &jacobi, jacobi_closed_form, jacobi_hyp),
        ("shifted", &shifted, shifted_jacobi_closed_form, shifted_hyp),
    ];

    let mut poles = 0u64;
    let mut compared = 0u64;
    for (name, family, closed, hyp) in forms {
        for l in 0..=l_max {
            for p in 0..=l {
                let pair = closed(l, p, alpha, beta).and_then(|c| Ok((c, family_weight_sum_a(family, l, p)?)));
                let (c, sum) = match pair {
                    Ok(v) => v,
                    Err(Error::Pole(_)) => {
                        poles += 1;
                        continue;
                    }
                    Err(e) => return Err(e),
                };
                compared += 1;
                if c != sum {
                    b.fail(format!("{name} l={l} p={p}: closed form {} but weight sum {}", fmt_rat(&c), fmt_rat(&sum)));
                }
                // the Jacobi statement only covers p >= 1
                let positivity_applies = hyp && (p >= 1 || name == "shifted");
                if positivity_applies && c.is_negative() {
                    b.fail(format!("{name} l={l} p={p}: closed form {} < 0", fmt_rat(&c)));
                }
            }
        }
    }
    b.put_one("closed_forms_compared", compared);
    b.put_one("poles", poles);

    let mut transforms = 0u64;
    for p in series {
        let mut kinds = vec![("mixed", mixed_series(p))];
        if p.gap_ok() {
            kinds.push(("squared", squared_series(p)));
        }
        for (kind, s) in kinds {
            for (name, family, _, hyp) in &forms {
                if !hyp {
                    continue;
                }
                let poly = generic_transform(&s, family)?;
                transforms += 1;
                let from = if *name == "jacobi" { 1 } else { 0 };
                require_nonnegative(&mut b, &format!("{name} {kind} {p}"), &poly, from);
            }
        }
    }
    b.put_one("transforms_checked", transforms);
    Ok(b.finish())
}

/// [`verify_jacobi_point`] over a grid, in grid order.
pub fn verify_jacobi(grid: &[(Rat, Rat)], l_max: u64, series: &[Params]) -> Result<Vec<Report>> {
    grid.par_iter().map(|(a, b)| verify_jacobi_point(a, b, l_max, series)).collect()
}

/// Nonnegativity of the `sin(|l|x)/sin x` and `l sin(lx)/sin x` expansions of
/// the mixed series, and of the squared series when `|M - N| <= k`.
pub fn verify_sine(p: &Params) -> Report {
    let mut b = Builder::new("sine_expansion", params_value(p));
    let mut kinds = vec![("mixed", mixed_series(p))];
    if p.gap_ok() {
        kinds.push(("squared", squared_series(p)));
    }
    for (kind, s) in kinds {
        let sine = expand_sine_series(&s);
        let deriv = derivative_transform(&s);
        require_nonnegative(&mut b, &format!("sine_{kind}"), &sine, 0);
        require_nonnegative(&mut b, &format!("derivative_{kind}"), &deriv, 0);
        b.put(format!("sine_{kind}"), sine.coeff_strings());
        b.put(format!("derivative_{kind}"), deriv.coeff_strings());
    }
    b.finish()
}

/// The product series equals the iterated Hadamard product of its factors.
pub fn verify_convolution(mp: &MultiParams) -> Report {
    let mut b = Builder::new("convolution", multi_value(mp));
    let direct = product_series(mp);
    let iterated =
        (1..mp.pairs.len()).fold(single_series(&mp.factor(0)), |acc, i| hadamard(&acc, &single_series(&mp.factor(i))));
    if direct != iterated {
        b.fail(format!("product {direct} but iterated Hadamard product {iterated}"));
    }
    b.put("product", series_strings(&direct));
    b.finish()
}

/// Which expansions a conjecture scan inspects.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct ScanModes {
    pub cos: bool,
    pub sine: bool,
}

impl Default for ScanModes {
    fn default() -> Self {
        ScanModes { cos: true, sine: true }
    }
}

/// Expands one product series in both bases and records every coefficient
/// that breaks nonnegativity (or integrality, in the cosine basis).
pub fn scan_point(mp: &MultiParams, modes: ScanModes) -> Result<Report> {
    if !mp.gap_ok() {
        return Err(Error::Precondition(format!("|M_i - N_i| <= k fails for {mp}")));
    }
    let mut b = Builder::new("conjecture", multi_value(mp));
    let s = product_series(mp);
    if modes.cos {
        let poly = expand_cos_series(&s);
        require_nonnegative_integral(&mut b, "cos", &poly, 0);
        b.put("cos", poly.coeff_strings());
    }
    if modes.sine {
        let poly = expand_sine_series(&s);
        require_nonnegative(&mut b, "sine", &poly, 0);
        b.put("sine", poly.coeff_strings());
    }
    Ok(b.finish())
}

/// Every product with `r` factors in `r_values`, pairs `(M_i, N_i)` in
/// `[0, max_mn]^2` listed in nondecreasing order, and `k` in `k_values`,
/// keeping only points with `|M_i - N_i| <= k`.
///
/// Points are ordered by `r`, then by the pair list, then by `k`.
pub fn conjecture_grid(r_values: &[u32], max_mn: u32, k_values: &[u32]) -> Vec<MultiParams> {
    let all_pairs: Vec<(u32, u32)> = (0..=max_mn).flat_map(|m| (0..=max_mn).map(move |n| (m, n))).collect();
    let mut out = Vec::new();
    for &r in r_values {
        if r == 0 {
            continue;
        }
        let mut idx = vec![0usize; r as usize];
        loop {
            let pairs: Vec<(u32, u32)> = idx.iter().map(|&i| all_pairs[i]).collect();
            for &k in k_values {
                if k == 0 {
                    continue;
                }
                let mp = MultiParams { pairs: pairs.clone(), k };
                if mp.gap_ok() {
                    out.push(mp);
                }
            }
            // next nondecreasing index tuple
            let Some(pos) = idx.iter().rposition(|&i| i + 1 < all_pairs.len()) else {
                break;
            };
            let next = idx[pos] + 1;
            for slot in &mut idx[pos..] {
                *slot = next;
            }
        }
    }
    out
}

/// [`scan_point`] over a grid, in grid order.
pub fn scan_conjecture(grid: &[MultiParams], modes: ScanModes) -> Result<Vec<Report>> {
    grid.par_iter().map(|mp| scan_point(mp, modes)).collect()
}

/// `fixed_only_at_zero` asks, in addition, that every fixed point lies in
/// `W_0`, which is what turns the alternating sum into a fixed-point count.
fn record_involution(b: &mut Builder, label: &str, check: &InvolutionCheck, fixed_only_at_zero: bool) {
    b.put(
        format!("involution_{label}"),
        vec![check.pairs.to_string(), check.moved.to_string(), check.fixed.to_string(), check.signed_total.to_string()],
    );
    for w in &check.witnesses {
        b.fail(format!("involution ({label}): {w}"));
    }
    if !fixed_only_at_zero {
        return;
    }
    if check.fixed_off_level_zero > 0 {
        b.fail(format!("involution ({label}): {} fixed points outside W_0", check.fixed_off_level_zero));
    }
    if BigInt::from(check.fixed) != check.signed_total {
        b.fail(format!(
            "involution ({label}): signed total {} differs from {} fixed points",
            check.signed_total, check.fixed
        ));
    }
}

fn expect_equal(b: &mut Builder, label: &str, series_side: BigInt, count: BigInt) {
    if series_side != count {
        b.fail(format!("{label}: alternating sum {series_side} but {count} counted"));
    }
    b.put(label.to_string(), vec![series_side.to_string(), count.to_string()]);
}

/// Alternating sums at `x = pi` against the path and bi-word counts, plus the
/// involution property suite on both bi-word families.
pub fn verify_involution_and_paths(p: &Params, budget: &CountBudget) -> Result<Report> {
    let mut b = Builder::new("involution_and_paths", params_value(p));
    if let Some(check) = b.oracle(involution_check(p, PairFamily::Crossed, budget))? {
        // outside the gap condition fixed points also occur at other levels
        record_involution(&mut b, "crossed", &check, p.gap_ok());
    }
    if let Some(check) = b.oracle(involution_check(p, PairFamily::SameContent, budget))? {
        record_involution(&mut b, "same_content", &check, true);
    }
    if let Some(count) = b.oracle(count_same_content_within(p, budget))? {
        expect_equal(&mut b, "mixed_alt_sum", alt_sum(&mixed_series(p)), count);
    }
    if p.gap_ok() {
        if let Some(count) = b.oracle(count_crossed_within(p, budget))? {
            expect_equal(&mut b, "squared_alt_sum", alt_sum(&squared_series(p)), count);
        }
        if let Some(count) = b.oracle(lattice_path_count_avoiding(p, budget))? {
            expect_equal(&mut b, "single_alt_sum", alt_sum(&single_series(p)), count);
        }
    }
    Ok(b.finish())
}

/// The segment-exchange map from `B_p` onto good guys has exactly
/// `2^(p-1)` preimages per image, for every `p >= 1` with `B_p` nonempty.
pub fn verify_surjection(p: &Params, budget: &CountBudget) -> Result<Report> {
    p.require_gap()?;
    let mut b = Builder::new("surjection", params_value(p));
    let Some(classes) = b.oracle(count_bp(p, budget))? else {
        return Ok(b.finish());
    };
    for (&class, _) in classes.range(1..) {
        let Some(check) = b.oracle(surjection_preimages(p, class, budget))? else {
            continue;
        };
        b.put(
            format!("p{class:02}"),
            vec![check.domain.to_string(), check.targets.to_string(), check.expected_preimages.to_string()],
        );
        if !check.ok() {
            for w in &check.witnesses {
                b.fail(format!("p={class}: {w}"));
            }
            if check.witnesses.is_empty() {
                b.fail(format!("p={class}: {} images for {} targets", check.domain, check.targets));
            }
        }
    }
    Ok(b.finish())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn params(m: u32, n: u32, k: u32) -> Params {
        Params::new(m, n, k).unwrap()
    }

    fn strs(v: &[&str]) -> Vec<String> {
        v.iter().map(|s| s.to_string()).collect()
    }

    #[test]
    fn single_examples() {
        let r = verify_single(&params(1, 1, 1)).unwrap();
        assert!(r.passed());
        assert_eq!(r.values("a").unwrap(), strs(&["0", "2"]));
        assert_eq!(verify_single(&params(0, 0, 1)).unwrap().values("a").unwrap(), strs(&["1"]));
        assert!(verify_single(&params(2, 1, 1)).unwrap().passed());
        assert!(matches!(verify_single(&params(5, 1, 1)), Err(Error::Precondition(_))));
    }

    #[test]
    fn squared_examples() {
        let budget = CountBudget::default();
        let r = verify_squared(&params(1, 1, 1), &budget).unwrap();
        assert!(r.passed());
        assert_eq!(r.values("b").unwrap(), strs(&["2", "2"]));
        let r = verify_squared(&params(1, 2, 1), &budget).unwrap();
        assert_eq!(r.values("b").unwrap(), strs(&["0", "6", "2"]));
        assert_eq!(r.values("oracle_b").unwrap(), strs(&["0", "6", "2"]));
        let r = verify_squared(&params(3, 3, 1), &budget).unwrap();
        assert!(r.passed());
        assert_eq!(r.values("b").unwrap(), strs(&["20", "180", "120", "8"]));
    }

    #[test]
    fn mixed_examples() {
        let budget = CountBudget::default();
        let r = verify_mixed(&params(2, 1, 1), &budget).unwrap();
        assert!(r.passed());
        assert_eq!(r.values("c").unwrap(), strs(&["3", "6"]));
        assert_eq!(verify_mixed(&params(1, 1, 1), &budget).unwrap().values("c").unwrap(), strs(&["2", "2"]));
        assert!(verify_mixed(&params(3, 1, 1), &budget).unwrap().passed());
    }

    #[test]
    fn budget_skip_never_passes() {
        let tiny = CountBudget::new(30, 3).unwrap();
        let r = verify_squared(&params(2, 2, 1), &tiny).unwrap();
        assert_eq!(r.status, Status::Skipped);
        assert!(r.values("skipped").is_some());
    }

    #[test]
    fn closed_form_values() {
        let [even, odd, mixed] = closed_form_coefficients(1);
        assert_eq!(even, Poly::from_ints(&[2, 2]));
        assert_eq!(odd, Poly::from_ints(&[0, 6, 2]));
        assert_eq!(mixed, Poly::from_ints(&[3, 6]));
        assert!(verify_closed_forms(4).passed());
    }

    #[test]
    fn weight_identities_small() {
        let r = verify_weight_identities(5, 5).unwrap();
        assert!(r.passed(), "{:?}", r.witnesses);
        assert_eq!(r.values("diagonal").unwrap(), strs(&["1", "2", "4", "8", "16"]));
    }

    #[test]
    fn jacobi_point_examples() {
        let series = [params(1, 1, 1), params(2, 1, 1)];
        let r = verify_jacobi_point(&rat(0), &rat(0), 4, &series).unwrap();
        assert!(r.passed(), "{:?}", r.witnesses);
        let outside = verify_jacobi_point(&rat(1), &rat(1), 4, &series).unwrap();
        assert_eq!(outside.values("jacobi_in_hypothesis").unwrap(), strs(&["false"]));
        assert!(outside.passed());
        let pole = verify_jacobi_point(&rat(0), &rat(-2), 3, &series).unwrap();
        assert_ne!(pole.values("poles").unwrap(), strs(&["0"]));
    }

    #[test]
    fn sine_examples() {
        let r = verify_sine(&params(1, 1, 1));
        assert!(r.passed());
        assert_eq!(r.values("sine_squared").unwrap(), strs(&["2"]));
        assert_eq!(r.values("derivative_squared").unwrap(), strs(&["2"]));
        let r = verify_sine(&params(2, 1, 1));
        assert_eq!(r.values("derivative_mixed").unwrap(), strs(&["6"]));
        let r = verify_sine(&params(1, 2, 1));
        assert_eq!(r.values("derivative_squared").unwrap(), strs(&["6", "4"]));
        let r = verify_sine(&params(5, 1, 1));
        assert!(r.values("sine_squared").is_none());
    }

    #[test]
    fn convolution_examples() {
        let r = verify_convolution(&MultiParams::new(vec![(1, 1), (2, 1)], 1).unwrap());
        assert!(r.passed());
        assert_eq!(r.values("product").unwrap(), strs(&["-1:1", "0:6", "1:3"]));
    }

    #[test]
    fn scan_examples() {
        let two = MultiParams::new(vec![(1, 1), (1, 1)], 1).unwrap();
        let r = scan_point(&two, ScanModes::default()).unwrap();
        assert_eq!(r.values("cos").unwrap(), strs(&["2", "2"]));
        let three = MultiParams::new(vec![(1, 1); 3], 1).unwrap();
        let r = scan_point(&three, ScanModes::default()).unwrap();
        assert!(r.passed());
        assert_eq!(r.values("cos").unwrap(), strs(&["6", "2"]));
        assert!(scan_point(&MultiParams::new(vec![(3, 0)], 1).unwrap(), ScanModes::default()).is_err());
    }

    #[test]
    fn grid_shape() {
        let g = conjecture_grid(&[1, 2], 1, &[1]);
        // r = 1: 4 pairs; r = 2: 10 multisets; all satisfy |M-N| <= 1
        assert_eq!(g.len(), 14);
        assert!(g.iter().all(MultiParams::gap_ok));
        let g = conjecture_grid(&[1], 2, &[1]);
        assert!(!g.iter().any(|mp| mp.pairs == vec![(0, 2)]));
    }

    #[test]
    fn involution_and_paths_examples() {
        let budget = CountBudget::default();
        for (m, n, k) in [(1, 1, 1), (1, 1, 2), (2, 1, 1), (3, 1, 1), (0, 3, 2)] {
            let r = verify_involution_and_paths(&params(m, n, k), &budget).unwrap();
            assert!(r.passed(), "{:?}", r.witnesses);
        }
        let r = verify_involution_and_paths(&params(1, 1, 2), &budget).unwrap();
        assert_eq!(r.values("squared_alt_sum").unwrap(), strs(&["4", "4"]));
        assert_eq!(r.values("single_alt_sum").unwrap(), strs(&["2", "2"]));
    }

    #[test]
    fn surjection_report() {
        let r = verify_surjection(&params(2, 2, 1), &CountBudget::default()).unwrap();
        assert!(r.passed(), "{:?}", r.witnesses);
    }
}
