//! Compare expansion coefficients with brute-force bi-word counts.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use trigpos::biwords::{count_bp, count_cp, CountBudget};
use trigpos::sums::{mixed_series, squared_series};
use trigpos::trig::expand_cos_series;
use trigpos::Params;

/// Class counts as a dense vector, empty classes included.
fn dense(counts: &BTreeMap<usize, BigInt>) -> String {
    let top = counts.keys().next_back().map_or(0, |&p| p + 1);
    (0..top).map(|p| counts.get(&p).map_or("0".into(), ToString::to_string)).collect::<Vec<_>>().join(" ")
}

fn main() -> trigpos::Result<()> {
    let budget = CountBudget::default();
    println!("{:<16} {:<28} |B_p| (counted)", "params", "b_p (expansion)");
    for (m, n, k) in [(1, 1, 1), (1, 2, 1), (2, 2, 1), (3, 3, 1), (3, 2, 2), (4, 3, 2)] {
        let p = Params::new(m, n, k)?;
        let b = expand_cos_series(&squared_series(&p));
        let counts = dense(&count_bp(&p, &budget)?);
        println!("{:<16} {:<28} {}", p.to_string(), b.coeff_strings().join(" "), counts);
    }

    println!("\n{:<16} {:<28} same-content classes", "params", "c_p (expansion)");
    for (m, n, k) in [(2, 1, 1), (3, 1, 1), (4, 0, 1), (3, 3, 2)] {
        let p = Params::new(m, n, k)?;
        let c = expand_cos_series(&mixed_series(&p));
        let counts = dense(&count_cp(&p, &budget)?);
        println!("{:<16} {:<28} {}", p.to_string(), c.coeff_strings().join(" "), counts);
    }
    Ok(())
}
