//! Weight sums for Jacobi families against their closed forms, and the
//! transformed coefficients of a squared series for several (alpha, beta).

use trigpos::exact::{fmt_rat, ratio};
use trigpos::sums::{
    family_weight_sum_a, generic_transform, jacobi_closed_form, shifted_jacobi_closed_form, squared_series,
};
use trigpos::{Params, WeightFamily};

fn main() -> trigpos::Result<()> {
    let series = squared_series(&Params::new(3, 2, 1)?);
    for (a, b) in [
        (ratio(0, 1), ratio(0, 1)),
        (ratio(1, 2), ratio(-1, 2)),
        (ratio(1, 2), ratio(1, 2)),
        (ratio(1, 1), ratio(1, 1)),
    ] {
        let jacobi = WeightFamily::Jacobi { alpha: a.clone(), beta: b.clone() };
        let shifted = WeightFamily::ShiftedJacobi { alpha: a.clone(), beta: b.clone() };
        println!("alpha={} beta={}", fmt_rat(&a), fmt_rat(&b));
        for (l, p) in [(2, 1), (3, 1), (3, 2), (4, 0)] {
            println!(
                "  A({l},{p}): jacobi {} = {}   shifted {} = {}",
                fmt_rat(&family_weight_sum_a(&jacobi, l, p)?),
                fmt_rat(&jacobi_closed_form(l, p, &a, &b)?),
                fmt_rat(&family_weight_sum_a(&shifted, l, p)?),
                fmt_rat(&shifted_jacobi_closed_form(l, p, &a, &b)?),
            );
        }
        println!("  squared (3,2,1) jacobi:  {}", generic_transform(&series, &jacobi)?);
        println!("  squared (3,2,1) shifted: {}", generic_transform(&series, &shifted)?);
    }
    Ok(())
}
