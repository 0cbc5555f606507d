//! The k = 1 expansions have factorial closed forms; print both sides.

use trigpos::sums::{mixed_series, squared_series};
use trigpos::trig::expand_cos_series;
use trigpos::verify::closed_form_coefficients;
use trigpos::Params;

fn main() {
    for m in 0..=6 {
        let [even, odd, mixed] = closed_form_coefficients(m);
        let rows = [
            ("N = M, squared", squared_series(&Params { m, n: m, k: 1 }), even),
            ("N = M+1, squared", squared_series(&Params { m, n: m + 1, k: 1 }), odd),
            ("N = M+1, mixed", mixed_series(&Params { m, n: m + 1, k: 1 }), mixed),
        ];
        for (label, s, formula) in rows {
            let e = expand_cos_series(&s);
            let mark = if e == formula { "ok" } else { "MISMATCH" };
            println!("M={m} {label:<17} {e}  [{mark}]");
        }
    }
}
