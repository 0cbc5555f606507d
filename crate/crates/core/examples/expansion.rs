//! Rewrite binomial cosine sums as polynomials in z = 1 + cos x.
//!
//! ```text
//! cargo run --example expansion -- 3 2 1
//! ```

use trigpos::sums::{mixed_series, single_series, squared_series};
use trigpos::trig::{derivative_transform, expand_cos_series, expand_sine_series};
use trigpos::Params;

fn main() -> trigpos::Result<()> {
    let args: Vec<u32> = std::env::args().skip(1).filter_map(|a| a.parse().ok()).collect();
    let (m, n, k) = match args[..] {
        [m, n, k] => (m, n, k),
        _ => (2, 1, 1),
    };
    let p = Params::new(m, n, k)?;
    println!("{p}  (gap condition {})", if p.gap_ok() { "holds" } else { "fails" });

    let cases = [("single", single_series(&p)), ("squared", squared_series(&p)), ("mixed", mixed_series(&p))];
    for (name, s) in cases {
        println!("\n{name}: {s}");
        println!("  cos basis:  {}", expand_cos_series(&s));
        println!("  sine basis: {}", expand_sine_series(&s));
        println!("  l sin(lx)/sin x: {}", derivative_transform(&s));
    }
    Ok(())
}
