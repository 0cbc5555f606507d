//! Terminating 2F1 at unit argument against the Chu-Vandermonde product.

use trigpos::exact::{fmt_rat, hyp2f1_terminating, pochhammer, ratio};

fn main() -> trigpos::Result<()> {
    let a = ratio(3, 2);
    let c = ratio(7, 3);
    for n in 0..=8 {
        let direct = hyp2f1_terminating(n, &a, &c)?;
        let product = pochhammer(&(&c - &a), n) / pochhammer(&c, n);
        println!("n={n}: {} {} {}", fmt_rat(&direct), if direct == product { "==" } else { "!=" }, fmt_rat(&product));
    }
    match hyp2f1_terminating(3, &a, &ratio(-1, 1)) {
        Ok(v) => println!("unexpected value {}", fmt_rat(&v)),
        Err(e) => println!("c = -1 with n = 3: {e}"),
    }
    Ok(())
}
