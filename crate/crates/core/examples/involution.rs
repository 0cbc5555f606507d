//! Walk through the prefix-swap involution and greedy k-factorization on a
//! few bi-words, then run the full property check on one family.

use trigpos::biwords::{
    first_crossing, involution, involution_check, k_factorize, prefix_diffs, BiWord, CountBudget, PairFamily,
};
use trigpos::Params;

fn main() -> trigpos::Result<()> {
    let k = 1;
    for (u, v) in [("1100", "0011"), ("1010", "0101"), ("110", "011")] {
        let b = BiWord::parse(u, v)?;
        println!("{b}  prefix differences {:?}", prefix_diffs(&b));
        match first_crossing(&b, k) {
            Some(s) => println!("  first reaches ±{k} after {s} letters; image {}", involution(&b, k)?),
            None => println!("  never reaches ±{k}; fixed point"),
        }
        let f = k_factorize(&b, k);
        println!("  segments {:?}, class {}, good {}", f.segments(), f.class_p, f.good);
    }

    let p = Params::new(3, 2, 1)?;
    let check = involution_check(&p, PairFamily::Crossed, &CountBudget::default())?;
    println!(
        "\n{p}: {} pairs, {} moved, {} fixed, signed total {}, ok = {}",
        check.pairs,
        check.moved,
        check.fixed,
        check.signed_total,
        check.ok()
    );
    Ok(())
}
