//! Scan products of binomial cosine sums for negative coefficients.

use trigpos::verify::{conjecture_grid, scan_conjecture, ScanModes, Status};

fn main() -> trigpos::Result<()> {
    let grid = conjecture_grid(&[1, 2, 3], 3, &[1, 2]);
    let reports = scan_conjecture(&grid, ScanModes::default())?;
    let violations: Vec<_> = reports.iter().filter(|r| r.status == Status::Fail).collect();
    println!("{} products scanned, {} with a negative coefficient", reports.len(), violations.len());
    for r in violations {
        println!("  {} {:?}", r.params, r.witnesses);
    }
    if let Some(last) = reports.last() {
        println!("last point {}: cos {:?}", last.params, last.values("cos").unwrap_or_default());
    }
    Ok(())
}
