//! Exhaustive exact audit of every code of one order: in-code correlations
//! vanish except for the N^2 peak, cross-code magnitudes are 0 or N.
//!
//! `cargo run --release --example verify_ccc_exact -- 12`

use florentine_qcss::florentine::best_florentine;
use florentine_qcss::verify::verify_family;

fn main() -> florentine_qcss::Result<()> {
    let n = std::env::args()
        .nth(1)
        .and_then(|a| a.parse().ok())
        .unwrap_or(10);
    let (_, family) = best_florentine(n)?;
    let v = verify_family(&family);
    println!("n = {n}, {} codes", v.f_value);
    println!(
        "in-code:    {} checked, {} peaks, {} failures",
        v.within_checked, v.within_peaks, v.within_failure_count
    );
    println!(
        "cross-code: {} checked, {} zero, {} at N, {} failures",
        v.inter_checked, v.inter_zero, v.inter_at_n, v.inter_failure_count
    );
    println!("delta_max = {}, passed = {}", v.delta_max, v.passed());
    Ok(())
}
