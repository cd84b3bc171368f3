//! Scans the merged collection for its worst correlation and compares it
//! with the Welch and Liu lower bounds.

use florentine_qcss::bounds::{asymptotic_rho, optimality_factor};
use florentine_qcss::correlation::{delta_max, Backend};
use florentine_qcss::florentine::best_florentine;
use florentine_qcss::seqgen::build_qcss;

fn main() -> florentine_qcss::Result<()> {
    println!("  n     K   delta   welch     liu     rho  class");
    for n in [2, 3, 4, 6, 10, 12, 14] {
        let (_, family) = best_florentine(n)?;
        let q = build_qcss(&family);
        let (k, m, len) = q.params();
        let scan = delta_max(&q, Backend::Exact);
        let b = optimality_factor(k, m, len, scan.delta_max)?;
        println!(
            "{n:>3} {k:>5} {:>7.3} {:>7.4} {:>7} {:>7.4}  {:?}",
            b.delta_max,
            b.welch,
            b.liu.map_or("-".into(), |l| format!("{l:.4}")),
            b.rho,
            b.classification
        );
    }
    println!("\nlimit as the number of codes grows:");
    for f in [4u64, 100, 10_000, 1_000_000] {
        println!("  F = {f:>9}: rho = {:.6}", asymptotic_rho(f)?);
    }
    Ok(())
}
