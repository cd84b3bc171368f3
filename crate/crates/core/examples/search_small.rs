//! Exhaustive search for the largest Florentine rectangle of small orders.

use florentine_qcss::florentine::{best_florentine, max_florentine_search};

fn main() -> florentine_qcss::Result<()> {
    for n in 2..=7 {
        let budget = Some(5_000_000);
        let found = max_florentine_search(n, n, budget)?;
        let (_, family) = best_florentine(n)?;
        println!(
            "n = {n}: search {} rows ({:?}, {} nodes), systematic {}",
            found.rows,
            found.status,
            found.nodes,
            family.f_value()
        );
    }
    Ok(())
}
