//! Builds the largest systematic Florentine rectangle for a few orders and
//! shows which rule produced it.
//!
//! `cargo run --example construct_florentine -- 24 35 48`

use florentine_qcss::florentine::{best_florentine, is_florentine, plan_florentine};

fn main() -> florentine_qcss::Result<()> {
    let orders: Vec<usize> = std::env::args()
        .skip(1)
        .filter_map(|a| a.parse().ok())
        .collect();
    let orders = if orders.is_empty() {
        vec![6, 9, 15, 24]
    } else {
        orders
    };

    for n in orders {
        let plan = plan_florentine(n)?;
        let (rect, family) = best_florentine(n)?;
        println!(
            "n = {n}: {} rows via {:?} ({}), strip needed: {}",
            family.f_value(),
            plan.method,
            rect.construction(),
            plan.needs_strip()
        );
        assert!(is_florentine(&rect));
        if n <= 12 {
            print!("{}", rect.to_text());
        }
    }
    Ok(())
}
