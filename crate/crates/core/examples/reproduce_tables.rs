//! Recomputes the published parameter tables and reports any mismatches.

use florentine_qcss::tables::{
    even_asymptotic_table, even_near_optimal_table, factor_three_table, row_count_table,
    TableConfig,
};

fn main() -> florentine_qcss::Result<()> {
    let cfg = TableConfig::default();
    print!("{}", row_count_table()?.to_text());
    for table in [
        even_asymptotic_table(&cfg)?,
        even_near_optimal_table(&cfg)?,
        factor_three_table(&cfg)?,
    ] {
        println!();
        print!("{}", table.to_text());
        println!("# all rows match: {}", table.passed());
    }
    Ok(())
}
