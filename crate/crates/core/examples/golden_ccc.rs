//! Prints the order-10 permutations and the two codes built from rows 2 and 3
//! as base-10 digit strings.

use florentine_qcss::florentine::best_florentine;
use florentine_qcss::seqgen::build_ccc;

fn main() -> florentine_qcss::Result<()> {
    let (rect, family) = best_florentine(10)?;
    for (k, row) in rect.rows().iter().enumerate() {
        println!("pi_{k} = {row:?}");
    }
    for k in [2, 3] {
        let code = build_ccc(&family, k)?;
        println!("\ncode {k}");
        // one column per set, as in the usual printed layout
        let columns: Vec<Vec<String>> = code
            .sets
            .iter()
            .map(|s| s.render().lines().map(str::to_owned).collect())
            .collect();
        for s in 0..10 {
            let line: Vec<&str> = columns.iter().map(|c| c[s].as_str()).collect();
            println!("{}", line.join(" "));
        }
    }
    Ok(())
}
