//! Florentine rectangles over `Z_n`: constructions, brute-force checks and
//! the small-order exhaustive search.
//!
//! All public rectangles use the symbols `0..n`. A rectangle is Tuscan-`k`
//! when every row is a permutation and, for each displacement `1..=k`, no
//! ordered symbol pair `(a, b)` with `b` sitting `d` steps right of `a`
//! occurs in two different rows. Florentine means Tuscan-`(n-1)`.

mod check;
mod construct;
mod family;
mod io;
mod search;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub use check::{check_tuscan, is_florentine, is_latin, is_tuscan_k, is_vatican, Violation};
pub use construct::{
    best_florentine, florentine_even_a, florentine_even_b, florentine_mult_table, florentine_odd,
    four_row_florentine, plan_florentine, strip_and_shift, vatican_from_prime, FlorentinePlan,
    Method, Rule,
};
pub use family::{PairCollision, PermutationFamily};
pub use io::parse_rect;
pub use search::{max_florentine_search, SearchOutcome, SearchStatus, MAX_SEARCH_ORDER};

/// Which construction produced a rectangle.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Construction {
    /// Multiplication table of `Z_p` without its zero border.
    PrimeVatican,
    /// Rows `1..p` of the multiplication table of `Z_n`, `p` the smallest prime factor.
    MultiplicationTable,
    /// Four-row even-order rectangle built from the doubling map mod `n+1`.
    EvenDoubling,
    /// Four-row even-order rectangle built from the shifted doubling map mod `n`.
    EvenShiftedDoubling,
    /// Four-row even rectangle of order `n-1` with a constant last column.
    OddExtension,
    /// Supplied by hand or found by search.
    Handmade,
}

impl Construction {
    pub fn as_str(self) -> &'static str {
        match self {
            Construction::PrimeVatican => "prime_vatican",
            Construction::MultiplicationTable => "multiplication_table",
            Construction::EvenDoubling => "even_doubling",
            Construction::EvenShiftedDoubling => "even_shifted_doubling",
            Construction::OddExtension => "odd_extension",
            Construction::Handmade => "handmade",
        }
    }
}

impl std::fmt::Display for Construction {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.as_str())
    }
}

/// An `r x n` array of symbols in `0..n`.
///
/// Construction only validates the shape and the symbol range; the
/// combinatorial properties are decided by [`check_tuscan`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "RawRect")]
pub struct FlorentineRect {
    n: usize,
    rows: Vec<Vec<usize>>,
    construction: Construction,
    source_modulus: usize,
}

#[derive(Deserialize)]
struct RawRect {
    n: usize,
    rows: Vec<Vec<usize>>,
    construction: Construction,
    source_modulus: usize,
}

impl TryFrom<RawRect> for FlorentineRect {
    type Error = Error;

    fn try_from(raw: RawRect) -> Result<Self> {
        FlorentineRect::new(raw.n, raw.rows, raw.construction, raw.source_modulus)
    }
}

impl FlorentineRect {
    pub fn new(
        n: usize,
        rows: Vec<Vec<usize>>,
        construction: Construction,
        source_modulus: usize,
    ) -> Result<Self> {
        if n == 0 {
            return Err(Error::param("rectangle needs at least one symbol"));
        }
        if rows.is_empty() {
            return Err(Error::Shape("rectangle has no rows".into()));
        }
        for (i, row) in rows.iter().enumerate() {
            if row.len() != n {
                return Err(Error::Shape(format!(
                    "row {i} has {} entries, expected {n}",
                    row.len()
                )));
            }
            if let Some(&bad) = row.iter().find(|&&s| s >= n) {
                return Err(Error::Shape(format!(
                    "row {i} holds symbol {bad} outside 0..{n}"
                )));
            }
        }
        Ok(Self {
            n,
            rows,
            construction,
            source_modulus,
        })
    }

    /// A hand-entered rectangle over its own order.
    pub fn handmade(rows: Vec<Vec<usize>>) -> Result<Self> {
        let n = rows.first().map_or(0, Vec::len);
        Self::new(n, rows, Construction::Handmade, n)
    }

    /// Number of symbols (and columns).
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    pub fn row_count(&self) -> usize {
        self.rows.len()
    }

    pub fn construction(&self) -> Construction {
        self.construction
    }

    pub fn source_modulus(&self) -> usize {
        self.source_modulus
    }

    pub fn into_rows(self) -> Vec<Vec<usize>> {
        self.rows
    }

    /// Whitespace-separated grid, one row per line.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for row in &self.rows {
            let line: Vec<String> = row.iter().map(ToString::to_string).collect();
            out.push_str(&line.join(" "));
            out.push('\n');
        }
        out
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("rectangle serializes")
    }
}

/// Whether `row` is a permutation of `0..row.len()`.
pub fn is_row_permutation(row: &[usize]) -> bool {
    check::is_permutation(row, row.len())
}
