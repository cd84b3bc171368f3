use std::fmt;

use rayon::prelude::*;

use super::FlorentineRect;

/// Why a rectangle is not Tuscan-`k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    /// The row is not a permutation of `0..n`.
    NotPermutation { row: usize },
    /// `pair.1` sits `displacement` steps right of `pair.0` at two places,
    /// given as `(row, position of pair.0)`.
    RepeatedPair {
        displacement: usize,
        pair: (usize, usize),
        first: (usize, usize),
        second: (usize, usize),
    },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::NotPermutation { row } => write!(f, "row {row} is not a permutation"),
            Violation::RepeatedPair {
                displacement,
                pair,
                first,
                second,
            } => write!(
                f,
                "pair ({}, {}) at displacement {displacement} occurs at row {} position {} and row {} position {}",
                pair.0, pair.1, first.0, first.1, second.0, second.1
            ),
        }
    }
}

pub(crate) fn is_permutation(row: &[usize], n: usize) -> bool {
    if row.len() != n {
        return false;
    }
    let mut seen = vec![false; n];
    for &s in row {
        if s >= n || std::mem::replace(&mut seen[s], true) {
            return false;
        }
    }
    true
}

/// Checks the Tuscan-`k` conditions for displacements `1..=k` (clamped to `n-1`).
///
/// The reported witness is deterministic: smallest displacement first, then
/// the repeated pair whose second occurrence comes earliest in row-major order.
pub fn check_tuscan(rect: &FlorentineRect, k: usize) -> Result<(), Violation> {
    let n = rect.n();
    if let Some(row) = rect.rows().iter().position(|r| !is_permutation(r, n)) {
        return Err(Violation::NotPermutation { row });
    }
    let k = k.min(n.saturating_sub(1));
    match (1..=k)
        .into_par_iter()
        .find_map_first(|d| repeated_pair_at(rect, d))
    {
        Some(v) => Err(v),
        None => Ok(()),
    }
}

fn repeated_pair_at(rect: &FlorentineRect, d: usize) -> Option<Violation> {
    let n = rect.n();
    let mut entries: Vec<(usize, usize, usize)> = Vec::with_capacity(rect.row_count() * (n - d));
    for (r, row) in rect.rows().iter().enumerate() {
        for pos in 0..n - d {
            entries.push((row[pos] * n + row[pos + d], r, pos));
        }
    }
    entries.sort_unstable();

    type Cell = (usize, usize);
    let mut best: Option<(Cell, Cell, usize)> = None;
    // Sorted by (key, row, pos): the first two entries of a group are its
    // earliest occurrences.
    for group in entries.chunk_by(|a, b| a.0 == b.0) {
        if let [(key, r0, p0), (_, r1, p1), ..] = *group {
            if best.is_none_or(|(_, second, _)| (r1, p1) < second) {
                best = Some(((r0, p0), (r1, p1), key));
            }
        }
    }
    best.map(|(first, second, key)| Violation::RepeatedPair {
        displacement: d,
        pair: (key / n, key % n),
        first,
        second,
    })
}

pub fn is_tuscan_k(rect: &FlorentineRect, k: usize) -> bool {
    check_tuscan(rect, k).is_ok()
}

pub fn is_florentine(rect: &FlorentineRect) -> bool {
    is_tuscan_k(rect, rect.n().saturating_sub(1))
}

/// Square, with every row and every column a permutation.
pub fn is_latin(rect: &FlorentineRect) -> bool {
    let n = rect.n();
    if rect.row_count() != n {
        return false;
    }
    let rows = rect.rows();
    rows.iter().all(|r| is_permutation(r, n))
        && (0..n).all(|c| {
            let col: Vec<usize> = rows.iter().map(|r| r[c]).collect();
            is_permutation(&col, n)
        })
}

pub fn is_vatican(rect: &FlorentineRect) -> bool {
    is_latin(rect) && is_florentine(rect)
}
