//! Exhaustive branch-and-bound search for large Florentine rectangles at
//! small orders. Used to cross-check the systematic row counts.

use super::{Construction, FlorentineRect};
use crate::error::{Error, Result};

/// Largest order the search accepts.
pub const MAX_SEARCH_ORDER: usize = 8;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SearchStatus {
    /// The search space was exhausted (or the trivial bound `n` was hit):
    /// no rectangle with more rows exists.
    ProvenMaximum,
    /// Stopped after reaching the requested row limit.
    ReachedRowLimit,
    /// Node budget ran out; the result is only a lower bound.
    BudgetExhausted,
}

#[derive(Debug, Clone)]
pub struct SearchOutcome {
    pub rows: usize,
    pub rect: FlorentineRect,
    pub status: SearchStatus,
    pub nodes: u64,
}

/// Two rows can coexist iff `symbol -> pos_p(symbol) - pos_q(symbol)` is
/// injective: a repeated difference means a pair at equal displacement.
fn compatible(pos_p: &[usize], pos_q: &[usize], scratch: &mut [bool]) -> bool {
    let n = pos_p.len();
    scratch.iter_mut().for_each(|s| *s = false);
    for (a, b) in pos_p.iter().zip(pos_q) {
        let diff = *a + n - *b;
        if std::mem::replace(&mut scratch[diff], true) {
            return false;
        }
    }
    true
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur: Vec<usize> = (0..n).collect();
    loop {
        out.push(cur.clone());
        // next lexicographic permutation
        let Some(i) = (0..n.saturating_sub(1))
            .rev()
            .find(|&i| cur[i] < cur[i + 1])
        else {
            break;
        };
        let j = (i + 1..n).rev().find(|&j| cur[j] > cur[i]).unwrap();
        cur.swap(i, j);
        cur[i + 1..].reverse();
    }
    out
}

struct Search {
    perms: Vec<Vec<usize>>,
    positions: Vec<Vec<usize>>,
    target: usize,
    budget: Option<u64>,
    nodes: u64,
    best: Vec<usize>,
    exhausted_budget: bool,
    scratch: Vec<bool>,
}

impl Search {
    fn done(&self) -> bool {
        self.exhausted_budget || self.best.len() >= self.target
    }

    fn expand(&mut self, clique: &mut Vec<usize>, candidates: &[usize]) {
        if clique.len() > self.best.len() {
            self.best = clique.clone();
        }
        for (idx, &c) in candidates.iter().enumerate() {
            if self.done() || clique.len() + candidates.len() - idx <= self.best.len() {
                return;
            }
            self.nodes += 1;
            if self.budget.is_some_and(|b| self.nodes > b) {
                self.exhausted_budget = true;
                return;
            }
            let mut next = Vec::with_capacity(candidates.len() - idx);
            for &d in &candidates[idx + 1..] {
                if compatible(&self.positions[c], &self.positions[d], &mut self.scratch) {
                    next.push(d);
                }
            }
            clique.push(c);
            self.expand(clique, &next);
            clique.pop();
        }
    }
}

/// Searches for a Florentine rectangle of order `n` with as many rows as
/// possible, up to `row_limit`. `budget` caps the number of branch nodes.
///
/// Symbols can be relabeled freely, so the first row is fixed to the identity.
pub fn max_florentine_search(
    n: usize,
    row_limit: usize,
    budget: Option<u64>,
) -> Result<SearchOutcome> {
    if !(1..=MAX_SEARCH_ORDER).contains(&n) {
        return Err(Error::param(format!(
            "search supports orders 1..={MAX_SEARCH_ORDER}, got {n}"
        )));
    }
    if row_limit == 0 {
        return Err(Error::param("row limit must be positive"));
    }
    let perms = permutations(n);
    let positions: Vec<Vec<usize>> = perms
        .iter()
        .map(|p| {
            let mut pos = vec![0; n];
            for (t, &s) in p.iter().enumerate() {
                pos[s] = t;
            }
            pos
        })
        .collect();
    let mut search = Search {
        perms,
        positions,
        // at displacement 1 each row uses n-1 of the n(n-1) ordered pairs
        target: row_limit.min(n),
        budget,
        nodes: 0,
        best: vec![0],
        exhausted_budget: false,
        scratch: vec![false; 2 * n],
    };
    let mut scratch = vec![false; 2 * n];
    let candidates: Vec<usize> = (1..search.perms.len())
        .filter(|&d| compatible(&search.positions[0], &search.positions[d], &mut scratch))
        .collect();
    search.expand(&mut vec![0], &candidates);

    let status = if search.exhausted_budget {
        SearchStatus::BudgetExhausted
    } else if search.best.len() >= n {
        SearchStatus::ProvenMaximum
    } else if search.best.len() >= row_limit {
        SearchStatus::ReachedRowLimit
    } else {
        SearchStatus::ProvenMaximum
    };
    let rows: Vec<Vec<usize>> = search
        .best
        .iter()
        .map(|&i| search.perms[i].clone())
        .collect();
    let rect = FlorentineRect::new(n, rows, Construction::Handmade, n)?;
    Ok(SearchOutcome {
        rows: rect.row_count(),
        rect,
        status,
        nodes: search.nodes,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::florentine::is_florentine;

    #[test]
    fn lexicographic_permutations() {
        assert_eq!(permutations(3).len(), 6);
        assert_eq!(permutations(3)[1], vec![0, 2, 1]);
        assert_eq!(permutations(1), vec![vec![0]]);
    }

    #[test]
    fn small_orders() {
        for (n, expected) in [(2, 2), (3, 2), (4, 4), (5, 4)] {
            let out = max_florentine_search(n, n, None).unwrap();
            assert_eq!(out.rows, expected, "n={n}");
            assert_eq!(out.status, SearchStatus::ProvenMaximum);
            assert!(is_florentine(&out.rect));
        }
    }

    #[test]
    fn tiny_budget_is_reported() {
        let out = max_florentine_search(7, 7, Some(3)).unwrap();
        assert_eq!(out.status, SearchStatus::BudgetExhausted);
        assert!(is_florentine(&out.rect));
    }

    #[test]
    fn row_limit_stops_early() {
        let out = max_florentine_search(6, 3, None).unwrap();
        assert_eq!(out.rows, 3);
        assert_eq!(out.status, SearchStatus::ReachedRowLimit);
    }

    #[test]
    fn rejects_large_order() {
        assert!(max_florentine_search(9, 9, None).is_err());
    }
}
