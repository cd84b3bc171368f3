use serde::{Deserialize, Serialize};

use super::check::is_permutation;
use super::FlorentineRect;
use crate::error::{Error, Result};

/// Ordered permutations of `Z_n` with pairwise shift uniqueness: for rows
/// `i != j` and each shift `tau` in `0..n`, `perm_i(t) == perm_j(t + tau)`
/// holds for at most one `t`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "RawFamily")]
pub struct PermutationFamily {
    n: usize,
    perms: Vec<Vec<usize>>,
}

#[derive(Deserialize)]
struct RawFamily {
    n: usize,
    perms: Vec<Vec<usize>>,
}

impl TryFrom<RawFamily> for PermutationFamily {
    type Error = Error;

    fn try_from(raw: RawFamily) -> Result<Self> {
        PermutationFamily::new(raw.n, raw.perms)
    }
}

/// A pair of rows that agree more than once at some shift.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PairCollision {
    pub first: usize,
    pub second: usize,
    pub shift: usize,
    pub count: usize,
}

impl PermutationFamily {
    /// Validates bijectivity and pair uniqueness.
    pub fn new(n: usize, perms: Vec<Vec<usize>>) -> Result<Self> {
        let family = Self::new_unchecked(n, perms)?;
        if let Some(c) = family.pair_collision() {
            return Err(Error::PairUniqueness {
                first: c.first,
                second: c.second,
                shift: c.shift,
                count: c.count,
            });
        }
        Ok(family)
    }

    /// Only checks that each row is a bijection.
    pub(crate) fn new_unchecked(n: usize, perms: Vec<Vec<usize>>) -> Result<Self> {
        if n == 0 || perms.is_empty() {
            return Err(Error::param("permutation family must be nonempty"));
        }
        if let Some(i) = perms.iter().position(|p| !is_permutation(p, n)) {
            return Err(Error::param(format!("row {i} is not a bijection on Z_{n}")));
        }
        Ok(Self { n, perms })
    }

    /// Rows of a rectangle that already passed the Florentine check.
    pub(crate) fn from_checked_rect(rect: &FlorentineRect) -> Self {
        Self {
            n: rect.n(),
            perms: rect.rows().to_vec(),
        }
    }

    pub fn from_rect(rect: &FlorentineRect) -> Result<Self> {
        Self::new(rect.n(), rect.rows().to_vec())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of permutations, `F`.
    pub fn f_value(&self) -> usize {
        self.perms.len()
    }

    pub fn perms(&self) -> &[Vec<usize>] {
        &self.perms
    }

    pub fn perm(&self, k: usize) -> Option<&[usize]> {
        self.perms.get(k).map(Vec::as_slice)
    }

    /// First (rows, shift) whose agreement count exceeds one, scanning
    /// ordered row pairs and shifts ascending.
    pub fn pair_collision(&self) -> Option<PairCollision> {
        let n = self.n;
        let positions: Vec<Vec<usize>> = self
            .perms
            .iter()
            .map(|p| {
                let mut pos = vec![0; n];
                for (t, &v) in p.iter().enumerate() {
                    pos[v] = t;
                }
                pos
            })
            .collect();
        let mut counts = vec![0usize; n];
        for (i, p) in self.perms.iter().enumerate() {
            for (j, pos_j) in positions.iter().enumerate() {
                if i == j {
                    continue;
                }
                counts.iter_mut().for_each(|c| *c = 0);
                // perm_i(t) == perm_j(t + tau)  <=>  tau = pos_j[perm_i(t)] - t
                for (t, &v) in p.iter().enumerate() {
                    if pos_j[v] >= t {
                        counts[pos_j[v] - t] += 1;
                    }
                }
                if let Some(shift) = counts.iter().position(|&c| c > 1) {
                    return Some(PairCollision {
                        first: i,
                        second: j,
                        shift,
                        count: counts[shift],
                    });
                }
            }
        }
        None
    }

    pub fn satisfies_pair_uniqueness(&self) -> bool {
        self.pair_collision().is_none()
    }
}
