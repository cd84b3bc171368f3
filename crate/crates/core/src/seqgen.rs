//! Sequence sets from permutation families.
//!
//! Set `(k, m)` is the `n x n` matrix of phase exponents
//! `e[s][t] = s * perm_k(t) + m * t (mod n)`; entry `e` stands for the
//! unimodular value `w^e` with `w = exp(2 pi i / n)`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::florentine::PermutationFamily;

/// `M x N` matrix of exponents over `Z_n`, labelled by generator index `k`
/// and set index `m`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SequenceSet {
    pub n: usize,
    pub k: usize,
    pub m: usize,
    pub exponents: Vec<Vec<u32>>,
}

impl SequenceSet {
    /// Flock size (number of sequences).
    pub fn flock_size(&self) -> usize {
        self.exponents.len()
    }

    pub fn length(&self) -> usize {
        self.exponents.first().map_or(0, Vec::len)
    }

    /// One line per sequence: concatenated digits for `n <= 10`,
    /// comma-separated exponents otherwise.
    pub fn render(&self) -> String {
        let sep = if self.n <= 10 { "" } else { "," };
        self.exponents
            .iter()
            .map(|row| {
                row.iter()
                    .map(ToString::to_string)
                    .collect::<Vec<_>>()
                    .join(sep)
            })
            .collect::<Vec<_>>()
            .join("\n")
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("sequence set serializes")
    }
}

/// The `n` sets sharing generator `k`, ordered by `m`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Ccc {
    pub n: usize,
    pub k: usize,
    pub sets: Vec<SequenceSet>,
}

/// Union of the complete complementary codes of a family, CCC-major.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Qcss {
    pub n: usize,
    pub k_count: usize,
    pub sets: Vec<SequenceSet>,
}

impl Qcss {
    /// `(K, M, N)`.
    pub fn params(&self) -> (usize, usize, usize) {
        let m = self.sets.first().map_or(0, SequenceSet::flock_size);
        let len = self.sets.first().map_or(0, SequenceSet::length);
        (self.sets.len(), m, len)
    }

    /// Wraps arbitrary sets; used to analyze reordered or hand-built collections.
    pub fn from_sets(n: usize, sets: Vec<SequenceSet>) -> Result<Self> {
        let Some(first) = sets.first() else {
            return Err(Error::param("empty set collection"));
        };
        let shape = (first.flock_size(), first.length());
        if let Some(bad) = sets
            .iter()
            .find(|s| s.n != n || (s.flock_size(), s.length()) != shape)
        {
            return Err(Error::Shape(format!(
                "set (k={}, m={}) does not match n={n}, shape {shape:?}",
                bad.k, bad.m
            )));
        }
        let k_count = sets.iter().map(|s| s.k).max().unwrap_or(0) + 1;
        Ok(Self { n, k_count, sets })
    }
}

/// Exponents `(s * pi(t) + m * t) mod n` for `t in 0..n`.
pub fn phase_row(pi: &[usize], m: usize, s: usize) -> Result<Vec<u32>> {
    let n = pi.len();
    if !crate::florentine::is_row_permutation(pi) {
        return Err(Error::param("phase row needs a permutation"));
    }
    if m >= n || s >= n {
        return Err(Error::param(format!("m={m}, s={s} must lie in Z_{n}")));
    }
    Ok(phase_row_unchecked(pi, m, s))
}

fn phase_row_unchecked(pi: &[usize], m: usize, s: usize) -> Vec<u32> {
    let n = pi.len();
    pi.iter()
        .enumerate()
        .map(|(t, &p)| ((s * p + m * t) % n) as u32)
        .collect()
}

fn sequence_set(pi: &[usize], k: usize, m: usize) -> SequenceSet {
    let n = pi.len();
    SequenceSet {
        n,
        k,
        m,
        exponents: (0..n).map(|s| phase_row_unchecked(pi, m, s)).collect(),
    }
}

/// The complete complementary code generated by permutation `k`.
pub fn build_ccc(family: &PermutationFamily, k: usize) -> Result<Ccc> {
    let pi = family.perm(k).ok_or_else(|| {
        Error::param(format!(
            "generator index {k} out of range 0..{}",
            family.f_value()
        ))
    })?;
    let n = family.n();
    Ok(Ccc {
        n,
        k,
        sets: (0..n).map(|m| sequence_set(pi, k, m)).collect(),
    })
}

/// All codes of the family, concatenated in generator order: `K = n * F`.
pub fn build_qcss(family: &PermutationFamily) -> Qcss {
    let sets = (0..family.f_value())
        .flat_map(|k| build_ccc(family, k).expect("index in range").sets)
        .collect();
    Qcss {
        n: family.n(),
        k_count: family.f_value(),
        sets,
    }
}
