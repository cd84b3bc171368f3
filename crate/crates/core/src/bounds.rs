//! Lower bounds on the maximum aperiodic correlation of a `(K, M, N)`
//! collection of flocks and the resulting optimality factor.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Which lower bound the optimality factor divides by.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Branch {
    Liu,
    Welch,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Classification {
    /// `rho == 1`
    Optimal,
    /// `1 < rho <= 2`
    NearOptimal,
    Other,
}

impl Classification {
    pub fn of(rho: f64) -> Self {
        if rho <= 1.0 + 1e-12 {
            Classification::Optimal
        } else if rho <= 2.0 {
            Classification::NearOptimal
        } else {
            Classification::Other
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct BoundsReport {
    #[serde(rename = "K")]
    pub k: usize,
    #[serde(rename = "M")]
    pub m: usize,
    #[serde(rename = "N")]
    pub n: usize,
    pub delta_max: f64,
    pub welch: f64,
    pub liu: Option<f64>,
    pub rho: f64,
    pub branch: Branch,
    pub classification: Classification,
}

/// Whether the tighter bound applies: `K >= 3M`, `M >= 2`, `N >= 2`.
pub fn liu_applies(k: usize, m: usize, n: usize) -> bool {
    k >= 3 * m && m >= 2 && n >= 2
}

/// `MN * sqrt((K/M - 1) / (K(2N - 1) - 1))`.
pub fn welch_bound(k: usize, m: usize, n: usize) -> Result<f64> {
    if m == 0 || n == 0 || k < m {
        return Err(Error::param(format!(
            "welch bound needs K >= M >= 1 and N >= 1, got ({k}, {m}, {n})"
        )));
    }
    let denom = (k * (2 * n - 1)) as f64 - 1.0;
    if denom <= 0.0 {
        return Err(Error::param(format!(
            "welch bound denominator vanishes for ({k}, {m}, {n})"
        )));
    }
    let ratio = k as f64 / m as f64 - 1.0;
    Ok((m * n) as f64 * (ratio / denom).sqrt())
}

/// `sqrt(MN (1 - 2 sqrt(M / 3K)))`, defined when [`liu_applies`].
pub fn liu_bound(k: usize, m: usize, n: usize) -> Result<f64> {
    if !liu_applies(k, m, n) {
        return Err(Error::NotApplicable(format!(
            "({k}, {m}, {n}) does not satisfy K >= 3M, M >= 2, N >= 2"
        )));
    }
    let inner = 1.0 - 2.0 * (m as f64 / (3.0 * k as f64)).sqrt();
    Ok(((m * n) as f64 * inner).sqrt())
}

/// Divides `delta` by the applicable bound and classifies the result.
///
/// A collection meeting a zero bound with zero correlation (a complete
/// complementary code) gets `rho = 1`.
pub fn optimality_factor(k: usize, m: usize, n: usize, delta: f64) -> Result<BoundsReport> {
    if delta.is_nan() || delta < 0.0 {
        return Err(Error::param(format!(
            "delta must be non-negative, got {delta}"
        )));
    }
    let welch = welch_bound(k, m, n)?;
    let liu = liu_bound(k, m, n).ok();
    let (branch, bound) = match liu {
        Some(l) => (Branch::Liu, l),
        None => (Branch::Welch, welch),
    };
    let rho = if bound > 0.0 {
        delta / bound
    } else if delta == 0.0 {
        1.0
    } else {
        return Err(Error::Unbounded { delta });
    };
    Ok(BoundsReport {
        k,
        m,
        n,
        delta_max: delta,
        welch,
        liu,
        rho,
        branch,
        classification: Classification::of(rho),
    })
}

/// Optimality factor of an `(N F, N, N, N)` collection, independent of `N`:
/// `1 / sqrt(1 - 2 / sqrt(3F))`.
pub fn asymptotic_rho(f: u64) -> Result<f64> {
    if 3 * u128::from(f) <= 4 {
        return Err(Error::param(format!(
            "asymptotic rho needs 3F > 4, got F = {f}"
        )));
    }
    Ok(1.0 / (1.0 - 2.0 / (3.0 * f as f64).sqrt()).sqrt())
}
