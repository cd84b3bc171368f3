//! Published reference values: bounds on the maximal Florentine row count
//! for small orders and the parameter tables of the constructed collections.

use serde::Serialize;

/// Known range of the maximal Florentine row count for one order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct RowCountRange {
    pub n: usize,
    pub lo: usize,
    pub hi: usize,
    /// `true` for "lo, ..., hi", `false` when only `lo` and `hi` are possible.
    pub interval: bool,
}

impl RowCountRange {
    pub fn describe(&self) -> String {
        match (self.lo == self.hi, self.interval) {
            (true, _) => self.lo.to_string(),
            (false, true) => format!("{}..{}", self.lo, self.hi),
            (false, false) => format!("{}, {}", self.lo, self.hi),
        }
    }
}

const fn exact(n: usize, v: usize) -> RowCountRange {
    RowCountRange {
        n,
        lo: v,
        hi: v,
        interval: false,
    }
}

const fn either(n: usize, lo: usize, hi: usize) -> RowCountRange {
    RowCountRange {
        n,
        lo,
        hi,
        interval: false,
    }
}

const fn range(n: usize, lo: usize, hi: usize) -> RowCountRange {
    RowCountRange {
        n,
        lo,
        hi,
        interval: true,
    }
}

/// Possible maximal row counts for `1 <= n <= 32`.
pub const ROW_COUNT_RANGES: [RowCountRange; 32] = [
    exact(1, 1),
    exact(2, 2),
    exact(3, 2),
    exact(4, 4),
    exact(5, 4),
    exact(6, 6),
    exact(7, 6),
    exact(8, 7),
    exact(9, 8),
    exact(10, 10),
    exact(11, 10),
    exact(12, 12),
    either(13, 12, 13),
    range(14, 6, 14),
    range(15, 6, 15),
    exact(16, 16),
    either(17, 16, 17),
    exact(18, 18),
    either(19, 18, 19),
    range(20, 6, 20),
    range(21, 6, 21),
    exact(22, 22),
    either(23, 22, 23),
    range(24, 6, 24),
    range(25, 6, 25),
    range(26, 6, 26),
    range(27, 6, 27),
    exact(28, 28),
    either(29, 28, 29),
    exact(30, 30),
    either(31, 30, 31),
    range(32, 6, 32),
];

pub fn row_count_range(n: usize) -> Option<RowCountRange> {
    ROW_COUNT_RANGES.iter().copied().find(|r| r.n == n)
}

/// One published `(N, K, rho)` row with `M = N`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ParamRow {
    pub n: usize,
    pub k: usize,
    pub rho: f64,
}

const fn row(n: usize, k: usize, rho: f64) -> ParamRow {
    ParamRow { n, k, rho }
}

/// Even orders whose collections approach the bound.
pub const EVEN_ASYMPTOTIC: [ParamRow; 25] = [
    row(6, 36, 1.3754),
    row(10, 100, 1.2551),
    row(12, 144, 1.2247),
    row(18, 324, 1.1722),
    row(22, 484, 1.1518),
    row(28, 784, 1.1310),
    row(30, 900, 1.1257),
    row(36, 1296, 1.1128),
    row(40, 1600, 1.1061),
    row(42, 1764, 1.1031),
    row(46, 2116, 1.0978),
    row(48, 288, 1.3754),
    row(52, 2704, 1.0912),
    row(58, 3364, 1.0857),
    row(60, 3600, 1.0841),
    row(66, 4356, 1.0797),
    row(70, 4900, 1.0771),
    row(72, 5184, 1.0759),
    row(76, 456, 1.3754),
    row(78, 6084, 1.0726),
    row(82, 6724, 1.0706),
    row(88, 7744, 1.0679),
    row(90, 540, 1.3754),
    row(96, 9216, 1.0647),
    row(100, 10000, 1.0633),
];

/// Even orders with four-row generators.
pub const EVEN_NEAR_OPTIMAL: [ParamRow; 8] = [
    row(14, 56, 1.5382),
    row(20, 80, 1.5382),
    row(24, 96, 1.5382),
    row(26, 104, 1.5382),
    row(36, 144, 1.5382),
    row(38, 152, 1.5382),
    row(44, 176, 1.5382),
    row(50, 200, 1.5382),
];

/// Orders with smallest prime factor 3, compared with an earlier construction.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ComparisonRow {
    pub factors: &'static str,
    pub n: usize,
    pub k: usize,
    pub k_prev: usize,
    pub rho: f64,
    pub rho_prev: f64,
}

const fn cmp(
    factors: &'static str,
    n: usize,
    k: usize,
    k_prev: usize,
    rho: f64,
    rho_prev: f64,
) -> ComparisonRow {
    ComparisonRow {
        factors,
        n,
        k,
        k_prev,
        rho,
        rho_prev,
    }
}

pub const FACTOR_THREE_COMPARISON: [ComparisonRow; 8] = [
    cmp("3*5", 15, 60, 30, 1.5382, 1.9653),
    cmp("3*7", 21, 84, 42, 1.5382, 1.9755),
    cmp("3*11", 33, 132, 66, 1.5382, 1.9846),
    cmp("3*5*7", 105, 420, 210, 1.5382, 1.9952),
    cmp("3*5*11", 165, 660, 330, 1.5382, 1.9970),
    cmp("3*5*7*11", 1155, 4620, 2310, 1.5382, 1.9996),
    cmp("3*5*7*11*13", 15015, 60060, 30030, 1.5382, 2.0000),
    cmp("3*5*7*11*13*17", 255255, 1021020, 510510, 1.5382, 2.0000),
];

/// Published optimality factors are rounded to four decimals.
pub const RHO_TOLERANCE: f64 = 5e-5;
