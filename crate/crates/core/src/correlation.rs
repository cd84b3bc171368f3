//! Aperiodic correlation of exponent sequences.
//!
//! The exact backend counts how often each power of `w` occurs in a sum and
//! decides vanishing in `Z[w]`; the float backend sums complex roots
//! directly. A full `delta_max` scan costs `O(K^2 * M * N^2)` term
//! evaluations.

use std::collections::BTreeMap;
use std::f64::consts::TAU;

use num_complex::Complex64;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::cyclotomic::CyclotomicReducer;
use crate::error::{Error, Result};
use crate::seqgen::{Qcss, SequenceSet};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Backend {
    #[default]
    Float,
    Exact,
}

/// Absolute threshold below which a float correlation counts as zero.
pub fn zero_tolerance(n: usize) -> f64 {
    1e-6 * (n * n) as f64
}

/// Multiplicities of the powers of `w` in a correlation sum.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CorrelationValue {
    n: usize,
    counts: Vec<i64>,
}

impl CorrelationValue {
    pub fn zero(n: usize) -> Self {
        Self {
            n,
            counts: vec![0; n],
        }
    }

    pub fn from_counts(counts: Vec<i64>) -> Self {
        Self {
            n: counts.len(),
            counts,
        }
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn counts(&self) -> &[i64] {
        &self.counts
    }

    pub fn complex_value(&self) -> Complex64 {
        let n = self.n as f64;
        self.counts
            .iter()
            .enumerate()
            .filter(|(_, &c)| c != 0)
            .map(|(j, &c)| Complex64::from_polar(c as f64, TAU * j as f64 / n))
            .sum()
    }

    pub fn magnitude(&self) -> f64 {
        self.complex_value().norm()
    }

    /// Complex conjugate: `w^j -> w^{-j}`.
    pub fn conj(&self) -> Self {
        let n = self.n;
        let mut counts = vec![0; n];
        for (j, &c) in self.counts.iter().enumerate() {
            counts[(n - j) % n] += c;
        }
        Self { n, counts }
    }

    pub fn add_assign(&mut self, other: &Self) {
        assert_eq!(self.n, other.n, "root orders differ");
        for (a, b) in self.counts.iter_mut().zip(&other.counts) {
            *a += b;
        }
    }

    /// `v * conj(v)` as an element of `Z[w]`.
    pub fn norm_squared(&self) -> Self {
        let n = self.n;
        let mut counts = vec![0; n];
        for (i, &a) in self.counts.iter().enumerate().filter(|(_, &a)| a != 0) {
            for (j, &b) in self.counts.iter().enumerate().filter(|(_, &b)| b != 0) {
                counts[(i + n - j) % n] += a * b;
            }
        }
        Self { n, counts }
    }

    /// Exact test of `v == value` for an integer `value`.
    pub fn exact_equals_integer(&self, value: i64, reducer: &CyclotomicReducer) -> bool {
        let mut c = self.counts.clone();
        c[0] -= value;
        reducer.is_zero(&c)
    }

    /// Exact test of `|v| == magnitude` for an integer magnitude.
    pub fn exact_magnitude_is(&self, magnitude: i64, reducer: &CyclotomicReducer) -> bool {
        self.norm_squared()
            .exact_equals_integer(magnitude * magnitude, reducer)
    }
}

/// `|v|`, computed as `sqrt` of an integer whenever `|v|^2` reduces to one.
fn exact_magnitude(v: &CorrelationValue, reducer: &CyclotomicReducer) -> f64 {
    let r = reducer.reduce(&v.norm_squared().counts);
    if r.iter().skip(1).all(|&c| c == 0) {
        (r.first().copied().unwrap_or(0) as f64).sqrt()
    } else {
        v.magnitude()
    }
}

/// Whether the value is zero in `Z[w]`.
pub fn exact_is_zero(v: &CorrelationValue) -> bool {
    v.counts.iter().all(|&c| c == 0) || CyclotomicReducer::new(v.n).is_zero(&v.counts)
}

/// Powers of `w` indexed by exponent.
#[derive(Debug, Clone)]
pub struct RootTable {
    roots: Vec<Complex64>,
}

impl RootTable {
    pub fn new(n: usize) -> Self {
        Self {
            roots: (0..n)
                .map(|j| Complex64::from_polar(1.0, TAU * j as f64 / n as f64))
                .collect(),
        }
    }

    pub fn order(&self) -> usize {
        self.roots.len()
    }
}

fn check_shift(len: usize, tau: isize) -> Result<()> {
    if tau.unsigned_abs() >= len.max(1) {
        return Err(Error::param(format!(
            "shift {tau} outside -{len}..{len} (exclusive)"
        )));
    }
    Ok(())
}

/// Aligned index pairs `(i into c, j into d)` of the aperiodic sum at `tau`.
fn aligned<'a>(c: &'a [u32], d: &'a [u32], tau: isize) -> impl Iterator<Item = (u32, u32)> + 'a {
    let shift = tau.unsigned_abs();
    let (c, d) = if tau >= 0 {
        (c, &d[shift..])
    } else {
        (&c[shift..], d)
    };
    c.iter().copied().zip(d.iter().copied())
}

fn accumulate(counts: &mut [i64], c: &[u32], d: &[u32], tau: isize) {
    let n = counts.len() as u32;
    for (a, b) in aligned(c, d, tau) {
        let e = if a >= b { a - b } else { a + n - b };
        counts[e as usize] += 1;
    }
}

/// Aperiodic correlation `sum_t c_t conj(d_{t+tau})` of two exponent rows
/// over `Z_n`; for negative `tau` the roles of the offsets swap.
pub fn acf(c: &[u32], d: &[u32], tau: isize, n: usize) -> Result<CorrelationValue> {
    if c.len() != d.len() {
        return Err(Error::Shape(format!(
            "sequence lengths {} and {} differ",
            c.len(),
            d.len()
        )));
    }
    if let Some(&e) = c.iter().chain(d).find(|&&e| e as usize >= n) {
        return Err(Error::param(format!("exponent {e} outside Z_{n}")));
    }
    check_shift(c.len(), tau)?;
    let mut v = CorrelationValue::zero(n);
    accumulate(&mut v.counts, c, d, tau);
    Ok(v)
}

/// Direct complex evaluation of [`acf`].
pub fn acf_float(c: &[u32], d: &[u32], tau: isize, roots: &RootTable) -> Complex64 {
    let n = roots.order() as u32;
    aligned(c, d, tau)
        .map(|(a, b)| roots.roots[(if a >= b { a - b } else { a + n - b }) as usize])
        .sum()
}

fn check_sets(a: &SequenceSet, b: &SequenceSet) -> Result<()> {
    if a.n != b.n || a.flock_size() != b.flock_size() || a.length() != b.length() {
        return Err(Error::Shape(format!(
            "sets (k={}, m={}) and (k={}, m={}) differ in shape",
            a.k, a.m, b.k, b.m
        )));
    }
    Ok(())
}

/// Sum of the row-wise aperiodic correlations of two flocks.
pub fn set_correlation(a: &SequenceSet, b: &SequenceSet, tau: isize) -> Result<CorrelationValue> {
    check_sets(a, b)?;
    check_shift(a.length(), tau)?;
    Ok(set_correlation_unchecked(a, b, tau))
}

pub(crate) fn set_correlation_unchecked(
    a: &SequenceSet,
    b: &SequenceSet,
    tau: isize,
) -> CorrelationValue {
    let mut v = CorrelationValue::zero(a.n);
    for (c, d) in a.exponents.iter().zip(&b.exponents) {
        accumulate(&mut v.counts, c, d, tau);
    }
    v
}

pub fn set_correlation_float(
    a: &SequenceSet,
    b: &SequenceSet,
    tau: isize,
    roots: &RootTable,
) -> Result<Complex64> {
    check_sets(a, b)?;
    check_shift(a.length(), tau)?;
    if roots.order() != a.n {
        return Err(Error::param("root table order does not match the sets"));
    }
    Ok(set_correlation_float_unchecked(a, b, tau, roots))
}

pub(crate) fn set_correlation_float_unchecked(
    a: &SequenceSet,
    b: &SequenceSet,
    tau: isize,
    roots: &RootTable,
) -> Complex64 {
    a.exponents
        .iter()
        .zip(&b.exponents)
        .map(|(c, d)| acf_float(c, d, tau, roots))
        .sum()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Argmax {
    pub set_a: usize,
    pub set_b: usize,
    pub tau: usize,
}

/// Worst set correlation of a collection of flocks.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CorrelationReport {
    #[serde(rename = "K")]
    pub k: usize,
    #[serde(rename = "M")]
    pub m: usize,
    #[serde(rename = "N")]
    pub n: usize,
    pub delta_max: f64,
    pub argmax: Option<Argmax>,
    /// Observed magnitudes (rounded to 1e-6) and how often each occurred.
    pub histogram: Vec<(f64, u64)>,
}

impl CorrelationReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

const HIST_SCALE: f64 = 1e6;

#[derive(Default)]
struct ScanAcc {
    best: Option<(i64, f64, Argmax)>,
    hist: BTreeMap<i64, u64>,
}

impl ScanAcc {
    fn record(&mut self, magnitude: f64, at: Argmax) {
        let key = (magnitude * HIST_SCALE).round() as i64;
        *self.hist.entry(key).or_default() += 1;
        if self.best.is_none_or(|(k, _, _)| key > k) {
            self.best = Some((key, magnitude, at));
        }
    }

    /// `self` precedes `other` in scan order.
    fn merge(mut self, other: ScanAcc) -> ScanAcc {
        for (k, c) in other.hist {
            *self.hist.entry(k).or_default() += c;
        }
        if let Some(b) = other.best {
            if self.best.is_none_or(|(k, _, _)| b.0 > k) {
                self.best = Some(b);
            }
        }
        self
    }
}

/// Maximum set-correlation magnitude over ordered set pairs and shifts
/// `0..N`, skipping each set's in-phase autocorrelation.
///
/// Scan order is `set_a`, then `set_b`, then `tau`; ties keep the first
/// entry in that order regardless of how the scan is parallelized.
pub fn delta_max(q: &Qcss, backend: Backend) -> CorrelationReport {
    let (k, m, len) = q.params();
    let n = q.n;
    let eps = zero_tolerance(len.max(n));
    let reducer = CyclotomicReducer::new(n);
    let roots = RootTable::new(n);

    let acc = (0..q.sets.len())
        .into_par_iter()
        .map(|i| {
            let mut acc = ScanAcc::default();
            let a = &q.sets[i];
            for (j, b) in q.sets.iter().enumerate() {
                for tau in 0..len {
                    if i == j && tau == 0 {
                        continue;
                    }
                    let magnitude = match backend {
                        Backend::Exact => {
                            let v = set_correlation_unchecked(a, b, tau as isize);
                            if reducer.is_zero(&v.counts) {
                                0.0
                            } else {
                                exact_magnitude(&v, &reducer)
                            }
                        }
                        Backend::Float => {
                            let z =
                                set_correlation_float_unchecked(a, b, tau as isize, &roots).norm();
                            if z < eps {
                                0.0
                            } else {
                                z
                            }
                        }
                    };
                    acc.record(
                        magnitude,
                        Argmax {
                            set_a: i,
                            set_b: j,
                            tau,
                        },
                    );
                }
            }
            acc
        })
        .collect::<Vec<_>>()
        .into_iter()
        .fold(ScanAcc::default(), ScanAcc::merge);

    CorrelationReport {
        k,
        m,
        n: len,
        delta_max: acc.best.map_or(0.0, |b| b.1),
        argmax: acc.best.map(|b| b.2),
        histogram: acc
            .hist
            .into_iter()
            .map(|(key, c)| (key as f64 / HIST_SCALE, c))
            .collect(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::florentine::PermutationFamily;
    use crate::seqgen::{build_ccc, build_qcss};

    #[test]
    fn autocorrelation_peak() {
        let c = [3, 1, 4, 1, 5];
        let v = acf(&c, &c, 0, 7).unwrap();
        assert_eq!(v.counts()[0], 5);
        assert!((v.complex_value() - Complex64::new(5.0, 0.0)).norm() < 1e-12);
    }

    #[test]
    fn binary_single_term() {
        let v = acf(&[0, 1], &[0, 0], 1, 2).unwrap();
        assert!((v.complex_value() - Complex64::new(1.0, 0.0)).norm() < 1e-12);
        // tau = -1 picks c_1 conj(d_0) = -1
        let v = acf(&[0, 1], &[0, 0], -1, 2).unwrap();
        assert!((v.complex_value() + Complex64::new(1.0, 0.0)).norm() < 1e-12);
    }

    #[test]
    fn shift_out_of_range() {
        assert!(acf(&[0, 1], &[0, 1], 2, 2).is_err());
        assert!(acf(&[0, 1], &[0, 1], -2, 2).is_err());
        assert!(acf(&[0, 1], &[0], 0, 2).is_err());
        assert!(acf(&[0, 2], &[0, 1], 0, 2).is_err());
    }

    #[test]
    fn conjugate_symmetry_on_counts() {
        let c = [0, 4, 2, 5, 1, 3];
        let d = [5, 5, 0, 2, 1, 4];
        for tau in -5..=5 {
            let lhs = acf(&c, &d, tau, 6).unwrap();
            let rhs = acf(&d, &c, -tau, 6).unwrap().conj();
            assert_eq!(lhs, rhs, "tau={tau}");
        }
    }

    #[test]
    fn float_matches_counts() {
        let c = [0, 4, 2, 5, 1, 3];
        let d = [5, 5, 0, 2, 1, 4];
        let roots = RootTable::new(6);
        for tau in -5..=5 {
            let exact = acf(&c, &d, tau, 6).unwrap().complex_value();
            assert!((exact - acf_float(&c, &d, tau, &roots)).norm() < 1e-12);
        }
    }

    #[test]
    fn exact_zero_cases() {
        assert!(exact_is_zero(&CorrelationValue::from_counts(vec![1; 7])));
        let mut peak = vec![0; 7];
        peak[0] = 7;
        assert!(!exact_is_zero(&CorrelationValue::from_counts(peak)));
    }

    #[test]
    fn set_peak_and_shape_errors() {
        let (_, fam) = crate::florentine::best_florentine(5).unwrap();
        let ccc = build_ccc(&fam, 1).unwrap();
        let v = set_correlation(&ccc.sets[2], &ccc.sets[2], 0).unwrap();
        assert_eq!(v.counts()[0], 25);
        for tau in 1..5 {
            assert!(exact_is_zero(
                &set_correlation(&ccc.sets[2], &ccc.sets[2], tau).unwrap()
            ));
        }
        let other = build_ccc(
            &PermutationFamily::new(4, vec![vec![0, 1, 2, 3]]).unwrap(),
            0,
        )
        .unwrap();
        assert!(set_correlation(&ccc.sets[0], &other.sets[0], 0).is_err());
    }

    #[test]
    fn single_ccc_has_zero_delta() {
        let fam = PermutationFamily::new(5, vec![vec![0, 2, 4, 1, 3]]).unwrap();
        let q = build_qcss(&fam);
        for backend in [Backend::Exact, Backend::Float] {
            let r = delta_max(&q, backend);
            assert_eq!(r.delta_max, 0.0);
            assert_eq!((r.k, r.m, r.n), (5, 5, 5));
        }
    }

    #[test]
    fn norm_squared_of_unit() {
        let reducer = CyclotomicReducer::new(6);
        let mut c = vec![0; 6];
        c[2] = 3;
        let v = CorrelationValue::from_counts(c);
        assert!(v.exact_magnitude_is(3, &reducer));
        assert!(!v.exact_magnitude_is(2, &reducer));
    }
}
