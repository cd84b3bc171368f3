//! Exhaustive correlation audit of the codes generated by a permutation family.
//!
//! Every ordered pair of flocks and every shift `0..N` is evaluated with both
//! backends. Within one code the sum must vanish exactly except for the
//! in-phase peak `N^2`; across codes its magnitude must be exactly `0` or `N`.

use num_complex::Complex64;
use rayon::prelude::*;
use serde::Serialize;

use crate::correlation::{
    set_correlation_float_unchecked, set_correlation_unchecked, zero_tolerance, RootTable,
};
use crate::cyclotomic::CyclotomicReducer;
use crate::florentine::PermutationFamily;
use crate::seqgen::build_qcss;

/// Maximum number of failing sites kept per category.
const KEEP: usize = 16;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Site {
    /// `(k, m)` of the first flock.
    pub a: (usize, usize),
    pub b: (usize, usize),
    pub tau: usize,
}

#[derive(Debug, Clone, Default, Serialize)]
pub struct FamilyVerification {
    pub n: usize,
    pub f_value: usize,
    pub within_checked: u64,
    pub within_peaks: u64,
    pub within_failures: Vec<Site>,
    pub within_failure_count: u64,
    pub inter_checked: u64,
    pub inter_zero: u64,
    pub inter_at_n: u64,
    pub inter_failures: Vec<Site>,
    pub inter_failure_count: u64,
    pub backend_disagreements: Vec<Site>,
    pub backend_disagreement_count: u64,
    /// Largest `| |float| - exact magnitude |` over nonzero correlations.
    pub max_magnitude_error: f64,
    /// Largest off-peak magnitude, from the exact backend.
    pub delta_max: f64,
}

impl FamilyVerification {
    pub fn complete_complementary(&self) -> bool {
        self.within_failure_count == 0
    }

    pub fn inter_bounded(&self) -> bool {
        self.inter_failure_count == 0
    }

    pub fn backends_agree(&self) -> bool {
        self.backend_disagreement_count == 0
            && self.max_magnitude_error <= 1e-8 * (self.n * self.n) as f64
    }

    pub fn passed(&self) -> bool {
        self.complete_complementary() && self.inter_bounded() && self.backends_agree()
    }

    fn push(list: &mut Vec<Site>, count: &mut u64, site: Site) {
        *count += 1;
        if list.len() < KEEP {
            list.push(site);
        }
    }

    fn merge(mut self, other: Self) -> Self {
        self.within_checked += other.within_checked;
        self.within_peaks += other.within_peaks;
        self.inter_checked += other.inter_checked;
        self.inter_zero += other.inter_zero;
        self.inter_at_n += other.inter_at_n;
        for (mine, theirs, count, their_count) in [
            (
                &mut self.within_failures,
                other.within_failures,
                &mut self.within_failure_count,
                other.within_failure_count,
            ),
            (
                &mut self.inter_failures,
                other.inter_failures,
                &mut self.inter_failure_count,
                other.inter_failure_count,
            ),
            (
                &mut self.backend_disagreements,
                other.backend_disagreements,
                &mut self.backend_disagreement_count,
                other.backend_disagreement_count,
            ),
        ] {
            mine.extend(theirs);
            mine.truncate(KEEP);
            *count += their_count;
        }
        self.max_magnitude_error = self.max_magnitude_error.max(other.max_magnitude_error);
        self.delta_max = self.delta_max.max(other.delta_max);
        self
    }
}

/// Audits every set correlation of the family's codes.
pub fn verify_family(family: &PermutationFamily) -> FamilyVerification {
    let n = family.n();
    let q = build_qcss(family);
    let reducer = CyclotomicReducer::new(n);
    let roots = RootTable::new(n);
    let eps = zero_tolerance(n);
    let n_i = n as i64;
    let peak = (n * n) as f64;

    let parts: Vec<FamilyVerification> = q
        .sets
        .par_iter()
        .map(|a| {
            let mut out = FamilyVerification::default();
            for b in &q.sets {
                for tau in 0..n {
                    let site = Site {
                        a: (a.k, a.m),
                        b: (b.k, b.m),
                        tau,
                    };
                    let exact = set_correlation_unchecked(a, b, tau as isize);
                    let float: Complex64 =
                        set_correlation_float_unchecked(a, b, tau as isize, &roots);
                    let is_zero = reducer.is_zero(exact.counts());

                    // value implied by the exact checks, if they pass
                    let mut exact_magnitude = None;
                    if a.k == b.k {
                        out.within_checked += 1;
                        let ok = if a.m == b.m && tau == 0 {
                            out.within_peaks += 1;
                            exact_magnitude = Some(peak);
                            exact.exact_equals_integer(n_i * n_i, &reducer)
                        } else {
                            exact_magnitude = Some(0.0);
                            is_zero
                        };
                        if !ok {
                            FamilyVerification::push(
                                &mut out.within_failures,
                                &mut out.within_failure_count,
                                site,
                            );
                            exact_magnitude = None;
                        }
                    } else {
                        out.inter_checked += 1;
                        if is_zero {
                            out.inter_zero += 1;
                            exact_magnitude = Some(0.0);
                        } else if exact.exact_magnitude_is(n_i, &reducer) {
                            out.inter_at_n += 1;
                            exact_magnitude = Some(n as f64);
                        } else {
                            FamilyVerification::push(
                                &mut out.inter_failures,
                                &mut out.inter_failure_count,
                                site,
                            );
                        }
                    }
                    let magnitude = exact_magnitude.unwrap_or_else(|| {
                        if is_zero {
                            0.0
                        } else {
                            exact.magnitude()
                        }
                    });
                    if !(a.k == b.k && a.m == b.m && tau == 0) {
                        out.delta_max = out.delta_max.max(magnitude);
                    }

                    let float_zero = float.norm() < eps;
                    if float_zero != is_zero {
                        FamilyVerification::push(
                            &mut out.backend_disagreements,
                            &mut out.backend_disagreement_count,
                            site,
                        );
                    } else if !is_zero {
                        out.max_magnitude_error = out
                            .max_magnitude_error
                            .max((float.norm() - magnitude).abs());
                    }
                }
            }
            out
        })
        .collect();

    let mut total = parts
        .into_iter()
        .fold(FamilyVerification::default(), FamilyVerification::merge);
    total.n = n;
    total.f_value = family.f_value();
    total
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::florentine::best_florentine;

    #[test]
    fn order_four_family_passes() {
        let (_, fam) = best_florentine(4).unwrap();
        let v = verify_family(&fam);
        assert!(v.passed(), "{v:?}");
        assert_eq!(v.within_peaks, 16);
        assert_eq!(v.delta_max, 4.0);
        assert!(v.inter_at_n > 0);
    }

    #[test]
    fn bad_family_is_caught() {
        // identity and its shift: codes interfere beyond N
        let fam =
            PermutationFamily::new_unchecked(4, vec![vec![0, 1, 2, 3], vec![3, 0, 1, 2]]).unwrap();
        let v = verify_family(&fam);
        assert!(v.complete_complementary());
        assert!(!v.inter_bounded());
        assert!(v.delta_max > 4.0);
    }
}
