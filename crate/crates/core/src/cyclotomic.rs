//! Exact arithmetic in `Z[w]`, `w` a primitive `n`-th root of unity.
//!
//! An element is given by multiplicities `c[j]` of `w^j`; it vanishes iff
//! the polynomial `sum c[j] x^j` is divisible by the cyclotomic polynomial.

use crate::arith::divisors;

/// Coefficients (constant term first) of the `n`-th cyclotomic polynomial.
pub fn cyclotomic_poly(n: usize) -> Vec<i64> {
    assert!(n >= 1, "cyclotomic polynomial needs n >= 1");
    let divs = divisors(n);
    let mut table: Vec<(usize, Vec<i64>)> = Vec::with_capacity(divs.len());
    for &d in &divs {
        // x^d - 1 divided by every earlier cyclotomic factor
        let mut poly = vec![0i64; d + 1];
        poly[0] = -1;
        poly[d] = 1;
        for (e, phi) in &table {
            if d % e == 0 {
                poly = exact_div(&poly, phi);
            }
        }
        table.push((d, poly));
    }
    table.pop().expect("n is its own divisor").1
}

/// Quotient of `num / den` for monic `den` dividing `num` exactly.
fn exact_div(num: &[i64], den: &[i64]) -> Vec<i64> {
    let dd = den.len() - 1;
    debug_assert_eq!(den[dd], 1);
    let mut rem = num.to_vec();
    let qlen = num.len() - dd;
    let mut quot = vec![0i64; qlen];
    for i in (0..qlen).rev() {
        let c = rem[i + dd];
        quot[i] = c;
        if c != 0 {
            for (j, &dj) in den.iter().enumerate() {
                rem[i + j] -= c * dj;
            }
        }
    }
    debug_assert!(rem.iter().all(|&r| r == 0), "division was not exact");
    quot
}

/// Reduces integer polynomials modulo a fixed cyclotomic polynomial.
#[derive(Debug, Clone)]
pub struct CyclotomicReducer {
    n: usize,
    phi: Vec<i64>,
}

impl CyclotomicReducer {
    pub fn new(n: usize) -> Self {
        Self {
            n,
            phi: cyclotomic_poly(n),
        }
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn modulus(&self) -> &[i64] {
        &self.phi
    }

    /// Remainder of `sum coeffs[j] x^j` modulo the cyclotomic polynomial.
    pub fn reduce(&self, coeffs: &[i64]) -> Vec<i128> {
        let deg = self.phi.len() - 1;
        let mut rem: Vec<i128> = coeffs.iter().map(|&c| c as i128).collect();
        if rem.len() <= deg {
            rem.resize(deg, 0);
            return rem;
        }
        for i in (deg..rem.len()).rev() {
            let c = rem[i];
            if c != 0 {
                for (j, &pj) in self.phi.iter().enumerate() {
                    rem[i - deg + j] -= c * pj as i128;
                }
            }
        }
        rem.truncate(deg);
        rem
    }

    pub fn is_zero(&self, coeffs: &[i64]) -> bool {
        self.reduce(coeffs).iter().all(|&c| c == 0)
    }
}
