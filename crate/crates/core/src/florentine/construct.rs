//! Systematic constructions and the selection of the largest one for a given order.

use serde::Serialize;

use super::check::check_tuscan;
use super::{Construction, FlorentineRect, PermutationFamily};
use crate::arith::{is_prime, smallest_prime_factor};
use crate::error::{Error, Result};

/// Re-checks a freshly built rectangle; a failure is a construction bug.
fn verified(rect: FlorentineRect, name: &'static str) -> Result<FlorentineRect> {
    match check_tuscan(&rect, rect.n() - 1) {
        Ok(()) => Ok(rect),
        Err(violation) => Err(Error::Consistency {
            construction: name,
            violation,
        }),
    }
}

/// The `(p-1) x (p-1)` multiplication table of `Z_p` without its zero border,
/// relabeled to symbols `0..p-1`.
pub fn vatican_from_prime(p: usize) -> Result<FlorentineRect> {
    if p < 3 || !is_prime(p) {
        return Err(Error::param(format!("{p} is not an odd prime")));
    }
    let n = p - 1;
    let rows = (0..n)
        .map(|i| (0..n).map(|j| (i + 1) * (j + 1) % p - 1).collect())
        .collect();
    let rect = FlorentineRect::new(n, rows, Construction::PrimeVatican, p)?;
    let rect = verified(rect, "vatican_from_prime")?;
    if !super::is_latin(&rect) {
        return Err(Error::param(format!("table of Z_{p} is not Latin")));
    }
    Ok(rect)
}

/// Rows `1..p` of the multiplication table of `Z_n`, where `p` is the
/// smallest prime factor of `n`. Row `i` is `j -> (i+1)j mod n`.
pub fn florentine_mult_table(n: usize) -> Result<FlorentineRect> {
    if n < 2 {
        return Err(Error::param("order must be at least 2"));
    }
    let p = smallest_prime_factor(n);
    let rows = (1..p)
        .map(|r| (0..n).map(|j| r * j % n).collect())
        .collect();
    let rect = FlorentineRect::new(n, rows, Construction::MultiplicationTable, n)?;
    verified(rect, "florentine_mult_table")
}

fn even_half(n: usize, forbidden_residue: usize) -> Result<usize> {
    if n < 4 || !n.is_multiple_of(2) {
        return Err(Error::param(format!("{n} is not an even order >= 4")));
    }
    let m = n / 2;
    if m % 3 == forbidden_residue {
        return Err(Error::param(format!(
            "half order {m} is {forbidden_residue} mod 3"
        )));
    }
    Ok(m)
}

/// Builds a 1-indexed row over `1..=n` from its first half; the second half
/// is `(n+1) - A[n+1-j]`.
fn reflected_row(n: usize, first_half: impl Fn(usize) -> usize) -> Vec<usize> {
    let m = n / 2;
    let mut row = vec![0; n + 1];
    for (j, slot) in row.iter_mut().enumerate().take(m + 1).skip(1) {
        *slot = first_half(j);
    }
    for j in m + 1..=n {
        row[j] = (n + 1) - row[n + 1 - j];
    }
    row
}

/// Assembles the four rows `A0, A1, rev(A1), rev(A0)` and shifts the
/// 1-indexed symbols down to `0..n`.
fn four_rows(n: usize, row0: Vec<usize>, row1: Vec<usize>) -> Vec<Vec<usize>> {
    let row2: Vec<usize> = (0..=n)
        .map(|j| if j == 0 { 0 } else { row1[n + 1 - j] })
        .collect();
    let row3: Vec<usize> = (0..=n)
        .map(|j| if j == 0 { 0 } else { row0[n + 1 - j] })
        .collect();
    [row0, row1, row2, row3]
        .into_iter()
        .map(|r| r[1..].iter().map(|&s| s - 1).collect())
        .collect()
}

/// Four-row rectangle for `n = 2m`, `m` not 1 mod 3, from the doubling
/// map modulo `n+1`. Column `j` here is column `j+1` of the 1-indexed form.
pub fn florentine_even_a(n: usize) -> Result<FlorentineRect> {
    even_half(n, 1)?;
    let modulus = n + 1;
    let row0 = reflected_row(n, |j| j % modulus);
    let row1 = reflected_row(n, |j| 2 * j % modulus);
    let rect = FlorentineRect::new(
        n,
        four_rows(n, row0, row1),
        Construction::EvenDoubling,
        modulus,
    )?;
    verified(rect, "florentine_even_a")
}

/// Four-row rectangle for `n = 2m`, `m` not 0 mod 3, using the shifted
/// doubling `1 + ((2(j-1) + m - 1) mod n)` for the first half of row 1.
pub fn florentine_even_b(n: usize) -> Result<FlorentineRect> {
    let m = even_half(n, 0)?;
    let row0 = reflected_row(n, |j| j);
    let row1 = reflected_row(n, |j| 1 + (2 * (j - 1) + m - 1) % n);
    let rect = FlorentineRect::new(
        n,
        four_rows(n, row0, row1),
        Construction::EvenShiftedDoubling,
        n,
    )?;
    verified(rect, "florentine_even_b")
}

/// The four-row construction for an even order, preferring the doubling
/// variant when both apply.
fn even_four_row(n: usize) -> Result<FlorentineRect> {
    if (n / 2) % 3 != 1 {
        florentine_even_a(n)
    } else {
        florentine_even_b(n)
    }
}

/// Four-row rectangle for odd `n >= 5`: the even construction of order
/// `n-1` with a last column holding the new largest symbol `n-1`.
pub fn florentine_odd(n: usize) -> Result<FlorentineRect> {
    if n < 5 || n.is_multiple_of(2) {
        return Err(Error::param(format!("{n} is not an odd order >= 5")));
    }
    let base = even_four_row(n - 1)?;
    let modulus = base.source_modulus();
    let rows = base
        .into_rows()
        .into_iter()
        .map(|mut r| {
            r.push(n - 1);
            r
        })
        .collect();
    let rect = FlorentineRect::new(n, rows, Construction::OddExtension, modulus)?;
    verified(rect, "florentine_odd")
}

/// The four-row construction appropriate to the parity of `n >= 4`.
pub fn four_row_florentine(n: usize) -> Result<FlorentineRect> {
    match n {
        0..=3 => Err(Error::param(format!(
            "no four-row construction for order {n}"
        ))),
        _ if n.is_multiple_of(2) => even_four_row(n),
        _ => florentine_odd(n),
    }
}

/// Removes the all-zero column and subtracts one from every other entry,
/// turning a rectangle over `n+1` symbols into one over `n`.
pub fn strip_and_shift(rect: &FlorentineRect) -> Result<FlorentineRect> {
    let n = rect.n();
    let col = (0..n)
        .find(|&c| rect.rows().iter().all(|r| r[c] == 0))
        .ok_or_else(|| Error::param("rectangle has no all-zero column"))?;
    if n < 2 {
        return Err(Error::param("cannot strip a single-column rectangle"));
    }
    let rows = rect
        .rows()
        .iter()
        .map(|r| {
            r.iter()
                .enumerate()
                .filter(|&(c, _)| c != col)
                .map(|(_, &s)| s.checked_sub(1))
                .collect::<Option<Vec<_>>>()
                .ok_or_else(|| Error::param("zero symbol outside the stripped column"))
        })
        .collect::<Result<Vec<_>>>()?;
    let out = FlorentineRect::new(n - 1, rows, rect.construction(), rect.source_modulus())?;
    verified(out, "strip_and_shift")
}

/// The selection rule that produced a plan.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Rule {
    /// `n + 1` is prime: full Vatican square.
    PrimeSuccessor,
    /// `n` is prime: multiplication table of `Z_n`.
    PrimeOrder,
    /// Multiplication table over `n` or `n + 1`, whichever has the larger
    /// smallest prime factor (at least 5).
    SmallestFactor,
    /// Four-row construction.
    FourRow,
}

/// How to build the rectangle chosen for an order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Method {
    VaticanFromPrime { p: usize },
    PrimeWithZeroColumn { p: usize },
    MultTable { modulus: usize },
    MultTableStripped { modulus: usize },
    EvenA,
    EvenB,
    Odd,
}

/// The systematic construction selected for order `n`, and its row count `F(n)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct FlorentinePlan {
    pub n: usize,
    pub rule: Rule,
    pub method: Method,
    pub rows: usize,
}

impl FlorentinePlan {
    pub fn needs_strip(&self) -> bool {
        matches!(self.method, Method::MultTableStripped { .. })
    }

    pub fn build(&self) -> Result<FlorentineRect> {
        match self.method {
            Method::VaticanFromPrime { p } => vatican_from_prime(p),
            Method::PrimeWithZeroColumn { p } => {
                let sq = vatican_from_prime(p)?;
                let rows = sq
                    .rows()
                    .iter()
                    .map(|r| std::iter::once(0).chain(r.iter().map(|&s| s + 1)).collect())
                    .collect();
                let rect = FlorentineRect::new(p, rows, Construction::PrimeVatican, p)?;
                verified(rect, "prime_with_zero_column")
            }
            Method::MultTable { modulus } => florentine_mult_table(modulus),
            Method::MultTableStripped { modulus } => {
                strip_and_shift(&florentine_mult_table(modulus)?)
            }
            Method::EvenA => florentine_even_a(self.n),
            Method::EvenB => florentine_even_b(self.n),
            Method::Odd => florentine_odd(self.n),
        }
    }
}

/// Every applicable systematic construction for order `n`, in rule order.
fn candidates(n: usize) -> Vec<FlorentinePlan> {
    let plan = |rule, method, rows| FlorentinePlan {
        n,
        rule,
        method,
        rows,
    };
    let mut out = Vec::new();
    if is_prime(n + 1) {
        out.push(plan(
            Rule::PrimeSuccessor,
            Method::VaticanFromPrime { p: n + 1 },
            n,
        ));
    }
    if n >= 3 && is_prime(n) {
        out.push(plan(
            Rule::PrimeOrder,
            Method::PrimeWithZeroColumn { p: n },
            n - 1,
        ));
    }
    let p0 = smallest_prime_factor(n);
    let e0 = smallest_prime_factor(n + 1);
    if p0.max(e0) >= 5 {
        if p0 > e0 {
            out.push(plan(
                Rule::SmallestFactor,
                Method::MultTable { modulus: n },
                p0 - 1,
            ));
        } else {
            out.push(plan(
                Rule::SmallestFactor,
                Method::MultTableStripped { modulus: n + 1 },
                e0 - 1,
            ));
        }
    }
    if n >= 4 {
        let method = if n % 2 == 1 {
            Method::Odd
        } else if (n / 2) % 3 != 1 {
            Method::EvenA
        } else {
            Method::EvenB
        };
        out.push(plan(Rule::FourRow, method, 4));
    }
    out
}

/// Chooses the construction with the most rows. Ties go first to
/// constructions that need no column stripping, then to rule order.
pub fn plan_florentine(n: usize) -> Result<FlorentinePlan> {
    if n < 2 {
        return Err(Error::param("order must be at least 2"));
    }
    let all = candidates(n);
    let mut best = all[0];
    for c in &all[1..] {
        let better =
            c.rows > best.rows || (c.rows == best.rows && best.needs_strip() && !c.needs_strip());
        if better {
            best = *c;
        }
    }
    Ok(best)
}

/// The largest systematically constructible Florentine rectangle of order
/// `n`, and its rows as a permutation family. Its row count is `F(n)`.
pub fn best_florentine(n: usize) -> Result<(FlorentineRect, PermutationFamily)> {
    let plan = plan_florentine(n)?;
    let rect = plan.build()?;
    if rect.row_count() != plan.rows || rect.n() != n {
        return Err(Error::param(format!(
            "plan for order {n} promised {} rows, built {}x{}",
            plan.rows,
            rect.row_count(),
            rect.n()
        )));
    }
    let family = PermutationFamily::from_checked_rect(&rect);
    Ok((rect, family))
}
