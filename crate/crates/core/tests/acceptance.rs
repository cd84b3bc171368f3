//! Acceptance run: one PASS/FAIL line per criterion, non-zero exit if any fails.

mod common;

use std::process::ExitCode;
use std::time::Instant;

use common::{pair_uniqueness_oracle, tuscan_oracle, CODE_2, CODE_3, PERMS_10};
use florentine_qcss::bounds::{asymptotic_rho, optimality_factor, Branch};
use florentine_qcss::correlation::{delta_max, Backend};
use florentine_qcss::fixtures::{row_count_range, RHO_TOLERANCE};
use florentine_qcss::florentine::{
    best_florentine, is_tuscan_k, max_florentine_search, SearchStatus,
};
use florentine_qcss::seqgen::{build_ccc, build_qcss};
use florentine_qcss::tables::{
    even_asymptotic_table, even_near_optimal_table, DeltaSource, TableConfig,
};
use florentine_qcss::verify::{verify_family, FamilyVerification};

type Outcome = Result<String, String>;

const AUDITED: [usize; 8] = [2, 3, 4, 5, 6, 7, 10, 12];

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn golden_permutations() -> Outcome {
    let (_, family) = best_florentine(10).map_err(|e| e.to_string())?;
    ensure(family.f_value() == 10, || {
        format!("F(10) = {}", family.f_value())
    })?;
    for (k, expected) in PERMS_10.iter().enumerate() {
        let got = family.perm(k).unwrap_or_default();
        ensure(got == expected, || format!("permutation {k}: {got:?}"))?;
    }
    Ok("100/100 entries match".into())
}

fn golden_codes() -> Outcome {
    let (_, family) = best_florentine(10).map_err(|e| e.to_string())?;
    let mut digits = 0;
    for (k, table) in [(2, &CODE_2), (3, &CODE_3)] {
        let code = build_ccc(&family, k).map_err(|e| e.to_string())?;
        for (m, set) in code.sets.iter().enumerate() {
            for (s, line) in set.render().lines().enumerate() {
                ensure(line == table[m][s], || {
                    format!("code {k}, set {m}, row {s}: {line} != {}", table[m][s])
                })?;
                digits += line.len();
            }
        }
    }
    ensure(digits == 2000, || format!("compared {digits} digits"))?;
    Ok("2 codes, 2000 exponents match".into())
}

fn audits() -> Result<Vec<FamilyVerification>, String> {
    AUDITED
        .iter()
        .map(|&n| {
            best_florentine(n)
                .map(|(_, f)| verify_family(&f))
                .map_err(|e| e.to_string())
        })
        .collect()
}

fn within_code(audits: &[FamilyVerification]) -> Outcome {
    let mut checked = 0;
    for v in audits {
        ensure(v.complete_complementary(), || {
            format!(
                "n={}: {} failures, first {:?}",
                v.n,
                v.within_failure_count,
                v.within_failures.first()
            )
        })?;
        let peaks = (v.f_value * v.n) as u64;
        ensure(v.within_peaks == peaks, || {
            format!("n={}: {} peaks, expected {peaks}", v.n, v.within_peaks)
        })?;
        checked += v.within_checked;
    }
    Ok(format!("{checked} within-code correlations exact"))
}

fn cross_code(audits: &[FamilyVerification]) -> Outcome {
    let mut checked = 0;
    for v in audits {
        ensure(v.inter_bounded(), || {
            format!(
                "n={}: {} values neither 0 nor N, first {:?}",
                v.n,
                v.inter_failure_count,
                v.inter_failures.first()
            )
        })?;
        let n = v.n as f64;
        ensure(v.delta_max == n, || {
            format!("n={}: delta_max {}", v.n, v.delta_max)
        })?;
        let (_, family) = best_florentine(v.n).map_err(|e| e.to_string())?;
        let scanned = delta_max(&build_qcss(&family), Backend::Exact).delta_max;
        ensure(scanned == n, || {
            format!("n={}: scanned delta_max {scanned}", v.n)
        })?;
        checked += v.inter_checked;
    }
    Ok(format!(
        "{checked} cross-code correlations in {{0, N}}, delta_max = N"
    ))
}

fn even_asymptotic() -> Outcome {
    let cfg = TableConfig {
        scan_cap: 22,
        backend: Backend::Float,
    };
    let table = even_asymptotic_table(&cfg).map_err(|e| e.to_string())?;
    let mut scanned = 0;
    for row in &table.rows {
        let want_scan = row.n <= 22;
        let is_scan = matches!(row.source, DeltaSource::Scan(_));
        ensure(want_scan == is_scan, || {
            format!("{}: delta source {}", row.alphabet, row.source)
        })?;
        scanned += usize::from(is_scan);
        ensure(row.k == row.expected_k, || {
            format!("{}: K = {}", row.alphabet, row.k)
        })?;
        ensure((row.rho - row.expected_rho).abs() <= RHO_TOLERANCE, || {
            format!(
                "{}: rho {:.6} vs {}",
                row.alphabet, row.rho, row.expected_rho
            )
        })?;
    }
    Ok(format!(
        "{} rows ({scanned} scanned) within {RHO_TOLERANCE:e}",
        table.rows.len()
    ))
}

fn four_generator() -> Outcome {
    let table = even_near_optimal_table(&TableConfig::default()).map_err(|e| e.to_string())?;
    for row in &table.rows {
        ensure((row.rho - 1.5382).abs() <= RHO_TOLERANCE, || {
            format!("{}: rho {:.6}", row.alphabet, row.rho)
        })?;
    }
    let flagged: Vec<&str> = table
        .rows
        .iter()
        .filter(|r| {
            r.note
                .as_deref()
                .is_some_and(|n| n.contains("inconsistent"))
        })
        .map(|r| r.alphabet.as_str())
        .collect();
    ensure(flagged == ["Z_36"], || format!("flagged rows {flagged:?}"))?;
    Ok(format!("{} rows at 1.5382, Z_36 flagged", table.rows.len()))
}

fn welch_branch() -> Outcome {
    let mut detail = Vec::new();
    let mut failures = Vec::new();
    for (n, params, expected) in [(2, (4, 2, 2), 1.6584), (3, (6, 3, 3), 1.7950)] {
        let (_, family) = best_florentine(n).map_err(|e| e.to_string())?;
        let q = build_qcss(&family);
        ensure(q.params() == params, || {
            format!("n={n}: parameters {:?}", q.params())
        })?;
        let delta = delta_max(&q, Backend::Exact).delta_max;
        let report =
            optimality_factor(params.0, params.1, params.2, delta).map_err(|e| e.to_string())?;
        ensure(report.branch == Branch::Welch, || {
            format!("n={n}: Liu branch")
        })?;
        let line = format!(
            "{params:?}: delta {delta}, rho {:.6} vs {expected}",
            report.rho
        );
        if (report.rho - expected).abs() > RHO_TOLERANCE {
            failures.push(format!(
                "{line} (off by {:.1e})",
                (report.rho - expected).abs()
            ));
        }
        detail.push(line);
    }
    if failures.is_empty() {
        Ok(detail.join("; "))
    } else {
        Err(failures.join("; "))
    }
}

fn construction_sweep() -> Outcome {
    for n in 2..=64 {
        let (rect, family) = best_florentine(n).map_err(|e| e.to_string())?;
        ensure(is_tuscan_k(&rect, n - 1), || {
            format!("n={n}: not Florentine")
        })?;
        ensure(tuscan_oracle(rect.rows(), n, n - 1), || {
            format!("n={n}: oracle rejects")
        })?;
        ensure(family.satisfies_pair_uniqueness(), || {
            format!("n={n}: pair collision")
        })?;
        ensure(pair_uniqueness_oracle(family.perms()), || {
            format!("n={n}: oracle finds pair collision")
        })?;
        if let Some(range) = row_count_range(n) {
            ensure(family.f_value() <= range.hi, || {
                format!("n={n}: F = {} above {}", family.f_value(), range.describe())
            })?;
        }
    }
    Ok("n = 2..=64 Florentine, pair-unique, within row-count fixture".into())
}

fn search_oracle() -> Outcome {
    let mut found = Vec::new();
    for n in 2..=5 {
        let out = max_florentine_search(n, n, None).map_err(|e| e.to_string())?;
        let range = row_count_range(n).ok_or("missing fixture")?;
        ensure(out.status == SearchStatus::ProvenMaximum, || {
            format!("n={n}: status {:?}", out.status)
        })?;
        ensure(range.lo == range.hi && out.rows == range.hi, || {
            format!("n={n}: {} rows vs {}", out.rows, range.describe())
        })?;
        found.push(format!("F({n})={}", out.rows));
    }
    Ok(found.join(", "))
}

fn asymptotics() -> Outcome {
    let mut prev = f64::INFINITY;
    let mut samples = 0;
    let mut last_f = 0;
    for i in 0..=400 {
        let f = (4.0 * 250_000f64.powf(i as f64 / 400.0)).round() as u64;
        if f == last_f {
            continue;
        }
        let rho = asymptotic_rho(f).map_err(|e| e.to_string())?;
        ensure(rho < prev, || format!("not decreasing at F={f}"))?;
        prev = rho;
        last_f = f;
        samples += 1;
    }
    let tail = asymptotic_rho(100_000_000).map_err(|e| e.to_string())?;
    ensure(tail < 1.0001, || format!("rho(1e8) = {tail}"))?;
    Ok(format!(
        "{samples} samples decreasing, rho(1e8) = {tail:.7}"
    ))
}

fn backend_agreement(audits: &[FamilyVerification]) -> Outcome {
    let mut worst = 0.0f64;
    for v in audits {
        ensure(v.backends_agree(), || {
            format!(
                "n={}: {} zero/non-zero disagreements, max error {:e}",
                v.n, v.backend_disagreement_count, v.max_magnitude_error
            )
        })?;
        worst = worst.max(v.max_magnitude_error / (v.n * v.n) as f64);
    }
    Ok(format!(
        "max relative magnitude error {worst:.1e} (limit 1e-8)"
    ))
}

fn main() -> ExitCode {
    let started = Instant::now();
    let audit = audits();
    let with_audit = |f: fn(&[FamilyVerification]) -> Outcome| -> Outcome {
        audit.as_ref().map_err(Clone::clone).and_then(|a| f(a))
    };
    let results: Vec<(&str, Outcome)> = vec![
        ("golden permutations, order 10", golden_permutations()),
        ("golden codes 2 and 3, order 10", golden_codes()),
        ("within-code correlations exact", with_audit(within_code)),
        ("cross-code magnitudes 0 or N", with_audit(cross_code)),
        ("asymptotically optimal even orders", even_asymptotic()),
        ("four-generator rows at 1.5382", four_generator()),
        ("Welch-branch optimality factors", welch_branch()),
        ("construction sweep n <= 64", construction_sweep()),
        ("exhaustive search n = 2..5", search_oracle()),
        ("asymptotic optimality factor", asymptotics()),
        (
            "float and exact backends agree",
            with_audit(backend_agreement),
        ),
    ];
    let mut failed = 0;
    for (i, (name, outcome)) in results.iter().enumerate() {
        match outcome {
            Ok(detail) => println!("PASS {:>2} {name}: {detail}", i + 1),
            Err(why) => {
                failed += 1;
                println!("FAIL {:>2} {name}: {why}", i + 1);
            }
        }
    }
    println!(
        "acceptance: {} passed, {failed} failed in {:.2?}",
        results.len() - failed,
        started.elapsed()
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
