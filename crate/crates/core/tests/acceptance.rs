//! Acceptance run: one PASS/FAIL line per criterion. The process fails only
//! when a criterion misses for a reason other than the known deviations
//! noted on its line.

use std::process::ExitCode;
use std::time::Instant;

use num_bigint::BigInt;

use eulersum::euler_sums::{brute_lhs, closed_rhs, find, verify_identity, ParamPoint};
use eulersum::exact::{stirling1, verify_harmonic_convolutions, verify_stirling_closed_forms, verify_stirling_sums};
use eulersum::precision::make_context;
use eulersum::residues::{
    even_weight_ledger, expand_kernel, loglog_slope, residue_sum_check, truncation_errors, KernelKind, DEFAULT_RADII,
};
use eulersum::special::riemann_zeta;
use eulersum::suite::{run_suite, Selection, SuiteConfig};
use eulersum::{Mp, Real};

enum Verdict {
    Pass(String),
    /// Misses the criterion for a documented reason.
    Known(String),
    Fail(String),
}

fn pt(text: &str) -> ParamPoint {
    text.parse().expect("valid point")
}

fn exact_combinatorics() -> Verdict {
    let start = Instant::now();
    for n in 1..=30usize {
        // n!(1 + x)(1 + x/2)…(1 + x/n) = Π (j + x)
        let mut poly = vec![BigInt::from(1)];
        for j in 1..=n {
            let mut next = vec![BigInt::from(0); poly.len() + 1];
            for (k, c) in poly.iter().enumerate() {
                next[k] += c * j;
                next[k + 1] += c;
            }
            poly = next;
        }
        for (k, c) in poly.iter().enumerate() {
            if BigInt::from(stirling1(n + 1, k + 1)) != *c {
                return Verdict::Fail(format!("generating polynomial n={n} k={k}"));
            }
        }
        if !verify_stirling_closed_forms(n).unwrap() || !verify_harmonic_convolutions(n).unwrap() {
            return Verdict::Fail(format!("closed forms at n={n}"));
        }
        for p in 1..=6 {
            if !verify_stirling_sums(n, p).unwrap() {
                return Verdict::Fail(format!("Stirling sums at n={n} p={p}"));
            }
        }
    }
    let secs = start.elapsed().as_secs_f64();
    if secs < 10.0 {
        Verdict::Pass(format!("all exact for n ≤ 30, p ≤ 6 in {secs:.2} s"))
    } else {
        Verdict::Fail(format!("exact but took {secs:.1} s"))
    }
}

fn classical_anchors() -> Verdict {
    let ctx = make_context(50).unwrap();
    let z = |k: i64| riemann_zeta::<Mp>(k, &ctx, false).unwrap();
    let tol = 1e-40;
    let z2 = z(2);
    let z4 = z(4);
    let quad = (Real::square(&z2) - z4.clone() * ctx.ratio::<Mp>(5, 2)).abs().to_f64();
    let closed = (z4 * ctx.num::<Mp>(5) - Real::square(&z2)) / ctx.num::<Mp>(2);
    let h3 = brute_lhs::<Mp>("EH.s", &pt("s=3"), &ctx).unwrap().value;
    let cubic = (h3 - closed).abs().to_f64();
    let shifted = brute_lhs::<Mp>("E2.24", &pt("a=1,s=2"), &ctx).unwrap().value;
    let reindexed = (shifted - z(3)).abs().to_f64();
    let detail = format!("{quad:.1e}, {cubic:.1e}, {reindexed:.1e}");
    if quad < tol && cubic < tol && reindexed < tol {
        Verdict::Pass(format!("residuals {detail}"))
    } else {
        Verdict::Fail(format!("residuals {detail}"))
    }
}

fn full_sweep() -> Verdict {
    let mut config = SuiteConfig::new(Selection::All, 40);
    config.workers = std::thread::available_parallelism().map_or(1, |n| n.get());
    let report_path = std::path::Path::new(env!("CARGO_TARGET_TMPDIR")).join("acceptance_sweep.json");
    config.output_path = Some(report_path.clone());
    let report = run_suite(&config).unwrap();
    let s = &report.summary;
    let secs = s.total_ms as f64 / 1000.0;
    let failing: Vec<_> = report.results.iter().filter(|r| !r.pass).collect();
    let mut ids: Vec<&str> = failing.iter().map(|r| r.id.as_str()).collect();
    ids.dedup();
    let counts: Vec<String> = ids
        .iter()
        .map(|id| {
            let total = report.results.iter().filter(|r| r.id == *id).count();
            let bad = failing.iter().filter(|r| r.id == *id).count();
            format!("{id} {bad}/{total}")
        })
        .collect();
    let amended = failing.iter().all(|r| r.error.is_none() && r.amended.as_ref().is_some_and(|a| a.pass));
    let line = format!(
        "{}/{} records pass in {secs:.1} s; report {}",
        s.passed,
        s.total,
        report_path.display()
    );
    if secs >= 300.0 {
        Verdict::Fail(format!("{line}; over the 5 minute budget"))
    } else if failing.is_empty() {
        Verdict::Pass(line)
    } else if amended {
        Verdict::Known(format!(
            "{line}; suspected typos as printed: {} (amended forms pass at every failing point)",
            counts.join(", ")
        ))
    } else {
        Verdict::Fail(format!("{line}; failing: {}", counts.join(", ")))
    }
}

fn expansion_slopes() -> Verdict {
    let ctx = make_context(40).unwrap();
    let mut rows = 0;
    let mut misses = Vec::new();
    let mut unexplained = false;
    for kind in KernelKind::ALL {
        for n in [0, 1, 2, 5] {
            if n < kind.min_n() {
                continue;
            }
            let orders: &[u32] = if kind.uses_order() { &[2, 3] } else { &[0] };
            for &p in orders {
                let exp = expand_kernel::<Mp>(kind, n, p, 6, &ctx).unwrap();
                let errs: Vec<f64> = truncation_errors(&exp, &DEFAULT_RADII, &ctx)
                    .unwrap()
                    .iter()
                    .map(|e| e.to_f64())
                    .collect();
                let slope = loglog_slope(&DEFAULT_RADII, &errs);
                rows += 1;
                if (slope - 7.0).abs() >= 0.2 {
                    misses.push(format!("{kind} n={n} p={p} slope {slope:.2}"));
                    // The t^7 coefficient 8(ζ(9) − ζ_n(9)) is tiny here, so t^8 dominates.
                    let cancelling = kind == KernelKind::PolygammaPos && n >= 1 && p == 2;
                    unexplained |= !cancelling || (slope - 8.0).abs() >= 0.2;
                }
            }
        }
    }
    if misses.is_empty() {
        Verdict::Pass(format!("{rows} rows within 7 ± 0.2"))
    } else if !unexplained {
        Verdict::Known(format!(
            "{}/{rows} rows within 7 ± 0.2; off: {} (near-vanishing t^7 coefficient, slope ≈ 8)",
            rows - misses.len(),
            misses.join("; ")
        ))
    } else {
        Verdict::Fail(format!("off: {}", misses.join("; ")))
    }
}

fn residue_vanishing() -> Verdict {
    let ctx = make_context(30).unwrap();
    let mut parts = Vec::new();
    let mut ok = true;
    for (num, den, m) in [(3, 10, 1), (1, 4, 2), (-2, 5, 1)] {
        let start = Instant::now();
        let a: Mp = ctx.ratio(num, den);
        let ledger = even_weight_ledger(&a, m, 10_000, &ctx).unwrap();
        let fine = residue_sum_check(&ledger).to_f64();
        let coarse = ledger.truncated_total(1_000).abs().to_f64();
        let secs = start.elapsed().as_secs_f64();
        ok &= fine < 1e-6 && fine < coarse && secs < 60.0;
        parts.push(format!("a={num}/{den} m={m}: {fine:.1e} (N=10³ {coarse:.1e}, {secs:.1} s)"));
    }
    let line = parts.join("; ");
    if ok {
        Verdict::Pass(line)
    } else {
        Verdict::Fail(line)
    }
}

fn quadrature_identity() -> Verdict {
    let ctx = make_context(40).unwrap();
    let entry = find::<Mp>("E4.4").unwrap();
    let mut worst = 0f64;
    let mut count = 0;
    for m in 1..=3 {
        for n in 1..=5 {
            for a in ["0", "1/2"] {
                for b in ["0", "1/2"] {
                    for x in ["1/4", "3/4"] {
                        let p = pt(&format!("a={a},b={b},x={x},m={m},n_small={n}"));
                        match verify_identity(&entry, &p, &ctx) {
                            Ok(r) => worst = worst.max(r.residual.to_f64()),
                            Err(e) => return Verdict::Fail(format!("{p}: {e}")),
                        }
                        count += 1;
                    }
                }
            }
        }
    }
    let line = format!("{count} points, worst residual {worst:.1e}");
    if worst < 1e-30 {
        Verdict::Pass(line)
    } else {
        Verdict::Fail(line)
    }
}

fn continuity_limits() -> Verdict {
    let ctx = make_context(40).unwrap();
    let mut worst = 0f64;
    for s in 2..=4 {
        for (id, at_zero) in [("E2.24", "E2.24"), ("E3.1", "E3.12"), ("E3.13", "E3.23")] {
            let near = pt(&format!("a=1e-6,s={s}"));
            let zero = if id == at_zero { pt(&format!("a=0,s={s}")) } else { pt(&format!("s={s}")) };
            let v0 = closed_rhs::<Mp>(at_zero, &zero, &ctx).unwrap().value;
            for v in [
                closed_rhs::<Mp>(id, &near, &ctx).unwrap().value,
                brute_lhs::<Mp>(id, &near, &ctx).unwrap().value,
            ] {
                worst = worst.max((v - &v0).abs().to_f64());
            }
        }
    }
    let line = format!("worst |f(10⁻⁶) − f(0)| = {worst:.1e}");
    if worst < 1e-4 {
        Verdict::Pass(line)
    } else {
        Verdict::Fail(line)
    }
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Verdict); 7] = [
        ("exact combinatorics", exact_combinatorics),
        ("classical anchors at 50 digits", classical_anchors),
        ("full registry sweep at 40 digits", full_sweep),
        ("kernel expansion slopes", expansion_slopes),
        ("residue sums vanish", residue_vanishing),
        ("quadrature identity", quadrature_identity),
        ("continuity at a = 10⁻⁶", continuity_limits),
    ];
    let mut unexpected = false;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let (status, detail) = match run() {
            Verdict::Pass(d) => ("PASS", d),
            Verdict::Known(d) => ("FAIL (known)", d),
            Verdict::Fail(d) => {
                unexpected = true;
                ("FAIL", d)
            }
        };
        println!("criterion {} {status}: {name}: {detail}", i + 1);
    }
    if unexpected {
        ExitCode::FAILURE
    } else {
        ExitCode::SUCCESS
    }
}
