//! Acceptance run: one line per criterion, nonzero exit if any fails.
//!
//! Set `ACCEPTANCE_ONLY=3,7` to run a subset.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use ambc_cells::{run_suite, EnumerationSpec, HarnessError, VerifyReport};
use ambc_core::Partition;

/// Sampling rate for the partitions of 5 in the sign-insertion criterion.
const SAMPLE_RATE_N5: f64 = 0.25;

struct Outcome {
    ok: bool,
    detail: String,
}

fn summarize(reports: &[VerifyReport]) -> Outcome {
    let instances: usize = reports.iter().map(|r| r.instances).sum();
    let failures: usize = reports.iter().map(|r| r.failure_count).sum();
    for r in reports.iter().filter(|r| !r.passed()) {
        eprint!("{r}");
    }
    Outcome { ok: failures == 0, detail: format!("{instances} checks, {failures} failures") }
}

fn suite(name: &str, n: usize, bound: i64) -> Result<VerifyReport, HarnessError> {
    run_suite(name, &EnumerationSpec::new(n, bound))
}

fn over_n(
    name: &str,
    ns: impl IntoIterator<Item = usize>,
    bound: impl Fn(usize) -> i64,
) -> Result<Vec<VerifyReport>, HarnessError> {
    ns.into_iter().map(|n| suite(name, n, bound(n))).collect()
}

fn within(mut o: Outcome, took: Duration, limit: Duration) -> Outcome {
    if took > limit {
        o.ok = false;
        o.detail += &format!(", over the {} s budget", limit.as_secs());
    }
    o
}

/// Failures of one named check across reports, `None` if it never ran.
fn check_failures(reports: &[VerifyReport], name: &str) -> Option<usize> {
    reports.iter().filter_map(|r| r.check_failures(name)).reduce(|a, b| a + b)
}

fn main() -> ExitCode {
    let only: Option<Vec<usize>> =
        std::env::var("ACCEPTANCE_ONLY").ok().map(|s| s.split(',').filter_map(|x| x.trim().parse().ok()).collect());
    let wanted = |k: usize| only.as_ref().is_none_or(|v| v.contains(&k));
    let mut all_ok = true;
    // Reports reused by the structural criterion.
    let mut roundtrip = Vec::new();
    let mut distances = Vec::new();

    for k in 1..=10 {
        if !wanted(k) {
            continue;
        }
        let start = Instant::now();
        let result: Result<Outcome, HarnessError> = (|| {
            Ok(match k {
                1 => within(summarize(&[suite("golden", 1, 0)?]), start.elapsed(), Duration::from_secs(1)),
                2 => {
                    roundtrip = over_n("roundtrip", 1..=5, |_| 2)?;
                    let mut o = summarize(&roundtrip);
                    o.ok = check_failures(&roundtrip, "phi-psi") == Some(0);
                    within(o, start.elapsed(), Duration::from_secs(120))
                }
                3 => within(summarize(&over_n("gk-oracle", 1..=5, |_| 2)?), start.elapsed(), Duration::from_secs(300)),
                4 => {
                    distances = over_n("distances", 1..=5, |_| 2)?;
                    let mut o = summarize(&distances);
                    o.ok = check_failures(&distances, "h-equals-rho-gap") == Some(0);
                    o
                }
                5 => {
                    // The improper-rotation checks dominate; n = 5 runs at B = 1.
                    let bound = |n| if n == 5 { 1 } else { 2 };
                    let mut reports = over_n("rho-theorem", 1..=5, bound)?;
                    reports.extend(over_n("nesw", 1..=5, bound)?);
                    summarize(&reports)
                }
                6 => {
                    let mut reports = over_n("blasiak", 1..=4, |_| 2)?;
                    for lambda in Partition::all(5) {
                        let spec = EnumerationSpec::new(5, 2).with_lambda(lambda).with_sample(SAMPLE_RATE_N5);
                        reports.push(run_suite("blasiak", &spec)?);
                    }
                    within(summarize(&reports), start.elapsed(), Duration::from_secs(600))
                }
                7 => summarize(&[suite("diamond", 4, 1)?]),
                8 => summarize(&over_n("upsilon", 1..=5, |_| 0)?),
                9 => {
                    let mut reports = over_n("theta", 1..=5, |_| 0)?;
                    reports.push(suite("braid", 6, 0)?);
                    if roundtrip.is_empty() {
                        roundtrip = over_n("roundtrip", 1..=4, |_| 2)?;
                    }
                    if distances.is_empty() {
                        distances = over_n("distances", 1..=4, |_| 2)?;
                    }
                    let mut o = summarize(&reports);
                    let monotone = check_failures(&distances, "numbering-monotone");
                    let scan = check_failures(&roundtrip, "scan-order");
                    o.detail +=
                        &format!(", numbering monotonicity failures {monotone:?}, scan-order failures {scan:?}");
                    o.ok &= monotone == Some(0) && scan == Some(0);
                    o
                }
                10 => {
                    within(summarize(&over_n("connectivity", 1..=4, |_| 3)?), start.elapsed(), Duration::from_secs(600))
                }
                _ => unreachable!(),
            })
        })();
        let outcome = result.unwrap_or_else(|e| Outcome { ok: false, detail: format!("error: {e}") });
        all_ok &= outcome.ok;
        println!(
            "criterion {k}: {} ({}; {:.1} s)",
            if outcome.ok { "PASS" } else { "FAIL" },
            outcome.detail,
            start.elapsed().as_secs_f64()
        );
    }
    if all_ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
