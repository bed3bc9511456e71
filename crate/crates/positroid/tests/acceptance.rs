//! Acceptance run: one PASS/FAIL line per criterion. Criteria 1 to 10 gate
//! the exit status; criterion 11 only reports what it observed.

use std::collections::BTreeSet;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use positroid::json::{CheckReport, Status};
use positroid::verify::{self, VerifyConfig};
use positroid_core::decperm::DecoratedPermutation;
use positroid_core::Result;

struct Outcome {
    failures: Vec<String>,
    findings: Vec<String>,
    checks: usize,
    observed: Vec<String>,
}

impl Outcome {
    fn from_reports(reports: &[CheckReport]) -> Self {
        let describe = |r: &CheckReport| {
            format!(
                "{} {}: {}",
                r.check,
                r.parameters,
                r.first_discrepancy.as_deref().unwrap_or("")
            )
        };
        Self {
            failures: reports
                .iter()
                .filter(|r| r.failed())
                .map(describe)
                .collect(),
            findings: reports
                .iter()
                .filter(|r| r.status == Status::Finding)
                .map(describe)
                .collect(),
            checks: reports.len(),
            observed: reports
                .iter()
                .filter(|r| r.status == Status::Pass)
                .map(|r| format!("holds: {} {}", r.check, r.parameters))
                .collect(),
        }
    }
}

struct Criterion {
    id: u8,
    title: &'static str,
    budget: Duration,
    blocking: bool,
    run: fn() -> Result<Vec<CheckReport>>,
}

fn select(reports: Vec<CheckReport>, keep: impl Fn(&CheckReport) -> bool) -> Vec<CheckReport> {
    reports.into_iter().filter(keep).collect()
}

fn worked_example() -> Result<Vec<CheckReport>> {
    let p: DecoratedPermutation = "3,1,5,4,8,6,7,2 ccw=4,7 cw=6".parse()?;
    // Chords written as (i π(i)) in one-line notation.
    let listed = [
        (13, 66),
        (21, 35),
        (21, 44),
        (21, 58),
        (21, 77),
        (35, 44),
        (35, 66),
        (44, 66),
        (58, 77),
        (66, 77),
        (66, 82),
    ];
    let want: BTreeSet<(usize, usize)> = listed
        .iter()
        .map(|&(a, b)| (a / 10 - 1, b / 10 - 1))
        .collect();
    let got: BTreeSet<(usize, usize)> = p.alignment_pairs().into_iter().collect();
    let chords_ok = listed
        .iter()
        .all(|&(a, b)| p.target(a / 10 - 1) + 1 == a % 10 && p.target(b / 10 - 1) + 1 == b % 10);
    let bad = (p.k_stat() != 5 || p.alignments() != 11 || got != want || !chords_ok).then(|| {
        format!(
            "K = {}, A = {}, pairs {:?}",
            p.k_stat(),
            p.alignments(),
            got
        )
    });
    Ok(vec![CheckReport::new(
        "worked example",
        serde_json::json!({"permutation": p.to_string()}),
        bad,
    )])
}

const CRITERIA: [Criterion; 11] = [
    Criterion {
        id: 1,
        title: "published tables reproduced exactly (9 A_kn + 22 Ehat_kn)",
        budget: Duration::from_secs(1),
        blocking: true,
        run: verify::tables,
    },
    Criterion {
        id: 2,
        title: "Le-diagram = decorated permutation = closed form, k <= n <= 8",
        budget: Duration::from_secs(120),
        blocking: true,
        run: || {
            Ok(select(verify::oracles(8)?, |r| {
                r.check.starts_with("A_kn oracles")
            }))
        },
    },
    Criterion {
        id: 3,
        title: "worked example: K = 5, A = 11, the 11 listed alignment pairs",
        budget: Duration::from_secs(1),
        blocking: true,
        run: worked_example,
    },
    Criterion {
        id: 4,
        title: "A_kn(-1) = 1 for 1 <= k <= n <= 12",
        budget: Duration::from_secs(1),
        blocking: true,
        run: || {
            Ok(select(verify::oracles(0)?, |r| {
                r.check.starts_with("A_kn(-1)")
            }))
        },
    },
    Criterion {
        id: 5,
        title: "q-Eulerian properties for n <= 12, E_kn enumeration for n <= 9",
        budget: Duration::from_secs(120),
        blocking: true,
        run: || {
            Ok(select(verify::oracles(8)?, |r| {
                r.check.starts_with("q-Eulerian")
                    || r.check.starts_with("E_kn")
                    || r.check.starts_with("excedence")
            }))
        },
    },
    Criterion {
        id: 6,
        title:
            "identity chain: product/partial fractions, partition lemma, telescoping, beta samples",
        budget: Duration::from_secs(60),
        blocking: true,
        run: || {
            let reports = verify::identities(&VerifyConfig::default())?;
            Ok(select(reports, |r| !r.check.contains("coefficients")))
        },
    },
    Criterion {
        id: 7,
        title: "master series coefficients, n <= 8; A_k(q,x) coefficients, k <= 5, n <= 10",
        budget: Duration::from_secs(60),
        blocking: true,
        run: verify::master_series_checks,
    },
    Criterion {
        id: 8,
        title: "CB_kn structure for n <= 6",
        budget: Duration::from_secs(120),
        blocking: true,
        run: || verify::poset(6),
    },
    Criterion {
        id: 9,
        title: "max-alignment counts (n <= 9) and noncrossing round trips (n <= 8)",
        budget: Duration::from_secs(120),
        blocking: true,
        run: || verify::bijection_checks(9),
    },
    Criterion {
        id: 10,
        title: "[x^k] M_n(x) = A_kn(1) for n <= 10",
        budget: Duration::from_secs(30),
        blocking: true,
        run: || verify::permanent(10),
    },
    Criterion {
        id: 11,
        title: "empirical statements for n <= 9 (non-blocking)",
        budget: Duration::from_secs(120),
        blocking: false,
        run: || verify::empirical(9),
    },
];

fn main() -> ExitCode {
    let mut failed = false;
    for c in &CRITERIA {
        let start = Instant::now();
        let result = (c.run)();
        let elapsed = start.elapsed();
        let (ok, detail) = match result {
            Err(e) => (false, vec![format!("error: {e}")]),
            Ok(reports) => {
                let o = Outcome::from_reports(&reports);
                let mut detail = o.failures.clone();
                detail.extend(o.findings.iter().map(|f| format!("finding: {f}")));
                if !c.blocking {
                    detail.extend(o.observed);
                }
                (o.failures.is_empty() && o.checks > 0, detail)
            }
        };
        let in_budget = elapsed <= c.budget;
        let pass = ok && in_budget;
        let label = if pass {
            "PASS"
        } else if c.blocking {
            "FAIL"
        } else {
            "FAIL (non-blocking)"
        };
        println!(
            "criterion {:>2}: {label} - {} [{:.2}s, budget {}s]",
            c.id,
            c.title,
            elapsed.as_secs_f64(),
            c.budget.as_secs()
        );
        if !in_budget {
            println!("    over the time budget");
        }
        for d in detail {
            println!("    {d}");
        }
        failed |= c.blocking && !pass;
    }
    if failed {
        ExitCode::FAILURE
    } else {
        ExitCode::SUCCESS
    }
}
