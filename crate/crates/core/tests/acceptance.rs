//! Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any failure.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use coxorbit::checks::{self, CheckResult};

struct Criterion {
    id: u32,
    name: &'static str,
    limit: Option<Duration>,
    run: fn() -> CheckResult,
}

fn all(parts: Vec<(String, CheckResult)>) -> CheckResult {
    let mut done = Vec::new();
    for (label, r) in parts {
        match r {
            Ok(s) => done.push(format!("{label}: {s}")),
            Err(e) => return Err(format!("{label}: {e}")),
        }
    }
    Ok(done.join("; "))
}

fn prop_equiv() -> CheckResult {
    all([(4, 2), (5, 2), (6, 2), (6, 3)].into_iter().map(|(n, r)| (format!("({n},{r})"), checks::prop_equiv(n, r))).collect())
}

fn covers() -> CheckResult {
    let data = checks::standard_data().map_err(|e| e.to_string())?;
    all(data.iter().map(|(label, d)| (label.clone(), checks::covers_theorem(d))).collect())
}

fn coset_oracle() -> CheckResult {
    let data = checks::standard_data().map_err(|e| e.to_string())?;
    all(data.iter().map(|(label, d)| (label.clone(), checks::coset_oracle(d))).collect())
}

fn dimensions() -> CheckResult {
    let mut parts = Vec::new();
    for n in 2..=6 {
        for r in 1..=n / 2 {
            parts.push((format!("({n},{r})"), checks::dimension_oracle(n, r)));
        }
    }
    all(parts)
}

fn case_tables() -> CheckResult {
    all(vec![
        ("C3".into(), checks::type_c_table(3)),
        ("C4".into(), checks::type_c_table(4)),
        ("B3".into(), checks::type_b_table(3)),
        ("B4".into(), checks::type_b_table(4)),
        ("F4".into(), checks::type_f_table()),
    ])
}

fn counting() -> CheckResult {
    let mut parts = Vec::new();
    for n in 2..=7 {
        for r in 0..=n / 2 {
            parts.push((format!("({n},{r})"), checks::counting(n, r)));
        }
    }
    all(parts)
}

fn grading() -> CheckResult {
    all((2..=8).map(|n| (format!("n={n}"), checks::grading_formula(n))).collect())
}

fn main() -> ExitCode {
    let secs = |s| Some(Duration::from_secs(s));
    let criteria = [
        Criterion { id: 1, name: "A3 quotient Hasse diagram", limit: secs(1), run: checks::a3_quotient_diagram },
        Criterion { id: 2, name: "sequences S_w for n=4, r=2", limit: secs(1), run: checks::a3_sequences },
        Criterion { id: 3, name: "four orders agree on W(I,J,K) in type A", limit: secs(120), run: prop_equiv },
        Criterion { id: 4, name: "cover characterizations and gradedness", limit: secs(120), run: covers },
        Criterion { id: 5, name: "order axioms and coset oracle", limit: None, run: coset_oracle },
        Criterion { id: 6, name: "orbit dimensions track length", limit: secs(60), run: dimensions },
        Criterion { id: 7, name: "heights of the six configurations", limit: None, run: checks::five_case_heights },
        Criterion { id: 8, name: "type B/C/F4 sphericality tables", limit: secs(120), run: case_tables },
        Criterion { id: 9, name: "E7 cascade coweights", limit: None, run: checks::e7_cascade },
        Criterion { id: 10, name: "Levi involution reports", limit: None, run: checks::involution_examples },
        Criterion { id: 11, name: "counting link patterns", limit: None, run: counting },
        Criterion { id: 12, name: "grading dimensions vs stabilizers", limit: None, run: grading },
    ];
    let mut failed = 0;
    for c in &criteria {
        let start = Instant::now();
        let result = (c.run)();
        let took = start.elapsed();
        let limit = c.limit.map(|l| format!(", limit {}s", l.as_secs())).unwrap_or_default();
        let over = c.limit.map(|l| took > l).unwrap_or(false);
        match result {
            Ok(detail) if !over => println!("PASS {:>2} {} ({:.2}s{limit}) {detail}", c.id, c.name, took.as_secs_f64()),
            Ok(_) => {
                failed += 1;
                println!("FAIL {:>2} {} ({:.2}s{limit}) time limit exceeded", c.id, c.name, took.as_secs_f64());
            }
            Err(e) => {
                failed += 1;
                println!("FAIL {:>2} {} ({:.2}s{limit}) {e}", c.id, c.name, took.as_secs_f64());
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
