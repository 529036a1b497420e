use std::collections::BTreeMap;
use std::time::Instant;

use rayon::prelude::*;
use serde_json::Value;

use subdeg::verify::{cases, run_case, CaseReport, CaseStatus, Scale, VerifyOptions, DEFAULT_SEED};

const CRITERIA: [&str; 11] = ["A1", "A2", "A3", "A4", "A5", "A6", "A7", "A8", "A9", "A10", "A11"];

fn strip_timing(v: &mut Value) {
    match v {
        Value::Object(map) => {
            map.remove("millis");
            map.values_mut().for_each(strip_timing);
        }
        Value::Array(items) => items.iter_mut().for_each(strip_timing),
        _ => {}
    }
}

fn canonical(r: &CaseReport) -> Value {
    let mut v = serde_json::to_value(r).unwrap();
    strip_timing(&mut v);
    v
}

fn criterion_status(reports: &[&CaseReport]) -> CaseStatus {
    reports.iter().map(|r| r.status).max().unwrap_or(CaseStatus::Skipped)
}

fn acceptance_criteria() {
    let opts = VerifyOptions::new(DEFAULT_SEED, None);
    let selected: Vec<_> = cases().iter().filter(|c| c.criterion.is_some()).collect();
    let start = Instant::now();
    let reports: Vec<(&str, CaseReport)> =
        selected.par_iter().map(|c| (c.criterion.unwrap(), run_case(c.id, &opts).unwrap())).collect();

    let mut by_criterion: BTreeMap<&str, Vec<&CaseReport>> = BTreeMap::new();
    for (k, r) in &reports {
        by_criterion.entry(k).or_default().push(r);
    }

    let mut bad = Vec::new();
    for k in CRITERIA {
        let group = by_criterion.get(k).map(Vec::as_slice).unwrap_or(&[]);
        let status = criterion_status(group);
        let label = match status {
            CaseStatus::Pass => "PASS",
            CaseStatus::Skipped => "SKIP",
            CaseStatus::Inconclusive => "INCONCLUSIVE",
            CaseStatus::Fail => "FAIL",
        };
        let detail: Vec<String> = group.iter().map(|r| format!("{}={:?}", r.case, r.status)).collect();
        println!("{k} {label} ({})", detail.join(", "));
        for r in group {
            for a in r.assertions.iter().filter(|a| !a.passed) {
                println!("    {}: {} expected {} got {}", r.case, a.name, a.expected, a.actual);
            }
        }
        let gated = group
            .iter()
            .all(|r| r.status != CaseStatus::Skipped || !subdeg::verify::case_info(&r.case).unwrap().data.is_empty());
        if group.is_empty() || status == CaseStatus::Fail || status == CaseStatus::Inconclusive || !gated {
            bad.push(k);
        }
    }
    println!("acceptance finished in {:.1} s", start.elapsed().as_secs_f64());

    for (k, r) in &reports {
        let scale = subdeg::verify::case_info(&r.case).unwrap().scale;
        if *k != "A11" {
            assert_ne!(scale, Scale::Extended, "{}", r.case);
            assert_eq!(r.status, CaseStatus::Pass, "{} must not be skipped", r.case);
        }
    }
    assert!(bad.is_empty(), "criteria not met: {bad:?}");
}

fn verify_is_deterministic() {
    let opts = VerifyOptions::new(DEFAULT_SEED, None);
    for id in ["ex3.1-p2", "ex3.1-odd", "mu-lemmas", "tab1-small"] {
        let a = canonical(&run_case(id, &opts).unwrap());
        let b = canonical(&run_case(id, &opts).unwrap());
        assert_eq!(a, b, "{id}");
    }
}

fn missing_extended_data_is_skipped_not_failed() {
    let empty = std::env::temp_dir().join(format!("subdeg-empty-{}", std::process::id()));
    std::fs::create_dir_all(&empty).unwrap();
    let opts = VerifyOptions::new(DEFAULT_SEED, Some(empty.clone()));
    for id in ["ex1.11-hs", "ex4.2-j1"] {
        let r = run_case(id, &opts).unwrap();
        assert!(matches!(r.status, CaseStatus::Skipped | CaseStatus::Pass), "{id}: {:?}", r.status);
        assert_ne!(r.status.exit_code(), 1);
    }
    let _ = std::fs::remove_dir(empty);
}

fn main() {
    let checks: [(&str, fn()); 3] = [
        ("criteria", acceptance_criteria),
        ("determinism", verify_is_deterministic),
        ("missing data", missing_extended_data_is_skipped_not_failed),
    ];
    let mut failed = 0;
    for (name, check) in checks {
        let ok = std::panic::catch_unwind(check).is_ok();
        println!("acceptance {name}: {}", if ok { "ok" } else { "FAILED" });
        failed += usize::from(!ok);
    }
    std::process::exit(i32::from(failed > 0));
}
