use rayon::prelude::*;

use subdeg::verify::{cases, run_case, CaseStatus, Scale, VerifyOptions, DEFAULT_SEED};

#[test]
fn every_standard_case_passes() {
    let opts = VerifyOptions::new(DEFAULT_SEED, None);
    let ids: Vec<&str> =
        cases().iter().filter(|c| c.criterion.is_none() && c.scale != Scale::Extended).map(|c| c.id).collect();
    assert!(!ids.is_empty());
    let reports: Vec<_> = ids.par_iter().map(|id| run_case(id, &opts).unwrap()).collect();
    for r in &reports {
        println!("{} {:?} {} ms", r.case, r.status, r.millis);
        for a in r.assertions.iter().filter(|a| !a.passed) {
            println!("    {} expected {} got {}", a.name, a.expected, a.actual);
        }
    }
    assert!(reports.iter().all(|r| r.status == CaseStatus::Pass));
}
