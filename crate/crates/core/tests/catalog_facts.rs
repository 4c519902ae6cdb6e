use std::time::Instant;

use matroid_lab::catalog::{catalog_list, run};

#[test]
fn every_catalog_fact_holds() {
    let mut failed = Vec::new();
    for entry in catalog_list() {
        for o in run(&entry) {
            let t = Instant::now();
            println!("{:14} {:50} {:?} ({:?})", o.entry, o.fact, o.outcome, t.elapsed());
            if !o.passed() {
                failed.push(format!("{} / {}: {:?}", o.entry, o.fact, o.outcome));
            }
        }
    }
    assert!(failed.is_empty(), "failed facts: {failed:#?}");
}
