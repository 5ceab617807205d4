// Checks the line-graph classification of commuting graphs over the
// default corpus and prints one report line per group.

use std::error::Error;

use comgraph::harness::{self, VerifyOptions};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let corpus = harness::default_corpus();
    let options = VerifyOptions {
        hereditary_samples: 10,
        seed: 1,
    };
    let report = harness::verify_corpus(&corpus, options);
    println!("{}", harness::report_header());
    for r in &report.reports {
        println!("{}", harness::report_line(r));
    }
    println!(
        "groups: {}, mismatches: {}",
        report.summary.groups, report.summary.mismatches
    );
    if report.summary.mismatches > 0 {
        return Err(format!("mismatches in {:?}", report.summary.groups_with_mismatches).into());
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
