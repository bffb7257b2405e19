//! Runs every acceptance criterion in sequence, each against its own
//! wall-clock bound, and prints one PASS/FAIL line per criterion.
//!
//! Criteria run one at a time so the timings are not distorted by sibling
//! tests competing for cores.

use std::process::ExitCode;

use mutvis_core::verify::{run_criterion, Status};
use mutvis_core::EnumerationLimits;

fn main() -> ExitCode {
    let limits = EnumerationLimits::default();
    let only: Vec<u32> = std::env::args()
        .skip(1)
        .filter_map(|a| a.parse().ok())
        .collect();
    let mut failed = 0;
    println!("\nacceptance criteria ({} workers)", limits.worker_count);
    for id in 1..=10 {
        if !only.is_empty() && !only.contains(&id) {
            continue;
        }
        let report = run_criterion(id, &limits).expect("criterion ids are 1..=10");
        println!("{}", report.line());
        if report.status() == Status::Fail {
            failed += 1;
        }
    }
    if failed == 0 {
        println!("acceptance: all criteria passed\n");
        ExitCode::SUCCESS
    } else {
        println!("acceptance: {failed} criteria failed\n");
        ExitCode::FAILURE
    }
}
