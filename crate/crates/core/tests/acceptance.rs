//! Runs the twelve acceptance criteria and prints one line per criterion.

use std::process::ExitCode;

use skewdg::suite::{run_criterion, CRITERIA, DEFAULT_SEED};

fn main() -> ExitCode {
    println!("\nrunning {CRITERIA} acceptance criteria (seed {DEFAULT_SEED})");
    let mut failed = 0;
    for id in 1..=CRITERIA {
        let outcome = run_criterion(id, DEFAULT_SEED);
        println!("{}", outcome.line());
        failed += usize::from(!outcome.passed);
    }
    println!("acceptance: {} passed, {failed} failed\n", CRITERIA - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
