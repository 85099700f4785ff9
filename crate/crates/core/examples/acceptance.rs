//! All twelve acceptance criteria with their outcomes.

use skewdg::suite::{run_suite, DEFAULT_SEED};

fn main() {
    let report = run_suite(DEFAULT_SEED);
    print!("{}", report.table());
    println!("all passed: {}", report.passed());
}
