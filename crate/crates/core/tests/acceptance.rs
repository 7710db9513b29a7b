//! Acceptance battery over F_32003 with seed 0, one line per criterion.
//! Runs without the libtest harness so the lines always reach the output.

use std::process::ExitCode;
use std::time::Instant;

use instanton_core::field::Fp;
use instanton_core::suite::{run_one, CRITERIA};

fn main() -> ExitCode {
    let f = Fp::default_field();
    let mut failed = Vec::new();
    for c in &CRITERIA {
        let start = Instant::now();
        let r = run_one(&f, c.id, 0);
        println!("{}  ({:.2}s)", r.line(), start.elapsed().as_secs_f64());
        if !r.passed {
            failed.push(r.id);
        }
    }
    if failed.is_empty() {
        println!("acceptance: {} of {} criteria passed", CRITERIA.len(), CRITERIA.len());
        ExitCode::SUCCESS
    } else {
        println!("acceptance: failed criteria {failed:?}");
        ExitCode::FAILURE
    }
}
