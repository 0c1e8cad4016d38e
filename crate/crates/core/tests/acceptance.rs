//! One line per acceptance criterion; exits nonzero if any fails.
//! `E510_ACCEPTANCE=3,5` restricts the run, `E510_JOBS` sets the sweep workers.

use e510::acceptance::{Runner, CRITERIA};

fn main() {
    let jobs = std::env::var("E510_JOBS")
        .ok()
        .and_then(|s| s.parse().ok())
        .unwrap_or(4);
    let only: Option<Vec<u8>> = std::env::var("E510_ACCEPTANCE")
        .ok()
        .map(|s| s.split(',').filter_map(|x| x.trim().parse().ok()).collect());
    let runner = Runner::new(jobs);
    let mut failed = 0;
    for (id, _) in CRITERIA {
        if only.as_ref().is_some_and(|o| !o.contains(&id)) {
            continue;
        }
        let o = runner.run(id);
        println!("{}", o.line());
        failed += !o.passed as usize;
    }
    if failed > 0 {
        println!("{failed} criteria failed");
        std::process::exit(1);
    }
}
