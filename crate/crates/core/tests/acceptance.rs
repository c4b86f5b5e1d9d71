//! Runs the twelve acceptance criteria and prints one line per criterion.
//! `ACCEPTANCE_SEED` and `ACCEPTANCE_SCALE=full` override the defaults.

use std::process::ExitCode;
use std::time::Instant;

use letterlink::selfcheck::{run, Scale, CHECK_COUNT};

fn main() -> ExitCode {
    let seed = std::env::var("ACCEPTANCE_SEED").ok().and_then(|s| s.parse().ok()).unwrap_or(0);
    let scale = match std::env::var("ACCEPTANCE_SCALE").as_deref() {
        Ok("full") => Scale::Full,
        _ => Scale::Small,
    };
    let start = Instant::now();
    let mut failed = 0;
    for id in 1..=CHECK_COUNT {
        let r = run(id, seed, scale);
        failed += usize::from(!r.passed);
        println!("{r}");
    }
    println!(
        "acceptance: {} of {CHECK_COUNT} passed in {:.2}s (seed {seed}, {scale:?})",
        CHECK_COUNT - failed,
        start.elapsed().as_secs_f64()
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
