use std::time::Instant;

use letterlink::selfcheck::{run, Scale, CHECK_COUNT};

fn main() {
    let seed = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(0);
    for id in 1..=CHECK_COUNT {
        let start = Instant::now();
        let r = run(id, seed, Scale::Small);
        println!("{r} [{:.2}s]", start.elapsed().as_secs_f64());
    }
}
