//! Rebuilds every worked example and prints its report.
//!
//! ```text
//! cargo run --release --example reproduce_examples -- 29_2
//! ```

use rctrs::mds::DEFAULT_BUDGET;
use rctrs::repro::{reproduce, GoldenExample};

fn main() -> Result<(), rctrs::Error> {
    let which: Vec<GoldenExample> = match std::env::args().nth(1) {
        Some(id) => vec![id.parse().unwrap_or_else(|e: String| panic!("{e}"))],
        None => GoldenExample::ALL.to_vec(),
    };
    let mut failed = 0;
    for ex in which {
        for outcome in reproduce(ex, DEFAULT_BUDGET)? {
            print!("{}", outcome.render(false));
            failed += usize::from(!outcome.passed());
        }
    }
    if failed > 0 {
        std::process::exit(1);
    }
    Ok(())
}
