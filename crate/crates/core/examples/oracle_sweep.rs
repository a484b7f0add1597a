//! Run the oracle-equivalence suites at a small budget.
//!
//!     cargo run --release --example oracle_sweep -- 12

use multichiral::cli::{run_suite, Suite};

fn main() {
    let budget: usize = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(9);
    for suite in [Suite::Classifier, Suite::Planarity, Suite::Feasibility, Suite::Lemma1] {
        let b = budget.min(suite.max_budget());
        let start = std::time::Instant::now();
        let s = run_suite(suite, b).expect("budget within limits");
        println!(
            "{suite:?} (budget {b}): {} checked, {} disagreements, {:.2?}",
            s.checked,
            s.disagreements.len(),
            start.elapsed()
        );
        for d in &s.disagreements {
            println!("  {d}");
        }
    }
}
