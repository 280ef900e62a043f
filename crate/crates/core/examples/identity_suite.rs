//! Runs the identity registry at the default order and prints one line per entry.

use std::time::Instant;

use qmf::identities::{verify_all, DEFAULT_ORDER};

fn main() {
    let start = Instant::now();
    let results = verify_all(DEFAULT_ORDER);
    for r in &results {
        let mark = if r.passed() { "pass" } else { "FAIL" };
        println!("{mark}  {:<14} order {:>3}  {:>9.1} ms  {:?}", r.id, r.order, r.elapsed_ms, r.status);
    }
    let failed = results.iter().filter(|r| !r.passed()).count();
    println!("{} entries, {} failed, {:.1} s", results.len(), failed, start.elapsed().as_secs_f64());
}
