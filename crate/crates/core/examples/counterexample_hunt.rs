//! Looks for a triangle with integer sides, medians and area. None is
//! expected; every hit found so far has irrational area.
//!
//! ```bash
//! cargo run --release --example counterexample_hunt -- 1000
//! ```

use median_descent::search::{counterexample_scan, enumerate, resolve_even_filter, EvenFilterMode, SearchConfig};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    hunt(500)
}

fn hunt(max_side: u64) -> Result<(), Box<dyn std::error::Error>> {
    let decision = resolve_even_filter(EvenFilterMode::Auto, max_side)?;
    let config = SearchConfig::new(max_side).with_shards(8).with_even_filter(decision.enabled);
    let outcome = enumerate(&config)?;
    println!("bound {max_side}, even filter {}", decision.enabled);
    for r in &outcome.records {
        let [a, b, c] = r.sides();
        println!("  ({a}, {b}, {c}) area {}", r.area_class);
    }
    let found = counterexample_scan(&outcome.records);
    println!("{} hits, {} with rational area", outcome.records.len(), found.len());
    Ok(())
}

#[allow(dead_code)]
fn main() {
    let bound = std::env::args().nth(1).map_or(Ok(1000), |s| s.parse());
    match bound {
        Ok(n) => hunt(n).expect("counterexample_hunt example failed"),
        Err(e) => eprintln!("bound must be a positive integer: {e}"),
    }
}
