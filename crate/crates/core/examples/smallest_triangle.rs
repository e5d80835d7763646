//! Finds the smallest triangle with integer sides and integer medians and
//! prints its certificate.
//!
//! ```bash
//! cargo run --release --example smallest_triangle
//! ```

use median_descent::io::Record;
use median_descent::search::{enumerate, SearchConfig};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let outcome = enumerate(&SearchConfig::new(174))?;
    println!("scanned {} triples with largest side <= 174", outcome.triples_scanned);
    let first = outcome.records.first().ok_or("no triangle found")?;
    let [a, b, c] = first.sides();
    let [ma, mb, mc] = &first.medians;
    println!("sides ({a}, {b}, {c}), medians ({ma}, {mb}, {mc})");
    println!("16*S^2 = {} ({} area)", first.heron16, first.area_class);
    println!("{}", Record::from_certified(first)?.to_line());
    assert_eq!(outcome.records.len(), 1);
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().expect("smallest_triangle example failed");
}
