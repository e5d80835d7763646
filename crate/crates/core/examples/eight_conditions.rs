//! Eight Heron-type products mixing sides and medians, all equal to
//! `144·S²` after normalization. Works without exact medians too.

use median_descent::audit::conditions::{eight_conditions, eight_conditions_squared, NORMALIZERS};
use median_descent::IntTriangle;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let t = IntTriangle::from_u64(136, 170, 174)?;
    let medians = t.integer_medians().ok_or("expected integer medians")?;
    let report = eight_conditions(t.sides(), &medians)?;
    for (i, (q, n)) in report.products.iter().zip(&report.normalized).enumerate() {
        println!("q{} = {q:>12} x{:<2} = {n}", i + 1, NORMALIZERS[i]);
    }
    assert!(report.all_equal);

    // (7, 8, 9) has irrational medians; the squared form still applies.
    let other = IntTriangle::from_u64(7, 8, 9)?;
    let squared = eight_conditions_squared(other.sides());
    println!("(7, 8, 9): all equal = {}, value = {:?}", squared.all_equal, squared.common());
    assert_eq!(squared.common(), Some(&(other.heron16() * 9)));
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().expect("eight_conditions example failed");
}
