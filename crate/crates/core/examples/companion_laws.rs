//! The companion transform: sides `(2/3)·medians`, medians `(1/2)·sides`,
//! a ninth of the area, and back to a third of the original after two steps.

use median_descent::arith::ratio;
use median_descent::companion::{area_ratio_check, companion, similarity_check};
use median_descent::IntTriangle;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let t = IntTriangle::from_u64(136, 170, 174)?;
    let once = companion(&t)?;
    let twice = companion(&once)?;
    println!("T        {t}");
    println!("C(T)     {once}");
    println!("C(C(T))  {twice}");
    if let Some([a, b, c]) = once.exact_medians() {
        println!("medians of C(T): ({a}, {b}, {c})");
    }
    println!("16*S^2: {} -> {}", t.heron16(), once.heron16());

    assert!(area_ratio_check(&t)?);
    assert_eq!(twice, t.to_rational().scale(&ratio(1, 3)));
    assert!(!similarity_check(&t, &once));
    println!("area ratio 1/9, involution up to 1/3, not similar: ok");
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().expect("companion_laws example failed");
}
