//! Runs the descent driver and prints which gates stop it.

use median_descent::companion::descent_run;
use median_descent::IntTriangle;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    for (a, b, c) in [(136, 170, 174), (408, 510, 522)] {
        let t = IntTriangle::from_u64(a, b, c)?;
        for (i, step) in descent_run(&t, 5)?.iter().enumerate() {
            println!("step {}\n{step}\n", i + 1);
        }
    }
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().expect("descent_trace example failed");
}
