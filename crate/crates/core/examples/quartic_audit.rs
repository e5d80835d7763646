//! The quartic `T(δ)` in the median difference: where it vanishes, its
//! coefficients, and the linear-coefficient residual.

use median_descent::audit::quartic::{quartic_root_audit, xyzw_profile, QuarticProfile};
use num_bigint::BigInt;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let [ma, mb, mc, c] = [158, 131, 127, 174].map(BigInt::from);
    let (profile, checks) = xyzw_profile(&ma, &mb, &mc, &c)?;
    println!("x, y, z, w = {}, {}, {}, {}", profile.x, profile.y, profile.z, profile.w);
    println!("xyzw = {}, checks pass: {}", profile.xyzw, checks.all());
    for root in quartic_root_audit(&profile) {
        println!("T at {} ({}) = {}", root.at, root.candidate, root.value);
    }

    let unit = QuarticProfile::new(BigInt::from(1), BigInt::from(7), BigInt::from(1), BigInt::from(1));
    println!(
        "(m_a, m_c, c) = (1, 1, 1): linear coefficient {} vs factored {}, residual {}",
        unit.coeff_lin,
        unit.lin_factored(),
        unit.lin_residual()
    );
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().expect("quartic_audit example failed");
}
