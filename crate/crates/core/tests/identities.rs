//! Universal identities over random triangles, integer and rational.

use median_descent::arith::ratio;
use median_descent::audit::quartic::{t_expansion_check, xyzw_profile};
use median_descent::audit::{eight_conditions, eight_conditions_squared, shift_profile, shifted_products_consistent};
use median_descent::companion::{area_ratio_check, companion, similarity_check};
use median_descent::triangle::{median_discriminants, median_discriminants_symmetric, sides_from_medians};
use median_descent::{IntTriangle, RatTriangle};
use num_bigint::BigInt;
use proptest::prelude::*;

fn triangle() -> impl Strategy<Value = IntTriangle> {
    (1u64..5000, 1u64..5000, 1u64..5000)
        .prop_filter_map("not a triangle", |(a, b, c)| IntTriangle::from_u64(a, b, c).ok())
}

/// Rational triangles with rational medians: scaled companions of known
/// integer-median triangles.
fn rational_median_triangle() -> impl Strategy<Value = RatTriangle> {
    let seeds = [(136u64, 170u64, 174u64), (254, 262, 316), (226, 486, 580), (318, 628, 650)];
    (0..seeds.len(), 1i64..200, 1i64..200, any::<bool>()).prop_map(move |(i, p, q, twice)| {
        let (a, b, c) = seeds[i];
        let t = IntTriangle::from_u64(a, b, c).unwrap();
        let mut r = companion(&t).unwrap().scale(&ratio(p, q));
        if twice {
            r = companion(&r).unwrap();
        }
        r
    })
}

proptest! {
    #[test]
    fn squared_conditions_equal_144_s2(t in triangle()) {
        let r = eight_conditions_squared(t.sides());
        prop_assert!(r.all_equal);
        prop_assert_eq!(r.common(), Some(&(t.heron16() * 9)));
    }

    #[test]
    fn discriminant_forms_agree(t in triangle()) {
        let [a, b, c] = t.sides();
        prop_assert_eq!(median_discriminants(a, b, c), median_discriminants_symmetric(a, b, c));
    }

    #[test]
    fn companion_area_is_a_ninth(t in rational_median_triangle()) {
        prop_assert!(area_ratio_check(&t).unwrap());
        prop_assert!(!similarity_check(&t, &companion(&t).unwrap()));
    }

    #[test]
    fn rational_identities(t in rational_median_triangle()) {
        let medians = t.exact_medians().unwrap();
        let conditions = eight_conditions(t.sides(), &medians).unwrap();
        prop_assert!(conditions.all_equal);
        prop_assert_eq!(conditions.common(), Some(&(t.heron16() * ratio(9, 1))));

        let shifts = shift_profile(t.sides(), &medians);
        prop_assert!(shifts.brackets_hold());
        prop_assert!(shifted_products_consistent(&shifts));

        let [ma, mb, mc] = &medians;
        let (_, checks) = xyzw_profile(ma, mb, mc, t.c()).unwrap();
        prop_assert!(checks.all());

        let back = sides_from_medians(&medians).unwrap().unwrap();
        prop_assert_eq!(back, t);
    }

    #[test]
    fn t_expansion_is_exact(x in -10_000i64..10_000, y in -10_000i64..10_000,
                            z in -10_000i64..10_000, w in -10_000i64..10_000,
                            d in -10_000i64..10_000) {
        let [x, y, z, w, d] = [x, y, z, w, d].map(BigInt::from);
        prop_assert!(t_expansion_check(&x, &y, &z, &w, &d));
    }
}
