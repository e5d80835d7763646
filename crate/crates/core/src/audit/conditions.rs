//! The eight equal-area products.
//!
//! Four triangles built from sides and medians share the area of the
//! original, which gives four `9·S²` products over median-type brackets and
//! four `16·S²` products over side-type brackets. Brackets containing
//! `(3/2)·side` are doubled throughout, so the median-type products other
//! than the first carry a factor `2⁴` and equal `144·S²` directly.

use crate::arith::{heron_squared, lit, Exact};
use crate::error::{Error, Result};
use crate::triangle::{heron16, median_discriminants};

/// Factor that maps each product onto the common scale `144·S²`.
pub const NORMALIZERS: [i64; 8] = [16, 9, 1, 9, 1, 9, 1, 9];

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConditionReport<N> {
    /// `q1..q8` in fraction-free form.
    pub products: [N; 8],
    /// `products[i] · NORMALIZERS[i]`, all equal to `144·S²` for genuine
    /// side/median pairs.
    pub normalized: [N; 8],
    pub all_equal: bool,
}

impl<N: Exact> ConditionReport<N> {
    fn from_products(products: [N; 8]) -> Self {
        let normalized: [N; 8] = std::array::from_fn(|i| products[i].clone() * lit::<N>(NORMALIZERS[i]));
        let all_equal = normalized.iter().all(|v| *v == normalized[0]);
        ConditionReport {
            products,
            normalized,
            all_equal,
        }
    }

    /// The shared value `144·S²` when all eight agree.
    pub fn common(&self) -> Option<&N> {
        self.all_equal.then_some(&self.normalized[0])
    }
}

/// Evaluates the eight products from sides `(A, B, C)` and their exact
/// medians `(M_A, M_B, M_C)`.
///
/// The fourth product uses the bracket `(A + 2M_C − B)`; the variant
/// `(A + 2C − B)` does not describe the triangle with sides `A, B, 2M_C` and
/// breaks the equal-area system.
pub fn eight_conditions<N: Exact>(sides: &[N; 3], medians: &[N; 3]) -> Result<ConditionReport<N>> {
    let [a, b, c] = sides;
    let [ma, mb, mc] = medians;
    if sides.iter().any(|s| !s.is_positive()) || medians.iter().any(|m| m.is_negative()) {
        return Err(Error::Domain(format!("nonpositive input ({a}, {b}, {c}; {ma}, {mb}, {mc})")));
    }
    let four: N = lit(4);
    let ds = median_discriminants(a, b, c);
    for (m, d) in medians.iter().zip(&ds) {
        if four.clone() * m.clone() * m.clone() != *d {
            return Err(Error::Domain(format!(
                "medians ({ma}, {mb}, {mc}) are not the medians of ({a}, {b}, {c})"
            )));
        }
    }

    let two: N = lit(2);
    let three: N = lit(3);
    let dbl = |x: &N| two.clone() * x.clone();
    let tpl = |x: &N| three.clone() * x.clone();

    let q1 = quad(ma, mb, mc);
    let q2 = quad(a, b, c);
    let q3 = quad(&dbl(ma), &dbl(mb), &tpl(c));
    let q4 = {
        let (a, b, m) = (a.clone(), b.clone(), dbl(mc));
        (a.clone() + b.clone() + m.clone())
            * (a.clone() + b.clone() - m.clone())
            * (a.clone() + m.clone() - b.clone())
            * (m + b - a)
    };
    let q5 = quad(&dbl(ma), &tpl(b), &dbl(mc));
    let q6 = quad(a, &dbl(mb), c);
    let q7 = quad(&tpl(a), &dbl(mb), &dbl(mc));
    let q8 = quad(&dbl(ma), b, c);

    Ok(ConditionReport::from_products([q1, q2, q3, q4, q5, q6, q7, q8]))
}

fn quad<N: Exact>(x: &N, y: &N, z: &N) -> N {
    heron16(x, y, z)
}

/// The same eight values on the `144·S²` scale, computed from squared
/// lengths only. Valid for every triangle, including those whose medians
/// are irrational.
pub fn eight_conditions_squared<N: Exact>(sides: &[N; 3]) -> ConditionReport<N> {
    let [a, b, c] = sides;
    let [da, db, dc] = median_discriminants(a, b, c);
    let (a2, b2, c2) = (a.clone() * a.clone(), b.clone() * b.clone(), c.clone() * c.clone());
    let nine: N = lit(9);
    let normalized = [
        heron_squared(&da, &db, &dc),
        nine.clone() * heron_squared(&a2, &b2, &c2),
        heron_squared(&da, &db, &(nine.clone() * c2.clone())),
        nine.clone() * heron_squared(&a2, &b2, &dc),
        heron_squared(&da, &(nine.clone() * b2.clone()), &dc),
        nine.clone() * heron_squared(&a2, &db, &c2),
        heron_squared(&(nine.clone() * a2.clone()), &db, &dc),
        nine * heron_squared(&da, &b2, &c2),
    ];
    let all_equal = normalized.iter().all(|v| *v == normalized[0]);
    // Products are only defined up to the normalizer in this form; expose
    // the normalized values in both slots.
    ConditionReport {
        products: normalized.clone(),
        normalized,
        all_equal,
    }
}
