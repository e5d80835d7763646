//! Shift bookkeeping between the plain and the substituted brackets.
//!
//! With `X = M_A+M_B+M_C`, `Y = M_A+M_B−M_C`, `Z = M_A+M_C−M_B`,
//! `W = M_C+M_B−M_A` (and the same on sides), replacing a median by
//! `(3/2)·side` moves each bracket by `±δ`, and replacing a side by twice
//! its median moves each side bracket by `±θ`.

use num_rational::BigRational;
use num_traits::Zero;

use crate::arith::{ratio, Exact};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ShiftProfile {
    /// `δ_i = (3/2)·side_i − M_i`, in the order `(A, B, C)`.
    pub delta: [BigRational; 3],
    /// `θ_i = 2·M_i − side_i`.
    pub theta: [BigRational; 3],
    /// Each substituted median bracket equals its base bracket shifted by `±δ`.
    pub median_brackets: [bool; 12],
    /// Each substituted side bracket equals its base bracket shifted by `±θ`.
    pub side_brackets: [bool; 12],
    /// The eight products rebuilt from shifted brackets; odd positions equal
    /// `9·S²`, even positions `16·S²` for genuine inputs.
    pub shifted_products: [BigRational; 8],
}

impl ShiftProfile {
    pub fn brackets_hold(&self) -> bool {
        self.median_brackets.iter().chain(&self.side_brackets).all(|&b| b)
    }
}

struct Brackets {
    x: BigRational,
    y: BigRational,
    z: BigRational,
    w: BigRational,
}

impl Brackets {
    fn of(p: &BigRational, q: &BigRational, r: &BigRational) -> Self {
        Brackets {
            x: p + q + r,
            y: p + q - r,
            z: p + r - q,
            w: r + q - p,
        }
    }

    /// Product with the given signed shift on each bracket.
    fn shifted(&self, d: &BigRational, signs: [i8; 4]) -> BigRational {
        let f = |v: &BigRational, s: i8| if s > 0 { v + d } else { v - d };
        f(&self.x, signs[0]) * f(&self.y, signs[1]) * f(&self.z, signs[2]) * f(&self.w, signs[3])
    }

    fn product(&self) -> BigRational {
        &self.x * &self.y * &self.z * &self.w
    }
}

/// Sign patterns for the shifted products when the substituted element is
/// `C`, `B` and `A` respectively.
const SIGNS: [[i8; 4]; 3] = [[1, -1, 1, 1], [1, 1, -1, 1], [1, 1, 1, -1]];

pub fn shift_profile<N: Exact>(sides: &[N; 3], medians: &[N; 3]) -> ShiftProfile {
    let s = sides.clone().map(|v| v.to_rational());
    let m = medians.clone().map(|v| v.to_rational());
    let three_halves = ratio(3, 2);
    let two = ratio(2, 1);
    let h: [BigRational; 3] = std::array::from_fn(|i| &three_halves * &s[i]);
    let delta: [BigRational; 3] = std::array::from_fn(|i| &h[i] - &m[i]);
    let theta: [BigRational; 3] = std::array::from_fn(|i| &two * &m[i] - &s[i]);
    let [ma, mb, mc] = &m;
    let [a, b, c] = &s;
    let [ha, hb, hc] = &h;
    let [da, db, dc] = &delta;
    let [ta, tb, tc] = &theta;

    let mb_ = Brackets::of(ma, mb, mc);
    let median_brackets = [
        ma + mb + hc == &mb_.x + dc,
        ma + hb + mc == &mb_.x + db,
        ha + mb + mc == &mb_.x + da,
        ma + mb - hc == &mb_.y - dc,
        ma + hb - mc == &mb_.y + db,
        ha + mb - mc == &mb_.y + da,
        ma + hc - mb == &mb_.z + dc,
        ma + mc - hb == &mb_.z - db,
        ha + mc - mb == &mb_.z + da,
        hc + mb - ma == &mb_.w + dc,
        mc + hb - ma == &mb_.w + db,
        mc + mb - ha == &mb_.w - da,
    ];

    let sb = Brackets::of(a, b, c);
    let (ma2, mb2, mc2) = (&two * ma, &two * mb, &two * mc);
    let side_brackets = [
        a + b + &mc2 == &sb.x + tc,
        a + b - &mc2 == &sb.y - tc,
        a + &mc2 - b == &sb.z + tc,
        &mc2 + b - a == &sb.w + tc,
        a + &mb2 + c == &sb.x + tb,
        a + &mb2 - c == &sb.y + tb,
        a + c - &mb2 == &sb.z - tb,
        c + &mb2 - a == &sb.w + tb,
        &ma2 + b + c == &sb.x + ta,
        &ma2 + b - c == &sb.y + ta,
        &ma2 + c - b == &sb.z + ta,
        c + b - &ma2 == &sb.w - ta,
    ];

    let shifted_products = [
        mb_.product(),
        sb.product(),
        mb_.shifted(dc, SIGNS[0]),
        sb.shifted(tc, SIGNS[0]),
        mb_.shifted(db, SIGNS[1]),
        sb.shifted(tb, SIGNS[1]),
        mb_.shifted(da, SIGNS[2]),
        sb.shifted(ta, SIGNS[2]),
    ];

    ShiftProfile {
        delta,
        theta,
        median_brackets,
        side_brackets,
        shifted_products,
    }
}

/// Whether the rebuilt products all carry the same area: odd positions
/// `9·S²`, even positions `16·S²`.
pub fn shifted_products_consistent(profile: &ShiftProfile) -> bool {
    let p = &profile.shifted_products;
    let nine_s2 = &p[0];
    let sixteen_s2 = &p[1];
    if nine_s2 * ratio(16, 1) != sixteen_s2 * ratio(9, 1) {
        return false;
    }
    p.iter().step_by(2).all(|v| v == nine_s2) && p.iter().skip(1).step_by(2).all(|v| v == sixteen_s2)
}

/// True when every `δ` vanishes, i.e. each median equals `(3/2)` its side.
pub fn deltas_vanish(profile: &ShiftProfile) -> bool {
    profile.delta.iter().all(Zero::is_zero)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    fn bigs(v: [i64; 3]) -> [BigInt; 3] {
        v.map(BigInt::from)
    }

    #[test]
    fn smallest_triangle_shifts() {
        let p = shift_profile(&bigs([136, 170, 174]), &bigs([158, 131, 127]));
        assert_eq!(p.delta, [ratio(46, 1), ratio(124, 1), ratio(134, 1)]);
        assert_eq!(p.theta, [ratio(180, 1), ratio(92, 1), ratio(80, 1)]);
        assert!(p.brackets_hold());
        assert!(shifted_products_consistent(&p));
        assert_eq!(p.shifted_products[0], ratio(1_037_836_800, 1));
        assert_eq!(p.shifted_products[1], ratio(1_845_043_200, 1));
    }

    #[test]
    fn three_halves_medians_zero_deltas() {
        let sides = [ratio(2, 1), ratio(3, 1), ratio(4, 1)];
        let medians = sides.clone().map(|s| s * ratio(3, 2));
        let p = shift_profile(&sides, &medians);
        assert!(deltas_vanish(&p));
        assert!(p.brackets_hold());
    }

    #[test]
    fn theta_zero_when_side_is_twice_median() {
        let p = shift_profile(&bigs([10, 11, 12]), &bigs([5, 7, 8]));
        assert_eq!(p.theta[0], ratio(0, 1));
        assert!(p.brackets_hold());
    }
}
