//! Sum of the two cubic cofactors.
//!
//! `P_a(δ) = δ³ + 16m_a·δ² + (96m_a² − 8m_c² − 18c²)δ + 16m_a(16m_a² − 4m_c² − 9c²)`
//! and `Q_b(δ)`, the `m_b` cubic evaluated at `−δ` and negated in its odd
//! terms, add up to `16(m_a + m_b)·R(δ)` with
//! `R(δ) = δ² + 6(m_a − m_b)δ + 16(m_a² − m_a m_b + m_b²) − (4m_c² + 9c²)`.

use crate::arith::{lit, Exact};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CubicSum<N> {
    pub p_a: N,
    pub q_b: N,
    pub r: N,
    pub holds: bool,
}

pub fn cubic_sum<N: Exact>(m_a: &N, m_b: &N, m_c: &N, c: &N, d: &N) -> CubicSum<N> {
    let n = |v: i64| lit::<N>(v);
    let sq = |v: &N| v.clone() * v.clone();
    let tail = n(4) * sq(m_c) + n(9) * sq(c);
    let d2 = sq(d);
    let d3 = d2.clone() * d.clone();

    let p_a = d3.clone()
        + n(16) * m_a.clone() * d2.clone()
        + (n(96) * sq(m_a) - n(8) * sq(m_c) - n(18) * sq(c)) * d.clone()
        + n(16) * m_a.clone() * (n(16) * sq(m_a) - tail.clone());
    let q_b = -d3
        + n(16) * m_b.clone() * d2.clone()
        - (n(96) * sq(m_b) - n(8) * sq(m_c) - n(18) * sq(c)) * d.clone()
        + n(16) * m_b.clone() * (n(16) * sq(m_b) - tail.clone());
    let r = d2 + n(6) * (m_a.clone() - m_b.clone()) * d.clone()
        + n(16) * (sq(m_a) - m_a.clone() * m_b.clone() + sq(m_b))
        - tail;
    let holds = p_a.clone() + q_b.clone() == n(16) * (m_a.clone() + m_b.clone()) * r.clone();
    CubicSum { p_a, q_b, r, holds }
}

/// Whether `P_a(δ) + Q_b(δ) = 16(m_a + m_b)·R(δ)`.
pub fn cubic_sum_check<N: Exact>(m_a: &N, m_b: &N, m_c: &N, c: &N, d: &N) -> bool {
    cubic_sum(m_a, m_b, m_c, c, d).holds
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    fn big(n: i64) -> BigInt {
        BigInt::from(n)
    }

    #[test]
    fn pinned_unit_case() {
        let s = cubic_sum(&big(1), &big(1), &big(0), &big(0), &big(1));
        assert_eq!(s.p_a, big(369));
        assert_eq!(s.q_b, big(175));
        assert_eq!(s.r, big(17));
        assert_eq!(&s.p_a + &s.q_b, big(544));
        assert!(s.holds);
    }

    #[test]
    fn zero_delta_is_cube_sum_factorization() {
        for (ma, mb) in [(1, 2), (7, 3), (158, 131)] {
            let s = cubic_sum(&big(ma), &big(mb), &big(0), &big(0), &big(0));
            assert_eq!(&s.p_a + &s.q_b, big(256) * (big(ma).pow(3) + big(mb).pow(3)));
            assert!(s.holds);
        }
    }

    #[test]
    fn smallest_triangle_values() {
        assert!(cubic_sum_check(&big(158), &big(131), &big(127), &big(174), &big(-108)));
    }
}
