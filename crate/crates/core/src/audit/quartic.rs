//! The sub-triangle substitution and the quartic in `δ`.
//!
//! The centroid splits the triangle into two sub-triangles `A C₁ O` and
//! `C₁ B O` of equal area `S/6`. Scaling their sides by 12 gives the Heron
//! brackets
//!
//! ```text
//! x = 4m_a + 2m_c + 3c      x + δ = 4m_b + 2m_c + 3c
//! y = 4m_a + 2m_c − 3c      y + δ = 4m_b + 2m_c − 3c
//! z = 4m_a + 3c − 2m_c      z + δ = 4m_b + 3c − 2m_c
//! w = 3c + 2m_c − 4m_a      w − δ = 3c + 2m_c − 4m_b
//! ```
//!
//! with `δ = 4m_b − 4m_a`, and `xyzw − (x+δ)(y+δ)(z+δ)(w−δ) = T(δ)` where
//! `T` is the quartic `δ⁴ + k₃δ³ + k₂δ² + k₁δ`.

use std::fmt;

use crate::arith::{heron_squared, lit, Exact};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuarticProfile<N> {
    pub m_a: N,
    pub m_b: N,
    pub m_c: N,
    pub c: N,
    pub x: N,
    pub y: N,
    pub z: N,
    pub w: N,
    /// `4m_b − 4m_a`.
    pub delta: N,
    pub xyzw: N,
    /// `T` evaluated at [`delta`](Self::delta).
    pub t_value: N,
    /// `x + y + z − w`.
    pub coeff_cubic: N,
    /// `xy + xz − xw + yz − yw − zw`.
    pub coeff_quad: N,
    /// `xyz − xyw − xzw − yzw`.
    pub coeff_lin: N,
}

impl<N: Exact> QuarticProfile<N> {
    /// Pure substitution, no consistency requirement on the inputs.
    pub fn new(m_a: N, m_b: N, m_c: N, c: N) -> Self {
        let four: N = lit(4);
        let two: N = lit(2);
        let three: N = lit(3);
        let a4 = four.clone() * m_a.clone();
        let c2 = two * m_c.clone();
        let c3 = three * c.clone();
        let x = a4.clone() + c2.clone() + c3.clone();
        let y = a4.clone() + c2.clone() - c3.clone();
        let z = a4.clone() + c3.clone() - c2.clone();
        let w = c3 + c2 - a4;
        let delta = four * (m_b.clone() - m_a.clone());
        let (coeff_cubic, coeff_quad, coeff_lin) = coefficients(&x, &y, &z, &w);
        let xyzw = x.clone() * y.clone() * z.clone() * w.clone();
        let mut p = QuarticProfile {
            m_a,
            m_b,
            m_c,
            c,
            x,
            y,
            z,
            w,
            delta,
            xyzw,
            t_value: N::zero(),
            coeff_cubic,
            coeff_quad,
            coeff_lin,
        };
        p.t_value = p.quartic(&p.delta);
        p
    }

    /// `δ⁴ + k₃δ³ + k₂δ² + k₁δ` by Horner's rule.
    pub fn quartic(&self, d: &N) -> N {
        let mut acc = d.clone() + self.coeff_cubic.clone();
        acc = acc * d.clone() + self.coeff_quad.clone();
        acc = acc * d.clone() + self.coeff_lin.clone();
        acc * d.clone()
    }

    /// `xyzw − (x+δ)(y+δ)(z+δ)(w−δ)`, the same quartic through the product.
    pub fn product_form(&self, d: &N) -> N {
        self.xyzw.clone()
            - (self.x.clone() + d.clone())
                * (self.y.clone() + d.clone())
                * (self.z.clone() + d.clone())
                * (self.w.clone() - d.clone())
    }

    /// `96m_a² − 8m_c² − 18c²`.
    pub fn quad_expected(&self) -> N {
        lit::<N>(96) * self.m_a.clone() * self.m_a.clone()
            - lit::<N>(8) * self.m_c.clone() * self.m_c.clone()
            - lit::<N>(18) * self.c.clone() * self.c.clone()
    }

    pub fn cubic_identity_holds(&self) -> bool {
        self.coeff_cubic == lit::<N>(16) * self.m_a.clone()
    }

    pub fn quad_identity_holds(&self) -> bool {
        self.coeff_quad == self.quad_expected()
    }

    /// Linear coefficient of `δ(δ + 16m_a)(δ² + 96m_a² − 8m_c² − 18c²)`.
    pub fn lin_factored(&self) -> N {
        lit::<N>(16) * self.m_a.clone() * self.quad_expected()
    }

    /// `coeff_lin − lin_factored()`. Zero would mean the factored quartic
    /// matches the expanded one coefficient by coefficient.
    pub fn lin_residual(&self) -> N {
        self.coeff_lin.clone() - self.lin_factored()
    }
}

fn coefficients<N: Exact>(x: &N, y: &N, z: &N, w: &N) -> (N, N, N) {
    let (x, y, z, w) = (x.clone(), y.clone(), z.clone(), w.clone());
    let cubic = x.clone() + y.clone() + z.clone() - w.clone();
    let quad = x.clone() * y.clone() + x.clone() * z.clone() - x.clone() * w.clone()
        + y.clone() * z.clone()
        - y.clone() * w.clone()
        - z.clone() * w.clone();
    let lin = x.clone() * y.clone() * z.clone()
        - x.clone() * y.clone() * w.clone()
        - x.clone() * z.clone() * w.clone()
        - y * z * w;
    (cubic, quad, lin)
}

/// The universal identities a genuine triangle must satisfy.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct QuarticChecks {
    /// `xyzw = 576·S²`.
    pub xyzw_is_576_s2: bool,
    /// `x + y + z − w = 16m_a`.
    pub cubic_coeff: bool,
    /// `xy + xz − xw + yz − yw − zw = 96m_a² − 8m_c² − 18c²`.
    pub quad_coeff: bool,
    /// `T(4m_b − 4m_a) = 0`.
    pub t_zero: bool,
}

impl QuarticChecks {
    pub fn all(&self) -> bool {
        self.xyzw_is_576_s2 && self.cubic_coeff && self.quad_coeff && self.t_zero
    }
}

/// Profile for medians `(m_a, m_b, m_c)` and side `c` of one triangle,
/// together with the identity checks.
///
/// The inputs must be consistent: `9c² = 4(2m_a² + 2m_b² − m_c²)`.
pub fn xyzw_profile<N: Exact>(m_a: &N, m_b: &N, m_c: &N, c: &N) -> Result<(QuarticProfile<N>, QuarticChecks)> {
    if [m_a, m_b, m_c, c].iter().any(|v| v.is_negative()) {
        return Err(Error::Domain("negative median or side".into()));
    }
    let sq = |v: &N| v.clone() * v.clone();
    let lhs = lit::<N>(9) * sq(c);
    let rhs = lit::<N>(4) * (lit::<N>(2) * sq(m_a) + lit::<N>(2) * sq(m_b) - sq(m_c));
    if lhs != rhs {
        return Err(Error::Domain(format!(
            "side {c} is not determined by medians ({m_a}, {m_b}, {m_c})"
        )));
    }
    let profile = QuarticProfile::new(m_a.clone(), m_b.clone(), m_c.clone(), c.clone());
    // 9S² = H(m_a², m_b², m_c²), so 576S² = 64·H.
    let s2_576 = lit::<N>(64) * heron_squared(&sq(m_a), &sq(m_b), &sq(m_c));
    let checks = QuarticChecks {
        xyzw_is_576_s2: profile.xyzw == s2_576,
        cubic_coeff: profile.cubic_identity_holds(),
        quad_coeff: profile.quad_identity_holds(),
        t_zero: profile.t_value.is_zero(),
    };
    Ok((profile, checks))
}

/// `(x+δ)(y+δ)(z+δ)(w−δ) = xyzw − T(δ)`, checked exactly.
pub fn t_expansion_check<N: Exact>(x: &N, y: &N, z: &N, w: &N, d: &N) -> bool {
    let (k3, k2, k1) = coefficients(x, y, z, w);
    let t = d.clone() * (d.clone() * (d.clone() * (d.clone() + k3) + k2) + k1);
    let lhs = (x.clone() + d.clone()) * (y.clone() + d.clone()) * (z.clone() + d.clone()) * (w.clone() - d.clone());
    lhs == x.clone() * y.clone() * z.clone() * w.clone() - t
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RootCandidate {
    /// `δ = 0`.
    Zero,
    /// `δ₂ = 4m_b − 4m_a`.
    Delta,
    /// `δ₃ = −δ₂`.
    NegDelta,
    /// `δ₄ = −16m_a`.
    NegSixteenMa,
}

impl fmt::Display for RootCandidate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            RootCandidate::Zero => "0",
            RootCandidate::Delta => "delta",
            RootCandidate::NegDelta => "-delta",
            RootCandidate::NegSixteenMa => "-16*m_a",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootAudit<N> {
    pub candidate: RootCandidate,
    pub at: N,
    pub value: N,
}

impl<N: Exact> RootAudit<N> {
    pub fn vanishes(&self) -> bool {
        self.value.is_zero()
    }
}

/// Exact value of the quartic at each root candidate.
pub fn quartic_root_audit<N: Exact>(profile: &QuarticProfile<N>) -> Vec<RootAudit<N>> {
    let candidates = [
        (RootCandidate::Zero, N::zero()),
        (RootCandidate::Delta, profile.delta.clone()),
        (RootCandidate::NegDelta, -profile.delta.clone()),
        (RootCandidate::NegSixteenMa, -(lit::<N>(16) * profile.m_a.clone())),
    ];
    candidates
        .into_iter()
        .map(|(candidate, at)| RootAudit {
            candidate,
            value: profile.quartic(&at),
            at,
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::ratio;
    use num_bigint::BigInt;
    use num_traits::Zero;

    fn big(n: i64) -> BigInt {
        BigInt::from(n)
    }

    #[test]
    fn smallest_triangle_profile() {
        let (p, checks) = xyzw_profile(&big(158), &big(131), &big(127), &big(174)).unwrap();
        assert_eq!([&p.x, &p.y, &p.z, &p.w], [&big(1408), &big(364), &big(900), &big(144)]);
        assert_eq!(p.coeff_cubic, big(2528));
        assert_eq!(p.xyzw, big(66_421_555_200));
        assert_eq!(p.xyzw, big(576) * big(115_315_200));
        assert_eq!(p.delta, big(-108));
        assert!(p.t_value.is_zero());
        assert!(checks.all());
    }

    #[test]
    fn unit_profile_exposes_linear_residual() {
        let p = QuarticProfile::new(big(1), big(7), big(1), big(1));
        assert_eq!([&p.x, &p.y, &p.z, &p.w], [&big(9), &big(3), &big(5), &big(1)]);
        assert_eq!(p.coeff_quad, big(70));
        assert_eq!(p.coeff_lin, big(48));
        assert_eq!(p.lin_factored(), big(1120));
        assert_eq!(p.lin_residual(), big(-1072));
    }

    #[test]
    fn zero_profile() {
        let (p, checks) = xyzw_profile(&big(0), &big(0), &big(0), &big(0)).unwrap();
        assert!(p.x.is_zero() && p.y.is_zero() && p.z.is_zero() && p.w.is_zero());
        assert!(p.t_value.is_zero());
        assert!(checks.all());
        assert_eq!(p.quartic(&big(3)), big(81));
    }

    #[test]
    fn inconsistent_inputs_rejected() {
        assert!(xyzw_profile(&big(158), &big(131), &big(127), &big(175)).is_err());
        assert!(xyzw_profile(&big(1), &big(1), &big(1), &big(1)).is_err());
    }

    #[test]
    fn expansion_examples() {
        assert!(t_expansion_check(&big(0), &big(0), &big(0), &big(0), &big(1)));
        assert!(t_expansion_check(&big(1), &big(0), &big(0), &big(0), &big(1)));
        assert!(t_expansion_check(&big(1408), &big(364), &big(900), &big(144), &big(-108)));
        // (1,0,0,0,1): T = δ⁴ + δ³ = 2, product side −2
        let (k3, k2, k1) = coefficients(&big(1), &big(0), &big(0), &big(0));
        assert_eq!((k3, k2, k1), (big(1), big(0), big(0)));
        let lhs = big(2) * big(1) * big(1) * big(-1);
        assert_eq!(lhs, big(0) - big(2));
    }

    #[test]
    fn root_audit_on_smallest_triangle() {
        let (p, _) = xyzw_profile(&big(158), &big(131), &big(127), &big(174)).unwrap();
        let audit = quartic_root_audit(&p);
        let values: Vec<_> = audit.iter().map(|r| (r.candidate, r.at.clone(), r.value.clone())).collect();
        assert_eq!(values[0], (RootCandidate::Zero, big(0), big(0)));
        assert_eq!(values[1], (RootCandidate::Delta, big(-108), big(0)));
        assert_eq!(values[2].1, big(108));
        assert_eq!(values[2].2, big(66_421_555_200) - big(1516) * big(472) * big(1008) * big(36));
        assert_eq!(values[2].2, big(40_455_604_224));
        assert_eq!(values[3].1, big(-2528));
        assert_eq!(values[3].2, big(10_609_468_334_080));
    }

    #[test]
    fn equal_medians_collapse_candidates() {
        // equilateral-type medians: m_a = m_b gives δ = 0
        let p = QuarticProfile::new(big(5), big(5), big(4), big(3));
        let audit = quartic_root_audit(&p);
        assert!(audit[0].vanishes());
        assert!(audit[1].vanishes() && audit[2].vanishes());
    }

    #[test]
    fn rational_profile_on_companion() {
        // companion of the smallest triangle: sides (254, 262, 316)/3, medians (87, 85, 68)
        let (p, checks) = xyzw_profile(&ratio(87, 1), &ratio(85, 1), &ratio(68, 1), &ratio(316, 3)).unwrap();
        assert!(checks.all());
        assert!(p.t_value.is_zero());
    }
}
