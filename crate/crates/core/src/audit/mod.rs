//! Mechanical checks of the identity systems around integer-median
//! triangles.
//!
//! Two kinds of result come out of here. Universal identities (the eight
//! equal-area products, the shift brackets, the quartic coefficients,
//! `T(δ) = 0`, the cubic-sum factorization, the mod-3 implications) hold for
//! every genuine input, and a failure means a bug. Conditional claims (the
//! extra roots `−δ₂` and `−16m_a`, the factored linear coefficient) are
//! reported as exact values and never asserted.

pub mod conditions;
pub mod cubic;
pub mod lemmas;
pub mod quartic;
pub mod shifts;

use std::fmt;

use num_bigint::BigInt;

pub use conditions::{eight_conditions, eight_conditions_squared, ConditionReport, NORMALIZERS};
pub use cubic::{cubic_sum, cubic_sum_check, CubicSum};
pub use lemmas::{lemma2_check, lemma3_mod3, Lemma2Report, Lemma3Report};
pub use quartic::{
    quartic_root_audit, t_expansion_check, xyzw_profile, QuarticChecks, QuarticProfile, RootAudit,
    RootCandidate,
};
pub use shifts::{shift_profile, shifted_products_consistent, ShiftProfile};

use crate::error::{Error, Result};
use crate::triangle::IntTriangle;

/// Every audit for one integer-median triangle.
#[derive(Clone, Debug)]
pub struct TriangleAudit {
    pub triangle: IntTriangle,
    pub medians: [BigInt; 3],
    pub conditions: ConditionReport<BigInt>,
    pub shifts: ShiftProfile,
    pub quartic: QuarticProfile<BigInt>,
    pub quartic_checks: QuarticChecks,
    pub roots: Vec<RootAudit<BigInt>>,
    pub lemma2: Lemma2Report,
    pub lemma3: Lemma3Report,
    pub cubic: CubicSum<BigInt>,
}

/// Names of universal identities that failed; empty when all hold.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct IdentityFailures(pub Vec<&'static str>);

impl IdentityFailures {
    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

impl TriangleAudit {
    pub fn run(t: &IntTriangle) -> Result<Self> {
        let medians = t
            .integer_medians()
            .ok_or_else(|| Error::Unsupported(format!("triangle {t} has no integer medians")))?;
        let conditions = eight_conditions(t.sides(), &medians)?;
        let shifts = shift_profile(t.sides(), &medians);
        let [m_a, m_b, m_c] = &medians;
        let (quartic, quartic_checks) = xyzw_profile(m_a, m_b, m_c, t.c())?;
        let roots = quartic_root_audit(&quartic);
        let lemma2 = lemma2_check(t)?;
        let lemma3 = lemma3_mod3(m_a, m_c, t.c());
        let cubic = cubic_sum(m_a, m_b, m_c, t.c(), &quartic.delta);
        Ok(TriangleAudit {
            triangle: t.clone(),
            medians,
            conditions,
            shifts,
            quartic,
            quartic_checks,
            roots,
            lemma2,
            lemma3,
            cubic,
        })
    }

    pub fn failures(&self) -> IdentityFailures {
        let q = &self.quartic;
        let heron_144 = self.triangle.heron16() * 9;
        let checks: [(&'static str, bool); 12] = [
            ("eight conditions equal", self.conditions.all_equal),
            ("eight conditions equal 144*S^2", self.conditions.common() == Some(&heron_144)),
            ("shift brackets", self.shifts.brackets_hold()),
            ("shifted products", shifted_products_consistent(&self.shifts)),
            ("xyzw = 576*S^2", self.quartic_checks.xyzw_is_576_s2),
            ("x+y+z-w = 16*m_a", self.quartic_checks.cubic_coeff),
            ("quadratic coefficient", self.quartic_checks.quad_coeff),
            ("T(delta) = 0", self.quartic_checks.t_zero),
            ("T expansion", t_expansion_check(&q.x, &q.y, &q.z, &q.w, &q.delta)),
            ("median divisibility all-or-none", self.lemma2.implication_holds),
            ("m_c divisible by 3 when delta is integral", self.lemma3.constraint_holds),
            ("cubic sum factorization", self.cubic.holds),
        ];
        IdentityFailures(checks.iter().filter(|(_, ok)| !ok).map(|(name, _)| *name).collect())
    }
}

impl fmt::Display for TriangleAudit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [ma, mb, mc] = &self.medians;
        writeln!(f, "triangle {} medians ({ma}, {mb}, {mc})", self.triangle)?;
        writeln!(f, "16*S^2 = {}", self.triangle.heron16())?;

        writeln!(f, "eight conditions (normalized to 144*S^2):")?;
        for (i, (q, n)) in self.conditions.products.iter().zip(&self.conditions.normalized).enumerate() {
            writeln!(f, "  q{} = {q}  x{} = {n}", i + 1, NORMALIZERS[i])?;
        }
        writeln!(f, "  all equal: {}", self.conditions.all_equal)?;

        let s = &self.shifts;
        writeln!(f, "shifts: delta = ({}, {}, {}), theta = ({}, {}, {}), brackets hold: {}",
            s.delta[0], s.delta[1], s.delta[2], s.theta[0], s.theta[1], s.theta[2], s.brackets_hold())?;

        let q = &self.quartic;
        writeln!(f, "quartic profile: x = {}, y = {}, z = {}, w = {}", q.x, q.y, q.z, q.w)?;
        writeln!(f, "  delta = {}, xyzw = {}, T(delta) = {}", q.delta, q.xyzw, q.t_value)?;
        writeln!(f, "  coefficients: cubic = {}, quad = {}, lin = {}", q.coeff_cubic, q.coeff_quad, q.coeff_lin)?;
        writeln!(f, "  factored linear coefficient = {}, residual = {}", q.lin_factored(), q.lin_residual())?;
        writeln!(f, "root candidates:")?;
        for r in &self.roots {
            let tag = if r.vanishes() { "vanishes" } else { "nonzero" };
            writeln!(f, "  {} = {}: {} ({tag})", r.candidate, r.at, r.value)?;
        }

        let l2 = &self.lemma2;
        writeln!(f, "median residues mod 3: {:?}, (a^2+b^2+c^2) mod 3 = {}, all-or-none: {}",
            l2.median_residues, l2.sum_sq_residue, l2.implication_holds)?;
        let l3 = &self.lemma3;
        let sign = match l3.sign {
            std::cmp::Ordering::Less => "negative",
            std::cmp::Ordering::Equal => "zero",
            std::cmp::Ordering::Greater => "positive",
        };
        writeln!(f, "8m_c^2 + 18c^2 - 96m_a^2 = {} ({sign}, mod 3 = {}), integer delta: {}",
            l3.rhs, l3.residue,
            l3.delta2.as_ref().map_or("none".to_string(), |d| d.to_string()))?;
        write!(f, "cubic sum: P_a + Q_b = {} = 16(m_a+m_b)*R with R = {}: {}",
            &self.cubic.p_a + &self.cubic.q_b, self.cubic.r, self.cubic.holds)
    }
}
