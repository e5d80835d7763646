use num_bigint::BigInt;

use crate::arith::residue3;
use crate::audit::{eight_conditions, lemma2_check, xyzw_profile};
use crate::companion::{companion, similarity_check};
use crate::error::{Error, Result};
use crate::triangle::{AreaClass, IntTriangle};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Mod3Profile {
    pub sides: [u8; 3],
    pub medians: [u8; 3],
    pub sum_sq: u8,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Audits {
    pub eight_conditions: bool,
    pub t_zero: bool,
    pub lemma2: bool,
    pub nonsimilar_companion: bool,
}

impl Audits {
    pub fn all(&self) -> bool {
        self.eight_conditions && self.t_zero && self.lemma2 && self.nonsimilar_companion
    }
}

/// Audit record for one triangle with integer sides and medians.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CertifiedMedianTriangle {
    pub triangle: IntTriangle,
    pub medians: [BigInt; 3],
    pub heron16: BigInt,
    pub area_class: AreaClass,
    pub mod3: Mod3Profile,
    pub audits: Audits,
    pub primitive: IntTriangle,
}

impl CertifiedMedianTriangle {
    pub fn sides(&self) -> &[BigInt; 3] {
        self.triangle.sides()
    }

    /// Rational or integer area, the object of the open question.
    pub fn is_counterexample(&self) -> bool {
        !self.area_class.is_irrational()
    }
}

/// Fills every field and runs the four universal audits. Any audit failure
/// is returned as [`Error::AuditFailed`].
pub fn certify(t: &IntTriangle) -> Result<CertifiedMedianTriangle> {
    let medians = t
        .integer_medians()
        .ok_or_else(|| Error::Unsupported(format!("triangle {t} has no integer medians")))?;
    let heron16 = t.heron16();
    let area_class = t.area_class();

    let conditions = eight_conditions(t.sides(), &medians)?;
    let eight_ok = conditions.all_equal && conditions.common() == Some(&(&heron16 * 9));
    let [m_a, m_b, m_c] = &medians;
    let (_, checks) = xyzw_profile(m_a, m_b, m_c, t.c())?;
    let lemma2 = lemma2_check(t)?;
    let child = companion(t)?;
    let audits = Audits {
        eight_conditions: eight_ok,
        t_zero: checks.t_zero,
        lemma2: lemma2.implication_holds,
        nonsimilar_companion: !similarity_check(t, &child),
    };
    if !audits.all() {
        let [a, b, c] = t.sides();
        return Err(Error::AuditFailed {
            a: a.to_string(),
            b: b.to_string(),
            c: c.to_string(),
            what: format!("{audits:?}"),
        });
    }

    let [a, b, c] = t.sides();
    let mod3 = Mod3Profile {
        sides: [residue3(a), residue3(b), residue3(c)],
        medians: lemma2.median_residues,
        sum_sq: lemma2.sum_sq_residue,
    };
    Ok(CertifiedMedianTriangle {
        triangle: t.clone(),
        medians,
        heron16,
        area_class,
        mod3,
        audits,
        primitive: t.primitive(),
    })
}
