//! Residue checks mod 3: the all-or-none divisibility of integer medians
//! and the constraint on `m_c` from `δ₂² = 8m_c² + 18c² − 96m_a²`.

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::arith::{residue3, sqrt_if_square};
use crate::error::{Error, Result};
use crate::triangle::IntTriangle;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Lemma2Report {
    /// `(a² + b² + c²) mod 3`.
    pub sum_sq_residue: u8,
    pub median_residues: [u8; 3],
    /// No median divisible by 3, or all three are.
    pub implication_holds: bool,
}

/// Since `4m_a² = 3(b² + c²) − (a² + b² + c²)`, every `m²` is congruent to
/// `−(a² + b² + c²)` mod 3, so divisibility by 3 is all-or-none.
pub fn lemma2_check(t: &IntTriangle) -> Result<Lemma2Report> {
    let medians = t
        .integer_medians()
        .ok_or_else(|| Error::Unsupported(format!("triangle {t} has no integer medians")))?;
    let [a, b, c] = t.sides();
    let sum_sq_residue = residue3(&(a * a + b * b + c * c));
    let median_residues = medians.map(|m| residue3(&m));
    let zeros = median_residues.iter().filter(|&&r| r == 0).count();
    Ok(Lemma2Report {
        sum_sq_residue,
        median_residues,
        implication_holds: zeros == 0 || zeros == 3,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Lemma3Report {
    /// `8m_c² + 18c² − 96m_a²`.
    pub rhs: BigInt,
    pub sign: Ordering,
    pub residue: u8,
    /// `Some(δ₂)` with `δ₂ ≥ 0` when `rhs` is a nonnegative perfect square.
    pub delta2: Option<BigInt>,
    /// `m_c mod 3`.
    pub m_c_residue: u8,
    /// An integer `δ₂` exists only if `m_c ≡ 0 (mod 3)`; false only if a
    /// solution exists with `m_c` not divisible by 3.
    pub constraint_holds: bool,
}

impl Lemma3Report {
    pub fn has_integer_delta(&self) -> bool {
        self.delta2.is_some()
    }
}

/// `rhs ≡ 2·m_c² (mod 3)` and squares are `0` or `1` mod 3, so a square
/// `rhs` forces `m_c ≡ 0`.
pub fn lemma3_mod3(m_a: &BigInt, m_c: &BigInt, c: &BigInt) -> Lemma3Report {
    let rhs = BigInt::from(8) * m_c * m_c + BigInt::from(18) * c * c - BigInt::from(96) * m_a * m_a;
    let sign = rhs.cmp(&BigInt::zero());
    let residue = residue3(&rhs);
    let delta2 = if rhs.is_negative() {
        None
    } else {
        sqrt_if_square(&rhs).expect("nonnegative")
    };
    let m_c_residue = residue3(m_c);
    let constraint_holds = delta2.is_none() || m_c_residue == 0;
    Lemma3Report {
        rhs,
        sign,
        residue,
        delta2,
        m_c_residue,
        constraint_holds,
    }
}
