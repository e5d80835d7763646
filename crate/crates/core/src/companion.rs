//! The companion transform and the descent driver built on it.
//!
//! The companion of a triangle with rational medians `(m_a, m_b, m_c)` is the
//! triangle with sides `(2/3)·(m_a, m_b, m_c)`. Its medians are half the
//! original sides and its area is a third of the original area, so
//! `16·S²` shrinks by exactly 9.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use serde::Serialize;

use crate::arith::{rational_to_integer, ratio, residue3, Exact};
use crate::error::{Error, Result};
use crate::triangle::{AreaClass, IntTriangle, RatTriangle, Triangle};

/// Companion triangle with sides `(2/3)·medians`, sorted.
pub fn companion<N: Exact>(t: &Triangle<N>) -> Result<RatTriangle> {
    let rational = t.to_rational();
    let medians = rational.exact_medians().ok_or_else(|| {
        Error::Unsupported(format!("triangle {t} has irrational medians"))
    })?;
    let two_thirds = ratio(2, 3);
    let [ma, mb, mc] = medians.map(|m| m * two_thirds.clone());
    let child = Triangle::new(ma, mb, mc)?;

    // The companion's medians must be half the parent's sides.
    let mut child_medians = child.exact_medians().ok_or_else(|| audit_failure(t, "companion medians are irrational"))?;
    child_medians.sort();
    let halves = rational.sides().clone().map(|s| s * ratio(1, 2));
    if child_medians != halves {
        return Err(audit_failure(t, "companion medians differ from half the sides"));
    }
    Ok(child)
}

/// Companion of an integer triangle when it is itself integral.
pub fn integral_companion(t: &IntTriangle) -> Result<Option<IntTriangle>> {
    let child = companion(t)?;
    let sides: Option<Vec<BigInt>> = child.sides().iter().map(rational_to_integer).collect();
    Ok(sides.map(|s| {
        let [a, b, c]: [BigInt; 3] = s.try_into().expect("three sides");
        IntTriangle::new(a, b, c).expect("companion of a valid triangle is valid")
    }))
}

fn audit_failure<N: Exact>(t: &Triangle<N>, what: &str) -> Error {
    let [a, b, c] = t.sides();
    Error::AuditFailed {
        a: a.to_string(),
        b: b.to_string(),
        c: c.to_string(),
        what: what.to_string(),
    }
}

/// `9 · heron16(companion(T)) == heron16(T)`.
pub fn area_ratio_check<N: Exact>(t: &Triangle<N>) -> Result<bool> {
    let child = companion(t)?;
    Ok(child.heron16() * ratio(9, 1) == t.heron16().to_rational())
}

/// Whether the sorted side ratios of two triangles all agree.
pub fn similarity_check<N: Exact, M: Exact>(t1: &Triangle<N>, t2: &Triangle<M>) -> bool {
    let s1 = t1.to_rational();
    let s2 = t2.to_rational();
    let k = s1.a() / s2.a();
    s1.b() / s2.b() == k && s1.c() / s2.c() == k
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub enum Gate {
    /// Every median is an integer.
    IntegerMedians,
    /// Every median is divisible by 3, so `(2/3)·m` is an integer.
    MediansDivisibleBy3,
    /// Every side is even, so the companion's medians `a/2` are integers.
    SidesEven,
    /// `S` is an integer divisible by 3, so the companion area `S/3` is too.
    AreaDivisibleBy3,
}

impl Gate {
    pub fn code(self) -> &'static str {
        match self {
            Gate::IntegerMedians => "g1",
            Gate::MediansDivisibleBy3 => "g2",
            Gate::SidesEven => "g3",
            Gate::AreaDivisibleBy3 => "g4",
        }
    }
}

impl fmt::Display for Gate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let what = match self {
            Gate::IntegerMedians => "integer medians",
            Gate::MediansDivisibleBy3 => "medians divisible by 3",
            Gate::SidesEven => "sides even",
            Gate::AreaDivisibleBy3 => "integer area divisible by 3",
        };
        write!(f, "{} ({what})", self.code())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum DescentOutcome {
    StepProduced(IntTriangle),
    GateFailed(Vec<Gate>),
}

/// Result of one descent step. Every gate is evaluated; nothing
/// short-circuits.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DescentGateReport {
    pub parent: IntTriangle,
    pub medians: Option<[BigInt; 3]>,
    pub medians_integer: bool,
    pub medians_div3: [bool; 3],
    pub sides_even: [bool; 3],
    pub area_class: AreaClass,
    pub area_div3: bool,
    pub side_residues: [u8; 3],
    pub median_residues: Option<[u8; 3]>,
    /// The companion whenever it exists (rational medians), even when a
    /// gate fails.
    pub companion: Option<RatTriangle>,
    pub outcome: DescentOutcome,
}

impl DescentGateReport {
    pub fn failed_gates(&self) -> &[Gate] {
        match &self.outcome {
            DescentOutcome::GateFailed(g) => g,
            DescentOutcome::StepProduced(_) => &[],
        }
    }

    pub fn child(&self) -> Option<&IntTriangle> {
        match &self.outcome {
            DescentOutcome::StepProduced(c) => Some(c),
            DescentOutcome::GateFailed(_) => None,
        }
    }
}

impl fmt::Display for DescentGateReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "triangle {}", self.parent)?;
        match &self.medians {
            Some([a, b, c]) => writeln!(f, "  medians ({a}, {b}, {c})")?,
            None => writeln!(f, "  medians not all integers")?,
        }
        let [ra, rb, rc] = self.side_residues;
        writeln!(f, "  sides mod 3 ({ra}, {rb}, {rc})")?;
        if let Some([ra, rb, rc]) = self.median_residues {
            writeln!(f, "  medians mod 3 ({ra}, {rb}, {rc})")?;
        }
        writeln!(f, "  area {}", self.area_class)?;
        if let Some(c) = &self.companion {
            writeln!(f, "  companion {c}")?;
        }
        match &self.outcome {
            DescentOutcome::StepProduced(child) => write!(f, "  step produced {child}"),
            DescentOutcome::GateFailed(gates) => {
                let list: Vec<String> = gates.iter().map(Gate::to_string).collect();
                write!(f, "  gates failed: {}", list.join(", "))
            }
        }
    }
}

/// Evaluates the four descent gates on `t` and, if all pass, produces the
/// integral companion with `heron16(child) = heron16(t) / 9`.
pub fn descent_step(t: &IntTriangle) -> Result<DescentGateReport> {
    let medians = t.integer_medians();
    let medians_integer = medians.is_some();
    let three = BigInt::from(3);
    let median_residues = medians.as_ref().map(|m| [residue3(&m[0]), residue3(&m[1]), residue3(&m[2])]);
    let medians_div3 = median_residues.map_or([false; 3], |r| r.map(|x| x == 0));
    let sides_even = t.sides().clone().map(|s| s.is_even());
    let area_class = t.area_class();
    let area_div3 = matches!(&area_class, AreaClass::Integer(s) if s.is_multiple_of(&three));
    let side_residues = t.sides().clone().map(|s| residue3(&s));

    let companion = match companion(t) {
        Ok(c) => Some(c),
        Err(Error::Unsupported(_)) => None,
        Err(e) => return Err(e),
    };

    let mut failed = Vec::new();
    if !medians_integer {
        failed.push(Gate::IntegerMedians);
    }
    if !medians_div3.iter().all(|&b| b) {
        failed.push(Gate::MediansDivisibleBy3);
    }
    if !sides_even.iter().all(|&b| b) {
        failed.push(Gate::SidesEven);
    }
    if !area_div3 {
        failed.push(Gate::AreaDivisibleBy3);
    }

    let outcome = if failed.is_empty() {
        let child = integral_companion(t)?
            .ok_or_else(|| audit_failure(t, "gates passed but companion is not integral"))?;
        if child.heron16() * 9 != t.heron16() {
            return Err(audit_failure(t, "descent child area is not a ninth of the parent"));
        }
        DescentOutcome::StepProduced(child)
    } else {
        DescentOutcome::GateFailed(failed)
    };

    Ok(DescentGateReport {
        parent: t.clone(),
        medians,
        medians_integer,
        medians_div3,
        sides_even,
        area_class,
        area_div3,
        side_residues,
        median_residues,
        companion,
        outcome,
    })
}

/// Repeats [`descent_step`] while steps are produced, at most `max_iters`
/// times. Terminates because `16·S²` drops by a factor 9 each step.
pub fn descent_run(t: &IntTriangle, max_iters: usize) -> Result<Vec<DescentGateReport>> {
    let mut trace = Vec::new();
    let mut current = t.clone();
    for _ in 0..max_iters {
        let report = descent_step(&current)?;
        let next = report.child().cloned();
        trace.push(report);
        match next {
            Some(child) => current = child,
            None => break,
        }
    }
    Ok(trace)
}
