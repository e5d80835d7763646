//! Triangle model: validity, median discriminants, Heron's product and the
//! area classification.
//!
//! Medians are carried as their squared discriminants `D_a = 2b² + 2c² − a²`
//! (so `D_a = 4·m_a²`), which are exact for any side type. Exact medians are
//! materialized only when every discriminant has an exact root.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::arith::{lit, Exact};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Shape {
    Valid,
    Degenerate,
    Invalid,
}

/// Classifies three positive lengths by the triangle inequality.
pub fn classify<N: Exact>(a: &N, b: &N, c: &N) -> Result<Shape> {
    if !a.is_positive() || !b.is_positive() || !c.is_positive() {
        return Err(Error::Domain(format!("nonpositive side in ({a}, {b}, {c})")));
    }
    let mut s = [a.clone(), b.clone(), c.clone()];
    s.sort();
    let sum = s[0].clone() + s[1].clone();
    Ok(match sum.cmp(&s[2]) {
        std::cmp::Ordering::Greater => Shape::Valid,
        std::cmp::Ordering::Equal => Shape::Degenerate,
        std::cmp::Ordering::Less => Shape::Invalid,
    })
}

/// A nondegenerate triangle with sides sorted ascending.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Triangle<N> {
    sides: [N; 3],
}

pub type IntTriangle = Triangle<BigInt>;
pub type RatTriangle = Triangle<BigRational>;

impl<N: Exact> Triangle<N> {
    pub fn new(a: N, b: N, c: N) -> Result<Self> {
        match classify(&a, &b, &c)? {
            Shape::Valid => {
                let mut sides = [a, b, c];
                sides.sort();
                Ok(Triangle { sides })
            }
            Shape::Degenerate => Err(Error::Domain(format!("degenerate triangle ({a}, {b}, {c})"))),
            Shape::Invalid => Err(Error::Domain(format!("invalid triangle ({a}, {b}, {c})"))),
        }
    }

    pub fn sides(&self) -> &[N; 3] {
        &self.sides
    }

    pub fn a(&self) -> &N {
        &self.sides[0]
    }

    pub fn b(&self) -> &N {
        &self.sides[1]
    }

    pub fn c(&self) -> &N {
        &self.sides[2]
    }

    pub fn scale(&self, k: &N) -> Self {
        assert!(k.is_positive(), "scale factor must be positive");
        Triangle {
            sides: self.sides.clone().map(|s| s * k.clone()),
        }
    }

    pub fn to_rational(&self) -> RatTriangle {
        Triangle {
            sides: self.sides.clone().map(|s| s.to_rational()),
        }
    }

    pub fn median_squares(&self) -> MedianData<N> {
        MedianData::of(self)
    }

    /// Exact medians `(m_a, m_b, m_c)`, each opposite the side of the same
    /// index. For integer triangles this is `Some` only when every median is
    /// an integer.
    pub fn exact_medians(&self) -> Option<[N; 3]> {
        self.median_squares().exact
    }

    /// `16·S²` via Heron's product.
    pub fn heron16(&self) -> N {
        let [a, b, c] = &self.sides;
        heron16(a, b, c)
    }

    pub fn area_class(&self) -> AreaClass {
        area_class(&self.heron16()).expect("Heron product of a valid triangle is positive")
    }
}

impl IntTriangle {
    pub fn from_u64(a: u64, b: u64, c: u64) -> Result<Self> {
        Self::new(BigInt::from(a), BigInt::from(b), BigInt::from(c))
    }

    /// Integer medians, present iff each discriminant is a square with an
    /// even root.
    pub fn integer_medians(&self) -> Option<[BigInt; 3]> {
        self.exact_medians()
    }

    /// The triangle divided by the gcd of its sides.
    pub fn primitive(&self) -> IntTriangle {
        let [a, b, c] = &self.sides;
        let g = a.gcd(b).gcd(c);
        Triangle {
            sides: self.sides.clone().map(|s| s / &g),
        }
    }
}

impl<N: Exact> fmt::Display for Triangle<N> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a, b, c] = &self.sides;
        write!(f, "({a}, {b}, {c})")
    }
}

/// Squared-median discriminants of one triangle.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MedianData<N> {
    /// `[D_a, D_b, D_c]` with `D_a = 2b² + 2c² − a² = 4·m_a²`.
    pub discriminants: [N; 3],
    /// `[m_a, m_b, m_c]` when every discriminant has an exact root whose
    /// half is representable in `N`.
    pub exact: Option<[N; 3]>,
}

impl<N: Exact> MedianData<N> {
    fn of(t: &Triangle<N>) -> Self {
        let [a, b, c] = t.sides();
        let discriminants = median_discriminants(a, b, c);
        debug_assert_eq!(discriminants, median_discriminants_symmetric(a, b, c));
        let exact = exact_halves(&discriminants);
        MedianData {
            discriminants,
            exact,
        }
    }
}

fn exact_halves<N: Exact>(ds: &[N; 3]) -> Option<[N; 3]> {
    let mut out = Vec::with_capacity(3);
    for d in ds {
        let root = d.sqrt_exact().ok()??;
        out.push(root.half()?);
    }
    out.try_into().ok()
}

/// `[2b²+2c²−a², 2a²+2c²−b², 2a²+2b²−c²]`.
pub fn median_discriminants<N: Exact>(a: &N, b: &N, c: &N) -> [N; 3] {
    let two: N = lit(2);
    let (a2, b2, c2) = (a.clone() * a.clone(), b.clone() * b.clone(), c.clone() * c.clone());
    [
        two.clone() * (b2.clone() + c2.clone()) - a2.clone(),
        two.clone() * (a2.clone() + c2.clone()) - b2.clone(),
        two * (a2 + b2) - c2,
    ]
}

/// The same discriminants written as `3b² + 3c² − (a² + b² + c²)`, the form
/// that exposes the shared `a² + b² + c²` term.
pub fn median_discriminants_symmetric<N: Exact>(a: &N, b: &N, c: &N) -> [N; 3] {
    let three: N = lit(3);
    let (a2, b2, c2) = (a.clone() * a.clone(), b.clone() * b.clone(), c.clone() * c.clone());
    let sum = a2.clone() + b2.clone() + c2.clone();
    [
        three.clone() * (b2.clone() + c2.clone()) - sum.clone(),
        three.clone() * (a2.clone() + c2.clone()) - sum.clone(),
        three * (a2 + b2) - sum,
    ]
}

/// `(a+b+c)(a+b−c)(a+c−b)(b+c−a) = 16·S²`. Zero for degenerate triples.
pub fn heron16<N: Exact>(a: &N, b: &N, c: &N) -> N {
    let (a, b, c) = (a.clone(), b.clone(), c.clone());
    (a.clone() + b.clone() + c.clone())
        * (a.clone() + b.clone() - c.clone())
        * (a.clone() + c.clone() - b.clone())
        * (b + c - a)
}

/// `(m_a+m_b+m_c)(m_a+m_b−m_c)(m_a+m_c−m_b)(m_c+m_b−m_a) = 9·S²`.
pub fn median9<N: Exact>(medians: &[N; 3]) -> N {
    let [ma, mb, mc] = medians;
    heron16(ma, mb, mc)
}

/// Recovers the sides from three medians: `a = (2/3)·√(2m_b² + 2m_c² − m_a²)`.
///
/// `Ok(None)` when any root is irrational.
pub fn sides_from_medians<N: Exact>(medians: &[N; 3]) -> Result<Option<RatTriangle>> {
    let [ma, mb, mc] = medians;
    match classify(ma, mb, mc)? {
        Shape::Valid => {}
        other => {
            return Err(Error::Domain(format!(
                "median triple ({ma}, {mb}, {mc}) is {other:?}"
            )))
        }
    }
    let ds = median_discriminants(&ma.to_rational(), &mb.to_rational(), &mc.to_rational());
    let two_thirds = crate::arith::ratio(2, 3);
    let mut sides = Vec::with_capacity(3);
    for d in &ds {
        match d.sqrt_exact()? {
            Some(root) => sides.push(root * two_thirds.clone()),
            None => return Ok(None),
        }
    }
    let [a, b, c]: [BigRational; 3] = sides.try_into().expect("three sides");
    Triangle::new(a, b, c).map(Some)
}

/// Exact classification of `S` from `16·S²`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AreaClass {
    Integer(BigInt),
    /// Rational but not integral.
    Rational(BigRational),
    Irrational,
}

impl AreaClass {
    pub fn label(&self) -> &'static str {
        match self {
            AreaClass::Integer(_) => "integer",
            AreaClass::Rational(_) => "rational",
            AreaClass::Irrational => "irrational",
        }
    }

    pub fn is_irrational(&self) -> bool {
        matches!(self, AreaClass::Irrational)
    }

    pub fn area(&self) -> Option<BigRational> {
        match self {
            AreaClass::Integer(s) => Some(BigRational::from_integer(s.clone())),
            AreaClass::Rational(s) => Some(s.clone()),
            AreaClass::Irrational => None,
        }
    }
}

impl fmt::Display for AreaClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AreaClass::Integer(s) => write!(f, "integer (S = {s})"),
            AreaClass::Rational(s) => write!(f, "rational (S = {s})"),
            AreaClass::Irrational => f.write_str("irrational"),
        }
    }
}

/// Decides whether `S` is an integer, a non-integral rational, or
/// irrational, given `16·S²`.
pub fn area_class<N: Exact>(heron16: &N) -> Result<AreaClass> {
    let root = match heron16.to_rational().sqrt_exact()? {
        Some(r) => r,
        None => return Ok(AreaClass::Irrational),
    };
    let s = root / BigRational::from_integer(BigInt::from(4));
    Ok(if s.denom().is_one() {
        AreaClass::Integer(s.numer().clone())
    } else if s.is_zero() {
        AreaClass::Integer(BigInt::zero())
    } else {
        AreaClass::Rational(s)
    })
}
