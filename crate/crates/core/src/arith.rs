//! Exact integer and rational kernel.
//!
//! Everything that decides whether a quantity is a perfect square goes
//! through this module. There is no floating point on any certification
//! path: a single rounding error could invent or hide a square.

use std::fmt::{Debug, Display};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed};

use crate::error::{Error, Result};

/// Floor square root with an exactness flag.
///
/// Returns `(⌊√n⌋, ⌊√n⌋² == n)`.
pub fn isqrt_exact(n: &BigInt) -> Result<(BigInt, bool)> {
    if n.is_negative() {
        return Err(Error::Domain(format!("square root of negative integer {n}")));
    }
    let root = n.sqrt();
    let exact = &root * &root == *n;
    Ok((root, exact))
}

/// Exact root of a perfect square, `None` when `n` is not a square.
pub fn sqrt_if_square(n: &BigInt) -> Result<Option<BigInt>> {
    let (root, exact) = isqrt_exact(n)?;
    Ok(exact.then_some(root))
}

/// Exact rational square root; `Some` only when numerator and denominator
/// are both perfect squares (a reduced fraction has no other rational root).
pub fn rat_sqrt_exact(q: &BigRational) -> Result<Option<BigRational>> {
    if q.is_negative() {
        return Err(Error::Domain(format!("square root of negative rational {q}")));
    }
    let num = match sqrt_if_square(q.numer())? {
        Some(r) => r,
        None => return Ok(None),
    };
    let den = match sqrt_if_square(q.denom())? {
        Some(r) => r,
        None => return Ok(None),
    };
    Ok(Some(BigRational::new(num, den)))
}

/// `n mod 3` normalized into `{0, 1, 2}`.
pub fn residue3(n: &BigInt) -> u8 {
    let r = n.mod_floor(&BigInt::from(3));
    // mod_floor with a positive modulus is already in 0..3
    u8::try_from(&r).expect("residue mod 3 fits in u8")
}

/// Scalar types the triangle and audit code is generic over.
///
/// Implemented for [`BigInt`] and [`BigRational`]; both are exact, so every
/// identity the audits check is an equality, never a tolerance.
pub trait Exact:
    Clone + Ord + Signed + Debug + Display + Send + Sync + 'static
{
    fn from_bigint(n: BigInt) -> Self;

    /// Exact square root, `None` when irrational in this domain.
    fn sqrt_exact(&self) -> Result<Option<Self>>;

    /// `self / 2` when representable.
    fn half(&self) -> Option<Self>;

    fn to_rational(&self) -> BigRational;

    fn from_i64(n: i64) -> Self {
        Self::from_bigint(BigInt::from(n))
    }
}

impl Exact for BigInt {
    fn from_bigint(n: BigInt) -> Self {
        n
    }

    fn sqrt_exact(&self) -> Result<Option<Self>> {
        sqrt_if_square(self)
    }

    fn half(&self) -> Option<Self> {
        self.is_even().then(|| self / 2)
    }

    fn to_rational(&self) -> BigRational {
        BigRational::from_integer(self.clone())
    }
}

impl Exact for BigRational {
    fn from_bigint(n: BigInt) -> Self {
        BigRational::from_integer(n)
    }

    fn sqrt_exact(&self) -> Result<Option<Self>> {
        rat_sqrt_exact(self)
    }

    fn half(&self) -> Option<Self> {
        Some(self / BigRational::from_integer(BigInt::from(2)))
    }

    fn to_rational(&self) -> BigRational {
        self.clone()
    }
}

/// Shorthand for small constants in generic code.
pub(crate) fn lit<N: Exact>(v: i64) -> N {
    N::from_i64(v)
}

/// The reduced rational `num / den`.
pub fn ratio(num: i64, den: i64) -> BigRational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

/// `Some(n)` when `q` is an integer.
pub fn rational_to_integer(q: &BigRational) -> Option<BigInt> {
    q.denom().is_one().then(|| q.numer().clone())
}

/// Heron-type product written in squared lengths:
/// `(p+q+r)(p+q−r)(p−q+r)(−p+q+r)` equals `2(uv+vw+wu) − u² − v² − w²`
/// when `u = p²`, `v = q²`, `w = r²`. Works when only the squares are known.
pub fn heron_squared<N: Exact>(u: &N, v: &N, w: &N) -> N {
    let two: N = lit(2);
    two * (u.clone() * v.clone() + v.clone() * w.clone() + w.clone() * u.clone())
        - u.clone() * u.clone()
        - v.clone() * v.clone()
        - w.clone() * w.clone()
}

/// Perfect-square test for machine words: residue tables mod 64 and 63
/// reject most non-squares before the integer square root runs.
pub mod fast {
    const fn residue_table<const M: usize>() -> [bool; M] {
        let mut t = [false; M];
        let mut i = 0;
        while i < M {
            t[(i * i) % M] = true;
            i += 1;
        }
        t
    }

    static SQ64: [bool; 64] = residue_table::<64>();
    static SQ63: [bool; 63] = residue_table::<63>();

    /// Exact root when `n` is a perfect square.
    #[inline]
    pub fn square_root(n: u64) -> Option<u64> {
        if !SQ64[(n & 63) as usize] || !SQ63[(n % 63) as usize] {
            return None;
        }
        let r = n.isqrt();
        (r * r == n).then_some(r)
    }

    /// Fraction of `0..modulus` residues (mod 64·63) that survive the
    /// pre-filter; used to document filter strength in tests.
    pub fn survivor_fraction() -> f64 {
        let survivors = (0..64 * 63usize)
            .filter(|&n| SQ64[n % 64] && SQ63[n % 63])
            .count();
        survivors as f64 / (64 * 63) as f64
    }
}
