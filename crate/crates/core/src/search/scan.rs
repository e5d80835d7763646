//! Inner enumeration loop over one shard.

use num_bigint::BigInt;

use crate::arith::fast;
use crate::triangle::IntTriangle;

use super::Shard;

/// Largest side the machine-word path accepts: `2b² + 2c²` stays below 2⁶³.
pub const FAST_LIMIT: u64 = 1 << 30;

/// Median from its discriminant: `Some(√D / 2)` when `D = 4m²`.
#[inline]
fn median_of(d: u64) -> Option<u64> {
    // an even root needs D ≡ 0 mod 4
    if d & 3 != 0 {
        return None;
    }
    fast::square_root(d).map(|r| r / 2)
}

/// Integer medians `(m_a, m_b, m_c)` of the sorted triple `a ≤ b ≤ c`, with
/// the smallest discriminant `D_c` tested first.
#[inline]
pub fn fast_medians(a: u64, b: u64, c: u64) -> Option<[u64; 3]> {
    debug_assert!(c <= FAST_LIMIT);
    let (a2, b2, c2) = (a * a, b * b, c * c);
    let mc = median_of(2 * (a2 + b2) - c2)?;
    let mb = median_of(2 * (a2 + c2) - b2)?;
    let ma = median_of(2 * (b2 + c2) - a2)?;
    Some([ma, mb, mc])
}

/// Arbitrary-precision path, used above [`FAST_LIMIT`] and as the reference
/// the fast path is tested against.
pub fn reference_medians(a: u64, b: u64, c: u64) -> Option<[BigInt; 3]> {
    IntTriangle::from_u64(a, b, c).ok()?.integer_medians()
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ShardResult {
    /// Sorted triples `(a, b, c)` with integer medians, in `(c, b, a)` order.
    pub hits: Vec<(u64, u64, u64)>,
    pub triples_scanned: u64,
}

/// Scans every `a ≤ b ≤ c` with `a + b > c` and `c` in the shard.
///
/// With `even_only` only even sides are visited.
pub fn scan_shard(shard: &Shard, even_only: bool) -> ShardResult {
    let mut out = ShardResult::default();
    let step = if even_only { 2 } else { 1 };
    let mut c = shard.start;
    if even_only && c % 2 == 1 {
        c += 1;
    }
    while c < shard.end {
        let b_lo = c / 2 + 1;
        let b_lo = if even_only { b_lo + (b_lo & 1) } else { b_lo };
        let mut b = b_lo;
        while b <= c {
            let a_lo = c - b + 1;
            let a_lo = if even_only { a_lo + (a_lo & 1) } else { a_lo };
            if a_lo <= b {
                out.triples_scanned += (b - a_lo) / step + 1;
            }
            let mut a = a_lo;
            while a <= b {
                let hit = if c <= FAST_LIMIT {
                    fast_medians(a, b, c).is_some()
                } else {
                    reference_medians(a, b, c).is_some()
                };
                if hit {
                    out.hits.push((a, b, c));
                }
                a += step;
            }
            b += step;
        }
        c += step;
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fast_medians_of_smallest_triangle() {
        assert_eq!(fast_medians(136, 170, 174), Some([158, 131, 127]));
        assert_eq!(fast_medians(3, 4, 5), None);
    }

    #[test]
    fn scan_counts_triples() {
        // c = 4: b ∈ {3, 4}; b = 3 → a ∈ {2, 3}; b = 4 → a ∈ {1..4}
        let r = scan_shard(&Shard { start: 4, end: 5 }, false);
        assert_eq!(r.triples_scanned, 6);
        assert!(r.hits.is_empty());
    }

    #[test]
    fn scan_finds_smallest_triangle() {
        let r = scan_shard(&Shard { start: 3, end: 175 }, false);
        assert_eq!(r.hits, vec![(136, 170, 174)]);
        let even = scan_shard(&Shard { start: 3, end: 175 }, true);
        assert_eq!(even.hits, r.hits);
        assert!(even.triples_scanned * 7 < r.triples_scanned);
    }

    #[test]
    fn reference_agrees_on_hit() {
        let m = reference_medians(136, 170, 174).unwrap();
        assert_eq!(m, [158, 131, 127].map(BigInt::from));
    }
}
