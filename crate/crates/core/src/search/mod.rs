//! Bounded enumeration of triangles with integer sides and integer medians.
//!
//! The range of the largest side is cut into shards that are scanned
//! independently and merged in `(c, b, a)` order, so the output does not
//! depend on the shard count or on scheduling.

pub mod certify;
pub mod scan;

use std::path::PathBuf;

use num_integer::Integer;
use rayon::prelude::*;

pub use certify::{certify, Audits, CertifiedMedianTriangle, Mod3Profile};
pub use scan::{fast_medians, reference_medians, scan_shard, ShardResult, FAST_LIMIT};

use crate::error::{Error, Result};
use crate::triangle::IntTriangle;

/// Bound up to which the all-sides-even property is checked by a full
/// unfiltered scan before the even filter may be used above it.
pub const CALIBRATION_BOUND: u64 = 400;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchConfig {
    pub max_side: u64,
    pub shards: usize,
    pub use_even_filter: bool,
    pub output_path: PathBuf,
}

impl SearchConfig {
    pub fn new(max_side: u64) -> Self {
        SearchConfig {
            max_side,
            shards: 1,
            use_even_filter: false,
            output_path: PathBuf::from("results.jsonl"),
        }
    }

    pub fn with_shards(mut self, shards: usize) -> Self {
        self.shards = shards;
        self
    }

    pub fn with_even_filter(mut self, on: bool) -> Self {
        self.use_even_filter = on;
        self
    }

    pub fn validate(&self) -> Result<()> {
        if self.max_side < 3 {
            return Err(Error::Config(format!("max_side must be at least 3, got {}", self.max_side)));
        }
        if self.shards == 0 {
            return Err(Error::Config("shards must be at least 1".into()));
        }
        Ok(())
    }
}

/// Half-open range `[start, end)` of the largest side.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Shard {
    pub start: u64,
    pub end: u64,
}

impl Shard {
    pub fn is_empty(&self) -> bool {
        self.start >= self.end
    }
}

/// Splits `[3, max_side]` into `count` contiguous disjoint shards of
/// roughly equal work. The work for largest side `c` grows like `c²`, so
/// boundaries follow the cumulative sum of `c²`. Trailing shards may be
/// empty when `count` exceeds the number of sides.
pub fn plan_shards(max_side: u64, count: usize) -> Vec<Shard> {
    let (lo, hi) = (3u64, max_side + 1);
    if count <= 1 || hi <= lo {
        return vec![Shard { start: lo, end: hi.max(lo) }];
    }
    let total: u128 = (lo..hi).map(|c| u128::from(c) * u128::from(c)).sum();
    let mut shards = Vec::with_capacity(count);
    let mut start = lo;
    let mut acc: u128 = 0;
    let mut c = lo;
    for k in 1..count {
        let target = total * k as u128 / count as u128;
        while c < hi && acc + u128::from(c) * u128::from(c) <= target {
            acc += u128::from(c) * u128::from(c);
            c += 1;
        }
        shards.push(Shard { start, end: c });
        start = c;
    }
    shards.push(Shard { start, end: hi });
    shards
}

#[derive(Clone, Debug)]
pub struct SearchOutcome {
    pub records: Vec<CertifiedMedianTriangle>,
    pub triples_scanned: u64,
    pub even_filter: bool,
}

impl SearchOutcome {
    pub fn counterexamples(&self) -> Vec<CertifiedMedianTriangle> {
        counterexample_scan(&self.records)
    }
}

/// Every unordered triple up to `max_side` with integer medians, certified,
/// sorted by `(c, b, a)`.
pub fn enumerate(config: &SearchConfig) -> Result<SearchOutcome> {
    config.validate()?;
    let shards = plan_shards(config.max_side, config.shards);
    let even = config.use_even_filter;
    let results: Vec<ShardResult> = shards.par_iter().map(|s| scan_shard(s, even)).collect();

    let triples_scanned = results.iter().map(|r| r.triples_scanned).sum();
    let mut hits: Vec<(u64, u64, u64)> = results.into_iter().flat_map(|r| r.hits).collect();
    hits.sort_by_key(|&(a, b, c)| (c, b, a));

    let records = hits
        .par_iter()
        .map(|&(a, b, c)| certify(&IntTriangle::from_u64(a, b, c)?))
        .collect::<Result<Vec<_>>>()?;
    Ok(SearchOutcome {
        records,
        triples_scanned,
        even_filter: even,
    })
}

/// Records whose area is rational (integer or not).
pub fn counterexample_scan(records: &[CertifiedMedianTriangle]) -> Vec<CertifiedMedianTriangle> {
    records.iter().filter(|r| r.is_counterexample()).cloned().collect()
}

/// Full unfiltered scan up to `max_side`; true when every hit has all
/// sides even.
pub fn even_filter_soundness(max_side: u64) -> Result<bool> {
    if max_side < 3 {
        return Ok(true);
    }
    let shards = rayon::current_num_threads().max(1);
    let outcome = enumerate(&SearchConfig::new(max_side).with_shards(shards))?;
    Ok(outcome
        .records
        .iter()
        .all(|r| r.sides().iter().all(Integer::is_even)))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum EvenFilterMode {
    #[default]
    Auto,
    Off,
}

impl std::str::FromStr for EvenFilterMode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "auto" => Ok(EvenFilterMode::Auto),
            "off" => Ok(EvenFilterMode::Off),
            other => Err(Error::Config(format!("even filter must be auto or off, got {other:?}"))),
        }
    }
}

/// How the even filter was decided for one run.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct EvenFilterDecision {
    pub enabled: bool,
    /// `Some(result)` when a calibration scan ran.
    pub calibration: Option<bool>,
    pub calibration_bound: u64,
}

/// `Auto` enables the filter only above [`CALIBRATION_BOUND`] and only
/// after the calibration scan confirms the evenness property.
pub fn resolve_even_filter(mode: EvenFilterMode, max_side: u64) -> Result<EvenFilterDecision> {
    let mut decision = EvenFilterDecision {
        enabled: false,
        calibration: None,
        calibration_bound: CALIBRATION_BOUND,
    };
    if mode == EvenFilterMode::Auto && max_side > CALIBRATION_BOUND {
        let sound = even_filter_soundness(CALIBRATION_BOUND)?;
        decision.calibration = Some(sound);
        decision.enabled = sound;
    }
    Ok(decision)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn shards_partition_the_range() {
        for max_side in [3u64, 4, 10, 174, 400, 1000] {
            for count in 1..=12 {
                let shards = plan_shards(max_side, count);
                assert_eq!(shards.len(), count.max(1));
                assert_eq!(shards[0].start, 3);
                assert_eq!(shards.last().unwrap().end, max_side + 1);
                for w in shards.windows(2) {
                    assert_eq!(w[0].end, w[1].start);
                    assert!(w[0].start <= w[0].end);
                }
            }
        }
    }

    #[test]
    fn shards_balance_work() {
        let shards = plan_shards(1000, 4);
        let work: Vec<u128> = shards
            .iter()
            .map(|s| (s.start..s.end).map(|c| u128::from(c) * u128::from(c)).sum())
            .collect();
        let max = *work.iter().max().unwrap();
        let min = *work.iter().min().unwrap();
        assert!(max - min < max / 50, "{work:?}");
    }

    #[test]
    fn config_validation() {
        assert!(SearchConfig::new(2).validate().is_err());
        assert!(SearchConfig::new(10).with_shards(0).validate().is_err());
        assert!(SearchConfig::new(3).validate().is_ok());
    }

    #[test]
    fn enumerate_small_bounds() {
        assert!(enumerate(&SearchConfig::new(100)).unwrap().records.is_empty());
        let out = enumerate(&SearchConfig::new(174)).unwrap();
        assert_eq!(out.records.len(), 1);
        assert_eq!(out.records[0].triangle, IntTriangle::from_u64(136, 170, 174).unwrap());
    }

    #[test]
    fn counterexample_scan_empty_input() {
        assert!(counterexample_scan(&[]).is_empty());
    }

    #[test]
    fn even_filter_soundness_small() {
        assert!(even_filter_soundness(100).unwrap());
        assert!(even_filter_soundness(200).unwrap());
    }

    #[test]
    fn even_filter_mode_parsing() {
        assert_eq!("auto".parse::<EvenFilterMode>().unwrap(), EvenFilterMode::Auto);
        assert_eq!("off".parse::<EvenFilterMode>().unwrap(), EvenFilterMode::Off);
        assert!("on".parse::<EvenFilterMode>().is_err());
        let d = resolve_even_filter(EvenFilterMode::Auto, 174).unwrap();
        assert!(!d.enabled && d.calibration.is_none());
        let d = resolve_even_filter(EvenFilterMode::Off, 10_000).unwrap();
        assert!(!d.enabled);
    }
}
