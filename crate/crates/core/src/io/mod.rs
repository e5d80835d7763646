//! Persistence: JSONL records, run manifests, `key = value` configuration
//! and CSV summaries.

pub mod config;
pub mod manifest;
pub mod record;
pub mod report;

use std::path::{Path, PathBuf};
use std::time::Instant;

pub use config::ConfigFile;
pub use manifest::{ConfigEcho, Counts, RunManifest, TOOL_VERSION};
pub use record::{read_records, write_records, Record};
pub use report::write_csv;

use crate::error::Result;
use crate::search::{enumerate, resolve_even_filter, CertifiedMedianTriangle, EvenFilterMode, SearchConfig};

#[derive(Clone, Debug)]
pub struct RunSummary {
    pub manifest: RunManifest,
    pub manifest_path: PathBuf,
    pub records: Vec<CertifiedMedianTriangle>,
    pub counterexamples: Vec<CertifiedMedianTriangle>,
    /// Written only when counterexamples exist.
    pub counterexample_path: Option<PathBuf>,
}

/// `<records>.counterexamples.jsonl`.
pub fn counterexample_path_for(records: &Path) -> PathBuf {
    let mut name = records.as_os_str().to_owned();
    name.push(".counterexamples.jsonl");
    PathBuf::from(name)
}

/// Resolves the even filter, enumerates, and writes the record file and its
/// manifest. `max_side`, `shards` and `output_path` come from `config`; its
/// `use_even_filter` is replaced by the decision for `mode`.
pub fn run_search(config: &SearchConfig, mode: EvenFilterMode) -> Result<RunSummary> {
    config.validate()?;
    let started = Instant::now();
    let decision = resolve_even_filter(mode, config.max_side)?;
    let effective = config.clone().with_even_filter(decision.enabled);
    let outcome = enumerate(&effective)?;
    let counterexamples = outcome.counterexamples();

    write_records(&config.output_path, &outcome.records)?;
    let counterexample_path = if counterexamples.is_empty() {
        None
    } else {
        let path = counterexample_path_for(&config.output_path);
        write_records(&path, &counterexamples)?;
        Some(path)
    };

    let manifest = RunManifest {
        tool_version: TOOL_VERSION.to_string(),
        config: ConfigEcho {
            max_side: config.max_side,
            shards: config.shards,
            even_filter_mode: match mode {
                EvenFilterMode::Auto => "auto".into(),
                EvenFilterMode::Off => "off".into(),
            },
            even_filter_used: decision.enabled,
            even_filter_calibration: decision.calibration,
            calibration_bound: decision.calibration_bound,
            output_path: config.output_path.display().to_string(),
        },
        bound: config.max_side,
        shard_count: config.shards,
        wall_time_secs: started.elapsed().as_secs_f64(),
        counts: Counts {
            triples_scanned: outcome.triples_scanned,
            hits: outcome.records.len(),
            counterexamples: counterexamples.len(),
        },
    };
    let manifest_path = RunManifest::path_for(&config.output_path);
    manifest.write(&manifest_path)?;

    Ok(RunSummary {
        manifest,
        manifest_path,
        records: outcome.records,
        counterexamples,
        counterexample_path,
    })
}
