use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ConfigEcho {
    pub max_side: u64,
    pub shards: usize,
    pub even_filter_mode: String,
    pub even_filter_used: bool,
    /// Result of the calibration scan, when one ran.
    pub even_filter_calibration: Option<bool>,
    pub calibration_bound: u64,
    pub output_path: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Counts {
    pub triples_scanned: u64,
    pub hits: usize,
    pub counterexamples: usize,
}

/// Summary written next to each record file.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RunManifest {
    pub tool_version: String,
    pub config: ConfigEcho,
    pub bound: u64,
    pub shard_count: usize,
    pub wall_time_secs: f64,
    pub counts: Counts,
}

impl RunManifest {
    /// `<records>.manifest.json`.
    pub fn path_for(records: &Path) -> PathBuf {
        let mut name = records.as_os_str().to_owned();
        name.push(".manifest.json");
        PathBuf::from(name)
    }

    pub fn write(&self, path: &Path) -> Result<()> {
        let text = serde_json::to_string_pretty(self).expect("manifest serializes");
        std::fs::write(path, text + "\n").map_err(|e| Error::io(path.display().to_string(), e))
    }

    pub fn read(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path).map_err(|e| Error::io(path.display().to_string(), e))?;
        serde_json::from_str(&text).map_err(|e| Error::Record(e.to_string()))
    }
}

pub const TOOL_VERSION: &str = env!("CARGO_PKG_VERSION");
