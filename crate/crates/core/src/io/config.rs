//! Plain `key = value` run configuration.
//!
//! ```text
//! # search up to 1000 on 8 shards
//! max_side = 1000
//! shards = 8
//! even_filter = auto
//! out = results.jsonl
//! ```

use std::path::{Path, PathBuf};

use crate::error::{Error, Result};
use crate::search::EvenFilterMode;

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ConfigFile {
    pub max_side: Option<u64>,
    pub shards: Option<usize>,
    pub even_filter: Option<EvenFilterMode>,
    pub out: Option<PathBuf>,
}

impl ConfigFile {
    pub fn parse(text: &str) -> Result<Self> {
        let mut cfg = ConfigFile::default();
        for (n, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let (key, value) = line
                .split_once('=')
                .ok_or_else(|| Error::Config(format!("line {}: expected key = value", n + 1)))?;
            let (key, value) = (key.trim(), value.trim());
            let bad = |what: &str| Error::Config(format!("line {}: invalid {what} {value:?}", n + 1));
            match key {
                "max_side" => cfg.max_side = Some(value.parse().map_err(|_| bad("max_side"))?),
                "shards" => cfg.shards = Some(value.parse().map_err(|_| bad("shards"))?),
                "even_filter" => cfg.even_filter = Some(value.parse()?),
                "out" => cfg.out = Some(PathBuf::from(value)),
                other => return Err(Error::Config(format!("line {}: unknown key {other:?}", n + 1))),
            }
        }
        Ok(cfg)
    }

    pub fn load(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path).map_err(|e| Error::io(path.display().to_string(), e))?;
        Self::parse(&text)
    }
}
