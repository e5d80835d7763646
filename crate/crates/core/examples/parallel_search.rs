//! Sharded search: the record file does not depend on the shard count.

use median_descent::io::{run_search, RunManifest};
use median_descent::search::{EvenFilterMode, SearchConfig};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let dir = std::env::temp_dir().join(format!("medtri-parallel-{}", std::process::id()));
    std::fs::create_dir_all(&dir)?;
    let mut files = Vec::new();
    for shards in [1, 4, 8] {
        let mut config = SearchConfig::new(400).with_shards(shards);
        config.output_path = dir.join(format!("records-{shards}.jsonl"));
        let summary = run_search(&config, EvenFilterMode::Off)?;
        let manifest = RunManifest::read(&summary.manifest_path)?;
        println!(
            "{shards} shard(s): {} records, {} triples, {:.2}s",
            manifest.counts.hits, manifest.counts.triples_scanned, manifest.wall_time_secs
        );
        files.push(std::fs::read(&config.output_path)?);
    }
    assert!(files.windows(2).all(|w| w[0] == w[1]));
    println!("record files identical");
    std::fs::remove_dir_all(&dir)?;
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().expect("parallel_search example failed");
}
