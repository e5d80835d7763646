//! `medtri`: search, certify and audit integer-median triangles.
//!
//! Exit codes: 0 success, 1 usage or input error, 2 counterexample found,
//! 3 a universal identity failed.

use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use median_descent::audit::TriangleAudit;
use median_descent::companion::{area_ratio_check, companion, descent_run, similarity_check};
use median_descent::io::{read_records, run_search, write_csv, ConfigFile, Record};
use median_descent::search::{certify, EvenFilterMode, SearchConfig};
use median_descent::{Error, IntTriangle};

#[derive(Parser)]
#[command(name = "medtri", version, about = "Exact search and audit of triangles with integer sides and medians")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Enumerate integer-median triangles up to a side bound.
    Search(SearchArgs),
    /// Print the identity audit for a triangle or every record in a file.
    Audit(AuditArgs),
    /// Print the companion triangle and its checks.
    Companion(Triple),
    /// Run the descent driver and print each gate report.
    Descent {
        #[command(flatten)]
        triple: Triple,
        #[arg(long, default_value_t = 10)]
        iters: usize,
    },
    /// Print the JSONL record for one triangle.
    Certify(Triple),
    /// Write a CSV summary of a record file.
    Report {
        records: PathBuf,
        /// Output file; stdout when omitted.
        #[arg(long)]
        csv: Option<PathBuf>,
    },
}

#[derive(Args)]
struct Triple {
    a: u64,
    b: u64,
    c: u64,
}

impl Triple {
    fn triangle(&self) -> Result<IntTriangle, Error> {
        IntTriangle::from_u64(self.a, self.b, self.c)
    }
}

#[derive(Args)]
struct SearchArgs {
    #[arg(long)]
    max_side: Option<u64>,
    #[arg(long)]
    shards: Option<usize>,
    #[arg(long)]
    even_filter: Option<EvenFilterMode>,
    #[arg(long)]
    out: Option<PathBuf>,
    /// `key = value` file; flags take precedence.
    #[arg(long)]
    config: Option<PathBuf>,
}

#[derive(Args)]
struct AuditArgs {
    #[arg(num_args = 3, value_names = ["A", "B", "C"], required_unless_present = "records")]
    sides: Vec<u64>,
    #[arg(long, conflicts_with = "sides")]
    records: Option<PathBuf>,
}

enum Failure {
    Usage(String),
    Identity(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::AuditFailed { .. } => Failure::Identity(e.to_string()),
            other => Failure::Usage(other.to_string()),
        }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(1) } else { ExitCode::SUCCESS };
        }
    };
    match dispatch(cli.command) {
        Ok(code) => ExitCode::from(code),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Identity(msg)) => {
            eprintln!("identity failure: {msg}");
            ExitCode::from(3)
        }
    }
}

fn dispatch(command: Command) -> Result<u8, Failure> {
    match command {
        Command::Search(args) => search(args),
        Command::Audit(args) => audit(args),
        Command::Companion(t) => show_companion(&t.triangle()?),
        Command::Descent { triple, iters } => {
            let trace = descent_run(&triple.triangle()?, iters)?;
            for (i, step) in trace.iter().enumerate() {
                println!("step {}", i + 1);
                println!("{step}");
            }
            Ok(0)
        }
        Command::Certify(t) => {
            let record = Record::from_certified(&certify(&t.triangle()?)?)?;
            println!("{}", record.to_line());
            Ok(0)
        }
        Command::Report { records, csv } => {
            let rows = read_records(&records)?;
            match csv {
                Some(path) => {
                    let file = File::create(&path).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
                    write_csv(&rows, BufWriter::new(file))?;
                }
                None => write_csv(&rows, io::stdout().lock())?,
            }
            Ok(0)
        }
    }
}

fn search(args: SearchArgs) -> Result<u8, Failure> {
    let file = match &args.config {
        Some(path) => ConfigFile::load(path)?,
        None => ConfigFile::default(),
    };
    let max_side = args
        .max_side
        .or(file.max_side)
        .ok_or_else(|| Failure::Usage("--max-side is required (flag or config file)".into()))?;
    let shards = args.shards.or(file.shards).unwrap_or(1);
    let mode = args.even_filter.or(file.even_filter).unwrap_or(EvenFilterMode::Auto);
    let out = args.out.or(file.out).unwrap_or_else(|| PathBuf::from("results.jsonl"));

    let config = SearchConfig::new(max_side).with_shards(shards);
    let config = SearchConfig { output_path: out, ..config };
    let summary = run_search(&config, mode)?;
    let counts = &summary.manifest.counts;
    println!(
        "scanned {} triples up to {max_side} on {shards} shard(s), even filter {}: {} record(s), {} counterexample(s)",
        counts.triples_scanned,
        if summary.manifest.config.even_filter_used { "on" } else { "off" },
        counts.hits,
        counts.counterexamples,
    );
    for r in &summary.records {
        let [a, b, c] = r.sides();
        let [ma, mb, mc] = &r.medians;
        println!("  ({a}, {b}, {c}) medians ({ma}, {mb}, {mc}) area {}", r.area_class);
    }
    println!("records: {}", config.output_path.display());
    println!("manifest: {}", summary.manifest_path.display());
    if let Some(path) = &summary.counterexample_path {
        println!("COUNTEREXAMPLES: {}", path.display());
        return Ok(2);
    }
    Ok(0)
}

fn audit(args: AuditArgs) -> Result<u8, Failure> {
    let triangles = match &args.records {
        Some(path) => read_records(path)?
            .iter()
            .map(Record::triangle)
            .collect::<Result<Vec<_>, _>>()?,
        None => vec![IntTriangle::from_u64(args.sides[0], args.sides[1], args.sides[2])?],
    };
    let mut failed = false;
    let mut out = io::stdout().lock();
    for t in &triangles {
        let report = TriangleAudit::run(t)?;
        writeln!(out, "{report}")?;
        let failures = report.failures();
        if failures.is_empty() {
            writeln!(out, "all universal identities hold")?;
        } else {
            failed = true;
            writeln!(out, "FAILED: {}", failures.0.join("; "))?;
        }
        writeln!(out)?;
    }
    Ok(if failed { 3 } else { 0 })
}

fn show_companion(t: &IntTriangle) -> Result<u8, Failure> {
    let child = companion(t)?;
    println!("triangle {t}");
    println!("companion sides {child}");
    match child.exact_medians() {
        Some([a, b, c]) => println!("companion medians ({a}, {b}, {c})"),
        None => println!("companion medians irrational"),
    }
    println!("16*S^2: {} -> {}", t.heron16(), child.heron16());
    println!("area ratio 1/9: {}", area_ratio_check(t)?);
    let back = companion(&child)?;
    println!("companion of companion {back}");
    println!("similar to companion: {}", similarity_check(t, &child));
    Ok(0)
}
