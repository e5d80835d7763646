//! JSONL record format, one certified triangle per line.
//!
//! ```text
//! {"a":136,"b":170,"c":174,"ma":158,"mb":131,"mc":127,
//!  "heron16":"1845043200","area_class":"irrational",
//!  "mod3":{"sides":[1,2,0],"medians":[2,2,1],"sum_sq":2},
//!  "audits":{"eight_conditions":true,"t_zero":true,"lemma2":true,"nonsimilar_companion":true},
//!  "primitive":[68,85,87]}
//! ```
//!
//! `heron16` is a decimal string because it exceeds 64 bits.

use std::fs::File;
use std::io::{BufRead, BufReader, BufWriter, Write};
use std::path::Path;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::search::{certify, CertifiedMedianTriangle};
use crate::triangle::IntTriangle;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Mod3Json {
    pub sides: [u8; 3],
    pub medians: [u8; 3],
    pub sum_sq: u8,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AuditsJson {
    pub eight_conditions: bool,
    pub t_zero: bool,
    pub lemma2: bool,
    pub nonsimilar_companion: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Record {
    pub a: u64,
    pub b: u64,
    pub c: u64,
    pub ma: u64,
    pub mb: u64,
    pub mc: u64,
    pub heron16: String,
    pub area_class: String,
    pub mod3: Mod3Json,
    pub audits: AuditsJson,
    pub primitive: [u64; 3],
}

fn to_u64(v: &BigInt, what: &str) -> Result<u64> {
    u64::try_from(v).map_err(|_| Error::Record(format!("{what} = {v} exceeds 64 bits")))
}

impl Record {
    pub fn from_certified(r: &CertifiedMedianTriangle) -> Result<Self> {
        let [a, b, c] = r.sides();
        let [ma, mb, mc] = &r.medians;
        let [pa, pb, pc] = r.primitive.sides();
        Ok(Record {
            a: to_u64(a, "a")?,
            b: to_u64(b, "b")?,
            c: to_u64(c, "c")?,
            ma: to_u64(ma, "ma")?,
            mb: to_u64(mb, "mb")?,
            mc: to_u64(mc, "mc")?,
            heron16: r.heron16.to_string(),
            area_class: r.area_class.label().to_string(),
            mod3: Mod3Json {
                sides: r.mod3.sides,
                medians: r.mod3.medians,
                sum_sq: r.mod3.sum_sq,
            },
            audits: AuditsJson {
                eight_conditions: r.audits.eight_conditions,
                t_zero: r.audits.t_zero,
                lemma2: r.audits.lemma2,
                nonsimilar_companion: r.audits.nonsimilar_companion,
            },
            primitive: [to_u64(pa, "primitive")?, to_u64(pb, "primitive")?, to_u64(pc, "primitive")?],
        })
    }

    pub fn triangle(&self) -> Result<IntTriangle> {
        IntTriangle::from_u64(self.a, self.b, self.c)
    }

    /// Recomputes the record from its sides; any disagreement with the
    /// stored fields is an error.
    pub fn verify(&self) -> Result<CertifiedMedianTriangle> {
        let certified = certify(&self.triangle()?)?;
        let again = Record::from_certified(&certified)?;
        if &again != self {
            return Err(Error::Record(format!(
                "stored record for ({}, {}, {}) does not match recomputation",
                self.a, self.b, self.c
            )));
        }
        Ok(certified)
    }

    pub fn to_line(&self) -> String {
        serde_json::to_string(self).expect("record serializes")
    }

    pub fn parse_line(line: &str) -> Result<Self> {
        serde_json::from_str(line).map_err(|e| Error::Record(e.to_string()))
    }
}

/// Writes one line per record, truncating any existing file.
pub fn write_records(path: &Path, records: &[CertifiedMedianTriangle]) -> Result<usize> {
    let show = path.display().to_string();
    let file = File::create(path).map_err(|e| Error::io(&show, e))?;
    let mut w = BufWriter::new(file);
    for r in records {
        let line = Record::from_certified(r)?.to_line();
        writeln!(w, "{line}").map_err(|e| Error::io(&show, e))?;
    }
    w.flush().map_err(|e| Error::io(&show, e))?;
    Ok(records.len())
}

pub fn read_records(path: &Path) -> Result<Vec<Record>> {
    let show = path.display().to_string();
    let file = File::open(path).map_err(|e| Error::io(&show, e))?;
    let mut out = Vec::new();
    for (i, line) in BufReader::new(file).lines().enumerate() {
        let line = line.map_err(|e| Error::io(&show, e))?;
        if line.trim().is_empty() {
            continue;
        }
        out.push(Record::parse_line(&line).map_err(|e| Error::Record(format!("{show}:{}: {e}", i + 1)))?);
    }
    Ok(out)
}
