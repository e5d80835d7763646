//! CSV summary of a record file.

use std::io::Write;

use crate::error::{Error, Result};
use crate::io::record::Record;

const HEADER: [&str; 13] = [
    "a", "b", "c", "ma", "mb", "mc", "heron16", "area_class", "primitive_a", "primitive_b",
    "primitive_c", "is_primitive", "audits_ok",
];

pub fn write_csv<W: Write>(records: &[Record], out: W) -> Result<()> {
    let err = |e: csv::Error| Error::Record(format!("csv: {e}"));
    let mut w = csv::Writer::from_writer(out);
    w.write_record(HEADER).map_err(err)?;
    for r in records {
        let is_primitive = r.primitive == [r.a, r.b, r.c];
        let a = &r.audits;
        let audits_ok = a.eight_conditions && a.t_zero && a.lemma2 && a.nonsimilar_companion;
        let row = [
            r.a.to_string(),
            r.b.to_string(),
            r.c.to_string(),
            r.ma.to_string(),
            r.mb.to_string(),
            r.mc.to_string(),
            r.heron16.clone(),
            r.area_class.clone(),
            r.primitive[0].to_string(),
            r.primitive[1].to_string(),
            r.primitive[2].to_string(),
            is_primitive.to_string(),
            audits_ok.to_string(),
        ];
        w.write_record(&row).map_err(err)?;
    }
    w.flush().map_err(|e| Error::io("csv output", e))
}
