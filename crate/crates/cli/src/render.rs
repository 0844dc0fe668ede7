use serde::Serialize;

use crate::Failure;

/// One line of a degree table.
pub struct Row {
    pub n: usize,
    pub p: usize,
    pub side: &'static str,
    pub label: String,
    pub degree: String,
}

pub fn json_lines<T: Serialize>(items: &[T]) -> Vec<u8> {
    let mut out = Vec::new();
    for item in items {
        serde_json::to_writer(&mut out, item).expect("values serialize");
        out.push(b'\n');
    }
    out
}

/// Columns `n,p,side,label,degree`.
pub fn csv_rows(rows: &[Row]) -> Result<Vec<u8>, Failure> {
    let mut w = csv::Writer::from_writer(Vec::new());
    let err = |e: csv::Error| Failure::Invalid(format!("csv: {e}"));
    w.write_record(["n", "p", "side", "label", "degree"]).map_err(err)?;
    for r in rows {
        w.write_record([r.n.to_string(), r.p.to_string(), r.side.to_string(), r.label.clone(), r.degree.clone()])
            .map_err(err)?;
    }
    w.into_inner().map_err(|e| Failure::Invalid(format!("csv: {e}")))
}
