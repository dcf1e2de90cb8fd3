//! Knot tables in CSV form and batch screening.
//!
//! Columns: `name, alexander, genus, fibered, seifert_dim, seifert`.
//! `alexander` is a whitespace- or `;`-separated coefficient list, lowest
//! degree first, or a polynomial expression. `seifert` is row-major.

use std::io::Read;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::report::{knot_obstruction_report, KnotObstructionReport, KnotReportOptions};
use super::{KnotError, KnotRecord};
use crate::alexmod::IntMatrix;
use crate::polyring::{parse_poly, IntLaurentPoly};

#[derive(Debug, Deserialize)]
struct Row {
    name: String,
    alexander: String,
    #[serde(default)]
    genus: Option<String>,
    #[serde(default)]
    fibered: Option<String>,
    #[serde(default)]
    seifert_dim: Option<String>,
    #[serde(default)]
    seifert: Option<String>,
}

fn blank(s: &Option<String>) -> Option<&str> {
    s.as_deref().map(str::trim).filter(|s| !s.is_empty())
}

fn integers(s: &str) -> Result<Vec<i64>, String> {
    s.split(|c: char| c.is_whitespace() || c == ';')
        .filter(|x| !x.is_empty())
        .map(|x| x.parse::<i64>().map_err(|e| format!("bad integer '{x}': {e}")))
        .collect()
}

fn parse_alexander(s: &str) -> Result<IntLaurentPoly, String> {
    let s = s.trim();
    if s.contains(['t', 'P', 'Φ', '(', '^']) {
        return parse_poly(s).map_err(|e| e.to_string());
    }
    let c = integers(s)?;
    if c.is_empty() {
        return Err("empty coefficient list".into());
    }
    Ok(IntLaurentPoly::from_coeffs(&c))
}

fn parse_bool(s: &str) -> Result<bool, String> {
    match s.to_ascii_lowercase().as_str() {
        "true" | "yes" | "y" | "1" => Ok(true),
        "false" | "no" | "n" | "0" => Ok(false),
        other => Err(format!("bad boolean '{other}'")),
    }
}

fn record_from_row(row: Row) -> Result<KnotRecord, String> {
    let alexander = parse_alexander(&row.alexander)?;
    let mut k = KnotRecord::new(row.name.trim(), alexander).map_err(|e| e.to_string())?;
    if let Some(g) = blank(&row.genus) {
        k.genus = Some(g.parse().map_err(|e| format!("bad genus '{g}': {e}"))?);
    }
    if let Some(f) = blank(&row.fibered) {
        k.fibered = Some(parse_bool(f)?);
    }
    match (blank(&row.seifert_dim), blank(&row.seifert)) {
        (Some(d), Some(v)) => {
            let d: usize = d.parse().map_err(|e| format!("bad seifert_dim '{d}': {e}"))?;
            let vals = integers(v)?;
            if vals.len() != d * d {
                return Err(format!("seifert matrix has {} entries, expected {}", vals.len(), d * d));
            }
            let rows: Vec<Vec<i64>> = vals.chunks(d.max(1)).map(<[i64]>::to_vec).take(d).collect();
            let m = IntMatrix::from_rows(&rows).map_err(|e| e.to_string())?;
            k = k.with_seifert(m).map_err(|e| e.to_string())?;
        }
        (None, None) => {}
        _ => return Err("seifert_dim and seifert must be given together".into()),
    }
    Ok(k)
}

/// One result per data row; malformed rows become errors without stopping the rest.
pub fn read_knot_csv<R: Read>(reader: R) -> Vec<Result<KnotRecord, KnotError>> {
    let mut rdr = csv::ReaderBuilder::new().trim(csv::Trim::All).flexible(true).comment(Some(b'#')).from_reader(reader);
    rdr.deserialize::<Row>()
        .enumerate()
        .map(|(i, row)| {
            let line = i + 1;
            row.map_err(|e| e.to_string())
                .and_then(record_from_row)
                .map_err(|message| KnotError::Csv { row: line, message })
        })
        .collect()
}

/// Reports in input order; records are processed in parallel.
pub fn batch_screen(table: &[KnotRecord], opts: &KnotReportOptions) -> Vec<KnotObstructionReport> {
    table.par_iter().map(|k| knot_obstruction_report(k, opts)).collect()
}

#[derive(Debug, Clone, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum BatchEntry {
    Report(Box<KnotObstructionReport>),
    Error { row: usize, message: String },
}

/// Screens a CSV table; ingestion failures are kept as entries.
pub fn screen_csv<R: Read>(reader: R, opts: &KnotReportOptions) -> Vec<BatchEntry> {
    read_knot_csv(reader)
        .into_par_iter()
        .map(|r| match r {
            Ok(k) => BatchEntry::Report(Box::new(knot_obstruction_report(&k, opts))),
            Err(KnotError::Csv { row, message }) => BatchEntry::Error { row, message },
            Err(e) => BatchEntry::Error { row: 0, message: e.to_string() },
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    const TABLE: &str = "\
name,alexander,genus,fibered,seifert_dim,seifert
3_1,1 -1 1,1,true,2,-1 1 0 -1
4_1,1 -3 1,1,yes,,
5_1,Phi10,2,true,,
broken,1 1 1,,,,
7_4,4 -7 4,1,false,,
";

    #[test]
    fn reads_rows() {
        let rows = read_knot_csv(TABLE.as_bytes());
        assert_eq!(rows.len(), 5);
        let k = rows[0].as_ref().unwrap();
        assert_eq!(k.genus, Some(1));
        assert!(k.seifert.is_some());
        assert_eq!(rows[2].as_ref().unwrap().alexander, crate::polyring::cyclotomic(10));
        assert!(matches!(rows[3], Err(KnotError::Csv { row: 4, .. })));
        assert_eq!(rows[4].as_ref().unwrap().fibered, Some(false));
    }

    #[test]
    fn batch_preserves_order() {
        let table = vec![
            KnotRecord::torus(2, 3).unwrap(),
            KnotRecord::torus(2, 5).unwrap(),
            KnotRecord::torus(3, 7).unwrap(),
        ];
        let reports = batch_screen(&table, &KnotReportOptions::with_window(6));
        let names: Vec<&str> = reports.iter().map(|r| r.name.as_str()).collect();
        assert_eq!(names, ["T(2,3)", "T(2,5)", "T(3,7)"]);
        let ex = reports[2].excluded();
        assert!([2, 4, 5].iter().all(|n| ex.contains(n)));
        assert!(batch_screen(&[], &KnotReportOptions::default()).is_empty());
    }

    #[test]
    fn malformed_row_is_isolated() {
        let entries = screen_csv(TABLE.as_bytes(), &KnotReportOptions::with_window(5));
        assert_eq!(entries.len(), 5);
        let errors = entries.iter().filter(|e| matches!(e, BatchEntry::Error { .. })).count();
        assert_eq!(errors, 1);
        let json = serde_json::to_value(&entries).unwrap();
        assert_eq!(json[3]["kind"], "error");
        assert_eq!(json[0]["kind"], "report");
        assert_eq!(json[0]["determinant"], "3");
    }
}
