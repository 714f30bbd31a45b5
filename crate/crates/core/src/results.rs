//! Line-delimited JSON results: one search result per line.

use std::fs::File;
use std::io::{BufRead, BufReader, BufWriter, Write};
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactmath::QuadInt;
use crate::improve::{self, ImprovementReport};
use crate::packclass::ClassConfig;
use crate::search::{Classification, SearchResult};

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct ExactHeight {
    pub p: i64,
    pub q: i64,
}

/// The on-disk form of a [`SearchResult`].
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ResultRecord {
    pub n: u64,
    pub area: QuadInt,
    pub width: u32,
    pub height: ExactHeight,
    pub density: f64,
    pub aspect: f64,
    pub class: Classification,
    pub min_d: u32,
    pub shapes: usize,
    pub argmin: Vec<ClassConfig>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub improvement: Option<ImprovementReport>,
}

impl ResultRecord {
    pub fn from_result(r: &SearchResult) -> Self {
        let c = r.primary();
        let h = c.height();
        let improvement = if r.classification.is_regular() { None } else { improve::improvement_for(r) };
        ResultRecord {
            n: r.n,
            area: r.min_area,
            width: c.width_units(),
            height: ExactHeight { p: h.p, q: h.q },
            density: r.density(),
            aspect: c.aspect_ratio(),
            class: r.classification,
            min_d: r.min_d,
            shapes: r.shape_count,
            argmin: r.argmin.clone(),
            improvement,
        }
    }

    /// Rebuilds the search result, checking the record is self-consistent.
    pub fn into_result(self) -> std::result::Result<SearchResult, String> {
        if self.argmin.is_empty() {
            return Err("empty argmin".into());
        }
        for c in &self.argmin {
            let n = c.n_of().map_err(|e| e.to_string())?;
            if n != self.n {
                return Err(format!("{c} holds {n} circles, not {}", self.n));
            }
            if c.area() != self.area {
                return Err(format!("{c} has area {}, not {}", c.area(), self.area));
            }
        }
        let r = SearchResult::from_argmin(self.n, self.area, self.argmin);
        if r.classification != self.class || r.min_d != self.min_d || r.shape_count != self.shapes {
            return Err("class, min_d or shapes disagree with argmin".into());
        }
        Ok(r)
    }
}

pub fn write_jsonl<W: Write>(results: &[SearchResult], mut out: W) -> Result<()> {
    for r in results {
        serde_json::to_writer(&mut out, &ResultRecord::from_result(r))?;
        out.write_all(b"\n")?;
    }
    out.flush()?;
    Ok(())
}

pub fn read_jsonl<R: BufRead>(input: R) -> Result<Vec<SearchResult>> {
    let mut out = Vec::new();
    for (i, line) in input.lines().enumerate() {
        let line = line?;
        let lineno = i + 1;
        if line.trim().is_empty() {
            continue;
        }
        let record: ResultRecord = serde_json::from_str(&line)
            .map_err(|e| Error::Parse { line: lineno, message: e.to_string() })?;
        let r = record.into_result().map_err(|message| Error::Parse { line: lineno, message })?;
        out.push(r);
    }
    Ok(out)
}

pub fn write_results(results: &[SearchResult], path: impl AsRef<Path>) -> Result<()> {
    write_jsonl(results, BufWriter::new(File::create(path)?))
}

pub fn read_results(path: impl AsRef<Path>) -> Result<Vec<SearchResult>> {
    read_jsonl(BufReader::new(File::open(path)?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::par::Execution;
    use crate::search::{best, scan};

    #[test]
    fn round_trip_forty_nine() {
        let r = best(49, 5);
        let mut buf = Vec::new();
        write_jsonl(std::slice::from_ref(&r), &mut buf).unwrap();
        let back = read_jsonl(buf.as_slice()).unwrap();
        assert_eq!(back, vec![r]);
    }

    #[test]
    fn line_schema() {
        let mut buf = Vec::new();
        write_jsonl(&[best(49, 5)], &mut buf).unwrap();
        let v: serde_json::Value = serde_json::from_slice(&buf).unwrap();
        for key in ["n", "area", "width", "height", "density", "aspect", "class", "min_d", "shapes", "argmin"] {
            assert!(v.get(key).is_some(), "missing {key}");
        }
        assert_eq!(v["class"], "may_hole");
        assert_eq!(v["width"], 34);
        assert_eq!(v["height"], serde_json::json!({"p": 2, "q": 2}));
        assert_eq!(v["area"]["p"], 68);
        assert!(v["area"]["float"].is_f64());
        assert_eq!(v["improvement"]["move"], "odd_h_side_relocation");
    }

    #[test]
    fn file_has_line_per_result() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("r.jsonl");
        let results = scan(1, 53, 5, Execution::Serial);
        write_results(&results, &path).unwrap();
        let text = std::fs::read_to_string(&path).unwrap();
        assert_eq!(text.lines().count(), 53);
        assert_eq!(read_results(&path).unwrap(), results);
    }

    #[test]
    fn corrupt_line_reports_line_number() {
        let mut buf = Vec::new();
        write_jsonl(&scan(1, 3, 5, Execution::Serial), &mut buf).unwrap();
        let mut text = String::from_utf8(buf).unwrap();
        text.push_str("{\"n\": 4, \"area\": tru\n");
        let err = read_jsonl(text.as_bytes()).unwrap_err();
        assert!(matches!(err, Error::Parse { line: 4, .. }), "{err}");
        assert!(err.to_string().starts_with("line 4:"));
    }

    #[test]
    fn inconsistent_record_rejected() {
        let mut buf = Vec::new();
        write_jsonl(&[best(79, 5)], &mut buf).unwrap();
        let text = String::from_utf8(buf).unwrap().replace("\"must_hole\"", "\"regular\"");
        let err = read_jsonl(text.as_bytes()).unwrap_err();
        assert!(matches!(err, Error::Parse { line: 1, .. }));
    }
}
