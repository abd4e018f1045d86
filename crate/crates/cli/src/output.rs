//! Artifact writers: tables as CSV or JSON lines, SVG files, run summaries.

use std::fs;
use std::path::{Path, PathBuf};

use anyhow::{Context, Result};
use clap::ValueEnum;
use serde_json::{json, Map, Value};
use svfrac::CompactSet;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    JsonLines,
}

pub struct Sink {
    pub dir: PathBuf,
    pub format: Format,
    written: Vec<PathBuf>,
}

impl Sink {
    pub fn new(dir: &Path, format: Format) -> Result<Self> {
        fs::create_dir_all(dir).with_context(|| format!("creating {}", dir.display()))?;
        Ok(Sink {
            dir: dir.to_path_buf(),
            format,
            written: Vec::new(),
        })
    }

    fn path(&mut self, stem: &str, ext: &str) -> PathBuf {
        let p = self.dir.join(format!("{stem}.{ext}"));
        self.written.push(p.clone());
        p
    }

    /// Numeric table with a header row.
    pub fn table(&mut self, stem: &str, header: &[&str], rows: &[Vec<f64>]) -> Result<PathBuf> {
        match self.format {
            Format::Csv => {
                let path = self.path(stem, "csv");
                let mut w = csv::Writer::from_path(&path)?;
                w.write_record(header)?;
                for r in rows {
                    w.write_record(r.iter().map(|v| v.to_string()))?;
                }
                w.flush()?;
                Ok(path)
            }
            Format::JsonLines => {
                let path = self.path(stem, "jsonl");
                let mut s = String::new();
                for r in rows {
                    let obj: Map<String, Value> = header
                        .iter()
                        .zip(r)
                        .map(|(h, v)| (h.to_string(), json!(v)))
                        .collect();
                    s.push_str(&Value::Object(obj).to_string());
                    s.push('\n');
                }
                fs::write(&path, s)?;
                Ok(path)
            }
        }
    }

    /// Rows `x, lo_1, hi_1, …` of a set-valued function.
    pub fn svf_rows(&mut self, stem: &str, rows: &[(f64, CompactSet)]) -> Result<PathBuf> {
        match self.format {
            Format::Csv => {
                let path = self.path(stem, "csv");
                let width = rows.iter().map(|r| r.1.len()).max().unwrap_or(1);
                let mut header = vec!["x".to_string()];
                for k in 1..=width {
                    header.push(format!("lo_{k}"));
                    header.push(format!("hi_{k}"));
                }
                let mut w = csv::WriterBuilder::new().flexible(true).from_path(&path)?;
                w.write_record(&header)?;
                for (x, set) in rows {
                    let mut rec = vec![x.to_string()];
                    for iv in set.intervals() {
                        rec.push(iv.lo.to_string());
                        rec.push(iv.hi.to_string());
                    }
                    w.write_record(&rec)?;
                }
                w.flush()?;
                Ok(path)
            }
            Format::JsonLines => {
                let path = self.path(stem, "jsonl");
                let mut s = String::new();
                for (x, set) in rows {
                    let ivs: Vec<[f64; 2]> = set.intervals().iter().map(|iv| [iv.lo, iv.hi]).collect();
                    s.push_str(&json!({"x": x, "set": ivs}).to_string());
                    s.push('\n');
                }
                fs::write(&path, s)?;
                Ok(path)
            }
        }
    }

    pub fn text(&mut self, name: &str, body: &str) -> Result<PathBuf> {
        let path = self.dir.join(name);
        self.written.push(path.clone());
        fs::write(&path, body)?;
        Ok(path)
    }

    /// Writes `<command>-summary.json` and echoes the summary to stdout.
    pub fn summary(&mut self, command: &str, mut v: Value) -> Result<()> {
        let files: Vec<String> = self
            .written
            .iter()
            .filter_map(|p| p.file_name().map(|n| n.to_string_lossy().into_owned()))
            .collect();
        if let Value::Object(m) = &mut v {
            m.insert("command".into(), json!(command));
            m.insert("artifacts".into(), json!(files));
        }
        let path = self.dir.join(format!("{command}-summary.json"));
        fs::write(&path, serde_json::to_string_pretty(&v)? + "\n")?;
        print_summary(&v, self.format);
        Ok(())
    }
}

pub fn print_summary(v: &Value, format: Format) {
    match format {
        Format::JsonLines => println!("{v}"),
        Format::Csv => {
            if let Value::Object(m) = v {
                for (k, val) in m {
                    println!("{k}: {val}");
                }
            } else {
                println!("{v}");
            }
        }
    }
}
