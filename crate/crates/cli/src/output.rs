//! CSV emission: fixed-format floats so reruns are byte-identical, a header
//! row, and a comment row recording the seed and tool version.

use std::fs::File;
use std::io::{BufWriter, Write};
use std::path::Path;

/// Twelve significant digits, scientific; the one format every column uses.
pub fn sig12(v: f64) -> String {
    format!("{v:.11e}")
}

pub fn write_csv(path: &Path, header: &str, seed: u64, rows: &[String]) -> std::io::Result<()> {
    let mut out = BufWriter::new(File::create(path)?);
    writeln!(out, "{header}")?;
    writeln!(
        out,
        "# seed={seed},version={}",
        env!("CARGO_PKG_VERSION")
    )?;
    for row in rows {
        writeln!(out, "{row}")?;
    }
    out.flush()
}
