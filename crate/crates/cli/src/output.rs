use std::fs;
use std::io::Write;

use serde_json::Value;

use pi_lattice::PiResult;

use crate::{Format, OutputArgs};

pub const SCHEMA: &str = "pi-lattice/1";

/// A report in both renderings; the CSV table is flat.
pub struct Report {
    pub json: Value,
    pub header: Vec<&'static str>,
    pub rows: Vec<Vec<String>>,
}

impl Report {
    fn render(&self, format: Format) -> PiResult<Vec<u8>> {
        match format {
            Format::Json => {
                let mut s = serde_json::to_string_pretty(&self.json)?;
                s.push('\n');
                Ok(s.into_bytes())
            }
            Format::Csv => {
                let mut w = csv::Writer::from_writer(Vec::new());
                w.write_record(&self.header).map_err(std::io::Error::from)?;
                for r in &self.rows {
                    w.write_record(r).map_err(std::io::Error::from)?;
                }
                Ok(w.into_inner().map_err(|e| e.into_error())?)
            }
        }
    }
}

pub fn emit(report: &Report, out: &OutputArgs) -> PiResult<()> {
    let bytes = report.render(out.format)?;
    match &out.out {
        Some(path) => fs::write(path, bytes)?,
        None => std::io::stdout().write_all(&bytes)?,
    }
    Ok(())
}
