//! Table emission: CSV (header row, comma separator, LF) or aligned text.

use std::io::{self, Write};

/// Output layout selected by `--format`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum OutputFormat {
    /// Comma-separated values with a header row.
    Csv,
    /// Space-padded columns for terminal reading.
    #[value(name = "text")]
    AlignedText,
}

/// A rectangular table: one header row plus data rows of equal width.
#[derive(Debug, Clone)]
pub struct Table {
    header: Vec<String>,
    rows: Vec<Vec<String>>,
}

impl Table {
    pub fn new<S: Into<String>, I: IntoIterator<Item = S>>(header: I) -> Table {
        Table {
            header: header.into_iter().map(Into::into).collect(),
            rows: Vec::new(),
        }
    }

    pub fn push<S: Into<String>, I: IntoIterator<Item = S>>(&mut self, row: I) {
        let row: Vec<String> = row.into_iter().map(Into::into).collect();
        debug_assert_eq!(row.len(), self.header.len());
        self.rows.push(row);
    }

    pub fn write(&self, out: &mut impl Write, format: OutputFormat) -> io::Result<()> {
        match format {
            OutputFormat::Csv => {
                writeln!(out, "{}", self.header.join(","))?;
                for row in &self.rows {
                    writeln!(out, "{}", row.join(","))?;
                }
            }
            OutputFormat::AlignedText => {
                let mut widths: Vec<usize> = self.header.iter().map(String::len).collect();
                for row in &self.rows {
                    for (w, cell) in widths.iter_mut().zip(row) {
                        *w = (*w).max(cell.len());
                    }
                }
                let mut line = |cells: &[String]| -> io::Result<()> {
                    let rendered: Vec<String> = cells
                        .iter()
                        .zip(&widths)
                        .map(|(c, w)| format!("{c:>w$}"))
                        .collect();
                    writeln!(out, "{}", rendered.join("  "))
                };
                line(&self.header)?;
                for row in &self.rows {
                    line(row)?;
                }
            }
        }
        Ok(())
    }
}
