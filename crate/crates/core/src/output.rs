//! Rendering helpers shared by the CLI: 9-significant-digit numeric
//! formatting, aligned human-readable tables, and RFC-4180-style CSV.
//!
//! All rendering is deterministic: formatting depends only on the values,
//! never on locale, time, or iteration order.

/// Output format selected with `--format`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum OutputFormat {
    /// Aligned key/value or columnar table.
    Human,
    /// Pretty-printed JSON with full `f64` round-trip precision.
    Json,
    /// Comma-separated values, '.' decimal separator, unit-annotated header.
    Csv,
}

/// Format with 9 significant digits in scientific notation, normalizing
/// negative zero so equal values always print identically.
pub fn sig9(x: f64) -> String {
    let x = if x == 0.0 { 0.0 } else { x };
    format!("{x:.8e}")
}

/// A rectangular table: one header row plus data rows of equal width.
#[derive(Debug, Clone)]
pub struct Table {
    columns: Vec<String>,
    rows: Vec<Vec<String>>,
}

impl Table {
    pub fn new<S: Into<String>>(columns: Vec<S>) -> Self {
        Self {
            columns: columns.into_iter().map(Into::into).collect(),
            rows: Vec::new(),
        }
    }

    pub fn push_row<S: Into<String>>(&mut self, row: Vec<S>) {
        let row: Vec<String> = row.into_iter().map(Into::into).collect();
        assert_eq!(
            row.len(),
            self.columns.len(),
            "table row width must match the header"
        );
        self.rows.push(row);
    }

    /// Space-padded columns, two spaces between them, trailing newline.
    pub fn render_human(&self) -> String {
        let mut widths: Vec<usize> = self.columns.iter().map(String::len).collect();
        for row in &self.rows {
            for (w, cell) in widths.iter_mut().zip(row) {
                *w = (*w).max(cell.len());
            }
        }
        let mut out = String::new();
        let mut emit = |cells: &[String]| {
            let mut line = String::new();
            for (i, (cell, w)) in cells.iter().zip(&widths).enumerate() {
                if i > 0 {
                    line.push_str("  ");
                }
                line.push_str(cell);
                if i + 1 < cells.len() {
                    for _ in cell.len()..*w {
                        line.push(' ');
                    }
                }
            }
            out.push_str(line.trim_end());
            out.push('\n');
        };
        emit(&self.columns);
        for row in &self.rows {
            emit(row);
        }
        out
    }

    /// Header plus rows, comma-separated, quoting any field that needs it.
    pub fn render_csv(&self) -> String {
        let mut out = String::new();
        let mut emit = |cells: &[String]| {
            let line: Vec<String> = cells.iter().map(|c| csv_field(c)).collect();
            out.push_str(&line.join(","));
            out.push('\n');
        };
        emit(&self.columns);
        for row in &self.rows {
            emit(row);
        }
        out
    }
}

fn csv_field(raw: &str) -> String {
    if raw.contains(',') || raw.contains('"') || raw.contains('\n') {
        format!("\"{}\"", raw.replace('"', "\"\""))
    } else {
        raw.to_string()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn nine_significant_digits_in_scientific_notation() {
        assert_eq!(sig9(1.0 / 3.0), "3.33333333e-1");
        assert_eq!(sig9(1.9534857206166313e-3), "1.95348572e-3");
        assert_eq!(sig9(-12345.6789), "-1.23456789e4");
        assert_eq!(sig9(0.0), "0.00000000e0");
        assert_eq!(sig9(-0.0), "0.00000000e0");
        assert_eq!(sig9(1.0), "1.00000000e0");
    }

    #[test]
    fn human_table_aligns_and_trims() {
        let mut t = Table::new(vec!["name", "value"]);
        t.push_row(vec!["alpha", "7.29927007e-3"]);
        t.push_row(vec!["z", "13"]);
        let rendered = t.render_human();
        assert_eq!(rendered, "name   value\nalpha  7.29927007e-3\nz      13\n");
    }

    #[test]
    fn csv_quotes_only_when_needed() {
        let mut t = Table::new(vec!["a [1]", "note"]);
        t.push_row(vec!["1.5", "plain"]);
        t.push_row(vec!["2.5", "with, comma"]);
        t.push_row(vec!["3.5", "with \"quote\""]);
        assert_eq!(
            t.render_csv(),
            "a [1],note\n1.5,plain\n2.5,\"with, comma\"\n3.5,\"with \"\"quote\"\"\"\n"
        );
    }

    #[test]
    #[should_panic(expected = "row width")]
    fn mismatched_row_width_is_rejected() {
        let mut t = Table::new(vec!["only"]);
        t.push_row(vec!["a", "b"]);
    }
}
