use clap::ValueEnum;
use degix_core::CertifiedValue;
use serde::Serialize;

use crate::CliError;

/// CSV schema version written in the leading comment line.
pub const CSV_VERSION: u32 = 1;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    /// Bare graph6 records, one per line (enumerate, family, linegraph).
    G6,
}

pub fn json<T: Serialize + ?Sized>(value: &T) -> Result<String, CliError> {
    let mut s = serde_json::to_string_pretty(value).map_err(|e| CliError::Failed(format!("serializing output: {e}")))?;
    s.push('\n');
    Ok(s)
}

/// Accumulates CSV records behind a `# degix-csv v1 <verb>` comment line.
pub struct Csv {
    comments: Vec<String>,
    writer: csv::Writer<Vec<u8>>,
}

impl Csv {
    pub fn new<I, S>(verb: &str, header: I) -> Self
    where
        I: IntoIterator<Item = S>,
        S: AsRef<[u8]>,
    {
        let mut writer = csv::Writer::from_writer(Vec::new());
        writer.write_record(header).expect("writing to memory");
        Csv { comments: vec![format!("degix-csv v{CSV_VERSION} {verb}")], writer }
    }

    /// Extra `# key=value` line below the version line.
    pub fn note(&mut self, key: &str, value: impl std::fmt::Display) {
        self.comments.push(format!("{key}={value}"));
    }

    pub fn row<I, S>(&mut self, fields: I)
    where
        I: IntoIterator<Item = S>,
        S: AsRef<[u8]>,
    {
        self.writer.write_record(fields).expect("writing to memory");
    }

    pub fn finish(self) -> Result<String, CliError> {
        let body = self.writer.into_inner().map_err(|e| CliError::Failed(format!("csv: {e}")))?;
        let mut out = String::new();
        for c in &self.comments {
            out.push_str("# ");
            out.push_str(c);
            out.push('\n');
        }
        out.push_str(&String::from_utf8(body).map_err(|e| CliError::Failed(format!("csv: {e}")))?);
        Ok(out)
    }
}

/// `lo`, `hi` and 12-digit `mid` columns for an enclosure.
pub fn value_cols(v: &CertifiedValue) -> [String; 3] {
    let (lo, hi) = v.bounds_f64();
    [lo.to_string(), hi.to_string(), degix_core::indices::display_digits(v.midpoint_f64()).to_string()]
}

pub fn value_header(prefix: &str) -> [String; 3] {
    [format!("{prefix}_lo"), format!("{prefix}_hi"), format!("{prefix}_mid")]
}

pub fn opt<T: ToString>(v: Option<T>) -> String {
    v.map(|x| x.to_string()).unwrap_or_default()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn csv_has_versioned_comment() {
        let mut c = Csv::new("compute", ["a", "b"]);
        c.note("first_flip", 195);
        c.row(["1", "x,y"]);
        assert_eq!(c.finish().unwrap(), "# degix-csv v1 compute\n# first_flip=195\na,b\n1,\"x,y\"\n");
    }
}
