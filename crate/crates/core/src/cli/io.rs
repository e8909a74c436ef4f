use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MatrixFile {
    pub rows: Vec<Vec<i64>>,
}

/// Reads `{"rows": [[...], ...]}`, or headerless comma-separated rows when
/// `csv` is set.
pub fn read_matrix(path: &Path, csv: bool) -> Result<Vec<Vec<i64>>> {
    let text = std::fs::read_to_string(path)?;
    if csv {
        parse_csv(&text)
    } else {
        parse_json(&text)
    }
}

pub fn parse_json(text: &str) -> Result<Vec<Vec<i64>>> {
    let m: MatrixFile = serde_json::from_str(text)?;
    check_rectangular(m.rows)
}

pub fn parse_csv(text: &str) -> Result<Vec<Vec<i64>>> {
    let mut reader = csv::ReaderBuilder::new()
        .has_headers(false)
        .trim(csv::Trim::All)
        .from_reader(text.as_bytes());
    let mut rows = Vec::new();
    for record in reader.records() {
        let record = record.map_err(|e| Error::Parse(e.to_string()))?;
        let row = record
            .iter()
            .map(|f| f.parse::<i64>().map_err(|e| Error::Parse(format!("{f:?}: {e}"))))
            .collect::<Result<Vec<_>>>()?;
        rows.push(row);
    }
    check_rectangular(rows)
}

fn check_rectangular(rows: Vec<Vec<i64>>) -> Result<Vec<Vec<i64>>> {
    if let Some(first) = rows.first() {
        if let Some(bad) = rows.iter().position(|r| r.len() != first.len()) {
            return Err(Error::Parse(format!(
                "row {} has {} entries, expected {}",
                bad + 1,
                rows[bad].len(),
                first.len()
            )));
        }
    }
    Ok(rows)
}

/// Parses a comma-separated integer degree.
pub fn parse_degree(text: &str) -> Result<Vec<i64>> {
    text.split(',')
        .map(|s| s.trim().parse::<i64>().map_err(|e| Error::Parse(format!("{s:?}: {e}"))))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn formats() {
        assert_eq!(parse_json(r#"{"rows": [[1,1],[0,1]]}"#).unwrap(), vec![vec![1, 1], vec![0, 1]]);
        assert_eq!(parse_csv("1, 1, 1\n0,1,2\n").unwrap(), vec![vec![1, 1, 1], vec![0, 1, 2]]);
        assert!(parse_csv("1,1\n0\n").is_err());
        assert!(parse_json(r#"{"rows": [[1,1],[0]]}"#).is_err());
        assert!(parse_json("[1]").is_err());
        assert_eq!(parse_degree("1, -2").unwrap(), vec![1, -2]);
        assert!(parse_degree("1,x").is_err());
    }
}
