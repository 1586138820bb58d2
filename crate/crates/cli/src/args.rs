//! Parsing of integer vectors, matrices and input files.

use std::fs;
use std::path::Path;

use serde::de::DeserializeOwned;

use crate::error::CliError;

/// Integers separated by commas or whitespace, optionally in parentheses
/// or brackets.
pub fn parse_vector(s: &str) -> Result<Vec<i64>, CliError> {
    let t = s.trim().trim_start_matches(['(', '[']).trim_end_matches([')', ']']);
    t.split(|c: char| c == ',' || c.is_whitespace())
        .filter(|x| !x.is_empty())
        .map(|x| {
            x.parse::<i64>()
                .map_err(|_| CliError::Parse(format!("{x:?} is not an integer (in {s:?})")))
        })
        .collect()
}

/// Like [`parse_vector`], but a single value is repeated `len` times.
pub fn vector_of_len(name: &str, s: &str, len: usize) -> Result<Vec<i64>, CliError> {
    let v = parse_vector(s)?;
    match v.len() {
        1 if len != 1 => Ok(vec![v[0]; len]),
        n if n == len => Ok(v),
        n => Err(CliError::Parse(format!("--{name} needs {len} coordinates, got {n}"))),
    }
}

/// Rows separated by `;` or newlines, entries as in [`parse_vector`].
pub fn parse_matrix(s: &str) -> Result<Vec<Vec<i64>>, CliError> {
    let rows: Vec<Vec<i64>> = s
        .split([';', '\n'])
        .filter(|r| !r.trim().is_empty())
        .map(parse_vector)
        .collect::<Result<_, _>>()?;
    let Some(width) = rows.first().map(Vec::len) else {
        return Err(CliError::Parse("empty matrix".into()));
    };
    if width == 0 || rows.iter().any(|r| r.len() != width) {
        return Err(CliError::Parse(format!("rows of {s:?} have unequal or zero length")));
    }
    Ok(rows)
}

pub fn read_json<T: DeserializeOwned>(path: &Path) -> Result<T, CliError> {
    let text = fs::read_to_string(path).map_err(|e| CliError::Parse(format!("{}: {e}", path.display())))?;
    serde_json::from_str(&text).map_err(|e| CliError::Parse(format!("{}: {e}", path.display())))
}

/// A matrix given either inline or as a path to a JSON list of rows.
pub fn matrix_arg(s: &str) -> Result<Vec<Vec<i64>>, CliError> {
    let path = Path::new(s);
    if path.is_file() {
        read_json(path)
    } else {
        parse_matrix(s)
    }
}

pub fn fmt_vector(v: &[i64]) -> String {
    v.iter().map(i64::to_string).collect::<Vec<_>>().join(",")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn vectors_and_broadcast() {
        assert_eq!(parse_vector("1,2 3").unwrap(), vec![1, 2, 3]);
        assert_eq!(parse_vector("(1, -2)").unwrap(), vec![1, -2]);
        assert_eq!(vector_of_len("lambda", "2", 3).unwrap(), vec![2, 2, 2]);
        assert!(matches!(vector_of_len("lambda", "1,2", 3), Err(CliError::Parse(_))));
        assert!(parse_vector("1,x").is_err());
    }

    #[test]
    fn matrices() {
        assert_eq!(parse_matrix("1 -1; 1 1").unwrap(), vec![vec![1, -1], vec![1, 1]]);
        assert_eq!(parse_matrix("1 1").unwrap(), vec![vec![1, 1]]);
        assert!(parse_matrix("1 2; 3").is_err());
        assert!(parse_matrix(" ").is_err());
    }
}
