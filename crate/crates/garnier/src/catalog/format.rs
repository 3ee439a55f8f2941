//! Line-oriented data file format for catalog objects.
//!
//! A catalog file is a sequence of lines, each blank, a `#` comment, or an
//! entry `key = value`. Keys are dotted paths of identifier segments, in
//! file order, unique per file. Values are either expressions in the
//! grammar of [`crate::exactalg::parse`] or, for the few structural keys
//! (words, shifts, names), whitespace-separated tokens; the accessor
//! chosen by the caller decides how a value is read.

use std::collections::BTreeSet;

use crate::exactalg::{parse, RatExpr};

/// Catalog reading failure.
#[derive(thiserror::Error, Debug)]
pub enum CatalogError {
    #[error("{file}: line {line}: expected `key = value`")]
    Malformed { file: String, line: usize },
    #[error("{file}: duplicate key {key:?}")]
    DuplicateKey { file: String, key: String },
    #[error("{file}: missing key {key:?}")]
    MissingKey { file: String, key: String },
    #[error("{file}: key {key:?}: {source}")]
    BadExpression {
        file: String,
        key: String,
        source: crate::exactalg::ParseError,
    },
    #[error("{file}: key {key:?}: expected {expected}, got {got:?}")]
    BadValue {
        file: String,
        key: String,
        expected: String,
        got: String,
    },
    #[error("unknown catalog file {0:?}")]
    UnknownFile(String),
    #[error("catalog algebra failure: {0}")]
    Algebra(#[from] crate::exactalg::AlgError),
}

/// One parsed catalog file: ordered `key = value` entries.
#[derive(Clone, Debug)]
pub struct CatalogFile {
    pub name: String,
    entries: Vec<(String, String)>,
}

fn key_is_valid(key: &str) -> bool {
    !key.is_empty()
        && key.split('.').all(|seg| {
            !seg.is_empty()
                && seg
                    .chars()
                    .all(|c| c.is_ascii_alphanumeric() || c == '_')
        })
}

impl CatalogFile {
    /// Parses file text. Duplicate keys and malformed lines are rejected.
    pub fn parse(name: &str, text: &str) -> Result<CatalogFile, CatalogError> {
        let mut entries = Vec::new();
        let mut seen = BTreeSet::new();
        for (i, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let Some((key, value)) = line.split_once('=') else {
                return Err(CatalogError::Malformed {
                    file: name.to_string(),
                    line: i + 1,
                });
            };
            let key = key.trim();
            let value = value.trim();
            if !key_is_valid(key) || value.is_empty() {
                return Err(CatalogError::Malformed {
                    file: name.to_string(),
                    line: i + 1,
                });
            }
            if !seen.insert(key.to_string()) {
                return Err(CatalogError::DuplicateKey {
                    file: name.to_string(),
                    key: key.to_string(),
                });
            }
            entries.push((key.to_string(), value.to_string()));
        }
        Ok(CatalogFile {
            name: name.to_string(),
            entries,
        })
    }

    /// Raw value of a key, if present.
    pub fn get(&self, key: &str) -> Option<&str> {
        self.entries
            .iter()
            .find(|(k, _)| k == key)
            .map(|(_, v)| v.as_str())
    }

    /// Raw value of a required key.
    pub fn require(&self, key: &str) -> Result<&str, CatalogError> {
        self.get(key).ok_or_else(|| CatalogError::MissingKey {
            file: self.name.clone(),
            key: key.to_string(),
        })
    }

    /// All keys having the given first segment, with the prefix and its dot
    /// removed, in file order.
    pub fn keys_under<'a>(&'a self, prefix: &'a str) -> impl Iterator<Item = &'a str> {
        self.entries
            .iter()
            .filter_map(move |(k, _)| k.strip_prefix(prefix)?.strip_prefix('.'))
    }

    /// All keys, in file order.
    pub fn keys(&self) -> impl Iterator<Item = &str> {
        self.entries.iter().map(|(k, _)| k.as_str())
    }

    /// Required key parsed as an expression.
    pub fn expr(&self, key: &str) -> Result<RatExpr, CatalogError> {
        let raw = self.require(key)?;
        parse(raw).map_err(|source| CatalogError::BadExpression {
            file: self.name.clone(),
            key: key.to_string(),
            source,
        })
    }

    /// Optional key parsed as an expression.
    pub fn expr_opt(&self, key: &str) -> Result<Option<RatExpr>, CatalogError> {
        match self.get(key) {
            None => Ok(None),
            Some(_) => self.expr(key).map(Some),
        }
    }

    /// Required key split into whitespace-separated tokens.
    pub fn tokens(&self, key: &str) -> Result<Vec<String>, CatalogError> {
        Ok(self
            .require(key)?
            .split_whitespace()
            .map(|t| t.to_string())
            .collect())
    }

    /// Required key parsed as a fixed-length integer vector.
    pub fn ints<const N: usize>(&self, key: &str) -> Result<[i64; N], CatalogError> {
        let toks = self.tokens(key)?;
        let parsed: Result<Vec<i64>, _> = toks.iter().map(|t| t.parse::<i64>()).collect();
        match parsed {
            Ok(v) if v.len() == N => Ok(v.try_into().unwrap()),
            _ => Err(CatalogError::BadValue {
                file: self.name.clone(),
                key: key.to_string(),
                expected: format!("{N} integers"),
                got: self.require(key)?.to_string(),
            }),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_entries_and_skips_comments() {
        let f = CatalogFile::parse(
            "demo",
            "# header\n\nq1 = 1/x\ncorr.t = p1\nword = s4 s5\nshift = 0 0 0 0 -1 1\n",
        )
        .unwrap();
        assert_eq!(f.get("q1"), Some("1/x"));
        assert_eq!(f.get("corr.t"), Some("p1"));
        assert_eq!(f.tokens("word").unwrap(), vec!["s4", "s5"]);
        assert_eq!(f.ints::<6>("shift").unwrap(), [0, 0, 0, 0, -1, 1]);
        assert!(f.expr("q1").is_ok());
        assert!(f.get("absent").is_none());
    }

    #[test]
    fn rejects_duplicates_and_malformed_lines() {
        assert!(matches!(
            CatalogFile::parse("d", "a = 1\na = 2\n"),
            Err(CatalogError::DuplicateKey { .. })
        ));
        assert!(matches!(
            CatalogFile::parse("d", "just words\n"),
            Err(CatalogError::Malformed { line: 1, .. })
        ));
        assert!(matches!(
            CatalogFile::parse("d", "k =\n"),
            Err(CatalogError::Malformed { .. })
        ));
        assert!(matches!(
            CatalogFile::parse("d", "bad key = 1\n"),
            Err(CatalogError::Malformed { .. })
        ));
    }

    #[test]
    fn prefix_listing_preserves_order() {
        let f = CatalogFile::parse("d", "s2.x = 1\ns1.y = 2\ns2.y = 3\n").unwrap();
        let under: Vec<&str> = f.keys_under("s2").collect();
        assert_eq!(under, vec!["x", "y"]);
    }

    #[test]
    fn bad_expression_reports_key() {
        let f = CatalogFile::parse("d", "k = q1 + bogus\n").unwrap();
        let err = f.expr("k").unwrap_err();
        assert!(err.to_string().contains("\"k\""));
    }
}
