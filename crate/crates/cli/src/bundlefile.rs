//! Parser for bundle-spec files.
//!
//! A bundle spec is UTF-8 text with three header lines followed by the
//! pattern rows, one row per summand:
//!
//! ```text
//! # rank-two example
//! genus 2
//! dL 3
//! degrees 1 0
//! * *
//! * *
//! ```
//!
//! `#` starts a comment that runs to the end of the line; blank lines are
//! ignored. The twist-degree line accepts `twist_degree` as a synonym for
//! `dL`. Pattern rows use `*` for a generically nonzero entry and `0` for an
//! identically zero one, separated by whitespace.

use quadrics_core::{ModelError, PatternEntry, PatternQuadricBundle};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum BundleFileError {
    #[error("missing `{0}` line")]
    MissingLine(&'static str),
    #[error("line {line}: expected `{expected} <value>`, found `{got}`")]
    BadKeyword { line: usize, expected: &'static str, got: String },
    #[error("line {line}: `{token}` is not an integer")]
    BadInteger { line: usize, token: String },
    #[error("line {line}: the degrees line needs at least one integer")]
    NoDegrees { line: usize },
    #[error("line {line}: pattern entry `{token}` is neither `0` nor `*`")]
    BadPatternToken { line: usize, token: String },
    #[error("line {line}: pattern row has {got} entries, expected {expected}")]
    WrongRowLength { line: usize, got: usize, expected: usize },
    #[error("expected {expected} pattern rows, found {got}")]
    MissingRows { expected: usize, got: usize },
    #[error("line {line}: unexpected content after the pattern rows")]
    TrailingContent { line: usize },
    #[error(transparent)]
    Model(#[from] ModelError),
}

/// Parses the text of a bundle-spec file into a checked bundle.
pub fn parse_bundle(text: &str) -> Result<PatternQuadricBundle, BundleFileError> {
    // (1-based line number, content with comments stripped)
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, raw)| {
            let content = raw.split('#').next().unwrap_or("").trim();
            (i + 1, content)
        })
        .filter(|(_, content)| !content.is_empty());

    let genus = keyword_int(lines.next(), "genus", &["genus"])?;
    let twist = keyword_int(lines.next(), "dL", &["dL", "twist_degree"])?;

    let (line, content) = lines.next().ok_or(BundleFileError::MissingLine("degrees"))?;
    let mut tokens = content.split_whitespace();
    match tokens.next() {
        Some("degrees") => {}
        got => {
            return Err(BundleFileError::BadKeyword {
                line,
                expected: "degrees",
                got: got.unwrap_or("").to_string(),
            })
        }
    }
    let degrees = tokens
        .map(|t| {
            t.parse::<i64>()
                .map_err(|_| BundleFileError::BadInteger { line, token: t.to_string() })
        })
        .collect::<Result<Vec<i64>, _>>()?;
    if degrees.is_empty() {
        return Err(BundleFileError::NoDegrees { line });
    }

    let n = degrees.len();
    let mut pattern = Vec::with_capacity(n);
    for (line, content) in lines.by_ref() {
        if pattern.len() == n {
            return Err(BundleFileError::TrailingContent { line });
        }
        let row = content
            .split_whitespace()
            .map(|t| match t {
                "0" => Ok(PatternEntry::Zero),
                "*" => Ok(PatternEntry::Generic),
                other => {
                    Err(BundleFileError::BadPatternToken { line, token: other.to_string() })
                }
            })
            .collect::<Result<Vec<PatternEntry>, _>>()?;
        if row.len() != n {
            return Err(BundleFileError::WrongRowLength { line, got: row.len(), expected: n });
        }
        pattern.push(row);
    }
    if pattern.len() != n {
        return Err(BundleFileError::MissingRows { expected: n, got: pattern.len() });
    }

    Ok(PatternQuadricBundle::new(genus, twist, degrees, pattern)?)
}

fn keyword_int(
    line: Option<(usize, &str)>,
    canonical: &'static str,
    accepted: &[&str],
) -> Result<i64, BundleFileError> {
    let (line, content) = line.ok_or(BundleFileError::MissingLine(canonical))?;
    let mut tokens = content.split_whitespace();
    let keyword = tokens.next().unwrap_or("");
    if !accepted.contains(&keyword) {
        return Err(BundleFileError::BadKeyword {
            line,
            expected: canonical,
            got: keyword.to_string(),
        });
    }
    let token = tokens.next().ok_or(BundleFileError::BadKeyword {
        line,
        expected: canonical,
        got: content.to_string(),
    })?;
    if tokens.next().is_some() {
        return Err(BundleFileError::BadKeyword {
            line,
            expected: canonical,
            got: content.to_string(),
        });
    }
    token
        .parse::<i64>()
        .map_err(|_| BundleFileError::BadInteger { line, token: token.to_string() })
}
