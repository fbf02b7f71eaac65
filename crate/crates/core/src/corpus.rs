//! Polynomials transcribed verbatim from published displays, embedded at
//! build time together with a manifest of content hashes.
//!
//! A hash is the SHA-256 of the canonical file print (`vars: n` line plus
//! the canonical polynomial line), so it is insensitive to the spacing and
//! unreduced fractions of the transcription.

use sha2::{Digest, Sha256};

use crate::error::{Error, Result};
use crate::poly::text::{format_file, parse_polynomial};
use crate::poly::Polynomial;

/// One embedded corpus file.
#[derive(Clone, Copy, Debug)]
pub struct CorpusEntry {
    pub name: &'static str,
    pub source: &'static str,
}

macro_rules! entry {
    ($name:literal) => {
        CorpusEntry {
            name: $name,
            source: include_str!(concat!("../corpus/", $name, ".poly")),
        }
    };
}

pub const ENTRIES: &[CorpusEntry] = &[
    entry!("ch-m4-example"),
    entry!("key-21"),
    entry!("n-schur-31111"),
    entry!("n-schur-31111-specialized"),
    entry!("schubert-321"),
    entry!("schur-20"),
];

const MANIFEST: &str = include_str!("../corpus/MANIFEST");

impl CorpusEntry {
    pub fn polynomial(&self) -> Result<Polynomial> {
        parse_polynomial(self.source)
    }

    /// Leading `#` lines of the file, without the marker.
    pub fn description(&self) -> String {
        self.source
            .lines()
            .take_while(|l| l.starts_with('#'))
            .map(|l| l.trim_start_matches('#').trim())
            .collect::<Vec<_>>()
            .join(" ")
    }

    pub fn expected_hash(&self) -> Option<&'static str> {
        manifest().find(|(_, n)| *n == self.name).map(|(h, _)| h)
    }
}

fn manifest() -> impl Iterator<Item = (&'static str, &'static str)> {
    MANIFEST
        .lines()
        .filter(|l| !l.trim().is_empty() && !l.starts_with('#'))
        .filter_map(|l| l.split_once(char::is_whitespace))
        .map(|(h, n)| (h, n.trim()))
}

pub fn get(name: &str) -> Result<&'static CorpusEntry> {
    ENTRIES
        .iter()
        .find(|e| e.name == name)
        .ok_or_else(|| Error::Invalid(format!("no corpus entry named {name:?}")))
}

/// Loads a corpus polynomial by name.
pub fn load(name: &str) -> Result<Polynomial> {
    get(name)?.polynomial()
}

/// Lowercase hex SHA-256 of the canonical print of `p`.
pub fn content_hash(p: &Polynomial) -> String {
    Sha256::digest(format_file(p).as_bytes())
        .iter()
        .map(|b| format!("{b:02x}"))
        .collect()
}

/// Result of re-checking one corpus entry.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CorpusCheck {
    pub name: &'static str,
    pub expected: Option<&'static str>,
    pub actual: Option<String>,
    /// Parse or round-trip problem, if any.
    pub error: Option<String>,
}

impl CorpusCheck {
    pub fn ok(&self) -> bool {
        self.error.is_none() && self.expected.is_some() && self.expected == self.actual.as_deref()
    }
}

/// Re-parses every entry, checks that its canonical print parses back to
/// the same polynomial, and compares hashes with the manifest.
pub fn verify() -> Vec<CorpusCheck> {
    ENTRIES
        .iter()
        .map(|e| {
            let expected = e.expected_hash();
            match e.polynomial() {
                Err(err) => CorpusCheck {
                    name: e.name,
                    expected,
                    actual: None,
                    error: Some(err.to_string()),
                },
                Ok(p) => {
                    let round = parse_polynomial(&format_file(&p));
                    let error = match round {
                        Ok(q) if q == p => None,
                        Ok(_) => Some("canonical print does not parse back".into()),
                        Err(err) => Some(err.to_string()),
                    };
                    CorpusCheck {
                        name: e.name,
                        expected,
                        actual: Some(content_hash(&p)),
                        error,
                    }
                }
            }
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_entry_verifies() {
        for c in verify() {
            assert!(c.ok(), "{c:?}");
        }
    }

    #[test]
    fn manifest_lists_exactly_the_entries() {
        let mut listed: Vec<&str> = manifest().map(|(_, n)| n).collect();
        listed.sort_unstable();
        let names: Vec<&str> = ENTRIES.iter().map(|e| e.name).collect();
        assert_eq!(listed, names);
    }

    #[test]
    fn displayed_normalized_schur_has_fifteen_terms() {
        let p = load("n-schur-31111").unwrap();
        assert_eq!(p.len(), 15);
        assert_eq!(p.total_degree(), Some(7));
        assert!(p.is_homogeneous());
    }

    #[test]
    fn unknown_name() {
        assert!(load("nope").is_err());
    }
}
