//! The ledger of known discrepancies in the printed tables and equations.
//!
//! Verification marks an observed discrepancy "expected" only when a ledger
//! entry describes it exactly; an entry that no longer matches anything is
//! stale and fails the run. The shipped ledger is compiled in;
//! `FUSIONKIT_LEDGER` points at a replacement file.

use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};
use thiserror::Error;

pub const LEDGER_ENV: &str = "FUSIONKIT_LEDGER";

const SHIPPED: &str = include_str!("../data/errata.json");

#[derive(Debug, Error)]
pub enum LedgerError {
    #[error("cannot read ledger {path}: {source}")]
    Io { path: PathBuf, source: std::io::Error },
    #[error("malformed ledger {origin}: {source}")]
    Parse { origin: String, source: serde_json::Error },
}

#[derive(Copy, Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ErratumKind {
    /// A printed S-cell contradicted by its own symmetric partner.
    AppendixTypo,
    /// A printed fusion equation replaced by the Verlinde result.
    RuleArbitration,
    /// Printed rows that the coset character rule does not reproduce.
    ClassSumTension,
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct Erratum {
    pub id: String,
    pub kind: ErratumKind,
    /// The printed form, quoted.
    pub printed: String,
    pub resolved: String,
    #[serde(default)]
    pub note: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub cell: Option<(u8, u8)>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub family: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub classes: Option<Vec<Vec<u8>>>,
    /// Number of disagreeing instances the entry accounts for.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub mismatches: Option<usize>,
}

#[derive(Clone, PartialEq, Eq, Debug, Default, Serialize, Deserialize)]
pub struct Ledger {
    pub entries: Vec<Erratum>,
}

impl Ledger {
    pub fn shipped() -> Ledger {
        Self::parse(SHIPPED, "<shipped>").expect("shipped ledger is valid")
    }

    pub fn parse(text: &str, origin: &str) -> Result<Ledger, LedgerError> {
        serde_json::from_str(text).map_err(|source| LedgerError::Parse { origin: origin.to_string(), source })
    }

    pub fn from_path(path: &Path) -> Result<Ledger, LedgerError> {
        let text = std::fs::read_to_string(path).map_err(|source| LedgerError::Io { path: path.to_path_buf(), source })?;
        Self::parse(&text, &path.display().to_string())
    }

    /// The file named by `FUSIONKIT_LEDGER`, else the shipped ledger.
    pub fn load() -> Result<Ledger, LedgerError> {
        match std::env::var_os(LEDGER_ENV) {
            Some(path) if !path.is_empty() => Self::from_path(Path::new(&path)),
            _ => Ok(Self::shipped()),
        }
    }

    pub fn of_kind(&self, kind: ErratumKind) -> impl Iterator<Item = &Erratum> {
        self.entries.iter().filter(move |e| e.kind == kind)
    }

    pub fn typo_at(&self, row: u8, col: u8) -> Option<&Erratum> {
        self.of_kind(ErratumKind::AppendixTypo).find(|e| e.cell == Some((row, col)))
    }

    pub fn rule(&self, family: &str) -> Option<&Erratum> {
        self.of_kind(ErratumKind::RuleArbitration).find(|e| e.family.as_deref() == Some(family))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn shipped_entries() {
        let ledger = Ledger::shipped();
        assert_eq!(ledger.entries.len(), 6);
        assert!(ledger.typo_at(16, 15).is_some());
        let typo = ledger.typo_at(10, 9).unwrap();
        assert!(typo.printed.contains("e^{-8πi/9}"));
        assert_eq!(typo.resolved, "e^{8πi/9}");
        assert_eq!(ledger.rule("4.4-5").unwrap().mismatches, Some(18));
        assert!(ledger.rule("4.4-1").is_none());
        assert_eq!(ledger.of_kind(ErratumKind::ClassSumTension).count(), 1);
    }

    #[test]
    fn round_trips() {
        let ledger = Ledger::shipped();
        let text = serde_json::to_string(&ledger).unwrap();
        assert_eq!(Ledger::parse(&text, "test").unwrap(), ledger);
    }

    #[test]
    fn reports_bad_files() {
        assert!(matches!(Ledger::parse("{", "x"), Err(LedgerError::Parse { .. })));
        assert!(matches!(Ledger::from_path(Path::new("/nonexistent/ledger.json")), Err(LedgerError::Io { .. })));
    }
}
