//! Closed-braid words for small knots.
//!
//! Words marked `trusted` are standard. Words marked `candidate` are only
//! served after their coloring counts over `R_3` and `R_5` agree with the
//! reference tables.

use serde::{Deserialize, Serialize};

use crate::braid::{closure_colorings, parse_braid, BraidWord, Convention, LaidOutBraid};
use crate::error::{Error, Result};
use crate::quandle::dihedral;
use crate::tables::expected_coloring_counts;

const BUNDLED: &str = include_str!("../data/knots.json");

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum WordSource {
    Trusted,
    Candidate,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct KnotTableEntry {
    pub name: String,
    pub strands: usize,
    pub word: String,
    pub source: WordSource,
}

impl KnotTableEntry {
    pub fn braid(&self) -> Result<BraidWord> {
        parse_braid(&self.word, Some(self.strands))
    }
}

/// Result of the coloring-count gate.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Validation {
    Trusted,
    Validated,
    Rejected { r3: (usize, usize), r5: (usize, usize) },
}

impl Validation {
    pub fn usable(&self) -> bool {
        !matches!(self, Validation::Rejected { .. })
    }
}

/// Closure coloring counts over `R_3` and `R_5`.
pub fn coloring_counts(w: &BraidWord) -> Result<(usize, usize)> {
    let b = LaidOutBraid::new(w, Convention::DEFAULT);
    let r3 = closure_colorings(&b, &dihedral(3)?, u128::MAX)?.len();
    let r5 = closure_colorings(&b, &dihedral(5)?, u128::MAX)?.len();
    Ok((r3, r5))
}

/// Checks an entry against the reference coloring counts.
pub fn validate(entry: &KnotTableEntry) -> Result<Validation> {
    if entry.source == WordSource::Trusted {
        return Ok(Validation::Trusted);
    }
    let (r3, r5) = coloring_counts(&entry.braid()?)?;
    let (e3, e5) = expected_coloring_counts(&entry.name);
    if (r3, r5) == (e3, e5) {
        Ok(Validation::Validated)
    } else {
        Ok(Validation::Rejected { r3: (r3, e3), r5: (r5, e5) })
    }
}

#[derive(Clone, Debug)]
pub struct KnotTable {
    entries: Vec<KnotTableEntry>,
}

impl KnotTable {
    pub fn from_json(text: &str) -> Result<Self> {
        let entries: Vec<KnotTableEntry> =
            serde_json::from_str(text).map_err(|e| Error::Input(format!("bad knot table: {e}")))?;
        for e in &entries {
            e.braid()?;
        }
        Ok(KnotTable { entries })
    }

    pub fn bundled() -> Self {
        KnotTable::from_json(BUNDLED).expect("bundled knot table parses")
    }

    pub fn entries(&self) -> &[KnotTableEntry] {
        &self.entries
    }

    pub fn get(&self, name: &str) -> Option<&KnotTableEntry> {
        self.entries.iter().find(|e| e.name == name)
    }

    /// The braid of a knot that passes the gate.
    pub fn braid(&self, name: &str) -> Result<BraidWord> {
        let e = self.get(name).ok_or_else(|| Error::Input(format!("knot {name} is not in the table")))?;
        match validate(e)? {
            Validation::Rejected { r3, r5 } => Err(Error::Input(format!(
                "the word for {name} fails validation: R_3 colorings {} (expected {}), R_5 colorings {} (expected {})",
                r3.0, r3.1, r5.0, r5.1
            ))),
            _ => e.braid(),
        }
    }

    /// Names of the knots whose words pass the gate.
    pub fn usable(&self) -> Vec<String> {
        self.entries
            .iter()
            .filter(|e| validate(e).map(|v| v.usable()).unwrap_or(false))
            .map(|e| e.name.clone())
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn trusted_words_have_reference_counts() {
        let t = KnotTable::bundled();
        for e in t.entries().iter().filter(|e| e.source == WordSource::Trusted) {
            assert_eq!(coloring_counts(&e.braid().unwrap()).unwrap(), expected_coloring_counts(&e.name), "{}", e.name);
        }
    }

    #[test]
    fn unknown_knot_is_an_error() {
        assert!(KnotTable::bundled().braid("10_1").is_err());
    }

    #[test]
    fn wrong_word_is_rejected() {
        let e = KnotTableEntry { name: "8_18".into(), strands: 2, word: "1 1 1".into(), source: WordSource::Candidate };
        assert!(!validate(&e).unwrap().usable());
    }
}
