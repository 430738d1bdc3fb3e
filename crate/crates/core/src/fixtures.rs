//! The shipped `E_{4,4}` character, checksummed.

use std::collections::BTreeMap;

use serde::Deserialize;
use sha2::{Digest, Sha256};

use crate::error::{Error, Result};
use crate::schur::SchurExpansion;
use crate::shapes::Partition;

pub const E44_JSON: &str = include_str!("../fixtures/e44.json");
pub const E44_SHA256: &str = "01af661eecc389fa3dd2f4d2329e79da50c60cd7d01c1629eeaf600e03cccaff";

#[derive(Deserialize)]
struct RawComponent {
    mu: Partition,
    terms: Vec<Partition>,
}

#[derive(Deserialize)]
struct RawFixture {
    name: String,
    n: u32,
    components: Vec<RawComponent>,
}

/// `⟨E_{n,n}, s_μ⟩` for every `μ ⊢ n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CharacterFixture {
    pub name: String,
    pub n: u32,
    pub components: BTreeMap<Partition, SchurExpansion>,
}

impl CharacterFixture {
    pub fn component(&self, mu: &Partition) -> Option<&SchurExpansion> {
        self.components.get(mu)
    }
}

pub fn sha256_hex(text: &str) -> String {
    hex::encode(Sha256::digest(text.as_bytes()))
}

/// Parses `text` after checking it hashes to `expected`.
pub fn load_checked(text: &str, expected: &str) -> Result<CharacterFixture> {
    let found = sha256_hex(text);
    if found != expected {
        return Err(Error::FixtureChecksum {
            expected: expected.to_string(),
            found,
        });
    }
    let raw: RawFixture = serde_json::from_str(text).map_err(|e| Error::Fixture(e.to_string()))?;
    let mut components = BTreeMap::new();
    for c in raw.components {
        if c.mu.size() != raw.n {
            return Err(Error::Fixture(format!("μ={} is not a partition of {}", c.mu, raw.n)));
        }
        if components.insert(c.mu.clone(), SchurExpansion::from_partitions(c.terms)).is_some() {
            return Err(Error::Fixture(format!("μ={} listed twice", c.mu)));
        }
    }
    if components.len() != Partition::all(raw.n).len() {
        return Err(Error::Fixture("missing components".into()));
    }
    Ok(CharacterFixture {
        name: raw.name,
        n: raw.n,
        components,
    })
}

pub fn e44() -> Result<CharacterFixture> {
    load_checked(E44_JSON, E44_SHA256)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::characters::{hook_formula, HookFormulaInput};

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    fn sum(parts: &[&str]) -> SchurExpansion {
        SchurExpansion::from_partitions(parts.iter().map(|s| p(s)))
    }

    #[test]
    fn loads() {
        let f = e44().unwrap();
        assert_eq!(f.n, 4);
        assert_eq!(f.components.len(), 5);
        assert_eq!(f.component(&p("1,1,1,1")).unwrap(), &sum(&["1,1,1", "3,1", "4,1", "6"]));
        assert_eq!(f.component(&p("2,2")).unwrap(), &sum(&["2", "2,1", "4"]));
        assert_eq!(f.component(&p("2,1,1")).unwrap(), &sum(&["1,1", "2,1", "3,1", "3", "4", "5"]));
        assert_eq!(f.component(&p("4")).unwrap().to_string(), "1");
    }

    #[test]
    fn tamper_is_rejected() {
        let bad = E44_JSON.replace("[6]", "[7]");
        assert!(matches!(load_checked(&bad, E44_SHA256), Err(Error::FixtureChecksum { .. })));
        // a consistent checksum still has to parse
        let junk = "{}";
        assert!(matches!(load_checked(junk, &sha256_hex(junk)), Err(Error::Fixture(_))));
    }

    #[test]
    fn hook_formula_reproduces_all_components() {
        // the closed formula is stated for hooks but also matches (2,2) here
        let f = e44().unwrap();
        for (mu, want) in &f.components {
            let got = hook_formula(&HookFormulaInput::new(mu.clone(), 1).unwrap()).unwrap();
            assert_eq!(&got.expansion, want, "μ={mu}");
        }
    }
}
