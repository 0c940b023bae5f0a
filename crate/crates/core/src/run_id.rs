//! Run identifiers of the form `sdb_<12 hex>`.

use std::fmt;

use sha2::{Digest, Sha256};

const PREFIX: &str = "sdb_";
const HEX_LEN: usize = 12;

/// Identifier shared by a report and its plot directory.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RunId(String);

impl RunId {
    /// Derives the identifier from the content digests of both inputs and
    /// the seed, so the same inputs always map to the same run directory.
    pub fn derive(real_digest: &[u8], synthetic_digest: &[u8], seed: u64) -> Self {
        let mut hasher = Sha256::new();
        hasher.update(real_digest);
        hasher.update(synthetic_digest);
        hasher.update(seed.to_le_bytes());
        let digest = hasher.finalize();
        let hex = hex::encode(digest);
        RunId(format!("{PREFIX}{}", &hex[..HEX_LEN]))
    }

    /// Convenience over [`RunId::derive`] taking raw file contents.
    pub fn from_inputs(real_bytes: &[u8], synthetic_bytes: &[u8], seed: u64) -> Self {
        Self::derive(
            &content_digest(real_bytes),
            &content_digest(synthetic_bytes),
            seed,
        )
    }

    /// Validates an existing identifier string.
    pub fn parse(s: &str) -> Option<Self> {
        let hex = s.strip_prefix(PREFIX)?;
        let ok = hex.len() == HEX_LEN
            && hex
                .bytes()
                .all(|b| b.is_ascii_digit() || (b'a'..=b'f').contains(&b));
        ok.then(|| RunId(s.to_string()))
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }
}

impl fmt::Display for RunId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

/// SHA-256 of a byte buffer.
pub fn content_digest(bytes: &[u8]) -> Vec<u8> {
    Sha256::digest(bytes).to_vec()
}
