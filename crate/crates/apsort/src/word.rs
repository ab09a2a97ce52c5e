//! Tagged machine words.
//!
//! Every element of a list is a 64-bit word. Bit 63 is the *tag*: an
//! untagged word carries a key value in `[0, 2^63 - 1]`, a tagged word is a
//! *node* whose low 63 bits form its *record*. The record field is reused
//! across the phases (occurrence count, cumulative position, ticket source,
//! run start, retrieval cue).

use std::fmt;
use std::str::FromStr;

/// Width of a list word in bits.
pub const WORD_BITS: u32 = 64;

/// The tag bit marking a word as a node.
pub const TAG: u64 = 1 << 63;

/// Largest key value an untagged word can carry.
pub const MAX_KEY: u64 = TAG - 1;

/// True if the word is a node.
#[inline(always)]
pub fn is_node(word: u64) -> bool {
    word & TAG != 0
}

/// Builds a node word with the given record.
#[inline(always)]
pub fn node(record: u64) -> u64 {
    debug_assert!(record <= MAX_KEY);
    record | TAG
}

/// The record of a node (low 63 bits).
#[inline(always)]
pub fn record(word: u64) -> u64 {
    word & MAX_KEY
}

/// Clears the tag bit.
#[inline(always)]
pub fn clear_tag(word: u64) -> u64 {
    word & MAX_KEY
}

/// Sets the tag bit.
#[inline(always)]
pub fn set_tag(word: u64) -> u64 {
    word | TAG
}

/// A word rendered for display: `node(R)` for a tagged word, the decimal
/// value otherwise. Rendering round-trips through [`Rendered::from_str`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Rendered(pub u64);

impl fmt::Display for Rendered {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if is_node(self.0) {
            write!(f, "node({})", record(self.0))
        } else {
            write!(f, "{}", self.0)
        }
    }
}

/// Error parsing a rendered word.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("invalid word rendering: {0:?}")]
pub struct ParseWordError(pub String);

impl FromStr for Rendered {
    type Err = ParseWordError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        if let Some(rest) = s.strip_prefix("node(").and_then(|r| r.strip_suffix(')')) {
            let rec: u64 = rest.parse().map_err(|_| ParseWordError(s.to_string()))?;
            if rec > MAX_KEY {
                return Err(ParseWordError(s.to_string()));
            }
            Ok(Rendered(node(rec)))
        } else {
            let value: u64 = s.parse().map_err(|_| ParseWordError(s.to_string()))?;
            if value > MAX_KEY {
                return Err(ParseWordError(s.to_string()));
            }
            Ok(Rendered(value))
        }
    }
}

/// Renders a slice of words as space-separated values.
pub fn render_words(words: &[u64]) -> String {
    words
        .iter()
        .map(|&w| Rendered(w).to_string())
        .collect::<Vec<_>>()
        .join(" ")
}
