use std::cmp::Ordering;
use std::fmt;

/// A group element stored as its canonical (ShortLex-least reduced) word.
///
/// Letters are 0-based generator indices. Ordering is ShortLex.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct GroupElement {
    word: Vec<u8>,
}

impl GroupElement {
    pub fn identity() -> Self {
        GroupElement { word: Vec::new() }
    }

    pub fn generator(s: usize) -> Self {
        GroupElement { word: vec![s as u8] }
    }

    /// Wraps a word that is already canonical. Callers outside this crate
    /// should go through `m_reduce`.
    pub fn from_canonical(word: Vec<u8>) -> Self {
        GroupElement { word }
    }

    pub fn word(&self) -> &[u8] {
        &self.word
    }

    pub fn letters(&self) -> impl Iterator<Item = usize> + '_ {
        self.word.iter().map(|&c| c as usize)
    }

    pub fn len(&self) -> usize {
        self.word.len()
    }

    pub fn is_empty(&self) -> bool {
        self.word.is_empty()
    }

    pub fn is_identity(&self) -> bool {
        self.word.is_empty()
    }

    /// 1-based letters joined by `.`, `e` for the identity.
    pub fn to_index_string(&self) -> String {
        if self.word.is_empty() {
            return "e".into();
        }
        self.word.iter().map(|c| (c + 1).to_string()).collect::<Vec<_>>().join(".")
    }
}

impl Ord for GroupElement {
    fn cmp(&self, other: &Self) -> Ordering {
        self.word.len().cmp(&other.word.len()).then_with(|| self.word.cmp(&other.word))
    }
}

impl PartialOrd for GroupElement {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]", self.to_index_string())
    }
}

impl fmt::Display for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_index_string())
    }
}
