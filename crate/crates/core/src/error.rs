use thiserror::Error;

use crate::word::Alphabet;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("letter {letter} does not belong to alphabet {alphabet}")]
    LetterOutsideAlphabet { letter: String, alphabet: Alphabet },

    #[error("alphabet mismatch: {left} vs {right}")]
    AlphabetMismatch { left: Alphabet, right: Alphabet },

    #[error("no image given for generator {0}")]
    MissingImage(String),

    #[error("{what} out of range: {detail}")]
    IndexOutOfRange { what: &'static str, detail: String },

    #[error("invalid strand count {n}: {reason}")]
    InvalidStrandCount { n: usize, reason: &'static str },

    #[error("cannot parse word: {0}")]
    Parse(String),

    #[error("invalid permutation {0:?}")]
    InvalidPermutation(Vec<usize>),

    #[error("{0}")]
    Invalid(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn out_of_range(what: &'static str, detail: impl Into<String>) -> Error {
    Error::IndexOutOfRange {
        what,
        detail: detail.into(),
    }
}
