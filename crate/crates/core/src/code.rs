//! Codes: canonically ordered sets of equal-length codewords.

use core::fmt;

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec::Vec;

use crate::combin::for_each_combination;
use crate::params::TwoDistanceParams;
use crate::word::{Codeword, MAX_LEN};

/// A set of distinct codewords of one common length, kept sorted in
/// bitstring-lexicographic order so that equal codes have equal
/// representations (and byte-identical serializations).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Code {
    len: u32,
    words: Vec<Codeword>,
}

/// How a code's realized distance set relates to a prescribed pair.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TwoDistanceClass {
    /// Both prescribed distances occur and nothing else does.
    Exact,
    /// Every realized distance is prescribed, but only one of the two occurs
    /// (or the code is too small to realize any distance).
    SubsetOnly,
    /// Some realized distance lies outside the prescribed pair.
    No,
}

/// Errors from building or transforming a [`Code`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CodeError {
    /// Length zero or above [`MAX_LEN`].
    LengthOutOfRange { len: u32 },
    /// A word whose length differs from the code length.
    LengthMismatch { expected: u32, found: u32 },
    /// The same word was supplied twice.
    DuplicateWord,
    /// A translator search was asked to run above its length guard.
    TranslatorLengthLimit { len: u32, max: u32 },
}

impl fmt::Display for CodeError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CodeError::LengthOutOfRange { len } => {
                write!(f, "code length {len} outside 1..={MAX_LEN}")
            }
            CodeError::LengthMismatch { expected, found } => {
                write!(f, "codeword length {found} in a code of length {expected}")
            }
            CodeError::DuplicateWord => write!(f, "duplicate codeword"),
            CodeError::TranslatorLengthLimit { len, max } => {
                write!(
                    f,
                    "translator search over length {len} exceeds the guard {max} \
                     (the sweep is exponential in the length; raise the guard explicitly)"
                )
            }
        }
    }
}

impl core::error::Error for CodeError {}

impl Code {
    /// Builds a code of length `len` from the given words, sorting them into
    /// canonical order and rejecting duplicates and length mismatches.
    pub fn new(len: u32, words: impl IntoIterator<Item = Codeword>) -> Result<Self, CodeError> {
        if len == 0 || len > MAX_LEN {
            return Err(CodeError::LengthOutOfRange { len });
        }
        let mut words: Vec<Codeword> = words.into_iter().collect();
        for w in &words {
            if w.len() != len {
                return Err(CodeError::LengthMismatch {
                    expected: len,
                    found: w.len(),
                });
            }
        }
        words.sort_unstable();
        if words.windows(2).any(|p| p[0] == p[1]) {
            return Err(CodeError::DuplicateWord);
        }
        Ok(Code { len, words })
    }

    /// Common length of all codewords.
    pub fn len(&self) -> u32 {
        self.len
    }

    /// True when the code holds no words at all.
    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }

    /// Number of codewords.
    pub fn size(&self) -> usize {
        self.words.len()
    }

    /// The codewords in canonical (bitstring-lexicographic) order.
    pub fn words(&self) -> &[Codeword] {
        &self.words
    }

    /// True if `w` is a member.
    pub fn contains(&self, w: &Codeword) -> bool {
        self.words.binary_search(w).is_ok()
    }

    /// All pairwise distances that actually occur; empty for sizes 0 and 1.
    pub fn distance_set(&self) -> BTreeSet<u32> {
        let mut out = BTreeSet::new();
        for i in 0..self.words.len() {
            for j in i + 1..self.words.len() {
                out.insert(self.words[i].distance(&self.words[j]));
            }
        }
        out
    }

    /// Classifies the realized distance set against a prescribed pair.
    ///
    /// # Panics
    ///
    /// Panics if the code length differs from `params.n()`.
    pub fn classify(&self, params: &TwoDistanceParams) -> TwoDistanceClass {
        assert_eq!(
            self.len,
            params.n(),
            "classifying a code against parameters of another length"
        );
        let ds = self.distance_set();
        let prescribed: BTreeSet<u32> = [params.d1(), params.d2()].into_iter().collect();
        if !ds.is_subset(&prescribed) {
            TwoDistanceClass::No
        } else if ds == prescribed {
            TwoDistanceClass::Exact
        } else {
            TwoDistanceClass::SubsetOnly
        }
    }

    /// The code `{x ^ y : x in self}` — distances are invariant under this.
    pub fn translate(&self, y: &Codeword) -> Result<Code, CodeError> {
        if y.len() != self.len {
            return Err(CodeError::LengthMismatch {
                expected: self.len,
                found: y.len(),
            });
        }
        Code::new(self.len, self.words.iter().map(|w| w.xor(y)))
    }

    /// Weight histogram: weight value to number of codewords carrying it.
    pub fn weight_distribution(&self) -> BTreeMap<u32, usize> {
        let mut out = BTreeMap::new();
        for w in &self.words {
            *out.entry(w.weight()).or_insert(0) += 1;
        }
        out
    }

    /// Searches for a word `y` at one common distance `w` from every
    /// codeword, i.e. a translation taking the code to constant weight `w`.
    /// Sweeps `w` upward and, inside each `w`, the sphere of radius `w`
    /// around the first codeword in lexicographic order, so the result is
    /// deterministic and of minimal constant weight.
    ///
    /// The sweep visits up to `2^len` candidates, so it refuses lengths above
    /// `max_len`; callers opt in to longer runs by raising the guard.
    pub fn constant_weight_translator(&self, max_len: u32) -> Result<Option<Codeword>, CodeError> {
        if self.len > max_len {
            return Err(CodeError::TranslatorLengthLimit {
                len: self.len,
                max: max_len,
            });
        }
        let Some(first) = self.words.first() else {
            // No words: any translator works; report the canonical one.
            return Ok(Some(Codeword::zero(self.len)));
        };
        for w in 0..=self.len {
            let mut found = None;
            for_each_combination(self.len, w, |flip| {
                if found.is_some() {
                    return;
                }
                // Candidates at distance w from the first word; the first
                // word's own check is then free.
                let y = first.xor(&Codeword::from_support(self.len, flip));
                if self.words[1..].iter().all(|x| y.distance(x) == w) {
                    found = Some(y);
                }
            });
            if found.is_some() {
                return Ok(found);
            }
        }
        Ok(None)
    }
}
