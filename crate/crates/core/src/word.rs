//! Packed binary codewords of length up to 128.

use core::cmp::Ordering;
use core::fmt;
use core::str::FromStr;

use alloc::vec::Vec;

/// Maximum supported codeword length in bits.
pub const MAX_LEN: u32 = 128;

const WORD_BITS: u32 = 64;
const WORDS: usize = 2;

/// A fixed-length binary word, stored in two machine words.
///
/// Coordinate `0` is the leftmost character of the display form. Bits beyond
/// `len` are kept zero as an invariant, so whole-word operations (XOR,
/// popcount, comparison) never need masking.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Codeword {
    len: u32,
    bits: [u64; WORDS],
}

/// Errors from parsing a codeword out of its `0`/`1` text form.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum WordParseError {
    /// A character other than `0` or `1` at this byte offset.
    BadChar { pos: usize },
    /// Length zero or above [`MAX_LEN`].
    BadLength { len: usize },
}

impl fmt::Display for WordParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            WordParseError::BadChar { pos } => {
                write!(f, "expected '0' or '1' at position {pos}")
            }
            WordParseError::BadLength { len } => {
                write!(f, "codeword length {len} outside 1..={MAX_LEN}")
            }
        }
    }
}

impl core::error::Error for WordParseError {}

impl Codeword {
    /// The all-zero word of length `len`.
    ///
    /// # Panics
    ///
    /// Panics if `len` is zero or exceeds [`MAX_LEN`].
    pub fn zero(len: u32) -> Self {
        assert!(
            (1..=MAX_LEN).contains(&len),
            "codeword length {len} outside 1..={MAX_LEN}"
        );
        Codeword {
            len,
            bits: [0; WORDS],
        }
    }

    /// The word of length `len` whose support is exactly `support`
    /// (0-based coordinates, duplicates allowed and ignored).
    ///
    /// # Panics
    ///
    /// Panics if `len` is out of range or any coordinate is `>= len`.
    pub fn from_support(len: u32, support: &[u32]) -> Self {
        let mut w = Codeword::zero(len);
        for &i in support {
            w.set(i, true);
        }
        w
    }

    /// Length in bits.
    pub fn len(&self) -> u32 {
        self.len
    }

    /// True when the word has length zero — never, by construction, so this
    /// exists only to satisfy the usual `len`/`is_empty` pairing.
    pub fn is_empty(&self) -> bool {
        false
    }

    /// The bit at coordinate `i`.
    ///
    /// # Panics
    ///
    /// Panics if `i >= len`.
    pub fn get(&self, i: u32) -> bool {
        assert!(
            i < self.len,
            "coordinate {i} out of range for length {}",
            self.len
        );
        (self.bits[(i / WORD_BITS) as usize] >> (i % WORD_BITS)) & 1 == 1
    }

    pub(crate) fn set(&mut self, i: u32, value: bool) {
        assert!(
            i < self.len,
            "coordinate {i} out of range for length {}",
            self.len
        );
        let mask = 1u64 << (i % WORD_BITS);
        if value {
            self.bits[(i / WORD_BITS) as usize] |= mask;
        } else {
            self.bits[(i / WORD_BITS) as usize] &= !mask;
        }
    }

    /// Hamming weight (number of ones).
    pub fn weight(&self) -> u32 {
        self.bits.iter().map(|w| w.count_ones()).sum()
    }

    /// Hamming distance to `other`.
    ///
    /// # Panics
    ///
    /// Panics if the lengths differ.
    pub fn distance(&self, other: &Self) -> u32 {
        assert_eq!(
            self.len, other.len,
            "distance between words of different lengths"
        );
        (self.bits[0] ^ other.bits[0]).count_ones() + (self.bits[1] ^ other.bits[1]).count_ones()
    }

    /// Coordinatewise XOR (translation by `other`).
    ///
    /// # Panics
    ///
    /// Panics if the lengths differ.
    pub fn xor(&self, other: &Self) -> Self {
        assert_eq!(
            self.len, other.len,
            "xor between words of different lengths"
        );
        Codeword {
            len: self.len,
            bits: [self.bits[0] ^ other.bits[0], self.bits[1] ^ other.bits[1]],
        }
    }

    /// Number of coordinates where both words are one. For characteristic
    /// vectors of sets this is the intersection size, and it ties weight to
    /// distance by `d(x, y) = wt(x) + wt(y) - 2 * common(x, y)`.
    ///
    /// # Panics
    ///
    /// Panics if the lengths differ.
    pub fn common_ones(&self, other: &Self) -> u32 {
        assert_eq!(
            self.len, other.len,
            "intersection between words of different lengths"
        );
        (self.bits[0] & other.bits[0]).count_ones() + (self.bits[1] & other.bits[1]).count_ones()
    }

    /// The 0-based coordinates carrying a one, ascending.
    pub fn support(&self) -> Vec<u32> {
        let mut out = Vec::with_capacity(self.weight() as usize);
        for (wi, &w) in self.bits.iter().enumerate() {
            let mut rest = w;
            while rest != 0 {
                out.push(wi as u32 * WORD_BITS + rest.trailing_zeros());
                rest &= rest - 1;
            }
        }
        out
    }
}

impl Ord for Codeword {
    /// Bitstring-lexicographic order: coordinate 0 is the most significant
    /// position. Words of different lengths order by length first, so that
    /// mixed collections still sort totally.
    fn cmp(&self, other: &Self) -> Ordering {
        self.len.cmp(&other.len).then_with(|| {
            for i in 0..WORDS {
                // Reversing puts coordinate 0 in the numeric high bit.
                let (a, b) = (self.bits[i].reverse_bits(), other.bits[i].reverse_bits());
                if a != b {
                    return a.cmp(&b);
                }
            }
            Ordering::Equal
        })
    }
}

impl PartialOrd for Codeword {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl FromStr for Codeword {
    type Err = WordParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let len = s.len();
        if len == 0 || len > MAX_LEN as usize {
            return Err(WordParseError::BadLength { len });
        }
        let mut w = Codeword::zero(len as u32);
        for (i, c) in s.bytes().enumerate() {
            match c {
                b'0' => {}
                b'1' => w.set(i as u32, true),
                _ => return Err(WordParseError::BadChar { pos: i }),
            }
        }
        Ok(w)
    }
}

impl fmt::Display for Codeword {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.len {
            f.write_str(if self.get(i) { "1" } else { "0" })?;
        }
        Ok(())
    }
}

impl fmt::Debug for Codeword {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Codeword(\"{self}\")")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;
    use alloc::vec;

    fn w(s: &str) -> Codeword {
        s.parse().expect("test word parses")
    }

    #[test]
    fn parse_display_round_trip() {
        for s in ["0", "1", "0101", "1100", "0000001"] {
            assert_eq!(w(s).to_string(), s);
        }
        let long: alloc::string::String = core::iter::repeat_n('1', 128).collect();
        assert_eq!(w(&long).to_string(), long);
        assert_eq!(w(&long).weight(), 128);
    }

    #[test]
    fn parse_rejects_bad_input() {
        assert_eq!(
            "".parse::<Codeword>(),
            Err(WordParseError::BadLength { len: 0 })
        );
        let too_long: alloc::string::String = core::iter::repeat_n('0', 129).collect();
        assert_eq!(
            too_long.parse::<Codeword>(),
            Err(WordParseError::BadLength { len: 129 })
        );
        assert_eq!(
            "01x1".parse::<Codeword>(),
            Err(WordParseError::BadChar { pos: 2 })
        );
        assert_eq!(
            "01 1".parse::<Codeword>(),
            Err(WordParseError::BadChar { pos: 2 })
        );
    }

    #[test]
    fn weight_distance_intersection_agree_bitwise() {
        let a = w("110100");
        let b = w("011100");
        assert_eq!(a.weight(), 3);
        assert_eq!(b.weight(), 3);
        assert_eq!(a.distance(&b), 2);
        assert_eq!(a.common_ones(&b), 2);
        // d(x, y) = wt(x) + wt(y) - 2|x & y|
        assert_eq!(
            a.distance(&b),
            a.weight() + b.weight() - 2 * a.common_ones(&b)
        );
        assert_eq!(a.xor(&b), w("101000"));
        assert_eq!(a.distance(&a), 0);
    }

    #[test]
    fn distance_straddles_the_word_boundary() {
        // Ones on both sides of coordinate 64 exercise the second word.
        let mut a = Codeword::zero(100);
        let mut b = Codeword::zero(100);
        a.set(0, true);
        a.set(63, true);
        a.set(64, true);
        a.set(99, true);
        b.set(63, true);
        b.set(65, true);
        assert_eq!(a.weight(), 4);
        assert_eq!(a.distance(&b), 4);
        assert_eq!(a.common_ones(&b), 1);
        assert_eq!(a.support(), vec![0, 63, 64, 99]);
    }

    #[test]
    #[should_panic(expected = "different lengths")]
    fn distance_panics_on_length_mismatch() {
        let _ = w("01").distance(&w("011"));
    }

    #[test]
    #[should_panic(expected = "out of range")]
    fn get_panics_out_of_range() {
        let _ = w("01").get(2);
    }

    #[test]
    fn order_is_bitstring_lexicographic() {
        let mut words = [w("1100"), w("0011"), w("0101"), w("0000"), w("1111")];
        words.sort();
        let shown: Vec<_> = words.iter().map(|x| x.to_string()).collect();
        assert_eq!(shown, vec!["0000", "0011", "0101", "1100", "1111"]);
    }

    #[test]
    fn order_distinguishes_high_coordinates() {
        // Both words agree on the first 64 coordinates; the order must be
        // decided by the second storage word, still reading left to right.
        let mut a = Codeword::zero(70);
        let mut b = Codeword::zero(70);
        a.set(69, true); // 0^69 1
        b.set(65, true); // 0^65 1 0^4
        assert!(
            a < b,
            "the word with its first one at coordinate 65 sorts above"
        );
    }

    #[test]
    fn from_support_matches_parse() {
        assert_eq!(Codeword::from_support(6, &[0, 1, 3]), w("110100"));
        assert_eq!(Codeword::from_support(6, &[]), w("000000"));
        assert_eq!(w("110100").support(), vec![0, 1, 3]);
    }
}
