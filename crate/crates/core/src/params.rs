//! Parameter triple for a two-distance problem instance.

use core::fmt;

use crate::word::MAX_LEN;

/// A length `n` together with a prescribed distance pair `d1 < d2`.
///
/// The constructor enforces `1 <= d1 < d2 <= n <= 128`; everything downstream
/// can then rely on the distances being realizable in principle.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct TwoDistanceParams {
    n: u32,
    d1: u32,
    d2: u32,
}

/// Rejected parameter triples.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ParamsError {
    /// `1 <= d1 < d2 <= n` is violated.
    BadDistances { n: u32, d1: u32, d2: u32 },
    /// Length above the supported word width.
    LengthOutOfRange { n: u32 },
}

impl fmt::Display for ParamsError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ParamsError::BadDistances { n, d1, d2 } => {
                write!(f, "need 1 <= d1 < d2 <= n, got n={n} d1={d1} d2={d2}")
            }
            ParamsError::LengthOutOfRange { n } => {
                write!(f, "length {n} exceeds the supported maximum {MAX_LEN}")
            }
        }
    }
}

impl core::error::Error for ParamsError {}

impl TwoDistanceParams {
    /// Validates and builds a parameter triple.
    pub fn new(n: u32, d1: u32, d2: u32) -> Result<Self, ParamsError> {
        if n > MAX_LEN {
            return Err(ParamsError::LengthOutOfRange { n });
        }
        if d1 < 1 || d1 >= d2 || d2 > n {
            return Err(ParamsError::BadDistances { n, d1, d2 });
        }
        Ok(TwoDistanceParams { n, d1, d2 })
    }

    /// Code length.
    pub fn n(&self) -> u32 {
        self.n
    }

    /// Smaller prescribed distance.
    pub fn d1(&self) -> u32 {
        self.d1
    }

    /// Larger prescribed distance.
    pub fn d2(&self) -> u32 {
        self.d2
    }

    /// Gap `d2 - d1` between the two distances.
    pub fn delta(&self) -> u32 {
        self.d2 - self.d1
    }

    /// True when the pair has the shape `{d, d+2}` with `d` even — the shape
    /// that is equivalent to a pair-disjoint set system with blocks of size
    /// `d/2 + 1`.
    pub fn is_packing_shaped(&self) -> bool {
        self.d1.is_multiple_of(2) && self.d2 == self.d1 + 2
    }

    /// Block size `d1/2 + 1` of the equivalent set system, when
    /// [`is_packing_shaped`](Self::is_packing_shaped) holds.
    pub fn block_size(&self) -> Option<u32> {
        if self.is_packing_shaped() {
            Some(self.d1 / 2 + 1)
        } else {
            None
        }
    }
}

impl fmt::Display for TwoDistanceParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(n={}, {{{}, {}}})", self.n, self.d1, self.d2)
    }
}
