//! Pair-disjoint set systems ("2-packings") and their code equivalents.
//!
//! A packing here is a family of `k`-subsets (blocks) of `{1, ..., v}` in
//! which every pair of points lies in **at most one** block. The type itself
//! only enforces shape (block sizes, point ranges, distinctness), so invalid
//! families are representable and [`Packing::verify`] reports the first pair
//! covered twice — that is what lets the CLI diagnose a bad input file
//! instead of refusing to construct it.

use core::fmt;

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use crate::code::{Code, CodeError};
use crate::word::{Codeword, MAX_LEN};

/// A block: strictly increasing 1-based points.
pub type Block = Vec<u32>;

/// A family of `k`-element blocks over points `1..=v`, in canonical
/// (lexicographic) block order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Packing {
    v: u32,
    k: u32,
    blocks: Vec<Block>,
}

/// Shape violations caught when building a [`Packing`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PackingError {
    /// Needs `1 <= k <= v`.
    BadParams { v: u32, k: u32 },
    /// Block `index` has the wrong number of points.
    BlockSize {
        index: usize,
        found: usize,
        expected: u32,
    },
    /// Block `index` is not strictly increasing.
    UnsortedBlock { index: usize },
    /// Block `index` mentions `point` outside `1..=v`.
    PointOutOfRange { index: usize, point: u32, v: u32 },
    /// Blocks `first` and `index` are identical.
    DuplicateBlock { first: usize, index: usize },
}

impl fmt::Display for PackingError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PackingError::BadParams { v, k } => {
                write!(f, "need 1 <= k <= v, got v={v} k={k}")
            }
            PackingError::BlockSize {
                index,
                found,
                expected,
            } => {
                write!(f, "block {index} has {found} points, expected {expected}")
            }
            PackingError::UnsortedBlock { index } => {
                write!(f, "block {index} is not strictly increasing")
            }
            PackingError::PointOutOfRange { index, point, v } => {
                write!(f, "block {index} mentions point {point} outside 1..={v}")
            }
            PackingError::DuplicateBlock { first, index } => {
                write!(f, "block {index} duplicates block {first}")
            }
        }
    }
}

impl core::error::Error for PackingError {}

/// A pair of points covered by two different blocks.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PairViolation {
    /// The doubly covered pair, as `(smaller, larger)`.
    pub pair: (u32, u32),
    /// Indices (into [`Packing::blocks`]) of the two covering blocks,
    /// earlier one first.
    pub blocks: (usize, usize),
}

/// Outcome of pair-coverage verification.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct VerifyReport {
    /// True when every pair of points lies in at most one block.
    pub valid: bool,
    /// The first violation in canonical scan order, if any.
    pub first_violation: Option<PairViolation>,
}

/// Errors from reading a packing out of a constant-weight code.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FromCodeError {
    /// An empty code determines no block size.
    EmptyCode,
    /// Two words with different weights.
    NotConstantWeight { w1: u32, w2: u32 },
    /// The all-zero word would yield an empty block.
    WeightZero,
    /// The support families overlap too much to be a packing.
    PairCoveredTwice { pair: (u32, u32) },
}

impl fmt::Display for FromCodeError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FromCodeError::EmptyCode => write!(f, "empty code has no block size"),
            FromCodeError::NotConstantWeight { w1, w2 } => {
                write!(f, "code mixes weights {w1} and {w2}")
            }
            FromCodeError::WeightZero => write!(f, "weight-zero word gives an empty block"),
            FromCodeError::PairCoveredTwice { pair } => {
                write!(f, "pair {{{}, {}}} covered by two supports", pair.0, pair.1)
            }
        }
    }
}

impl core::error::Error for FromCodeError {}

impl Packing {
    /// Builds a packing of `k`-blocks over `1..=v`, sorting the blocks into
    /// canonical order and checking shape only (see the module notes).
    pub fn new(
        v: u32,
        k: u32,
        blocks: impl IntoIterator<Item = Block>,
    ) -> Result<Self, PackingError> {
        if k == 0 || k > v {
            return Err(PackingError::BadParams { v, k });
        }
        let blocks: Vec<Block> = blocks.into_iter().collect();
        for (index, b) in blocks.iter().enumerate() {
            if b.len() != k as usize {
                return Err(PackingError::BlockSize {
                    index,
                    found: b.len(),
                    expected: k,
                });
            }
            if b.windows(2).any(|p| p[0] >= p[1]) {
                return Err(PackingError::UnsortedBlock { index });
            }
            for &p in b {
                if p < 1 || p > v {
                    return Err(PackingError::PointOutOfRange { index, point: p, v });
                }
            }
        }
        let mut order: Vec<usize> = (0..blocks.len()).collect();
        order.sort_by(|&a, &b| blocks[a].cmp(&blocks[b]));
        for w in order.windows(2) {
            if blocks[w[0]] == blocks[w[1]] {
                let (a, b) = (w[0].min(w[1]), w[0].max(w[1]));
                return Err(PackingError::DuplicateBlock { first: a, index: b });
            }
        }
        let blocks: Vec<Block> = {
            let mut sorted = blocks;
            sorted.sort_unstable();
            sorted
        };
        Ok(Packing { v, k, blocks })
    }

    /// Number of points.
    pub fn v(&self) -> u32 {
        self.v
    }

    /// Block size.
    pub fn k(&self) -> u32 {
        self.k
    }

    /// The blocks in canonical order.
    pub fn blocks(&self) -> &[Block] {
        &self.blocks
    }

    /// Number of blocks.
    pub fn block_count(&self) -> usize {
        self.blocks.len()
    }

    /// Checks that every pair of points lies in at most one block, reporting
    /// the first doubly covered pair (in block order, then pair order within
    /// a block) when one exists.
    pub fn verify(&self) -> VerifyReport {
        let mut seen: BTreeMap<(u32, u32), usize> = BTreeMap::new();
        for (bi, b) in self.blocks.iter().enumerate() {
            for i in 0..b.len() {
                for j in i + 1..b.len() {
                    let pair = (b[i], b[j]);
                    if let Some(&first) = seen.get(&pair) {
                        return VerifyReport {
                            valid: false,
                            first_violation: Some(PairViolation {
                                pair,
                                blocks: (first, bi),
                            }),
                        };
                    }
                    seen.insert(pair, bi);
                }
            }
        }
        VerifyReport {
            valid: true,
            first_violation: None,
        }
    }

    /// The code of characteristic vectors: each block becomes a word of
    /// length `v` and weight `k` (point `p` sets coordinate `p - 1`).
    ///
    /// For a *valid* packing, distinct blocks share at most one point, so all
    /// pairwise distances land in `{2k - 2, 2k}`.
    pub fn to_code(&self) -> Result<Code, CodeError> {
        if self.v > MAX_LEN {
            return Err(CodeError::LengthOutOfRange { len: self.v });
        }
        Code::new(
            self.v,
            self.blocks.iter().map(|b| {
                let coords: Vec<u32> = b.iter().map(|&p| p - 1).collect();
                Codeword::from_support(self.v, &coords)
            }),
        )
    }
}

/// Reads a packing back out of a constant-weight code: coordinate `i`
/// becomes point `i + 1` and each support becomes a block. Fails if weights
/// are not constant or some pair of points is covered twice.
pub fn packing_from_code(code: &Code) -> Result<Packing, FromCodeError> {
    let mut weights = code.words().iter().map(|w| w.weight());
    let Some(k) = weights.next() else {
        return Err(FromCodeError::EmptyCode);
    };
    if let Some(other) = weights.find(|&w| w != k) {
        // Report the two clashing weights in word order.
        return Err(FromCodeError::NotConstantWeight { w1: k, w2: other });
    }
    if k == 0 {
        return Err(FromCodeError::WeightZero);
    }
    let blocks: Vec<Block> = code
        .words()
        .iter()
        .map(|w| w.support().iter().map(|&c| c + 1).collect())
        .collect();
    let packing = Packing::new(code.len(), k, blocks)
        .expect("supports of distinct equal-weight words form distinct well-shaped blocks");
    let report = packing.verify();
    if let Some(violation) = report.first_violation {
        return Err(FromCodeError::PairCoveredTwice {
            pair: violation.pair,
        });
    }
    Ok(packing)
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn packing(v: u32, k: u32, blocks: &[&[u32]]) -> Packing {
        Packing::new(v, k, blocks.iter().map(|b| b.to_vec())).unwrap()
    }

    /// The 7-point, 7-block triple system: every pair exactly once.
    fn seven_point_triples() -> Packing {
        packing(
            7,
            3,
            &[
                &[1, 2, 3],
                &[1, 4, 5],
                &[1, 6, 7],
                &[2, 4, 6],
                &[2, 5, 7],
                &[3, 4, 7],
                &[3, 5, 6],
            ],
        )
    }

    #[test]
    fn construction_rejects_bad_shapes() {
        assert_eq!(
            Packing::new(4, 5, vec![]),
            Err(PackingError::BadParams { v: 4, k: 5 })
        );
        assert_eq!(
            Packing::new(4, 2, vec![vec![1, 2, 3]]),
            Err(PackingError::BlockSize {
                index: 0,
                found: 3,
                expected: 2
            })
        );
        assert_eq!(
            Packing::new(4, 2, vec![vec![2, 1]]),
            Err(PackingError::UnsortedBlock { index: 0 })
        );
        assert_eq!(
            Packing::new(4, 2, vec![vec![1, 1]]),
            Err(PackingError::UnsortedBlock { index: 0 })
        );
        assert_eq!(
            Packing::new(4, 2, vec![vec![1, 5]]),
            Err(PackingError::PointOutOfRange {
                index: 0,
                point: 5,
                v: 4
            })
        );
        assert_eq!(
            Packing::new(4, 2, vec![vec![0, 2]]),
            Err(PackingError::PointOutOfRange {
                index: 0,
                point: 0,
                v: 4
            })
        );
        assert_eq!(
            Packing::new(4, 2, vec![vec![1, 2], vec![3, 4], vec![1, 2]]),
            Err(PackingError::DuplicateBlock { first: 0, index: 2 })
        );
    }

    #[test]
    fn construction_sorts_blocks_canonically() {
        let p = packing(5, 2, &[&[3, 4], &[1, 5], &[1, 2]]);
        assert_eq!(p.blocks(), &[vec![1, 2], vec![1, 5], vec![3, 4]]);
    }

    #[test]
    fn verify_accepts_the_seven_point_system() {
        let p = seven_point_triples();
        let report = p.verify();
        assert!(report.valid);
        assert_eq!(report.first_violation, None);
    }

    #[test]
    fn verify_reports_first_doubly_covered_pair() {
        // Blocks sort to [1,2,3], [1,2,4]; the repeated pair is {1,2}.
        let p = packing(4, 3, &[&[1, 2, 4], &[1, 2, 3]]);
        let report = p.verify();
        assert!(!report.valid);
        assert_eq!(
            report.first_violation,
            Some(PairViolation {
                pair: (1, 2),
                blocks: (0, 1)
            })
        );
    }

    #[test]
    fn code_of_seven_point_system_is_equidistant() {
        let c = seven_point_triples().to_code().unwrap();
        assert_eq!(c.size(), 7);
        // Every pair of blocks meets in exactly one point here, so every
        // distance is 2k - 2 = 4: brute force over all pairs confirms.
        let ds = c.distance_set();
        assert_eq!(ds.into_iter().collect::<Vec<_>>(), vec![4]);
        assert_eq!(c.weight_distribution().get(&3), Some(&7));
    }

    #[test]
    fn code_distances_stay_in_the_two_value_band() {
        // A packing with both intersecting and disjoint block pairs.
        let p = packing(6, 3, &[&[1, 2, 3], &[1, 4, 5], &[2, 4, 6]]);
        assert!(p.verify().valid);
        let ds = p.to_code().unwrap().distance_set();
        assert_eq!(ds.into_iter().collect::<Vec<_>>(), vec![4]);
        let q = packing(6, 3, &[&[1, 2, 3], &[4, 5, 6]]);
        let ds = q.to_code().unwrap().distance_set();
        assert_eq!(ds.into_iter().collect::<Vec<_>>(), vec![6]);
    }

    #[test]
    fn round_trip_code_packing_code() {
        let p = seven_point_triples();
        let c = p.to_code().unwrap();
        let back = packing_from_code(&c).unwrap();
        assert_eq!(back, p, "canonical order makes the round trip exact");
    }

    #[test]
    fn packing_from_code_rejects_bad_codes() {
        let mixed = Code::new(4, vec!["1100".parse().unwrap(), "1110".parse().unwrap()]).unwrap();
        assert_eq!(
            packing_from_code(&mixed),
            Err(FromCodeError::NotConstantWeight { w1: 2, w2: 3 })
        );
        let empty = Code::new(4, vec![]).unwrap();
        assert_eq!(packing_from_code(&empty), Err(FromCodeError::EmptyCode));
        let zero = Code::new(4, vec!["0000".parse().unwrap()]).unwrap();
        assert_eq!(packing_from_code(&zero), Err(FromCodeError::WeightZero));
        let overlap = Code::new(4, vec!["1110".parse().unwrap(), "1101".parse().unwrap()]).unwrap();
        assert_eq!(
            packing_from_code(&overlap),
            Err(FromCodeError::PairCoveredTwice { pair: (1, 2) })
        );
    }

    #[test]
    fn to_code_needs_representable_length() {
        let blocks: Vec<Block> = vec![(1..=3).collect()];
        let p = Packing::new(200, 3, blocks).unwrap();
        assert_eq!(p.to_code(), Err(CodeError::LengthOutOfRange { len: 200 }));
    }
}
