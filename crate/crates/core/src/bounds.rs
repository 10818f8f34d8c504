//! Upper and lower bounds on two-distance code sizes, and the length
//! threshold past which the packing lower bound beats every structural
//! case bound.
//!
//! All arithmetic here is exact — integers and [`Rat`] rationals — because
//! the interesting comparisons happen near crossover points (e.g. around
//! n = 1685 for d = 6) where a floating-point slip could move a threshold
//! by one.
//!
//! The case bounds concern a hypothetical optimal code, normalized to
//! contain the zero word, whose largest weight falls in one of a few
//! narrow ranges; each case caps the code size either by a constant or by
//! an affine function of the length. [`threshold_estimate`] then finds the
//! smallest length from which the quadratic packing lower bound
//! (`packings::polynomial_lower_bound`) exceeds every case bound forever,
//! which is exactly the argument that optimal codes are constant-weight
//! translates from that length on.

use alloc::vec::Vec;
use core::fmt;

use crate::combin::binomial;
use crate::packings::{greedy_packing, packing_number_formula, polynomial_lower_bound};
use crate::params::TwoDistanceParams;
use crate::Rat;

/// Rejected inputs to bound computations.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BoundsError {
    /// The quadratic upper bound needs `n >= 6`.
    LengthTooSmall { n: u32, min: u32 },
    /// Case and threshold machinery exists only for distances 4 and 6.
    UnsupportedDistance { d: u32 },
}

impl fmt::Display for BoundsError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BoundsError::LengthTooSmall { n, min } => {
                write!(f, "length {n} is below the smallest supported length {min}")
            }
            BoundsError::UnsupportedDistance { d } => {
                write!(
                    f,
                    "no closed-form case bounds for distance {d} (supported: 4, 6)"
                )
            }
        }
    }
}

impl core::error::Error for BoundsError {}

/// Quadratic upper bound `1 + C(n,2)`, valid for every distance pair once
/// `n >= 6`.
pub fn barg_upper(n: u32) -> Result<u64, BoundsError> {
    if n < 6 {
        return Err(BoundsError::LengthTooSmall { n, min: 6 });
    }
    Ok(1 + u64::try_from(binomial(u64::from(n), 2)).expect("C(n,2) fits in u64"))
}

/// Shifted quadratic upper bound `C(n+2,2)`, valid for every length and
/// distance pair; weaker than [`barg_upper`] whenever that one applies.
pub fn lrv_upper(n: u32) -> u64 {
    u64::try_from(binomial(u64::from(n) + 2, 2)).expect("C(n+2,2) fits in u64")
}

/// Linear upper bound, when one applies: `n + 1` for `d2 > 2*d1`;
/// otherwise, when `d2 - d1` is odd, `n + 1` for even `d1` and `n + 2` for
/// odd `d1`. `None` when neither shape matches.
pub fn linear_upper(p: &TwoDistanceParams) -> Option<u64> {
    let n = u64::from(p.n());
    if p.d2() > 2 * p.d1() {
        Some(n + 1)
    } else if p.delta() % 2 == 1 {
        Some(if p.d1().is_multiple_of(2) {
            n + 1
        } else {
            n + 2
        })
    } else {
        None
    }
}

/// Whether codes with this distance pair can exist at all: impossible
/// exactly when `d1` is odd and the gap `d2 - d1` is even (all pairwise
/// distances of the translate through zero would need odd weights, but
/// odd-weight words at even mutual gaps force an even distance somewhere).
pub fn parity_feasible(p: &TwoDistanceParams) -> bool {
    !(p.d1() % 2 == 1 && p.delta().is_multiple_of(2))
}

/// Which weight range a case bound pins down.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CaseKind {
    /// Largest weight at its ceiling `3d/2 + 3`.
    MaxWeightTop,
    /// Largest weight at `3d/2 + 3 - 2i` for `1 <= i <= d/2 - 1`.
    Intermediate(u32),
    /// Largest weight at the floor `d/2 + 3`.
    NearMinimum,
}

/// One case's cap on the size of an optimal code, as an exact affine
/// function `slope * n + constant` of the length.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CaseBound {
    /// Which weight case this is.
    pub kind: CaseKind,
    /// The largest codeword weight the case assumes.
    pub weight: u32,
    /// Constant term of the cap.
    pub constant: Rat,
    /// Per-`n` term of the cap; zero for all but the near-minimum case.
    pub slope: Rat,
}

impl CaseBound {
    /// Evaluates the cap at length `n`.
    pub fn bound_at(&self, n: u64) -> Rat {
        self.constant + self.slope * Rat::from_integer(n as i64)
    }
}

impl fmt::Display for CaseBound {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.slope == Rat::from_integer(0) {
            write!(f, "{}", self.constant)
        } else if self.constant < Rat::from_integer(0) {
            write!(f, "{}n - {}", self.slope, -self.constant)
        } else {
            write!(f, "{}n + {}", self.slope, self.constant)
        }
    }
}

/// The complete list of case bounds for distance pair `{d, d+2}`, largest
/// assumed weight first: the top case, the intermediate cases in
/// increasing `i`, then the near-minimum case (the only one that grows
/// with `n`).
///
/// Each cap is `C(d+2, d/2+1)` times the largest number of distinct
/// supports an optimal code can put on the relevant weight band: with top
/// weight `w`, a code normalized through zero fits at most
/// `w(w-1) / ((d/2+1-i)(d/2-i))` supports in the band for the top and
/// intermediate cases, and `(d/2+3)(d/2+2)/2 + (n-d/2-3)(d/2+3)/(d/2)`
/// for the near-minimum case.
pub fn case_bounds(d: u32) -> Result<Vec<CaseBound>, BoundsError> {
    if d != 4 && d != 6 {
        return Err(BoundsError::UnsupportedDistance { d });
    }
    let half = i64::from(d / 2);
    let factor = Rat::from_integer(
        i64::try_from(binomial(u64::from(d) + 2, u64::from(d / 2) + 1)).expect("small binomial"),
    );
    let mut out = Vec::new();
    for i in 0..=(d / 2 - 1) {
        let w = 3 * half + 3 - 2 * i64::from(i);
        let cap = Rat::new(
            w * (w - 1),
            (half + 1 - i64::from(i)) * (half - i64::from(i)),
        );
        out.push(CaseBound {
            kind: if i == 0 {
                CaseKind::MaxWeightTop
            } else {
                CaseKind::Intermediate(i)
            },
            weight: u32::try_from(w).expect("positive weight"),
            constant: factor * cap,
            slope: Rat::from_integer(0),
        });
    }
    // Near minimum: w = d/2 + 3, and the support count grows with n.
    let w = half + 3;
    let fixed = Rat::new(w * (w - 1), 2) - Rat::new(w * w, half);
    let slope = Rat::new(w, half);
    out.push(CaseBound {
        kind: CaseKind::NearMinimum,
        weight: u32::try_from(w).expect("positive weight"),
        constant: factor * fixed,
        slope: factor * slope,
    });
    Ok(out)
}

/// One case bound together with the smallest length from which the
/// quadratic packing lower bound exceeds it forever.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CaseCrossover {
    /// The case in question.
    pub bound: CaseBound,
    /// Smallest `n0` with `polynomial_lower_bound(d, n) > bound_at(n)` for
    /// every `n >= n0`.
    pub crossover: u64,
}

/// Outcome of [`threshold_estimate`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ThresholdReport {
    /// The smaller distance of the pair `{d, d+2}`.
    pub d: u32,
    /// Per-case crossover lengths, in [`case_bounds`] order.
    pub cases: Vec<CaseCrossover>,
    /// Smallest length from which every case bound is beaten forever: the
    /// largest crossover.
    pub threshold: u64,
    /// How to read `threshold`: it bounds the true onset of
    /// constant-weight-translate optimality from above, it is not claimed
    /// to be that onset.
    pub label: &'static str,
}

/// Finds, for `d ∈ {4, 6}`, the smallest length from which the quadratic
/// packing lower bound exceeds every case bound for all larger lengths —
/// so from that length on, an optimal code cannot fall into any of the
/// non-constant-weight cases.
///
/// For each case the scan finds the first `n` where the difference
/// `polynomial_lower_bound - bound` is positive *and* its forward step is
/// positive; the difference is a quadratic with positive leading
/// coefficient, so its discrete steps increase and one positive step keeps
/// the difference growing forever. Everything is exact rational
/// arithmetic.
pub fn threshold_estimate(d: u32) -> Result<ThresholdReport, BoundsError> {
    let bounds = case_bounds(d)?;
    let poly = |n: u64| polynomial_lower_bound(d, n).expect("d was validated by case_bounds");
    let mut cases = Vec::new();
    let mut threshold = 0;
    for bound in bounds {
        let mut n = 3u64;
        let crossover = loop {
            assert!(n < 10_000_000, "crossover scan failed to terminate");
            let here = poly(n) - bound.bound_at(n);
            let next = poly(n + 1) - bound.bound_at(n + 1);
            if here > Rat::from_integer(0) && next > here {
                break n;
            }
            n += 1;
        };
        threshold = threshold.max(crossover);
        cases.push(CaseCrossover { bound, crossover });
    }
    Ok(ThresholdReport {
        d,
        cases,
        threshold,
        label: "upper_estimate",
    })
}

/// Where a sandwich lower bound came from.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LowerBoundSource {
    /// Closed-form packing number.
    PackingFormula,
    /// Size of a constructed greedy packing (a certificate, not a formula).
    GreedyPacking,
    /// No packing correspondence for this distance pair.
    Unavailable,
}

impl LowerBoundSource {
    /// Stable one-word tag for reports.
    pub fn label(&self) -> &'static str {
        match self {
            LowerBoundSource::PackingFormula => "packing-formula",
            LowerBoundSource::GreedyPacking => "greedy-packing",
            LowerBoundSource::Unavailable => "unavailable",
        }
    }
}

/// Which upper bound won the minimum.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum UpperBoundSource {
    /// `1 + C(n,2)`.
    Barg,
    /// `C(n+2,2)`.
    Lrv,
    /// `n + 1` or `n + 2` from [`linear_upper`].
    Linear,
}

impl UpperBoundSource {
    /// Stable one-word tag for reports.
    pub fn label(&self) -> &'static str {
        match self {
            UpperBoundSource::Barg => "barg",
            UpperBoundSource::Lrv => "lrv",
            UpperBoundSource::Linear => "linear",
        }
    }
}

/// Best known enclosure of the optimal code size for `p`, with the origin
/// of each side.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SandwichReport {
    /// The parameters the enclosure is for.
    pub params: TwoDistanceParams,
    /// Lower bound (0 when no construction applies).
    pub lower: u64,
    /// Where `lower` came from.
    pub lower_source: LowerBoundSource,
    /// Upper bound.
    pub upper: u64,
    /// Where `upper` came from.
    pub upper_source: UpperBoundSource,
}

/// Computes the sandwich for `p`: the packing number (closed form when
/// available for block sizes 2–4, otherwise a greedy certificate) below,
/// and the smallest applicable of the quadratic, shifted-quadratic, and
/// linear upper bounds above.
pub fn sandwich(p: &TwoDistanceParams) -> SandwichReport {
    let n = p.n();
    let (lower, lower_source) = if p.is_packing_shaped() {
        let k = p.d1() / 2 + 1;
        match packing_number_formula(u64::from(n), k) {
            Ok(Some(value)) => (value, LowerBoundSource::PackingFormula),
            Ok(None) | Err(_) if k <= n => (
                greedy_packing(n, k, 0).block_count() as u64,
                LowerBoundSource::GreedyPacking,
            ),
            _ => (0, LowerBoundSource::Unavailable),
        }
    } else {
        (0, LowerBoundSource::Unavailable)
    };

    let mut upper = lrv_upper(n);
    let mut upper_source = UpperBoundSource::Lrv;
    if let Ok(b) = barg_upper(n) {
        if b < upper {
            upper = b;
            upper_source = UpperBoundSource::Barg;
        }
    }
    if let Some(l) = linear_upper(p) {
        if l < upper {
            upper = l;
            upper_source = UpperBoundSource::Linear;
        }
    }

    SandwichReport {
        params: *p,
        lower,
        lower_source,
        upper,
        upper_source,
    }
}
