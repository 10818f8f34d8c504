//! Binary codes whose nonzero distances form a pair `{d, d+2}`, and the
//! pair-disjoint set systems ("2-packings") they are equivalent to.
//!
//! A binary code in which every two codewords are at distance `d` or `d + 2`
//! (with `d` even and the zero word present) is, up to translation, the same
//! object as a family of `(d/2 + 1)`-subsets of a point set in which every
//! pair of points lies in at most one member. This crate provides:
//!
//! * [`word`] / [`code`] — packed 128-bit codewords, codes as canonically
//!   ordered word sets, distance statistics, translations, and the
//!   constant-weight translator search.
//! * [`packing`] — the set-system side: block validation, pair-coverage
//!   verification, and the two conversions between codes and packings.
//! * [`packings`] — closed-form packing numbers for block sizes 3 and 4,
//!   greedy and algebraic (triple-system) constructions, transversal-set
//!   selection, the two-round extension procedure, and the step inequality
//!   used to propagate optimality from one length to the next.
//! * [`clique`] — an exact branch-and-bound maximum-clique solver over bitset
//!   adjacency matrices, with greedy-coloring bounds and pluggable search
//!   budgets.
//! * [`search`] — exact values of the largest two-distance code via clique
//!   search, an independent packing-number oracle, midpoint sphere-counting
//!   identities, and combined optimality reports.
//! * [`bounds`] — counting upper bounds, feasibility tests, per-weight-class
//!   caps, and the exact integer-arithmetic threshold beyond which the
//!   quadratic lower bound dominates every cap.
//!
//! The crate is `no_std` (it requires `alloc`); anything that needs wall
//! clocks or files lives in the companion CLI crate. All randomized
//! procedures take explicit seeds and are deterministic per seed.

#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod bounds;
pub mod clique;
pub mod code;
pub mod combin;
pub mod packing;
pub mod packings;
pub mod params;
pub mod search;
pub mod word;

pub use code::{Code, CodeError, TwoDistanceClass};
pub use packing::{Packing, PackingError, VerifyReport};
pub use params::TwoDistanceParams;
pub use word::Codeword;

/// Exact rational numbers used by the bound computations.
pub type Rat = num_rational::Ratio<i64>;
