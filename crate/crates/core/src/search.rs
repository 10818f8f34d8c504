//! Exact optimal code sizes and packing numbers by clique search, plus the
//! midpoint-counting analysis behind the constant-weight structure of
//! optimal codes.
//!
//! A code with both distances in `{d1, d2}` can always be translated to
//! contain the zero word, and then every other word has weight `d1` or
//! `d2`. So the optimal size is `1 +` the clique number of the graph on
//! all words of weight `d1` or `d2`, with edges between words at distance
//! `d1` or `d2` — built by [`build_a2_graph`] and solved exactly by the
//! `clique` module. [`exact_a2`] adds the subtlety that the optimum should
//! *realize* both distances, not merely avoid others: when the
//! unconstrained optimum is equidistant it re-searches with a forced
//! cross-distance pair before conceding that every optimum is degenerate.
//!
//! [`packing_number_oracle`] plays the same game on k-subsets of a point
//! set (edges between subsets sharing at most one point); it is the
//! independent check that the closed-form packing numbers are right.
//!
//! [`midpoint_analysis`] verifies the counting identity behind the
//! constant-weight reduction: for the reference pair `x0 = 0` and `x1 =
//! 1^(d+2) 0^(n-d-2)`, every word of the surrounding weight classes sees a
//! constant number of "midpoints" (words at distance `d/2+1` from both
//! reference words), and the constant depends only on the class.

use alloc::vec::Vec;
use core::fmt;

use crate::clique::{max_clique_containing, max_clique_with, BudgetCheck, CompatGraph};
use crate::code::Code;
use crate::combin::{binomial, for_each_combination};
use crate::packing::Packing;
use crate::params::TwoDistanceParams;
use crate::word::Codeword;

/// Caps on search problem sizes.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SearchLimits {
    /// Largest number of graph vertices (codewords or blocks) a search may
    /// materialize.
    pub max_vertices: usize,
}

impl Default for SearchLimits {
    fn default() -> Self {
        SearchLimits {
            max_vertices: 50_000,
        }
    }
}

/// Rejected search requests.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SearchError {
    /// The graph would have more vertices than the configured limit.
    TooManyVertices { vertices: u128, limit: usize },
    /// Block size out of range for a packing search.
    BadBlockSize { v: u32, k: u32 },
    /// The midpoint analysis needs room for all weight classes.
    LengthTooShort { n: u32, min: u32 },
    /// The midpoint analysis and optimality report need the `{d, d+2}`
    /// shape with even `d`.
    NotPackingShaped { d1: u32, d2: u32 },
}

impl fmt::Display for SearchError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SearchError::TooManyVertices { vertices, limit } => {
                write!(
                    f,
                    "graph would have {vertices} vertices, over the limit {limit}"
                )
            }
            SearchError::BadBlockSize { v, k } => {
                write!(f, "block size {k} is not usable on {v} points")
            }
            SearchError::LengthTooShort { n, min } => {
                write!(f, "length {n} is too short; need at least {min}")
            }
            SearchError::NotPackingShaped { d1, d2 } => {
                write!(
                    f,
                    "distance pair {{{d1}, {d2}}} is not of the shape {{d, d+2}} with even d"
                )
            }
        }
    }
}

impl core::error::Error for SearchError {}

/// The compatibility graph of all candidate nonzero codewords for `p`,
/// with its vertex labels.
#[derive(Clone, Debug)]
pub struct A2Graph {
    /// The parameters the graph was built for.
    pub params: TwoDistanceParams,
    /// Vertex labels: all words of weight `d1` or `d2`, in sorted order.
    pub words: Vec<Codeword>,
    /// Adjacency: two words are compatible when their distance is `d1` or
    /// `d2`.
    pub graph: CompatGraph,
}

/// Builds the search graph for `p`: vertices are all words of weight `d1`
/// or `d2` (the zero word is fixed implicitly and is compatible with every
/// vertex), edges join words at distance `d1` or `d2`.
pub fn build_a2_graph(
    p: &TwoDistanceParams,
    limits: &SearchLimits,
) -> Result<A2Graph, SearchError> {
    let n = p.n();
    let vertices =
        binomial(u64::from(n), u64::from(p.d1())) + binomial(u64::from(n), u64::from(p.d2()));
    if vertices > limits.max_vertices as u128 {
        return Err(SearchError::TooManyVertices {
            vertices,
            limit: limits.max_vertices,
        });
    }

    let mut words = Vec::with_capacity(vertices as usize);
    for w in [p.d1(), p.d2()] {
        for_each_combination(n, w, |support| {
            words.push(Codeword::from_support(n, support));
        });
    }
    words.sort_unstable();

    let (d1, d2) = (p.d1(), p.d2());
    let graph = CompatGraph::from_fn(words.len(), |u, v| {
        let dist = words[u].distance(&words[v]);
        dist == d1 || dist == d2
    });
    Ok(A2Graph {
        params: *p,
        words,
        graph,
    })
}

/// Outcome of an exact code-size search.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchResult {
    /// Size of the best code found (zero word included). Equals the
    /// optimal size when `exact`.
    pub value: u32,
    /// The best code found, zero word included.
    pub certificate: Code,
    /// Whether the certificate's distance set is exactly `{d1, d2}`
    /// rather than a single one of them.
    pub both_distances_realized: bool,
    /// Total search-tree nodes over all searches run.
    pub nodes_explored: u64,
    /// `false` when a budget cut some search short, in which case `value`
    /// is only a lower bound.
    pub exact: bool,
}

/// Computes the largest size of a code of length `n` with all pairwise
/// distances in `{d1, d2}` — exactly, by maximum-clique search over
/// [`build_a2_graph`] with the zero word fixed.
///
/// With `require_both`, the certificate must realize *both* distances
/// whenever some optimal code does: if the unconstrained optimum comes
/// back equidistant, the search re-runs once per cross-distance vertex
/// pair (pairs `{u, v}` whose weights and mutual distance already cover
/// both `d1` and `d2`), reusing the optimum as a stopping bound, until one
/// matches the optimal size or all pairs are exhausted. Any code realizing
/// both distances contains such a pair, so exhaustion proves every optimum
/// is equidistant, and the equidistant certificate is returned with
/// `both_distances_realized = false`.
///
/// The budget spans all searches run; if it runs out the best code found
/// so far is returned with `exact = false`.
pub fn exact_a2<B: BudgetCheck>(
    p: &TwoDistanceParams,
    require_both: bool,
    limits: &SearchLimits,
    budget: &mut B,
) -> Result<SearchResult, SearchError> {
    let built = build_a2_graph(p, limits)?;
    let base = max_clique_with(&built.graph, None, budget);
    let mut nodes = base.nodes_explored;
    let mut exact = base.exact;
    let mut certificate = certificate_code(&built, &base.members);
    let mut both = realizes_both(&certificate, p);

    if require_both && !both && exact && base.size >= 2 {
        let covers_both = |u: usize, v: usize| {
            let mut seen1 = false;
            let mut seen2 = false;
            for d in [
                built.words[u].weight(),
                built.words[v].weight(),
                built.words[u].distance(&built.words[v]),
            ] {
                seen1 |= d == p.d1();
                seen2 |= d == p.d2();
            }
            seen1 && seen2
        };
        'pairs: for u in 0..built.words.len() {
            for v in u + 1..built.words.len() {
                if !built.graph.has_edge(u, v) || !covers_both(u, v) {
                    continue;
                }
                let Some(forced) =
                    max_clique_containing(&built.graph, &[u, v], Some(base.size), budget)
                else {
                    continue;
                };
                nodes += forced.nodes_explored;
                if !forced.exact {
                    exact = false;
                    break 'pairs;
                }
                if forced.size == base.size {
                    certificate = certificate_code(&built, &forced.members);
                    both = realizes_both(&certificate, p);
                    debug_assert!(both);
                    break 'pairs;
                }
            }
        }
    }

    let value = base.size + 1;
    assert_eq!(certificate.size(), value as usize);
    assert!(certificate
        .distance_set()
        .iter()
        .all(|&d| d == p.d1() || d == p.d2()));
    Ok(SearchResult {
        value,
        certificate,
        both_distances_realized: both,
        nodes_explored: nodes,
        exact,
    })
}

fn certificate_code(built: &A2Graph, members: &[usize]) -> Code {
    let words = members
        .iter()
        .map(|&i| built.words[i])
        .chain([Codeword::zero(built.params.n())]);
    Code::new(built.params.n(), words).expect("clique members are distinct nonzero words")
}

fn realizes_both(code: &Code, p: &TwoDistanceParams) -> bool {
    let dists = code.distance_set();
    dists.contains(&p.d1()) && dists.contains(&p.d2())
}

/// Outcome of an exact packing-number search.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PackingSearchResult {
    /// Number of blocks in the best packing found. Equals the packing
    /// number when `exact`.
    pub value: u64,
    /// The best packing found.
    pub certificate: Packing,
    /// Search-tree nodes explored.
    pub nodes_explored: u64,
    /// `false` when the budget cut the search short.
    pub exact: bool,
}

/// Computes the packing number — the most `k`-subsets of `{1..v}` with
/// every pair of points in at most one subset — exactly, as a maximum
/// clique over all `C(v,k)` subsets with edges between subsets sharing at
/// most one point.
///
/// This is the independent oracle for the closed-form packing numbers: it
/// never consults them. It does use two elementary counting caps as
/// stopping bounds: the pair cap `C(v,2)/C(k,2)` and the degree cap
/// `⌊v/k · ⌊(v-1)/(k-1)⌋⌋`, both valid for every packing.
pub fn packing_number_oracle<B: BudgetCheck>(
    v: u32,
    k: u32,
    limits: &SearchLimits,
    budget: &mut B,
) -> Result<PackingSearchResult, SearchError> {
    if k < 2 || k > v {
        return Err(SearchError::BadBlockSize { v, k });
    }
    let vertices = binomial(u64::from(v), u64::from(k));
    if vertices > limits.max_vertices as u128 {
        return Err(SearchError::TooManyVertices {
            vertices,
            limit: limits.max_vertices,
        });
    }

    let mut blocks: Vec<Vec<u32>> = Vec::with_capacity(vertices as usize);
    for_each_combination(v, k, |support| {
        blocks.push(support.iter().map(|&x| x + 1).collect());
    });

    let share_at_most_one = |a: &[u32], b: &[u32]| {
        let mut shared = 0;
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match a[i].cmp(&b[j]) {
                core::cmp::Ordering::Less => i += 1,
                core::cmp::Ordering::Greater => j += 1,
                core::cmp::Ordering::Equal => {
                    shared += 1;
                    if shared > 1 {
                        return false;
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        true
    };
    let graph = CompatGraph::from_fn(blocks.len(), |a, b| {
        share_at_most_one(&blocks[a], &blocks[b])
    });

    let pair_cap = binomial(u64::from(v), 2) / binomial(u64::from(k), 2);
    let degree_cap = (u128::from(v) * u128::from((v - 1) / (k - 1))) / u128::from(k);
    let known_upper = u32::try_from(pair_cap.min(degree_cap)).expect("cap fits in u32");

    let out = max_clique_with(&graph, Some(known_upper), budget);
    let chosen: Vec<Vec<u32>> = out.members.iter().map(|&i| blocks[i].clone()).collect();
    let certificate = Packing::new(v, k, chosen).expect("clique members are valid blocks");
    assert!(
        certificate.verify().valid,
        "internal error: oracle certificate is not a packing"
    );
    Ok(PackingSearchResult {
        value: u64::from(out.size),
        certificate,
        nodes_explored: out.nodes_explored,
        exact: out.exact,
    })
}

/// The six word classes of the midpoint count, relative to the reference
/// pair `x0 = 0` and `x1 = 1^(d+2) 0^(n-d-2)`. "Heavy" words have weight
/// `d + 2`, "light" ones weight `d`; "far" words are at distance `d + 2`
/// from `x1`, "near" ones at distance `d`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MidpointClass {
    /// Weight `d+2`, distance `d+2` from `x1`.
    HeavyFar,
    /// Weight `d+2`, distance `d` from `x1`.
    HeavyNear,
    /// Weight `d`, distance `d+2` from `x1`.
    LightFar,
    /// Weight `d`, distance `d` from `x1`.
    LightNear,
    /// The zero word `x0` itself.
    Origin,
    /// The reference word `x1` itself.
    Reference,
}

impl MidpointClass {
    /// Stable one-word tag for reports.
    pub fn label(&self) -> &'static str {
        match self {
            MidpointClass::HeavyFar => "heavy-far",
            MidpointClass::HeavyNear => "heavy-near",
            MidpointClass::LightFar => "light-far",
            MidpointClass::LightNear => "light-near",
            MidpointClass::Origin => "origin",
            MidpointClass::Reference => "reference",
        }
    }
}

/// Midpoint statistics of one word class.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ClassCount {
    /// Which class.
    pub class: MidpointClass,
    /// Number of words in the class at this `(d, n)`.
    pub members: u64,
    /// The midpoint count shared by every member, when `constant` (and the
    /// class is nonempty).
    pub coefficient: Option<u64>,
    /// Whether every member saw the same midpoint count.
    pub constant: bool,
    /// The predicted count for this class.
    pub expected: u64,
}

/// Outcome of [`midpoint_analysis`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MidpointReport {
    /// Smaller distance of the pair `{d, d+2}`.
    pub d: u32,
    /// Word length.
    pub n: u32,
    /// Number of midpoints: words at distance `d/2 + 1` from both
    /// reference words. Always `C(d+2, d/2+1)`.
    pub midpoint_count: u64,
    /// Per-class statistics, in declaration order of [`MidpointClass`].
    pub classes: [ClassCount; 6],
}

impl MidpointReport {
    /// Whether every class came out constant at its predicted coefficient.
    pub fn all_match(&self) -> bool {
        self.classes
            .iter()
            .all(|c| c.constant && (c.members == 0 || c.coefficient == Some(c.expected)))
    }
}

/// Counts, for every word `z` of each weight class, the midpoints adjacent
/// to it: words `y` with `d(x0,y) = d(x1,y) = d(y,z) = d/2 + 1`.
///
/// The predicted constants are `1` for heavy-far, `d/2 + 2` for heavy-near
/// and light-far, `(d/2 + 1)²` for light-near, and all `C(d+2, d/2+1)`
/// midpoints for the two reference words themselves. The enumeration is
/// exhaustive, so a `true` [`MidpointReport::all_match`] is a finite proof
/// for the given `(d, n)`.
pub fn midpoint_analysis(
    d: u32,
    n: u32,
    limits: &SearchLimits,
) -> Result<MidpointReport, SearchError> {
    if !d.is_multiple_of(2) || d == 0 {
        return Err(SearchError::NotPackingShaped { d1: d, d2: d + 2 });
    }
    let min = 3 * d / 2 + 3;
    if n < min {
        return Err(SearchError::LengthTooShort { n, min });
    }
    // Class enumeration walks all words of weights d and d+2.
    let words = binomial(u64::from(n), u64::from(d)) + binomial(u64::from(n), u64::from(d + 2));
    if words > limits.max_vertices as u128 {
        return Err(SearchError::TooManyVertices {
            vertices: words,
            limit: limits.max_vertices,
        });
    }
    let params = TwoDistanceParams::new(n, d, d + 2).expect("n >= 3d/2+3 admits both distances");

    let half = d / 2;
    let x0 = Codeword::zero(n);
    let x1 = Codeword::from_support(n, &(0..d + 2).collect::<Vec<_>>());

    // Midpoints: weight d/2+1 at distance d/2+1 from x1 means the support
    // sits inside x1's; enumerate within the first d+2 coordinates.
    let mut midpoints: Vec<Codeword> = Vec::new();
    for_each_combination(d + 2, half + 1, |support| {
        midpoints.push(Codeword::from_support(n, support));
    });
    debug_assert_eq!(
        midpoints.len() as u128,
        binomial(u64::from(d) + 2, u64::from(half) + 1)
    );
    for y in &midpoints {
        debug_assert_eq!(y.distance(&x0), half + 1);
        debug_assert_eq!(y.distance(&x1), half + 1);
    }

    let sphere_count = |z: &Codeword| -> u64 {
        midpoints
            .iter()
            .filter(|y| y.distance(z) == half + 1)
            .count() as u64
    };

    let expected = |class: MidpointClass| -> u64 {
        match class {
            MidpointClass::HeavyFar => 1,
            MidpointClass::HeavyNear | MidpointClass::LightFar => u64::from(half) + 2,
            MidpointClass::LightNear => (u64::from(half) + 1) * (u64::from(half) + 1),
            MidpointClass::Origin | MidpointClass::Reference => midpoints.len() as u64,
        }
    };

    struct Tally {
        class: MidpointClass,
        members: u64,
        first: Option<u64>,
        constant: bool,
    }
    impl Tally {
        fn add(&mut self, count: u64) {
            self.members += 1;
            match self.first {
                None => self.first = Some(count),
                Some(c) if c != count => self.constant = false,
                Some(_) => {}
            }
        }
    }
    let mut tallies = [
        MidpointClass::HeavyFar,
        MidpointClass::HeavyNear,
        MidpointClass::LightFar,
        MidpointClass::LightNear,
        MidpointClass::Origin,
        MidpointClass::Reference,
    ]
    .map(|class| Tally {
        class,
        members: 0,
        first: None,
        constant: true,
    });

    for (weight, heavy) in [(d + 2, true), (d, false)] {
        for_each_combination(n, weight, |support| {
            let z = Codeword::from_support(n, support);
            let class = match (heavy, z.distance(&x1)) {
                (true, dist) if dist == d + 2 => MidpointClass::HeavyFar,
                (true, dist) if dist == d => MidpointClass::HeavyNear,
                (false, dist) if dist == d + 2 => MidpointClass::LightFar,
                (false, dist) if dist == d => MidpointClass::LightNear,
                _ => return,
            };
            let slot = tallies.iter_mut().find(|t| t.class == class).unwrap();
            slot.add(sphere_count(&z));
        });
    }
    // x1 itself has weight d+2 and distance 0 to itself, so the loop above
    // skipped it; x0 is not enumerated at all. Count them directly.
    for (word, class) in [
        (&x0, MidpointClass::Origin),
        (&x1, MidpointClass::Reference),
    ] {
        let slot = tallies.iter_mut().find(|t| t.class == class).unwrap();
        slot.add(sphere_count(word));
    }

    let _ = params;
    let classes = tallies.map(|t| ClassCount {
        class: t.class,
        members: t.members,
        coefficient: if t.constant { t.first } else { None },
        constant: t.constant,
        expected: expected(t.class),
    });
    Ok(MidpointReport {
        d,
        n,
        midpoint_count: midpoints.len() as u64,
        classes,
    })
}

/// Everything known about optimality at `p`, bundled: the exact search
/// outcome, the packing lower bound with its origin, the quadratic upper
/// bound when it applies, and whether the optimal certificate is a
/// translate of a constant-weight code.
#[derive(Clone, Debug)]
pub struct OptimalityReport {
    /// The parameters examined.
    pub params: TwoDistanceParams,
    /// Exact search outcome (with both distances demanded of the
    /// certificate when possible).
    pub search: SearchResult,
    /// Packing lower bound on the optimal size.
    pub packing_lower: u64,
    /// Where the lower bound came from.
    pub packing_lower_source: crate::bounds::LowerBoundSource,
    /// `1 + C(n,2)` when `n >= 6`.
    pub barg: Option<u64>,
    /// Whether some translate of the certificate is constant-weight.
    pub constant_weight_translate: bool,
}

/// Runs the whole optimality pipeline at `p` (which must have the
/// `{d, d+2}` shape): exact search demanding both distances, the packing
/// and quadratic bounds, and the constant-weight-translate check on the
/// certificate.
pub fn optimality_report<B: BudgetCheck>(
    p: &TwoDistanceParams,
    limits: &SearchLimits,
    budget: &mut B,
) -> Result<OptimalityReport, SearchError> {
    if !p.is_packing_shaped() {
        return Err(SearchError::NotPackingShaped {
            d1: p.d1(),
            d2: p.d2(),
        });
    }
    let search = exact_a2(p, true, limits, budget)?;
    let sandwich = crate::bounds::sandwich(p);
    let constant_weight_translate = search
        .certificate
        .constant_weight_translator(p.n())
        .expect("certificate length equals n")
        .is_some();
    Ok(OptimalityReport {
        params: *p,
        search,
        packing_lower: sandwich.lower,
        packing_lower_source: sandwich.lower_source,
        barg: crate::bounds::barg_upper(p.n()).ok(),
        constant_weight_translate,
    })
}
